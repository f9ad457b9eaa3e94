use super::space::{HomSpace, DEFAULT_GUARD};
use super::valset::{cylindrify, exists, ValSet};
use crate::algebra::Representation;
use crate::bitset::BitSet;
use crate::error::{guard, Error, Result, Var};
use crate::formula::Formula;
use crate::free::{FreeWord, ModuleTerm};

/// For each summand `x_i u_i` of `w`, the map `a ↦ a∘u_i^β` as a table over V.
fn summand_tables(w: &ModuleTerm, rep: &Representation, beta: &[usize]) -> Result<Vec<(usize, Vec<usize>)>> {
    let m = rep.module();
    w.summands()
        .map(|(x, u)| {
            let mut table = vec![m.zero(); m.size()];
            for (f, k) in u.terms() {
                let g = f.eval(beta, rep.group())?;
                for (a, t) in table.iter_mut().enumerate() {
                    *t = m.add(*t, m.scale(k, rep.act(a, g)));
                }
            }
            Ok((x as usize - 1, table))
        })
        .collect()
}

/// Bits of `{α ∈ V^n : w^(α, β) = 0}` for a fixed β.
fn action_fiber(w: &ModuleTerm, rep: &Representation, beta: &[usize], n: u32) -> Result<BitSet> {
    let m = rep.module();
    let tables = summand_tables(w, rep, beta)?;
    let len = m.size().pow(n);
    let mut alpha = vec![0usize; n as usize];
    let mut out = BitSet::new(len);
    for i in 0..len {
        let value = tables.iter().fold(m.zero(), |acc, (x, t)| m.add(acc, t[alpha[*x]]));
        if value == m.zero() {
            out.insert(i);
        }
        for c in alpha.iter_mut() {
            *c += 1;
            if *c < m.size() {
                break;
            }
            *c = 0;
        }
    }
    Ok(out)
}

fn check_ring(w: &ModuleTerm, rep: &Representation) -> Result<()> {
    if w.modulus() != rep.modulus() {
        return Err(Error::RingMismatch {
            term: w.modulus(),
            rep: rep.modulus(),
        });
    }
    Ok(())
}

fn check_dims(what: &str, needed: (u32, u32), n: u32, m: u32) -> Result<()> {
    if needed.0 > n || needed.1 > m {
        return Err(Error::DimensionMismatch(format!(
            "{what} needs n >= {}, m >= {} but the space has n={n}, m={m}",
            needed.0, needed.1
        )));
    }
    Ok(())
}

impl HomSpace<'_> {
    /// `{(α, β) : w^(α, β) = 0}`.
    pub fn atom_val_action(&self, w: &ModuleTerm) -> Result<ValSet> {
        let needed = (
            w.x_support().last().copied().unwrap_or(0),
            w.y_support().last().copied().unwrap_or(0),
        );
        check_dims("module term", needed, self.n(), self.m())?;
        check_ring(w, self.rep())?;
        let shape = self.shape();
        let fiber = shape.fiber();
        let mut bits = BitSet::new(shape.size());
        for b in 0..shape.size() / fiber {
            let beta = self.beta(b);
            for i in action_fiber(w, self.rep(), &beta, self.n())?.ones() {
                bits.insert(b * fiber + i);
            }
        }
        ValSet::from_bits(shape, bits)
    }

    /// `{(α, β) : f^β = 1}`.
    pub fn atom_val_group(&self, f: &FreeWord) -> Result<ValSet> {
        let needed = (0, f.support().last().copied().unwrap_or(0));
        check_dims("group word", needed, self.n(), self.m())?;
        let shape = self.shape();
        let fiber = shape.fiber();
        let group = self.rep().group();
        let mut bits = BitSet::new(shape.size());
        for b in 0..shape.size() / fiber {
            if f.eval(&self.beta(b), group)? == group.identity() {
                for i in b * fiber..(b + 1) * fiber {
                    bits.insert(i);
                }
            }
        }
        ValSet::from_bits(shape, bits)
    }

    /// `Val(u)` by structural recursion.
    pub fn val(&self, u: &Formula) -> Result<ValSet> {
        check_dims("formula", u.dims(), self.n(), self.m())?;
        self.val_unchecked(u)
    }

    fn val_unchecked(&self, u: &Formula) -> Result<ValSet> {
        match u {
            Formula::ActionEq(w) => self.atom_val_action(w),
            Formula::GroupEq(f) => self.atom_val_group(f),
            Formula::Or(a, b) => self.val_unchecked(a)?.union(&self.val_unchecked(b)?),
            Formula::And(a, b) => self.val_unchecked(a)?.intersection(&self.val_unchecked(b)?),
            Formula::Not(a) => Ok(self.val_unchecked(a)?.complement()),
            Formula::ExistsX(x, a) => exists(&self.val_unchecked(a)?, Var::X(*x)),
            Formula::ExistsY(y, a) => exists(&self.val_unchecked(a)?, Var::Y(*y)),
        }
    }
}

/// `Val(u)` over `V^n × G^m` with the default guard.
pub fn val(u: &Formula, rep: &Representation, n: u32, m: u32) -> Result<ValSet> {
    HomSpace::new(rep, n, m)?.val(u)
}

/// `Val(u)` is the whole hom-space, with dimensions taken from the formula.
pub fn holds(u: &Formula, rep: &Representation) -> Result<bool> {
    holds_with_guard(u, rep, DEFAULT_GUARD)
}

pub fn holds_with_guard(u: &Formula, rep: &Representation, limit: usize) -> Result<bool> {
    let (n, m) = u.dims();
    Ok(HomSpace::with_guard(rep, n, m, limit)?.val(u)?.is_full())
}

/// Tarskian satisfaction at one point, by direct recursion with witnesses
/// enumerated per quantifier. Independent of the bitset machinery.
pub fn satisfies_at(u: &Formula, rep: &Representation, alpha: &[usize], beta: &[usize]) -> Result<bool> {
    Ok(match u {
        Formula::ActionEq(w) => {
            check_ring(w, rep)?;
            w.eval(alpha, beta, rep)? == rep.module().zero()
        }
        Formula::GroupEq(f) => f.eval(beta, rep.group())? == rep.group().identity(),
        Formula::Or(a, b) => satisfies_at(a, rep, alpha, beta)? || satisfies_at(b, rep, alpha, beta)?,
        Formula::And(a, b) => satisfies_at(a, rep, alpha, beta)? && satisfies_at(b, rep, alpha, beta)?,
        Formula::Not(a) => !satisfies_at(a, rep, alpha, beta)?,
        Formula::ExistsX(x, a) => {
            let mut alpha = alpha.to_vec();
            let slot = *x as usize - 1;
            if alpha.len() <= slot {
                alpha.resize(slot + 1, 0);
            }
            for value in rep.module().elements() {
                alpha[slot] = value;
                if satisfies_at(a, rep, &alpha, beta)? {
                    return Ok(true);
                }
            }
            false
        }
        Formula::ExistsY(y, a) => {
            let mut beta = beta.to_vec();
            let slot = *y as usize - 1;
            if beta.len() <= slot {
                beta.resize(slot + 1, rep.group().identity());
            }
            for value in rep.group().elements() {
                beta[slot] = value;
                if satisfies_at(a, rep, alpha, &beta)? {
                    return Ok(true);
                }
            }
            false
        }
    })
}

/// The one-sorted value of `u⁰`: y's are constants fixed by `beta`, only `∃x`
/// acts. A subset of `V^n` indexed with `x1` fastest.
pub fn frozen_val(u: &Formula, rep: &Representation, beta: &[usize], n: u32) -> Result<BitSet> {
    if !u.is_action_type() {
        return Err(Error::NotActionType);
    }
    if let Some(&y) = u.y_support().iter().find(|&&y| y as usize > beta.len()) {
        return Err(Error::UnboundVariable(Var::Y(y)));
    }
    if let Some(&g) = beta.iter().find(|&&g| g >= rep.group().order()) {
        return Err(Error::DimensionMismatch(format!("{g} is not an element of G")));
    }
    check_dims("formula", (u.dims().0, 0), n, 0)?;
    let v = rep.module().size();
    guard(
        "frozen space size |V|^n",
        usize::try_from((v as u128).saturating_pow(n)).unwrap_or(usize::MAX),
        DEFAULT_GUARD,
    )?;
    frozen(u, rep, beta, n)
}

fn frozen(u: &Formula, rep: &Representation, beta: &[usize], n: u32) -> Result<BitSet> {
    let v = rep.module().size();
    Ok(match u {
        Formula::ActionEq(w) => {
            check_ring(w, rep)?;
            action_fiber(w, rep, beta, n)?
        }
        Formula::Or(a, b) => {
            let mut s = frozen(a, rep, beta, n)?;
            s.union_with(&frozen(b, rep, beta, n)?);
            s
        }
        Formula::And(a, b) => {
            let mut s = frozen(a, rep, beta, n)?;
            s.intersect_with(&frozen(b, rep, beta, n)?);
            s
        }
        Formula::Not(a) => frozen(a, rep, beta, n)?.complement(),
        Formula::ExistsX(x, a) => cylindrify(&frozen(a, rep, beta, n)?, v.pow(x - 1), v),
        Formula::GroupEq(_) | Formula::ExistsY(..) => return Err(Error::NotActionType),
    })
}
