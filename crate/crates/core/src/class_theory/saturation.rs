//! Saturation, right-heredity and the support lemma: the three mechanisms
//! by which a class defined by action-type formulas is closed under passing
//! to the faithful quotient and to subgroups.
//!
//! Right-locality itself is vacuous for finite groups, since every finite
//! group is finitely generated; the suite exercises the support lemma that
//! carries it instead.

use std::collections::BTreeSet;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::catalog::{Catalog, FormulaSet};
use super::report::{Record, Report};
use super::{derive_seed, Guards};
use crate::algebra::Representation;
use crate::error::{Error, Result};
use crate::formula::{random_formula, Formula, GeneratorConfig};
use crate::semantics::{check_support_invariance, holds_with_guard, HomPoint, HomSpace};

/// Deliberate defects for checking that the suite can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Send every `β(y)` to the identity of `Ḡ` instead of through `β0`.
    SkipBeta0,
}

impl FromStr for Fault {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "skip-beta0" => Ok(Fault::SkipBeta0),
            other => Err(format!("unknown fault `{other}` (known: skip-beta0)")),
        }
    }
}

/// `μ0 = (α, β) ∈ Val_(V,G)(u) ⟺ μ = (α, β β0) ∈ Val_(V,Ḡ)(u)` for every
/// point of the `(V, G)` hom-space. Returns the index of a violating `μ0`.
pub fn check_saturation_pointwise(u: &Formula, rep: &Representation, guards: &Guards, fault: Option<Fault>) -> Result<Option<usize>> {
    let (n, m) = u.dims();
    let (faithful, beta0) = rep.faithful_quotient();
    let full = HomSpace::with_guard(rep, n, m, guards.points)?;
    let bar = HomSpace::with_guard(&faithful, n, m, guards.points)?;
    let v_full = full.val(u)?;
    let v_bar = bar.val(u)?;
    let identity = faithful.group().identity();
    for i in 0..full.size() {
        let p = full.point(i);
        let mu = HomPoint {
            g: p
                .g
                .iter()
                .map(|&g| match fault {
                    None => beta0[g],
                    Some(Fault::SkipBeta0) => identity,
                })
                .collect(),
            a: p.a,
        };
        if v_full.contains(i) != v_bar.contains(bar.index(&mu)) {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// For every subgroup `H ≤ G`: `Val_(V,H)(u)` equals `Val_(V,G)(u)` pulled
/// back along the embedding of the `(V,H)` hom-space. Returns the subgroup
/// and the `(V,H)` point index of a violation.
pub fn check_hereditary_equation(u: &Formula, rep: &Representation, guards: &Guards) -> Result<Option<(Vec<usize>, usize)>> {
    if !u.is_action_type() {
        return Err(Error::NotActionType);
    }
    hereditary_equation(u, rep, guards)
}

fn hereditary_equation(u: &Formula, rep: &Representation, guards: &Guards) -> Result<Option<(Vec<usize>, usize)>> {
    let (n, m) = u.dims();
    let full = HomSpace::with_guard(rep, n, m, guards.points)?;
    let v_full = full.val(u)?;
    for h in rep.group().subgroups(guards.subgroup_order)? {
        let (sub, embedding) = rep.restrict(&h)?;
        let space = HomSpace::with_guard(&sub, n, m, guards.points)?;
        let v_sub = space.val(u)?;
        for j in 0..space.size() {
            let mut p = space.point(j);
            p.g.iter_mut().for_each(|g| *g = embedding[*g]);
            if v_sub.contains(j) != v_full.contains(full.index(&p)) {
                return Ok(Some((h, j)));
            }
        }
    }
    Ok(None)
}

fn holds_all(t: &FormulaSet, rep: &Representation, guards: &Guards) -> Result<Option<usize>> {
    for i in 0..t.len() {
        if !holds_with_guard(&t.formula(i, rep.modulus()), rep, guards.points)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationVerdict {
    pub rep: String,
    pub holds_in_g: bool,
    pub holds_in_faithful: bool,
    /// First formula whose verdict differs between the two sides, with a
    /// point outside its value on the side where it fails.
    pub counterexample: Option<(usize, HomPoint)>,
}

impl SaturationVerdict {
    pub fn agrees(&self) -> bool {
        self.holds_in_g == self.holds_in_faithful
    }
}

/// Per catalog entry: does `T` hold in `(V, G)` exactly when it holds in
/// `(V, Ḡ)`? Requires `T` to be action-type.
pub fn check_saturated(t: &FormulaSet, catalog: &Catalog, guards: &Guards) -> Result<Vec<SaturationVerdict>> {
    if !t.is_action_type() {
        return Err(Error::NotActionType);
    }
    check_saturated_unguarded(t, catalog, guards)
}

/// [`check_saturated`] without the action-type precondition, for showing
/// that the precondition is needed.
pub fn check_saturated_unguarded(t: &FormulaSet, catalog: &Catalog, guards: &Guards) -> Result<Vec<SaturationVerdict>> {
    let mut out = Vec::new();
    for (name, rep) in catalog.iter() {
        let (faithful, _) = rep.faithful_quotient();
        let mut counterexample = None;
        for i in 0..t.len() {
            let u = t.formula(i, rep.modulus());
            let in_g = holds_with_guard(&u, rep, guards.points)?;
            let in_bar = holds_with_guard(&u, &faithful, guards.points)?;
            if in_g != in_bar {
                let side = if in_g { &faithful } else { rep };
                let (n, m) = u.dims();
                let space = HomSpace::with_guard(side, n, m, guards.points)?;
                let v = space.val(&u)?;
                let miss = (0..space.size()).find(|&p| !v.contains(p)).expect("formula fails somewhere");
                counterexample = Some((i, space.point(miss)));
                break;
            }
        }
        out.push(SaturationVerdict {
            rep: name.to_string(),
            holds_in_g: holds_all(t, rep, guards)?.is_none(),
            holds_in_faithful: holds_all(t, &faithful, guards)?.is_none(),
            counterexample,
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeredityVerdict {
    pub rep: String,
    pub holds: bool,
    /// `(subgroup, formula)` pairs where a restriction of a member fails.
    pub failures: Vec<(Vec<usize>, usize)>,
}

/// Every member of `T*` in the catalog stays a member after restricting the
/// action to any subgroup.
pub fn check_right_hereditary(t: &FormulaSet, catalog: &Catalog, guards: &Guards) -> Result<Vec<HeredityVerdict>> {
    if !t.is_action_type() {
        return Err(Error::NotActionType);
    }
    let mut out = Vec::new();
    for (name, rep) in catalog.iter() {
        let holds = holds_all(t, rep, guards)?.is_none();
        let mut failures = Vec::new();
        if holds {
            for h in rep.group().subgroups(guards.subgroup_order)? {
                let (sub, _) = rep.restrict(&h)?;
                if let Some(i) = holds_all(t, &sub, guards)? {
                    failures.push((h, i));
                }
            }
        }
        out.push(HeredityVerdict {
            rep: name.to_string(),
            holds,
            failures,
        });
    }
    Ok(out)
}

/// Random action-type formulas for the saturation suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub formulas_per_rep: usize,
    pub max_depth: u32,
    pub max_summands: u32,
    pub max_word_len: u32,
    pub x_vars: u32,
    pub y_vars: u32,
    pub guards: Guards,
    pub fault: Option<Fault>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        let g = GeneratorConfig::action_type(1);
        SuiteConfig {
            seed: 0,
            formulas_per_rep: 200,
            max_depth: g.max_depth,
            max_summands: g.max_summands,
            max_word_len: g.max_word_len,
            x_vars: g.x_vars,
            y_vars: g.y_vars,
            guards: Guards::default(),
            fault: None,
        }
    }
}

impl SuiteConfig {
    pub fn generator(&self, modulus: u32, action_type: bool) -> GeneratorConfig {
        GeneratorConfig {
            modulus,
            max_depth: self.max_depth,
            max_summands: self.max_summands,
            max_word_len: self.max_word_len,
            x_vars: self.x_vars,
            y_vars: self.y_vars,
            action_type,
        }
    }

    /// Formula `index` of the sample for one representation, and the seed
    /// that regenerates it.
    pub fn formula(&self, label: &str, rep: &Representation, index: usize, action_type: bool) -> (Formula, u64) {
        let seed = derive_seed(self.seed, label, index as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (random_formula(&mut rng, &self.generator(rep.modulus(), action_type)), seed)
    }
}

fn outcome(check: &'static str, rep: &str, i: usize, seed: u64, witness: Option<usize>, detail: impl FnOnce() -> String) -> Record {
    match witness {
        None => Record::pass(check, rep),
        Some(w) => Record::fail(check, rep, Some(w), detail()),
    }
    .formula(i)
    .seed(seed)
}

/// Random action-type formulas per catalog entry, each checked for pointwise
/// saturation, the hereditary Val equation, and support invariance with
/// `Y0 = Δ_Y(u)` inside a space with one spare y-coordinate.
pub fn theorem21_suite(catalog: &Catalog, cfg: &SuiteConfig) -> Result<Report> {
    let mut report = Report::new();
    for (name, rep) in catalog.iter() {
        let label = format!("theorem21/{name}");
        for i in 0..cfg.formulas_per_rep {
            let (u, seed) = cfg.formula(&label, rep, i, true);
            let w = check_saturation_pointwise(&u, rep, &cfg.guards, cfg.fault)?;
            report.push(outcome("saturation", name, i, seed, w, || format!("u = {u}")));

            let w = hereditary_equation(&u, rep, &cfg.guards)?;
            report.push(outcome("heredity", name, i, seed, w.as_ref().map(|x| x.1), || {
                format!("u = {u}, H = {:?}", w.as_ref().map(|x| &x.0))
            }));

            let y0: BTreeSet<u32> = u.y_support();
            let m = u.dims().1 + 1;
            let w = check_support_invariance(&u, rep, &y0, m)?;
            let space = HomSpace::with_guard(rep, u.dims().0, m, cfg.guards.points)?;
            report.push(outcome("support", name, i, seed, w.map(|p| space.index(&p)), || {
                format!("u = {u}, Y0 = {y0:?}")
            }));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FiniteGroup, FiniteModule, FiniteRing};

    fn r2() -> Representation {
        let z3 = FiniteModule::cyclic(FiniteRing::new(3).unwrap());
        Representation::new(z3, FiniteGroup::cyclic(2), vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap()
    }

    fn trivial_c2() -> Representation {
        Representation::trivial(FiniteModule::cyclic(FiniteRing::new(2).unwrap()), FiniteGroup::cyclic(2))
    }

    fn one(name: &str, rep: Representation) -> Catalog {
        Catalog::from_entries([(name.to_string(), rep)]).unwrap()
    }

    #[test]
    fn saturation_on_trivial_action() {
        let t = FormulaSet::from_texts(["x1*(y1 - 1) = 0"]).unwrap();
        let v = check_saturated(&t, &one("R1", trivial_c2()), &Guards::default()).unwrap();
        assert!(v[0].holds_in_g && v[0].holds_in_faithful && v[0].counterexample.is_none());
    }

    #[test]
    fn group_equality_breaks_saturation() {
        let t = FormulaSet::from_texts(["y1 = 1"]).unwrap();
        let c = one("R1", trivial_c2());
        assert_eq!(check_saturated(&t, &c, &Guards::default()), Err(Error::NotActionType));
        let v = check_saturated_unguarded(&t, &c, &Guards::default()).unwrap();
        assert!(!v[0].holds_in_g && v[0].holds_in_faithful);
        let (formula, point) = v[0].counterexample.clone().unwrap();
        assert_eq!(formula, 0);
        assert_eq!(point, HomPoint { a: vec![], g: vec![1] });
    }

    #[test]
    fn hereditary_examples() {
        let u = crate::formula::parse("x1*(y1 - 1) = 0", 3).unwrap();
        assert_eq!(check_hereditary_equation(&u, &r2(), &Guards::default()).unwrap(), None);
        let t = FormulaSet::from_texts(["x1*(y1 - 1) = 0"]).unwrap();
        let v = check_right_hereditary(&t, &one("R2", r2()), &Guards::default()).unwrap();
        assert!(!v[0].holds && v[0].failures.is_empty());
        let (restricted, _) = r2().restrict(&[0]).unwrap();
        assert!(holds_with_guard(&t.formula(0, 3), &restricted, 1 << 20).unwrap());
        let v = check_right_hereditary(&FormulaSet::new(), &one("R2", r2()), &Guards::default()).unwrap();
        assert!(v[0].holds && v[0].failures.is_empty());
    }

    #[test]
    fn suite_passes_and_fault_is_caught() {
        let c = Catalog::from_entries([("R1".to_string(), trivial_c2()), ("R2".to_string(), r2())]).unwrap();
        let cfg = SuiteConfig {
            formulas_per_rep: 30,
            ..SuiteConfig::default()
        };
        let report = theorem21_suite(&c, &cfg).unwrap();
        assert_eq!(report.records.len(), 180);
        assert!(report.all_passed(), "{report}");
        let faulty = SuiteConfig {
            fault: Some(Fault::SkipBeta0),
            ..cfg
        };
        assert!(!theorem21_suite(&c, &faulty).unwrap().all_passed());
    }
}
