//! The star maps between formula sets and catalogs, and their Galois laws.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::catalog::{Catalog, FormulaSet};
use super::report::{Record, Report};
use super::{derive_seed, Guards, Mode};
use crate::error::{Error, Result};
use crate::semantics::holds_with_guard;

/// Indices selected by a star map, plus entries skipped in permissive mode.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Star {
    pub members: BTreeSet<usize>,
    pub skipped: Vec<(usize, Error)>,
}

fn holds_at(pool: &FormulaSet, i: usize, catalog: &Catalog, j: usize, guards: &Guards) -> Result<bool> {
    let rep = catalog.rep(j);
    holds_with_guard(&pool.formula(i, rep.modulus()), rep, guards.points)
}

/// `T*`: catalog entries in which every formula of `T` holds. In permissive
/// mode an entry whose evaluation exceeds a guard is skipped and listed.
pub fn star_of_formulas(t: &FormulaSet, catalog: &Catalog, guards: &Guards, mode: Mode) -> Result<Star> {
    star_formulas_by(&(0..t.len()).collect(), &(0..catalog.len()).collect(), mode, |i, j| {
        holds_at(t, i, catalog, j, guards)
    })
}

/// `X*` within the pool: formulas that hold in every listed representation.
pub fn star_of_class(reps: &Catalog, pool: &FormulaSet, guards: &Guards, mode: Mode) -> Result<Star> {
    star_class_by(&(0..reps.len()).collect(), &(0..pool.len()).collect(), mode, |i, j| {
        holds_at(pool, i, reps, j, guards)
    })
}

fn skip_or_fail(e: Error, mode: Mode) -> Result<()> {
    match (mode, &e) {
        (Mode::Permissive, Error::GuardExceeded { .. }) => Ok(()),
        _ => Err(e),
    }
}

fn star_formulas_by(
    formulas: &BTreeSet<usize>,
    reps: &BTreeSet<usize>,
    mode: Mode,
    mut holds: impl FnMut(usize, usize) -> Result<bool>,
) -> Result<Star> {
    let mut star = Star::default();
    'reps: for &j in reps {
        for &i in formulas {
            match holds(i, j) {
                Ok(true) => {}
                Ok(false) => continue 'reps,
                Err(e) => {
                    skip_or_fail(e.clone(), mode)?;
                    star.skipped.push((j, e));
                    continue 'reps;
                }
            }
        }
        star.members.insert(j);
    }
    Ok(star)
}

fn star_class_by(
    reps: &BTreeSet<usize>,
    formulas: &BTreeSet<usize>,
    mode: Mode,
    mut holds: impl FnMut(usize, usize) -> Result<bool>,
) -> Result<Star> {
    let mut star = Star::default();
    'formulas: for &i in formulas {
        for &j in reps {
            match holds(i, j) {
                Ok(true) => {}
                Ok(false) => continue 'formulas,
                Err(e) => {
                    skip_or_fail(e.clone(), mode)?;
                    star.skipped.push((i, e));
                    continue 'formulas;
                }
            }
        }
        star.members.insert(i);
    }
    Ok(star)
}

fn random_subset<R: Rng>(rng: &mut R, of: &BTreeSet<usize>) -> BTreeSet<usize> {
    of.iter().copied().filter(|_| rng.gen_bool(0.5)).collect()
}

/// Antitonicity of both star maps and both unit laws, `T ⊆ T**` and
/// `C ⊆ C**`, on random nested sub-selections `T1 ⊆ T2` of the pool and
/// `C1 ⊆ C2` of the catalog. Star maps run in strict mode.
pub fn check_galois_laws(pool: &FormulaSet, catalog: &Catalog, seed: u64, samples: usize, guards: &Guards) -> Result<Report> {
    let mut cache: BTreeMap<(usize, usize), bool> = BTreeMap::new();
    let mut holds = |i: usize, j: usize| -> Result<bool> {
        if let Some(&h) = cache.get(&(i, j)) {
            return Ok(h);
        }
        let h = holds_at(pool, i, catalog, j, guards)?;
        cache.insert((i, j), h);
        Ok(h)
    };
    let all_formulas: BTreeSet<usize> = (0..pool.len()).collect();
    let all_reps: BTreeSet<usize> = (0..catalog.len()).collect();
    let mut report = Report::new();
    for s in 0..samples {
        let sample_seed = derive_seed(seed, "galois", s as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(sample_seed);
        let t2 = random_subset(&mut rng, &all_formulas);
        let t1 = random_subset(&mut rng, &t2);
        let c2 = random_subset(&mut rng, &all_reps);
        let c1 = random_subset(&mut rng, &c2);
        let strict = Mode::Strict;

        let st1 = star_formulas_by(&t1, &all_reps, strict, &mut holds)?.members;
        let st2 = star_formulas_by(&t2, &all_reps, strict, &mut holds)?.members;
        let sc1 = star_class_by(&c1, &all_formulas, strict, &mut holds)?.members;
        let sc2 = star_class_by(&c2, &all_formulas, strict, &mut holds)?.members;
        let t1_back = star_class_by(&st1, &all_formulas, strict, &mut holds)?.members;
        let c1_back = star_formulas_by(&sc1, &all_reps, strict, &mut holds)?.members;

        let label = format!("sample{s}");
        let mut law = |check: &'static str, ok: bool, detail: String| {
            let r = if ok {
                Record::pass(check, label.clone())
            } else {
                Record::fail(check, label.clone(), None, detail)
            };
            report.push(r.seed(sample_seed));
        };
        law(
            "galois-antitone-formulas",
            st2.is_subset(&st1),
            format!("T1={t1:?} T2={t2:?} T1*={st1:?} T2*={st2:?}"),
        );
        law(
            "galois-antitone-class",
            sc2.is_subset(&sc1),
            format!("C1={c1:?} C2={c2:?} C1*={sc1:?} C2*={sc2:?}"),
        );
        law(
            "galois-unit-formulas",
            t1.is_subset(&t1_back),
            format!("T={t1:?} T**={t1_back:?}"),
        );
        law(
            "galois-unit-class",
            c1.is_subset(&c1_back),
            format!("C={c1:?} C**={c1_back:?}"),
        );
    }
    Ok(report)
}
