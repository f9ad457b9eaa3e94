//! Randomized law checks and the combined verification run.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::catalog::{Catalog, FormulaSet};
use super::galois::check_galois_laws;
use super::report::{Record, Report};
use super::saturation::{theorem21_suite, SuiteConfig};
use super::derive_seed;
use crate::bitset::BitSet;
use crate::error::{Result, Var};
use crate::formula::random_formula;
use crate::semantics::{check_val_homomorphism, frozen_val, quantifier_axiom_failures, HomSpace, ValSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Seed, guards, formula shape and fault injection for every part.
    pub suite: SuiteConfig,
    pub quantifier_pairs: usize,
    pub quantifier_max_points: usize,
    pub val_formulas_per_rep: usize,
    pub val_max_depth: u32,
    pub frozen_triples: usize,
    pub galois_samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            suite: SuiteConfig::default(),
            quantifier_pairs: 1000,
            quantifier_max_points: 4096,
            val_formulas_per_rep: 500,
            val_max_depth: 4,
            frozen_triples: 500,
            galois_samples: 50,
        }
    }
}

/// The three quantifier axioms for `∃x` and `∃y` on random pairs of subsets
/// (definable or not) of random hom-spaces with at most `max_points` points
/// and at least one coordinate of each sort.
pub fn quantifier_fuzz(catalog: &Catalog, seed: u64, pairs: usize, max_points: usize) -> Result<Report> {
    let mut report = Report::new();
    if catalog.is_empty() {
        return Ok(report);
    }
    for k in 0..pairs {
        let pair_seed = derive_seed(seed, "quantifier", k as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(pair_seed);
        let j = rng.gen_range(0..catalog.len());
        let (name, rep) = (catalog.name(j), catalog.rep(j));
        let dims: Vec<(u32, u32)> = (1..=3)
            .flat_map(|n| (1..=3).map(move |m| (n, m)))
            .filter(|&(n, m)| HomSpace::with_guard(rep, n, m, max_points).is_ok())
            .collect();
        let Some(&(n, m)) = dims.choose(&mut rng) else {
            continue;
        };
        let shape = HomSpace::new(rep, n, m)?.shape();
        let random_set = |rng: &mut ChaCha8Rng| {
            let density: f64 = rng.gen();
            ValSet::from_bits(shape, BitSet::from_fn(shape.size(), |_| rng.gen_bool(density)))
        };
        let a = random_set(&mut rng)?;
        let b = random_set(&mut rng)?;
        let x = Var::X(rng.gen_range(1..=n));
        let y = Var::Y(rng.gen_range(1..=m));
        let mut failed = Vec::new();
        for var in [x, y] {
            for axiom in quantifier_axiom_failures(&a, &b, var)? {
                failed.push(format!("axiom {axiom} for exists {var}"));
            }
        }
        let r = if failed.is_empty() {
            Record::pass("quantifier-axioms", name)
        } else {
            Record::fail("quantifier-axioms", name, None, format!("{shape}: {}", failed.join(", ")))
        };
        report.push(r.formula(k).seed(pair_seed));
    }
    Ok(report)
}

/// Recursive Val against independently composed set operations, on random
/// formulas of the full language.
pub fn val_homomorphism_fuzz(catalog: &Catalog, cfg: &SuiteConfig, per_rep: usize, max_depth: u32) -> Result<Report> {
    let cfg = SuiteConfig {
        max_depth,
        ..cfg.clone()
    };
    let mut report = Report::new();
    for (name, rep) in catalog.iter() {
        let label = format!("val/{name}");
        for i in 0..per_rep {
            let (u, seed) = cfg.formula(&label, rep, i, false);
            let (n, m) = u.dims();
            let space = HomSpace::with_guard(rep, n, m, cfg.guards.points)?;
            let r = match check_val_homomorphism(&space, &u)? {
                None => Record::pass("val-homomorphism", name),
                Some(bad) => Record::fail("val-homomorphism", name, None, format!("u = {u}, at {bad}")),
            };
            report.push(r.formula(i).seed(seed));
        }
    }
    Ok(report)
}

/// `frozen_val(u, β)` against the β-fiber of `Val(u)` on random
/// (action-type formula, representation, β) triples.
pub fn frozen_fuzz(catalog: &Catalog, cfg: &SuiteConfig, triples: usize) -> Result<Report> {
    let mut report = Report::new();
    if catalog.is_empty() {
        return Ok(report);
    }
    for k in 0..triples {
        let seed = derive_seed(cfg.seed, "frozen", k as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let j = rng.gen_range(0..catalog.len());
        let (name, rep) = (catalog.name(j), catalog.rep(j));
        let u = random_formula(&mut rng, &cfg.generator(rep.modulus(), true));
        let (n, m) = u.dims();
        let space = HomSpace::with_guard(rep, n, m, cfg.guards.points)?;
        let beta: Vec<usize> = (0..m).map(|_| rng.gen_range(0..rep.group().order())).collect();
        let fiber = space.val(&u)?.fiber(space.beta_index(&beta));
        let frozen = frozen_val(&u, rep, &beta, n)?;
        let r = match frozen.first_difference(&fiber) {
            None => Record::pass("frozen-y", name),
            Some(i) => Record::fail("frozen-y", name, Some(i), format!("u = {u}, beta = {beta:?}")),
        };
        report.push(r.formula(k).seed(seed));
    }
    Ok(report)
}

/// Everything: the saturation suite, quantifier axioms, Val as a
/// homomorphism, frozen-Y equivalence and the Galois laws over `pool`.
/// An empty catalog yields an empty report.
pub fn run_verification(catalog: &Catalog, pool: &FormulaSet, cfg: &VerifyConfig) -> Result<Report> {
    let s = &cfg.suite;
    let mut report = theorem21_suite(catalog, s)?;
    report.extend(quantifier_fuzz(catalog, s.seed, cfg.quantifier_pairs, cfg.quantifier_max_points)?);
    report.extend(val_homomorphism_fuzz(catalog, s, cfg.val_formulas_per_rep, cfg.val_max_depth)?);
    report.extend(frozen_fuzz(catalog, s, cfg.frozen_triples)?);
    if !catalog.is_empty() {
        report.extend(check_galois_laws(pool, catalog, s.seed, cfg.galois_samples, &s.guards)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FiniteGroup, FiniteModule, FiniteRing, Representation};

    fn small() -> Catalog {
        let z3 = FiniteModule::cyclic(FiniteRing::new(3).unwrap());
        let r2 = Representation::new(z3, FiniteGroup::cyclic(2), vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        Catalog::from_entries([("R2".to_string(), r2)]).unwrap()
    }

    #[test]
    fn empty_catalog_runs_no_checks() {
        let r = run_verification(&Catalog::new(), &FormulaSet::new(), &VerifyConfig::default()).unwrap();
        assert!(r.records.is_empty());
    }

    #[test]
    fn small_run_passes() {
        let cfg = VerifyConfig {
            suite: SuiteConfig {
                formulas_per_rep: 10,
                ..SuiteConfig::default()
            },
            quantifier_pairs: 20,
            val_formulas_per_rep: 10,
            frozen_triples: 20,
            galois_samples: 5,
            ..VerifyConfig::default()
        };
        let pool = FormulaSet::from_texts(["x1 = 0", "y1 = 1"]).unwrap();
        let r = run_verification(&small(), &pool, &cfg).unwrap();
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.records.len(), 30 + 20 + 10 + 20 + 20);
    }
}
