//! Seeded random formulas for fuzzing the semantics.

use rand::Rng;

use super::ast::Formula;
use crate::free::{reduce, FreeWord, GroupAlgebraElement, Letter, ModuleTerm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub modulus: u32,
    pub max_depth: u32,
    /// Summands per module term.
    pub max_summands: u32,
    /// Letters per free-group word.
    pub max_word_len: u32,
    /// Variables are drawn from `x1..=x_vars` and `y1..=y_vars`.
    pub x_vars: u32,
    pub y_vars: u32,
    /// Omit group equalities and `∃y`.
    pub action_type: bool,
}

impl GeneratorConfig {
    pub fn action_type(modulus: u32) -> Self {
        GeneratorConfig {
            modulus,
            max_depth: 4,
            max_summands: 3,
            max_word_len: 4,
            x_vars: 2,
            y_vars: 2,
            action_type: true,
        }
    }

    pub fn full(modulus: u32) -> Self {
        GeneratorConfig {
            action_type: false,
            ..GeneratorConfig::action_type(modulus)
        }
    }
}

pub fn random_word<R: Rng + ?Sized>(rng: &mut R, cfg: &GeneratorConfig) -> FreeWord {
    if cfg.y_vars == 0 {
        return FreeWord::one();
    }
    let len = rng.gen_range(0..=cfg.max_word_len);
    reduce((0..len).map(|_| Letter::new(rng.gen_range(1..=cfg.y_vars), rng.gen())))
}

pub fn random_algebra_element<R: Rng + ?Sized>(rng: &mut R, cfg: &GeneratorConfig) -> GroupAlgebraElement {
    let terms: Vec<(FreeWord, i64)> = (0..rng.gen_range(1..=2))
        .map(|_| {
            let c = rng.gen_range(0..cfg.modulus) as i64;
            (random_word(rng, cfg), c)
        })
        .collect();
    GroupAlgebraElement::from_terms(cfg.modulus, terms)
}

pub fn random_module_term<R: Rng + ?Sized>(rng: &mut R, cfg: &GeneratorConfig) -> ModuleTerm {
    let mut w = ModuleTerm::zero(cfg.modulus);
    if cfg.x_vars == 0 {
        return w;
    }
    for _ in 0..rng.gen_range(0..=cfg.max_summands) {
        let x = rng.gen_range(1..=cfg.x_vars);
        w = w.add(&ModuleTerm::summand(x, random_algebra_element(rng, cfg)));
    }
    w
}

/// A random formula of depth at most `cfg.max_depth`.
pub fn random_formula<R: Rng + ?Sized>(rng: &mut R, cfg: &GeneratorConfig) -> Formula {
    gen(rng, cfg, cfg.max_depth)
}

fn gen<R: Rng + ?Sized>(rng: &mut R, cfg: &GeneratorConfig, depth: u32) -> Formula {
    if depth == 0 || rng.gen_bool(0.25) {
        return if !cfg.action_type && rng.gen_bool(0.3) {
            Formula::GroupEq(random_word(rng, cfg))
        } else {
            Formula::ActionEq(random_module_term(rng, cfg))
        };
    }
    let choices = if cfg.action_type || cfg.y_vars == 0 { 4 } else { 5 };
    match rng.gen_range(0..choices) {
        0 => Formula::or(gen(rng, cfg, depth - 1), gen(rng, cfg, depth - 1)),
        1 => Formula::and(gen(rng, cfg, depth - 1), gen(rng, cfg, depth - 1)),
        2 => Formula::not(gen(rng, cfg, depth - 1)),
        3 if cfg.x_vars > 0 => Formula::exists_x(rng.gen_range(1..=cfg.x_vars), gen(rng, cfg, depth - 1)),
        3 => Formula::not(gen(rng, cfg, depth - 1)),
        _ => Formula::exists_y(rng.gen_range(1..=cfg.y_vars), gen(rng, cfg, depth - 1)),
    }
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::formula::parse;

    #[test]
    fn respects_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let cfg = GeneratorConfig::action_type(4);
        for _ in 0..500 {
            let f = random_formula(&mut rng, &cfg);
            assert!(f.is_action_type());
            assert!(f.depth() <= 4);
            let (n, m) = f.dims();
            assert!(n <= 2 && m <= 2);
        }
    }

    #[test]
    fn printed_random_formulas_reparse() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let cfg = GeneratorConfig {
            max_depth: 5,
            x_vars: 3,
            y_vars: 3,
            ..GeneratorConfig::full(6)
        };
        for _ in 0..1000 {
            let f = random_formula(&mut rng, &cfg);
            assert_eq!(parse(&f.to_string(), 6).unwrap(), f);
        }
    }
}
