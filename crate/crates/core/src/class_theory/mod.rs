//! Classes of representations as finite catalogs, formula sets as finite
//! pools, the star maps between them, and executable checks of the closure
//! properties of classes defined by action-type formulas.

mod catalog;
mod closure;
mod galois;
mod report;
mod saturation;
mod verify;

pub use catalog::{Catalog, FormulaEntry, FormulaSet};
pub use closure::{closure_check, ClosureOp, ClosureReport};
pub use galois::{check_galois_laws, star_of_class, star_of_formulas, Star};
pub use report::{Failure, Record, Report};
pub use saturation::{
    check_hereditary_equation, check_right_hereditary, check_saturated, check_saturated_unguarded,
    check_saturation_pointwise, theorem21_suite, Fault, HeredityVerdict, SaturationVerdict, SuiteConfig,
};
pub use verify::{frozen_fuzz, quantifier_fuzz, run_verification, val_homomorphism_fuzz, VerifyConfig};

use crate::algebra::ISO_GUARD;
use crate::semantics::DEFAULT_GUARD;

/// Size limits for the brute-force searches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Hom-space points per evaluation.
    pub points: usize,
    /// Largest subgroup order enumerated.
    pub subgroup_order: usize,
    /// `|V|·|G|` bound for congruence enumeration.
    pub congruence_points: usize,
    /// `|V|` and `|G|` bound for isomorphism search.
    pub iso_side: usize,
    /// `|V|·|G|` bound for products.
    pub product_size: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            points: DEFAULT_GUARD,
            subgroup_order: 12,
            congruence_points: 64,
            iso_side: ISO_GUARD,
            product_size: 1 << 16,
        }
    }
}

/// What a star map does with an entry whose evaluation exceeds a guard.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    /// Abort.
    #[default]
    Strict,
    /// Skip the entry and list it.
    Permissive,
}

/// Seed for item `index` of the stream named `label`, so that every formula
/// or sample can be regenerated on its own.
pub fn derive_seed(seed: u64, label: &str, index: u64) -> u64 {
    // FNV-1a over the label, then two splitmix64 rounds.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    let mix = |mut z: u64| {
        z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    };
    mix(mix(seed ^ h) ^ index)
}
