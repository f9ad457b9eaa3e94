//! Finite rings, groups, modules, and representations `(V, G)`.

mod congruence;
mod group;
mod iso;
mod module;
mod product;
mod rep;
mod ring;
mod smith;

pub use congruence::{enumerate_congruences, invariant_submodules, quotient, subrepresentation, Congruence};
pub use group::FiniteGroup;
pub use iso::{find_isomorphism, group_isomorphisms, isomorphic, module_isomorphisms, ISO_GUARD};
pub use module::FiniteModule;
pub use product::{direct_product, filtered_product, filtered_product_map, projection, Filter};
pub use rep::{validate_representation, RepHomomorphism, Representation};
pub use ring::FiniteRing;

