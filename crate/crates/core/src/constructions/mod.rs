//! Graph constructions: products and factorization, Cayley and coset graphs,
//! thickened covers, named families and the registry.

mod cayley;
mod cover;
pub mod families;
mod product;
mod registry;
mod spec;

pub use cayley::{cayley, cayley_words, cayley_words_symmetric, circulant, double_coset};
pub use cover::{edge_orbit, thickened_cover, ThickenedCover};
pub use families::*;
pub use product::{
    are_relatively_prime, are_relatively_prime_with, cartesian, cartesian_pair, factor_prime, is_prime,
    Factorization,
};
pub use registry::{describe, named, registry_entry, registry_ids, RegistryEntry, TableRow, REGISTRY, TABLE1};
pub use spec::build_family;
