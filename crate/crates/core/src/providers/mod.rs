//! Concrete fusion rings and the combinators that build new ones.

pub mod au;
pub mod builtin;
pub mod clebsch_gordan;
pub mod direct_product;
pub mod finite_group;
pub mod free_product;
pub mod json_ring;
pub mod spec;
pub mod uqsu11;
pub mod word_group;

pub use au::AuRing;
pub use clebsch_gordan::{So3, SuQ2};
pub use direct_product::DirectProduct;
pub use finite_group::FiniteGroup;
pub use free_product::FreeProduct;
pub use json_ring::{JsonRing, RingFile};
pub use spec::parse_provider;
pub use uqsu11::UqSu11;
pub use word_group::{Cyclic, WordGroup, WordGroupSpec};
