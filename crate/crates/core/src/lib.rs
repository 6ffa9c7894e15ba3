//! Exact calculator for gauge groups of principal bundles over the total
//! spaces `M_{l,m}` of `S^3`-bundles over `S^4`, and over `S^7`.

pub mod abelian;
pub mod bundles;
pub mod cli;
pub mod error;
pub mod expr;
pub mod gauge;
pub mod manifold;
pub mod oracle;
pub mod selftest;
pub mod tables;

pub use abelian::{AbGroup, Locality, Prime};
pub use error::{Error, Result};
pub use expr::{Atom, SpaceExpr};
pub use manifold::{normalize, ManifoldSpec};
pub use tables::LieGroupId;
