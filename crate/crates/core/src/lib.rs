//! Hereditarily finite sets, finite type-theoretic ordinals and marked
//! extensional wellfounded orders (mewos), with the translations between them.
//!
//! * [`hfset`]: a hash-consed universe of hereditarily finite sets.
//! * [`ordinal`]: finite ordinals as validated strict orders.
//! * [`mewo`]: marked extensional wellfounded orders.
//! * [`correspondence`]: maps between structures and sets.
//! * [`oracle`]: brute-force reference procedures and generators.
//! * [`checks`] and [`suite`]: the law checks and the suite runner.

pub mod checks;
pub mod correspondence;
pub mod hfset;
pub mod mewo;
pub mod oracle;
pub mod order;
pub mod ordinal;
pub mod par;
pub mod relation;
pub mod suite;
pub mod text;

pub use hfset::{PointedGraph, SetError, SetHandle, SetUniverse};
pub use mewo::Mewo;
pub use order::{MarkedOrder, ValidationError};
pub use ordinal::FinOrd;
pub use par::Exec;
pub use relation::Relation;
