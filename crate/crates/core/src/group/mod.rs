//! Permutation arithmetic and finite-group structure.

mod classes;
mod finite;
mod permutation;

pub use classes::{
    centralizer, conjugacy_classes, element_order, right_transversal, ClassStructure,
    ConjugacyClass, Transversal,
};
pub use finite::{named_group, parse_group_name, FiniteGroup, GroupFamily, DEFAULT_ORDER_CAP};
pub use permutation::{parse_generators, Permutation};
