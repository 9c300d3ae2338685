mod bsgs;
pub mod error;
pub mod group;
pub mod perm;
pub mod search;

pub use error::{Error, Result};
pub use group::{schreier_sims, Limits, PermGroup};
pub use perm::Permutation;
pub use search::{coset_intersection, intersect, setwise_stabiliser, Coset};
pub mod blocks;
pub mod partition;

pub use blocks::{block_systems, BlockSystem};
pub use partition::Partition;
pub mod action;
pub mod normal;

pub use action::CosetAction;
pub use normal::{is_innately_transitive, minimal_normal_subgroups};
pub mod cartesian;

pub use cartesian::{
    enumerate_cartesian_decompositions, to_decomposition, to_system, validate_decomposition,
    validate_system, CartesianDecomposition, CartesianSystem, EnumerateOptions,
};
pub mod oracle;
pub mod wreath;

pub use wreath::{full_stabiliser, product_action_wreath, WreathSpec};
pub mod factor;

pub use factor::{
    is_factorisation, is_full_factorisation, is_strong_multiple_factorisation, Automorphism,
};
pub mod atlas;
pub mod io;

pub use atlas::{list_cases, load_case, verify_case, CaseRecord};
