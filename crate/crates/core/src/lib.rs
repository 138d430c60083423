//! Circulant graphs and graph tensor products.
//!
//! The crate builds circulant graphs `C n S` and tensor / Cartesian
//! products, decides circulance exactly for small graphs (returning an
//! explicit transitive cyclic automorphism when one exists), and issues
//! arithmetic non-circulance certificates for families of products where
//! exhaustive search is not needed.
//!
//! ```
//! use tensorcirc::{complete, tensor, is_circulant, CirculantSpec};
//!
//! let k2k2 = tensor(&complete(2), &complete(2));
//! let verdict = is_circulant(&k2k2).unwrap();
//! assert_eq!(verdict.spec(), Some(&"C 4 {2}".parse::<CirculantSpec>().unwrap()));
//! ```

pub mod certificates;
pub mod circulant;
mod error;
pub mod graph;
mod iso;
pub mod perm;
pub mod products;
pub mod recognize;
pub mod suite;
pub mod symmetry;

pub use certificates::{
    km_kn_cartesian_spec, km_kn_tensor_spec, theorem11_certificate, theorem2_certificate,
    Certificate,
};
pub use circulant::CirculantSpec;
pub use error::{Error, Result};
pub use graph::{Bipartition, Component, ComponentReport, Graph};
pub use iso::are_isomorphic;
pub use perm::Permutation;
pub use products::{
    cartesian, complete, complete_bipartite, cycle, find_tensor_root_over_k2,
    find_tensor_root_over_k2_with_bound, kn_star, looped_path, path, tensor, ProductVertexMap,
};
pub use recognize::{
    connection_set_from_cycle, is_circulant, is_circulant_with, Evidence, RecognitionConfig,
    Verdict, HARD_ORDER_GUARD,
};
pub use suite::{verify_item, verify_suite, verify_suite_with, Report, SuiteBounds, TheoremResult};
pub use symmetry::{
    is_automorphism, lemma6_alpha, pair_action, switching_automorphism, theorem10_witness,
    wreath_action, WreathElement,
};
