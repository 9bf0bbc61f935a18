//! Exact partition calculus for nilpotent orbits of classical Lie algebras.
//!
//! The crate models orbits of so_{2n+1}, sp_2n, and so_2n by their
//! partitions and provides, with exact integer arithmetic throughout:
//!
//! - canonical partitions with transpose, dominance order, and the boundary
//!   operations that adjust the largest or smallest part ([`partition`]);
//! - parity-type predicates, B/C/D collapse and expansion, Spaltenstein
//!   duality, specialness, and exhaustive enumeration of type-restricted
//!   partitions, each backed by an independent brute-force oracle
//!   ([`classical`]);
//! - the three Barbasch-Vogan duality maps in both of their defining
//!   formulas ([`duality`]);
//! - orbit dimension formulas and two dimension identities ([`dimension`]);
//! - the partition shadow of a local Arthur parameter: validation, the
//!   odd/even endoscopic split, wavefront and bound partitions, the
//!   doubled-halves construction, and criterion checks ([`arthur`]);
//! - dominance closure posets with covering relations and DOT / JSON export
//!   ([`poset`]);
//! - exhaustive verification sweeps with deterministic reports and
//!   counterexample search ([`sweep`]).
//!
//! Every value is immutable after construction and every operation is pure,
//! so everything here can be shared and sent across threads freely. See the
//! `examples/` directory for one runnable walkthrough per capability, and
//! the `orbitcalc` binary for the batch CLI.

pub mod arthur;
pub mod classical;
pub mod dimension;
pub mod duality;
pub mod error;
pub mod group;
pub mod partition;
pub mod poset;
pub mod sweep;

pub use arthur::{ArthurParameter, CriterionResult, DominanceCheck, EndoscopicSplit, SufficientClass};
pub use classical::{
    collapse, collapse_oracle, enumerate_partitions, enumerate_type_partitions, expansion,
    expansion_oracle, is_orthogonal, is_special, is_symplectic, is_type, is_very_even,
    spaltenstein_dual, OrbitPartition, VeryEvenLabel,
};
pub use dimension::{dim_orbit, verify_dimension_duality, verify_dimension_split, DimensionIdentity};
pub use duality::{achar_identity_check, eta, eta_alt, eta_both, AcharCheck};
pub use error::{Error, Result};
pub use group::{dim_group, Family, GroupType};
pub use partition::{Partition, PartitionStats};
pub use poset::{ClosurePoset, PosetNode};
pub use sweep::{
    run_identity, search_counterexamples, Counterexample, Identity, VerificationReport, Witness,
};
