//! Symplectic groups `Sp(2m, 2^f)`, their orthogonal subgroups, and the
//! permutation characters on vectors, quadratic forms and 1-spaces.
//!
//! Everything is computed exactly: field arithmetic by tables, group orders
//! in checked `u128`, inner products of permutation characters as orbit
//! counts, and strongly regular graph multiplicities in integers.

pub mod error;
pub mod formulas;
pub mod gf;
pub mod grp;
pub mod gset;
pub mod linalg;
pub mod permchar;
pub mod report;
pub mod space;
pub mod srg;

pub use error::{Error, Result};
pub use gf::{FieldContext, FieldElement};
pub use grp::{build_generators, enumerate_group, random_elements, Aux, ElementList, GeneratorSet, GroupElement, GroupLabel};
pub use gset::{DomainKind, GSet, OrbitPartition};
pub use permchar::{Bounds, Case, InnerProductReport, Mode, PointwiseScan};
pub use report::{CaseId, CheckRecord, Comparison, Summary, VerificationReport};
pub use space::{AlternatingForm, FormType, LinearFunctional, QuadraticForm, Space, Vector};
pub use srg::{SpectrumMultiplicities, SrgParams};
