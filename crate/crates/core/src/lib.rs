//! Quasi-cyclic, double-circulant and four-circulant codes over small finite
//! fields: construction, hull dimension, LCD and LCP decisions via polynomial
//! gcd criteria, cross-checked against exact rank computations.

pub mod cli;
pub mod code;
pub mod descriptor;
pub mod error;
pub mod fc;
pub mod gf;
pub mod linalg;
pub mod poly;
pub mod qc;
pub mod search;

pub use code::{security_parameter, LinearCode};
pub use descriptor::{CodeDescriptor, CodeSpec};
pub use error::{Error, Result};
pub use fc::{fc_lcp, FourCirculantSpec};
pub use gf::{Elem, Field, FieldElement, FieldSpec};
pub use linalg::{Matrix, Rref};
pub use poly::{factor_xm_minus_1, FactorClassification, Poly, RingElement};
pub use qc::{dc_construct_hull_one, dc_lcp, lcp_maximal_2qc, DcSpec, QcOneGenSpec};
pub use search::{
    reproduce_table, run_search, Family, Mode, RowReport, RowStatus, SearchResult, SearchTask,
};
