//! Exact computations with weak bialgebras and weak Hopf algebras given by
//! structure constants: axiom validation, derived identities, example
//! constructions, actions and coactions, weak matched pairs, the smash
//! subspace with its induced weak Hopf structure, and integral theory.
//!
//! All arithmetic is exact, over Q or a prime field, and every check is an
//! exact equality with a concrete witness on failure.
//!
//! ```
//! use weakhopf::group::parse_group;
//! use weakhopf::interact::{comult_coaction, mult_action};
//! use weakhopf::matched::MatchedPairData;
//! use weakhopf::scalar::FieldSpec;
//! use weakhopf::smash::{build_ambient, build_antipode, extract_subspace};
//! use weakhopf::validate::hopf_criterion;
//! use weakhopf::zoo::build_hg;
//!
//! // The group algebra of C2 with the averaged coproduct: a weak Hopf
//! // algebra that is not an ordinary Hopf algebra.
//! let wh = build_hg(&parse_group("C2")?, FieldSpec::Rationals)?;
//! assert!(!hopf_criterion(&wh)?.is_hopf());
//!
//! // It acts on itself by multiplication and coacts by its coproduct;
//! // the projected smash subspace is again two-dimensional.
//! let pair = MatchedPairData::new(mult_action(&wh.wb)?, comult_coaction(&wh.wb)?)?;
//! let smash = extract_subspace(&build_ambient(&pair)?)?;
//! assert_eq!(smash.rank(), 2);
//!
//! // It carries an antipode, and stays genuinely weak.
//! let hopf = build_antipode(&smash, &wh.antipode, &wh.antipode)?;
//! assert!(!hopf_criterion(&hopf)?.is_hopf());
//! # Ok::<(), weakhopf::Error>(())
//! ```

pub mod algebra;
pub mod error;
pub mod fuzz;
pub mod group;
pub mod integrals;
pub mod interact;
pub mod json;
pub mod linalg;
pub mod matched;
pub mod report;
pub mod scalar;
pub mod smash;
pub mod validate;
pub mod zoo;

pub use algebra::{FDAlgebraData, FDCoalgebraData, WeakBialgebra, WeakHopfAlgebra};
pub use error::{Error, Result};
pub use linalg::Mat;
pub use report::{CheckItem, CheckReport};
pub use scalar::{FieldSpec, Scalar};
