//! Exact certification of the degree bound for smooth surfaces in `P^4` that
//! are not of general type, together with a brute-force model of the
//! monomial ideals behind it.
//!
//! The pipeline runs `configs` → `bounds` → `sporadic` → `certifier`; `gin`
//! is an independent check of the genus formula the certifier relies on.

pub mod arith;
pub mod bounds;
pub mod certifier;
pub mod configs;
pub mod error;
pub mod gin;
pub mod sporadic;

pub use arith::Rational;
pub use certifier::{eq4_check, eq4_check_with, CertifierOptions, ConfigVerdict};
pub use configs::{enumerate_configs, validate_config, ConnectedInvariants, Violation};
pub use error::{Error, Result};
pub use sporadic::{Placement, SporadicProfile};
