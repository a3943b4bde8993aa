//! Exact arithmetic in the Temperley-Lieb algebra `TL_n` at loop value 2.
//!
//! Jones-Wenzl projectors, seminormal idempotents in a tableau basis, their
//! `p`-classes and the seminormal action of KLR generators, which together
//! give `p`-Jones-Wenzl idempotents by a recursion on base-`p` digits.

pub mod arith;
pub mod combin;
pub mod error;
pub mod klr;
pub mod linalg;
pub mod par;
pub mod report;
pub mod tlcore;
pub mod verify;
pub mod wenzl;

pub use arith::{PrimeFieldScalar, Rational};
pub use combin::{StdTableau, TwoColPartition};
pub use error::{Error, Result};
pub use report::{all_pass, Report};
pub use tlcore::{PlanarMatching, Ring, TLElement};
