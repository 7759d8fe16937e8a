//! Layered Catalan monoids: canonical forms, full enumeration, structural
//! relations and semigroup determinants.

pub mod canon;
pub mod detlab;
pub mod error;
pub mod monoid;
pub mod oracle;
pub mod structure;
pub mod words;

pub use canon::{canonicalize, zero_word, CanonicalForm, FormKind, Segment, Shape};
pub use detlab::{SparsePoly, VarMatrix, Verdict};
pub use error::{Error, Result};
pub use monoid::{build_universe, Element, MonoidUniverse};
pub use oracle::Presentation;
pub use structure::Structure;
pub use words::{Letter, Word};
