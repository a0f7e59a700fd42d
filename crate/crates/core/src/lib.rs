//! Diagram groups over semigroup presentations: planar diagrams, reduction
//! to a canonical form, the group operations, word-problem tooling, and
//! verified embeddings of Thompson's group F.

pub mod canonical;
pub mod diagram;
pub mod error;
pub mod groupops;
pub mod oracle;
pub mod presentation;
pub mod rewrite;
pub mod sample;
pub mod thompson;

pub use canonical::{equal_diagrams, is_reduced, normal_form, reduce, Equality};
pub use diagram::{Atom, Diagram, PlanarGraph};
pub use error::{Error, Result};
pub use presentation::{Letter, Orient, Presentation, Relation, Symbol, Word};
pub use rewrite::{Caps, Derivation, Verdict, VerdictKind};
