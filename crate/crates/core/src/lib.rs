//! Normal forms, word problems and embedding verifiers for trace monoids,
//! right-angled Artin groups and a handful of concrete one-relator groups.
//!
//! Every module works with exact arithmetic and canonical forms, so
//! equality checks are always decided, never approximated. The crate is
//! organised bottom-up:
//!
//! * [`words`]: free-group words over an [`Alphabet`], free and cyclic
//!   reduction, proper-power detection.
//! * [`graphs`]: small simplicial graphs (forests, diameters, induced paths).
//! * [`trace`]: the trace monoid `T(Γ)` with lex-least normal forms.
//! * [`raag`]: the right-angled Artin group `A(Γ)` and its word problem.
//! * [`stallings`]: folded subgroup graphs of free groups.
//! * [`concrete`]: `BS(1,n)` as affine maps, the trefoil group and an HNN
//!   extension of it.
//! * [`gbs`]: generalised Baumslag–Solitar graphs and the C*-simplicity verdict.
//! * [`one_relator`]: one-relator presentations and their classification.
//! * [`embeddings`]: explicit monoid/group maps and bounded injectivity checks.
//! * [`regression`]: the bundled regression suite behind `onerel verify paper`.

pub mod concrete;
pub mod embeddings;
pub mod error;
pub mod gbs;
pub mod graphs;
pub mod one_relator;
pub mod raag;
pub mod regression;
pub mod stallings;
pub mod trace;
pub mod words;

pub use concrete::{AffineElement, BsGroup, HnnTrefoil, HnnTrefoilElement, Trefoil, TrefoilElement};
pub use embeddings::{
    FreeProductElement, GroupTarget, InjectivityReport, KernelReport, MonoidMap, MonoidTarget,
};
pub use error::{Error, Result};
pub use gbs::{Classification, GbsGraph, ModularImage, Verdict};
pub use graphs::SimpGraph;
pub use one_relator::{OneRelatorPresentation, PNai};
pub use raag::RaagElement;
pub use stallings::StallingsGraph;
pub use trace::Trace;
pub use words::{Alphabet, FreeWord, Letter, PositiveWord};
