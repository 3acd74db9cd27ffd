//! Symbolic and numeric machinery for tent-map inverse limit spaces.
//!
//! The crate is organized in five layers:
//!
//! * [`kneading`] — kneading maps, cutting times, admissibility, kneading
//!   sequences and the symbolic order of postcritical points;
//! * [`numeric`] — slope solving, critical orbits, closest precritical
//!   points, separation radii and the backward-orbit oracle;
//! * [`folding`] — folding patterns of the arc-components through the
//!   endpoint and through the fixed point, salient points and bridges;
//! * [`chains`] — interval chains whose links trap every turn of the
//!   attractor, and the link bookkeeping for postcritical levels;
//! * [`symmetry`] — detectors and classifiers for symmetric,
//!   quasi-symmetric and link-symmetric stretches of a folding pattern.
//!
//! The [`suite`] module bundles the whole verification battery behind a
//! single deterministic report; the `tentlim` binary exposes it on the
//! command line. The mdbook under `book/` walks through the concepts with
//! runnable snippets; the snippets double as doc-tests (see the bottom of
//! this file).

pub mod chains;
pub mod error;
pub mod folding;
pub mod kneading;
pub mod numeric;
pub mod suite;
pub mod symmetry;

pub use error::{Error, Result};

// Every code block in the guide compiles and runs under `cargo test`.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            #[allow(dead_code)]
            struct $name;
        };
    }
    chapter!(Introduction, "../../../book/src/introduction.md");
    chapter!(Kneading, "../../../book/src/kneading.md");
    chapter!(Numeric, "../../../book/src/numeric.md");
    chapter!(Folding, "../../../book/src/folding.md");
    chapter!(Chains, "../../../book/src/chains.md");
    chapter!(Symmetry, "../../../book/src/symmetry.md");
}
