//! Divisorial data of the toric ring `R_G = K[t, x_i t, x_i x_j t]` of a
//! finite simple graph `G`.
//!
//! The graph determines the facets of its semigroup cone ([`cone`]). Each
//! facet gives a height-one monomial prime ([`primes`]), and the support
//! forms of those primes present the class group, whose canonical class
//! decides the Gorenstein property ([`divisor`]). The canonical module itself is read off
//! as the interior lattice points of the cone ([`omega`]). Normality is
//! decided combinatorially and can be cross-checked by bounded saturation
//! ([`normality`]); [`oracle`] holds brute-force re-derivations of the
//! polyhedral and combinatorial steps.

pub mod analysis;
pub mod cone;
pub mod divisor;
pub mod error;
pub mod families;
pub mod graph;
pub mod lattice;
pub mod normality;
pub mod omega;
pub mod oracle;
pub mod primes;
pub mod ring;

pub use cone::{FaceLabel, LatticePoint, SupportForm};
pub use divisor::{ClassGroupPresentation, DivisorClass, GorensteinVerdict};
pub use error::{Error, ParseErrorKind, Result};
pub use graph::{parse_graph, Bipartition, Graph, VertexCover, WhiskeredShape};
pub use lattice::{IntMatrix, IntVector};
pub use normality::{NormalityReason, NormalityVerdict};
pub use omega::{OmegaSlice, SemigroupMonomial};
pub use primes::{ClassifiedPrime, MonomialPrime, PrimeKind};
pub use ring::ToricRing;
