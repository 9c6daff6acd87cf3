//! Construction and certification of a family of self-dual regular
//! 3-polytopes of type {n,n} with 2^n * n flags, one for every n >= 3.
//!
//! The group of the n-th member is realized concretely as invertible
//! affine maps of the (n-1)-dimensional vector space over the two-element
//! field: two reflections and a translated copy of one of them generate
//! it. The crate verifies, rather than assumes, everything that makes
//! the construction a regular polytope:
//!
//! - [`gf2`]: bit-packed linear algebra and the specific circulant,
//!   reflection and partial-sum matrices the construction is built from.
//! - [`group`]: generic finite-group machinery (closure, orders, cosets)
//!   over dihedral elements, affine maps and permutations.
//! - [`family`]: the generator triple and its group for each n.
//! - [`sggi`]: string-group axioms, Schlafli types and the intersection
//!   condition.
//! - [`lattice`]: the face lattice built from cosets of parabolic
//!   subgroups, the diamond and connectivity axioms, flags, duals,
//!   lattice isomorphism, and DOT exports.
//! - [`fp`]: words, presentations, Todd-Coxeter coset enumeration with
//!   two strategies, presentation verification, the self-duality
//!   substitution check, and the higher-rank sweep.
//! - [`cert`]: the verification pipeline and its JSON certificates.
//!
//! The `examples/` directory shows one runnable program per capability;
//! the `polycert` binary wraps the same entry points as subcommands.

pub mod cert;
mod dsu;
pub mod error;
pub mod family;
pub mod fp;
pub mod gf2;
pub mod group;
pub mod lattice;
pub mod sggi;

pub use cert::{Certificate, VerifyOptions};
pub use error::{Error, Result};
