//! Exact computation of wreath Macdonald polynomials.
//!
//! The library computes monomial expansions of the wreath Macdonald
//! polynomials H_lambda over Q(q,t) through recursions for their Pieri
//! coefficients, and checks the identities they satisfy (orthogonality,
//! reciprocity, evaluations, five-term operator relations) against an
//! independent solver for the defining triangularity conditions.
//!
//! Layout:
//! - [`qtalg`]: sparse exact arithmetic in Z[q^{\pm 1}, t^{\pm 1}] and Q(q,t);
//! - [`partition`]: partitions, colored corners, character sums, hooks, norms;
//! - [`maya`]: the Young-Maya correspondence, r-cores and r-quotients,
//!   charge vectors, symmetric group actions on quotients, box-addition
//!   chains;
//! - [`multisym`]: multisymmetric functions over Q(q,t) with p/m/h/e/s
//!   bases, Hall and star pairings, vector plethysm, virtual alphabets;
//! - [`pieri`]: degree-1 Pieri coefficients and the five-term recursions
//!   with memoization;
//! - [`wreath`]: H polynomials, the defining-condition solver, evaluations,
//!   reciprocity, operator matrices on fixed-core blocks and the
//!   verification suites.

pub mod maya;
pub mod multisym;
pub mod partition;
pub mod pieri;
pub mod qtalg;
pub mod wreath;

pub use partition::Partition;
pub use qtalg::{LaurentQT, RatQT};
