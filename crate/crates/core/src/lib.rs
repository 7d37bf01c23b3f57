//! Domination and total domination polynomials of zero-divisor graphs
//! `Γ(Z_n)`.
//!
//! Three independent routes:
//!
//! * [`domcount::brute_force_poly`] enumerates every vertex subset of the
//!   explicit graph;
//! * [`domcount::class_engine_poly`] counts on the divisor-class quotient,
//!   which stays small even when the graph has thousands of vertices;
//! * [`closedform`] evaluates closed-form formulas for the families
//!   `n = 2p, p^2, pq, p^2q, pqr, p^alpha`.
//!
//! [`verify`] runs the routes side by side and reports every coefficient on
//! which they disagree. [`domcount::lattice_summary`] reads `gamma` and the
//! number of dominating sets off the divisor lattice for moduli too large
//! for the class engine.
//!
//! ```
//! use zdpoly::{domcount::{class_engine_poly, DominationKind}, zdgraph::ClassGraph};
//!
//! let g = ClassGraph::build(15).unwrap();
//! let d = class_engine_poly(&g, DominationKind::Ordinary).unwrap();
//! assert_eq!(d.to_string(), "9*x^2 + 16*x^3 + 15*x^4 + 6*x^5 + x^6");
//! ```

pub mod cli;
pub mod closedform;
pub mod domcount;
pub mod error;
pub mod numtheory;
pub mod polyring;
pub mod verify;
pub mod zdgraph;

pub use error::{Error, Result};
pub use polyring::Polynomial;
