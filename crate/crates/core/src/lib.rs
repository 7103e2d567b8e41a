//! Exact Ehrhart polynomials for lattice polytopes.
//!
//! The crate builds the cube, the crosspolytope, the bipyramids `Q_n` and
//! the polytopes `P_n = conv{C_{n-1} x {0}, C_{n-1}^* x {-1, 1}}`, counts
//! lattice points in their dilates, interpolates Ehrhart polynomials with
//! exact rational arithmetic, and evaluates coefficient inequalities
//! (Wills-type bounds, bounds for polytopes whose Ehrhart roots share a real
//! part, l-reflexivity criteria) on the result.
//!
//! ```
//! use ehrhart_core::{counting, ehrhart, polytope};
//!
//! let p = polytope::pn_family(3).unwrap();
//! let counter = counting::counter_for(&p, &Default::default()).unwrap();
//! let e = ehrhart::ehrhart_of(&p, &*counter).unwrap();
//! assert_eq!(e.dimension(), 3);
//! assert_eq!(e.coefficient(0), ehrhart_core::arith::int(1));
//! ```
//!
//! Parallelism (box scans, interpolation nodes) uses rayon behind the
//! default `parallel` feature; without it everything runs sequentially with
//! identical results.

pub mod arith;
pub mod counting;
pub mod ehrhart;
pub mod error;
pub mod hull;
pub mod inequalities;
pub mod poly;
pub mod polytope;
pub mod reflexive;
pub mod report;
pub mod roots;

pub use arith::Rational;
pub use ehrhart::EhrhartPolynomial;
pub use error::{Error, Result};
pub use poly::Polynomial;
pub use polytope::{Halfspace, LatticePolytope};
pub use roots::RootSet;
