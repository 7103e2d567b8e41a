//! l-reflexive polytopes and the three equivalent descriptions of them.
//!
//! For a polytope `P` with the origin inside, primitive vertices, and
//! index `l` (lcm of the facet right-hand sides `l_i` under primitive
//! normals `u_i`), these are equivalent:
//! - every `l_i` equals `l`,
//! - `l P^*` is a lattice polytope with primitive vertices `(l / l_i) u_i`,
//! - `lE_{n-1}(P) = n / (2l) vol(P)`.
//!
//! With `l` the index, the points `(l / l_i) u_i` are always integral, so
//! latticeness alone carries no information; primitivity of the scaled
//! polar vertices is what pins every `l_i` to `l`.

use num_traits::One;
use serde::Serialize;

use crate::arith::{fraction, int, Rational};
use crate::ehrhart::EhrhartPolynomial;
use crate::error::{Error, Result};
use crate::polytope::{index, is_primitive, polar_scaled, LatticePolytope};
use crate::roots::{common_real_part, RootSet};

fn vertices_primitive(p: &LatticePolytope) -> bool {
    p.vertices().iter().all(|v| is_primitive(v).unwrap_or(false))
}

/// Checks origin interiority, primitive vertices, and a common right-hand
/// side. Returns that side when all three hold.
pub fn is_l_reflexive(p: &LatticePolytope) -> Result<(bool, Option<u64>)> {
    let hs = p.halfspaces().ok_or(Error::MissingHalfspaces)?;
    if !p.origin_is_interior()? || !vertices_primitive(p) {
        return Ok((false, None));
    }
    let l = hs[0].rhs;
    if hs.iter().all(|h| h.rhs == l) {
        Ok((true, Some(l as u64)))
    } else {
        Ok((false, None))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReflexivityReport {
    pub index_l: u64,
    pub def_check: bool,
    pub polar_check: bool,
    pub coefficient_check: bool,
    pub agree: bool,
    /// `lE_{n-1}`
    #[serde(with = "fraction")]
    pub coefficient_lhs: Rational,
    /// `n / (2l) * lE_n`
    #[serde(with = "fraction")]
    pub coefficient_rhs: Rational,
}

/// Evaluate the three descriptions independently and record whether they
/// agree. Hypothesis failures (no half-spaces, origin not interior,
/// non-primitive vertices, wrong polynomial) are errors; disagreement is
/// reported in the result and means a bug somewhere upstream.
pub fn prop36_equivalence(p: &LatticePolytope, ehr: &EhrhartPolynomial) -> Result<ReflexivityReport> {
    if ehr.dimension() != p.dimension() {
        return Err(Error::Inconsistent(format!(
            "polynomial has degree {}, polytope dimension {}",
            ehr.dimension(),
            p.dimension()
        )));
    }
    let l = index(p)?;
    if !vertices_primitive(p) {
        return Err(Error::InvalidArgument(
            "the equivalence needs primitive vertices; this polytope has a non-primitive one".into(),
        ));
    }
    let def_check = is_l_reflexive(p)?.0;

    let polar = polar_scaled(p, l)?;
    let polar_check = polar.is_lattice
        && polar
            .integer_vertices()
            .is_some_and(|vs| vs.iter().all(|v| is_primitive(v).unwrap_or(false)));

    let n = p.dimension();
    let coefficient_lhs = ehr.coefficient(n - 1);
    let coefficient_rhs = Rational::new((n as u64).into(), (2 * l).into()) * ehr.volume();
    let coefficient_check = coefficient_lhs == coefficient_rhs;

    let agree = def_check == polar_check && polar_check == coefficient_check;
    Ok(ReflexivityReport {
        index_l: l,
        def_check,
        polar_check,
        coefficient_check,
        agree,
        coefficient_lhs,
        coefficient_rhs,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Corollary38 {
    pub index_l: u64,
    /// All roots have real part `-1/(2l)` (within tolerance).
    pub hypothesis: bool,
    /// `lE_{n-1} = n / (2l) vol`, exact.
    pub consequence: bool,
    /// `hypothesis => consequence`
    pub holds: bool,
}

/// If every root has real part `-1/(2l)` with `l` the index, then
/// `lE_{n-1} = n / (2l) vol`. Returns the truth of that implication.
pub fn corollary38_consequence(
    p: &LatticePolytope,
    ehr: &EhrhartPolynomial,
    rs: &RootSet,
    tol: f64,
) -> Result<Corollary38> {
    let l = index(p)?;
    let n = p.dimension();
    let target = Rational::one() / int(2 * l);
    let hypothesis = common_real_part(rs, &target, tol);
    let consequence = ehr.coefficient(n - 1) == Rational::new((n as u64).into(), (2 * l).into()) * ehr.volume();
    Ok(Corollary38 { index_l: l, hypothesis, consequence, holds: !hypothesis || consequence })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::counting::{counter_for, CountOptions};
    use crate::ehrhart::ehrhart_of;
    use crate::hull::hull2d;
    use crate::polytope::{crosspolytope, cube, dilate, polar_polygon, qn_family};
    use crate::roots::find_roots;

    fn ehr(p: &LatticePolytope) -> EhrhartPolynomial {
        ehrhart_of(p, &*counter_for(p, &CountOptions::default()).unwrap()).unwrap()
    }

    fn triangle() -> LatticePolytope {
        hull2d(&[vec![-1, -1], vec![-1, 2], vec![2, -1]]).unwrap()
    }

    #[test]
    fn reflexivity_examples() {
        assert_eq!(is_l_reflexive(&cube(2).unwrap()).unwrap(), (true, Some(1)));
        assert_eq!(is_l_reflexive(&triangle()).unwrap(), (true, Some(1)));
        assert_eq!(is_l_reflexive(&dilate(&cube(2).unwrap(), 2).unwrap()).unwrap(), (false, None));
        assert_eq!(is_l_reflexive(&qn_family(5).unwrap()).unwrap(), (true, Some(1)));
        assert!(is_l_reflexive(&crate::polytope::pn_family(3).unwrap()).is_err());
    }

    #[test]
    fn equivalence_examples() {
        for p in [cube(2).unwrap(), cube(3).unwrap(), triangle(), crosspolytope(3).unwrap(), qn_family(4).unwrap()] {
            let r = prop36_equivalence(&p, &ehr(&p)).unwrap();
            assert!(r.agree && r.def_check && r.polar_check && r.coefficient_check, "{r:?}");
            assert_eq!(r.index_l, 1);
        }
        let t = triangle();
        let r = prop36_equivalence(&t, &ehr(&t)).unwrap();
        assert_eq!((r.coefficient_lhs, r.coefficient_rhs), (rat(9, 2), rat(9, 2)));
        let c3 = cube(3).unwrap();
        let r = prop36_equivalence(&c3, &ehr(&c3)).unwrap();
        assert_eq!((r.coefficient_lhs, r.coefficient_rhs), (int(12), int(12)));
    }

    #[test]
    fn equivalence_on_a_2_reflexive_polygon() {
        // hexagon with all edges at lattice distance 2 and primitive vertices
        let hex = hull2d(&[vec![1, 1], vec![-1, 2], vec![-2, 1], vec![-1, -1], vec![1, -2], vec![2, -1]]).unwrap();
        let r = prop36_equivalence(&hex, &ehr(&hex)).unwrap();
        assert!(r.agree);
        assert_eq!(r.index_l, hex.halfspaces().unwrap()[0].rhs as u64);
    }

    #[test]
    fn equivalence_all_false() {
        // primitive vertices, right-hand sides {1, 3}
        let p = hull2d(&[vec![1, 0], vec![0, 1], vec![-1, 1], vec![-2, -1]]).unwrap();
        let rhs: Vec<i64> = p.halfspaces().unwrap().iter().map(|h| h.rhs).collect();
        assert!(rhs.contains(&1) && rhs.contains(&3), "{rhs:?}");
        let r = prop36_equivalence(&p, &ehr(&p)).unwrap();
        assert!(r.agree && !r.def_check && !r.polar_check && !r.coefficient_check, "{r:?}");
    }

    #[test]
    fn hypothesis_failures_are_errors() {
        // (0, +-2) are not primitive
        let diamond = hull2d(&[vec![1, 0], vec![-1, 0], vec![0, 2], vec![0, -2]]).unwrap();
        assert!(matches!(prop36_equivalence(&diamond, &ehr(&diamond)), Err(Error::InvalidArgument(_))));
        let off = hull2d(&[vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(prop36_equivalence(&off, &ehr(&off)), Err(Error::OriginNotInterior));
    }

    #[test]
    fn corollary_examples() {
        for n in 1..=5 {
            let c = cube(n).unwrap();
            let e = ehr(&c);
            let got = corollary38_consequence(&c, &e, &find_roots(e.poly()).unwrap(), 1e-7).unwrap();
            assert!(got.hypothesis && got.consequence && got.holds);
        }
        let t = triangle();
        let e = ehr(&t);
        let got = corollary38_consequence(&t, &e, &find_roots(e.poly()).unwrap(), 1e-7).unwrap();
        assert!(!got.hypothesis && got.holds);

        let d = dilate(&cube(2).unwrap(), 2).unwrap();
        let e = ehr(&d);
        assert_eq!(e.coefficients(), &[int(1), int(8), int(16)]);
        let got = corollary38_consequence(&d, &e, &find_roots(e.poly()).unwrap(), 1e-7).unwrap();
        assert_eq!(got.index_l, 2);
        assert!(got.hypothesis && got.consequence);
    }

    #[test]
    fn double_polar_of_reflexive_polygons() {
        for p in [triangle(), cube(2).unwrap(), crosspolytope(2).unwrap()] {
            let polar = polar_polygon(&p, 1).unwrap();
            let back = polar_polygon(&polar, 1).unwrap();
            let mut a = back.vertices().to_vec();
            a.sort();
            let mut b = p.vertices().to_vec();
            b.sort();
            assert_eq!(a, b);
            let r = prop36_equivalence(&back, &ehr(&back)).unwrap();
            assert!(r.agree && r.coefficient_check);
        }
    }

    #[test]
    fn invariant_under_signed_permutations() {
        let polys = [
            triangle(),
            hull2d(&[vec![1, 0], vec![0, 1], vec![-1, 1], vec![-1, -2]]).unwrap(),
            dilate(&cube(2).unwrap(), 2).unwrap(),
        ];
        for p in &polys {
            let base = is_l_reflexive(p).unwrap();
            for swap in [false, true] {
                for sx in [1, -1] {
                    for sy in [1, -1] {
                        let pts: Vec<_> = p
                            .vertices()
                            .iter()
                            .map(|v| {
                                let (x, y) = if swap { (v[1], v[0]) } else { (v[0], v[1]) };
                                vec![sx * x, sy * y]
                            })
                            .collect();
                        assert_eq!(is_l_reflexive(&hull2d(&pts).unwrap()).unwrap(), base);
                    }
                }
            }
        }
    }
}
