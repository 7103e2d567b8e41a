//! Lattice polytopes: the named families, products, bipyramids, dilates,
//! primitivity, the index and the scaled polar.
//!
//! A polytope always carries a vertex list. Half-spaces are optional: they
//! are known for cubes, crosspolytopes, bipyramids over polytopes that have
//! them, products of such, dilates, and planar hulls. There is no general
//! vertex-to-facet conversion; higher-dimensional H-representations come
//! from these constructions or from the caller.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::error::{Error, Result};

pub type Point = Vec<i64>;

/// `normal . x <= rhs` with a primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Halfspace {
    pub normal: Vec<i64>,
    pub rhs: i64,
}

impl Halfspace {
    pub fn new(normal: Vec<i64>, rhs: i64) -> Result<Self> {
        if !is_primitive(&normal)? {
            return Err(Error::Inconsistent(format!("normal {normal:?} is not primitive")));
        }
        Ok(Halfspace { normal, rhs })
    }

    pub fn value(&self, x: &[i64]) -> i128 {
        self.normal
            .iter()
            .zip(x)
            .map(|(&u, &v)| u as i128 * v as i128)
            .sum()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.value(x) <= self.rhs as i128
    }

    pub fn is_tight(&self, x: &[i64]) -> bool {
        self.value(x) == self.rhs as i128
    }

    /// Squared Euclidean norm of the normal.
    pub fn norm_sq(&self) -> i128 {
        self.normal.iter().map(|&u| u as i128 * u as i128).sum()
    }
}

/// How a polytope was built. Counting uses this to pick a fast counter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag", content = "params")]
pub enum Family {
    Cube { n: usize },
    Crosspolytope { n: usize },
    PnFamily { n: usize },
    QnFamily { n: usize },
    Product { left: Box<LatticePolytope>, right: Box<LatticePolytope> },
    Bipyramid { base: Box<LatticePolytope> },
    Dilation { base: Box<LatticePolytope>, factor: u64 },
    Generic,
}

impl Family {
    /// Rebuild the polytope this tag describes.
    pub fn build(&self) -> Result<LatticePolytope> {
        match self {
            Family::Cube { n } => cube(*n),
            Family::Crosspolytope { n } => crosspolytope(*n),
            Family::PnFamily { n } => pn_family(*n),
            Family::QnFamily { n } => qn_family(*n),
            Family::Product { left, right } => Ok(product(left, right)),
            Family::Bipyramid { base } => bipyramid(base),
            Family::Dilation { base, factor } => dilate(base, *factor),
            Family::Generic => Err(Error::Inconsistent(
                "generic polytopes are not determined by their tag".into(),
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PolytopeRepr", into = "PolytopeRepr")]
pub struct LatticePolytope {
    dimension: usize,
    vertices: Vec<Point>,
    halfspaces: Option<Vec<Halfspace>>,
    family: Family,
}

impl LatticePolytope {
    /// A generic polytope from vertices and an optional H-representation.
    ///
    /// Checks that every vertex satisfies every half-space and that every
    /// half-space is attained by some vertex.
    pub fn new(
        dimension: usize,
        vertices: Vec<Point>,
        halfspaces: Option<Vec<Halfspace>>,
    ) -> Result<Self> {
        let p = LatticePolytope { dimension, vertices, halfspaces, family: Family::Generic };
        p.validate()?;
        Ok(p)
    }

    fn tagged(
        dimension: usize,
        vertices: Vec<Point>,
        halfspaces: Option<Vec<Halfspace>>,
        family: Family,
    ) -> Self {
        LatticePolytope { dimension, vertices, halfspaces, family }
    }

    pub fn validate(&self) -> Result<()> {
        if self.dimension == 0 {
            return Err(Error::InvalidArgument("dimension must be at least 1".into()));
        }
        if self.vertices.is_empty() {
            return Err(Error::Inconsistent("vertex list is empty".into()));
        }
        if let Some(v) = self.vertices.iter().find(|v| v.len() != self.dimension) {
            return Err(Error::Inconsistent(format!(
                "vertex {v:?} has {} coordinates, dimension is {}",
                v.len(),
                self.dimension
            )));
        }
        for h in self.halfspaces.iter().flatten() {
            if h.normal.len() != self.dimension {
                return Err(Error::Inconsistent(format!(
                    "normal {:?} has {} coordinates, dimension is {}",
                    h.normal,
                    h.normal.len(),
                    self.dimension
                )));
            }
            if !is_primitive(&h.normal)? {
                return Err(Error::Inconsistent(format!("normal {:?} is not primitive", h.normal)));
            }
            if let Some(v) = self.vertices.iter().find(|v| !h.contains(v)) {
                return Err(Error::Inconsistent(format!(
                    "vertex {v:?} violates {:?} . x <= {}",
                    h.normal, h.rhs
                )));
            }
            if !self.vertices.iter().any(|v| h.is_tight(v)) {
                return Err(Error::Inconsistent(format!(
                    "half-space {:?} . x <= {} is not attained at any vertex",
                    h.normal, h.rhs
                )));
            }
        }
        Ok(())
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn halfspaces(&self) -> Option<&[Halfspace]> {
        self.halfspaces.as_deref()
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn contains(&self, x: &[i64]) -> Result<bool> {
        let hs = self.halfspaces().ok_or(Error::MissingHalfspaces)?;
        Ok(hs.iter().all(|h| h.contains(x)))
    }

    /// True iff the origin is strictly inside. Needs half-spaces.
    pub fn origin_is_interior(&self) -> Result<bool> {
        let hs = self.halfspaces().ok_or(Error::MissingHalfspaces)?;
        Ok(hs.iter().all(|h| h.rhs > 0))
    }

    /// Vertex set closed under negation.
    pub fn is_centrally_symmetric(&self) -> bool {
        let set: std::collections::HashSet<&Point> = self.vertices.iter().collect();
        self.vertices
            .iter()
            .all(|v| set.contains(&v.iter().map(|x| -x).collect::<Point>()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polytopes always serialize")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("polytopes always serialize")
    }

    /// Parse the polytope JSON schema; schema errors name the field path.
    pub fn from_json(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            Error::Json(format!("at `{path}`: {}", e.into_inner()))
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeRepr {
    dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<Point>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    halfspaces: Option<Vec<Halfspace>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    family: Option<Family>,
}

impl From<LatticePolytope> for PolytopeRepr {
    fn from(p: LatticePolytope) -> Self {
        PolytopeRepr {
            dimension: p.dimension,
            vertices: Some(p.vertices),
            halfspaces: p.halfspaces,
            family: match p.family {
                Family::Generic => None,
                f => Some(f),
            },
        }
    }
}

impl TryFrom<PolytopeRepr> for LatticePolytope {
    type Error = Error;

    fn try_from(r: PolytopeRepr) -> Result<Self> {
        match r.family {
            Some(Family::Generic) | None => {
                let vertices = r.vertices.ok_or_else(|| {
                    Error::Inconsistent("a polytope without a family tag needs vertices".into())
                })?;
                LatticePolytope::new(r.dimension, vertices, r.halfspaces)
            }
            Some(family) => {
                let built = family.build()?;
                if built.dimension != r.dimension {
                    return Err(Error::Inconsistent(format!(
                        "family builds dimension {}, json says {}",
                        built.dimension, r.dimension
                    )));
                }
                if r.vertices.as_ref().is_some_and(|v| *v != built.vertices) {
                    return Err(Error::Inconsistent("vertices disagree with the family tag".into()));
                }
                if r.halfspaces.is_some() && r.halfspaces != built.halfspaces {
                    return Err(Error::Inconsistent(
                        "halfspaces disagree with the family tag".into(),
                    ));
                }
                Ok(built)
            }
        }
    }
}

fn sign_vectors(n: usize) -> Vec<Point> {
    (0..1u64 << n)
        .map(|mask| {
            (0..n)
                .map(|i| if mask >> (n - 1 - i) & 1 == 1 { 1 } else { -1 })
                .collect()
        })
        .collect()
}

fn unit(n: usize, i: usize, sign: i64) -> Point {
    let mut v = vec![0; n];
    v[i] = sign;
    v
}

fn cross_vertices(n: usize) -> Vec<Point> {
    (0..n).flat_map(|i| [unit(n, i, 1), unit(n, i, -1)]).collect()
}

/// `C_n = [-1, 1]^n`.
pub fn cube(n: usize) -> Result<LatticePolytope> {
    if n == 0 {
        return Err(Error::InvalidArgument("cube needs n >= 1".into()));
    }
    if n > 24 {
        return Err(Error::InvalidArgument("cube vertex list limited to n <= 24".into()));
    }
    let halfspaces = cross_vertices(n).into_iter().map(|u| Halfspace { normal: u, rhs: 1 }).collect();
    Ok(LatticePolytope::tagged(n, sign_vectors(n), Some(halfspaces), Family::Cube { n }))
}

/// `C_n^* = conv{+-e_1, ..., +-e_n}`.
pub fn crosspolytope(n: usize) -> Result<LatticePolytope> {
    if n == 0 {
        return Err(Error::InvalidArgument("crosspolytope needs n >= 1".into()));
    }
    if n > 24 {
        return Err(Error::InvalidArgument("crosspolytope facets limited to n <= 24".into()));
    }
    let halfspaces = sign_vectors(n).into_iter().map(|s| Halfspace { normal: s, rhs: 1 }).collect();
    Ok(LatticePolytope::tagged(
        n,
        cross_vertices(n),
        Some(halfspaces),
        Family::Crosspolytope { n },
    ))
}

fn lift(v: &[i64], height: i64) -> Point {
    let mut out = v.to_vec();
    out.push(height);
    out
}

/// `P_n = conv{C_{n-1} x {0}, C_{n-1}^* x {-1, 1}}`. The vertex list holds
/// all generators; no half-spaces are attached.
pub fn pn_family(n: usize) -> Result<LatticePolytope> {
    if n < 2 {
        return Err(Error::InvalidArgument("P_n needs n >= 2".into()));
    }
    let base = cube(n - 1)?;
    let mut vertices: Vec<Point> = base.vertices.iter().map(|v| lift(v, 0)).collect();
    for h in [-1, 1] {
        vertices.extend(cross_vertices(n - 1).iter().map(|v| lift(v, h)));
    }
    Ok(LatticePolytope::tagged(n, vertices, None, Family::PnFamily { n }))
}

/// `Q_n = conv{C_{n-1} x {0}, +-e_n}`, the bipyramid over a cube.
pub fn qn_family(n: usize) -> Result<LatticePolytope> {
    if n < 2 {
        return Err(Error::InvalidArgument("Q_n needs n >= 2".into()));
    }
    let mut q = bipyramid(&cube(n - 1)?)?;
    q.family = Family::QnFamily { n };
    Ok(q)
}

/// `conv{P x {0}, +-e_{n+1}}`. Needs the origin strictly inside `P` (when
/// half-spaces are known, they are lifted to `u.x +- l t <= l`).
pub fn bipyramid(base: &LatticePolytope) -> Result<LatticePolytope> {
    let n = base.dimension + 1;
    let mut vertices: Vec<Point> = base.vertices.iter().map(|v| lift(v, 0)).collect();
    vertices.push(unit(n, n - 1, 1));
    vertices.push(unit(n, n - 1, -1));
    let halfspaces = match base.halfspaces() {
        Some(hs) => {
            if !base.origin_is_interior()? {
                return Err(Error::OriginNotInterior);
            }
            Some(
                hs.iter()
                    .flat_map(|h| {
                        [1, -1].map(|s| Halfspace { normal: lift(&h.normal, s * h.rhs), rhs: h.rhs })
                    })
                    .collect(),
            )
        }
        None => None,
    };
    Ok(LatticePolytope::tagged(
        n,
        vertices,
        halfspaces,
        Family::Bipyramid { base: Box::new(base.clone()) },
    ))
}

/// `P x Q`; half-spaces are lifted when both factors have them.
pub fn product(p: &LatticePolytope, q: &LatticePolytope) -> LatticePolytope {
    let dimension = p.dimension + q.dimension;
    let vertices = p
        .vertices
        .iter()
        .flat_map(|a| q.vertices.iter().map(move |b| [a.as_slice(), b.as_slice()].concat()))
        .collect();
    let halfspaces = match (p.halfspaces(), q.halfspaces()) {
        (Some(hp), Some(hq)) => {
            let left = hp.iter().map(|h| Halfspace {
                normal: [h.normal.as_slice(), &vec![0; q.dimension]].concat(),
                rhs: h.rhs,
            });
            let right = hq.iter().map(|h| Halfspace {
                normal: [vec![0; p.dimension].as_slice(), &h.normal].concat(),
                rhs: h.rhs,
            });
            Some(left.chain(right).collect())
        }
        _ => None,
    };
    LatticePolytope::tagged(
        dimension,
        vertices,
        halfspaces,
        Family::Product { left: Box::new(p.clone()), right: Box::new(q.clone()) },
    )
}

/// `kP` for `k >= 1`.
pub fn dilate(p: &LatticePolytope, k: u64) -> Result<LatticePolytope> {
    if k == 0 {
        return Err(Error::InvalidArgument("dilation factor must be at least 1".into()));
    }
    let k = i64::try_from(k).map_err(|_| Error::Overflow("dilating"))?;
    let scale = |x: i64| x.checked_mul(k).ok_or(Error::Overflow("dilating"));
    let vertices = p
        .vertices
        .iter()
        .map(|v| v.iter().map(|&x| scale(x)).collect::<Result<Point>>())
        .collect::<Result<Vec<_>>>()?;
    let halfspaces = p
        .halfspaces()
        .map(|hs| {
            hs.iter()
                .map(|h| Ok(Halfspace { normal: h.normal.clone(), rhs: scale(h.rhs)? }))
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?;
    let family = match &p.family {
        Family::Dilation { base, factor } => Family::Dilation {
            base: base.clone(),
            factor: factor.checked_mul(k as u64).ok_or(Error::Overflow("dilating"))?,
        },
        _ => Family::Dilation { base: Box::new(p.clone()), factor: k as u64 },
    };
    Ok(LatticePolytope::tagged(p.dimension, vertices, halfspaces, family))
}

/// gcd of the absolute coordinates is 1. The zero vector is rejected.
pub fn is_primitive(v: &[i64]) -> Result<bool> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g == 0 {
        return Err(Error::InvalidArgument("the zero vector has no primitivity".into()));
    }
    Ok(g == 1)
}

/// Least common multiple of the right-hand sides of the irredundant
/// primitive H-representation.
pub fn index(p: &LatticePolytope) -> Result<u64> {
    let hs = p.halfspaces().ok_or(Error::MissingHalfspaces)?;
    if !p.origin_is_interior()? {
        return Err(Error::OriginNotInterior);
    }
    Ok(hs.iter().fold(1u64, |acc, h| acc.lcm(&(h.rhs as u64))))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledPolar {
    /// All vertices of `l P^*` have integer coordinates.
    pub is_lattice: bool,
    /// `l * u_i / l_i`, one per half-space, not deduplicated.
    pub vertices: Vec<Vec<Rational>>,
}

impl ScaledPolar {
    pub fn integer_vertices(&self) -> Option<Vec<Point>> {
        self.vertices
            .iter()
            .map(|v| {
                v.iter()
                    .map(|c| {
                        if c.is_integer() {
                            i64::try_from(c.to_integer()).ok()
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

/// Vertices of `l P^*`, where `P^* = {x : x.y <= 1 for all y in P}`.
pub fn polar_scaled(p: &LatticePolytope, l: u64) -> Result<ScaledPolar> {
    let hs = p.halfspaces().ok_or(Error::MissingHalfspaces)?;
    if !p.origin_is_interior()? {
        return Err(Error::OriginNotInterior);
    }
    let l = BigInt::from(l);
    let vertices: Vec<Vec<Rational>> = hs
        .iter()
        .map(|h| {
            h.normal
                .iter()
                .map(|&u| Rational::new(&l * u, BigInt::from(h.rhs)))
                .collect()
        })
        .collect();
    let is_lattice = vertices.iter().flatten().all(|c| c.denom().is_one());
    Ok(ScaledPolar { is_lattice, vertices })
}

/// The polar of a polytope whose scaled polar is a lattice polytope, as a
/// lattice polytope. Only the planar case is supported since the facets
/// of the polar come from a planar hull.
pub fn polar_polygon(p: &LatticePolytope, l: u64) -> Result<LatticePolytope> {
    if p.dimension != 2 {
        return Err(Error::InvalidArgument("polar_polygon needs a polygon".into()));
    }
    let polar = polar_scaled(p, l)?;
    let vertices = polar
        .integer_vertices()
        .ok_or_else(|| Error::Inconsistent(format!("{l} P^* is not a lattice polygon")))?;
    crate::hull::hull2d(&vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn cube_examples() {
        let c1 = cube(1).unwrap();
        assert_eq!(c1.vertices(), &[vec![-1], vec![1]]);
        let c2 = cube(2).unwrap();
        assert_eq!(c2.vertices().len(), 4);
        let hs = c2.halfspaces().unwrap();
        assert_eq!(hs.len(), 4);
        assert!(hs.iter().all(|h| h.rhs == 1));
        assert_eq!(cube(7).unwrap().vertices().len(), 128);
        assert!(cube(0).is_err());
        c2.validate().unwrap();
    }

    #[test]
    fn crosspolytope_examples() {
        let x1 = crosspolytope(1).unwrap();
        let mut v = x1.vertices().to_vec();
        v.sort();
        assert_eq!(v, cube(1).unwrap().vertices());
        let x2 = crosspolytope(2).unwrap();
        let mut normals: Vec<_> = x2.halfspaces().unwrap().iter().map(|h| h.normal.clone()).collect();
        normals.sort();
        assert_eq!(normals, vec![vec![-1, -1], vec![-1, 1], vec![1, -1], vec![1, 1]]);
        let x3 = crosspolytope(3).unwrap();
        assert_eq!(x3.vertices().len(), 6);
        assert_eq!(x3.halfspaces().unwrap().len(), 8);
        x3.validate().unwrap();
        assert!(crosspolytope(0).is_err());
    }

    #[test]
    fn families_have_expected_generators() {
        let p7 = pn_family(7).unwrap();
        assert_eq!(p7.vertices().len(), 88);
        assert_eq!(p7.dimension(), 7);
        assert!(p7.halfspaces().is_none());
        assert!(pn_family(1).is_err());

        let q2 = qn_family(2).unwrap();
        let mut v = q2.vertices().to_vec();
        v.sort();
        assert_eq!(v, vec![vec![-1, 0], vec![0, -1], vec![0, 1], vec![1, 0]]);
        let q3 = qn_family(3).unwrap();
        assert_eq!(q3.vertices().len(), 6);
        q3.validate().unwrap();
        assert_eq!(q3.halfspaces().unwrap().len(), 8);
        assert!(qn_family(1).is_err());
        assert_eq!(q3.family(), &Family::QnFamily { n: 3 });
    }

    #[test]
    fn families_are_centrally_symmetric() {
        for n in 2..=6 {
            assert!(pn_family(n).unwrap().is_centrally_symmetric());
            assert!(qn_family(n).unwrap().is_centrally_symmetric());
            assert!(cube(n).unwrap().is_centrally_symmetric());
            assert!(crosspolytope(n).unwrap().is_centrally_symmetric());
        }
    }

    #[test]
    fn family_halfspaces_are_primitive_and_tight() {
        let polys = [
            cube(4).unwrap(),
            crosspolytope(4).unwrap(),
            qn_family(5).unwrap(),
            product(&cube(2).unwrap(), &crosspolytope(2).unwrap()),
            dilate(&crosspolytope(3).unwrap(), 3).unwrap(),
            bipyramid(&crosspolytope(2).unwrap()).unwrap(),
        ];
        for p in &polys {
            p.validate().unwrap();
            for h in p.halfspaces().unwrap() {
                assert!(is_primitive(&h.normal).unwrap());
            }
        }
    }

    #[test]
    fn product_of_segments_is_square() {
        let c1 = cube(1).unwrap();
        let sq = product(&c1, &c1);
        let mut v = sq.vertices().to_vec();
        v.sort();
        assert_eq!(v, cube(2).unwrap().vertices());
        let mut hs = sq.halfspaces().unwrap().to_vec();
        hs.sort_by(|a, b| a.normal.cmp(&b.normal));
        let mut want = cube(2).unwrap().halfspaces().unwrap().to_vec();
        want.sort_by(|a, b| a.normal.cmp(&b.normal));
        assert_eq!(hs, want);

        let big = product(&pn_family(7).unwrap(), &cube(2).unwrap());
        assert_eq!(big.dimension(), 9);
        assert!(big.halfspaces().is_none());
    }

    #[test]
    fn dilation_examples() {
        let d = dilate(&cube(2).unwrap(), 3).unwrap();
        assert!(d.vertices().iter().all(|v| v.iter().all(|x| x.abs() == 3)));
        assert!(d.halfspaces().unwrap().iter().all(|h| h.rhs == 3));
        let d = dilate(&crosspolytope(2).unwrap(), 2).unwrap();
        let mut v = d.vertices().to_vec();
        v.sort();
        assert_eq!(v, vec![vec![-2, 0], vec![0, -2], vec![0, 2], vec![2, 0]]);
        assert!(dilate(&cube(2).unwrap(), 0).is_err());

        // 2 C_2: index 2, non-primitive vertices
        let d = dilate(&cube(2).unwrap(), 2).unwrap();
        assert_eq!(index(&d).unwrap(), 2);
        assert!(d.vertices().iter().all(|v| !is_primitive(v).unwrap()));

        let twice = dilate(&dilate(&cube(1).unwrap(), 2).unwrap(), 3).unwrap();
        assert!(matches!(twice.family(), Family::Dilation { factor: 6, .. }));
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive(&[2, 3]).unwrap());
        assert!(!is_primitive(&[2, 4]).unwrap());
        assert!(!is_primitive(&[0, 0, 5]).unwrap());
        assert!(is_primitive(&[0, -1]).unwrap());
        assert!(is_primitive(&[0, 0]).is_err());
    }

    #[test]
    fn index_examples() {
        assert_eq!(index(&cube(3).unwrap()).unwrap(), 1);
        assert_eq!(index(&pn_family(3).unwrap()), Err(Error::MissingHalfspaces));
        let off = LatticePolytope::new(
            1,
            vec![vec![0], vec![2]],
            Some(vec![Halfspace::new(vec![1], 2).unwrap(), Halfspace::new(vec![-1], 0).unwrap()]),
        )
        .unwrap();
        assert_eq!(index(&off), Err(Error::OriginNotInterior));
    }

    #[test]
    fn polar_of_cube_is_crosspolytope() {
        for n in 1..=5 {
            let polar = polar_scaled(&cube(n).unwrap(), 1).unwrap();
            assert!(polar.is_lattice);
            let mut got = polar.integer_vertices().unwrap();
            got.sort();
            let mut want = crosspolytope(n).unwrap().vertices().to_vec();
            want.sort();
            assert_eq!(got, want);
            // and back again
            let back = polar_scaled(&crosspolytope(n).unwrap(), 1).unwrap();
            let mut got = back.integer_vertices().unwrap();
            got.sort();
            assert_eq!(got, cube(n).unwrap().vertices());
        }
    }

    #[test]
    fn polar_of_non_reflexive_diamond() {
        let diamond = crate::hull::hull2d(&[vec![1, 0], vec![-1, 0], vec![0, 2], vec![0, -2]]).unwrap();
        let polar = polar_scaled(&diamond, 1).unwrap();
        assert!(!polar.is_lattice);
        assert!(polar.vertices.contains(&vec![rat(1, 1), rat(1, 2)]));
        assert_eq!(index(&diamond).unwrap(), 2);
        assert!(polar_scaled(&diamond, 2).unwrap().is_lattice);
    }

    #[test]
    fn json_round_trip() {
        let polys = [
            cube(3).unwrap(),
            pn_family(4).unwrap(),
            qn_family(3).unwrap(),
            product(&pn_family(3).unwrap(), &cube(1).unwrap()),
            dilate(&cube(2).unwrap(), 2).unwrap(),
            crate::hull::hull2d(&[vec![-1, -1], vec![-1, 2], vec![2, -1]]).unwrap(),
        ];
        for p in polys {
            let text = p.to_json();
            assert_eq!(LatticePolytope::from_json(&text).unwrap(), p);
        }
    }

    #[test]
    fn json_family_only() {
        let p = LatticePolytope::from_json(r#"{"dimension": 3, "family": {"tag": "Cube", "params": {"n": 3}}}"#)
            .unwrap();
        assert_eq!(p, cube(3).unwrap());
        let err = LatticePolytope::from_json(r#"{"dimension": 2, "family": {"tag": "Cube", "params": {"n": 3}}}"#)
            .unwrap_err();
        assert!(matches!(err, Error::Json(_)));
    }

    #[test]
    fn json_errors_name_the_field() {
        let err = LatticePolytope::from_json(r#"{"dimension": 2, "vertices": [[0, "x"]]}"#).unwrap_err();
        let Error::Json(msg) = err else { panic!("wrong error") };
        assert!(msg.contains("vertices[0][1]"), "{msg}");

        let err = LatticePolytope::from_json(
            r#"{"dimension": 1, "vertices": [[-1], [1]], "halfspaces": [{"normal": [2], "rhs": 2}]}"#,
        )
        .unwrap_err();
        assert!(format!("{err}").contains("primitive"));
    }
}
