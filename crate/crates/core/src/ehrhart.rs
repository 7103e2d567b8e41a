//! Ehrhart polynomials: interpolation from exact counts, the product
//! convolution, the closed form for the bipyramids `Q_n`, and the edge-sum
//! formula for the linear coefficient of a polygon.

use num_bigint::BigUint;
use num_traits::{One, Pow, Signed, Zero};
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{bernoulli, bernoulli_magnitude_bounds, binomial, int, Rational};
use crate::error::{Error, Result};
use crate::hull::edge_lattice_lengths;
use crate::poly::Polynomial;
use crate::polytope::LatticePolytope;

/// `k -> LE(kP)` as a polynomial of degree `dim P`, constant term 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "EhrhartRepr", into = "EhrhartRepr")]
pub struct EhrhartPolynomial {
    dimension: usize,
    poly: Polynomial,
}

impl EhrhartPolynomial {
    /// Wrap a polynomial after checking degree, constant term and sign of
    /// the leading coefficient.
    pub fn new(dimension: usize, poly: Polynomial) -> Result<Self> {
        if poly.degree() != Some(dimension) {
            return Err(Error::DegreeMismatch { expected: dimension, got: poly.degree() });
        }
        let c0 = poly.coeff(0);
        if !c0.is_one() {
            return Err(Error::ConstantTerm(c0.to_string()));
        }
        if !poly.leading().is_some_and(|c| c.is_positive()) {
            return Err(Error::Inconsistent("leading coefficient (volume) must be positive".into()));
        }
        Ok(EhrhartPolynomial { dimension, poly })
    }

    pub fn from_coefficients(coefficients: Vec<Rational>) -> Result<Self> {
        let dimension = coefficients.len().saturating_sub(1);
        Self::new(dimension, Polynomial::new(coefficients))
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    /// `lE_i`, zero past the degree.
    pub fn coefficient(&self, i: usize) -> Rational {
        self.poly.coeff(i)
    }

    pub fn coefficients(&self) -> &[Rational] {
        self.poly.coeffs()
    }

    pub fn volume(&self) -> Rational {
        self.coefficient(self.dimension)
    }

    /// `LE(P)`, the value at `k = 1`.
    pub fn lattice_points(&self) -> Rational {
        self.coefficients().iter().sum()
    }

    pub fn eval(&self, k: u64) -> Rational {
        self.poly.eval(&int(k))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ehrhart polynomials always serialize")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EhrhartRepr {
    dimension: usize,
    coefficients: Vec<String>,
}

impl From<EhrhartPolynomial> for EhrhartRepr {
    fn from(e: EhrhartPolynomial) -> Self {
        EhrhartRepr {
            dimension: e.dimension,
            coefficients: (0..=e.dimension).map(|i| e.coefficient(i).to_string()).collect(),
        }
    }
}

impl TryFrom<EhrhartRepr> for EhrhartPolynomial {
    type Error = Error;

    fn try_from(r: EhrhartRepr) -> Result<Self> {
        let coeffs = r
            .coefficients
            .iter()
            .map(|s| s.parse::<Rational>().map_err(|_| Error::Json(format!("`{s}` is not a fraction"))))
            .collect::<Result<Vec<_>>>()?;
        if coeffs.len() != r.dimension + 1 {
            return Err(Error::Json(format!(
                "dimension {} needs {} coefficients, got {}",
                r.dimension,
                r.dimension + 1,
                coeffs.len()
            )));
        }
        EhrhartPolynomial::new(r.dimension, Polynomial::new(coeffs))
    }
}

/// Interpolate `LE(kP)` through `k = 0..=n`. The degree and constant term
/// are checked: a mismatch means the counter is wrong.
pub fn ehrhart_of<F>(p: &LatticePolytope, counter: F) -> Result<EhrhartPolynomial>
where
    F: Fn(u64) -> Result<BigUint> + Sync,
{
    let n = p.dimension();
    let nodes: Vec<u64> = (0..=n as u64).collect();
    #[cfg(feature = "parallel")]
    let counts: Vec<BigUint> = nodes.par_iter().map(|&k| counter(k)).collect::<Result<_>>()?;
    #[cfg(not(feature = "parallel"))]
    let counts: Vec<BigUint> = nodes.iter().map(|&k| counter(k)).collect::<Result<_>>()?;
    let points: Vec<(Rational, Rational)> = nodes
        .iter()
        .zip(counts)
        .map(|(&k, c)| (int(k), Rational::from_integer(c.into())))
        .collect();
    let poly = Polynomial::interpolate(&points)?;
    EhrhartPolynomial::new(n, poly)
}

/// `lE_j(P x Q) = sum_i lE_i(P) lE_{j-i}(Q)`.
pub fn product_coefficients(p: &EhrhartPolynomial, q: &EhrhartPolynomial) -> EhrhartPolynomial {
    EhrhartPolynomial { dimension: p.dimension + q.dimension, poly: &p.poly * &q.poly }
}

/// All Ehrhart coefficients of `Q_n` from
/// `lE_i = C(n-1,i) 2^i + (2/n) sum_{j=i-1}^{n-1} C(n,j+1) 2^j C(j+1,i) B_{j-i+1}`.
pub fn qn_coefficients(n: usize) -> Result<EhrhartPolynomial> {
    if n < 2 {
        return Err(Error::InvalidArgument("Q_n needs n >= 2".into()));
    }
    let nn = n as u64;
    let two_over_n = Rational::new(2.into(), nn.into());
    let mut coeffs = vec![Rational::one()];
    for i in 1..=n {
        let iu = i as u64;
        let mut sum = Rational::zero();
        for j in i - 1..n {
            let ju = j as u64;
            let c = binomial(nn, ju + 1) * Pow::pow(num_bigint::BigInt::from(2), j) * binomial(ju + 1, iu);
            sum += Rational::from_integer(c) * bernoulli(j + 1 - i);
        }
        let head = Rational::from_integer(binomial(nn - 1, iu) * Pow::pow(num_bigint::BigInt::from(2), i));
        coeffs.push(head + &two_over_n * sum);
    }
    EhrhartPolynomial::from_coefficients(coeffs)
}

/// `lE_1(Q_n) = 2(n-1) + (4 - 2^n) B_{n-1}`.
pub fn qn_first_coefficient(n: usize) -> Result<Rational> {
    if n < 2 {
        return Err(Error::InvalidArgument("Q_n needs n >= 2".into()));
    }
    let two_n = Pow::pow(num_bigint::BigInt::from(2), n);
    Ok(int(2 * (n as u64 - 1)) + Rational::from_integer(num_bigint::BigInt::from(4) - two_n) * bernoulli(n - 1))
}

/// Finite form of the growth of `lE_1(Q_{2k+1})`: with `n = 2k + 1`,
/// `(-1)^k lE_1(Q_n) = (-1)^k 4k + (2^{2k+1} - 4) |B_{2k}|`, so it must lie
/// strictly between the values obtained from the two magnitude bounds on
/// `|B_{2k}|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthCheck {
    pub k: usize,
    pub value: Rational,
    pub lower: Rational,
    pub upper: Rational,
    pub holds: bool,
}

pub fn qn_growth_bounds(k: usize) -> Result<GrowthCheck> {
    if k < 1 {
        return Err(Error::InvalidArgument("growth check needs k >= 1".into()));
    }
    let n = 2 * k + 1;
    let sign = if k.is_multiple_of(2) { int(1) } else { int(-1) };
    let value = &sign * qn_first_coefficient(n)?;
    let (b_lo, b_hi) = bernoulli_magnitude_bounds(k);
    let weight = Rational::from_integer(Pow::pow(num_bigint::BigInt::from(2), n) - 4);
    let offset = &sign * int(4 * k as u64);
    let lower = &offset + &weight * b_lo;
    let upper = &offset + &weight * b_hi;
    let holds = lower < value && value < upper;
    Ok(GrowthCheck { k, value, lower, upper, holds })
}

/// True iff `(-1)^k lE_1(Q_{2k+1})` is strictly inside its Bernoulli bounds.
pub fn qn_growth_check(k: usize) -> Result<bool> {
    Ok(qn_growth_bounds(k)?.holds)
}

/// `lE_{n-1}` of a polygon as half the sum of the lattice lengths of its
/// edges. Only dimension 2 is supported.
pub fn second_coefficient_from_facets(p: &LatticePolytope) -> Result<Rational> {
    if p.dimension() != 2 {
        return Err(Error::InvalidArgument(format!(
            "facet formula implemented for polygons only, got dimension {}",
            p.dimension()
        )));
    }
    let total: u64 = edge_lattice_lengths(p)?.iter().sum();
    Ok(Rational::new(total.into(), 2.into()))
}

/// `2^i C(n, i)`, the coefficients of `(2k+1)^n`.
pub fn cube_coefficient(n: usize, i: usize) -> Rational {
    Rational::from_integer(binomial(n as u64, i as u64) * Pow::pow(num_bigint::BigInt::from(2), i))
}
