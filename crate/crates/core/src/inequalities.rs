//! Exact coefficient inequalities: the Wills bounds `lE_i <= 2^i C(n,i)`,
//! the three inequalities for polytopes whose Ehrhart roots share the real
//! part `-1/a`, and two root-free necessary conditions.
//!
//! None of the inequality checks verifies its hypothesis; they are plain
//! evaluations, meaningful as diagnostics either way.

use num_traits::{One, Pow, Signed, Zero};
use serde::Serialize;

use crate::arith::{binomial, fraction, int, Rational};
use crate::ehrhart::{cube_coefficient, EhrhartPolynomial};
use crate::error::{Error, Result};
use crate::roots::RootSet;

/// `lhs <= rhs`, evaluated exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    #[serde(with = "fraction")]
    pub lhs: Rational,
    #[serde(with = "fraction")]
    pub rhs: Rational,
    pub holds: bool,
    pub is_equality: bool,
}

impl Comparison {
    pub fn new(lhs: Rational, rhs: Rational) -> Self {
        let holds = lhs <= rhs;
        let is_equality = lhs == rhs;
        Comparison { lhs, rhs, holds, is_equality }
    }

    pub fn is_strict(&self) -> bool {
        self.holds && !self.is_equality
    }
}

/// `q(t) = LE(t - 1/a)` satisfies `q(-t) = (-1)^n q(t)`.
///
/// If every root has real part `-1/a`, the roots of `q` are symmetric about
/// the origin and this parity follows. The converse fails (the exceptional
/// triangle passes with `a = 2`), so a `true` here is necessary only.
pub fn parity_necessary_check(ehr: &EhrhartPolynomial, a: &Rational) -> bool {
    assert!(a.is_positive(), "a must be positive");
    let n = ehr.dimension();
    let q = ehr.poly().shift(&-(Rational::one() / a));
    q.coeffs()
        .iter()
        .enumerate()
        .all(|(i, c)| (n - i).is_multiple_of(2) || c.is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WillsIndex {
    pub i: usize,
    #[serde(with = "fraction")]
    pub coefficient: Rational,
    #[serde(with = "fraction")]
    pub bound: Rational,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WillsVerdict {
    pub dimension: usize,
    pub per_index: Vec<WillsIndex>,
    pub overall: bool,
}

impl WillsVerdict {
    pub fn violations(&self) -> Vec<usize> {
        self.per_index.iter().filter(|w| !w.holds).map(|w| w.i).collect()
    }

    pub fn all_equal(&self) -> bool {
        self.per_index.iter().all(|w| w.coefficient == w.bound)
    }
}

/// Compare every coefficient with the cube's, `lE_i(C_n) = 2^i C(n, i)`.
pub fn wills_check(ehr: &EhrhartPolynomial) -> WillsVerdict {
    let n = ehr.dimension();
    let per_index: Vec<WillsIndex> = (0..=n)
        .map(|i| {
            let coefficient = ehr.coefficient(i);
            let bound = cube_coefficient(n, i);
            let holds = coefficient <= bound;
            WillsIndex { i, coefficient, bound, holds }
        })
        .collect();
    let overall = per_index.iter().all(|w| w.holds);
    WillsVerdict { dimension: n, per_index, overall }
}

/// `lE_t / lE_s <= a^{t-s} C(n,t) / C(n,s)` for `0 <= s < t <= n`.
pub fn thm31_ratio_check(ehr: &EhrhartPolynomial, a: &Rational, s: usize, t: usize) -> Result<Comparison> {
    let n = ehr.dimension();
    if !(s < t && t <= n) {
        return Err(Error::InvalidArgument(format!("need 0 <= s < t <= {n}, got s={s}, t={t}")));
    }
    let low = ehr.coefficient(s);
    if low.is_zero() {
        return Err(Error::ZeroCoefficient(s));
    }
    let lhs = ehr.coefficient(t) / low;
    let rhs = Pow::pow(a, (t - s) as u32)
        * Rational::new(binomial(n as u64, t as u64), binomial(n as u64, s as u64));
    Ok(Comparison::new(lhs, rhs))
}

/// `vol(P) <= (a / (a + 1))^n LE(P)`.
pub fn thm31_volume_bound(ehr: &EhrhartPolynomial, a: &Rational) -> Comparison {
    let n = ehr.dimension() as u32;
    let ratio = a / (a + Rational::one());
    Comparison::new(ehr.volume(), Pow::pow(ratio, n) * ehr.lattice_points())
}

/// `LE(P) <= (a+1)^{n-2} (a+2) / a^{n-1} vol(P) + (a+1)^{n-2}` for `n >= 2`.
pub fn thm31_upper_bound(ehr: &EhrhartPolynomial, a: &Rational) -> Result<Comparison> {
    let n = ehr.dimension();
    if n < 2 {
        return Err(Error::InvalidArgument(format!("upper bound needs dimension >= 2, got {n}")));
    }
    let a1 = Pow::pow(a + Rational::one(), (n - 2) as u32);
    let slope = &a1 * (a + int(2)) / Pow::pow(a, (n - 1) as u32);
    Ok(Comparison::new(ehr.lattice_points(), slope * ehr.volume() + a1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioEntry {
    pub s: usize,
    pub t: usize,
    #[serde(flatten)]
    pub verdict: Comparison,
}

/// The whole inequality family for one polynomial and one `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thm31Suite {
    #[serde(with = "fraction")]
    pub a: Rational,
    pub ratios: Vec<RatioEntry>,
    pub volume: Comparison,
    pub upper: Option<Comparison>,
}

impl Thm31Suite {
    pub fn all_hold(&self) -> bool {
        self.ratios.iter().all(|r| r.verdict.holds)
            && self.volume.holds
            && self.upper.as_ref().is_none_or(|u| u.holds)
    }

    pub fn equality_pairs(&self) -> Vec<(usize, usize)> {
        self.ratios
            .iter()
            .filter(|r| r.verdict.is_equality)
            .map(|r| (r.s, r.t))
            .collect()
    }
}

pub fn thm31_suite(ehr: &EhrhartPolynomial, a: &Rational) -> Result<Thm31Suite> {
    let n = ehr.dimension();
    let mut ratios = Vec::new();
    for t in 1..=n {
        for s in 0..t {
            ratios.push(RatioEntry { s, t, verdict: thm31_ratio_check(ehr, a, s, t)? });
        }
    }
    let upper = if n >= 2 { Some(thm31_upper_bound(ehr, a)?) } else { None };
    Ok(Thm31Suite { a: a.clone(), ratios, volume: thm31_volume_bound(ehr, a), upper })
}

/// `lE_{n-1} / lE_n` equals the sum of the `gamma_i`, i.e. the
/// second-highest coefficient of the monic normalization. Exact.
pub fn gamma_sum_identity_check(ehr: &EhrhartPolynomial) -> bool {
    let n = ehr.dimension();
    if n == 0 {
        return false;
    }
    let ratio = ehr.coefficient(n - 1) / ehr.volume();
    ratio == ehr.poly().monic().coeff(n - 1)
}

/// Numeric side of the same identity: `lE_{n-1} / lE_n` against minus the
/// sum of the computed roots, relative tolerance `tol`.
pub fn gamma_sum_matches_roots(ehr: &EhrhartPolynomial, rs: &RootSet, tol: f64) -> bool {
    use num_traits::ToPrimitive;
    let n = ehr.dimension();
    if n == 0 {
        return false;
    }
    let ratio = (ehr.coefficient(n - 1) / ehr.volume()).to_f64().unwrap_or(f64::NAN);
    let sum = -rs.sum();
    (sum.re - ratio).abs() <= tol * (1.0 + ratio.abs()) && sum.im.abs() <= tol * (1.0 + ratio.abs())
}
