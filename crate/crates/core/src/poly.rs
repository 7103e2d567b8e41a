//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::{binomial, int, Rational};
use crate::error::{Error, Result};

/// Coefficient `i` multiplies `t^i`. Trailing zeros are never stored, so the
/// zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `(t - root)`
    pub fn linear_root(root: Rational) -> Self {
        Self::new(vec![-root, Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lead) => self.scale(&(Rational::one() / lead)),
            None => Self::zero(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as u64))
                .collect(),
        )
    }

    /// `q(t) = p(t + c)`.
    pub fn shift(&self, c: &Rational) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        // p(t+c) = sum_i a_i sum_m C(i,m) c^{i-m} t^m
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut c_pow = Rational::one();
            for m in (0..=i).rev() {
                out[m] += a * Rational::from_integer(binomial(i as u64, m as u64)) * &c_pow;
                c_pow *= c;
            }
        }
        Self::new(out)
    }

    /// `p(-t)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Euclidean division, `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::InvalidArgument("division by the zero polynomial".into()))?;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dd] / &lead;
            if !q.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * d;
                }
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Monic greatest common divisor; zero only if both inputs are zero.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("divisor is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's square-free decomposition of a nonconstant polynomial: returns
    /// `(multiplicity, factor)` pairs with monic, pairwise coprime,
    /// square-free factors whose product (with multiplicities, times the
    /// leading coefficient) is `self`.
    pub fn squarefree_decomposition(&self) -> Vec<(usize, Polynomial)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.div_rem(&a).expect("gcd is nonzero").0;
        let mut c = df.div_rem(&a).expect("gcd is nonzero").0;
        let mut mult = 1;
        loop {
            let d = &c - &b.derivative();
            if b.degree() == Some(0) {
                break;
            }
            a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((mult, a.clone()));
            }
            b = b.div_rem(&a).expect("gcd is nonzero").0;
            c = d.div_rem(&a).expect("gcd is nonzero").0;
            mult += 1;
        }
        out
    }

    /// Newton-form interpolation through `points`, exact.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Polynomial> {
        if points.is_empty() {
            return Err(Error::InvalidArgument("interpolation needs at least one point".into()));
        }
        for (i, (x, _)) in points.iter().enumerate() {
            if points[..i].iter().any(|(y, _)| y == x) {
                return Err(Error::DuplicateAbscissa(x.to_string()));
            }
        }
        let n = points.len();
        // divided differences in place
        let mut dd: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (&points[i].0 - &points[i - level].0);
            }
        }
        let mut acc = Polynomial::constant(dd[n - 1].clone());
        for i in (0..n - 1).rev() {
            acc = &(&acc * &Polynomial::linear_root(points[i].0.clone()))
                + &Polynomial::constant(dd[i].clone());
        }
        Ok(acc)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*k")?,
                _ => write!(f, "{mag}*k^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    fn pts(v: &[(i64, i64)]) -> Vec<(Rational, Rational)> {
        v.iter().map(|&(x, y)| (int(x), int(y))).collect()
    }

    #[test]
    fn interpolation_examples() {
        let p = Polynomial::interpolate(&pts(&[(0, 1), (1, 3)])).unwrap();
        assert_eq!(p, Polynomial::from_ints(&[1, 2]));
        let p = Polynomial::interpolate(&pts(&[(0, 1), (1, 9), (2, 25)])).unwrap();
        assert_eq!(p, Polynomial::from_ints(&[1, 4, 4]));
        // LE(k Q_3) = (2k+1)^2 + 2 sum_{j<k} (2j+1)^2 at k = 0..3
        let p = Polynomial::interpolate(&pts(&[(0, 1), (1, 11), (2, 45), (3, 119)])).unwrap();
        assert_eq!(
            p,
            Polynomial::new(vec![int(1), rat(10, 3), int(4), rat(8, 3)])
        );
    }

    #[test]
    fn duplicate_abscissae_rejected() {
        let err = Polynomial::interpolate(&pts(&[(0, 1), (0, 2)])).unwrap_err();
        assert!(matches!(err, Error::DuplicateAbscissa(_)));
        assert!(Polynomial::interpolate(&[]).is_err());
    }

    #[test]
    fn shift_examples() {
        let p = Polynomial::from_ints(&[1, 2]);
        assert_eq!(p.shift(&rat(-1, 2)), Polynomial::from_ints(&[0, 2]));
        let sq = Polynomial::from_ints(&[0, 0, 1]);
        assert_eq!(sq.shift(&int(1)), Polynomial::from_ints(&[1, 2, 1]));
    }

    #[test]
    fn div_rem_and_gcd() {
        // (t-1)(t-2)^2 and (t-2)(t+3)
        let a = &(&Polynomial::linear_root(int(1)) * &Polynomial::linear_root(int(2)))
            * &Polynomial::linear_root(int(2));
        let b = &Polynomial::linear_root(int(2)) * &Polynomial::linear_root(int(-3));
        assert_eq!(a.gcd(&b), Polynomial::linear_root(int(2)));
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn squarefree_of_cube_power() {
        // (2k+1)^5
        let base = Polynomial::from_ints(&[1, 2]);
        let mut p = Polynomial::constant(int(1));
        for _ in 0..5 {
            p = &p * &base;
        }
        let parts = p.squarefree_decomposition();
        assert_eq!(parts, vec![(5, Polynomial::linear_root(rat(-1, 2)))]);

        // (t-1) (t+2)^2 (t^2+1)^3
        let q = &(&Polynomial::linear_root(int(1))
            * &(&Polynomial::linear_root(int(-2)) * &Polynomial::linear_root(int(-2))))
            * &{
                let s = Polynomial::from_ints(&[1, 0, 1]);
                &(&s * &s) * &s
            };
        let parts = q.squarefree_decomposition();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0], (1, Polynomial::linear_root(int(1))));
        assert_eq!(parts[1], (2, Polynomial::linear_root(int(-2))));
        assert_eq!(parts[2], (3, Polynomial::from_ints(&[1, 0, 1])));
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((-20i64..20, 1i64..6), 0..7)
            .prop_map(|v| Polynomial::new(v.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn shift_round_trip(p in small_poly(), n in -9i64..9, d in 1i64..5) {
            let c = rat(n, d);
            prop_assert_eq!(p.shift(&c).shift(&-&c), p.clone());
            let t = rat(3, 7);
            prop_assert_eq!(p.shift(&c).eval(&t), p.eval(&(&t + &c)));
        }

        #[test]
        fn interpolation_is_exact(ys in prop::collection::vec((-50i64..50, 1i64..4), 1..9)) {
            let points: Vec<_> = ys
                .iter()
                .enumerate()
                .map(|(i, &(n, d))| (rat(2 * i as i64 - 3, 2), rat(n, d)))
                .collect();
            let p = Polynomial::interpolate(&points).unwrap();
            prop_assert!(p.degree().is_none_or(|d| d < points.len()));
            for (x, y) in &points {
                prop_assert_eq!(&p.eval(x), y);
            }
        }
    }
}
