//! Exact arithmetic helpers: binomials, Bernoulli numbers, power sums and
//! elementary symmetric functions over arbitrary-precision rationals.
//!
//! Bernoulli numbers follow the convention `B_1 = -1/2`. This is the one
//! that makes `sum_{j=0}^{k-1} j^i = 1/(i+1) * sum_{j=1}^{i+1} C(i+1,j) B_{i+1-j} k^j`
//! hold; the `B_1 = +1/2` convention corrupts every bipyramid coefficient.

use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `n / d` as a canonical rational.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // exact at every step: acc = C(n, i+1) after the division
        acc = acc * (n - i) / (i + 1);
    }
    acc.into()
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

fn bernoulli_table() -> &'static Mutex<Vec<Rational>> {
    static TABLE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![Rational::one()]))
}

/// The `j`-th Bernoulli number with `B_1 = -1/2`, from the recurrence
/// `sum_{m=0}^{j} C(j+1, m) B_m = 0`. Memoized process-wide.
pub fn bernoulli(j: usize) -> Rational {
    let mut table = bernoulli_table().lock().unwrap_or_else(|e| e.into_inner());
    while table.len() <= j {
        let next = table.len();
        let sum = table
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (m, b)| {
                acc + Rational::from_integer(binomial(next as u64 + 1, m as u64)) * b
            });
        table.push(-sum / int(next as u64 + 1));
    }
    table[j].clone()
}

/// `sum_{j=0}^{k-1} j^i` through Faulhaber's closed form.
pub fn faulhaber_sum(i: usize, k: u64) -> Rational {
    let k = int(k);
    let mut acc = Rational::zero();
    let mut k_pow = Rational::one();
    for j in 1..=i + 1 {
        k_pow *= &k;
        let c = Rational::from_integer(binomial(i as u64 + 1, j as u64));
        acc += c * bernoulli(i + 1 - j) * &k_pow;
    }
    acc / int(i as u64 + 1)
}

/// `sigma_j(values)`, the `j`-th elementary symmetric polynomial.
pub fn elementary_symmetric(values: &[Rational], j: usize) -> Result<Rational> {
    if j > values.len() {
        return Err(Error::InvalidArgument(format!(
            "sigma_{j} needs at least {j} values, got {}",
            values.len()
        )));
    }
    // e[d] = sigma_d of the prefix processed so far
    let mut e = vec![Rational::zero(); j + 1];
    e[0] = Rational::one();
    for v in values {
        for d in (1..=j).rev() {
            let term = &e[d - 1] * v;
            e[d] += term;
        }
    }
    Ok(e.swap_remove(j))
}

/// Rational enclosure of pi used by [`bernoulli_magnitude_bounds`].
pub fn pi_enclosure() -> (Rational, Rational) {
    let scale = BigInt::from(10u64).pow(14u32);
    (
        Rational::new(BigInt::from(314_159_265_358_979u64), scale.clone()),
        Rational::new(BigInt::from(314_159_265_358_980u64), scale),
    )
}

/// Directed rational versions of
/// `2(2j)!/(2pi)^{2j} < |B_{2j}| < 2(2j)!/(2pi)^{2j} / (1 - 2^{1-2j})`.
///
/// The lower value uses the upper end of the pi enclosure and vice versa, so
/// the returned pair is at least as wide as the exact bounds.
///
/// Panics if `j == 0`.
pub fn bernoulli_magnitude_bounds(j: usize) -> (Rational, Rational) {
    assert!(j >= 1, "magnitude bounds start at j = 1");
    let (pi_lo, pi_hi) = pi_enclosure();
    let two_j = 2 * j as u64;
    let numer = int(2) * Rational::from_integer(factorial(two_j));
    let lower = &numer / (int(2) * pi_hi).pow(two_j as i32);
    let base = &numer / (int(2) * pi_lo).pow(two_j as i32);
    let shrink = Rational::one() - Rational::new(BigInt::one(), BigInt::from(2).pow(two_j as u32 - 1));
    (lower, base / shrink)
}

/// `|B_{2j}|` sign convention helper: `(-1)^{j+1} B_{2j}`.
pub fn signed_even_bernoulli(j: usize) -> Rational {
    let b = bernoulli(2 * j);
    if j % 2 == 1 {
        b
    } else {
        -b
    }
}

/// Serde adapter writing rationals as `"p/q"` strings (`"p"` for integers).
pub mod fraction {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        text.parse()
            .map_err(|_| D::Error::custom(format!("`{text}` is not a fraction")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use proptest::prelude::*;

    fn pascal(n: usize, k: usize) -> u128 {
        let mut row = vec![1u128];
        for _ in 0..n {
            let mut next = vec![1u128; row.len() + 1];
            for i in 1..row.len() {
                next[i] = row[i - 1] + row[i];
            }
            row = next;
        }
        row.get(k).copied().unwrap_or(0)
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(7, 1), BigInt::from(7));
        assert_eq!(binomial(11, 3), BigInt::from(pascal(11, 3)));
        assert_eq!(binomial(11, 3), BigInt::from(165));
        assert_eq!(binomial(3, 5), BigInt::zero());
        for n in 0..40 {
            for k in 0..=n + 1 {
                assert_eq!(binomial(n as u64, k as u64), BigInt::from(pascal(n, k)));
            }
        }
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), int(0));
        assert_eq!(bernoulli(8), rat(-1, 30));
        assert_eq!(bernoulli(10), rat(5, 66));
        assert_eq!(bernoulli(12), rat(-691, 2730));
        for j in (3..=31).step_by(2) {
            assert!(bernoulli(j).is_zero(), "B_{j} should vanish");
        }
    }

    #[test]
    fn bernoulli_is_thread_safe() {
        let handles: Vec<_> = (0..8)
            .map(|t| std::thread::spawn(move || bernoulli(20 + t)))
            .collect();
        let got: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert_eq!(got[0], rat(-174611, 330));
    }

    #[test]
    fn faulhaber_examples() {
        assert_eq!(faulhaber_sum(1, 4), int(6));
        assert_eq!(faulhaber_sum(0, 7), int(7));
        assert_eq!(faulhaber_sum(0, 0), int(0));
        let direct: u64 = (0..10u64).map(|j| j.pow(5)).sum();
        assert_eq!(direct, 120825);
        assert_eq!(faulhaber_sum(5, 10), int(120825));
    }

    #[test]
    fn faulhaber_matches_direct_summation() {
        for i in 0..=8u32 {
            for k in 0..=50u64 {
                let direct: BigInt = (0..k).map(|j| BigInt::from(j).pow(i)).sum();
                assert_eq!(faulhaber_sum(i as usize, k), Rational::from_integer(direct));
            }
        }
    }

    #[test]
    fn elementary_symmetric_examples() {
        assert_eq!(elementary_symmetric(&[int(9)], 0).unwrap(), int(1));
        assert_eq!(elementary_symmetric(&[int(1), int(2), int(3)], 2).unwrap(), int(11));
        assert_eq!(elementary_symmetric(&[int(2), int(5)], 2).unwrap(), int(10));
        assert!(elementary_symmetric(&[int(2)], 2).is_err());
    }

    #[test]
    fn elementary_symmetric_matches_expansion() {
        // prod (t + v_i) = sum_j sigma_{n-j} t^j
        let vals = [rat(1, 2), int(-3), rat(5, 7), int(4)];
        let mut prod = vec![int(1)];
        for v in &vals {
            let mut next = vec![int(0); prod.len() + 1];
            for (i, c) in prod.iter().enumerate() {
                next[i] += c * v;
                next[i + 1] += c;
            }
            prod = next;
        }
        for j in 0..=vals.len() {
            assert_eq!(elementary_symmetric(&vals, j).unwrap(), prod[vals.len() - j]);
        }
    }

    #[test]
    fn magnitude_bounds_bracket_even_bernoulli() {
        for j in 1..=15 {
            let (lo, hi) = bernoulli_magnitude_bounds(j);
            let b = signed_even_bernoulli(j);
            assert!(lo < b && b < hi, "j={j}");
        }
        let (lo, hi) = bernoulli_magnitude_bounds(1);
        assert!(lo < rat(1, 6) && rat(1, 6) < hi);
        let (lo, hi) = bernoulli_magnitude_bounds(4);
        assert!(lo < rat(1, 30) && rat(1, 30) < hi);
    }

    proptest! {
        #[test]
        fn rational_ops_stay_canonical(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let x = rat(a, b);
            let y = rat(c, d);
            for r in [&x + &y, &x * &y, &x - &y] {
                prop_assert!(r.denom().is_positive());
                prop_assert!(num_integer::Integer::gcd(r.numer(), r.denom()).is_one());
            }
        }
    }
}
