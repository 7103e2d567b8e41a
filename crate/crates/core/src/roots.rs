//! Complex roots of Ehrhart polynomials.
//!
//! The exact polynomial is first split into square-free factors over the
//! rationals, so repeated roots such as the `n`-fold root `-1/2` of
//! `(2k+1)^n` come out exactly instead of as a cluster of radius
//! `eps^(1/n)`. Each factor is then solved by Aberth-Ehrlich iteration in
//! `f64` and polished with Newton steps.

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Target residual on monic polynomials of the degrees seen here.
pub const RESIDUAL_TARGET: f64 = 1e-10;
/// Default tolerance for real-part comparisons.
pub const DEFAULT_REAL_PART_TOL: f64 = 1e-7;
/// Slack added to the Braun radius.
pub const BRAUN_TOL: f64 = 1e-9;

const MAX_ITERATIONS: usize = 2000;

#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    /// Largest `|p(z)|` over the returned roots, `p` monic.
    pub residual_bound: f64,
    pub source_degree: usize,
}

impl RootSet {
    pub fn real_parts(&self) -> impl Iterator<Item = f64> + '_ {
        self.roots.iter().map(|z| z.re)
    }

    pub fn sum(&self) -> Complex64 {
        self.roots.iter().sum()
    }

    pub fn product(&self) -> Complex64 {
        self.roots.iter().product()
    }

    /// Every root with `|im| > tol` has a conjugate partner in the set.
    pub fn is_conjugate_closed(&self, tol: f64) -> bool {
        self.roots.iter().all(|z| {
            z.im.abs() <= tol || self.roots.iter().any(|w| (w - z.conj()).norm() <= tol)
        })
    }

    /// Number of roots with `|im| > tol`, halved.
    pub fn nonreal_pairs(&self, tol: f64) -> usize {
        self.roots.iter().filter(|z| z.im > tol).count()
    }
}

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

fn quadratic(c0: f64, c1: f64) -> [Complex64; 2] {
    // t^2 + c1 t + c0
    let disc = c1 * c1 - 4.0 * c0;
    if disc >= 0.0 {
        let s = disc.sqrt();
        let q = -0.5 * (c1 + c1.signum() * s);
        let q = if q == 0.0 { -0.5 * s } else { q };
        let r1 = if q != 0.0 { c0 / q } else { 0.0 };
        [Complex64::new(q.min(r1), 0.0), Complex64::new(q.max(r1), 0.0)]
    } else {
        let re = -0.5 * c1;
        let im = 0.5 * (-disc).sqrt();
        [Complex64::new(re, -im), Complex64::new(re, im)]
    }
}

/// Aberth-Ehrlich on a monic polynomial given by `f64` coefficients.
fn aberth(coeffs: &[f64]) -> Vec<Complex64> {
    let d = coeffs.len() - 1;
    let cz: Vec<Complex64> = coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect();
    // Fujiwara bound on root moduli
    let radius = (0..d)
        .map(|i| {
            let c = coeffs[i].abs();
            let c = if i == 0 { c / 2.0 } else { c };
            c.powf(1.0 / (d - i) as f64)
        })
        .fold(0.0f64, f64::max)
        * 2.0;
    let center = -coeffs[d - 1] / d as f64;
    let mut z: Vec<Complex64> = (0..d)
        .map(|j| {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / d as f64 + 0.4;
            Complex64::new(center, 0.0) + Complex64::from_polar(radius.max(1e-3), theta)
        })
        .collect();
    for _ in 0..MAX_ITERATIONS {
        let mut moved = 0.0f64;
        for i in 0..d {
            let (p, dp) = horner(&cz, z[i]);
            if p.is_zero() {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..d)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                moved = moved.max(step.norm() / (1.0 + z[i].norm()));
            }
        }
        if moved < 1e-16 {
            break;
        }
    }
    // Newton polish, keeping a step only when it lowers the residual
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = horner(&cz, *zi);
            let next = *zi - p / dp;
            if next.is_finite() && horner(&cz, next).0.norm() < p.norm() {
                *zi = next;
            } else {
                break;
            }
        }
    }
    z
}

fn solve_squarefree(factor: &Polynomial) -> Vec<Complex64> {
    let f = factor.monic();
    let coeffs: Vec<f64> = f.coeffs().iter().map(to_f64).collect();
    match coeffs.len() - 1 {
        1 => vec![Complex64::new(-coeffs[0], 0.0)],
        2 => quadratic(coeffs[0], coeffs[1]).to_vec(),
        _ => aberth(&coeffs),
    }
}

/// Snap near-real roots to the real axis and make the nonreal ones an exact
/// conjugate-symmetric set. Roots of a square-free real factor are simple,
/// so pairing by nearest conjugate is unambiguous at these degrees.
fn symmetrize(mut roots: Vec<Complex64>) -> Vec<Complex64> {
    let scale = roots.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let snap = 1e-12 * scale;
    for z in roots.iter_mut() {
        if z.im.abs() <= snap {
            z.im = 0.0;
        }
    }
    let (upper, lower): (Vec<_>, Vec<_>) = roots.iter().filter(|z| z.im != 0.0).partition(|z| z.im > 0.0);
    if upper.len() != lower.len() {
        return roots;
    }
    let mut paired = Vec::with_capacity(upper.len());
    let mut pool: Vec<Complex64> = lower.into_iter().copied().collect();
    for u in upper {
        let (idx, _) = pool
            .iter()
            .enumerate()
            .min_by(|a, b| (a.1 - u.conj()).norm().total_cmp(&(b.1 - u.conj()).norm()))
            .expect("pool has as many entries as upper");
        let w = pool.swap_remove(idx);
        let re = 0.5 * (u.re + w.re);
        let im = 0.5 * (u.im - w.im);
        paired.push(Complex64::new(re, im));
        paired.push(Complex64::new(re, -im));
    }
    let mut out: Vec<Complex64> = roots.into_iter().filter(|z| z.im == 0.0).collect();
    out.extend(paired);
    out
}

/// All complex roots with multiplicity, sorted by real then imaginary part.
pub fn find_roots(p: &Polynomial) -> Result<RootSet> {
    let degree = p.degree().ok_or_else(|| Error::InvalidArgument("the zero polynomial has no root set".into()))?;
    if degree == 0 {
        return Err(Error::InvalidArgument("a nonzero constant has no roots".into()));
    }
    let mut roots = Vec::with_capacity(degree);
    for (mult, factor) in p.squarefree_decomposition() {
        let factor_roots = symmetrize(solve_squarefree(&factor));
        for _ in 0..mult {
            roots.extend(factor_roots.iter().copied());
        }
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let monic: Vec<Complex64> = p.monic().coeffs().iter().map(|c| Complex64::new(to_f64(c), 0.0)).collect();
    let residual_bound = roots
        .iter()
        .map(|&z| horner(&monic, z).0.norm())
        .fold(0.0f64, f64::max);
    Ok(RootSet { roots, residual_bound, source_degree: degree })
}

/// Every root has real part within `tol` of `-target`.
pub fn common_real_part(rs: &RootSet, target: &Rational, tol: f64) -> bool {
    let t = to_f64(target);
    rs.roots.iter().all(|z| (z.re + t).abs() <= tol)
}

/// Every root lies in the disc `|z + 1/2| <= n (n - 1/2)`.
pub fn braun_disc_check(rs: &RootSet, n: usize) -> bool {
    let radius = n as f64 * (n as f64 - 0.5);
    rs.roots
        .iter()
        .all(|z| (z + Complex64::new(0.5, 0.0)).norm() <= radius + BRAUN_TOL)
}
