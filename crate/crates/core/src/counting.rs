//! Lattice point counting in dilates `kP`.
//!
//! Three routes, which the tests play against each other:
//! - a box scan over `[-R, R]^n` with a membership predicate (ground truth),
//! - slice sums for the `P_n` and `Q_n` families and for bipyramids,
//! - closed forms and a small dynamic program for the slice sets
//!   `a C_m + b C_m^*`.
//!
//! The box scan partitions its index range into chunks which are summed
//! in parallel when the `parallel` feature is enabled. Totals are exact and
//! do not depend on the partition.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::polytope::{Family, Halfspace, LatticePolytope};

/// Default cap on the number of points a box scan may visit.
pub const DEFAULT_MAX_BOX_POINTS: u128 = 100_000_000;

type Predicate = Arc<dyn Fn(&[i64]) -> bool + Send + Sync>;

#[derive(Clone)]
enum Region {
    Cube,
    Cross,
    Pn,
    Qn,
    Halfspaces { hs: Vec<Halfspace>, radius: i64 },
    Product { left: Box<Region>, right: Box<Region>, split: usize },
    Bipyramid { base: Box<Region> },
    Dilation { base: Box<Region>, factor: i64 },
    Predicate { f: Predicate, radius: i64 },
}

impl fmt::Debug for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Region::Cube => write!(f, "Cube"),
            Region::Cross => write!(f, "Cross"),
            Region::Pn => write!(f, "Pn"),
            Region::Qn => write!(f, "Qn"),
            Region::Halfspaces { hs, radius } => write!(f, "Halfspaces({} facets, r={radius})", hs.len()),
            Region::Product { left, right, split } => write!(f, "Product({left:?} | {right:?} @ {split})"),
            Region::Bipyramid { base } => write!(f, "Bipyramid({base:?})"),
            Region::Dilation { base, factor } => write!(f, "Dilation({base:?} x {factor})"),
            Region::Predicate { radius, .. } => write!(f, "Predicate(r={radius})"),
        }
    }
}

/// Sum of `max(|x_i| - a, 0)`, the l1 distance from `x` to `a C_m`.
fn box_deficiency(x: &[i64], a: i64) -> i64 {
    x.iter().map(|&c| (c.abs() - a).max(0)).sum()
}

impl Region {
    fn for_polytope(p: &LatticePolytope) -> Result<Region> {
        Ok(match p.family() {
            Family::Cube { .. } => Region::Cube,
            Family::Crosspolytope { .. } => Region::Cross,
            Family::PnFamily { .. } => Region::Pn,
            Family::QnFamily { .. } => Region::Qn,
            Family::Product { left, right } => Region::Product {
                left: Box::new(Region::for_polytope(left)?),
                right: Box::new(Region::for_polytope(right)?),
                split: left.dimension(),
            },
            Family::Bipyramid { base } => Region::Bipyramid { base: Box::new(Region::for_polytope(base)?) },
            Family::Dilation { base, factor } => Region::Dilation {
                base: Box::new(Region::for_polytope(base)?),
                factor: i64::try_from(*factor).map_err(|_| Error::Overflow("dilating"))?,
            },
            Family::Generic => {
                let hs = p.halfspaces().ok_or_else(|| {
                    Error::UnsupportedCounter("generic polytope without half-spaces".into())
                })?;
                let mut hs = hs.to_vec();
                // largest normals first: they reject most points of the box
                hs.sort_by_key(|h| std::cmp::Reverse(h.norm_sq()));
                let radius = p.vertices().iter().flatten().map(|x| x.abs()).max().unwrap_or(0);
                Region::Halfspaces { hs, radius }
            }
        })
    }

    fn contains(&self, x: &[i64], k: i64) -> bool {
        if k == 0 && !matches!(self, Region::Predicate { .. }) {
            return x.iter().all(|&c| c == 0);
        }
        match self {
            Region::Cube => x.iter().all(|c| c.abs() <= k),
            Region::Cross => x.iter().map(|c| c.abs()).sum::<i64>() <= k,
            Region::Pn => {
                let (y, j) = x.split_at(x.len() - 1);
                let j = j[0].abs();
                j <= k && box_deficiency(y, k - j) <= j
            }
            Region::Qn => {
                let (y, j) = x.split_at(x.len() - 1);
                let j = j[0].abs();
                j <= k && y.iter().all(|c| c.abs() <= k - j)
            }
            Region::Halfspaces { hs, .. } => hs
                .iter()
                .all(|h| h.value(x) <= h.rhs as i128 * k as i128),
            Region::Product { left, right, split } => {
                let (a, b) = x.split_at(*split);
                left.contains(a, k) && right.contains(b, k)
            }
            Region::Bipyramid { base } => {
                let (y, j) = x.split_at(x.len() - 1);
                let j = j[0].abs();
                j <= k && base.contains(y, k - j)
            }
            Region::Dilation { base, factor } => base.contains(x, k * factor),
            Region::Predicate { f, .. } => f(x),
        }
    }

    fn radius(&self, k: i64) -> i64 {
        match self {
            Region::Cube | Region::Cross | Region::Pn | Region::Qn => k,
            Region::Halfspaces { radius, .. } => radius * k,
            Region::Product { left, right, .. } => left.radius(k).max(right.radius(k)),
            Region::Bipyramid { base } => base.radius(k).max(k),
            Region::Dilation { base, factor } => base.radius(k * factor),
            Region::Predicate { radius, .. } => *radius,
        }
    }
}

/// Membership test for a fixed dilate `kP`, with a box that encloses it.
#[derive(Clone, Debug)]
pub struct MembershipOracle {
    dimension: usize,
    bounding_radius: u64,
    region: Region,
    dilation: i64,
}

impl MembershipOracle {
    /// Oracle for an arbitrary predicate; points with a coordinate beyond
    /// `bounding_radius` in absolute value are never visited.
    pub fn from_predicate<F>(dimension: usize, bounding_radius: u64, f: F) -> Self
    where
        F: Fn(&[i64]) -> bool + Send + Sync + 'static,
    {
        MembershipOracle {
            dimension,
            bounding_radius,
            region: Region::Predicate { f: Arc::new(f), radius: bounding_radius as i64 },
            dilation: 1,
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn bounding_radius(&self) -> u64 {
        self.bounding_radius
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        debug_assert_eq!(x.len(), self.dimension);
        self.region.contains(x, self.dilation)
    }

    /// Number of points in the scanned box, `(2R + 1)^n`.
    pub fn box_points(&self) -> u128 {
        let side = 2 * self.bounding_radius as u128 + 1;
        (0..self.dimension).fold(1u128, |acc, _| acc.saturating_mul(side))
    }
}

/// Membership oracle for `kP`. Needs a family tag or half-spaces.
pub fn oracle_for(p: &LatticePolytope, k: u64) -> Result<MembershipOracle> {
    let region = Region::for_polytope(p)?;
    let k = i64::try_from(k).map_err(|_| Error::Overflow("dilating"))?;
    let radius = region.radius(k);
    Ok(MembershipOracle {
        dimension: p.dimension(),
        bounding_radius: radius as u64,
        region,
        dilation: k,
    })
}

/// Count members among box points with linear index in `start..end`.
fn scan_range(oracle: &MembershipOracle, start: u128, end: u128) -> u64 {
    if start >= end {
        return 0;
    }
    let r = oracle.bounding_radius as i64;
    let side = 2 * oracle.bounding_radius as u128 + 1;
    let n = oracle.dimension;
    // most significant coordinate first, so the odometer runs in lex order
    let mut x = vec![0i64; n];
    let mut rest = start;
    for i in (0..n).rev() {
        x[i] = (rest % side) as i64 - r;
        rest /= side;
    }
    let mut count = 0u64;
    let mut idx = start;
    loop {
        if oracle.contains(&x) {
            count += 1;
        }
        idx += 1;
        if idx == end {
            break;
        }
        for c in x.iter_mut().rev() {
            if *c < r {
                *c += 1;
                break;
            }
            *c = -r;
        }
    }
    count
}

fn chunk_bounds(total: u128, chunks: usize) -> Vec<(u128, u128)> {
    let chunks = (chunks.max(1) as u128).min(total.max(1));
    (0..chunks)
        .map(|c| (total * c / chunks, total * (c + 1) / chunks))
        .collect()
}

/// Box scan on the calling thread only.
pub fn count_box_scan_sequential(oracle: &MembershipOracle) -> BigUint {
    BigUint::from(scan_range(oracle, 0, oracle.box_points()))
}

/// Box scan split into `chunks` contiguous pieces of the lexicographic
/// index range. The pieces run in parallel under the `parallel` feature.
pub fn count_box_scan_chunked(oracle: &MembershipOracle, chunks: usize) -> BigUint {
    let bounds = chunk_bounds(oracle.box_points(), chunks);
    #[cfg(feature = "parallel")]
    let partial: Vec<u64> = bounds.par_iter().map(|&(s, e)| scan_range(oracle, s, e)).collect();
    #[cfg(not(feature = "parallel"))]
    let partial: Vec<u64> = bounds.iter().map(|&(s, e)| scan_range(oracle, s, e)).collect();
    partial.into_iter().map(BigUint::from).sum()
}

/// Exact number of lattice points the oracle accepts.
pub fn count_box_scan(oracle: &MembershipOracle) -> BigUint {
    #[cfg(feature = "parallel")]
    let chunks = rayon::current_num_threads() * 8;
    #[cfg(not(feature = "parallel"))]
    let chunks = 1;
    // small boxes are not worth splitting
    if oracle.box_points() < 4096 {
        return count_box_scan_sequential(oracle);
    }
    count_box_scan_chunked(oracle, chunks)
}

fn pow(base: u64, exp: usize) -> BigUint {
    Pow::pow(BigUint::from(base), exp)
}

/// `LE(k Q_n) = (2k+1)^{n-1} + 2 sum_{j=0}^{k-1} (2j+1)^{n-1}`.
pub fn count_qn_closed(n: usize, k: u64) -> BigUint {
    assert!(n >= 2, "Q_n needs n >= 2");
    let tail: BigUint = (0..k).map(|j| pow(2 * j + 1, n - 1)).sum();
    pow(2 * k + 1, n - 1) + tail * 2u32
}

/// `#{x in Z^m : sum_i max(|x_i| - a, 0) <= b}`, the lattice points of
/// `a C_m + b C_m^*`, by a DP over coordinates on the used deficiency.
///
/// A coordinate with deficiency 0 has `2a + 1` choices; deficiency `d >= 1`
/// has two (`x = +-(a + d)`). Cost `O(m b^2)`.
pub fn count_minkowski_dp(m: usize, a: u64, b: u64) -> BigUint {
    let b = b as usize;
    let core = BigUint::from(2 * a + 1);
    // ways[d]: prefixes using total deficiency exactly d
    let mut ways = vec![BigUint::zero(); b + 1];
    ways[0] = BigUint::one();
    for _ in 0..m {
        let mut next = vec![BigUint::zero(); b + 1];
        for (d, w) in ways.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            next[d] += w * &core;
            for extra in 1..=b - d {
                next[d + extra] += w * 2u32;
            }
        }
        ways = next;
    }
    ways.into_iter().sum()
}

/// `LE(k P_n)` as a sum over heights `j` of the slices
/// `(k - |j|) C_{n-1} + |j| C_{n-1}^*`, each counted by the DP.
pub fn count_pn_sliced(n: usize, k: u64) -> BigUint {
    assert!(n >= 2, "P_n needs n >= 2");
    let middle = count_minkowski_dp(n - 1, k, 0);
    let sides: BigUint = (1..=k).map(|j| count_minkowski_dp(n - 1, k - j, j)).sum();
    middle + sides * 2u32
}

/// `LE(kP x kQ) = LE(kP) LE(kQ)`.
pub fn count_product<F, G>(count_p: F, count_q: G, k: u64) -> BigUint
where
    F: Fn(u64) -> BigUint,
    G: Fn(u64) -> BigUint,
{
    count_p(k) * count_q(k)
}

/// Fallible `k -> LE(kP)`.
pub type Counter = Arc<dyn Fn(u64) -> Result<BigUint> + Send + Sync>;

#[derive(Clone, Debug)]
pub struct CountOptions {
    pub max_box_points: u128,
    /// Ignore family shortcuts and count everything by box scan.
    pub force_box_scan: bool,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions { max_box_points: DEFAULT_MAX_BOX_POINTS, force_box_scan: false }
    }
}

fn box_scan_counter(p: &LatticePolytope, max_points: u128) -> Result<Counter> {
    // validate once up front so unsupported polytopes fail before counting
    oracle_for(p, 1)?;
    let p = p.clone();
    Ok(Arc::new(move |k| {
        let oracle = oracle_for(&p, k)?;
        let points = oracle.box_points();
        if points > max_points {
            return Err(Error::BoxBudgetExceeded { points, budget: max_points });
        }
        Ok(count_box_scan(&oracle))
    }))
}

/// Pick the fastest exact counter for `p`.
pub fn counter_for(p: &LatticePolytope, opts: &CountOptions) -> Result<Counter> {
    if opts.force_box_scan {
        return box_scan_counter(p, opts.max_box_points);
    }
    Ok(match p.family() {
        Family::Cube { n } => {
            let n = *n;
            Arc::new(move |k| Ok(pow(2 * k + 1, n)))
        }
        Family::Crosspolytope { n } => {
            let n = *n;
            Arc::new(move |k| Ok(count_minkowski_dp(n, 0, k)))
        }
        Family::PnFamily { n } => {
            let n = *n;
            Arc::new(move |k| Ok(count_pn_sliced(n, k)))
        }
        Family::QnFamily { n } => {
            let n = *n;
            Arc::new(move |k| Ok(count_qn_closed(n, k)))
        }
        Family::Product { left, right } => {
            let cl = counter_for(left, opts)?;
            let cr = counter_for(right, opts)?;
            Arc::new(move |k| Ok(cl(k)? * cr(k)?))
        }
        Family::Dilation { base, factor } => {
            let cb = counter_for(base, opts)?;
            let f = *factor;
            Arc::new(move |k| cb(k.checked_mul(f).ok_or(Error::Overflow("dilating"))?))
        }
        Family::Bipyramid { base } => {
            let cb = counter_for(base, opts)?;
            // slice at height j of k Bip(P) is (k - |j|) P
            Arc::new(move |k| {
                let mut total = cb(k)?;
                for j in 1..=k {
                    total += cb(k - j)? * 2u32;
                }
                Ok(total)
            })
        }
        Family::Generic => box_scan_counter(p, opts.max_box_points)?,
    })
}

/// `LE(kP)` with the default counter choice.
pub fn count(p: &LatticePolytope, k: u64, opts: &CountOptions) -> Result<BigUint> {
    counter_for(p, opts)?(k)
}
