//! Every published number, recomputed, one row per acceptance criterion.

use std::time::{Duration, Instant};

use ehrhart_core::arith::{int, rat};
use ehrhart_core::counting::{
    count_box_scan, count_minkowski_dp, count_pn_sliced, count_qn_closed, counter_for, oracle_for, CountOptions,
    MembershipOracle,
};
use ehrhart_core::ehrhart::{ehrhart_of, product_coefficients, qn_coefficients, qn_first_coefficient, qn_growth_check};
use ehrhart_core::hull::hull2d;
use ehrhart_core::inequalities::{parity_necessary_check, thm31_suite, wills_check};
use ehrhart_core::polytope::{crosspolytope, cube, dilate, is_primitive, pn_family, qn_family, LatticePolytope, Point};
use ehrhart_core::reflexive::{corollary38_consequence, prop36_equivalence};
use ehrhart_core::roots::{braun_disc_check, common_real_part, find_roots, RootSet};
use ehrhart_core::{EhrhartPolynomial, Polynomial, Rational, Result};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub const P7_TIME_LIMIT: Duration = Duration::from_secs(10);
pub const QN_TIME_LIMIT: Duration = Duration::from_secs(1);
pub const REAL_PART_TOL: f64 = 1e-7;
pub const TRIANGLE_ROOT_TOL: f64 = 1e-9;
pub const RANDOM_POLYGON_SEED: u64 = 0x0e4a_2017;
pub const RANDOM_POLYGONS: usize = 60;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub criterion: u8,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn row(criterion: u8, name: &'static str, outcome: Result<(bool, String)>) -> Row {
    match outcome {
        Ok((pass, detail)) => Row { criterion, name, pass, detail },
        Err(e) => Row { criterion, name, pass: false, detail: format!("error: {e}") },
    }
}

pub fn ehrhart(p: &LatticePolytope) -> Result<EhrhartPolynomial> {
    let c = counter_for(p, &CountOptions::default())?;
    ehrhart_of(p, &*c)
}

fn interpolate_counts(n: usize, count: impl Fn(u64) -> BigUint) -> Result<EhrhartPolynomial> {
    let pts: Vec<(Rational, Rational)> = (0..=n as u64)
        .map(|k| (int(k), Rational::from_integer(count(k).into())))
        .collect();
    EhrhartPolynomial::new(n, Polynomial::interpolate(&pts)?)
}

/// The paper's `P_7` coefficients, constant term first.
pub fn p7_expected() -> Vec<Rational> {
    vec![
        int(1),
        rat(1534, 105),
        rat(3188, 45),
        rat(7112, 45),
        rat(1756, 9),
        rat(7004, 45),
        rat(4952, 45),
        rat(15656, 315),
    ]
}

/// `(n, i, lE_i(Q_n))` as published.
pub fn qn_expected() -> [(usize, usize, Rational); 3] {
    [(9, 1, rat(494, 15)), (11, 3, int(1976)), (13, 5, rat(260832, 5))]
}

/// `conv{(-1,-1), (2,-1), (-1,2)}`, reflexive with roots `-1/3, -2/3`.
pub fn exceptional_triangle() -> LatticePolytope {
    hull2d(&[vec![-1, -1], vec![2, -1], vec![-1, 2]]).expect("triangle is full-dimensional")
}

/// Polygons with vertices in `[-4, 4]^2`, primitive vertices, and the origin
/// strictly inside. Deterministic in `seed`.
pub fn random_polygons(seed: u64, wanted: usize) -> Vec<LatticePolytope> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(wanted);
    while out.len() < wanted {
        let m = rng.random_range(3..=7);
        let pts: Vec<Point> = (0..m)
            .map(|_| vec![rng.random_range(-4..=4), rng.random_range(-4..=4)])
            .collect();
        let Ok(p) = hull2d(&pts) else { continue };
        if p.origin_is_interior().unwrap_or(false) && p.vertices().iter().all(|v| is_primitive(v).unwrap_or(false)) {
            out.push(p);
        }
    }
    out
}

struct Run {
    roots: Vec<(String, RootSet)>,
}

impl Run {
    fn roots_of(&mut self, label: impl Into<String>, e: &EhrhartPolynomial) -> Result<RootSet> {
        let rs = find_roots(e.poly())?;
        self.roots.push((label.into(), rs.clone()));
        Ok(rs)
    }

    fn c1(&mut self) -> Result<(bool, String)> {
        let start = Instant::now();
        let e = ehrhart(&pn_family(7)?)?;
        let elapsed = start.elapsed();
        self.roots_of("P_7", &e)?;
        let exact = e.coefficients() == p7_expected().as_slice();
        Ok((
            exact && elapsed <= P7_TIME_LIMIT,
            format!("coefficients {}, {:.3}s", if exact { "match" } else { "differ" }, elapsed.as_secs_f64()),
        ))
    }

    fn c2(&mut self) -> Result<(bool, String)> {
        let start = Instant::now();
        let mut ok = true;
        let mut parts = Vec::new();
        for (n, i, want) in qn_expected() {
            let closed = qn_coefficients(n)?;
            let interp = interpolate_counts(n, |k| count_qn_closed(n, k))?;
            ok &= closed.coefficient(i) == want && closed == interp;
            self.roots_of(format!("Q_{n}"), &closed)?;
            parts.push(format!("lE_{i}(Q_{n})={}", closed.coefficient(i)));
        }
        let elapsed = start.elapsed();
        parts.push(format!("{:.3}s", elapsed.as_secs_f64()));
        Ok((ok && elapsed <= QN_TIME_LIMIT, parts.join(", ")))
    }

    fn c3(&mut self) -> Result<(bool, String)> {
        let mut bad = Vec::new();
        for n in 2..=20usize {
            let first = qn_first_coefficient(n)?;
            let full = qn_coefficients(n)?.coefficient(1);
            if first != full || (n % 2 == 0 && first != int(2 * (n as u64 - 1))) {
                bad.push(n);
            }
        }
        Ok((bad.is_empty(), if bad.is_empty() { "n = 2..20".into() } else { format!("mismatch at n = {bad:?}") }))
    }

    fn c4(&mut self) -> Result<(bool, String)> {
        let p7 = ehrhart(&pn_family(7)?)?;
        let mut ok = true;
        for m in 0..=5usize {
            let e = if m == 0 { p7.clone() } else { product_coefficients(&p7, &ehrhart(&cube(m)?)?) };
            let lhs = e.coefficient(1);
            ok &= lhs == rat(1534, 105) + int(2 * m as u64) && lhs > int(2 * (7 + m as u64));
            self.roots_of(format!("P_7 x C_{m}"), &e)?;
        }
        Ok((ok, "lE_1 = 1534/105 + 2m > 2(7+m), m = 0..5".into()))
    }

    fn c5(&mut self) -> Result<(bool, String)> {
        let mut checked = 0;
        for n in 2..=4usize {
            for k in 0..=3u64 {
                if count_box_scan(&oracle_for(&qn_family(n)?, k)?) != count_qn_closed(n, k)
                    || count_box_scan(&oracle_for(&pn_family(n)?, k)?) != count_pn_sliced(n, k)
                {
                    return Ok((false, format!("family mismatch at n={n}, k={k}")));
                }
                checked += 2;
            }
        }
        for m in 1..=3usize {
            for a in 0..=3u64 {
                for b in 0..=3u64 {
                    let (ai, bi) = (a as i64, b as i64);
                    let o = MembershipOracle::from_predicate(m, a + b, move |x| {
                        x.iter().map(|&c| (c.abs() - ai).max(0)).sum::<i64>() <= bi
                    });
                    if count_box_scan(&o) != count_minkowski_dp(m, a, b) {
                        return Ok((false, format!("dp mismatch at m={m}, a={a}, b={b}")));
                    }
                    checked += 1;
                }
            }
        }
        Ok((true, format!("{checked} exact comparisons")))
    }

    fn c6(&mut self) -> Result<(bool, String)> {
        let mut ok = true;
        for n in 1..=10 {
            let v = wills_check(&ehrhart(&cube(n)?)?);
            ok &= v.overall && v.all_equal();
        }
        let mut parts = Vec::new();
        let cases = [("P_7", ehrhart(&pn_family(7)?)?, 1), ("Q_9", qn_coefficients(9)?, 1), ("Q_11", qn_coefficients(11)?, 3), ("Q_13", qn_coefficients(13)?, 5)];
        for (name, e, i) in cases {
            let viol = wills_check(&e).violations();
            ok &= viol.contains(&i) && !viol.contains(&0) && !viol.contains(&e.dimension());
            parts.push(format!("{name} violates {viol:?}"));
        }
        Ok((ok, parts.join("; ")))
    }

    fn c7(&mut self) -> Result<(bool, String)> {
        let two = int(2);
        for n in 1..=8usize {
            for (is_cube, p) in [(true, cube(n)?), (false, crosspolytope(n)?)] {
                let label = format!("{}({n})", if is_cube { "cube" } else { "cross" });
                let e = ehrhart(&p)?;
                let rs = self.roots_of(label.clone(), &e)?;
                let suite = thm31_suite(&e, &two)?;
                let all_pairs = n * (n + 1) / 2;
                let pairs = suite.equality_pairs();
                let pairs_ok = if is_cube || n == 1 { pairs.len() == all_pairs } else { pairs == [(n - 1, n)] };
                let volume_ok = if is_cube || n == 1 { suite.volume.is_equality } else { suite.volume.is_strict() };
                let upper_ok = match &suite.upper {
                    None => n == 1,
                    Some(u) if is_cube || n <= 3 => u.is_equality,
                    Some(u) => u.is_strict(),
                };
                let ok = parity_necessary_check(&e, &two)
                    && common_real_part(&rs, &rat(1, 2), REAL_PART_TOL)
                    && suite.all_hold()
                    && pairs_ok
                    && volume_ok
                    && upper_ok;
                if !ok {
                    return Ok((false, format!("{label}: equality pairs {pairs:?}")));
                }
            }
        }
        Ok((true, "cube(n), cross(n), n = 1..8".into()))
    }

    fn c8(&mut self) -> Result<(bool, String)> {
        for n in 1..=10 {
            let e = ehrhart(&crosspolytope(n)?)?;
            self.roots_of(format!("cross({n})"), &e)?;
            if !wills_check(&e).overall {
                return Ok((false, format!("cross({n}) violates {:?}", wills_check(&e).violations())));
            }
        }
        Ok((true, "cross(n), n = 1..10".into()))
    }

    fn c9(&mut self) -> Result<(bool, String)> {
        let mut ok = true;
        for (name, p) in [("cube(2)", cube(2)?), ("cube(3)", cube(3)?), ("triangle", exceptional_triangle())] {
            let r = prop36_equivalence(&p, &ehrhart(&p)?)?;
            ok &= r.agree && r.def_check && r.polar_check && r.coefficient_check && r.index_l == 1;
            if !ok {
                return Ok((false, format!("{name}: {r:?}")));
            }
        }
        let t = ehrhart(&exceptional_triangle())?;
        let rs = self.roots_of("triangle", &t)?;
        let near = |target: f64| rs.roots.iter().any(|z| (z.re - target).abs() <= TRIANGLE_ROOT_TOL && z.im.abs() <= TRIANGLE_ROOT_TOL);
        ok &= rs.roots.len() == 2 && near(-1.0 / 3.0) && near(-2.0 / 3.0);

        let d = dilate(&cube(2)?, 2)?;
        let de = ehrhart(&d)?;
        let drs = self.roots_of("2 cube(2)", &de)?;
        let c = corollary38_consequence(&d, &de, &drs, REAL_PART_TOL)?;
        ok &= c.index_l == 2 && c.hypothesis && c.consequence && c.holds;

        let polys = random_polygons(RANDOM_POLYGON_SEED, RANDOM_POLYGONS);
        let mut reflexive = 0;
        for p in &polys {
            let e = ehrhart(p)?;
            let r = prop36_equivalence(p, &e)?;
            ok &= r.agree;
            reflexive += r.def_check as usize;
            self.roots_of("random polygon", &e)?;
        }
        Ok((ok, format!("{} random polygons agree ({reflexive} l-reflexive)", polys.len())))
    }

    fn c10(&mut self) -> Result<(bool, String)> {
        let mut bad = Vec::new();
        for k in 2..=7 {
            if !qn_growth_check(k)? {
                bad.push(k);
            }
        }
        Ok((bad.is_empty(), if bad.is_empty() { "k = 2..7".into() } else { format!("fails at k = {bad:?}") }))
    }

    fn c11(&mut self) -> Result<(bool, String)> {
        let bad: Vec<&str> = self
            .roots
            .iter()
            .filter(|(_, rs)| !braun_disc_check(rs, rs.source_degree))
            .map(|(l, _)| l.as_str())
            .collect();
        Ok((bad.is_empty(), format!("{} root sets, failures: {bad:?}", self.roots.len())))
    }
}

/// Evaluate all eleven criteria in order.
pub fn rows() -> Vec<Row> {
    let mut run = Run { roots: Vec::new() };
    vec![
        row(1, "P_7 reproduction", run.c1()),
        row(2, "Q-family coefficients", run.c2()),
        row(3, "Bernoulli closed form", run.c3()),
        row(4, "counterexample propagation", run.c4()),
        row(5, "oracle equivalence", run.c5()),
        row(6, "Wills verdicts", run.c6()),
        row(7, "inequality suite, a = 2", run.c7()),
        row(8, "Wills bounds for crosspolytopes", run.c8()),
        row(9, "reflexivity", run.c9()),
        row(10, "growth bounds", run.c10()),
        row(11, "disc sanity", run.c11()),
    ]
}
