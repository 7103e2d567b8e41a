use serde::Serialize;

use crate::arith::{fraction, Rational};
use crate::ehrhart::EhrhartPolynomial;
use crate::error::Result;
use crate::inequalities::{
    gamma_sum_identity_check, gamma_sum_matches_roots, parity_necessary_check, thm31_suite, wills_check,
    Thm31Suite, WillsVerdict,
};
use crate::roots::{braun_disc_check, common_real_part, find_roots, RootSet};

/// Decimal places used when printing roots.
pub const ROOT_DIGITS: usize = 12;

pub fn format_decimal(x: f64) -> String {
    let s = format!("{x:.ROOT_DIGITS$}");
    // no "-0.000..."
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootsReport {
    /// `[re, im]` pairs as fixed-precision decimals.
    pub roots: Vec<[String; 2]>,
    pub residual_bound: f64,
}

impl From<&RootSet> for RootsReport {
    fn from(rs: &RootSet) -> Self {
        RootsReport {
            roots: rs.roots.iter().map(|z| [format_decimal(z.re), format_decimal(z.im)]).collect(),
            residual_bound: rs.residual_bound,
        }
    }
}

/// Coefficients, roots, and every check for one polytope and one `a`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EhrhartReport {
    pub ehrhart: EhrhartPolynomial,
    pub roots: RootsReport,
    #[serde(with = "fraction")]
    pub a: Rational,
    /// All roots have real part `-1/a` within `tolerance`.
    pub common_real_part: bool,
    pub tolerance: f64,
    pub parity: bool,
    pub braun_disc: bool,
    pub gamma_sum_exact: bool,
    pub gamma_sum_numeric: bool,
    pub wills: WillsVerdict,
    pub thm31: Thm31Suite,
    /// Nothing contradicts the theory: the sanity checks pass, and when the
    /// common-real-part hypothesis holds, so do parity and all inequalities.
    pub consistent: bool,
}

impl EhrhartReport {
    pub fn new(ehrhart: EhrhartPolynomial, a: &Rational, tolerance: f64) -> Result<Self> {
        let rs = find_roots(ehrhart.poly())?;
        let target = num_traits::One::one();
        let target: Rational = Rational::from_integer(target) / a;
        let common = common_real_part(&rs, &target, tolerance);
        let parity = parity_necessary_check(&ehrhart, a);
        let braun = braun_disc_check(&rs, ehrhart.dimension());
        let gamma_exact = gamma_sum_identity_check(&ehrhart);
        let gamma_numeric = gamma_sum_matches_roots(&ehrhart, &rs, 1e-9);
        let thm31 = thm31_suite(&ehrhart, a)?;
        let wills = wills_check(&ehrhart);
        let consistent = braun && gamma_exact && gamma_numeric && (!common || (parity && thm31.all_hold()));
        Ok(EhrhartReport {
            roots: RootsReport::from(&rs),
            ehrhart,
            a: a.clone(),
            common_real_part: common,
            tolerance,
            parity,
            braun_disc: braun,
            gamma_sum_exact: gamma_exact,
            gamma_sum_numeric: gamma_numeric,
            wills,
            thm31,
            consistent,
        })
    }
}
