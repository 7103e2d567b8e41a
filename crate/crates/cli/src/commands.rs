use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ehrhart_core::counting::{counter_for, CountOptions, DEFAULT_MAX_BOX_POINTS};
use ehrhart_core::ehrhart::ehrhart_of;
use ehrhart_core::hull::hull2d;
use ehrhart_core::polytope::{Family, LatticePolytope};
use ehrhart_core::reflexive::{corollary38_consequence, prop36_equivalence, Corollary38, ReflexivityReport};
use ehrhart_core::report::{EhrhartReport, RootsReport};
use ehrhart_core::roots::{find_roots, DEFAULT_REAL_PART_TOL};
use ehrhart_core::{EhrhartPolynomial, Rational};
use num_traits::Signed;
use serde::Serialize;

use crate::grammar::{parse_family, GrammarError};
use crate::reproduce;

#[derive(Debug, Parser)]
#[command(name = "ehrhart", version, about = "Exact Ehrhart polynomials and coefficient inequalities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lattice points in the k-th dilate.
    Count {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        k: u64,
        #[command(flatten)]
        counting: Counting,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Ehrhart polynomial by interpolation at k = 0..n.
    Ehrhart {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        counting: Counting,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Roots, the common-real-part test, and every check for one `a`.
    Roots {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        counting: Counting,
        #[arg(long, default_value = "2", value_parser = parse_positive_rational)]
        a: Rational,
        #[arg(long, default_value_t = DEFAULT_REAL_PART_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Compare each coefficient with the cube's.
    Wills {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        counting: Counting,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Ratio, volume and upper bounds for polytopes whose roots share real part -1/a.
    Thm31 {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        counting: Counting,
        #[arg(long, default_value = "2", value_parser = parse_positive_rational)]
        a: Rational,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// l-reflexivity three ways, plus the real-part consequence.
    Reflexive {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        counting: Counting,
        #[arg(long, default_value_t = DEFAULT_REAL_PART_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Recompute every published number and print pass/fail per criterion.
    ReproducePaper {
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Print the polytope as JSON.
    Polytope {
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Family expression, e.g. `pn:7` or `product(qn:3,cube:2)`.
    #[arg(long)]
    family: Option<String>,
    /// Polytope JSON file.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Counting {
    /// Refuse box scans over this many points.
    #[arg(long, default_value_t = DEFAULT_MAX_BOX_POINTS)]
    max_box_points: u128,
    /// Count by box scan even when a family counter exists.
    #[arg(long)]
    box_scan: bool,
}

impl Counting {
    fn options(&self) -> CountOptions {
        CountOptions { max_box_points: self.max_box_points, force_box_scan: self.box_scan }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

fn parse_positive_rational(s: &str) -> Result<Rational, String> {
    let r: Rational = s.trim().parse().map_err(|_| format!("`{s}` is not a fraction"))?;
    if !r.is_positive() {
        return Err(format!("a must be positive, got {r}"));
    }
    Ok(r)
}

#[derive(Debug)]
pub enum CliError {
    Grammar(GrammarError),
    Io(PathBuf, std::io::Error),
    Core(ehrhart_core::Error),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Grammar(e) => e.fmt(f),
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Core(e) => e.fmt(f),
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ehrhart_core::Error> for CliError {
    fn from(e: ehrhart_core::Error) -> Self {
        CliError::Core(e)
    }
}

/// What to print and how to exit. `status` is 0, or 1 for a failed check.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
}

impl Outcome {
    fn verdict(pass: bool, stdout: String) -> Self {
        Outcome { status: if pass { 0 } else { 1 }, stdout }
    }
}

pub fn load(source: &Source) -> Result<LatticePolytope, CliError> {
    let p = match (&source.family, &source.file) {
        (Some(spec), None) => parse_family(spec).map_err(CliError::Grammar)?,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.clone(), e))?;
            LatticePolytope::from_json(&text)?
        }
        _ => return Err(CliError::Usage("give exactly one of --family or --file".into())),
    };
    // planar vertex lists get their edges computed here
    if matches!(p.family(), Family::Generic) && p.halfspaces().is_none() && p.dimension() == 2 {
        return Ok(hull2d(p.vertices())?);
    }
    Ok(p)
}

fn compute(p: &LatticePolytope, counting: &Counting) -> Result<EhrhartPolynomial, CliError> {
    let c = counter_for(p, &counting.options())?;
    Ok(ehrhart_of(p, &*c)?)
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports always serialize");
    s.push('\n');
    s
}

fn csv_line(out: &mut String, fields: &[&dyn std::fmt::Display]) {
    let line: Vec<String> = fields.iter().map(|f| f.to_string()).collect();
    writeln!(out, "{}", line.join(",")).unwrap();
}

#[derive(Serialize)]
struct CountOut {
    k: u64,
    count: String,
}

#[derive(Serialize)]
struct ReflexiveOut {
    /// Absent when the polytope has a non-primitive vertex.
    report: Option<ReflexivityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped: Option<String>,
    corollary: Corollary38,
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Count { source, k, counting, format } => {
            let p = load(source)?;
            let n = counter_for(&p, &counting.options())?(*k)?;
            let stdout = match format {
                Format::Json => json(&CountOut { k: *k, count: n.to_string() }),
                Format::Csv => format!("k,count\n{k},{n}\n"),
                Format::Plain => format!("{n}\n"),
            };
            Ok(Outcome::verdict(true, stdout))
        }
        Command::Ehrhart { source, counting, format } => {
            let e = compute(&load(source)?, counting)?;
            let mut out = String::new();
            match format {
                Format::Json => out = e.to_json() + "\n",
                Format::Csv => {
                    out.push_str("i,coefficient\n");
                    for (i, c) in e.coefficients().iter().enumerate() {
                        csv_line(&mut out, &[&i, c]);
                    }
                }
                Format::Plain => {
                    for (i, c) in e.coefficients().iter().enumerate() {
                        writeln!(out, "lE_{i} = {c}").unwrap();
                    }
                }
            }
            Ok(Outcome::verdict(true, out))
        }
        Command::Roots { source, counting, a, tol, format } => {
            let e = compute(&load(source)?, counting)?;
            let r = EhrhartReport::new(e, a, *tol)?;
            let mut out = String::new();
            match format {
                Format::Json => out = json(&r),
                Format::Csv => {
                    out.push_str("re,im\n");
                    for [re, im] in &r.roots.roots {
                        csv_line(&mut out, &[re, im]);
                    }
                }
                Format::Plain => {
                    plain_roots(&mut out, &r.roots);
                    writeln!(out, "all real parts -1/{}: {}", r.a, r.common_real_part).unwrap();
                    writeln!(out, "parity: {}", r.parity).unwrap();
                    writeln!(out, "disc check: {}", r.braun_disc).unwrap();
                    writeln!(out, "gamma sum: exact {}, numeric {}", r.gamma_sum_exact, r.gamma_sum_numeric).unwrap();
                    writeln!(out, "wills: {}", verdict_word(r.wills.overall)).unwrap();
                    writeln!(out, "inequalities: {}", verdict_word(r.thm31.all_hold())).unwrap();
                    writeln!(out, "consistent: {}", r.consistent).unwrap();
                }
            }
            Ok(Outcome::verdict(r.consistent, out))
        }
        Command::Wills { source, counting, format } => {
            let v = ehrhart_core::inequalities::wills_check(&compute(&load(source)?, counting)?);
            let mut out = String::new();
            match format {
                Format::Json => out = json(&v),
                Format::Csv | Format::Plain => {
                    if *format == Format::Csv {
                        out.push_str("i,coefficient,bound,holds\n");
                    }
                    for w in &v.per_index {
                        if *format == Format::Csv {
                            csv_line(&mut out, &[&w.i, &w.coefficient, &w.bound, &w.holds]);
                        } else {
                            let mark = if w.holds { "" } else { "  VIOLATED" };
                            writeln!(out, "lE_{} = {} vs {}{mark}", w.i, w.coefficient, w.bound).unwrap();
                        }
                    }
                    if *format == Format::Plain {
                        writeln!(out, "violations: {:?}", v.violations()).unwrap();
                    }
                }
            }
            Ok(Outcome::verdict(v.overall, out))
        }
        Command::Thm31 { source, counting, a, format } => {
            let e = compute(&load(source)?, counting)?;
            let s = ehrhart_core::inequalities::thm31_suite(&e, a)?;
            let mut out = String::new();
            match format {
                Format::Json => out = json(&s),
                Format::Csv | Format::Plain => {
                    let csv = *format == Format::Csv;
                    if csv {
                        out.push_str("check,s,t,lhs,rhs,holds,equality\n");
                    }
                    let mut emit = |name: &str, s: &dyn std::fmt::Display, t: &dyn std::fmt::Display, c: &ehrhart_core::inequalities::Comparison| {
                        if csv {
                            csv_line(&mut out, &[&name, s, t, &c.lhs, &c.rhs, &c.holds, &c.is_equality]);
                        } else {
                            let rel = if c.is_equality { "=" } else if c.holds { "<" } else { ">" };
                            writeln!(out, "{name} {s} {t}: {} {rel} {}", c.lhs, c.rhs).unwrap();
                        }
                    };
                    for r in &s.ratios {
                        emit("ratio", &r.s, &r.t, &r.verdict);
                    }
                    emit("volume", &"", &"", &s.volume);
                    if let Some(u) = &s.upper {
                        emit("upper", &"", &"", u);
                    }
                    if !csv {
                        writeln!(out, "all hold: {}", s.all_hold()).unwrap();
                    }
                }
            }
            Ok(Outcome::verdict(s.all_hold(), out))
        }
        Command::Reflexive { source, counting, tol, format } => {
            let p = load(source)?;
            if p.halfspaces().is_none() {
                return Err(CliError::Usage(
                    "reflexivity needs half-spaces: give a polygon or a JSON file with `halfspaces`".into(),
                ));
            }
            let e = compute(&p, counting)?;
            let (report, skipped) = match prop36_equivalence(&p, &e) {
                Ok(r) => (Some(r), None),
                Err(ehrhart_core::Error::InvalidArgument(why)) => (None, Some(why)),
                Err(other) => return Err(other.into()),
            };
            let rs = find_roots(e.poly())?;
            let corollary = corollary38_consequence(&p, &e, &rs, *tol)?;
            let pass = report.as_ref().is_none_or(|r| r.agree) && corollary.holds;
            let r = ReflexiveOut { report, skipped, corollary };
            let mut out = String::new();
            match format {
                Format::Json => out = json(&r),
                Format::Csv => {
                    out.push_str("index_l,def_check,polar_check,coefficient_check,agree,coefficient_lhs,coefficient_rhs,real_part_hypothesis,consequence\n");
                    let c = &r.corollary;
                    match &r.report {
                        Some(x) => csv_line(
                            &mut out,
                            &[&x.index_l, &x.def_check, &x.polar_check, &x.coefficient_check, &x.agree, &x.coefficient_lhs, &x.coefficient_rhs, &c.hypothesis, &c.consequence],
                        ),
                        None => csv_line(&mut out, &[&c.index_l, &"", &"", &"", &"", &"", &"", &c.hypothesis, &c.consequence]),
                    }
                }
                Format::Plain => {
                    writeln!(out, "index l = {}", r.corollary.index_l).unwrap();
                    match (&r.report, &r.skipped) {
                        (Some(x), _) => {
                            writeln!(out, "l-reflexive (definition): {}", x.def_check).unwrap();
                            writeln!(out, "l P* lattice, primitive vertices: {}", x.polar_check).unwrap();
                            writeln!(out, "lE_(n-1) = n/(2l) vol: {} ({} vs {})", x.coefficient_check, x.coefficient_lhs, x.coefficient_rhs).unwrap();
                            writeln!(out, "agree: {}", x.agree).unwrap();
                        }
                        (None, why) => {
                            writeln!(out, "criteria skipped: {}", why.as_deref().unwrap_or("")).unwrap();
                        }
                    }
                    writeln!(out, "roots on Re = -1/(2l): {}", r.corollary.hypothesis).unwrap();
                    writeln!(out, "lE_(n-1) = n/(2l) vol: {}", r.corollary.consequence).unwrap();
                    writeln!(out, "consequence holds: {}", r.corollary.holds).unwrap();
                }
            }
            Ok(Outcome::verdict(pass, out))
        }
        Command::ReproducePaper { format } => {
            let rows = reproduce::rows();
            let pass = rows.iter().all(|r| r.pass);
            let mut out = String::new();
            match format {
                Format::Json => out = json(&rows),
                Format::Csv => {
                    out.push_str("criterion,name,pass,detail\n");
                    for r in &rows {
                        writeln!(out, "{},{},{},\"{}\"", r.criterion, r.name, r.pass, r.detail.replace('"', "\"\"")).unwrap();
                    }
                }
                Format::Plain => {
                    for r in &rows {
                        writeln!(out, "{:>2} {} {}: {}", r.criterion, if r.pass { "pass" } else { "FAIL" }, r.name, r.detail).unwrap();
                    }
                }
            }
            Ok(Outcome::verdict(pass, out))
        }
        Command::Polytope { source } => {
            let p = load(source)?;
            Ok(Outcome::verdict(true, p.to_json_pretty() + "\n"))
        }
    }
}

fn verdict_word(b: bool) -> &'static str {
    if b {
        "hold"
    } else {
        "violated"
    }
}

fn plain_roots(out: &mut String, r: &RootsReport) {
    for [re, im] in &r.roots {
        writeln!(out, "{re} {im}").unwrap();
    }
    writeln!(out, "residual bound: {:e}", r.residual_bound).unwrap();
}
