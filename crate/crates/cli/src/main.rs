//! `starlike`: spectral invariants of starlike trees from the command line.
//!
//! Exit codes: 0 on success or PASS, 1 on a failed verification, 2 on
//! usage or domain errors.

mod rational;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use starlike::poly::decimal_string;
use starlike::salem::{
    check_nonintegrality, classify_with_tol, convergence_sweep, salem_polynomial, sweep_is_monotone,
    uniform_salem_polynomial, verify_equal_radius, ConvergenceRow,
};
use starlike::spectral::{check_bounds, eigenvalues_above_two, spectral_radius, BoundFamily};
use starlike::trees::starlike_charpoly;
use starlike::verify::verify_all;
use starlike::{IntPolynomial, RationalInterval, StarlikeTree};

#[derive(Parser, Debug)]
#[command(name = "starlike", version, about = "Exact spectral invariants of starlike trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Enclosure width: `p/q`, a decimal, or scientific notation.
    #[arg(long, global = true, allow_hyphen_values = true, default_value = "1/1000000000", value_parser = rational::parse_tol)]
    tol: BigRational,

    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Also render enclosures as decimals with this many digits (display only).
    #[arg(long, global = true, value_name = "DIGITS")]
    decimal: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Characteristic polynomial of a tree.
    Charpoly(TreeArgs),
    /// Certified enclosure of the spectral radius.
    Radius(TreeArgs),
    /// Whether exactly one eigenvalue exceeds 2.
    Hyperbolic(TreeArgs),
    /// Check the spectral-radius bounds.
    Bounds(TreeArgs),
    /// Salem certificate for the polynomial attached to S(n, k·1).
    Salem {
        #[command(flatten)]
        family: FamilyArgs,
        /// Use the degree n+2 family built from S(k·(n+1)) instead.
        #[arg(long)]
        uniform: bool,
    },
    /// S(n, k·1) and S(k·(n+1)) have the same spectral radius.
    VerifyEqual(FamilyArgs),
    /// The spectral radius of S(n, k·1) is not an integer.
    Nonintegral(FamilyArgs),
    /// Largest roots of the Salem polynomials for n = n-min..=n-max.
    Sweep {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 2)]
        n_min: u32,
        #[arg(long, default_value_t = 60)]
        n_max: u32,
    },
    /// Every check over the grid n = 1..=n-max, k = 3..=k-max.
    VerifyAll {
        #[arg(long, default_value_t = 20)]
        n_max: u32,
        #[arg(long, default_value_t = 8)]
        k_max: u32,
    },
}

#[derive(Args, Debug)]
struct TreeArgs {
    /// Branch lengths such as `3,1,1,1`, or `n=3,k=4` / `k=4,m=3`.
    #[arg(long)]
    tree: Option<String>,
    /// Long-arm length of S(n, k·1).
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    /// Common branch length of S(k·m).
    #[arg(long)]
    m: Option<u32>,
}

impl TreeArgs {
    fn resolve(&self) -> Result<StarlikeTree, String> {
        let tree = match (&self.tree, self.n, self.k, self.m) {
            (Some(lit), None, None, None) => lit.parse(),
            (None, Some(n), Some(k), None) => StarlikeTree::long_arm(n, k),
            (None, None, Some(k), Some(m)) => StarlikeTree::uniform(k, m),
            _ => return Err("give exactly one of --tree, --n with --k, or --k with --m".into()),
        };
        tree.map_err(|e| e.to_string())
    }
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: u32,
}

enum Verdict {
    Done,
    Pass,
    Fail,
}

impl Verdict {
    fn of(pass: bool) -> Self {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    fn label(&self) -> &'static str {
        match self {
            Verdict::Fail => "FAIL",
            _ => "PASS",
        }
    }
}

/// Core report plus optional decimal renderings of its enclosures.
#[derive(Serialize)]
struct WithDecimals<'a, T: Serialize> {
    #[serde(flatten)]
    report: &'a T,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    decimal: BTreeMap<&'static str, [String; 2]>,
}

#[derive(Serialize, Deserialize)]
struct CharpolyOutput {
    tree: StarlikeTree,
    charpoly: IntPolynomial,
}

#[derive(Serialize, Deserialize)]
struct RadiusOutput {
    tree: StarlikeTree,
    lambda1: RationalInterval,
}

#[derive(Serialize, Deserialize)]
struct HyperbolicOutput {
    tree: StarlikeTree,
    eigenvalues_above_two: usize,
    hyperbolic: bool,
}

struct Ctx {
    tol: BigRational,
    format: Format,
    decimal: Option<usize>,
}

impl Ctx {
    fn decimals(&self, named: &[(&'static str, &RationalInterval)]) -> BTreeMap<&'static str, [String; 2]> {
        let Some(d) = self.decimal else {
            return BTreeMap::new();
        };
        named
            .iter()
            .map(|(name, iv)| {
                let (lo, hi) = iv.to_decimal(d);
                (*name, [lo, hi])
            })
            .collect()
    }

    fn json<T: Serialize>(&self, report: &T, named: &[(&'static str, &RationalInterval)]) -> String {
        let out = WithDecimals {
            report,
            decimal: self.decimals(named),
        };
        to_json(&out)
    }

    /// `[lo, hi]`, followed by the decimal rendering when requested.
    fn interval(&self, iv: &RationalInterval) -> String {
        match self.decimal {
            Some(d) => {
                let (lo, hi) = iv.to_decimal(d);
                format!("{iv} ~ [{lo}, {hi}]")
            }
            None => iv.to_string(),
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable output");
    s.push('\n');
    s
}

fn csv_poly(p: &IntPolynomial) -> String {
    p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

/// Serde name of a unit enum variant.
fn tag<T: Serialize>(v: T) -> String {
    serde_json::to_string(&v).expect("enum").trim_matches('"').to_string()
}

fn run(cli: Cli) -> Result<(String, Verdict), String> {
    let ctx = Ctx {
        tol: cli.tol,
        format: cli.format,
        decimal: cli.decimal,
    };
    let err = |e: starlike::Error| e.to_string();
    let mut out = String::new();
    let verdict = match cli.command {
        Command::Charpoly(args) => {
            let tree = args.resolve()?;
            let charpoly = starlike_charpoly(&tree);
            match ctx.format {
                Format::Plain => writeln!(out, "{}", charpoly.display_with("λ")).unwrap(),
                Format::Csv => {
                    writeln!(out, "degree,coefficient").unwrap();
                    for (i, c) in charpoly.coeffs().iter().enumerate() {
                        writeln!(out, "{i},{c}").unwrap();
                    }
                }
                Format::Json => out = to_json(&CharpolyOutput { tree, charpoly }),
            }
            Verdict::Done
        }
        Command::Radius(args) => {
            let tree = args.resolve()?;
            let lambda1 = spectral_radius(&tree, &ctx.tol).map_err(err)?;
            match ctx.format {
                Format::Plain => writeln!(out, "{tree}: lambda1 in {}", ctx.interval(&lambda1)).unwrap(),
                Format::Csv => {
                    writeln!(out, "tree,lambda1_lo,lambda1_hi").unwrap();
                    writeln!(out, "\"{tree}\",{},{}", lambda1.lo(), lambda1.hi()).unwrap();
                }
                Format::Json => {
                    let named = [("lambda1", &lambda1)];
                    let decimal = ctx.decimals(&named);
                    let report = RadiusOutput { tree, lambda1 };
                    out = to_json(&WithDecimals { report: &report, decimal });
                }
            }
            Verdict::Done
        }
        Command::Hyperbolic(args) => {
            let tree = args.resolve()?;
            let above = eigenvalues_above_two(&tree).map_err(err)?;
            let report = HyperbolicOutput {
                hyperbolic: above == 1,
                eigenvalues_above_two: above,
                tree,
            };
            match ctx.format {
                Format::Plain => writeln!(
                    out,
                    "{}: {} eigenvalue(s) above 2, {}",
                    report.tree,
                    above,
                    if report.hyperbolic { "hyperbolic" } else { "not hyperbolic" }
                )
                .unwrap(),
                Format::Csv => {
                    writeln!(out, "tree,eigenvalues_above_two,hyperbolic").unwrap();
                    writeln!(out, "\"{}\",{above},{}", report.tree, report.hyperbolic).unwrap();
                }
                Format::Json => out = to_json(&report),
            }
            Verdict::Done
        }
        Command::Bounds(args) => {
            let tree = args.resolve()?;
            let report = check_bounds(&tree, &ctx.tol).map_err(err)?;
            match ctx.format {
                Format::Plain => {
                    writeln!(out, "{}: lambda1 in {}", report.tree, ctx.interval(&report.lambda1)).unwrap();
                    for b in &report.bounds {
                        let family = match b.family {
                            BoundFamily::General => "general",
                            BoundFamily::LongArm => "long-arm",
                        };
                        let eq = if b.lower_attained { " (lower bound attained)" } else { "" };
                        writeln!(
                            out,
                            "{family} k={}: {} <= lambda1 < {}{eq}: {}",
                            b.k,
                            b.lower,
                            b.upper,
                            Verdict::of(b.holds()).label()
                        )
                        .unwrap();
                    }
                }
                Format::Csv => {
                    writeln!(out, "family,k,lower_square,upper_square,lower_attained,lower_holds,upper_holds").unwrap();
                    for b in &report.bounds {
                        let family = tag(b.family);
                        writeln!(
                            out,
                            "{family},{},{},{},{},{},{}",
                            b.k, b.lower.square, b.upper.square, b.lower_attained, b.lower_holds, b.upper_holds
                        )
                        .unwrap();
                    }
                }
                Format::Json => out = ctx.json(&report, &[("lambda1", &report.lambda1)]),
            }
            Verdict::of(report.bounds_hold)
        }
        Command::Salem { family, uniform } => {
            let poly = if uniform {
                uniform_salem_polynomial(family.n, family.k)
            } else {
                salem_polynomial(family.n, family.k)
            }
            .map_err(err)?;
            let cert = classify_with_tol(&poly, &ctx.tol).map_err(err)?;
            let t_named: Vec<(&'static str, &RationalInterval)> =
                cert.t_enclosure.iter().map(|t| ("t_enclosure", t)).collect();
            match ctx.format {
                Format::Plain => {
                    writeln!(out, "input: {}", cert.input_poly).unwrap();
                    let factors: Vec<String> = cert
                        .cyclo_factors
                        .factors
                        .iter()
                        .map(|(m, e)| if *e == 1 { format!("Phi_{m}") } else { format!("Phi_{m}^{e}") })
                        .collect();
                    writeln!(out, "cyclotomic factors: {}", if factors.is_empty() { "none".into() } else { factors.join(" ") }).unwrap();
                    writeln!(out, "minimal candidate: {}", cert.minimal_candidate).unwrap();
                    writeln!(out, "trace polynomial: {}", cert.trace_poly).unwrap();
                    let c = cert.counts;
                    writeln!(
                        out,
                        "roots outside/on/inside unit circle: {}/{}/{}",
                        c.outside_unit, c.on_unit, c.inside_unit
                    )
                    .unwrap();
                    if let Some(t) = &cert.t_enclosure {
                        writeln!(out, "t in {}", ctx.interval(t)).unwrap();
                    }
                    writeln!(out, "classification: {:?}", cert.classification).unwrap();
                }
                Format::Csv => {
                    writeln!(out, "n,k,classification,outside_unit,on_unit,inside_unit,t_lo,t_hi,minimal_candidate").unwrap();
                    let (lo, hi) = match &cert.t_enclosure {
                        Some(t) => (t.lo().to_string(), t.hi().to_string()),
                        None => (String::new(), String::new()),
                    };
                    let c = cert.counts;
                    writeln!(
                        out,
                        "{},{},{:?},{},{},{},{lo},{hi},{}",
                        family.n,
                        family.k,
                        cert.classification,
                        c.outside_unit,
                        c.on_unit,
                        c.inside_unit,
                        csv_poly(&cert.minimal_candidate)
                    )
                    .unwrap();
                }
                Format::Json => out = ctx.json(&cert, &t_named),
            }
            Verdict::Done
        }
        Command::VerifyEqual(family) => {
            let report = verify_equal_radius(family.n, family.k).map_err(err)?;
            let named = [
                ("long_arm_radius", &report.long_arm_radius),
                ("uniform_radius", &report.uniform_radius),
            ];
            match ctx.format {
                Format::Plain => {
                    writeln!(out, "S({n}, {k}·1) vs S({k}·{m})", n = report.n, k = report.k, m = report.n + 1).unwrap();
                    writeln!(out, "long-arm factorization: {}", report.long_arm_factorization).unwrap();
                    writeln!(out, "exact divisibility: {}", report.exact_divisible).unwrap();
                    writeln!(out, "quotient is a path power: {}", report.quotient_matches).unwrap();
                    writeln!(out, "long-arm radius in {}", ctx.interval(&report.long_arm_radius)).unwrap();
                    writeln!(out, "uniform radius in {}", ctx.interval(&report.uniform_radius)).unwrap();
                    writeln!(out, "{}", Verdict::of(report.pass()).label()).unwrap();
                }
                Format::Csv => {
                    writeln!(out, "n,k,long_arm_factorization,exact_divisible,quotient_matches,enclosures_intersect,pass").unwrap();
                    writeln!(
                        out,
                        "{},{},{},{},{},{},{}",
                        report.n,
                        report.k,
                        report.long_arm_factorization,
                        report.exact_divisible,
                        report.quotient_matches,
                        report.enclosures_intersect,
                        report.pass()
                    )
                    .unwrap();
                }
                Format::Json => out = ctx.json(&report, &named),
            }
            Verdict::of(report.pass())
        }
        Command::Nonintegral(family) => {
            let report = check_nonintegrality(family.n, family.k).map_err(err)?;
            let named = [("lambda1", &report.lambda1), ("lambda1_squared", &report.lambda1_squared)];
            match ctx.format {
                Format::Plain => {
                    writeln!(out, "S({}, {}·1): lambda1 in {}", report.n, report.k, ctx.interval(&report.lambda1)).unwrap();
                    writeln!(out, "lambda1^2 in {}", ctx.interval(&report.lambda1_squared)).unwrap();
                    writeln!(out, "k+1 < lambda1^2: {}", report.lower_strict).unwrap();
                    writeln!(out, "lambda1^2 < k^2/(k-1): {}", report.upper_strict).unwrap();
                    let squares: Vec<String> = report.squares_in_window.iter().map(|s| s.to_string()).collect();
                    writeln!(out, "perfect squares in window: {}", if squares.is_empty() { "none".into() } else { squares.join(" ") }).unwrap();
                    writeln!(out, "{}", Verdict::of(report.pass()).label()).unwrap();
                }
                Format::Csv => {
                    writeln!(out, "n,k,lambda1_lo,lambda1_hi,lower_strict,upper_strict,squares_in_window,pass").unwrap();
                    let squares: Vec<String> = report.squares_in_window.iter().map(|s| s.to_string()).collect();
                    writeln!(
                        out,
                        "{},{},{},{},{},{},{},{}",
                        report.n,
                        report.k,
                        report.lambda1.lo(),
                        report.lambda1.hi(),
                        report.lower_strict,
                        report.upper_strict,
                        squares.join(" "),
                        report.pass()
                    )
                    .unwrap();
                }
                Format::Json => out = ctx.json(&report, &named),
            }
            Verdict::of(report.pass())
        }
        Command::Sweep { k, n_min, n_max } => {
            if n_min > n_max {
                return Err(format!("--n-min {n_min} exceeds --n-max {n_max}"));
            }
            let ns: Vec<u32> = (n_min..=n_max).collect();
            let rows = convergence_sweep(k, &ns, &ctx.tol).map_err(err)?;
            let pass = sweep_is_monotone(&rows) && rows.iter().all(|r| r.below_limit);
            write_sweep(&mut out, &ctx, &rows);
            if ctx.format == Format::Plain {
                writeln!(out, "{}", Verdict::of(pass).label()).unwrap();
            }
            Verdict::of(pass)
        }
        Command::VerifyAll { n_max, k_max } => {
            let outcomes = verify_all(n_max, k_max).map_err(err)?;
            let passed = outcomes.iter().filter(|o| o.pass).count();
            let pass = passed == outcomes.len();
            match ctx.format {
                Format::Plain => {
                    for o in &outcomes {
                        let n = o.n.map_or("-".to_string(), |n| n.to_string());
                        let label = Verdict::of(o.pass).label();
                        writeln!(out, "k={:<3} {:<16} n={:<4} {label}", o.k, tag(o.check), n).unwrap();
                    }
                    writeln!(out, "{passed} of {} checks passed", outcomes.len()).unwrap();
                    writeln!(out, "{}", Verdict::of(pass).label()).unwrap();
                }
                Format::Csv => {
                    writeln!(out, "k,check,n,pass").unwrap();
                    for o in &outcomes {
                        let n = o.n.map_or(String::new(), |n| n.to_string());
                        writeln!(out, "{},{},{n},{}", o.k, tag(o.check), o.pass).unwrap();
                    }
                }
                Format::Json => out = to_json(&outcomes),
            }
            Verdict::of(pass)
        }
    };
    Ok((out, verdict))
}

fn write_sweep(out: &mut String, ctx: &Ctx, rows: &[ConvergenceRow]) {
    match ctx.format {
        Format::Plain => {
            writeln!(out, "{:>4} {:>3}  rho  gap", "n", "k").unwrap();
            for r in rows {
                let gap = match ctx.decimal {
                    Some(d) => decimal_string(&r.gap, d, true),
                    None => r.gap.to_string(),
                };
                writeln!(out, "{:>4} {:>3}  {}  {gap}", r.n, r.k, ctx.interval(&r.rho)).unwrap();
            }
        }
        Format::Csv => {
            let extra = if ctx.decimal.is_some() { ",rho_lo_decimal,rho_hi_decimal" } else { "" };
            writeln!(out, "n,k,rho_lo,rho_hi,gap{extra}").unwrap();
            for r in rows {
                write!(out, "{},{},{},{},{}", r.n, r.k, r.rho.lo(), r.rho.hi(), r.gap).unwrap();
                if let Some(d) = ctx.decimal {
                    let (lo, hi) = r.rho.to_decimal(d);
                    write!(out, ",{lo},{hi}").unwrap();
                }
                out.push('\n');
            }
        }
        Format::Json => {
            let wrapped: Vec<WithDecimals<ConvergenceRow>> = rows
                .iter()
                .map(|r| WithDecimals {
                    report: r,
                    decimal: ctx.decimals(&[("rho", &r.rho)]),
                })
                .collect();
            out.push_str(&to_json(&wrapped));
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, verdict)) => {
            print!("{out}");
            match verdict {
                Verdict::Fail => ExitCode::from(1),
                Verdict::Done | Verdict::Pass => ExitCode::SUCCESS,
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
