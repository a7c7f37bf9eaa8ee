//! The `qaff` command line.
//!
//! Exit codes: 0 on success or when a verification passes, 1 when a
//! verification fails, 2 on usage errors. `QAFF_FORMAT` sets the default
//! output format; an explicit `--format` wins.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cartan::{load_type, CartanData, Series};
use crate::error::{Error, Result};
use crate::heisenberg::{all_pass, HeisenbergAlgebra, RelationCheck, StructureConvention};
use crate::loopweights::{phi_verma_weight_dim, weight_multiplicity, GradedDims, MultiplicityReport, VermaBounds};
use crate::qscalar::{qint, specialize_q1};
use crate::verma::{GradedDimReport, PhiSignature, Truncation, VermaModule};
use crate::weyliso::verify_iso;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DEFAULT_BOUND: &str = "6";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "qaff", version, about = "Quantum Heisenberg, Weyl-algebra and imaginary Verma module computations")]
struct Cli {
    /// Output format (default: $QAFF_FORMAT, else json)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct TypeArgs {
    /// Series letter A..G
    #[arg(long = "type", value_parser = parse_series)]
    series: Series,
    #[arg(long)]
    rank: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Affine Cartan matrix and symmetrizer
    Cartan(TypeArgs),
    /// The q-integer [n] at q^d
    Qnum {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, default_value = "1")]
        d: u32,
        /// Evaluate at q = 1
        #[arg(long)]
        at_q1: bool,
    },
    /// Verify the canonical relations of the Heisenberg subalgebra
    HeisVerify {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value = DEFAULT_BOUND)]
        max_k: i64,
        #[arg(long, default_value = "paper", value_parser = parse_convention)]
        convention: StructureConvention,
        /// Specialize gamma = q^level
        #[arg(long, allow_negative_numbers = true)]
        level: Option<i64>,
    },
    /// Verify the isomorphism with the Weyl algebra at a nonzero level
    WeylVerify {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, allow_negative_numbers = true)]
        level: i64,
        #[arg(long, default_value = DEFAULT_BOUND)]
        max_k: i64,
        #[arg(long, default_value = "paper", value_parser = parse_convention)]
        convention: StructureConvention,
    },
    /// Truncated graded dimensions of an imaginary Verma module
    VermaDims {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, allow_negative_numbers = true)]
        min_degree: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        max_degree: Option<i64>,
    },
    /// Gram determinants and the irreducibility verdict
    VermaIrred {
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// Weight multiplicities of a loop module
    LoopMult {
        #[command(flatten)]
        ty: TypeArgs,
        /// Finite part beta, comma separated over the simple roots
        #[arg(long, allow_hyphen_values = true, value_parser = parse_int_list)]
        beta: IntList,
        #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["k_from", "k_to"])]
        k: Option<i64>,
        #[arg(long, allow_negative_numbers = true, requires = "k_to")]
        k_from: Option<i64>,
        #[arg(long, allow_negative_numbers = true, requires = "k_from")]
        k_to: Option<i64>,
        /// Bound on |k_j| for the root-vector factors
        #[arg(long, default_value = DEFAULT_BOUND)]
        window: i64,
        /// Explicit dim V_m as `m:dim,...`
        #[arg(long, allow_hyphen_values = true, conflicts_with = "phi", value_parser = parse_vdims)]
        vdims: Option<VDims>,
        /// Inducing module from imaginary Verma modules; one signature, or one per node separated by `,`
        #[arg(long, allow_hyphen_values = true)]
        phi: Option<String>,
        #[arg(long, allow_negative_numbers = true)]
        level: Option<i64>,
        #[arg(long, default_value = DEFAULT_BOUND)]
        max_index: usize,
        #[arg(long, default_value = DEFAULT_BOUND)]
        max_exponent: u32,
    },
}

#[derive(Debug, Args)]
struct ModuleArgs {
    /// `<prefix>:<period>` over + and -
    #[arg(long, allow_hyphen_values = true, value_parser = parse_phi)]
    phi: PhiSignature,
    #[arg(long, allow_negative_numbers = true)]
    level: i64,
    #[arg(long, default_value = DEFAULT_BOUND)]
    max_index: usize,
    #[arg(long, default_value = DEFAULT_BOUND)]
    max_exponent: u32,
}

type IntList = Vec<i64>;
type VDims = BTreeMap<i64, u128>;

fn parse_series(s: &str) -> std::result::Result<Series, String> {
    s.parse::<Series>().map_err(|e| e.to_string())
}

fn parse_convention(s: &str) -> std::result::Result<StructureConvention, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_phi(s: &str) -> std::result::Result<PhiSignature, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_int_list(s: &str) -> std::result::Result<IntList, String> {
    s.split(',').map(|t| t.trim().parse::<i64>().map_err(|e| format!("`{t}`: {e}"))).collect()
}

fn parse_vdims(s: &str) -> std::result::Result<VDims, String> {
    s.split(',')
        .map(|entry| {
            let (m, d) = entry.split_once(':').ok_or_else(|| format!("`{entry}` is not `m:dim`"))?;
            let m = m.trim().parse::<i64>().map_err(|e| format!("`{m}`: {e}"))?;
            let d = d.trim().parse::<u128>().map_err(|e| format!("`{d}`: {e}"))?;
            Ok((m, d))
        })
        .collect()
}

#[derive(Debug, PartialEq, Eq)]
enum Outcome {
    Ok,
    Fail,
}

struct Ctx<'a> {
    format: Format,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn json<T: Serialize>(&mut self, value: &T) -> Result<()> {
        let text = serde_json::to_string_pretty(value).expect("reports serialize");
        self.line(&text)
    }

    fn line(&mut self, s: &str) -> Result<()> {
        writeln!(self.out, "{s}").map_err(|e| Error::Parse(format!("write failed: {e}")))
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let format = match cli.format {
        Some(f) => f,
        None => match std::env::var("QAFF_FORMAT") {
            Ok(v) => match Format::from_str(&v, true) {
                Ok(f) => f,
                Err(_) => {
                    let _ = writeln!(err, "error: QAFF_FORMAT must be json or table, got `{v}`");
                    return EXIT_USAGE;
                }
            },
            Err(_) => Format::Json,
        },
    };
    let mut ctx = Ctx { format, out };
    match dispatch(cli.command, &mut ctx) {
        Ok(Outcome::Ok) => EXIT_OK,
        Ok(Outcome::Fail) => EXIT_FAIL,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn load(ty: &TypeArgs) -> Result<CartanData> {
    load_type(ty.series, ty.rank)
}

fn positive(name: &str, v: i64) -> Result<()> {
    if v < 1 {
        return Err(Error::InvalidBound(format!("--{name} must be >= 1, got {v}")));
    }
    Ok(())
}

fn dispatch(command: Command, ctx: &mut Ctx<'_>) -> Result<Outcome> {
    match command {
        Command::Cartan(ty) => cartan(&load(&ty)?, ctx),
        Command::Qnum { n, d, at_q1 } => {
            positive("d", d as i64)?;
            let v = qint(n, d);
            let text = if at_q1 { specialize_q1(&v)?.to_string() } else { v.to_string() };
            ctx.line(&text)?;
            Ok(Outcome::Ok)
        }
        Command::HeisVerify { ty, max_k, convention, level } => {
            positive("max-k", max_k)?;
            let cd = load(&ty)?;
            let mut h = HeisenbergAlgebra::new(cd.clone(), convention);
            if let Some(l) = level {
                h = h.at_level(l)?;
            }
            let report = h.verify_canonical_relations(max_k)?;
            let header = ReportHeader { r#type: cd.label(), convention: convention.name(), level, max_k };
            relation_report(header, &report, ctx)
        }
        Command::WeylVerify { ty, level, max_k, convention } => {
            positive("max-k", max_k)?;
            let cd = load(&ty)?;
            let report = verify_iso(&cd, convention, level, max_k)?;
            let header = ReportHeader { r#type: cd.label(), convention: convention.name(), level: Some(level), max_k };
            relation_report(header, &report, ctx)
        }
        Command::VermaDims { module, min_degree, max_degree } => {
            let m = build_module(&module)?;
            let n = module.max_index as i64;
            let (lo, hi) = (min_degree.unwrap_or(-n), max_degree.unwrap_or(n));
            if lo > hi {
                return Err(Error::InvalidBound(format!("--min-degree {lo} exceeds --max-degree {hi}")));
            }
            let degrees: Vec<_> = (lo..=hi).map(|d| m.graded_dim(d)).collect();
            match ctx.format {
                Format::Json => ctx.json(&DimsReport {
                    phi: m.phi(),
                    level: m.level(),
                    truncation: m.truncation(),
                    degrees,
                })?,
                Format::Table => {
                    ctx.line("n,dim,verdict")?;
                    for d in &degrees {
                        ctx.line(&format!("{},{},{}", d.n, d.dim, d.verdict))?;
                    }
                }
            }
            Ok(Outcome::Ok)
        }
        Command::VermaIrred { module } => {
            let report = build_module(&module)?.report()?;
            match ctx.format {
                Format::Json => ctx.json(&report)?,
                Format::Table => {
                    ctx.line(&format!("verdict: {}", report.verdict))?;
                    if let Some(w) = report.witness_degree {
                        ctx.line(&format!("witness degree: {w}"))?;
                    }
                    ctx.line("n,nonzero,det")?;
                    for g in &report.gram {
                        ctx.line(&format!("{},{},{}", g.n, g.nonzero, g.det))?;
                    }
                }
            }
            Ok(Outcome::Ok)
        }
        Command::LoopMult { ty, beta, k, k_from, k_to, window, vdims, phi, level, max_index, max_exponent } => {
            if window < 0 {
                return Err(Error::InvalidBound(format!("--window must be >= 0, got {window}")));
            }
            let cd = load(&ty)?;
            let (from, to) = match (k, k_from, k_to) {
                (Some(k), _, _) => (k, k),
                (None, Some(a), Some(b)) if a <= b => (a, b),
                (None, Some(a), Some(b)) => {
                    return Err(Error::InvalidBound(format!("--k-from {a} exceeds --k-to {b}")))
                }
                _ => return Err(Error::InvalidBound("give --k or --k-from/--k-to".into())),
            };
            let reports: Vec<MultiplicityReport> = match (vdims, phi) {
                (Some(v), None) => {
                    let v = GradedDims::explicit(v);
                    (from..=to).map(|k| weight_multiplicity(&cd, &beta, k, &v, window)).collect::<Result<_>>()?
                }
                (None, Some(p)) => {
                    let level = level.ok_or_else(|| Error::InvalidBound("--phi needs --level".into()))?;
                    let phis: Vec<PhiSignature> = p.split(',').map(str::parse).collect::<Result<_>>()?;
                    module_bounds(max_index, max_exponent)?;
                    let bounds = VermaBounds { max_index, max_exponent, max_abs_k: window };
                    (from..=to)
                        .map(|k| phi_verma_weight_dim(&cd, &phis, level, &beta, k, bounds))
                        .collect::<Result<_>>()?
                }
                _ => return Err(Error::InvalidBound("give exactly one of --vdims or --phi".into())),
            };
            match ctx.format {
                Format::Json => ctx.json(&reports)?,
                Format::Table => {
                    ctx.line(MultiplicityReport::CSV_HEADER)?;
                    for r in &reports {
                        ctx.line(&r.csv_row())?;
                    }
                }
            }
            Ok(Outcome::Ok)
        }
    }
}

#[derive(Serialize)]
struct DimsReport<'a> {
    phi: &'a PhiSignature,
    level: i64,
    truncation: Truncation,
    degrees: Vec<GradedDimReport>,
}

fn module_bounds(max_index: usize, max_exponent: u32) -> Result<()> {
    positive("max-index", max_index as i64)?;
    positive("max-exponent", max_exponent as i64)
}

fn build_module(args: &ModuleArgs) -> Result<VermaModule> {
    module_bounds(args.max_index, args.max_exponent)?;
    VermaModule::build(args.phi.clone(), args.level, args.max_index, args.max_exponent)
}

fn cartan(cd: &CartanData, ctx: &mut Ctx<'_>) -> Result<Outcome> {
    match ctx.format {
        Format::Json => ctx.json(&cd.to_json())?,
        Format::Table => {
            ctx.line(&format!("type {}", cd.label()))?;
            for row in &cd.gcm {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
                ctx.line(&cells.join(""))?;
            }
            let d: Vec<String> = cd.d.iter().map(|x| x.to_string()).collect();
            ctx.line(&format!("d {}", d.join(" ")))?;
        }
    }
    Ok(Outcome::Ok)
}

#[derive(Serialize)]
struct ReportHeader {
    r#type: String,
    convention: &'static str,
    level: Option<i64>,
    max_k: i64,
}

#[derive(Serialize)]
struct RelationReport<'a> {
    #[serde(flatten)]
    header: ReportHeader,
    pass: bool,
    relations: &'a [RelationCheck],
}

fn relation_report(header: ReportHeader, report: &[RelationCheck], ctx: &mut Ctx<'_>) -> Result<Outcome> {
    let pass = all_pass(report);
    match ctx.format {
        Format::Json => ctx.json(&RelationReport { header, pass, relations: report })?,
        Format::Table => {
            for r in report {
                if r.pass {
                    ctx.line(&format!("PASS {}", r.relation_id))?;
                } else {
                    ctx.line(&format!("FAIL {} residue: {}", r.relation_id, r.residue))?;
                }
            }
            let failed = report.iter().filter(|r| !r.pass).count();
            ctx.line(&format!("{} relations, {} failed", report.len(), failed))?;
        }
    }
    Ok(if pass { Outcome::Ok } else { Outcome::Fail })
}
