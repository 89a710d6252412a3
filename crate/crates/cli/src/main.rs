//! `hlspringer`: compute, expand, count and verify graded Frobenius characteristics of
//! Δ-Springer varieties.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hlspringer::fillings::frob_delta_with;
use hlspringer::fqgeom::{count_steinberg, count_y_mu, count_z, spaltenstein_projection, FillingKind};
use hlspringer::hlexp::{hl_rhs_with, hl_terms};
use hlspringer::symfunc::hl_modified;
use hlspringer::verify::{run, Identity, SweepConfig};
use hlspringer::{Basis, Budget, Composition, DeltaInstance, Error, Int, Partition, QPoly, SymFunc};

const EXIT_VIOLATED: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "hlspringer", version, about = "Frobenius characteristics of Δ-Springer varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Work budget (enumerated objects per call).
    #[arg(long, global = true, env = "HLSPRINGER_BUDGET")]
    budget: Option<u128>,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Graded Frobenius characteristic as a sum over PRD fillings.
    Frob {
        #[command(flatten)]
        inst: InstanceArgs,
        #[arg(long, value_enum, default_value_t = BasisArg::M)]
        basis: BasisArg,
    },
    /// Hall–Littlewood expansion, term by term, plus its sum.
    HlExpand {
        #[command(flatten)]
        inst: InstanceArgs,
        #[arg(long, value_enum, default_value_t = BasisArg::M)]
        basis: BasisArg,
    },
    /// Brute-force F_p point count of a variety.
    Count {
        #[arg(long, value_enum)]
        variety: Variety,
        #[command(flatten)]
        inst: InstanceArgs,
        /// Flag type, comma separated (may contain zeros).
        #[arg(long, default_value = "")]
        mu: String,
        /// Composition α ⊇ λ for `z` and `zhat`.
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long, default_value_t = 2)]
        p: u32,
    },
    /// Sweep an identity over a range of instances (`all` runs every identity).
    Verify {
        identity: String,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_s: usize,
        /// Largest K for the point-count identities.
        #[arg(long, default_value_t = 5)]
        max_k: usize,
        /// Primes for the point-count identities, comma separated.
        #[arg(long, default_value = "2,3")]
        p: String,
    },
    /// Hilbert series: the coefficient of m_{1^n}.
    Hilb {
        #[command(flatten)]
        inst: InstanceArgs,
    },
}

#[derive(Args, Debug)]
struct InstanceArgs {
    #[arg(long, default_value_t = 0)]
    n: usize,
    /// Comma separated parts; empty for the empty partition.
    #[arg(long, default_value = "")]
    lambda: String,
    #[arg(long, default_value_t = 1)]
    s: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisArg {
    M,
    S,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::M => Basis::Monomial,
            BasisArg::S => Basis::Schur,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Variety {
    Ymu,
    Steinberg,
    Z,
    Zhat,
    Spaltenstein,
}

impl Variety {
    fn name(self) -> &'static str {
        match self {
            Variety::Ymu => "ymu",
            Variety::Steinberg => "steinberg",
            Variety::Z => "z",
            Variety::Zhat => "zhat",
            Variety::Spaltenstein => "spaltenstein",
        }
    }
}

/// Parsed output: JSON document plus the rows used for `--format csv`.
struct Report {
    json: Value,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    violated: bool,
}

fn parse_list(s: &str) -> Result<Vec<usize>, Error> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| Error::InvalidArguments(format!("bad list entry {t:?} in {s:?}"))))
        .collect()
}

fn parse_partition(s: &str) -> Result<Partition, Error> {
    Partition::new(parse_list(s)?)
}

impl InstanceArgs {
    fn build(&self) -> Result<DeltaInstance, Error> {
        DeltaInstance::new(self.n, parse_partition(&self.lambda)?, self.s)
    }
}

fn cell(v: impl serde::Serialize) -> String {
    serde_json::to_string(&v).expect("serializable")
}

fn sym_rows(f: &SymFunc) -> Vec<Vec<String>> {
    let mut rows = Vec::new();
    for (lambda, c) in f.terms().iter().rev() {
        for (d, a) in c.coeffs().iter().enumerate() {
            if *a != Int::from(0) {
                rows.push(vec![cell(lambda), d.to_string(), a.to_string()]);
            }
        }
    }
    rows
}

fn poly_rows(c: &QPoly) -> Vec<Vec<String>> {
    c.coeffs().iter().enumerate().map(|(d, a)| vec![d.to_string(), a.to_string()]).collect()
}

fn execute(cli: &Cli, budget: Budget) -> Result<Report, Error> {
    match &cli.command {
        Command::Frob { inst, basis } => {
            let inst = inst.build()?;
            let f = frob_delta_with::<Int>(&inst, budget)?.to_basis((*basis).into())?;
            Ok(Report {
                json: serde_json::to_value(&f).expect("serializable"),
                header: vec!["partition", "q_degree", "coeff"],
                rows: sym_rows(&f),
                violated: false,
            })
        }
        Command::HlExpand { inst, basis } => {
            let inst = inst.build()?;
            let basis: Basis = (*basis).into();
            let sum = hl_rhs_with::<Int>(&inst, budget)?.to_basis(basis)?;
            let mut terms = Vec::new();
            let mut rows = Vec::new();
            for t in hl_terms::<Int>(&inst) {
                let h = hl_modified::<Int>(&t.nu);
                rows.push(vec![cell(&t.nu), t.exponent.to_string(), cell(&t.product)]);
                terms.push(json!({
                    "nu": t.nu,
                    "exponent": t.exponent,
                    "qbinom_product": t.product,
                    "h_tilde": h,
                }));
            }
            Ok(Report {
                json: json!({"instance": inst, "terms": terms, "sum": sum}),
                header: vec!["nu", "exponent", "qbinom_product"],
                rows,
                violated: false,
            })
        }
        Command::Count { variety, inst, mu, alpha, p } => {
            let mu_c = Composition::new(parse_list(mu)?);
            let (instance, count): (Value, u128) = match variety {
                Variety::Steinberg => {
                    let lambda = parse_partition(&inst.lambda)?;
                    let c = count_steinberg(&lambda, &mu_c, *p, budget)?;
                    (json!({"lambda": lambda}), c)
                }
                Variety::Spaltenstein => {
                    let i = inst.build()?;
                    let c = spaltenstein_projection(&i, *p, budget)? as u128;
                    (json!(i), c)
                }
                Variety::Ymu => {
                    let i = inst.build()?;
                    let c = count_y_mu(&i, &mu_c, *p, FillingKind::Reading, false, budget)?;
                    (json!(i), c)
                }
                Variety::Z | Variety::Zhat => {
                    let i = inst.build()?;
                    let alpha = alpha
                        .as_deref()
                        .ok_or_else(|| Error::InvalidArguments("--alpha is required for z and zhat".into()))?;
                    let alpha = Composition::new(parse_list(alpha)?);
                    let c = count_z(&i, &alpha, &mu_c, *p, matches!(variety, Variety::Zhat), budget)?;
                    (json!({"instance": i, "alpha": alpha}), c)
                }
            };
            let name = variety.name();
            Ok(Report {
                rows: vec![vec![name.to_string(), cell(&instance), cell(&mu_c), p.to_string(), count.to_string()]],
                json: json!({"instance": instance, "mu": mu_c, "p": p, "variety": name, "count": count}),
                header: vec!["variety", "instance", "mu", "p", "count"],
                violated: false,
            })
        }
        Command::Verify { identity, max_n, max_s, max_k, p } => {
            let ids: Vec<Identity> = if identity == "all" { Identity::ALL.to_vec() } else { vec![identity.parse()?] };
            let primes = parse_list(p)?.into_iter().map(|x| x as u32).collect();
            let cfg = SweepConfig { max_n: *max_n, max_s: *max_s, max_k: *max_k, primes, budget };
            let mut reports = Vec::new();
            for id in ids {
                reports.push(run(id, &cfg)?);
            }
            let violated = reports.iter().any(|r| !r.passed);
            let rows = reports
                .iter()
                .map(|r| vec![r.identity.to_string(), r.checked.to_string(), r.passed.to_string(), cell(&r.counterexample)])
                .collect();
            let json = if reports.len() == 1 {
                serde_json::to_value(&reports[0])
            } else {
                serde_json::to_value(&reports)
            }
            .expect("serializable");
            Ok(Report { json, header: vec!["identity", "checked", "passed", "counterexample"], rows, violated })
        }
        Command::Hilb { inst } => {
            let inst = inst.build()?;
            let f = frob_delta_with::<Int>(&inst, budget)?;
            let h = f.coeff(&Partition::new(vec![1; inst.n()])?);
            Ok(Report {
                json: json!({"instance": inst, "hilbert": h}),
                header: vec!["q_degree", "coeff"],
                rows: poly_rows(&h),
                violated: false,
            })
        }
    }
}

fn render(report: &Report, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.json).expect("serializable");
            s.push('\n');
            s.into_bytes()
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&report.header).expect("in-memory write");
            for r in &report.rows {
                w.write_record(r).expect("in-memory write");
            }
            w.into_inner().expect("in-memory write")
        }
    }
}

fn fail(kind: &str, message: String, code: u8) -> ExitCode {
    eprintln!("{}", json!({"error": kind, "message": message}));
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail("InvalidArguments", e.to_string().trim_end().to_string(), EXIT_INVALID),
    };
    let budget = cli.budget.map(Budget).unwrap_or_default();
    let report = match execute(&cli, budget) {
        Ok(r) => r,
        Err(e) => {
            let code = if matches!(e, Error::ResourceLimit { .. }) { EXIT_RESOURCE } else { EXIT_INVALID };
            return fail(e.kind(), e.to_string(), code);
        }
    };
    let bytes = render(&report, cli.format);
    let written = match &cli.out {
        Some(path) => fs::write(path, &bytes),
        None => std::io::stdout().write_all(&bytes),
    };
    if let Err(e) = written {
        return fail("Io", e.to_string(), EXIT_INVALID);
    }
    if report.violated {
        ExitCode::from(EXIT_VIOLATED)
    } else {
        ExitCode::SUCCESS
    }
}
