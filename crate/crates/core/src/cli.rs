//! Command-line front end. `run` returns the process exit status:
//! 0 success, 1 table rows failed, 2 validation error, 3 distance budget
//! exceeded, 4 formula/oracle disagreement.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::code::DEFAULT_BUDGET;
use crate::descriptor::CodeSpec;
use crate::error::{Error, Result};
use crate::fc::{fc_lcp, FourCirculantSpec};
use crate::gf::Field;
use crate::poly::factor_xm_minus_1;
use crate::qc::{dc_lcp, lcp_maximal_2qc, DcSpec, QcOneGenSpec};
use crate::search::{self, Family, Mode, RowStatus, SearchTask};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ROWS_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_DISAGREE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "qchull",
    version,
    about = "Hull, LCD and LCP analysis of QC, DC and FC codes"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Cap on codewords enumerated per minimum-distance computation.
    #[arg(long, default_value_t = DEFAULT_BUDGET, global = true)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AnalyzeFamily {
    Qc1gen,
    Dc,
    Fc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LcpFamily {
    Dc,
    Qc2max,
    Fc,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Factor x^m - 1 into self-reciprocal factors and reciprocal pairs.
    Factor {
        /// Field: `q`, `p^k` or `q:modulus=<poly>`.
        #[arg(long)]
        q: String,
        #[arg(long)]
        m: usize,
    },
    /// Dimension, hull dimension (formula and oracle), LCD verdict, distance.
    Analyze {
        #[arg(long, value_enum)]
        family: AnalyzeFamily,
        #[arg(long)]
        q: String,
        #[arg(long)]
        m: usize,
        /// Comma-separated generator polynomials.
        #[arg(long, value_delimiter = ',', required = true)]
        gen: Vec<String>,
    },
    /// LCP verdict (formula and oracle) and security parameter of a pair.
    Lcp {
        #[arg(long, value_enum)]
        family: LcpFamily,
        #[arg(long)]
        q: String,
        #[arg(long)]
        m: usize,
        #[arg(long = "genC", alias = "gen-c", value_delimiter = ',', required = true)]
        gen_c: Vec<String>,
        #[arg(long = "genD", alias = "gen-d", value_delimiter = ',', required = true)]
        gen_d: Vec<String>,
    },
    /// Search for the best code of a family; exhaustive unless --trials is given.
    Search {
        /// One of qc1gen-lcd, dc-hull1, dc-lcp, fc-lcd, fc-lcp.
        #[arg(long)]
        task: String,
        #[arg(long)]
        q: String,
        #[arg(long)]
        m: usize,
        #[arg(long, requires = "seed")]
        trials: Option<u64>,
        #[arg(long, requires = "trials")]
        seed: Option<u64>,
    },
    /// Re-verify the rows of a reference table (1-8).
    Reproduce {
        #[arg(long)]
        table: u8,
    },
}

struct Outcome {
    json: Value,
    text: String,
    status: i32,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_INVALID,
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its report to `out`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn std::io::Write, err: &mut dyn std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let _ = match cli.format {
                Format::Json => writeln!(out, "{}", o.json),
                Format::Text => write!(out, "{}", o.text),
            };
            o.status
        }
        Err(e) => {
            let code = exit_code(&e);
            match cli.format {
                Format::Json => {
                    let _ = writeln!(out, "{}", json!({ "error": e.to_string(), "exit": code }));
                }
                Format::Text => {
                    let _ = writeln!(err, "error: {e}");
                }
            }
            code
        }
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Factor { q, m } => factor(q, *m),
        Command::Analyze { family, q, m, gen } => analyze(*family, q, *m, gen, cli.budget),
        Command::Lcp {
            family,
            q,
            m,
            gen_c,
            gen_d,
        } => lcp(*family, q, *m, gen_c, gen_d, cli.budget),
        Command::Search {
            task,
            q,
            m,
            trials,
            seed,
        } => run_search(task, q, *m, *trials, *seed, cli.budget),
        Command::Reproduce { table } => reproduce(*table, cli.budget),
    }
}

fn factor(q: &str, m: usize) -> Result<Outcome> {
    let f = Field::parse(q)?;
    let fc = factor_xm_minus_1(m, &f)?;
    let mut text = format!("x^{m}-1 = {}\n", fc.product_string());
    for s in &fc.self_reciprocal {
        let _ = writeln!(text, "self-reciprocal: {s}");
    }
    for (g, h) in &fc.reciprocal_pairs {
        let _ = writeln!(text, "reciprocal pair: {g} , {h}");
    }
    Ok(Outcome {
        json: fc.to_json(),
        text,
        status: EXIT_OK,
    })
}

fn gens_exactly<'a>(gen: &'a [String], n: usize, what: &str) -> Result<Vec<&'a str>> {
    if gen.len() != n {
        return Err(Error::Parse(format!(
            "{what} takes {n} generator polynomial(s), got {}",
            gen.len()
        )));
    }
    Ok(gen.iter().map(String::as_str).collect())
}

fn text_of(pairs: &[(&str, String)]) -> String {
    pairs.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".into(), T::to_string)
}

fn analyze(
    family: AnalyzeFamily,
    q: &str,
    m: usize,
    gen: &[String],
    budget: u64,
) -> Result<Outcome> {
    let f = Field::parse(q)?;
    let spec = match family {
        AnalyzeFamily::Qc1gen => {
            let g: Vec<&str> = gen.iter().map(String::as_str).collect();
            CodeSpec::Qc(QcOneGenSpec::parse(&f, m, &g)?)
        }
        AnalyzeFamily::Dc => CodeSpec::Dc(DcSpec::parse(&f, m, gens_exactly(gen, 1, "dc")?[0])?),
        AnalyzeFamily::Fc => {
            let g = gens_exactly(gen, 2, "fc")?;
            CodeSpec::Fc(FourCirculantSpec::parse(&f, m, g[0], g[1])?)
        }
    };
    let (g, h) = match &spec {
        CodeSpec::Qc(s) => (Some(s.generator_poly()), Some(s.parity_check_poly())),
        CodeSpec::Dc(s) => {
            let qc = s.to_qc();
            (Some(qc.generator_poly()), Some(qc.parity_check_poly()))
        }
        CodeSpec::Fc(_) => (None, None),
    };
    let code = spec.build_code();
    let formula = spec.hull_dim_formula();
    let oracle = code.hull_dim();
    let agree = formula == oracle;
    let (distance, distance_status, mut status) = match code.min_distance(budget) {
        Ok(d) => (Some(d), "exact".to_string(), EXIT_OK),
        Err(e @ Error::BudgetExceeded { .. }) => (None, e.to_string(), EXIT_BUDGET),
        Err(Error::ZeroCode) => (None, "zero code".to_string(), EXIT_OK),
        Err(e) => return Err(e),
    };
    if !agree {
        status = EXIT_DISAGREE;
    }
    let json = json!({
        "code": spec.descriptor(),
        "n": code.n(),
        "k": code.k(),
        "g": g.as_ref().map(|p| p.to_string()),
        "h": h.as_ref().map(|p| p.to_string()),
        "hull_formula": formula,
        "hull_oracle": oracle,
        "lcd": formula == 0,
        "distance": distance,
        "distance_status": distance_status,
        "agree": agree,
    });
    let text = text_of(&[
        ("code", spec.descriptor().to_json()),
        (
            "parameters",
            format!("[{}, {}, {}]", code.n(), code.k(), opt(&distance)),
        ),
        ("g(x)", opt(&g)),
        ("h(x)", opt(&h)),
        ("hull (formula)", formula.to_string()),
        ("hull (oracle)", oracle.to_string()),
        ("LCD", (formula == 0).to_string()),
        (
            "distance",
            format!("{} ({distance_status})", opt(&distance)),
        ),
        ("agree", agree.to_string()),
    ]);
    Ok(Outcome { json, text, status })
}

fn lcp(
    family: LcpFamily,
    q: &str,
    m: usize,
    gen_c: &[String],
    gen_d: &[String],
    budget: u64,
) -> Result<Outcome> {
    let f = Field::parse(q)?;
    let (c, d, formula) = match family {
        LcpFamily::Dc => {
            let c = DcSpec::parse(&f, m, gens_exactly(gen_c, 1, "dc")?[0])?;
            let d = DcSpec::parse(&f, m, gens_exactly(gen_d, 1, "dc")?[0])?;
            let v = dc_lcp(&c, &d)?;
            (CodeSpec::Dc(c), CodeSpec::Dc(d), v)
        }
        LcpFamily::Qc2max => {
            let c = QcOneGenSpec::parse(&f, m, &gens_exactly(gen_c, 2, "qc2max")?)?;
            let d = QcOneGenSpec::parse(&f, m, &gens_exactly(gen_d, 2, "qc2max")?)?;
            let v = lcp_maximal_2qc(&c, &d)?;
            (CodeSpec::Qc(c), CodeSpec::Qc(d), v)
        }
        LcpFamily::Fc => {
            let gc = gens_exactly(gen_c, 2, "fc")?;
            let gd = gens_exactly(gen_d, 2, "fc")?;
            let c = FourCirculantSpec::parse(&f, m, gc[0], gc[1])?;
            let d = FourCirculantSpec::parse(&f, m, gd[0], gd[1])?;
            let v = fc_lcp(&c, &d)?;
            (CodeSpec::Fc(c), CodeSpec::Fc(d), v)
        }
    };
    let (cc, dc) = (c.build_code(), d.build_code());
    let oracle = cc.is_complementary(&dc);
    let agree = formula == oracle;
    let mut status = EXIT_OK;
    let mut sp_status = "not LCP".to_string();
    let mut security = None;
    if formula && agree {
        match crate::code::security_parameter(&cc, &dc, budget) {
            Ok(s) => {
                security = Some(s);
                sp_status = "exact".into();
            }
            Err(e @ Error::BudgetExceeded { .. }) => {
                sp_status = e.to_string();
                status = EXIT_BUDGET;
            }
            Err(e) => return Err(e),
        }
    }
    if !agree {
        status = EXIT_DISAGREE;
    }
    let json = json!({
        "c": c.descriptor(),
        "d": d.descriptor(),
        "n": cc.n(),
        "k_c": cc.k(),
        "k_d": dc.k(),
        "lcp_formula": formula,
        "lcp_oracle": oracle,
        "agree": agree,
        "security_parameter": security,
        "security_status": sp_status,
    });
    let text = text_of(&[
        ("C", c.descriptor().to_json()),
        ("D", d.descriptor().to_json()),
        ("n", cc.n().to_string()),
        ("dim C + dim D", format!("{} + {}", cc.k(), dc.k())),
        ("LCP (formula)", formula.to_string()),
        ("LCP (oracle)", oracle.to_string()),
        (
            "security parameter",
            format!("{} ({sp_status})", opt(&security)),
        ),
        ("agree", agree.to_string()),
    ]);
    Ok(Outcome { json, text, status })
}

fn run_search(
    task: &str,
    q: &str,
    m: usize,
    trials: Option<u64>,
    seed: Option<u64>,
    budget: u64,
) -> Result<Outcome> {
    let family: Family = task.parse()?;
    let mode = match (trials, seed) {
        (Some(trials), Some(seed)) => Mode::Random { trials, seed },
        _ => Mode::Exhaustive,
    };
    let t = SearchTask {
        family,
        field: Field::parse(q)?,
        m,
        mode,
        distance_budget: budget,
    };
    let r = search::run_search(&t)?;
    let witness: Vec<String> = r.witness.iter().map(|w| w.to_json()).collect();
    let mut text = text_of(&[
        ("task", format!("{family} over GF({}) m={m}", r.q)),
        ("best distance", opt(&r.best_distance)),
        ("candidates examined", r.candidates_examined.to_string()),
        ("admissible", r.candidates_admissible.to_string()),
        ("over budget", r.budget_exceeded.to_string()),
        ("verified", r.verified.to_string()),
    ]);
    for w in witness {
        let _ = writeln!(text, "witness: {w}");
    }
    if let Some(n) = &r.note {
        let _ = writeln!(text, "note: {n}");
    }
    let status = if r.budget_exceeded > 0 {
        EXIT_BUDGET
    } else {
        EXIT_OK
    };
    Ok(Outcome {
        json: to_value(&r),
        text,
        status,
    })
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn reproduce(table: u8, budget: u64) -> Result<Outcome> {
    let rows = search::reproduce_table(table, budget)?;
    let mut text = String::new();
    for r in &rows {
        let _ = writeln!(
            text,
            "table {} m={:<3} {:<7} d={} expected={} d*={}  {}",
            r.table,
            r.m,
            r.status,
            opt(&r.observed_d),
            r.expected_d,
            r.d_star,
            r.detail
        );
    }
    let status = if rows.iter().any(|r| r.agree == Some(false)) {
        EXIT_DISAGREE
    } else if rows.iter().any(|r| r.status == RowStatus::Fail) {
        EXIT_ROWS_FAILED
    } else {
        EXIT_OK
    };
    Ok(Outcome {
        json: to_value(&rows),
        text,
        status,
    })
}
