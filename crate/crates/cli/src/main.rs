//! `saddleq` — saddle quantities, reversibility, and symmetry ideals of
//! p:-q resonant planar polynomial systems, from the command line.
//!
//! - `quantities --level K <file>`: saddle quantities g_1 .. g_K
//! - `integral --degree D <file>`: first-integral coefficient table
//! - `reversible <file>`: time-reversibility verdict for a numeric family
//! - `sibirsky --level K <file>`: binomial symmetry-ideal generators
//! - `implicitize [--check-against sibirsky --level K] <file>`: the symmetry
//!   ideal by elimination, optionally checked against the binomial generators
//! - `membership --level K <file> <expr>`: symmetry-ideal membership test
//! - `groebner --order <lex|deglex|degrevlex> <file>`: reduced Groebner basis
//!
//! Exit codes: 0 success, 1 negative mathematical verdict (not reversible,
//! not a member, ideals differ), 2 input error. `--json <path>` writes a
//! machine-readable run report.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use saddleq::groebner::{buchberger, ideal_equal, ideal_membership, implicitize_with};
use saddleq::integral::{compute_first_integral, compute_saddle_quantities};
use saddleq::polyring::{parse_polynomial, MonomialOrder, Polynomial, VariableSet};
use saddleq::reversibility::{is_time_reversible, sibirsky_generators, AbOrder};
use saddleq::system::SystemFamily;
use saddleq::Rat;

use saddleq_cli::report::{family_json, poly_json, polys_json, Report};
use saddleq_cli::sysfile::parse_system_file;

#[derive(Parser)]
#[command(name = "saddleq", version, about = "Exact saddle quantities, reversibility, and symmetry ideals of resonant planar systems")]
struct Cli {
    /// Write a JSON run report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the saddle quantities g_1 .. g_K of a system file.
    Quantities {
        /// Highest quantity level K.
        #[arg(long, default_value_t = 3, value_name = "K")]
        level: u32,
        file: PathBuf,
    },
    /// Compute the first-integral coefficient table up to a total degree.
    Integral {
        /// Truncation degree D.
        #[arg(long, default_value_t = 12, value_name = "D")]
        degree: u32,
        file: PathBuf,
    },
    /// Decide time-reversal symmetry of a fully numeric system file.
    Reversible { file: PathBuf },
    /// List the binomial symmetry-ideal generators up to a level.
    Sibirsky {
        /// Highest monoid level K.
        #[arg(long, default_value_t = 3, value_name = "K")]
        level: u32,
        file: PathBuf,
    },
    /// Present the symmetry ideal by Groebner-basis elimination.
    Implicitize {
        /// Also check the result against another construction (`sibirsky`).
        #[arg(long, value_name = "WHAT")]
        check_against: Option<String>,
        /// Monoid level K for the `--check-against sibirsky` generators.
        #[arg(long, default_value_t = 3, value_name = "K")]
        level: u32,
        /// Coefficient-variable order inside the elimination ring.
        #[arg(long, value_enum, default_value_t = AbOrderArg::Name)]
        ab_order: AbOrderArg,
        file: PathBuf,
    },
    /// Test membership of a polynomial in the symmetry ideal at a level.
    Membership {
        /// Highest monoid level K for the ideal generators.
        #[arg(long, default_value_t = 3, value_name = "K")]
        level: u32,
        file: PathBuf,
        /// Polynomial expression in the family's coefficient variables.
        expr: String,
    },
    /// Compute the reduced Groebner basis of the polynomials in a file.
    Groebner {
        /// Monomial order for the basis.
        #[arg(long, value_enum, default_value_t = OrderArg::Degrevlex)]
        order: OrderArg,
        file: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Deglex,
    Degrevlex,
}

impl OrderArg {
    fn to_order(self) -> MonomialOrder {
        match self {
            OrderArg::Lex => MonomialOrder::Lex,
            OrderArg::Deglex => MonomialOrder::DegLex,
            OrderArg::Degrevlex => MonomialOrder::DegRevLex,
        }
    }

    fn name(self) -> &'static str {
        match self {
            OrderArg::Lex => "lex",
            OrderArg::Deglex => "deglex",
            OrderArg::Degrevlex => "degrevlex",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AbOrderArg {
    /// The family's own slot order.
    Family,
    /// Alphabetical by variable name.
    Name,
}

impl AbOrderArg {
    fn to_order(self) -> AbOrder {
        match self {
            AbOrderArg::Family => AbOrder::Family,
            AbOrderArg::Name => AbOrder::Name,
        }
    }

    fn name(self) -> &'static str {
        match self {
            AbOrderArg::Family => "family",
            AbOrderArg::Name => "name",
        }
    }
}

/// Print one line to stdout; when the reader has closed the pipe, stop the
/// way a signal-terminated process would (128 + SIGPIPE).
fn emit(args: std::fmt::Arguments) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if out
        .write_fmt(args)
        .and_then(|()| out.write_all(b"\n"))
        .is_err()
    {
        std::process::exit(141);
    }
}

macro_rules! outln {
    ($($t:tt)*) => { emit(format_args!($($t)*)) };
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Dispatch one command. `Ok(true)` is a positive verdict (exit 0),
/// `Ok(false)` a negative one (exit 1), `Err` an input error (exit 2).
fn run(cli: &Cli) -> Result<bool, String> {
    let started = Instant::now();
    let (command, family, result, verdict) = match &cli.command {
        Command::Quantities { level, file } => {
            let fam = load_family(file)?;
            let qs = compute_saddle_quantities(&fam, *level).map_err(|e| e.to_string())?;
            for k in 1..=*level {
                outln!("g_{k} = {}", qs.g(k));
            }
            let result = json!({
                "level": level,
                "quantities": polys_json(qs.quantities()),
            });
            ("quantities", Some(family_json(&fam)), result, true)
        }
        Command::Integral { degree, file } => {
            let fam = load_family(file)?;
            let table = compute_first_integral(&fam, *degree).map_err(|e| e.to_string())?;
            let mut entries = Vec::new();
            for (&(k1, k2), v) in table.iter() {
                outln!("v({k1}, {k2}) = {v}");
                entries.push(json!({"k1": k1, "k2": k2, "value": poly_json(v)}));
            }
            let result = json!({"degree": degree, "entries": entries});
            ("integral", Some(family_json(&fam)), result, true)
        }
        Command::Reversible { file } => {
            let fam = load_family(file)?;
            let rep = is_time_reversible(&fam).map_err(|e| e.to_string())?;
            outln!("reversible: {}", rep.reversible);
            let mut violations = Vec::new();
            for v in &rep.violations {
                outln!(
                    "term ({}, {}): b = {}, expected {}",
                    v.index.u, v.index.v, v.b, v.expected
                );
                violations.push(json!({
                    "u": v.index.u,
                    "v": v.index.v,
                    "b": v.b.to_string(),
                    "expected": v.expected.to_string(),
                }));
            }
            let result = json!({"reversible": rep.reversible, "violations": violations});
            let verdict = rep.reversible;
            ("reversible", Some(family_json(&fam)), result, verdict)
        }
        Command::Sibirsky { level, file } => {
            let fam = load_family(file)?;
            let gens = sibirsky_generators(&fam, *level).map_err(|e| e.to_string())?;
            for g in gens.generators() {
                outln!("{g}");
            }
            let result = json!({"level": level, "generators": polys_json(gens.generators())});
            ("sibirsky", Some(family_json(&fam)), result, true)
        }
        Command::Implicitize {
            check_against,
            level,
            ab_order,
            file,
        } => {
            let fam = load_family(file)?;
            let gens =
                implicitize_with(&fam, ab_order.to_order()).map_err(|e| e.to_string())?;
            for g in &gens {
                outln!("{g}");
            }
            let mut result = json!({
                "ab_order": ab_order.name(),
                "generators": polys_json(&gens),
            });
            let mut verdict = true;
            if let Some(target) = check_against {
                if target != "sibirsky" {
                    return Err(format!(
                        "unknown check target `{target}` (expected `sibirsky`)"
                    ));
                }
                let sib = sibirsky_generators(&fam, *level).map_err(|e| e.to_string())?;
                let equal = ideals_equal(&gens, sib.generators())?;
                outln!("ideals equal: {equal}");
                result["checked_against"] = json!("sibirsky");
                result["level"] = json!(level);
                result["ideals_equal"] = json!(equal);
                verdict = equal;
            }
            ("implicitize", Some(family_json(&fam)), result, verdict)
        }
        Command::Membership { level, file, expr } => {
            let fam = load_family(file)?;
            let f = parse_polynomial(expr, fam.param_vars()).map_err(|e| e.to_string())?;
            let gens = sibirsky_generators(&fam, *level).map_err(|e| e.to_string())?;
            let member = if gens.generators().is_empty() {
                f.is_zero()
            } else {
                ideal_membership(&f, gens.generators(), &MonomialOrder::DegRevLex)
                    .map_err(|e| e.to_string())?
            };
            outln!("member: {member}");
            let result = json!({
                "expression": f.to_string(),
                "level": level,
                "member": member,
            });
            ("membership", Some(family_json(&fam)), result, member)
        }
        Command::Groebner { order, file } => {
            let text = read_file(file)?;
            let (_, polys) = parse_poly_file(&text)?;
            if polys.is_empty() {
                return Err("the file contains no polynomials".into());
            }
            let gb = buchberger(&polys, &order.to_order())
                .map_err(|e| e.to_string())?
                .reduce();
            for g in gb.elements() {
                outln!("{g}");
            }
            let result = json!({"order": order.name(), "basis": polys_json(gb.elements())});
            ("groebner", None, result, true)
        }
    };
    if let Some(path) = &cli.json {
        let report = Report {
            command: command.to_string(),
            family,
            result,
            millis: started.elapsed().as_millis(),
        };
        let text = serde_json::to_string_pretty(&report)
            .map_err(|e| format!("cannot serialize the report: {e}"))?;
        fs::write(path, text + "\n")
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(verdict)
}

fn read_file(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn load_family(path: &Path) -> Result<SystemFamily<Rat>, String> {
    parse_system_file(&read_file(path)?)
        .map_err(|e| format!("{}: {e}", path.display()))
}

/// Ideal equality that treats an empty generator list as the zero ideal.
fn ideals_equal(f1: &[Polynomial<Rat>], f2: &[Polynomial<Rat>]) -> Result<bool, String> {
    let z1 = f1.iter().all(|f| f.is_zero());
    let z2 = f2.iter().all(|f| f.is_zero());
    if z1 || z2 {
        return Ok(z1 && z2);
    }
    ideal_equal(f1, f2, &MonomialOrder::DegRevLex).map_err(|e| e.to_string())
}

/// Parse a polynomial file: a `vars <name>...` line, then one polynomial per
/// line; `#` comments and blank lines are ignored.
fn parse_poly_file(text: &str) -> Result<(VariableSet, Vec<Polynomial<Rat>>), String> {
    let mut vars: Option<VariableSet> = None;
    let mut polys = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let number = i + 1;
        match &vars {
            None => {
                let mut tokens = line.split_whitespace();
                if tokens.next() != Some("vars") {
                    return Err(format!(
                        "line {number}: the first content line must be `vars <name>...`"
                    ));
                }
                let names: Vec<&str> = tokens.collect();
                if names.is_empty() {
                    return Err(format!("line {number}: `vars` needs at least one name"));
                }
                vars = Some(VariableSet::new(names).map_err(|e| format!("line {number}: {e}"))?);
            }
            Some(ring) => {
                let f = parse_polynomial(line, ring)
                    .map_err(|e| format!("line {number}: {e}"))?;
                polys.push(f);
            }
        }
    }
    let vars = vars.ok_or("the file contains no `vars` line")?;
    Ok((vars, polys))
}
