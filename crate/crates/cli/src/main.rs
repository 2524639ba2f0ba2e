use std::fmt::Write as _;
use std::process::ExitCode;

use chargelab::fillings::charge::{charge_trace, parse_word, split_charge, ls_charge, ChargeTrace};
use chargelab::fillings::{
    arm_statistic, content, enumerate_b_mu, filling_map, from_kn_columns, ord, parse_columns, Filling,
};
use chargelab::folding::{collect_admissible, fold_sets, weight_of};
use chargelab::kn::{is_kn_column, split_column};
use chargelab::poly::{charge_formula_t0, ram_yip_t0, BigPoly};
use chargelab::verify::{self, Fault, Scope};
use chargelab::{qbg, Error, Family, Letter, LieType, MuChain, WeylElement};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "charge-lab", version, about = "Macdonald polynomials at t = 0 in types A and C")]
struct Cli {
    /// Root system type.
    #[arg(long = "type", global = true, value_enum, default_value = "A")]
    family: FamilyArg,
    /// Rank parameter: the window length of the Weyl group.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Dominant weight without trailing zeros, e.g. 3,2,1.
    #[arg(long, global = true, default_value = "")]
    mu: String,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, global = true, value_enum, default_value = "ramyip")]
    method: Method,
    /// Print the charge word with selection indices.
    #[arg(long, global = true)]
    trace: bool,
    /// Verification scope: default, a suite name, or e.g. A-qbg.
    #[arg(long, global = true, default_value = "default")]
    scope: String,
    /// Worker threads; 0 lets the runtime decide.
    #[arg(long, global = true, env = "CHARGE_LAB_JOBS", default_value_t = 0)]
    jobs: usize,
    #[arg(long, global = true, hide = true)]
    inject_fault: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FamilyArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "C", alias = "c")]
    C,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Ramyip,
    Charge,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the μ-chain of roots.
    Chain,
    /// Compute P_μ(X; q, 0).
    Poly {
        /// Also list the coefficients of dominant monomials as polynomials in q.
        #[arg(long)]
        table: bool,
    },
    /// Charge of a filling in B_μ, or of a word with --word.
    Charge {
        /// Inline columns such as "2 | 1,2,4 | 2,3,4 | 3,5,6", or a JSON filling.
        filling: Option<String>,
        /// Type C inline input lists split columns instead of KN columns.
        #[arg(long)]
        split: bool,
        /// A word over 1, 2, ... (type A) or 1, 1', 2, 2', ... (type C).
        #[arg(long, conflicts_with = "filling")]
        word: Option<String>,
    },
    /// Run the exhaustive verification suites.
    Verify,
    /// List admissible folding pairs, or the fillings in B_μ with their charges.
    Enumerate {
        #[arg(value_enum, default_value = "pairs")]
        what: Listing,
    },
    /// Split a KN column into its right and left columns.
    Split { column: String },
    /// Export the quantum Bruhat graph.
    Qbg,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Listing {
    Pairs,
    Fillings,
}

enum Failure {
    Validation(String),
    Verification(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InexactDivision(_) => Failure::Internal(e.to_string()),
            _ => Failure::Validation(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    }
    let outcome = std::panic::catch_unwind(|| dispatch(&cli)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(Failure::Internal(msg))
    });
    match outcome {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Validation(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(out)) => {
            print!("{out}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(3)
        }
    }
}

fn family(cli: &Cli) -> Family {
    match cli.family {
        FamilyArg::A => Family::A,
        FamilyArg::C => Family::C,
    }
}

fn lie(cli: &Cli) -> Result<LieType, Failure> {
    let n = cli.n.ok_or_else(|| Failure::Validation("--n is required".into()))?;
    Ok(LieType::new(family(cli), n)?)
}

fn mu(cli: &Cli, lie: LieType) -> Result<Vec<i64>, Failure> {
    let parts = chargelab::weyl::parse_int_list(&cli.mu)?;
    Ok(lie.dominant(&parts)?.padded(lie.n()))
}

fn json_out(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("serializable"))
}

fn dispatch(cli: &Cli) -> Outcome {
    if cli.format == Format::Dot && !matches!(cli.command, Command::Qbg) {
        return Err(Failure::Validation("--format dot is only available for qbg".into()));
    }
    match &cli.command {
        Command::Chain => cmd_chain(cli),
        Command::Poly { table } => cmd_poly(cli, *table),
        Command::Charge { filling, split, word } => cmd_charge(cli, filling.as_deref(), *split, word.as_deref()),
        Command::Verify => cmd_verify(cli),
        Command::Enumerate { what } => cmd_enumerate(cli, *what),
        Command::Split { column } => cmd_split(cli, column),
        Command::Qbg => cmd_qbg(cli),
    }
}

fn cmd_chain(cli: &Cli) -> Outcome {
    let lie = lie(cli)?;
    let chain = MuChain::new(lie, &mu(cli, lie)?)?;
    Ok(match cli.format {
        Format::Json => json_out(&chain.to_json()),
        _ => format!("{chain}\n"),
    })
}

fn poly_json(lie: LieType, mu: &[i64], method: &str, p: &BigPoly) -> Value {
    let mut v = p.to_json();
    v["type"] = json!(lie.family().to_string());
    v["mu"] = json!(mu);
    v["method"] = json!(method);
    v
}

fn render_poly(cli: &Cli, lie: LieType, mu: &[i64], method: &str, p: &BigPoly, table: bool) -> String {
    if cli.format == Format::Json {
        return json_out(&poly_json(lie, mu, method, p));
    }
    let mut out = format!("{p}\n");
    if table {
        for (x, row) in p.dominant_table() {
            let q: BigPoly = row
                .iter()
                .enumerate()
                .fold(BigPoly::zero(0), |acc, (d, c)| acc.add(&BigPoly::monomial(c.clone(), d as u32, vec![])));
            let _ = writeln!(out, "{x:?}: {q}");
        }
    }
    out
}

fn cmd_poly(cli: &Cli, table: bool) -> Outcome {
    let lie = lie(cli)?;
    let mu = mu(cli, lie)?;
    match cli.method {
        Method::Ramyip => Ok(render_poly(cli, lie, &mu, "ramyip", &ram_yip_t0(lie, &mu)?, table)),
        Method::Charge => Ok(render_poly(cli, lie, &mu, "charge", &charge_formula_t0(lie, &mu)?, table)),
        Method::Both => {
            let a: BigPoly = ram_yip_t0(lie, &mu)?;
            let b: BigPoly = charge_formula_t0(lie, &mu)?;
            if a == b {
                Ok(render_poly(cli, lie, &mu, "both", &a, table))
            } else if cli.format == Format::Json {
                let v = json!({
                    "schema": "charge-lab.poly-mismatch.v1",
                    "ramyip": poly_json(lie, &mu, "ramyip", &a),
                    "charge": poly_json(lie, &mu, "charge", &b),
                });
                Err(Failure::Verification(json_out(&v)))
            } else {
                Err(Failure::Verification(format!("MISMATCH\nramyip: {a}\ncharge: {b}\n")))
            }
        }
    }
}

fn trace_json(t: &ChargeTrace) -> Value {
    json!({
        "tops": t.tops.iter().map(|x| x.0).collect::<Vec<_>>(),
        "bottoms": t.bottoms.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
        "iterations": t.iterations,
        "contributions": t.contributions,
    })
}

fn read_filling(cli: &Cli, input: &str, split: bool) -> Result<Filling, Failure> {
    let trimmed = input.trim();
    if trimmed.starts_with('{') {
        let v: Value = serde_json::from_str(trimmed).map_err(|e| Failure::Validation(format!("filling JSON: {e}")))?;
        let is_split = v.get("split").and_then(Value::as_bool).unwrap_or(true);
        let f = if is_split {
            Filling::from_json(&v)?
        } else {
            let family: Family = v["type"].as_str().unwrap_or("A").parse()?;
            let n = v["n"].as_u64().ok_or_else(|| Failure::Validation("filling JSON: missing n".into()))? as usize;
            let cols: Vec<Vec<i32>> = serde_json::from_value(v["columns"].clone())
                .map_err(|e| Failure::Validation(format!("filling JSON: {e}")))?;
            let cols: Vec<Vec<Letter>> = cols.iter().map(|c| c.iter().map(|&x| Letter(x)).collect()).collect();
            from_kn_columns(LieType::new(family, n)?, &cols)?
        };
        return Ok(f);
    }
    let lie = lie(cli)?;
    let cols = parse_columns(trimmed)?;
    Ok(if lie.is_c() && !split { from_kn_columns(lie, &cols)? } else { Filling::new(lie, cols)? })
}

fn cmd_charge(cli: &Cli, filling: Option<&str>, split: bool, word: Option<&str>) -> Outcome {
    if let Some(word) = word {
        let labels = parse_word(word)?;
        let value = if family(cli) == Family::C {
            split_charge(&labels)?
        } else {
            if labels.iter().any(|l| l.primed) {
                return Err(Failure::Validation("primed letters need --type C".into()));
            }
            ls_charge(&labels.iter().map(|l| l.index).collect::<Vec<_>>())?
        };
        return Ok(match cli.format {
            Format::Json => json_out(&json!({"schema": "charge-lab.charge.v1", "word": word, "charge": value})),
            _ => format!("{value}\n"),
        });
    }
    let input = filling.ok_or_else(|| Failure::Validation("give a filling or --word".into()))?;
    let tau = read_filling(cli, input, split)?;
    let t = charge_trace(&tau)?;
    Ok(match cli.format {
        Format::Json => {
            let mut v = json!({"schema": "charge-lab.charge.v1", "filling": tau.to_json(), "charge": t.charge});
            if cli.trace {
                v["trace"] = trace_json(&t);
            }
            json_out(&v)
        }
        _ if cli.trace => format!("{tau}\n{t}\n"),
        _ => format!("{}\n", t.charge),
    })
}

fn cmd_verify(cli: &Cli) -> Outcome {
    let scope = Scope::parse(&cli.scope, cli.n)?;
    let fault = cli.inject_fault.as_deref().map(str::parse::<Fault>).transpose()?;
    let report = verify::run(&scope, fault);
    let out = match cli.format {
        Format::Json => json_out(&report.to_json()),
        _ => format!("{report}\n"),
    };
    if report.passed() {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn cmd_enumerate(cli: &Cli, what: Listing) -> Outcome {
    let lie = lie(cli)?;
    let mu = mu(cli, lie)?;
    let chain = MuChain::new(lie, &mu)?;
    let mut rows = Vec::new();
    let mut text = String::new();
    match what {
        Listing::Pairs => {
            for a in collect_admissible(&chain) {
                let (plus, minus) = fold_sets(&chain, &a.pair);
                let weight = weight_of(&chain, &a.pair);
                let sigma = filling_map(&chain, &a.pair);
                let _ = writeln!(
                    text,
                    "w={} J={:?} J-={:?} level={} weight={:?} filling={:?}",
                    a.pair.w, a.pair.positions, minus, a.level, weight, sigma.values()
                );
                rows.push(json!({
                    "w": a.pair.w.window_values(),
                    "J": a.pair.positions,
                    "Jplus": plus,
                    "Jminus": minus,
                    "level": a.level,
                    "weight": weight,
                    "filling": sigma.values(),
                    "arm_statistic": arm_statistic(&sigma),
                }));
            }
        }
        Listing::Fillings => {
            let partition = lie.dominant(&mu)?;
            for tau in enumerate_b_mu(lie, &partition) {
                let charge = chargelab::fillings::charge_of(&tau)?;
                let c = content(&tau)?;
                let _ = writeln!(text, "tau={:?} charge={charge} content={c:?}", tau.values());
                rows.push(json!({"columns": tau.values(), "charge": charge, "content": c, "sorted": ord(&tau) == tau}));
            }
        }
    }
    Ok(match cli.format {
        Format::Json => json_out(&json!({
            "schema": "charge-lab.enumerate.v1",
            "type": lie.family().to_string(),
            "n": lie.n(),
            "mu": mu,
            "items": rows,
        })),
        _ => text,
    })
}

fn cmd_split(cli: &Cli, column: &str) -> Outcome {
    let mut cols = parse_columns(column)?;
    if cols.len() != 1 {
        return Err(Failure::Validation("give exactly one column".into()));
    }
    let col = cols.pop().expect("one column");
    if let Some(n) = cli.n {
        let lie = LieType::c(n);
        if let Some(x) = col.iter().find(|&&x| !lie.contains(x)) {
            return Err(Failure::Validation(format!("letter {x} outside [n̄] for n = {n}")));
        }
    }
    if !is_kn_column(&col) {
        let vals: Vec<i32> = col.iter().map(|x| x.0).collect();
        return Err(Failure::Validation(format!("{vals:?} is not a KN column")));
    }
    let s = split_column(&col)?;
    let show = |c: &[Letter]| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    Ok(match cli.format {
        Format::Json => json_out(&json!({
            "schema": "charge-lab.split.v1",
            "column": col.iter().map(|x| x.0).collect::<Vec<_>>(),
            "right": s.right.iter().map(|x| x.0).collect::<Vec<_>>(),
            "left": s.left.iter().map(|x| x.0).collect::<Vec<_>>(),
        })),
        _ => format!("right: {}\nleft:  {}\n", show(&s.right), show(&s.left)),
    })
}

fn cmd_qbg(cli: &Cli) -> Outcome {
    let lie = lie(cli)?;
    Ok(match cli.format {
        Format::Dot => qbg::to_dot(lie),
        Format::Json => json_out(&qbg::to_json(lie)),
        Format::Text => {
            let mut out = String::new();
            for w in WeylElement::all(lie) {
                for (r, kind) in qbg::qbg_edges(&w) {
                    let _ = writeln!(out, "{w} -> {} {r} {kind}", w.apply_root(r));
                }
            }
            out
        }
    })
}
