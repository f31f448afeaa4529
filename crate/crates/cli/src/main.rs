//! Command-line front end: triangles, path counts with oracles, alternating
//! sums, complexes and their invariants, q-weighted sums, proposition
//! verifiers, the exponent scan, and OEIS annotation.
//!
//! Exit codes: 0 success, 1 usage or operational error, 2 a verifier found
//! a mismatch (the report is still emitted).

mod config;
mod oeis;
mod render;

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use qcatalan_core::exactnum::Integer;
use qcatalan_core::pathlab::{
    count_bounded_enum_with_budget, count_generalized_enum_with_budget, BoundSpec, ContactPolicy,
    GenPathSpec,
};
use qcatalan_core::propcheck::{
    scan_exponents, verify_prop1, verify_prop2, verify_prop3, ScanSpec, VerificationReport,
};
use qcatalan_core::qcomplex::{
    build_complex, check_d_squared, euler_char, homology_ranks, modified_euler_char, ChainComplex,
    ExponentFn,
};
use qcatalan_core::reflection::{altsum_row, altsum_terms, bounded_formula, AltSumSpec};
use qcatalan_core::triangles::d_pascal_row;

use config::{Config, Format};
use render::{int_json, poly_json, poly_map_json, print_json, to_canonical_string};

#[derive(Parser)]
#[command(name = "qcatalan", version, about = "Exact bounded-path counting, quantum exterior complexes, and q-deformations")]
struct Cli {
    /// Config file (key = value); also via QCATALAN_CONFIG
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Output format
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Worker threads for verification sweeps
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Cap on enumeration states
    #[arg(long, global = true, value_name = "N")]
    enum_budget: Option<u64>,

    /// Cap on materialized matrix dimensions
    #[arg(long, global = true, value_name = "N")]
    matrix_budget: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print rows of a d-Pascal triangle
    Triangle {
        /// Triangle arity (2 = binomial, 3 = trinomial, ...)
        #[arg(long)]
        d: u32,
        /// How many rows, starting from row 0
        #[arg(long)]
        rows: u32,
    },
    /// Lattice-path counting
    Paths {
        #[command(subcommand)]
        command: PathsCommand,
    },
    /// Alternating reflection sum on a triangle row
    Altsum {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        row: u32,
        /// Centered anchor column
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        col: i64,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 0)]
        s: u32,
    },
    /// Chain complexes over the quantum exterior algebra
    Complex {
        #[command(subcommand)]
        command: ComplexCommand,
    },
    /// Modified Euler characteristic (shorthand for `complex qchi`)
    Qchi(QchiArgs),
    /// Run a proposition verifier
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
    /// Scan quadratic exponent functions for q-Fibonacci behavior
    Scan {
        /// Root-of-unity order N
        #[arg(long = "N")]
        order: u32,
        /// Partition of N - 2 as m,s
        #[arg(long, value_name = "M,S")]
        partition: String,
        #[arg(long, default_value_t = 8)]
        max_n: u32,
        /// Range for the quadratic coefficient A, as lo,hi
        #[arg(long, default_value = "-8,8", value_name = "LO,HI", allow_hyphen_values = true)]
        a_range: String,
        /// Range for the linear coefficient B, as lo,hi
        #[arg(long, default_value = "-8,8", value_name = "LO,HI", allow_hyphen_values = true)]
        b_range: String,
        /// How many ranked candidates to print
        #[arg(long, default_value_t = 10)]
        top: usize,
    },
    /// Look up a sequence in the OEIS (annotation only, cached)
    Oeis {
        /// Comma-separated integer terms
        #[arg(long, value_name = "T1,T2,...", allow_hyphen_values = true)]
        terms: String,
        /// Never open a network connection
        #[arg(long)]
        offline: bool,
    },
}

#[derive(Subcommand)]
enum PathsCommand {
    /// Count paths by closed form, optionally against the enumeration oracle
    Count {
        /// Endpoint half-size: paths end at (n, n)
        #[arg(long)]
        n: u32,
        /// Upper bound distance, or "inf" (absent = unbounded)
        #[arg(long, value_parser = parse_bound)]
        m: Option<BoundArg>,
        /// Lower bound shift below the diagonal, or "inf" (absent = 0,
        /// i.e. paths stay weakly above the diagonal)
        #[arg(long, value_parser = parse_bound)]
        s: Option<BoundArg>,
        #[arg(long, value_enum, default_value_t = StepSet::Dyck)]
        steps: StepSet,
        /// Forbid (1,1) steps on the bounding lines (three-step paths only)
        #[arg(long)]
        strict: bool,
        /// Also run the exhaustive enumeration oracle and compare
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StepSet {
    /// North/East unit steps
    Dyck,
    /// Steps (0,2), (1,1), (2,0)
    Gen3,
}

/// A bound distance: a number, or unbounded.
#[derive(Clone, Copy, Debug)]
struct BoundArg(Option<u32>);

fn parse_bound(text: &str) -> Result<BoundArg, String> {
    match text {
        "inf" | "unbounded" => Ok(BoundArg(None)),
        _ => text
            .parse::<u32>()
            .map(|v| BoundArg(Some(v)))
            .map_err(|e| format!("expected a number or \"inf\": {e}")),
    }
}

#[derive(Subcommand)]
enum ComplexCommand {
    /// Show the pieces, degrees and differential exponents
    Build(ComplexArgs),
    /// Euler characteristic
    Euler(ComplexArgs),
    /// Exact homology ranks per index
    Homology(ComplexArgs),
    /// Modified Euler characteristic with a quadratic weight
    Qchi(QchiArgs),
    /// Export one differential as sparse triplet text
    Matrix {
        #[command(flatten)]
        complex: ComplexArgs,
        /// Complex index of the differential to export
        #[arg(long, allow_negative_numbers = true)]
        index: i32,
        /// Output file (stdout if absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Clone)]
struct ComplexArgs {
    /// Number of generators
    #[arg(long = "M")]
    generators: u32,
    /// Anchor algebra degree at complex index 0
    #[arg(long)]
    c: u32,
    #[arg(long)]
    m: u32,
    #[arg(long, default_value_t = 0)]
    s: u32,
}

#[derive(Args, Clone)]
struct QchiArgs {
    #[command(flatten)]
    complex: ComplexArgs,
    /// Exponent function: pentagonal, rr14, rr23, or custom:A,B
    #[arg(long, allow_hyphen_values = true)]
    f: String,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Binomial-row alternating sums against the stated families
    Prop1 {
        #[arg(long, default_value_t = 20)]
        max_rows: u32,
        /// Write the full JSON report here
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// 3- and 4-triangle alternating sums against the stated families
    Prop2 {
        #[arg(long, default_value_t = 15)]
        max_rows: u32,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// q-weighted sums against monomial and q-Fibonacci families
    Prop3 {
        #[arg(long, default_value_t = 8)]
        max_n: u32,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn main() {
    let code = match real_main() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            1
        }
    };
    std::process::exit(code);
}

fn real_main() -> Result<i32> {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            err.print().expect("cannot print clap error");
            return Ok(code);
        }
    };

    let mut config = Config::load(cli.config.as_deref())?;
    if let Some(format) = cli.format {
        config.format = format;
    }
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            bail!("jobs must be positive");
        }
        config.jobs = Some(jobs);
    }
    if let Some(budget) = cli.enum_budget {
        if budget == 0 {
            bail!("budgets must be positive");
        }
        config.enum_budget = budget;
    }
    if let Some(budget) = cli.matrix_budget {
        if budget == 0 {
            bail!("budgets must be positive");
        }
        config.matrix_budget = budget;
    }
    if let Some(jobs) = config.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .ok();
    }

    match cli.command {
        Command::Triangle { d, rows } => run_triangle(&config, d, rows),
        Command::Paths {
            command:
                PathsCommand::Count {
                    n,
                    m,
                    s,
                    steps,
                    strict,
                    oracle,
                },
        } => run_paths_count(&config, n, m, s, steps, strict, oracle),
        Command::Altsum { d, row, col, m, s } => run_altsum(&config, d, row, col, m, s),
        Command::Complex { command } => run_complex(&config, command),
        Command::Qchi(args) => run_qchi(&config, &args),
        Command::Verify { command } => run_verify(&config, command),
        Command::Scan {
            order,
            partition,
            max_n,
            a_range,
            b_range,
            top,
        } => run_scan(&config, order, &partition, max_n, &a_range, &b_range, top),
        Command::Oeis { terms, offline } => run_oeis(&config, &terms, offline),
    }
}

fn run_triangle(config: &Config, d: u32, rows: u32) -> Result<i32> {
    if d < 2 {
        bail!("triangle arity must be at least 2");
    }
    if rows == 0 {
        bail!("need at least one row");
    }
    let built: Vec<_> = (0..rows).map(|r| d_pascal_row(d, r)).collect();
    match config.format {
        Format::Table => {
            for row in &built {
                let line: Vec<String> = row.entries().iter().map(Integer::to_string).collect();
                println!("{}", line.join(" "));
            }
        }
        Format::Csv => {
            for row in &built {
                let line: Vec<String> = row.entries().iter().map(Integer::to_string).collect();
                println!("{}", line.join(","));
            }
        }
        Format::Json => {
            let rows_json: Vec<_> = built
                .iter()
                .map(|row| {
                    json!({
                        "r": row.row_index(),
                        "coefficients": poly_map_json(row.as_poly()),
                    })
                })
                .collect();
            print_json(&json!({"d": d, "rows": rows_json}));
        }
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn run_paths_count(
    config: &Config,
    n: u32,
    m: Option<BoundArg>,
    s: Option<BoundArg>,
    steps: StepSet,
    strict: bool,
    oracle: bool,
) -> Result<i32> {
    let m = m.map_or(None, |b| b.0); // absent = unbounded above
    let (formula, oracle_count) = match steps {
        StepSet::Dyck => {
            if strict {
                bail!("--strict applies only to --steps gen3");
            }
            let s = s.map_or(Some(0), |b| b.0); // absent = classic Dyck
            // a bound at distance >= n is inactive, so absent bounds count
            // through the same closed form with the bound parked at n
            let formula = bounded_formula(n, m.unwrap_or(n), s.unwrap_or(n));
            let oracle_count = oracle
                .then(|| {
                    count_bounded_enum_with_budget(&BoundSpec { n, m, s }, config.enum_budget)
                })
                .transpose()?;
            (formula, oracle_count)
        }
        StepSet::Gen3 => {
            if s.is_some() {
                bail!("--s applies only to --steps dyck (the three-step lower bound is the diagonal)");
            }
            let formula = altsum_row(&AltSumSpec {
                d: 3,
                row: n,
                base_col: 0,
                m: m.unwrap_or(n),
                s: 0,
            });
            let policy = if strict {
                ContactPolicy::Strict
            } else {
                ContactPolicy::Weak
            };
            let oracle_count = oracle
                .then(|| {
                    count_generalized_enum_with_budget(
                        &GenPathSpec { n, m, policy },
                        config.enum_budget,
                    )
                })
                .transpose()?;
            (formula, oracle_count)
        }
    };

    let status = oracle_count
        .as_ref()
        .map(|o| if *o == formula { "match" } else { "mismatch" });
    match config.format {
        Format::Table => match (&oracle_count, status) {
            (Some(o), Some(st)) => println!("formula {formula}, oracle {o}, status {st}"),
            _ => println!("formula {formula}"),
        },
        Format::Csv => {
            println!("formula,oracle,status");
            println!(
                "{formula},{},{}",
                oracle_count.as_ref().map_or(String::new(), Integer::to_string),
                status.unwrap_or("")
            );
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("formula".into(), int_json(&formula));
            if let Some(o) = &oracle_count {
                obj.insert("oracle".into(), int_json(o));
                obj.insert("status".into(), json!(status.unwrap()));
            }
            print_json(&serde_json::Value::Object(obj));
        }
    }
    Ok(0)
}

fn run_altsum(config: &Config, d: u32, row: u32, col: i64, m: u32, s: u32) -> Result<i32> {
    if d < 2 {
        bail!("triangle arity must be at least 2");
    }
    let spec = AltSumSpec {
        d,
        row,
        base_col: col,
        m,
        s,
    };
    let terms = altsum_terms(&spec);
    let value = altsum_row(&spec);
    match config.format {
        Format::Table => {
            for t in &terms {
                let sign = if t.index % 2 == 0 { '+' } else { '-' };
                println!("i={:<3} {:?}  col {:<4} {} {}", t.index, t.side, t.col, sign, t.entry);
            }
            println!("value {value}");
        }
        Format::Csv => {
            println!("index,side,col,entry");
            for t in &terms {
                println!("{},{:?},{},{}", t.index, t.side, t.col, t.entry);
            }
        }
        Format::Json => {
            let terms_json = serde_json::to_value(&terms)?;
            print_json(&json!({"terms": terms_json, "value": value.to_string()}));
        }
    }
    Ok(0)
}

fn parse_exponent_fn(spec: &str) -> Result<ExponentFn> {
    match spec {
        "pentagonal" => Ok(qcatalan_core::propcheck::exponent_fn("pentagonal_1_2")?),
        "rr14" => Ok(qcatalan_core::propcheck::exponent_fn("rr_1_4")?),
        "rr23" => Ok(qcatalan_core::propcheck::exponent_fn("rr_2_3")?),
        other => {
            let Some(rest) = other.strip_prefix("custom:") else {
                bail!("unknown exponent function {other:?} (pentagonal, rr14, rr23, custom:A,B)");
            };
            let (a, b) = parse_pair::<i64>(rest).context("custom:A,B")?;
            Ok(ExponentFn::new(format!("custom({a},{b})"), a, b)?)
        }
    }
}

fn parse_pair<T: std::str::FromStr>(text: &str) -> Result<(T, T)>
where
    T::Err: std::fmt::Display + Send + Sync + std::error::Error + 'static,
{
    let Some((first, second)) = text.split_once(',') else {
        bail!("expected two comma-separated values, got {text:?}");
    };
    Ok((first.trim().parse()?, second.trim().parse()?))
}

fn complex_of(args: &ComplexArgs) -> Result<ChainComplex> {
    Ok(build_complex(args.generators, args.c, args.m, args.s)?)
}

fn run_complex(config: &Config, command: ComplexCommand) -> Result<i32> {
    match command {
        ComplexCommand::Build(args) => {
            let cx = complex_of(&args)?;
            match config.format {
                Format::Table => {
                    println!(
                        "M={} c={} m={} s={} (order {})",
                        args.generators,
                        args.c,
                        args.m,
                        args.s,
                        cx.order()
                    );
                    for i in cx.indices() {
                        let arrow = if cx.degree(i + 1).is_some() {
                            format!("  --sigma^{}-->", cx.differential_exponent(i))
                        } else {
                            String::new()
                        };
                        println!(
                            "index {i:>3}: degree {:>3}, dim {}{}",
                            cx.degree(i).unwrap(),
                            cx.piece_dim(i),
                            arrow
                        );
                    }
                }
                Format::Json | Format::Csv => {
                    let pieces: Vec<_> = cx
                        .indices()
                        .into_iter()
                        .map(|i| {
                            json!({
                                "index": i,
                                "degree": cx.degree(i).unwrap(),
                                "dim": cx.piece_dim(i).to_string(),
                            })
                        })
                        .collect();
                    print_json(&json!({
                        "M": args.generators,
                        "c": args.c,
                        "m": args.m,
                        "s": args.s,
                        "order": cx.order(),
                        "pieces": pieces,
                    }));
                }
            }
            Ok(0)
        }
        ComplexCommand::Euler(args) => {
            let cx = complex_of(&args)?;
            let chi = euler_char(&cx);
            match config.format {
                Format::Json => print_json(&json!({"euler_characteristic": chi.to_string()})),
                _ => println!("{chi}"),
            }
            Ok(0)
        }
        ComplexCommand::Homology(args) => {
            let cx = complex_of(&args)?;
            let consistent = check_d_squared(&cx, config.matrix_budget)?;
            if !consistent {
                bail!("differentials do not compose to zero; refusing to report homology");
            }
            let ranks = homology_ranks(&cx, config.matrix_budget)?;
            match config.format {
                Format::Table => {
                    for (i, r) in &ranks {
                        println!("H_{i} rank {r}");
                    }
                }
                Format::Csv => {
                    println!("index,rank");
                    for (i, r) in &ranks {
                        println!("{i},{r}");
                    }
                }
                Format::Json => {
                    let items: Vec<_> = ranks
                        .iter()
                        .map(|(i, r)| json!({"index": i, "rank": r}))
                        .collect();
                    print_json(&json!({"homology": items}));
                }
            }
            Ok(0)
        }
        ComplexCommand::Qchi(args) => run_qchi(config, &args),
        ComplexCommand::Matrix {
            complex,
            index,
            out,
        } => {
            let cx = complex_of(&complex)?;
            let Some(mat) = cx.differential(index, config.matrix_budget)? else {
                bail!("no differential at index {index} (zero source or target)");
            };
            let mut text = format!(
                "# rows {} cols {} order {} nnz {}\n",
                mat.rows(),
                mat.cols(),
                mat.order(),
                mat.nnz()
            );
            for (r, c, v) in mat.triplets() {
                let coeffs: Vec<String> =
                    v.coeffs().iter().map(|q| q.to_string()).collect();
                text.push_str(&format!("{r} {c} {}\n", coeffs.join(",")));
            }
            match out {
                Some(path) => {
                    std::fs::write(&path, text)
                        .with_context(|| format!("cannot write {}", path.display()))?;
                    eprintln!("wrote {}", path.display());
                }
                None => print!("{text}"),
            }
            Ok(0)
        }
    }
}

fn run_qchi(config: &Config, args: &QchiArgs) -> Result<i32> {
    let f = parse_exponent_fn(&args.f)?;
    let value = modified_euler_char(
        args.complex.generators,
        args.complex.c,
        args.complex.m,
        args.complex.s,
        &f,
    )?;
    match config.format {
        Format::Table => println!("{value}"),
        Format::Csv => {
            println!("exponent,coefficient");
            for (e, c) in value.to_pairs() {
                println!("{e},{c}");
            }
        }
        Format::Json => print_json(&json!({
            "f": f.label(),
            "value": poly_json(&value),
            "display": value.to_string(),
            "at_q_one": value.eval_at_one().to_string(),
        })),
    }
    Ok(0)
}

fn emit_report(config: &Config, report: &VerificationReport, path: Option<&PathBuf>) -> Result<i32> {
    let value = report.to_json();
    if let Some(path) = path {
        std::fs::write(path, to_canonical_string(&value))
            .with_context(|| format!("cannot write {}", path.display()))?;
        eprintln!("wrote {}", path.display());
    }
    match config.format {
        Format::Json => print_json(&value),
        _ => {
            let s = &report.summary;
            println!(
                "{}: cells {}, matches {}, mismatches {}, out-of-family {}",
                report.proposition, s.cells, s.matches, s.mismatches, s.out_of_family
            );
            for cell in report.counterexamples.iter().take(10) {
                println!("  counterexample: {}", to_canonical_string(&serde_json::to_value(cell)?));
            }
        }
    }
    Ok(if report.has_mismatch() { 2 } else { 0 })
}

fn run_verify(config: &Config, command: VerifyCommand) -> Result<i32> {
    match command {
        VerifyCommand::Prop1 { max_rows, json } => {
            let report = verify_prop1(max_rows);
            emit_report(config, &report, json.as_ref())
        }
        VerifyCommand::Prop2 { max_rows, json } => {
            if max_rows > 40 {
                bail!("max rows for the triangle sweeps is 40");
            }
            let report = verify_prop2(max_rows);
            emit_report(config, &report, json.as_ref())
        }
        VerifyCommand::Prop3 { max_n, json } => {
            if max_n > 12 {
                bail!("max n for the q-weighted sweep is 12");
            }
            let report = verify_prop3(max_n);
            emit_report(config, &report, json.as_ref())
        }
    }
}

fn run_scan(
    config: &Config,
    order: u32,
    partition: &str,
    max_n: u32,
    a_range: &str,
    b_range: &str,
    top: usize,
) -> Result<i32> {
    let (m, s) = parse_pair::<u32>(partition).context("--partition m,s")?;
    let a_range = parse_pair::<i64>(a_range).context("--a-range lo,hi")?;
    let b_range = parse_pair::<i64>(b_range).context("--b-range lo,hi")?;
    let results = scan_exponents(&ScanSpec {
        order,
        m,
        s,
        a_range,
        b_range,
        max_n,
    })?;
    match config.format {
        Format::Table => {
            println!("rank  A     B     matched  nonzero  variants");
            for (rank, c) in results.iter().take(top).enumerate() {
                println!(
                    "{:<5} {:<5} {:<5} {:<8} {:<8} {}",
                    rank + 1,
                    c.a,
                    c.b,
                    c.matched,
                    c.nonzero,
                    c.variants.join(" ")
                );
            }
        }
        Format::Csv => {
            println!("a,b,matched,nonzero,all_matched,reduced_all_zero");
            for c in results.iter().take(top) {
                println!(
                    "{},{},{},{},{},{}",
                    c.a, c.b, c.matched, c.nonzero, c.all_matched, c.reduced_all_zero
                );
            }
        }
        Format::Json => {
            let items: Vec<_> = results
                .iter()
                .take(top)
                .map(|c| serde_json::to_value(c).expect("candidate serializes"))
                .collect();
            print_json(&json!({
                "order": order,
                "m": m,
                "s": s,
                "max_n": max_n,
                "candidates": items,
            }));
        }
    }
    Ok(0)
}

fn run_oeis(config: &Config, terms: &str, force_offline: bool) -> Result<i32> {
    let parsed: Result<Vec<Integer>> = terms
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<Integer>()
                .map_err(|e| anyhow::anyhow!("bad term {t:?}: {e}"))
        })
        .collect();
    let parsed = parsed?;
    if parsed.is_empty() {
        bail!("need at least one term");
    }
    let mut oeis_config = config.oeis.clone();
    if force_offline {
        oeis_config.offline = true;
    }
    let client = oeis::OeisClient::new(oeis_config);
    let outcome = client.lookup(&parsed)?;
    match config.format {
        Format::Json => {
            let value = match &outcome {
                oeis::LookupOutcome::Disabled => json!({"status": "disabled"}),
                oeis::LookupOutcome::Skipped(reason) => {
                    json!({"status": "skipped", "reason": reason})
                }
                oeis::LookupOutcome::Hits(hits) => json!({
                    "status": "ok",
                    "matches": hits
                        .iter()
                        .map(|h| json!({"id": h.id, "name": h.name}))
                        .collect::<Vec<_>>(),
                }),
            };
            print_json(&value);
        }
        _ => match &outcome {
            oeis::LookupOutcome::Disabled => println!("lookup disabled"),
            oeis::LookupOutcome::Skipped(reason) => println!("lookup skipped: {reason}"),
            oeis::LookupOutcome::Hits(hits) if hits.is_empty() => println!("no matches"),
            oeis::LookupOutcome::Hits(hits) => {
                for h in hits {
                    println!("{}  {}", h.id, h.name);
                }
            }
        },
    }
    Ok(0)
}
