//! `lexstab`: exact lex-approximation sequences, Hamilton numbers, and the
//! Macaulay lex-segment oracle from the command line.
//!
//! Results go to stdout and are byte-identical across runs for the same
//! input; timing and diagnostics go to stderr. Big integers are emitted as
//! decimal strings.

use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use lexstab::approx::b_sequence;
use lexstab::hamilton::{
    check_bounds, ell_alt_a, ell_alt_b, hamilton_alt_c, lucas_array, rho_estimate_with_guard,
    HamiltonTable, DEFAULT_GUARD_DIGITS,
};
use lexstab::json::{
    approx_to_json, coeffs_to_json, gamma_from_json_str, samples_from_json_str, IdealSpec,
};
use lexstab::lcbc::fit;
use lexstab::oracle::{
    lex_approx_explicit, stabilization, DEFAULT_ENUMERATION_BUDGET,
};
use lexstab::unilex::{generators_from_gamma, hf_gamma};

/// Degree cap honored unless --unsafe-unbounded is passed; the sequences
/// grow doubly exponentially and b_13 already has 86 digits.
const DMAX_CAP: usize = 13;
/// Hamilton table cap: ell_12 has 679 digits.
const NMAX_CAP: usize = 12;
/// Block cap: block 7 of the array has ~4·10^5 rows and block 8 ~8·10^10.
const BLOCKS_CAP: usize = 7;

#[derive(Parser)]
#[command(name = "lexstab", version, about = "Exact lex approximations of homogeneous ideals, Hamilton numbers, and lex-segment oracles")]
struct Cli {
    /// Output format for the results payload
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Stable generator counts a_d, b_d of the lex approximations
    Approx {
        /// Ideal shape: inline JSON, a file path, or - for stdin
        #[arg(long)]
        spec: String,
        #[arg(long, default_value_t = 13)]
        dmax: usize,
        /// Lift the degree/size caps
        #[arg(long)]
        unsafe_unbounded: bool,
    },
    /// The Hamilton number table (n, ell_n, H_n)
    Hamilton {
        #[arg(long, default_value_t = 9)]
        nmax: usize,
        /// Also verify the growth bounds on the table
        #[arg(long)]
        check_bounds: bool,
        /// Also verify the alternate recursions against the table
        #[arg(long)]
        alt_check: bool,
        #[arg(long)]
        unsafe_unbounded: bool,
    },
    /// The growth constant: rho_n to a certified number of decimals
    Rho {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 43)]
        digits: usize,
        #[arg(long)]
        unsafe_unbounded: bool,
    },
    /// The block array behind the Hamilton numbers
    Lucas {
        #[arg(long)]
        blocks: usize,
        #[arg(long, default_value_t = 8)]
        width: usize,
        #[arg(long)]
        unsafe_unbounded: bool,
    },
    /// Universal lex ideal from a gamma specification
    Unilex {
        /// {"gamma": [[degree, count], ...]}: inline JSON, file, or -
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        nvars: i64,
        #[arg(long)]
        tmax: i64,
    },
    /// Macaulay lex-segment oracle: stabilized counts, or one explicit run
    Oracle {
        /// Monomial-ideal JSON: inline, file, or -
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 6)]
        dmax: usize,
        #[arg(long, default_value_t = 4)]
        margin: usize,
        /// Materialize the lex ideal at a fixed ring size (needs --nvars)
        #[arg(long)]
        explicit: bool,
        #[arg(long)]
        nvars: Option<i64>,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        budget: u64,
        #[arg(long)]
        unsafe_unbounded: bool,
    },
    /// Recover LCBC coefficients from sampled values
    Fit {
        /// JSON array of [N, t, value] triples: inline, file, or -
        #[arg(long)]
        samples: String,
        /// Lowest shift to solve for (e.g. -8)
        #[arg(long, allow_hyphen_values = true)]
        smin: i64,
        /// Highest shift to solve for (e.g. -1)
        #[arg(long, allow_hyphen_values = true)]
        smax: i64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // help and version requests are successes; anything else is an
            // input error and exits 1
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    let outcome = dispatch(&cli);
    eprintln!("timing: elapsed_ms={}", start.elapsed().as_millis());
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Lib(lexstab::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Lib(err) => write!(f, "{err}"),
        }
    }
}

impl From<lexstab::Error> for CliError {
    fn from(err: lexstab::Error) -> Self {
        CliError::Lib(err)
    }
}

/// Exit 1 for input/validation problems, 2 when a computation uncovered an
/// invariant violation (counts that no proper ideal can realize, failed
/// stabilization).
fn exit_code(err: &CliError) -> u8 {
    match err {
        CliError::Usage(_) => 1,
        CliError::Lib(e) => match e {
            lexstab::Error::NegativeGeneratorCount { .. }
            | lexstab::Error::InfeasibleDimension { .. }
            | lexstab::Error::NotStabilized(_) => 2,
            _ => 1,
        },
    }
}

/// Inline JSON, `-` for stdin, anything else is a file path.
fn read_input(arg: &str) -> Result<String, CliError> {
    if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
        return Ok(buf);
    }
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(arg)
        .map_err(|e| CliError::Usage(format!("cannot read {arg}: {e}")))
}

fn sha256_hex(parts: &[&str]) -> String {
    let mut hasher = Sha256::new();
    for part in parts {
        hasher.update(part.as_bytes());
        hasher.update(b"\n");
    }
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// One command's results in all three renderings.
struct Output {
    json: Value,
    csv: String,
    table: String,
}

fn emit(command: &str, digest: &str, format: Format, output: Output) {
    match format {
        Format::Json => {
            let report = json!({
                "command": command,
                "input_digest": digest,
                "results": output.json,
            });
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
        }
        Format::Csv => {
            println!("# command={command} input_digest={digest}");
            print!("{}", output.csv);
        }
        Format::Table => {
            println!("command: {command}");
            println!("input digest: {digest}");
            println!();
            print!("{}", output.table);
        }
    }
}

/// Left-pad cells so columns line up.
fn render_table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; cols];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(&format!("{:>width$}", cell, width = widths[i]));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn dispatch(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Approx {
            spec,
            dmax,
            unsafe_unbounded,
        } => {
            if *dmax > DMAX_CAP && !unsafe_unbounded {
                return Err(CliError::Usage(format!(
                    "dmax {dmax} exceeds the cap {DMAX_CAP}; pass --unsafe-unbounded to proceed"
                )));
            }
            let text = read_input(spec)?;
            let parsed = IdealSpec::from_json_str(&text)?;
            let coeffs = parsed.coeff_vector()?;
            let seq = b_sequence(&coeffs, *dmax)?;
            let digest = sha256_hex(&["approx", &dmax.to_string(), &text]);

            let mut csv = String::from("d,a,b\n");
            csv.push_str(&format!("0,,{}\n", seq.b(0)));
            let mut table = vec![vec!["d".into(), "a_d".into(), "b_d".into()]];
            table.push(vec!["0".into(), String::new(), seq.b(0).to_string()]);
            for d in 1..=seq.d_max() {
                csv.push_str(&format!("{d},{},{}\n", seq.a(d), seq.b(d)));
                table.push(vec![d.to_string(), seq.a(d).to_string(), seq.b(d).to_string()]);
            }
            emit(
                "approx",
                &digest,
                cli.format,
                Output {
                    json: approx_to_json(&seq),
                    csv,
                    table: render_table(&table),
                },
            );
            Ok(())
        }

        Command::Hamilton {
            nmax,
            check_bounds: do_bounds,
            alt_check,
            unsafe_unbounded,
        } => {
            if *nmax > NMAX_CAP && !unsafe_unbounded {
                return Err(CliError::Usage(format!(
                    "nmax {nmax} exceeds the cap {NMAX_CAP}; pass --unsafe-unbounded to proceed"
                )));
            }
            let table = HamiltonTable::new(*nmax);
            let digest = sha256_hex(&["hamilton", &nmax.to_string()]);

            let mut rows_json = Vec::new();
            let mut csv = String::from("n,ell,h\n");
            let mut rows = vec![vec!["n".into(), "ell_n".into(), "H_n".into()]];
            for n in 0..=*nmax {
                let ell = table.ell(n as i64).to_string();
                let h = if n >= 1 {
                    Some(table.hamilton(n).to_string())
                } else {
                    None
                };
                csv.push_str(&format!("{n},{ell},{}\n", h.clone().unwrap_or_default()));
                rows.push(vec![n.to_string(), ell.clone(), h.clone().unwrap_or_default()]);
                rows_json.push(json!({"n": n, "ell": ell, "h": h}));
            }
            let mut results = json!({ "rows": rows_json });

            if *do_bounds {
                let report = check_bounds(&table);
                results["bounds"] = json!({
                    "checks_run": report.checks_run,
                    "violation": report.violation,
                });
                if !report.passed() {
                    return Err(CliError::Lib(lexstab::Error::NotStabilized(format!(
                        "growth bound violated: {}",
                        report.violation.unwrap()
                    ))));
                }
            }
            if *alt_check {
                for n in 1..*nmax {
                    if ell_alt_a(n, &table) != table.ell(n as i64 + 1) {
                        return Err(CliError::Lib(lexstab::Error::NotStabilized(format!(
                            "alternate recursion (a) disagrees at n={n}"
                        ))));
                    }
                }
                for n in 0..=*nmax {
                    if ell_alt_b(n, &table) != table.ell(n as i64) {
                        return Err(CliError::Lib(lexstab::Error::NotStabilized(format!(
                            "alternate recursion (b) disagrees at n={n}"
                        ))));
                    }
                }
                for n in 0..*nmax {
                    if hamilton_alt_c(n, &table) != table.hamilton(n + 1) {
                        return Err(CliError::Lib(lexstab::Error::NotStabilized(format!(
                            "alternate recursion (c) disagrees at n={n}"
                        ))));
                    }
                }
                results["alt_agreement"] = json!(true);
            }
            emit(
                "hamilton",
                &digest,
                cli.format,
                Output {
                    json: results,
                    csv,
                    table: render_table(&rows),
                },
            );
            Ok(())
        }

        Command::Rho {
            n,
            digits,
            unsafe_unbounded,
        } => {
            if n + 1 > NMAX_CAP && !unsafe_unbounded {
                return Err(CliError::Usage(format!(
                    "rho at n = {n} needs the table up to {} (cap {NMAX_CAP}); pass --unsafe-unbounded to proceed",
                    n + 1
                )));
            }
            let guard = match std::env::var("LEXSTAB_PRECISION") {
                Ok(v) => v.parse::<usize>().map_err(|_| {
                    CliError::Usage(format!("LEXSTAB_PRECISION must be a guard-digit count, got {v:?}"))
                })?,
                Err(_) => DEFAULT_GUARD_DIGITS,
            };
            let table = HamiltonTable::new(n + 1);
            let estimate = rho_estimate_with_guard(*n, &table, *digits, guard)?;
            let digest = sha256_hex(&["rho", &n.to_string(), &digits.to_string(), &guard.to_string()]);
            let rho = estimate.decimal().to_string();
            let stated = estimate.error_bound.to_decimal(6);
            let tight = estimate.tight_bound.to_decimal(6);
            let json = json!({
                "n": n,
                "digits": digits,
                "rho": rho,
                "error_bound": stated,
                "tight_bound": tight,
            });
            let csv = format!(
                "n,digits,rho,error_bound,tight_bound\n{n},{digits},{rho},{stated},{tight}\n"
            );
            let table_rows = vec![
                vec!["n".into(), n.to_string()],
                vec!["rho_n".into(), rho],
                vec!["error bound".into(), stated],
                vec!["tight bound".into(), tight],
            ];
            emit(
                "rho",
                &digest,
                cli.format,
                Output {
                    json,
                    csv,
                    table: render_table(&table_rows),
                },
            );
            Ok(())
        }

        Command::Lucas {
            blocks,
            width,
            unsafe_unbounded,
        } => {
            if *blocks > BLOCKS_CAP && !unsafe_unbounded {
                return Err(CliError::Usage(format!(
                    "blocks {blocks} exceeds the cap {BLOCKS_CAP}; pass --unsafe-unbounded to proceed"
                )));
            }
            let array = lucas_array(*blocks, *width)?;
            let digest = sha256_hex(&["lucas", &blocks.to_string(), &width.to_string()]);
            let strings = |v: &[BigInt]| v.iter().map(BigInt::to_string).collect::<Vec<_>>();
            let json = json!({
                "width": width,
                "leaders": strings(&array.leaders),
                "partial_sums": strings(&array.partial_sums),
                "hamilton": (0..=array.num_blocks())
                    .map(|i| array.hamilton_number(i).to_string())
                    .collect::<Vec<_>>(),
                "rows": array.rows.iter().map(|r| json!({
                    "indentation": r.indentation,
                    "entries": strings(&r.entries),
                })).collect::<Vec<_>>(),
            });
            let mut csv = String::from("indentation,entries\n");
            let mut table = String::new();
            for row in &array.rows {
                let cells = strings(&row.entries);
                csv.push_str(&format!("{},{}\n", row.indentation, cells.join(",")));
                table.push_str(&"    ".repeat(row.indentation));
                table.push_str(&cells.join(" "));
                table.push('\n');
            }
            table.push_str(&format!("leaders: {}\n", strings(&array.leaders).join(" ")));
            emit(
                "lucas",
                &digest,
                cli.format,
                Output { json, csv, table },
            );
            Ok(())
        }

        Command::Unilex { gamma, nvars, tmax } => {
            let text = read_input(gamma)?;
            let spec = gamma_from_json_str(&text)?;
            let generators = generators_from_gamma(&spec);
            let beta_h = spec.total_generators();
            let values: Vec<String> = (0..=*tmax)
                .map(|t| hf_gamma(&spec, *nvars, t).map(|v| v.to_string()))
                .collect::<Result<_, _>>()?;
            let digest = sha256_hex(&["unilex", &text, &nvars.to_string(), &tmax.to_string()]);
            let gen_vectors: Vec<Vec<u32>> = generators
                .iter()
                .map(|g| g.padded_exponents(beta_h))
                .collect();
            let json = json!({
                "gamma": spec.pairs().iter().map(|(d, a)| json!([d, a])).collect::<Vec<_>>(),
                "total_generators": beta_h,
                "generators": gen_vectors,
                "nvars": nvars,
                "hilbert": values,
            });
            let mut csv = String::from("t,hilbert\n");
            for (t, v) in values.iter().enumerate() {
                csv.push_str(&format!("{t},{v}\n"));
            }
            let mut rows = vec![vec!["generator".into()]];
            for g in &generators {
                rows.push(vec![g.to_string()]);
            }
            rows.push(vec![String::new()]);
            rows.push(vec!["t".into(), format!("dim at N={nvars}")]);
            for (t, v) in values.iter().enumerate() {
                rows.push(vec![t.to_string(), v.clone()]);
            }
            emit(
                "unilex",
                &digest,
                cli.format,
                Output {
                    json,
                    csv,
                    table: render_table(&rows),
                },
            );
            Ok(())
        }

        Command::Oracle {
            ideal,
            dmax,
            margin,
            explicit,
            nvars,
            budget,
            unsafe_unbounded,
        } => {
            if *dmax > DMAX_CAP && !unsafe_unbounded {
                return Err(CliError::Usage(format!(
                    "dmax {dmax} exceeds the cap {DMAX_CAP}; pass --unsafe-unbounded to proceed"
                )));
            }
            let text = read_input(ideal)?;
            let parsed = IdealSpec::from_json_str(&text)?;
            let Some(monomial_ideal) = parsed.as_ideal() else {
                return Err(CliError::Usage(
                    "oracle needs a monomial ideal ({\"variables\", \"generators\"})".into(),
                ));
            };
            let digest = sha256_hex(&[
                "oracle",
                &text,
                &dmax.to_string(),
                &margin.to_string(),
                &explicit.to_string(),
                &nvars.map(|n| n.to_string()).unwrap_or_default(),
            ]);
            if *explicit {
                let Some(n) = nvars else {
                    return Err(CliError::Usage("--explicit needs --nvars N".into()));
                };
                let run = lex_approx_explicit(monomial_ideal, *n, *dmax, *budget)?;
                let per_degree: Vec<Value> = run
                    .per_degree
                    .iter()
                    .map(|r| {
                        json!({
                            "degree": r.degree,
                            "dim_target": r.dim_target.to_string(),
                            "new_generators": r.new_generators.to_string(),
                            "generators": r.generators.as_ref().unwrap().iter()
                                .map(|g| g.padded_exponents(*n as usize))
                                .collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                let json = json!({
                    "mode": "explicit",
                    "n": n,
                    "per_degree": per_degree,
                });
                let mut csv = String::from("degree,dim_target,new_generators\n");
                let mut rows = vec![vec![
                    "degree".into(),
                    "dim".into(),
                    "a_t".into(),
                    "new generators".into(),
                ]];
                for r in &run.per_degree {
                    csv.push_str(&format!(
                        "{},{},{}\n",
                        r.degree, r.dim_target, r.new_generators
                    ));
                    let gens = r
                        .generators
                        .as_ref()
                        .unwrap()
                        .iter()
                        .map(|g| g.to_string())
                        .collect::<Vec<_>>()
                        .join(", ");
                    rows.push(vec![
                        r.degree.to_string(),
                        r.dim_target.to_string(),
                        r.new_generators.to_string(),
                        gens,
                    ]);
                }
                emit(
                    "oracle",
                    &digest,
                    cli.format,
                    Output {
                        json,
                        csv,
                        table: render_table(&rows),
                    },
                );
            } else {
                let stable = stabilization(monomial_ideal, *dmax, *margin)?;
                let json = json!({
                    "mode": "stabilization",
                    "a": stable.a.iter().map(BigInt::to_string).collect::<Vec<_>>(),
                    "b": stable.b.iter().map(BigInt::to_string).collect::<Vec<_>>(),
                    "witness": {
                        "lo": stable.witness_lo.to_string(),
                        "hi": stable.witness_hi.to_string(),
                    },
                });
                let mut csv = String::from("d,a,b\n");
                csv.push_str(&format!("0,,{}\n", stable.b[0]));
                let mut rows = vec![vec!["d".into(), "a_d".into(), "b_d".into()]];
                rows.push(vec!["0".into(), String::new(), stable.b[0].to_string()]);
                for d in 1..=*dmax {
                    csv.push_str(&format!("{d},{},{}\n", stable.a[d - 1], stable.b[d]));
                    rows.push(vec![
                        d.to_string(),
                        stable.a[d - 1].to_string(),
                        stable.b[d].to_string(),
                    ]);
                }
                rows.push(vec![
                    "witness N".into(),
                    format!("{}..{}", stable.witness_lo, stable.witness_hi),
                ]);
                emit(
                    "oracle",
                    &digest,
                    cli.format,
                    Output {
                        json,
                        csv,
                        table: render_table(&rows),
                    },
                );
            }
            Ok(())
        }

        Command::Fit { samples, smin, smax } => {
            let text = read_input(samples)?;
            let parsed = samples_from_json_str(&text)?;
            let fitted = fit(&parsed, *smin, *smax)?;
            let digest = sha256_hex(&["fit", &text, &smin.to_string(), &smax.to_string()]);
            let mut csv = String::from("s,c\n");
            let mut rows = vec![vec!["s".into(), "c_s".into()]];
            for (s, c) in fitted.iter() {
                csv.push_str(&format!("{s},{c}\n"));
                rows.push(vec![s.to_string(), c.to_string()]);
            }
            emit(
                "fit",
                &digest,
                cli.format,
                Output {
                    json: coeffs_to_json(&fitted),
                    csv,
                    table: render_table(&rows),
                },
            );
            Ok(())
        }
    }
}
