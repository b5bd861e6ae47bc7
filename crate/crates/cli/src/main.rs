//! Command-line front end: invariant reports, link comparison, table
//! reproduction, tangle classification and the density sequence.
//!
//! Exit codes: 0 success, 1 table reproduction failure, 2 parse error,
//! 3 crossing limit exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use fivemoves::error::Error;
use fivemoves::montesinos::reduce_montesinos;
use fivemoves::notation::{parse_spec, Fraction};
use fivemoves::report::{
    compare_links, compute_report, density_values, table41_rows, table71_rows, CompareVerdict,
    ComputeOptions, Limits, TableRow,
};
use fivemoves::tangles::{classify12, classify_rational_link};

#[derive(Parser)]
#[command(name = "fivemoves", version, about = "Exact 5-move and (2,2)-move link invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    #[value(name = "4.1")]
    T41,
    #[value(name = "7.1")]
    T71,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariant report of a link spec.
    Compute {
        spec: String,
        /// Crossing cap for the skein engines.
        #[arg(long)]
        limit: Option<usize>,
        /// Include the two-variable Kauffman polynomial.
        #[arg(long)]
        kauffman: bool,
        /// Evaluate Set(F) at a0 = zeta^i, p0 = zeta^j (format: i,j).
        #[arg(long)]
        point: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Compare the 5-move invariants of two links.
    Compare {
        spec_a: String,
        spec_b: String,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Reproduce a bundled table and report per-row PASS/FAIL.
    Table {
        which: Which,
        /// Restrict to a single class id.
        #[arg(long)]
        only: Option<u8>,
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        json: bool,
    },
    /// Classify a rational tangle into its twelve-class and link class.
    ReduceRational { fraction: String },
    /// Reduce a Montesinos or pretzel spec to its canonical 5-move class.
    ReduceMontesinos {
        spec: String,
        #[arg(long)]
        json: bool,
    },
    /// Emit |1+t|^k1 |1-t|^k2 for 0 <= k1, k2 <= kmax, sorted.
    Density { kmax: u32 },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Syntax { .. }
                | Error::ZeroFraction
                | Error::BraidLetterOutOfRange { .. }
                | Error::UnknownNamedLink(_)
                | Error::InvalidPd(_) => 2,
                Error::LimitExceeded { .. } => 3,
                _ => 1,
            }
        }
    });
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Compute { spec, limit, kauffman, point, json } => {
            let parsed = parse_spec(&spec)?;
            let mut opts = ComputeOptions {
                with_kauffman_poly: kauffman,
                ..ComputeOptions::default()
            };
            if let Some(cap) = limit {
                opts.limits = Limits::with_cap(cap);
            }
            if let Some(p) = point {
                let parts: Vec<&str> = p.split(',').collect();
                if parts.len() != 2 {
                    return Err(Error::Invalid("--point expects i,j".into()));
                }
                let i = parts[0]
                    .parse()
                    .map_err(|_| Error::Invalid("--point expects integers".into()))?;
                let j = parts[1]
                    .parse()
                    .map_err(|_| Error::Invalid("--point expects integers".into()))?;
                opts.set_f_point = Some((i, j));
            }
            let report = compute_report(&parsed, &opts)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!("spec        : {}", report.spec);
                println!("components  : {}", report.components);
                println!("crossings   : {}", report.crossings);
                println!("col5        : {}", report.col5);
                println!("col3        : {}", report.col3);
                println!("F(1,x0)     : {}", report.f_special);
                println!("V(L)        : {}", report.v_abs);
                println!("V(L,5)      : {}", class5_text(&report.class5));
                if let Some(f) = &report.kauffman_f {
                    println!("F(a,x)      : {}", serde_json::to_string(f).unwrap());
                }
                if let Some(s) = &report.set_f {
                    println!(
                        "Set(F)      : {} values, real member: {}",
                        s.orbit.len(),
                        s.has_real_member
                    );
                }
            }
            Ok(0)
        }
        Command::Compare { spec_a, spec_b, limit, json } => {
            let a = parse_spec(&spec_a)?;
            let b = parse_spec(&spec_b)?;
            let limits = limit.map(Limits::with_cap).unwrap_or_default();
            let verdict = compare_links(&a, &b, &limits)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&verdict).unwrap());
            } else {
                match &verdict {
                    CompareVerdict::Distinguished { by } => {
                        println!("distinguished by: {}", by.join(", "));
                    }
                    CompareVerdict::NotDistinguished => {
                        println!("not-distinguished (no implemented invariant separates them)");
                    }
                }
            }
            Ok(0)
        }
        Command::Table { which, only, csv, json } => {
            let rows = match which {
                Which::T41 => table41_rows(only)?,
                Which::T71 => table71_rows()?,
            };
            let all_pass = rows.iter().all(|r| r.pass);
            if json {
                println!("{}", serde_json::to_string_pretty(&rows).unwrap());
            } else if csv {
                println!("id,spec,f_expected,f_computed,v_expected,v_computed,member_expected,result");
                for r in &rows {
                    println!(
                        "{},{},{},{},{},{},{},{}",
                        r.id,
                        r.spec,
                        r.f_expected,
                        r.f_computed,
                        r.v_expected,
                        r.v_computed,
                        member_text(&r.member_expected),
                        if r.pass { "PASS" } else { "FAIL" }
                    );
                }
            } else {
                for r in &rows {
                    print_row(r);
                }
            }
            Ok(if all_pass { 0 } else { 1 })
        }
        Command::ReduceRational { fraction } => {
            let f = parse_fraction(&fraction)?;
            let out = serde_json::json!({
                "class12": classify12(&f).label(),
                "link_class": classify_rational_link(&f).label(),
            });
            println!("{out}");
            Ok(0)
        }
        Command::ReduceMontesinos { spec, json } => {
            let parsed = parse_spec(&spec)?;
            let reduction = reduce_montesinos(&parsed)?;
            let report = compute_report(&parsed, &ComputeOptions::default())?;
            if json {
                let out = serde_json::json!({
                    "class": reduction.class,
                    "class_text": reduction.class.to_string(),
                    "permutation_open_problem": reduction.permutation_open_problem,
                    "sum_open_problem": reduction.sum_open_problem,
                    "report": report,
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!("canonical class : {}", reduction.class);
                if reduction.permutation_open_problem {
                    println!(
                        "note: identification permutes interleaved columns; whether such \
                         permutations are realized by 5-moves is open"
                    );
                }
                if reduction.sum_open_problem {
                    println!(
                        "note: distinctness of sums sharing these invariants is open"
                    );
                }
                println!("col5            : {}", report.col5);
                println!("F(1,x0)         : {}", report.f_special);
                println!("V(L)            : {}", report.v_abs);
                println!("V(L,5)          : {}", class5_text(&report.class5));
            }
            Ok(0)
        }
        Command::Density { kmax } => {
            for v in density_values(kmax) {
                println!("{},{},{}", v.k1, v.k2, v.value);
            }
            Ok(0)
        }
    }
}

fn parse_fraction(text: &str) -> Result<Fraction, Error> {
    let spec = parse_spec(&format!("rational:{text}"))?;
    match spec {
        fivemoves::notation::LinkSpec::Rational(f) => Ok(f),
        _ => unreachable!(),
    }
}

fn member_text(m: &[i64; 4]) -> String {
    let names = ["", "t", "t^2", "t^3"];
    let mut parts = Vec::new();
    for (i, &c) in m.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = if c.abs() == 1 && i > 0 {
            String::new()
        } else {
            c.abs().to_string()
        };
        let sign = if c < 0 { "-" } else if parts.is_empty() { "" } else { "+" };
        parts.push(format!("{sign}{mag}{}", names[i]));
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("")
    }
}

fn class5_text(vectors: &[[i64; 4]; 5]) -> String {
    let items: Vec<String> = vectors.iter().map(member_text).collect();
    format!("{{{}}}", items.join(", "))
}

fn print_row(r: &TableRow) {
    println!(
        "{:>16}  F {:>6} vs {:>6} [{}]  V {:>8} vs {:>8} [{}]  member {} [{}]  => {}",
        r.id,
        r.f_expected,
        r.f_computed,
        if r.f_pass { "ok" } else { "FAIL" },
        r.v_expected,
        r.v_computed,
        if r.v_pass { "ok" } else { "FAIL" },
        member_text(&r.member_expected),
        if r.member_pass { "ok" } else { "FAIL" },
        if r.pass { "PASS" } else { "FAIL" }
    );
}
