//! `mckay`: odd-degree characters of symmetric groups and their restrictions
//! to Sylow 2-subgroups.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mckay_core::littlewood_richardson::{canonical_delta_filling, lr_coefficient};
use mckay_core::mckay::{
    phi, psi_table, restrict_to_sylow, verify_hook_linear_constituents, verify_hook_lr_closed_form,
    verify_linear_constituent_counts, verify_one_more_than_power_of_two, verify_young_reducibility, RestrictionReport,
    VerificationReport,
};
use mckay_core::murnaghan_nakayama::mn_value;
use mckay_core::partitions::{delta, enumerate_odd_partitions, skew_of_delta, Partition};
use mckay_core::sylow2::MAX_DEPTH;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "mckay", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Format {
    /// Print JSON.
    #[arg(long, conflicts_with = "tsv")]
    json: bool,
    /// Print tab-separated rows.
    #[arg(long)]
    tsv: bool,
    /// Write partitions with exponents, e.g. (2^2,1^2).
    #[arg(long)]
    exponent: bool,
}

impl Format {
    fn partition(&self, p: &Partition) -> String {
        if self.exponent {
            p.to_exponent_string()
        } else {
            p.to_string()
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the odd-degree characters of S_n with their degrees.
    OddChars {
        n: usize,
        #[command(flatten)]
        format: Format,
    },
    /// Print the bijection from odd-degree characters of S_n to hook tuples.
    Bijection {
        n: usize,
        #[command(flatten)]
        format: Format,
    },
    /// Decompose the restriction of a character of S_n to a Sylow 2-subgroup.
    Restrict {
        lambda: Partition,
        /// Include the decomposition into all irreducibles.
        #[arg(long)]
        full: bool,
        /// Count distinct linear constituents instead of total multiplicity.
        #[arg(long)]
        distinct: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Littlewood-Richardson coefficient c^λ_{μν}.
    Lr {
        lambda: Partition,
        mu: Partition,
        nu: Partition,
        #[command(flatten)]
        format: Format,
    },
    /// Character value χ^λ at a cycle type.
    Mn {
        lambda: Partition,
        cycle_type: Partition,
        #[command(flatten)]
        format: Format,
    },
    /// The half partition Δ(λ) and the row lengths of λ minus Δ(λ).
    Delta {
        lambda: Partition,
        #[command(flatten)]
        format: Format,
    },
    /// The explicit filling of λ minus Δ(λ) with content Δ(λ).
    Filling {
        lambda: Partition,
        #[command(flatten)]
        format: Format,
    },
    /// Sign string of the linear constituent of the hook (2^d - k, 1^k).
    Phi {
        d: u32,
        k: u64,
        #[command(flatten)]
        format: Format,
    },
    /// Run an exhaustive verifier; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum)]
        theorem: Verifier,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[command(flatten)]
        format: Format,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Verifier {
    /// Hooks of S_{2^d} have one linear constituent, given by phi.
    #[value(name = "A2")]
    HookConstituents,
    /// Linear constituent counts for every character of S_n.
    #[value(name = "B")]
    LinearCounts,
    /// Psi agrees with restriction for n = 2^m + 1.
    #[value(name = "prop2m1")]
    OneMoreThanPowerOfTwo,
    /// Closed form for hooks restricted to S_n × S_n.
    #[value(name = "lr-hooks")]
    LrHooks,
    /// Odd-degree characters restrict reducibly to the 2-adic Young subgroup.
    #[value(name = "young-reduc")]
    YoungReducibility,
}

enum Failure {
    Input(String),
    Verification,
}

impl From<mckay_core::Error> for Failure {
    fn from(e: mckay_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn rows_out(format: &Format, header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut out = String::new();
    if format.json {
        let objects: Vec<Value> = rows
            .iter()
            .map(|r| Value::Object(header.iter().zip(r).map(|(h, v)| (h.to_string(), json!(v))).collect()))
            .collect();
        return serde_json::to_string_pretty(&objects).expect("serializable") + "\n";
    }
    let sep = if format.tsv { "\t" } else { " " };
    if format.tsv {
        writeln!(out, "{}", header.join(sep)).unwrap();
    }
    for r in rows {
        writeln!(out, "{}", r.join(sep)).unwrap();
    }
    out
}

fn odd_chars(n: usize, format: &Format) -> Outcome {
    if n == 0 {
        return Err(Failure::Input("n must be at least 1".into()));
    }
    let rows = enumerate_odd_partitions(n)
        .iter()
        .map(|l| vec![format.partition(l), l.degree().to_string()])
        .collect();
    Ok(rows_out(format, &["partition", "degree"], rows))
}

fn bijection(n: usize, format: &Format) -> Outcome {
    if n == 0 {
        return Err(Failure::Input("n must be at least 1".into()));
    }
    let table = psi_table(n);
    if format.json || format.tsv {
        let rows = table
            .iter()
            .map(|(l, h)| vec![format.partition(l), h.to_string()])
            .collect();
        return Ok(rows_out(format, &["partition", "hook_tuple"], rows));
    }
    let width = table.iter().map(|(l, _)| format.partition(l).len()).max().unwrap_or(0);
    let mut out = String::new();
    for (l, h) in &table {
        writeln!(out, "{:<width$} -> {h}", format.partition(l)).unwrap();
    }
    Ok(out)
}

fn restrict(lambda: &Partition, full: bool, distinct: bool, format: &Format) -> Outcome {
    let mut report: RestrictionReport = restrict_to_sylow(lambda, lambda.size())?;
    if !full {
        report.full_decomposition = None;
    }
    let count = if distinct {
        report.distinct_linear_count()
    } else {
        report.total_linear_multiplicity()
    };
    if format.json {
        return Ok(serde_json::to_string_pretty(&report).expect("serializable") + "\n");
    }
    let mut out = String::new();
    if format.tsv {
        writeln!(out, "kind\tlabel\thook_tuple\tdegree\tmultiplicity").unwrap();
        for (h, m) in report.linear_constituents_by_hook_tuple() {
            writeln!(out, "linear\t{}\t{h}\t1\t{m}", h.linear_label()).unwrap();
        }
        for (l, m) in report
            .full_decomposition
            .iter()
            .flatten()
            .filter(|(l, _)| l.degree() > 1)
        {
            writeln!(out, "irreducible\t{l}\t-\t{}\t{m}", l.degree()).unwrap();
        }
        return Ok(out);
    }
    writeln!(out, "lambda: {}", format.partition(lambda)).unwrap();
    writeln!(out, "degree: {}", report.degree).unwrap();
    writeln!(out, "linear constituents:").unwrap();
    for (h, m) in report.linear_constituents_by_hook_tuple() {
        writeln!(out, "  {h} [{}]: {m}", h.linear_label()).unwrap();
    }
    writeln!(
        out,
        "{} linear constituents: {count}",
        if distinct { "distinct" } else { "total" }
    )
    .unwrap();
    if let Some(fd) = &report.full_decomposition {
        writeln!(out, "full decomposition:").unwrap();
        for (l, m) in fd {
            writeln!(out, "  {l} (degree {}): {m}", l.degree()).unwrap();
        }
    }
    for c in &report.checks {
        writeln!(out, "{} {}", if c.pass { "PASS" } else { "FAIL" }, c.name).unwrap();
    }
    if !report.passed() {
        print!("{out}");
        return Err(Failure::Verification);
    }
    Ok(out)
}

fn scalar(format: &Format, key: &str, value: Value) -> String {
    if format.json {
        serde_json::to_string_pretty(&json!({ key: value })).expect("serializable") + "\n"
    } else {
        let text = match &value {
            Value::String(s) => s.clone(),
            v => v.to_string(),
        };
        format!("{text}\n")
    }
}

fn delta_cmd(lambda: &Partition, format: &Format) -> Outcome {
    let d = delta(lambda)?;
    let rows = skew_of_delta(lambda)?.row_lengths();
    let rows_text: Vec<String> = rows.iter().map(|r| r.to_string()).collect();
    if format.json {
        let v = json!({ "lambda": lambda.to_string(), "delta": d.to_string(), "skew_row_lengths": rows });
        return Ok(serde_json::to_string_pretty(&v).expect("serializable") + "\n");
    }
    if format.tsv {
        return Ok(format!(
            "delta\tskew_row_lengths\n{}\t{}\n",
            format.partition(&d),
            rows_text.join(",")
        ));
    }
    Ok(format!(
        "delta: {}\nskew row lengths: ({})\n",
        format.partition(&d),
        rows_text.join(",")
    ))
}

fn filling_cmd(lambda: &Partition, format: &Format) -> Outcome {
    let filling = canonical_delta_filling(lambda)?;
    let rows: Vec<Vec<usize>> = filling.rows().iter().map(|r| r.to_vec()).collect();
    if format.json {
        let v = json!({ "lambda": lambda.to_string(), "rows": rows });
        return Ok(serde_json::to_string_pretty(&v).expect("serializable") + "\n");
    }
    let sep = if format.tsv { "\t" } else { " " };
    let inner = filling.shape().inner();
    let mut out = String::new();
    for (i, r) in rows.iter().enumerate() {
        let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        if format.tsv || cells.is_empty() {
            writeln!(out, "{}", cells.join(sep)).unwrap();
        } else {
            let pad = "  ".repeat(inner.get(i).copied().unwrap_or(0));
            writeln!(out, "{pad}{}", cells.join(sep)).unwrap();
        }
    }
    Ok(out)
}

fn run_verifier(theorem: Verifier, max_n: usize) -> Result<Vec<VerificationReport>, Failure> {
    let reports = match theorem {
        Verifier::HookConstituents => {
            let max_d = (1..=MAX_DEPTH).take_while(|&d| 1usize << d <= max_n).last();
            let max_d = max_d.ok_or_else(|| Failure::Input("--max-n must be at least 2".into()))?;
            (1..=max_d)
                .map(verify_hook_linear_constituents)
                .collect::<Result<Vec<_>, _>>()?
        }
        Verifier::LinearCounts => vec![verify_linear_constituent_counts(max_n)?],
        Verifier::OneMoreThanPowerOfTwo => {
            let ms: Vec<u32> = (1..=MAX_DEPTH).take_while(|&m| (1usize << m) < max_n).collect();
            if ms.is_empty() {
                return Err(Failure::Input("--max-n must be at least 3".into()));
            }
            ms.into_iter()
                .map(verify_one_more_than_power_of_two)
                .collect::<Result<Vec<_>, _>>()?
        }
        Verifier::LrHooks => vec![verify_hook_lr_closed_form(max_n)?],
        Verifier::YoungReducibility => vec![verify_young_reducibility(max_n)?],
    };
    Ok(reports)
}

fn verify(theorem: Verifier, max_n: usize, format: &Format) -> Outcome {
    let reports = run_verifier(theorem, max_n)?;
    let passed = reports.iter().all(VerificationReport::passed);
    let out = if format.json {
        serde_json::to_string_pretty(&reports).expect("serializable") + "\n"
    } else {
        let sep = if format.tsv { "\t" } else { " " };
        let mut out = String::new();
        for r in &reports {
            for c in &r.checks {
                writeln!(
                    out,
                    "{}{sep}{}: {}",
                    if c.pass { "PASS" } else { "FAIL" },
                    r.name,
                    c.name
                )
                .unwrap();
            }
        }
        let total: usize = reports.iter().map(|r| r.checks.len()).sum();
        let failed: usize = reports.iter().map(|r| r.failures().count()).sum();
        if !format.tsv {
            writeln!(out, "{} of {total} checks passed", total - failed).unwrap();
        }
        out
    };
    if passed {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Verification)
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::OddChars { n, format } => odd_chars(n, &format),
        Command::Bijection { n, format } => bijection(n, &format),
        Command::Restrict {
            lambda,
            full,
            distinct,
            format,
        } => restrict(&lambda, full, distinct, &format),
        Command::Lr { lambda, mu, nu, format } => Ok(scalar(
            &format,
            "coefficient",
            json!(lr_coefficient(&lambda, &mu, &nu)?),
        )),
        Command::Mn {
            lambda,
            cycle_type,
            format,
        } => Ok(scalar(&format, "value", json!(mn_value(&lambda, &cycle_type)?))),
        Command::Delta { lambda, format } => delta_cmd(&lambda, &format),
        Command::Filling { lambda, format } => filling_cmd(&lambda, &format),
        Command::Phi { d, k, format } => {
            let label = phi(d, k)?;
            if format.json {
                let hook = Partition::hook(1usize << d, k as usize)?;
                let v = json!({ "d": d, "k": k, "hook": hook.to_string(), "label": label.to_string() });
                Ok(serde_json::to_string_pretty(&v).expect("serializable") + "\n")
            } else {
                Ok(format!("{label}\n"))
            }
        }
        Command::Verify { theorem, max_n, format } => verify(theorem, max_n, &format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
