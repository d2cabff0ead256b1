//! Command-line front end. Data goes to stdout, diagnostics to stderr.
//!
//! Exit codes: 0 success, 2 verification mismatch, 64 usage or parse error,
//! 65 size limit, 70 internal inconsistency, 74 output failure.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;

use crate::enumeration::{booleans_above, count_table, global_rank_count};
use crate::error::{size_limit_from_env, Error};
use crate::genfunc::{expand_egf, recurrence_table, triple_agreement};
use crate::graph::{CoxeterType, Family};
use crate::group::GroupElement;
use crate::independent::count_by_size;
use crate::oeis::compare;
use crate::verify::verify;
use crate::weak_order::build_weak_order_with_limit;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_SIZE_LIMIT: i32 = 65;
pub const EXIT_INTERNAL: i32 = 70;
pub const EXIT_IO: i32 = 74;

#[derive(Parser, Debug)]
#[command(
    name = "coxbool",
    version,
    about = "Count and enumerate Boolean intervals in the weak order of Coxeter groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableSource {
    /// Family closed forms (checked against i_k |W| / 2^k).
    Closed,
    /// The two-term recurrence (types C and D).
    Recurrence,
    /// Coefficients of the bivariate EGF (types C and D).
    Egf,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse::<Family>().map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Number of Boolean intervals of rank k (every k when omitted).
    Count {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List the Boolean intervals whose minimum is the given element.
    Above {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// One-line notation, e.g. 513649728 or 451623.
        #[arg(long)]
        element: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Cross-check formulas against brute force; exit 2 on any mismatch.
    Verify {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Also run the order-isomorphism oracle and BFS length checks.
        #[arg(long)]
        deep: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Table of rank-k counts for n = 1..=max-n.
    Table {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "closed")]
        source: TableSource,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Compare recurrence, EGF and closed form for types C and D.
    Gf {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Coxeter graph, or with --poset the Hasse diagram of the weak order.
    Graph {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        poset: bool,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Compare a computed prefix with a bundled OEIS fixture.
    Oeis {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 10)]
        terms: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Exit status for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SizeLimit { .. } => EXIT_SIZE_LIMIT,
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (program name first), runs the command and returns the exit status.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    run(&cli.command, out, err)
}

pub fn run(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut buf = String::new();
    let status = match execute(cmd, &mut buf) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "coxbool: {e}");
            return exit_code(&e);
        }
    };
    if out
        .write_all(buf.as_bytes())
        .and_then(|_| out.flush())
        .is_err()
    {
        let _ = writeln!(err, "coxbool: failed to write output");
        return EXIT_IO;
    }
    status
}

fn unsupported_format(f: Format, cmd: &str) -> Error {
    Error::Unsupported(format!("format {f:?} is not available for {cmd}"))
}

fn execute(cmd: &Command, out: &mut String) -> crate::Result<i32> {
    match cmd {
        Command::Count {
            family,
            n,
            k,
            format,
        } => {
            let ks: Vec<usize> = match k {
                Some(k) => vec![*k],
                None => (0..=n.div_ceil(2) + 1).collect(),
            };
            let counts = ks
                .iter()
                .map(|&k| global_rank_count(*family, *n, k))
                .collect::<crate::Result<Vec<BigUint>>>()?;
            match (format, k) {
                (Format::Text, Some(_)) => out.push_str(&format!("{}\n", counts[0])),
                (Format::Text, None) => {
                    for (k, c) in ks.iter().zip(&counts) {
                        out.push_str(&format!("k={k} {c}\n"));
                    }
                }
                (Format::Json, Some(k)) => out.push_str(&format!(
                    "{}\n",
                    json!({"family": family.name(), "n": n, "k": k, "count": counts[0].to_string()})
                )),
                (Format::Json, None) => {
                    let rows: Vec<_> = ks
                        .iter()
                        .zip(&counts)
                        .map(|(k, c)| json!({"family": family.name(), "n": n, "k": k, "count": c.to_string()}))
                        .collect();
                    out.push_str(&format!("{}\n", serde_json::Value::Array(rows)));
                }
                (Format::Csv, _) => {
                    out.push_str("n,k,count\n");
                    for (k, c) in ks.iter().zip(&counts) {
                        out.push_str(&format!("{n},{k},{c}\n"));
                    }
                }
                (f, _) => return Err(unsupported_format(*f, "count")),
            }
            Ok(EXIT_OK)
        }
        Command::Above {
            family,
            n,
            element,
            format,
        } => {
            let e = GroupElement::parse(*family, *n, element)?;
            let g = e.graph();
            let above = booleans_above(&e)?;
            let max_rank = above.iter().map(|b| b.rank()).max().unwrap_or(0);
            let mut hist = vec![0usize; max_rank + 1];
            for b in &above {
                hist[b.rank()] += 1;
            }
            let names = |b: &crate::enumeration::AboveInterval| -> Vec<String> {
                b.independent
                    .iter()
                    .map(|&s| g.name(s).to_string())
                    .collect()
            };
            match format {
                Format::Text => {
                    out.push_str(&format!(
                        "{} intervals with minimum {}\n",
                        above.len(),
                        e.to_text()
                    ));
                    for b in &above {
                        out.push_str(&format!(
                            "rank {}  {{{}}}  {}\n",
                            b.rank(),
                            names(b).join(","),
                            b.top.to_text()
                        ));
                    }
                    let h: Vec<String> = hist.iter().map(ToString::to_string).collect();
                    out.push_str(&format!("histogram {}\n", h.join(",")));
                }
                Format::Json => {
                    let items: Vec<_> = above
                        .iter()
                        .map(|b| json!({"rank": b.rank(), "independent": names(b), "max": b.top.to_text()}))
                        .collect();
                    out.push_str(&format!(
                        "{}\n",
                        json!({
                            "family": family.name(),
                            "n": n,
                            "element": e.to_text(),
                            "intervals": items,
                            "histogram": hist,
                        })
                    ));
                }
                f => return Err(unsupported_format(*f, "above")),
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            family,
            n,
            deep,
            format,
        } => {
            let report = verify(*family, *n, *deep)?;
            let passed = report.passed();
            match (format, passed) {
                (_, false) => out.push_str(&format!("{}\n", report.diff_json())),
                (Format::Json, true) => out.push_str(&format!("{}\n", report.to_json())),
                (Format::Text, true) => out.push_str(&report.to_text()),
                (f, true) => return Err(unsupported_format(*f, "verify")),
            }
            Ok(if passed { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Table {
            family,
            max_n,
            source,
            format,
        } => {
            let table = match source {
                TableSource::Closed => count_table(*family, *max_n)?,
                TableSource::Recurrence => recurrence_table(*family, *max_n)?,
                TableSource::Egf => expand_egf(*family, *max_n)?,
            };
            match format {
                Format::Csv => out.push_str(&table.to_csv()),
                Format::Json => out.push_str(&format!("{}\n", table.to_json())),
                f => return Err(unsupported_format(*f, "table")),
            }
            Ok(EXIT_OK)
        }
        Command::Gf {
            family,
            max_n,
            format,
        } => {
            let rows = triple_agreement(*family, *max_n)?;
            let all = rows.iter().all(|r| r.agree);
            let s = |v: &[BigUint]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
            match format {
                Format::Text => {
                    for r in &rows {
                        out.push_str(&format!(
                            "n={:<3} {}  total {}  {}\n",
                            r.n,
                            s(&r.egf).join(","),
                            r.total,
                            if r.agree { "agree" } else { "MISMATCH" }
                        ));
                    }
                }
                Format::Json => {
                    let items: Vec<_> = rows
                        .iter()
                        .map(|r| {
                            json!({
                                "n": r.n,
                                "recurrence": s(&r.recurrence),
                                "egf": s(&r.egf),
                                "closed_form": s(&r.closed_form),
                                "total": r.total.to_string(),
                                "agree": r.agree,
                            })
                        })
                        .collect();
                    out.push_str(&format!(
                        "{}\n",
                        json!({"family": family.name(), "rows": items, "agree": all})
                    ));
                }
                f => return Err(unsupported_format(*f, "gf")),
            }
            Ok(if all { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Graph {
            family,
            n,
            poset,
            format,
        } => {
            if *poset {
                if *format != Format::Dot {
                    return Err(unsupported_format(*format, "graph --poset"));
                }
                let p = build_weak_order_with_limit(*family, *n, size_limit_from_env())?;
                out.push_str(&p.to_dot());
                return Ok(EXIT_OK);
            }
            let g = CoxeterType::new(*family, *n)?.graph()?;
            match format {
                Format::Dot => out.push_str(&g.to_dot()),
                Format::Json => out.push_str(&format!("{}\n", g.to_json())),
                Format::Text => {
                    let profile = count_by_size(&g);
                    out.push_str(&format!(
                        "{}: {} vertices, {} edges, independent sets {}\n",
                        g.label(),
                        g.vertex_count(),
                        g.edge_count(),
                        profile.total()
                    ));
                }
                f => return Err(unsupported_format(*f, "graph")),
            }
            Ok(EXIT_OK)
        }
        Command::Oeis { id, terms, format } => {
            let c = compare(id, *terms)?;
            match format {
                Format::Text => {
                    out.push_str(&format!(
                        "{} {}\ncomputed {}\nfixture  {}\n",
                        c.id,
                        if c.matches { "matches" } else { "MISMATCH" },
                        c.computed.join(","),
                        c.expected.join(",")
                    ));
                }
                Format::Json => out.push_str(&format!(
                    "{}\n",
                    serde_json::to_value(&c).expect("plain data")
                )),
                f => return Err(unsupported_format(*f, "oeis")),
            }
            Ok(if c.matches { EXIT_OK } else { EXIT_MISMATCH })
        }
    }
}
