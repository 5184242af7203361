//! Command-line front end: parse group/subgroup specifications, run
//! invariants, enumeration and certification, and emit text or JSON.
//!
//! Exit codes: 0 on success, 2 on parse/specification errors, 1 on internal
//! invariant violations (including certificates that fail validation).

mod subgroup;

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use homvar::{
    certify, enumerate_maximal_rank, group_invariants, parse_type, validate_certificate,
    CertificateNode, CertifyOptions, Characteristic, GroupSpec, PremiseValue, RuleOrder, Status,
    SubgroupSpec, Verdict,
};

#[derive(Parser)]
#[command(
    name = "homvar",
    version,
    about = "Root-system combinatorics and rationality certificates for homogeneous varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Rank, positive-root count and dimension of a semisimple type.
    Invariants {
        /// Group type, e.g. "B3" or "A2+2A1".
        #[arg(long)]
        group: String,
        /// Central torus dimension for reductive groups.
        #[arg(long, default_value_t = 0)]
        torus: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Enumerate maximal-rank subgroups by diagram moves.
    Enumerate {
        #[arg(long)]
        group: String,
        /// Chain depth; defaults to the rank of the group.
        #[arg(long)]
        depth: Option<u32>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Decide rationality of G/H and emit a certificate or a frontier tag.
    Certify {
        #[arg(long)]
        group: String,
        /// Base-field characteristic: 0 or a prime.
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        /// Dimension of the solvable radical of G.
        #[arg(long, default_value_t = 0)]
        radical: u32,
        /// Subgroup spec: "borel:dim=N", "maxrank:TYPE[;chain=...]" or
        /// "general:kv,...".
        #[arg(long)]
        subgroup: String,
        /// Search depth for maxrank specs without an explicit chain.
        #[arg(long)]
        depth: Option<u32>,
        /// Expand maximal-rank-criterion leaves into full induction traces.
        #[arg(long)]
        expand_trace: bool,
        /// Run the terminal rules in reverse order (status is unchanged).
        #[arg(long)]
        reverse_rules: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print a named dimension table.
    Table {
        /// Table kind; the only kind is "b23c3g2".
        kind: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Re-validate a previously emitted certificate against its pair.
    Validate {
        #[arg(long)]
        group: String,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        #[arg(long, default_value_t = 0)]
        radical: u32,
        #[arg(long)]
        subgroup: String,
        #[arg(long)]
        depth: Option<u32>,
        /// Path of the certificate JSON, or "-" for stdin.
        #[arg(long)]
        certificate: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Invariants {
            group,
            torus,
            format,
        } => {
            let t = parse_type(&group).map_err(|e| e.to_string())?;
            let gi = group_invariants(&t, torus as usize);
            match format {
                Format::Text => {
                    println!("group: {t} (central torus {torus})");
                    println!("rank: {}", gi.total_rank());
                    println!("positive roots: {}", gi.num_pos_roots);
                    println!("dim: {}", gi.dim);
                }
                Format::Json => {
                    let out = json!({
                        "v": 1,
                        "input": {"group": group, "torus": torus},
                        "type": t.to_string(),
                        "rank": gi.total_rank(),
                        "num_pos_roots": gi.num_pos_roots,
                        "dim": gi.dim,
                    });
                    println!("{out}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Enumerate {
            group,
            depth,
            format,
        } => {
            let t = parse_type(&group).map_err(|e| e.to_string())?;
            let depth = depth.unwrap_or(t.rank() as u32);
            let subs = enumerate_maximal_rank(&t, depth);
            for sub in &subs {
                match format {
                    Format::Text => {
                        let chain: Vec<String> =
                            sub.chain.iter().map(|m| m.to_string()).collect();
                        println!(
                            "{}  torus={}  chain=[{}]  simply_connected={}",
                            sub.semisimple_part,
                            sub.central_torus,
                            chain.join(","),
                            sub.simply_connected_cover_splits
                        );
                    }
                    Format::Json => {
                        let chain: Vec<Value> = sub
                            .chain
                            .iter()
                            .map(|m| {
                                let mut o = json!({
                                    "kind": m.kind.as_str(),
                                    "node": m.node,
                                    "component": m.component.to_string(),
                                });
                                if let Some(c) = m.comark_at_node {
                                    o["comark"] = json!(c);
                                }
                                o
                            })
                            .collect();
                        let out = json!({
                            "semisimple_part": sub.semisimple_part.to_string(),
                            "torus": sub.central_torus,
                            "chain": chain,
                            "simply_connected": sub.simply_connected_cover_splits,
                        });
                        println!("{out}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Certify {
            group,
            characteristic,
            radical,
            subgroup,
            depth,
            expand_trace,
            reverse_rules,
            format,
        } => {
            let (g, h) = build_pair(&group, characteristic, radical, &subgroup, depth)?;
            let opts = CertifyOptions {
                expand_trace,
                rule_order: if reverse_rules {
                    RuleOrder::ReversedTerminals
                } else {
                    RuleOrder::Canonical
                },
            };
            let verdict = certify(&g, &h, &opts).map_err(|e| e.to_string())?;
            match format {
                Format::Text => print_verdict_text(&verdict),
                Format::Json => {
                    let mut out = serde_json::to_value(&verdict).expect("verdict serializes");
                    out["input"] = json!({
                        "group": group,
                        "char": characteristic,
                        "radical": radical,
                        "subgroup": subgroup,
                    });
                    println!("{out}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Table { kind, format } => {
            if kind != "b23c3g2" {
                return Err(format!("unknown table kind {kind:?}; the only kind is \"b23c3g2\""));
            }
            print_b23c3g2(format);
            Ok(ExitCode::SUCCESS)
        }

        Command::Validate {
            group,
            characteristic,
            radical,
            subgroup,
            depth,
            certificate,
        } => {
            let (g, h) = build_pair(&group, characteristic, radical, &subgroup, depth)?;
            let raw = if certificate == "-" {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| format!("reading stdin: {e}"))?;
                buf
            } else {
                std::fs::read_to_string(&certificate)
                    .map_err(|e| format!("reading {certificate}: {e}"))?
            };
            let verdict: Verdict =
                serde_json::from_str(&raw).map_err(|e| format!("certificate JSON: {e}"))?;
            if verdict.status != Status::Rational {
                return Err("certificate status is not rational; nothing to validate".to_string());
            }
            let report = validate_certificate(&g, &h, &verdict);
            if report.valid {
                println!("certificate valid");
                Ok(ExitCode::SUCCESS)
            } else {
                println!(
                    "certificate INVALID at {}",
                    report.failure.unwrap_or_else(|| "unknown location".to_string())
                );
                Ok(ExitCode::FAILURE)
            }
        }
    }
}

fn build_pair(
    group: &str,
    characteristic: u64,
    radical: u32,
    subgroup: &str,
    depth: Option<u32>,
) -> Result<(GroupSpec, SubgroupSpec), String> {
    let t = parse_type(group).map_err(|e| format!("--group: {e}"))?;
    let chr = Characteristic::new(characteristic).map_err(|e| format!("--char: {e}"))?;
    let g = GroupSpec {
        semisimple_type: t.clone(),
        radical_dim: radical,
        characteristic: chr,
    };
    let depth = depth.unwrap_or(t.rank().max(1) as u32);
    let h = subgroup::parse_subgroup(subgroup, &t, depth).map_err(|e| format!("--subgroup: {e}"))?;
    Ok((g, h))
}

fn print_verdict_text(v: &Verdict) {
    let status = match v.status {
        Status::Rational => "rational",
        Status::Unknown => "unknown",
    };
    println!("status: {status}");
    if let Some(frontier) = &v.frontier {
        println!("frontier: {frontier}");
    }
    if let Some(note) = &v.note {
        println!("note: {note}");
    }
    let i = &v.invariants;
    println!(
        "invariants: tG={} tH={} uG={} uH={} uH_rad={}",
        i.t_g, i.t_h, i.u_g, i.u_h, i.u_h_rad
    );
    println!(
        "dim(G/H)={}  uG-uH={}  (tG-tH)+(uG-uH)={}",
        i.dim_quotient, i.dim_bgu, i.dim_ugb
    );
    if let Some(cert) = &v.certificate {
        println!("certificate:");
        print_node(cert, 1);
    }
}

fn print_node(node: &CertificateNode, indent: usize) {
    let pad = "  ".repeat(indent);
    println!("{pad}{}: {}", node.rule, node.paper_ref);
    for p in &node.premises {
        let value = match &p.value {
            PremiseValue::Bool(b) => b.to_string(),
            PremiseValue::Int(i) => i.to_string(),
            PremiseValue::Text(t) => t.clone(),
        };
        println!("{pad}  - {} = {}", p.name, value);
    }
    for a in &node.annotations {
        println!("{pad}  note: {a}");
    }
    for child in &node.children {
        print_node(child, indent + 1);
    }
}

/// The dimension table behind the rank-bound argument for B3 and G2,
/// computed from the root systems.
fn b23c3g2_columns() -> Vec<(String, i64, i64, i64, i64)> {
    ["B3", "G2"]
        .iter()
        .map(|name| {
            let t = parse_type(name).expect("fixed type");
            let gi = group_invariants(&t, 0);
            let n = gi.rank as i64;
            let dim_g = gi.dim as i64;
            // a semisimple group of rank n has dimension at least 3n
            let dim_h_lower = 3 * n;
            let dim_quotient_upper = dim_g - dim_h_lower;
            let rank_bound = n + n + 8;
            (
                name.to_string(),
                dim_g,
                dim_h_lower,
                dim_quotient_upper,
                rank_bound,
            )
        })
        .collect()
}

fn print_b23c3g2(format: Format) {
    let cols = b23c3g2_columns();
    let bound_satisfied = cols.iter().all(|c| c.3 < c.4);
    match format {
        Format::Text => {
            let names: Vec<&str> = cols.iter().map(|c| c.0.as_str()).collect();
            println!("{:<16}{:>8}{:>8}", "G of type", names[0], names[1]);
            println!("{:<16}{:>8}{:>8}", "dim G =", cols[0].1, cols[1].1);
            println!("{:<16}{:>8}{:>8}", "dim H >=", cols[0].2, cols[1].2);
            println!("{:<16}{:>8}{:>8}", "dim(G/H) <=", cols[0].3, cols[1].3);
            println!("{:<16}{:>8}{:>8}", "n + n + 8 =", cols[0].4, cols[1].4);
            if bound_satisfied {
                println!();
                println!(
                    "dim(G/H) < n + n + 8 in every column, whence rule R-THBRANK yields the \
                     rationality."
                );
            }
        }
        Format::Json => {
            let columns: Vec<Value> = cols
                .iter()
                .map(|c| {
                    json!({
                        "group": c.0,
                        "dim_G": c.1,
                        "dim_H_lower": c.2,
                        "dim_quotient_upper": c.3,
                        "rank_bound": c.4,
                    })
                })
                .collect();
            let out = json!({
                "v": 1,
                "table": "b23c3g2",
                "columns": columns,
                "bound_satisfied": bound_satisfied,
            });
            println!("{out}");
        }
    }
}
