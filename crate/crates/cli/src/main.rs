//! `grsod`: command-line front end for the block-decomposition verifier.
//!
//! Exit codes: 0 success / pass, 1 verification failure, 2 usage error.

mod table;

use std::io::Write;
use std::num::NonZeroU64;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use grsod::decomposition::{ordered_blocks, verify_with};
use grsod::{
    bbw, cauchy_dimension_check, diagonal_resolution_summary, flag_blocks, flag_verify,
    k_rank_audit, lr_coefficient, pushforward_hom, BlockOrder, GlWeight, HomDirection,
    HomogeneousBundleWeight, Partition, VerifyOptions,
};
use serde::Serialize;
use serde_json::json;

#[derive(Parser, Debug)]
#[command(
    name = "grsod",
    version,
    about = "Semiorthogonal decompositions of twisted grassmannians and flag varieties"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Asc,
    Desc,
}

impl From<OrderArg> for BlockOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Asc => BlockOrder::Increasing,
            OrderArg::Desc => BlockOrder::Decreasing,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the blocks of Gr(k, n) in lex order.
    Blocks {
        k: usize,
        n: usize,
        #[arg(long, value_enum, default_value_t = OrderArg::Desc)]
        order: OrderArg,
        /// Period of the Brauer class; twists are reduced modulo it.
        #[arg(long)]
        period: Option<NonZeroU64>,
    },
    /// Verify semiorthogonality of the block family of Gr(k, n).
    Verify {
        k: usize,
        n: usize,
        #[arg(long, value_enum, default_value_t = OrderArg::Desc)]
        order: OrderArg,
        #[arg(long)]
        period: Option<NonZeroU64>,
        /// Require Hom(earlier, later) = 0 instead of Hom(later, earlier) = 0.
        #[arg(long)]
        reverse_hom: bool,
    },
    /// List the block tuples of Fl(k1, ..., km; n).
    FlagBlocks {
        #[arg(value_parser = parse_ks)]
        ks: FlagDims,
        n: usize,
        #[arg(long)]
        period: Option<NonZeroU64>,
    },
    /// Verify every level of Fl(k1, ..., km; n) as a relative grassmannian.
    FlagVerify {
        #[arg(value_parser = parse_ks)]
        ks: FlagDims,
        n: usize,
        #[arg(long)]
        period: Option<NonZeroU64>,
    },
    /// Cohomology of S^delta T ⊗ S^gamma R on Gr(k, n) by Borel-Bott-Weil.
    Bbw {
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        delta: GlWeight,
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        gamma: GlWeight,
        #[arg(long)]
        n: usize,
    },
    /// Pushforward of Hom(S^alpha R, S^alpha' R) along Gr(k, n) -> pt.
    Hom {
        #[arg(value_parser = parse_partition)]
        alpha: Partition,
        #[arg(value_parser = parse_partition)]
        alpha_prime: Partition,
        k: usize,
        n: usize,
    },
    /// Littlewood-Richardson coefficient c^c_{a,b}.
    Lr {
        #[arg(value_parser = parse_partition)]
        a: Partition,
        #[arg(value_parser = parse_partition)]
        b: Partition,
        #[arg(value_parser = parse_partition)]
        c: Partition,
    },
    /// Dimension identity for the Cauchy decomposition of Λ^m(V ⊗ W).
    Cauchy {
        dim_v: usize,
        dim_w: usize,
        m: usize,
    },
    /// Graded terms of the Koszul resolution of the diagonal of Gr(k, n).
    Koszul { k: usize, n: usize },
    /// Compare the block count of Gr(k, n) with C(n, k).
    RankAudit { k: usize, n: usize },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: grsod::Error| e.to_string())
}

fn parse_weight(s: &str) -> Result<GlWeight, String> {
    s.parse().map_err(|e: grsod::Error| e.to_string())
}

/// Comma-separated flag dimensions `k1,k2,...`.
#[derive(Clone, Debug)]
struct FlagDims(Vec<usize>);

fn parse_ks(s: &str) -> Result<FlagDims, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| format!("invalid entry {t:?}: {e}"))
        })
        .collect::<Result<_, _>>()
        .map(FlagDims)
}

/// What a subcommand produced: a JSON value, its table rendering, and whether
/// the checked property held.
struct Output {
    json: serde_json::Value,
    table: String,
    ok: bool,
}

fn to_json<T: Serialize>(value: &T) -> serde_json::Value {
    serde_json::to_value(value).expect("report types serialize")
}

fn run(command: Command) -> grsod::Result<Output> {
    let out = match command {
        Command::Blocks {
            k,
            n,
            order,
            period,
        } => {
            let blocks = ordered_blocks(k, n, order.into(), period)?;
            Output {
                table: table::blocks(k, n, &blocks),
                json: json!({ "k": k, "n": n, "blocks": to_json(&blocks) }),
                ok: true,
            }
        }
        Command::Verify {
            k,
            n,
            order,
            period,
            reverse_hom,
        } => {
            let options = VerifyOptions {
                order: order.into(),
                direction: if reverse_hom {
                    HomDirection::EarlierToLater
                } else {
                    HomDirection::LaterToEarlier
                },
                period,
            };
            let report = verify_with(k, n, &options)?;
            Output {
                table: table::semiorth(&report),
                json: to_json(&report),
                ok: report.verdict.passed(),
            }
        }
        Command::FlagBlocks {
            ks: FlagDims(ks),
            n,
            period,
        } => {
            let blocks = flag_blocks(&ks, n, period)?;
            Output {
                table: table::flag_blocks(&ks, n, &blocks),
                json: json!({ "ks": ks, "n": n, "blocks": to_json(&blocks) }),
                ok: true,
            }
        }
        Command::FlagVerify {
            ks: FlagDims(ks),
            n,
            period,
        } => {
            let report = flag_verify(&ks, n, period)?;
            Output {
                table: table::flag_report(&report),
                json: to_json(&report),
                ok: report.verdict.passed(),
            }
        }
        Command::Bbw { delta, gamma, n } => {
            let weight = HomogeneousBundleWeight::new(delta.clone(), gamma.clone(), n)?;
            let result = bbw(&weight);
            Output {
                table: table::cohomology(&weight, &result),
                json: json!({ "delta": delta, "gamma": gamma, "n": n, "result": to_json(&result) }),
                ok: true,
            }
        }
        Command::Hom {
            alpha,
            alpha_prime,
            k,
            n,
        } => {
            let report = pushforward_hom(&alpha, &alpha_prime, k, n)?;
            Output {
                table: table::pushforward(&report),
                json: to_json(&report),
                ok: true,
            }
        }
        Command::Lr { a, b, c } => {
            let coefficient = lr_coefficient(&a, &b, &c);
            Output {
                table: format!("{coefficient}\n"),
                json: json!({ "a": a, "b": b, "c": c, "coefficient": coefficient }),
                ok: true,
            }
        }
        Command::Cauchy { dim_v, dim_w, m } => {
            let check = cauchy_dimension_check(dim_v, dim_w, m);
            let mut json = to_json(&check);
            json["dim_v"] = dim_v.into();
            json["dim_w"] = dim_w.into();
            json["m"] = m.into();
            Output {
                table: table::cauchy(dim_v, dim_w, m, &check),
                json,
                ok: check.equal,
            }
        }
        Command::Koszul { k, n } => {
            let summary = diagonal_resolution_summary(k, n)?;
            let mut json = to_json(&summary);
            json["k"] = k.into();
            json["n"] = n.into();
            Output {
                table: table::koszul(k, n, &summary),
                json,
                ok: summary.bijection,
            }
        }
        Command::RankAudit { k, n } => {
            let audit = k_rank_audit(k, n)?;
            let mut json = to_json(&audit);
            json["k"] = k.into();
            json["n"] = n.into();
            Output {
                table: format!(
                    "Gr({k},{n}): {} blocks, expected C({n},{k}) = {}: {}\n",
                    audit.block_count,
                    audit.expected,
                    if audit.equal { "equal" } else { "MISMATCH" }
                ),
                json,
                ok: audit.equal,
            }
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                let _ = err.print();
                return ExitCode::SUCCESS;
            }
            let rendered = err.to_string();
            let line = rendered
                .lines()
                .find(|l| !l.trim().is_empty())
                .unwrap_or("usage error");
            eprintln!("grsod: {}", line.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };

    match run(cli.command) {
        Ok(output) => {
            let text = match cli.format {
                Format::Json => {
                    let mut s =
                        serde_json::to_string_pretty(&output.json).expect("json values print");
                    s.push('\n');
                    s
                }
                Format::Table => output.table,
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if output.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("grsod: {err}");
            ExitCode::from(2)
        }
    }
}
