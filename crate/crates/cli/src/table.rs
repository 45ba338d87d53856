//! Plain-text renderers. Every number printed here also appears in the JSON
//! output of the same subcommand.

use std::fmt::Write;

use grsod::cauchy_koszul::CauchyCheck;
use grsod::decomposition::{DiagonalSummary, PairRef};
use grsod::{
    Block, CohomologyResult, FlagBlock, FlagReport, HomogeneousBundleWeight, PushforwardReport,
    SemiorthReport,
};

pub fn blocks(k: usize, n: usize, blocks: &[Block]) -> String {
    let mut out = format!("Gr({k},{n}): {} blocks\n", blocks.len());
    let rows: Vec<[String; 3]> = blocks
        .iter()
        .map(|b| {
            [
                b.position.to_string(),
                b.alpha.to_string(),
                b.twist.to_string(),
            ]
        })
        .collect();
    out.push_str(&grid(&["pos", "alpha", "twist"], &rows));
    out
}

pub fn flag_blocks(ks: &[usize], n: usize, blocks: &[FlagBlock]) -> String {
    let mut out = format!("Fl({ks:?}; {n}): {} blocks\n", blocks.len());
    let rows: Vec<[String; 3]> = blocks
        .iter()
        .map(|b| {
            let alphas: Vec<String> = b.alphas.iter().map(ToString::to_string).collect();
            [
                b.position.to_string(),
                alphas.join(" "),
                b.twist.to_string(),
            ]
        })
        .collect();
    out.push_str(&grid(&["pos", "alphas", "twist"], &rows));
    out
}

fn cohomology_cell(report: &PushforwardReport) -> String {
    if report.is_acyclic {
        return "0".to_string();
    }
    report
        .nonzero()
        .map(|s| {
            let mult = if s.mult > 1 {
                format!("{}x", s.mult)
            } else {
                String::new()
            };
            format!(
                "{mult}H{}:{}",
                s.result.degree().unwrap_or_default(),
                s.result
                    .dimension()
                    .map(ToString::to_string)
                    .unwrap_or_default()
            )
        })
        .collect::<Vec<_>>()
        .join("+")
}

fn pair_list(pairs: &[PairRef]) -> String {
    pairs
        .iter()
        .map(|p| format!("{} -> {}", p.source, p.target))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn semiorth(report: &SemiorthReport) -> String {
    let mut out = String::new();
    let order = match report.order {
        grsod::BlockOrder::Decreasing => "desc",
        grsod::BlockOrder::Increasing => "asc",
    };
    let direction = match report.direction {
        grsod::HomDirection::LaterToEarlier => "Hom(later, earlier) = 0",
        grsod::HomDirection::EarlierToLater => "Hom(earlier, later) = 0",
    };
    let _ = writeln!(
        out,
        "Gr({},{}) order={order} required: {direction}",
        report.k, report.n
    );
    out.push_str(&blocks(report.k, report.n, &report.blocks));

    let m = report.blocks.len();
    let _ = writeln!(
        out,
        "\nRq_* Hom(row, column); 0 = acyclic, Hd:D = degree d dimension D, * = required"
    );
    let mut header = vec!["".to_string()];
    header.extend((0..m).map(|j| j.to_string()));
    let rows: Vec<Vec<String>> = (0..m)
        .map(|i| {
            let mut row = vec![i.to_string()];
            for j in 0..m {
                let cell = match report.entry(i, j) {
                    None => {
                        if report.self_homs[i].is_exceptional() {
                            "E".to_string()
                        } else {
                            format!("!{}", cohomology_cell(&report.self_homs[i]))
                        }
                    }
                    Some(e) => {
                        let mark = if e.required { "*" } else { "" };
                        format!("{}{mark}", cohomology_cell(&e.report))
                    }
                };
                row.push(cell);
            }
            row
        })
        .collect();
    let header_refs: Vec<&str> = header.iter().map(String::as_str).collect();
    out.push_str(&grid_dyn(&header_refs, &rows));

    let _ = writeln!(
        out,
        "\nexceptional blocks: {}",
        if report.exceptional { "all" } else { "NOT all" }
    );
    let _ = writeln!(out, "required vanishings: {}", report.required_count());
    let _ = writeln!(
        out,
        "informational nonvanishing pairs: {}",
        report.informational.len()
    );
    if !report.violations.is_empty() {
        let _ = writeln!(out, "violations: {}", pair_list(&report.violations));
    }
    let _ = writeln!(out, "verdict: {}", report.verdict);
    let _ = writeln!(out, "note: {}", report.generation);
    out
}

pub fn flag_report(report: &FlagReport) -> String {
    let mut out = flag_blocks(&report.ks, report.n, &report.blocks);
    for (i, level) in report.levels.iter().enumerate() {
        let _ = writeln!(
            out,
            "level {}: Gr({},{}) verdict {} ({} required vanishings, {} violations)",
            i + 1,
            level.k,
            level.n,
            level.verdict,
            level.required_count(),
            level.violations.len()
        );
    }
    let _ = writeln!(out, "verdict: {}", report.verdict);
    out
}

pub fn cohomology(weight: &HomogeneousBundleWeight, result: &CohomologyResult) -> String {
    let head = format!(
        "S^{} T ⊗ S^{} R on Gr({},{})",
        weight.delta(),
        weight.gamma(),
        weight.k(),
        weight.n()
    );
    match result {
        CohomologyResult::Acyclic => format!("{head}: acyclic\n"),
        CohomologyResult::Nonzero {
            degree,
            output,
            dimension,
        } => {
            format!("{head}: H^{degree} = S^{output} E, dimension {dimension}\n")
        }
    }
}

pub fn pushforward(report: &PushforwardReport) -> String {
    let mut out = format!(
        "Rq_* Hom(S^{} R, S^{} R): {}\n",
        report.alpha,
        report.alpha_prime,
        if report.is_acyclic {
            "acyclic"
        } else {
            "NOT acyclic"
        }
    );
    let rows: Vec<[String; 4]> = report
        .summands
        .iter()
        .map(|s| {
            [
                s.beta.to_string(),
                s.mult.to_string(),
                s.result
                    .degree()
                    .map(|d| d.to_string())
                    .unwrap_or_else(|| "-".into()),
                s.result
                    .dimension()
                    .map(|d| d.to_string())
                    .unwrap_or_else(|| "-".into()),
            ]
        })
        .collect();
    out.push_str(&grid(&["beta", "mult", "degree", "dim"], &rows));
    out
}

pub fn cauchy(dim_v: usize, dim_w: usize, m: usize, check: &CauchyCheck) -> String {
    format!(
        "Λ^{m}(V ⊗ W), dim V = {dim_v}, dim W = {dim_w}: C({}, {m}) = {}, Σ dim S^α V · dim S^α* W = {}: {}\n",
        dim_v * dim_w,
        check.lhs,
        check.rhs,
        if check.equal { "equal" } else { "MISMATCH" }
    )
}

pub fn koszul(k: usize, n: usize, summary: &DiagonalSummary) -> String {
    let mut out = format!(
        "Koszul resolution of the diagonal of Gr({k},{n}): length {}, {} generators\n",
        summary.length, summary.generator_count
    );
    let rows: Vec<[String; 3]> = summary
        .terms
        .iter()
        .map(|t| {
            let pairs: Vec<String> = t
                .pairs
                .iter()
                .map(|p| format!("{}⊠{}", p.alpha, p.conjugate))
                .collect();
            [t.degree.to_string(), t.twist.to_string(), pairs.join(" ")]
        })
        .collect();
    out.push_str(&grid(&["m", "twist", "F_alpha ⊠ G_alpha*"], &rows));
    let _ = writeln!(
        out,
        "block bijection: {}",
        if summary.bijection { "holds" } else { "FAILS" }
    );
    out
}

fn grid<const N: usize>(header: &[&str; N], rows: &[[String; N]]) -> String {
    let rows: Vec<Vec<String>> = rows.iter().map(|r| r.to_vec()).collect();
    grid_dyn(header, &rows)
}

fn grid_dyn(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &mut dyn Iterator<Item = &str>| -> String {
        let padded: Vec<String> = cells
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(&mut header.iter().copied());
    for row in rows {
        out.push_str(&line(&mut row.iter().map(String::as_str)));
    }
    out
}
