//! Table and JSON rendering. Tables are stable-width and
//! locale-independent; JSON goes through serde so field order is fixed.

use anyhow::Result;
use mnt_core::classify::ClassificationReport;
use mnt_core::graph::Graph;
use mnt_core::search::SearchOutcome;
use mnt_core::{bounds, classify, graph6, laws};
use serde_json::json;

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn print_classification(
    graphs: &[Graph],
    reports: &[ClassificationReport],
    as_json: bool,
) -> Result<()> {
    if as_json {
        let items: Vec<_> = graphs
            .iter()
            .zip(reports)
            .map(|(g, r)| {
                json!({
                    "graph6": graph6::to_graph6(g),
                    "n": g.n(),
                    "edges": g.edge_count(),
                    "report": r,
                })
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&items)?);
        return Ok(());
    }
    println!(
        "{:<5} {:>3} {:>5} {:>9} {:>11} {:>5} {:>5}  certificate",
        "#", "n", "edges", "traceable", "hamiltonian", "mnt", "mnh"
    );
    for (idx, (g, r)) in graphs.iter().zip(reports).enumerate() {
        let cert = if let Some(w) = &r.path_witness {
            format!("path {:?}", w.order)
        } else if let Some(e) = &r.mnt_failing_edge {
            format!("mnt fails at {e}")
        } else {
            "-".to_string()
        };
        println!(
            "{:<5} {:>3} {:>5} {:>9} {:>11} {:>5} {:>5}  {}",
            idx,
            g.n(),
            g.edge_count(),
            yn(r.traceable),
            yn(r.hamiltonian),
            yn(r.mnt),
            yn(r.mnh),
            cert
        );
    }
    Ok(())
}

pub fn print_dkw_eligible(graphs: &[Graph], as_json: bool) -> Result<()> {
    let all: Vec<_> = graphs
        .iter()
        .map(|g| classify::dkw_eligible_with(g, Default::default()))
        .collect();
    if as_json {
        let items: Vec<_> = graphs
            .iter()
            .zip(&all)
            .map(|(g, edges)| {
                json!({
                    "graph6": graph6::to_graph6(g),
                    "eligible_edges": edges,
                })
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&items)?);
        return Ok(());
    }
    for (idx, (g, edges)) in graphs.iter().zip(&all).enumerate() {
        if edges.is_empty() {
            println!("{idx}: none (base must be cubic and MNH)");
        } else {
            let rendered: Vec<String> = edges.iter().map(|e| e.to_string()).collect();
            println!("{idx}: {} eligible: {}", edges.len(), rendered.join(" "));
        }
        let _ = g;
    }
    Ok(())
}

pub fn print_lemma_reports(reports: &[laws::LemmaReport], as_json: bool) -> Result<()> {
    if as_json {
        println!("{}", serde_json::to_string_pretty(reports)?);
        return Ok(());
    }
    for (idx, r) in reports.iter().enumerate() {
        println!(
            "graph {idx}: n={} e={} mode=\"{}\" (mnt={}, mnh={}) caps: paths<={} cutsets<={}",
            r.n,
            r.edges,
            r.mode,
            yn(r.mnt_certified),
            yn(r.mnh_certified),
            r.max_len,
            r.max_t
        );
        if !r.skipped.is_empty() {
            println!("  skipped (disconnected input): {}", r.skipped.join(", "));
        }
        if r.violations.is_empty() {
            println!("  violations: none");
        } else {
            for v in &r.violations {
                println!("  violation [{}]: {}", v.law, v.detail);
            }
        }
    }
    Ok(())
}

pub fn print_bounds(rows: &[bounds::BoundStatus], as_json: bool) -> Result<()> {
    if as_json {
        println!("{}", serde_json::to_string_pretty(rows)?);
        return Ok(());
    }
    println!(
        "{:>4} {:>6} {:>6} {:>7}  provenance",
        "n", "lower", "upper", "status"
    );
    for row in rows {
        let upper = row
            .upper
            .map(|u| u.to_string())
            .unwrap_or_else(|| "-".to_string());
        let status = match row.status {
            bounds::Status::Known => "known",
            bounds::Status::Open => "open",
        };
        println!(
            "{:>4} {:>6} {:>6} {:>7}  {}",
            row.n,
            row.lower,
            upper,
            status,
            row.notes.join("; ")
        );
    }
    Ok(())
}

pub fn print_search_outcome(outcome: &SearchOutcome, as_json: bool) -> Result<()> {
    if as_json {
        // stats_json carries wall time; strip it so stdout stays
        // deterministic (it still lands in --out stats files).
        let mut value = outcome.stats_json();
        if let Some(stats) = value.get_mut("stats").and_then(|s| s.as_object_mut()) {
            stats.remove("wall_ms");
        }
        println!("{}", serde_json::to_string_pretty(&value)?);
        return Ok(());
    }
    match outcome.result {
        mnt_core::search::SearchResult::Exact { value } => {
            println!(
                "{} minimum at n={}: {} edges ({} witness{})",
                outcome.target,
                outcome.n,
                value,
                outcome.witnesses.len(),
                if outcome.witnesses.len() == 1 { "" } else { "es" }
            );
            for line in outcome.witness_g6_lines() {
                println!("  {line}");
            }
        }
        mnt_core::search::SearchResult::Bracket { lower, upper } => {
            let upper = upper
                .map(|u| u.to_string())
                .unwrap_or_else(|| "?".to_string());
            println!(
                "{} minimum at n={}: budget exhausted, value in [{lower}, {upper}]",
                outcome.target, outcome.n
            );
        }
    }
    println!(
        "classes enumerated: {}  decider calls: {}",
        outcome.stats.classes_enumerated, outcome.stats.decider_calls
    );
    Ok(())
}
