//! Acceptance suite: one test per release criterion, each printing a
//! single PASS/FAIL line (run with `--nocapture` to see them all).
//!
//! Criteria, in order: small-order MNT minimums by exhaustive search;
//! Petersen edge eligibility; the order-12/13 extension outputs; the
//! closed-form construction contracts; the structural-law sweep with
//! negative controls; fast-vs-naive decider equivalence; the MNH desk
//! checks; and bounds-table integrity over orders 2..=13.

use mnt_core::classify::{classify, dkw_eligible};
use mnt_core::constructions::{dkw_construct, zelinka_type1, zelinka_type2};
use mnt_core::graph::Graph;
use mnt_core::hamilton::{is_hamiltonian, is_traceable, naive_hamiltonian, naive_traceable};
use mnt_core::search::{
    enumerate_classes, min_mnh_size, min_mnt_size, SearchConfig, SearchResult,
};
use mnt_core::{bounds, laws, named};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn report(name: &str, outcome: Result<String, String>) {
    match outcome {
        Ok(detail) => println!("ACCEPTANCE {name}: PASS ({detail})"),
        Err(detail) => {
            println!("ACCEPTANCE {name}: FAIL ({detail})");
            panic!("{name} failed: {detail}");
        }
    }
}

fn formula(n: usize) -> usize {
    (3 * n - 2).div_ceil(2)
}

#[test]
fn criterion_1_small_g_reproduction() {
    let expected = [0usize, 1, 2, 4, 6, 8, 10, 12];
    let started = Instant::now();
    let mut result = Ok(String::new());
    let mut n9_elapsed = 0u128;
    for (i, &want) in expected.iter().enumerate() {
        let n = i + 2;
        let t = Instant::now();
        let out = min_mnt_size(n, &SearchConfig::default()).expect("order in range");
        let elapsed = t.elapsed();
        if n == 9 {
            n9_elapsed = elapsed.as_millis();
        }
        match out.result {
            SearchResult::Exact { value } if value == want => {}
            other => {
                result = Err(format!("g({n}) came out as {other:?}, expected {want}"));
                break;
            }
        }
        if n <= 8 && elapsed.as_secs() >= 60 {
            result = Err(format!("n={n} took {elapsed:?}, over the 1-minute target"));
            break;
        }
        if n == 9 && elapsed.as_secs() >= 1800 {
            result = Err(format!("n=9 took {elapsed:?}, over the 30-minute target"));
            break;
        }
    }
    if result.is_ok() {
        result = Ok(format!(
            "g(2..=9) = {expected:?}; total {:?}, n=9 in {n9_elapsed} ms",
            started.elapsed()
        ));
    }
    report("criterion 1 (small g values)", result);
}

#[test]
fn criterion_2_petersen_eligibility() {
    let t = Instant::now();
    let eligible = dkw_eligible(&named::petersen());
    let elapsed = t.elapsed();
    let result = if eligible.len() != 15 {
        Err(format!("expected all 15 edges eligible, got {}", eligible.len()))
    } else if elapsed.as_secs() >= 1 {
        Err(format!("took {elapsed:?}, over the 1-second target"))
    } else {
        Ok(format!("15/15 edges in {elapsed:?}"))
    };
    report("criterion 2 (Petersen eligibility)", result);
}

#[test]
fn criterion_3_dkw_outputs() {
    let p = named::petersen();
    let result = (|| {
        for (h2, n, e) in [(1usize, 12usize, 17usize), (2, 13, 19)] {
            let g = dkw_construct(&p, 0, 1, h2).map_err(|err| err.to_string())?;
            if (g.n(), g.edge_count()) != (n, e) {
                return Err(format!(
                    "h2={h2}: got order {} size {}, expected {n}/{e}",
                    g.n(),
                    g.edge_count()
                ));
            }
            if e != formula(n) {
                return Err(format!("{e} != ceil((3*{n}-2)/2)"));
            }
            if !classify(&g).mnt {
                return Err(format!("h2={h2} output is not MNT"));
            }
        }
        Ok("orders 12/13 with sizes 17/19, both certified MNT".to_string())
    })();
    report("criterion 3 (extension outputs)", result);
}

#[test]
fn criterion_4_construction_formulas() {
    let binom2 = |x: usize| x * (x - 1) / 2;
    let result = (|| {
        let mut checked = 0usize;
        for r in 3..=11 {
            for a in 1..=2usize {
                for b in 1..=2usize {
                    let n = r + a + b;
                    if n > 13 {
                        continue;
                    }
                    let g = zelinka_type1(r, [a, b]).map_err(|e| e.to_string())?;
                    let s = a + b;
                    if g.edge_count() != binom2(r) + 2 * s - 2 {
                        return Err(format!(
                            "zelinka1({r},[{a},{b}]): size {} != C({r},2)+2*{s}-2",
                            g.edge_count()
                        ));
                    }
                    if !classify(&g).mnt {
                        return Err(format!("zelinka1({r},[{a},{b}]) is not MNT"));
                    }
                    checked += 1;
                }
            }
        }
        for r in 3..=10 {
            for a in 1..=2usize {
                for b in 1..=2usize {
                    for c in 1..=2usize {
                        let n = r + a + b + c;
                        if n > 13 {
                            continue;
                        }
                        let g = zelinka_type2(r, [a, b, c]).map_err(|e| e.to_string())?;
                        let s = a + b + c;
                        if g.edge_count() != binom2(r) + 2 * s - 3 {
                            return Err(format!(
                                "zelinka2({r},[{a},{b},{c}]): size {} != C({r},2)+2*{s}-3",
                                g.edge_count()
                            ));
                        }
                        if !classify(&g).mnt {
                            return Err(format!("zelinka2({r},[{a},{b},{c}]) is not MNT"));
                        }
                        checked += 1;
                    }
                }
            }
        }
        Ok(format!("{checked} parameter sets, exact sizes, all MNT"))
    })();
    report("criterion 4 (construction formulas)", result);
}

fn search_witnesses_upto_9() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 2..=9 {
        let res = min_mnt_size(n, &SearchConfig::default()).expect("order in range");
        out.extend(res.witnesses);
    }
    out
}

fn construction_outputs_upto_13() -> Vec<Graph> {
    let mut out = vec![
        dkw_construct(&named::petersen(), 0, 1, 1).unwrap(),
        dkw_construct(&named::petersen(), 0, 1, 2).unwrap(),
    ];
    for r in 3..=11 {
        for a in 1..=2usize {
            for b in 1..=2usize {
                if r + a + b <= 13 {
                    out.push(zelinka_type1(r, [a, b]).unwrap());
                }
                for c in 1..=2usize {
                    if r + a + b + c <= 13 {
                        out.push(zelinka_type2(r, [a, b, c]).unwrap());
                    }
                }
            }
        }
    }
    out
}

#[test]
fn criterion_5_lemma_suite() {
    let result = (|| {
        let mut clean = 0usize;
        for g in search_witnesses_upto_9()
            .iter()
            .chain(construction_outputs_upto_13().iter())
        {
            let report = laws::check_all(g, true);
            if !report.mnt_certified {
                return Err(format!("suite graph (n={}) lost MNT certification", g.n()));
            }
            if !report.violations.is_empty() {
                return Err(format!(
                    "violations on certified MNT graph (n={}, e={}): {:?}",
                    g.n(),
                    g.edge_count(),
                    report.violations[0].detail
                ));
            }
            clean += 1;
        }

        // Negative controls: every checker must be able to fire.
        let p4 = named::path(4).unwrap();
        if laws::check_path_neighbor_law(&p4, 4).is_empty() {
            return Err("path law silent on P4".into());
        }
        let star4 = named::star(4).unwrap();
        if laws::check_cutset_law(&star4, 1).unwrap().is_empty() {
            return Err("cutset law silent on K_{1,4}".into());
        }
        let mut sun = named::cycle(4)
            .unwrap()
            .disjoint_union(&Graph::empty(4).unwrap())
            .unwrap();
        for i in 0..4 {
            sun = sun.add_edge(i, 4 + i).unwrap();
        }
        if laws::check_block_law(&sun).unwrap().is_empty() {
            return Err("block law silent on the 4-pendant cycle".into());
        }
        let c4 = named::cycle(4).unwrap();
        if laws::check_degree2_laws(&c4).unwrap().is_empty() {
            return Err("degree-2 laws silent on C4".into());
        }
        let star7 = named::star(7).unwrap();
        if laws::check_size_theorems_assuming(&star7, true, false).is_empty() {
            return Err("size theorems silent on K_{1,7} claimed MNT".into());
        }
        let c6 = named::cycle(6).unwrap();
        if laws::check_size_theorems_assuming(&c6, false, true).is_empty() {
            return Err("MNH size theorem silent on C6 claimed MNH".into());
        }
        Ok(format!(
            "{clean} certified graphs clean under exhaustive caps; all 5 checkers fire on controls"
        ))
    })();
    report("criterion 5 (lemma suite)", result);
}

#[test]
fn criterion_6_oracle_equivalence() {
    let result = (|| {
        let mut compared = 0usize;
        for n in 1..=7 {
            let max_m = n * (n - 1) / 2;
            for m in 0..=max_m {
                for g in enumerate_classes(n, m, false).map_err(|e| e.to_string())? {
                    let fast_t = is_traceable(&g);
                    let naive_t = naive_traceable(&g).map_err(|e| e.to_string())?;
                    if fast_t != naive_t {
                        return Err(format!("traceable mismatch on {g:?}"));
                    }
                    let fast_h = is_hamiltonian(&g);
                    let naive_h = naive_hamiltonian(&g).map_err(|e| e.to_string())?;
                    if fast_h != naive_h {
                        return Err(format!("hamiltonian mismatch on {g:?}"));
                    }
                    compared += 1;
                }
            }
        }

        let mut rng = ChaCha8Rng::seed_from_u64(0x4d4e_5431);
        for n in 8..=12 {
            for _ in 0..1000 {
                let p: f64 = rng.gen_range(0.1..0.9);
                let mut g = Graph::empty(n).unwrap();
                for u in 0..n {
                    for v in (u + 1)..n {
                        if rng.gen_bool(p) {
                            g = g.add_edge(u, v).unwrap();
                        }
                    }
                }
                if is_traceable(&g) != naive_traceable(&g).map_err(|e| e.to_string())? {
                    return Err(format!("traceable mismatch on random n={n}: {g:?}"));
                }
                if is_hamiltonian(&g) != naive_hamiltonian(&g).map_err(|e| e.to_string())? {
                    return Err(format!("hamiltonian mismatch on random n={n}: {g:?}"));
                }
                compared += 1;
            }
        }
        Ok(format!("{compared} graphs, zero disagreements"))
    })();
    report("criterion 6 (oracle equivalence)", result);
}

#[test]
fn criterion_7_mnh_desk_checks() {
    let result = (|| {
        for (n, want) in [(4usize, 4usize), (5, 6), (6, 9)] {
            let out = min_mnh_size(n, &SearchConfig::default()).map_err(|e| e.to_string())?;
            match out.result {
                SearchResult::Exact { value } if value == want => {}
                other => return Err(format!("f({n}) came out as {other:?}, expected {want}")),
            }
        }
        let p = named::petersen();
        let r = classify(&p);
        if !r.mnh {
            return Err("Petersen not certified MNH".into());
        }
        let bound = (3 * p.n()).div_ceil(2);
        if p.edge_count() != 15 || bound != 15 {
            return Err(format!(
                "Petersen boundary case: e = {} vs ceil(3n/2) = {bound}, expected equality at 15",
                p.edge_count()
            ));
        }
        Ok("f(4,5,6) = 4,6,9; Petersen sits exactly on the 3n/2 boundary".into())
    })();
    report("criterion 7 (MNH desk checks)", result);
}

#[test]
fn criterion_8_bounds_table_integrity() {
    let result = (|| {
        let equality_orders: Vec<usize> = (2..=9).chain([12, 13]).collect();
        for n in 2..=13usize {
            let status = bounds::g_status(n).map_err(|e| e.to_string())?;
            let upper = status.upper.ok_or(format!("n={n}: missing upper bound"))?;
            if status.lower > upper {
                return Err(format!("n={n}: lower {} > upper {upper}", status.lower));
            }
            let should_be_equal = equality_orders.contains(&n);
            if should_be_equal != (status.lower == upper) {
                return Err(format!(
                    "n={n}: equality pattern broken (lower {}, upper {upper})",
                    status.lower
                ));
            }
            // Every reported upper is backed by a classifier-verified witness.
            let (e, spec) = bounds::best_known_upper_g(n)
                .map_err(|err| err.to_string())?
                .ok_or(format!("n={n}: no constructive upper"))?;
            let witness = spec.build().map_err(|err| err.to_string())?;
            if witness.edge_count() != e || witness.n() != n {
                return Err(format!("n={n}: witness does not match reported bound"));
            }
            if !classify(&witness).mnt {
                return Err(format!("n={n}: upper-bound witness is not MNT ({spec})"));
            }
        }
        for n in [10usize, 11] {
            let status = bounds::g_status(n).map_err(|e| e.to_string())?;
            if status.status != bounds::Status::Open {
                return Err(format!("n={n} should be open"));
            }
            if status.lower != formula(n) {
                return Err(format!(
                    "n={n}: open lower bound {} != ceil((3n-2)/2) = {}",
                    status.lower,
                    formula(n)
                ));
            }
        }
        let b10 = bounds::g_status(10).map_err(|e| e.to_string())?;
        let b11 = bounds::g_status(11).map_err(|e| e.to_string())?;
        Ok(format!(
            "orders 2..=13 consistent; open brackets: n=10 [{},{}], n=11 [{},{}]",
            b10.lower,
            b10.upper.unwrap(),
            b11.lower,
            b11.upper.unwrap()
        ))
    })();
    report("criterion 8 (bounds table integrity)", result);
}
