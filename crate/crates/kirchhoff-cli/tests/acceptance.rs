//! Release gate: ten checks covering the oracle pair, closed forms, bound
//! validity and dominance, the comparison tables, sweep monotonicity,
//! spectral sanity suites, minimal-element minimality, and CLI
//! determinism. Each check prints one pass/fail line.

use std::process::Command;

use rand::Rng as _;
use rand::SeedableRng as _;
use rand_chacha::ChaCha8Rng;

use kirchhoff::bounds::{
    majorization_addition_bound, majorization_removal_bound, wang_removal_bound,
};
use kirchhoff::generators::{
    erdos_renyi_connected, perturb_add, perturb_remove_connected, RngSeed,
};
use kirchhoff::majorization::{
    majorizes, minimal_element, minimal_element_uniform_floor, sample_feasible, schur_eval,
    ConstrainedSet,
};
use kirchhoff::spectral::{
    check_degree_floors, check_interlacing, kirchhoff_index, kirchhoff_via_resistance,
    laplacian_spectrum,
};
use kirchhoff::Graph;

use kirchhoff_cli::config::{ExperimentConfig, Mode};
use kirchhoff_cli::record::parse_csv;
use kirchhoff_cli::runner::run_table;

// Seed for the table reproductions; the published tables use single
// unseeded instances, so the concentration windows below are checked on
// this fixed draw instead.
const TABLE_SEED: u64 = 0;

fn verdict(label: &str, pass: bool) {
    println!(
        "acceptance {label}: {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "acceptance check failed: {label}");
}

fn within(value: f64, target: f64, rel: f64) -> bool {
    (value - target).abs() <= rel * target.abs()
}

#[test]
fn a01_spectral_and_resistance_oracles_agree() {
    let mut pass = true;
    for i in 0..200u64 {
        let n = 2 + (i as usize) % 11;
        let p = [0.3, 0.5, 0.8][(i as usize) % 3];
        let g = erdos_renyi_connected(n, p, &RngSeed::new(1000 + i, 0)).unwrap();
        let k_spec = kirchhoff_index(&g).unwrap();
        let k_res = kirchhoff_via_resistance(&g).unwrap();
        pass &= (k_spec - k_res).abs() <= 1e-8 * k_spec;
    }
    verdict("01 spectral vs resistance oracle agreement", pass);
}

#[test]
fn a02_complete_and_path_closed_forms() {
    let mut pass = true;
    for n in 2..=20usize {
        let k_complete = kirchhoff_index(&Graph::complete(n)).unwrap();
        pass &= within(k_complete, (n - 1) as f64, 1e-9);
        let k_path = kirchhoff_index(&Graph::path(n)).unwrap();
        let nf = n as f64;
        pass &= within(k_path, (nf * nf * nf - nf) / 6.0, 1e-9);
    }
    verdict("02 complete-graph and path closed forms", pass);
}

#[test]
fn a03_bounds_hold_on_realized_perturbations() {
    let mut pass = true;
    let mut add_cases = 0usize;
    let mut remove_cases = 0usize;
    let mut seed = 0u64;
    while (add_cases < 250 || remove_cases < 250) && seed < 5000 {
        seed += 1;
        let addition = add_cases < 250 && (seed % 2 == 0 || remove_cases >= 250);
        let n = if addition { 6 + (seed as usize) % 10 } else { 18 + (seed as usize) % 8 };
        let h = 1 + (seed as usize) % 2;
        let g = match erdos_renyi_connected(n, 0.5, &RngSeed::new(seed, 9)) {
            Ok(g) => g,
            Err(_) => continue,
        };
        let report = if addition {
            majorization_addition_bound(&g, h)
        } else {
            majorization_removal_bound(&g, h)
        };
        let bound = match report {
            Ok(r) => match r.value {
                Some(v) => v,
                None => continue,
            },
            Err(_) => continue,
        };
        if addition {
            add_cases += 1;
        } else {
            remove_cases += 1;
        }
        for j in 0..20u64 {
            let draw = RngSeed::new(seed, 9).substream(100 + j);
            let perturbed = if addition {
                match perturb_add(&g, h, &draw) {
                    Ok(pair) => pair.perturbed,
                    Err(_) => continue,
                }
            } else {
                match perturb_remove_connected(&g, h, &draw) {
                    Ok(pair) => pair.perturbed,
                    Err(_) => continue,
                }
            };
            let k = kirchhoff_index(&perturbed).unwrap();
            pass &= bound <= k + 1e-8 * k;
        }
    }
    pass &= add_cases == 250 && remove_cases == 250;

    // star with one pendant extension: every single-link completion stays
    // above the addition bound of 15
    let broom =
        Graph::from_edge_list(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 5)]).unwrap();
    assert_eq!(
        majorization_addition_bound(&broom, 1).unwrap().value,
        Some(15.0)
    );
    for (u, v) in broom.non_edges() {
        let k = kirchhoff_index(&broom.add_edge(u, v).unwrap()).unwrap();
        pass &= k >= 15.0;
    }
    verdict("03 bound validity on realized perturbations", pass);
}

#[test]
fn a04_removal_bound_dominates_edge_count_bound() {
    let mut pass = true;
    let mut cases = 0usize;
    let mut seed = 0u64;
    while cases < 300 && seed < 3000 {
        seed += 1;
        let n = 16 + (seed as usize) % 24;
        let g = erdos_renyi_connected(n, 0.5, &RngSeed::new(seed, 4)).unwrap();
        let ours = match majorization_removal_bound(&g, 1) {
            Ok(r) => match r.value {
                Some(v) => v,
                None => continue,
            },
            Err(_) => continue,
        };
        let wang = wang_removal_bound(&g).unwrap().value.unwrap();
        cases += 1;
        pass &= ours >= wang - 1e-10;
    }
    pass &= cases == 300;
    verdict("04 removal bound dominates edge-count bound", pass);
}

fn table_config(mode: Mode, n: usize) -> ExperimentConfig {
    ExperimentConfig {
        mode,
        sizes: vec![n],
        p: 0.5,
        h_max: 1,
        reps: 5,
        seed: TABLE_SEED,
        output_path: None,
        graph_in: None,
    }
}

fn mean(values: impl Iterator<Item = f64>) -> f64 {
    let v: Vec<f64> = values.collect();
    v.iter().sum::<f64>() / v.len() as f64
}

#[test]
fn a05_addition_table_at_n_1000() {
    let records = run_table(&table_config(Mode::TableAdd, 1000)).unwrap();
    assert_eq!(records.len(), 5);
    let mean_k = mean(records.iter().map(|r| r.k_g));
    let mean_bound = mean(records.iter().map(|r| r.bound_majorization.unwrap()));
    let mean_wang = mean(records.iter().map(|r| r.bound_wang.unwrap()));
    let pass = within(mean_k, 1999.25, 0.05)
        && within(mean_bound, 1995.26, 0.05)
        && (1.8..=2.2).contains(&mean_wang);
    verdict("05 addition comparison table at n=1000", pass);
}

#[test]
fn a06_removal_table_at_n_100() {
    let records = run_table(&table_config(Mode::TableRemove, 100)).unwrap();
    assert_eq!(records.len(), 5);
    let mean_k = mean(records.iter().map(|r| r.k_g));
    let mean_bound = mean(records.iter().map(|r| r.bound_majorization.unwrap()));
    let ordering = records
        .iter()
        .all(|r| r.bound_majorization.unwrap() > r.bound_wang.unwrap());
    let pass = within(mean_k, 191.36, 0.05) && within(mean_bound, 188.49, 0.05) && ordering;
    verdict("06 removal comparison table at n=100", pass);
}

#[test]
fn a07_addition_bound_strictly_decreasing_in_h() {
    let mut pass = true;
    for seed in 0..20u64 {
        let g = erdos_renyi_connected(100, 0.5, &RngSeed::new(seed, 7)).unwrap();
        let values: Vec<f64> = (1..=50usize)
            .filter_map(|h| {
                majorization_addition_bound(&g, h)
                    .ok()
                    .and_then(|r| r.value)
            })
            .collect();
        pass &= !values.is_empty();
        pass &= values.windows(2).all(|w| w[1] < w[0]);
    }
    verdict("07 addition bound strictly decreasing in h", pass);
}

#[test]
fn a08_interlacing_and_degree_floor_suites() {
    let mut pass = true;
    for i in 0..100u64 {
        let n = 4 + (i as usize) % 47;
        let g = erdos_renyi_connected(n, 0.5, &RngSeed::new(2000 + i, 0)).unwrap();
        let g_plus = match perturb_add(&g, 1, &RngSeed::new(2000 + i, 1)) {
            Ok(pair) => pair.perturbed,
            Err(_) => continue,
        };
        pass &= check_interlacing(&g, &g_plus).unwrap().pass;
        let spectrum = laplacian_spectrum(&g).unwrap();
        pass &= check_degree_floors(&g, &spectrum).pass();
    }
    verdict("08 interlacing and degree-floor suites", pass);
}

#[test]
fn a09_minimal_element_minimality_and_closed_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(90);
    let mut pass = true;
    let mut sets = 0usize;
    while sets < 50 {
        let n = rng.random_range(2..=8usize);
        let a = rng.random_range(5.0..30.0f64);
        let mut lower: Vec<f64> =
            (0..n).map(|_| rng.random_range(0.0..a / n as f64)).collect();
        lower.sort_by(|x, y| y.total_cmp(x));
        let s = match ConstrainedSet::with_lower_bounds(a, lower) {
            Ok(s) => s,
            Err(_) => continue,
        };
        sets += 1;
        let me = minimal_element(&s).unwrap();
        let baseline = schur_eval(me.point(), 1.0).unwrap();
        let mut samples = 0usize;
        while samples < 1000 {
            let Some(x) = sample_feasible(&s, &mut rng) else { continue };
            samples += 1;
            pass &= majorizes(me.point(), &x).unwrap();
            if x.iter().all(|&xi| xi > 0.0) {
                pass &= schur_eval(&x, 1.0).unwrap() >= baseline - 1e-9 * baseline;
            }
        }
    }

    // trivial bounds collapse to the flat vector
    for (a, n) in [(10.0, 5usize), (7.0, 3), (24.0, 8)] {
        let s = ConstrainedSet::with_lower_bounds(a, vec![0.0; n]).unwrap();
        let me = minimal_element(&s).unwrap();
        pass &= me.point().iter().all(|&x| x == a / n as f64);
        pass &= me.k() == 0 && me.d() == 0;
    }
    // uniform-floor shortcut agrees with the search exactly
    for (a, n, h, alpha) in [
        (12.0, 4usize, 1usize, 6.0),
        (12.0, 4, 2, 2.0),
        (20.0, 7, 3, 4.5),
        (9.0, 5, 2, 1.0),
    ] {
        let shortcut = minimal_element_uniform_floor(a, n, h, alpha).unwrap();
        let mut lower = vec![alpha; h];
        lower.extend(vec![0.0; n - h]);
        let searched = minimal_element(&ConstrainedSet::with_lower_bounds(a, lower).unwrap())
            .unwrap();
        pass &= shortcut.point() == searched.point();
    }
    verdict("09 minimal-element minimality and closed forms", pass);
}

#[test]
fn a10_cli_runs_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_kirchhoff"))
            .args(["table-add", "--sizes", "10,20", "--p", "0.5", "--reps", "2", "--seed", "42"])
            .args(["--out", path.to_str().unwrap()])
            .status()
            .unwrap();
        assert!(status.success());
        std::fs::read_to_string(path).unwrap()
    };
    let first = run("a.csv");
    let second = run("b.csv");
    let strip = |csv: &str| {
        csv.lines()
            .map(|l| l.rsplit_once(',').unwrap().0.to_owned())
            .collect::<Vec<_>>()
            .join("\n")
    };
    let mut pass = strip(&first) == strip(&second);
    let records = parse_csv(&first).unwrap();
    pass &= parse_csv(&kirchhoff_cli::record::to_csv_string(&records)).unwrap() == records;
    verdict("10 deterministic CLI output and lossless CSV", pass);
}
