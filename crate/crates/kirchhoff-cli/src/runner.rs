//! Drives the table and sweep experiments: seeded generation, one-link or
//! cumulative h-link perturbation, exact Kirchhoff evaluation and bound
//! columns.

use std::time::Instant;

use kirchhoff::bounds::{bound_suite, BoundId, BoundReport};
use kirchhoff::generators::{
    erdos_renyi_connected, perturb_add, perturb_remove_connected, RngSeed,
};
use kirchhoff::spectral::kirchhoff_index;
use kirchhoff::Graph;

use crate::config::{ExperimentConfig, Mode};
use crate::error::{CliError, Result};
use crate::record::{round_sig, write_csv, ExperimentRecord, RecordMode};

// Substream tags for the independent draws inside one replication.
const TAG_PERTURB_ADD: u64 = 1;
const TAG_PERTURB_REMOVE: u64 = 2;

fn base_graph(cfg: &ExperimentConfig, n: usize, rep: u64) -> Result<Graph> {
    match &cfg.graph_in {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            Ok(Graph::from_edge_list_str(&text)?)
        }
        None => Ok(erdos_renyi_connected(n, cfg.p, &RngSeed::new(cfg.seed, rep))?),
    }
}

fn sizes_to_run(cfg: &ExperimentConfig) -> Vec<usize> {
    if cfg.graph_in.is_some() {
        // the file fixes n; run a single pass per rep
        vec![0]
    } else {
        cfg.sizes.clone()
    }
}

/// Majorization and Wang reports for the given direction; inapplicable
/// bounds surface as empty columns rather than failures.
fn bound_columns(g: &Graph, h: usize, addition: bool) -> (BoundReport, Option<BoundReport>) {
    let reports = bound_suite(g, h);
    let pick = |id: BoundId| reports.iter().find(|r| r.bound_id == id).cloned();
    let majorization = pick(if addition {
        BoundId::MajorizationAdd
    } else {
        BoundId::MajorizationRemove
    })
    .expect("suite always contains the majorization bounds");
    let wang = pick(if addition { BoundId::WangAdd } else { BoundId::WangRemove });
    (majorization, wang)
}

#[allow(clippy::too_many_arguments)]
fn build_record(
    mode: RecordMode,
    g: &Graph,
    perturbed: &Graph,
    cfg: &ExperimentConfig,
    h: usize,
    rep: u64,
    k_g: f64,
    started: Instant,
) -> Result<ExperimentRecord> {
    let (majorization, wang) = bound_columns(g, h, mode.is_addition());
    let record = ExperimentRecord {
        mode,
        n: g.n(),
        m: g.m(),
        p: round_sig(cfg.p),
        h,
        rep,
        k_g: round_sig(k_g),
        k_perturbed: round_sig(kirchhoff_index(perturbed)?),
        bound_majorization: majorization.value.map(round_sig),
        applicable: majorization.applicable,
        bound_wang: wang.and_then(|w| w.value).map(round_sig),
        density: round_sig(g.density()?),
        wall_time_ms: started.elapsed().as_millis() as u64,
    };
    record.check_invariants()?;
    Ok(record)
}

/// One row per (size, rep): base ER graph, single-link perturbation, exact
/// K on both graphs, majorization and Wang bound columns.
pub fn run_table(cfg: &ExperimentConfig) -> Result<Vec<ExperimentRecord>> {
    cfg.validate()?;
    let mode = match cfg.mode {
        Mode::TableAdd => RecordMode::TableAdd,
        Mode::TableRemove => RecordMode::TableRemove,
        Mode::Sweep => {
            return Err(CliError::BadConfig("run_table requires a table mode".into()))
        }
    };
    let mut records = Vec::new();
    for &n in &sizes_to_run(cfg) {
        for rep in 0..cfg.reps {
            let started = Instant::now();
            let g = base_graph(cfg, n, rep)?;
            let seed = RngSeed::new(cfg.seed, rep);
            let pair = if mode.is_addition() {
                perturb_add(&g, 1, &seed.substream(TAG_PERTURB_ADD))?
            } else {
                perturb_remove_connected(&g, 1, &seed.substream(TAG_PERTURB_REMOVE))?
            };
            let k_g = kirchhoff_index(&g)?;
            records.push(build_record(mode, &g, &pair.perturbed, cfg, 1, rep, k_g, started)?);
        }
    }
    if let Some(path) = &cfg.output_path {
        write_csv(&records, path)?;
    }
    Ok(records)
}

/// Cumulative h-sweep on one base graph per (size, rep): for h = 1..h_max
/// the h-link graph extends the (h-1)-link graph by one more random link.
/// Remove records stop once h reaches d2/2, the edge budget runs out, or
/// no connected removal is found.
pub fn run_sweep(cfg: &ExperimentConfig) -> Result<Vec<ExperimentRecord>> {
    cfg.validate()?;
    if cfg.mode != Mode::Sweep {
        return Err(CliError::BadConfig("run_sweep requires sweep mode".into()));
    }
    let mut records = Vec::new();
    for &n in &sizes_to_run(cfg) {
        for rep in 0..cfg.reps {
            let g = base_graph(cfg, n, rep)?;
            let seed = RngSeed::new(cfg.seed, rep);
            let k_g = kirchhoff_index(&g)?;
            let d2 = g.degree_sequence().d2();

            let mut current = g.clone();
            for h in 1..=cfg.h_max {
                let started = Instant::now();
                let step_seed = seed.substream(TAG_PERTURB_ADD).substream(h as u64);
                match perturb_add(&current, 1, &step_seed) {
                    Ok(pair) => current = pair.perturbed,
                    Err(kirchhoff::Error::NotEnoughAbsentPairs { .. }) => break,
                    Err(e) => return Err(e.into()),
                }
                records.push(build_record(
                    RecordMode::SweepAdd,
                    &g,
                    &current,
                    cfg,
                    h,
                    rep,
                    k_g,
                    started,
                )?);
            }

            let mut current = g.clone();
            for h in 1..=cfg.h_max {
                if 2 * h >= d2 || g.m() - h < g.n() - 1 {
                    break;
                }
                let started = Instant::now();
                let step_seed = seed.substream(TAG_PERTURB_REMOVE).substream(h as u64);
                match perturb_remove_connected(&current, 1, &step_seed) {
                    Ok(pair) => current = pair.perturbed,
                    Err(kirchhoff::Error::RejectionBudgetExhausted(_)) => break,
                    Err(e) => return Err(e.into()),
                }
                records.push(build_record(
                    RecordMode::SweepRemove,
                    &g,
                    &current,
                    cfg,
                    h,
                    rep,
                    k_g,
                    started,
                )?);
            }
        }
    }
    if let Some(path) = &cfg.output_path {
        write_csv(&records, path)?;
    }
    Ok(records)
}
