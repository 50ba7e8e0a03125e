//! Seeded random graph models (Erdos-Renyi, Watts-Strogatz,
//! Barabasi-Albert) and the add/remove perturbation protocol with
//! whole-sample connectivity rejection.

use rand::seq::index::sample;
use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default number of redraws before a connectivity rejection gives up.
pub const REJECTION_BUDGET: usize = 10_000;

/// Seed plus replication stream; every draw is a pure function of the pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RngSeed {
    pub seed: u64,
    pub stream: u64,
}

impl RngSeed {
    pub fn new(seed: u64, stream: u64) -> Self {
        RngSeed { seed, stream }
    }

    /// Independent generator for a sub-task of the same replication
    /// (e.g. the perturbation after the base-graph draw).
    pub fn substream(&self, tag: u64) -> Self {
        // splitmix64 step keeps substreams decorrelated from plain streams
        let mut z = self.seed ^ tag.wrapping_mul(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        RngSeed {
            seed: z ^ (z >> 31),
            stream: self.stream,
        }
    }

    fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng
    }
}

/// Which direction a perturbation went.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PerturbKind {
    Add,
    Remove,
}

/// A base graph together with its h-link perturbation.
#[derive(Debug, Clone)]
pub struct PerturbedPair {
    pub base: Graph,
    pub perturbed: Graph,
    pub kind: PerturbKind,
    pub h: usize,
    pub changed_edges: Vec<(usize, usize)>,
}

/// G(n, p) with whole-graph rejection until connected. Pairs are drawn in
/// canonical (u < v) lexicographic order, so output is seed-deterministic.
pub fn erdos_renyi_connected(n: usize, p: f64, rng_seed: &RngSeed) -> Result<Graph> {
    assert!(n >= 2, "need n >= 2");
    assert!(p > 0.0 && p <= 1.0, "need 0 < p <= 1");
    let mut rng = rng_seed.rng();
    for _ in 0..REJECTION_BUDGET {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(p) {
                    pairs.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &pairs)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::RejectionBudgetExhausted(REJECTION_BUDGET))
}

/// Watts-Strogatz ring lattice with k nearest neighbours and rewiring
/// probability beta; connectivity by whole-graph rejection.
pub fn watts_strogatz(n: usize, k: usize, beta: f64, rng_seed: &RngSeed) -> Result<Graph> {
    if k < 2 || k % 2 != 0 || k >= n {
        return Err(Error::BadLatticeParams { n, k });
    }
    assert!((0.0..=1.0).contains(&beta), "need 0 <= beta <= 1");
    let mut rng = rng_seed.rng();
    'redraw: for _ in 0..REJECTION_BUDGET {
        let mut g = {
            let mut pairs = Vec::with_capacity(n * k / 2);
            for u in 0..n {
                for j in 1..=k / 2 {
                    pairs.push((u, (u + j) % n));
                }
            }
            Graph::from_edge_list(n, &pairs)?
        };
        // rewire each lattice edge (u, u+j) with probability beta
        for u in 0..n {
            for j in 1..=k / 2 {
                let v = (u + j) % n;
                if !rng.random_bool(beta) {
                    continue;
                }
                // pick a fresh target; if u is saturated no move exists
                if g.degrees()[u] == n - 1 {
                    continue;
                }
                let w = loop {
                    let w = rng.random_range(0..n);
                    if w != u && !g.has_edge(u, w) {
                        break w;
                    }
                };
                g = g.remove_edge(u, v)?.add_edge(u, w)?;
            }
        }
        if g.is_connected() {
            return Ok(g);
        }
        continue 'redraw;
    }
    Err(Error::RejectionBudgetExhausted(REJECTION_BUDGET))
}

/// Barabasi-Albert preferential attachment: seed clique on m0+1 vertices,
/// then each new vertex attaches m0 links sampled proportionally to degree
/// without replacement. Connected by construction.
pub fn barabasi_albert(n: usize, m0: usize, rng_seed: &RngSeed) -> Result<Graph> {
    if m0 < 1 || m0 >= n {
        return Err(Error::BadParams(format!("need n > m0 >= 1, got n={n} m0={m0}")));
    }
    let mut rng = rng_seed.rng();
    let mut pairs = Vec::new();
    // one endpoint slot per degree unit makes sampling degree-proportional
    let mut endpoint_pool: Vec<usize> = Vec::new();
    for u in 0..=m0 {
        for v in (u + 1)..=m0 {
            pairs.push((u, v));
            endpoint_pool.push(u);
            endpoint_pool.push(v);
        }
    }
    for t in (m0 + 1)..n {
        let mut targets = Vec::with_capacity(m0);
        while targets.len() < m0 {
            let cand = endpoint_pool[rng.random_range(0..endpoint_pool.len())];
            if !targets.contains(&cand) {
                targets.push(cand);
            }
        }
        for &v in &targets {
            pairs.push((t, v));
            endpoint_pool.push(t);
            endpoint_pool.push(v);
        }
    }
    Graph::from_edge_list(n, &pairs)
}

/// Adds h distinct absent links chosen uniformly without replacement.
pub fn perturb_add(g: &Graph, h: usize, rng_seed: &RngSeed) -> Result<PerturbedPair> {
    assert!(h >= 1, "need h >= 1");
    let absent = g.non_edges();
    if absent.len() < h {
        return Err(Error::NotEnoughAbsentPairs { needed: h });
    }
    let mut rng = rng_seed.rng();
    let mut changed: Vec<(usize, usize)> = sample(&mut rng, absent.len(), h)
        .iter()
        .map(|i| absent[i])
        .collect();
    changed.sort_unstable();
    let mut perturbed = g.clone();
    for &(u, v) in &changed {
        perturbed = perturbed.add_edge(u, v)?;
    }
    Ok(PerturbedPair {
        base: g.clone(),
        perturbed,
        kind: PerturbKind::Add,
        h,
        changed_edges: changed,
    })
}

/// Removes h distinct links chosen uniformly without replacement; the
/// whole h-subset is redrawn while the result is disconnected, mirroring
/// the discard-and-resample protocol.
pub fn perturb_remove_connected(g: &Graph, h: usize, rng_seed: &RngSeed) -> Result<PerturbedPair> {
    assert!(h >= 1, "need h >= 1");
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if h > g.m() {
        return Err(Error::HTooLarge { h, max: g.m() });
    }
    if g.m() - h < g.n() - 1 {
        // no h-subset can leave a connected remainder; skip the futile draws
        return Err(Error::RejectionBudgetExhausted(REJECTION_BUDGET));
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut rng = rng_seed.rng();
    for _ in 0..REJECTION_BUDGET {
        let mut changed: Vec<(usize, usize)> = sample(&mut rng, edges.len(), h)
            .iter()
            .map(|i| edges[i])
            .collect();
        changed.sort_unstable();
        let mut perturbed = g.clone();
        for &(u, v) in &changed {
            perturbed = perturbed.remove_edge(u, v)?;
        }
        if perturbed.is_connected() {
            return Ok(PerturbedPair {
                base: g.clone(),
                perturbed,
                kind: PerturbKind::Remove,
                h,
                changed_edges: changed,
            });
        }
    }
    Err(Error::RejectionBudgetExhausted(REJECTION_BUDGET))
}
