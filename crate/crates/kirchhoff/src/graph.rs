//! Simple undirected graphs: construction, structural queries, Laplacian
//! assembly and edge-list I/O.
//!
//! Vertices are `0..n`; edges are stored canonically as `(u, v)` with
//! `u < v`. Values are immutable: perturbations return new graphs.

use std::collections::BTreeSet;
use std::collections::VecDeque;
use std::fmt::Write as _;

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

/// Vertex degrees sorted non-increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Largest degree d1.
    pub fn d1(&self) -> usize {
        self.0[0]
    }

    /// Second largest degree d2.
    pub fn d2(&self) -> usize {
        self.0[1]
    }
}

fn canonical(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Builds a graph from an arbitrary-orientation edge list.
    ///
    /// Rejects out-of-range endpoints, self-loops and duplicate pairs.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        assert!(n > 0, "vertex count must be positive");
        let mut edges = BTreeSet::new();
        for &(u, v) in pairs {
            if u >= n {
                return Err(Error::OutOfRangeVertex { vertex: u, n });
            }
            if v >= n {
                return Err(Error::OutOfRangeVertex { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !edges.insert(canonical(u, v)) {
                let (u, v) = canonical(u, v);
                return Err(Error::DuplicateEdge(u, v));
            }
        }
        Ok(Graph { n, edges })
    }

    /// Returns a new graph with the edge `{u, v}` added.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self> {
        if u >= self.n {
            return Err(Error::OutOfRangeVertex { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::OutOfRangeVertex { vertex: v, n: self.n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let e = canonical(u, v);
        if self.edges.contains(&e) {
            return Err(Error::EdgeExists(e.0, e.1));
        }
        let mut edges = self.edges.clone();
        edges.insert(e);
        Ok(Graph { n: self.n, edges })
    }

    /// Returns a new graph with the edge `{u, v}` removed.
    ///
    /// The result may be disconnected; connectivity is the caller's check.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Self> {
        let e = canonical(u, v);
        if !self.edges.contains(&e) {
            return Err(Error::EdgeAbsent(e.0, e.1));
        }
        let mut edges = self.edges.clone();
        edges.remove(&e);
        Ok(Graph { n: self.n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&canonical(u, v))
    }

    /// Canonical `(u, v)` pairs, `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// All non-adjacent pairs `(u, v)` with `u < v`, ascending.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.edges.contains(&(u, v)) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * (self.n - 1) / 2
    }

    /// Per-vertex degrees in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Degrees sorted non-increasing.
    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut deg = self.degrees();
        deg.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(deg)
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Laplacian matrix L = D - A with integer entries.
    pub fn laplacian(&self) -> DMatrix<i64> {
        let mut l = DMatrix::<i64>::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            l[(u, u)] += 1;
            l[(v, v)] += 1;
            l[(u, v)] = -1;
            l[(v, u)] = -1;
        }
        l
    }

    /// True iff a traversal from vertex 0 reaches all n vertices.
    pub fn is_connected(&self) -> bool {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Maximum hop distance over vertex pairs, by all-sources BFS.
    pub fn diameter(&self) -> Result<usize> {
        let adj = self.adjacency_lists();
        let mut diam = 0usize;
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for src in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[src] = 0;
            queue.clear();
            queue.push_back(src);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            for &d in &dist {
                if d == usize::MAX {
                    return Err(Error::Disconnected);
                }
                diam = diam.max(d);
            }
        }
        Ok(diam)
    }

    /// Ratio of present links to possible links, 2m / (n(n-1)).
    pub fn density(&self) -> Result<f64> {
        if self.n < 2 {
            return Err(Error::DegenerateOrder { n: self.n });
        }
        Ok(2.0 * self.m() as f64 / (self.n as f64 * (self.n - 1) as f64))
    }

    /// Parses the edge-list text format: first line `n m`, then m lines
    /// `u v`. Lines starting with `#` are comments; either orientation is
    /// accepted.
    pub fn from_edge_list_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim_start().starts_with('#') && !l.trim().is_empty());
        let (lineno, header) = lines.next().ok_or(Error::ParseError {
            line: 0,
            message: "empty input".into(),
        })?;
        let parse_two = |line: usize, s: &str| -> Result<(usize, usize)> {
            let mut it = s.split_whitespace();
            let a = it
                .next()
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(|| Error::ParseError {
                    line: line + 1,
                    message: format!("expected two integers, got {s:?}"),
                })?;
            let b = it
                .next()
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(|| Error::ParseError {
                    line: line + 1,
                    message: format!("expected two integers, got {s:?}"),
                })?;
            if it.next().is_some() {
                return Err(Error::ParseError {
                    line: line + 1,
                    message: format!("trailing tokens in {s:?}"),
                });
            }
            Ok((a, b))
        };
        let (n, m) = parse_two(lineno, header)?;
        if n == 0 {
            return Err(Error::ParseError {
                line: lineno + 1,
                message: "vertex count must be positive".into(),
            });
        }
        let mut pairs = Vec::with_capacity(m);
        for (lineno, line) in lines {
            pairs.push(parse_two(lineno, line)?);
        }
        if pairs.len() != m {
            return Err(Error::ParseError {
                line: 0,
                message: format!("header declares {m} edges, found {}", pairs.len()),
            });
        }
        Self::from_edge_list(n, &pairs)
    }

    /// Path graph P_n: 0-1-2-...-(n-1).
    pub fn path(n: usize) -> Self {
        let pairs: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Self::from_edge_list(n, &pairs).expect("path construction is valid")
    }

    /// Cycle graph C_n, n >= 3.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs n >= 3");
        let mut pairs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        pairs.push((0, n - 1));
        Self::from_edge_list(n, &pairs).expect("cycle construction is valid")
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                pairs.push((u, v));
            }
        }
        Self::from_edge_list(n, &pairs).expect("complete construction is valid")
    }

    /// Star on n vertices, centre 0.
    pub fn star(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Self::from_edge_list(n, &pairs).expect("star construction is valid")
    }

    /// Writes the canonical edge-list text format.
    pub fn to_edge_list_string(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {}", self.n, self.m()).unwrap();
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}
