//! Immutable simple undirected graphs on the vertex set `0..n`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::automorphism::{self, AutConfig};
use crate::error::{Error, Result};

/// A finite simple undirected graph with vertices `0..n`.
///
/// Edges are stored once each as `(u, v)` with `u < v`, sorted. Adjacency
/// lists are built at construction time and kept sorted, so neighbourhood
/// queries and edge lookups are cheap and output is deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edges.len())
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_unique(n, list))
    }

    /// Builds a graph from an edge multiset, silently merging repeated edges.
    /// Loops and out-of-range endpoints are still errors.
    pub fn from_edge_set<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        list.sort_unstable();
        list.dedup();
        Graph::new(n, list)
    }

    fn from_sorted_unique(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph::from_sorted_unique(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Common valency if the graph is regular and has at least one vertex.
    pub fn valency(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    /// Position of the edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Applies the relabelling `v -> labels[v]`, which must be a bijection on `0..n`.
    pub fn relabel(&self, labels: &[usize]) -> Graph {
        assert_eq!(labels.len(), self.n, "relabelling has wrong length");
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (labels[u], labels[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Graph::from_sorted_unique(self.n, edges)
    }

    /// Whether `perm` maps the edge set onto itself.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        perm.len() == self.n
            && self
                .edges
                .iter()
                .all(|&(u, v)| self.has_edge(perm[u], perm[v]))
    }

    /// Parses the edge-list text format: a header line `n m`, then `m` lines
    /// `u v`. Lines starting with `#` are comments.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
            .filter(|(_, l)| !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header line `n m`".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, text) in lines {
            if text.is_empty() {
                continue;
            }
            let (u, v) = parse_pair(line, text)?;
            if u >= n || v >= n {
                return Err(Error::Parse {
                    line,
                    message: format!("endpoint out of range for n = {n}"),
                });
            }
            if u == v {
                return Err(Error::Parse {
                    line,
                    message: format!("self-loop at vertex {u}"),
                });
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: hline,
                message: format!("header declares {m} edges but {} were given", edges.len()),
            });
        }
        Graph::new(n, edges)
    }

    /// Serializes to the edge-list format, edges sorted with `u < v`.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Builds the cubic Hamiltonian graph described by an LCF code.
    pub fn from_lcf(code: &LcfCode) -> Result<Graph> {
        let k = code.offsets.len();
        let n = k * code.repeat;
        if k == 0 || n < 4 {
            return Err(Error::InvalidLcf("code must describe at least 4 vertices".into()));
        }
        let ni = n as i64;
        let mut chord = vec![0usize; n];
        for (i, c) in chord.iter_mut().enumerate() {
            let d = code.offsets[i % k];
            let j = (i as i64 + d).rem_euclid(ni) as usize;
            let step = (j + n - i) % n;
            if step == 0 || step == 1 || step == n - 1 {
                return Err(Error::InvalidLcf(format!(
                    "chord from {i} with offset {d} collides with the Hamilton cycle"
                )));
            }
            *c = j;
        }
        for i in 0..n {
            if chord[chord[i]] != i {
                return Err(Error::InvalidLcf(format!(
                    "chord from {i} to {} is not matched by the reverse chord",
                    chord[i]
                )));
            }
        }
        let mut edges = Vec::with_capacity(n + n / 2);
        for i in 0..n {
            edges.push((i, (i + 1) % n));
            if i < chord[i] {
                edges.push((i, chord[i]));
            }
        }
        Graph::new(n, edges)
    }

    /// Connected components as `(count, component index of each vertex)`.
    /// Components are numbered in order of their least vertex.
    pub fn components(&self) -> (usize, Vec<usize>) {
        components_of(self.n, |v| self.adj[v].iter().copied())
    }

    /// True iff the graph has a single component; the graph on zero vertices
    /// counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().0 == 1
    }

    /// Breadth-first distances from `source`; unreachable vertices get `usize::MAX`.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::from([source]);
        dist[source] = 0;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The subgraph induced on `vertices`, relabelled in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if pos[w] != usize::MAX && i < pos[w] {
                    edges.push((i, pos[w]));
                }
            }
        }
        edges.sort_unstable();
        Graph::from_sorted_unique(vertices.len(), edges)
    }
}

/// Connected components of an implicit graph on `0..n`.
pub(crate) fn components_of<F, I>(n: usize, neighbors: F) -> (usize, Vec<usize>)
where
    F: Fn(usize) -> I,
    I: Iterator<Item = usize>,
{
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = count;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for w in neighbors(v) {
                if comp[w] == usize::MAX {
                    comp[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (count, comp)
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let err = |message: String| Error::Parse { line, message };
    let mut parts = text.split(' ');
    let mut next = || -> Result<usize> {
        let tok = parts
            .next()
            .ok_or_else(|| err("expected two integers".into()))?;
        if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err(format!("`{tok}` is not a non-negative decimal integer")));
        }
        tok.parse().map_err(|_| err(format!("`{tok}` is out of range")))
    };
    let a = next()?;
    let b = next()?;
    if parts.next().is_some() {
        return Err(err("expected exactly two integers".into()));
    }
    Ok((a, b))
}

/// The disjoint union of `graphs`, with vertex blocks laid out in order.
pub fn disjoint_union(graphs: &[Graph]) -> Graph {
    let mut offset = 0;
    let mut edges = Vec::new();
    for g in graphs {
        edges.extend(g.edges.iter().map(|&(u, v)| (u + offset, v + offset)));
        offset += g.n;
    }
    Graph::from_sorted_unique(offset, edges)
}

/// Isomorphism test through canonical labelling. Returns a bijection `f`
/// with `{f(u), f(v)} ∈ E(h)` exactly when `{u, v} ∈ E(g)`.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    are_isomorphic_with(g, h, &AutConfig::default())
}

pub fn are_isomorphic_with(g: &Graph, h: &Graph, config: &AutConfig) -> Result<Option<Vec<usize>>> {
    if g.n != h.n || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let mut gd: Vec<usize> = g.adj.iter().map(Vec::len).collect();
    let mut hd: Vec<usize> = h.adj.iter().map(Vec::len).collect();
    gd.sort_unstable();
    hd.sort_unstable();
    if gd != hd {
        return Ok(None);
    }
    let cg = automorphism::canonical_labeling(g, config)?;
    let ch = automorphism::canonical_labeling(h, config)?;
    if g.relabel(&cg) != h.relabel(&ch) {
        return Ok(None);
    }
    // g --cg--> canon <--ch-- h
    let mut inv_h = vec![0; h.n];
    for (v, &c) in ch.iter().enumerate() {
        inv_h[c] = v;
    }
    Ok(Some(cg.iter().map(|&c| inv_h[c]).collect()))
}

/// Chord-offset encoding `[d_0,...,d_{k-1}]^r` of a cubic Hamiltonian graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcfCode {
    pub offsets: Vec<i64>,
    pub repeat: usize,
}

impl LcfCode {
    pub fn new(offsets: Vec<i64>, repeat: usize) -> LcfCode {
        LcfCode { offsets, repeat }
    }
}

impl FromStr for LcfCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<LcfCode> {
        let bad = |m: &str| Error::InvalidLcf(format!("`{s}`: {m}"));
        let rest = s.strip_prefix('[').ok_or_else(|| bad("expected `[`"))?;
        let close = rest.find(']').ok_or_else(|| bad("expected `]`"))?;
        let body = &rest[..close];
        let tail = &rest[close + 1..];
        let offsets = body
            .split(',')
            .map(|t| {
                let t = t.strip_prefix('+').unwrap_or(t);
                t.parse::<i64>().map_err(|_| bad("offsets must be integers"))
            })
            .collect::<Result<Vec<_>>>()?;
        if offsets.iter().any(|&d| d == 0) {
            return Err(bad("offsets must be nonzero"));
        }
        let repeat = if tail.is_empty() {
            1
        } else {
            let r = tail.strip_prefix('^').ok_or_else(|| bad("expected `^r`"))?;
            r.parse::<usize>().map_err(|_| bad("repeat must be a positive integer"))?
        };
        if repeat == 0 {
            return Err(bad("repeat must be positive"));
        }
        Ok(LcfCode { offsets, repeat })
    }
}

impl fmt::Display for LcfCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.offsets.iter().map(i64::to_string).collect();
        write!(f, "[{}]^{}", body.join(","), self.repeat)
    }
}
