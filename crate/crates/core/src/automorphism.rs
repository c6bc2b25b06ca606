//! Automorphism groups and canonical labelling by individualization and
//! refinement.
//!
//! The search tree has equitable ordered partitions as nodes. A child is
//! obtained by individualizing one vertex of the target cell (the first
//! smallest non-singleton cell) and refining again. Every node carries a
//! trace hash computed from label-invariant data only, so automorphic nodes
//! always have equal traces and unequal traces can be pruned.
//!
//! [`aut_group`] walks the leftmost path to a discrete leaf and then, level by
//! level from the bottom, looks for a leaf equivalent to that first leaf under
//! every candidate vertex that is not yet known to be in the orbit of the
//! leftmost choice. The orbit lengths found this way multiply to `|Aut|`.
//! [`canonical_labeling`] runs a second traversal that keeps the greatest leaf
//! certificate, pruned by traces and by the generators from the first search.

use std::cmp::Ordering;
use std::collections::VecDeque;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::{Permutation, UnionFind};

/// Resource limits for the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AutConfig {
    /// Maximum number of refined tree nodes per search.
    pub budget: u64,
}

impl Default for AutConfig {
    fn default() -> AutConfig {
        AutConfig {
            budget: 100_000_000,
        }
    }
}

impl AutConfig {
    pub fn with_budget(budget: u64) -> AutConfig {
        AutConfig { budget }
    }
}

/// Generators and order of `Aut(X)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutGroup {
    pub generators: Vec<Permutation>,
    pub order: BigUint,
    /// Vertices individualized along the leftmost path.
    pub base: Vec<usize>,
    /// Orbit length of each base vertex under the stabilizer of the earlier ones.
    pub orbit_sizes: Vec<usize>,
    /// Number of refined search nodes.
    pub nodes: u64,
}

/// Full result: group data plus a canonical labelling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutResult {
    pub generators: Vec<Permutation>,
    pub order: BigUint,
    /// `canonical_labeling.apply(v)` is the canonical position of `v`.
    pub canonical_labeling: Permutation,
}

/// Computes generators, order and a canonical labelling with the default budget.
pub fn aut(g: &Graph) -> Result<AutResult> {
    aut_with(g, &AutConfig::default())
}

pub fn aut_with(g: &Graph, config: &AutConfig) -> Result<AutResult> {
    let group = aut_group(g, config)?;
    let labels = canonical_with_group(g, config, &group.generators)?;
    Ok(AutResult {
        generators: group.generators,
        order: group.order,
        canonical_labeling: Permutation::from_images_unchecked(labels),
    })
}

/// The relabelled graph that is identical for all members of an isomorphism class.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    canonical_form_with(g, &AutConfig::default())
}

pub fn canonical_form_with(g: &Graph, config: &AutConfig) -> Result<Graph> {
    Ok(g.relabel(&canonical_labeling(g, config)?))
}

/// Canonical position of every vertex.
pub fn canonical_labeling(g: &Graph, config: &AutConfig) -> Result<Vec<usize>> {
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    let group = aut_group(g, config)?;
    canonical_with_group(g, config, &group.generators)
}

fn mix(h: u64, x: u64) -> u64 {
    let mut z = h.rotate_left(5) ^ x.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Ordered partition of the vertex set. Cells are contiguous ranges of `lab`
/// identified by their start position.
#[derive(Clone)]
struct Partition {
    lab: Vec<usize>,
    pos: Vec<usize>,
    cell_of: Vec<usize>,
    cell_end: Vec<usize>,
    cells: usize,
}

impl Partition {
    fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    /// First smallest non-singleton cell as `(start, end)`.
    fn target_cell(&self) -> Option<(usize, usize)> {
        let n = self.lab.len();
        let mut best: Option<(usize, usize)> = None;
        let mut s = 0;
        while s < n {
            let e = self.cell_end[s];
            if e - s > 1 && best.map_or(true, |(bs, be)| e - s < be - bs) {
                best = Some((s, e));
                if e - s == 2 {
                    break;
                }
            }
            s = e;
        }
        best
    }

    fn cell_vertices(&self, (s, e): (usize, usize)) -> Vec<usize> {
        let mut v = self.lab[s..e].to_vec();
        v.sort_unstable();
        v
    }
}

struct Refiner<'g> {
    g: &'g Graph,
    count: Vec<u32>,
    touched: Vec<usize>,
    touched_cells: Vec<usize>,
    cell_mark: Vec<bool>,
    in_queue: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl<'g> Refiner<'g> {
    fn new(g: &'g Graph, budget: u64) -> Refiner<'g> {
        let n = g.n();
        Refiner {
            g,
            count: vec![0; n],
            touched: Vec::new(),
            touched_cells: Vec::new(),
            cell_mark: vec![false; n],
            in_queue: vec![false; n],
            nodes: 0,
            budget,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(Error::BudgetExceeded(self.budget))
        } else {
            Ok(())
        }
    }

    /// Degree colouring (plus triangle counts on large graphs), refined.
    fn root(&mut self) -> Result<(Partition, u64)> {
        self.tick()?;
        let g = self.g;
        let n = g.n();
        let tri = if n > 200 { triangle_counts(g) } else { vec![0; n] };
        let key = |v: usize| (g.degree(v), tri[v]);
        let mut lab: Vec<usize> = (0..n).collect();
        lab.sort_unstable_by_key(|&v| (key(v), v));
        let mut pos = vec![0; n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let mut cell_of = vec![0; n];
        let mut cell_end = vec![0; n];
        let mut cells = 0;
        let mut queue = VecDeque::new();
        let mut h = mix(0, n as u64);
        let mut s = 0;
        while s < n {
            let k = key(lab[s]);
            let mut e = s;
            while e < n && key(lab[e]) == k {
                cell_of[e] = s;
                e += 1;
            }
            cell_end[s] = e;
            cells += 1;
            queue.push_back(s);
            h = mix(mix(mix(h, k.0 as u64), k.1 as u64), (e - s) as u64);
            s = e;
        }
        let mut p = Partition {
            lab,
            pos,
            cell_of,
            cell_end,
            cells,
        };
        let h = self.refine(&mut p, queue, h);
        Ok((p, h))
    }

    /// Child of `p` with `v` individualized.
    fn individualize(&mut self, p: &Partition, v: usize, h: u64) -> Result<(Partition, u64)> {
        self.tick()?;
        let mut c = p.clone();
        let i = c.pos[v];
        let s = c.cell_of[i];
        let e = c.cell_end[s];
        debug_assert!(e - s > 1);
        let u = c.lab[s];
        c.lab.swap(s, i);
        c.pos[u] = i;
        c.pos[v] = s;
        c.cell_end[s] = s + 1;
        c.cell_end[s + 1] = e;
        for k in s + 1..e {
            c.cell_of[k] = s + 1;
        }
        c.cells += 1;
        let h = mix(h, s as u64);
        let h = self.refine(&mut c, VecDeque::from([s]), h);
        Ok((c, h))
    }

    /// Refines to the coarsest equitable partition finer than `p`, returning
    /// the updated trace.
    fn refine(&mut self, p: &mut Partition, mut queue: VecDeque<usize>, mut h: u64) -> u64 {
        let n = p.lab.len();
        for &s in &queue {
            self.in_queue[s] = true;
        }
        while let Some(ws) = queue.pop_front() {
            self.in_queue[ws] = false;
            if p.cells == n {
                continue;
            }
            let we = p.cell_end[ws];
            h = mix(h, ws as u64);
            for i in ws..we {
                for &u in self.g.neighbors(p.lab[i]) {
                    if self.count[u] == 0 {
                        self.touched.push(u);
                    }
                    self.count[u] += 1;
                }
            }
            self.touched_cells.clear();
            for &u in &self.touched {
                let c = p.cell_of[p.pos[u]];
                if !self.cell_mark[c] {
                    self.cell_mark[c] = true;
                    self.touched_cells.push(c);
                }
            }
            self.touched_cells.sort_unstable();
            for ci in 0..self.touched_cells.len() {
                let s = self.touched_cells[ci];
                self.cell_mark[s] = false;
                let e = p.cell_end[s];
                let c0 = self.count[p.lab[s]];
                if p.lab[s..e].iter().all(|&v| self.count[v] == c0) {
                    h = mix(mix(h, s as u64), c0 as u64);
                    continue;
                }
                let mut buf: Vec<(u32, usize)> =
                    p.lab[s..e].iter().map(|&v| (self.count[v], v)).collect();
                buf.sort_unstable();
                let mut frags: Vec<(usize, usize)> = Vec::new();
                let mut fs = s;
                for (k, &(c, v)) in buf.iter().enumerate() {
                    let i = s + k;
                    p.lab[i] = v;
                    p.pos[v] = i;
                    if k > 0 && c != buf[k - 1].0 {
                        frags.push((fs, i));
                        fs = i;
                    }
                }
                frags.push((fs, e));
                for &(fs, fe) in &frags {
                    p.cell_end[fs] = fe;
                    for k in fs..fe {
                        p.cell_of[k] = fs;
                    }
                    h = mix(mix(mix(h, fs as u64), buf[fs - s].0 as u64), (fe - fs) as u64);
                }
                p.cells += frags.len() - 1;
                if self.in_queue[s] {
                    for &(fs, _) in &frags[1..] {
                        self.in_queue[fs] = true;
                        queue.push_back(fs);
                    }
                } else {
                    let mut largest = 0;
                    for (k, &(fs, fe)) in frags.iter().enumerate() {
                        if fe - fs > frags[largest].1 - frags[largest].0 {
                            largest = k;
                        }
                    }
                    for (k, &(fs, _)) in frags.iter().enumerate() {
                        if k != largest {
                            self.in_queue[fs] = true;
                            queue.push_back(fs);
                        }
                    }
                }
            }
            for &u in &self.touched {
                self.count[u] = 0;
            }
            self.touched.clear();
        }
        mix(h, p.cells as u64)
    }
}

fn triangle_counts(g: &Graph) -> Vec<usize> {
    let mut t = vec![0; g.n()];
    for &(u, v) in g.edges() {
        let (a, b) = (g.neighbors(u), g.neighbors(v));
        let (mut i, mut j, mut c) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    c += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        t[u] += c;
        t[v] += c;
    }
    t.iter().map(|x| x / 2).collect()
}

/// Union-find over the orbits of the generators that fix every vertex of `prefix`.
fn prefix_orbits(n: usize, gens: &[Permutation], prefix: &[usize]) -> Option<UnionFind> {
    let mut uf: Option<UnionFind> = None;
    for g in gens {
        if prefix.iter().all(|&x| g.apply(x) == x) {
            let uf = uf.get_or_insert_with(|| UnionFind::new(n));
            for x in 0..n {
                uf.union(x, g.apply(x));
            }
        }
    }
    uf
}

struct FirstPath {
    nodes: Vec<Partition>,
    traces: Vec<u64>,
    targets: Vec<(usize, usize)>,
    choices: Vec<usize>,
    leaf: Vec<usize>,
}

/// Generators and exact order of `Aut(g)`.
pub fn aut_group(g: &Graph, config: &AutConfig) -> Result<AutGroup> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut r = Refiner::new(g, config.budget);
    let (mut part, mut h) = r.root()?;
    let mut fp = FirstPath {
        nodes: Vec::new(),
        traces: Vec::new(),
        targets: Vec::new(),
        choices: Vec::new(),
        leaf: Vec::new(),
    };
    while let Some(t) = part.target_cell() {
        let v = *part.lab[t.0..t.1].iter().min().unwrap();
        let (child, hc) = r.individualize(&part, v, h)?;
        fp.nodes.push(part);
        fp.traces.push(h);
        fp.targets.push(t);
        fp.choices.push(v);
        part = child;
        h = hc;
    }
    fp.traces.push(h);
    fp.leaf = part.lab;

    let depth = fp.choices.len();
    let mut gens: Vec<Permutation> = Vec::new();
    let mut orbit_sizes = vec![1; depth];
    for lvl in (0..depth).rev() {
        let mut uf = UnionFind::new(n);
        for p in &gens {
            for x in 0..n {
                uf.union(x, p.apply(x));
            }
        }
        let v = fp.choices[lvl];
        let mut failed: Vec<usize> = Vec::new();
        for w in fp.nodes[lvl].cell_vertices(fp.targets[lvl]) {
            if w == v || uf.find(w) == uf.find(v) {
                continue;
            }
            if failed.iter().any(|&f| uf.find(f) == uf.find(w)) {
                continue;
            }
            let (child, hc) = r.individualize(&fp.nodes[lvl], w, fp.traces[lvl])?;
            let found = if hc == fp.traces[lvl + 1] {
                let mut prefix: Vec<usize> = fp.choices[..lvl].to_vec();
                prefix.push(w);
                find_equivalent(&mut r, &fp, &gens, &child, lvl + 1, &mut prefix)?
            } else {
                None
            };
            match found {
                Some(p) => {
                    for x in 0..n {
                        uf.union(x, p.apply(x));
                    }
                    gens.push(p);
                }
                None => failed.push(w),
            }
        }
        orbit_sizes[lvl] = uf.class_size(v);
    }
    let order = orbit_sizes
        .iter()
        .fold(BigUint::from(1u32), |acc, &s| acc * BigUint::from(s));
    Ok(AutGroup {
        generators: gens,
        order,
        base: fp.choices,
        orbit_sizes,
        nodes: r.nodes,
    })
}

/// Searches the subtree at `part` for a leaf equivalent to the first leaf.
fn find_equivalent(
    r: &mut Refiner<'_>,
    fp: &FirstPath,
    gens: &[Permutation],
    part: &Partition,
    depth: usize,
    prefix: &mut Vec<usize>,
) -> Result<Option<Permutation>> {
    let Some(t) = part.target_cell() else {
        if depth != fp.choices.len() {
            return Ok(None);
        }
        let mut img = vec![0; part.lab.len()];
        for (i, &x) in fp.leaf.iter().enumerate() {
            img[x] = part.lab[i];
        }
        return Ok(r.g.is_automorphism(&img).then(|| Permutation::from_images_unchecked(img)));
    };
    if depth >= fp.choices.len() || t != fp.targets[depth] {
        return Ok(None);
    }
    let mut uf = prefix_orbits(part.lab.len(), gens, prefix);
    let mut tried: Vec<usize> = Vec::new();
    for y in part.cell_vertices(t) {
        if let Some(uf) = uf.as_mut() {
            if tried.iter().any(|&z| uf.find(z) == uf.find(y)) {
                continue;
            }
        }
        tried.push(y);
        let (child, hc) = r.individualize(part, y, fp.traces[depth])?;
        if hc != fp.traces[depth + 1] {
            continue;
        }
        prefix.push(y);
        let found = find_equivalent(r, fp, gens, &child, depth + 1, prefix)?;
        prefix.pop();
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

struct Best {
    trace: Vec<u64>,
    edges: Vec<(usize, usize)>,
    lab: Vec<usize>,
}

struct Canon<'g> {
    r: Refiner<'g>,
    gens: Vec<Permutation>,
    best: Option<Best>,
}

fn canonical_with_group(g: &Graph, config: &AutConfig, gens: &[Permutation]) -> Result<Vec<usize>> {
    let n = g.n();
    let mut c = Canon {
        r: Refiner::new(g, config.budget),
        gens: gens.to_vec(),
        best: None,
    };
    let (root, h) = c.r.root()?;
    c.dfs(&root, vec![h], &mut Vec::new())?;
    let best = c.best.expect("search visits at least one leaf");
    let mut labels = vec![0; n];
    for (i, &v) in best.lab.iter().enumerate() {
        labels[v] = i;
    }
    Ok(labels)
}

impl Canon<'_> {
    fn dfs(&mut self, part: &Partition, trace: Vec<u64>, prefix: &mut Vec<usize>) -> Result<()> {
        if let Some(best) = &self.best {
            let k = trace.len().min(best.trace.len());
            if trace[..k] < best.trace[..k] {
                return Ok(());
            }
        }
        let Some(t) = part.target_cell() else {
            self.leaf(part, trace);
            return Ok(());
        };
        let n = part.lab.len();
        let mut seen_gens = usize::MAX;
        let mut uf: Option<UnionFind> = None;
        let mut tried: Vec<usize> = Vec::new();
        for y in part.cell_vertices(t) {
            if seen_gens != self.gens.len() {
                seen_gens = self.gens.len();
                uf = prefix_orbits(n, &self.gens, prefix);
            }
            if let Some(uf) = uf.as_mut() {
                if tried.iter().any(|&z| uf.find(z) == uf.find(y)) {
                    continue;
                }
            }
            tried.push(y);
            let (child, hc) = self.r.individualize(part, y, *trace.last().unwrap())?;
            let mut tr = trace.clone();
            tr.push(hc);
            prefix.push(y);
            self.dfs(&child, tr, prefix)?;
            prefix.pop();
        }
        Ok(())
    }

    fn leaf(&mut self, part: &Partition, trace: Vec<u64>) {
        debug_assert!(part.is_discrete());
        let mut edges: Vec<(usize, usize)> = self
            .r
            .g
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (part.pos[u], part.pos[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        let ord = match &self.best {
            None => Ordering::Greater,
            Some(b) => (&trace, &edges).cmp(&(&b.trace, &b.edges)),
        };
        match ord {
            Ordering::Greater => {
                self.best = Some(Best {
                    trace,
                    edges,
                    lab: part.lab.clone(),
                })
            }
            Ordering::Equal => {
                let best = self.best.as_ref().unwrap();
                let mut img = vec![0; part.lab.len()];
                for (i, &x) in best.lab.iter().enumerate() {
                    img[x] = part.lab[i];
                }
                let p = Permutation::from_images_unchecked(img);
                if !p.is_identity() {
                    self.gens.push(p);
                }
            }
            Ordering::Less => {}
        }
    }
}
