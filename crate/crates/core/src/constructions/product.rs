//! Cartesian products and prime factorization with respect to them.

use std::collections::HashSet;

use crate::automorphism::AutConfig;
use crate::error::{Error, Result};
use crate::graph::{are_isomorphic_with, components_of, Graph};
use crate::perm::UnionFind;

/// The Cartesian product of the given graphs. The vertex with coordinates
/// `(x_1, ..., x_k)` gets the mixed-radix index with `x_1` most significant.
/// The empty product is the one-vertex graph.
pub fn cartesian(gs: &[Graph]) -> Graph {
    gs.iter()
        .fold(Graph::empty(1), |acc, g| cartesian_pair(&acc, g))
}

/// `g □ h` with `(u, x) -> u * |V(h)| + x`.
pub fn cartesian_pair(g: &Graph, h: &Graph) -> Graph {
    let nh = h.n();
    let mut edges = Vec::with_capacity(g.n() * h.edge_count() + g.edge_count() * nh);
    for u in 0..g.n() {
        for &(x, y) in h.edges() {
            edges.push((u * nh + x, u * nh + y));
        }
    }
    for &(u, v) in g.edges() {
        for x in 0..nh {
            edges.push((u * nh + x, v * nh + x));
        }
    }
    Graph::new(g.n() * nh, edges).expect("product of simple graphs is simple")
}

/// Prime factors of a connected graph together with the coordinate map that
/// certifies the decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// Prime factors, ordered by decreasing order and size.
    pub factors: Vec<Graph>,
    /// `coordinates[v][j]` is the vertex of `factors[j]` that `v` projects to.
    pub coordinates: Vec<Vec<usize>>,
}

impl Factorization {
    pub fn is_prime(&self) -> bool {
        self.factors.len() == 1
    }

    /// Index of `v`'s coordinate tuple in [`cartesian`]`(factors)`.
    pub fn product_index(&self, v: usize) -> usize {
        self.coordinates[v]
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&x, f)| acc * f.n() + x)
    }

    /// Checks that the coordinate map is an isomorphism from `g` onto the
    /// product of the factors.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        if self.coordinates.len() != g.n() {
            return Err(Error::Verification("coordinate map has wrong length".into()));
        }
        let map: Vec<usize> = (0..g.n()).map(|v| self.product_index(v)).collect();
        let product = cartesian(&self.factors);
        let mut seen = vec![false; product.n()];
        if product.n() != g.n() || map.iter().any(|&x| x >= seen.len() || std::mem::replace(&mut seen[x], true)) {
            return Err(Error::Verification("coordinate map is not a bijection onto the product".into()));
        }
        if g.relabel(&map) != product {
            return Err(Error::Verification("reconstructed product differs from the input".into()));
        }
        Ok(())
    }
}

fn edge_classes(g: &Graph) -> UnionFind {
    let mut uf = UnionFind::new(g.edge_count());
    let e = |a: usize, b: usize| g.edge_index(a, b).unwrap();
    for u in 0..g.n() {
        let nu = g.neighbors(u);
        for (ia, &a) in nu.iter().enumerate() {
            for &b in &nu[ia + 1..] {
                if g.has_edge(a, b) {
                    // triangle u, a, b
                    uf.union(e(u, a), e(u, b));
                    uf.union(e(u, a), e(a, b));
                }
                let mut common = 0;
                let mut last = usize::MAX;
                for &w in g.neighbors(a) {
                    if w != u && g.has_edge(w, b) {
                        common += 1;
                        last = w;
                        // square u-a-w-b: opposite edges
                        uf.union(e(u, a), e(w, b));
                        uf.union(e(a, w), e(b, u));
                    }
                }
                let unique_chordless = common == 1 && !g.has_edge(u, last) && !g.has_edge(a, b);
                if !unique_chordless {
                    uf.union(e(u, a), e(u, b));
                }
            }
        }
    }
    uf
}

enum Offense {
    Pair(usize, usize),
    Class(usize),
}

/// Attempts to read `g` as the product of the layers spanned by each class.
fn try_product(g: &Graph, class: &[usize], r: usize) -> std::result::Result<Factorization, Offense> {
    let n = g.n();
    let edges = g.edges();
    let mut layers: Vec<Graph> = Vec::with_capacity(r);
    let mut coords = vec![vec![0usize; r]; n];
    for j in 0..r {
        let class_nbrs = |v: usize| {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(move |&w| class[g.edge_index(v, w).unwrap()] == j)
        };
        // layer through vertex 0
        let mut in_layer = vec![usize::MAX; n];
        let mut layer = vec![0];
        in_layer[0] = 0;
        let mut i = 0;
        while i < layer.len() {
            let v = layer[i];
            for w in class_nbrs(v) {
                if in_layer[w] == usize::MAX {
                    in_layer[w] = 0;
                    layer.push(w);
                }
            }
            i += 1;
        }
        layer.sort_unstable();
        for (k, &v) in layer.iter().enumerate() {
            in_layer[v] = k;
        }
        let (count, comp) = components_of(n, |v| {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(move |&w| class[g.edge_index(v, w).unwrap()] != j)
        });
        let mut rep = vec![usize::MAX; count];
        for (k, &v) in layer.iter().enumerate() {
            if rep[comp[v]] != usize::MAX {
                return Err(Offense::Class(j));
            }
            rep[comp[v]] = k;
        }
        for v in 0..n {
            let k = rep[comp[v]];
            if k == usize::MAX {
                return Err(Offense::Class(j));
            }
            coords[v][j] = k;
        }
        let layer_edges: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .filter(|&(ei, &(a, b))| class[ei] == j && in_layer[a] != usize::MAX && in_layer[b] != usize::MAX)
            .map(|(_, &(a, b))| (in_layer[a], in_layer[b]))
            .collect();
        layers.push(Graph::new(layer.len(), layer_edges).map_err(|_| Offense::Class(j))?);
    }
    let size: usize = layers.iter().map(Graph::n).product();
    let distinct: HashSet<&Vec<usize>> = coords.iter().collect();
    if size != n || distinct.len() != n {
        return Err(Offense::Class(0));
    }
    for (ei, &(a, b)) in edges.iter().enumerate() {
        let j = class[ei];
        for i in 0..r {
            if i != j && coords[a][i] != coords[b][i] {
                return Err(Offense::Pair(i, j));
            }
        }
        if !layers[j].has_edge(coords[a][j], coords[b][j]) {
            return Err(Offense::Class(j));
        }
    }
    let expected: usize = (0..r)
        .map(|j| layers[j].edge_count() * (n / layers[j].n()))
        .sum();
    if expected != edges.len() {
        return Err(Offense::Class(0));
    }
    Ok(Factorization {
        factors: layers,
        coordinates: coords,
    })
}

fn relabel_classes(class: &mut [usize]) -> usize {
    let mut map = std::collections::HashMap::new();
    for c in class.iter_mut() {
        let next = map.len();
        *c = *map.entry(*c).or_insert(next);
    }
    map.len()
}

/// Finds the finest valid grouping by testing unions of edge classes as
/// two-factor splits. Minimal valid unions are exactly the prime factor classes.
fn subset_search(g: &Graph, class: &[usize], r: usize) -> Option<Vec<usize>> {
    let mut minimal: Vec<u32> = Vec::new();
    let full: u32 = (1u32 << r) - 1;
    let mut covered = 0u32;
    let mut masks: Vec<u32> = (1..full).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for mask in masks {
        if covered == full {
            break;
        }
        if mask & covered != 0 {
            continue;
        }
        let split: Vec<usize> = class.iter().map(|&c| usize::from(mask >> c & 1 == 0)).collect();
        if try_product(g, &split, 2).is_ok() {
            minimal.push(mask);
            covered |= mask;
        }
    }
    if minimal.is_empty() {
        return None;
    }
    if covered != full {
        minimal.push(full & !covered);
    }
    let group_of = |c: usize| minimal.iter().position(|m| m >> c & 1 == 1).unwrap();
    Some(class.iter().map(|&c| group_of(c)).collect())
}

const SUBSET_SEARCH_LIMIT: usize = 16;

/// Decomposes a connected graph into Cartesian-prime factors.
pub fn factor_prime(g: &Graph) -> Result<Factorization> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() == 1 {
        return Ok(Factorization {
            factors: Vec::new(),
            coordinates: vec![Vec::new()],
        });
    }
    let mut uf = edge_classes(g);
    let mut class: Vec<usize> = (0..g.edge_count()).map(|e| uf.find(e)).collect();
    let mut r = relabel_classes(&mut class);
    let result = loop {
        match try_product(g, &class, r) {
            Ok(f) => break f,
            Err(offense) => {
                if r <= SUBSET_SEARCH_LIMIT {
                    if let Some(grouped) = subset_search(g, &class, r) {
                        let mut grouped = grouped;
                        let r2 = relabel_classes(&mut grouped);
                        if let Ok(f) = try_product(g, &grouped, r2) {
                            break f;
                        }
                    }
                }
                let (a, b) = match offense {
                    Offense::Pair(i, j) => (i, j),
                    Offense::Class(j) => (j, if j == 0 { 1 } else { 0 }),
                };
                for c in class.iter_mut() {
                    if *c == b {
                        *c = a;
                    }
                }
                r = relabel_classes(&mut class);
            }
        }
    };
    Ok(sort_factors(result))
}

fn sort_factors(f: Factorization) -> Factorization {
    let mut order: Vec<usize> = (0..f.factors.len()).collect();
    order.sort_by(|&a, &b| {
        let (x, y) = (&f.factors[a], &f.factors[b]);
        (y.n(), y.edge_count()).cmp(&(x.n(), x.edge_count()))
    });
    Factorization {
        factors: order.iter().map(|&j| f.factors[j].clone()).collect(),
        coordinates: f
            .coordinates
            .iter()
            .map(|c| order.iter().map(|&j| c[j]).collect())
            .collect(),
    }
}

/// Whether `g` is prime with respect to the Cartesian product.
pub fn is_prime(g: &Graph) -> Result<bool> {
    Ok(factor_prime(g)?.is_prime())
}

/// True iff no prime factor of `g` is isomorphic to a prime factor of `h`.
pub fn are_relatively_prime(g: &Graph, h: &Graph) -> Result<bool> {
    are_relatively_prime_with(g, h, &AutConfig::default())
}

pub fn are_relatively_prime_with(g: &Graph, h: &Graph, config: &AutConfig) -> Result<bool> {
    let fg = factor_prime(g)?;
    let fh = factor_prime(h)?;
    for a in &fg.factors {
        for b in &fh.factors {
            if are_isomorphic_with(a, b, config)?.is_some() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
