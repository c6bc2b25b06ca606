//! Thickened covers `X(F, m)`: every vertex `u` of the base graph becomes the
//! fibre `{(u, 0), ..., (u, m-1)}`. Edges outside `F` lift to `m` parallel
//! copies, edges in `F` lift to complete bipartite graphs `K_{m,m}` between
//! fibres. Vertex `(u, i)` has index `u * m + i`.

use crate::automorphism::AutConfig;
use crate::error::{Error, Result};
use crate::graph::{components_of, Graph};
use crate::perm::Permutation;
use crate::symmetry::arc_orbits_with;

#[derive(Debug, Clone)]
pub struct ThickenedCover {
    base: Graph,
    in_f: Vec<bool>,
    m: usize,
    graph: Graph,
}

impl ThickenedCover {
    pub fn new(base: &Graph, f: &[(usize, usize)], m: usize) -> Result<ThickenedCover> {
        if m == 0 {
            return Err(Error::InvalidSpec("thickening multiplicity must be positive".into()));
        }
        let mut in_f = vec![false; base.edge_count()];
        for &(u, v) in f {
            let e = base.edge_index(u, v).ok_or(Error::NotAnEdge(u, v))?;
            in_f[e] = true;
        }
        let mut edges = Vec::new();
        for (e, &(u, v)) in base.edges().iter().enumerate() {
            if in_f[e] {
                for i in 0..m {
                    for j in 0..m {
                        edges.push((u * m + i, v * m + j));
                    }
                }
            } else {
                for i in 0..m {
                    edges.push((u * m + i, v * m + i));
                }
            }
        }
        let graph = Graph::new(base.n() * m, edges)?;
        Ok(ThickenedCover {
            base: base.clone(),
            in_f,
            m,
            graph,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn multiplicity(&self) -> usize {
        self.m
    }

    pub fn in_f(&self, u: usize, v: usize) -> bool {
        self.base.edge_index(u, v).is_some_and(|e| self.in_f[e])
    }

    pub fn vertex(&self, u: usize, i: usize) -> usize {
        u * self.m + i
    }

    /// Inverse of [`ThickenedCover::vertex`].
    pub fn fibre_of(&self, w: usize) -> (usize, usize) {
        (w / self.m, w % self.m)
    }

    /// `(u, i) -> (u, i + 1 mod m)`.
    pub fn phi(&self) -> Permutation {
        let images = (0..self.graph.n())
            .map(|w| {
                let (u, i) = self.fibre_of(w);
                self.vertex(u, (i + 1) % self.m)
            })
            .collect();
        Permutation::from_images_unchecked(images)
    }

    /// Lift `(u, i) -> (ψ(u), i)` of an automorphism `ψ` of the base graph
    /// that preserves `F`.
    pub fn psi(&self, psi: &Permutation) -> Result<Permutation> {
        if psi.degree() != self.base.n() {
            return Err(Error::InvalidPermutation(format!(
                "degree {} does not match base order {}",
                psi.degree(),
                self.base.n()
            )));
        }
        let images = (0..self.graph.n())
            .map(|w| {
                let (u, i) = self.fibre_of(w);
                self.vertex(psi.apply(u), i)
            })
            .collect();
        self.checked(images, || format!("lift of {psi} is not an automorphism of the cover"))
    }

    /// Swaps layers `i` and `j` on the component of `v` in `X - F`, where
    /// `{u, v}` is an edge of `F` whose endpoints lie in different components
    /// of `X - F`.
    pub fn theta(&self, u: usize, v: usize, i: usize, j: usize) -> Result<Permutation> {
        if i >= self.m || j >= self.m {
            return Err(Error::InvalidSpec(format!("layer index out of range for m = {}", self.m)));
        }
        let e = self.base.edge_index(u, v).ok_or(Error::NotAnEdge(u, v))?;
        if !self.in_f[e] {
            return Err(Error::InvalidSpec(format!("{{{u}, {v}}} is not in F")));
        }
        let (_, comp) = components_of(self.base.n(), |x| {
            self.base
                .neighbors(x)
                .iter()
                .copied()
                .filter(move |&y| !self.in_f(x, y))
        });
        if comp[u] == comp[v] {
            return Err(Error::NotAnAutomorphism(format!(
                "{u} and {v} lie in the same component of X - F"
            )));
        }
        let images = (0..self.graph.n())
            .map(|w| {
                let (x, k) = self.fibre_of(w);
                if comp[x] != comp[v] {
                    w
                } else if k == i {
                    self.vertex(x, j)
                } else if k == j {
                    self.vertex(x, i)
                } else {
                    w
                }
            })
            .collect();
        self.checked(images, || format!("layer swap on the component of {v} is not an automorphism"))
    }

    fn checked(&self, images: Vec<usize>, msg: impl FnOnce() -> String) -> Result<Permutation> {
        if self.graph.is_automorphism(&images) {
            Ok(Permutation::from_images_unchecked(images))
        } else {
            Err(Error::NotAnAutomorphism(msg()))
        }
    }
}

pub fn thickened_cover(base: &Graph, f: &[(usize, usize)], m: usize) -> Result<Graph> {
    Ok(ThickenedCover::new(base, f, m)?.into_graph())
}

/// The `Aut(g)`-orbit of the edge `{u, v}`, as sorted pairs.
pub fn edge_orbit(g: &Graph, u: usize, v: usize, config: &AutConfig) -> Result<Vec<(usize, usize)>> {
    g.edge_index(u, v).ok_or(Error::NotAnEdge(u, v))?;
    let key = (u.min(v), u.max(v));
    arc_orbits_with(g, config)?
        .edge_orbits()
        .into_iter()
        .find(|o| o.contains(&key))
        .map(|mut o| {
            o.sort_unstable();
            o
        })
        .ok_or_else(|| Error::Verification("edge missing from every edge orbit".into()))
}
