//! Arc-orbits, their pairing, arc-types, edge-types and transitivity flags.

use num_bigint::BigUint;

use crate::automorphism::{aut_group, AutConfig, AutGroup};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partitions::MarkedPartition;
use crate::perm::{orbit_partition, Permutation, StabChain};

/// The partition of the arcs of a graph into orbits of a group of
/// automorphisms, together with the reversal pairing between orbits.
///
/// Arcs are indexed by `(u, v) -> offset(u) + rank of v in N(u)`, so the arcs
/// leaving one vertex are contiguous and sorted by head.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcOrbitData {
    arcs: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    orbit_of: Vec<usize>,
    orbits: Vec<Vec<usize>>,
    pairing: Vec<usize>,
    restricted_sizes: Vec<usize>,
}

impl ArcOrbitData {
    /// Orbits of the group generated by `gens` (automorphisms of `g`) on arcs.
    pub fn from_generators(g: &Graph, gens: &[Permutation]) -> Result<ArcOrbitData> {
        let n = g.n();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut arcs = Vec::with_capacity(2 * g.edge_count());
        offsets.push(0);
        for u in 0..n {
            arcs.extend(g.neighbors(u).iter().map(|&v| (u, v)));
            offsets.push(arcs.len());
        }
        let index = |u: usize, v: usize| -> Option<usize> {
            g.neighbors(u).binary_search(&v).ok().map(|r| offsets[u] + r)
        };
        let mut actions: Vec<Vec<usize>> = Vec::with_capacity(gens.len());
        for p in gens {
            let img = arcs
                .iter()
                .map(|&(u, v)| index(p.apply(u), p.apply(v)))
                .collect::<Option<Vec<usize>>>()
                .ok_or_else(|| Error::NotAnAutomorphism(format!("{p} does not preserve the edge set")))?;
            actions.push(img);
        }
        let orbits = orbit_partition(&actions, arcs.len());
        let mut orbit_of = vec![0; arcs.len()];
        for (i, o) in orbits.iter().enumerate() {
            for &a in o {
                orbit_of[a] = i;
            }
        }
        let mut pairing = vec![usize::MAX; orbits.len()];
        for (a, &(u, v)) in arcs.iter().enumerate() {
            let r = orbit_of[index(v, u).unwrap()];
            let o = orbit_of[a];
            if pairing[o] == usize::MAX {
                pairing[o] = r;
            } else if pairing[o] != r {
                return Err(Error::Verification(format!(
                    "reversal of arc orbit {o} is not a single orbit"
                )));
            }
        }
        let mut data = ArcOrbitData {
            arcs,
            offsets,
            orbit_of,
            orbits,
            pairing,
            restricted_sizes: Vec::new(),
        };
        data.restricted_sizes = if n > 0 { data.restricted_sizes_at(0) } else { Vec::new() };
        Ok(data)
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc_index(&self, u: usize, v: usize) -> Option<usize> {
        let range = self.offsets[u]..self.offsets[u + 1];
        self.arcs[range.clone()]
            .binary_search(&(u, v))
            .ok()
            .map(|r| range.start + r)
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    /// Orbits as sorted arc-index lists, ordered by least arc index.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn orbit_of(&self, arc: usize) -> usize {
        self.orbit_of[arc]
    }

    /// The orbit containing the reversals of the arcs in orbit `i`.
    pub fn pairing(&self, i: usize) -> usize {
        self.pairing[i]
    }

    pub fn is_self_paired(&self, i: usize) -> bool {
        self.pairing[i] == i
    }

    /// Number of arcs of each orbit leaving vertex 0.
    pub fn restricted_sizes(&self) -> &[usize] {
        &self.restricted_sizes
    }

    /// Number of arcs of each orbit leaving `v`.
    pub fn restricted_sizes_at(&self, v: usize) -> Vec<usize> {
        let mut sizes = vec![0; self.orbits.len()];
        for a in self.offsets[v]..self.offsets[v + 1] {
            sizes[self.orbit_of[a]] += 1;
        }
        sizes
    }

    /// Edge orbits as lists of undirected edges `(u, v)` with `u < v`.
    pub fn edge_orbits(&self) -> Vec<Vec<(usize, usize)>> {
        let mut slot = vec![usize::MAX; self.orbits.len()];
        let mut out: Vec<Vec<(usize, usize)>> = Vec::new();
        for (a, &(u, v)) in self.arcs.iter().enumerate() {
            if u > v {
                continue;
            }
            let o = self.orbit_of[a];
            let key = o.min(self.pairing[o]);
            if slot[key] == usize::MAX {
                slot[key] = out.len();
                out.push(Vec::new());
            }
            out[slot[key]].push((u, v));
        }
        out
    }

    /// The marked partition read off at vertex 0. Meaningful when the group
    /// is transitive on vertices.
    pub fn marked_partition(&self) -> MarkedPartition {
        let mut plain = Vec::new();
        let mut bracketed = Vec::new();
        for (i, &r) in self.restricted_sizes.iter().enumerate() {
            let j = self.pairing[i];
            if j == i {
                plain.push(r);
            } else if i < j {
                bracketed.push(r);
            }
        }
        MarkedPartition::new(plain, bracketed).expect("restricted sizes of a transitive group are positive")
    }
}

/// Transitivity properties of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub vertex_transitive: bool,
    pub edge_transitive: bool,
    pub arc_transitive: bool,
    pub half_arc_transitive: bool,
    /// Vertex-transitive with `|Aut| = |V|`, i.e. a graphical regular representation.
    pub zero_symmetric: bool,
    pub aut_order: BigUint,
    pub valency: Option<usize>,
    pub vertex_orbits: usize,
    pub edge_orbits: usize,
    pub arc_orbits: usize,
}

/// Everything the analysis layer derives from one automorphism computation.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub group: AutGroup,
    pub arcs: ArcOrbitData,
    pub classification: Classification,
    /// `None` when the graph is not vertex-transitive.
    pub arc_type: Option<MarkedPartition>,
    pub edge_type: Option<MarkedPartition>,
}

impl Analysis {
    pub fn arc_type(&self) -> Result<&MarkedPartition> {
        self.arc_type
            .as_ref()
            .ok_or(Error::NotVertexTransitive(self.classification.vertex_orbits))
    }

    pub fn edge_type(&self) -> Result<&MarkedPartition> {
        self.edge_type
            .as_ref()
            .ok_or(Error::NotVertexTransitive(self.classification.vertex_orbits))
    }
}

fn check_input(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Computes `Aut(g)` once and derives orbits, classification and types.
pub fn analyze(g: &Graph, config: &AutConfig) -> Result<Analysis> {
    check_input(g)?;
    let group = aut_group(g, config)?;
    let arcs = ArcOrbitData::from_generators(g, &group.generators)?;
    let vertex_orbits = orbit_partition(&group.generators, g.n()).len();
    let vt = vertex_orbits == 1;
    let edge_orbits = arcs.edge_orbits().len();
    let et = edge_orbits == 1;
    let at = arcs.orbit_count() == 1;
    let classification = Classification {
        vertex_transitive: vt,
        edge_transitive: et,
        arc_transitive: at,
        half_arc_transitive: vt && et && !at,
        zero_symmetric: vt && group.order == BigUint::from(g.n()),
        aut_order: group.order.clone(),
        valency: g.valency(),
        vertex_orbits,
        edge_orbits,
        arc_orbits: arcs.orbit_count(),
    };
    let (arc_type, edge_type) = if vt {
        for v in 1..g.n() {
            if arcs.restricted_sizes_at(v) != arcs.restricted_sizes() {
                return Err(Error::Verification(format!(
                    "restricted orbit sizes at vertex {v} differ from vertex 0"
                )));
            }
        }
        let t = arcs.marked_partition();
        let e = t.bracket_erasure();
        (Some(t), Some(e))
    } else {
        (None, None)
    };
    Ok(Analysis {
        group,
        arcs,
        classification,
        arc_type,
        edge_type,
    })
}

pub fn arc_orbits(g: &Graph) -> Result<ArcOrbitData> {
    arc_orbits_with(g, &AutConfig::default())
}

pub fn arc_orbits_with(g: &Graph, config: &AutConfig) -> Result<ArcOrbitData> {
    check_input(g)?;
    let group = aut_group(g, config)?;
    ArcOrbitData::from_generators(g, &group.generators)
}

/// The arc-type of a connected vertex-transitive graph.
pub fn arc_type(g: &Graph) -> Result<MarkedPartition> {
    arc_type_with(g, &AutConfig::default())
}

pub fn arc_type_with(g: &Graph, config: &AutConfig) -> Result<MarkedPartition> {
    analyze(g, config)?.arc_type().cloned()
}

/// The edge-type of a connected vertex-transitive graph.
pub fn edge_type(g: &Graph) -> Result<MarkedPartition> {
    edge_type_with(g, &AutConfig::default())
}

pub fn edge_type_with(g: &Graph, config: &AutConfig) -> Result<MarkedPartition> {
    analyze(g, config)?.edge_type().cloned()
}

pub fn classify(g: &Graph) -> Result<Classification> {
    classify_with(g, &AutConfig::default())
}

pub fn classify_with(g: &Graph, config: &AutConfig) -> Result<Classification> {
    Ok(analyze(g, config)?.classification)
}

/// Orbit sizes of the vertex stabilizer `Aut(g)_v` on the neighbours of `v`,
/// sorted descending. Computed through a stabilizer chain based at `v`.
pub fn stabilizer_neighbor_orbits(g: &Graph, v: usize, config: &AutConfig) -> Result<Vec<usize>> {
    let group = aut_group(g, config)?;
    let chain = StabChain::new(g.n(), &group.generators, &[v]);
    let stab = chain.stabilizer_generators(1);
    let blocks = orbit_partition(&stab, g.n());
    let mut sizes: Vec<usize> = blocks
        .iter()
        .map(|b| b.iter().filter(|&&w| g.has_edge(v, w)).count())
        .filter(|&c| c > 0)
        .collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Ok(sizes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn prism() -> Graph {
        Graph::new(
            6,
            [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap()
    }

    fn lcf(s: &str) -> Graph {
        Graph::from_lcf(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn cycle_is_arc_transitive() {
        let d = arc_orbits(&cycle(5)).unwrap();
        assert_eq!(d.orbit_count(), 1);
        assert!(d.is_self_paired(0));
        assert_eq!(d.orbits()[0].len(), 10);
        assert_eq!(arc_type(&cycle(5)).unwrap().to_string(), "2");
    }

    #[test]
    fn prism_orbits() {
        let d = arc_orbits(&prism()).unwrap();
        assert_eq!(d.orbit_count(), 2);
        assert!((0..2).all(|i| d.is_self_paired(i)));
        let mut r = d.restricted_sizes().to_vec();
        r.sort_unstable();
        assert_eq!(r, [1, 2]);
        let mut sizes: Vec<usize> = d.edge_orbits().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, [3, 6]);
        assert_eq!(arc_type(&prism()).unwrap().to_string(), "2+1");
    }

    #[test]
    fn figure_three_graph() {
        let g = lcf("[6,6,-6,-6]^5");
        assert_eq!(arc_type(&g).unwrap().to_string(), "1+(1+1)");
        assert_eq!(edge_type(&g).unwrap().to_string(), "2+1");
        let c = classify(&g).unwrap();
        assert!(c.zero_symmetric && c.vertex_transitive && !c.edge_transitive);
    }

    #[test]
    fn non_vertex_transitive_inputs() {
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(arc_type(&p4), Err(Error::NotVertexTransitive(2)));
        let c = classify(&p4).unwrap();
        assert!(!c.vertex_transitive && !c.half_arc_transitive);
        let two = crate::graph::disjoint_union(&[cycle(3), cycle(3)]);
        assert_eq!(classify(&two), Err(Error::Disconnected));
        assert_eq!(classify(&Graph::empty(0)), Err(Error::EmptyGraph));
    }

    #[test]
    fn k2_and_complete() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(edge_type(&k2).unwrap().to_string(), "1");
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(arc_type(&k4).unwrap().to_string(), "3");
    }

    #[test]
    fn stabilizer_view_agrees() {
        for g in [prism(), lcf("[6,6,-6,-6]^5"), lcf("[5,-5]^9"), cycle(7)] {
            let d = arc_orbits(&g).unwrap();
            let mut r: Vec<usize> = d.restricted_sizes().iter().copied().filter(|&x| x > 0).collect();
            r.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(stabilizer_neighbor_orbits(&g, 0, &AutConfig::default()).unwrap(), r);
        }
    }
}
