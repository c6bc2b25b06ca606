use crate::automorphism::AutConfig;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::cayley::circulant;
use super::cover::{edge_orbit, thickened_cover};
use super::families::*;
use super::product::cartesian;

/// A graph in the registry, built on demand from its construction.
pub struct RegistryEntry {
    pub id: &'static str,
    /// Arc-type the construction is known to have.
    pub arc_type: &'static str,
    pub description: &'static str,
    build: fn() -> Graph,
}

impl RegistryEntry {
    pub fn build(&self) -> Graph {
        (self.build)()
    }
}

impl std::fmt::Debug for RegistryEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RegistryEntry({})", self.id)
    }
}

fn fig6() -> Graph {
    let x = fig3();
    let (u, v) = FIG3_SMALL_ORBIT_EDGE;
    let f = edge_orbit(&x, u, v, &AutConfig::default()).unwrap();
    thickened_cover(&x, &f, 2).unwrap()
}

macro_rules! entry {
    ($id:expr, $at:expr, $desc:expr, $build:expr) => {
        RegistryEntry {
            id: $id,
            arc_type: $at,
            description: $desc,
            build: $build,
        }
    };
}

pub static REGISTRY: &[RegistryEntry] = &[
    entry!("k2", "1", "complete graph K2", || complete(2)),
    entry!("c3", "2", "cycle C3", || cycle(3)),
    entry!("c5", "2", "cycle C5", || cycle(5)),
    entry!("k4", "3", "complete graph K4", || complete(4)),
    entry!("k5", "4", "complete graph K5", || complete(5)),
    entry!("k33", "3", "complete bipartite graph K3,3", || complete_bipartite(3, 3)),
    entry!("q3", "3", "3-cube", || hypercube(3)),
    entry!("petersen", "3", "Petersen graph", petersen),
    entry!("prism", "2+1", "triangular prism C3 x K2", || prism(3)),
    entry!("prism5", "2+1", "pentagonal prism C5 x K2", || prism(5)),
    entry!("heawood", "3", "Heawood graph [5,-5]^7", || lcf("[5,-5]^7").unwrap()),
    entry!("mobius-kantor", "3", "Moebius-Kantor graph [5,-5]^8", || lcf("[5,-5]^8").unwrap()),
    entry!("fig2-18", "1+1+1", "cubic graph [5,-5]^9, arc-type 1+1+1", || lcf("[5,-5]^9").unwrap()),
    entry!("fig3-20", "1+(1+1)", "cubic GRR [6,6,-6,-6]^5, arc-type 1+(1+1)", fig3),
    entry!("holt", "(2+2)", "Holt graph on Z9 x Z3", holt),
    entry!("k4xk2", "3+1", "K4 x K2", || cartesian(&[complete(4), complete(2)])),
    entry!("circ7-12", "2+2", "circulant Cay(Z7, {1,2})", || circulant(7, &[1, 2]).unwrap()),
    entry!("fig6-40", "2+(1+1)", "thickened cover of fig3-20 over its perfect-matching orbit, m = 2", fig6),
    entry!("grr42", "(1+1)+(1+1)", "Cay(Z7 x| Z6, {a, ba^2}^±)", grr42),
    entry!("fig8-12", "2+1+1", "hexagonal prism with three diagonals", fig8),
    entry!("fig9-20", "1+1+(1+1)", "Cay(F20, {ab^2, a^2b^2, b, b^-1})", fig9),
    entry!("fig10-16", "1+1+1+1", "Cay(D8, {x, xy, xy^2, xy^4})", fig10),
    entry!("grr24", "(1+1)+(1+1)+(1+1)", "Cay(SL(2,3), {x, y, xy}^±)", sl23_grr),
    entry!("dihedral-11", "1+1+1", "Cay(D11, {x, xy, xy^3})", || dihedral_grr(11).unwrap()),
    entry!("dihedral-13", "1+1+1", "Cay(D13, {x, xy, xy^3})", || dihedral_grr(13).unwrap()),
    entry!("grr78", "(1+1)+(1+1)", "Cay(Z13 x| Z6, {a, ba^2}^±)", || semidirect_grr(13).unwrap()),
    entry!("lcf-13-5", "1+(1+1)", "[10,10,-10,-10]^13", || lcf_pair_family(13, 5).unwrap()),
    entry!("lcf-17-13", "1+(1+1)", "[26,26,-26,-26]^17", || lcf_pair_family(17, 13).unwrap()),
    entry!("lcf-25-7", "1+(1+1)", "[14,14,-14,-14]^25", || lcf_pair_family(25, 7).unwrap()),
    entry!("lcf-29-17", "1+(1+1)", "[34,34,-34,-34]^29", || lcf_pair_family(29, 17).unwrap()),
    entry!("bouwer-2-6-9", "(2+2)", "Bouwer graph B(2,6,9)", || bouwer(2, 6, 9).unwrap()),
];

pub fn registry_entry(id: &str) -> Result<&'static RegistryEntry> {
    REGISTRY
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownGraph(id.to_string()))
}

/// Builds the registry graph with the given id.
pub fn named(id: &str) -> Result<Graph> {
    Ok(registry_entry(id)?.build())
}

pub fn registry_ids() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().map(|e| e.id)
}

/// A row of the small-valency table: the example graph, if one exists, for
/// each marked partition of valency at most 4.
#[derive(Debug, Clone, Copy)]
pub struct TableRow {
    pub case: &'static str,
    pub valency: usize,
    pub edge_type: &'static str,
    pub arc_type: &'static str,
    pub example: Option<&'static str>,
}

const fn row(
    case: &'static str,
    valency: usize,
    edge_type: &'static str,
    arc_type: &'static str,
    example: Option<&'static str>,
) -> TableRow {
    TableRow {
        case,
        valency,
        edge_type,
        arc_type,
        example,
    }
}

pub const TABLE1: [TableRow; 17] = [
    row("P1", 1, "1", "1", Some("k2")),
    row("P2", 2, "2", "2", Some("c3")),
    row("P3", 2, "1+1", "1+1", None),
    row("P4", 2, "2", "(1+1)", None),
    row("P5", 3, "3", "3", Some("k4")),
    row("P6", 3, "2+1", "2+1", Some("prism")),
    row("P7", 3, "1+1+1", "1+1+1", Some("fig2-18")),
    row("P8", 3, "2+1", "1+(1+1)", Some("fig3-20")),
    row("P9", 4, "4", "4", Some("k5")),
    row("P10", 4, "4", "(2+2)", Some("holt")),
    row("P11", 4, "3+1", "3+1", Some("k4xk2")),
    row("P12", 4, "2+2", "2+2", Some("circ7-12")),
    row("P13", 4, "2+2", "2+(1+1)", Some("fig6-40")),
    row("P14", 4, "2+2", "(1+1)+(1+1)", Some("grr42")),
    row("P15", 4, "2+1+1", "2+1+1", Some("fig8-12")),
    row("P16", 4, "2+1+1", "1+1+(1+1)", Some("fig9-20")),
    row("P17", 4, "1+1+1+1", "1+1+1+1", Some("fig10-16")),
];

/// Short human-readable name for common graphs (`K4`, `C6`, `K3,3`), falling
/// back to order and size.
pub fn describe(g: &Graph) -> String {
    let n = g.n();
    let m = g.edge_count();
    if n >= 1 && m == n * (n - 1) / 2 {
        return format!("K{n}");
    }
    if n >= 3 && g.valency() == Some(2) && g.is_connected() {
        return format!("C{n}");
    }
    if let Some((a, b)) = complete_bipartite_parts(g) {
        return format!("K{a},{b}");
    }
    format!("G(n={n},m={m})")
}

fn complete_bipartite_parts(g: &Graph) -> Option<(usize, usize)> {
    if g.n() < 2 || !g.is_connected() {
        return None;
    }
    let d = g.distances_from(0);
    let a = d.iter().filter(|&&x| x % 2 == 0).count();
    let b = g.n() - a;
    if a * b != g.edge_count() || g.edges().iter().any(|&(u, v)| d[u] % 2 == d[v] % 2) {
        return None;
    }
    Some((a.max(b), a.min(b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique_and_build() {
        let mut ids: Vec<&str> = registry_ids().collect();
        ids.sort_unstable();
        let len = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), len);
        for e in REGISTRY.iter().filter(|e| !e.id.starts_with("lcf-")) {
            let g = e.build();
            assert!(g.is_connected(), "{}", e.id);
            assert!(g.valency().is_some(), "{}", e.id);
        }
        assert!(matches!(named("nope"), Err(Error::UnknownGraph(_))));
    }

    #[test]
    fn descriptions() {
        assert_eq!(describe(&complete(4)), "K4");
        assert_eq!(describe(&complete(2)), "K2");
        assert_eq!(describe(&cycle(6)), "C6");
        assert_eq!(describe(&complete_bipartite(2, 3)), "K3,2");
        assert_eq!(describe(&petersen()), "G(n=10,m=15)");
    }

    #[test]
    fn table_examples_exist() {
        for r in TABLE1.iter() {
            if let Some(id) = r.example {
                assert!(registry_entry(id).is_ok(), "{id}");
            }
        }
    }
}
