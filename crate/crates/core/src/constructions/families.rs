//! Standard families and the specific graphs behind the arc-type examples.

use crate::error::{Error, Result};
use crate::graph::{Graph, LcfCode};
use crate::perm::{builtin_group, GroupDescriptor, Permutation};

use crate::automorphism::AutConfig;

use super::cayley::{cayley_words, cayley_words_symmetric};
use super::cover::{edge_orbit, thickened_cover};
use super::product::cartesian_pair;

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
}

/// `C_n` for `n ≥ 3`; `cycle(2)` is `K2` and smaller values give `K1` or the empty graph.
pub fn cycle(n: usize) -> Graph {
    if n < 3 {
        return path(n);
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::new(a + b, (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j)))).unwrap()
}

/// `K_{n,n}` minus a perfect matching; `(n-1)`-regular.
pub fn crown(n: usize) -> Graph {
    Graph::new(
        2 * n,
        (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, n + j))),
    )
    .unwrap()
}

/// Kneser graph `K(n, k)`: `k`-subsets, adjacent when disjoint. Subsets are
/// numbered in lexicographic order of their bitmasks.
pub fn kneser(n: usize, k: usize) -> Graph {
    let sets: Vec<u32> = (0u32..1 << n).filter(|s| s.count_ones() as usize == k).collect();
    let mut edges = Vec::new();
    for (i, &a) in sets.iter().enumerate() {
        for (j, &b) in sets.iter().enumerate().skip(i + 1) {
            if a & b == 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(sets.len(), edges).unwrap()
}

/// `K_{k×2}`: `2k` vertices, every vertex adjacent to all but its antipode `v ^ 1`.
pub fn cocktail_party(k: usize) -> Graph {
    let n = 2 * k;
    Graph::new(
        n,
        (0..n).flat_map(|i| (i + 1..n).filter(move |&j| j != (i ^ 1)).map(move |j| (i, j))),
    )
    .unwrap()
}

/// `Cay(Z_p, S)` where `S` is the subgroup of order `m` of `Z_p^*`. Requires
/// `p` prime, `m` even and `m | p - 1`; the result is `m`-valent and
/// arc-transitive.
pub fn subgroup_circulant(p: usize, m: usize) -> Result<Graph> {
    let bad = || Error::InvalidConnectionSet(format!("no subgroup of order {m} in Z_{p}^* closed under negation"));
    if p < 3 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) || m % 2 != 0 || m == 0 || (p - 1) % m != 0 {
        return Err(bad());
    }
    let order = |g: usize| {
        let (mut x, mut k) = (g, 1);
        while x != 1 {
            x = x * g % p;
            k += 1;
        }
        k
    };
    let root = (2..p).find(|&g| order(g) == p - 1).ok_or_else(bad)?;
    let step = (0..(p - 1) / m).fold(1, |acc, _| acc * root % p);
    let s: Vec<i64> = (0..m)
        .scan(1, |x, _| {
            let cur = *x;
            *x = *x * step % p;
            Some(cur as i64)
        })
        .collect();
    super::cayley::circulant(p, &s)
}

pub fn petersen() -> Graph {
    kneser(5, 2)
}

/// `C_n □ K2`. `prism(3)` is the triangular prism.
pub fn prism(n: usize) -> Graph {
    cartesian_pair(&cycle(n), &complete(2))
}

pub fn hypercube(d: usize) -> Graph {
    let n = 1usize << d;
    Graph::new(
        n,
        (0..n).flat_map(|v| (0..d).filter(move |&b| v >> b & 1 == 0).map(move |b| (v, v | 1 << b))),
    )
    .unwrap()
}

pub fn lcf(code: &str) -> Result<Graph> {
    let code: LcfCode = code.parse()?;
    Graph::from_lcf(&code)
}

/// The graphs `B(m, k, n)` on `Z_k × Z_n^{m-1}`: `(a; b)` is adjacent to
/// `(a+1; b)` and to `(a+1; b + 2^a e_j)` for each coordinate `j`.
/// Vertex `(a; b_1, ..., b_{m-1})` has index `a·n^{m-1} + Σ b_j n^{m-1-j}`.
pub fn bouwer(m: usize, k: usize, n: usize) -> Result<Graph> {
    if m < 2 || k < 2 || n < 2 {
        return Err(Error::InvalidBouwer(format!("need m, k, n ≥ 2, got ({m}, {k}, {n})")));
    }
    let pow2 = |e: usize| -> usize { (0..e).fold(1 % n, |acc, _| acc * 2 % n) };
    if pow2(k) != 1 % n {
        return Err(Error::InvalidBouwer(format!("2^{k} is not 1 modulo {n}")));
    }
    let dim = m - 1;
    let layer = n
        .checked_pow(dim as u32)
        .and_then(|l| l.checked_mul(k))
        .filter(|&total| total <= 1 << 22)
        .ok_or_else(|| Error::InvalidBouwer("graph too large".into()))?
        / k;
    let stride: Vec<usize> = (0..dim).map(|j| n.pow((dim - 1 - j) as u32)).collect();
    let mut edges = Vec::with_capacity(k * layer * m);
    for a in 0..k {
        let next = (a + 1) % k;
        let shift = pow2(a);
        for b in 0..layer {
            let v = a * layer + b;
            edges.push((v, next * layer + b));
            for &s in &stride {
                let digit = b / s % n;
                let moved = b - digit * s + (digit + shift) % n * s;
                edges.push((v, next * layer + moved));
            }
        }
    }
    let g = Graph::from_edge_set(k * layer, edges).map_err(|e| Error::InvalidBouwer(e.to_string()))?;
    if g.valency() != Some(2 * m) {
        return Err(Error::InvalidBouwer(format!(
            "parameters ({m}, {k}, {n}) do not give a {}-regular graph",
            2 * m
        )));
    }
    Ok(g)
}

/// The Holt graph on `Z_9 × Z_3`: `(x, y)` is adjacent to `(4x ± 1, y - 1)`,
/// hence also to `(7x ± 7, y + 1)`. Vertex `(x, y)` has index `3x + y`.
pub fn holt() -> Graph {
    let idx = |x: i64, y: i64| (3 * x.rem_euclid(9) + y.rem_euclid(3)) as usize;
    let edges = (0..9i64).flat_map(|x| {
        (0..3i64).flat_map(move |y| [1, -1].map(|e| (idx(x, y), idx(4 * x + e, y - 1))))
    });
    Graph::new(27, edges).expect("Holt graph edges are distinct")
}

/// The hexagonal prism with diagonals added in the squares `Q_0, Q_2, Q_4`,
/// where `Q_i = u_i u_{i+1} v_{i+1} v_i`, `u_i = i` and `v_i = 6 + i`.
/// For square `Q_{2t}`, bit 0 of `diagonals[t]` adds `u_i v_{i+1}` and bit 1
/// adds `u_{i+1} v_i`.
pub fn diagonal_prism(diagonals: [u8; 3]) -> Graph {
    let mut edges: Vec<(usize, usize)> = prism(6).edges().to_vec();
    // prism(6) numbers (c, s) as 2c + s; rename to u_i = i, v_i = 6 + i
    let rename = |w: usize| if w % 2 == 0 { w / 2 } else { 6 + w / 2 };
    for e in &mut edges {
        *e = (rename(e.0), rename(e.1));
    }
    for (t, &d) in diagonals.iter().enumerate() {
        let i = 2 * t;
        let j = i + 1;
        if d & 1 != 0 {
            edges.push((i, 6 + j));
        }
        if d & 2 != 0 {
            edges.push((j, 6 + i));
        }
    }
    Graph::new(12, edges).unwrap()
}

/// Diagonal choice for the 12-vertex graph with arc-type `2+1+1`, found by
/// searching all choices in [`diagonal_prism`]. A single diagonal per square
/// never gives a regular graph.
pub const FIG8_DIAGONALS: [u8; 3] = [3, 3, 3];

pub fn fig8() -> Graph {
    diagonal_prism(FIG8_DIAGONALS)
}

/// `C_n(F, m)` with `F = {{2r, 2r+1}}`, a perfect matching of the even cycle `C_n`.
pub fn thickened_cycle(n: usize, m: usize) -> Result<Graph> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::InvalidSpec(format!("C_{n}(F, m) needs an even cycle of length at least 4")));
    }
    let f: Vec<(usize, usize)> = (0..n / 2).map(|r| (2 * r, 2 * r + 1)).collect();
    thickened_cover(&cycle(n), &f, m)
}

/// 20-vertex GRR `[6,6,-6,-6]^5`. Labels in the literature are `vertex + 1`.
pub fn fig3() -> Graph {
    lcf("[6,6,-6,-6]^5").unwrap()
}

/// The two automorphisms of [`fig3`] that generate its automorphism group,
/// as 0-based vertex permutations: the reflection `v -> 19 - v` and an element
/// of order 4.
pub fn fig3_automorphisms() -> (Permutation, Permutation) {
    let alpha = Permutation::from_images((0..20).map(|v| 19 - v).collect()).unwrap();
    let labelled: [&[usize]; 5] = [
        &[1, 7, 8, 2],
        &[3, 20, 6, 9],
        &[4, 14, 5, 15],
        &[10, 17, 19, 12],
        &[11, 16, 18, 13],
    ];
    let cycles: Vec<Vec<usize>> = labelled
        .iter()
        .map(|c| c.iter().map(|&l| l - 1).collect())
        .collect();
    let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
    let beta = Permutation::from_cycles(20, &refs).unwrap();
    (alpha, beta)
}

/// Representative edges of the two edge-orbits of [`fig3`]: the orbit of size
/// 10 (a perfect matching) and the orbit of size 20.
pub const FIG3_SMALL_ORBIT_EDGE: (usize, usize) = (0, 19);
pub const FIG3_BIG_ORBIT_EDGE: (usize, usize) = (0, 1);

/// Thickened `m`-cover of [`fig3`] over one of its edge-orbits: the perfect
/// matching orbit (`big = false`, arc-type `m+(1+1)`) or the orbit of size 20
/// (`big = true`, arc-type `1+(m+m)`).
pub fn fig3_cover(big: bool, m: usize) -> Result<Graph> {
    let x = fig3();
    let (u, v) = if big { FIG3_BIG_ORBIT_EDGE } else { FIG3_SMALL_ORBIT_EDGE };
    let f = edge_orbit(&x, u, v, &AutConfig::default())?;
    thickened_cover(&x, &f, m)
}

/// `Cay(D_n, {x, xy, xy³})`, a cubic GRR for odd `n ≥ 11` in the
/// `1+1+1` family.
pub fn dihedral_grr(n: usize) -> Result<Graph> {
    let g = builtin_group(GroupDescriptor::Dihedral(n))?;
    cayley_words(&g, &["x", "xy", "xy^3"])
}

/// `Cay(Z_p ⋊ Z_6, {a, ba², a⁻¹, (ba²)⁻¹})` with `k` the least primitive
/// sixth root of unity modulo `p`.
pub fn semidirect_grr(p: u64) -> Result<Graph> {
    let k = (2..p)
        .find(|&k| {
            let pw = |e: u64| (0..e).fold(1, |acc, _| acc * k % p);
            pw(6) == 1 && pw(2) != 1 && pw(3) != 1
        })
        .ok_or_else(|| Error::InvalidGroup(format!("no primitive sixth root of unity modulo {p}")))?;
    let g = builtin_group(GroupDescriptor::Semidirect { p, q: 6, k })?;
    cayley_words_symmetric(&g, &["a", "ba^2"])
}

/// Thickened `m`-cover of [`grr42`] over the edges that lie in no triangle;
/// arc-type `(m+m)+(1+1)`.
pub fn grr42_cover(m: usize) -> Result<Graph> {
    let x = grr42();
    let f: Vec<(usize, usize)> = x
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| !x.neighbors(u).iter().any(|&w| x.has_edge(v, w)))
        .collect();
    thickened_cover(&x, &f, m)
}

pub fn grr42() -> Graph {
    semidirect_grr(7).expect("Z7 ⋊ Z6 exists")
}

/// `[2k, 2k, -2k, -2k]^m`.
pub fn lcf_pair_family(m: usize, k: usize) -> Result<Graph> {
    let k = k as i64;
    Graph::from_lcf(&LcfCode::new(vec![2 * k, 2 * k, -2 * k, -2 * k], m))
}

/// Parameters `(m, k)` for which `[2k,2k,-2k,-2k]^m` is known to have arc-type `1+(1+1)`.
pub const LCF_PAIR_PARAMS: [(usize, usize); 4] = [(13, 5), (17, 13), (25, 7), (29, 17)];

pub fn fig9() -> Graph {
    let g = builtin_group(GroupDescriptor::Frobenius20).unwrap();
    cayley_words(&g, &["ab^2", "a^2b^2", "b", "b^-1"]).unwrap()
}

pub fn fig10() -> Graph {
    let g = builtin_group(GroupDescriptor::Dihedral(8)).unwrap();
    cayley_words(&g, &["x", "xy", "xy^2", "xy^4"]).unwrap()
}

/// Cayley graph of `SL(2,3)` with `S = {x, y, xy}` closed under inverses.
pub fn sl23_grr() -> Graph {
    let g = builtin_group(GroupDescriptor::Sl23).unwrap();
    cayley_words_symmetric(&g, &["x", "y", "xy"]).unwrap()
}
