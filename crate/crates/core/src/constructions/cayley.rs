use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::FiniteGroup;

/// `Cay(G, S)` on the element indices of `group`, with edges `{g, s·g}`.
///
/// `s` must be inverse-closed and must not contain the identity. Repeated
/// entries are ignored.
pub fn cayley(group: &FiniteGroup, s: &[usize]) -> Result<Graph> {
    let mut set: Vec<usize> = s.to_vec();
    set.sort_unstable();
    set.dedup();
    if let Some(&bad) = set.iter().find(|&&x| x >= group.order()) {
        return Err(Error::InvalidConnectionSet(format!("element index {bad} out of range")));
    }
    if set.contains(&group.identity()) {
        return Err(Error::InvalidConnectionSet("contains the identity".into()));
    }
    if let Some(&x) = set.iter().find(|&&x| set.binary_search(&group.inv(x)).is_err()) {
        return Err(Error::InvalidConnectionSet(format!(
            "not inverse-closed: {} is in S but its inverse is not",
            group.element(x)
        )));
    }
    let edges = (0..group.order()).flat_map(|g| set.iter().map(move |&x| (g, group.mul(x, g))));
    Graph::from_edge_set(group.order(), edges)
}

/// Cayley graph for a connection set given as generator words, e.g. `["a", "a^-1", "ba^2"]`.
pub fn cayley_words(group: &FiniteGroup, words: &[&str]) -> Result<Graph> {
    let s = words
        .iter()
        .map(|w| group.word(w))
        .collect::<Result<Vec<_>>>()?;
    cayley(group, &s)
}

/// Same as [`cayley_words`] but closes the set under inverses first.
pub fn cayley_words_symmetric(group: &FiniteGroup, words: &[&str]) -> Result<Graph> {
    let mut s = words
        .iter()
        .map(|w| group.word(w))
        .collect::<Result<Vec<_>>>()?;
    let inverses: Vec<usize> = s.iter().map(|&x| group.inv(x)).collect();
    s.extend(inverses);
    cayley(group, &s)
}

/// Circulant graph on `Z_n` with connection set `S ∪ -S`.
pub fn circulant(n: usize, s: &[i64]) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidConnectionSet("n must be positive".into()));
    }
    let n_i = n as i64;
    let mut set = Vec::new();
    for &x in s {
        let r = x.rem_euclid(n_i) as usize;
        if r == 0 {
            return Err(Error::InvalidConnectionSet(format!("{x} is 0 modulo {n}")));
        }
        set.push(r);
    }
    let edges = (0..n).flat_map(|i| set.iter().map(move |&r| (i, (i + r) % n)));
    Graph::from_edge_set(n, edges)
}

/// Double-coset graph `Cos(G, H, HaH)` on the right cosets of `H = ⟨h_gens⟩`,
/// where `Hx ~ Hy` iff `xy⁻¹ ∈ HaH`. Requires `a ∉ H` and `a² ∈ H`.
///
/// Cosets are numbered by their least element index.
pub fn double_coset(group: &FiniteGroup, h_gens: &[usize], a: usize) -> Result<Graph> {
    if a >= group.order() || h_gens.iter().any(|&h| h >= group.order()) {
        return Err(Error::InvalidDoubleCoset("element index out of range".into()));
    }
    let h = group.subgroup(h_gens);
    let mut in_h = vec![false; group.order()];
    for &x in &h {
        in_h[x] = true;
    }
    if in_h[a] {
        return Err(Error::InvalidDoubleCoset("a lies in H".into()));
    }
    if !in_h[group.mul(a, a)] {
        return Err(Error::InvalidDoubleCoset("a² does not lie in H".into()));
    }
    let mut coset = vec![usize::MAX; group.order()];
    let mut count = 0;
    for x in 0..group.order() {
        if coset[x] == usize::MAX {
            for &y in &h {
                coset[group.mul(y, x)] = count;
            }
            count += 1;
        }
    }
    let mut hah = vec![false; group.order()];
    for &x in &h {
        let xa = group.mul(x, a);
        for &y in &h {
            hah[group.mul(xa, y)] = true;
        }
    }
    let mut reps = vec![usize::MAX; count];
    for x in 0..group.order() {
        if reps[coset[x]] == usize::MAX {
            reps[coset[x]] = x;
        }
    }
    let mut edges = Vec::new();
    for &x in &reps {
        for d in (0..group.order()).filter(|&d| hah[d]) {
            // x y⁻¹ = d  <=>  y = d⁻¹ x
            let y = group.mul(group.inv(d), x);
            edges.push((coset[x], coset[y]));
        }
    }
    Graph::from_edge_set(count, edges)
}
