//! Permutations, orbit machinery, stabilizer chains and concrete finite groups.
//!
//! Permutations act on the right: `p * q` applies `p` first and then `q`, so
//! `x^(pq) = (x^p)^q`. This matches the convention used for the group
//! presentations in [`builtin_group`].

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// A bijection on `0..n`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, 0-based, fixed points omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "image list {images:?} is not a bijection"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Unchecked constructor for image lists known to be bijections.
    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Permutation {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation of degree `n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Permutation> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= n || touched[x] {
                    return Err(Error::InvalidPermutation(format!(
                        "cycles {cycles:?} are not disjoint cycles on 0..{n}"
                    )));
                }
                touched[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, e: i64) -> Permutation {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for s in 0..self.images.len() {
            if seen[s] || self.images[s] == s {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.images[s];
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.images[x];
            }
            out.push(c);
        }
        out
    }

    /// Element order: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().position(|(i, &x)| i != x)
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// A permutation group of a fixed degree given by generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<PermGroup> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidPermutation(format!(
                "generator {g} has degree {} but the group has degree {degree}",
                g.degree()
            )));
        }
        Ok(PermGroup { degree, generators })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Exact group order through a stabilizer chain.
    pub fn order(&self) -> BigUint {
        StabChain::new(self.degree, &self.generators, &[]).order()
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        orbit(&self.generators, point)
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbit_partition(&self.generators, self.degree)
    }

    /// Generators of the point stabilizer of `point`.
    pub fn stabilizer(&self, point: usize) -> PermGroup {
        let chain = StabChain::new(self.degree, &self.generators, &[point]);
        PermGroup {
            degree: self.degree,
            generators: chain.stabilizer_generators(1),
        }
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        StabChain::new(self.degree, &self.generators, &[]).contains(p)
    }
}

/// Exact order of the group generated by `g`.
pub fn group_order(g: &PermGroup) -> BigUint {
    g.order()
}

/// Anything that acts on `0..len` by an image list.
pub trait Action {
    fn image(&self, x: usize) -> usize;
}

impl Action for Permutation {
    fn image(&self, x: usize) -> usize {
        self.images[x]
    }
}

impl Action for Vec<usize> {
    fn image(&self, x: usize) -> usize {
        self[x]
    }
}

impl Action for [usize] {
    fn image(&self, x: usize) -> usize {
        self[x]
    }
}

/// The orbit of `point` under the generators, sorted ascending.
pub fn orbit<A: Action>(gens: &[A], point: usize) -> Vec<usize> {
    let mut seen = std::collections::BTreeSet::from([point]);
    let mut stack = vec![point];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.image(x);
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Orbits of the generated group on `0..domain_size`, each sorted, ordered by
/// least element. The generators may describe an induced action (on arcs,
/// edges, ...) as long as they map the domain into itself.
pub fn orbit_partition<A: Action>(gens: &[A], domain_size: usize) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(domain_size);
    for g in gens {
        for x in 0..domain_size {
            uf.union(x, g.image(x));
        }
    }
    uf.blocks()
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; true if they were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        true
    }

    pub fn class_size(&mut self, x: usize) -> usize {
        let r = self.find(x);
        self.size[r]
    }

    /// Classes sorted internally and ordered by least element.
    pub fn blocks(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut slot = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let r = self.find(x);
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(x);
        }
        out
    }
}

struct Level {
    point: usize,
    gens: Vec<Permutation>,
    /// `transversal[x]` maps `point` to `x` for every `x` in the orbit.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(degree: usize, point: usize, gens: Vec<Permutation>) -> Level {
        let mut level = Level {
            point,
            gens,
            transversal: vec![None; degree],
            orbit: Vec::new(),
        };
        level.rebuild();
        level
    }

    fn rebuild(&mut self) {
        let degree = self.transversal.len();
        self.transversal = vec![None; degree];
        self.transversal[self.point] = Some(Permutation::identity(degree));
        self.orbit = vec![self.point];
        let mut i = 0;
        while i < self.orbit.len() {
            let x = self.orbit[i];
            for s in &self.gens {
                let y = s.apply(x);
                if self.transversal[y].is_none() {
                    let u = self.transversal[x].as_ref().unwrap().then(s);
                    self.transversal[y] = Some(u);
                    self.orbit.push(y);
                }
            }
            i += 1;
        }
    }
}

/// A base and strong generating set built by the deterministic Schreier–Sims
/// algorithm.
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// Builds a chain for the group generated by `gens`, with the base
    /// starting at `base_prefix` (extended as needed).
    pub fn new(degree: usize, gens: &[Permutation], base_prefix: &[usize]) -> StabChain {
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut base: Vec<usize> = Vec::new();
        for &b in base_prefix {
            if !base.contains(&b) {
                base.push(b);
            }
        }
        for g in &gens {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.first_moved().unwrap());
            }
        }
        let mut levels: Vec<Level> = Vec::with_capacity(base.len());
        for (i, &b) in base.iter().enumerate() {
            let lg = gens
                .iter()
                .filter(|g| base[..i].iter().all(|&c| g.apply(c) == c))
                .cloned()
                .collect();
            levels.push(Level::new(degree, b, lg));
        }
        let mut chain = StabChain { degree, levels };
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            let mut jump = None;
            'scan: for oi in 0..self.levels[lvl].orbit.len() {
                let beta = self.levels[lvl].orbit[oi];
                for si in 0..self.levels[lvl].gens.len() {
                    let level = &self.levels[lvl];
                    let s = &level.gens[si];
                    let u_beta = level.transversal[beta].as_ref().unwrap();
                    let u_next = level.transversal[s.apply(beta)].as_ref().unwrap();
                    let h = u_beta.then(s).then(&u_next.inverse());
                    if h.is_identity() {
                        continue;
                    }
                    let (residue, j) = self.sift(h, lvl + 1);
                    if residue.is_identity() {
                        continue;
                    }
                    if j == self.levels.len() {
                        let p = residue.first_moved().unwrap();
                        self.levels.push(Level::new(self.degree, p, Vec::new()));
                    }
                    for l in lvl + 1..=j {
                        self.levels[l].gens.push(residue.clone());
                        self.levels[l].rebuild();
                    }
                    jump = Some(j);
                    break 'scan;
                }
            }
            match jump {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
    }

    /// Sifts `h` from level `start`; returns the residue and the level where
    /// sifting stopped (`levels.len()` if it went through).
    fn sift(&self, mut h: Permutation, start: usize) -> (Permutation, usize) {
        for l in start..self.levels.len() {
            let level = &self.levels[l];
            let beta = h.apply(level.point);
            match &level.transversal[beta] {
                None => return (h, l),
                Some(u) => h = h.then(&u.inverse()),
            }
        }
        (h, self.levels.len())
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    /// Orbit lengths of the successive stabilizers on their base points.
    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && {
            let (r, j) = self.sift(p.clone(), 0);
            j == self.levels.len() && r.is_identity()
        }
    }

    /// Strong generators fixing the first `depth` base points.
    pub fn stabilizer_generators(&self, depth: usize) -> Vec<Permutation> {
        self.levels
            .get(depth)
            .map(|l| l.gens.clone())
            .unwrap_or_default()
    }
}

/// A finite group realized as a closed, sorted list of permutations.
#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    named: Vec<(String, usize)>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.elements.len())
    }
}

const MAX_GROUP_ORDER: usize = 1 << 20;

impl FiniteGroup {
    /// Closes the named generators under composition.
    pub fn from_generators(name: &str, named: Vec<(String, Permutation)>) -> Result<FiniteGroup> {
        let degree = named.first().map(|(_, p)| p.degree()).unwrap_or(1);
        if named.iter().any(|(_, p)| p.degree() != degree) {
            return Err(Error::InvalidGroup("generators of different degrees".into()));
        }
        let id = Permutation::identity(degree);
        let mut seen: HashMap<Permutation, ()> = HashMap::from([(id.clone(), ())]);
        let mut elements = vec![id];
        let mut i = 0;
        while i < elements.len() {
            for (_, g) in &named {
                let p = elements[i].then(g);
                if seen.insert(p.clone(), ()).is_none() {
                    elements.push(p);
                    if elements.len() > MAX_GROUP_ORDER {
                        return Err(Error::InvalidGroup(format!(
                            "{name}: group order exceeds {MAX_GROUP_ORDER}"
                        )));
                    }
                }
            }
            i += 1;
        }
        elements.sort();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect::<HashMap<_, _>>();
        let named = named
            .into_iter()
            .map(|(n, p)| {
                let i = index[&p];
                (n, i)
            })
            .collect();
        Ok(FiniteGroup {
            name: name.to_string(),
            elements,
            index,
            named,
        })
    }

    /// The symmetric group on `n` points.
    pub fn symmetric(n: usize) -> Result<FiniteGroup> {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(("s".to_string(), Permutation::from_cycles(n, &[&[0, 1]])?));
            let cycle: Vec<usize> = (0..n).collect();
            gens.push(("c".to_string(), Permutation::from_cycles(n, &[&cycle])?));
        } else {
            gens.push(("s".to_string(), Permutation::identity(n.max(1))));
        }
        FiniteGroup::from_generators(&format!("S{n}"), gens)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].then(&self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.index[&self.elements[a].inverse()]
    }

    pub fn pow(&self, a: usize, e: i64) -> usize {
        self.index[&self.elements[a].pow(e)]
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.elements[a].order()
    }

    /// Distinguished generators as `(name, element index)`.
    pub fn named_generators(&self) -> &[(String, usize)] {
        &self.named
    }

    pub fn generator(&self, name: &str) -> Option<usize> {
        self.named.iter().find(|(n, _)| n == name).map(|&(_, i)| i)
    }

    /// Evaluates a word such as `ab^2`, `ba^-1` or `xy4` in the named
    /// generators. Exponents follow a letter either directly or after `^`.
    pub fn word(&self, text: &str) -> Result<usize> {
        let bad = |m: String| Error::InvalidGroup(format!("word `{text}`: {m}"));
        let chars: Vec<char> = text.chars().collect();
        if chars.is_empty() {
            return Err(bad("empty word".into()));
        }
        let mut acc = self.identity();
        let mut i = 0;
        while i < chars.len() {
            let letter = chars[i];
            let g = self
                .generator(&letter.to_string())
                .ok_or_else(|| bad(format!("`{letter}` is not a generator of {}", self.name)))?;
            i += 1;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
            }
            let start = i;
            if i < chars.len() && (chars[i] == '-' || chars[i] == '+') {
                i += 1;
            }
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let exp: i64 = if i == start {
                1
            } else {
                let s: String = chars[start..i].iter().collect();
                s.parse().map_err(|_| bad(format!("bad exponent `{s}`")))?
            };
            acc = self.mul(acc, self.pow(g, exp));
        }
        Ok(acc)
    }

    /// Indices of the subgroup generated by the given elements.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[self.identity()] = true;
        let mut list = vec![self.identity()];
        let mut i = 0;
        while i < list.len() {
            for &g in gens {
                let p = self.mul(list[i], g);
                if !seen[p] {
                    seen[p] = true;
                    list.push(p);
                }
            }
            i += 1;
        }
        list.sort_unstable();
        list
    }
}

/// Descriptor of a built-in group, with CLI syntax `cyclic:n`, `dihedral:n`,
/// `semidirect:p:q:k`, `frobenius20` and `sl23`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupDescriptor {
    Cyclic(usize),
    /// Dihedral group of order `2n`, generated by `x` (reflection) and `y` (rotation).
    Dihedral(usize),
    /// `C_p ⋊ C_q` with `a` of order `q`, `b` of order `p` and `a⁻¹ba = b^k`.
    Semidirect { p: u64, q: u64, k: u64 },
    /// `C5 ⋊ C4` on five points.
    Frobenius20,
    /// `SL(2,3)` in its regular representation.
    Sl23,
}

impl GroupDescriptor {
    /// Parses a descriptor from the start of a `:`-separated token list and
    /// returns it with the number of tokens consumed.
    pub fn parse_prefix(tokens: &[&str]) -> Result<(GroupDescriptor, usize)> {
        let bad = || Error::InvalidGroup(format!("cannot parse group from `{}`", tokens.join(":")));
        let num = |i: usize| -> Result<u64> {
            tokens
                .get(i)
                .and_then(|t| t.parse::<u64>().ok())
                .ok_or_else(bad)
        };
        match tokens.first().copied() {
            Some("cyclic") => Ok((GroupDescriptor::Cyclic(num(1)? as usize), 2)),
            Some("dihedral") => Ok((GroupDescriptor::Dihedral(num(1)? as usize), 2)),
            Some("semidirect") => Ok((
                GroupDescriptor::Semidirect {
                    p: num(1)?,
                    q: num(2)?,
                    k: num(3)?,
                },
                4,
            )),
            Some("frobenius20") => Ok((GroupDescriptor::Frobenius20, 1)),
            Some("sl23") => Ok((GroupDescriptor::Sl23, 1)),
            _ => Err(bad()),
        }
    }
}

impl FromStr for GroupDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupDescriptor> {
        let tokens: Vec<&str> = s.split(':').collect();
        let (d, used) = GroupDescriptor::parse_prefix(&tokens)?;
        if used != tokens.len() {
            return Err(Error::InvalidGroup(format!("trailing tokens in `{s}`")));
        }
        Ok(d)
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupDescriptor::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupDescriptor::Semidirect { p, q, k } => write!(f, "semidirect:{p}:{q}:{k}"),
            GroupDescriptor::Frobenius20 => write!(f, "frobenius20"),
            GroupDescriptor::Sl23 => write!(f, "sl23"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn check(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidGroup(format!("defining relation failed: {what}")))
    }
}

/// Builds one of the built-in groups and verifies its defining relations.
pub fn builtin_group(desc: GroupDescriptor) -> Result<FiniteGroup> {
    let name = desc.to_string();
    match desc {
        GroupDescriptor::Cyclic(n) => {
            if n == 0 {
                return Err(Error::InvalidGroup("cyclic group of order 0".into()));
            }
            let a = Permutation::from_images_unchecked((0..n).map(|i| (i + 1) % n).collect());
            FiniteGroup::from_generators(&name, vec![("a".into(), a)])
        }
        GroupDescriptor::Dihedral(n) => {
            if n == 0 {
                return Err(Error::InvalidGroup("dihedral group D_0".into()));
            }
            let g = if n >= 3 {
                let y = Permutation::from_images_unchecked((0..n).map(|i| (i + 1) % n).collect());
                let x = Permutation::from_images_unchecked((0..n).map(|i| (n - i) % n).collect());
                FiniteGroup::from_generators(&name, vec![("x".into(), x), ("y".into(), y)])?
            } else {
                // D_1 and D_2 are not faithful on n points; use the regular action.
                let nm = n as u64;
                let (b, a) = semidirect_regular(nm, 2, nm - 1)?;
                FiniteGroup::from_generators(&name, vec![("x".into(), a), ("y".into(), b)])?
            };
            let x = g.generator("x").unwrap();
            let y = g.generator("y").unwrap();
            check(g.pow(x, 2) == g.identity(), "x^2 = 1")?;
            check(g.pow(y, n as i64) == g.identity(), "y^n = 1")?;
            check(g.mul(g.mul(x, y), x) == g.inv(y), "xyx = y^-1")?;
            check(g.order() == 2 * n, "|D_n| = 2n")?;
            Ok(g)
        }
        GroupDescriptor::Semidirect { p, q, k } => {
            if !is_prime(p) {
                return Err(Error::InvalidGroup(format!("semidirect: p = {p} is not prime")));
            }
            if q == 0 || k % p == 0 || pow_mod(k, q, p) != 1 {
                return Err(Error::InvalidGroup(format!(
                    "semidirect: k = {k} does not have multiplicative order dividing q = {q} mod {p}"
                )));
            }
            let (b, a) = semidirect_regular(p, q, k)?;
            let g = FiniteGroup::from_generators(&name, vec![("a".into(), a), ("b".into(), b)])?;
            let a = g.generator("a").unwrap();
            let b = g.generator("b").unwrap();
            check(g.pow(a, q as i64) == g.identity(), "a^q = 1")?;
            check(g.pow(b, p as i64) == g.identity(), "b^p = 1")?;
            check(
                g.mul(g.mul(g.inv(a), b), a) == g.pow(b, k as i64),
                "a^-1 b a = b^k",
            )?;
            check(g.order() as u64 == p * q, "|G| = pq")?;
            Ok(g)
        }
        GroupDescriptor::Frobenius20 => {
            let a = Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]])?;
            let b = Permutation::from_cycles(5, &[&[1, 2, 4, 3]])?;
            let g = FiniteGroup::from_generators(&name, vec![("a".into(), a), ("b".into(), b)])?;
            let a = g.generator("a").unwrap();
            let b = g.generator("b").unwrap();
            check(g.pow(a, 5) == g.identity(), "a^5 = 1")?;
            check(g.pow(b, 4) == g.identity(), "b^4 = 1")?;
            check(g.mul(g.mul(g.inv(b), a), b) == g.pow(a, 2), "b^-1 a b = a^2")?;
            check(g.order() == 20, "|G| = 20")?;
            Ok(g)
        }
        GroupDescriptor::Sl23 => sl23(&name),
    }
}

/// Regular representation of `C_p ⋊ C_q` on the pairs `b^i a^j`, using
/// `(b^i a^j)(b^i' a^j') = b^(i + i' k^-j) a^(j + j')`. Returns `(b, a)`.
fn semidirect_regular(p: u64, q: u64, k: u64) -> Result<(Permutation, Permutation)> {
    let kinv = (1..=p.max(1))
        .find(|&x| (k % p.max(1)) * x % p.max(1) == 1 % p.max(1))
        .ok_or_else(|| Error::InvalidGroup(format!("{k} is not invertible mod {p}")))?;
    let idx = |i: u64, j: u64| (i * q + j) as usize;
    let size = (p * q) as usize;
    let mul = |(i1, j1): (u64, u64), (i2, j2): (u64, u64)| {
        let twist = pow_mod(kinv, j1, p.max(1));
        ((i1 + i2 * twist) % p.max(1), (j1 + j2) % q)
    };
    let right = |g: (u64, u64)| {
        let mut images = vec![0; size];
        for i in 0..p {
            for j in 0..q {
                let (ri, rj) = mul((i, j), g);
                images[idx(i, j)] = idx(ri, rj);
            }
        }
        Permutation::from_images(images)
    };
    let b = right((1 % p.max(1), 0))?;
    let a = right((0, 1 % q))?;
    Ok((b, a))
}

type Mat = [[u8; 2]; 2];

fn mat_mul(x: &Mat, y: &Mat) -> Mat {
    let mut r = [[0u8; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            r[i][j] = ((x[i][0] as u32 * y[0][j] as u32 + x[i][1] as u32 * y[1][j] as u32) % 3) as u8;
        }
    }
    r
}

fn sl23(name: &str) -> Result<FiniteGroup> {
    let mut mats: Vec<Mat> = Vec::new();
    for a in 0..3u8 {
        for b in 0..3u8 {
            for c in 0..3u8 {
                for d in 0..3u8 {
                    if (a as i32 * d as i32 - b as i32 * c as i32).rem_euclid(3) == 1 {
                        mats.push([[a, b], [c, d]]);
                    }
                }
            }
        }
    }
    let pos = |m: &Mat| mats.iter().position(|x| x == m).unwrap();
    let right = |g: &Mat| {
        Permutation::from_images(mats.iter().map(|m| pos(&mat_mul(m, g))).collect())
    };
    // x = (1 0 / 1 1), y = (0 1 / -1 0)
    let xm: Mat = [[1, 0], [1, 1]];
    let ym: Mat = [[0, 1], [2, 0]];
    let g = FiniteGroup::from_generators(
        name,
        vec![("x".into(), right(&xm)?), ("y".into(), right(&ym)?)],
    )?;
    let x = g.generator("x").unwrap();
    let y = g.generator("y").unwrap();
    check(g.pow(x, 3) == g.identity(), "x^3 = 1")?;
    check(g.pow(y, 4) == g.identity(), "y^4 = 1")?;
    let xy = g.mul(x, y);
    check(g.mul(y, g.inv(x)) == g.mul(xy, xy), "y x^-1 = (xy)^2")?;
    check(g.order() == 24, "|SL(2,3)| = 24")?;
    Ok(g)
}
