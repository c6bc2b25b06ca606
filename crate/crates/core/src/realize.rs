//! Synthesis of a vertex-transitive graph with a prescribed arc-type.
//!
//! [`plan`] splits a realisable marked partition into building-block
//! arc-types following the case analysis on unit summands, then draws
//! pairwise non-isomorphic prime graphs for each block from fixed pools.
//! [`realize`] builds the Cartesian product of the blocks and certifies the
//! result, either by computing the arc-type of the whole graph (direct) or by
//! checking every block and relying on additivity over relatively prime
//! factors (compositional).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::automorphism::{canonical_form_with, AutConfig};
use crate::constructions::{self as cons, factor_prime};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partitions::MarkedPartition;
use crate::symmetry::arc_type_with;

/// A concrete building block.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BlockSpec {
    Complete(usize),
    Cycle(usize),
    CompleteBipartite(usize),
    Crown(usize),
    CocktailParty(usize),
    SubgroupCirculant { p: usize, m: usize },
    Named(&'static str),
    Bouwer { m: usize, k: usize, n: usize },
    ThickenedCycle { n: usize, m: usize },
    Fig3Cover { big: bool, m: usize },
    Grr42Cover(usize),
    DihedralGrr(usize),
    SemidirectGrr(u64),
    LcfPair { m: usize, k: usize },
}

impl BlockSpec {
    pub fn build(&self) -> Result<Graph> {
        use BlockSpec::*;
        match *self {
            Complete(n) => Ok(cons::complete(n)),
            Cycle(n) => Ok(cons::cycle(n)),
            CompleteBipartite(m) => Ok(cons::complete_bipartite(m, m)),
            Crown(n) => Ok(cons::crown(n)),
            CocktailParty(k) => Ok(cons::cocktail_party(k)),
            SubgroupCirculant { p, m } => cons::subgroup_circulant(p, m),
            Named(id) => cons::named(id),
            Bouwer { m, k, n } => cons::bouwer(m, k, n),
            ThickenedCycle { n, m } => cons::thickened_cycle(n, m),
            Fig3Cover { big, m } => cons::fig3_cover(big, m),
            Grr42Cover(m) => cons::grr42_cover(m),
            DihedralGrr(n) => cons::dihedral_grr(n),
            SemidirectGrr(p) => cons::semidirect_grr(p),
            LcfPair { m, k } => cons::lcf_pair_family(m, k),
        }
    }

    /// Order of the block, known without building it.
    pub fn vertex_count(&self) -> usize {
        use BlockSpec::*;
        match *self {
            Complete(n) | Cycle(n) => n,
            CompleteBipartite(m) => 2 * m,
            Crown(n) => 2 * n,
            CocktailParty(k) => 2 * k,
            SubgroupCirculant { p, .. } => p,
            Named(id) => cons::named(id).map(|g| g.n()).unwrap_or(0),
            Bouwer { m, k, n } => k * n.pow(m as u32 - 1),
            ThickenedCycle { n, m } => n * m,
            Fig3Cover { m, .. } => 20 * m,
            Grr42Cover(m) => 42 * m,
            DihedralGrr(n) => 2 * n,
            SemidirectGrr(p) => 6 * p as usize,
            LcfPair { m, .. } => 4 * m,
        }
    }
}

impl fmt::Display for BlockSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use BlockSpec::*;
        match self {
            Complete(n) => write!(f, "K{n}"),
            Cycle(n) => write!(f, "C{n}"),
            CompleteBipartite(m) => write!(f, "K{m},{m}"),
            Crown(n) => write!(f, "crown({n})"),
            CocktailParty(k) => write!(f, "cocktail-party({k})"),
            SubgroupCirculant { p, m } => write!(f, "circulant({p}, order-{m} subgroup)"),
            Named(id) => write!(f, "{id}"),
            Bouwer { m, k, n } => write!(f, "B({m},{k},{n})"),
            ThickenedCycle { n, m } => write!(f, "C{n}(F,{m})"),
            Fig3Cover { big, m } => write!(f, "fig3-20({},{m})", if *big { "F_big" } else { "F_small" }),
            Grr42Cover(m) => write!(f, "grr42(F_x,{m})"),
            DihedralGrr(n) => write!(f, "Cay(D{n},{{x,xy,xy^3}})"),
            SemidirectGrr(p) => write!(f, "Cay(Z{p}:Z6,{{a,ba^2}})"),
            LcfPair { m, k } => write!(f, "[{0},{0},-{0},-{0}]^{m}", 2 * k),
        }
    }
}

const POOL_CAP: usize = 64;

fn is_prime_number(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// The ordered list of pairwise non-isomorphic prime graphs used for blocks of
/// the given arc-type. Empty when the arc-type is not a building-block type.
pub fn pool(t: &MarkedPartition) -> Vec<BlockSpec> {
    use BlockSpec::*;
    match (t.plain(), t.bracketed()) {
        ([1], []) => vec![Complete(2)],
        ([2], []) => (5..5 + POOL_CAP).map(Cycle).collect(),
        (&[m], []) => {
            let mut v = vec![Complete(m + 1), CompleteBipartite(m)];
            if m >= 4 {
                v.push(Crown(m + 1));
            }
            if m % 2 == 0 {
                v.push(CocktailParty(m / 2 + 1));
            }
            if m == 3 {
                v.extend(["petersen", "heawood", "mobius-kantor"].map(Named));
            }
            if m % 2 == 0 {
                v.extend(
                    (m + 2..)
                        .filter(|&p| is_prime_number(p) && (p - 1) % m == 0)
                        .take(POOL_CAP)
                        .map(|p| SubgroupCirculant { p, m }),
                );
            }
            v
        }
        ([], &[m]) => {
            let mut v = vec![Bouwer { m, k: 6, n: 9 }, Bouwer { m, k: 12, n: 9 }, Bouwer { m, k: 11, n: 23 }];
            if m == 2 {
                v.push(Named("holt"));
            }
            v
        }
        (&[m, 1], []) if m >= 2 => [6, 8, 10].map(|n| ThickenedCycle { n, m }).to_vec(),
        (&[m], [1]) if m >= 2 => vec![Fig3Cover { big: false, m }],
        ([1], [1]) => {
            let mut v = vec![Named("fig3-20")];
            v.extend(cons::LCF_PAIR_PARAMS.iter().map(|&(m, k)| LcfPair { m, k }));
            v
        }
        ([1], &[m]) => vec![Fig3Cover { big: true, m }],
        ([], [1, 1]) => (7..)
            .filter(|&p| is_prime_number(p) && p % 6 == 1)
            .take(POOL_CAP)
            .map(|p| SemidirectGrr(p as u64))
            .collect(),
        ([], &[m, 1]) => vec![Grr42Cover(m)],
        ([1, 1, 1], []) => {
            let mut v = vec![Named("fig2-18")];
            v.extend((0..POOL_CAP).map(|i| DihedralGrr(11 + 2 * i)));
            v
        }
        ([1, 1, 1, 1], []) => vec![Named("fig10-16")],
        ([1, 1], [1]) => vec![Named("fig9-20")],
        ([], [1, 1, 1]) => vec![Named("grr24")],
        _ => Vec::new(),
    }
}

/// One factor of a planned product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub spec: BlockSpec,
    pub arc_type: MarkedPartition,
}

/// A plan for realising a marked partition as a Cartesian product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Blueprint {
    /// Factors in product order.
    pub blocks: Vec<Block>,
    pub expected: MarkedPartition,
    /// Which branch of the case analysis produced the plan.
    pub case_trace: String,
}

impl Blueprint {
    pub fn vertex_count(&self) -> usize {
        self.blocks.iter().map(|b| b.spec.vertex_count()).product()
    }

    /// Sum of the block arc-types.
    pub fn block_sum(&self) -> MarkedPartition {
        self.blocks
            .iter()
            .fold(MarkedPartition::empty(), |acc, b| acc.sum(&b.arc_type))
    }
}

fn mp(plain: Vec<usize>, bracketed: Vec<usize>) -> MarkedPartition {
    MarkedPartition::new(plain, bracketed).expect("planner only emits positive parts")
}

fn plain1(n: usize) -> MarkedPartition {
    mp(vec![n], vec![])
}

fn units(k: usize) -> MarkedPartition {
    mp(vec![1; k], vec![])
}

fn pairs(l: usize) -> MarkedPartition {
    mp(vec![], vec![1; l])
}

/// Plain-only case. `n` is sorted descending and non-empty.
fn plan_plain(n: &[usize], trace: &mut Vec<String>) -> Option<Vec<MarkedPartition>> {
    let t = n.len();
    let k = n.iter().filter(|&&x| x == 1).count();
    let big = &n[..t - k];
    trace.push(format!("A(k={k}, t={t})"));
    let mut out: Vec<MarkedPartition> = Vec::new();
    match k {
        0 => out.extend(big.iter().map(|&x| plain1(x))),
        1 if t == 1 => out.push(units(1)),
        1 => {
            out.extend(big[..t - 2].iter().map(|&x| plain1(x)));
            out.push(mp(vec![big[t - 2], 1], vec![]));
        }
        2 if t == 2 => return None,
        2 => {
            out.extend(big[..t - 3].iter().map(|&x| plain1(x)));
            out.push(mp(vec![big[t - 3], 1], vec![]));
            out.push(units(1));
        }
        _ => {
            out.extend(big.iter().map(|&x| plain1(x)));
            let triples = match k % 3 {
                0 => k / 3,
                1 => {
                    out.push(units(4));
                    (k - 4) / 3
                }
                _ => {
                    out.push(units(1));
                    out.push(units(4));
                    (k - 5) / 3
                }
            };
            out.extend(std::iter::repeat_n(units(3), triples));
        }
    }
    Some(out)
}

/// Bracketed-only case. `m` is sorted descending and non-empty.
fn plan_bracketed(m: &[usize], trace: &mut Vec<String>) -> Option<Vec<MarkedPartition>> {
    let s = m.len();
    let l = m.iter().filter(|&&x| x == 1).count();
    let big = &m[..s - l];
    trace.push(format!("B(l={l}, s={s})"));
    let half = |x: usize| mp(vec![], vec![x]);
    let mut out: Vec<MarkedPartition> = Vec::new();
    match l {
        0 => out.extend(big.iter().map(|&x| half(x))),
        1 if s == 1 => return None,
        1 => {
            out.extend(big[..s - 2].iter().map(|&x| half(x)));
            out.push(mp(vec![], vec![big[s - 2], 1]));
        }
        _ => {
            out.extend(big.iter().map(|&x| half(x)));
            let doubles = if l % 2 == 0 {
                l / 2
            } else {
                out.push(pairs(3));
                (l - 3) / 2
            };
            out.extend(std::iter::repeat_n(pairs(2), doubles));
        }
    }
    Some(out)
}

fn plan_mixed(n: &[usize], m: &[usize], trace: &mut Vec<String>) -> Option<Vec<MarkedPartition>> {
    let t = n.len();
    let k = n.iter().filter(|&&x| x == 1).count();
    let s = m.len();
    let l = m.iter().filter(|&&x| x == 1).count();
    // sub-plans append their own labels; the case label goes in front
    let at = trace.len();
    if n == [1] {
        trace.insert(at, "C(plain part 1: K2 x bracketed plan)".into());
        let mut out = vec![units(1)];
        out.extend(plan_bracketed(m, trace)?);
        return Some(out);
    }
    if n == [1, 1] {
        if l < s {
            let b = plan_bracketed(m, trace)?;
            let target = mp(vec![], vec![m[0]]);
            let with_unit = mp(vec![1], vec![m[0]]);
            if let Some(i) = b.iter().position(|x| *x == target) {
                trace.insert(at, "C(plain part 1+1, l<s: widen first half-arc block, add K2)".into());
                let mut out = b;
                out[i] = with_unit;
                out.push(units(1));
                return Some(out);
            }
            trace.insert(at, "C(plain part 1+1, l<s, no single half-arc block)".into());
            return Some(vec![with_unit, mp(vec![1], vec![1])]);
        }
        return match s {
            1 => None,
            2 => {
                trace.insert(at, "C(plain part 1+1, l=s=2)".into());
                Some(vec![mp(vec![1], vec![1]), mp(vec![1], vec![1])])
            }
            _ => {
                trace.insert(at, format!("C(plain part 1+1, l=s={s})"));
                let mut out = vec![mp(vec![1, 1], vec![1])];
                out.extend(plan_bracketed(&m[1..], trace)?);
                Some(out)
            }
        };
    }
    if m == [1] {
        if k < t {
            let a = plan_plain(n, trace)?;
            let with_pair = mp(vec![n[0]], vec![1]);
            if let Some(i) = a.iter().position(|x| *x == plain1(n[0])) {
                trace.insert(at, "C(bracketed part (1+1), k<t: widen first arc-transitive block)".into());
                let mut out = a;
                out[i] = with_pair;
                return Some(out);
            }
            return match (k, t) {
                (1, 2) => {
                    trace.insert(at, "C(bracketed part (1+1), k=1, t=2)".into());
                    Some(vec![with_pair, units(1)])
                }
                (2, 3) => {
                    trace.insert(at, "C(bracketed part (1+1), k=2, t=3)".into());
                    Some(vec![mp(vec![n[0], 1], vec![]), mp(vec![1], vec![1])])
                }
                _ => None,
            };
        }
        return match t {
            3 => {
                trace.insert(at, "C(bracketed part (1+1), k=t=3)".into());
                Some(vec![units(1), mp(vec![1, 1], vec![1])])
            }
            t if t >= 4 => {
                trace.insert(at, format!("C(bracketed part (1+1), k=t={t})"));
                let mut out = vec![mp(vec![1], vec![1])];
                out.extend(plan_plain(&n[1..], trace)?);
                Some(out)
            }
            _ => None,
        };
    }
    trace.insert(at, "C(plain plan x bracketed plan)".into());
    let mut out = plan_plain(n, trace)?;
    out.extend(plan_bracketed(m, trace)?);
    Some(out)
}

/// Block arc-types for `p`, before pool members are assigned.
fn block_types(p: &MarkedPartition) -> (Option<Vec<MarkedPartition>>, String) {
    let mut trace = Vec::new();
    let types = match (p.plain().is_empty(), p.bracketed().is_empty()) {
        (false, true) => plan_plain(p.plain(), &mut trace),
        (true, false) => plan_bracketed(p.bracketed(), &mut trace),
        _ => plan_mixed(p.plain(), p.bracketed(), &mut trace),
    };
    (types, trace.join("; "))
}

/// Plans a product of prime blocks whose arc-types sum to `p`.
pub fn plan(p: &MarkedPartition) -> Result<Blueprint> {
    if !p.is_realisable() {
        return Err(Error::NotRealisable(p.to_string()));
    }
    let (types, mut trace) = block_types(p);
    let types = match types {
        Some(t) => t,
        None if !pool(p).is_empty() => {
            trace.push_str("; single building block");
            vec![p.clone()]
        }
        None => return Err(Error::Verification(format!("no decomposition found for {p}"))),
    };
    let mut needed: BTreeMap<MarkedPartition, usize> = BTreeMap::new();
    for t in &types {
        *needed.entry(t.clone()).or_default() += 1;
    }
    let mut pools: HashMap<MarkedPartition, (Vec<BlockSpec>, usize)> = HashMap::new();
    let mut blocks = Vec::with_capacity(types.len());
    for t in types {
        let (list, used) = pools.entry(t.clone()).or_insert_with(|| (pool(&t), 0));
        let spec = list.get(*used).cloned().ok_or_else(|| Error::PoolExhausted {
            kind: t.to_string(),
            needed: needed[&t],
            available: list.len(),
        })?;
        *used += 1;
        blocks.push(Block { spec, arc_type: t });
    }
    let bp = Blueprint {
        blocks,
        expected: p.clone(),
        case_trace: trace,
    };
    debug_assert_eq!(bp.block_sum(), *p);
    Ok(bp)
}

/// How thoroughly a realisation is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VerifyMode {
    /// Direct when the product is small enough, compositional otherwise.
    #[default]
    Auto,
    Direct,
    Compositional,
    Off,
}

impl std::str::FromStr for VerifyMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<VerifyMode> {
        match s {
            "auto" => Ok(VerifyMode::Auto),
            "direct" => Ok(VerifyMode::Direct),
            "compositional" => Ok(VerifyMode::Compositional),
            "off" => Ok(VerifyMode::Off),
            _ => Err(Error::InvalidSpec(format!("unknown verification mode `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct RealizeConfig {
    pub aut: AutConfig,
    /// Largest graph whose automorphism group is computed in full.
    pub verify_max_vertices: usize,
    pub mode: VerifyMode,
}

impl Default for RealizeConfig {
    fn default() -> Self {
        RealizeConfig {
            aut: AutConfig::default(),
            verify_max_vertices: 1500,
            mode: VerifyMode::Auto,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateMode {
    Direct,
    Compositional,
    /// Some block was too large to check and is accepted on published results.
    Literature,
    Unverified,
}

impl fmt::Display for CertificateMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertificateMode::Direct => "direct",
            CertificateMode::Compositional => "compositional",
            CertificateMode::Literature => "literature",
            CertificateMode::Unverified => "unverified",
        })
    }
}

/// What was established about one block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockRecord {
    pub spec: String,
    pub expected: MarkedPartition,
    pub vertices: usize,
    /// `None` when the block exceeded the verification budget.
    pub verified_arc_type: Option<MarkedPartition>,
    pub prime: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub mode: CertificateMode,
    /// Arc-type computed on the whole graph (direct mode only).
    pub verified_arc_type: Option<MarkedPartition>,
    pub blocks: Vec<BlockRecord>,
    /// Pairwise non-isomorphism of blocks (compositional mode).
    pub blocks_pairwise_distinct: Option<bool>,
    pub vertex_count: usize,
}

#[derive(Debug, Clone)]
pub struct Realization {
    pub graph: Graph,
    pub blueprint: Blueprint,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct BlockFacts {
    arc_type: MarkedPartition,
    prime: bool,
}

fn block_cache() -> &'static Mutex<HashMap<Graph, BlockFacts>> {
    static CACHE: OnceLock<Mutex<HashMap<Graph, BlockFacts>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Arc-type and primality of a block, memoised by canonical form.
fn block_facts(g: &Graph, config: &AutConfig) -> Result<(Graph, BlockFacts)> {
    let canon = canonical_form_with(g, config)?;
    if let Some(f) = block_cache().lock().unwrap().get(&canon) {
        return Ok((canon, f.clone()));
    }
    let facts = BlockFacts {
        arc_type: arc_type_with(g, config)?,
        prime: factor_prime(g)?.is_prime(),
    };
    block_cache().lock().unwrap().insert(canon.clone(), facts.clone());
    Ok((canon, facts))
}

/// Checks `g` against `p`. Direct mode computes the arc-type of `g` itself;
/// compositional mode needs the blueprint and checks each block instead.
pub fn verify(
    g: &Graph,
    p: &MarkedPartition,
    mode: VerifyMode,
    blueprint: Option<&Blueprint>,
    config: &RealizeConfig,
) -> Result<Certificate> {
    let mode = match mode {
        VerifyMode::Auto if g.n() <= config.verify_max_vertices => VerifyMode::Direct,
        VerifyMode::Auto => VerifyMode::Compositional,
        m => m,
    };
    let unverified_blocks = || -> Vec<BlockRecord> {
        blueprint
            .map(|bp| {
                bp.blocks
                    .iter()
                    .map(|b| BlockRecord {
                        spec: b.spec.to_string(),
                        expected: b.arc_type.clone(),
                        vertices: b.spec.vertex_count(),
                        verified_arc_type: None,
                        prime: false,
                    })
                    .collect()
            })
            .unwrap_or_default()
    };
    match mode {
        VerifyMode::Off => Ok(Certificate {
            mode: CertificateMode::Unverified,
            verified_arc_type: None,
            blocks: unverified_blocks(),
            blocks_pairwise_distinct: None,
            vertex_count: g.n(),
        }),
        VerifyMode::Direct => {
            let computed = arc_type_with(g, &config.aut)?;
            if computed != *p {
                return Err(Error::Mismatch {
                    expected: p.to_string(),
                    computed: computed.to_string(),
                });
            }
            Ok(Certificate {
                mode: CertificateMode::Direct,
                verified_arc_type: Some(computed),
                blocks: unverified_blocks(),
                blocks_pairwise_distinct: None,
                vertex_count: g.n(),
            })
        }
        _ => {
            let bp = blueprint.ok_or_else(|| {
                Error::Verification("compositional verification needs the blueprint".into())
            })?;
            verify_compositional(g, p, bp, config)
        }
    }
}

fn verify_compositional(g: &Graph, p: &MarkedPartition, bp: &Blueprint, config: &RealizeConfig) -> Result<Certificate> {
    if bp.block_sum() != *p {
        return Err(Error::Mismatch {
            expected: p.to_string(),
            computed: bp.block_sum().to_string(),
        });
    }
    let graphs = bp
        .blocks
        .iter()
        .map(|b| b.spec.build())
        .collect::<Result<Vec<_>>>()?;
    if cons::cartesian(&graphs) != *g {
        return Err(Error::Verification("graph is not the product of the blueprint blocks".into()));
    }
    let results: Vec<Result<(BlockRecord, Option<Graph>)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = bp
            .blocks
            .iter()
            .zip(&graphs)
            .map(|(b, h)| scope.spawn(move || check_block(b, h, config)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("block check panicked")).collect()
    });
    let mut records = Vec::with_capacity(results.len());
    let mut canon = Vec::with_capacity(results.len());
    for r in results {
        let (rec, c) = r?;
        records.push(rec);
        canon.push(c);
    }
    let mut distinct = true;
    for i in 0..records.len() {
        for j in i + 1..records.len() {
            if records[i].expected == records[j].expected {
                distinct &= match (&canon[i], &canon[j]) {
                    (Some(a), Some(b)) => a != b,
                    // a literature block and another block: distinct pool entries
                    _ => bp.blocks[i].spec != bp.blocks[j].spec && graphs[i] != graphs[j],
                };
            }
        }
    }
    if !distinct {
        return Err(Error::Verification("two blocks are isomorphic".into()));
    }
    let literature = records.iter().any(|r| r.verified_arc_type.is_none());
    Ok(Certificate {
        mode: if literature {
            CertificateMode::Literature
        } else {
            CertificateMode::Compositional
        },
        verified_arc_type: None,
        blocks: records,
        blocks_pairwise_distinct: Some(true),
        vertex_count: g.n(),
    })
}

fn check_block(b: &Block, h: &Graph, config: &RealizeConfig) -> Result<(BlockRecord, Option<Graph>)> {
    let mut rec = BlockRecord {
        spec: b.spec.to_string(),
        expected: b.arc_type.clone(),
        vertices: h.n(),
        verified_arc_type: None,
        prime: false,
    };
    if h.n() > config.verify_max_vertices {
        rec.prime = factor_prime(h)?.is_prime();
        if !rec.prime {
            return Err(Error::Verification(format!("block {} is not prime", rec.spec)));
        }
        return Ok((rec, None));
    }
    let (canon, facts) = block_facts(h, &config.aut)?;
    if facts.arc_type != b.arc_type {
        return Err(Error::Mismatch {
            expected: b.arc_type.to_string(),
            computed: facts.arc_type.to_string(),
        });
    }
    if !facts.prime {
        return Err(Error::Verification(format!("block {} is not prime", rec.spec)));
    }
    rec.verified_arc_type = Some(facts.arc_type);
    rec.prime = true;
    Ok((rec, Some(canon)))
}

/// Plans, builds and certifies a graph with arc-type `p`.
pub fn realize(p: &MarkedPartition, config: &RealizeConfig) -> Result<Realization> {
    let blueprint = plan(p)?;
    let graphs = blueprint
        .blocks
        .iter()
        .map(|b| b.spec.build())
        .collect::<Result<Vec<_>>>()?;
    let graph = cons::cartesian(&graphs);
    let certificate = verify(&graph, p, config.mode, Some(&blueprint), config)?;
    Ok(Realization {
        graph,
        blueprint,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn types(s: &str) -> Vec<String> {
        plan(&s.parse().unwrap())
            .unwrap()
            .blocks
            .iter()
            .map(|b| b.arc_type.to_string())
            .collect()
    }

    #[test]
    fn plain_dispatch() {
        assert_eq!(types("5"), ["5"]);
        assert_eq!(types("3+1"), ["3+1"]);
        assert_eq!(types("3+2+1"), ["3", "2+1"]);
        assert_eq!(types("3+1+1"), ["3+1", "1"]);
        assert_eq!(types("2+1+1+1"), ["2", "1+1+1"]);
        assert_eq!(types("1+1+1+1+1"), ["1", "1+1+1+1"]);
        assert_eq!(types("1+1+1+1+1+1+1"), ["1+1+1+1", "1+1+1"]);
    }

    #[test]
    fn bracketed_dispatch() {
        assert_eq!(types("(2+2)"), ["(2+2)"]);
        assert_eq!(types("(2+2)+(1+1)"), ["(2+2)+(1+1)"]);
        assert_eq!(types("(3+3)+(2+2)+(1+1)"), ["(3+3)", "(2+2)+(1+1)"]);
        assert_eq!(types("(1+1)+(1+1)+(1+1)+(1+1)+(1+1)"), ["(1+1)+(1+1)+(1+1)", "(1+1)+(1+1)"]);
    }

    #[test]
    fn mixed_dispatch() {
        assert_eq!(types("1+(2+2)"), ["1", "(2+2)"]);
        assert_eq!(types("1+1+(2+2)+(1+1)"), ["1+(2+2)", "1+(1+1)"]);
        assert_eq!(types("1+1+(1+1)+(1+1)"), ["1+(1+1)", "1+(1+1)"]);
        assert_eq!(types("1+1+(1+1)+(1+1)+(1+1)"), ["1+1+(1+1)", "(1+1)+(1+1)"]);
        assert_eq!(types("3+(1+1)"), ["3+(1+1)"]);
        assert_eq!(types("2+1+(1+1)"), ["2+(1+1)", "1"]);
        assert_eq!(types("2+1+1+(1+1)"), ["2+1", "1+(1+1)"]);
        assert_eq!(types("1+1+1+(1+1)"), ["1", "1+1+(1+1)"]);
        assert_eq!(types("1+1+1+1+(1+1)"), ["1+(1+1)", "1+1+1"]);
        assert_eq!(types("1+(1+1)"), ["1+(1+1)"]);
        assert_eq!(types("3+2+(2+2)"), ["3", "2", "(2+2)"]);
    }

    #[test]
    fn pools_hand_out_distinct_members() {
        let bp = plan(&"1+1+(1+1)+(1+1)".parse().unwrap()).unwrap();
        assert_ne!(bp.blocks[0].spec, bp.blocks[1].spec);
        let bp = plan(&"3+3+3".parse().unwrap()).unwrap();
        assert_eq!(bp.blocks.len(), 3);
    }

    #[test]
    fn unrealisable_and_exhausted() {
        assert!(matches!(plan(&"1+1".parse().unwrap()), Err(Error::NotRealisable(_))));
        assert!(matches!(plan(&"(1+1)".parse().unwrap()), Err(Error::NotRealisable(_))));
        let err = plan(&"(2+2)+(2+2)+(2+2)+(2+2)+(2+2)".parse().unwrap()).unwrap_err();
        assert_eq!(
            err,
            Error::PoolExhausted {
                kind: "(2+2)".into(),
                needed: 5,
                available: 4
            }
        );
    }

    #[test]
    fn realize_small() {
        let cfg = RealizeConfig::default();
        let r = realize(&"2".parse().unwrap(), &cfg).unwrap();
        assert_eq!(r.graph.n(), 5);
        assert_eq!(r.certificate.mode, CertificateMode::Direct);
        let r = realize(&"3+2".parse().unwrap(), &cfg).unwrap();
        assert_eq!(r.graph.n(), 20);
    }

    #[test]
    fn direct_mismatch() {
        let k4 = cons::complete(4);
        let cfg = RealizeConfig::default();
        verify(&k4, &"3".parse().unwrap(), VerifyMode::Direct, None, &cfg).unwrap();
        assert_eq!(
            verify(&k4, &"2+1".parse().unwrap(), VerifyMode::Direct, None, &cfg).unwrap_err(),
            Error::Mismatch {
                expected: "2+1".into(),
                computed: "3".into()
            }
        );
    }
}
