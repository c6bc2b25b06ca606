//! Text syntax for graph families, as accepted by `construct`.
//!
//! ```text
//! cycle:n  complete:n  bipartite:a:b  circulant:n:s1,s2,...  lcf:[...]^r
//! cayley:<group>:<word>,<word>,...   bouwer:m:k:n   named:<id>
//! thickened:<file>:<u>-<v>:m         cartesian:<file>,<file>,...
//! ```
//!
//! Cayley connection sets are closed under inverses. In `thickened`, `F` is
//! the automorphism-orbit of the edge `{u, v}` of the graph read from `<file>`.

use crate::automorphism::AutConfig;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::{builtin_group, GroupDescriptor};

use super::cayley::{cayley_words_symmetric, circulant};
use super::cover::{edge_orbit, thickened_cover};
use super::families::{bouwer, complete, complete_bipartite, cycle, lcf};
use super::product::cartesian;
use super::registry::named;

fn bad(spec: &str, why: &str) -> Error {
    Error::InvalidSpec(format!("`{spec}`: {why}"))
}

fn number<T: std::str::FromStr>(spec: &str, s: &str) -> Result<T> {
    s.trim().parse().map_err(|_| bad(spec, &format!("`{s}` is not a valid number")))
}

/// Builds the graph described by `spec`. `load` reads graphs referenced by
/// file name (for `thickened` and `cartesian`).
pub fn build_family(
    spec: &str,
    load: &mut dyn FnMut(&str) -> Result<Graph>,
    config: &AutConfig,
) -> Result<Graph> {
    let (kind, rest) = spec.split_once(':').ok_or_else(|| bad(spec, "expected <family>:<arguments>"))?;
    let args: Vec<&str> = rest.split(':').collect();
    let want = |k: usize| -> Result<()> {
        if args.len() == k {
            Ok(())
        } else {
            Err(bad(spec, &format!("expected {k} argument(s)")))
        }
    };
    match kind {
        "cycle" => {
            want(1)?;
            let n: usize = number(spec, args[0])?;
            if n < 3 {
                return Err(bad(spec, "cycles need at least 3 vertices"));
            }
            Ok(cycle(n))
        }
        "complete" => {
            want(1)?;
            Ok(complete(number(spec, args[0])?))
        }
        "bipartite" => {
            want(2)?;
            Ok(complete_bipartite(number(spec, args[0])?, number(spec, args[1])?))
        }
        "circulant" => {
            want(2)?;
            let s = args[1]
                .split(',')
                .map(|x| number(spec, x))
                .collect::<Result<Vec<i64>>>()?;
            circulant(number(spec, args[0])?, &s)
        }
        "lcf" => lcf(rest),
        "cayley" => {
            let (desc, used) = GroupDescriptor::parse_prefix(&args)?;
            if args.len() != used + 1 {
                return Err(bad(spec, "expected cayley:<group>:<word>,<word>,..."));
            }
            let group = builtin_group(desc)?;
            let words: Vec<&str> = args[used].split(',').map(str::trim).collect();
            cayley_words_symmetric(&group, &words)
        }
        "bouwer" => {
            want(3)?;
            bouwer(number(spec, args[0])?, number(spec, args[1])?, number(spec, args[2])?)
        }
        "named" => named(rest),
        "thickened" => {
            let mut parts = rest.rsplitn(3, ':');
            let m = parts.next().ok_or_else(|| bad(spec, "missing multiplicity"))?;
            let edge = parts.next().ok_or_else(|| bad(spec, "missing edge <u>-<v>"))?;
            let file = parts.next().ok_or_else(|| bad(spec, "missing base graph file"))?;
            let (u, v) = edge.split_once('-').ok_or_else(|| bad(spec, "edge must be written <u>-<v>"))?;
            let (u, v): (usize, usize) = (number(spec, u)?, number(spec, v)?);
            let base = load(file)?;
            let f = edge_orbit(&base, u, v, config)?;
            thickened_cover(&base, &f, number(spec, m)?)
        }
        "cartesian" => {
            let factors = rest
                .split(',')
                .map(|f| load(f.trim()))
                .collect::<Result<Vec<Graph>>>()?;
            Ok(cartesian(&factors))
        }
        _ => Err(bad(spec, &format!("unknown family `{kind}`"))),
    }
}
