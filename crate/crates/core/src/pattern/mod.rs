//! Structural parameters of pattern graphs.

mod checks;
mod subgraph;
mod treewidth;

pub use checks::{check_large_degree_lemma, check_stell};
pub use subgraph::{contains_subgraph, find_subgraph, is_embedding};
pub use treewidth::{treewidth, treewidth_with_limit, TREEWIDTH_CEILING};

use crate::error::{Error, Result};
use crate::graph::Graph;
use num_rational::Ratio;
use serde::{Serialize, Serializer};

pub type Rational = Ratio<i64>;

pub const DENSITY_CEILING: usize = 20;

fn require_connected(f: &Graph, what: &str) -> Result<()> {
    if f.n() == 0 || !f.is_connected() {
        return Err(Error::Precondition(format!(
            "{what} needs a connected graph"
        )));
    }
    Ok(())
}

/// Longest pendant path `v0 v1 ... vt` (`deg v0 != 2`, `deg vt = 1`, interior
/// vertices of degree 2), measured in edges. A path graph `P_n` gives `n - 1`.
pub fn pendant_path(f: &Graph) -> Result<usize> {
    require_connected(f, "pendant_path")?;
    let mut best = 0;
    for end in (0..f.n()).filter(|&v| f.degree(v) == 1) {
        let (mut prev, mut cur, mut t) = (end, f.neighbors(end).next().unwrap(), 1);
        while f.degree(cur) == 2 {
            let next = f.neighbors(cur).find(|&w| w != prev).unwrap();
            (prev, cur, t) = (cur, next, t + 1);
        }
        best = best.max(t);
    }
    Ok(best)
}

/// Largest number of degree-1 vertices sharing a neighbour.
pub fn pendant_star(f: &Graph) -> Result<usize> {
    require_connected(f, "pendant_star")?;
    Ok((0..f.n())
        .map(|v| f.neighbors(v).filter(|&w| f.degree(w) == 1).count())
        .max()
        .unwrap_or(0))
}

/// What remains after repeatedly deleting vertices of degree at most one,
/// relabelled in increasing order of the original labels.
pub fn core(f: &Graph) -> Graph {
    let n = f.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| f.degree(v)).collect();
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for w in f.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    f.induced(&keep)
}

/// `max e(K)/v(K)` over non-empty subgraphs `K`, exactly.
pub fn max_density(f: &Graph) -> Result<Rational> {
    let n = f.n();
    if n > DENSITY_CEILING {
        return Err(Error::Resource(format!(
            "max_density is limited to {DENSITY_CEILING} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok(Rational::from_integer(0));
    }
    let rows: Vec<u32> = (0..n)
        .map(|v| f.neighbors(v).fold(0, |m, u| m | 1 << u))
        .collect();
    let mut edges = vec![0u16; 1 << n];
    let (mut be, mut bv) = (0i64, 1i64);
    for mask in 1u32..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let e = edges[rest as usize] + (rows[low] & rest).count_ones() as u16;
        edges[mask as usize] = e;
        let v = mask.count_ones() as i64;
        if e as i64 * bv > be * v {
            (be, bv) = (e as i64, v);
        }
    }
    Ok(Rational::new(be, bv))
}

/// `e/v + 2` when `e > v`, otherwise `None`.
pub fn density_lower_bound(f: &Graph) -> Option<Rational> {
    let (e, v) = (f.edge_count() as i64, f.n() as i64);
    (e > v).then(|| Rational::new(e, v) + 2)
}

fn ratio_string<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternProfile {
    pub v: usize,
    pub e: usize,
    /// Longest pendant path.
    pub p: usize,
    /// Largest pendant star.
    pub s: usize,
    pub core_size: usize,
    #[serde(serialize_with = "ratio_string")]
    pub rho: Rational,
    #[serde(serialize_with = "ratio_string")]
    pub rho_star: Rational,
    pub treewidth: usize,
}

/// All parameters of a connected pattern.
pub fn profile(f: &Graph) -> Result<PatternProfile> {
    Ok(PatternProfile {
        v: f.n(),
        e: f.edge_count(),
        p: pendant_path(f)?,
        s: pendant_star(f)?,
        core_size: core(f).n(),
        rho: Rational::new(f.edge_count() as i64, f.n() as i64),
        rho_star: max_density(f)?,
        treewidth: treewidth(f)?,
    })
}
