//! Deterministic generators for the named graph families and constructions,
//! plus the two seeded random models.
//!
//! Vertex numbering is fixed per family so goldens stay stable; each
//! generator documents its layout.

mod rng;
mod spec;

pub use rng::SeededRng;
pub use spec::{parse_graph_arg, Family, FamilySpec, GraphSource};

use crate::error::{param, Error, Result};
use crate::graph::{distances, Graph};

/// `K_a` on `0..a` with a path on `a..a+b` whose first vertex `a` is joined
/// to clique vertex 0. `lollipop(a, 0) = K_a`.
pub fn lollipop(a: usize, b: usize) -> Result<Graph> {
    if a < 3 {
        return Err(param(format!("lollipop needs a >= 3, got {a}")));
    }
    let mut g = Graph::complete(a).disjoint_union(&Graph::path(b));
    if b > 0 {
        g.add_edge(0, a);
    }
    Ok(g)
}

/// Star `K_{1,a-1}` with centre 0 and leaves `1..a`, plus a path on
/// `a..a+b` whose first vertex is joined to the centre.
pub fn sparkler(a: usize, b: usize) -> Result<Graph> {
    if a < 2 {
        return Err(param(format!("sparkler needs a >= 2, got {a}")));
    }
    let mut g = Graph::star(a - 1).disjoint_union(&Graph::path(b));
    if b > 0 {
        g.add_edge(0, a);
    }
    Ok(g)
}

/// `K_a` on `0..a` with `b` pendant vertices `a..a+b` attached to vertex 0.
pub fn jellyfish(a: usize, b: usize) -> Result<Graph> {
    if a < 2 {
        return Err(param(format!("jellyfish needs a >= 2, got {a}")));
    }
    let mut g = Graph::complete(a).disjoint_union(&Graph::empty(b));
    for v in a..a + b {
        g.add_edge(0, v);
    }
    Ok(g)
}

/// `K_{1,s}` with every edge subdivided into a path with `t` edges. Centre 0;
/// branch `i` is `1 + i*t .. 1 + (i+1)*t`, listed outward.
pub fn megastar(s: usize, t: usize) -> Result<Graph> {
    if s < 1 || t < 1 {
        return Err(param(format!("megastar needs s, t >= 1, got ({s}, {t})")));
    }
    let mut g = Graph::empty(s * t + 1);
    for i in 0..s {
        let base = 1 + i * t;
        g.add_edge(0, base);
        for j in 1..t {
            g.add_edge(base + j - 1, base + j);
        }
    }
    Ok(g)
}

/// Complete `a`-partite graph with parts of size `n`; vertex `v` lies in
/// part `v / n`.
pub fn complete_multipartite(a: usize, n: usize) -> Result<Graph> {
    if a < 1 || n < 1 {
        return Err(param(format!(
            "complete_multipartite needs a, n >= 1, got ({a}, {n})"
        )));
    }
    let mut g = Graph::empty(a * n);
    for u in 0..a * n {
        for v in u + 1..a * n {
            if u / n != v / n {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Tree with centre 0 of degree `k`, every other internal vertex of degree
/// `k`, all leaves at depth `r`. Vertices are numbered in BFS order.
pub fn uniform_tree(k: usize, r: usize) -> Result<Graph> {
    if k < 2 || r < 1 {
        return Err(param(format!(
            "uniform_tree needs k >= 2, r >= 1, got ({k}, {r})"
        )));
    }
    let mut edges = Vec::new();
    let mut level = vec![0usize];
    let mut next_id = 1;
    for depth in 0..r {
        let children = if depth == 0 { k } else { k - 1 };
        let mut next = Vec::with_capacity(level.len() * children);
        for &p in &level {
            for _ in 0..children {
                edges.push((p, next_id));
                next.push(next_id);
                next_id += 1;
            }
        }
        level = next;
    }
    Graph::from_edges(next_id, &edges)
}

/// Every edge becomes a path with `l` new internal vertices. Original
/// vertices keep their labels; the internal vertices of the `e`-th edge (in
/// sorted edge order) are `n + e*l .. n + (e+1)*l`, listed from the smaller
/// endpoint.
pub fn subdivide_edges(g: &Graph, l: usize) -> Graph {
    let n = g.n();
    let edges = g.edges();
    let mut out = Graph::empty(n + l * edges.len());
    for (e, &(u, v)) in edges.iter().enumerate() {
        let mut prev = u;
        for j in 0..l {
            let x = n + e * l + j;
            out.add_edge(prev, x);
            prev = x;
        }
        out.add_edge(prev, v);
    }
    out
}

pub fn hypercube(d: usize) -> Result<Graph> {
    if !(1..=10).contains(&d) {
        return Err(param(format!(
            "hypercube dimension must be in 1..=10, got {d}"
        )));
    }
    let n = 1usize << d;
    let mut g = Graph::empty(n);
    for v in 0..n {
        for b in 0..d {
            let w = v ^ (1 << b);
            if v < w {
                g.add_edge(v, w);
            }
        }
    }
    Ok(g)
}

/// The `l`-uniform tree of radius `l` merged with `subdivide_edges(b, l)` by
/// identifying the last tree leaf with the first subdivision vertex.
///
/// Tree vertices come first (centre 0), then the vertices of the subdivided
/// graph in their own order with the merged vertex removed.
pub fn gadget_a(l: usize, b: &Graph) -> Result<Graph> {
    if l < 3 {
        return Err(param(format!("gadget_A needs l >= 3, got {l}")));
    }
    if b.n() == 0 || !b.is_regular(3) || !b.is_connected() {
        return Err(param("gadget_A needs a connected cubic base graph"));
    }
    let tree = uniform_tree(l, l)?;
    let sub = subdivide_edges(b, l);
    let t = tree.n();
    let merged = b.n();
    let map = |x: usize| {
        if x == merged {
            t - 1
        } else if x < merged {
            t + x
        } else {
            t + x - 1
        }
    };
    let mut g = tree.disjoint_union(&Graph::empty(sub.n() - 1));
    for (x, y) in sub.edges() {
        g.add_edge(map(x), map(y));
    }
    Ok(g)
}

/// `K_{l0}` with a copy of `a` hung on each clique vertex, the clique vertex
/// playing the role of `center`. Clique vertices are `0..l0`; copy `i` holds
/// the other vertices of `a` (in order) at `l0 + i*(v(a)-1) ..`.
pub fn clique_gadget(l0: usize, a: &Graph, center: usize) -> Result<Graph> {
    if l0 < 2 {
        return Err(param(format!("clique_gadget needs l0 >= 2, got {l0}")));
    }
    if center >= a.n() {
        return Err(param(format!(
            "center {center} out of range for a graph on {} vertices",
            a.n()
        )));
    }
    let rest = a.n() - 1;
    let mut g = Graph::complete(l0).disjoint_union(&Graph::empty(l0 * rest));
    for i in 0..l0 {
        let map = |x: usize| {
            if x == center {
                i
            } else if x < center {
                l0 + i * rest + x
            } else {
                l0 + i * rest + x - 1
            }
        };
        for (x, y) in a.edges() {
            g.add_edge(map(x), map(y));
        }
    }
    Ok(g)
}

/// Each edge `uw` of `b` is replaced by `u - a_copy ... abar_copy - w`, where
/// the copy of `factor` is attached through the antipodal pair `(a, abar)`.
/// Vertices of `b` keep their labels; the copy for the `e`-th edge (sorted
/// order) occupies `v(b) + e*v(factor) ..`.
pub fn antipodal_product(b: &Graph, factor: &Graph, a: usize, abar: usize) -> Result<Graph> {
    let m = factor.n();
    if m < 2 || a >= m || abar >= m {
        return Err(param(
            "antipodal_product needs a factor with at least 2 vertices and a, abar in range",
        ));
    }
    let d = distances(factor);
    let Some(ecc) = d.eccentricity(a) else {
        return Err(Error::Precondition(
            "antipodal_product factor must be connected".into(),
        ));
    };
    let far: Vec<usize> = (0..m).filter(|&v| d.get(a, v) == Some(ecc)).collect();
    if far != [abar] {
        return Err(Error::Precondition(format!(
            "{abar} is not the unique vertex at maximum distance from {a} (farthest: {far:?})"
        )));
    }
    let edges = b.edges();
    let n = b.n();
    let mut g = Graph::empty(n + edges.len() * m);
    for (e, &(u, w)) in edges.iter().enumerate() {
        let base = n + e * m;
        for (x, y) in factor.edges() {
            g.add_edge(base + x, base + y);
        }
        g.add_edge(u, base + a);
        g.add_edge(base + abar, w);
    }
    Ok(g)
}

pub const REGULAR_REJECTION_BUDGET: usize = 1_000_000;

/// Configuration model with rejection of loops and multi-edges.
///
/// Each attempt lists the `n*d` half-edges (`d` copies of each vertex in
/// order), shuffles them with [`SeededRng::shuffle`] and pairs positions
/// `2i, 2i+1`.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if d >= n.max(1) || !(n * d).is_multiple_of(2) {
        return Err(param(format!(
            "random_regular needs d < n and n*d even, got n={n}, d={d}"
        )));
    }
    let mut rng = SeededRng::new(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    'attempt: for _ in 0..REGULAR_REJECTION_BUDGET {
        stubs.sort_unstable();
        rng.shuffle(&mut stubs);
        let mut g = Graph::empty(n);
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || g.has_edge(u, v) {
                continue 'attempt;
            }
            g.add_edge(u, v);
        }
        return Ok(g);
    }
    Err(Error::Sampling(format!(
        "no simple {d}-regular graph on {n} vertices after {REGULAR_REJECTION_BUDGET} attempts"
    )))
}

/// `G(n, p)`: pairs `(u, v)`, `u < v`, in lexicographic order, each kept
/// when `unit() < p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(param(format!("gnp needs 0 <= p <= 1, got {p}")));
    }
    let mut rng = SeededRng::new(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.unit() < p {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// `G(n, n^-alpha)`.
pub fn gnp_alpha(n: usize, alpha: f64, seed: u64) -> Result<Graph> {
    gnp(n, (n as f64).powf(-alpha).min(1.0), seed)
}
