//! Non-induced subgraph containment by backtracking.
//!
//! Pattern vertices are matched in an order where each vertex after the
//! first of its component has as many already-placed neighbours as
//! possible (ties by degree, descending). Candidates are the intersection of
//! the host rows of the images of placed neighbours, minus used vertices.

use crate::bits;
use crate::graph::Graph;

fn match_order(f: &Graph) -> Vec<usize> {
    let n = f.n();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], f.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for w in f.neighbors(next) {
            links[w] += 1;
        }
    }
    order
}

struct Matcher<'a> {
    g: &'a Graph,
    f: &'a Graph,
    order: Vec<usize>,
    image: Vec<usize>,
    used: Vec<u64>,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        let w = self.g.words();
        let mut cand = bits::full(self.g.n());
        cand.resize(w, 0);
        for (c, u) in cand.iter_mut().zip(&self.used) {
            *c &= !u;
        }
        for &y in &self.order[..depth] {
            if self.f.has_edge(x, y) {
                for (c, r) in cand.iter_mut().zip(self.g.row(self.image[y])) {
                    *c &= r;
                }
            }
        }
        let need = self.f.degree(x);
        let options: Vec<usize> = bits::iter(&cand)
            .filter(|&v| self.g.degree(v) >= need)
            .collect();
        for v in options {
            self.image[x] = v;
            bits::set(&mut self.used, v);
            if self.extend(depth + 1) {
                return true;
            }
            bits::clear(&mut self.used, v);
        }
        false
    }
}

/// An injective edge-preserving map `V(f) -> V(g)`, if one exists.
/// `witness[x]` is the image of pattern vertex `x`.
pub fn find_subgraph(g: &Graph, f: &Graph) -> Option<Vec<usize>> {
    if f.n() > g.n() || f.edge_count() > g.edge_count() || f.max_degree() > g.max_degree() {
        return None;
    }
    let mut m = Matcher {
        g,
        f,
        order: match_order(f),
        image: vec![usize::MAX; f.n()],
        used: vec![0; g.words()],
    };
    m.extend(0).then_some(m.image)
}

pub fn contains_subgraph(g: &Graph, f: &Graph) -> bool {
    find_subgraph(g, f).is_some()
}

/// True iff `map` is an injective edge-preserving map from `f` into `g`.
pub fn is_embedding(g: &Graph, f: &Graph, map: &[usize]) -> bool {
    if map.len() != f.n() || map.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    map.iter().all(|v| seen.insert(*v))
        && f.edges().iter().all(|&(a, b)| g.has_edge(map[a], map[b]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{jellyfish, lollipop, sparkler};
    use crate::graph::enumerate_connected;

    fn injections(k: usize, n: usize) -> Vec<Vec<usize>> {
        fn go(k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for v in 0..n {
                if !cur.contains(&v) {
                    cur.push(v);
                    go(k, n, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(k, n, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn agrees_with_all_injections() {
        let patterns: Vec<Graph> = (1..=4)
            .flat_map(|n| enumerate_connected(n).unwrap())
            .collect();
        let hosts: Vec<Graph> = (1..=6)
            .flat_map(|n| enumerate_connected(n).unwrap())
            .collect();
        for f in &patterns {
            for g in &hosts {
                let brute = injections(f.n(), g.n())
                    .iter()
                    .any(|m| is_embedding(g, f, m));
                let found = find_subgraph(g, f);
                assert_eq!(found.is_some(), brute, "{f:?} in {g:?}");
                if let Some(m) = found {
                    assert!(is_embedding(g, f, &m));
                }
            }
        }
    }

    #[test]
    fn jellyfish_and_sparkler() {
        let s44 = sparkler(4, 4).unwrap();
        let w = find_subgraph(&jellyfish(5, 3).unwrap(), &s44).unwrap();
        assert!(is_embedding(&jellyfish(5, 3).unwrap(), &s44, &w));
        assert!(!contains_subgraph(&jellyfish(4, 10).unwrap(), &s44));
    }

    #[test]
    fn self_containment() {
        let g = Graph::petersen();
        let w = find_subgraph(&g, &g).unwrap();
        assert!(is_embedding(&g, &g, &w));
        assert!(contains_subgraph(&g, &Graph::empty(0)));
    }

    #[test]
    fn clique_numbers_of_lollipops_and_jellyfish() {
        for a in 3..=6 {
            for b in 0..=4 {
                let l = lollipop(a, b).unwrap();
                let j = jellyfish(a, b).unwrap();
                for h in [l, j] {
                    assert!(contains_subgraph(&h, &Graph::complete(a)));
                    assert!(!contains_subgraph(&h, &Graph::complete(a + 1)));
                }
            }
        }
    }
}
