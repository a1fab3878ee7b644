//! Canonical labelling by individualisation and refinement.
//!
//! The search tree is the usual one: refine an ordered partition to an
//! equitable one, individualise each vertex of the first non-singleton cell,
//! recurse. Every leaf is a vertex ordering; the canonical form is the
//! relabelled graph that is smallest in the `Graph` ordering. Automorphisms
//! discovered at leaves prune siblings in the same orbit of the pointwise
//! stabiliser of the current path, and a leaf equivalent to the first leaf
//! jumps back to the deepest common ancestor.

use super::Graph;
use crate::bits;

#[derive(Debug, Clone)]
pub struct CanonicalLabeling {
    /// The canonical representative.
    pub graph: Graph,
    /// `order[i]` is the original vertex placed at position `i`.
    pub order: Vec<usize>,
    /// Automorphisms found during the search, as vertex maps `v -> perm[v]`.
    /// They generate a subgroup of the automorphism group which is
    /// non-trivial whenever the full group is.
    pub automorphisms: Vec<Vec<usize>>,
}

type Cells = Vec<Vec<usize>>;

struct Leaf {
    order: Vec<usize>,
    graph: Graph,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<(Leaf, Vec<usize>)>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn refine(&self, cells: &mut Cells) {
        let w = self.g.words();
        let mut s = 0;
        while s < cells.len() {
            let mut mask = vec![0u64; w];
            for &v in &cells[s] {
                bits::set(&mut mask, v);
            }
            let mut next: Cells = Vec::with_capacity(cells.len() + 1);
            let mut split = false;
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let c = self
                            .g
                            .row(v)
                            .iter()
                            .zip(&mask)
                            .map(|(a, b)| (a & b).count_ones() as usize)
                            .sum();
                        (c, v)
                    })
                    .collect();
                keyed.sort_unstable();
                if keyed.first().map(|x| x.0) == keyed.last().map(|x| x.0) {
                    next.push(cell.clone());
                    continue;
                }
                split = true;
                let mut group = Vec::new();
                let mut key = keyed[0].0;
                for (c, v) in keyed {
                    if c != key {
                        next.push(std::mem::take(&mut group));
                        key = c;
                    }
                    group.push(v);
                }
                next.push(group);
            }
            *cells = next;
            s = if split { 0 } else { s + 1 };
        }
    }

    fn leaf(&mut self, cells: &Cells, path: &[usize]) -> Option<usize> {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let mut perm = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            perm[v] = i;
        }
        let graph = self.g.permuted(&perm);
        let Some((first, first_path)) = &self.first else {
            self.first = Some((
                Leaf {
                    order: order.clone(),
                    graph: graph.clone(),
                },
                path.to_vec(),
            ));
            self.best = Some(Leaf { order, graph });
            return None;
        };
        if graph == first.graph {
            self.autos.push(map_between(&first.order, &order));
            let common = first_path
                .iter()
                .zip(path)
                .take_while(|(a, b)| a == b)
                .count();
            return Some(common);
        }
        let best = self.best.as_mut().expect("best set with first");
        match graph.cmp(&best.graph) {
            std::cmp::Ordering::Equal => {
                self.autos.push(map_between(&best.order, &order));
            }
            std::cmp::Ordering::Less => *best = Leaf { order, graph },
            std::cmp::Ordering::Greater => {}
        }
        None
    }

    fn same_orbit(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for a in &self.autos {
            if path.iter().all(|&p| a[p] == p) {
                any = true;
                for (x, &ax) in a.iter().enumerate().take(n) {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, ax));
                    if rx != ry {
                        parent[rx] = ry;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&e| find(&mut parent, e) == rv)
    }

    fn search(&mut self, mut cells: Cells, path: &mut Vec<usize>) -> Option<usize> {
        self.refine(&mut cells);
        let depth = path.len();
        let Some(t) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells, path);
        };
        let cell = cells[t].clone();
        let mut explored = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.same_orbit(v, &explored, path) {
                continue;
            }
            let mut child = cells.clone();
            child[t] = vec![v];
            child.insert(t + 1, cell.iter().copied().filter(|&u| u != v).collect());
            path.push(v);
            let back = self.search(child, path);
            path.pop();
            explored.push(v);
            if let Some(level) = back {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }
}

/// The permutation sending `from[i]` to `to[i]`.
fn map_between(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut a = vec![0; from.len()];
    for (x, y) in from.iter().zip(to) {
        a[*x] = *y;
    }
    a
}

pub fn canonical_labeling(g: &Graph) -> CanonicalLabeling {
    if g.n() == 0 {
        return CanonicalLabeling {
            graph: g.clone(),
            order: Vec::new(),
            automorphisms: Vec::new(),
        };
    }
    let mut s = Search {
        g,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    s.search(vec![(0..g.n()).collect()], &mut Vec::new());
    let best = s.best.expect("search visits at least one leaf");
    CanonicalLabeling {
        graph: best.graph,
        order: best.order,
        automorphisms: s.autos,
    }
}

/// An isomorphism-invariant representative of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    canonical_labeling(g).graph
}

pub fn automorphisms_found(g: &Graph) -> Vec<Vec<usize>> {
    canonical_labeling(g).automorphisms
}

/// True iff the automorphism group of `g` is trivial.
pub fn is_rigid(g: &Graph) -> bool {
    canonical_labeling(g).automorphisms.is_empty()
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    canonical_form(g) == canonical_form(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_connected;

    fn is_automorphism(g: &Graph, a: &[usize]) -> bool {
        g.edges().iter().all(|&(u, v)| g.has_edge(a[u], a[v]))
    }

    #[test]
    fn relabelled_paths_agree() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&a), canonical_form(&Graph::complete(3)));
    }

    #[test]
    fn six_connected_four_vertex_graphs() {
        let forms: std::collections::HashSet<Graph> = enumerate_connected(4)
            .unwrap()
            .map(|g| canonical_form(&g))
            .collect();
        assert_eq!(forms.len(), 6);
    }

    #[test]
    fn rigidity() {
        assert!(is_rigid(&Graph::complete(1)));
        assert!(!is_rigid(&Graph::complete(2)));
        assert!(!is_rigid(&Graph::petersen()));
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn rigidity_matches_brute_force_on_six_vertices() {
        let perms = permutations(6);
        let mut rigid = 0;
        for g in enumerate_connected(6).unwrap() {
            let brute = perms.iter().filter(|p| is_automorphism(&g, p)).count() == 1;
            assert_eq!(is_rigid(&g), brute, "{g:?}");
            rigid += brute as usize;
        }
        // the connected asymmetric graphs on 6 vertices
        assert_eq!(rigid, 8);
    }

    #[test]
    fn found_maps_are_automorphisms() {
        for g in [
            Graph::petersen(),
            Graph::complete(7),
            Graph::star(6),
            Graph::cycle(8).unwrap(),
        ] {
            let lab = canonical_labeling(&g);
            assert!(!lab.automorphisms.is_empty());
            for a in &lab.automorphisms {
                assert!(is_automorphism(&g, a));
            }
        }
    }

    #[test]
    fn large_symmetric_graphs_finish() {
        let k = Graph::complete(30);
        assert_eq!(canonical_form(&k), k);
        let s = Graph::star(40);
        assert_eq!(canonical_form(&s).degree_sequence(), s.degree_sequence());
        let kk = Graph::complete_bipartite(12, 12);
        assert!(is_isomorphic(
            &kk,
            &kk.permuted(&(0..24).rev().collect::<Vec<_>>())
        ));
    }
}
