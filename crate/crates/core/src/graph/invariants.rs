use super::Graph;
use serde::Serialize;
use std::collections::VecDeque;

/// All-pairs shortest-path lengths; `None` across components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    d: Vec<u32>,
}

const UNREACHABLE: u32 = u32::MAX;

impl DistanceTable {
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        match self.d[u * self.n + v] {
            UNREACHABLE => None,
            x => Some(x as usize),
        }
    }

    /// Raw distance with `u32::MAX` for unreachable pairs.
    #[inline]
    pub fn raw(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    /// `None` when the graph is disconnected.
    pub fn diameter(&self) -> Option<usize> {
        if self.d.contains(&UNREACHABLE) {
            return None;
        }
        Some(self.d.iter().copied().max().unwrap_or(0) as usize)
    }

    pub fn eccentricity(&self, u: usize) -> Option<usize> {
        let row = &self.d[u * self.n..(u + 1) * self.n];
        if row.contains(&UNREACHABLE) {
            return None;
        }
        Some(row.iter().copied().max().unwrap_or(0) as usize)
    }
}

pub fn distances(g: &Graph) -> DistanceTable {
    let n = g.n();
    let mut d = vec![UNREACHABLE; n * n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if row[v] == UNREACHABLE {
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    DistanceTable { n, d }
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.iter_mut().for_each(|x| *x = usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if let Some(b) = best {
                if 2 * dist[u] + 1 >= b {
                    break;
                }
            }
            for v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    let len = dist[u] + dist[v] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

struct FlowNetwork {
    head: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<i32>,
    next: Vec<usize>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: vec![usize::MAX; nodes],
            to: Vec::new(),
            cap: Vec::new(),
            next: Vec::new(),
        }
    }

    fn arc(&mut self, u: usize, v: usize, c: i32) {
        for (a, b, c) in [(u, v, c), (v, u, 0)] {
            self.to.push(b);
            self.cap.push(c);
            self.next.push(self.head[a]);
            self.head[a] = self.to.len() - 1;
        }
    }

    /// Augments along BFS paths until none remain or `limit` is reached.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let nodes = self.head.len();
        let mut flow = 0;
        let mut via = vec![usize::MAX; nodes];
        while flow < limit {
            via.iter_mut().for_each(|x| *x = usize::MAX);
            let mut queue = VecDeque::from([s]);
            let mut reached = false;
            'bfs: while let Some(u) = queue.pop_front() {
                let mut e = self.head[u];
                while e != usize::MAX {
                    let v = self.to[e];
                    if self.cap[e] > 0 && v != s && via[v] == usize::MAX {
                        via[v] = e;
                        if v == t {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                    e = self.next[e];
                }
            }
            if !reached {
                break;
            }
            let mut v = t;
            while v != s {
                let e = via[v];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                v = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths for
/// non-adjacent distinct `s`, `t` (the minimum `s`-`t` separator size).
pub fn local_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    local_connectivity_capped(g, s, t, usize::MAX)
}

fn local_connectivity_capped(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    assert!(
        s != t && !g.has_edge(s, t),
        "s and t must be distinct and non-adjacent"
    );
    let n = g.n();
    let big = n as i32 + 1;
    // vertex v splits into v_in = 2v and v_out = 2v + 1
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        net.arc(2 * v, 2 * v + 1, if v == s || v == t { big } else { 1 });
    }
    for (u, v) in g.edges() {
        net.arc(2 * u + 1, 2 * v, big);
        net.arc(2 * v + 1, 2 * u, big);
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// The largest `k` such that `g` has more than `k` vertices, is connected and
/// stays connected after deleting any `k - 1` vertices. Zero for `K_1`, the
/// empty graph and disconnected graphs; `n - 1` for `K_n`.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_connectivity_capped(g, s, t, best));
            }
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphInvariants {
    pub vertices: usize,
    pub edges: usize,
    /// `None` encodes infinity (acyclic).
    pub girth: Option<usize>,
    /// `None` encodes infinity (disconnected).
    pub diameter: Option<usize>,
    pub connectivity: usize,
    pub max_degree: usize,
    pub connected: bool,
}

pub fn invariants(g: &Graph) -> GraphInvariants {
    GraphInvariants {
        vertices: g.n(),
        edges: g.edge_count(),
        girth: girth(g),
        diameter: distances(g).diameter(),
        connectivity: vertex_connectivity(g),
        max_degree: g.max_degree(),
        connected: g.is_connected(),
    }
}
