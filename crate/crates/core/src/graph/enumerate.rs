//! Connected graphs up to isomorphism.
//!
//! Every connected graph on `n >= 2` vertices has a vertex whose removal
//! leaves it connected, so the classes on `n` vertices are obtained by adding
//! one vertex with a non-empty neighbourhood to each class on `n - 1`
//! vertices and deduplicating canonical forms.

use super::{canonical_form, Graph};
use crate::error::{Error, Result};
use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

pub const ENUMERATION_CEILING: usize = 9;

fn cache() -> &'static Mutex<HashMap<usize, Arc<[Graph]>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<[Graph]>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// All connected graphs on `n` vertices, one canonical representative per
/// class, sorted. Results are cached per `n`.
pub fn connected_graphs(n: usize) -> Result<Arc<[Graph]>> {
    if n > ENUMERATION_CEILING {
        return Err(Error::Resource(format!(
            "enumeration of connected graphs is capped at n={ENUMERATION_CEILING}, got {n}"
        )));
    }
    if let Some(hit) = cache().lock().unwrap().get(&n) {
        return Ok(hit.clone());
    }
    let list: Arc<[Graph]> = match n {
        0 => Arc::from(Vec::new()),
        1 => Arc::from(vec![Graph::empty(1)]),
        _ => {
            let smaller = connected_graphs(n - 1)?;
            let mut seen = BTreeSet::new();
            for g in smaller.iter() {
                for mask in 1u32..(1 << (n - 1)) {
                    let nbrs: Vec<usize> = (0..n - 1).filter(|&i| mask >> i & 1 == 1).collect();
                    seen.insert(canonical_form(&g.with_vertex(&nbrs)));
                }
            }
            Arc::from(seen.into_iter().collect::<Vec<_>>())
        }
    };
    cache().lock().unwrap().insert(n, list.clone());
    Ok(list)
}

/// Streams the connected graphs on `n` vertices.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>> {
    let list = connected_graphs(n)?;
    Ok((0..list.len()).map(move |i| list[i].clone()))
}

/// All graphs on `n` vertices up to isomorphism, built as multisets of
/// connected classes. Each class appears once; representatives are disjoint
/// unions of canonical components, largest component first.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > ENUMERATION_CEILING {
        return Err(Error::Resource(format!(
            "enumeration of graphs is capped at n={ENUMERATION_CEILING}, got {n}"
        )));
    }
    let classes: Vec<Arc<[Graph]>> = (0..=n).map(connected_graphs).collect::<Result<_>>()?;
    let mut out = Vec::new();
    fn build(
        classes: &[Arc<[Graph]>],
        left: usize,
        bound: (usize, usize),
        acc: &Graph,
        out: &mut Vec<Graph>,
    ) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        for size in (1..=left.min(bound.0)).rev() {
            let len = classes[size].len();
            let top = if size == bound.0 {
                len.min(bound.1 + 1)
            } else {
                len
            };
            for idx in 0..top {
                let next = acc.disjoint_union(&classes[size][idx]);
                build(classes, left - size, (size, idx), &next, out);
            }
        }
    }
    build(&classes, n, (n, usize::MAX - 1), &Graph::empty(0), &mut out);
    Ok(out)
}
