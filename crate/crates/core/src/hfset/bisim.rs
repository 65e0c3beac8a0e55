//! Bisimilarity of raw presentations by naive greatest-fixpoint iteration.
//!
//! This is the reference decision procedure that [`SetUniverse::from_graph`]
//! is checked against. It deliberately shares no code with the collapse:
//! cycle detection is a sink-peeling sort, and the relation is refined from
//! "everything is related" until it is stable.
//!
//! [`SetUniverse::from_graph`]: super::SetUniverse::from_graph

use super::{PointedGraph, SetError};

/// Greatest bisimulation on the vertices of a successor graph, as a dense
/// `n * n` row-major matrix.
///
/// Fails with [`SetError::Cyclic`] if the graph has a cycle anywhere.
pub fn bisimulation_matrix(successors: &[Vec<usize>]) -> Result<Vec<bool>, SetError> {
    let n = successors.len();
    if let Some(&vertex) = successors.iter().flatten().find(|&&w| w >= n) {
        return Err(SetError::VertexOutOfRange { vertex, count: n });
    }
    check_acyclic(successors)?;

    let mut related = vec![true; n * n];
    // Live pairs (u, v) with u < v; the diagonal never leaves the relation.
    let mut live: Vec<(u32, u32)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            live.push((u as u32, v as u32));
        }
    }
    loop {
        let mut dropped = Vec::new();
        live.retain(|&(u, v)| {
            let (u, v) = (u as usize, v as usize);
            let keep = simulates(successors, &related, n, u, v) && simulates(successors, &related, n, v, u);
            if !keep {
                dropped.push((u, v));
            }
            keep
        });
        if dropped.is_empty() {
            break;
        }
        for (u, v) in dropped {
            related[u * n + v] = false;
            related[v * n + u] = false;
        }
    }
    Ok(related)
}

/// Every successor of `u` is related to some successor of `v`.
fn simulates(successors: &[Vec<usize>], related: &[bool], n: usize, u: usize, v: usize) -> bool {
    successors[u]
        .iter()
        .all(|&s| successors[v].iter().any(|&t| related[s * n + t]))
}

/// Repeatedly removes vertices all of whose successors are removed. Whatever
/// survives lies on or above a cycle, and every survivor has a surviving
/// successor, so walking survivors must revisit a vertex.
fn check_acyclic(successors: &[Vec<usize>]) -> Result<(), SetError> {
    let n = successors.len();
    let mut predecessors: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut remaining: Vec<usize> = successors.iter().map(Vec::len).collect();
    for (v, succ) in successors.iter().enumerate() {
        for &w in succ {
            predecessors[w].push(v);
        }
    }
    let mut removed = vec![false; n];
    let mut sinks: Vec<usize> = (0..n).filter(|&v| remaining[v] == 0).collect();
    while let Some(w) = sinks.pop() {
        removed[w] = true;
        for &v in &predecessors[w] {
            remaining[v] -= 1;
            if remaining[v] == 0 {
                sinks.push(v);
            }
        }
    }
    let Some(start) = (0..n).find(|&v| !removed[v]) else {
        return Ok(());
    };
    let mut path = vec![start];
    let mut position = vec![usize::MAX; n];
    position[start] = 0;
    let mut v = start;
    loop {
        let w = *successors[v].iter().find(|&&w| !removed[w]).expect("survivor has a surviving successor");
        if position[w] != usize::MAX {
            return Err(SetError::Cyclic {
                cycle: path[position[w]..].to_vec(),
            });
        }
        position[w] = path.len();
        path.push(w);
        v = w;
    }
}

/// Disjoint union of the parts of `gs` reachable from their roots, returning
/// the union's successor lists and the new index of each root.
fn reachable_union(gs: &[&PointedGraph]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut successors: Vec<Vec<usize>> = Vec::new();
    let mut roots = Vec::new();
    for g in gs {
        let offset = successors.len();
        let mut index = vec![usize::MAX; g.vertex_count()];
        let mut order = vec![g.root()];
        index[g.root()] = 0;
        let mut i = 0;
        while i < order.len() {
            for &w in g.successors(order[i]) {
                if index[w] == usize::MAX {
                    index[w] = order.len();
                    order.push(w);
                }
            }
            i += 1;
        }
        for &v in &order {
            successors.push(g.successors(v).iter().map(|&w| offset + index[w]).collect());
        }
        roots.push(offset);
    }
    (successors, roots)
}

/// Whether the two presentations denote the same set.
pub fn bisimilar(g1: &PointedGraph, g2: &PointedGraph) -> Result<bool, SetError> {
    let (successors, roots) = reachable_union(&[g1, g2]);
    let n = successors.len();
    let related = bisimulation_matrix(&successors)?;
    Ok(related[roots[0] * n + roots[1]])
}

/// Raw membership: some successor of `y`'s root is bisimilar to `x`.
pub fn mem_raw(x: &PointedGraph, y: &PointedGraph) -> Result<bool, SetError> {
    let (successors, roots) = reachable_union(&[x, y]);
    let n = successors.len();
    let related = bisimulation_matrix(&successors)?;
    Ok(successors[roots[1]].iter().any(|&w| related[roots[0] * n + w]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(successors: Vec<Vec<usize>>, root: usize) -> PointedGraph {
        PointedGraph::new(successors, root).unwrap()
    }

    #[test]
    fn redundant_presentations_of_singleton() {
        let a = g(vec![vec![1], vec![]], 0);
        let b = g(vec![vec![1, 2, 1], vec![], vec![]], 0);
        assert!(bisimilar(&a, &b).unwrap());
    }

    #[test]
    fn empty_versus_singleton() {
        let e = PointedGraph::empty_set();
        let one = g(vec![vec![1], vec![]], 0);
        assert!(!bisimilar(&e, &one).unwrap());
    }

    #[test]
    fn two_and_five_children_same_image() {
        // Vertices 1 = ∅, 2 = {∅}; root lists them twice over in the 5-child form.
        let two = g(vec![vec![1, 2], vec![], vec![1]], 0);
        let five = g(vec![vec![1, 2, 1, 2, 1], vec![], vec![1]], 0);
        assert!(bisimilar(&two, &five).unwrap());
    }

    #[test]
    fn cyclic_input_is_rejected() {
        let c = g(vec![vec![1], vec![0]], 0);
        let e = PointedGraph::empty_set();
        assert!(matches!(bisimilar(&c, &e), Err(SetError::Cyclic { .. })));
    }

    #[test]
    fn raw_membership() {
        let e = PointedGraph::empty_set();
        let one = g(vec![vec![1], vec![]], 0);
        let one_one = g(vec![vec![1], vec![2], vec![]], 0);
        assert!(mem_raw(&e, &one).unwrap());
        assert!(!mem_raw(&e, &one_one).unwrap());
        assert!(mem_raw(&one, &one_one).unwrap());
        assert!(!mem_raw(&e, &e).unwrap());
    }
}
