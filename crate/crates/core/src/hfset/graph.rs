use super::{SetError, SetHandle, SetUniverse};

/// A raw presentation of a set: vertices, successor ("has member") edges and
/// a root. Redundancy and repeated successors are allowed; acyclicity is only
/// checked when the graph is collapsed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedGraph {
    successors: Vec<Vec<usize>>,
    root: usize,
}

impl PointedGraph {
    pub fn new(successors: Vec<Vec<usize>>, root: usize) -> Result<Self, SetError> {
        let count = successors.len();
        if root >= count {
            return Err(SetError::VertexOutOfRange {
                vertex: root,
                count,
            });
        }
        if let Some(&vertex) = successors.iter().flatten().find(|&&w| w >= count) {
            return Err(SetError::VertexOutOfRange { vertex, count });
        }
        Ok(PointedGraph { successors, root })
    }

    /// The single-vertex presentation of the empty set.
    pub fn empty_set() -> Self {
        PointedGraph {
            successors: vec![Vec::new()],
            root: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.successors.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.successors[v]
    }

    pub fn all_successors(&self) -> &[Vec<usize>] {
        &self.successors
    }

    /// The same graph pointed at another vertex.
    pub fn with_root(&self, root: usize) -> Result<Self, SetError> {
        PointedGraph::new(self.successors.clone(), root)
    }
}

/// Post-order DFS from each start vertex, interning every vertex once all of
/// its successors have been interned. Successors are visited in list order so
/// that the interning sequence, and therefore handle indices, are reproducible.
///
/// Returns handles indexed by vertex; vertices that were not reached hold a
/// placeholder and must not be read.
pub(super) fn collapse(
    u: &mut SetUniverse,
    g: &PointedGraph,
    starts: impl IntoIterator<Item = usize>,
) -> Result<Vec<SetHandle>, SetError> {
    const FRESH: u8 = 0;
    const OPEN: u8 = 1;
    const DONE: u8 = 2;

    let n = g.vertex_count();
    let mut state = vec![FRESH; n];
    let mut handle: Vec<u32> = vec![u32::MAX; n];
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut buf: Vec<u32> = Vec::new();

    for start in starts {
        if state[start] != FRESH {
            continue;
        }
        state[start] = OPEN;
        stack.push((start, 0));
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            let succ = &g.successors[v];
            let mut descended = false;
            while *next < succ.len() {
                let w = succ[*next];
                *next += 1;
                match state[w] {
                    FRESH => {
                        state[w] = OPEN;
                        stack.push((w, 0));
                        descended = true;
                        break;
                    }
                    OPEN => {
                        let from = stack.iter().position(|&(x, _)| x == w).unwrap();
                        let cycle = stack[from..].iter().map(|&(x, _)| x).collect();
                        return Err(SetError::Cyclic { cycle });
                    }
                    _ => {}
                }
            }
            if descended {
                continue;
            }
            buf.clear();
            buf.extend(succ.iter().map(|&w| handle[w]));
            let h = u.intern(std::mem::take(&mut buf))?;
            handle[v] = h.index;
            state[v] = DONE;
            stack.pop();
        }
    }

    let id = u.id;
    Ok(handle
        .into_iter()
        .map(|index| SetHandle { universe: id, index })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_is_empty() {
        let mut u = SetUniverse::new();
        let h = u.from_graph(&PointedGraph::empty_set()).unwrap();
        assert_eq!(h, u.empty_set().unwrap());
    }

    #[test]
    fn sinks_collapse() {
        let mut u = SetUniverse::new();
        let g = PointedGraph::new(vec![vec![1, 2], vec![], vec![]], 0).unwrap();
        let h = u.from_graph(&g).unwrap();
        assert_eq!(h, u.von_neumann(1).unwrap());
    }

    #[test]
    fn self_loop_is_cyclic() {
        let mut u = SetUniverse::new();
        let g = PointedGraph::new(vec![vec![0]], 0).unwrap();
        assert_eq!(u.from_graph(&g), Err(SetError::Cyclic { cycle: vec![0] }));
    }

    #[test]
    fn cycle_is_named() {
        let mut u = SetUniverse::new();
        let g = PointedGraph::new(vec![vec![1], vec![2], vec![3, 1], vec![]], 0).unwrap();
        assert_eq!(u.from_graph(&g), Err(SetError::Cyclic { cycle: vec![1, 2] }));
    }

    #[test]
    fn unreachable_cycle_is_ignored() {
        let mut u = SetUniverse::new();
        let g = PointedGraph::new(vec![vec![1], vec![], vec![2]], 0).unwrap();
        assert_eq!(u.from_graph(&g).unwrap(), u.von_neumann(1).unwrap());
        assert!(u.collapse_all(&g).is_err());
    }

    #[test]
    fn out_of_range_vertices() {
        assert_eq!(
            PointedGraph::new(vec![vec![3]], 0),
            Err(SetError::VertexOutOfRange { vertex: 3, count: 1 })
        );
        assert!(PointedGraph::new(vec![], 0).is_err());
    }

    #[test]
    fn deep_chain_does_not_overflow() {
        let n = 200_000;
        let succ: Vec<Vec<usize>> = (0..n).map(|i| if i == 0 { vec![] } else { vec![i - 1] }).collect();
        let g = PointedGraph::new(succ, n - 1).unwrap();
        let mut u = SetUniverse::new();
        let h = u.from_graph(&g).unwrap();
        assert_eq!(u.rank_nat(h), n - 1);
    }
}
