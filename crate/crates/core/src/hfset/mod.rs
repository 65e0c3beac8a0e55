//! Hash-consed universe of hereditarily finite sets.
//!
//! Every set lives in a [`SetUniverse`] and is named by a [`SetHandle`].
//! Children are canonicalized (sorted by creation index, deduplicated) before
//! interning, so two handles of one universe are equal exactly when the sets
//! they denote are extensionally equal. A child is always interned before its
//! parent, which makes the membership digraph acyclic by construction.

mod bisim;
mod export;
mod graph;

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};

use thiserror::Error;

pub use bisim::{bisimilar, bisimulation_matrix, mem_raw};
pub use export::{SetDisplay, UniverseSlice};
pub use graph::PointedGraph;

/// Default cap on the number of distinct sets a universe may hold.
pub const DEFAULT_NODE_LIMIT: usize = 1 << 20;

/// Default cap on the argument of [`SetUniverse::von_neumann`].
pub const DEFAULT_NUMERAL_LIMIT: usize = 1 << 16;

static NEXT_UNIVERSE: AtomicU32 = AtomicU32::new(0);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetError {
    #[error("handle belongs to universe #{found}, expected universe #{expected}")]
    ForeignHandle { expected: u32, found: u32 },
    #[error("universe node limit of {limit} sets exceeded")]
    NodeLimit { limit: usize },
    #[error("numeral {n} exceeds the configured limit {limit}")]
    NumeralLimit { n: usize, limit: usize },
    #[error("graph is not wellfounded: cycle through vertices {cycle:?}")]
    Cyclic { cycle: Vec<usize> },
    #[error("vertex {vertex} out of range for a graph with {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("malformed universe slice: {0}")]
    MalformedSlice(String),
    #[error("not a set-theoretic ordinal: {0}")]
    NotAnOrdinal(String),
}

/// Canonical name of a hereditarily finite set inside one [`SetUniverse`].
///
/// Equality of handles from the same universe is set equality. Handles are
/// plain values and may be freely copied and shared across threads.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SetHandle {
    universe: u32,
    index: u32,
}

impl SetHandle {
    /// Creation index within the owning universe. Children lists are sorted by it.
    pub fn index(self) -> usize {
        self.index as usize
    }

    pub fn universe_id(self) -> u32 {
        self.universe
    }
}

#[derive(Debug)]
struct Node {
    children: Box<[u32]>,
    rank: u32,
    transitive: bool,
    st_ordinal: bool,
}

/// Append-only arena of hereditarily finite sets.
///
/// Reads take `&self`; interning takes `&mut self`, so sharing a universe
/// between threads requires external synchronization. Parallel code in this
/// crate uses one universe per worker instead.
pub struct SetUniverse {
    id: u32,
    nodes: Vec<Node>,
    intern: HashMap<Box<[u32]>, u32>,
    node_limit: usize,
    numeral_limit: usize,
}

impl Default for SetUniverse {
    fn default() -> Self {
        Self::new()
    }
}

impl fmt::Debug for SetUniverse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SetUniverse")
            .field("id", &self.id)
            .field("len", &self.nodes.len())
            .field("node_limit", &self.node_limit)
            .finish()
    }
}

impl SetUniverse {
    pub fn new() -> Self {
        Self::with_limits(DEFAULT_NODE_LIMIT, DEFAULT_NUMERAL_LIMIT)
    }

    pub fn with_limits(node_limit: usize, numeral_limit: usize) -> Self {
        SetUniverse {
            id: NEXT_UNIVERSE.fetch_add(1, Ordering::Relaxed),
            nodes: Vec::new(),
            intern: HashMap::new(),
            node_limit,
            numeral_limit,
        }
    }

    /// A universe without size guards, for internal scratch computations.
    pub(crate) fn scratch() -> Self {
        Self::with_limits(usize::MAX, usize::MAX)
    }

    pub fn id(&self) -> u32 {
        self.id
    }

    /// Number of distinct sets interned so far.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node_limit(&self) -> usize {
        self.node_limit
    }

    pub fn numeral_limit(&self) -> usize {
        self.numeral_limit
    }

    pub fn owns(&self, h: SetHandle) -> bool {
        h.universe == self.id && h.index() < self.nodes.len()
    }

    fn check(&self, h: SetHandle) -> Result<u32, SetError> {
        if h.universe != self.id {
            return Err(SetError::ForeignHandle {
                expected: self.id,
                found: h.universe,
            });
        }
        debug_assert!(h.index() < self.nodes.len());
        Ok(h.index)
    }

    fn node(&self, h: SetHandle) -> &Node {
        assert_eq!(
            h.universe, self.id,
            "set handle from universe #{} used with universe #{}",
            h.universe, self.id
        );
        &self.nodes[h.index()]
    }

    #[inline]
    fn handle(&self, index: u32) -> SetHandle {
        SetHandle {
            universe: self.id,
            index,
        }
    }

    /// Interns an already-validated child index list.
    fn intern(&mut self, mut children: Vec<u32>) -> Result<SetHandle, SetError> {
        children.sort_unstable();
        children.dedup();
        if let Some(&index) = self.intern.get(children.as_slice()) {
            return Ok(self.handle(index));
        }
        if self.nodes.len() >= self.node_limit {
            return Err(SetError::NodeLimit {
                limit: self.node_limit,
            });
        }
        let index = u32::try_from(self.nodes.len()).map_err(|_| SetError::NodeLimit {
            limit: u32::MAX as usize,
        })?;
        let rank = children
            .iter()
            .map(|&c| self.nodes[c as usize].rank + 1)
            .max()
            .unwrap_or(0);
        let transitive = children
            .iter()
            .all(|&c| is_sorted_subset(&self.nodes[c as usize].children, &children));
        let st_ordinal = transitive && children.iter().all(|&c| self.nodes[c as usize].st_ordinal);
        let key: Box<[u32]> = children.into_boxed_slice();
        self.intern.insert(key.clone(), index);
        self.nodes.push(Node {
            children: key,
            rank,
            transitive,
            st_ordinal,
        });
        Ok(self.handle(index))
    }

    /// The set whose elements are `children`, ignoring order and repetition.
    pub fn mk_set(&mut self, children: &[SetHandle]) -> Result<SetHandle, SetError> {
        let indices = children
            .iter()
            .map(|&c| self.check(c))
            .collect::<Result<Vec<_>, _>>()?;
        self.intern(indices)
    }

    pub fn empty_set(&mut self) -> Result<SetHandle, SetError> {
        self.intern(Vec::new())
    }

    /// `{x}`.
    pub fn singleton(&mut self, x: SetHandle) -> Result<SetHandle, SetError> {
        self.mk_set(&[x])
    }

    /// Members of `h`, duplicate-free and sorted by creation index.
    ///
    /// Panics if `h` belongs to another universe.
    pub fn elements(&self, h: SetHandle) -> Vec<SetHandle> {
        self.node(h).children.iter().map(|&c| self.handle(c)).collect()
    }

    /// Number of members of `h`.
    pub fn cardinality(&self, h: SetHandle) -> usize {
        self.node(h).children.len()
    }

    /// `x ∈ y`.
    pub fn mem(&self, x: SetHandle, y: SetHandle) -> Result<bool, SetError> {
        let x = self.check(x)?;
        let y = self.check(y)?;
        Ok(self.nodes[y as usize].children.binary_search(&x).is_ok())
    }

    /// `x ⊆ y`.
    pub fn subset(&self, x: SetHandle, y: SetHandle) -> Result<bool, SetError> {
        let x = self.check(x)?;
        let y = self.check(y)?;
        Ok(is_sorted_subset(
            &self.nodes[x as usize].children,
            &self.nodes[y as usize].children,
        ))
    }

    /// Every member of a member of `h` is a member of `h`.
    pub fn is_transitive_set(&self, h: SetHandle) -> bool {
        self.node(h).transitive
    }

    /// `h` is hereditarily transitive, i.e. a von Neumann ordinal.
    ///
    /// Computed once at interning time from the members' flags.
    pub fn is_st_ordinal(&self, h: SetHandle) -> bool {
        self.node(h).st_ordinal
    }

    /// `0` for the empty set, otherwise one more than the largest member rank.
    pub fn rank_nat(&self, h: SetHandle) -> usize {
        self.node(h).rank as usize
    }

    /// The von Neumann numeral `n = {0, ..., n-1}`.
    pub fn von_neumann(&mut self, n: usize) -> Result<SetHandle, SetError> {
        if n > self.numeral_limit {
            return Err(SetError::NumeralLimit {
                n,
                limit: self.numeral_limit,
            });
        }
        let mut members: Vec<SetHandle> = Vec::with_capacity(n);
        let mut current = self.empty_set()?;
        for _ in 0..n {
            members.push(current);
            current = self.mk_set(&members)?;
        }
        Ok(current)
    }

    /// `x ∪ {x}`.
    pub fn successor(&mut self, x: SetHandle) -> Result<SetHandle, SetError> {
        let mut members = self.elements(x);
        members.push(x);
        self.mk_set(&members)
    }

    /// All sets reachable from `h` by membership, including `h`, ascending by index.
    pub fn closure_of(&self, h: SetHandle) -> Vec<SetHandle> {
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![self.node_index(h)];
        seen[h.index()] = true;
        while let Some(v) = stack.pop() {
            for &c in self.nodes[v as usize].children.iter() {
                if !seen[c as usize] {
                    seen[c as usize] = true;
                    stack.push(c);
                }
            }
        }
        seen.iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(i, _)| self.handle(i as u32))
            .collect()
    }

    /// Hereditary members of `h`: members, members of members, and so on.
    pub fn hereditary_members(&self, h: SetHandle) -> Vec<SetHandle> {
        let mut all = self.closure_of(h);
        all.retain(|&x| x != h);
        all
    }

    fn node_index(&self, h: SetHandle) -> u32 {
        self.node(h);
        h.index
    }

    /// Checks that membership is acyclic by a Kahn-style topological sort
    /// over the whole arena.
    pub fn verify_wellfounded(&self) -> bool {
        let n = self.nodes.len();
        // Edges child -> parent; in-degree of a parent is its cardinality.
        let mut parents: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut pending: Vec<usize> = Vec::with_capacity(n);
        for (p, node) in self.nodes.iter().enumerate() {
            pending.push(node.children.len());
            for &c in node.children.iter() {
                if c as usize >= n {
                    return false;
                }
                parents[c as usize].push(p as u32);
            }
        }
        let mut ready: Vec<usize> = (0..n).filter(|&i| pending[i] == 0).collect();
        let mut visited = 0;
        while let Some(v) = ready.pop() {
            visited += 1;
            for &p in &parents[v] {
                pending[p as usize] -= 1;
                if pending[p as usize] == 0 {
                    ready.push(p as usize);
                }
            }
        }
        visited == n
    }

    /// Interns every vertex of an acyclic graph and returns their handles,
    /// indexed by vertex.
    pub fn collapse_all(&mut self, g: &PointedGraph) -> Result<Vec<SetHandle>, SetError> {
        graph::collapse(self, g, 0..g.vertex_count())
    }

    /// Mostowski collapse of the part of `g` reachable from its root.
    pub fn from_graph(&mut self, g: &PointedGraph) -> Result<SetHandle, SetError> {
        let handles = graph::collapse(self, g, std::iter::once(g.root()))?;
        Ok(handles[g.root()])
    }

    pub fn display(&self, h: SetHandle) -> SetDisplay {
        SetDisplay::new(self.export(h))
    }
}

/// Both slices are sorted ascending and duplicate-free.
fn is_sorted_subset(small: &[u32], big: &[u32]) -> bool {
    if small.len() > big.len() {
        return false;
    }
    let mut it = big.iter();
    'outer: for x in small {
        for y in it.by_ref() {
            if y == x {
                continue 'outer;
            }
            if y > x {
                return false;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn numerals(u: &mut SetUniverse) -> [SetHandle; 4] {
        [
            u.von_neumann(0).unwrap(),
            u.von_neumann(1).unwrap(),
            u.von_neumann(2).unwrap(),
            u.von_neumann(3).unwrap(),
        ]
    }

    #[test]
    fn mk_set_ignores_order_and_duplicates() {
        let mut u = SetUniverse::new();
        let e = u.mk_set(&[]).unwrap();
        let one = u.mk_set(&[e, e]).unwrap();
        assert_eq!(one, u.mk_set(&[e]).unwrap());
        let a = u.mk_set(&[one, e]).unwrap();
        let b = u.mk_set(&[e, one]).unwrap();
        assert_eq!(a, b);
        assert_eq!(u.elements(a), vec![e, one]);
        assert_eq!(u.len(), 3);
    }

    #[test]
    fn elements_examples() {
        let mut u = SetUniverse::new();
        let [zero, one, two, _] = numerals(&mut u);
        assert!(u.elements(zero).is_empty());
        assert_eq!(u.elements(two), vec![zero, one]);
        let one_one = u.singleton(one).unwrap();
        assert_eq!(u.elements(one_one), vec![one]);
    }

    #[test]
    fn membership_and_subset_examples() {
        let mut u = SetUniverse::new();
        let [zero, one, two, _] = numerals(&mut u);
        let one_one = u.singleton(one).unwrap();
        assert!(u.mem(zero, one).unwrap());
        assert!(!u.mem(zero, one_one).unwrap());
        assert!(!u.mem(zero, zero).unwrap());
        assert!(u.subset(zero, one_one).unwrap());
        assert!(!u.subset(two, one_one).unwrap());
        assert!(u.subset(one, two).unwrap());
    }

    #[test]
    fn transitivity_and_ordinals() {
        let mut u = SetUniverse::new();
        let [zero, one, two, _] = numerals(&mut u);
        let one_one = u.singleton(one).unwrap();
        let t = u.mk_set(&[zero, one, one_one]).unwrap();
        assert!(u.is_transitive_set(t));
        assert!(!u.is_transitive_set(one_one));
        assert!(u.is_transitive_set(zero));
        assert!(u.is_st_ordinal(two));
        assert!(!u.is_st_ordinal(t));
        assert!(u.is_st_ordinal(zero));
    }

    #[test]
    fn numerals_and_ranks() {
        let mut u = SetUniverse::new();
        let [zero, one, two, three] = numerals(&mut u);
        assert_eq!(u.elements(three), vec![zero, one, two]);
        let one_one = u.singleton(one).unwrap();
        assert_eq!(u.rank_nat(zero), 0);
        assert_eq!(u.rank_nat(one_one), 2);
        for n in 0..20 {
            let h = u.von_neumann(n).unwrap();
            assert_eq!(u.rank_nat(h), n);
            assert!(u.is_st_ordinal(h));
        }
    }

    #[test]
    fn numeral_limit_is_enforced() {
        let mut u = SetUniverse::with_limits(DEFAULT_NODE_LIMIT, 5);
        assert!(u.von_neumann(5).is_ok());
        assert_eq!(
            u.von_neumann(6),
            Err(SetError::NumeralLimit { n: 6, limit: 5 })
        );
    }

    #[test]
    fn node_limit_is_enforced() {
        let mut u = SetUniverse::with_limits(3, 100);
        assert!(u.von_neumann(2).is_ok());
        assert_eq!(u.von_neumann(3), Err(SetError::NodeLimit { limit: 3 }));
        // Existing sets remain available.
        assert!(u.von_neumann(2).is_ok());
    }

    #[test]
    fn foreign_handles_are_rejected() {
        let mut u = SetUniverse::new();
        let mut v = SetUniverse::new();
        let e = u.empty_set().unwrap();
        let f = v.empty_set().unwrap();
        assert!(matches!(v.mk_set(&[e]), Err(SetError::ForeignHandle { .. })));
        assert!(matches!(u.mem(e, f), Err(SetError::ForeignHandle { .. })));
        assert!(matches!(u.subset(f, e), Err(SetError::ForeignHandle { .. })));
        assert!(!u.owns(f));
    }

    #[test]
    fn sorted_subset_helper() {
        assert!(is_sorted_subset(&[], &[1]));
        assert!(is_sorted_subset(&[1, 3], &[0, 1, 2, 3]));
        assert!(!is_sorted_subset(&[1, 4], &[0, 1, 2, 3]));
        assert!(!is_sorted_subset(&[2], &[1, 3]));
    }

    #[test]
    fn hereditary_members_of_two() {
        let mut u = SetUniverse::new();
        let [zero, one, two, _] = numerals(&mut u);
        assert_eq!(u.hereditary_members(two), vec![zero, one]);
        assert!(u.verify_wellfounded());
    }
}
