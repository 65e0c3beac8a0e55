//! Dense square boolean relations on `0..n`.

use std::fmt;

/// A binary relation on the carrier `0..n`, stored as a row-major bit grid.
///
/// Row `i`, column `j` holds whether `i R j`. For order relations that reads
/// as `i < j`, so the predecessors of `j` are the set bits of column `j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    n: usize,
    bits: Vec<bool>,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Relation {
            n,
            bits: vec![false; n * n],
        }
    }

    /// The diagonal `{(i, i)}`.
    pub fn identity(n: usize) -> Self {
        let mut r = Self::empty(n);
        for i in 0..n {
            r.set(i, i, true);
        }
        r
    }

    /// Builds a relation from pairs. Returns `None` if any endpoint is out of range.
    pub fn from_pairs<I>(n: usize, pairs: I) -> Option<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut r = Self::empty(n);
        for (i, j) in pairs {
            if i >= n || j >= n {
                return None;
            }
            r.set(i, j, true);
        }
        Some(r)
    }

    /// Builds a relation from a square matrix of rows. Returns `None` when the
    /// matrix is not square.
    pub fn from_rows(rows: &[Vec<bool>]) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|row| row.len() != n) {
            return None;
        }
        Some(Relation {
            n,
            bits: rows.iter().flatten().copied().collect(),
        })
    }

    /// Strict total order `i < j` on `0..n`.
    pub fn chain(n: usize) -> Self {
        let mut r = Self::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                r.set(i, j, true);
            }
        }
        r
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.bits[i * self.n + j] = value;
    }

    /// All related pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| (0..self.n).filter(move |&j| self.get(i, j)).map(move |j| (i, j)))
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Elements `i` with `i R j`, ascending.
    pub fn predecessors(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&i| self.get(i, j))
    }

    /// Elements `j` with `i R j`, ascending.
    pub fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&j| self.get(i, j))
    }

    /// Column `j` as a bit vector.
    pub fn predecessor_set(&self, j: usize) -> Vec<bool> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn transitive_closure(&self) -> Relation {
        let mut r = self.clone();
        let n = self.n;
        for k in 0..n {
            for i in 0..n {
                if r.get(i, k) {
                    for j in 0..n {
                        if r.get(k, j) {
                            r.set(i, j, true);
                        }
                    }
                }
            }
        }
        r
    }

    pub fn reflexive_closure(&self) -> Relation {
        let mut r = self.clone();
        for i in 0..self.n {
            r.set(i, i, true);
        }
        r
    }

    /// The relation restricted to `keep`, relabelled so that `keep[k]` becomes `k`.
    pub fn restrict(&self, keep: &[usize]) -> Relation {
        let mut r = Relation::empty(keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                if self.get(i, j) {
                    r.set(a, b, true);
                }
            }
        }
        r
    }

    /// Some cycle `c0 R c1 R ... R ck R c0`, if the relation has one.
    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        const FRESH: u8 = 0;
        const OPEN: u8 = 1;
        const DONE: u8 = 2;
        let n = self.n;
        let mut state = vec![FRESH; n];
        let mut stack: Vec<(usize, usize)> = Vec::new();
        for start in 0..n {
            if state[start] != FRESH {
                continue;
            }
            state[start] = OPEN;
            stack.push((start, 0));
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                let mut advanced = false;
                while *next < n {
                    let w = *next;
                    *next += 1;
                    if !self.get(v, w) {
                        continue;
                    }
                    match state[w] {
                        FRESH => {
                            state[w] = OPEN;
                            stack.push((w, 0));
                            advanced = true;
                            break;
                        }
                        OPEN => {
                            let from = stack.iter().position(|&(u, _)| u == w).unwrap();
                            return Some(stack[from..].iter().map(|&(u, _)| u).collect());
                        }
                        _ => {}
                    }
                }
                if !advanced {
                    state[v] = DONE;
                    stack.pop();
                }
            }
        }
        None
    }

    /// An ordering of `0..n` in which every element comes after all of its
    /// predecessors, or `None` when the relation is cyclic.
    ///
    /// Ties are broken by the smallest index, so the result is deterministic.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let mut indegree: Vec<usize> = (0..n).map(|j| self.predecessors(j).count()).collect();
        let mut ready: std::collections::BTreeSet<usize> =
            (0..n).filter(|&j| indegree[j] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for w in 0..n {
                if self.get(v, w) {
                    indegree[w] -= 1;
                    if indegree[w] == 0 {
                        ready.insert(w);
                    }
                }
            }
        }
        (order.len() == n).then_some(order)
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Relation")
            .field("n", &self.n)
            .field("pairs", &self.pairs().collect::<Vec<_>>())
            .finish()
    }
}
