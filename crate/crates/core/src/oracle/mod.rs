//! Brute-force reference implementations and structure generators.
//!
//! Nothing here calls the optimized decision procedures: simulations are found
//! by trying maps, isomorphisms by trying bijections, segments are computed
//! with a local closure, and set enumeration only uses `mk_set`.

mod enumerate;
mod generate;

use thiserror::Error;

use crate::hfset::SetError;
use crate::order::MarkedOrder;

pub use enumerate::{enumerate_graphs, enumerate_mewos, enumerate_ordinals, enumerate_v, permutations};
pub use generate::{large_dag, GenConfig, Generator};

/// Largest carrier the exhaustive map search accepts.
pub const MAX_SEARCH_SIZE: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("size {size} exceeds the oracle limit {limit}")]
    SizeLimit { size: usize, limit: usize },
    #[error(transparent)]
    Set(#[from] SetError),
}

fn check_size(size: usize, limit: usize) -> Result<(), OracleError> {
    if size > limit {
        Err(OracleError::SizeLimit { size, limit })
    } else {
        Ok(())
    }
}

/// A carrier given by explicit tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub lt: Vec<Vec<bool>>,
    pub marked: Vec<bool>,
}

impl Table {
    pub fn of<A: MarkedOrder + ?Sized>(a: &A) -> Table {
        let n = a.size();
        Table {
            lt: (0..n).map(|i| (0..n).map(|j| a.lt(i, j)).collect()).collect(),
            marked: (0..n).map(|i| a.is_marked(i)).collect(),
        }
    }
}

impl MarkedOrder for Table {
    fn size(&self) -> usize {
        self.marked.len()
    }

    fn lt(&self, i: usize, j: usize) -> bool {
        self.lt[i][j]
    }

    fn is_marked(&self, i: usize) -> bool {
        self.marked[i]
    }
}

/// The three simulation clauses, written out.
pub fn satisfies_simulation<A, B>(x: &A, y: &B, f: &[usize]) -> bool
where
    A: MarkedOrder + ?Sized,
    B: MarkedOrder + ?Sized,
{
    let n = x.size();
    for a in 0..n {
        if x.is_marked(a) && !y.is_marked(f[a]) {
            return false;
        }
        for b in 0..n {
            if x.lt(a, b) && !y.lt(f[a], f[b]) {
                return false;
            }
        }
        for t in 0..y.size() {
            if y.lt(t, f[a]) && !(0..n).any(|p| x.lt(p, a) && f[p] == t) {
                return false;
            }
        }
    }
    true
}

/// Every map `X → Y` satisfying the simulation clauses. Partial maps are
/// pruned on marking and monotonicity; complete maps are checked in full.
pub fn enum_simulations<A, B>(x: &A, y: &B) -> Result<Vec<Vec<usize>>, OracleError>
where
    A: MarkedOrder + ?Sized,
    B: MarkedOrder + ?Sized,
{
    check_size(x.size(), MAX_SEARCH_SIZE)?;
    check_size(y.size(), MAX_SEARCH_SIZE)?;
    let mut out = Vec::new();
    let mut f = Vec::with_capacity(x.size());
    search_maps(x, y, &mut f, false, &mut out);
    Ok(out)
}

/// Every bijection preserving and reflecting order and marking.
pub fn enum_isomorphisms<A, B>(x: &A, y: &B) -> Result<Vec<Vec<usize>>, OracleError>
where
    A: MarkedOrder + ?Sized,
    B: MarkedOrder + ?Sized,
{
    check_size(x.size(), MAX_SEARCH_SIZE)?;
    check_size(y.size(), MAX_SEARCH_SIZE)?;
    if x.size() != y.size() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut f = Vec::with_capacity(x.size());
    search_maps(x, y, &mut f, true, &mut out);
    Ok(out)
}

fn search_maps<A, B>(x: &A, y: &B, f: &mut Vec<usize>, bijective: bool, out: &mut Vec<Vec<usize>>)
where
    A: MarkedOrder + ?Sized,
    B: MarkedOrder + ?Sized,
{
    let a = f.len();
    if a == x.size() {
        let ok = if bijective {
            (0..a).all(|p| (0..a).all(|q| x.lt(p, q) == y.lt(f[p], f[q])))
        } else {
            satisfies_simulation(x, y, f)
        };
        if ok {
            out.push(f.clone());
        }
        return;
    }
    for t in 0..y.size() {
        if bijective && (f.contains(&t) || x.is_marked(a) != y.is_marked(t)) {
            continue;
        }
        if x.is_marked(a) && !y.is_marked(t) {
            continue;
        }
        let consistent = (0..a).all(|p| (!x.lt(p, a) || y.lt(f[p], t)) && (!x.lt(a, p) || y.lt(t, f[p])));
        if !consistent {
            continue;
        }
        f.push(t);
        search_maps(x, y, f, bijective, out);
        f.pop();
    }
}

/// Transitive predecessors of `top` by depth-first search over `lt`.
fn strictly_below<A: MarkedOrder + ?Sized>(a: &A, top: usize) -> Vec<usize> {
    let n = a.size();
    let mut seen = vec![false; n];
    let mut stack = vec![top];
    while let Some(v) = stack.pop() {
        for p in 0..n {
            if a.lt(p, v) && !seen[p] {
                seen[p] = true;
                stack.push(p);
            }
        }
    }
    (0..n).filter(|&p| seen[p]).collect()
}

fn segment<A: MarkedOrder + ?Sized>(a: &A, carrier: &[usize], mark: impl Fn(usize) -> bool) -> Table {
    Table {
        lt: carrier.iter().map(|&i| carrier.iter().map(|&j| a.lt(i, j)).collect()).collect(),
        marked: carrier.iter().map(|&i| mark(i)).collect(),
    }
}

/// All `(b, iso)` with `α ≃ β ↓ b`; `iso` maps into the labels of `β`.
pub fn enum_bounded_sims_ord<A, B>(alpha: &A, beta: &B) -> Result<Vec<(usize, Vec<usize>)>, OracleError>
where
    A: MarkedOrder + ?Sized,
    B: MarkedOrder + ?Sized,
{
    let mut out = Vec::new();
    for b in 0..beta.size() {
        let carrier: Vec<usize> = (0..beta.size()).filter(|&p| beta.lt(p, b)).collect();
        let seg = segment(beta, &carrier, |_| true);
        for iso in enum_isomorphisms(&Table::of(alpha).all_marked(), &seg)? {
            out.push((b, iso.into_iter().map(|i| carrier[i]).collect()));
        }
    }
    Ok(out)
}

/// All `(y, iso)` with `y` marked and `X ≃ Y ↓⁺ y`, where the segment holds
/// the transitive predecessors of `y` and marks the immediate ones.
pub fn enum_bounded_sims_mewo<A, B>(x: &A, y: &B) -> Result<Vec<(usize, Vec<usize>)>, OracleError>
where
    A: MarkedOrder + ?Sized,
    B: MarkedOrder + ?Sized,
{
    let mut out = Vec::new();
    for top in (0..y.size()).filter(|&t| y.is_marked(t)) {
        let carrier = strictly_below(y, top);
        let seg = segment(y, &carrier, |i| y.lt(i, top));
        for iso in enum_isomorphisms(x, &seg)? {
            out.push((top, iso.into_iter().map(|i| carrier[i]).collect()));
        }
    }
    Ok(out)
}

impl Table {
    fn all_marked(mut self) -> Table {
        self.marked.iter_mut().for_each(|m| *m = true);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mewo::fixtures::*;
    use crate::mewo::Mewo;
    use crate::ordinal::FinOrd;

    #[test]
    fn simulation_enumeration_examples() {
        let sims = enum_simulations(&FinOrd::chain(2), &FinOrd::chain(3)).unwrap();
        assert_eq!(sims, vec![vec![0, 1]]);
        assert!(enum_simulations(&bullet(), &circle_bullet()).unwrap().is_empty());
        let x = Mewo::from_pairs(3, &[(0, 1), (1, 2)], &[0, 2]).unwrap();
        assert_eq!(enum_simulations(&x, &x).unwrap(), vec![vec![0, 1, 2]]);
        assert!(matches!(
            enum_simulations(&FinOrd::chain(7), &FinOrd::chain(7)),
            Err(OracleError::SizeLimit { size: 7, limit: 6 })
        ));
    }

    #[test]
    fn isomorphism_enumeration_examples() {
        let a = FinOrd::from_pairs(3, &[(2, 0), (2, 1), (0, 1)]).unwrap();
        assert_eq!(enum_isomorphisms(&a, &FinOrd::chain(3)).unwrap(), vec![vec![1, 2, 0]]);
        assert!(enum_isomorphisms(&bullet(), &circle()).unwrap().is_empty());
    }

    #[test]
    fn bounded_enumeration_examples() {
        let b = enum_bounded_sims_ord(&FinOrd::chain(2), &FinOrd::chain(3)).unwrap();
        assert_eq!(b, vec![(2, vec![0, 1])]);
        let b = enum_bounded_sims_mewo(&bullet(), &circle_bullet()).unwrap();
        assert_eq!(b, vec![(1, vec![0])]);
        assert!(enum_bounded_sims_mewo(&Mewo::empty(), &circle_bullet()).unwrap().is_empty());
    }
}
