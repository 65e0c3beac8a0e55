//! Common interface of finite ordinals and mewos, and the algorithms that only
//! need that interface.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use thiserror::Error;

use crate::relation::Relation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("relation is {found}x{found} but the carrier has {size} elements")]
    Shape { size: usize, found: usize },
    #[error("marking has {found} entries but the carrier has {size} elements")]
    MarkingShape { size: usize, found: usize },
    #[error("not wellfounded: cycle through {cycle:?}")]
    Wellfoundedness { cycle: Vec<usize> },
    #[error("not extensional: {x} and {y} have the same predecessors")]
    Extensionality { x: usize, y: usize },
    #[error("not transitive: {x} < {y} < {z} but not {x} < {z}")]
    Transitivity { x: usize, y: usize, z: usize },
    #[error("not linear: {x} and {y} are incomparable")]
    Nonlinear { x: usize, y: usize },
    #[error("element {element} lies below no marked element")]
    NotCovered { element: usize },
    #[error("element {element} out of range for a carrier of {size}")]
    ElementOutOfRange { element: usize, size: usize },
}

/// A finite carrier `0..size` with a strict relation and a marking.
///
/// Ordinals are viewed as fully marked.
pub trait MarkedOrder {
    fn size(&self) -> usize;
    fn lt(&self, i: usize, j: usize) -> bool;
    fn is_marked(&self, i: usize) -> bool;
}

pub(crate) fn check_element(size: usize, element: usize) -> Result<(), ValidationError> {
    if element < size {
        Ok(())
    } else {
        Err(ValidationError::ElementOutOfRange { element, size })
    }
}

pub(crate) fn check_wellfounded(lt: &Relation) -> Result<(), ValidationError> {
    match lt.find_cycle() {
        Some(cycle) => Err(ValidationError::Wellfoundedness { cycle }),
        None => Ok(()),
    }
}

/// First pair `x < y` (lexicographically) with equal predecessor sets.
pub(crate) fn check_extensional(lt: &Relation) -> Result<(), ValidationError> {
    let mut first: HashMap<Vec<bool>, usize> = HashMap::new();
    let mut clash: Option<(usize, usize)> = None;
    for y in 0..lt.len() {
        match first.entry(lt.predecessor_set(y)) {
            Entry::Occupied(e) => {
                let x = *e.get();
                // The least partner of a column is its first occurrence.
                if clash.is_none_or(|(cx, _)| x < cx) {
                    clash = Some((x, y));
                }
            }
            Entry::Vacant(e) => {
                e.insert(y);
            }
        }
    }
    match clash {
        Some((x, y)) => Err(ValidationError::Extensionality { x, y }),
        None => Ok(()),
    }
}

/// Matches every element of `dom` to the element of `cod` whose predecessor
/// set is exactly the image of its own predecessor set, processing `dom`
/// predecessors-first. Marked elements must land on marked elements.
///
/// For extensional wellfounded `cod` the match is unique when it exists, and
/// the resulting map is precisely the simulation `dom ≤ cod`: monotonicity
/// gives "image of predecessors ⊆ predecessors of the image", the
/// initial-segment property gives the reverse inclusion.
pub fn match_by_predecessors<A, B>(dom: &A, cod: &B) -> Option<Vec<usize>>
where
    A: MarkedOrder + ?Sized,
    B: MarkedOrder + ?Sized,
{
    let n = dom.size();
    let m = cod.size();
    let order = topological_order(dom)?;
    let mut map = vec![usize::MAX; n];
    let mut image = vec![false; m];
    for x in order {
        image.iter_mut().for_each(|b| *b = false);
        for p in 0..n {
            if dom.lt(p, x) {
                image[map[p]] = true;
            }
        }
        let y = (0..m).find(|&y| (0..m).all(|q| cod.lt(q, y) == image[q]))?;
        if dom.is_marked(x) && !cod.is_marked(y) {
            return None;
        }
        map[x] = y;
    }
    Some(map)
}

fn topological_order<A: MarkedOrder + ?Sized>(a: &A) -> Option<Vec<usize>> {
    let n = a.size();
    let mut pending: Vec<usize> = (0..n).map(|j| (0..n).filter(|&i| a.lt(i, j)).count()).collect();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let x = (0..n).find(|&x| !placed[x] && pending[x] == 0)?;
        placed[x] = true;
        order.push(x);
        for y in 0..n {
            if a.lt(x, y) {
                pending[y] -= 1;
            }
        }
    }
    Some(order)
}

/// Checks the three simulation clauses for a given map.
pub fn is_simulation<A, B>(dom: &A, cod: &B, map: &[usize]) -> bool
where
    A: MarkedOrder + ?Sized,
    B: MarkedOrder + ?Sized,
{
    let n = dom.size();
    let m = cod.size();
    if map.len() != n || map.iter().any(|&y| y >= m) {
        return false;
    }
    let marking = (0..n).all(|x| !dom.is_marked(x) || cod.is_marked(map[x]));
    let monotone = (0..n).all(|a| (0..n).all(|b| !dom.lt(a, b) || cod.lt(map[a], map[b])));
    let segment = (0..n).all(|x| (0..m).all(|y| !cod.lt(y, map[x]) || (0..n).any(|p| dom.lt(p, x) && map[p] == y)));
    marking && monotone && segment
}

/// Bijective, order preserving and reflecting, marking preserving and reflecting.
pub fn is_isomorphism<A, B>(dom: &A, cod: &B, map: &[usize]) -> bool
where
    A: MarkedOrder + ?Sized,
    B: MarkedOrder + ?Sized,
{
    let n = dom.size();
    if cod.size() != n || map.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &y in map {
        if y >= n || hit[y] {
            return false;
        }
        hit[y] = true;
    }
    (0..n).all(|x| dom.is_marked(x) == cod.is_marked(map[x]))
        && (0..n).all(|a| (0..n).all(|b| dom.lt(a, b) == cod.lt(map[a], map[b])))
}
