//! Marked extensional wellfounded orders.
//!
//! A [`Mewo`] is a finite carrier with an extensional, wellfounded (but not
//! necessarily transitive) strict relation and an arbitrary marking. Viewed as
//! a hereditarily finite set, the marked elements are its members and the
//! unmarked ones are members of members, and so on.
//!
//! Equality and simulations are decided through Mostowski codes
//! ([`Mewo::codes`]): every element is sent to the set of the codes of its
//! immediate predecessors. Extensionality and wellfoundedness make that map
//! injective, and two initial segments `X ↓⁺ x` and `Y ↓⁺ y` are equal exactly
//! when `x` and `y` have the same code.

mod construct;
mod sim;

use std::fmt;

use crate::hfset::{SetError, SetHandle, SetUniverse};
use crate::order::{check_element, check_extensional, check_wellfounded, MarkedOrder, ValidationError};
use crate::ordinal::FinOrd;
use crate::relation::Relation;

pub use construct::{union, union_in, union_with_representatives};
pub use sim::{
    bounded_sim_mewo, mewo_equal, mewo_equal_in, mewo_isomorphism, partial_sim, principality_check,
    simulation_mewo, simulation_mewo_in, MewoBoundedSim, MewoSimWitness, PartialSim,
};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mewo {
    lt: Relation,
    marked: Vec<bool>,
}

/// Per-element Mostowski codes of a mewo, in some universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MewoCode {
    pub codes: Vec<SetHandle>,
}

impl Mewo {
    /// Checks wellfoundedness, then extensionality. The marking is arbitrary.
    pub fn validate(size: usize, lt: Relation, marked: Vec<bool>) -> Result<Mewo, ValidationError> {
        if lt.len() != size {
            return Err(ValidationError::Shape {
                size,
                found: lt.len(),
            });
        }
        if marked.len() != size {
            return Err(ValidationError::MarkingShape {
                size,
                found: marked.len(),
            });
        }
        check_wellfounded(&lt)?;
        check_extensional(&lt)?;
        Ok(Mewo { lt, marked })
    }

    pub fn from_pairs(size: usize, pairs: &[(usize, usize)], marked: &[usize]) -> Result<Mewo, ValidationError> {
        let out_of_range = pairs
            .iter()
            .flat_map(|&(i, j)| [i, j])
            .chain(marked.iter().copied())
            .find(|&e| e >= size);
        if let Some(element) = out_of_range {
            return Err(ValidationError::ElementOutOfRange { element, size });
        }
        let lt = Relation::from_pairs(size, pairs.iter().copied()).expect("checked range");
        let mut marking = vec![false; size];
        for &m in marked {
            marking[m] = true;
        }
        Self::validate(size, lt, marking)
    }

    pub fn empty() -> Mewo {
        Mewo {
            lt: Relation::empty(0),
            marked: Vec::new(),
        }
    }

    /// One element, marked (`•`) or not (`∘`).
    pub fn point(marked: bool) -> Mewo {
        Mewo {
            lt: Relation::empty(1),
            marked: vec![marked],
        }
    }

    pub fn size(&self) -> usize {
        self.lt.len()
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.lt.get(x, y)
    }

    pub fn relation(&self) -> &Relation {
        &self.lt
    }

    pub fn is_marked(&self, x: usize) -> bool {
        self.marked[x]
    }

    pub fn marking(&self) -> &[bool] {
        &self.marked
    }

    pub fn marked_elements(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.size()).filter(move |&x| self.marked[x])
    }

    /// Transitive closure `<⁺` and reflexive-transitive closure `<*`.
    pub fn closure(&self) -> (Relation, Relation) {
        let plus = self.lt.transitive_closure();
        let star = plus.reflexive_closure();
        (plus, star)
    }

    /// Every element lies `<*`-below some marked element.
    pub fn is_covered(&self) -> bool {
        let (_, star) = self.closure();
        (0..self.size()).all(|x| self.marked_elements().any(|m| star.get(x, m)))
    }

    /// Carrier of `X ↓⁺ x`: elements transitively below `x`, ascending.
    pub fn down_plus_carrier(&self, x: usize) -> Result<Vec<usize>, ValidationError> {
        check_element(self.size(), x)?;
        let (plus, _) = self.closure();
        Ok(plus.predecessors(x).collect())
    }

    /// The initial segment `X ↓⁺ x` with the induced order, marked at the
    /// immediate predecessors of `x`.
    pub fn down_plus(&self, x: usize) -> Result<Mewo, ValidationError> {
        let keep = self.down_plus_carrier(x)?;
        Ok(Mewo {
            lt: self.lt.restrict(&keep),
            marked: keep.iter().map(|&y| self.lt.get(y, x)).collect(),
        })
    }

    /// Same carrier and order, every element marked.
    pub fn mark_all(&self) -> Mewo {
        Mewo {
            lt: self.lt.clone(),
            marked: vec![true; self.size()],
        }
    }

    /// Carrier of the covered part, ascending.
    pub fn covered_carrier(&self) -> Vec<usize> {
        let (_, star) = self.closure();
        (0..self.size())
            .filter(|&x| self.marked_elements().any(|m| star.get(x, m)))
            .collect()
    }

    /// Restriction to the covered elements, with inherited order and marking.
    pub fn covered_part(&self) -> Mewo {
        let keep = self.covered_carrier();
        self.restrict(&keep)
    }

    fn restrict(&self, keep: &[usize]) -> Mewo {
        Mewo {
            lt: self.lt.restrict(keep),
            marked: keep.iter().map(|&y| self.marked[y]).collect(),
        }
    }

    /// Forgets transitivity and marks everything.
    pub fn from_ordinal(alpha: &FinOrd) -> Mewo {
        Mewo {
            lt: alpha.relation().clone(),
            marked: vec![true; alpha.size()],
        }
    }

    /// Applies the bijection `perm` (old label -> new label).
    pub fn relabel(&self, perm: &[usize]) -> Result<Mewo, ValidationError> {
        let n = self.size();
        if perm.len() != n {
            return Err(ValidationError::Shape {
                size: n,
                found: perm.len(),
            });
        }
        let mut lt = Relation::empty(n);
        let mut marked = vec![false; n];
        for x in 0..n {
            check_element(n, perm[x])?;
            marked[perm[x]] = self.marked[x];
        }
        for (i, j) in self.lt.pairs() {
            lt.set(perm[i], perm[j], true);
        }
        Mewo::validate(n, lt, marked)
    }

    /// Mostowski codes: bottom-up, `code(x) = { code(y) : y < x }`.
    pub fn codes(&self, u: &mut SetUniverse) -> Result<MewoCode, SetError> {
        let order = self
            .lt
            .topological_order()
            .expect("validated mewo is wellfounded");
        let mut codes: Vec<Option<SetHandle>> = vec![None; self.size()];
        let mut buf = Vec::new();
        for x in order {
            buf.clear();
            buf.extend(self.lt.predecessors(x).map(|y| codes[y].expect("predecessor coded first")));
            codes[x] = Some(u.mk_set(&buf)?);
        }
        Ok(MewoCode {
            codes: codes.into_iter().map(|c| c.expect("all coded")).collect(),
        })
    }
}

impl MarkedOrder for Mewo {
    fn size(&self) -> usize {
        self.lt.len()
    }

    fn lt(&self, i: usize, j: usize) -> bool {
        self.lt.get(i, j)
    }

    fn is_marked(&self, i: usize) -> bool {
        self.marked[i]
    }
}

impl fmt::Debug for Mewo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::text::mewo_to_text(self, None))
    }
}

/// Small fixtures used across the crate's tests and the counterexample suite.
pub mod fixtures {
    use super::Mewo;

    /// `•`
    pub fn bullet() -> Mewo {
        Mewo::point(true)
    }

    /// `∘`
    pub fn circle() -> Mewo {
        Mewo::point(false)
    }

    /// `∘ ← •`: two comparable elements, only the larger marked.
    pub fn circle_bullet() -> Mewo {
        Mewo::from_pairs(2, &[(0, 1)], &[1]).unwrap()
    }

    /// `• ← •`: the fully marked two-chain.
    pub fn bullet_bullet() -> Mewo {
        Mewo::from_pairs(2, &[(0, 1)], &[0, 1]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn validate_examples() {
        assert!(Mewo::validate(1, Relation::empty(1), vec![true]).is_ok());
        assert!(Mewo::from_pairs(2, &[(0, 1)], &[1]).is_ok());
        assert_eq!(
            Mewo::from_pairs(2, &[], &[]),
            Err(ValidationError::Extensionality { x: 0, y: 1 })
        );
        assert!(matches!(
            Mewo::from_pairs(2, &[(0, 1), (1, 0)], &[]),
            Err(ValidationError::Wellfoundedness { .. })
        ));
        assert!(matches!(
            Mewo::validate(2, Relation::empty(2), vec![true]),
            Err(ValidationError::MarkingShape { .. })
        ));
    }

    #[test]
    fn closure_examples() {
        let x = Mewo::from_pairs(3, &[(0, 1), (1, 2)], &[2]).unwrap();
        let (plus, star) = x.closure();
        assert!(plus.get(0, 2));
        assert!(!x.lt(0, 2));
        assert!(star.get(1, 1) && !plus.get(1, 1));
        assert_eq!(plus.transitive_closure(), plus);
        let (p, s) = Mewo::empty().closure();
        assert_eq!(p.edge_count(), 0);
        assert_eq!(s, Relation::identity(0));
    }

    #[test]
    fn coveredness_examples() {
        assert!(!circle().is_covered());
        assert!(circle_bullet().is_covered());
        assert!(circle().mark_all().is_covered());
        assert!(Mewo::empty().is_covered());
    }

    #[test]
    fn down_plus_examples() {
        assert_eq!(circle_bullet().down_plus(1).unwrap(), bullet());
        assert_eq!(circle_bullet().down_plus(0).unwrap(), Mewo::empty());
        let full = Mewo::from_pairs(3, &[(0, 1), (1, 2), (0, 2)], &[]).unwrap();
        let d = full.down_plus(2).unwrap();
        assert_eq!(d.size(), 2);
        assert!(d.is_marked(0) && d.is_marked(1));
        // Without the shortcut edge only the immediate predecessor is marked.
        let thin = Mewo::from_pairs(3, &[(0, 1), (1, 2)], &[]).unwrap();
        let d = thin.down_plus(2).unwrap();
        assert_eq!(d.marking(), &[false, true]);
        assert!(d.is_covered());
    }

    #[test]
    fn mark_all_examples() {
        assert_eq!(circle().mark_all(), bullet());
        let x = circle_bullet();
        assert_eq!(x.mark_all().mark_all(), x.mark_all());
    }

    #[test]
    fn codes_examples() {
        let mut u = SetUniverse::new();
        let c = circle_bullet().codes(&mut u).unwrap();
        let zero = u.von_neumann(0).unwrap();
        let one = u.von_neumann(1).unwrap();
        assert_eq!(c.codes, vec![zero, one]);
        let five = Mewo::from_ordinal(&FinOrd::chain(5)).codes(&mut u).unwrap();
        for (n, code) in five.codes.iter().enumerate() {
            assert_eq!(*code, u.von_neumann(n).unwrap());
        }
        assert!(Mewo::empty().codes(&mut u).unwrap().codes.is_empty());
    }

    #[test]
    fn covered_part_examples() {
        assert_eq!(circle().covered_part(), Mewo::empty());
        assert_eq!(circle_bullet().covered_part(), circle_bullet());
        let x = Mewo::from_pairs(3, &[(0, 1), (1, 2)], &[0, 1, 2]).unwrap();
        assert_eq!(x.covered_part(), x);
        // 0 < 1 with 2 on its own: only 0 is below the marked 1.
        let y = Mewo::from_pairs(3, &[(0, 1), (1, 2)], &[1]).unwrap();
        assert_eq!(y.covered_carrier(), vec![0, 1]);
    }

    #[test]
    fn from_ordinal_examples() {
        assert_eq!(Mewo::from_ordinal(&FinOrd::empty()), Mewo::empty());
        assert_eq!(Mewo::from_ordinal(&FinOrd::chain(2)), bullet_bullet());
        assert!(Mewo::from_ordinal(&FinOrd::chain(4)).is_covered());
    }
}
