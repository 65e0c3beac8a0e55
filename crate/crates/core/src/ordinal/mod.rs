//! Finite type-theoretic ordinals: carriers with a validated strict order that
//! is wellfounded, extensional and transitive.
//!
//! Elements are indices `0..size`. Labels are arbitrary; two ordinals that
//! differ only by relabelling are the same ordinal, and [`FinOrd::same_ordinal`]
//! decides that. Derived `PartialEq` compares the labelled structures.

mod sim;

use std::fmt;

use crate::order::{check_element, check_extensional, check_wellfounded, MarkedOrder, ValidationError};
use crate::relation::Relation;

pub use sim::{
    bounded_sim, isomorphism, simulation, simulation_by_order_type, BoundedSimWitness, SimWitness,
};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinOrd {
    lt: Relation,
}

impl FinOrd {
    /// Checks the ordinal axioms in order: wellfoundedness, extensionality,
    /// transitivity. Linearity follows from these for finite carriers and is
    /// verified afterwards as a guard.
    pub fn validate(size: usize, lt: Relation) -> Result<FinOrd, ValidationError> {
        if lt.len() != size {
            return Err(ValidationError::Shape {
                size,
                found: lt.len(),
            });
        }
        check_wellfounded(&lt)?;
        check_extensional(&lt)?;
        for x in 0..size {
            for y in lt.successors(x) {
                for z in lt.successors(y) {
                    if !lt.get(x, z) {
                        return Err(ValidationError::Transitivity { x, y, z });
                    }
                }
            }
        }
        for x in 0..size {
            for y in x + 1..size {
                if !lt.get(x, y) && !lt.get(y, x) {
                    return Err(ValidationError::Nonlinear { x, y });
                }
            }
        }
        Ok(FinOrd { lt })
    }

    pub fn from_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<FinOrd, ValidationError> {
        let lt = Relation::from_pairs(size, pairs.iter().copied()).ok_or_else(|| {
            let element = pairs.iter().map(|&(i, j)| i.max(j)).max().unwrap_or(0);
            ValidationError::ElementOutOfRange { element, size }
        })?;
        Self::validate(size, lt)
    }

    pub fn empty() -> FinOrd {
        FinOrd {
            lt: Relation::empty(0),
        }
    }

    /// The canonical `n`-chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> FinOrd {
        FinOrd {
            lt: Relation::chain(n),
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

    /// Position of `x` in the linear order, i.e. the number of its predecessors.
    pub fn position(&self, x: usize) -> usize {
        self.lt.predecessors(x).count()
    }

    /// Elements listed from least to greatest.
    pub fn linearization(&self) -> Vec<usize> {
        let mut by_pos = vec![0; self.size()];
        for x in 0..self.size() {
            by_pos[self.position(x)] = x;
        }
        by_pos
    }

    /// The order type. Validation guarantees the order is linear, so this is
    /// the carrier size.
    pub fn order_type(&self) -> usize {
        debug_assert!((0..self.size()).all(|x| (0..self.size()).all(|y| x == y || self.lt(x, y) || self.lt(y, x))));
        self.size()
    }

    /// Relabelled so that `i < j` iff `i` precedes `j` numerically.
    pub fn canonical(&self) -> FinOrd {
        FinOrd::chain(self.size())
    }

    /// Equality up to relabelling.
    pub fn same_ordinal(&self, other: &FinOrd) -> bool {
        isomorphism(self, other).is_some()
    }

    /// Applies the bijection `perm` (old label -> new label).
    pub fn relabel(&self, perm: &[usize]) -> Result<FinOrd, ValidationError> {
        let n = self.size();
        let mut lt = Relation::empty(n);
        if perm.len() != n {
            return Err(ValidationError::Shape {
                size: n,
                found: perm.len(),
            });
        }
        for (i, j) in self.lt.pairs() {
            check_element(n, perm[i])?;
            check_element(n, perm[j])?;
            lt.set(perm[i], perm[j], true);
        }
        FinOrd::validate(n, lt)
    }

    /// Carrier of `self ↓ a`: the elements below `a`, ascending by label.
    pub fn down_carrier(&self, a: usize) -> Result<Vec<usize>, ValidationError> {
        check_element(self.size(), a)?;
        Ok(self.lt.predecessors(a).collect())
    }

    /// The initial segment below `a` with the induced order.
    pub fn down(&self, a: usize) -> Result<FinOrd, ValidationError> {
        let keep = self.down_carrier(a)?;
        Ok(FinOrd {
            lt: self.lt.restrict(&keep),
        })
    }

    /// Ordered coproduct: every left element precedes every right element.
    /// Left elements keep their labels, right element `b` becomes `size(a) + b`.
    pub fn sum(&self, other: &FinOrd) -> FinOrd {
        let n = self.size();
        let m = other.size();
        let mut lt = Relation::empty(n + m);
        for (i, j) in self.lt.pairs() {
            lt.set(i, j, true);
        }
        for (i, j) in other.lt.pairs() {
            lt.set(n + i, n + j, true);
        }
        for i in 0..n {
            for j in 0..m {
                lt.set(i, n + j, true);
            }
        }
        FinOrd { lt }
    }

    /// `self + 1`.
    pub fn successor(&self) -> FinOrd {
        self.sum(&FinOrd::chain(1))
    }

    /// Supremum of a finite family, built as the quotient of the disjoint union
    /// by isomorphism of initial segments, ordered by bounded simulation of
    /// initial segments.
    ///
    /// Each class is represented by its lexicographically least `(member,
    /// element)` pair and classes are labelled in representative order.
    pub fn sup(family: &[FinOrd]) -> FinOrd {
        Self::sup_with_classes(family).0
    }

    /// Like [`FinOrd::sup`], also returning the representative of each class.
    pub fn sup_with_classes(family: &[FinOrd]) -> (FinOrd, Vec<(usize, usize)>) {
        let mut reps: Vec<(usize, usize)> = Vec::new();
        let mut segments: Vec<FinOrd> = Vec::new();
        for (i, alpha) in family.iter().enumerate() {
            for x in 0..alpha.size() {
                let seg = alpha.down(x).expect("element in range");
                if !segments.iter().any(|s| s.same_ordinal(&seg)) {
                    reps.push((i, x));
                    segments.push(seg);
                }
            }
        }
        let k = reps.len();
        let mut lt = Relation::empty(k);
        for p in 0..k {
            for q in 0..k {
                if p != q && bounded_sim(&segments[p], &segments[q]).is_some() {
                    lt.set(p, q, true);
                }
            }
        }
        let sup = FinOrd::validate(k, lt).expect("supremum of ordinals is an ordinal");
        (sup, reps)
    }
}

impl MarkedOrder for FinOrd {
    fn size(&self) -> usize {
        self.lt.len()
    }

    fn lt(&self, i: usize, j: usize) -> bool {
        self.lt.get(i, j)
    }

    fn is_marked(&self, _: usize) -> bool {
        true
    }
}

impl fmt::Debug for FinOrd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::text::ord_to_text(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_examples() {
        assert!(FinOrd::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]).is_ok());
        assert_eq!(
            FinOrd::from_pairs(2, &[]),
            Err(ValidationError::Extensionality { x: 0, y: 1 })
        );
        assert!(matches!(
            FinOrd::from_pairs(2, &[(0, 1), (1, 0)]),
            Err(ValidationError::Wellfoundedness { .. })
        ));
        assert_eq!(
            FinOrd::from_pairs(3, &[(0, 1), (1, 2)]),
            Err(ValidationError::Transitivity { x: 0, y: 1, z: 2 })
        );
        assert!(matches!(
            FinOrd::validate(3, Relation::empty(2)),
            Err(ValidationError::Shape { size: 3, found: 2 })
        ));
    }

    #[test]
    fn down_examples() {
        let three = FinOrd::chain(3);
        assert_eq!(three.down(2).unwrap(), FinOrd::chain(2));
        assert_eq!(three.down(0).unwrap(), FinOrd::empty());
        let d = three.down(2).unwrap();
        assert_eq!(d.down(1).unwrap(), three.down(1).unwrap());
        assert!(matches!(three.down(3), Err(ValidationError::ElementOutOfRange { .. })));
    }

    #[test]
    fn sum_examples() {
        let a = FinOrd::from_pairs(3, &[(2, 0), (2, 1), (0, 1)]).unwrap();
        assert_eq!(a.sum(&FinOrd::empty()), a);
        assert_eq!(FinOrd::chain(1).sum(&FinOrd::chain(1)), FinOrd::chain(2));
        let s = a.successor();
        assert_eq!(s.down(3).unwrap(), a);
        assert_eq!(FinOrd::chain(2).sum(&FinOrd::chain(3)).order_type(), 5);
    }

    #[test]
    fn sup_examples() {
        assert_eq!(FinOrd::sup(&[]), FinOrd::empty());
        let s = FinOrd::sup(&[FinOrd::chain(2), FinOrd::chain(3), FinOrd::chain(1)]);
        assert!(s.same_ordinal(&FinOrd::chain(3)));
        let a = FinOrd::from_pairs(3, &[(1, 0), (1, 2), (0, 2)]).unwrap();
        assert!(FinOrd::sup(std::slice::from_ref(&a)).same_ordinal(&a));
    }

    #[test]
    fn sup_representatives_are_lexicographically_least() {
        let (s, reps) = FinOrd::sup_with_classes(&[FinOrd::chain(1), FinOrd::chain(3)]);
        assert_eq!(reps, vec![(0, 0), (1, 1), (1, 2)]);
        assert_eq!(s, FinOrd::chain(3));
    }

    #[test]
    fn order_type_and_linearization() {
        assert_eq!(FinOrd::empty().order_type(), 0);
        assert_eq!(FinOrd::chain(7).order_type(), 7);
        let a = FinOrd::from_pairs(3, &[(2, 0), (2, 1), (0, 1)]).unwrap();
        assert_eq!(a.linearization(), vec![2, 0, 1]);
        assert_eq!(a.canonical(), FinOrd::chain(3));
        assert!(a.same_ordinal(&FinOrd::chain(3)));
        assert_ne!(a, FinOrd::chain(3));
    }
}
