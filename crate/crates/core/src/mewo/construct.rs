use std::collections::HashMap;

use super::Mewo;
use crate::hfset::{SetError, SetHandle, SetUniverse};
use crate::order::ValidationError;
use crate::relation::Relation;

impl Mewo {
    /// `X ⊎ {⋆}`: old elements keep their order, `x < ⋆` iff `x` is marked,
    /// and only `⋆` (labelled `size(X)`) is marked.
    ///
    /// Only covered inputs are accepted. For others the construction may fail
    /// extensionality (`∘`) or succeed by accident, so they are rejected
    /// outright with the first uncovered element.
    pub fn singleton(&self) -> Result<Mewo, ValidationError> {
        let covered = self.covered_carrier();
        if let Some(element) = (0..self.size()).find(|x| !covered.contains(x)) {
            return Err(ValidationError::NotCovered { element });
        }
        self.adjoin_top()
    }

    /// The singleton construction without the coveredness guard.
    pub(crate) fn adjoin_top(&self) -> Result<Mewo, ValidationError> {
        let n = self.size();
        let mut lt = Relation::empty(n + 1);
        for (i, j) in self.lt.pairs() {
            lt.set(i, j, true);
        }
        for x in self.marked_elements() {
            lt.set(x, n, true);
        }
        let mut marked = vec![false; n + 1];
        marked[n] = true;
        Mewo::validate(n + 1, lt, marked)
    }
}

/// Union of a finite family, with the representative `(member, element)` of
/// each class. Classes are labelled in representative order.
pub fn union_in(u: &mut SetUniverse, family: &[Mewo]) -> Result<(Mewo, Vec<(usize, usize)>), SetError> {
    let mut class_of: HashMap<SetHandle, usize> = HashMap::new();
    let mut reps: Vec<(usize, usize)> = Vec::new();
    let mut codes: Vec<SetHandle> = Vec::new();
    let mut marked: Vec<bool> = Vec::new();
    for (a, member) in family.iter().enumerate() {
        let member_codes = member.codes(u)?;
        for (x, &code) in member_codes.codes.iter().enumerate() {
            let class = *class_of.entry(code).or_insert_with(|| {
                reps.push((a, x));
                codes.push(code);
                marked.push(false);
                codes.len() - 1
            });
            // Marked if some representative is marked.
            marked[class] |= member.is_marked(x);
        }
    }
    // `[a,x] < [b,y]` iff `Fa ↓⁺ x < Fb ↓⁺ y`, which holds iff some immediate
    // predecessor of `y` has the code of `x`, i.e. `code(x) ∈ code(y)`.
    let k = codes.len();
    let mut lt = Relation::empty(k);
    for q in 0..k {
        for child in u.elements(codes[q]) {
            if let Some(&p) = class_of.get(&child) {
                lt.set(p, q, true);
            }
        }
    }
    let union = Mewo::validate(k, lt, marked).expect("union of mewos is a mewo");
    Ok((union, reps))
}

pub fn union_with_representatives(family: &[Mewo]) -> (Mewo, Vec<(usize, usize)>) {
    union_in(&mut SetUniverse::scratch(), family).expect("scratch universe is unbounded")
}

pub fn union(family: &[Mewo]) -> Mewo {
    union_with_representatives(family).0
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{mewo_equal, simulation_mewo};
    use super::*;

    #[test]
    fn singleton_examples() {
        assert_eq!(Mewo::empty().singleton().unwrap(), bullet());
        assert_eq!(bullet().singleton().unwrap(), circle_bullet());
        assert_eq!(circle().singleton(), Err(ValidationError::NotCovered { element: 0 }));
        assert_eq!(circle().adjoin_top(), Err(ValidationError::Extensionality { x: 0, y: 1 }));
        let s = circle_bullet().singleton().unwrap();
        assert!(s.is_covered());
        assert_eq!(s.marked_elements().collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn union_examples() {
        assert_eq!(union(&[]), Mewo::empty());
        let (m, reps) = union_with_representatives(&[bullet_bullet(), circle_bullet()]);
        assert_eq!(m, bullet_bullet());
        assert_eq!(reps, vec![(0, 0), (0, 1)]);
        // The other order: the class of ∅ is unmarked in its representative.
        let m = union(&[circle_bullet(), bullet_bullet()]);
        assert!(mewo_equal(&m, &bullet_bullet()));
        let x = Mewo::from_pairs(3, &[(0, 1), (1, 2), (0, 2)], &[1, 2]).unwrap();
        assert_eq!(union(std::slice::from_ref(&x)), x);
    }

    #[test]
    fn union_is_an_upper_bound() {
        let family = [bullet(), circle_bullet(), bullet_bullet()];
        let m = union(&family);
        for f in &family {
            assert!(simulation_mewo(f, &m).is_some());
        }
        assert!(m.is_covered());
    }
}
