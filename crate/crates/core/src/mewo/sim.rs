use std::collections::HashMap;

use super::Mewo;
use crate::hfset::{SetError, SetHandle, SetUniverse};

/// The unique simulation `X ≤ Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MewoSimWitness {
    pub map: Vec<usize>,
    /// Whether unmarked elements also land on unmarked elements.
    pub reflects_marking: bool,
}

/// `X < Y`: a marked bound `y` and an equivalence `X ≃ Y ↓⁺ y`, the latter
/// given as a map into the carrier of `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MewoBoundedSim {
    pub bound: usize,
    pub equivalence: Vec<usize>,
}

/// `X ≤_M Y`: each marked `x` paired with the unique marked `y` such that
/// `X ↓⁺ x = Y ↓⁺ y`. Pairs are sorted by `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialSim {
    pub pairs: Vec<(usize, usize)>,
}

fn code_index(codes: &[SetHandle]) -> HashMap<SetHandle, usize> {
    codes.iter().enumerate().map(|(i, &c)| (c, i)).collect()
}

/// Isomorphism preserving and reflecting order and marking, computed from
/// codes in `u`: `x` goes to the element of `Y` with the same code.
pub fn mewo_isomorphism_in(u: &mut SetUniverse, x: &Mewo, y: &Mewo) -> Result<Option<Vec<usize>>, SetError> {
    if x.size() != y.size() {
        return Ok(None);
    }
    let cx = x.codes(u)?;
    let cy = y.codes(u)?;
    let index = code_index(&cy.codes);
    let mut map = Vec::with_capacity(x.size());
    for (e, code) in cx.codes.iter().enumerate() {
        match index.get(code) {
            Some(&t) if x.is_marked(e) == y.is_marked(t) => map.push(t),
            _ => return Ok(None),
        }
    }
    // Codes are injective on each carrier and the sizes agree, so the map is a
    // bijection; order is carried along because `a < b` iff `code(a) ∈ code(b)`.
    Ok(Some(map))
}

pub fn mewo_isomorphism(x: &Mewo, y: &Mewo) -> Option<Vec<usize>> {
    mewo_isomorphism_in(&mut SetUniverse::scratch(), x, y).expect("scratch universe is unbounded")
}

/// Equality of mewos: same code set, with matching markings.
pub fn mewo_equal_in(u: &mut SetUniverse, x: &Mewo, y: &Mewo) -> Result<bool, SetError> {
    Ok(mewo_isomorphism_in(u, x, y)?.is_some())
}

pub fn mewo_equal(x: &Mewo, y: &Mewo) -> bool {
    mewo_isomorphism(x, y).is_some()
}

/// `X ≤ Y`, decided pointwise: `f(x)` is the element of `Y` with the same
/// code, which must exist for every `x` and be marked whenever `x` is.
pub fn simulation_mewo_in(u: &mut SetUniverse, x: &Mewo, y: &Mewo) -> Result<Option<MewoSimWitness>, SetError> {
    let cx = x.codes(u)?;
    let cy = y.codes(u)?;
    let index = code_index(&cy.codes);
    let mut map = Vec::with_capacity(x.size());
    let mut reflects_marking = true;
    for (e, code) in cx.codes.iter().enumerate() {
        let Some(&t) = index.get(code) else {
            return Ok(None);
        };
        if x.is_marked(e) && !y.is_marked(t) {
            return Ok(None);
        }
        reflects_marking &= x.is_marked(e) == y.is_marked(t);
        map.push(t);
    }
    Ok(Some(MewoSimWitness { map, reflects_marking }))
}

pub fn simulation_mewo(x: &Mewo, y: &Mewo) -> Option<MewoSimWitness> {
    simulation_mewo_in(&mut SetUniverse::scratch(), x, y).expect("scratch universe is unbounded")
}

/// `X < Y`: the unique marked `y` with `X = Y ↓⁺ y`.
pub fn bounded_sim_mewo(x: &Mewo, y: &Mewo) -> Option<MewoBoundedSim> {
    let mut u = SetUniverse::scratch();
    for bound in y.marked_elements() {
        let carrier = y.down_plus_carrier(bound).expect("in range");
        if carrier.len() != x.size() {
            continue;
        }
        let segment = y.down_plus(bound).expect("in range");
        if let Some(iso) = mewo_isomorphism_in(&mut u, x, &segment).expect("scratch universe is unbounded") {
            return Some(MewoBoundedSim {
                bound,
                equivalence: iso.into_iter().map(|i| carrier[i]).collect(),
            });
        }
    }
    None
}

/// `X ≤_M Y`. Segment equality `X ↓⁺ x = Y ↓⁺ y` is code equality.
pub fn partial_sim(x: &Mewo, y: &Mewo) -> Option<PartialSim> {
    let mut u = SetUniverse::scratch();
    let cx = x.codes(&mut u).expect("scratch universe is unbounded");
    let cy = y.codes(&mut u).expect("scratch universe is unbounded");
    let index: HashMap<SetHandle, usize> = y.marked_elements().map(|t| (cy.codes[t], t)).collect();
    let pairs = x
        .marked_elements()
        .map(|e| index.get(&cx.codes[e]).map(|&t| (e, t)))
        .collect::<Option<Vec<_>>>()?;
    Some(PartialSim { pairs })
}

/// Whether the restriction map `(X ≤ Y) → (X ≤_M Y)` is an equivalence for
/// this particular `Y`. Both sides are propositions, so that is logical
/// equivalence of their inhabitation.
pub fn principality_check(x: &Mewo, y: &Mewo) -> bool {
    simulation_mewo(x, y).is_some() == partial_sim(x, y).is_some()
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn equality_examples() {
        let x = circle_bullet();
        assert!(mewo_equal(&x, &x));
        assert!(!mewo_equal(&bullet(), &circle()));
        let y = Mewo::from_pairs(3, &[(0, 2), (1, 2), (0, 1)], &[2]).unwrap();
        let permuted = y.relabel(&[2, 0, 1]).unwrap();
        assert_ne!(y, permuted);
        assert!(mewo_equal(&y, &permuted));
        assert_eq!(mewo_isomorphism(&y, &permuted), Some(vec![2, 0, 1]));
    }

    #[test]
    fn simulation_examples() {
        assert!(simulation_mewo(&bullet(), &circle_bullet()).is_none());
        let x = circle_bullet();
        let w = simulation_mewo(&x, &x.mark_all()).unwrap();
        assert_eq!(w.map, vec![0, 1]);
        assert!(!w.reflects_marking);
        let w = simulation_mewo(&bullet(), &bullet()).unwrap();
        assert_eq!(w.map, vec![0]);
        assert!(w.reflects_marking);
    }

    #[test]
    fn bounded_examples() {
        let w = bounded_sim_mewo(&bullet(), &circle_bullet()).unwrap();
        assert_eq!(w.bound, 1);
        assert_eq!(w.equivalence, vec![0]);
        let w = bounded_sim_mewo(&Mewo::empty(), &bullet()).unwrap();
        assert_eq!(w.bound, 0);
        assert!(bounded_sim_mewo(&Mewo::empty(), &circle_bullet()).is_none());
    }

    #[test]
    fn partial_examples() {
        let x = circle();
        assert!(partial_sim(&x, &x.covered_part()).is_some());
        assert!(partial_sim(&bullet(), &circle_bullet()).is_none());
        let y = circle_bullet();
        assert_eq!(partial_sim(&y, &y).unwrap().pairs, vec![(1, 1)]);
    }

    #[test]
    fn principality_examples() {
        let covered = circle_bullet();
        for y in [Mewo::empty(), bullet(), circle(), circle_bullet(), bullet_bullet()] {
            assert!(principality_check(&covered, &y));
        }
        assert!(!principality_check(&circle(), &circle().covered_part()));
        assert!(principality_check(&circle(), &circle()));
    }
}
