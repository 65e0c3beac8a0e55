use super::FinOrd;
use crate::order::{is_isomorphism, match_by_predecessors};

/// The unique simulation `α ≤ β`, as an element map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimWitness {
    pub map: Vec<usize>,
}

/// `α < β`: a bound `b` in `β` and an isomorphism from `α` onto `β ↓ b`.
///
/// `iso[x]` is the element of `β` (not of the segment) that `x` maps to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedSimWitness {
    pub bound: usize,
    pub iso: Vec<usize>,
}

/// Simulation by matching initial segments: each element goes to the element
/// of `β` whose predecessors are exactly the images of its own predecessors.
/// This is the authoritative route; it is the same algorithm used for mewos.
pub fn simulation(alpha: &FinOrd, beta: &FinOrd) -> Option<SimWitness> {
    match_by_predecessors(alpha, beta).map(|map| SimWitness { map })
}

/// Simulation by order type: `x` goes to the element of `β` at the same
/// position. Must agree with [`simulation`].
pub fn simulation_by_order_type(alpha: &FinOrd, beta: &FinOrd) -> Option<SimWitness> {
    if alpha.size() > beta.size() {
        return None;
    }
    let target = beta.linearization();
    Some(SimWitness {
        map: (0..alpha.size()).map(|x| target[alpha.position(x)]).collect(),
    })
}

/// An isomorphism `α ≅ β`, i.e. a simulation that is bijective and reflects
/// the order.
pub fn isomorphism(alpha: &FinOrd, beta: &FinOrd) -> Option<Vec<usize>> {
    if alpha.size() != beta.size() {
        return None;
    }
    let map = match_by_predecessors(alpha, beta)?;
    is_isomorphism(alpha, beta, &map).then_some(map)
}

/// The bounded simulation `α < β`, found by testing `α ≅ β ↓ b` for each `b`.
pub fn bounded_sim(alpha: &FinOrd, beta: &FinOrd) -> Option<BoundedSimWitness> {
    (0..beta.size()).find_map(|b| {
        let carrier = beta.down_carrier(b).expect("in range");
        if carrier.len() != alpha.size() {
            return None;
        }
        let segment = beta.down(b).expect("in range");
        let iso = isomorphism(alpha, &segment)?;
        Some(BoundedSimWitness {
            bound: b,
            iso: iso.into_iter().map(|i| carrier[i]).collect(),
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simulation_examples() {
        let two = FinOrd::chain(2);
        let three = FinOrd::chain(3);
        assert_eq!(simulation(&two, &three).unwrap().map, vec![0, 1]);
        assert!(simulation(&three, &two).is_none());
        let a = FinOrd::from_pairs(3, &[(2, 0), (2, 1), (0, 1)]).unwrap();
        assert_eq!(simulation(&a, &a).unwrap().map, vec![0, 1, 2]);
        assert_eq!(simulation(&a, &three).unwrap().map, vec![1, 2, 0]);
    }

    #[test]
    fn fast_path_agrees() {
        let a = FinOrd::from_pairs(3, &[(2, 0), (2, 1), (0, 1)]).unwrap();
        let b = FinOrd::from_pairs(4, &[(3, 1), (3, 0), (3, 2), (1, 0), (1, 2), (0, 2)]).unwrap();
        assert_eq!(simulation(&a, &b), simulation_by_order_type(&a, &b));
        assert_eq!(simulation(&b, &a), simulation_by_order_type(&b, &a));
    }

    #[test]
    fn bounded_examples() {
        let two = FinOrd::chain(2);
        let three = FinOrd::chain(3);
        let w = bounded_sim(&two, &three).unwrap();
        assert_eq!(w.bound, 2);
        assert_eq!(w.iso, vec![0, 1]);
        assert!(bounded_sim(&three, &three).is_none());
        let w = bounded_sim(&FinOrd::empty(), &FinOrd::chain(1)).unwrap();
        assert_eq!(w.bound, 0);
        assert!(w.iso.is_empty());
    }
}
