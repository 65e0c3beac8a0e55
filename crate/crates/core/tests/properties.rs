use hfkit_core::SetUniverse;
use proptest::prelude::*;

proptest! {
    // A set depends only on which members it has: order and repetition are
    // invisible, and every member is a member.
    #[test]
    fn mk_set_ignores_order_and_duplicates(picks in prop::collection::vec(0usize..10, 0..8), rot in 0usize..8) {
        let mut u = SetUniverse::new();
        let pool: Vec<_> = (0..10).map(|n| u.von_neumann(n).unwrap()).collect();
        let members: Vec<_> = picks.iter().map(|&i| pool[i]).collect();
        let mut shuffled = members.clone();
        if !shuffled.is_empty() {
            let k = rot % shuffled.len();
            shuffled.rotate_left(k);
        }
        shuffled.extend(members.iter().copied());
        let a = u.mk_set(&members).unwrap();
        let b = u.mk_set(&shuffled).unwrap();
        prop_assert_eq!(a, b);
        let mut distinct = picks.clone();
        distinct.sort_unstable();
        distinct.dedup();
        prop_assert_eq!(u.cardinality(a), distinct.len());
        for &m in &members {
            prop_assert!(u.mem(m, a).unwrap());
        }
    }
}
