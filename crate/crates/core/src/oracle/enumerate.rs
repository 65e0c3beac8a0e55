use std::collections::BTreeSet;

use super::{check_size, OracleError};
use crate::hfset::{PointedGraph, SetHandle, SetUniverse};
use crate::mewo::Mewo;
use crate::ordinal::FinOrd;
use crate::relation::Relation;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("a larger suffix element exists");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// The stage `V_level`: all sets of rank below `level`, built as iterated
/// powersets. Sizes are 0, 1, 2, 4, 16, 65536.
pub fn enumerate_v(u: &mut SetUniverse, level: usize) -> Result<Vec<SetHandle>, OracleError> {
    check_size(level, 5)?;
    let mut stage: Vec<SetHandle> = Vec::new();
    for _ in 0..level {
        let k = stage.len();
        let mut next = Vec::with_capacity(1 << k);
        let mut members = Vec::with_capacity(k);
        for mask in 0u32..(1u32 << k) {
            members.clear();
            members.extend((0..k).filter(|&i| mask >> i & 1 == 1).map(|i| stage[i]));
            next.push(u.mk_set(&members)?);
        }
        stage = next;
    }
    Ok(stage)
}

/// All labellings of the `n`-element ordinal, one per permutation: `i < j`
/// iff `p[i] < p[j]`.
pub fn enumerate_ordinals(n: usize) -> Result<Vec<FinOrd>, OracleError> {
    check_size(n, 8)?;
    Ok(permutations(n)
        .into_iter()
        .map(|p| {
            let lt = Relation::from_pairs(n, (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] < p[j]))
                .expect("in range");
            FinOrd::validate(n, lt).expect("a linear order is an ordinal")
        })
        .collect())
}

fn acyclic(n: usize, edge: &dyn Fn(usize, usize) -> bool) -> bool {
    let mut removed = vec![false; n];
    for _ in 0..n {
        let Some(v) = (0..n).find(|&v| !removed[v] && !(0..n).any(|p| !removed[p] && edge(p, v))) else {
            return false;
        };
        removed[v] = true;
    }
    true
}

fn extensional(n: usize, edge: &dyn Fn(usize, usize) -> bool) -> bool {
    (0..n).all(|a| (a + 1..n).all(|b| (0..n).any(|p| edge(p, a) != edge(p, b))))
}

type Key = (Vec<bool>, Vec<bool>);

fn encode(n: usize, edge: &dyn Fn(usize, usize) -> bool, mark: &dyn Fn(usize) -> bool) -> Key {
    (
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| edge(i, j)).collect(),
        (0..n).map(mark).collect(),
    )
}

/// All mewos with `n` elements up to isomorphism: every loop-free relation is
/// filtered for acyclicity and extensionality, crossed with every marking, and
/// reduced to the least encoding over all relabellings. The result is sorted
/// by that encoding. Counts for `n = 0..=4` are 1, 2, 4, 16, 144.
pub fn enumerate_mewos(n: usize) -> Result<Vec<Mewo>, OracleError> {
    check_size(n, 4)?;
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| i != j).collect();
    let perms = permutations(n);
    let mut seen: BTreeSet<Key> = BTreeSet::new();
    for bits in 0u64..(1u64 << slots.len()) {
        let mut adj = vec![vec![false; n]; n];
        for (k, &(i, j)) in slots.iter().enumerate() {
            adj[i][j] = bits >> k & 1 == 1;
        }
        let edge = |i: usize, j: usize| adj[i][j];
        if !acyclic(n, &edge) || !extensional(n, &edge) {
            continue;
        }
        for marks in 0u32..(1u32 << n) {
            let canonical = perms
                .iter()
                .map(|p| {
                    // Relabel by the inverse of `p`: new element `k` is old `p[k]`.
                    encode(n, &|i, j| adj[p[i]][p[j]], &|i| marks >> p[i] & 1 == 1)
                })
                .min()
                .expect("at least one permutation");
            seen.insert(canonical);
        }
    }
    Ok(seen
        .into_iter()
        .map(|(rel, marks)| {
            let lt = Relation::from_rows(&rel.chunks(n.max(1)).take(n).map(|r| r.to_vec()).collect::<Vec<_>>())
                .expect("square");
            Mewo::validate(n, lt, marks).expect("filtered")
        })
        .collect())
}

/// Every acyclic graph on `n` vertices up to relabelling, presented with
/// edges only from higher to lower indices, paired with every root.
pub fn enumerate_graphs(n: usize) -> Result<Vec<PointedGraph>, OracleError> {
    check_size(n, 5)?;
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..i).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << slots.len()) {
        let mut succ = vec![Vec::new(); n];
        for (k, &(i, j)) in slots.iter().enumerate() {
            if bits >> k & 1 == 1 {
                succ[i].push(j);
            }
        }
        for root in 0..n {
            out.push(PointedGraph::new(succ.clone(), root).expect("in range"));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(3)[1], vec![0, 2, 1]);
    }

    #[test]
    fn stage_counts() {
        let mut u = SetUniverse::new();
        let counts: Vec<usize> = (0..=4).map(|k| enumerate_v(&mut u, k).unwrap().len()).collect();
        assert_eq!(counts, vec![0, 1, 2, 4, 16]);
        assert!(enumerate_v(&mut u, 6).is_err());
        let e = u.empty_set().unwrap();
        assert_eq!(enumerate_v(&mut u, 1).unwrap(), vec![e]);
    }

    #[test]
    fn st_ordinals_in_v4_are_numerals() {
        let mut u = SetUniverse::new();
        let v4 = enumerate_v(&mut u, 4).unwrap();
        let ords: BTreeSet<SetHandle> = v4.into_iter().filter(|&h| u.is_st_ordinal(h)).collect();
        let numerals: BTreeSet<SetHandle> = (0..4).map(|n| u.von_neumann(n).unwrap()).collect();
        assert_eq!(ords, numerals);
    }

    #[test]
    fn mewo_counts() {
        let counts: Vec<usize> = (0..=4).map(|n| enumerate_mewos(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 16, 144]);
        assert_eq!(enumerate_mewos(0).unwrap(), vec![Mewo::empty()]);
        assert_eq!(enumerate_mewos(1).unwrap(), vec![Mewo::point(false), Mewo::point(true)]);
        assert!(enumerate_mewos(5).is_err());
    }

    #[test]
    fn ordinal_labellings() {
        let all = enumerate_ordinals(4).unwrap();
        assert_eq!(all.len(), 24);
        assert_eq!(all[0], FinOrd::chain(4));
        assert!(all.iter().all(|a| a.same_ordinal(&FinOrd::chain(4))));
    }

    #[test]
    fn graph_counts() {
        assert_eq!(enumerate_graphs(3).unwrap().len(), 8 * 3);
        assert_eq!(enumerate_graphs(5).unwrap().len(), 1024 * 5);
    }
}
