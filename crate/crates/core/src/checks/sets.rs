//! Laws of the set universe: canonicity, extensionality, wellfoundedness,
//! ranks, and agreement of the collapse with bisimilarity.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;

use super::Outcome;
use crate::hfset::{bisimilar, bisimulation_matrix, mem_raw, PointedGraph, SetHandle, SetUniverse, UniverseSlice};
use crate::oracle::{enumerate_graphs, enumerate_v, large_dag, GenConfig};
use crate::par::Exec;

fn brute_rank(u: &SetUniverse, h: SetHandle) -> usize {
    u.elements(h).iter().map(|&m| brute_rank(u, m) + 1).max().unwrap_or(0)
}

fn brute_transitive(u: &SetUniverse, h: SetHandle) -> bool {
    let members = u.elements(h);
    members.iter().all(|&m| u.elements(m).iter().all(|k| members.contains(k)))
}

/// Every law that can be checked on the stage `V_level` (at most 5): counts,
/// extensionality, hereditariness, ranks, transitivity, membership, subset,
/// and st-ordinals being exactly the numerals. Pairwise laws run on `V_4` at
/// most.
pub fn stage_laws(level: usize) -> Outcome {
    let mut o = Outcome::new("sets.stage_laws");
    let mut u = SetUniverse::new();
    let expected_counts = [0usize, 1, 2, 4, 16, 65536];
    let stage = enumerate_v(&mut u, level).expect("level within the enumeration limit");
    o.check(
        stage.len() == expected_counts[level],
        || format!("|V_{level}|"),
        || expected_counts[level].to_string(),
        || stage.len().to_string(),
    );
    let numerals: Vec<SetHandle> = (0..level).map(|n| u.von_neumann(n).unwrap()).collect();
    for &h in &stage {
        let show = || u.display(h).to_string();
        let r = u.rank_nat(h);
        o.check(r < level.max(1), show, || format!("rank below {level}"), || r.to_string());
        o.expect(u.is_transitive_set(h) == brute_transitive(&u, h), || format!("transitive? {}", show()));
        let hereditary = brute_transitive(&u, h) && u.elements(h).iter().all(|&m| u.is_st_ordinal(m));
        o.expect(u.is_st_ordinal(h) == hereditary, || format!("ord? {}", show()));
        o.expect(u.is_st_ordinal(h) == numerals.contains(&h), || format!("numeral {}", show()));
        for m in u.elements(h) {
            o.expect(u.rank_nat(m) < r, || format!("rank of a member of {}", show()));
            if u.is_st_ordinal(h) {
                o.expect(u.is_st_ordinal(m), || format!("member of the ordinal {}", show()));
            }
        }
    }
    let small: Vec<SetHandle> = stage.iter().copied().filter(|&h| u.rank_nat(h) < 4).collect();
    for &h in &small {
        o.check(u.rank_nat(h) == brute_rank(&u, h), || u.display(h).to_string(), || brute_rank(&u, h).to_string(), || u.rank_nat(h).to_string());
        for &k in &small {
            let (eh, ek) = (u.elements(h), u.elements(k));
            let pair = || format!("{} and {}", u.display(h), u.display(k));
            if h != k {
                let differ = eh.iter().any(|m| !ek.contains(m)) || ek.iter().any(|m| !eh.contains(m));
                o.expect(differ, || format!("extensionality of {}", pair()));
            }
            o.expect(u.mem(h, k).unwrap() == ek.contains(&h), || format!("membership of {}", pair()));
            o.expect(u.subset(h, k).unwrap() == eh.iter().all(|m| ek.contains(m)), || format!("inclusion of {}", pair()));
        }
    }
    o.expect(u.verify_wellfounded(), || "membership graph of the stage".into());
    o
}

/// `mk_set` ignores order and repetition and inverts `elements`.
pub fn mk_set_laws(seed: u64, count: usize) -> Outcome {
    let mut o = Outcome::new("sets.mk_set_laws");
    let mut u = SetUniverse::new();
    let pool = enumerate_v(&mut u, 4).unwrap();
    let mut g = GenConfig { seed, max_width: 4, max_depth: 4, count }.generator();
    for _ in 0..count {
        let len = g.rng().random_range(0..6);
        let list: Vec<SetHandle> = (0..len).map(|_| pool[g.rng().random_range(0..pool.len())]).collect();
        let h = u.mk_set(&list).unwrap();
        let mut shuffled = list.clone();
        shuffled.shuffle(g.rng());
        let mut doubled = list.clone();
        doubled.extend(&list);
        let input = || format!("{list:?}");
        o.expect(u.mk_set(&shuffled).unwrap() == h, || format!("order: {}", input()));
        o.expect(u.mk_set(&doubled).unwrap() == h, || format!("repetition: {}", input()));
        o.expect(u.mk_set(&u.elements(h)).unwrap() == h, || format!("elements: {}", input()));
        let mut dedup = list.clone();
        dedup.sort();
        dedup.dedup();
        o.check(u.elements(h) == dedup, input, || format!("{dedup:?}"), || format!("{:?}", u.elements(h)));
        let random = g.set(&mut u).unwrap();
        o.expect(u.mk_set(&u.elements(random)).unwrap() == random, || u.display(random).to_string());
    }
    o.expect(u.verify_wellfounded(), || "membership graph after random interning".into());
    o
}

fn canonical_graph(u: &SetUniverse, h: SetHandle) -> PointedGraph {
    let slice = u.export(h);
    PointedGraph::new(slice.nodes, slice.root).expect("slices are in range")
}

/// Exhaustive over acyclic graphs with up to `max_vertices` vertices (at most
/// 5): handle equality within a graph is the greatest bisimulation; every
/// rooted graph is bisimilar to the canonical graph of its handle; canonical
/// graphs of distinct handles are not bisimilar.
pub fn graph_exhaustive(exec: Exec, max_vertices: usize) -> Outcome {
    let graphs: Vec<PointedGraph> = (1..=max_vertices)
        .flat_map(|n| enumerate_graphs(n).unwrap())
        .filter(|g| g.root() == 0)
        .collect();
    let parts = exec.map_init(&graphs, SetUniverse::new, |u, g| {
        let mut o = Outcome::new("sets.graph_exhaustive");
        let n = g.vertex_count();
        let handles = u.collapse_all(g).unwrap();
        let matrix = bisimulation_matrix(g.all_successors()).unwrap();
        for a in 0..n {
            for b in 0..n {
                o.check(
                    (handles[a] == handles[b]) == matrix[a * n + b],
                    || format!("{:?} vertices {a},{b}", g.all_successors()),
                    || matrix[a * n + b].to_string(),
                    || (handles[a] == handles[b]).to_string(),
                );
                let raw = mem_raw(&g.with_root(a).unwrap(), &g.with_root(b).unwrap()).unwrap();
                o.expect(raw == u.mem(handles[a], handles[b]).unwrap(), || format!("{:?} membership {a},{b}", g.all_successors()));
            }
            let rooted = g.with_root(a).unwrap();
            o.expect(u.from_graph(&rooted).unwrap() == handles[a], || format!("{:?} root {a}", g.all_successors()));
            let canonical = canonical_graph(u, handles[a]);
            o.expect(bisimilar(&rooted, &canonical).unwrap(), || format!("{:?} root {a} vs canonical", g.all_successors()));
        }
        o
    });
    let mut o = Outcome::merged("sets.graph_exhaustive", parts);

    // All sets that occur, as one graph over their closure: the greatest
    // bisimulation on it must be the identity.
    let mut u = SetUniverse::new();
    let mut seen = Vec::new();
    for g in &graphs {
        seen.extend(u.collapse_all(g).unwrap());
    }
    seen.sort();
    seen.dedup();
    let position: HashMap<SetHandle, usize> = seen.iter().enumerate().map(|(i, &h)| (h, i)).collect();
    let succ: Vec<Vec<usize>> = seen.iter().map(|&h| u.elements(h).iter().map(|m| position[m]).collect()).collect();
    let matrix = bisimulation_matrix(&succ).unwrap();
    let k = seen.len();
    for a in 0..k {
        for b in 0..k {
            o.expect(matrix[a * k + b] == (a == b), || format!("distinct sets {} and {}", u.display(seen[a]), u.display(seen[b])));
        }
    }
    o
}

/// A bisimilar variant of `g`: one vertex is duplicated, some edges into it are
/// redirected to the copy, successor lists are shuffled.
fn redundant_copy(g: &PointedGraph, rng: &mut impl Rng) -> PointedGraph {
    let mut succ = g.all_successors().to_vec();
    let n = succ.len();
    let v = rng.random_range(0..n);
    succ.push(succ[v].clone());
    for s in succ.iter_mut().take(n) {
        for w in s.iter_mut() {
            if *w == v && rng.random_bool(0.5) {
                *w = n;
            }
        }
        s.shuffle(rng);
    }
    let root = if g.root() == v && rng.random_bool(0.5) { n } else { g.root() };
    PointedGraph::new(succ, root).unwrap()
}

/// Random pairs of acyclic graphs with up to `max_vertices` vertices, half of
/// them redundant copies of each other: handle equality and membership agree
/// with the raw relations.
pub fn graph_random(exec: Exec, seed: u64, count: usize, max_vertices: usize) -> Outcome {
    let mut g = GenConfig { seed, max_width: 0, max_depth: 0, count }.generator();
    let mut pairs = Vec::with_capacity(count);
    for _ in 0..count {
        let a = g.graph(max_vertices);
        let b = if g.rng().random_bool(0.5) {
            redundant_copy(&a, g.rng())
        } else {
            g.graph(max_vertices)
        };
        pairs.push((a, b));
    }
    let parts = exec.map_init(&pairs, SetUniverse::new, |u, (a, b)| {
        let mut o = Outcome::new("sets.graph_random");
        let ha = u.from_graph(a).unwrap();
        let hb = u.from_graph(b).unwrap();
        let input = || format!("{:?}@{} vs {:?}@{}", a.all_successors(), a.root(), b.all_successors(), b.root());
        let raw = bisimilar(a, b).unwrap();
        o.check((ha == hb) == raw, input, || raw.to_string(), || (ha == hb).to_string());
        let raw_mem = mem_raw(a, b).unwrap();
        o.check(u.mem(ha, hb).unwrap() == raw_mem, input, || raw_mem.to_string(), || (!raw_mem).to_string());
        o
    });
    Outcome::merged("sets.graph_random", parts)
}

/// Slices survive JSON bit-exactly and import to the same set.
pub fn export_round_trip(seed: u64, count: usize, max_depth: usize) -> Outcome {
    let mut o = Outcome::new("sets.export_round_trip");
    let mut u = SetUniverse::new();
    let sets = GenConfig { seed, max_width: 4, max_depth, count }.sets(&mut u).unwrap();
    let mut fresh = SetUniverse::new();
    for h in sets {
        let json = u.export(h).to_json();
        let slice = UniverseSlice::from_json(&json).unwrap();
        let back = u.import(&slice).unwrap();
        o.expect(back == h, || json.clone());
        let elsewhere = fresh.import(&slice).unwrap();
        let again = fresh.export(elsewhere).to_json();
        o.check(again == json, || u.display(h).to_string(), || json.clone(), || again.clone());
    }
    o
}

/// Collapse of a large random graph, compared with the raw bisimulation on a
/// successor-closed prefix. Returns the outcome and the handle count.
pub fn large_graph(seed: u64, vertices: usize, sample: usize) -> (Outcome, usize) {
    let mut o = Outcome::new("sets.large_graph");
    let g = large_dag(seed, vertices);
    let mut u = SetUniverse::new();
    let handles = u.collapse_all(&g).unwrap();
    let root = u.from_graph(&g).unwrap();
    o.expect(root == handles[g.root()], || "root of the large graph".into());
    let k = sample.min(vertices);
    let prefix: Vec<Vec<usize>> = g.all_successors()[..k].to_vec();
    let matrix = bisimulation_matrix(&prefix).unwrap();
    for a in 0..k {
        for b in 0..k {
            o.check(
                (handles[a] == handles[b]) == matrix[a * k + b],
                || format!("vertices {a},{b} of large_dag({seed}, {vertices})"),
                || matrix[a * k + b].to_string(),
                || (handles[a] == handles[b]).to_string(),
            );
        }
    }
    (o, u.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        for o in [
            stage_laws(4),
            mk_set_laws(1, 50),
            graph_exhaustive(Exec::Sequential, 3),
            graph_random(Exec::Sequential, 2, 100, 6),
            export_round_trip(3, 30, 4),
            large_graph(4, 3000, 200).0,
        ] {
            assert!(o.passed(), "{o}");
            assert!(o.cases > 0);
        }
    }
}
