use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::hfset::{PointedGraph, SetError, SetHandle, SetUniverse};
use crate::mewo::Mewo;
use crate::relation::Relation;

/// Parameters of a reproducible random stream.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenConfig {
    pub seed: u64,
    pub max_width: usize,
    pub max_depth: usize,
    pub count: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            seed: 0,
            max_width: 4,
            max_depth: 4,
            count: 100,
        }
    }
}

impl GenConfig {
    pub fn generator(&self) -> Generator {
        Generator {
            cfg: *self,
            rng: ChaCha8Rng::seed_from_u64(self.seed),
        }
    }

    /// `count` random sets of rank at most `max_depth`.
    pub fn sets(&self, u: &mut SetUniverse) -> Result<Vec<SetHandle>, SetError> {
        let mut g = self.generator();
        (0..self.count).map(|_| g.set(u)).collect()
    }

    pub fn mewos(&self) -> Vec<Mewo> {
        let mut g = self.generator();
        (0..self.count).map(|_| g.mewo()).collect()
    }

    pub fn covered_mewos(&self) -> Vec<Mewo> {
        let mut g = self.generator();
        (0..self.count).map(|_| g.covered_mewo()).collect()
    }
}

/// A seeded stream of random structures. Identical configurations produce
/// identical streams.
pub struct Generator {
    cfg: GenConfig,
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// A set with at most `max_width` members per node and rank at most
    /// `max_depth`.
    pub fn set(&mut self, u: &mut SetUniverse) -> Result<SetHandle, SetError> {
        let depth = self.cfg.max_depth;
        self.set_below(u, depth)
    }

    fn set_below(&mut self, u: &mut SetUniverse, depth: usize) -> Result<SetHandle, SetError> {
        if depth == 0 {
            return u.empty_set();
        }
        let width = self.rng.random_range(0..=self.cfg.max_width);
        let mut members = Vec::with_capacity(width);
        for _ in 0..width {
            let d = self.rng.random_range(0..depth);
            members.push(self.set_below(u, d)?);
        }
        u.mk_set(&members)
    }

    /// A random mewo: a layered acyclic graph with at most `max_depth` layers
    /// of at most `max_width` vertices, made extensional by repeatedly merging
    /// vertices with equal predecessor sets, then shuffled and randomly marked.
    pub fn mewo(&mut self) -> Mewo {
        let (lt, n) = self.extensional_shape();
        let marked = (0..n).map(|_| self.rng.random_bool(0.5)).collect();
        Mewo::validate(n, lt, marked).expect("repaired shape is extensional and acyclic")
    }

    /// Like [`Generator::mewo`], redrawing until the result is covered.
    pub fn covered_mewo(&mut self) -> Mewo {
        loop {
            let (lt, n) = self.extensional_shape();
            for _ in 0..64 {
                let marked = (0..n).map(|_| self.rng.random_bool(0.5)).collect();
                let m = Mewo::validate(n, lt.clone(), marked).expect("repaired shape is valid");
                if m.is_covered() {
                    return m;
                }
            }
        }
    }

    fn extensional_shape(&mut self) -> (Relation, usize) {
        let layers = self.rng.random_range(0..=self.cfg.max_depth);
        let mut layer_of: Vec<usize> = Vec::new();
        for l in 0..layers {
            let w = self.rng.random_range(1..=self.cfg.max_width.max(1));
            layer_of.extend(std::iter::repeat_n(l, w));
        }
        let n = layer_of.len();
        let mut preds: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for v in 0..n {
            let l = layer_of[v];
            if l == 0 {
                continue;
            }
            let below: Vec<usize> = (0..v).filter(|&p| layer_of[p] < l).collect();
            let previous: Vec<usize> = below.iter().copied().filter(|&p| layer_of[p] == l - 1).collect();
            preds[v].insert(previous[self.rng.random_range(0..previous.len())]);
            for &p in &below {
                if self.rng.random_bool(0.3) {
                    preds[v].insert(p);
                }
            }
        }
        // Merge duplicates until none remain. Merging two vertices with the
        // same predecessors cannot close a cycle.
        let mut alive = vec![true; n];
        loop {
            let mut merged = false;
            'search: for a in 0..n {
                for b in a + 1..n {
                    if alive[a] && alive[b] && preds[a] == preds[b] {
                        alive[b] = false;
                        for p in preds.iter_mut() {
                            if p.remove(&b) {
                                p.insert(a);
                            }
                        }
                        merged = true;
                        break 'search;
                    }
                }
            }
            if !merged {
                break;
            }
        }
        let keep: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        let mut label: Vec<usize> = (0..keep.len()).collect();
        label.shuffle(&mut self.rng);
        let mut new_of = vec![usize::MAX; n];
        for (k, &v) in keep.iter().enumerate() {
            new_of[v] = label[k];
        }
        let mut lt = Relation::empty(keep.len());
        for &v in &keep {
            for &p in &preds[v] {
                lt.set(new_of[p], new_of[v], true);
            }
        }
        (lt, keep.len())
    }

    /// An acyclic graph on `1..=max_vertices` vertices with shuffled labels,
    /// occasional repeated edges and a random root.
    pub fn graph(&mut self, max_vertices: usize) -> PointedGraph {
        let n = self.rng.random_range(1..=max_vertices.max(1));
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (v, s) in succ.iter_mut().enumerate() {
            for w in 0..v {
                if self.rng.random_bool(0.35) {
                    s.push(w);
                    if self.rng.random_bool(0.1) {
                        s.push(w);
                    }
                }
            }
        }
        let mut label: Vec<usize> = (0..n).collect();
        label.shuffle(&mut self.rng);
        let mut relabelled = vec![Vec::new(); n];
        for v in 0..n {
            relabelled[label[v]] = succ[v].iter().map(|&w| label[w]).collect();
        }
        let root = self.rng.random_range(0..n);
        PointedGraph::new(relabelled, root).expect("in range")
    }

    /// A von Neumann numeral `h` of at most `max_depth` and a redundant
    /// presentation of it: every member at least once, padded with repeats up
    /// to `max_width` entries, shuffled.
    pub fn st_ordinal_presentation(&mut self, u: &mut SetUniverse) -> Result<(SetHandle, Vec<SetHandle>), SetError> {
        let n = self.rng.random_range(0..=self.cfg.max_depth);
        let h = u.von_neumann(n)?;
        let mut presentation = u.elements(h);
        if n > 0 {
            let len = self.rng.random_range(n..=n.max(self.cfg.max_width));
            while presentation.len() < len {
                presentation.push(presentation[self.rng.random_range(0..n)]);
            }
        }
        presentation.shuffle(&mut self.rng);
        Ok((h, presentation))
    }
}

/// A random acyclic graph on `n` vertices whose edges all point to lower
/// indices, so every prefix `0..k` is closed under successors. Each vertex
/// points to the one before it, so the root (the last vertex) reaches all of
/// them, plus up to four more edges, half drawn uniformly and half from its
/// 16 predecessors by index.
pub fn large_dag(seed: u64, n: usize) -> PointedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut succ: Vec<Vec<usize>> = Vec::with_capacity(n);
    for v in 0..n {
        let mut s = Vec::new();
        if v > 0 {
            s.push(v - 1);
            for _ in 0..rng.random_range(0..=4) {
                let w = if rng.random_bool(0.5) {
                    rng.random_range(0..v)
                } else {
                    rng.random_range(v.saturating_sub(16)..v)
                };
                s.push(w);
            }
        }
        succ.push(s);
    }
    PointedGraph::new(succ, n.saturating_sub(1)).expect("in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible() {
        let cfg = GenConfig {
            seed: 7,
            max_width: 3,
            max_depth: 4,
            count: 50,
        };
        assert_eq!(cfg.mewos(), cfg.mewos());
        let mut u = SetUniverse::new();
        let a = cfg.sets(&mut u).unwrap();
        let b = cfg.sets(&mut u).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|&h| u.rank_nat(h) <= 4));
    }

    #[test]
    fn covered_stream_is_covered() {
        let cfg = GenConfig {
            seed: 1,
            count: 40,
            ..GenConfig::default()
        };
        assert!(cfg.covered_mewos().iter().all(Mewo::is_covered));
    }

    #[test]
    fn presentations_present() {
        let mut g = GenConfig { seed: 3, max_width: 6, max_depth: 5, count: 0 }.generator();
        let mut u = SetUniverse::new();
        for _ in 0..50 {
            let (h, p) = g.st_ordinal_presentation(&mut u).unwrap();
            assert_eq!(u.mk_set(&p).unwrap(), h);
            assert!(p.len() <= 6);
        }
    }

    #[test]
    fn large_dag_prefixes_are_closed() {
        let g = large_dag(1, 2000);
        for v in 0..2000 {
            assert!(g.successors(v).iter().all(|&w| w < v));
        }
    }
}
