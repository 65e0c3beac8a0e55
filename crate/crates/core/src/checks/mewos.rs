//! Laws of mewos, swept over every mewo up to a size bound.

use super::Outcome;
use crate::hfset::SetUniverse;
use crate::mewo::{
    bounded_sim_mewo, mewo_equal, mewo_isomorphism, partial_sim, principality_check, simulation_mewo,
    simulation_mewo_in, union, union_with_representatives, Mewo,
};
use crate::oracle::{enum_bounded_sims_mewo, enum_isomorphisms, enum_simulations, enumerate_mewos, satisfies_simulation};
use crate::par::Exec;

/// Every mewo with at most `max_size` elements up to isomorphism, smallest first.
pub fn mewos_upto(max_size: usize) -> Vec<Mewo> {
    (0..=max_size)
        .flat_map(|n| enumerate_mewos(n).expect("within the enumeration limit"))
        .collect()
}

pub(crate) fn show(x: &Mewo) -> String {
    crate::text::mewo_to_text(x, None)
}

/// A fixed non-identity relabelling: rotate labels by one.
fn rotated(x: &Mewo) -> (Mewo, Vec<usize>) {
    let n = x.size();
    let perm: Vec<usize> = (0..n).map(|i| (i + 1) % n.max(1)).collect();
    (x.relabel(&perm).unwrap(), perm)
}

/// Simulations, bounded simulations and equality against the oracle, together
/// with the pointwise code criterion for simulations.
pub fn oracle_agreement(exec: Exec, max_size: usize) -> Outcome {
    let all = mewos_upto(max_size);
    let parts = exec.map_init(&all, SetUniverse::new, |u, x| {
        let mut o = Outcome::new("mewo.oracle_agreement");
        let cx = x.codes(u).unwrap();
        for y in &all {
            let input = || format!("{} vs {}", show(x), show(y));
            let sims = enum_simulations(x, y).unwrap();
            let got = simulation_mewo_in(u, x, y).unwrap();
            let map = got.as_ref().map(|w| w.map.clone());
            o.check(sims.len() <= 1 && map.as_ref() == sims.first(), input, || format!("{sims:?}"), || format!("{map:?}"));
            if let Some(w) = &got {
                let reflects = (0..x.size()).all(|e| x.is_marked(e) == y.is_marked(w.map[e]));
                o.expect(w.reflects_marking == reflects, || format!("marking flag for {}", input()));
            }
            let cy = y.codes(u).unwrap();
            for f in &sims {
                let pointwise = (0..x.size()).all(|e| cx.codes[e] == cy.codes[f[e]]);
                o.expect(pointwise, || format!("codes along {f:?} for {}", input()));
            }

            let bounded = enum_bounded_sims_mewo(x, y).unwrap();
            let b = bounded_sim_mewo(x, y).map(|w| (w.bound, w.equivalence));
            o.check(bounded.len() <= 1 && b.as_ref() == bounded.first(), input, || format!("{bounded:?}"), || format!("{b:?}"));

            let (permuted, _) = rotated(y);
            let isos = enum_isomorphisms(x, &permuted).unwrap();
            let iso = mewo_isomorphism(x, &permuted);
            o.check(isos.len() <= 1 && iso.as_ref() == isos.first(), input, || format!("{isos:?}"), || format!("{iso:?}"));
            o.expect(mewo_equal(x, &permuted) == !isos.is_empty(), || format!("equality for {}", input()));

            if got.is_some() && simulation_mewo(y, x).is_some() {
                o.expect(mewo_equal(x, y), || format!("antisymmetry for {}", input()));
            }
        }
        o
    });
    Outcome::merged("mewo.oracle_agreement", parts)
}

struct Tables {
    le: Vec<Vec<Option<Vec<usize>>>>,
    lt: Vec<Vec<bool>>,
    le_all: Vec<Vec<bool>>,
    lt_all: Vec<Vec<bool>>,
}

fn tables(exec: Exec, all: &[Mewo]) -> Tables {
    let rows = exec.map(all, |x| {
        let mut le = Vec::new();
        let mut lt = Vec::new();
        let mut le_all = Vec::new();
        let mut lt_all = Vec::new();
        for y in all {
            let full = y.mark_all();
            le.push(simulation_mewo(x, y).map(|w| w.map));
            lt.push(bounded_sim_mewo(x, y).is_some());
            le_all.push(simulation_mewo(x, &full).is_some());
            lt_all.push(bounded_sim_mewo(x, &full).is_some());
        }
        (le, lt, le_all, lt_all)
    });
    let mut t = Tables {
        le: Vec::new(),
        lt: Vec::new(),
        le_all: Vec::new(),
        lt_all: Vec::new(),
    };
    for (a, b, c, d) in rows {
        t.le.push(a);
        t.lt.push(b);
        t.le_all.push(c);
        t.lt_all.push(d);
    }
    t
}

/// Order laws over all pairs and triples: `<` lands in `≤` after marking
/// everything, `<` then `<` lands in `<` after marking everything, `<` then
/// `≤` is `<`, simulations compose, and `<` strictly increases size.
pub fn order_laws(exec: Exec, max_size: usize) -> Outcome {
    let all = mewos_upto(max_size);
    let t = tables(exec, &all);
    let k = all.len();
    let idx: Vec<usize> = (0..k).collect();
    let parts = exec.map(&idx, |&a| {
        let mut o = Outcome::new("mewo.order_laws");
        let name = |i: usize| show(&all[i]);
        for b in 0..k {
            if t.lt[a][b] {
                o.expect(t.le_all[a][b], || format!("{} < {} implies <= after marking", name(a), name(b)));
                o.expect(all[a].size() < all[b].size(), || format!("{} < {} shrinks", name(a), name(b)));
            }
            for c in 0..k {
                if t.lt[a][b] && t.lt[b][c] {
                    o.expect(t.lt_all[a][c], || format!("{} < {} < {}", name(a), name(b), name(c)));
                }
                if t.lt[a][b] && t.le[b][c].is_some() {
                    o.expect(t.lt[a][c], || format!("{} < {} <= {}", name(a), name(b), name(c)));
                }
                if let (Some(f), Some(g)) = (&t.le[a][b], &t.le[b][c]) {
                    let composite: Vec<usize> = f.iter().map(|&y| g[y]).collect();
                    o.check(
                        t.le[a][c].as_ref() == Some(&composite),
                        || format!("{} <= {} <= {}", name(a), name(b), name(c)),
                        || format!("{composite:?}"),
                        || format!("{:?}", t.le[a][c]),
                    );
                }
            }
        }
        o
    });
    Outcome::merged("mewo.order_laws", parts)
}

/// Segments are covered, distinct points give distinct segments, and each
/// segment sits inside the fully marked structure by a simulation.
pub fn segment_laws(max_size: usize) -> Outcome {
    let mut o = Outcome::new("mewo.segment_laws");
    for x in mewos_upto(max_size) {
        let full = x.mark_all();
        o.expect(full.is_covered() && full.mark_all() == full, || show(&x));
        let segments: Vec<Mewo> = (0..x.size()).map(|e| x.down_plus(e).unwrap()).collect();
        for (e, seg) in segments.iter().enumerate() {
            o.expect(seg.is_covered(), || format!("{} at {e} is covered", show(&x)));
            let inclusion = x.down_plus_carrier(e).unwrap();
            o.expect(satisfies_simulation(seg, &full, &inclusion), || format!("{} at {e} includes", show(&x)));
            for (d, other) in segments.iter().enumerate().skip(e + 1) {
                o.expect(!mewo_equal(seg, other), || format!("{} segments at {e} and {d}", show(&x)));
            }
        }
        let cp = x.covered_part();
        o.expect(cp.is_covered() && ((cp == x) == x.is_covered()), || format!("covered part of {}", show(&x)));
    }
    o
}

/// Covered mewos are principal against every `Y` up to `max_target`; every
/// non-covered mewo fails against its own covered part.
pub fn principality(exec: Exec, max_size: usize, max_target: usize) -> Outcome {
    let all = mewos_upto(max_size);
    let targets = mewos_upto(max_target);
    let parts = exec.map(&all, |x| {
        let mut o = Outcome::new("mewo.principality");
        if x.is_covered() {
            for y in &targets {
                o.expect(principality_check(x, y), || format!("covered {} against {}", show(x), show(y)));
            }
        } else {
            let cp = x.covered_part();
            o.expect(partial_sim(x, &cp).is_some(), || format!("{} <=_M its covered part", show(x)));
            o.expect(!principality_check(x, &cp), || format!("uncovered {} against its covered part", show(x)));
        }
        o
    });
    Outcome::merged("mewo.principality", parts)
}

/// On the covered mewos up to `max_size`, distinct structures are told apart
/// by their bounded-simulation predecessors.
pub fn predecessors_separate(exec: Exec, max_size: usize) -> Outcome {
    let covered: Vec<Mewo> = mewos_upto(max_size).into_iter().filter(Mewo::is_covered).collect();
    let below: Vec<Vec<bool>> = exec.map(&covered, |x| covered.iter().map(|z| bounded_sim_mewo(z, x).is_some()).collect());
    let mut o = Outcome::new("mewo.predecessors_separate");
    for a in 0..covered.len() {
        for b in a + 1..covered.len() {
            let separated = (0..covered.len()).any(|z| below[a][z] != below[b][z]);
            o.expect(separated, || format!("{} and {}", show(&covered[a]), show(&covered[b])));
        }
    }
    o
}

fn union_families(max_size: usize) -> Vec<Vec<Mewo>> {
    let all = mewos_upto(max_size);
    let covered: Vec<Mewo> = all.iter().filter(|m| m.is_covered()).cloned().collect();
    let small: Vec<Mewo> = all.iter().filter(|m| m.size() < max_size).cloned().collect();
    let tiny: Vec<Mewo> = covered.iter().filter(|m| m.size() + 2 <= max_size).cloned().collect();
    let mut fams: Vec<Vec<Mewo>> = vec![Vec::new()];
    fams.extend(all.iter().map(|m| vec![m.clone()]));
    for a in &covered {
        for b in &covered {
            fams.push(vec![a.clone(), b.clone()]);
        }
    }
    for a in &small {
        for b in &small {
            if !(a.is_covered() && b.is_covered()) {
                fams.push(vec![a.clone(), b.clone()]);
            }
        }
    }
    for a in &tiny {
        for b in &tiny {
            for c in &tiny {
                fams.push(vec![a.clone(), b.clone(), c.clone()]);
            }
        }
    }
    fams
}

/// The union is an upper bound of its members and below every common upper
/// bound among the enumerated mewos; it is covered when the members are; its
/// order is bounded simulation of segments; singletons of covered mewos are
/// covered.
pub fn union_laws(exec: Exec, max_size: usize) -> Outcome {
    let all = mewos_upto(max_size);
    let fams = union_families(max_size);
    let parts = exec.map(&fams, |family| {
        let mut o = Outcome::new("mewo.union_laws");
        let input = || family.iter().map(show).collect::<Vec<_>>().join(", ");
        let (m, reps) = union_with_representatives(family);
        for f in family {
            o.expect(simulation_mewo(f, &m).is_some(), || format!("{} <= union({})", show(f), input()));
        }
        for y in &all {
            if family.iter().all(|f| simulation_mewo(f, y).is_some()) {
                o.expect(simulation_mewo(&m, y).is_some(), || format!("union({}) <= {}", input(), show(y)));
            }
        }
        if family.iter().all(Mewo::is_covered) {
            o.expect(m.is_covered(), || format!("union({}) is covered", input()));
        }
        let segments: Vec<Mewo> = reps.iter().map(|&(a, x)| family[a].down_plus(x).unwrap()).collect();
        for p in 0..reps.len() {
            for q in 0..reps.len() {
                let literal = bounded_sim_mewo(&segments[p], &segments[q]).is_some();
                o.check(m.lt(p, q) == literal, || format!("classes {p},{q} of union({})", input()), || literal.to_string(), || m.lt(p, q).to_string());
            }
            let marked = family
                .iter()
                .any(|f| (0..f.size()).any(|x| f.is_marked(x) && mewo_equal(&f.down_plus(x).unwrap(), &segments[p])));
            o.expect(m.is_marked(p) == marked, || format!("marking of class {p} of union({})", input()));
        }
        if let [x] = family.as_slice() {
            if x.is_covered() {
                o.check(&union(family) == x, || format!("union({})", input()), || show(x), || show(&m));
            }
            match x.singleton() {
                Ok(s) => o.expect(x.is_covered() && s.is_covered(), || format!("singleton of {}", input())),
                Err(_) => o.expect(!x.is_covered(), || format!("singleton of covered {}", input())),
            }
        }
        o
    });
    Outcome::merged("mewo.union_laws", parts)
}
