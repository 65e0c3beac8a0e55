//! Laws of finite ordinals, swept over every labelling up to a size bound.

use super::Outcome;
use crate::oracle::{enum_bounded_sims_ord, enum_isomorphisms, enum_simulations, enumerate_ordinals};
use crate::order::is_isomorphism;
use crate::ordinal::{bounded_sim, isomorphism, simulation, simulation_by_order_type, FinOrd};
use crate::par::Exec;
use crate::relation::Relation;

/// Every labelled ordinal with at most `max_size` elements, smallest first.
pub fn labelled_upto(max_size: usize) -> Vec<FinOrd> {
    (0..=max_size)
        .flat_map(|n| enumerate_ordinals(n).expect("within the enumeration limit"))
        .collect()
}

fn show(a: &FinOrd) -> String {
    crate::text::ord_to_text(a)
}

/// Segments of segments are segments, and validated orders are linear.
pub fn down_iterates(exec: Exec, max_size: usize) -> Outcome {
    let all = labelled_upto(max_size);
    let parts = exec.map(&all, |alpha| {
        let mut o = Outcome::new("ordinal.down_iterates");
        for a in 0..alpha.size() {
            let outer = alpha.down(a).unwrap();
            let carrier = alpha.down_carrier(a).unwrap();
            for (pos, &b) in carrier.iter().enumerate() {
                let lhs = outer.down(pos).unwrap();
                let rhs = alpha.down(b).unwrap();
                o.check(lhs == rhs, || format!("{} at {a} then {b}", show(alpha)), || show(&rhs), || show(&lhs));
            }
        }
        for x in 0..alpha.size() {
            for y in 0..alpha.size() {
                let trichotomy = [x == y, alpha.lt(x, y), alpha.lt(y, x)].iter().filter(|&&t| t).count() == 1;
                o.expect(trichotomy, || format!("trichotomy of {x},{y} in {}", show(alpha)));
            }
        }
        o
    });
    Outcome::merged("ordinal.down_iterates", parts)
}

/// Segments of sums, and the size of a sum.
pub fn sum_segments(exec: Exec, max_size: usize) -> Outcome {
    let all = labelled_upto(max_size);
    let parts = exec.map(&all, |alpha| {
        let mut o = Outcome::new("ordinal.sum_segments");
        let n = alpha.size();
        for beta in &all {
            let s = alpha.sum(beta);
            let input = || format!("{} + {}", show(alpha), show(beta));
            o.check(s.order_type() == n + beta.size(), input, || (n + beta.size()).to_string(), || s.order_type().to_string());
            for a in 0..n {
                let lhs = s.down(a).unwrap();
                let rhs = alpha.down(a).unwrap();
                o.check(lhs == rhs, || format!("{} at left {a}", input()), || show(&rhs), || show(&lhs));
            }
            for b in 0..beta.size() {
                let lhs = s.down(n + b).unwrap();
                let rhs = alpha.sum(&beta.down(b).unwrap());
                o.check(lhs == rhs, || format!("{} at right {b}", input()), || show(&rhs), || show(&lhs));
            }
        }
        let top = alpha.successor().down(n).unwrap();
        o.check(&top == alpha, || format!("successor of {}", show(alpha)), || show(alpha), || show(&top));
        o
    });
    Outcome::merged("ordinal.sum_segments", parts)
}

fn families(pool: &[FinOrd], max_len: usize) -> Vec<Vec<FinOrd>> {
    let mut out: Vec<Vec<FinOrd>> = vec![Vec::new()];
    let mut layer: Vec<Vec<FinOrd>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for f in &layer {
            for p in pool {
                let mut g = f.clone();
                g.push(p.clone());
                next.push(g);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Each chain and its reversed labelling, for sizes up to `max_size`.
fn sup_pool(max_size: usize) -> Vec<FinOrd> {
    let mut pool = Vec::new();
    for n in 0..=max_size {
        pool.push(FinOrd::chain(n));
        let reversed = FinOrd::chain(n).relabel(&(0..n).rev().collect::<Vec<_>>()).unwrap();
        if reversed != FinOrd::chain(n) {
            pool.push(reversed);
        }
    }
    pool
}

/// Segments of a supremum come from its members; it is the least upper bound.
pub fn sup_segments(exec: Exec, max_size: usize, max_family: usize) -> Outcome {
    let fams = families(&sup_pool(max_size), max_family);
    let parts = exec.map(&fams, |family| {
        let mut o = Outcome::new("ordinal.sup_segments");
        let input = || family.iter().map(show).collect::<Vec<_>>().join(", ");
        let s = FinOrd::sup(family);
        for x in 0..s.size() {
            let seg = s.down(x).unwrap();
            let found = family
                .iter()
                .any(|f| (0..f.size()).any(|y| f.down(y).unwrap().same_ordinal(&seg)));
            o.expect(found, || format!("segment {x} of sup({})", input()));
        }
        for f in family {
            o.expect(simulation(f, &s).is_some(), || format!("{} <= sup({})", show(f), input()));
        }
        let largest = family.iter().map(FinOrd::size).max().unwrap_or(0);
        o.check(s.size() == largest, || format!("sup({})", input()), || largest.to_string(), || s.size().to_string());
        o
    });
    Outcome::merged("ordinal.sup_segments", parts)
}

/// Simulations, bounded simulations and isomorphisms against the oracle, with
/// the three characterizations of `α ≤ β`, antisymmetry and the fast path.
pub fn oracle_agreement(exec: Exec, max_size: usize) -> Outcome {
    let all = labelled_upto(max_size);
    let parts = exec.map(&all, |alpha| {
        let mut o = Outcome::new("ordinal.oracle_agreement");
        for beta in &all {
            let input = || format!("{} vs {}", show(alpha), show(beta));
            let sims = enum_simulations(alpha, beta).unwrap();
            let sim = simulation(alpha, beta).map(|w| w.map);
            o.check(sims.len() <= 1 && sim.as_ref() == sims.first(), input, || format!("{sims:?}"), || format!("{sim:?}"));
            let fast = simulation_by_order_type(alpha, beta).map(|w| w.map);
            o.check(fast == sim, input, || format!("{sim:?}"), || format!("{fast:?}"));

            let bounded = enum_bounded_sims_ord(alpha, beta).unwrap();
            let got = bounded_sim(alpha, beta).map(|w| (w.bound, w.iso));
            o.check(bounded.len() <= 1 && got.as_ref() == bounded.first(), input, || format!("{bounded:?}"), || format!("{got:?}"));

            let isos = enum_isomorphisms(alpha, beta).unwrap();
            let iso = isomorphism(alpha, beta);
            o.check(isos.len() <= 1 && iso.as_ref() == isos.first(), input, || format!("{isos:?}"), || format!("{iso:?}"));
            if let Some(map) = &iso {
                o.expect(is_isomorphism(alpha, beta, map), || format!("isomorphism clauses for {}", input()));
            }

            let segments_occur = (0..alpha.size()).all(|a| {
                let seg = alpha.down(a).unwrap();
                (0..beta.size()).any(|b| beta.down(b).unwrap().same_ordinal(&seg))
            });
            let segments_bounded = (0..alpha.size()).all(|a| bounded_sim(&alpha.down(a).unwrap(), beta).is_some());
            let exists = sim.is_some();
            o.check(
                exists == segments_occur && exists == segments_bounded,
                || format!("characterizations of <= for {}", input()),
                || format!("{exists} {exists}"),
                || format!("{segments_occur} {segments_bounded}"),
            );

            let back = simulation(beta, alpha).is_some();
            if exists && back {
                o.expect(alpha.same_ordinal(beta) && alpha.canonical() == beta.canonical(), || format!("antisymmetry for {}", input()));
            }
        }
        o
    });
    Outcome::merged("ordinal.oracle_agreement", parts)
}

/// Composites of simulation witnesses are the witnesses of the composite.
pub fn composition(exec: Exec, max_size: usize) -> Outcome {
    let all = labelled_upto(max_size);
    let parts = exec.map(&all, |alpha| {
        let mut o = Outcome::new("ordinal.composition");
        for beta in &all {
            let Some(f) = simulation(alpha, beta) else { continue };
            for gamma in &all {
                let Some(g) = simulation(beta, gamma) else { continue };
                let composite: Vec<usize> = f.map.iter().map(|&b| g.map[b]).collect();
                let direct = simulation(alpha, gamma).map(|w| w.map);
                o.check(
                    direct.as_ref() == Some(&composite),
                    || format!("{} -> {} -> {}", show(alpha), show(beta), show(gamma)),
                    || format!("{composite:?}"),
                    || format!("{direct:?}"),
                );
            }
        }
        o
    });
    Outcome::merged("ordinal.composition", parts)
}

/// On the ordinals of size at most `max_size` taken up to isomorphism, the
/// bounded-simulation relation is itself a finite ordinal.
pub fn bounded_relation_is_ordinal(max_size: usize) -> Outcome {
    let mut o = Outcome::new("ordinal.bounded_relation_is_ordinal");
    let mut reps: Vec<FinOrd> = Vec::new();
    for a in labelled_upto(max_size) {
        if !reps.iter().any(|r| r.same_ordinal(&a)) {
            reps.push(a);
        }
    }
    let k = reps.len();
    let mut lt = Relation::empty(k);
    for p in 0..k {
        for q in 0..k {
            lt.set(p, q, bounded_sim(&reps[p], &reps[q]).is_some());
        }
    }
    let validated = FinOrd::validate(k, lt);
    o.check(validated.is_ok(), || format!("{k} ordinals"), || "a valid ordinal".into(), || format!("{validated:?}"));
    o
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        for o in [
            down_iterates(Exec::Sequential, 4),
            sum_segments(Exec::Sequential, 3),
            sup_segments(Exec::Sequential, 2, 2),
            oracle_agreement(Exec::Sequential, 3),
            composition(Exec::Sequential, 3),
            bounded_relation_is_ordinal(4),
        ] {
            assert!(o.passed(), "{o}");
            assert!(o.cases > 0);
        }
    }

    #[test]
    fn labelled_counts() {
        assert_eq!(labelled_upto(4).len(), 1 + 1 + 2 + 6 + 24);
    }
}
