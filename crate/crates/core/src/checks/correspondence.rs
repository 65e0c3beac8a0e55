//! Round trips and transports between structures and sets.

use super::mewos::{mewos_upto, show as show_mewo};
use super::ordinals::labelled_upto;
use super::Outcome;
use crate::correspondence::{elements_ordinal, phi_mewo, phi_ord, psi_mewo, psi_mewo_direct, psi_ord, rank_quotient};
use crate::hfset::{SetHandle, SetUniverse};
use crate::mewo::{bounded_sim_mewo, mewo_equal, simulation_mewo, Mewo};
use crate::oracle::{enumerate_v, GenConfig};
use crate::ordinal::{bounded_sim, simulation, FinOrd};
use crate::par::Exec;
use crate::text::ord_to_text;

/// Set to ordinal and back is the identity on st-ordinals of `V_level` and on
/// the numerals up to `max_numeral`; ordinal to set and back is an
/// isomorphism on every labelled ordinal up to `max_size`. The rank ordinal
/// always has the rank as its size.
pub fn ordinal_round_trips(exec: Exec, level: usize, max_numeral: usize, max_size: usize) -> Outcome {
    let mut o = Outcome::new("correspondence.ordinal_round_trips");
    let mut u = SetUniverse::new();
    let mut sets: Vec<SetHandle> = enumerate_v(&mut u, level).unwrap();
    for n in 0..=max_numeral {
        sets.push(u.von_neumann(n).unwrap());
    }
    for (i, &h) in sets.iter().enumerate() {
        let alpha = psi_ord(&u, h);
        o.check(alpha.order_type() == u.rank_nat(h), || u.display(h).to_string(), || u.rank_nat(h).to_string(), || alpha.order_type().to_string());
        if u.is_st_ordinal(h) {
            let back = phi_ord(&mut u, &alpha).unwrap();
            o.check(back == h, || format!("set #{i}"), || u.display(h).to_string(), || u.display(back).to_string());
        }
    }
    let all = labelled_upto(max_size);
    let parts = exec.map_init(&all, SetUniverse::new, |u, alpha| {
        let mut o = Outcome::new("correspondence.ordinal_round_trips");
        let h = phi_ord(u, alpha).unwrap();
        let back = psi_ord(u, h);
        o.check(back.same_ordinal(alpha), || ord_to_text(alpha), || ord_to_text(alpha), || ord_to_text(&back));
        o.expect(u.is_st_ordinal(h), || format!("image of {} is an ordinal", ord_to_text(alpha)));
        o
    });
    for p in parts {
        o.absorb(p);
    }
    o
}

/// Equality, `<` and `≤` of ordinals match equality, membership and inclusion
/// of their images, over all pairs of labelled ordinals up to `max_size`.
pub fn ordinal_transport(exec: Exec, max_size: usize) -> Outcome {
    let all = labelled_upto(max_size);
    let init = || {
        let mut u = SetUniverse::new();
        let images: Vec<SetHandle> = all.iter().map(|a| phi_ord(&mut u, a).unwrap()).collect();
        (u, images)
    };
    let idx: Vec<usize> = (0..all.len()).collect();
    let parts = exec.map_init(&idx, init, |(u, images), &a| {
        let mut o = Outcome::new("correspondence.ordinal_transport");
        let alpha = &all[a];
        for (b, beta) in all.iter().enumerate() {
            let input = || format!("{} vs {}", ord_to_text(alpha), ord_to_text(beta));
            let (ha, hb) = (images[a], images[b]);
            let eq = alpha.same_ordinal(beta);
            o.check(eq == (ha == hb), input, || eq.to_string(), || (ha == hb).to_string());
            let lt = bounded_sim(alpha, beta).is_some();
            let mem = u.mem(ha, hb).unwrap();
            o.check(lt == mem, input, || lt.to_string(), || mem.to_string());
            let le = simulation(alpha, beta).is_some();
            let sub = u.subset(ha, hb).unwrap();
            o.check(le == sub, input, || le.to_string(), || sub.to_string());
        }
        o
    });
    Outcome::merged("correspondence.ordinal_transport", parts)
}

fn relabelled_equal(a: &FinOrd, b: &FinOrd) -> bool {
    a.canonical() == b.canonical() && a.same_ordinal(b)
}

/// For random redundant presentations of st-ordinals, the quotient order, the
/// rank ordinal and the element ordinal coincide up to relabelling, and the
/// quotient classes group exactly the equal entries.
pub fn rank_quotients(seed: u64, count: usize, max_width: usize, max_depth: usize) -> Outcome {
    let mut o = Outcome::new("correspondence.rank_quotients");
    let mut u = SetUniverse::new();
    let mut g = GenConfig { seed, max_width, max_depth, count }.generator();
    for _ in 0..count {
        let (h, presentation) = g.st_ordinal_presentation(&mut u).unwrap();
        let input = || format!("{} presented as {presentation:?}", u.display(h));
        let q = rank_quotient(&u, h, &presentation).unwrap();
        let psi = psi_ord(&u, h);
        let el = elements_ordinal(&u, h).unwrap();
        o.check(relabelled_equal(&q.order, &psi), input, || ord_to_text(&psi), || ord_to_text(&q.order));
        o.check(relabelled_equal(&el, &psi), input, || ord_to_text(&psi), || ord_to_text(&el));
        let partitioned = q.classes.iter().all(|c| c.iter().all(|&i| presentation[i] == presentation[c[0]]))
            && q.classes.iter().map(Vec::len).sum::<usize>() == presentation.len()
            && q.classes.len() == u.cardinality(h);
        o.expect(partitioned, || format!("classes of {}", input()));
        for p in 0..q.classes.len() {
            for r in 0..q.classes.len() {
                let mem = u.mem(presentation[q.classes[p][0]], presentation[q.classes[r][0]]).unwrap();
                o.expect(q.order.lt(p, r) == mem, || format!("class order of {}", input()));
            }
        }
    }
    o
}

/// Set to mewo and back is the identity on `V_level` and on random sets;
/// mewo to set and back is equality on covered mewos up to `max_size` and on
/// random covered mewos. The literal and direct set-to-mewo maps agree.
pub fn mewo_round_trips(exec: Exec, level: usize, max_size: usize, seed: u64, random_sets: usize, random_mewos: usize, max_depth: usize) -> Outcome {
    let mut o = Outcome::new("correspondence.mewo_round_trips");
    let mut u = SetUniverse::new();
    let mut sets = enumerate_v(&mut u, level).unwrap();
    sets.extend(GenConfig { seed, max_width: 4, max_depth, count: random_sets }.sets(&mut u).unwrap());
    for &h in &sets {
        let m = psi_mewo(&u, h);
        let direct = psi_mewo_direct(&u, h);
        o.expect(m.is_covered(), || format!("image of {} is covered", u.display(h)));
        o.check(mewo_equal(&m, &direct), || u.display(h).to_string(), || show_mewo(&direct), || show_mewo(&m));
        let back = phi_mewo(&mut u, &m).unwrap();
        o.check(back == h, || show_mewo(&m), || u.display(h).to_string(), || u.display(back).to_string());
    }
    let mut mewos: Vec<Mewo> = mewos_upto(max_size).into_iter().filter(Mewo::is_covered).collect();
    mewos.extend(GenConfig { seed: seed ^ 0x5eed, max_width: 3, max_depth: 4, count: random_mewos }.covered_mewos());
    let parts = exec.map_init(&mewos, SetUniverse::new, |u, x| {
        let mut o = Outcome::new("correspondence.mewo_round_trips");
        let h = phi_mewo(u, x).unwrap();
        let back = psi_mewo(u, h);
        o.check(mewo_equal(&back, x), || show_mewo(x), || show_mewo(x), || show_mewo(&back));
        o
    });
    for p in parts {
        o.absorb(p);
    }
    o
}

/// For covered mewos up to `max_size`: `≤` is inclusion of images and `<` is
/// membership of images.
pub fn mewo_transport(exec: Exec, max_size: usize) -> Outcome {
    let covered: Vec<Mewo> = mewos_upto(max_size).into_iter().filter(Mewo::is_covered).collect();
    let init = || {
        let mut u = SetUniverse::new();
        let images: Vec<SetHandle> = covered.iter().map(|x| phi_mewo(&mut u, x).unwrap()).collect();
        (u, images)
    };
    let idx: Vec<usize> = (0..covered.len()).collect();
    let parts = exec.map_init(&idx, init, |(u, images), &a| {
        let mut o = Outcome::new("correspondence.mewo_transport");
        let x = &covered[a];
        for (b, y) in covered.iter().enumerate() {
            let input = || format!("{} vs {}", show_mewo(x), show_mewo(y));
            let le = simulation_mewo(x, y).is_some();
            let sub = u.subset(images[a], images[b]).unwrap();
            o.check(le == sub, input, || le.to_string(), || sub.to_string());
            let lt = bounded_sim_mewo(x, y).is_some();
            let mem = u.mem(images[a], images[b]).unwrap();
            o.check(lt == mem, input, || lt.to_string(), || mem.to_string());
        }
        o
    });
    Outcome::merged("correspondence.mewo_transport", parts)
}

/// The set of an ordinal, read back as a mewo, is the ordinal with everything
/// marked.
pub fn square_commutes(exec: Exec, max_size: usize) -> Outcome {
    let all = labelled_upto(max_size);
    let parts = exec.map_init(&all, SetUniverse::new, |u, alpha| {
        let mut o = Outcome::new("correspondence.square_commutes");
        let h = phi_ord(u, alpha).unwrap();
        let via_sets = psi_mewo(u, h);
        let direct = Mewo::from_ordinal(alpha);
        o.check(mewo_equal(&via_sets, &direct), || ord_to_text(alpha), || show_mewo(&direct), || show_mewo(&via_sets));
        o.expect(phi_mewo(u, &direct).unwrap() == h, || format!("image of {} as a mewo", ord_to_text(alpha)));
        o
    });
    Outcome::merged("correspondence.square_commutes", parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        for o in [
            ordinal_round_trips(Exec::Sequential, 3, 6, 4),
            ordinal_transport(Exec::Sequential, 3),
            rank_quotients(1, 50, 6, 5),
            mewo_round_trips(Exec::Sequential, 3, 2, 2, 20, 20, 4),
            mewo_transport(Exec::Sequential, 3),
            square_commutes(Exec::Sequential, 4),
        ] {
            assert!(o.passed(), "{o}");
            assert!(o.cases > 0);
        }
    }
}
