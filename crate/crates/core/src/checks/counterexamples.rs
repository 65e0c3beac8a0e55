//! Fixed small mewos on which familiar ordinal facts fail.

use super::Outcome;
use crate::hfset::SetUniverse;
use crate::mewo::fixtures::{bullet, bullet_bullet, circle, circle_bullet};
use crate::mewo::{bounded_sim_mewo, mewo_equal, simulation_mewo, union, Mewo};
use crate::order::ValidationError;

/// One named fact with its expected and observed value.
pub struct Fixture {
    pub name: &'static str,
    pub expected: bool,
    pub got: bool,
}

pub fn fixtures() -> Vec<Fixture> {
    let (empty, b, c, cb, bb) = (Mewo::empty(), bullet(), circle(), circle_bullet(), bullet_bullet());
    let mut u = SetUniverse::new();
    let e = u.empty_set().unwrap();
    let one = u.singleton(e).unwrap();
    let two = u.von_neumann(2).unwrap();
    let only_one = u.singleton(one).unwrap();
    vec![
        Fixture {
            name: "• < ∘←•",
            expected: true,
            got: bounded_sim_mewo(&b, &cb).is_some(),
        },
        Fixture {
            name: "• ≤ ∘←• (bounded does not imply simulation)",
            expected: false,
            got: simulation_mewo(&b, &cb).is_some(),
        },
        Fixture {
            name: "∅ < •",
            expected: true,
            got: bounded_sim_mewo(&empty, &b).is_some(),
        },
        Fixture {
            name: "∅ < ∘←• (bounded simulation is not transitive)",
            expected: false,
            got: bounded_sim_mewo(&empty, &cb).is_some(),
        },
        Fixture {
            name: "singleton of ∘ is rejected; adjoining a top to ∘ is not extensional",
            expected: true,
            got: matches!(c.singleton(), Err(ValidationError::NotCovered { element: 0 }))
                && matches!(c.adjoin_top(), Err(ValidationError::Extensionality { .. })),
        },
        Fixture {
            name: "union of •←• and ∘←• marks the shared bottom",
            expected: true,
            got: mewo_equal(&union(&[cb.clone(), bb.clone()]), &bb),
        },
        Fixture {
            name: "{∅,{∅}} ⊆ {{∅}}",
            expected: false,
            got: u.subset(two, only_one).unwrap(),
        },
        Fixture {
            name: "∅ ∈ {{∅}}",
            expected: false,
            got: u.mem(e, only_one).unwrap(),
        },
    ]
}

pub fn check_fixtures() -> Outcome {
    let mut o = Outcome::new("counterexamples");
    for f in fixtures() {
        o.check(f.expected == f.got, || f.name.to_string(), || f.expected.to_string(), || f.got.to_string());
    }
    o
}

#[cfg(test)]
mod tests {
    #[test]
    fn fixtures_hold() {
        let o = super::check_fixtures();
        assert!(o.passed(), "{o}");
        assert_eq!(o.cases, 8);
    }
}
