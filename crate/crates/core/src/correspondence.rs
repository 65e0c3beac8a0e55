//! Translations between ordinals, mewos and hereditarily finite sets.
//!
//! `phi_*` go from structures to sets, `psi_*` from sets back to structures.
//! On ordinals they relate finite ordinals to von Neumann numerals; on mewos
//! they relate covered mewos to arbitrary sets.

use std::collections::HashMap;

use crate::hfset::{SetError, SetHandle, SetUniverse};
use crate::mewo::{union, Mewo};
use crate::ordinal::FinOrd;
use crate::relation::Relation;

/// The quotient of a presentation `⟨A, f⟩` of an st-ordinal by `f a = f b`,
/// ordered by `f a ∈ f b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRank {
    /// Presentation indices grouped by equal image, classes in order of first
    /// occurrence, indices ascending within a class.
    pub classes: Vec<Vec<usize>>,
    /// The class order, labelled like `classes`.
    pub order: FinOrd,
}

/// The set of the images of all initial segments of `alpha`.
///
/// Built bottom-up: the image of `α ↓ a` is the set of images of `α ↓ b` for
/// `b < a`, since `(α ↓ a) ↓ b = α ↓ b`.
pub fn phi_ord(u: &mut SetUniverse, alpha: &FinOrd) -> Result<SetHandle, SetError> {
    let mut image = vec![None; alpha.size()];
    let mut members = Vec::new();
    for a in alpha.linearization() {
        members.clear();
        members.extend(alpha.relation().predecessors(a).map(|b| image[b].expect("predecessor first")));
        image[a] = Some(u.mk_set(&members)?);
    }
    let all: Vec<SetHandle> = image.into_iter().map(|h| h.expect("all visited")).collect();
    u.mk_set(&all)
}

/// The rank of `h` as an ordinal: the supremum of `rank(x) + 1` over members
/// `x`, computed with the ordinal sum and supremum. Total on sets.
pub fn psi_ord(u: &SetUniverse, h: SetHandle) -> FinOrd {
    let mut memo = HashMap::new();
    psi_ord_memo(u, h, &mut memo)
}

fn psi_ord_memo(u: &SetUniverse, h: SetHandle, memo: &mut HashMap<SetHandle, FinOrd>) -> FinOrd {
    // Closure is ascending by creation index, so members come first.
    for x in u.closure_of(h) {
        if memo.contains_key(&x) {
            continue;
        }
        let family: Vec<FinOrd> = u.elements(x).iter().map(|m| memo[m].successor()).collect();
        memo.insert(x, FinOrd::sup(&family));
    }
    memo[&h].clone()
}

fn require_st_ordinal(u: &SetUniverse, h: SetHandle) -> Result<(), SetError> {
    if u.owns(h) && !u.is_st_ordinal(h) {
        return Err(SetError::NotAnOrdinal(u.display(h).to_string()));
    }
    Ok(())
}

/// Quotient of the presentation `h = {f a : a ∈ A}` given as the list of
/// images `f a`.
pub fn rank_quotient(u: &SetUniverse, h: SetHandle, presentation: &[SetHandle]) -> Result<QuotientRank, SetError> {
    for &p in presentation {
        if !u.owns(p) {
            return Err(SetError::ForeignHandle {
                expected: u.id(),
                found: p.universe_id(),
            });
        }
    }
    if !u.owns(h) {
        return Err(SetError::ForeignHandle {
            expected: u.id(),
            found: h.universe_id(),
        });
    }
    require_st_ordinal(u, h)?;
    let mut image = presentation.to_vec();
    image.sort_unstable();
    image.dedup();
    if image != u.elements(h) {
        return Err(SetError::NotAnOrdinal(format!(
            "the presentation does not present {}",
            u.display(h)
        )));
    }
    let mut class_of: HashMap<SetHandle, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut heads: Vec<SetHandle> = Vec::new();
    for (a, &p) in presentation.iter().enumerate() {
        let c = *class_of.entry(p).or_insert_with(|| {
            classes.push(Vec::new());
            heads.push(p);
            classes.len() - 1
        });
        classes[c].push(a);
    }
    let k = classes.len();
    let mut lt = Relation::empty(k);
    for p in 0..k {
        for q in 0..k {
            lt.set(p, q, u.mem(heads[p], heads[q])?);
        }
    }
    let order = FinOrd::validate(k, lt).map_err(|e| SetError::NotAnOrdinal(e.to_string()))?;
    Ok(QuotientRank { classes, order })
}

/// The members of an st-ordinal, ordered by membership and labelled by
/// creation index.
pub fn elements_ordinal(u: &SetUniverse, h: SetHandle) -> Result<FinOrd, SetError> {
    require_st_ordinal(u, h)?;
    let members = u.elements(h);
    let k = members.len();
    let mut lt = Relation::empty(k);
    for p in 0..k {
        for q in 0..k {
            lt.set(p, q, u.mem(members[p], members[q])?);
        }
    }
    FinOrd::validate(k, lt).map_err(|e| SetError::NotAnOrdinal(e.to_string()))
}

/// The set of codes of the marked elements.
pub fn phi_mewo(u: &mut SetUniverse, x: &Mewo) -> Result<SetHandle, SetError> {
    let codes = x.codes(u)?;
    let marked: Vec<SetHandle> = x.marked_elements().map(|e| codes.codes[e]).collect();
    u.mk_set(&marked)
}

/// `⋃ { ⟨ψ(a)⟩ : a ∈ h }`: the union of the singletons of the members' images.
/// Always covered.
pub fn psi_mewo(u: &SetUniverse, h: SetHandle) -> Mewo {
    let mut memo: HashMap<SetHandle, Mewo> = HashMap::new();
    for x in u.closure_of(h) {
        let family: Vec<Mewo> = u
            .elements(x)
            .iter()
            .map(|m| memo[m].singleton().expect("images are covered"))
            .collect();
        memo.insert(x, union(&family));
    }
    memo.remove(&h).expect("h is in its own closure")
}

/// The membership graph of the hereditary members of `h`, labelled by
/// creation index, with the direct members marked. Must equal
/// [`psi_mewo`] as a mewo.
pub fn psi_mewo_direct(u: &SetUniverse, h: SetHandle) -> Mewo {
    let carrier = u.hereditary_members(h);
    let position: HashMap<SetHandle, usize> = carrier.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut lt = Relation::empty(carrier.len());
    for (j, &y) in carrier.iter().enumerate() {
        for x in u.elements(y) {
            lt.set(position[&x], j, true);
        }
    }
    let mut marked = vec![false; carrier.len()];
    for x in u.elements(h) {
        marked[position[&x]] = true;
    }
    Mewo::validate(carrier.len(), lt, marked).expect("membership is wellfounded and extensional")
}
