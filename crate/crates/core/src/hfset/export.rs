//! Portable, history-independent snapshots of a set and its hereditary members.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{SetError, SetHandle, SetUniverse};

/// A set together with its hereditary members, topologically sorted.
///
/// `nodes[i]` lists the positions of the members of node `i`, ascending; every
/// member precedes its parent. Nodes are ordered by the Ackermann order on
/// hereditarily finite sets, so the slice of a given set is the same no matter
/// which universe, or which interning history, it was exported from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniverseSlice {
    pub nodes: Vec<Vec<usize>>,
    pub root: usize,
}

impl UniverseSlice {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("slice serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, SetError> {
        serde_json::from_str(text).map_err(|e| SetError::MalformedSlice(e.to_string()))
    }
}

impl SetUniverse {
    /// Exports `h` and everything hereditarily below it.
    pub fn export(&self, h: SetHandle) -> UniverseSlice {
        let reachable = self.closure_of(h);
        let mut by_rank: Vec<Vec<SetHandle>> = Vec::new();
        for &x in &reachable {
            let r = self.rank_nat(x);
            if by_rank.len() <= r {
                by_rank.resize_with(r + 1, Vec::new);
            }
            by_rank[r].push(x);
        }

        // Sets of lower rank always precede sets of higher rank in the
        // Ackermann order; within a rank, compare descending member positions.
        let mut position: HashMap<SetHandle, usize> = HashMap::with_capacity(reachable.len());
        let mut nodes: Vec<Vec<usize>> = Vec::with_capacity(reachable.len());
        for layer in by_rank {
            let mut keyed: Vec<(Vec<usize>, SetHandle)> = layer
                .into_iter()
                .map(|x| {
                    let mut key: Vec<usize> = self.elements(x).iter().map(|c| position[c]).collect();
                    key.sort_unstable_by(|a, b| b.cmp(a));
                    (key, x)
                })
                .collect();
            keyed.sort();
            for (mut key, x) in keyed {
                position.insert(x, nodes.len());
                key.reverse();
                nodes.push(key);
            }
        }
        UniverseSlice {
            root: position[&h],
            nodes,
        }
    }

    /// Interns every node of a slice and returns the handle of its root.
    ///
    /// Members must refer to earlier nodes; duplicate nodes are allowed and
    /// collapse to the same set.
    pub fn import(&mut self, slice: &UniverseSlice) -> Result<SetHandle, SetError> {
        if slice.root >= slice.nodes.len() {
            return Err(SetError::MalformedSlice(format!(
                "root {} out of range for {} nodes",
                slice.root,
                slice.nodes.len()
            )));
        }
        let mut handles: Vec<SetHandle> = Vec::with_capacity(slice.nodes.len());
        for (i, members) in slice.nodes.iter().enumerate() {
            let mut children = Vec::with_capacity(members.len());
            for &m in members {
                if m >= i {
                    return Err(SetError::MalformedSlice(format!(
                        "node {i} refers to node {m}, which does not precede it"
                    )));
                }
                children.push(handles[m]);
            }
            handles.push(self.mk_set(&children)?);
        }
        Ok(handles[slice.root])
    }
}

/// Brace-notation rendering of a set, members in canonical order.
pub struct SetDisplay {
    slice: UniverseSlice,
}

impl SetDisplay {
    pub(super) fn new(slice: UniverseSlice) -> Self {
        SetDisplay { slice }
    }

    /// Length in bytes of the rendering, without producing it. Shared members
    /// are written out once per occurrence, so this can grow exponentially in
    /// the number of distinct sets; saturates at `u64::MAX`.
    pub fn printed_len(&self) -> u64 {
        // Slice nodes list members before the sets containing them.
        let mut len = vec![0u64; self.slice.nodes.len()];
        for (i, members) in self.slice.nodes.iter().enumerate() {
            let inner = members.iter().fold(0u64, |acc, &c| acc.saturating_add(len[c]));
            let commas = members.len().saturating_sub(1) as u64;
            len[i] = inner.saturating_add(commas).saturating_add(2);
        }
        len[self.slice.root]
    }

    fn write_node(&self, f: &mut fmt::Formatter<'_>, i: usize) -> fmt::Result {
        f.write_str("{")?;
        for (k, &c) in self.slice.nodes[i].iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            self.write_node(f, c)?;
        }
        f.write_str("}")
    }
}

impl fmt::Display for SetDisplay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_node(f, self.slice.root)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_of_small_sets() {
        let mut u = SetUniverse::new();
        let two = u.von_neumann(2).unwrap();
        assert_eq!(u.display(two).to_string(), "{{},{{}}}");
        let e = u.empty_set().unwrap();
        assert_eq!(u.display(e).to_string(), "{}");
        for n in 0..8 {
            let h = u.von_neumann(n).unwrap();
            let d = u.display(h);
            assert_eq!(d.printed_len(), d.to_string().len() as u64);
        }
    }

    #[test]
    fn export_is_history_independent() {
        let mut u = SetUniverse::new();
        let two = u.von_neumann(2).unwrap();
        let one = u.von_neumann(1).unwrap();
        let s1 = u.singleton(one).unwrap();
        let x = u.mk_set(&[two, s1]).unwrap();

        // Build the same set in the reverse order in another universe.
        let mut v = SetUniverse::new();
        let e = v.empty_set().unwrap();
        let one_v = v.singleton(e).unwrap();
        let one_one = v.singleton(one_v).unwrap();
        let two_v = v.mk_set(&[one_v, e]).unwrap();
        let y = v.mk_set(&[one_one, two_v]).unwrap();

        assert_eq!(u.export(x), v.export(y));
        assert_eq!(u.export(x).to_json(), r#"{"nodes":[[],[0],[1],[0,1],[2,3]],"root":4}"#);
    }

    #[test]
    fn import_round_trips() {
        let mut u = SetUniverse::new();
        let three = u.von_neumann(3).unwrap();
        let slice = u.export(three);
        let json = slice.to_json();
        let mut v = SetUniverse::new();
        let back = v.import(&UniverseSlice::from_json(&json).unwrap()).unwrap();
        assert_eq!(v.export(back).to_json(), json);
        assert_eq!(back, v.von_neumann(3).unwrap());
    }

    #[test]
    fn malformed_slices() {
        let mut u = SetUniverse::new();
        let bad = UniverseSlice {
            nodes: vec![vec![0]],
            root: 0,
        };
        assert!(matches!(u.import(&bad), Err(SetError::MalformedSlice(_))));
        let bad_root = UniverseSlice {
            nodes: vec![vec![]],
            root: 1,
        };
        assert!(u.import(&bad_root).is_err());
        assert!(UniverseSlice::from_json("{\"nodes\":3}").is_err());
    }
}
