//! Finite families of soft sets over one space: deduplication, family union
//! and intersection, and the directedness predicates.

use std::fmt;
use std::sync::Arc;

use crate::error::Result;
use crate::soft_set::SoftSet;
use crate::space::Space;

/// A deduplicated finite collection of soft sets sharing one space, kept in
/// canonical enumeration order.
#[derive(Clone, PartialEq, Eq)]
pub struct SoftFamily {
    space: Arc<Space>,
    members: Vec<SoftSet>,
}

impl SoftFamily {
    /// Builds a family, deduplicating members under soft equality.
    pub fn new(space: &Arc<Space>, members: impl IntoIterator<Item = SoftSet>) -> Result<SoftFamily> {
        let mut collected: Vec<SoftSet> = Vec::new();
        for m in members {
            Space::ensure_same(space, m.space())?;
            collected.push(m);
        }
        collected.sort();
        collected.dedup();
        Ok(SoftFamily {
            space: Arc::clone(space),
            members: collected,
        })
    }

    pub fn empty(space: &Arc<Space>) -> SoftFamily {
        SoftFamily {
            space: Arc::clone(space),
            members: Vec::new(),
        }
    }

    pub fn space(&self) -> &Arc<Space> {
        &self.space
    }

    pub fn members(&self) -> &[SoftSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, set: &SoftSet) -> bool {
        self.members.binary_search(set).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SoftSet> {
        self.members.iter()
    }

    /// A new family with `set` added (no-op if already present).
    pub fn with(&self, set: SoftSet) -> Result<SoftFamily> {
        Space::ensure_same(&self.space, set.space())?;
        let mut members = self.members.clone();
        if let Err(pos) = members.binary_search(&set) {
            members.insert(pos, set);
        }
        Ok(SoftFamily {
            space: Arc::clone(&self.space),
            members,
        })
    }

    /// A new family without `set` (no-op if absent).
    pub fn without(&self, set: &SoftSet) -> SoftFamily {
        let mut members = self.members.clone();
        if let Ok(pos) = members.binary_search(set) {
            members.remove(pos);
        }
        SoftFamily {
            space: Arc::clone(&self.space),
            members,
        }
    }

    /// Parameter-wise union over all members; the null soft set when empty.
    pub fn union_all(&self) -> SoftSet {
        let mut acc = SoftSet::null(&self.space);
        for m in &self.members {
            acc = acc.union(m).expect("members share the family space");
        }
        acc
    }

    /// Parameter-wise intersection over all members; the absolute soft set
    /// when empty.
    pub fn intersection_all(&self) -> SoftSet {
        let mut acc = SoftSet::absolute(&self.space);
        for m in &self.members {
            acc = acc.intersect(m).expect("members share the family space");
        }
        acc
    }

    /// Every pair of members has a member containing both. Empty and
    /// singleton families are vacuously directed.
    pub fn is_upward_directed(&self) -> bool {
        upward_directed(&self.members.iter().collect::<Vec<_>>())
    }

    /// Every pair of members has a member contained in both.
    pub fn is_downward_directed(&self) -> bool {
        downward_directed(&self.members.iter().collect::<Vec<_>>())
    }
}

impl fmt::Display for SoftFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SoftFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SoftFamily{self}")
    }
}

impl<'a> IntoIterator for &'a SoftFamily {
    type Item = &'a SoftSet;
    type IntoIter = std::slice::Iter<'a, SoftSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Directedness of an ad-hoc selection of soft sets.
pub(crate) fn upward_directed(sets: &[&SoftSet]) -> bool {
    sets.iter().enumerate().all(|(i, a)| {
        sets[i..].iter().all(|b| {
            sets.iter().any(|c| {
                a.is_subset(c).unwrap_or(false) && b.is_subset(c).unwrap_or(false)
            })
        })
    })
}

pub(crate) fn downward_directed(sets: &[&SoftSet]) -> bool {
    sets.iter().enumerate().all(|(i, a)| {
        sets[i..].iter().all(|b| {
            sets.iter().any(|c| {
                c.is_subset(a).unwrap_or(false) && c.is_subset(b).unwrap_or(false)
            })
        })
    })
}

/// Calls `visit` on every subfamily of `pool` of size at most `cap`,
/// including the empty one, in index order. Stops early when `visit`
/// returns `false`.
pub(crate) fn for_each_subfamily<'a>(
    pool: &'a [SoftSet],
    cap: usize,
    visit: &mut impl FnMut(&[&'a SoftSet]) -> bool,
) -> bool {
    fn recurse<'a>(
        pool: &'a [SoftSet],
        cap: usize,
        start: usize,
        current: &mut Vec<&'a SoftSet>,
        visit: &mut impl FnMut(&[&'a SoftSet]) -> bool,
    ) -> bool {
        if !visit(current) {
            return false;
        }
        if current.len() == cap {
            return true;
        }
        for i in start..pool.len() {
            current.push(&pool[i]);
            let keep_going = recurse(pool, cap, i + 1, current, visit);
            current.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
    let mut current = Vec::with_capacity(cap);
    recurse(pool, cap, 0, &mut current, visit)
}

/// The union of an ad-hoc selection; the null soft set of `space` when empty.
pub(crate) fn union_of(space: &Arc<Space>, sets: &[&SoftSet]) -> SoftSet {
    let mut acc = SoftSet::null(space);
    for s in sets {
        acc = acc.union(s).expect("selection shares the space");
    }
    acc
}
