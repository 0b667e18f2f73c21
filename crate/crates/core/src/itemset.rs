use std::fmt;

use serde::Serialize;

/// Item index within a database's universe. Stored 0-based; displayed as
/// `I<n>` with 1-based `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ItemId(pub u32);

impl ItemId {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn one_based(self) -> u64 {
        u64::from(self.0) + 1
    }
}

impl fmt::Display for ItemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I{}", self.one_based())
    }
}

/// A set of items in canonical form: strictly ascending, no duplicates.
///
/// Because the representation is canonical, derived equality, hashing and
/// ordering are set equality, set hashing and lexicographic order.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Itemset(Vec<ItemId>);

impl Itemset {
    pub fn empty() -> Self {
        Itemset(Vec::new())
    }

    pub fn new(mut items: Vec<ItemId>) -> Self {
        items.sort_unstable();
        items.dedup();
        Itemset(items)
    }

    /// Builds from 0-based indices.
    pub fn from_indices<I: IntoIterator<Item = u32>>(indices: I) -> Self {
        Self::new(indices.into_iter().map(ItemId).collect())
    }

    /// Builds from the 1-based item numbers used in labels (`I1` is `1`).
    /// Panics on `0`.
    pub fn from_labels(labels: &[u32]) -> Self {
        Self::new(
            labels
                .iter()
                .map(|&n| ItemId(n.checked_sub(1).expect("item labels are 1-based")))
                .collect(),
        )
    }

    /// Wraps a vector the caller guarantees is already strictly ascending.
    pub(crate) fn from_sorted_unchecked(items: Vec<ItemId>) -> Self {
        debug_assert!(items.windows(2).all(|w| w[0] < w[1]));
        Itemset(items)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn items(&self) -> &[ItemId] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = ItemId> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, item: ItemId) -> bool {
        self.0.binary_search(&item).is_ok()
    }

    pub fn max_item(&self) -> Option<ItemId> {
        self.0.last().copied()
    }

    /// Merge-walk subset test.
    pub fn is_subset_of(&self, other: &Itemset) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut rest = other.0.iter();
        'outer: for item in &self.0 {
            for candidate in rest.by_ref() {
                match candidate.cmp(item) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Equal => continue 'outer,
                    std::cmp::Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    /// Copy with the member at `position` removed.
    pub fn without_position(&self, position: usize) -> Itemset {
        let mut items = Vec::with_capacity(self.len().saturating_sub(1));
        items.extend_from_slice(&self.0[..position]);
        items.extend_from_slice(&self.0[position + 1..]);
        Itemset(items)
    }

    pub fn union(&self, other: &Itemset) -> Itemset {
        let mut items = Vec::with_capacity(self.len() + other.len());
        items.extend_from_slice(&self.0);
        items.extend_from_slice(&other.0);
        Itemset::new(items)
    }

    pub fn difference(&self, other: &Itemset) -> Itemset {
        Itemset(self.iter().filter(|&i| !other.contains(i)).collect())
    }

    /// All non-empty proper subsets, enumerated by bitmask. Only meant for
    /// itemsets small enough to enumerate.
    pub fn proper_subsets(&self) -> Vec<Itemset> {
        let n = self.len();
        assert!(n < 32, "subset enumeration limited to 31 members");
        let full = (1u32 << n) - 1;
        (1..full)
            .map(|mask| {
                Itemset(
                    (0..n)
                        .filter(|bit| mask & (1 << bit) != 0)
                        .map(|bit| self.0[bit])
                        .collect(),
                )
            })
            .collect()
    }

    /// 1-based item numbers, as used in the JSON output.
    pub fn labels(&self) -> Vec<u64> {
        self.iter().map(ItemId::one_based).collect()
    }

    /// 0/1 row over a universe of `universe` items.
    pub fn to_row(&self, universe: usize) -> String {
        let mut row = vec!["0"; universe];
        for item in self.iter() {
            if item.index() < universe {
                row[item.index()] = "1";
            }
        }
        row.join(" ")
    }
}

impl fmt::Display for Itemset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for item in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{item}")?;
            first = false;
        }
        if first {
            f.write_str("{}")?;
        }
        Ok(())
    }
}

impl FromIterator<ItemId> for Itemset {
    fn from_iter<T: IntoIterator<Item = ItemId>>(iter: T) -> Self {
        Itemset::new(iter.into_iter().collect())
    }
}

/// Fixed-width bitset over the item universe, used for containment tests
/// during support counting.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ItemMask(Vec<u64>);

impl ItemMask {
    pub fn new(universe: usize, itemset: &Itemset) -> Self {
        let mut words = vec![0u64; universe.div_ceil(64).max(1)];
        for item in itemset.iter() {
            words[item.index() / 64] |= 1 << (item.index() % 64);
        }
        ItemMask(words)
    }

    /// True when every bit of `other` is also set in `self`.
    #[inline]
    pub fn contains(&self, other: &ItemMask) -> bool {
        self.0
            .iter()
            .zip(&other.0)
            .all(|(&mine, &theirs)| mine & theirs == theirs)
    }
}
