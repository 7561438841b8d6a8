use std::cmp::Ordering;

/// A subset of the generators, as a bit set over generator indices.
///
/// Ordered canonically: by size, then lexicographically by sorted indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u64);

pub const MAX_RANK: usize = 64;

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut bits = 0u64;
        for i in indices {
            assert!(i < MAX_RANK, "generator index {i} out of range");
            bits |= 1 << i;
        }
        Subset(bits)
    }

    pub fn singleton(i: usize) -> Self {
        Self::from_indices([i])
    }

    pub fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_RANK && self.0 & (1 << i) != 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: Subset) -> bool {
        self.is_subset_of(other) && self != other
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..MAX_RANK).filter(move |i| bits & (1 << i) != 0)
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Subset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.indices()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order() {
        let mut v = vec![
            Subset::from_indices([0, 1]),
            Subset::from_indices([2]),
            Subset::from_indices([0, 2]),
            Subset::from_indices([0]),
            Subset::from_indices([1, 2]),
        ];
        v.sort();
        let idx: Vec<Vec<usize>> = v.iter().map(|s| s.indices().collect()).collect();
        assert_eq!(idx, vec![vec![0], vec![2], vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn set_ops() {
        let a = Subset::from_indices([0, 1]);
        let b = Subset::from_indices([1]);
        assert!(b.is_proper_subset_of(a));
        assert!(!a.is_proper_subset_of(a));
        assert!(a.is_subset_of(a));
        assert!(!a.is_disjoint(b));
        assert_eq!(a.union(Subset::singleton(3)).len(), 3);
    }
}
