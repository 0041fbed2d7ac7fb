/// Lexicographic numbering of the unordered pairs `{i, j}`, `i < j < k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairIndexer {
    k: usize,
    pairs: Vec<(usize, usize)>,
}

impl PairIndexer {
    pub fn new(k: usize) -> Self {
        let pairs = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
        PairIndexer { k, pairs }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `k(k-1)/2`.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pair(&self, p: usize) -> (usize, usize) {
        self.pairs[p]
    }

    /// Index of `{i, j}` in either order; `None` for `i == j` or out of range.
    pub fn index(&self, i: usize, j: usize) -> Option<usize> {
        let (a, b) = (i.min(j), i.max(j));
        if a == b || b >= self.k {
            return None;
        }
        // pairs starting below `a` come first
        Some(a * (2 * self.k - a - 1) / 2 + (b - a - 1))
    }

    /// Whether `i` belongs to pair `p`.
    pub fn contains(&self, p: usize, i: usize) -> bool {
        let (a, b) = self.pairs[p];
        a == i || b == i
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lexicographic() {
        let r = PairIndexer::new(4);
        assert_eq!(r.len(), 6);
        assert_eq!(r.pair(0), (0, 1));
        assert_eq!(r.pair(2), (0, 3));
        assert_eq!(r.pair(3), (1, 2));
        assert_eq!(r.pair(5), (2, 3));
        assert!(r.contains(3, 2) && !r.contains(3, 0));
        assert_eq!(r.index(1, 1), None);
        assert!(PairIndexer::new(1).is_empty());
    }

    proptest! {
        #[test]
        fn index_inverts_pair(k in 2usize..12) {
            let r = PairIndexer::new(k);
            prop_assert_eq!(r.len(), k * (k - 1) / 2);
            for p in 0..r.len() {
                let (i, j) = r.pair(p);
                prop_assert_eq!(r.index(i, j), Some(p));
                prop_assert_eq!(r.index(j, i), Some(p));
            }
        }
    }
}
