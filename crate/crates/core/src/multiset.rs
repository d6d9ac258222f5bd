//! Enumeration of the distinct orderings of a multiset.

/// Rearranges `xs` into the next lexicographically greater permutation.
/// Returns `false` (leaving `xs` sorted ascending) when `xs` was the last one.
///
/// Equal elements are never swapped with each other, so starting from the
/// sorted order visits every distinct arrangement exactly once.
pub fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        xs.reverse();
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Iterator over the distinct permutations of a multiset, in lexicographic
/// order starting from the sorted arrangement.
pub struct DistinctPermutations<T> {
    current: Vec<T>,
    done: bool,
}

impl<T: Ord + Clone> DistinctPermutations<T> {
    pub fn new(mut items: Vec<T>) -> Self {
        items.sort();
        DistinctPermutations { current: items, done: false }
    }
}

impl<T: Ord + Clone> Iterator for DistinctPermutations<T> {
    type Item = Vec<T>;

    fn next(&mut self) -> Option<Vec<T>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        self.done = !next_permutation(&mut self.current);
        Some(out)
    }
}

pub fn distinct_permutations<T: Ord + Clone>(items: &[T]) -> DistinctPermutations<T> {
    DistinctPermutations::new(items.to_vec())
}
