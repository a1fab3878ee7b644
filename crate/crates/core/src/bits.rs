//! Small helpers over `u64` word slices used as vertex sets.

#[inline]
pub fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub fn test(set: &[u64], i: usize) -> bool {
    set[i >> 6] >> (i & 63) & 1 == 1
}

#[inline]
pub fn set(set: &mut [u64], i: usize) {
    set[i >> 6] |= 1 << (i & 63);
}

#[inline]
pub fn clear(set: &mut [u64], i: usize) {
    set[i >> 6] &= !(1 << (i & 63));
}

#[inline]
pub fn count(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub fn is_empty(set: &[u64]) -> bool {
    set.iter().all(|&w| w == 0)
}

/// A set containing exactly `0..n`.
pub fn full(n: usize) -> Vec<u64> {
    let mut s = vec![!0u64; words_for(n)];
    if !n.is_multiple_of(64) {
        if let Some(last) = s.last_mut() {
            *last = (1u64 << (n % 64)) - 1;
        }
    }
    s
}

pub fn first(set: &[u64]) -> Option<usize> {
    set.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}

/// Iterates the members of a set in increasing order.
pub fn iter(set: &[u64]) -> Ones<'_> {
    Ones {
        words: set,
        index: 0,
        current: set.first().copied().unwrap_or(0),
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_iter() {
        let s = full(70);
        assert_eq!(count(&s), 70);
        assert_eq!(iter(&s).collect::<Vec<_>>(), (0..70).collect::<Vec<_>>());
        assert!(is_empty(&full(0)));
        let mut t = vec![0u64; 2];
        set(&mut t, 3);
        set(&mut t, 65);
        assert_eq!(iter(&t).collect::<Vec<_>>(), vec![3, 65]);
        clear(&mut t, 3);
        assert_eq!(first(&t), Some(65));
    }
}
