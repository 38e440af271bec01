//! Subsets of a ground set of at most 64 elements, stored as bitmasks.

pub const MAX_GROUND: usize = 64;

#[inline]
pub fn bit(i: usize) -> u64 {
    1u64 << i
}

#[inline]
pub fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn len(s: u64) -> usize {
    s.count_ones() as usize
}

#[inline]
pub fn is_subset(a: u64, b: u64) -> bool {
    a & !b == 0
}

#[inline]
pub fn min_elem(s: u64) -> Option<usize> {
    (s != 0).then(|| s.trailing_zeros() as usize)
}

pub fn elems(s: u64) -> Elems {
    Elems(s)
}

pub fn from_elems<I: IntoIterator<Item = usize>>(it: I) -> u64 {
    it.into_iter().fold(0, |acc, i| acc | bit(i))
}

pub struct Elems(u64);

impl Iterator for Elems {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

/// All subsets of `mask` (including the empty set and `mask` itself), in
/// increasing numeric order.
pub fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask {
            None
        } else {
            Some((cur.wrapping_sub(mask)) & mask)
        };
        Some(cur)
    })
}

/// All `k`-element subsets of `mask`.
pub fn k_subsets(mask: u64, k: usize) -> impl Iterator<Item = u64> {
    let positions: Vec<usize> = elems(mask).collect();
    let n = positions.len();
    let mut idx: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let cur = idx.as_mut()?;
        let out = cur.iter().fold(0u64, |acc, &i| acc | bit(positions[i]));
        // advance to the next combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                idx = None;
                break;
            }
            i -= 1;
            if cur[i] < n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

/// Keep only the inclusion-minimal sets, sorted by (size, value).
pub fn minimal_sets(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_by_key(|&s| (len(s), s));
    sets.dedup();
    let mut out: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|&m| is_subset(m, s)) {
            out.push(s);
        }
    }
    out
}

/// Keep only the inclusion-maximal sets, sorted by value.
pub fn maximal_sets(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_by_key(|&s| (std::cmp::Reverse(len(s)), s));
    sets.dedup();
    let mut out: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|&m| is_subset(s, m)) {
            out.push(s);
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submask_enumeration_covers_power_set() {
        let subs: Vec<u64> = submasks(0b1011).collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|&s| is_subset(s, 0b1011)));
    }

    #[test]
    fn k_subsets_counts() {
        assert_eq!(k_subsets(full(6), 3).count(), 20);
        assert_eq!(k_subsets(full(4), 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(k_subsets(full(3), 4).count(), 0);
        let spread: Vec<u64> = k_subsets(0b10101, 2).collect();
        assert_eq!(spread, vec![0b00101, 0b10001, 0b10100]);
    }

    #[test]
    fn minimal_and_maximal() {
        assert_eq!(minimal_sets(vec![0b111, 0b011, 0b110, 0b011]), vec![0b011, 0b110]);
        assert_eq!(maximal_sets(vec![0b001, 0b011, 0b100]), vec![0b011, 0b100]);
    }
}
