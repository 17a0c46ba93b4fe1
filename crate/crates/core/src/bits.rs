//! Bitmask vertex sets and subset enumeration.

/// A set of vertices, one bit per vertex. Vertex ids are `0..n`, `n <= 64`.
pub type VertSet = u64;

pub const MAX_VERTICES: usize = 64;

#[inline]
pub fn bit(v: usize) -> VertSet {
    debug_assert!(v < MAX_VERTICES);
    1u64 << v
}

#[inline]
pub fn full_set(n: usize) -> VertSet {
    debug_assert!(n <= MAX_VERTICES);
    if n == MAX_VERTICES {
        !0
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn contains(s: VertSet, v: usize) -> bool {
    s & bit(v) != 0
}

/// Iterates the members of a set in increasing order.
pub fn iter_set(s: VertSet) -> impl Iterator<Item = usize> {
    let mut rest = s;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        }
    })
}

pub fn set_to_vec(s: VertSet) -> Vec<usize> {
    iter_set(s).collect()
}

pub fn vec_to_set(vs: &[usize]) -> VertSet {
    vs.iter().fold(0, |acc, &v| acc | bit(v))
}

/// All subsets of `0..n` with exactly `k` elements, ascending as integers
/// (Gosper's hack).
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertSet> {
    assert!(n <= MAX_VERTICES);
    let limit = full_set(n);
    let mut cur: u64 = if k == 0 {
        0
    } else if k > n {
        u64::MAX // sentinel: iterator yields nothing
    } else {
        full_set(k)
    };
    let mut emitted_empty = false;
    std::iter::from_fn(move || {
        if k == 0 {
            if emitted_empty {
                return None;
            }
            emitted_empty = true;
            return Some(0);
        }
        if cur == u64::MAX || cur > limit {
            return None;
        }
        let out = cur;
        // next k-combination
        let c = cur;
        let lo = c & c.wrapping_neg();
        let ripple = c.wrapping_add(lo);
        if ripple == 0 {
            cur = u64::MAX;
        } else {
            cur = ripple | (((c ^ ripple) >> 2) / lo);
        }
        Some(out)
    })
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_enumeration_counts() {
        for n in 0..=8 {
            for k in 0..=n {
                let got = subsets_of_size(n, k).count() as u128;
                assert_eq!(got, binomial(n, k), "n={n} k={k}");
            }
        }
        assert_eq!(subsets_of_size(5, 7).count(), 0);
    }

    #[test]
    fn subsets_ascending_and_sized() {
        let all: Vec<_> = subsets_of_size(6, 3).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|s| s.count_ones() == 3));
    }

    #[test]
    fn full_set_boundaries() {
        assert_eq!(full_set(0), 0);
        assert_eq!(full_set(64), !0u64);
        assert_eq!(full_set(3), 0b111);
    }
}
