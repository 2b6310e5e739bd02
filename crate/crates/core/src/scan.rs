//! Lexicographic exhaustive scans. Each returns the first tuple for which
//! the predicate is false, so witnesses are always minimal.

pub fn first_failure1(n: usize, mut holds: impl FnMut(usize) -> bool) -> Option<usize> {
    (0..n).find(|&a| !holds(a))
}

pub fn first_failure2(n: usize, mut holds: impl FnMut(usize, usize) -> bool) -> Option<[usize; 2]> {
    for a in 0..n {
        for b in 0..n {
            if !holds(a, b) {
                return Some([a, b]);
            }
        }
    }
    None
}

pub fn first_failure3(
    n: usize,
    mut holds: impl FnMut(usize, usize, usize) -> bool,
) -> Option<[usize; 3]> {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if !holds(a, b, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

pub fn first_failure4(
    n: usize,
    mut holds: impl FnMut(usize, usize, usize, usize) -> bool,
) -> Option<[usize; 4]> {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if !holds(a, b, c, d) {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

pub fn first_failure5(
    n: usize,
    mut holds: impl FnMut(usize, usize, usize, usize, usize) -> bool,
) -> Option<[usize; 5]> {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    for e in 0..n {
                        if !holds(a, b, c, d, e) {
                            return Some([a, b, c, d, e]);
                        }
                    }
                }
            }
        }
    }
    None
}

/// True when `map` is a permutation of `0..map.len()`.
pub fn is_permutation(map: &[usize]) -> bool {
    let mut seen = vec![false; map.len()];
    for &x in map {
        if x >= map.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}
