//! Maps `S x S -> S x S`, the braid relation, and equivalence of solutions.

use crate::brace::WeakBrace;
use crate::error::{Error, Result};
use crate::scan::{first_failure3, is_permutation};

/// Default cap on the number of bijections `find_equivalence` may enumerate (8!).
pub const DEFAULT_BUDGET: u128 = 40_320;

/// A candidate solution `(a, b) -> (sigma_a(b), tau_b(a))`.
///
/// `sigma` is indexed by the left argument, `tau` by the right one, so
/// `sigma[a][b]` and `tau[b][a]` are the two output components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairMap {
    n: usize,
    sigma: Vec<usize>,
    tau: Vec<usize>,
}

impl PairMap {
    pub fn new(sigma: Vec<Vec<usize>>, tau: Vec<Vec<usize>>) -> Result<Self> {
        let n = sigma.len();
        if n == 0 || tau.len() != n {
            return Err(Error::input("sigma and tau must be non-empty n x n tables"));
        }
        let flat = |t: Vec<Vec<usize>>, name: &str| -> Result<Vec<usize>> {
            let mut out = Vec::with_capacity(n * n);
            for (i, row) in t.into_iter().enumerate() {
                if row.len() != n {
                    return Err(Error::input(format!("{name} row {i} has wrong length")));
                }
                for (j, x) in row.into_iter().enumerate() {
                    if x >= n {
                        return Err(Error::input(format!("{name}[{i}][{j}] = {x} out of range")));
                    }
                    out.push(x);
                }
            }
            Ok(out)
        };
        Ok(PairMap {
            n,
            sigma: flat(sigma, "sigma")?,
            tau: flat(tau, "tau")?,
        })
    }

    /// Build from the map itself; `f(a, b)` returns the image pair.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> (usize, usize)) -> Self {
        let mut sigma = vec![0; n * n];
        let mut tau = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let (x, y) = f(a, b);
                assert!(x < n && y < n, "image ({x}, {y}) out of range");
                sigma[a * n + b] = x;
                tau[b * n + a] = y;
            }
        }
        PairMap { n, sigma, tau }
    }

    pub fn identity(n: usize) -> Self {
        PairMap::from_fn(n, |a, b| (a, b))
    }

    pub fn twist(n: usize) -> Self {
        PairMap::from_fn(n, |a, b| (b, a))
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn sigma(&self, a: usize, b: usize) -> usize {
        self.sigma[a * self.n + b]
    }

    #[inline]
    pub fn tau(&self, b: usize, a: usize) -> usize {
        self.tau[b * self.n + a]
    }

    #[inline]
    pub fn apply(&self, a: usize, b: usize) -> (usize, usize) {
        (self.sigma(a, b), self.tau(b, a))
    }

    pub fn sigma_rows(&self) -> Vec<Vec<usize>> {
        self.sigma.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn tau_rows(&self) -> Vec<Vec<usize>> {
        self.tau.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    /// `self . other`: apply `other` first.
    pub fn compose(&self, other: &PairMap) -> PairMap {
        assert_eq!(self.n, other.n, "carrier mismatch");
        PairMap::from_fn(self.n, |a, b| {
            let (x, y) = other.apply(a, b);
            self.apply(x, y)
        })
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.apply(a, b) == (a, b)))
    }

    /// Functional inverse, if the map is bijective.
    pub fn inverse(&self) -> Option<PairMap> {
        let n = self.n;
        let mut pre = vec![None; n * n];
        for a in 0..n {
            for b in 0..n {
                let (x, y) = self.apply(a, b);
                if pre[x * n + y].replace((a, b)).is_some() {
                    return None;
                }
            }
        }
        Some(PairMap::from_fn(n, |x, y| pre[x * n + y].unwrap()))
    }

    /// Restriction to `subset x subset`, reindexed in the given order, if closed.
    pub fn restrict(&self, subset: &[usize]) -> Option<PairMap> {
        let pos = |x: usize| subset.iter().position(|&s| s == x);
        let k = subset.len();
        let mut sigma = vec![0; k * k];
        let mut tau = vec![0; k * k];
        for (i, &a) in subset.iter().enumerate() {
            for (j, &b) in subset.iter().enumerate() {
                let (x, y) = self.apply(a, b);
                sigma[i * k + j] = pos(x)?;
                tau[j * k + i] = pos(y)?;
            }
        }
        Some(PairMap { n: k, sigma, tau })
    }
}

/// Result of the braid check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BraidCheck {
    pub holds: bool,
    /// Lexicographically first failing triple.
    pub witness: Option<[usize; 3]>,
}

/// `(r x id)(id x r)(r x id) = (id x r)(r x id)(id x r)` on all triples.
pub fn check_braid(r: &PairMap) -> BraidCheck {
    let witness = first_failure3(r.size(), |a, b, c| {
        let (lhs, rhs) = braid_sides(r, a, b, c);
        lhs == rhs
    });
    BraidCheck {
        holds: witness.is_none(),
        witness,
    }
}

pub fn is_solution(r: &PairMap) -> bool {
    check_braid(r).holds
}

type Triple = (usize, usize, usize);

fn braid_sides(r: &PairMap, a: usize, b: usize, c: usize) -> (Triple, Triple) {
    let r12 = |(x, y, z): Triple| {
        let (p, q) = r.apply(x, y);
        (p, q, z)
    };
    let r23 = |(x, y, z): Triple| {
        let (p, q) = r.apply(y, z);
        (x, p, q)
    };
    let start = (a, b, c);
    (r12(r23(r12(start))), r23(r12(r23(start))))
}

/// The three component identities; their conjunction is the braid relation.
pub fn check_y1y2y3(r: &PairMap) -> [bool; 3] {
    let n = r.size();
    let s = |a, b| r.sigma(a, b);
    let t = |b, a| r.tau(b, a);
    let y1 = first_failure3(n, |a, b, c| s(a, s(b, c)) == s(s(a, b), s(t(b, a), c))).is_none();
    let y2 = first_failure3(n, |a, b, c| {
        s(t(s(b, c), a), t(c, b)) == t(s(t(b, a), c), s(a, b))
    })
    .is_none();
    let y3 = first_failure3(n, |a, b, c| t(c, t(b, a)) == t(t(c, b), t(s(b, c), a))).is_none();
    [y1, y2, y3]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Properties {
    pub bijective: bool,
    pub left_nondeg: bool,
    pub right_nondeg: bool,
    pub involutive: bool,
}

pub fn properties(r: &PairMap) -> Properties {
    let n = r.size();
    Properties {
        bijective: r.inverse().is_some(),
        left_nondeg: (0..n).all(|a| is_permutation(&r.sigma[a * n..(a + 1) * n])),
        right_nondeg: (0..n).all(|b| is_permutation(&r.tau[b * n..(b + 1) * n])),
        involutive: r.compose(r).is_identity(),
    }
}

/// `r(a, b) = (lambda_a(b), rho_b(a))`.
pub fn canonical_solution(w: &WeakBrace) -> PairMap {
    PairMap::from_fn(w.size(), |a, b| (w.lambda(a, b), w.rho(b, a)))
}

/// The canonical solution of the opposite weak brace `(S, +^op, o)`.
pub fn opposite_solution(w: &WeakBrace) -> PairMap {
    PairMap::from_fn(w.size(), |a, b| (w.lambda_op(a, b), w.rho_op(b, a)))
}

/// `r s r = r`, `s r s = s` and `r s = s r`.
pub fn completely_regular_pair(r: &PairMap, s: &PairMap) -> bool {
    if r.size() != s.size() {
        return false;
    }
    let rs = r.compose(s);
    let sr = s.compose(r);
    rs.compose(r) == *r && sr.compose(s) == *s && rs == sr
}

/// `(phi x phi) r = s (phi x phi)`.
pub fn intertwines(r: &PairMap, s: &PairMap, phi: &[usize]) -> bool {
    let n = r.size();
    s.size() == n
        && phi.len() == n
        && (0..n).all(|a| {
            (0..n).all(|b| {
                let (x, y) = r.apply(a, b);
                (phi[x], phi[y]) == s.apply(phi[a], phi[b])
            })
        })
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Lexicographically first bijection `phi` with `(phi x phi) r = s (phi x phi)`.
///
/// Refuses (rather than searching partially) when `n!` exceeds `budget`.
pub fn find_equivalence(r: &PairMap, s: &PairMap, budget: u128) -> Result<Option<Vec<usize>>> {
    if r.size() != s.size() {
        return Ok(None);
    }
    let n = r.size();
    let needed = factorial(n);
    if needed > budget {
        return Err(Error::Budget { needed, budget });
    }
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(r, s, 0, &mut phi, &mut used) {
        Ok(Some(phi))
    } else {
        Ok(None)
    }
}

fn extend(r: &PairMap, s: &PairMap, k: usize, phi: &mut [usize], used: &mut [bool]) -> bool {
    let n = r.size();
    if k == n {
        return true;
    }
    for x in 0..n {
        if used[x] {
            continue;
        }
        phi[k] = x;
        used[x] = true;
        if consistent(r, s, k, phi) && extend(r, s, k + 1, phi, used) {
            return true;
        }
        used[x] = false;
    }
    phi[k] = usize::MAX;
    false
}

/// Checks every pair involving the newly assigned `k` whose images are
/// already assigned.
fn consistent(r: &PairMap, s: &PairMap, k: usize, phi: &[usize]) -> bool {
    let known = |x: usize| x <= k;
    for a in 0..=k {
        for (p, q) in [(a, k), (k, a)] {
            let (x, y) = r.apply(p, q);
            let (u, v) = s.apply(phi[p], phi[q]);
            if known(x) && phi[x] != u {
                return false;
            }
            if known(y) && phi[y] != v {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::{build_brace, BraceKind};
    use crate::table::{build_group, GroupKind};

    /// Independent braid evaluation written directly from the composite maps.
    fn braid_oracle(r: &PairMap) -> Option<[usize; 3]> {
        let n = r.size();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    // left side: r12, then r23, then r12
                    let (x1, y1) = r.apply(a, b);
                    let (y2, z2) = r.apply(y1, c);
                    let (x3, y3) = r.apply(x1, y2);
                    let lhs = (x3, y3, z2);
                    // right side: r23, r12, r23
                    let (q1, w1) = r.apply(b, c);
                    let (p2, q2) = r.apply(a, q1);
                    let (q3, w3) = r.apply(q2, w1);
                    let rhs = (p2, q3, w3);
                    if lhs != rhs {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }

    #[test]
    fn twist_is_a_solution() {
        let t = PairMap::twist(4);
        assert!(check_braid(&t).holds);
        assert_eq!(check_y1y2y3(&t), [true, true, true]);
        assert!(completely_regular_pair(&t, &t));
    }

    #[test]
    fn constant_sigma_checked_against_oracle() {
        // sigma_a(b) = 0, tau_b(a) = a on Z/2Z: both sides send (a, b, c) to (0, 0, a)
        let r = PairMap::from_fn(2, |a, _| (0, a));
        assert_eq!(braid_oracle(&r), None);
        assert!(check_braid(&r).holds);

        // (a, b) -> (a + 1, b) shifts the first slot twice on one side only
        let r = PairMap::from_fn(2, |a, b| ((a + 1) % 2, b));
        let c = check_braid(&r);
        assert!(!c.holds);
        assert_eq!(c.witness, braid_oracle(&r));
        assert_eq!(c.witness, Some([0, 0, 0]));
    }

    #[test]
    fn map_failing_only_y2() {
        // searched oracle: constant sigma and constant tau with different values
        let mut found = None;
        'search: for s in 0..3 {
            for t in 0..3 {
                let r = PairMap::from_fn(3, |_, _| (s, t));
                if check_y1y2y3(&r) == [true, false, true] {
                    found = Some(r);
                    break 'search;
                }
            }
        }
        let r = found.expect("a Y2-only counterexample exists");
        assert_eq!(r.apply(0, 0), (0, 1));
        assert!(!check_braid(&r).holds);
    }

    #[test]
    fn canonical_solutions() {
        let b6 = build_brace(BraceKind::RumpMod(6)).unwrap();
        let r = canonical_solution(&b6);
        assert!(check_braid(&r).holds);
        assert_eq!(r.apply(1, 2), (4, 1));
        let p = properties(&r);
        assert!(p.bijective && p.left_nondeg && p.right_nondeg && p.involutive);

        let z2 = build_group(GroupKind::Cyclic(2)).unwrap();
        let t2 = build_brace(BraceKind::Trivial(z2)).unwrap();
        assert_eq!(canonical_solution(&t2), PairMap::twist(2));

        let s3 = build_group(GroupKind::Symmetric(3)).unwrap();
        let ts3 = build_brace(BraceKind::Trivial(s3)).unwrap();
        let r = canonical_solution(&ts3);
        assert_eq!(check_y1y2y3(&r), [true, true, true]);
        let p = properties(&r);
        assert!(p.bijective && p.left_nondeg && p.right_nondeg && !p.involutive);
        assert_eq!(r.inverse().unwrap(), opposite_solution(&ts3));
    }

    #[test]
    fn opposite_pairs_completely_regularly() {
        let w = build_brace(BraceKind::SandwichChain(3)).unwrap();
        let r = canonical_solution(&w);
        let op = opposite_solution(&w);
        assert!(check_braid(&op).holds);
        assert!(completely_regular_pair(&r, &op));
        assert_eq!(op, canonical_solution(&w.opposite()));
    }

    #[test]
    fn equivalence_search() {
        let z2 = build_group(GroupKind::Cyclic(2)).unwrap();
        let t2 = build_brace(BraceKind::Trivial(z2)).unwrap();
        let r = canonical_solution(&t2);
        assert_eq!(
            find_equivalence(&r, &r, DEFAULT_BUDGET).unwrap(),
            Some(vec![0, 1])
        );

        // relabel the B6 solution by a permutation and recover an equivalence
        let b6 = build_brace(BraceKind::RumpMod(6)).unwrap();
        let r = canonical_solution(&b6);
        let perm = [3, 0, 4, 1, 5, 2];
        let s = PairMap::from_fn(6, |a, b| {
            let inv = |x: usize| perm.iter().position(|&p| p == x).unwrap();
            let (x, y) = r.apply(inv(a), inv(b));
            (perm[x], perm[y])
        });
        let phi = find_equivalence(&r, &s, DEFAULT_BUDGET).unwrap().unwrap();
        assert!(intertwines(&r, &s, &phi));

        // symmetric: inverse bijection witnesses (s, r)
        let mut inv = vec![0; 6];
        for (a, &p) in phi.iter().enumerate() {
            inv[p] = a;
        }
        assert!(intertwines(&s, &r, &inv));

        assert!(matches!(
            find_equivalence(&PairMap::twist(9), &PairMap::twist(9), DEFAULT_BUDGET),
            Err(Error::Budget { .. })
        ));
        assert!(
            find_equivalence(&PairMap::twist(3), &PairMap::identity(3), DEFAULT_BUDGET)
                .unwrap()
                .is_none()
        );
    }

    #[test]
    fn equivalence_agrees_with_brute_force_on_small_maps() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let perms3: Vec<Vec<usize>> = vec![
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![2, 1, 0],
        ];
        for _ in 0..200 {
            let r = PairMap::from_fn(3, |_, _| (rng.gen_range(0..3), rng.gen_range(0..3)));
            // s = a relabelling of r half the time, random otherwise
            let s = if rng.gen_bool(0.5) {
                let p = &perms3[rng.gen_range(0..6)];
                let pinv: Vec<usize> = (0..3)
                    .map(|x| p.iter().position(|&y| y == x).unwrap())
                    .collect();
                PairMap::from_fn(3, |a, b| {
                    let (x, y) = r.apply(pinv[a], pinv[b]);
                    (p[x], p[y])
                })
            } else {
                PairMap::from_fn(3, |_, _| (rng.gen_range(0..3), rng.gen_range(0..3)))
            };
            let brute = perms3.iter().find(|p| intertwines(&r, &s, p)).cloned();
            assert_eq!(find_equivalence(&r, &s, DEFAULT_BUDGET).unwrap(), brute);
        }
    }

    #[test]
    fn restriction_and_inverse() {
        let t = PairMap::twist(4);
        assert_eq!(t.restrict(&[1, 3]).unwrap(), PairMap::twist(2));
        let c = PairMap::from_fn(3, |_, _| (0, 1));
        assert!(c.restrict(&[2]).is_none());
        assert!(c.inverse().is_none());
        assert!(t.inverse().unwrap() == t);
    }
}
