//! Deformed solutions of dual weak braces.
//!
//! For a dual weak brace `S` and a parameter `z`, the deformed map
//! `r_z(a, b) = (sigma^z_a(b), tau^z_b(a))` with
//! `sigma^z_a(b) = -a o z + a o b o z` and `tau^z_b(a) = sigma^z_a(b)^- o a o b`
//! is a solution exactly when `z` lies in the right distributor
//! `D_r(S) = { z : (a + b) o z = a o z - z + b o z for all a, b }`.

use crate::brace::{is_two_sided, Level, WeakBrace};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::scan::{first_failure1, first_failure2, first_failure3, is_permutation};
use crate::ybe::{check_braid, completely_regular_pair, intertwines, PairMap};

/// First pair `(a, b)` where `(a + b) o z = a o z - z + b o z` fails.
pub fn distributor_failure(w: &WeakBrace, z: usize) -> Option<[usize; 2]> {
    first_failure2(w.size(), |a, b| {
        w.mul(w.add(a, b), z) == w.add(w.sub(w.mul(a, z), z), w.mul(b, z))
    })
}

pub fn in_right_distributor(w: &WeakBrace, z: usize) -> bool {
    distributor_failure(w, z).is_none()
}

/// `D_r(S)` in increasing order.
pub fn right_distributor(w: &WeakBrace) -> Vec<usize> {
    (0..w.size())
        .filter(|&z| in_right_distributor(w, z))
        .collect()
}

/// Flags for the three equivalent forms of `z in D_r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DEquivalences {
    /// `(a - b + c) o z = a o z - b o z + c o z`.
    pub abcz: bool,
    /// `(a + b) o z = a o z - z + b o z`.
    pub d: bool,
    /// `(a + b) o z = a o z + (z^- + b) o z`.
    pub d_prime: bool,
}

impl DEquivalences {
    pub fn agree(&self) -> bool {
        self.abcz == self.d && self.d == self.d_prime
    }
}

pub fn check_d_equivalences(w: &WeakBrace, z: usize) -> DEquivalences {
    let n = w.size();
    let abcz = first_failure3(n, |a, b, c| {
        let lhs = w.mul(w.add(w.sub(a, b), c), z);
        let rhs = w.add(w.sub(w.mul(a, z), w.mul(b, z)), w.mul(c, z));
        lhs == rhs
    })
    .is_none();
    let d_prime = first_failure2(n, |a, b| {
        w.mul(w.add(a, b), z) == w.add(w.mul(a, z), w.mul(w.add(w.inv(z), b), z))
    })
    .is_none();
    DEquivalences {
        abcz,
        d: in_right_distributor(w, z),
        d_prime,
    }
}

/// `sigma^z_a(b) = -(a o z) + a o b o z`.
pub fn sigma_z(w: &WeakBrace, z: usize, a: usize, b: usize) -> usize {
    w.add(w.neg(w.mul(a, z)), w.mul3(a, b, z))
}

/// `tau^z_b(a) = sigma^z_a(b)^- o a o b`.
pub fn tau_z(w: &WeakBrace, z: usize, b: usize, a: usize) -> usize {
    w.mul3(w.inv(sigma_z(w, z, a, b)), a, b)
}

/// The deformed map `r_z`, built for every `z` whether or not it is a solution.
pub fn deformed_solution(w: &WeakBrace, z: usize) -> PairMap {
    PairMap::from_fn(w.size(), |a, b| (sigma_z(w, z, a, b), tau_z(w, z, b, a)))
}

/// `r_w^check(a, b) = (x, x^- o a o b)` with `x = a o b - a o w + w`.
pub fn check_map(w: &WeakBrace, v: usize) -> PairMap {
    PairMap::from_fn(w.size(), |a, b| {
        let ab = w.mul(a, b);
        let x = w.add(w.sub(ab, w.mul(a, v)), v);
        (x, w.mul(w.inv(x), ab))
    })
}

/// The partner `r^check_{z^-}` of `r_z`; requires `z in D_r`.
pub fn deformed_check_solution(w: &WeakBrace, z: usize) -> Result<PairMap> {
    if let Some(pair) = distributor_failure(w, z) {
        return Err(Error::Precondition {
            message: format!("parameter {} is not in the right distributor", w.label(z)),
            witness: pair.to_vec(),
        });
    }
    Ok(check_map(w, w.inv(z)))
}

/// Flags of the homomorphism criterion for `sigma^z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SigmaHom {
    /// `sigma^z_{a o b} = sigma^z_a sigma^z_b` for all `a, b`.
    pub is_hom: bool,
    /// `a o z = z + a` for all `a`.
    pub commutation: bool,
}

pub fn sigma_hom_criterion(w: &WeakBrace, z: usize) -> SigmaHom {
    let n = w.size();
    let is_hom = first_failure3(n, |a, b, c| {
        sigma_z(w, z, w.mul(a, b), c) == sigma_z(w, z, a, sigma_z(w, z, b, c))
    })
    .is_none();
    let commutation = first_failure1(n, |a| w.mul(a, z) == w.add(z, a)).is_none();
    SigmaHom {
        is_hom,
        commutation,
    }
}

fn require_skew(b: &WeakBrace, what: &str) -> Result<()> {
    if b.level() < Level::Skew {
        return Err(Error::Unsupported(format!(
            "{what} is defined for skew braces, got level {}",
            b.level().as_str()
        )));
    }
    Ok(())
}

/// `Fix(B) = { a : lambda_x(a) = a for all x }`.
pub fn fix_set(b: &WeakBrace) -> Result<Vec<usize>> {
    require_skew(b, "Fix")?;
    let n = b.size();
    Ok((0..n)
        .filter(|&a| (0..n).all(|x| b.lambda(x, a) == a))
        .collect())
}

/// `Soc(B) = { a : a + b = a o b and a + b = b + a for all b }`.
pub fn socle(b: &WeakBrace) -> Result<Vec<usize>> {
    require_skew(b, "Soc")?;
    let n = b.size();
    Ok((0..n)
        .filter(|&a| (0..n).all(|x| b.add(a, x) == b.mul(a, x) && b.add(a, x) == b.add(x, a)))
        .collect())
}

/// `Ann(B) = Soc(B) ∩ ζ(B, o)`.
pub fn annihilator(b: &WeakBrace) -> Result<Vec<usize>> {
    let center = center_circ(b);
    Ok(socle(b)?
        .into_iter()
        .filter(|a| center.contains(a))
        .collect())
}

/// Center of `(S, o)`. Defined for every weak brace.
pub fn center_circ(w: &WeakBrace) -> Vec<usize> {
    w.mul_table().center()
}

fn membership(n: usize, subset: &[usize]) -> Vec<bool> {
    let mut member = vec![false; n];
    for &i in subset {
        if i < n {
            member[i] = true;
        }
    }
    member
}

fn check_subset(n: usize, subset: &[usize]) -> Result<()> {
    match subset.iter().find(|&&i| i >= n) {
        Some(&i) => Err(Error::input(format!(
            "element {i} out of range for size {n}"
        ))),
        None => Ok(()),
    }
}

/// Subgroup test for a finite nonempty subset of a group: closed under the operation.
fn is_subgroup(n: usize, member: &[bool], op: impl Fn(usize, usize) -> usize) -> bool {
    member.iter().any(|&m| m)
        && (0..n).all(|x| !member[x] || (0..n).all(|y| !member[y] || member[op(x, y)]))
}

fn is_normal(
    n: usize,
    member: &[bool],
    op: impl Fn(usize, usize) -> usize,
    inv: impl Fn(usize) -> usize,
) -> bool {
    is_subgroup(n, member, &op)
        && (0..n).all(|g| (0..n).all(|i| !member[i] || member[op(op(g, i), inv(g))]))
}

/// Ideal in the classical sense: normal in `(B, +)` and `(B, o)`, and `lambda`-invariant.
pub fn is_ideal(b: &WeakBrace, subset: &[usize]) -> Result<bool> {
    require_skew(b, "ideal")?;
    let n = b.size();
    check_subset(n, subset)?;
    let m = membership(n, subset);
    Ok(is_normal(n, &m, |x, y| b.add(x, y), |x| b.neg(x))
        && is_normal(n, &m, |x, y| b.mul(x, y), |x| b.inv(x))
        && (0..n).all(|a| (0..n).all(|i| !m[i] || m[b.lambda(a, i)])))
}

/// Ideal via cosets: `(I, +)` normal and `a o I = a + I = I o a` for all `a`.
pub fn ideal_via_cosets(b: &WeakBrace, subset: &[usize]) -> Result<bool> {
    require_skew(b, "ideal")?;
    let n = b.size();
    check_subset(n, subset)?;
    let m = membership(n, subset);
    if !is_normal(n, &m, |x, y| b.add(x, y), |x| b.neg(x)) {
        return Ok(false);
    }
    let image = |f: &dyn Fn(usize) -> usize| {
        let mut v = vec![false; n];
        for i in (0..n).filter(|&i| m[i]) {
            v[f(i)] = true;
        }
        v
    };
    Ok((0..n).all(|a| {
        let plus = image(&|i| b.add(a, i));
        image(&|i| b.mul(a, i)) == plus && image(&|i| b.mul(i, a)) == plus
    }))
}

/// Closure report for `D_r(S)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributorStructure {
    pub distributor: Vec<usize>,
    /// Properties that hold on every dual weak brace, plus the additive
    /// closure and subbrace checks when `(S, +)` is commutative.
    pub checks: Report,
    pub additive_commutative: bool,
    /// Closure of `D_r` under `+` and `-`; informational when `+` is not commutative.
    pub additive_closed: bool,
}

pub fn distributor_structure(w: &WeakBrace) -> DistributorStructure {
    let n = w.size();
    let d = right_distributor(w);
    let m = membership(n, &d);
    let pair_in = |f: &dyn Fn(usize, usize) -> usize| {
        first_failure2(n, |x, y| !m[x] || !m[y] || m[f(x, y)]).map(|p| p.to_vec())
    };
    let single_in =
        |f: &dyn Fn(usize) -> usize| first_failure1(n, |x| !m[x] || m[f(x)]).map(|x| vec![x]);
    let mut checks = Report::default();
    checks.push("D_r closed under o", pair_in(&|x, y| w.mul(x, y)));
    checks.push("D_r closed under o-inverse", single_in(&|x| w.inv(x)));
    checks.push(
        "E(S) in D_r",
        w.idempotents().iter().find(|&&e| !m[e]).map(|&e| vec![e]),
    );
    checks.push(
        "center of (S,o) in D_r",
        center_circ(w).into_iter().find(|&c| !m[c]).map(|c| vec![c]),
    );

    let plus = pair_in(&|x, y| w.add(x, y));
    let minus = single_in(&|x| w.neg(x));
    let additive_closed = plus.is_none() && minus.is_none();
    let additive_commutative = w.add_table().commutativity_failure().is_none();
    if additive_commutative {
        checks.push("D_r closed under +", plus);
        checks.push("D_r closed under -", minus);
        let sub = w
            .restrict(&d)
            .ok()
            .filter(|s| s.level() >= Level::DualWeak && is_two_sided(s));
        checks.push(
            "D_r is a two-sided dual weak subbrace",
            if sub.is_some() { None } else { Some(d.clone()) },
        );
    }
    DistributorStructure {
        distributor: d,
        checks,
        additive_commutative,
        additive_closed,
    }
}

/// If `w = c^- o z o c` for some `c`, the first `phi_c(a) = c^- o a o c` that is
/// bijective and intertwines `r_z` with `r_w`.
///
/// Requires a two-sided dual weak brace; on skew braces `phi_c` is always an
/// automorphism of `(B, o)`, on dual weak braces bijectivity is tested first.
pub fn conjugacy_equivalence(b: &WeakBrace, z: usize, w: usize) -> Result<Option<Vec<usize>>> {
    if b.level() < Level::DualWeak {
        return Err(Error::Unsupported(
            "conjugacy needs a dual weak brace".into(),
        ));
    }
    if let Some(t) = crate::brace::two_sided_failure(b) {
        return Err(Error::Unsupported(format!(
            "conjugacy needs a two-sided structure; fails at {t:?}"
        )));
    }
    let n = b.size();
    if z >= n || w >= n {
        return Err(Error::input(format!("parameter out of range for size {n}")));
    }
    let rz = deformed_solution(b, z);
    let rw = deformed_solution(b, w);
    for c in 0..n {
        let ci = b.inv(c);
        if b.mul3(ci, z, c) != w {
            continue;
        }
        let phi: Vec<usize> = (0..n).map(|a| b.mul3(ci, a, c)).collect();
        if is_permutation(&phi) && intertwines(&rz, &rw, &phi) {
            return Ok(Some(phi));
        }
    }
    Ok(None)
}

/// The four identities for `sigma^z`, `tau^z` valid for `z in D_r`.
pub fn sigma_tau_identities(w: &WeakBrace, z: usize) -> Report {
    let n = w.size();
    let zi = w.inv(z);
    let s = |a, b| sigma_z(w, z, a, b);
    let t = |b, a| tau_z(w, z, b, a);
    let v = |x: Option<[usize; 2]>| x.map(|p| p.to_vec());
    let mut r = Report::default();
    r.push(
        "sigma_a(b) o tau_b(a) = a o b o z o z^-",
        v(first_failure2(n, |a, b| {
            w.mul(s(a, b), t(b, a)) == w.mul(w.mul3(a, b, z), zi)
        })),
    );
    r.push(
        "tau_{b o c} = tau_c tau_b",
        first_failure3(n, |a, b, c| t(w.mul(b, c), a) == t(c, t(b, a))).map(|p| p.to_vec()),
    );
    r.push(
        "sigma_a(b) = a o b o b^- o (a^- o z^- + b) o z",
        v(first_failure2(n, |a, b| {
            let inner = w.add(w.mul(w.inv(a), zi), b);
            s(a, b) == w.mul(w.mul3(a, b, w.inv(b)), w.mul(inner, z))
        })),
    );
    r.push(
        "sigma_a(b) o sigma_a(b)^- = a o a^- + b o b^- + z o z^-",
        v(first_failure2(n, |a, b| {
            let x = s(a, b);
            let e = |y: usize| w.mul(y, w.inv(y));
            e(x) == w.add(w.add(e(a), e(b)), e(z))
        })),
    );
    r
}

/// First pair where `r_z(a, b)` differs from
/// `(z^- o lambda_{z o a}(b) o z, z^- o rho_b(z o a))`.
pub fn star_rewriting_failure(w: &WeakBrace, z: usize) -> Option<[usize; 2]> {
    let zi = w.inv(z);
    let r = deformed_solution(w, z);
    first_failure2(w.size(), |a, b| {
        let za = w.mul(z, a);
        let expected = (w.mul3(zi, w.lambda(za, b), z), w.mul(zi, w.rho(b, za)));
        r.apply(a, b) == expected
    })
}

/// Complete regularity of `r_z` against `r^check_{z^-}`, and of the
/// component maps `sigma^z_a` (partner `sigma^{z^-}_{a^-}`) and `tau^z_a`
/// (partner `tau^z_{a^-}`).
pub fn regularity_identities(w: &WeakBrace, z: usize) -> Report {
    let n = w.size();
    let zi = w.inv(z);
    let mut r = Report::default();
    let rz = deformed_solution(w, z);
    let check = check_map(w, zi);
    let rs = rz.compose(&check);
    let sr = check.compose(&rz);
    let map_diff = |x: &PairMap, y: &PairMap| {
        first_failure2(n, |a, b| x.apply(a, b) == y.apply(a, b)).map(|p| p.to_vec())
    };
    r.push("r_z r^check r_z = r_z", map_diff(&rs.compose(&rz), &rz));
    r.push(
        "r^check r_z r^check = r^check",
        map_diff(&sr.compose(&check), &check),
    );
    r.push("r_z r^check = r^check r_z", map_diff(&rs, &sr));

    let s = |a, b| sigma_z(w, z, a, b);
    let sp = |a, b| sigma_z(w, zi, a, b);
    let t = |a, b| tau_z(w, z, a, b);
    let row = |f: &dyn Fn(usize, usize) -> bool| first_failure2(n, f).map(|p| p.to_vec());
    r.push(
        "sigma_a sigma'_{a^-} sigma_a = sigma_a",
        row(&|a, b| {
            let ai = w.inv(a);
            s(a, sp(ai, s(a, b))) == s(a, b)
        }),
    );
    r.push(
        "sigma'_{a^-} sigma_a sigma'_{a^-} = sigma'_{a^-}",
        row(&|a, b| {
            let ai = w.inv(a);
            sp(ai, s(a, sp(ai, b))) == sp(ai, b)
        }),
    );
    r.push(
        "sigma_a sigma'_{a^-} = sigma'_{a^-} sigma_a",
        row(&|a, b| {
            let ai = w.inv(a);
            s(a, sp(ai, b)) == sp(ai, s(a, b))
        }),
    );
    r.push(
        "tau_a tau_{a^-} tau_a = tau_a",
        row(&|a, b| {
            let ai = w.inv(a);
            t(a, t(ai, t(a, b))) == t(a, b)
        }),
    );
    r.push(
        "tau_{a^-} tau_a tau_{a^-} = tau_{a^-}",
        row(&|a, b| {
            let ai = w.inv(a);
            t(ai, t(a, t(ai, b))) == t(ai, b)
        }),
    );
    r.push(
        "tau_a tau_{a^-} = tau_{a^-} tau_a",
        row(&|a, b| {
            let ai = w.inv(a);
            t(a, t(ai, b)) == t(ai, t(a, b))
        }),
    );
    r
}

/// Per-parameter data of a [`DeformationReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZEntry {
    pub z: usize,
    pub in_distributor: bool,
    pub is_solution: bool,
    pub r_z: PairMap,
    pub check_partner: PairMap,
    pub completely_regular: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationReport {
    pub distributor: Vec<usize>,
    pub per_z: Vec<ZEntry>,
    /// `r_z` is a solution exactly for `z in D_r`.
    pub theorem_holds: bool,
}

pub fn deformation_report(w: &WeakBrace) -> DeformationReport {
    let distributor = right_distributor(w);
    let per_z: Vec<ZEntry> = (0..w.size())
        .map(|z| {
            let r_z = deformed_solution(w, z);
            let check_partner = check_map(w, w.inv(z));
            ZEntry {
                z,
                in_distributor: distributor.contains(&z),
                is_solution: check_braid(&r_z).holds,
                completely_regular: completely_regular_pair(&r_z, &check_partner),
                r_z,
                check_partner,
            }
        })
        .collect();
    let theorem_holds = per_z.iter().all(|e| e.is_solution == e.in_distributor);
    DeformationReport {
        distributor,
        per_z,
        theorem_holds,
    }
}
