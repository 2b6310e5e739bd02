//! Heaps, unital near-trusses, retractions onto skew braces and the
//! solutions they carry.

use crate::brace::{build_brace, BraceKind, WeakBrace};
use crate::deform::{check_map, distributor_failure};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::scan::{first_failure1, first_failure2, first_failure3, first_failure4, first_failure5};
use crate::table::{build_group, pair_labels, CayleyTable, GroupKind};
use crate::ybe::{find_equivalence, intertwines, PairMap, DEFAULT_BUDGET};

/// Largest carrier accepted for a ternary table.
pub const MAX_HEAP: usize = 32;

/// A verified heap `[a, b, c]`, stored densely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Heap {
    n: usize,
    tern: Vec<usize>,
}

impl Heap {
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn t(&self, a: usize, b: usize, c: usize) -> usize {
        self.tern[(a * self.n + b) * self.n + c]
    }

    /// `n` arrays of `n x n`.
    pub fn rows(&self) -> Vec<Vec<Vec<usize>>> {
        let n = self.n;
        (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| (0..n).map(|c| self.t(a, b, c)).collect())
                    .collect()
            })
            .collect()
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize, usize) -> usize) -> Result<Heap> {
        let mut tern = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    tern.push(f(a, b, c));
                }
            }
        }
        Heap::checked(n, tern)
    }

    fn checked(n: usize, tern: Vec<usize>) -> Result<Heap> {
        if n == 0 || n > MAX_HEAP {
            return Err(Error::input(format!(
                "heap size must be in 1..={MAX_HEAP}, got {n}"
            )));
        }
        if let Some(i) = tern.iter().position(|&x| x >= n) {
            let (a, b, c) = (i / (n * n), i / n % n, i % n);
            return Err(Error::input(format!(
                "entry [{a}][{b}][{c}] = {} out of range for size {n}",
                tern[i]
            )));
        }
        let h = Heap { n, tern };
        if let Some(w) = first_failure5(n, |a, b, c, d, e| {
            h.t(a, b, h.t(c, d, e)) == h.t(h.t(a, b, c), d, e)
        }) {
            return Err(Error::axiom("[a,b,[c,d,e]] = [[a,b,c],d,e]", w));
        }
        if let Some(w) = first_failure2(n, |a, b| h.t(a, a, b) == b && h.t(b, a, a) == b) {
            return Err(Error::axiom("[a,a,b] = b = [b,a,a]", w));
        }
        Ok(h)
    }

    fn restrict(&self, subset: &[usize]) -> Option<Heap> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &s) in subset.iter().enumerate() {
            pos[s] = i;
        }
        let k = subset.len();
        let mut tern = Vec::with_capacity(k * k * k);
        for &a in subset {
            for &b in subset {
                for &c in subset {
                    let x = pos[self.t(a, b, c)];
                    if x == usize::MAX {
                        return None;
                    }
                    tern.push(x);
                }
            }
        }
        Some(Heap { n: k, tern })
    }

    fn product(&self, other: &Heap) -> Heap {
        let m = other.n;
        let n = self.n * m;
        let mut tern = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    tern.push(self.t(a / m, b / m, c / m) * m + other.t(a % m, b % m, c % m));
                }
            }
        }
        Heap { n, tern }
    }
}

pub fn verify_heap(tern: Vec<Vec<Vec<usize>>>) -> Result<Heap> {
    let n = tern.len();
    for (a, plane) in tern.iter().enumerate() {
        if plane.len() != n {
            return Err(Error::input(format!(
                "plane {a} has {} rows, expected {n}",
                plane.len()
            )));
        }
        for (b, row) in plane.iter().enumerate() {
            if row.len() != n {
                return Err(Error::input(format!(
                    "row [{a}][{b}] has {} entries, expected {n}",
                    row.len()
                )));
            }
        }
    }
    Heap::checked(n, tern.into_iter().flatten().flatten().collect())
}

/// First `(a, b, c, d, e)` where `[a,b,[c,d,e]] = [a,[d,c,b],e]` fails.
pub fn middle_swap_failure(h: &Heap) -> Option<[usize; 5]> {
    first_failure5(h.size(), |a, b, c, d, e| {
        h.t(a, b, h.t(c, d, e)) == h.t(a, h.t(d, c, b), e)
    })
}

/// The group `a +_e b = [a, e, b]` with identity `e`.
pub fn retract(h: &Heap, e: usize) -> Result<CayleyTable> {
    if e >= h.size() {
        return Err(Error::input(format!(
            "{e} out of range for size {}",
            h.size()
        )));
    }
    CayleyTable::from_fn(h.size(), |a, b| h.t(a, e, b))
}

/// `[a, b, c] = a b^-1 c`.
pub fn heap_of_group(g: &CayleyTable) -> Result<Heap> {
    let inv = g
        .inverse_map()
        .map_err(|a| Error::axiom("group inverse", vec![a]))?;
    if g.identity().is_none() {
        return Err(Error::axiom("group identity", Vec::<usize>::new()));
    }
    Heap::from_fn(g.size(), |a, b, c| g.op(g.op(a, inv[b]), c))
}

/// A verified near-truss: heap, associative multiplication distributing
/// over the heap from the left, optional unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NearTruss {
    heap: Heap,
    mul: CayleyTable,
    unit: Option<usize>,
}

impl NearTruss {
    pub fn size(&self) -> usize {
        self.heap.n
    }

    #[inline]
    pub fn t(&self, a: usize, b: usize, c: usize) -> usize {
        self.heap.t(a, b, c)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul.op(a, b)
    }

    pub fn heap(&self) -> &Heap {
        &self.heap
    }

    pub fn mul_table(&self) -> &CayleyTable {
        &self.mul
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    pub fn label(&self, a: usize) -> String {
        self.mul.label(a)
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.size()).map(|a| self.label(a)).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.mul.index_of(label)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.mul = self.mul.with_labels(labels);
        self
    }

    fn require_unit(&self) -> Result<usize> {
        self.unit
            .ok_or_else(|| Error::Unsupported("near-truss has no unit".into()))
    }

    /// Componentwise product, row-major pairs.
    pub fn product(&self, other: &NearTruss) -> NearTruss {
        let unit = match (self.unit, other.unit) {
            (Some(u), Some(v)) => Some(u * other.size() + v),
            _ => None,
        };
        let labels = pair_labels(&self.labels(), &other.labels());
        NearTruss {
            heap: self.heap.product(&other.heap),
            mul: self.mul.direct_product(&other.mul).with_labels(labels),
            unit,
        }
    }

    /// Sub-near-truss on `subset`, reindexed in the given order.
    pub fn restrict(&self, subset: &[usize]) -> Option<NearTruss> {
        let heap = self.heap.restrict(subset)?;
        let mul = self.mul.restrict(subset)?;
        let unit = self.unit.and_then(|u| subset.iter().position(|&s| s == u));
        Some(NearTruss { heap, mul, unit })
    }
}

pub fn verify_near_truss(heap: Heap, mul: CayleyTable, unit: Option<usize>) -> Result<NearTruss> {
    let n = heap.size();
    if mul.size() != n {
        return Err(Error::input(format!(
            "heap has {n} elements but the multiplication table has {}",
            mul.size()
        )));
    }
    if let Some(w) = mul.associativity_failure() {
        return Err(Error::axiom("multiplication associative", w));
    }
    if let Some(w) = first_failure4(n, |a, b, c, d| {
        mul.op(a, heap.t(b, c, d)) == heap.t(mul.op(a, b), mul.op(a, c), mul.op(a, d))
    }) {
        return Err(Error::axiom("a[b,c,d] = [ab,ac,ad]", w));
    }
    if let Some(u) = unit {
        if u >= n {
            return Err(Error::input(format!("unit {u} out of range for size {n}")));
        }
        if let Some(a) = first_failure1(n, |a| mul.op(u, a) == a && mul.op(a, u) == a) {
            return Err(Error::axiom("unit", vec![u, a]));
        }
    }
    Ok(NearTruss { heap, mul, unit })
}

/// `T(B)`: heap `a - b + c`, multiplication `o`, unit the identity.
pub fn truss_of_brace(b: &WeakBrace) -> Result<NearTruss> {
    let e = b.identity().ok_or_else(|| {
        Error::Unsupported(format!(
            "T(B) needs a skew brace, got level {}",
            b.level().as_str()
        ))
    })?;
    let heap = Heap::from_fn(b.size(), |x, y, z| b.add(b.sub(x, y), z))?;
    let t = verify_near_truss(heap, b.mul_table().clone(), Some(e))?;
    Ok(t.with_labels(b.labels()))
}

/// `Z/mZ` with heap `a - b + c` and ring multiplication, unit 1.
pub fn truss_of_ring_mod(m: usize) -> Result<NearTruss> {
    if !(2..=MAX_HEAP).contains(&m) {
        return Err(Error::input(format!(
            "truss_of_ring_mod needs m in 2..={MAX_HEAP}, got {m}"
        )));
    }
    let heap = Heap::from_fn(m, |a, b, c| (a + m - b + c) % m)?;
    let mul = CayleyTable::from_fn(m, |a, b| a * b % m)?;
    verify_near_truss(heap, mul, Some(1))
}

/// `sigma^z_a(b) = [ab, az, z]`.
pub fn sigma_check(t: &NearTruss, z: usize, a: usize, b: usize) -> usize {
    t.t(t.mul(a, b), t.mul(a, z), z)
}

/// First violated homomorphism condition for `f: src -> dst`, with witness.
pub fn hom_failure(src: &NearTruss, dst: &NearTruss, f: &[usize]) -> Option<(String, Vec<usize>)> {
    let n = src.size();
    if f.len() != n {
        return Some(("map length".into(), vec![f.len()]));
    }
    if let Some(a) = f.iter().position(|&x| x >= dst.size()) {
        return Some(("map in range".into(), vec![a]));
    }
    if let Some(w) = first_failure3(n, |a, b, c| f[src.t(a, b, c)] == dst.t(f[a], f[b], f[c])) {
        return Some(("preserves [-,-,-]".into(), w.to_vec()));
    }
    if let Some(w) = first_failure2(n, |a, b| f[src.mul(a, b)] == dst.mul(f[a], f[b])) {
        return Some(("preserves multiplication".into(), w.to_vec()));
    }
    if let (Some(u), Some(v)) = (src.unit, dst.unit) {
        if f[u] != v {
            return Some(("preserves unit".into(), vec![u]));
        }
    }
    None
}

/// `pi: T -> T(B)` and `gamma: T(B) -> T`, unital near-truss homomorphisms
/// with `pi gamma = id`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Retraction {
    t: NearTruss,
    b: WeakBrace,
    tb: NearTruss,
    pi: Vec<usize>,
    gamma: Vec<usize>,
    kernel: Vec<usize>,
}

pub fn build_retraction(
    t: NearTruss,
    b: WeakBrace,
    pi: Vec<usize>,
    gamma: Vec<usize>,
) -> Result<Retraction> {
    let unit = t.require_unit()?;
    let tb = truss_of_brace(&b)?;
    let one = b.identity().expect("skew level checked by truss_of_brace");
    if pi.len() != t.size() || gamma.len() != b.size() {
        return Err(Error::input(format!(
            "pi needs {} entries and gamma {}, got {} and {}",
            t.size(),
            b.size(),
            pi.len(),
            gamma.len()
        )));
    }
    if let Some((what, w)) = hom_failure(&t, &tb, &pi) {
        return Err(Error::axiom(format!("pi {what}"), w));
    }
    if let Some((what, w)) = hom_failure(&tb, &t, &gamma) {
        return Err(Error::axiom(format!("gamma {what}"), w));
    }
    if let Some(x) = first_failure1(b.size(), |x| pi[gamma[x]] == x) {
        return Err(Error::axiom("pi gamma = id", vec![x]));
    }
    let kernel: Vec<usize> = (0..t.size()).filter(|&x| pi[x] == one).collect();
    if t.restrict(&kernel).is_none() {
        return Err(Error::axiom("kernel is a sub-near-truss", kernel));
    }
    debug_assert!(kernel.contains(&unit));
    Ok(Retraction {
        t,
        b,
        tb,
        pi,
        gamma,
        kernel,
    })
}

impl Retraction {
    pub fn truss(&self) -> &NearTruss {
        &self.t
    }

    pub fn brace(&self) -> &WeakBrace {
        &self.b
    }

    pub fn brace_truss(&self) -> &NearTruss {
        &self.tb
    }

    pub fn pi(&self) -> &[usize] {
        &self.pi
    }

    pub fn gamma(&self) -> &[usize] {
        &self.gamma
    }

    pub fn kernel(&self) -> &[usize] {
        &self.kernel
    }

    fn unit(&self) -> usize {
        self.t.unit.expect("retractions are unital")
    }

    #[inline]
    fn bar(&self, x: usize) -> usize {
        self.gamma[self.pi[x]]
    }

    /// `eta^z_a(b) = [g(a) g(b), g(a) g(z), g(z)]` with `g = gamma pi`.
    pub fn eta(&self, z: usize, a: usize, b: usize) -> usize {
        let (ga, gz) = (self.bar(a), self.bar(z));
        self.t
            .t(self.t.mul(ga, self.bar(b)), self.t.mul(ga, gz), gz)
    }

    /// `x^-1 = gamma(pi(x)^-)`, the inverse used for values of `eta`.
    pub fn eta_inverse(&self, x: usize) -> usize {
        self.gamma[self.b.inv(self.pi[x])]
    }
}

/// `gamma = pi = id` on `T(B)`.
pub fn identity_retraction(b: &WeakBrace) -> Result<Retraction> {
    let id: Vec<usize> = (0..b.size()).collect();
    build_retraction(truss_of_brace(b)?, b.clone(), id.clone(), id)
}

/// Retraction of a unital near-truss onto the one-element brace.
pub fn trivial_retraction(t: &NearTruss) -> Result<Retraction> {
    let unit = t.require_unit()?;
    let one = build_brace(BraceKind::Trivial(build_group(GroupKind::Cyclic(1))?))?;
    build_retraction(t.clone(), one, vec![0; t.size()], vec![unit])
}

/// `T(B) x T` with `pi` the first projection and `gamma(b) = (b, 1)`.
pub fn product_near_truss(b: &WeakBrace, t: &NearTruss) -> Result<(NearTruss, Retraction)> {
    let unit = t.require_unit()?;
    let tb = truss_of_brace(b)?;
    let prod = tb.product(t);
    let m = t.size();
    let pi = (0..prod.size()).map(|x| x / m).collect();
    let gamma = (0..b.size()).map(|x| x * m + unit).collect();
    let r = build_retraction(prod.clone(), b.clone(), pi, gamma)?;
    Ok((prod, r))
}

/// `U(Z/p) x Z/p` with heap from the group
/// `(q, r) + (q', r') = (qq', r + q r' - q)` (the sandwich sum `+_1` twisted by
/// `sigma^1_q(r) = qr - q + 1`) and componentwise multiplication, retracted
/// onto the trivial brace on `U(Z/p)`.
///
/// Its kernel and image commute multiplicatively, but `[s,1,g(b)]` and
/// `[g(b),1,s]` differ, so it does not split as a product.
pub fn semidirect_retraction(p: usize) -> Result<Retraction> {
    if !(3..=5).contains(&p) || (2..p).any(|d| p.is_multiple_of(d)) {
        return Err(Error::input(format!(
            "semidirect_retraction needs p in {{3, 5}}, got {p}"
        )));
    }
    let u: Vec<usize> = (1..p).collect();
    let k = u.len();
    let n = k * p;
    let el = |x: usize| (u[x / p], x % p);
    let idx = |q: usize, r: usize| (q - 1) * p + r;
    let add = |x: usize, y: usize| {
        let ((q, r), (q2, r2)) = (el(x), el(y));
        idx(q * q2 % p, (r + q * r2 + p - q) % p)
    };
    let neg: Vec<usize> = (0..n)
        .map(|x| (0..n).find(|&y| add(x, y) == idx(1, 1)).expect("group"))
        .collect();
    let heap = Heap::from_fn(n, |a, b, c| add(add(a, neg[b]), c))?;
    let mul = CayleyTable::from_fn(n, |x, y| {
        let ((q, r), (q2, r2)) = (el(x), el(y));
        idx(q * q2 % p, r * r2 % p)
    })?
    .with_labels(
        (0..n)
            .map(|x| format!("({},{})", el(x).0, el(x).1))
            .collect(),
    );
    let t = verify_near_truss(heap, mul, Some(idx(1, 1)))?;
    let ut = CayleyTable::from_fn(k, |a, b| (u[a] * u[b] % p) - 1)?
        .with_labels(u.iter().map(|q| q.to_string()).collect());
    let b = build_brace(BraceKind::Trivial(ut))?;
    let pi = (0..n).map(|x| x / p).collect();
    let gamma = (0..k).map(|q| idx(u[q], 1)).collect();
    build_retraction(t, b, pi, gamma)
}

fn require_admissible(r: &Retraction, z: usize) -> Result<()> {
    if z >= r.t.size() {
        return Err(Error::input(format!(
            "z = {z} out of range for size {}",
            r.t.size()
        )));
    }
    if let Some(pair) = distributor_failure(&r.b, r.pi[z]) {
        return Err(Error::Precondition {
            message: format!(
                "pi(z) = {} is not in the right distributor",
                r.b.label(r.pi[z])
            ),
            witness: pair.to_vec(),
        });
    }
    Ok(())
}

/// `r^z(a, b) = (eta^z_a(b), eta^z_a(b)^-1 a b)`; requires `pi(z) in D_r(B)`.
pub fn near_truss_solution(r: &Retraction, z: usize) -> Result<PairMap> {
    require_admissible(r, z)?;
    Ok(PairMap::from_fn(r.t.size(), |a, b| {
        let x = r.eta(z, a, b);
        (x, r.t.mul(r.eta_inverse(x), r.t.mul(a, b)))
    }))
}

/// Restriction of `r^z` to `gamma(B)` compared with `r^check_{pi(z)}` on `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionCheck {
    /// `r^z` on `gamma(B)`, indexed by `b` through `gamma`.
    pub restricted: PairMap,
    pub on_brace: PairMap,
    /// `pi` restricted to `gamma(B)` intertwines the two maps.
    pub pi_intertwines: bool,
    /// Lexicographically first equivalence found by exhaustive search.
    pub search: Option<Vec<usize>>,
}

pub fn restriction_check(r: &Retraction, z: usize) -> Result<RestrictionCheck> {
    let full = near_truss_solution(r, z)?;
    let restricted = full
        .restrict(&r.gamma)
        .ok_or_else(|| Error::axiom("gamma(B) closed under r^z", r.gamma.clone()))?;
    let on_brace = check_map(&r.b, r.pi[z]);
    // with the gamma ordering, pi|gamma(B) is the identity on indices
    let id: Vec<usize> = (0..r.b.size()).collect();
    let pi_intertwines = intertwines(&restricted, &on_brace, &id);
    let search = find_equivalence(&restricted, &on_brace, DEFAULT_BUDGET)?;
    Ok(RestrictionCheck {
        restricted,
        on_brace,
        pi_intertwines,
        search,
    })
}

/// `(eta^z_a injective for every a, pi bijective)`.
pub fn left_nondegeneracy_criterion(r: &Retraction, z: usize) -> Result<(bool, bool)> {
    require_admissible(r, z)?;
    let n = r.t.size();
    let injective = (0..n).all(|a| {
        let mut seen = vec![false; n];
        (0..n).all(|b| !std::mem::replace(&mut seen[r.eta(z, a, b)], true))
    });
    let bijective = n == r.b.size();
    Ok((injective, bijective))
}

/// `Fix_T(S) = { t : [1, s, st] = t for all s in S }`.
pub fn fix_t(t: &NearTruss, s: &[usize]) -> Result<Vec<usize>> {
    let one = t.require_unit()?;
    Ok((0..t.size())
        .filter(|&x| s.iter().all(|&y| t.t(one, y, t.mul(y, x)) == x))
        .collect())
}

/// Outcome of the product decomposition test for a retraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// `phi(s, b) = [s, 1, gamma(b)]`, indexed `i * |B| + b` for `s = kernel[i]`.
    pub phi: Vec<usize>,
    pub bijective: bool,
    /// `gamma(B) ⊆ Fix_T(ker)`.
    pub fix_condition: bool,
    /// `s gamma(b) = gamma(b) s`.
    pub commutation: bool,
    /// `[s, 1, gamma(b)] = [gamma(b), 1, s]`.
    pub heap_swap: bool,
    /// `phi` is a near-truss isomorphism `ker x T(B) -> T`.
    pub isomorphism: bool,
    /// First failed homomorphism condition for `phi`, if any.
    pub hom_failure: Option<(String, Vec<usize>)>,
}

impl Decomposition {
    pub fn conditions_hold(&self) -> bool {
        self.fix_condition && self.commutation && self.heap_swap
    }

    /// The three conditions hold exactly when `phi` is an isomorphism.
    pub fn biconditional_holds(&self) -> bool {
        self.conditions_hold() == self.isomorphism
    }
}

pub fn decomposition_check(r: &Retraction) -> Decomposition {
    let t = &r.t;
    let one = r.unit();
    let nb = r.b.size();
    let kernel = &r.kernel;
    let phi: Vec<usize> = kernel
        .iter()
        .flat_map(|&s| r.gamma.iter().map(move |&g| t.t(s, one, g)))
        .collect();
    let mut seen = vec![false; t.size()];
    let bijective =
        phi.len() == t.size() && phi.iter().all(|&x| !std::mem::replace(&mut seen[x], true));

    let fix = fix_t(t, kernel).expect("retractions are unital");
    let fix_condition = r.gamma.iter().all(|g| fix.contains(g));
    let commutation = kernel
        .iter()
        .all(|&s| r.gamma.iter().all(|&g| t.mul(s, g) == t.mul(g, s)));
    let heap_swap = kernel
        .iter()
        .all(|&s| r.gamma.iter().all(|&g| t.t(s, one, g) == t.t(g, one, s)));

    let ker = t.restrict(kernel).expect("kernel closed");
    let domain = ker.product(&r.tb);
    debug_assert_eq!(domain.size(), kernel.len() * nb);
    let hom = hom_failure(&domain, t, &phi);
    Decomposition {
        isomorphism: bijective && hom.is_none(),
        phi,
        bijective,
        fix_condition,
        commutation,
        heap_swap,
        hom_failure: hom,
    }
}

fn v2(x: Option<[usize; 2]>) -> Option<Vec<usize>> {
    x.map(|p| p.to_vec())
}

fn v3(x: Option<[usize; 3]>) -> Option<Vec<usize>> {
    x.map(|p| p.to_vec())
}

/// Identities of `sigma^z` on a near-truss, and the cancellativity criterion.
pub fn sigma_check_identities(t: &NearTruss, z: usize) -> Report {
    let n = t.size();
    let s = |a, b| sigma_check(t, z, a, b);
    let mut r = Report::default();
    r.push(
        "ab = [sigma_a(b), z, az]",
        v2(first_failure2(n, |a, b| {
            t.mul(a, b) == t.t(s(a, b), z, t.mul(a, z))
        })),
    );
    r.push(
        "sigma_a(z) = z",
        first_failure1(n, |a| s(a, z) == z).map(|a| vec![a]),
    );
    if let Some(one) = t.unit {
        r.push(
            "sigma_1(a) = a",
            first_failure1(n, |a| s(one, a) == a).map(|a| vec![a]),
        );
    }
    r.push(
        "sigma_a([b,c,d]) = [sigma_a(b), sigma_a(c), sigma_a(d)]",
        first_failure4(n, |a, b, c, d| {
            s(a, t.t(b, c, d)) == t.t(s(a, b), s(a, c), s(a, d))
        })
        .map(|p| p.to_vec()),
    );
    r.push(
        "sigma_a sigma_b = sigma_{ab}",
        v3(first_failure3(n, |a, b, c| {
            s(a, s(b, c)) == s(t.mul(a, b), c)
        })),
    );
    r.push(
        "a left cancellative iff sigma_a injective",
        first_failure1(n, |a| {
            let cancellative = (0..n).all(|b| (0..n).all(|c| t.mul(a, b) != t.mul(a, c) || b == c));
            let injective = (0..n).all(|b| (0..n).all(|c| s(a, b) != s(a, c) || b == c));
            cancellative == injective
        })
        .map(|a| vec![a]),
    );
    if let Some(one) = t.unit {
        r.push(
            "invertible a gives bijective sigma_a",
            first_failure1(n, |a| {
                let invertible = (0..n).any(|x| t.mul(a, x) == one && t.mul(x, a) == one);
                !invertible
                    || crate::scan::is_permutation(&(0..n).map(|b| s(a, b)).collect::<Vec<_>>())
            })
            .map(|a| vec![a]),
        );
    }
    r
}

/// `f sigma^z_a(b) = sigma^{f(z)}_{f(a)} f(b)` for a homomorphism `f`.
pub fn sigma_naturality_failure(
    src: &NearTruss,
    dst: &NearTruss,
    f: &[usize],
    z: usize,
) -> Option<[usize; 2]> {
    first_failure2(src.size(), |a, b| {
        f[sigma_check(src, z, a, b)] == sigma_check(dst, f[z], f[a], f[b])
    })
}

/// Identities of `eta^z` on a retraction, the exchange identity
/// `T_1 = T_2`, and naturality of `sigma` along `pi` and `gamma`.
pub fn eta_identities(r: &Retraction, z: usize) -> Report {
    let t = &r.t;
    let n = t.size();
    let one = r.unit();
    let e = |a, b| r.eta(z, a, b);
    let inv = |x| r.eta_inverse(x);
    let m = |a, b| t.mul(a, b);
    let mut rep = Report::default();
    if r.bar(z) == z {
        rep.push(
            "eta_a(z) = z",
            first_failure1(n, |a| e(a, z) == z).map(|a| vec![a]),
        );
    }
    rep.push(
        "eta_1(a) = gamma pi(a)",
        first_failure1(n, |a| e(one, a) == r.bar(a)).map(|a| vec![a]),
    );
    rep.push(
        "eta_a([b,c,d]) = [eta_a(b), eta_a(c), eta_a(d)]",
        first_failure4(n, |a, b, c, d| {
            e(a, t.t(b, c, d)) == t.t(e(a, b), e(a, c), e(a, d))
        })
        .map(|p| p.to_vec()),
    );
    rep.push(
        "eta_a eta_b = eta_{ab}",
        v3(first_failure3(n, |a, b, c| e(a, e(b, c)) == e(m(a, b), c))),
    );
    rep.push(
        "eta_a(b) eta_a(b)^-1 = 1",
        v2(first_failure2(n, |a, b| m(e(a, b), inv(e(a, b))) == one)),
    );
    rep.push(
        "T_1 = T_2",
        v3(first_failure3(n, |a, b, c| {
            let x = e(m(a, b), c);
            let y = e(b, c);
            let t1 = m(x, e(m(m(inv(x), a), y), m(inv(y), m(b, c))));
            let w = e(a, b);
            let t2 = m(w, e(m(inv(w), m(a, b)), c));
            t1 == t2
        })),
    );
    rep.push(
        "pi sigma^z_a(b) = sigma^{pi z}_{pi a}(pi b)",
        v2(sigma_naturality_failure(t, &r.tb, &r.pi, z)),
    );
    let bz = r.pi[z];
    rep.push(
        "gamma sigma^w_a(b) = sigma^{gamma w}_{gamma a}(gamma b)",
        v2(sigma_naturality_failure(&r.tb, t, &r.gamma, bz)),
    );
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ybe::check_braid;

    fn u8() -> WeakBrace {
        build_brace(BraceKind::SandwichUnits(8)).unwrap()
    }

    #[test]
    fn group_heap_formula() {
        let h = heap_of_group(&build_group(GroupKind::Cyclic(5)).unwrap()).unwrap();
        assert_eq!(h.t(1, 3, 4), 2);
        assert_eq!(middle_swap_failure(&h), None);
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(h.t(a, a, b), b);
            }
        }
    }

    #[test]
    fn retract_recovers_group() {
        let g = build_group(GroupKind::Symmetric(3)).unwrap();
        let h = heap_of_group(&g).unwrap();
        assert_eq!(retract(&h, 0).unwrap(), g);
        for e in 0..6 {
            let r = retract(&h, e).unwrap();
            assert_eq!(r.identity(), Some(e));
            assert!(crate::table::classify(&r).group);
        }
    }

    #[test]
    fn non_heap_is_rejected() {
        // [a,b,c] = a + b + c mod 3 fails Mal'cev
        let err = Heap::from_fn(3, |a, b, c| (a + b + c) % 3).unwrap_err();
        assert!(matches!(err, Error::Axiom { .. }));
    }

    #[test]
    fn odd_residues_form_a_heap() {
        // odd residues mod 16 under a - b + c
        let odd: Vec<usize> = (0..8).map(|i| 2 * i + 1).collect();
        let h = Heap::from_fn(8, |a, b, c| {
            let x = (odd[a] + 16 - odd[b] + odd[c]) % 16;
            odd.iter().position(|&o| o == x).unwrap()
        })
        .unwrap();
        assert_eq!(middle_swap_failure(&h), None);
    }

    #[test]
    fn brace_and_ring_trusses() {
        let t = truss_of_brace(&u8()).unwrap();
        assert_eq!(t.size(), 4);
        // sandwich heap: [a,b,c] = a - b + c mod 8
        let (i3, i5, i7) = (
            t.index_of("3").unwrap(),
            t.index_of("5").unwrap(),
            t.index_of("7").unwrap(),
        );
        assert_eq!(t.label(t.t(i3, i5, i7)), "5");
        let r5 = truss_of_ring_mod(5).unwrap();
        assert_eq!(r5.size(), 5);
        assert_eq!(r5.unit(), Some(1));
        // right distributivity also holds in a ring
        assert_eq!(
            first_failure4(5, |a, b, c, d| r5.mul(r5.t(b, c, d), a)
                == r5.t(r5.mul(b, a), r5.mul(c, a), r5.mul(d, a))),
            None
        );
    }

    #[test]
    fn perturbed_multiplication_is_rejected() {
        let r = truss_of_ring_mod(4).unwrap();
        let mut rows = r.mul_table().rows();
        rows[2][3] = 1;
        let mul = CayleyTable::new(rows).unwrap();
        let heap = r.heap().clone();
        let err = verify_near_truss(heap.clone(), mul.clone(), None).unwrap_err();
        let Error::Axiom { witness, .. } = err else {
            panic!("expected axiom failure")
        };
        // independent oracle: first failing associativity triple, else distributivity quadruple
        let assoc = mul.associativity_failure().map(|w| w.to_vec());
        let dist = first_failure4(4, |a, b, c, d| {
            mul.op(a, heap.t(b, c, d)) == heap.t(mul.op(a, b), mul.op(a, c), mul.op(a, d))
        })
        .map(|w| w.to_vec());
        assert_eq!(Some(witness), assoc.or(dist));
    }

    #[test]
    fn sigma_check_value() {
        let b = u8();
        let t = truss_of_brace(&b).unwrap();
        let i = |s: &str| t.index_of(s).unwrap();
        assert_eq!(t.label(sigma_check(&t, i("3"), i("3"), i("5"))), "1");
        assert!(sigma_check_identities(&t, i("3")).all_hold());
    }

    #[test]
    fn zero_divisors_break_injectivity() {
        let t = truss_of_ring_mod(6).unwrap();
        let rep = sigma_check_identities(&t, 1);
        assert!(rep.all_hold(), "{rep}");
        let row: Vec<usize> = (0..6).map(|b| sigma_check(&t, 1, 2, b)).collect();
        assert!(!crate::scan::is_permutation(&row));
    }

    #[test]
    fn identity_retraction_has_trivial_kernel() {
        let b = u8();
        let r = identity_retraction(&b).unwrap();
        assert_eq!(r.kernel(), &[b.identity().unwrap()]);
        let d = decomposition_check(&r);
        assert!(d.conditions_hold() && d.isomorphism);
    }

    #[test]
    fn non_hom_pi_is_rejected() {
        let b = u8();
        let t = truss_of_brace(&b).unwrap();
        let mut pi: Vec<usize> = (0..4).collect();
        pi.swap(2, 3);
        let err = build_retraction(t, b, pi, (0..4).collect()).unwrap_err();
        assert!(matches!(err, Error::Axiom { .. }));
    }

    #[test]
    fn one_point_brace_gives_constant_first_component() {
        let t = truss_of_ring_mod(4).unwrap();
        let r = trivial_retraction(&t).unwrap();
        let sol = near_truss_solution(&r, 0).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(sol.apply(a, b), (1, a * b % 4));
            }
        }
        assert!(check_braid(&sol).holds);
        assert_eq!(left_nondegeneracy_criterion(&r, 0).unwrap(), (false, false));
    }

    #[test]
    fn product_example_value() {
        let b = u8();
        let (t, r) = product_near_truss(&b, &truss_of_ring_mod(5).unwrap()).unwrap();
        assert_eq!(t.size(), 20);
        let i = |s: &str| t.index_of(s).unwrap();
        let sol = near_truss_solution(&r, i("(3,2)")).unwrap();
        let (x, y) = sol.apply(i("(3,2)"), i("(5,4)"));
        assert_eq!((t.label(x), t.label(y)), ("(1,1)".into(), "(7,3)".into()));
        let one = b.identity().unwrap();
        let expected: Vec<usize> = (0..5).map(|s| one * 5 + s).collect();
        assert_eq!(r.kernel(), &expected[..]);
    }

    #[test]
    fn identity_retraction_matches_brace_check_map() {
        let b = u8();
        let r = identity_retraction(&b).unwrap();
        for z in 0..4 {
            assert_eq!(near_truss_solution(&r, z).unwrap(), check_map(&b, z));
        }
    }

    #[test]
    fn inadmissible_parameter_is_rejected() {
        let b6 = build_brace(BraceKind::RumpMod(6)).unwrap();
        let r = identity_retraction(&b6).unwrap();
        assert!(matches!(
            near_truss_solution(&r, 1),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn semidirect_example_does_not_split() {
        let r = semidirect_retraction(5).unwrap();
        let d = decomposition_check(&r);
        assert!(d.bijective);
        assert!(!d.conditions_hold());
        assert!(d.biconditional_holds());
        let sol = near_truss_solution(&r, r.unit()).unwrap();
        assert!(check_braid(&sol).holds);
    }
}
