//! Finite binary operations as Cayley tables over `{0, ..., n-1}`.
//!
//! Every structure in the crate is built from these tables. Semantic names
//! (residues, permutations, pairs) live in an optional label list that does
//! not take part in equality, so two structures are equal exactly when their
//! tables are.

use crate::error::{Error, Result};
use crate::scan::{first_failure1, first_failure2, first_failure3};

/// An `n x n` operation table, stored row-major.
#[derive(Debug, Clone)]
pub struct CayleyTable {
    n: usize,
    data: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl PartialEq for CayleyTable {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.data == other.data
    }
}

impl Eq for CayleyTable {}

impl CayleyTable {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::input("empty carrier"));
        }
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::input(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            for (j, x) in row.into_iter().enumerate() {
                if x >= n {
                    return Err(Error::input(format!(
                        "entry [{i}][{j}] = {x} out of range 0..{n}"
                    )));
                }
                data.push(x);
            }
        }
        Ok(CayleyTable {
            n,
            data,
            labels: None,
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("empty carrier"));
        }
        let mut data = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let x = f(a, b);
                if x >= n {
                    return Err(Error::input(format!(
                        "entry [{a}][{b}] = {x} out of range 0..{n}"
                    )));
                }
                data.push(x);
            }
        }
        Ok(CayleyTable {
            n,
            data,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        debug_assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `a`, falling back to the index.
    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    /// Index carrying the given label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(l) => l.iter().position(|x| x == label),
            None => label.parse().ok().filter(|&i: &usize| i < self.n),
        }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.data[a * self.n + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.data.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn transpose(&self) -> CayleyTable {
        CayleyTable {
            n: self.n,
            data: (0..self.n * self.n)
                .map(|k| self.op(k % self.n, k / self.n))
                .collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn associativity_failure(&self) -> Option<[usize; 3]> {
        first_failure3(self.n, |a, b, c| {
            self.op(self.op(a, b), c) == self.op(a, self.op(b, c))
        })
    }

    pub fn commutativity_failure(&self) -> Option<[usize; 2]> {
        first_failure2(self.n, |a, b| self.op(a, b) == self.op(b, a))
    }

    pub fn identity(&self) -> Option<usize> {
        (0..self.n).find(|&e| (0..self.n).all(|a| self.op(e, a) == a && self.op(a, e) == a))
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.n).filter(|&a| self.op(a, a) == a).collect()
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&z| (0..self.n).all(|a| self.op(z, a) == self.op(a, z)))
            .collect()
    }

    /// The unique quasi-inverse of every element, or the first element that
    /// has none or more than one.
    pub fn inverse_map(&self) -> std::result::Result<Vec<usize>, usize> {
        let mut inv = Vec::with_capacity(self.n);
        for a in 0..self.n {
            let mut found = None;
            for x in 0..self.n {
                if self.op(self.op(a, x), a) == a && self.op(self.op(x, a), x) == x {
                    if found.is_some() {
                        return Err(a);
                    }
                    found = Some(x);
                }
            }
            match found {
                Some(x) => inv.push(x),
                None => return Err(a),
            }
        }
        Ok(inv)
    }

    /// Componentwise product with row-major pair indexing: `(a, b) -> a * m + b`.
    pub fn direct_product(&self, other: &CayleyTable) -> CayleyTable {
        let m = other.n;
        let n = self.n * m;
        let data = (0..n * n)
            .map(|k| {
                let (x, y) = (k / n, k % n);
                self.op(x / m, y / m) * m + other.op(x % m, y % m)
            })
            .collect();
        let labels = Some(pair_labels(
            &(0..self.n).map(|a| self.label(a)).collect::<Vec<_>>(),
            &(0..m).map(|b| other.label(b)).collect::<Vec<_>>(),
        ));
        CayleyTable { n, data, labels }
    }

    /// Restriction to `subset` (reindexed in the given order), if closed.
    pub fn restrict(&self, subset: &[usize]) -> Option<CayleyTable> {
        let pos = |x: usize| subset.iter().position(|&s| s == x);
        let k = subset.len();
        let mut data = Vec::with_capacity(k * k);
        for &a in subset {
            for &b in subset {
                data.push(pos(self.op(a, b))?);
            }
        }
        let labels = Some(subset.iter().map(|&a| self.label(a)).collect());
        Some(CayleyTable { n: k, data, labels })
    }
}

pub(crate) fn pair_labels(left: &[String], right: &[String]) -> Vec<String> {
    left.iter()
        .flat_map(|a| right.iter().map(move |b| format!("({a},{b})")))
        .collect()
}

/// Exhaustively computed structure of a finite magma.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupProfile {
    pub associative: bool,
    pub inverse_map: Option<Vec<usize>>,
    pub clifford: bool,
    pub group: bool,
    pub commutative: bool,
    pub monoid_identity: Option<usize>,
    pub idempotents: Vec<usize>,
    pub center: Vec<usize>,
}

/// Classify a table along semigroup, inverse, Clifford and group.
///
/// Never rejects a well-formed table; missing structure is reported in the
/// profile rather than as an error.
pub fn classify(t: &CayleyTable) -> SemigroupProfile {
    let associative = t.associativity_failure().is_none();
    let inverse_map = if associative {
        t.inverse_map().ok()
    } else {
        None
    };
    let clifford = inverse_map
        .as_ref()
        .is_some_and(|inv| (0..t.size()).all(|a| t.op(a, inv[a]) == t.op(inv[a], a)));
    let idempotents = t.idempotents();
    let group = clifford && idempotents.len() == 1;
    SemigroupProfile {
        associative,
        inverse_map,
        clifford,
        group,
        commutative: t.commutativity_failure().is_none(),
        monoid_identity: t.identity(),
        idempotents,
        center: t.center(),
    }
}

/// `a^{-1}` in an inverse semigroup.
pub fn invert(t: &CayleyTable, a: usize) -> Result<usize> {
    if a >= t.size() {
        return Err(Error::input(format!("element {a} out of range")));
    }
    if t.associativity_failure().is_some() {
        return Err(Error::Unsupported("table is not associative".into()));
    }
    match t.inverse_map() {
        Ok(inv) => Ok(inv[a]),
        Err(w) => Err(Error::Unsupported(format!(
            "element {w} has no unique inverse"
        ))),
    }
}

/// Group constructors with a fixed element indexing.
#[derive(Debug, Clone)]
pub enum GroupKind {
    /// Residues `0..n` under addition.
    Cyclic(usize),
    /// Permutations of `{0..n-1}` in lexicographic one-line order, `(p q)(i) = p(q(i))`.
    Symmetric(usize),
    /// Order `2n`; index `j * n + k` stands for `r^k s^j`.
    Dihedral(usize),
    /// Units of `Z/mZ` in ascending order under multiplication.
    UnitsMod(usize),
    /// Row-major pairs.
    DirectProduct(Box<CayleyTable>, Box<CayleyTable>),
}

pub fn build_group(kind: GroupKind) -> Result<CayleyTable> {
    let t = match kind {
        GroupKind::Cyclic(n) => {
            if !(1..=64).contains(&n) {
                return Err(Error::input(format!("cyclic order {n} outside 1..=64")));
            }
            CayleyTable::from_fn(n, |a, b| (a + b) % n)?
                .with_labels((0..n).map(|a| a.to_string()).collect())
        }
        GroupKind::Symmetric(n) => {
            if !(1..=4).contains(&n) {
                return Err(Error::input(format!("symmetric degree {n} outside 1..=4")));
            }
            let perms = permutations(n);
            let idx = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
            let t = CayleyTable::from_fn(perms.len(), |a, b| {
                let prod: Vec<usize> = (0..n).map(|i| perms[a][perms[b][i]]).collect();
                idx(&prod)
            })?;
            t.with_labels(
                perms
                    .iter()
                    .map(|p| p.iter().map(|x| (x + 1).to_string()).collect::<String>())
                    .collect(),
            )
        }
        GroupKind::Dihedral(n) => {
            if !(1..=16).contains(&n) {
                return Err(Error::input(format!(
                    "dihedral parameter {n} outside 1..=16"
                )));
            }
            CayleyTable::from_fn(2 * n, |a, b| {
                let (j, k) = (a / n, a % n);
                let (m, l) = (b / n, b % n);
                let rot = if j == 0 { (k + l) % n } else { (k + n - l) % n };
                ((j + m) % 2) * n + rot
            })?
            .with_labels(
                (0..2 * n)
                    .map(|a| {
                        if a / n == 0 {
                            format!("r{}", a % n)
                        } else {
                            format!("r{}s", a % n)
                        }
                    })
                    .collect(),
            )
        }
        GroupKind::UnitsMod(m) => {
            let units = units_mod(m)?;
            let pos = |x: usize| units.iter().position(|&u| u == x).unwrap();
            CayleyTable::from_fn(units.len(), |a, b| pos(units[a] * units[b] % m))?
                .with_labels(units.iter().map(|u| u.to_string()).collect())
        }
        GroupKind::DirectProduct(left, right) => {
            for (side, t) in [("left", &left), ("right", &right)] {
                if !classify(t).group {
                    return Err(Error::input(format!("{side} factor is not a group")));
                }
            }
            left.direct_product(&right)
        }
    };
    debug_assert!(classify(&t).group);
    Ok(t)
}

/// Units of `Z/mZ`, ascending.
pub fn units_mod(m: usize) -> Result<Vec<usize>> {
    if !(2..=256).contains(&m) {
        return Err(Error::input(format!("modulus {m} outside 2..=256")));
    }
    Ok((0..m).filter(|&a| gcd(a, m) == 1).collect())
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// The commutative inverse monoid on `{e, x, y}` (indices 0, 1, 2) with
/// identity `e`, `x x = y y = x` and `x y = y x = y`.
pub fn three_element_monoid() -> CayleyTable {
    CayleyTable::new(vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 1]])
        .expect("static table")
        .with_labels(vec!["e".into(), "x".into(), "y".into()])
}

/// A structure map `G_from -> G_to` between two components of a strong semilattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureMap {
    pub from: usize,
    pub to: usize,
    pub map: Vec<usize>,
}

/// Checks that `y` is a meet-semilattice and returns, for every pair
/// `alpha >= beta`, the structure map (identity on the diagonal).
pub(crate) fn semilattice_maps(
    y: &CayleyTable,
    sizes: &[usize],
    homs: &[StructureMap],
) -> Result<Vec<Vec<Option<Vec<usize>>>>> {
    let k = y.size();
    if sizes.len() != k {
        return Err(Error::input(format!(
            "{} components for a semilattice of size {k}",
            sizes.len()
        )));
    }
    if let Some(w) = y.associativity_failure() {
        return Err(Error::axiom("semilattice associativity", w));
    }
    if let Some(w) = y.commutativity_failure() {
        return Err(Error::axiom("semilattice commutativity", w));
    }
    if let Some(w) = first_failure1(k, |a| y.op(a, a) == a) {
        return Err(Error::axiom("semilattice idempotence", [w]));
    }
    let geq = |a: usize, b: usize| y.op(a, b) == b;
    let mut maps: Vec<Vec<Option<Vec<usize>>>> = vec![vec![None; k]; k];
    for a in 0..k {
        maps[a][a] = Some((0..sizes[a]).collect());
    }
    for h in homs {
        if h.from >= k || h.to >= k || h.from == h.to || !geq(h.from, h.to) {
            return Err(Error::input(format!(
                "structure map {} -> {} does not go down the semilattice",
                h.from, h.to
            )));
        }
        if h.map.len() != sizes[h.from] || h.map.iter().any(|&x| x >= sizes[h.to]) {
            return Err(Error::input(format!(
                "structure map {} -> {} has wrong shape",
                h.from, h.to
            )));
        }
        if maps[h.from][h.to].is_some() {
            return Err(Error::input(format!(
                "duplicate structure map {} -> {}",
                h.from, h.to
            )));
        }
        maps[h.from][h.to] = Some(h.map.clone());
    }
    for a in 0..k {
        for b in 0..k {
            if geq(a, b) && maps[a][b].is_none() {
                return Err(Error::input(format!("missing structure map {a} -> {b}")));
            }
        }
    }
    // transitivity: phi_{b,c} phi_{a,b} = phi_{a,c}
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                if geq(a, b) && geq(b, c) {
                    let ab = maps[a][b].as_ref().unwrap();
                    let bc = maps[b][c].as_ref().unwrap();
                    let ac = maps[a][c].as_ref().unwrap();
                    if let Some(x) = (0..sizes[a]).find(|&x| bc[ab[x]] != ac[x]) {
                        return Err(Error::axiom(
                            "structure maps compose along chains",
                            [a, b, c, x],
                        ));
                    }
                }
            }
        }
    }
    Ok(maps)
}

/// The strong-semilattice operation on the disjoint union of `components`.
pub(crate) fn semilattice_operation(
    y: &CayleyTable,
    components: &[&CayleyTable],
    maps: &[Vec<Option<Vec<usize>>>],
) -> Result<CayleyTable> {
    let offsets: Vec<usize> = components
        .iter()
        .scan(0, |acc, t| {
            let o = *acc;
            *acc += t.size();
            Some(o)
        })
        .collect();
    let total: usize = components.iter().map(|t| t.size()).sum();
    let locate = |x: usize| {
        let c = offsets.iter().rposition(|&o| o <= x).unwrap();
        (c, x - offsets[c])
    };
    CayleyTable::from_fn(total, |p, q| {
        let (a, x) = locate(p);
        let (b, u) = locate(q);
        let m = y.op(a, b);
        let xm = maps[a][m].as_ref().unwrap()[x];
        let um = maps[b][m].as_ref().unwrap()[u];
        offsets[m] + components[m].op(xm, um)
    })
}

/// Clifford semigroup of a strong semilattice of groups.
///
/// `y_order` is the meet table of the semilattice; `homs` lists one group
/// homomorphism per strictly comparable pair `from > to`.
pub fn build_strong_semilattice(
    y_order: &CayleyTable,
    groups: &[CayleyTable],
    homs: &[StructureMap],
) -> Result<CayleyTable> {
    for (i, g) in groups.iter().enumerate() {
        if !classify(g).group {
            return Err(Error::input(format!("component {i} is not a group")));
        }
    }
    let sizes: Vec<usize> = groups.iter().map(CayleyTable::size).collect();
    let maps = semilattice_maps(y_order, &sizes, homs)?;
    for h in homs {
        let (g, t) = (&groups[h.from], &groups[h.to]);
        if let Some([a, b]) = first_failure2(g.size(), |a, b| {
            h.map[g.op(a, b)] == t.op(h.map[a], h.map[b])
        }) {
            return Err(Error::axiom(
                format!("structure map {} -> {} is a homomorphism", h.from, h.to),
                [a, b],
            ));
        }
    }
    let refs: Vec<&CayleyTable> = groups.iter().collect();
    let t = semilattice_operation(y_order, &refs, &maps)?;
    let labels = groups
        .iter()
        .enumerate()
        .flat_map(|(i, g)| (0..g.size()).map(move |a| format!("{}@{i}", g.label(a))))
        .collect();
    Ok(t.with_labels(labels))
}

/// Meet table of the chain `0 > 1 > ... > k-1`.
pub fn chain_semilattice(k: usize) -> CayleyTable {
    CayleyTable::from_fn(k, |a, b| a.max(b)).expect("k > 0")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_six_is_a_commutative_group() {
        let p = classify(&build_group(GroupKind::Cyclic(6)).unwrap());
        assert!(p.group && p.commutative);
        assert_eq!(p.monoid_identity, Some(0));
        assert_eq!(p.idempotents, vec![0]);
    }

    #[test]
    fn three_element_monoid_profile() {
        let p = classify(&three_element_monoid());
        assert!(p.associative && p.clifford && p.commutative && !p.group);
        assert_eq!(p.idempotents, vec![0, 1]);
        assert_eq!(p.inverse_map, Some(vec![0, 1, 2]));
    }

    #[test]
    fn nonassociative_two_by_two() {
        let t = CayleyTable::new(vec![vec![1, 0], vec![0, 0]]).unwrap();
        let mut oracle = None;
        'scan: for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    if t.op(t.op(a, b), c) != t.op(a, t.op(b, c)) {
                        oracle = Some([a, b, c]);
                        break 'scan;
                    }
                }
            }
        }
        // (0*0)*1 = 1*1 = 0 but 0*(0*1) = 0*0 = 1
        assert_eq!(oracle, Some([0, 0, 1]));
        let p = classify(&t);
        assert!(!p.associative);
        assert!(p.inverse_map.is_none());
        assert_eq!(t.associativity_failure(), oracle);
    }

    #[test]
    fn malformed_entry_rejected() {
        assert!(matches!(
            CayleyTable::new(vec![vec![0, 2], vec![1, 0]]),
            Err(Error::Input(_))
        ));
        assert!(CayleyTable::new(vec![vec![0, 1], vec![1]]).is_err());
    }

    #[test]
    fn invert_examples() {
        let z6 = build_group(GroupKind::Cyclic(6)).unwrap();
        assert_eq!(invert(&z6, 2).unwrap(), 4);
        assert_eq!(invert(&three_element_monoid(), 2).unwrap(), 2);
        let nonassoc = CayleyTable::new(vec![vec![1, 0], vec![0, 0]]).unwrap();
        assert!(matches!(invert(&nonassoc, 0), Err(Error::Unsupported(_))));
        // left-zero band: every element is a quasi-inverse of every other
        let lz = CayleyTable::from_fn(2, |a, _| a).unwrap();
        assert!(matches!(invert(&lz, 0), Err(Error::Unsupported(_))));
    }

    #[test]
    fn units_mod_eight() {
        let t = build_group(GroupKind::UnitsMod(8)).unwrap();
        assert_eq!(t.size(), 4);
        let (i3, i5, i7) = (
            t.index_of("3").unwrap(),
            t.index_of("5").unwrap(),
            t.index_of("7").unwrap(),
        );
        assert_eq!(t.op(i3, i5), i7);
    }

    #[test]
    fn cyclic_two_table() {
        assert_eq!(
            build_group(GroupKind::Cyclic(2)).unwrap().rows(),
            vec![vec![0, 1], vec![1, 0]]
        );
    }

    #[test]
    fn symmetric_three_center_is_trivial() {
        let s3 = build_group(GroupKind::Symmetric(3)).unwrap();
        let p = classify(&s3);
        assert!(p.group && !p.commutative);
        // brute-force center by definition
        let center: Vec<usize> = (0..6)
            .filter(|&z| (0..6).all(|a| s3.op(z, a) == s3.op(a, z)))
            .collect();
        assert_eq!(center, vec![0]);
        assert_eq!(p.center, center);
        assert!(build_group(GroupKind::Symmetric(5)).is_err());
    }

    #[test]
    fn dihedral_and_products_are_groups() {
        for n in 1..=6 {
            let d = build_group(GroupKind::Dihedral(n)).unwrap();
            assert!(classify(&d).group);
            assert_eq!(d.size(), 2 * n);
        }
        assert!(!classify(&build_group(GroupKind::Dihedral(3)).unwrap()).commutative);
        let p = build_group(GroupKind::DirectProduct(
            Box::new(build_group(GroupKind::Cyclic(2)).unwrap()),
            Box::new(build_group(GroupKind::Symmetric(3)).unwrap()),
        ))
        .unwrap();
        assert_eq!(p.size(), 12);
        assert!(classify(&p).group);
    }

    #[test]
    fn strong_semilattice_examples() {
        let z2 = build_group(GroupKind::Cyclic(2)).unwrap();
        let z1 = build_group(GroupKind::Cyclic(1)).unwrap();
        // Y = {1}: the group itself
        let single =
            build_strong_semilattice(&chain_semilattice(1), std::slice::from_ref(&z2), &[])
                .unwrap();
        assert_eq!(single, z2);

        let s = build_strong_semilattice(
            &chain_semilattice(2),
            &[z2.clone(), z1],
            &[StructureMap {
                from: 0,
                to: 1,
                map: vec![0, 0],
            }],
        )
        .unwrap();
        let p = classify(&s);
        assert_eq!(s.size(), 3);
        assert!(p.clifford && !p.group);
        assert_eq!(p.idempotents.len(), 2);

        let z4 = build_group(GroupKind::Cyclic(4)).unwrap();
        let s = build_strong_semilattice(
            &chain_semilattice(2),
            &[z4, z2],
            &[StructureMap {
                from: 0,
                to: 1,
                map: vec![0, 1, 0, 1],
            }],
        )
        .unwrap();
        let p = classify(&s);
        assert_eq!(s.size(), 6);
        assert!(p.clifford && !p.group);
    }

    #[test]
    fn strong_semilattice_rejects_bad_maps() {
        let z4 = build_group(GroupKind::Cyclic(4)).unwrap();
        let z2 = build_group(GroupKind::Cyclic(2)).unwrap();
        // not a homomorphism
        let bad = build_strong_semilattice(
            &chain_semilattice(2),
            &[z4.clone(), z2.clone()],
            &[StructureMap {
                from: 0,
                to: 1,
                map: vec![0, 1, 1, 1],
            }],
        );
        assert!(matches!(bad, Err(Error::Axiom { .. })));
        // missing map
        assert!(build_strong_semilattice(&chain_semilattice(2), &[z4, z2.clone()], &[]).is_err());
        // not a semilattice
        let z2y = build_group(GroupKind::Cyclic(2)).unwrap();
        assert!(build_strong_semilattice(&z2y, &[z2.clone(), z2], &[]).is_err());
    }

    #[test]
    fn clifford_chain_composition_checked() {
        let z4 = build_group(GroupKind::Cyclic(4)).unwrap();
        let z2 = build_group(GroupKind::Cyclic(2)).unwrap();
        let z1 = build_group(GroupKind::Cyclic(1)).unwrap();
        let maps = vec![
            StructureMap {
                from: 0,
                to: 1,
                map: vec![0, 1, 0, 1],
            },
            StructureMap {
                from: 1,
                to: 2,
                map: vec![0, 0],
            },
            StructureMap {
                from: 0,
                to: 2,
                map: vec![0, 0, 0, 0],
            },
        ];
        let s = build_strong_semilattice(&chain_semilattice(3), &[z4, z2, z1], &maps).unwrap();
        assert_eq!(s.size(), 7);
        assert!(classify(&s).clifford);
    }
}
