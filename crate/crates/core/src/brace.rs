//! Weak braces, dual weak braces, skew braces and braces.
//!
//! A [`WeakBrace`] is proof-carrying: the only way to obtain one is through
//! [`verify_weak_brace`] (directly or via [`build_brace`]), which checks every
//! axiom exhaustively and records the highest structure level reached.

use crate::error::{Error, Result};
use crate::report::Report;
use crate::scan::{first_failure1, first_failure2, first_failure3};
use crate::table::{
    build_group, chain_semilattice, pair_labels, semilattice_maps, semilattice_operation,
    units_mod, CayleyTable, GroupKind, StructureMap,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    Weak,
    DualWeak,
    Skew,
    Brace,
}

impl Level {
    pub fn as_str(self) -> &'static str {
        match self {
            Level::Weak => "weak",
            Level::DualWeak => "dual_weak",
            Level::Skew => "skew",
            Level::Brace => "brace",
        }
    }

    pub fn parse(s: &str) -> Option<Level> {
        match s {
            "weak" => Some(Level::Weak),
            "dual_weak" => Some(Level::DualWeak),
            "skew" => Some(Level::Skew),
            "brace" => Some(Level::Brace),
            _ => None,
        }
    }
}

/// A verified weak brace `(S, +, o)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakBrace {
    add: CayleyTable,
    mul: CayleyTable,
    neg: Vec<usize>,
    inv: Vec<usize>,
    idem: Vec<usize>,
    level: Level,
}

impl WeakBrace {
    #[inline]
    pub fn size(&self) -> usize {
        self.add.size()
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.op(a, b)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul.op(a, b)
    }

    /// `-a`, the inverse in `(S, +)`.
    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    /// `a^-`, the inverse in `(S, o)`.
    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `a - b`.
    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn mul3(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, b), c)
    }

    pub fn add_table(&self) -> &CayleyTable {
        &self.add
    }

    pub fn mul_table(&self) -> &CayleyTable {
        &self.mul
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idem
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.idem.binary_search(&a).is_ok()
    }

    pub fn level(&self) -> Level {
        self.level
    }

    /// Common identity of `+` and `o` for skew braces.
    pub fn identity(&self) -> Option<usize> {
        if self.level >= Level::Skew {
            Some(self.idem[0])
        } else {
            None
        }
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
        self.add = self.add.with_labels(labels.clone());
        self.mul = self.mul.with_labels(labels);
        self
    }

    /// `lambda_a(b) = -a + a o b`.
    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.add(self.neg(a), self.mul(a, b))
    }

    /// `rho_b(a) = lambda_a(b)^- o a o b`.
    pub fn rho(&self, b: usize, a: usize) -> usize {
        self.mul3(self.inv(self.lambda(a, b)), a, b)
    }

    /// `lambda^op_a(b) = a o b - a`.
    pub fn lambda_op(&self, a: usize, b: usize) -> usize {
        self.sub(self.mul(a, b), a)
    }

    /// `rho^op_b(a) = (a o b - a)^- o a o b`.
    pub fn rho_op(&self, b: usize, a: usize) -> usize {
        self.mul3(self.inv(self.lambda_op(a, b)), a, b)
    }

    /// The opposite weak brace `(S, +^op, o)`.
    pub fn opposite(&self) -> WeakBrace {
        verify_weak_brace(self.add.transpose(), self.mul.clone(), Level::Weak)
            .expect("the opposite of a weak brace is a weak brace")
    }

    /// Sub-brace on `subset` (reindexed in the given order), verified.
    pub fn restrict(&self, subset: &[usize]) -> Result<WeakBrace> {
        let add = self
            .add
            .restrict(subset)
            .ok_or_else(|| Error::axiom("subset closed under +", subset.to_vec()))?;
        let mul = self
            .mul
            .restrict(subset)
            .ok_or_else(|| Error::axiom("subset closed under o", subset.to_vec()))?;
        verify_weak_brace(add, mul, Level::Weak)
    }
}

/// Verify the weak brace axioms on `(add, mul)` and return the structure at
/// the highest level it attains, failing if that is below `required`.
pub fn verify_weak_brace(add: CayleyTable, mul: CayleyTable, required: Level) -> Result<WeakBrace> {
    let n = add.size();
    if mul.size() != n {
        return Err(Error::input(format!(
            "operation tables have sizes {n} and {}",
            mul.size()
        )));
    }
    if let Some(w) = add.associativity_failure() {
        return Err(Error::axiom("(S,+) associative", w));
    }
    if let Some(w) = mul.associativity_failure() {
        return Err(Error::axiom("(S,o) associative", w));
    }
    let neg = add
        .inverse_map()
        .map_err(|a| Error::axiom("(S,+) inverse semigroup", [a]))?;
    let inv = mul
        .inverse_map()
        .map_err(|a| Error::axiom("(S,o) inverse semigroup", [a]))?;

    let a_mul = |a, b| mul.op(a, b);
    let a_add = |a, b| add.op(a, b);
    if let Some(w) = first_failure3(n, |a, b, c| {
        a_mul(a, a_add(b, c)) == a_add(a_add(a_mul(a, b), neg[a]), a_mul(a, c))
    }) {
        return Err(Error::axiom("a o (b + c) = a o b - a + a o c", w));
    }
    if let Some(w) = first_failure1(n, |a| a_mul(a, inv[a]) == a_add(neg[a], a)) {
        return Err(Error::axiom("a o a^- = -a + a", [w]));
    }
    if let Some(w) = first_failure1(n, |a| a_add(a, neg[a]) == a_add(neg[a], a)) {
        return Err(Error::axiom("(S,+) Clifford", [w]));
    }
    let idem = add.idempotents();
    if idem != mul.idempotents() {
        let w = (0..n)
            .find(|&a| (a_add(a, a) == a) != (a_mul(a, a) == a))
            .unwrap();
        return Err(Error::axiom("E(S,+) = E(S,o)", [w]));
    }
    for &e in &idem {
        if let Some(a) = first_failure1(n, |a| a_add(e, a) == a_mul(e, a)) {
            return Err(Error::axiom("e + a = e o a", [e, a]));
        }
    }

    let mul_clifford = (0..n).all(|a| a_mul(a, inv[a]) == a_mul(inv[a], a));
    let level = if !mul_clifford {
        Level::Weak
    } else if idem.len() > 1 {
        Level::DualWeak
    } else if add.commutativity_failure().is_some() {
        Level::Skew
    } else {
        Level::Brace
    };

    if level < required {
        let err = match required {
            Level::Weak => unreachable!(),
            Level::DualWeak => Error::axiom(
                "(S,o) Clifford",
                [(0..n)
                    .find(|&a| a_mul(a, inv[a]) != a_mul(inv[a], a))
                    .unwrap()],
            ),
            Level::Skew if level < Level::DualWeak => Error::axiom(
                "(S,o) Clifford",
                [(0..n)
                    .find(|&a| a_mul(a, inv[a]) != a_mul(inv[a], a))
                    .unwrap()],
            ),
            Level::Skew => Error::axiom("single idempotent (groups)", idem.clone()),
            Level::Brace if level < Level::Skew => {
                Error::axiom("single idempotent (groups)", idem.clone())
            }
            Level::Brace => Error::axiom("(S,+) commutative", add.commutativity_failure().unwrap()),
        };
        return Err(err);
    }

    Ok(WeakBrace {
        add,
        mul,
        neg,
        inv,
        idem,
        level,
    })
}

/// `(a + b) o c = a o c - c + b o c` for all `a, b, c`.
pub fn is_two_sided(w: &WeakBrace) -> bool {
    two_sided_failure(w).is_none()
}

pub fn two_sided_failure(w: &WeakBrace) -> Option<[usize; 3]> {
    first_failure3(w.size(), |a, b, c| {
        w.mul(w.add(a, b), c) == w.add(w.sub(w.mul(a, c), c), w.mul(b, c))
    })
}

/// Brace constructors.
#[derive(Debug, Clone)]
pub enum BraceKind {
    /// `a + b := a o b` on a Clifford semigroup.
    Trivial(CayleyTable),
    /// `a + b := b o a` on a Clifford semigroup.
    AlmostTrivial(CayleyTable),
    /// `Z/nZ` with `a o b = a + (-1)^a b`; `n` even.
    RumpMod(usize),
    /// Units of `Z/mZ` with `a +_1 b = a - 1 + b` and multiplication.
    SandwichUnits(usize),
    /// `(B, o)` cyclic of even order `m` on exponents, `g^k + g^l = g^{k + (-1)^k l}`.
    CyclicCirc(usize),
    /// Componentwise, row-major pairs.
    DirectProduct(Box<WeakBrace>, Box<WeakBrace>),
    /// Strong semilattice of braces over the meet table `y`.
    SemilatticeOfBraces {
        y: CayleyTable,
        braces: Vec<WeakBrace>,
        homs: Vec<StructureMap>,
    },
    /// The chain `U(Z/2^k) -> U(Z/2^{k-1}) -> ... -> U(Z/2)` of sandwich braces.
    SandwichChain(usize),
}

pub fn build_brace(kind: BraceKind) -> Result<WeakBrace> {
    match kind {
        BraceKind::Trivial(t) => {
            let labels = labels_of(&t);
            verify_weak_brace(t.clone(), t, Level::DualWeak).map(|w| w.with_labels(labels))
        }
        BraceKind::AlmostTrivial(t) => {
            let labels = labels_of(&t);
            verify_weak_brace(t.transpose(), t, Level::DualWeak).map(|w| w.with_labels(labels))
        }
        BraceKind::RumpMod(n) => {
            if n < 2 || n % 2 != 0 || n > 64 {
                return Err(Error::input(format!(
                    "rump_mod needs an even modulus in 2..=64, got {n}"
                )));
            }
            let add = build_group(GroupKind::Cyclic(n))?;
            let mul = CayleyTable::from_fn(n, |a, b| {
                if a % 2 == 0 {
                    (a + b) % n
                } else {
                    (a + n - b) % n
                }
            })?;
            let labels = labels_of(&add);
            verify_weak_brace(add, mul, Level::Brace).map(|w| w.with_labels(labels))
        }
        BraceKind::SandwichUnits(m) => {
            let units = units_mod(m)?;
            let pos = |x: usize| units.iter().position(|&u| u == x);
            let k = units.len();
            let mut add_rows = vec![vec![0; k]; k];
            for (i, &a) in units.iter().enumerate() {
                for (j, &b) in units.iter().enumerate() {
                    let s = (a + m - 1 + b) % m;
                    add_rows[i][j] = pos(s)
                        .ok_or_else(|| Error::axiom("units closed under a - 1 + b", vec![i, j]))?;
                }
            }
            let add = CayleyTable::new(add_rows)?;
            let mul = build_group(GroupKind::UnitsMod(m))?;
            let labels = labels_of(&mul);
            verify_weak_brace(add, mul, Level::Skew).map(|w| w.with_labels(labels))
        }
        BraceKind::CyclicCirc(m) => {
            if m < 2 || m % 2 != 0 || m > 64 {
                return Err(Error::input(format!(
                    "cyclic_circ needs an even order in 2..=64, got {m}"
                )));
            }
            let mul = build_group(GroupKind::Cyclic(m))?;
            let add = CayleyTable::from_fn(m, |k, l| {
                if k % 2 == 0 {
                    (k + l) % m
                } else {
                    (k + m - l) % m
                }
            })?;
            let labels = (0..m).map(|k| format!("g^{k}")).collect();
            verify_weak_brace(add, mul, Level::Skew).map(|w| w.with_labels(labels))
        }
        BraceKind::DirectProduct(left, right) => {
            let add = left.add.direct_product(&right.add);
            let mul = left.mul.direct_product(&right.mul);
            let labels = pair_labels(&left.labels(), &right.labels());
            verify_weak_brace(add, mul, Level::Weak).map(|w| w.with_labels(labels))
        }
        BraceKind::SemilatticeOfBraces { y, braces, homs } => {
            for (i, b) in braces.iter().enumerate() {
                if b.level < Level::Skew {
                    return Err(Error::input(format!("component {i} is not a skew brace")));
                }
            }
            let sizes: Vec<usize> = braces.iter().map(WeakBrace::size).collect();
            let maps = semilattice_maps(&y, &sizes, &homs)?;
            for h in &homs {
                let (src, dst) = (&braces[h.from], &braces[h.to]);
                let f = &h.map;
                if let Some(w) = first_failure2(src.size(), |a, b| {
                    f[src.add(a, b)] == dst.add(f[a], f[b])
                        && f[src.mul(a, b)] == dst.mul(f[a], f[b])
                }) {
                    return Err(Error::axiom(
                        format!(
                            "structure map {} -> {} is a brace homomorphism",
                            h.from, h.to
                        ),
                        w,
                    ));
                }
            }
            let adds: Vec<&CayleyTable> = braces.iter().map(|b| &b.add).collect();
            let muls: Vec<&CayleyTable> = braces.iter().map(|b| &b.mul).collect();
            let add = semilattice_operation(&y, &adds, &maps)?;
            let mul = semilattice_operation(&y, &muls, &maps)?;
            let labels = braces
                .iter()
                .enumerate()
                .flat_map(|(i, b)| b.labels().into_iter().map(move |l| format!("{l}@{i}")))
                .collect();
            verify_weak_brace(add, mul, Level::DualWeak).map(|w| w.with_labels(labels))
        }
        BraceKind::SandwichChain(k) => {
            if !(1..=6).contains(&k) {
                return Err(Error::input(format!(
                    "sandwich chain length {k} outside 1..=6"
                )));
            }
            // component i is U(Z/2^{k-i})
            let braces = (0..k)
                .map(|i| sandwich_units_pow2(k - i))
                .collect::<Result<Vec<_>>>()?;
            let mut homs = Vec::new();
            for from in 0..k {
                for to in from + 1..k {
                    let modulus = 1usize << (k - to);
                    let src = &braces[from];
                    let dst = &braces[to];
                    let map = (0..src.size())
                        .map(|a| {
                            let v: usize = src.label(a).parse().unwrap();
                            dst.index_of(&(v % modulus).to_string()).unwrap()
                        })
                        .collect();
                    homs.push(StructureMap { from, to, map });
                }
            }
            build_brace(BraceKind::SemilatticeOfBraces {
                y: chain_semilattice(k),
                braces,
                homs,
            })
        }
    }
}

fn sandwich_units_pow2(e: usize) -> Result<WeakBrace> {
    if e == 1 {
        // U(Z/2Z) = {1}
        let t = build_group(GroupKind::UnitsMod(2))?;
        return verify_weak_brace(t.clone(), t.clone(), Level::Skew)
            .map(|w| w.with_labels(labels_of(&t)));
    }
    build_brace(BraceKind::SandwichUnits(1 << e))
}

fn labels_of(t: &CayleyTable) -> Vec<String> {
    (0..t.size()).map(|a| t.label(a)).collect()
}

/// The weak-brace identities every verified structure satisfies: the
/// `lambda`/`rho` calculus, multiplicativity of `lambda`, anti-multiplicativity
/// of `rho`, the idempotent identity and, on dual weak braces, the
/// regularity of `lambda` and `rho`.
pub fn brace_identities(w: &WeakBrace) -> Report {
    let n = w.size();
    let mut r = Report::default();
    let v = |x: Option<[usize; 2]>| x.map(|a| a.to_vec());
    let v3 = |x: Option<[usize; 3]>| x.map(|a| a.to_vec());

    r.push(
        "a o b = a + lambda_a(b)",
        v(first_failure2(n, |a, b| {
            w.mul(a, b) == w.add(a, w.lambda(a, b))
        })),
    );
    r.push(
        "a + b = a o lambda_{a^-}(b)",
        v(first_failure2(n, |a, b| {
            w.add(a, b) == w.mul(a, w.lambda(w.inv(a), b))
        })),
    );
    r.push(
        "lambda_a(b) = a o b o rho_b(a)^-",
        v(first_failure2(n, |a, b| {
            w.lambda(a, b) == w.mul3(a, b, w.inv(w.rho(b, a)))
        })),
    );
    r.push(
        "a o (-b) = a - a o b + a",
        v(first_failure2(n, |a, b| {
            w.mul(a, w.neg(b)) == w.add(w.sub(a, w.mul(a, b)), a)
        })),
    );
    r.push(
        "lambda_a(b) o rho_b(a) = a o b",
        v(first_failure2(n, |a, b| {
            w.mul(w.lambda(a, b), w.rho(b, a)) == w.mul(a, b)
        })),
    );
    r.push(
        "lambda_{a o b} = lambda_a lambda_b",
        v3(first_failure3(n, |a, b, c| {
            w.lambda(w.mul(a, b), c) == w.lambda(a, w.lambda(b, c))
        })),
    );
    r.push(
        "rho_{a o b} = rho_b rho_a",
        v3(first_failure3(n, |a, b, c| {
            w.rho(w.mul(a, b), c) == w.rho(b, w.rho(a, c))
        })),
    );
    r.push(
        "lambda_a is an endomorphism of (S,+)",
        v3(first_failure3(n, |a, b, c| {
            w.lambda(a, w.add(b, c)) == w.add(w.lambda(a, b), w.lambda(a, c))
        })),
    );
    r.push(
        "lambda^op_a(b) = rho_{a^-}(b^-)^-",
        v(first_failure2(n, |a, b| {
            w.lambda_op(a, b) == w.inv(w.rho(w.inv(a), w.inv(b)))
        })),
    );
    r.push(
        "rho^op_b(a) = lambda_{b^-}(a^-)^-",
        v(first_failure2(n, |a, b| {
            w.rho_op(b, a) == w.inv(w.lambda(w.inv(b), w.inv(a)))
        })),
    );
    r.push(
        "e + a = e o a = lambda_e(a)",
        w.idempotents().iter().find_map(|&e| {
            first_failure1(n, |a| {
                w.add(e, a) == w.mul(e, a) && w.mul(e, a) == w.lambda(e, a)
            })
            .map(|a| vec![e, a])
        }),
    );
    r.push(
        "E(S,+) = E(S,o)",
        first_failure1(n, |a| (w.add(a, a) == a) == (w.mul(a, a) == a)).map(|a| vec![a]),
    );
    if w.level() >= Level::DualWeak {
        // lambda_a lambda_{a^-} lambda_a = lambda_a etc., as maps
        let lam = |a: usize, b: usize| w.lambda(a, b);
        let rho = |a: usize, b: usize| w.rho(a, b);
        for (name, f) in [
            ("lambda", &lam as &dyn Fn(usize, usize) -> usize),
            ("rho", &rho as &dyn Fn(usize, usize) -> usize),
        ] {
            r.push(
                format!("{name}_a {name}_{{a^-}} {name}_a = {name}_a"),
                v(first_failure2(n, |a, b| {
                    let ai = w.inv(a);
                    f(a, f(ai, f(a, b))) == f(a, b)
                })),
            );
            r.push(
                format!("{name}_{{a^-}} {name}_a {name}_{{a^-}} = {name}_{{a^-}}"),
                v(first_failure2(n, |a, b| {
                    let ai = w.inv(a);
                    f(ai, f(a, f(ai, b))) == f(ai, b)
                })),
            );
            r.push(
                format!("{name}_a {name}_{{a^-}} = {name}_{{a^-}} {name}_a"),
                v(first_failure2(n, |a, b| {
                    let ai = w.inv(a);
                    f(a, f(ai, b)) == f(ai, f(a, b))
                })),
            );
        }
    }
    r
}
