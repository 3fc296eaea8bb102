//! Finite semirings given by Cayley tables.
//!
//! A validated [`FiniteSemiring`] is index-normalized: zero is element `0`
//! and one is element `1`. Original element names survive as labels.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::monoid::{self, AdditiveMonoid};

/// Unvalidated semiring tables, as read from JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiringTables {
    pub size: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
    #[serde(default)]
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    AddAssociativity,
    AddCommutativity,
    AddIdentity,
    MulAssociativity,
    MulIdentity,
    LeftDistributivity,
    RightDistributivity,
    Annihilation,
    ZeroNeOne,
    // semimodule-only laws
    ActionIdentity,
    ActionAssociativity,
    ActionOverElementSum,
    ActionOverScalarSum,
    ActionByZero,
    ActionOnZero,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::AddAssociativity => "add-associativity",
            Axiom::AddCommutativity => "add-commutativity",
            Axiom::AddIdentity => "add-identity",
            Axiom::MulAssociativity => "mul-associativity",
            Axiom::MulIdentity => "mul-identity",
            Axiom::LeftDistributivity => "left-distributivity",
            Axiom::RightDistributivity => "right-distributivity",
            Axiom::Annihilation => "annihilation",
            Axiom::ZeroNeOne => "zero-ne-one",
            Axiom::ActionIdentity => "action-identity",
            Axiom::ActionAssociativity => "action-associativity",
            Axiom::ActionOverElementSum => "action-over-element-sum",
            Axiom::ActionOverScalarSum => "action-over-scalar-sum",
            Axiom::ActionByZero => "action-by-zero",
            Axiom::ActionOnZero => "action-on-zero",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    /// Lexicographically first failing tuple, in the input's own indexing.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub(crate) fn from_violations(violations: Vec<Violation>) -> Self {
        AxiomReport {
            passed: violations.is_empty(),
            violations,
        }
    }

    pub fn violation(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            return f.write_str("all axioms hold");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{} at {:?}", v.axiom, v.witness)?;
        }
        Ok(())
    }
}

pub(crate) fn check_square(name: &str, table: &[Vec<usize>], rows: usize, cols: usize, range: usize) -> Result<()> {
    if table.len() != rows {
        return Err(Error::Structural(format!(
            "{name} has {} rows, expected {rows}",
            table.len()
        )));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != cols {
            return Err(Error::Structural(format!(
                "{name}[{i}] has {} entries, expected {cols}",
                row.len()
            )));
        }
        if let Some((j, v)) = row.iter().enumerate().find(|(_, &v)| v >= range) {
            return Err(Error::Structural(format!(
                "{name}[{i}][{j}] = {v} is out of range 0..{range}"
            )));
        }
    }
    Ok(())
}

/// First tuple in lexicographic order on which `holds` fails.
pub(crate) fn first_failure<const K: usize>(
    n: [usize; K],
    mut holds: impl FnMut([usize; K]) -> bool,
) -> Option<Vec<usize>> {
    let mut t = [0usize; K];
    if n.contains(&0) {
        return None;
    }
    loop {
        if !holds(t) {
            return Some(t.to_vec());
        }
        let mut k = K;
        loop {
            if k == 0 {
                return None;
            }
            k -= 1;
            t[k] += 1;
            if t[k] < n[k] {
                break;
            }
            t[k] = 0;
        }
    }
}

/// Exhaustively checks every semiring axiom on raw tables.
///
/// Malformed tables produce [`Error::Structural`]; axiom failures are
/// reported in the returned [`AxiomReport`], one entry per failing axiom.
pub fn check_semiring_axioms(t: &SemiringTables) -> Result<AxiomReport> {
    let n = t.size;
    if n == 0 {
        return Err(Error::Structural("size must be positive".into()));
    }
    check_square("add", &t.add, n, n, n)?;
    check_square("mul", &t.mul, n, n, n)?;
    if t.zero >= n || t.one >= n {
        return Err(Error::Structural(format!(
            "zero={} / one={} out of range 0..{n}",
            t.zero, t.one
        )));
    }
    if let Some(e) = &t.elements {
        if e.len() != n {
            return Err(Error::Structural(format!(
                "elements lists {} labels for {n} elements",
                e.len()
            )));
        }
    }
    let add = |a: usize, b: usize| t.add[a][b];
    let mul = |a: usize, b: usize| t.mul[a][b];
    let (z, o) = (t.zero, t.one);
    let mut v = Vec::new();
    let mut record = |axiom, w: Option<Vec<usize>>| {
        if let Some(witness) = w {
            v.push(Violation { axiom, witness });
        }
    };
    record(
        Axiom::AddAssociativity,
        first_failure([n; 3], |[a, b, c]| add(add(a, b), c) == add(a, add(b, c))),
    );
    record(
        Axiom::AddCommutativity,
        first_failure([n; 2], |[a, b]| add(a, b) == add(b, a)),
    );
    record(
        Axiom::AddIdentity,
        first_failure([n], |[a]| add(a, z) == a && add(z, a) == a),
    );
    record(
        Axiom::MulAssociativity,
        first_failure([n; 3], |[a, b, c]| mul(mul(a, b), c) == mul(a, mul(b, c))),
    );
    record(
        Axiom::MulIdentity,
        first_failure([n], |[a]| mul(a, o) == a && mul(o, a) == a),
    );
    record(
        Axiom::LeftDistributivity,
        first_failure([n; 3], |[a, b, c]| mul(a, add(b, c)) == add(mul(a, b), mul(a, c))),
    );
    record(
        Axiom::RightDistributivity,
        first_failure([n; 3], |[a, b, c]| mul(add(a, b), c) == add(mul(a, c), mul(b, c))),
    );
    record(
        Axiom::Annihilation,
        first_failure([n], |[a]| mul(a, z) == z && mul(z, a) == z),
    );
    if z == o {
        record(Axiom::ZeroNeOne, Some(vec![z, o]));
    }
    Ok(AxiomReport::from_violations(v))
}

/// A validated finite semiring with zero at index 0 and one at index 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemiring {
    label: String,
    elements: Vec<String>,
    size: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
}

impl FiniteSemiring {
    /// Validates raw tables and normalizes indices so zero is `0` and one is `1`;
    /// the remaining elements keep their relative order.
    pub fn from_tables(t: SemiringTables) -> Result<Self> {
        let report = check_semiring_axioms(&t)?;
        if !report.passed {
            return Err(Error::Axioms {
                label: t.label,
                report,
            });
        }
        let n = t.size;
        let mut order = vec![t.zero, t.one];
        order.extend((0..n).filter(|&x| x != t.zero && x != t.one));
        let mut pos = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let labels = t
            .elements
            .unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for (a, &oa) in order.iter().enumerate() {
            for (b, &ob) in order.iter().enumerate() {
                add[a * n + b] = pos[t.add[oa][ob]];
                mul[a * n + b] = pos[t.mul[oa][ob]];
            }
        }
        Ok(FiniteSemiring {
            label: t.label,
            elements: order.iter().map(|&o| labels[o].clone()).collect(),
            size: n,
            add,
            mul,
        })
    }

    pub fn to_tables(&self) -> SemiringTables {
        let n = self.size;
        SemiringTables {
            size: n,
            add: (0..n).map(|a| (0..n).map(|b| self.add(a, b)).collect()).collect(),
            mul: (0..n).map(|a| (0..n).map(|b| self.mul(a, b)).collect()).collect(),
            zero: 0,
            one: 1,
            label: self.label.clone(),
            elements: Some(self.elements.clone()),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        1
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn element_label(&self, x: usize) -> &str {
        &self.elements[x]
    }

    pub fn element_labels(&self) -> &[String] {
        &self.elements
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == label)
    }

    /// Same carrier size and operation tables, ignoring every label.
    pub fn same_tables(&self, other: &Self) -> bool {
        self.size == other.size && self.add == other.add && self.mul == other.mul
    }

    pub fn is_additively_idempotent(&self) -> bool {
        (0..self.size).all(|a| self.add(a, a) == a)
    }

    pub fn has_additive_inverses(&self) -> bool {
        (0..self.size).all(|a| (0..self.size).any(|b| self.add(a, b) == 0))
    }

    pub fn cancellative_elements(&self) -> ElemSet {
        monoid::cancellative_elements(self)
    }

    pub fn is_cancellative(&self) -> bool {
        self.cancellative_elements().len() == self.size
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.size).all(|a| (0..self.size).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

impl AdditiveMonoid for FiniteSemiring {
    fn order(&self) -> usize {
        self.size
    }
    fn sum(&self, a: usize, b: usize) -> usize {
        self.add(a, b)
    }
}

fn from_fns(
    label: String,
    elements: Vec<String>,
    zero: usize,
    one: usize,
    add: impl Fn(usize, usize) -> usize,
    mul: impl Fn(usize, usize) -> usize,
) -> Result<FiniteSemiring> {
    let n = elements.len();
    FiniteSemiring::from_tables(SemiringTables {
        size: n,
        add: (0..n).map(|a| (0..n).map(|b| add(a, b)).collect()).collect(),
        mul: (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect(),
        zero,
        one,
        label,
        elements: Some(elements),
    })
}

/// Representative of `v` in `{0..n-1}`: `v` itself below `n`, otherwise the
/// unique `c` with `i <= c < n` and `c ≡ v (mod n - i)`.
pub fn bni_reduce(n: usize, i: usize, v: usize) -> usize {
    if v < n {
        v
    } else {
        i + (v - i) % (n - i)
    }
}

/// The semiring `B(n, i)` on `{0, .., n-1}` with truncated-modular arithmetic.
pub fn build_bni(n: usize, i: usize) -> Result<FiniteSemiring> {
    if n < 2 || i >= n {
        return Err(Error::Parameter(format!(
            "B(n,i) needs n >= 2 and 0 <= i < n, got n={n}, i={i}"
        )));
    }
    from_fns(
        format!("B({n},{i})"),
        (0..n).map(|x| x.to_string()).collect(),
        0,
        1,
        |a, b| bni_reduce(n, i, a + b),
        |a, b| bni_reduce(n, i, a * b),
    )
}

/// Named finite families; also the JSON shorthand `{"family": ...}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Family {
    Boolean,
    Zmod { n: usize },
    ChainLattice { n: usize },
    Bni { n: usize, i: usize },
    Product { factors: Vec<Family> },
    Power { base: Box<Family>, n: usize },
    Matrix { base: Box<Family>, n: usize },
}

pub fn build_named(family: &Family) -> Result<FiniteSemiring> {
    build_named_with_caps(family, &Caps::default())
}

pub fn build_named_with_caps(family: &Family, caps: &Caps) -> Result<FiniteSemiring> {
    match family {
        Family::Boolean => Ok(build_bni(2, 1)?.with_label("boolean")),
        Family::Zmod { n } => {
            if *n < 2 {
                return Err(Error::Parameter(format!("zmod needs n >= 2, got {n}")));
            }
            Ok(build_bni(*n, 0)?.with_label(format!("Z{n}")))
        }
        Family::ChainLattice { n } => {
            let n = *n;
            if n < 2 {
                return Err(Error::Parameter(format!(
                    "chain-lattice needs n >= 2, got {n}"
                )));
            }
            from_fns(
                format!("chain-lattice({n})"),
                (0..n).map(|x| x.to_string()).collect(),
                0,
                n - 1,
                |a, b| a.max(b),
                |a, b| a.min(b),
            )
        }
        Family::Bni { n, i } => build_bni(*n, *i),
        Family::Product { factors } => {
            let built = factors
                .iter()
                .map(|f| build_named_with_caps(f, caps))
                .collect::<Result<Vec<_>>>()?;
            product_semiring(&built, caps)
        }
        Family::Power { base, n } => {
            if *n == 0 {
                return Err(Error::Parameter("power needs n >= 1".into()));
            }
            let b = build_named_with_caps(base, caps)?;
            product_semiring(&vec![b; *n], caps)
        }
        Family::Matrix { base, n } => matrix_semiring(&build_named_with_caps(base, caps)?, *n, caps),
    }
}

fn capped_power(base: usize, exp: usize, cap: usize, what: &str) -> Result<usize> {
    let mut size: u128 = 1;
    for _ in 0..exp {
        size = size.saturating_mul(base as u128);
    }
    if size > cap as u128 {
        return Err(Error::resource(what, size, cap as u128));
    }
    Ok(size as usize)
}

/// Decomposes a mixed-radix index into digits, least significant first.
pub(crate) fn digits(mut x: usize, radices: &[usize]) -> Vec<usize> {
    radices
        .iter()
        .map(|&r| {
            let d = x % r;
            x /= r;
            d
        })
        .collect()
}

pub(crate) fn undigits(ds: &[usize], radices: &[usize]) -> usize {
    ds.iter()
        .zip(radices)
        .rev()
        .fold(0, |acc, (&d, &r)| acc * r + d)
}

/// Componentwise product of finitely many semirings.
pub fn product_semiring(factors: &[FiniteSemiring], caps: &Caps) -> Result<FiniteSemiring> {
    if factors.is_empty() {
        return Err(Error::Parameter("product of an empty list".into()));
    }
    let radices: Vec<usize> = factors.iter().map(|f| f.size()).collect();
    let size = radices
        .iter()
        .try_fold(1usize, |acc, &r| acc.checked_mul(r))
        .filter(|&s| s <= caps.semiring_size)
        .ok_or_else(|| {
            let needed = radices.iter().fold(1u128, |a, &r| a.saturating_mul(r as u128));
            Error::resource("product semiring", needed, caps.semiring_size as u128)
        })?;
    let op = |a: usize, b: usize, mul: bool| {
        let (da, db) = (digits(a, &radices), digits(b, &radices));
        let out: Vec<usize> = factors
            .iter()
            .zip(da.iter().zip(&db))
            .map(|(f, (&x, &y))| if mul { f.mul(x, y) } else { f.add(x, y) })
            .collect();
        undigits(&out, &radices)
    };
    let elements = (0..size)
        .map(|x| {
            let ds = digits(x, &radices);
            let parts: Vec<&str> = factors
                .iter()
                .zip(&ds)
                .map(|(f, &d)| f.element_label(d))
                .collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let label = factors
        .iter()
        .map(|f| f.label().to_string())
        .collect::<Vec<_>>()
        .join(" x ");
    from_fns(
        label,
        elements,
        0,
        undigits(&vec![1; factors.len()], &radices),
        |a, b| op(a, b, false),
        |a, b| op(a, b, true),
    )
}

/// All `n × n` matrices over `base` with entrywise sum and matrix product.
pub fn matrix_semiring(base: &FiniteSemiring, n: usize, caps: &Caps) -> Result<FiniteSemiring> {
    if n == 0 {
        return Err(Error::Parameter("matrix size must be at least 1".into()));
    }
    let size = capped_power(base.size(), n * n, caps.semiring_size, "matrix semiring")?;
    let radices = vec![base.size(); n * n];
    let add = |a: usize, b: usize| {
        let (x, y) = (digits(a, &radices), digits(b, &radices));
        let z: Vec<usize> = x.iter().zip(&y).map(|(&p, &q)| base.add(p, q)).collect();
        undigits(&z, &radices)
    };
    let mul = |a: usize, b: usize| {
        let (x, y) = (digits(a, &radices), digits(b, &radices));
        let mut z = vec![0; n * n];
        for r in 0..n {
            for c in 0..n {
                z[r * n + c] = (0..n).fold(0, |acc, k| {
                    base.add(acc, base.mul(x[r * n + k], y[k * n + c]))
                });
            }
        }
        undigits(&z, &radices)
    };
    let mut id = vec![0; n * n];
    for k in 0..n {
        id[k * n + k] = 1;
    }
    let elements = (0..size)
        .map(|x| {
            let ds = digits(x, &radices);
            let rows: Vec<String> = (0..n)
                .map(|r| {
                    let cells: Vec<&str> = (0..n).map(|c| base.element_label(ds[r * n + c])).collect();
                    format!("[{}]", cells.join(","))
                })
                .collect();
            format!("[{}]", rows.join(","))
        })
        .collect();
    from_fns(
        format!("M{n}({})", base.label()),
        elements,
        0,
        undigits(&id, &radices),
        add,
        mul,
    )
}

/// A pair `(t, t~)` with `t + t~ = 1` and `t t~ = 0 = t~ t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CompPair {
    pub t: usize,
    pub complement: usize,
}

pub fn comp_elements(s: &FiniteSemiring) -> Vec<CompPair> {
    let n = s.size();
    let mut out = Vec::new();
    for t in 0..n {
        for u in 0..n {
            if s.add(t, u) == s.one() && s.mul(t, u) == s.zero() && s.mul(u, t) == s.zero() {
                out.push(CompPair { t, complement: u });
            }
        }
    }
    out
}
