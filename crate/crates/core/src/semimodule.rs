//! Finite left semimodules, their subsemimodules, subtractive closure and
//! Bourne quotients.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::lattice::KIdealLattice;
use crate::monoid::{self, AdditiveMonoid};
use crate::morphism::LinearMap;
use crate::semiring::{check_square, first_failure, digits, undigits, Axiom, AxiomReport, FiniteSemiring, Violation};

/// Unvalidated semimodule tables; `action[s][m]` is `s·m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleTables {
    pub size: usize,
    pub add: Vec<Vec<usize>>,
    pub action: Vec<Vec<usize>>,
    #[serde(default)]
    pub zero: usize,
    #[serde(default)]
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
}

pub fn check_semimodule_axioms(s: &FiniteSemiring, t: &ModuleTables) -> Result<AxiomReport> {
    let n = t.size;
    let k = s.size();
    if n == 0 {
        return Err(Error::Structural("size must be positive".into()));
    }
    check_square("add", &t.add, n, n, n)?;
    check_square("action", &t.action, k, n, n)?;
    if t.zero >= n {
        return Err(Error::Structural(format!("zero={} out of range 0..{n}", t.zero)));
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
    let act = |r: usize, m: usize| t.action[r][m];
    let z = t.zero;
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
        Axiom::ActionIdentity,
        first_failure([n], |[m]| act(s.one(), m) == m),
    );
    record(
        Axiom::ActionAssociativity,
        first_failure([k, k, n], |[r, q, m]| act(s.mul(r, q), m) == act(r, act(q, m))),
    );
    record(
        Axiom::ActionOverElementSum,
        first_failure([k, n, n], |[r, a, b]| act(r, add(a, b)) == add(act(r, a), act(r, b))),
    );
    record(
        Axiom::ActionOverScalarSum,
        first_failure([k, k, n], |[r, q, m]| act(s.add(r, q), m) == add(act(r, m), act(q, m))),
    );
    record(Axiom::ActionByZero, first_failure([k], |[r]| act(r, z) == z));
    record(
        Axiom::ActionOnZero,
        first_failure([n], |[m]| act(s.zero(), m) == z),
    );
    Ok(AxiomReport::from_violations(v))
}

/// A validated finite left semimodule with zero at index 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemimodule {
    scalars: Arc<FiniteSemiring>,
    label: String,
    elements: Vec<String>,
    size: usize,
    add: Vec<usize>,
    action: Vec<usize>,
}

impl FiniteSemimodule {
    pub fn from_tables(scalars: Arc<FiniteSemiring>, t: ModuleTables) -> Result<Self> {
        let report = check_semimodule_axioms(&scalars, &t)?;
        if !report.passed {
            return Err(Error::Axioms {
                label: t.label,
                report,
            });
        }
        let n = t.size;
        let mut order = vec![t.zero];
        order.extend((0..n).filter(|&x| x != t.zero));
        let mut pos = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let labels = t
            .elements
            .unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
        let k = scalars.size();
        let mut add = vec![0; n * n];
        let mut action = vec![0; k * n];
        for (a, &oa) in order.iter().enumerate() {
            for (b, &ob) in order.iter().enumerate() {
                add[a * n + b] = pos[t.add[oa][ob]];
            }
            for r in 0..k {
                action[r * n + a] = pos[t.action[r][oa]];
            }
        }
        Ok(FiniteSemimodule {
            scalars,
            label: t.label,
            elements: order.iter().map(|&o| labels[o].clone()).collect(),
            size: n,
            add,
            action,
        })
    }

    fn from_fns(
        scalars: Arc<FiniteSemiring>,
        label: String,
        elements: Vec<String>,
        add: impl Fn(usize, usize) -> usize,
        act: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = elements.len();
        let k = scalars.size();
        Self::from_tables(
            scalars,
            ModuleTables {
                size: n,
                add: (0..n).map(|a| (0..n).map(|b| add(a, b)).collect()).collect(),
                action: (0..k).map(|r| (0..n).map(|m| act(r, m)).collect()).collect(),
                zero: 0,
                label,
                elements: Some(elements),
            },
        )
    }

    pub fn to_tables(&self) -> ModuleTables {
        let n = self.size;
        ModuleTables {
            size: n,
            add: (0..n).map(|a| (0..n).map(|b| self.add(a, b)).collect()).collect(),
            action: (0..self.scalars.size())
                .map(|r| (0..n).map(|m| self.act(r, m)).collect())
                .collect(),
            zero: 0,
            label: self.label.clone(),
            elements: Some(self.elements.clone()),
        }
    }

    /// The semiring as a left module over itself.
    pub fn regular(s: Arc<FiniteSemiring>) -> Self {
        let n = s.size();
        FiniteSemimodule {
            label: format!("{} (regular)", s.label()),
            elements: s.element_labels().to_vec(),
            size: n,
            add: (0..n * n).map(|i| s.add(i / n, i % n)).collect(),
            action: (0..n * n).map(|i| s.mul(i / n, i % n)).collect(),
            scalars: s,
        }
    }

    pub fn zero_module(s: Arc<FiniteSemiring>) -> Self {
        FiniteSemimodule {
            label: "0".into(),
            elements: vec!["0".into()],
            size: 1,
            add: vec![0],
            action: vec![0; s.size()],
            scalars: s,
        }
    }

    /// `S^n` with componentwise operations; coordinate 1 is the least
    /// significant digit of the index.
    pub fn power(s: Arc<FiniteSemiring>, n: usize, caps: &Caps) -> Result<Self> {
        if n == 0 {
            return Ok(Self::zero_module(s));
        }
        let regular = Arc::new(Self::regular(s.clone()));
        let mut out = Self::direct_sum(&vec![regular; n], caps)?;
        out.label = format!("{}^{n}", s.label());
        Ok(out)
    }

    /// External direct sum of modules over the same scalars.
    pub fn direct_sum(parts: &[Arc<FiniteSemimodule>], caps: &Caps) -> Result<Self> {
        let first = parts
            .first()
            .ok_or_else(|| Error::Parameter("direct sum of an empty list".into()))?;
        if parts.iter().any(|p| p.scalars != first.scalars) {
            return Err(Error::Precondition(
                "direct summands have different scalar semirings".into(),
            ));
        }
        let radices: Vec<usize> = parts.iter().map(|p| p.size).collect();
        let needed = radices.iter().fold(1u128, |a, &r| a.saturating_mul(r as u128));
        if needed > caps.module_size as u128 {
            return Err(Error::resource("direct sum", needed, caps.module_size as u128));
        }
        let size = needed as usize;
        let elements = (0..size)
            .map(|x| {
                let ds = digits(x, &radices);
                let parts: Vec<&str> = parts
                    .iter()
                    .zip(&ds)
                    .map(|(p, &d)| p.element_label(d))
                    .collect();
                format!("({})", parts.join(","))
            })
            .collect();
        let label = parts
            .iter()
            .map(|p| p.label.clone())
            .collect::<Vec<_>>()
            .join(" + ");
        let add = |a: usize, b: usize| {
            let (x, y) = (digits(a, &radices), digits(b, &radices));
            let z: Vec<usize> = parts
                .iter()
                .zip(x.iter().zip(&y))
                .map(|(p, (&u, &v))| p.add(u, v))
                .collect();
            undigits(&z, &radices)
        };
        let act = |r: usize, m: usize| {
            let x = digits(m, &radices);
            let z: Vec<usize> = parts.iter().zip(&x).map(|(p, &u)| p.act(r, u)).collect();
            undigits(&z, &radices)
        };
        Self::from_fns(first.scalars.clone(), label, elements, add, act)
    }

    pub fn scalars(&self) -> &Arc<FiniteSemiring> {
        &self.scalars
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    /// `s·m`.
    #[inline]
    pub fn act(&self, s: usize, m: usize) -> usize {
        self.action[s * self.size + m]
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

    /// Like [`index_of`](Self::index_of) but panics on unknown labels.
    pub fn el(&self, label: &str) -> usize {
        self.index_of(label)
            .unwrap_or_else(|| panic!("no element labelled {label:?} in {}", self.label))
    }

    pub fn same_tables(&self, other: &Self) -> bool {
        self.size == other.size
            && self.add == other.add
            && self.action == other.action
            && self.scalars.same_tables(&other.scalars)
    }

    pub fn cancellative_elements(&self) -> ElemSet {
        monoid::cancellative_elements(self)
    }

    pub fn is_cancellative(&self) -> bool {
        self.cancellative_elements().len() == self.size
    }

    /// A subset of indices by element label; panics on unknown labels.
    pub fn sub(&self, labels: &[&str]) -> Subsemimodule {
        Subsemimodule::new(self, labels.iter().map(|l| self.el(l)))
            .unwrap_or_else(|e| panic!("{labels:?} is not a subsemimodule: {e}"))
    }

    /// The subsemimodule as a module in its own right, with its inclusion.
    ///
    /// Members keep their relative order, so zero stays at index 0.
    pub fn restrict(self: &Arc<Self>, l: &Subsemimodule) -> Result<(Arc<Self>, LinearMap)> {
        l.check_parent(self)?;
        let members = l.members();
        let mut pos = vec![usize::MAX; self.size];
        for (i, &m) in members.iter().enumerate() {
            pos[m] = i;
        }
        let sub = FiniteSemimodule {
            scalars: self.scalars.clone(),
            label: format!("{} <= {}", l.set(), self.label),
            elements: members.iter().map(|&m| self.elements[m].clone()).collect(),
            size: members.len(),
            add: members
                .iter()
                .flat_map(|&a| members.iter().map(move |&b| (a, b)))
                .map(|(a, b)| pos[self.add(a, b)])
                .collect(),
            action: (0..self.scalars.size())
                .flat_map(|r| members.iter().map(move |&m| (r, m)))
                .map(|(r, m)| pos[self.act(r, m)])
                .collect(),
        };
        let sub = Arc::new(sub);
        let inclusion = LinearMap::new(sub.clone(), self.clone(), members)?;
        Ok((sub, inclusion))
    }
}

impl AdditiveMonoid for FiniteSemimodule {
    fn order(&self) -> usize {
        self.size
    }
    fn sum(&self, a: usize, b: usize) -> usize {
        self.add(a, b)
    }
}

impl fmt::Display for FiniteSemimodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} elements over {})", self.label, self.size, self.scalars.label())
    }
}

/// A subset of a semimodule carrier that contains zero and is closed under
/// addition and the scalar action. Identity is the member set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subsemimodule {
    members: ElemSet,
}

impl Subsemimodule {
    /// Validates closure; the error names the first failing element.
    pub fn new(m: &FiniteSemimodule, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut set = ElemSet::empty(m.size());
        for x in members {
            if x >= m.size() {
                return Err(Error::Precondition(format!(
                    "element {x} outside carrier of size {}",
                    m.size()
                )));
            }
            set.insert(x);
        }
        Self::from_set(m, set)
    }

    pub fn from_set(m: &FiniteSemimodule, set: ElemSet) -> Result<Self> {
        if set.universe() != m.size() {
            return Err(Error::Precondition(format!(
                "subset of a {}-element carrier used with a {}-element module",
                set.universe(),
                m.size()
            )));
        }
        if !set.contains(0) {
            return Err(Error::Precondition("subset does not contain zero".into()));
        }
        for a in set.iter() {
            for b in set.iter() {
                if !set.contains(m.add(a, b)) {
                    return Err(Error::Precondition(format!(
                        "not closed under addition: {a} + {b} = {}",
                        m.add(a, b)
                    )));
                }
            }
            for r in 0..m.scalars().size() {
                if !set.contains(m.act(r, a)) {
                    return Err(Error::Precondition(format!(
                        "not closed under the action: {r}·{a} = {}",
                        m.act(r, a)
                    )));
                }
            }
        }
        Ok(Subsemimodule { members: set })
    }

    /// Caller guarantees closure.
    pub(crate) fn trusted(members: ElemSet) -> Self {
        Subsemimodule { members }
    }

    pub fn zero(m: &FiniteSemimodule) -> Self {
        Subsemimodule::trusted(ElemSet::from_iter(m.size(), [0]))
    }

    pub fn full(m: &FiniteSemimodule) -> Self {
        Subsemimodule::trusted(ElemSet::full(m.size()))
    }

    pub fn set(&self) -> &ElemSet {
        &self.members
    }

    /// Sorted member indices.
    pub fn members(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Subsemimodule::trusted(self.members.intersection(&other.members))
    }

    /// `self + other = {a + b}`.
    pub fn sum(&self, m: &FiniteSemimodule, other: &Self) -> Self {
        Subsemimodule::trusted(monoid::sum_set(m, &self.members, &other.members))
    }

    pub(crate) fn check_parent(&self, m: &FiniteSemimodule) -> Result<()> {
        if self.members.universe() != m.size() {
            return Err(Error::Precondition(format!(
                "subsemimodule of a {}-element carrier used with a {}-element module",
                self.members.universe(),
                m.size()
            )));
        }
        Ok(())
    }

    pub fn display(&self, m: &FiniteSemimodule) -> String {
        let parts: Vec<&str> = self.members.iter().map(|x| m.element_label(x)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// Least subsemimodule containing `gens`.
pub fn generate_subsemimodule(m: &FiniteSemimodule, gens: impl IntoIterator<Item = usize>) -> Subsemimodule {
    let mut set = ElemSet::from_iter(m.size(), [0]);
    let mut queue = Vec::new();
    for g in gens {
        if set.insert(g) {
            queue.push(g);
        }
    }
    close_from(m, &mut set, queue);
    Subsemimodule::trusted(set)
}

/// Extends `set` (assumed closed apart from `queue`) to a subsemimodule.
fn close_from(m: &FiniteSemimodule, set: &mut ElemSet, mut queue: Vec<usize>) {
    let mut done: Vec<usize> = set.iter().filter(|x| !queue.contains(x)).collect();
    while let Some(x) = queue.pop() {
        done.push(x);
        for r in 0..m.scalars().size() {
            let y = m.act(r, x);
            if set.insert(y) {
                queue.push(y);
            }
        }
        for i in 0..done.len() {
            let y = m.add(x, done[i]);
            if set.insert(y) {
                queue.push(y);
            }
        }
    }
}

/// `L̄ = {m : m + l = l' for some l, l' in L}`.
pub fn subtractive_closure(m: &FiniteSemimodule, l: &Subsemimodule) -> Result<Subsemimodule> {
    l.check_parent(m)?;
    Ok(Subsemimodule::trusted(monoid::subtractive_closure(m, l.set())))
}

pub fn is_subtractive(m: &FiniteSemimodule, l: &Subsemimodule) -> bool {
    l.check_parent(m).is_ok() && monoid::subtractivity_witness(m, l.set()).is_none()
}

/// Errors with [`Error::NotSubtractive`] carrying the first witness.
pub fn require_subtractive(m: &FiniteSemimodule, l: &Subsemimodule) -> Result<()> {
    l.check_parent(m)?;
    match monoid::subtractivity_witness(m, l.set()) {
        None => Ok(()),
        Some((element, ell, ell_prime)) => Err(Error::NotSubtractive {
            element,
            ell,
            ell_prime,
        }),
    }
}

/// Bourne factor semimodule `M/L` and its canonical projection.
///
/// Classes are numbered by least member, so the class of zero is `0`.
pub fn bourne_quotient(
    m: &Arc<FiniteSemimodule>,
    l: &Subsemimodule,
) -> Result<(Arc<FiniteSemimodule>, LinearMap)> {
    l.check_parent(m)?;
    let class = monoid::bourne_classes(m.as_ref(), l.set());
    let count = class.iter().max().map_or(0, |c| c + 1);
    let mut rep = vec![usize::MAX; count];
    for (x, &c) in class.iter().enumerate() {
        if rep[c] == usize::MAX {
            rep[c] = x;
        }
    }
    let k = m.scalars().size();
    let q = FiniteSemimodule {
        scalars: m.scalars().clone(),
        label: format!("{} / {}", m.label(), l.set()),
        elements: rep.iter().map(|&r| format!("[{}]", m.element_label(r))).collect(),
        size: count,
        add: (0..count * count)
            .map(|i| class[m.add(rep[i / count], rep[i % count])])
            .collect(),
        action: (0..k * count)
            .map(|i| class[m.act(i / count, rep[i % count])])
            .collect(),
    };
    let q = Arc::new(q);
    let pi = LinearMap::new(m.clone(), q.clone(), class)?;
    Ok((q, pi))
}

fn cyclic_sets(m: &FiniteSemimodule) -> Vec<ElemSet> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for x in 1..m.size() {
        let c = generate_subsemimodule(m, [x]).members;
        if seen.insert(c.clone()) {
            out.push(c);
        }
    }
    out
}

/// Closes `{0}` under `join(a, gen)` for every generator.
fn join_closure(
    caps: &Caps,
    bottom: ElemSet,
    gens: &[ElemSet],
    join: impl Fn(&ElemSet, &ElemSet) -> ElemSet,
) -> Result<Vec<ElemSet>> {
    let mut seen: HashSet<ElemSet> = HashSet::new();
    seen.insert(bottom.clone());
    let mut queue = vec![bottom];
    for g in gens {
        if seen.insert(g.clone()) {
            queue.push(g.clone());
        }
    }
    while let Some(a) = queue.pop() {
        for g in gens {
            if g.is_subset(&a) {
                continue;
            }
            let b = join(&a, g);
            if seen.insert(b.clone()) {
                if seen.len() > caps.lattice_nodes {
                    return Err(Error::resource(
                        "lattice enumeration (nodes)",
                        seen.len() as u128,
                        caps.lattice_nodes as u128,
                    ));
                }
                queue.push(b);
            }
        }
    }
    let mut out: Vec<ElemSet> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Every subsemimodule, in canonical order (cardinality, then members).
///
/// Built as the closure of the cyclic subsemimodules under sums.
pub fn enumerate_subsemimodules(m: &FiniteSemimodule, caps: &Caps) -> Result<Vec<Subsemimodule>> {
    caps.check_module("subsemimodule enumeration", m.size())?;
    let gens = cyclic_sets(m);
    let sets = join_closure(caps, ElemSet::from_iter(m.size(), [0]), &gens, |a, b| {
        monoid::sum_set(m, a, b)
    })?;
    Ok(sets.into_iter().map(Subsemimodule::trusted).collect())
}

/// Every subtractive subsemimodule, in canonical order.
///
/// Joins in the k-lattice are `closure(A + B)`, and every subtractive `L`
/// is the iterated k-join of the closures of its cyclic subsemimodules.
pub fn enumerate_k_subsemimodules(m: &FiniteSemimodule, caps: &Caps) -> Result<Vec<Subsemimodule>> {
    caps.check_module("k-subsemimodule enumeration", m.size())?;
    let mut seen = HashSet::new();
    let gens: Vec<ElemSet> = cyclic_sets(m)
        .iter()
        .map(|c| monoid::subtractive_closure(m, c))
        .filter(|c| seen.insert(c.clone()))
        .collect();
    let sets = join_closure(caps, ElemSet::from_iter(m.size(), [0]), &gens, |a, b| {
        monoid::subtractive_closure(m, &monoid::sum_set(m, a, b))
    })?;
    Ok(sets.into_iter().map(Subsemimodule::trusted).collect())
}

pub fn k_ideal_lattice(m: &FiniteSemimodule, caps: &Caps) -> Result<KIdealLattice> {
    let nodes = enumerate_k_subsemimodules(m, caps)?;
    Ok(KIdealLattice::from_nodes(nodes, m.element_labels().to_vec()))
}

/// Lattice of all subsemimodules.
pub fn subsemimodule_lattice(m: &FiniteSemimodule, caps: &Caps) -> Result<KIdealLattice> {
    let nodes = enumerate_subsemimodules(m, caps)?;
    Ok(KIdealLattice::from_nodes(nodes, m.element_labels().to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{build_bni, build_named, Family};

    fn bool2() -> Arc<FiniteSemimodule> {
        let b = Arc::new(build_named(&Family::Boolean).unwrap());
        Arc::new(FiniteSemimodule::power(b, 2, &Caps::default()).unwrap())
    }

    #[test]
    fn power_labels_and_zero() {
        let m = bool2();
        assert_eq!(m.element_labels(), &["(0,0)", "(1,0)", "(0,1)", "(1,1)"]);
        assert_eq!(m.add(m.el("(1,0)"), m.el("(0,1)")), m.el("(1,1)"));
    }

    #[test]
    fn generate_examples() {
        let m = bool2();
        assert_eq!(generate_subsemimodule(&m, [m.el("(1,1)")]), m.sub(&["(0,0)", "(1,1)"]));
        assert_eq!(generate_subsemimodule(&m, []), Subsemimodule::zero(&m));
        assert_eq!(
            generate_subsemimodule(&m, [m.el("(1,0)"), m.el("(0,1)")]),
            Subsemimodule::full(&m)
        );
    }

    #[test]
    fn closure_examples() {
        let m = bool2();
        let diag = m.sub(&["(0,0)", "(1,1)"]);
        assert_eq!(subtractive_closure(&m, &diag).unwrap(), Subsemimodule::full(&m));
        assert!(!is_subtractive(&m, &diag));
        let axis = m.sub(&["(0,0)", "(0,1)"]);
        assert_eq!(subtractive_closure(&m, &axis).unwrap(), axis);
        assert!(is_subtractive(&m, &axis));
        assert!(is_subtractive(&m, &Subsemimodule::full(&m)));
        assert_eq!(
            require_subtractive(&m, &diag),
            Err(Error::NotSubtractive {
                element: m.el("(1,0)"),
                ell: m.el("(1,1)"),
                ell_prime: m.el("(1,1)"),
            })
        );
    }

    #[test]
    fn zero_is_subtractive_in_a_cancellative_module() {
        let z5 = Arc::new(build_bni(5, 0).unwrap());
        let m = FiniteSemimodule::regular(z5);
        assert!(m.is_cancellative());
        let z = Subsemimodule::zero(&m);
        assert_eq!(subtractive_closure(&m, &z).unwrap(), z);
    }

    #[test]
    fn non_closed_subset_is_rejected() {
        let m = bool2();
        let e = Subsemimodule::new(&m, [0, m.el("(1,0)"), m.el("(0,1)")]);
        assert!(matches!(e, Err(Error::Precondition(_))));
    }

    #[test]
    fn quotient_examples() {
        let m = bool2();
        let axis = m.sub(&["(0,0)", "(0,1)"]);
        let (q, pi) = bourne_quotient(&m, &axis).unwrap();
        assert_eq!(q.size(), 2);
        let b = build_named(&Family::Boolean).unwrap();
        assert!(q.same_tables(&FiniteSemimodule::regular(Arc::new(b))));
        assert_eq!(pi.table(), &[0, 1, 0, 1]);

        let (q, _) = bourne_quotient(&m, &Subsemimodule::full(&m)).unwrap();
        assert_eq!(q.size(), 1);

        let z4 = Arc::new(FiniteSemimodule::regular(Arc::new(build_bni(4, 0).unwrap())));
        let (q, _) = bourne_quotient(&z4, &Subsemimodule::zero(&z4)).unwrap();
        assert!(q.same_tables(&z4));
    }

    #[test]
    fn enumeration_counts() {
        let caps = Caps::default();
        let m = bool2();
        assert_eq!(enumerate_subsemimodules(&m, &caps).unwrap().len(), 7);
        let b = Arc::new(build_named(&Family::Boolean).unwrap());
        let r = FiniteSemimodule::regular(b.clone());
        assert_eq!(enumerate_subsemimodules(&r, &caps).unwrap().len(), 2);
        let z = FiniteSemimodule::zero_module(b);
        assert_eq!(enumerate_subsemimodules(&z, &caps).unwrap().len(), 1);
    }

    #[test]
    fn module_cap_is_enforced() {
        let caps = Caps {
            module_size: 3,
            ..Caps::default()
        };
        assert!(matches!(
            enumerate_subsemimodules(&bool2(), &caps),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn bool2_k_lattice() {
        let m = bool2();
        let lat = k_ideal_lattice(&m, &Caps::default()).unwrap();
        assert_eq!(lat.nodes().len(), 4);
        assert_eq!(lat.height(), 2);
        assert_eq!(lat.covers().len(), 4);
    }

    #[test]
    fn module_axiom_failure_is_reported() {
        let b = Arc::new(build_named(&Family::Boolean).unwrap());
        let mut t = FiniteSemimodule::regular(b.clone()).to_tables();
        t.action[0][1] = 1;
        let r = check_semimodule_axioms(&b, &t).unwrap();
        assert_eq!(r.violation(Axiom::ActionOnZero).unwrap().witness, vec![1]);
    }
}
