//! Linear maps, normality predicates, exactness of sequences, Hom-monoids
//! and extension search.
//!
//! Composition is written `g.after(f)`, meaning `m ↦ g(f(m))`.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::monoid::{self, AdditiveMonoid};
use crate::semimodule::{bourne_quotient, generate_subsemimodule, FiniteSemimodule, Subsemimodule};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    source: Arc<FiniteSemimodule>,
    target: Arc<FiniteSemimodule>,
    table: Vec<usize>,
}

fn same_module(a: &Arc<FiniteSemimodule>, b: &Arc<FiniteSemimodule>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl LinearMap {
    /// Validates totality, range and linearity.
    pub fn new(
        source: Arc<FiniteSemimodule>,
        target: Arc<FiniteSemimodule>,
        table: Vec<usize>,
    ) -> Result<Self> {
        if source.scalars() != target.scalars() {
            return Err(Error::Precondition(
                "source and target have different scalar semirings".into(),
            ));
        }
        if table.len() != source.size() {
            return Err(Error::Precondition(format!(
                "map table has {} entries for a {}-element source",
                table.len(),
                source.size()
            )));
        }
        if let Some((x, &v)) = table.iter().enumerate().find(|(_, &v)| v >= target.size()) {
            return Err(Error::Precondition(format!(
                "f({x}) = {v} outside a {}-element target",
                target.size()
            )));
        }
        if table[0] != 0 {
            return Err(Error::Precondition(format!("f(0) = {} is not zero", table[0])));
        }
        let n = source.size();
        for a in 0..n {
            for b in a..n {
                if table[source.add(a, b)] != target.add(table[a], table[b]) {
                    return Err(Error::Precondition(format!(
                        "not additive: f({a} + {b}) != f({a}) + f({b})"
                    )));
                }
            }
            for r in 0..source.scalars().size() {
                if table[source.act(r, a)] != target.act(r, table[a]) {
                    return Err(Error::Precondition(format!(
                        "not linear: f({r}·{a}) != {r}·f({a})"
                    )));
                }
            }
        }
        Ok(LinearMap {
            source,
            target,
            table,
        })
    }

    pub(crate) fn trusted(
        source: Arc<FiniteSemimodule>,
        target: Arc<FiniteSemimodule>,
        table: Vec<usize>,
    ) -> Self {
        LinearMap {
            source,
            target,
            table,
        }
    }

    pub fn identity(m: Arc<FiniteSemimodule>) -> Self {
        let table = (0..m.size()).collect();
        LinearMap::trusted(m.clone(), m, table)
    }

    pub fn zero_map(source: Arc<FiniteSemimodule>, target: Arc<FiniteSemimodule>) -> Self {
        let table = vec![0; source.size()];
        LinearMap::trusted(source, target, table)
    }

    pub fn source(&self) -> &Arc<FiniteSemimodule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteSemimodule> {
        &self.target
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &LinearMap) -> Result<LinearMap> {
        if !same_module(&first.target, &self.source) {
            return Err(Error::Precondition("maps are not composable".into()));
        }
        let table = first.table.iter().map(|&x| self.table[x]).collect();
        Ok(LinearMap::trusted(first.source.clone(), self.target.clone(), table))
    }

    pub fn kernel(&self) -> Subsemimodule {
        Subsemimodule::trusted(ElemSet::from_iter(
            self.source.size(),
            (0..self.source.size()).filter(|&x| self.table[x] == 0),
        ))
    }

    pub fn image(&self) -> Subsemimodule {
        Subsemimodule::trusted(ElemSet::from_iter(
            self.target.size(),
            self.table.iter().copied(),
        ))
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.source.size()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.target.size()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapInvariants {
    pub kernel: Subsemimodule,
    pub image: Subsemimodule,
    pub image_closure: Subsemimodule,
}

pub fn map_invariants(f: &LinearMap) -> MapInvariants {
    let image = f.image();
    let image_closure = Subsemimodule::trusted(monoid::subtractive_closure(
        f.target.as_ref(),
        image.set(),
    ));
    MapInvariants {
        kernel: f.kernel(),
        image,
        image_closure,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Normality {
    pub k_normal: bool,
    pub i_normal: bool,
    pub normal: bool,
    /// `(m, m')` with equal images but not related through the kernel.
    pub k_witness: Option<(usize, usize)>,
    /// An element of the image's closure outside the image.
    pub i_witness: Option<usize>,
}

/// First pair `m < m'` with `f(m) = f(m')` but no `k, k'` in the kernel of
/// `table` with `m + k = m' + k'`.
fn k_normal_witness<M: AdditiveMonoid + ?Sized>(source: &M, table: &[usize]) -> Option<(usize, usize)> {
    let kernel = ElemSet::from_iter(source.order(), (0..source.order()).filter(|&x| table[x] == 0));
    let class = monoid::bourne_classes(source, &kernel);
    let n = source.order();
    (0..n).find_map(|a| {
        (a + 1..n)
            .find(|&b| table[a] == table[b] && class[a] != class[b])
            .map(|b| (a, b))
    })
}

pub fn normality(f: &LinearMap) -> Normality {
    let k_witness = k_normal_witness(f.source.as_ref(), &f.table);
    let inv = map_invariants(f);
    let i_witness = inv.image_closure.set().first_outside(inv.image.set());
    Normality {
        k_normal: k_witness.is_none(),
        i_normal: i_witness.is_none(),
        normal: k_witness.is_none() && i_witness.is_none(),
        k_witness,
        i_witness,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ImageKernelMismatch {
    /// In the kernel of the outgoing map but not hit by the incoming map.
    InKernelNotImage(usize),
    /// Hit by the incoming map but not killed by the outgoing map.
    InImageNotKernel(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JunctionVerdict {
    pub image_equals_kernel: bool,
    pub k_normal: bool,
    pub image_witness: Option<ImageKernelMismatch>,
    pub k_normal_witness: Option<(usize, usize)>,
}

impl JunctionVerdict {
    pub fn exact(&self) -> bool {
        self.image_equals_kernel && self.k_normal
    }
}

/// Exactness of `A -incoming-> mid -outgoing-> C` at `mid`: the image of
/// `incoming` equals the kernel of `outgoing`, and `outgoing` is k-normal.
pub fn junction<M: AdditiveMonoid + ?Sized>(incoming: &[usize], mid: &M, outgoing: &[usize]) -> JunctionVerdict {
    let n = mid.order();
    let image = ElemSet::from_iter(n, incoming.iter().copied());
    let kernel = ElemSet::from_iter(n, (0..n).filter(|&x| outgoing[x] == 0));
    let image_witness = kernel
        .first_outside(&image)
        .map(ImageKernelMismatch::InKernelNotImage)
        .or_else(|| image.first_outside(&kernel).map(ImageKernelMismatch::InImageNotKernel));
    let k_normal_witness = k_normal_witness(mid, outgoing);
    JunctionVerdict {
        image_equals_kernel: image_witness.is_none(),
        k_normal: k_normal_witness.is_none(),
        image_witness,
        k_normal_witness,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShortExactReport {
    pub first_normal_mono: bool,
    pub last_surjective: bool,
    pub last_k_normal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceVerdict {
    pub exact: bool,
    /// Junction `i` sits at the target of map `i`.
    pub junctions: Vec<JunctionVerdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub short: Option<ShortExactReport>,
}

impl SequenceVerdict {
    fn from_junctions(junctions: Vec<JunctionVerdict>, short: Option<ShortExactReport>) -> Self {
        SequenceVerdict {
            exact: junctions.iter().all(JunctionVerdict::exact),
            junctions,
            short,
        }
    }
}

/// Checks every three-term window of the sequence.
pub fn check_exact(seq: &[LinearMap]) -> Result<SequenceVerdict> {
    if seq.len() < 2 {
        return Err(Error::Precondition(
            "an exactness check needs at least two maps".into(),
        ));
    }
    for (i, w) in seq.windows(2).enumerate() {
        if !same_module(&w[0].target, &w[1].source) {
            return Err(Error::Precondition(format!(
                "map {i} does not land in the source of map {}",
                i + 1
            )));
        }
    }
    let junctions = seq
        .windows(2)
        .map(|w| junction(&w[0].table, w[0].target.as_ref(), &w[1].table))
        .collect();
    let short = (seq.len() == 4 && seq[0].source.size() == 1 && seq[3].target.size() == 1).then(|| {
        let (f, g) = (&seq[1], &seq[2]);
        let nf = normality(f);
        ShortExactReport {
            first_normal_mono: f.is_injective() && nf.normal,
            last_surjective: g.is_surjective(),
            last_k_normal: normality(g).k_normal,
        }
    });
    Ok(SequenceVerdict::from_junctions(junctions, short))
}

/// `0 → L -f-> M -g-> N → 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortExactSequence {
    first: LinearMap,
    second: LinearMap,
}

impl ShortExactSequence {
    /// Only composability is checked here; exactness is [`verdict`](Self::verdict)'s job.
    pub fn new(first: LinearMap, second: LinearMap) -> Result<Self> {
        if !same_module(&first.target, &second.source) {
            return Err(Error::Precondition("maps are not composable".into()));
        }
        Ok(ShortExactSequence { first, second })
    }

    /// `0 → L → M → M/L → 0` with the inclusion and the Bourne projection.
    pub fn bourne(m: &Arc<FiniteSemimodule>, l: &Subsemimodule) -> Result<Self> {
        let (_, inclusion) = m.restrict(l)?;
        let (_, pi) = bourne_quotient(m, l)?;
        ShortExactSequence::new(inclusion, pi)
    }

    pub fn first(&self) -> &LinearMap {
        &self.first
    }

    pub fn second(&self) -> &LinearMap {
        &self.second
    }

    /// The four maps `0 → L`, `f`, `g`, `N → 0`.
    pub fn maps(&self) -> Vec<LinearMap> {
        let scalars = self.first.source.scalars().clone();
        let zero = Arc::new(FiniteSemimodule::zero_module(scalars));
        vec![
            LinearMap::zero_map(zero.clone(), self.first.source.clone()),
            self.first.clone(),
            self.second.clone(),
            LinearMap::zero_map(self.second.target.clone(), zero),
        ]
    }

    pub fn verdict(&self) -> SequenceVerdict {
        check_exact(&self.maps()).expect("maps of a short sequence are composable")
    }
}

/// Greedy irredundant generating set.
pub fn generating_set(m: &FiniteSemimodule) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut span = generate_subsemimodule(m, []);
    for x in 1..m.size() {
        if !span.contains(x) {
            gens.push(x);
            span = generate_subsemimodule(m, gens.iter().copied());
        }
    }
    let mut i = 0;
    while i < gens.len() {
        let others = gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &g)| g);
        if generate_subsemimodule(m, others).len() == m.size() {
            gens.remove(i);
        } else {
            i += 1;
        }
    }
    gens
}

const UNSET: usize = usize::MAX;

/// A partial linear map closed under the consequences of its assignments.
#[derive(Clone)]
struct PartialMap<'a> {
    source: &'a FiniteSemimodule,
    target: &'a FiniteSemimodule,
    image: Vec<usize>,
    done: Vec<usize>,
}

impl<'a> PartialMap<'a> {
    fn new(source: &'a FiniteSemimodule, target: &'a FiniteSemimodule) -> Self {
        let mut p = PartialMap {
            source,
            target,
            image: vec![UNSET; source.size()],
            done: Vec::new(),
        };
        let ok = p.assign(0, 0);
        debug_assert!(ok);
        p
    }

    fn set(&mut self, x: usize, v: usize, queue: &mut Vec<usize>) -> bool {
        if self.image[x] == UNSET {
            self.image[x] = v;
            queue.push(x);
            true
        } else {
            self.image[x] == v
        }
    }

    /// Assigns `x ↦ v` and propagates additivity and linearity; false on conflict.
    fn assign(&mut self, x: usize, v: usize) -> bool {
        let mut queue = Vec::new();
        if !self.set(x, v, &mut queue) {
            return false;
        }
        while let Some(y) = queue.pop() {
            self.done.push(y);
            let fy = self.image[y];
            for r in 0..self.source.scalars().size() {
                if !self.set(self.source.act(r, y), self.target.act(r, fy), &mut queue) {
                    return false;
                }
            }
            for i in 0..self.done.len() {
                let d = self.done[i];
                let (z, w) = (self.source.add(y, d), self.target.add(fy, self.image[d]));
                if !self.set(z, w, &mut queue) {
                    return false;
                }
            }
        }
        true
    }
}

fn search_budget(free: usize, target: usize, caps: &Caps, what: &str) -> Result<()> {
    let mut needed: u128 = 1;
    for _ in 0..free {
        needed = needed.saturating_mul(target as u128);
    }
    if needed > caps.hom_search {
        return Err(Error::resource(what, needed, caps.hom_search));
    }
    Ok(())
}

/// Depth-first over generator images in increasing order. `visit` returns
/// true to stop the search.
fn backtrack(p: PartialMap<'_>, gens: &[usize], visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    let Some((&g, rest)) = gens.split_first() else {
        return visit(&p.image);
    };
    if p.image[g] != UNSET {
        return backtrack(p, rest, visit);
    }
    for v in 0..p.target.size() {
        let mut q = p.clone();
        if q.assign(g, v) && backtrack(q, rest, visit) {
            return true;
        }
    }
    false
}

/// `Hom_S(M, N)` with pointwise addition. Maps are sorted by table, so the
/// zero map is element `0`.
#[derive(Debug, Clone)]
pub struct HomMonoid {
    source: Arc<FiniteSemimodule>,
    target: Arc<FiniteSemimodule>,
    tables: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    add: Vec<usize>,
}

impl HomMonoid {
    pub fn source(&self) -> &Arc<FiniteSemimodule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteSemimodule> {
        &self.target
    }

    pub fn len(&self) -> usize {
        self.tables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }

    pub fn tables(&self) -> &[Vec<usize>] {
        &self.tables
    }

    pub fn map(&self, i: usize) -> LinearMap {
        LinearMap::trusted(self.source.clone(), self.target.clone(), self.tables[i].clone())
    }

    pub fn maps(&self) -> impl Iterator<Item = LinearMap> + '_ {
        (0..self.len()).map(|i| self.map(i))
    }

    pub fn index_of(&self, table: &[usize]) -> Option<usize> {
        self.index.get(table).copied()
    }

    pub fn add_table(&self) -> &[usize] {
        &self.add
    }
}

impl AdditiveMonoid for HomMonoid {
    fn order(&self) -> usize {
        self.tables.len()
    }
    fn sum(&self, a: usize, b: usize) -> usize {
        self.add[a * self.tables.len() + b]
    }
}

pub fn hom_monoid(
    source: &Arc<FiniteSemimodule>,
    target: &Arc<FiniteSemimodule>,
    caps: &Caps,
) -> Result<HomMonoid> {
    if source.scalars() != target.scalars() {
        return Err(Error::Precondition(
            "Hom between modules over different semirings".into(),
        ));
    }
    let gens = generating_set(source);
    search_budget(gens.len(), target.size(), caps, "Hom enumeration")?;
    let mut tables = Vec::new();
    backtrack(PartialMap::new(source, target), &gens, &mut |t| {
        tables.push(t.to_vec());
        false
    });
    tables.sort();
    let index: HashMap<Vec<usize>, usize> = tables
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect();
    let n = tables.len();
    let mut add = vec![0; n * n];
    for a in 0..n {
        for b in a..n {
            let s: Vec<usize> = tables[a]
                .iter()
                .zip(&tables[b])
                .map(|(&x, &y)| target.add(x, y))
                .collect();
            let k = index[&s];
            add[a * n + b] = k;
            add[b * n + a] = k;
        }
    }
    Ok(HomMonoid {
        source: source.clone(),
        target: target.clone(),
        tables,
        index,
        add,
    })
}

/// Some `h: M → I` with `h ∘ f = g`, where `f: L → M` and `g: L → I`.
///
/// Search order is lexicographic over the images of a generating set of
/// `M`; `None` means no extension exists.
pub fn find_extension(f: &LinearMap, g: &LinearMap, caps: &Caps) -> Result<Option<LinearMap>> {
    if !same_module(&f.source, &g.source) {
        return Err(Error::Precondition("f and g have different sources".into()));
    }
    let (m, i) = (f.target.as_ref(), g.target.as_ref());
    let mut p = PartialMap::new(m, i);
    for l in 0..f.source.size() {
        if !p.assign(f.table[l], g.table[l]) {
            return Ok(None);
        }
    }
    let gens = generating_set(m);
    let free = gens.iter().filter(|&&x| p.image[x] == UNSET).count();
    search_budget(free, i.size(), caps, "extension search")?;
    let mut found = None;
    backtrack(p, &gens, &mut |t| {
        found = Some(t.to_vec());
        true
    });
    Ok(found.map(|t| LinearMap::trusted(f.target.clone(), g.target.clone(), t)))
}

/// A retraction `h` with `h ∘ f = id`, if one exists. The sequence built on
/// `f` is left splitting exactly when this returns `Some`.
pub fn find_retraction(f: &LinearMap, caps: &Caps) -> Result<Option<LinearMap>> {
    if !f.is_injective() {
        return Err(Error::Precondition("retraction search needs an injective map".into()));
    }
    find_extension(f, &LinearMap::identity(f.source.clone()), caps)
}

/// A linear bijection `a → b`, if the two modules are isomorphic.
pub fn find_isomorphism(
    a: &Arc<FiniteSemimodule>,
    b: &Arc<FiniteSemimodule>,
    caps: &Caps,
) -> Result<Option<LinearMap>> {
    if a.size() != b.size() || a.scalars() != b.scalars() {
        return Ok(None);
    }
    let gens = generating_set(a);
    search_budget(gens.len(), b.size(), caps, "isomorphism search")?;
    let mut found = None;
    backtrack(PartialMap::new(a, b), &gens, &mut |t| {
        let bijective = ElemSet::from_iter(b.size(), t.iter().copied()).len() == b.size();
        if bijective {
            found = Some(t.to_vec());
        }
        bijective
    });
    Ok(found.map(|t| LinearMap::trusted(a.clone(), b.clone(), t)))
}

/// A one-element monoid, the zero object at either end of a sequence.
struct Trivial;

impl AdditiveMonoid for Trivial {
    fn order(&self) -> usize {
        1
    }
    fn sum(&self, _: usize, _: usize) -> usize {
        0
    }
}

/// `0 → Hom(N,I) → Hom(M,I) → Hom(L,I) → 0` and its exactness verdict.
#[derive(Debug, Clone)]
pub struct InducedSequence {
    pub hom_n: HomMonoid,
    pub hom_m: HomMonoid,
    pub hom_l: HomMonoid,
    /// Precomposition with `g`, indices into `hom_m`.
    pub pull_back_g: Vec<usize>,
    /// Precomposition with `f`, indices into `hom_l`.
    pub pull_back_f: Vec<usize>,
    pub verdict: SequenceVerdict,
}

pub fn induced_hom_sequence(
    ses: &ShortExactSequence,
    i: &Arc<FiniteSemimodule>,
    caps: &Caps,
) -> Result<InducedSequence> {
    let (f, g) = (&ses.first, &ses.second);
    let hom_n = hom_monoid(&g.target, i, caps)?;
    let hom_m = hom_monoid(&f.target, i, caps)?;
    let hom_l = hom_monoid(&f.source, i, caps)?;
    let precompose = |from: &HomMonoid, by: &LinearMap, into: &HomMonoid| -> Vec<usize> {
        from.tables
            .iter()
            .map(|t| {
                let c: Vec<usize> = by.table.iter().map(|&x| t[x]).collect();
                into.index_of(&c).expect("composite of linear maps is linear")
            })
            .collect()
    };
    let pull_back_g = precompose(&hom_n, g, &hom_m);
    let pull_back_f = precompose(&hom_m, f, &hom_l);
    let junctions = vec![
        junction(&[0], &hom_n, &pull_back_g),
        junction(&pull_back_g, &hom_m, &pull_back_f),
        junction(&pull_back_f, &hom_l, &vec![0; hom_l.len()]),
    ];
    // the outgoing map of the last junction is Hom(L,I) → 0
    debug_assert!(junction(&[0], &Trivial, &[0]).exact());
    let verdict = SequenceVerdict::from_junctions(junctions, None);
    Ok(InducedSequence {
        hom_n,
        hom_m,
        hom_l,
        pull_back_g,
        pull_back_f,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{build_named, Family, FiniteSemiring};

    fn boolean() -> Arc<FiniteSemiring> {
        Arc::new(build_named(&Family::Boolean).unwrap())
    }

    fn bool_module() -> Arc<FiniteSemimodule> {
        Arc::new(FiniteSemimodule::regular(boolean()))
    }

    fn bool2() -> Arc<FiniteSemimodule> {
        Arc::new(FiniteSemimodule::power(boolean(), 2, &Caps::default()).unwrap())
    }

    #[test]
    fn join_map_invariants_and_normality() {
        let (m, b) = (bool2(), bool_module());
        let f = LinearMap::new(m.clone(), b.clone(), vec![0, 1, 1, 1]).unwrap();
        let inv = map_invariants(&f);
        assert_eq!(inv.kernel, Subsemimodule::zero(&m));
        assert_eq!(inv.image, Subsemimodule::full(&b));
        let n = normality(&f);
        assert!(!n.k_normal);
        assert_eq!(n.k_witness, Some((1, 2)));
        assert!(n.i_normal);
        assert!(!n.normal);
    }

    #[test]
    fn identity_and_zero_maps() {
        let m = bool2();
        let id = LinearMap::identity(m.clone());
        assert_eq!(map_invariants(&id).kernel, Subsemimodule::zero(&m));
        assert_eq!(map_invariants(&id).image, Subsemimodule::full(&m));
        let z = LinearMap::zero_map(m.clone(), m.clone());
        assert_eq!(map_invariants(&z).kernel, Subsemimodule::full(&m));
        assert_eq!(map_invariants(&z).image, Subsemimodule::zero(&m));
    }

    #[test]
    fn nonlinear_table_is_rejected() {
        let (m, b) = (bool2(), bool_module());
        // (1,0) ↦ 1, (0,1) ↦ 0, (1,1) ↦ 0 breaks additivity
        assert!(matches!(
            LinearMap::new(m, b, vec![0, 1, 0, 0]),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn inclusion_normality() {
        let m = bool2();
        let (_, axis) = m.restrict(&m.sub(&["(0,0)", "(0,1)"])).unwrap();
        assert!(normality(&axis).normal);
        let (_, diag) = m.restrict(&m.sub(&["(0,0)", "(1,1)"])).unwrap();
        let n = normality(&diag);
        assert!(n.k_normal && !n.i_normal);
        assert_eq!(n.i_witness, Some(m.el("(1,0)")));
    }

    #[test]
    fn bourne_sequences() {
        let m = bool2();
        let ses = ShortExactSequence::bourne(&m, &m.sub(&["(0,0)", "(0,1)"])).unwrap();
        let v = ses.verdict();
        assert!(v.exact);
        let short = v.short.unwrap();
        assert!(short.first_normal_mono && short.last_surjective && short.last_k_normal);

        let id = ShortExactSequence::new(
            LinearMap::identity(m.clone()),
            LinearMap::zero_map(m.clone(), Arc::new(FiniteSemimodule::zero_module(boolean()))),
        )
        .unwrap();
        assert!(id.verdict().exact);
    }

    #[test]
    fn diagonal_sequence_fails_at_the_middle() {
        let m = bool2();
        let b = bool_module();
        let delta = LinearMap::new(b, m.clone(), vec![0, m.el("(1,1)")]).unwrap();
        let (_, pi) = bourne_quotient(&m, &m.sub(&["(0,0)", "(1,1)"])).unwrap();
        let v = ShortExactSequence::new(delta, pi).unwrap().verdict();
        assert!(!v.exact);
        let mid = &v.junctions[1];
        assert!(!mid.image_equals_kernel);
        assert_eq!(
            mid.image_witness,
            Some(ImageKernelMismatch::InKernelNotImage(m.el("(1,0)")))
        );
    }

    #[test]
    fn non_composable_chain_is_rejected() {
        let (m, b) = (bool2(), bool_module());
        let id = LinearMap::identity(m);
        let idb = LinearMap::identity(b);
        assert!(matches!(check_exact(&[id, idb]), Err(Error::Precondition(_))));
    }

    #[test]
    fn hom_examples() {
        let caps = Caps::default();
        let (m, b) = (bool2(), bool_module());
        assert_eq!(hom_monoid(&b, &b, &caps).unwrap().len(), 2);
        assert_eq!(hom_monoid(&m, &b, &caps).unwrap().len(), 4);
        let z = Arc::new(FiniteSemimodule::zero_module(boolean()));
        assert_eq!(hom_monoid(&m, &z, &caps).unwrap().len(), 1);
        let h = hom_monoid(&m, &b, &caps).unwrap();
        assert_eq!(h.tables()[0], vec![0; 4]);
    }

    #[test]
    fn hom_cap_is_enforced() {
        let caps = Caps {
            hom_search: 3,
            ..Caps::default()
        };
        let (m, b) = (bool2(), bool_module());
        assert!(matches!(hom_monoid(&m, &b, &caps), Err(Error::Resource { .. })));
    }

    #[test]
    fn retractions() {
        let caps = Caps::default();
        let m = bool2();
        let (_, axis) = m.restrict(&m.sub(&["(0,0)", "(0,1)"])).unwrap();
        let h = find_retraction(&axis, &caps).unwrap().unwrap();
        // h(a,b) = (0,b)
        assert_eq!(h.table(), &[0, 0, 1, 1]);
        assert_eq!(h.after(&axis).unwrap(), LinearMap::identity(axis.source().clone()));

        let (_, diag) = m.restrict(&m.sub(&["(0,0)", "(1,1)"])).unwrap();
        let h = find_retraction(&diag, &caps).unwrap().unwrap();
        assert_eq!(h.after(&diag).unwrap().table(), &[0, 1]);
        // (x, y) ↦ (x∨y, x∨y) is another retraction
        let join = LinearMap::new(m.clone(), diag.source().clone(), vec![0, 1, 1, 1]).unwrap();
        assert_eq!(join.after(&diag).unwrap().table(), &[0, 1]);

        let id = LinearMap::identity(m.clone());
        assert_eq!(find_retraction(&id, &caps).unwrap().unwrap(), id);
    }

    #[test]
    fn induced_sequence_examples() {
        let caps = Caps::default();
        let m = bool2();
        let ses = ShortExactSequence::bourne(&m, &m.sub(&["(0,0)", "(0,1)"])).unwrap();
        let ind = induced_hom_sequence(&ses, &bool_module(), &caps).unwrap();
        assert_eq!((ind.hom_n.len(), ind.hom_m.len(), ind.hom_l.len()), (2, 4, 2));
        assert!(ind.verdict.exact);

        let z = Arc::new(FiniteSemimodule::zero_module(boolean()));
        assert!(induced_hom_sequence(&ses, &z, &caps).unwrap().verdict.exact);

        let trivial = ShortExactSequence::new(
            LinearMap::zero_map(z.clone(), m.clone()),
            LinearMap::identity(m.clone()),
        )
        .unwrap();
        assert!(trivial.verdict().exact);
        assert!(induced_hom_sequence(&trivial, &bool_module(), &caps).unwrap().verdict.exact);
    }
}
