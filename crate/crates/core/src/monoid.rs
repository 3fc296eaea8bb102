//! Routines that only need the additive commutative monoid of a structure.
//!
//! Semirings, semimodules and Hom-monoids all implement [`AdditiveMonoid`],
//! so subtractive closure, the Bourne congruence, cancellative elements and
//! the exactness checks are written once here.

use crate::elemset::ElemSet;

pub trait AdditiveMonoid {
    /// Carrier size; elements are `0..order()`.
    fn order(&self) -> usize;
    fn sum(&self, a: usize, b: usize) -> usize;
    fn zero(&self) -> usize {
        0
    }
}

/// `{m : m + l = l' for some l, l' in set}`.
pub fn subtractive_closure<M: AdditiveMonoid + ?Sized>(m: &M, set: &ElemSet) -> ElemSet {
    let mut out = ElemSet::empty(m.order());
    for x in 0..m.order() {
        if set.iter().any(|l| set.contains(m.sum(x, l))) {
            out.insert(x);
        }
    }
    out
}

/// A triple `(m, l, l')` with `m + l = l'`, `l, l'` in `set`, `m` outside it.
pub fn subtractivity_witness<M: AdditiveMonoid + ?Sized>(
    m: &M,
    set: &ElemSet,
) -> Option<(usize, usize, usize)> {
    (0..m.order()).filter(|&x| !set.contains(x)).find_map(|x| {
        set.iter().find_map(|l| {
            let s = m.sum(x, l);
            set.contains(s).then_some((x, l, s))
        })
    })
}

/// `{a + b : a in left, b in right}`.
pub fn sum_set<M: AdditiveMonoid + ?Sized>(m: &M, left: &ElemSet, right: &ElemSet) -> ElemSet {
    let mut out = ElemSet::empty(m.order());
    for a in left.iter() {
        for b in right.iter() {
            out.insert(m.sum(a, b));
        }
    }
    out
}

/// Cancellative elements: `x` with `x + y = x + z` forcing `y = z`.
pub fn cancellative_elements<M: AdditiveMonoid + ?Sized>(m: &M) -> ElemSet {
    let n = m.order();
    let mut out = ElemSet::empty(n);
    for x in 0..n {
        let mut seen = ElemSet::empty(n);
        if (0..n).all(|y| seen.insert(m.sum(x, y))) {
            out.insert(x);
        }
    }
    out
}

/// Whether the sum map `left × right → monoid` is a bijection, i.e. the
/// monoid is the internal direct sum of the two subsets.
pub fn is_direct_sum<M: AdditiveMonoid + ?Sized>(m: &M, left: &ElemSet, right: &ElemSet) -> bool {
    if left.len() * right.len() != m.order() {
        return false;
    }
    let mut hit = ElemSet::empty(m.order());
    left.iter()
        .all(|a| right.iter().all(|b| hit.insert(m.sum(a, b))))
}

/// Whether `whole` is the direct sum of `left` and `right` inside the monoid:
/// every element of `whole` is `a + b` for exactly one pair.
pub fn is_direct_decomposition<M: AdditiveMonoid + ?Sized>(
    m: &M,
    whole: &ElemSet,
    left: &ElemSet,
    right: &ElemSet,
) -> bool {
    if left.len() * right.len() != whole.len() {
        return false;
    }
    let mut hit = ElemSet::empty(m.order());
    left.iter().all(|a| {
        right.iter().all(|b| {
            let s = m.sum(a, b);
            whole.contains(s) && hit.insert(s)
        })
    })
}

/// Disjoint-set forest with path halving.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller root wins so class representatives are minimal
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Class label of every element under the Bourne congruence of `set`:
/// `m ~ m'` iff `m + l = m' + l'` for some `l, l'` in `set`.
///
/// The congruence is generated by the pairs `(m, m + l)`; labels are dense,
/// numbered in order of each class's least member, so zero's class is `0`.
pub fn bourne_classes<M: AdditiveMonoid + ?Sized>(m: &M, set: &ElemSet) -> Vec<usize> {
    let n = m.order();
    let mut uf = UnionFind::new(n);
    for x in 0..n {
        for l in set.iter() {
            uf.union(x, m.sum(x, l));
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut out = vec![0; n];
    let mut next = 0;
    for x in 0..n {
        let r = uf.find(x);
        if label[r] == usize::MAX {
            label[r] = next;
            next += 1;
        }
        out[x] = label[r];
    }
    out
}
