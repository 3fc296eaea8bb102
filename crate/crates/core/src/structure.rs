//! Direct summands, the modular law for subtractive subsemimodules, chain
//! transformations between summands and complements, and maximal
//! subtractive subsemimodules.
//!
//! Endomorphisms compose as `(α∘β)(m) = α(β(m))`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::lattice::KIdealLattice;
use crate::monoid;
use crate::morphism::{hom_monoid, LinearMap};
use crate::semimodule::{
    enumerate_k_subsemimodules, enumerate_subsemimodules, k_ideal_lattice, require_subtractive,
    FiniteSemimodule, Subsemimodule,
};
use crate::semiring::FiniteSemiring;

/// Projections `(α, α~)` onto a summand and its complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompWitness {
    pub alpha: LinearMap,
    pub alpha_tilde: LinearMap,
}

impl CompWitness {
    /// `α + α~ = id` and `α∘α~ = 0 = α~∘α`.
    pub fn is_comp(&self) -> bool {
        let (a, t) = (self.alpha.table(), self.alpha_tilde.table());
        let m = self.alpha.source();
        (0..m.size()).all(|x| m.add(a[x], t[x]) == x && a[t[x]] == 0 && t[a[x]] == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummandCertificate {
    pub summand: Subsemimodule,
    pub complement: Subsemimodule,
    pub comp_witness: Option<CompWitness>,
}

impl SummandCertificate {
    /// Re-checks `M = N ⊕ K` by counting decompositions.
    pub fn is_valid(&self, m: &FiniteSemimodule) -> bool {
        monoid::is_direct_sum(m, self.summand.set(), self.complement.set())
            && self.comp_witness.as_ref().is_none_or(|w| {
                w.is_comp() && w.alpha.image() == self.summand && w.alpha_tilde.image() == self.complement
            })
    }
}

fn projections(m: &Arc<FiniteSemimodule>, n: &Subsemimodule, k: &Subsemimodule) -> Result<CompWitness> {
    let mut alpha = vec![0; m.size()];
    let mut tilde = vec![0; m.size()];
    for a in n.set().iter() {
        for b in k.set().iter() {
            let s = m.add(a, b);
            alpha[s] = a;
            tilde[s] = b;
        }
    }
    Ok(CompWitness {
        alpha: LinearMap::new(m.clone(), m.clone(), alpha)?,
        alpha_tilde: LinearMap::new(m.clone(), m.clone(), tilde)?,
    })
}

/// Every complement `K` with `M = N ⊕ K`, each with its projection pair.
/// An empty list means `N` is not a direct summand.
pub fn direct_summand_complements(
    m: &Arc<FiniteSemimodule>,
    n: &Subsemimodule,
    caps: &Caps,
) -> Result<Vec<SummandCertificate>> {
    n.check_parent(m)?;
    let subs = enumerate_subsemimodules(m, caps)?;
    complements_among(m, n, &subs)
}

fn complements_among(
    m: &Arc<FiniteSemimodule>,
    n: &Subsemimodule,
    subs: &[Subsemimodule],
) -> Result<Vec<SummandCertificate>> {
    subs.iter()
        .filter(|k| monoid::is_direct_sum(m.as_ref(), n.set(), k.set()))
        .map(|k| {
            Ok(SummandCertificate {
                summand: n.clone(),
                complement: k.clone(),
                comp_witness: Some(projections(m, n, k)?),
            })
        })
        .collect()
}

/// First complement of `N`, or a precondition error if there is none.
pub fn certify(m: &Arc<FiniteSemimodule>, n: &Subsemimodule, caps: &Caps) -> Result<SummandCertificate> {
    direct_summand_complements(m, n, caps)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Precondition(format!("{} is not a direct summand", n.display(m))))
}

/// All direct summands, found by searching for complements.
pub fn direct_summands(m: &Arc<FiniteSemimodule>, caps: &Caps) -> Result<Vec<Subsemimodule>> {
    let subs = enumerate_subsemimodules(m, caps)?;
    Ok(subs
        .iter()
        .filter(|n| subs.iter().any(|k| monoid::is_direct_sum(m.as_ref(), n.set(), k.set())))
        .cloned()
        .collect())
}

/// Pairs in `Comp(End(M))`.
pub fn comp_endomorphisms(m: &Arc<FiniteSemimodule>, caps: &Caps) -> Result<Vec<CompWitness>> {
    let end = hom_monoid(m, m, caps)?;
    // α = α∘(α + α~) = α∘α, so only idempotents can appear
    let idempotents: Vec<&Vec<usize>> = end
        .tables()
        .iter()
        .filter(|t| (0..m.size()).all(|x| t[t[x]] == t[x]))
        .collect();
    let mut out = Vec::new();
    for a in &idempotents {
        for t in &idempotents {
            if (0..m.size()).all(|x| m.add(a[x], t[x]) == x && a[t[x]] == 0 && t[a[x]] == 0) {
                out.push(CompWitness {
                    alpha: LinearMap::trusted(m.clone(), m.clone(), a.to_vec()),
                    alpha_tilde: LinearMap::trusted(m.clone(), m.clone(), t.to_vec()),
                });
            }
        }
    }
    Ok(out)
}

/// `{α(M) : (α, α~) ∈ Comp(End(M))}` in canonical order.
pub fn summands_via_comp(m: &Arc<FiniteSemimodule>, caps: &Caps) -> Result<Vec<Subsemimodule>> {
    let mut out: Vec<Subsemimodule> = comp_endomorphisms(m, caps)?
        .into_iter()
        .map(|w| w.alpha.image())
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Direct summands ordered by inclusion.
pub fn summand_poset(m: &Arc<FiniteSemimodule>, caps: &Caps) -> Result<KIdealLattice> {
    Ok(KIdealLattice::from_nodes(
        direct_summands(m, caps)?,
        m.element_labels().to_vec(),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularVerdict {
    pub holds: bool,
    /// `K ∩ N`.
    pub intersection: Subsemimodule,
    /// An element of `N` without a unique decomposition.
    pub witness: Option<usize>,
}

/// Checks `N = L ⊕ (K ∩ N)` given `M = L ⊕ K`, `L ⊆ N` and `N` subtractive.
pub fn verify_modular_decomposition(
    m: &FiniteSemimodule,
    n: &Subsemimodule,
    l: &Subsemimodule,
    k: &Subsemimodule,
) -> Result<ModularVerdict> {
    for s in [n, l, k] {
        s.check_parent(m)?;
    }
    if !monoid::is_direct_sum(m, l.set(), k.set()) {
        return Err(Error::Precondition(format!(
            "{} ⊕ {} is not a decomposition of the module",
            l.display(m),
            k.display(m)
        )));
    }
    if !l.is_subset(n) {
        return Err(Error::Precondition(format!(
            "{} is not contained in {}",
            l.display(m),
            n.display(m)
        )));
    }
    require_subtractive(m, n)?;
    let kn = k.intersection(n);
    let mut count = vec![0usize; m.size()];
    for a in l.set().iter() {
        for b in kn.set().iter() {
            count[m.add(a, b)] += 1;
        }
    }
    let witness = n.set().iter().find(|&x| count[x] != 1);
    Ok(ModularVerdict {
        holds: witness.is_none(),
        intersection: kn,
        witness,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Ascending,
    Descending,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::Ascending => Direction::Descending,
            Direction::Descending => Direction::Ascending,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub direction: Direction,
    pub chain: Vec<Subsemimodule>,
    pub dual_chain: Vec<Subsemimodule>,
    /// First index from which the chain is constant, if it repeats before the end.
    pub stationary_at: Option<usize>,
    /// Indices where `M = chain_i ⊕ dual_i` fails; empty when certified.
    pub failures: Vec<usize>,
}

impl ChainReport {
    pub fn certified(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Builds the complementary chain of a monotone chain of summands.
///
/// Descending `N_i` with complements `L_i`: `K_1 = L_1` and
/// `K_{i+1} = (N_i ∩ L_{i+1}) + K_i`, an ascending chain.
/// Ascending `L_i` with complements `N_i`: `N'_1 = N_1` and
/// `N'_{i+1} = N'_i ∩ (L_i + N_{i+1})`, a descending chain.
pub fn transform_chain(
    m: &FiniteSemimodule,
    chain: &[SummandCertificate],
    direction: Direction,
) -> Result<ChainReport> {
    if chain.is_empty() {
        return Err(Error::Precondition("empty chain".into()));
    }
    for (i, c) in chain.iter().enumerate() {
        c.summand.check_parent(m)?;
        c.complement.check_parent(m)?;
        if !monoid::is_direct_sum(m, c.summand.set(), c.complement.set()) {
            return Err(Error::Precondition(format!("chain element {i} is not certified")));
        }
    }
    for (i, w) in chain.windows(2).enumerate() {
        let ok = match direction {
            Direction::Descending => w[1].summand.is_subset(&w[0].summand),
            Direction::Ascending => w[0].summand.is_subset(&w[1].summand),
        };
        if !ok {
            return Err(Error::Precondition(format!(
                "chain is not {} at index {}",
                match direction {
                    Direction::Descending => "descending",
                    Direction::Ascending => "ascending",
                },
                i + 1
            )));
        }
    }
    let mut dual = vec![chain[0].complement.clone()];
    for i in 1..chain.len() {
        let prev = &dual[i - 1];
        let next = match direction {
            Direction::Descending => chain[i - 1]
                .summand
                .intersection(&chain[i].complement)
                .sum(m, prev),
            Direction::Ascending => prev.intersection(&chain[i - 1].summand.sum(m, &chain[i].complement)),
        };
        dual.push(next);
    }
    let chain: Vec<Subsemimodule> = chain.iter().map(|c| c.summand.clone()).collect();
    let failures = (0..chain.len())
        .filter(|&i| !monoid::is_direct_sum(m, chain[i].set(), dual[i].set()))
        .collect();
    let last = chain.len() - 1;
    let start = (0..=last).rev().take_while(|&i| chain[i] == chain[last]).last().unwrap_or(last);
    Ok(ChainReport {
        direction,
        stationary_at: (start < last || chain.len() == 1).then_some(start),
        chain,
        dual_chain: dual,
        failures,
    })
}

/// Subtractive `L ⊊ N` maximal among subtractive subsemimodules inside `N`.
pub fn maximal_k_subsemimodules(
    m: &FiniteSemimodule,
    n: &Subsemimodule,
    caps: &Caps,
) -> Result<Vec<Subsemimodule>> {
    n.check_parent(m)?;
    if n.is_zero() {
        return Err(Error::Domain("the zero subsemimodule has no proper subtractive part".into()));
    }
    let inside: Vec<Subsemimodule> = enumerate_k_subsemimodules(m, caps)?
        .into_iter()
        .filter(|l| l.is_subset(n) && l != n)
        .collect();
    Ok(inside
        .iter()
        .filter(|l| !inside.iter().any(|o| o != *l && l.is_subset(o)))
        .cloned()
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KSummandReport {
    /// Every subtractive left ideal is a direct summand.
    pub holds: bool,
    pub failures: Vec<Subsemimodule>,
    pub lattice_height: usize,
    /// Longest ascending and descending chains agree, both finite.
    pub chain_conditions: bool,
}

/// Whether every subtractive left ideal of `S` is a direct summand of `S`.
pub fn all_k_ideals_summands(s: &Arc<FiniteSemiring>, caps: &Caps) -> Result<KSummandReport> {
    let m = Arc::new(FiniteSemimodule::regular(s.clone()));
    let lattice = k_ideal_lattice(&m, caps)?;
    let subs = enumerate_subsemimodules(&m, caps)?;
    let failures: Vec<Subsemimodule> = lattice
        .nodes()
        .iter()
        .filter(|n| !subs.iter().any(|k| monoid::is_direct_sum(m.as_ref(), n.set(), k.set())))
        .cloned()
        .collect();
    Ok(KSummandReport {
        holds: failures.is_empty(),
        failures,
        lattice_height: lattice.height(),
        chain_conditions: lattice.height() == lattice.longest_descending(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semimodule::is_subtractive;
    use crate::semiring::{build_bni, build_named, Family};

    fn boolean() -> Arc<FiniteSemiring> {
        Arc::new(build_named(&Family::Boolean).unwrap())
    }

    fn bool2() -> Arc<FiniteSemimodule> {
        Arc::new(FiniteSemimodule::power(boolean(), 2, &Caps::default()).unwrap())
    }

    fn chain3() -> Arc<FiniteSemimodule> {
        let c = Arc::new(build_named(&Family::ChainLattice { n: 3 }).unwrap());
        Arc::new(FiniteSemimodule::regular(c))
    }

    #[test]
    fn axis_complement() {
        let m = bool2();
        let caps = Caps::default();
        let certs = direct_summand_complements(&m, &m.sub(&["(0,0)", "(0,1)"]), &caps).unwrap();
        assert_eq!(certs.len(), 1);
        assert_eq!(certs[0].complement, m.sub(&["(0,0)", "(1,0)"]));
        assert!(certs[0].is_valid(&m));

        let full = direct_summand_complements(&m, &Subsemimodule::full(&m), &caps).unwrap();
        assert_eq!(full.len(), 1);
        assert!(full[0].complement.is_zero());
    }

    #[test]
    fn chain_lattice_has_no_complement() {
        let m = chain3();
        // {0 < 1 < 2} with 1 in the middle: 2 = 1 ∨ 2 = 0 ∨ 2
        let half = m.sub(&["0", "1"]);
        assert!(direct_summand_complements(&m, &half, &Caps::default()).unwrap().is_empty());
    }

    #[test]
    fn comp_images() {
        let caps = Caps::default();
        let m = bool2();
        let via = summands_via_comp(&m, &caps).unwrap();
        assert_eq!(via.len(), 4);
        assert_eq!(via, direct_summands(&m, &caps).unwrap());
        let b = Arc::new(FiniteSemimodule::regular(boolean()));
        assert_eq!(summands_via_comp(&b, &caps).unwrap().len(), 2);
        let z = Arc::new(FiniteSemimodule::zero_module(boolean()));
        assert_eq!(summands_via_comp(&z, &caps).unwrap(), vec![Subsemimodule::zero(&z)]);
    }

    #[test]
    fn modular_law_examples() {
        let m = bool2();
        let (l, k) = (m.sub(&["(0,0)", "(0,1)"]), m.sub(&["(0,0)", "(1,0)"]));
        let v = verify_modular_decomposition(&m, &l, &l, &k).unwrap();
        assert!(v.holds);
        assert!(v.intersection.is_zero());

        let diag = m.sub(&["(0,0)", "(1,1)"]);
        let zero = Subsemimodule::zero(&m);
        let full = Subsemimodule::full(&m);
        match verify_modular_decomposition(&m, &diag, &zero, &full) {
            Err(Error::NotSubtractive { element, .. }) => assert_eq!(element, m.el("(1,0)")),
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn descending_chain_dualizes() {
        let caps = Caps::default();
        let m = bool2();
        let chain: Vec<SummandCertificate> = [
            Subsemimodule::full(&m),
            m.sub(&["(0,0)", "(0,1)"]),
            Subsemimodule::zero(&m),
        ]
        .iter()
        .map(|n| certify(&m, n, &caps).unwrap())
        .collect();
        let r = transform_chain(&m, &chain, Direction::Descending).unwrap();
        assert!(r.certified());
        assert_eq!(
            r.dual_chain,
            vec![Subsemimodule::zero(&m), m.sub(&["(0,0)", "(1,0)"]), Subsemimodule::full(&m)]
        );
        assert_eq!(r.stationary_at, None);

        let constant = vec![chain[1].clone(), chain[1].clone()];
        let r = transform_chain(&m, &constant, Direction::Ascending).unwrap();
        assert!(r.certified());
        assert_eq!(r.stationary_at, Some(0));
    }

    #[test]
    fn maximal_examples() {
        let caps = Caps::default();
        let m = bool2();
        let max = maximal_k_subsemimodules(&m, &Subsemimodule::full(&m), &caps).unwrap();
        assert_eq!(max, vec![m.sub(&["(0,0)", "(1,0)"]), m.sub(&["(0,0)", "(0,1)"])]);
        let b43 = Arc::new(FiniteSemimodule::regular(Arc::new(build_bni(4, 3).unwrap())));
        let max = maximal_k_subsemimodules(&b43, &Subsemimodule::full(&b43), &caps).unwrap();
        assert_eq!(max, vec![Subsemimodule::zero(&b43)]);
        assert!(matches!(
            maximal_k_subsemimodules(&m, &Subsemimodule::zero(&m), &caps),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn k_ideal_summand_reports() {
        let caps = Caps::default();
        let bb = Arc::new(
            build_named(&Family::Power {
                base: Box::new(Family::Boolean),
                n: 2,
            })
            .unwrap(),
        );
        assert!(all_k_ideals_summands(&bb, &caps).unwrap().holds);
        assert!(all_k_ideals_summands(&Arc::new(build_bni(4, 3).unwrap()), &caps).unwrap().holds);
        let c3 = Arc::new(build_named(&Family::ChainLattice { n: 3 }).unwrap());
        let r = all_k_ideals_summands(&c3, &caps).unwrap();
        assert!(!r.holds);
        assert_eq!(r.failures.len(), 1);
        assert_eq!(r.failures[0].members(), vec![0, 2]);
        assert!(r.chain_conditions);
    }

    #[test]
    fn summands_are_subtractive() {
        let caps = Caps::default();
        let m = Arc::new(FiniteSemimodule::power(boolean(), 3, &caps).unwrap());
        for n in direct_summands(&m, &caps).unwrap() {
            assert!(is_subtractive(&m, &n));
        }
    }
}
