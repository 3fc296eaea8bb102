//! Brute-force injectivity tests relative to a fixed module or sequence.
//!
//! Injective maps are quantified up to their image: every subsemimodule
//! `L ≤ M` with its inclusion. For i-injectivity only subtractive `L` are
//! used, since those are exactly the images of normal monomorphisms.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::morphism::{find_extension, hom_monoid, induced_hom_sequence, JunctionVerdict, LinearMap, ShortExactSequence};
use crate::semimodule::{
    enumerate_k_subsemimodules, enumerate_subsemimodules, k_ideal_lattice, require_subtractive,
    FiniteSemimodule, Subsemimodule,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InjectivityKind {
    Injective,
    IInjective,
    EInjective,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    /// `g: L → I` with no extension along the inclusion `L ≤ M`.
    /// `g[j]` is the image of the `j`-th member of `L`.
    Extension {
        sub: Subsemimodule,
        g: Vec<usize>,
        /// Confirmed by exhaustive search over all functions `M → I`;
        /// `None` when that search is over the cap.
        verified: Option<bool>,
    },
    /// The induced Hom sequence fails at this junction.
    Junction { index: usize, verdict: JunctionVerdict },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectivityVerdict {
    pub kind: InjectivityKind,
    pub relative_to: String,
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

/// Exhaustive search for a linear `h: M → I` with `h ∘ f = g`, trying all
/// `|I|^|M|` functions.
pub fn exhaustive_extension(f: &LinearMap, g: &LinearMap, caps: &Caps) -> Result<Option<Vec<usize>>> {
    let (m, i) = (f.target().as_ref(), g.target().as_ref());
    let mut needed: u128 = 1;
    for _ in 0..m.size() {
        needed = needed.saturating_mul(i.size() as u128);
    }
    if needed > caps.hom_search {
        return Err(Error::resource("exhaustive extension search", needed, caps.hom_search));
    }
    let n = m.size();
    let mut h = vec![0usize; n];
    loop {
        let extends = (0..f.source().size()).all(|l| h[f.apply(l)] == g.apply(l));
        if extends
            && (0..n).all(|a| {
                (0..n).all(|b| h[m.add(a, b)] == i.add(h[a], h[b]))
                    && (0..m.scalars().size()).all(|r| h[m.act(r, a)] == i.act(r, h[a]))
            })
        {
            return Ok(Some(h));
        }
        // odometer step
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(None);
            }
            h[pos] += 1;
            if h[pos] < i.size() {
                break;
            }
            h[pos] = 0;
            pos += 1;
        }
    }
}

fn extension_counterexample(
    i: &Arc<FiniteSemimodule>,
    m: &Arc<FiniteSemimodule>,
    subs: &[Subsemimodule],
    caps: &Caps,
) -> Result<Option<Counterexample>> {
    for sub in subs {
        let (l, inclusion) = m.restrict(sub)?;
        let homs = hom_monoid(&l, i, caps)?;
        for g in homs.maps() {
            if find_extension(&inclusion, &g, caps)?.is_none() {
                let verified = match exhaustive_extension(&inclusion, &g, caps) {
                    Ok(found) => Some(found.is_none()),
                    Err(Error::Resource { .. }) => None,
                    Err(e) => return Err(e),
                };
                return Ok(Some(Counterexample::Extension {
                    sub: sub.clone(),
                    g: g.table().to_vec(),
                    verified,
                }));
            }
        }
    }
    Ok(None)
}

fn verdict(
    kind: InjectivityKind,
    i: &FiniteSemimodule,
    m: &FiniteSemimodule,
    counterexample: Option<Counterexample>,
) -> InjectivityVerdict {
    InjectivityVerdict {
        kind,
        relative_to: format!("{} relative to {}", i.label(), m.label()),
        holds: counterexample.is_none(),
        counterexample,
    }
}

/// `I` is `M`-injective: every `g: L → I` extends along every `L ≤ M`.
pub fn is_injective_rel(
    i: &Arc<FiniteSemimodule>,
    m: &Arc<FiniteSemimodule>,
    caps: &Caps,
) -> Result<InjectivityVerdict> {
    let subs = enumerate_subsemimodules(m, caps)?;
    let cx = extension_counterexample(i, m, &subs, caps)?;
    Ok(verdict(InjectivityKind::Injective, i, m, cx))
}

/// `I` is `M`-i-injective: every `g: L → I` extends along every subtractive `L ≤ M`.
pub fn is_i_injective_rel(
    i: &Arc<FiniteSemimodule>,
    m: &Arc<FiniteSemimodule>,
    caps: &Caps,
) -> Result<InjectivityVerdict> {
    let subs = enumerate_k_subsemimodules(m, caps)?;
    let cx = extension_counterexample(i, m, &subs, caps)?;
    Ok(verdict(InjectivityKind::IInjective, i, m, cx))
}

/// i-injectivity along one given `L`, which must be subtractive.
pub fn is_i_injective_along(
    i: &Arc<FiniteSemimodule>,
    m: &Arc<FiniteSemimodule>,
    l: &Subsemimodule,
    caps: &Caps,
) -> Result<InjectivityVerdict> {
    l.check_parent(m)?;
    require_subtractive(m, l)?;
    let cx = extension_counterexample(i, m, std::slice::from_ref(l), caps)?;
    Ok(verdict(InjectivityKind::IInjective, i, m, cx))
}

/// `Hom(-, I)` takes the given short exact sequence to an exact sequence.
pub fn is_e_injective_rel(
    i: &Arc<FiniteSemimodule>,
    ses: &ShortExactSequence,
    caps: &Caps,
) -> Result<InjectivityVerdict> {
    if !ses.verdict().exact {
        return Err(Error::Precondition("the sequence is not exact".into()));
    }
    let induced = induced_hom_sequence(ses, i, caps)?;
    let counterexample = induced
        .verdict
        .junctions
        .iter()
        .position(|j| !j.exact())
        .map(|index| Counterexample::Junction {
            index,
            verdict: induced.verdict.junctions[index].clone(),
        });
    let (l, m, n) = (ses.first().source(), ses.first().target(), ses.second().target());
    Ok(InjectivityVerdict {
        kind: InjectivityKind::EInjective,
        relative_to: format!("{} relative to 0 → {} → {} → {} → 0", i.label(), l.label(), m.label(), n.label()),
        holds: counterexample.is_none(),
        counterexample,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectSumProbe {
    pub sum: Arc<FiniteSemimodule>,
    pub preserved: bool,
    /// Index into the family and the failing verdict.
    pub counterexample: Option<(usize, InjectivityVerdict)>,
    /// Height of the k-ideal lattice of the scalar semiring.
    pub scalar_k_height: usize,
}

/// Whether i-injectivity relative to every member of `family` survives the
/// direct sum of `summands`. Each summand must be i-injective relative to
/// every member to begin with.
pub fn direct_sum_probe(
    summands: &[Arc<FiniteSemimodule>],
    family: &[Arc<FiniteSemimodule>],
    caps: &Caps,
) -> Result<DirectSumProbe> {
    let Some(first) = summands.first() else {
        return Err(Error::Precondition("no summands".into()));
    };
    for (a, s) in summands.iter().enumerate() {
        for (b, f) in family.iter().enumerate() {
            if !is_i_injective_rel(s, f, caps)?.holds {
                return Err(Error::Precondition(format!(
                    "summand {a} is not i-injective relative to family member {b}"
                )));
            }
        }
    }
    let sum = Arc::new(FiniteSemimodule::direct_sum(summands, caps)?);
    let mut counterexample = None;
    for (b, f) in family.iter().enumerate() {
        let v = is_i_injective_rel(&sum, f, caps)?;
        if !v.holds {
            counterexample = Some((b, v));
            break;
        }
    }
    let regular = FiniteSemimodule::regular(first.scalars().clone());
    Ok(DirectSumProbe {
        sum,
        preserved: counterexample.is_none(),
        counterexample,
        scalar_k_height: k_ideal_lattice(&regular, caps)?.height(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{build_named, Family, FiniteSemiring};

    fn boolean() -> Arc<FiniteSemiring> {
        Arc::new(build_named(&Family::Boolean).unwrap())
    }

    fn b1() -> Arc<FiniteSemimodule> {
        Arc::new(FiniteSemimodule::regular(boolean()))
    }

    fn b2() -> Arc<FiniteSemimodule> {
        Arc::new(FiniteSemimodule::power(boolean(), 2, &Caps::default()).unwrap())
    }

    #[test]
    fn boolean_is_injective_and_i_injective_for_the_square() {
        let caps = Caps::default();
        assert!(is_injective_rel(&b1(), &b2(), &caps).unwrap().holds);
        assert!(is_i_injective_rel(&b1(), &b2(), &caps).unwrap().holds);
        let z = Arc::new(FiniteSemimodule::zero_module(boolean()));
        assert!(is_injective_rel(&z, &b2(), &caps).unwrap().holds);
        assert!(is_injective_rel(&z, &z, &caps).unwrap().holds);
    }

    #[test]
    fn diagonal_is_rejected_for_i_injectivity() {
        let m = b2();
        let diag = m.sub(&["(0,0)", "(1,1)"]);
        assert!(matches!(
            is_i_injective_along(&b1(), &m, &diag, &Caps::default()),
            Err(Error::NotSubtractive { .. })
        ));
    }

    #[test]
    fn e_injective_examples() {
        let caps = Caps::default();
        let m = b2();
        let ses = ShortExactSequence::bourne(&m, &m.sub(&["(0,0)", "(0,1)"])).unwrap();
        assert!(is_e_injective_rel(&b1(), &ses, &caps).unwrap().holds);
        let z = Arc::new(FiniteSemimodule::zero_module(boolean()));
        assert!(is_e_injective_rel(&z, &ses, &caps).unwrap().holds);
    }

    #[test]
    fn exhaustive_oracle_agrees_on_the_diagonal() {
        let caps = Caps::default();
        let m = b2();
        let (_, diag) = m.restrict(&m.sub(&["(0,0)", "(1,1)"])).unwrap();
        let id = LinearMap::identity(diag.source().clone());
        // the two searches run in different orders, so compare by validity
        let h = exhaustive_extension(&diag, &id, &caps).unwrap().unwrap();
        let h = LinearMap::new(m.clone(), diag.source().clone(), h).unwrap();
        assert_eq!(h.after(&diag).unwrap(), id);
        assert!(find_extension(&diag, &id, &caps).unwrap().is_some());
    }

    #[test]
    fn probe_on_two_copies() {
        let caps = Caps::default();
        let p = direct_sum_probe(&[b1(), b1()], &[b2()], &caps).unwrap();
        assert!(p.preserved);
        assert_eq!(p.sum.size(), 4);
        assert_eq!(p.scalar_k_height, 1);
    }
}
