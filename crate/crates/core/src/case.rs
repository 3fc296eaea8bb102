//! Subtractivity experiments on left ideals of `M₂(ℚ⁺)`, classification of
//! subtractive closures, and strictly monotone chains of ideals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mat2::{IdealFamily, Mat2, Sampler};
use crate::qplus::QPlus;

/// `m ∉ family`, `ℓ, ℓ' ∈ family` and `m + ℓ = ℓ'`.
pub fn is_witness(family: &IdealFamily, m: &Mat2, ell: &Mat2, ell_prime: &Mat2) -> bool {
    !family.contains(m) && family.contains(ell) && family.contains(ell_prime) && &(m + ell) == ell_prime
}

/// The fixed candidate tried before any sampling: `m = [[1,0],[0,0]]`,
/// `ℓ = [[0,r],[0,0]]`, `ℓ' = [[1,r],[0,0]]`, with `r = 1` for families
/// without a parameter.
pub fn seed_witness(family: &IdealFamily) -> (Mat2, Mat2, Mat2) {
    let r = match family {
        IdealFamily::N(r) | IdealFamily::NGeq(r) => r.clone(),
        _ => QPlus::one(),
    };
    let m = Mat2::ints([[1, 0], [0, 0]]);
    let ell = Mat2::from_rows([[QPlus::zero(), r.clone()], [QPlus::zero(), QPlus::zero()]]);
    let ell_prime = Mat2::from_rows([[QPlus::one(), r], [QPlus::zero(), QPlus::zero()]]);
    (m, ell, ell_prime)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
#[allow(clippy::large_enum_variant)]
pub enum WitnessSearch {
    SubtractiveSoFar {
        trials: usize,
    },
    Witness {
        /// `None` for the fixed seed candidate.
        trial: Option<usize>,
        m: Mat2,
        ell: Mat2,
        ell_prime: Mat2,
    },
}

/// Looks for a subtractivity witness: the seed candidate first, then
/// `trials` sampled attempts. Even trials take a difference `ℓ' - ℓ` of two
/// members; odd trials add a random matrix to a member.
pub fn closure_witness_search(family: &IdealFamily, sampler: Sampler, trials: usize) -> WitnessSearch {
    let (m, ell, ell_prime) = seed_witness(family);
    if is_witness(family, &m, &ell, &ell_prime) {
        return WitnessSearch::Witness {
            trial: None,
            m,
            ell,
            ell_prime,
        };
    }
    for t in 0..trials {
        let mut rng = sampler.rng(t);
        let ell = Sampler::member(family, &mut rng);
        let (m, ell_prime) = if t % 2 == 0 {
            let ell_prime = Sampler::member(family, &mut rng);
            match ell_prime.checked_sub(&ell) {
                Some(m) => (m, ell_prime),
                None => continue,
            }
        } else {
            let m = Sampler::mat2(&mut rng);
            let ell_prime = &m + &ell;
            (m, ell_prime)
        };
        if is_witness(family, &m, &ell, &ell_prime) {
            return WitnessSearch::Witness {
                trial: Some(t),
                m,
                ell,
                ell_prime,
            };
        }
    }
    WitnessSearch::SubtractiveSoFar { trials }
}

/// Rejects a family whose seed witness shows it is not subtractive, as a
/// precondition check for routines that require subtractivity.
pub fn require_subtractive_family(family: &IdealFamily) -> Result<()> {
    let (m, ell, ell_prime) = seed_witness(family);
    if is_witness(family, &m, &ell, &ell_prime) {
        return Err(Error::NotSubtractiveFamily {
            family: family.to_string(),
            element: m.to_string(),
            ell: ell.to_string(),
            ell_prime: ell_prime.to_string(),
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawFailure {
    pub trial: usize,
    pub s: Mat2,
    pub x: Mat2,
    pub y: Mat2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawCheck {
    pub family: IdealFamily,
    pub trials: usize,
    pub passed: bool,
    /// Lowest failing trial.
    pub failure: Option<LawFailure>,
}

/// Samples `s` in `M₂(ℚ⁺)` and `x, y` in the family and checks that `x, y`
/// are recognized as members and that `s·x + y` stays inside.
pub fn closure_law_sampler(family: &IdealFamily, sampler: Sampler, trials: usize) -> LawCheck {
    let failure = (0..trials).find_map(|t| {
        let mut rng = sampler.rng(t);
        let s = Sampler::mat2(&mut rng);
        let x = Sampler::member(family, &mut rng);
        let y = Sampler::member(family, &mut rng);
        let ok = family.contains(&x) && family.contains(&y) && family.contains(&(&(&s * &x) + &y));
        (!ok).then_some(LawFailure { trial: t, s, x, y })
    });
    LawCheck {
        family: family.clone(),
        trials,
        passed: failure.is_none(),
        failure,
    }
}

/// A pair of matrices separating `N(r)` and `N(s)`: the first lies in
/// `N(r)` only, the second in `N(s)` only.
pub fn incomparability_witness(r: &QPlus, s: &QPlus) -> Option<(Mat2, Mat2)> {
    if r == s {
        return None;
    }
    let gen = |t: &QPlus| Mat2::from_rows([[t.clone(), QPlus::one()], [QPlus::zero(), QPlus::zero()]]);
    Some((gen(r), gen(s)))
}

/// `target + ell = ell_prime` with `ell, ell_prime` built explicitly as
/// `Σ s_t · g_t` over the generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureWitness {
    pub target: Mat2,
    pub ell: Mat2,
    pub ell_prime: Mat2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub family: IdealFamily,
    /// The family's generators shown to lie in the closure.
    pub generator_witnesses: Vec<ClosureWitness>,
    /// Generators, sampled ideal elements and sampled closure elements
    /// checked for membership in the family.
    pub members_checked: usize,
    pub verified: bool,
}

type Row = [QPlus; 2];

/// Position of a generator row: generator index and row index.
type RowRef = (usize, usize);

fn signed(x: &QPlus) -> BigRational {
    BigRational::new(BigInt::from(x.numer().clone()), BigInt::from(x.denom().clone()))
}

/// Splits a signed rational into its positive and negative parts.
fn split(x: &BigRational) -> (QPlus, QPlus) {
    let mag = QPlus::from_parts(
        x.numer().magnitude().clone(),
        x.denom().magnitude().clone(),
    )
    .expect("denominator is positive");
    if x.is_negative() {
        (QPlus::zero(), mag)
    } else {
        (mag, QPlus::zero())
    }
}

/// Left-multiplier combination: for each target row, nonnegative weights on
/// generator rows. `Σ_t s_t g_t` puts `Σ w · g_t[j]` in that target row.
fn combine(gens: &[Mat2], weights: &[Vec<(RowRef, QPlus)>; 2]) -> Mat2 {
    let mut s = vec![Mat2::zero(); gens.len()];
    for (i, ws) in weights.iter().enumerate() {
        for ((t, j), w) in ws {
            let cell = match (i, j) {
                (0, 0) => &mut s[*t].a,
                (0, _) => &mut s[*t].c,
                (_, 0) => &mut s[*t].b,
                (_, _) => &mut s[*t].d,
            };
            *cell = &*cell + w;
        }
    }
    s.iter()
        .zip(gens)
        .fold(Mat2::zero(), |acc, (s, g)| &acc + &(s * g))
}

struct RowSpace {
    basis: Vec<(RowRef, Row)>,
}

impl RowSpace {
    fn new(gens: &[Mat2]) -> Self {
        let mut basis: Vec<(RowRef, Row)> = Vec::new();
        for (t, g) in gens.iter().enumerate() {
            for j in 0..2 {
                let row = g.row(j);
                if row.iter().all(QPlus::is_zero) {
                    continue;
                }
                let independent = match basis.as_slice() {
                    [] => true,
                    [(_, b)] => &b[0] * &row[1] != &b[1] * &row[0],
                    _ => false,
                };
                if independent {
                    basis.push(((t, j), row));
                }
            }
        }
        RowSpace { basis }
    }

    /// Signed coefficients of `x` over the basis, if `x` lies in the span.
    fn coordinates(&self, x: &Row) -> Option<Vec<BigRational>> {
        let (u, v) = (signed(&x[0]), signed(&x[1]));
        match self.basis.as_slice() {
            [] => (u.is_zero() && v.is_zero()).then(Vec::new),
            [(_, r)] => {
                let (p, q) = (signed(&r[0]), signed(&r[1]));
                let mu = if !p.is_zero() { &u / &p } else { &v / &q };
                (&mu * &p == u && &mu * &q == v).then(|| vec![mu])
            }
            [(_, r1), (_, r2)] => {
                let (p1, q1, p2, q2) = (signed(&r1[0]), signed(&r1[1]), signed(&r2[0]), signed(&r2[1]));
                let det = &p1 * &q2 - &p2 * &q1;
                let l1 = (&u * &q2 - &p2 * &v) / &det;
                let l2 = (&p1 * &v - &u * &q1) / &det;
                Some(vec![l1, l2])
            }
            _ => unreachable!("rows live in a plane"),
        }
    }

    /// Builds `ℓ, ℓ'` in the ideal with `target + ℓ = ℓ'`, one target row at a time.
    fn witness(&self, gens: &[Mat2], target: &Mat2) -> Option<ClosureWitness> {
        let mut pos: [Vec<(RowRef, QPlus)>; 2] = [Vec::new(), Vec::new()];
        let mut neg: [Vec<(RowRef, QPlus)>; 2] = [Vec::new(), Vec::new()];
        for i in 0..2 {
            let coords = self.coordinates(&target.row(i))?;
            for ((at, _), lambda) in self.basis.iter().zip(&coords) {
                let (p, n) = split(lambda);
                pos[i].push((*at, p));
                neg[i].push((*at, n));
            }
        }
        let ell = combine(gens, &neg);
        let ell_prime = combine(gens, &pos);
        ((target + &ell) == ell_prime).then(|| ClosureWitness {
            target: target.clone(),
            ell,
            ell_prime,
        })
    }
}

fn canonical_generators(family: &IdealFamily) -> Vec<Mat2> {
    match family {
        IdealFamily::Zero => Vec::new(),
        IdealFamily::E1 => vec![Mat2::ints([[1, 0], [0, 0]])],
        IdealFamily::E2 => vec![Mat2::ints([[0, 0], [0, 1]])],
        IdealFamily::N(r) | IdealFamily::NGeq(r) => vec![Mat2::from_rows([
            [r.clone(), QPlus::one()],
            [QPlus::zero(), QPlus::zero()],
        ])],
        IdealFamily::Full => vec![Mat2::ints([[1, 0], [0, 0]]), Mat2::ints([[0, 0], [0, 1]])],
    }
}

const SPOT_CHECKS: usize = 64;

/// The subtractive closure of the left ideal generated by `gens`, as one of
/// the families `Zero`, `E1`, `E2`, `N(r)`, `Full`.
///
/// Row `i` of `Σ s_t g_t` is any nonnegative combination of generator rows,
/// so the ideal is the set of matrices whose rows lie in the cone of those
/// rows. Its closure replaces the cone by its linear span cut down to the
/// nonnegative quadrant. A one-dimensional span along `(k, l)` gives `E1`
/// when `l = 0`, `E2` when `k = 0` and `N(k/l)` otherwise; a two-dimensional
/// span gives `Full`.
///
/// The answer is checked both ways: generators and sampled ideal and
/// closure elements must lie in the family, and the family's generators
/// must be reachable as `x + ℓ = ℓ'` with `ℓ, ℓ'` in the ideal.
pub fn classify_k_closure(gens: &[Mat2]) -> Result<Classification> {
    classify_k_closure_with(gens, Sampler::new(0))
}

/// [`classify_k_closure`] with the spot checks drawn from `sampler`.
pub fn classify_k_closure_with(gens: &[Mat2], sampler: Sampler) -> Result<Classification> {
    if gens.is_empty() {
        return Err(Error::Parameter("at least one generator is required".into()));
    }
    let space = RowSpace::new(gens);
    let family = match space.basis.as_slice() {
        [] => IdealFamily::Zero,
        [(_, [k, l])] if l.is_zero() => {
            debug_assert!(!k.is_zero());
            IdealFamily::E1
        }
        [(_, [k, _])] if k.is_zero() => IdealFamily::E2,
        [(_, [k, l])] => IdealFamily::N(k * &l.recip().expect("l is nonzero")),
        _ => IdealFamily::Full,
    };

    let mut members: Vec<Mat2> = gens.to_vec();
    let mut verified = true;
    for t in 0..SPOT_CHECKS {
        let mut rng = sampler.rng(t);
        // an ideal element Σ s_t g_t
        members.push(
            gens.iter()
                .fold(Mat2::zero(), |acc, g| &acc + &(&Sampler::mat2(&mut rng) * g)),
        );
        // a closure element: random signed basis combinations, kept where nonnegative
        let mut target = Mat2::zero();
        for i in 0..2 {
            let row = space.basis.iter().fold(
                [BigRational::zero(), BigRational::zero()],
                |[x, y], (_, r)| {
                    let mut lambda = signed(&Sampler::qplus(&mut rng));
                    if rng.gen::<bool>() {
                        lambda = -lambda;
                    }
                    [x + &lambda * signed(&r[0]), y + &lambda * signed(&r[1])]
                },
            );
            if !row[0].is_negative() && !row[1].is_negative() {
                target = target.with_row(i, [split(&row[0]).0, split(&row[1]).0]);
            }
        }
        verified &= space.witness(gens, &target).is_some();
        members.push(target);
    }
    verified &= members.iter().all(|m| family.contains(m));

    let mut generator_witnesses = Vec::new();
    for g in canonical_generators(&family) {
        match space.witness(gens, &g) {
            Some(w) => generator_witnesses.push(w),
            None => verified = false,
        }
    }
    Ok(Classification {
        family,
        generator_witnesses,
        members_checked: members.len(),
        verified,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainKind {
    /// `N≥(1) ⊋ N≥(2) ⊋ N≥(3) ⊋ …`
    NGeqDescending,
    /// `N≥(1) ⊊ N≥(1/2) ⊊ N≥(1/3) ⊊ …`
    NGeqAscending,
    /// `I_1 ⊋ I_2 ⊋ …` in `ℤ⁺` with `I_k = {0, k, k+1, …}`.
    ZPlusIk,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ChainWitness {
    Matrix(Mat2),
    Integer(u64),
}

/// `witness` lies in `larger` but not in `smaller`, and `smaller ⊆ larger`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separation {
    pub larger: String,
    pub smaller: String,
    pub witness: ChainWitness,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainDemo {
    pub kind: ChainKind,
    pub depth: usize,
    pub separations: Vec<Separation>,
}

impl ChainDemo {
    pub fn strict(&self) -> bool {
        self.separations.len() + 1 == self.depth && self.separations.iter().all(|s| s.verified)
    }
}

/// `ℤ⁺` ideal `{0, k, k+1, …}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZPlusIdeal {
    pub threshold: u64,
}

impl ZPlusIdeal {
    pub fn contains(&self, x: u64) -> bool {
        x == 0 || x >= self.threshold
    }

    pub fn is_subset(&self, other: &ZPlusIdeal) -> bool {
        self.threshold >= other.threshold
    }
}

/// `N≥(s) ⊆ N≥(r)` exactly when `s ≥ r`; sampled members of the smaller
/// family are also checked against the larger.
fn ngeq_included(smaller: &QPlus, larger: &QPlus) -> bool {
    let inner = IdealFamily::NGeq(smaller.clone());
    let outer = IdealFamily::NGeq(larger.clone());
    let sampler = Sampler::new(0);
    smaller >= larger && (0..16).all(|t| outer.contains(&Sampler::member(&inner, &mut sampler.rng(t))))
}

/// Consecutive strict separations of the first `depth` members of a chain.
pub fn chain_demo(kind: ChainKind, depth: usize) -> Result<ChainDemo> {
    if depth < 2 {
        return Err(Error::Parameter(format!("depth must be at least 2, got {depth}")));
    }
    let separations = (1..depth as u64)
        .map(|m| match kind {
            ChainKind::NGeqDescending => {
                let (big, small) = (QPlus::int(m), QPlus::int(m + 1));
                let w = Mat2::from_rows([[QPlus::one(), QPlus::int(m)], [QPlus::zero(), QPlus::zero()]]);
                ngeq_separation(big, small, w)
            }
            ChainKind::NGeqAscending => {
                let big = QPlus::new(1, m + 1).expect("positive");
                let small = QPlus::new(1, m).expect("positive");
                let w = Mat2::from_rows([[QPlus::int(m + 1), QPlus::one()], [QPlus::zero(), QPlus::zero()]]);
                ngeq_separation(big, small, w)
            }
            ChainKind::ZPlusIk => {
                let (big, small) = (ZPlusIdeal { threshold: m }, ZPlusIdeal { threshold: m + 1 });
                Separation {
                    larger: format!("I_{m}"),
                    smaller: format!("I_{}", m + 1),
                    witness: ChainWitness::Integer(m),
                    verified: small.is_subset(&big) && big.contains(m) && !small.contains(m),
                }
            }
        })
        .collect();
    Ok(ChainDemo {
        kind,
        depth,
        separations,
    })
}

fn ngeq_separation(big: QPlus, small: QPlus, w: Mat2) -> Separation {
    let (fb, fs) = (IdealFamily::NGeq(big.clone()), IdealFamily::NGeq(small.clone()));
    Separation {
        verified: ngeq_included(&small, &big) && fb.contains(&w) && !fs.contains(&w),
        larger: fb.to_string(),
        smaller: fs.to_string(),
        witness: ChainWitness::Matrix(w),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QPlus {
        s.parse().unwrap()
    }

    #[test]
    fn ngeq_one_has_the_seed_witness() {
        let f = IdealFamily::NGeq(q("1"));
        match closure_witness_search(&f, Sampler::new(0), 10) {
            WitnessSearch::Witness { trial, m, ell, ell_prime } => {
                assert_eq!(trial, None);
                assert_eq!(m, Mat2::ints([[1, 0], [0, 0]]));
                assert_eq!(ell, Mat2::ints([[0, 1], [0, 0]]));
                assert_eq!(ell_prime, Mat2::ints([[1, 1], [0, 0]]));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            require_subtractive_family(&f),
            Err(Error::NotSubtractiveFamily { .. })
        ));
    }

    #[test]
    fn subtractive_families_yield_no_witness() {
        for f in [IdealFamily::Zero, IdealFamily::E1, IdealFamily::E2, IdealFamily::N(q("2"))] {
            assert_eq!(
                closure_witness_search(&f, Sampler::new(1), 500),
                WitnessSearch::SubtractiveSoFar { trials: 500 }
            );
            assert!(require_subtractive_family(&f).is_ok());
        }
    }

    #[test]
    fn classification_examples() {
        let c = classify_k_closure(&[Mat2::ints([[1, 0], [0, 0]])]).unwrap();
        assert_eq!(c.family, IdealFamily::E1);
        assert!(c.verified);
        let c = classify_k_closure(&[Mat2::ints([[2, 1], [0, 0]])]).unwrap();
        assert_eq!(c.family, IdealFamily::N(q("2")));
        assert!(c.verified);
        let c = classify_k_closure(&[Mat2::ints([[1, 0], [0, 0]]), Mat2::ints([[0, 0], [0, 1]])]).unwrap();
        assert_eq!(c.family, IdealFamily::Full);
        assert!(c.verified);
        assert_eq!(c.generator_witnesses.len(), 2);
        assert_eq!(classify_k_closure(&[Mat2::zero()]).unwrap().family, IdealFamily::Zero);
        assert!(matches!(classify_k_closure(&[]), Err(Error::Parameter(_))));
    }

    #[test]
    fn full_from_a_single_rank_two_generator() {
        // rows (1,1) and (1,2) span the plane; (1,0) = 2(1,1) - (1,2)
        let c = classify_k_closure(&[Mat2::ints([[1, 1], [1, 2]])]).unwrap();
        assert_eq!(c.family, IdealFamily::Full);
        assert!(c.verified);
        let w = &c.generator_witnesses[0];
        assert!(!w.ell.is_zero());
    }

    #[test]
    fn chains() {
        let d = chain_demo(ChainKind::NGeqDescending, 10).unwrap();
        assert_eq!(d.separations.len(), 9);
        assert!(d.strict());
        assert_eq!(d.separations[0].witness, ChainWitness::Matrix(Mat2::ints([[1, 1], [0, 0]])));
        let a = chain_demo(ChainKind::NGeqAscending, 10).unwrap();
        assert!(a.strict());
        let z = chain_demo(ChainKind::ZPlusIk, 5).unwrap();
        assert!(z.strict());
        let ws: Vec<_> = z.separations.iter().map(|s| s.witness.clone()).collect();
        assert_eq!(ws, (1..5).map(ChainWitness::Integer).collect::<Vec<_>>());
        assert!(chain_demo(ChainKind::ZPlusIk, 1).is_err());
    }

    #[test]
    fn n_families_are_incomparable() {
        let (x, y) = incomparability_witness(&q("2"), &q("1/2")).unwrap();
        let (n2, nh) = (IdealFamily::N(q("2")), IdealFamily::N(q("1/2")));
        assert!(n2.contains(&x) && !nh.contains(&x));
        assert!(nh.contains(&y) && !n2.contains(&y));
    }
}
