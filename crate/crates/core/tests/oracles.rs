//! Library enumerations against brute force over subsets and functions.

use std::collections::BTreeSet;
use std::sync::Arc;

use semikit::caps::ORACLE_SIZE;
use semikit::morphism::{find_isomorphism, hom_monoid};
use semikit::semimodule::{enumerate_k_subsemimodules, enumerate_subsemimodules};
use semikit::semiring::{build_bni, build_named, product_semiring, Family};
use semikit::zoo::standard_zoo;
use semikit::{Caps, FiniteSemimodule};

/// Subsets (as bitmasks) containing 0, closed under `+` and the action.
fn closed_subsets(m: &FiniteSemimodule) -> Vec<u32> {
    let n = m.size();
    assert!(n <= ORACLE_SIZE);
    (0u32..1 << n)
        .filter(|mask| mask & 1 == 1)
        .filter(|&mask| {
            let inside = |x: usize| mask >> x & 1 == 1;
            let elems: Vec<usize> = (0..n).filter(|&x| inside(x)).collect();
            elems.iter().all(|&a| elems.iter().all(|&b| inside(m.add(a, b))))
                && elems.iter().all(|&a| (0..m.scalars().size()).all(|s| inside(m.act(s, a))))
        })
        .collect()
}

fn subtractive(m: &FiniteSemimodule, mask: u32) -> bool {
    let inside = |x: usize| mask >> x & 1 == 1;
    (0..m.size()).all(|x| inside(x) || !(0..m.size()).any(|l| inside(l) && inside(m.add(x, l))))
}

fn masks(subs: &[semikit::Subsemimodule]) -> BTreeSet<u32> {
    subs.iter()
        .map(|s| s.members().iter().fold(0u32, |acc, &x| acc | 1 << x))
        .collect()
}

fn check_enumerations(m: &FiniteSemimodule, caps: &Caps) {
    // 0 is index 0 in every canonical module
    let brute = closed_subsets(m);
    let all = enumerate_subsemimodules(m, caps).unwrap();
    let k = enumerate_k_subsemimodules(m, caps).unwrap();
    assert_eq!(masks(&all), brute.iter().copied().collect(), "{}", m.label());
    assert_eq!(all.len(), brute.len(), "duplicates in {}", m.label());
    let brute_k: BTreeSet<u32> = brute.into_iter().filter(|&s| subtractive(m, s)).collect();
    assert_eq!(masks(&k), brute_k, "{}", m.label());
}

#[test]
fn subsemimodules_match_subset_filter_on_the_sweep() {
    let caps = Caps::default();
    for e in standard_zoo(8) {
        check_enumerations(&e.module, &caps);
    }
}

#[test]
fn subsemimodules_match_subset_filter_up_to_sixteen() {
    let caps = Caps::default();
    let b = Arc::new(build_named(&Family::Boolean).unwrap());
    let z2 = build_named(&Family::Zmod { n: 2 }).unwrap();
    let chain = build_named(&Family::ChainLattice { n: 3 }).unwrap();
    let mut modules = vec![
        FiniteSemimodule::power(b.clone(), 4, &caps).unwrap(),
        FiniteSemimodule::power(Arc::new(build_bni(4, 2).unwrap()), 2, &caps).unwrap(),
        FiniteSemimodule::regular(Arc::new(product_semiring(&[chain.clone(), z2.clone()], &caps).unwrap())),
        FiniteSemimodule::power(Arc::new(chain), 2, &caps).unwrap(),
    ];
    modules.push(FiniteSemimodule::regular(Arc::new(
        product_semiring(&[build_bni(4, 1).unwrap(), build_bni(3, 2).unwrap()], &caps).unwrap(),
    )));
    for m in &modules {
        assert!(m.size() <= ORACLE_SIZE);
        check_enumerations(m, &caps);
    }
}

/// All linear maps, found by trying every function.
fn brute_homs(a: &FiniteSemimodule, b: &FiniteSemimodule) -> BTreeSet<Vec<usize>> {
    let (na, nb) = (a.size(), b.size());
    let mut out = BTreeSet::new();
    let mut h = vec![0usize; na];
    loop {
        let linear = (0..na).all(|x| (0..na).all(|y| h[a.add(x, y)] == b.add(h[x], h[y])))
            && (0..a.scalars().size()).all(|s| (0..na).all(|x| h[a.act(s, x)] == b.act(s, h[x])));
        if linear {
            out.insert(h.clone());
        }
        let Some(pos) = (0..na).find(|&i| h[i] + 1 < nb) else {
            return out;
        };
        h[pos] += 1;
        h[..pos].iter_mut().for_each(|v| *v = 0);
    }
}

#[test]
fn hom_search_matches_brute_force() {
    let caps = Caps::default();
    let zoo = standard_zoo(4);
    for a in &zoo {
        for b in zoo.iter().filter(|b| b.module.scalars() == a.module.scalars()) {
            let hom = hom_monoid(&a.module, &b.module, &caps).unwrap();
            let got: BTreeSet<Vec<usize>> = hom.tables().iter().cloned().collect();
            assert_eq!(got.len(), hom.len());
            assert_eq!(got, brute_homs(&a.module, &b.module), "{} → {}", a.origin, b.origin);
        }
    }
}

#[test]
fn isomorphism_search_matches_brute_force() {
    let caps = Caps::default();
    let zoo = standard_zoo(4);
    for a in &zoo {
        for b in zoo.iter().filter(|b| b.module.scalars() == a.module.scalars()) {
            let bijective = brute_homs(&a.module, &b.module)
                .into_iter()
                .any(|h| h.iter().collect::<BTreeSet<_>>().len() == b.module.size() && a.module.size() == b.module.size());
            let found = find_isomorphism(&a.module, &b.module, &caps).unwrap();
            assert_eq!(found.is_some(), bijective, "{} vs {}", a.origin, b.origin);
            if let Some(f) = found {
                assert!(f.is_injective() && f.is_surjective());
            }
        }
    }
}
