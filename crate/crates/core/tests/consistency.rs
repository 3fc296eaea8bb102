use std::sync::Arc;

use proptest::prelude::*;

use semikit::format::{load_str, save_string, Document};
use semikit::injectivity::is_i_injective_rel;
use semikit::morphism::{find_retraction, LinearMap};
use semikit::semimodule::enumerate_k_subsemimodules;
use semikit::semiring::{build_bni, build_named, check_semiring_axioms, product_semiring, Family};
use semikit::zoo::standard_zoo;
use semikit::{Caps, FiniteSemimodule, FiniteSemiring, SemiringTables};

fn test_semirings() -> Vec<FiniteSemiring> {
    let caps = Caps::default();
    let b = build_named(&Family::Boolean).unwrap();
    let mut out: Vec<FiniteSemiring> = [
        Family::Boolean,
        Family::Zmod { n: 2 },
        Family::Zmod { n: 3 },
        Family::Zmod { n: 4 },
        Family::ChainLattice { n: 3 },
        Family::ChainLattice { n: 4 },
    ]
    .iter()
    .map(|f| build_named(f).unwrap())
    .collect();
    for (n, i) in [(3, 1), (3, 2), (4, 2), (4, 1), (5, 3)] {
        out.push(build_bni(n, i).unwrap());
    }
    out.push(product_semiring(&[b.clone(), b.clone()], &caps).unwrap());
    out.push(product_semiring(&[b, build_named(&Family::Zmod { n: 2 }).unwrap()], &caps).unwrap());
    out
}

/// When every k-ideal is i-injective relative to `S`, each inclusion splits.
#[test]
fn i_injective_k_ideals_split() {
    let caps = Caps::default();
    let mut premise_held = 0;
    for s in test_semirings() {
        let s = Arc::new(s);
        let regular = Arc::new(FiniteSemimodule::regular(s.clone()));
        let ideals = enumerate_k_subsemimodules(&regular, &caps).unwrap();
        let restricted: Vec<(Arc<FiniteSemimodule>, LinearMap)> =
            ideals.iter().map(|l| regular.restrict(l).unwrap()).collect();
        let all_i_injective = restricted
            .iter()
            .all(|(l, _)| is_i_injective_rel(l, &regular, &caps).unwrap().holds);
        if !all_i_injective {
            continue;
        }
        premise_held += 1;
        for (_, incl) in &restricted {
            let r = find_retraction(incl, &caps).unwrap();
            let r = r.unwrap_or_else(|| panic!("{}: an inclusion has no retraction", s.label()));
            assert!((0..incl.source().size()).all(|x| r.apply(incl.apply(x)) == x));
        }
    }
    assert!(premise_held > 0);
}

#[test]
fn documents_round_trip_over_the_sweep() {
    let caps = Caps::default();
    for e in standard_zoo(5) {
        for doc in [
            Document::Module(e.module.clone()),
            Document::Semiring(e.module.scalars().clone()),
            Document::Map(LinearMap::identity(e.module.clone())),
        ] {
            let text = save_string(&doc);
            let back = load_str(&text, &caps).unwrap();
            assert_eq!(back, doc, "{}", e.origin);
            assert_eq!(save_string(&back), text);
        }
    }
}

fn brute_semiring(t: &SemiringTables) -> bool {
    let (n, a, m, z, o) = (t.size, &t.add, &t.mul, t.zero, t.one);
    let r = 0..n;
    z != o
        && r.clone().all(|x| a[x][z] == x && m[x][o] == x && m[o][x] == x && m[x][z] == z && m[z][x] == z)
        && r.clone().all(|x| {
            r.clone().all(|y| {
                a[x][y] == a[y][x]
                    && r.clone().all(|w| {
                        a[a[x][y]][w] == a[x][a[y][w]]
                            && m[m[x][y]][w] == m[x][m[y][w]]
                            && m[x][a[y][w]] == a[m[x][y]][m[x][w]]
                            && m[a[y][w]][x] == a[m[y][x]][m[w][x]]
                    })
            })
        })
}

fn mutated() -> impl Strategy<Value = SemiringTables> {
    let bases: Vec<SemiringTables> = test_semirings()
        .into_iter()
        .filter(|s| s.size() <= 4)
        .map(|s| s.to_tables())
        .collect();
    (0..bases.len(), any::<bool>(), 0usize..4, 0usize..4, 0usize..4, any::<bool>()).prop_map(
        move |(i, in_add, x, y, v, touch)| {
            let mut t = bases[i].clone();
            let n = t.size;
            if touch {
                let table = if in_add { &mut t.add } else { &mut t.mul };
                table[x % n][y % n] = v % n;
            }
            t
        },
    )
}

proptest! {
    #[test]
    fn axiom_checker_agrees_with_definition(t in mutated()) {
        let report = check_semiring_axioms(&t).unwrap();
        prop_assert_eq!(report.passed, brute_semiring(&t), "{}", report);
        prop_assert_eq!(FiniteSemiring::from_tables(t.clone()).is_ok(), report.passed);
    }
}
