//! Every semimodule of bounded size over the sweep semirings, up to
//! isomorphism.
//!
//! Each scalar semiring here is small enough that its semimodules have a
//! concrete description:
//!
//! * over `𝔹`, a semimodule is a join-semilattice with bottom, which is a
//!   finite lattice;
//! * over `ℤₚ` it is a vector space `ℤₚᵏ`;
//! * over `B(3,1)` it is a commutative monoid with `3m = m`, i.e. a strong
//!   semilattice of groups of exponent 2;
//! * over the chain `0 < a < 1` it is a lattice with an operator `a·(-)`
//!   that preserves joins, is idempotent and lies below the identity.
//!
//! [`constructive_zoo`] builds a smaller catalogue from powers, parts and
//! sums and works over any semiring; it serves as a cross-check.

use std::collections::HashMap;
use std::sync::Arc;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::morphism::find_isomorphism;
use crate::semimodule::{
    bourne_quotient, enumerate_k_subsemimodules, enumerate_subsemimodules, FiniteSemimodule, ModuleTables,
};
use crate::semiring::{build_named, Family, FiniteSemiring};

#[derive(Debug, Clone)]
pub struct ZooEntry {
    pub module: Arc<FiniteSemimodule>,
    /// How the entry was built.
    pub origin: String,
}

const SWEEP: [Family; 5] = [
    Family::Boolean,
    Family::Zmod { n: 2 },
    Family::Zmod { n: 3 },
    Family::Bni { n: 3, i: 1 },
    Family::ChainLattice { n: 3 },
];

/// `𝔹`, `ℤ₂`, `ℤ₃`, `B(3,1)` and the three-element chain lattice.
pub fn sweep_scalars() -> Vec<Arc<FiniteSemiring>> {
    SWEEP
        .iter()
        .map(|f| Arc::new(build_named(f).expect("built-in family")))
        .collect()
}

/// Per-element data preserved by isomorphisms, sorted into a bucket key.
fn fingerprint(m: &FiniteSemimodule) -> Vec<Vec<usize>> {
    let n = m.size();
    let mut key: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            let mut f = vec![
                usize::from(m.add(x, x) == x),
                (0..n).filter(|&y| m.add(x, y) == x).count(),
                (0..n).filter(|&y| m.add(x, y) == y).count(),
            ];
            for r in 0..m.scalars().size() {
                f.push(usize::from(m.act(r, x) == x));
                f.push((0..n).filter(|&y| m.act(r, y) == x).count());
            }
            f
        })
        .collect();
    key.sort();
    key
}

/// Modules kept up to isomorphism.
struct Catalogue {
    caps: Caps,
    entries: Vec<ZooEntry>,
    buckets: HashMap<(usize, Vec<Vec<usize>>), Vec<usize>>,
}

impl Catalogue {
    fn new(caps: &Caps) -> Self {
        Catalogue {
            caps: *caps,
            entries: Vec::new(),
            buckets: HashMap::new(),
        }
    }

    fn insert(&mut self, module: FiniteSemimodule, origin: String) -> Result<bool> {
        let module = Arc::new(module);
        let key = (module.size(), fingerprint(&module));
        let bucket = self.buckets.entry(key).or_default();
        for &i in bucket.iter() {
            if find_isomorphism(&self.entries[i].module, &module, &self.caps)?.is_some() {
                return Ok(false);
            }
        }
        bucket.push(self.entries.len());
        self.entries.push(ZooEntry { module, origin });
        Ok(true)
    }

    /// Adds the subsemimodules and Bourne quotients of `entries[from..to]`.
    fn close_under_parts(&mut self, from: usize, to: usize) -> Result<()> {
        for i in from..to {
            let m = self.entries[i].module.clone();
            let origin = self.entries[i].origin.clone();
            for sub in enumerate_subsemimodules(&m, &self.caps)? {
                let (r, _) = m.restrict(&sub)?;
                self.insert((*r).clone(), format!("{} ≤ {origin}", sub.display(&m)))?;
            }
            // quotients by L and by its closure coincide, so subtractive L suffice
            for sub in enumerate_k_subsemimodules(&m, &self.caps)? {
                let (q, _) = bourne_quotient(&m, &sub)?;
                self.insert((*q).clone(), format!("{origin} / {}", sub.display(&m)))?;
            }
        }
        Ok(())
    }

    fn sorted(mut self) -> Vec<ZooEntry> {
        // stable: by size, then discovery order
        self.entries.sort_by_key(|e| e.module.size());
        self.entries
    }
}

/// Join tables of all lattices with at most `max_size` elements, up to
/// isomorphism, bottom at index 0.
pub fn lattices(max_size: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = Vec::new();
    if max_size >= 1 {
        out.push(vec![vec![0]]);
    }
    for n in 2..=max_size {
        let mut seen: HashMap<Vec<usize>, Vec<Vec<Vec<usize>>>> = HashMap::new();
        for join in labelled_lattices(n) {
            let key = sorted_profile(&join);
            let bucket = seen.entry(key).or_default();
            if !bucket.iter().any(|j| lattice_isomorphic(j, &join)) {
                bucket.push(join);
            }
        }
        let mut batch: Vec<Vec<Vec<usize>>> = seen.into_values().flatten().collect();
        batch.sort();
        out.extend(batch);
    }
    out
}

fn sorted_profile(join: &[Vec<usize>]) -> Vec<usize> {
    let n = join.len();
    let mut p: Vec<usize> = (0..n)
        .map(|x| {
            let down = (0..n).filter(|&y| join[x][y] == x).count();
            let up = (0..n).filter(|&y| join[x][y] == y).count();
            down * n + up
        })
        .collect();
    p.sort();
    p
}

/// Lattices on `0..n` with `0` bottom, `n-1` top, and `x < y` only when
/// `x` has index below `y`. Down-set sizes are non-decreasing along the
/// labelling, which every lattice admits, so far fewer relabelings appear.
fn labelled_lattices(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mid: Vec<(usize, usize)> = (1..n - 1)
        .flat_map(|j| (1..j).map(move |i| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << mid.len()) {
        let mut le = vec![vec![false; n]; n];
        for x in 0..n {
            le[0][x] = true;
            le[x][n - 1] = true;
            le[x][x] = true;
        }
        for (bit, &(i, j)) in mid.iter().enumerate() {
            le[i][j] = mask >> bit & 1 == 1;
        }
        let transitive = (0..n).all(|i| {
            (i..n).all(|j| !le[i][j] || (j..n).all(|k| !le[j][k] || le[i][k]))
        });
        if !transitive {
            continue;
        }
        let down: Vec<usize> = (0..n).map(|x| (0..n).filter(|&y| le[y][x]).count()).collect();
        if down.windows(2).any(|w| w[0] > w[1]) {
            continue;
        }
        let mut join = vec![vec![0; n]; n];
        let mut ok = true;
        'pairs: for x in 0..n {
            for y in x..n {
                let ub: Vec<usize> = (0..n).filter(|&u| le[x][u] && le[y][u]).collect();
                match ub.iter().find(|&&u| ub.iter().all(|&v| le[u][v])) {
                    Some(&u) => {
                        join[x][y] = u;
                        join[y][x] = u;
                    }
                    None => {
                        ok = false;
                        break 'pairs;
                    }
                }
            }
        }
        if ok {
            out.push(join);
        }
    }
    out
}

/// Brute-force over bijections fixing bottom, pruned by down-set sizes.
fn lattice_isomorphic(a: &[Vec<usize>], b: &[Vec<usize>]) -> bool {
    let n = a.len();
    let down = |j: &[Vec<usize>], x: usize| (0..n).filter(|&y| j[x][y] == x).count();
    let (da, db): (Vec<usize>, Vec<usize>) = ((0..n).map(|x| down(a, x)).collect(), (0..n).map(|x| down(b, x)).collect());
    fn extend(
        x: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        a: &[Vec<usize>],
        b: &[Vec<usize>],
        da: &[usize],
        db: &[usize],
    ) -> bool {
        let n = a.len();
        if x == n {
            return (0..n).all(|p| (0..n).all(|q| map[a[p][q]] == b[map[p]][map[q]]));
        }
        for y in 0..n {
            if !used[y] && da[x] == db[y] {
                map[x] = y;
                used[y] = true;
                // joins among already-mapped elements must agree
                let consistent = (0..=x).all(|p| {
                    let j = a[p][x];
                    j > x || map[j] == b[map[p]][y]
                });
                if consistent && extend(x + 1, map, used, a, b, da, db) {
                    return true;
                }
                used[y] = false;
            }
        }
        false
    }
    extend(0, &mut vec![0; n], &mut vec![false; n], a, b, &da, &db)
}

fn module_from(
    scalars: &Arc<FiniteSemiring>,
    add: Vec<Vec<usize>>,
    action: Vec<Vec<usize>>,
    label: String,
) -> Result<FiniteSemimodule> {
    let t = ModuleTables {
        size: add.len(),
        add,
        action,
        zero: 0,
        label,
        elements: None,
    };
    FiniteSemimodule::from_tables(scalars.clone(), t)
}

/// Join-semilattices as `𝔹`-modules.
fn boolean_modules(s: &Arc<FiniteSemiring>, lats: &[Vec<Vec<usize>>], cat: &mut Catalogue) -> Result<()> {
    for (i, join) in lats.iter().enumerate() {
        let n = join.len();
        let action = vec![vec![0; n], (0..n).collect()];
        let m = module_from(s, join.clone(), action, format!("lattice #{i}"))?;
        cat.insert(m, format!("lattice #{i} (size {n})"))?;
    }
    Ok(())
}

/// `ℤₚᵏ` for every `k` that fits.
fn vector_spaces(s: &Arc<FiniteSemiring>, max_size: usize, cat: &mut Catalogue) -> Result<()> {
    cat.insert(FiniteSemimodule::zero_module(s.clone()), "0".into())?;
    let (mut size, mut k) = (s.size(), 1);
    while size <= max_size {
        let m = FiniteSemimodule::power(s.clone(), k, &cat.caps)?;
        cat.insert(m, format!("{}^{k}", s.label()))?;
        size *= s.size();
        k += 1;
    }
    Ok(())
}

/// Lattices with a join-preserving, idempotent, deflationary operator, as
/// modules over the chain `{0 < a < 1}`. Scalar indices follow the
/// canonical order `0, 1, a`.
fn chain_modules(s: &Arc<FiniteSemiring>, lats: &[Vec<Vec<usize>>], cat: &mut Catalogue) -> Result<()> {
    for (i, join) in lats.iter().enumerate() {
        let n = join.len();
        let le = |x: usize, y: usize| join[x][y] == y;
        let mut op = vec![usize::MAX; n];
        op[0] = 0;
        let mut found = Vec::new();
        fn assign(
            x: usize,
            op: &mut Vec<usize>,
            join: &[Vec<usize>],
            le: &dyn Fn(usize, usize) -> bool,
            found: &mut Vec<Vec<usize>>,
        ) {
            let n = join.len();
            if x == n {
                let ok = (0..n).all(|p| {
                    op[op[p]] == op[p] && (0..n).all(|q| op[join[p][q]] == join[op[p]][op[q]])
                });
                if ok {
                    found.push(op.clone());
                }
                return;
            }
            for y in 0..n {
                if !le(y, x) || (y < x && op[y] != y) {
                    continue;
                }
                op[x] = y;
                // joins that land on x are already decided
                let ok = (0..x).all(|p| join[p][x] != x || join[op[p]][y] == y);
                if ok {
                    assign(x + 1, op, join, le, found);
                }
            }
        }
        assign(1, &mut op, join, &le, &mut found);
        for (j, a) in found.into_iter().enumerate() {
            let action = vec![vec![0; n], (0..n).collect(), a];
            let m = module_from(s, join.clone(), action, format!("lattice #{i} with operator #{j}"))?;
            cat.insert(m, format!("lattice #{i} (size {n}) with operator #{j}"))?;
        }
    }
    Ok(())
}

/// Linear maps `ℤ₂^from → ℤ₂^to` as images of the basis vectors.
fn gf2_maps(from: u32, to: u32) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..from {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..1usize << to).map(move |img| {
                    let mut w = v.clone();
                    w.push(img);
                    w
                })
            })
            .collect();
    }
    out
}

fn gf2_apply(basis_images: &[usize], g: usize) -> usize {
    basis_images
        .iter()
        .enumerate()
        .filter(|(b, _)| g >> b & 1 == 1)
        .fold(0, |acc, (_, &img)| acc ^ img)
}

/// Strong semilattices of elementary abelian 2-groups over each lattice of
/// components: the commutative monoids with `3m = m`, which are exactly the
/// `B(3,1)`-modules (`2·m = m + m`).
fn b31_modules(
    s: &Arc<FiniteSemiring>,
    lats: &[Vec<Vec<usize>>],
    max_size: usize,
    cat: &mut Catalogue,
) -> Result<()> {
    for (li, join) in lats.iter().enumerate() {
        let ny = join.len();
        let le = |x: usize, y: usize| join[x][y] == y;
        let covers: Vec<(usize, usize)> = (0..ny)
            .flat_map(|b| (0..ny).map(move |a| (a, b)))
            .filter(|&(a, b)| a != b && le(a, b) && !(0..ny).any(|c| c != a && c != b && le(a, c) && le(c, b)))
            .collect();
        // group ranks per component
        let mut ranks = vec![vec![0u32; ny]];
        for y in 0..ny {
            ranks = ranks
                .into_iter()
                .flat_map(|r| {
                    (0..=3u32).map(move |k| {
                        let mut r = r.clone();
                        r[y] = k;
                        r
                    })
                })
                .filter(|r| r.iter().map(|&k| 1usize << k).sum::<usize>() <= max_size)
                .collect();
        }
        for rank in ranks {
            let choices: Vec<Vec<Vec<usize>>> = covers.iter().map(|&(a, b)| gf2_maps(rank[a], rank[b])).collect();
            let mut pick = vec![0usize; covers.len()];
            loop {
                if let Some(m) = strong_semilattice(s, join, &rank, &covers, &choices, &pick)? {
                    cat.insert(m, format!("lattice #{li} with group ranks {rank:?}"))?;
                }
                // odometer over cover maps
                let mut pos = 0;
                while pos < pick.len() {
                    pick[pos] += 1;
                    if pick[pos] < choices[pos].len() {
                        break;
                    }
                    pick[pos] = 0;
                    pos += 1;
                }
                if pos == pick.len() {
                    break;
                }
            }
        }
    }
    Ok(())
}

/// Builds the monoid from maps on covering pairs, or `None` when two paths
/// between the same components induce different maps.
fn strong_semilattice(
    s: &Arc<FiniteSemiring>,
    join: &[Vec<usize>],
    rank: &[u32],
    covers: &[(usize, usize)],
    choices: &[Vec<Vec<usize>>],
    pick: &[usize],
) -> Result<Option<FiniteSemimodule>> {
    let ny = join.len();
    let le = |x: usize, y: usize| join[x][y] == y;
    // phi[a][b][g] for a ≤ b; lattice indices are a linear extension
    let mut phi: Vec<Vec<Option<Vec<usize>>>> = vec![vec![None; ny]; ny];
    for a in 0..ny {
        phi[a][a] = Some((0..1usize << rank[a]).collect());
        for b in a + 1..ny {
            if !le(a, b) {
                continue;
            }
            let mut via: Option<Vec<usize>> = None;
            for (ci, &(c, d)) in covers.iter().enumerate() {
                if d != b || !le(a, c) {
                    continue;
                }
                let inner = phi[a][c].as_ref().expect("c precedes b");
                let step = &choices[ci][pick[ci]];
                let composed: Vec<usize> = inner.iter().map(|&g| gf2_apply(step, g)).collect();
                match &via {
                    None => via = Some(composed),
                    Some(v) if *v == composed => {}
                    Some(_) => return Ok(None),
                }
            }
            phi[a][b] = via;
        }
    }
    let mut offset = vec![0usize; ny + 1];
    for y in 0..ny {
        offset[y + 1] = offset[y] + (1usize << rank[y]);
    }
    let n = offset[ny];
    let locate = |x: usize| {
        let y = (0..ny).rfind(|&y| offset[y] <= x).expect("offset[0] = 0");
        (y, x - offset[y])
    };
    let mut add = vec![vec![0; n]; n];
    for x in 0..n {
        for z in 0..n {
            let ((a, g), (b, h)) = (locate(x), locate(z));
            let top = join[a][b];
            let (pg, ph) = (
                phi[a][top].as_ref().expect("a ≤ a∨b")[g],
                phi[b][top].as_ref().expect("b ≤ a∨b")[h],
            );
            add[x][z] = offset[top] + (pg ^ ph);
        }
    }
    let action = vec![vec![0; n], (0..n).collect(), (0..n).map(|x| add[x][x]).collect()];
    module_from(s, add, action, "strong semilattice".into()).map(Some)
}

/// Every semimodule of size at most `max_size` over one of the sweep
/// semirings, up to isomorphism, smallest first.
pub fn all_modules(s: &Arc<FiniteSemiring>, max_size: usize, caps: &Caps) -> Result<Vec<ZooEntry>> {
    let which = SWEEP
        .iter()
        .position(|f| build_named(f).is_ok_and(|b| b.same_tables(s)))
        .ok_or_else(|| Error::Domain(format!("no classification of modules over {}", s.label())))?;
    let mut cat = Catalogue::new(caps);
    match SWEEP[which] {
        Family::Zmod { .. } => vector_spaces(s, max_size, &mut cat)?,
        Family::Boolean => boolean_modules(s, &lattices(max_size), &mut cat)?,
        Family::Bni { .. } => b31_modules(s, &lattices(max_size), max_size, &mut cat)?,
        _ => chain_modules(s, &lattices(max_size), &mut cat)?,
    }
    Ok(cat.sorted())
}

/// The exhaustive sweep over all five scalar semirings.
pub fn standard_zoo(max_size: usize) -> Vec<ZooEntry> {
    let caps = Caps::default();
    sweep_scalars()
        .iter()
        .flat_map(|s| all_modules(s, max_size, &caps).expect("sweep fits the default caps"))
        .collect()
}

/// Zero, regular and power modules over each semiring, their
/// subsemimodules and Bourne quotients, pairwise direct sums that fit, and
/// the parts of those sums.
pub fn constructive_zoo(scalars: &[Arc<FiniteSemiring>], max_size: usize, caps: &Caps) -> Result<Vec<ZooEntry>> {
    let mut out = Vec::new();
    for s in scalars {
        let mut cat = Catalogue::new(caps);
        let name = s.label().to_string();
        cat.insert(FiniteSemimodule::zero_module(s.clone()), "0".into())?;
        let (mut size, mut k) = (s.size(), 1);
        while size <= max_size {
            let p = FiniteSemimodule::power(s.clone(), k, caps)?;
            cat.insert(p, if k == 1 { name.clone() } else { format!("{name}^{k}") })?;
            k += 1;
            size *= s.size();
        }
        let base = cat.entries.len();
        cat.close_under_parts(0, base)?;
        let parts = cat.entries.len();
        for i in 0..parts {
            for j in i..parts {
                let (a, b) = (cat.entries[i].module.clone(), cat.entries[j].module.clone());
                if a.size() * b.size() > max_size || a.size() == 1 || b.size() == 1 {
                    continue;
                }
                let sum = FiniteSemimodule::direct_sum(&[a, b], caps)?;
                let origin = format!("({}) ⊕ ({})", cat.entries[i].origin, cat.entries[j].origin);
                cat.insert(sum, origin)?;
            }
        }
        let sums = cat.entries.len();
        cat.close_under_parts(parts, sums)?;
        out.extend(cat.sorted());
    }
    Ok(out)
}
