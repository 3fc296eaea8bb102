//! Content-addressed cache of computed lattices.
//!
//! Enabled by `SEMIKIT_CACHE_DIR`. The key is the SHA-256 of the module's
//! canonical JSON, the caps and the lattice kind, so any change to the
//! structure or the limits misses. Entries are revalidated on load and a
//! corrupt entry is recomputed.

use std::path::PathBuf;
use std::sync::Arc;

use semikit::format::module_to_value;
use semikit::semimodule::{enumerate_k_subsemimodules, enumerate_subsemimodules, Subsemimodule};
use semikit::structure::direct_summands;
use semikit::{Caps, FiniteSemimodule, KIdealLattice, Result};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::LatticeKind;

pub const CACHE_ENV: &str = "SEMIKIT_CACHE_DIR";

const FORMAT_VERSION: u32 = 1;

pub fn key(m: &FiniteSemimodule, caps: &Caps, kind: LatticeKind) -> String {
    let material = json!({
        "version": FORMAT_VERSION,
        "module": module_to_value(m),
        "caps": serde_json::to_value(caps).expect("caps serialize"),
        "lattice": kind.name(),
    });
    hex::encode(Sha256::digest(material.to_string().as_bytes()))
}

fn compute(m: &Arc<FiniteSemimodule>, caps: &Caps, kind: LatticeKind) -> Result<Vec<Subsemimodule>> {
    match kind {
        LatticeKind::K => enumerate_k_subsemimodules(m, caps),
        LatticeKind::Sub => enumerate_subsemimodules(m, caps),
        LatticeKind::Summands => direct_summands(m, caps),
    }
}

fn read(path: &PathBuf, m: &FiniteSemimodule) -> Option<Vec<Subsemimodule>> {
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).ok()?).ok()?;
    let nodes: Vec<Vec<usize>> = serde_json::from_value(v.get("nodes")?.clone()).ok()?;
    nodes
        .into_iter()
        .map(|members| Subsemimodule::new(m, members).ok())
        .collect()
}

pub fn lattice(m: &Arc<FiniteSemimodule>, caps: &Caps, kind: LatticeKind) -> Result<KIdealLattice> {
    let labels = m.element_labels().to_vec();
    let Some(dir) = std::env::var_os(CACHE_ENV).map(PathBuf::from) else {
        return Ok(KIdealLattice::from_nodes(compute(m, caps, kind)?, labels));
    };
    let path = dir.join(format!("{}.json", key(m, caps, kind)));
    if let Some(nodes) = read(&path, m) {
        return Ok(KIdealLattice::from_nodes(nodes, labels));
    }
    let nodes = compute(m, caps, kind)?;
    let entry = json!({
        "lattice": kind.name(),
        "nodes": nodes.iter().map(Subsemimodule::members).collect::<Vec<_>>(),
    });
    let stored = std::fs::create_dir_all(&dir).and_then(|()| std::fs::write(&path, entry.to_string()));
    if let Err(e) = stored {
        eprintln!("warning: cannot write cache entry {}: {e}", path.display());
    }
    Ok(KIdealLattice::from_nodes(nodes, labels))
}
