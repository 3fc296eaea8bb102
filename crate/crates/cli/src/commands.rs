use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use semikit::case::{chain_demo, classify_k_closure_with, ChainWitness};
use semikit::format::{load_path, Document};
use semikit::injectivity::{
    is_e_injective_rel, is_i_injective_rel, is_injective_rel, Counterexample, InjectivityVerdict,
};
use semikit::mat2::Sampler;
use semikit::morphism::{check_exact, ImageKernelMismatch, ShortExactSequence};
use semikit::semimodule::enumerate_k_subsemimodules;
use semikit::structure::{direct_summand_complements, direct_summands, summands_via_comp};
use semikit::{Caps, Error, FiniteSemimodule, KIdealLattice, Result};
use serde_json::{json, Value};

use crate::{cache, Cli, Command, Format, LatticeKind};

/// A finished command: its verdict and the renderings it supports.
pub struct Report {
    pub ok: bool,
    pub json: Value,
    pub text: String,
    pub dot: Option<String>,
}

impl Report {
    fn new(ok: bool, json: Value, text: String) -> Self {
        Report { ok, json, text, dot: None }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("reports serialize");
                s.push('\n');
                Ok(s)
            }
            Format::Text => Ok(self.text.clone()),
            Format::Dot => self
                .dot
                .clone()
                .ok_or_else(|| Error::Parameter("this command has no DOT rendering".into())),
        }
    }
}

pub fn run(cli: &Cli) -> Result<Report> {
    let caps = cli.caps();
    caps.validate()?;
    match &cli.command {
        Command::Axioms { file } => axioms(file, &caps),
        Command::Ideals { file, lattice } => ideals(file, *lattice, &caps),
        Command::Summands { file } => summands(file, &caps),
        Command::Exact { file } => exact(file, &caps),
        Command::Injective { file, relative_to } => injective(file, relative_to, &caps),
        Command::Classify { file } => classify(file, cli.seed, &caps),
        Command::Chains { kind, depth } => chains((*kind).into(), *depth),
        Command::EmitDot { file, lattice } => ideals(file, *lattice, &caps),
    }
}

/// A module from a module file, or the regular module of a semiring file.
fn load_module(path: &Path, caps: &Caps) -> Result<Arc<FiniteSemimodule>> {
    match load_path(path, caps)? {
        Document::Module(m) => Ok(m),
        Document::Semiring(s) => Ok(Arc::new(FiniteSemimodule::regular(s))),
        other => Err(Error::Parameter(format!(
            "{}: expected a semiring or semimodule, found a {}",
            path.display(),
            other.kind()
        ))),
    }
}

fn axioms(path: &Path, caps: &Caps) -> Result<Report> {
    match load_path(path, caps) {
        Ok(Document::Semiring(s)) => {
            let json = json!({
                "kind": "semiring",
                "label": s.label(),
                "size": s.size(),
                "passed": true,
                "additively_idempotent": s.is_additively_idempotent(),
                "additive_inverses": s.has_additive_inverses(),
                "commutative": s.is_commutative(),
            });
            let text = format!(
                "semiring {} of size {}: all axioms hold\nadditively idempotent: {}\nadditive inverses: {}\ncommutative: {}\n",
                s.label(),
                s.size(),
                s.is_additively_idempotent(),
                s.has_additive_inverses(),
                s.is_commutative()
            );
            Ok(Report::new(true, json, text))
        }
        Ok(Document::Module(m)) => {
            let json = json!({
                "kind": "module",
                "label": m.label(),
                "scalars": m.scalars().label(),
                "size": m.size(),
                "passed": true,
                "cancellative": m.is_cancellative(),
            });
            let text = format!(
                "semimodule {} over {} of size {}: all axioms hold\ncancellative: {}\n",
                m.label(),
                m.scalars().label(),
                m.size(),
                m.is_cancellative()
            );
            Ok(Report::new(true, json, text))
        }
        Ok(other) => Err(Error::Parameter(format!(
            "axioms expects a semiring or semimodule, found a {}",
            other.kind()
        ))),
        Err(Error::Axioms { label, report }) => {
            let json = json!({
                "label": label,
                "passed": false,
                "violations": report.violations,
            });
            Ok(Report::new(false, json, format!("{label}: {report}\n")))
        }
        Err(e) => Err(e),
    }
}

fn lattice_json(m: &FiniteSemimodule, kind: LatticeKind, l: &KIdealLattice) -> Value {
    json!({
        "module": m.label(),
        "size": m.size(),
        "lattice": kind.name(),
        "nodes": (0..l.nodes().len()).map(|i| l.node_label(i)).collect::<Vec<_>>(),
        "covers": l.covers(),
        "metrics": l.metrics(),
    })
}

fn ideals(path: &Path, kind: LatticeKind, caps: &Caps) -> Result<Report> {
    let m = load_module(path, caps)?;
    let l = cache::lattice(&m, caps, kind)?;
    let metrics = l.metrics();
    let mut text = format!(
        "{} of {} (size {}): {} nodes, {} covers, height {}, width {}\n",
        kind.name(),
        m.label(),
        m.size(),
        l.nodes().len(),
        l.covers().len(),
        metrics.height,
        metrics.width
    );
    for i in 0..l.nodes().len() {
        let _ = writeln!(text, "  {i}: {}", l.node_label(i));
    }
    let chain: Vec<String> = metrics.chain.iter().map(|&i| l.node_label(i)).collect();
    let _ = writeln!(text, "longest chain: {}", chain.join(" < "));
    let mut r = Report::new(true, lattice_json(&m, kind, &l), text);
    r.dot = Some(l.to_dot(m.label()));
    Ok(r)
}

fn summands(path: &Path, caps: &Caps) -> Result<Report> {
    let m = load_module(path, caps)?;
    let found = direct_summands(&m, caps)?;
    let via_comp = summands_via_comp(&m, caps)?;
    let agree = found == via_comp;
    let mut entries = Vec::new();
    let mut text = format!("direct summands of {} (size {}): {}\n", m.label(), m.size(), found.len());
    for n in &found {
        let complements: Vec<String> = direct_summand_complements(&m, n, caps)?
            .iter()
            .map(|c| c.complement.display(&m))
            .collect();
        let _ = writeln!(text, "  {} ⊕ {}", n.display(&m), complements.join(" | "));
        entries.push(json!({ "summand": n.display(&m), "complements": complements }));
    }
    let _ = writeln!(text, "Comp(End) images agree: {agree}");
    let json = json!({
        "module": m.label(),
        "size": m.size(),
        "summands": entries,
        "comp_images": via_comp.iter().map(|n| n.display(&m)).collect::<Vec<_>>(),
        "agree": agree,
    });
    Ok(Report::new(agree, json, text))
}

fn exact(path: &Path, caps: &Caps) -> Result<Report> {
    let maps = match load_path(path, caps)? {
        Document::Sequence(maps) => maps,
        other => {
            return Err(Error::Parameter(format!(
                "exact expects a sequence of maps, found a {}",
                other.kind()
            )))
        }
    };
    let v = check_exact(&maps)?;
    let mut text = format!("exact: {}\n", v.exact);
    for (i, j) in v.junctions.iter().enumerate() {
        let module = maps[i].target();
        let _ = write!(
            text,
            "  junction at {}: image = kernel {}, k-normal {}",
            module.label(),
            j.image_equals_kernel,
            j.k_normal
        );
        match j.image_witness {
            Some(ImageKernelMismatch::InKernelNotImage(x)) => {
                let _ = write!(text, ", {} is in the kernel but not the image", module.element_label(x));
            }
            Some(ImageKernelMismatch::InImageNotKernel(x)) => {
                let _ = write!(text, ", {} is in the image but not the kernel", module.element_label(x));
            }
            None => {}
        }
        if let Some((a, b)) = j.k_normal_witness {
            let _ = write!(
                text,
                ", {} and {} share an image but not a Bourne class",
                module.element_label(a),
                module.element_label(b)
            );
        }
        text.push('\n');
    }
    let json = serde_json::to_value(&v).expect("verdicts serialize");
    Ok(Report::new(v.exact, json, text))
}

fn counterexample_json(m: &FiniteSemimodule, c: &Counterexample) -> Value {
    match c {
        Counterexample::Extension { sub, g, verified } => json!({
            "type": "extension",
            "sub": sub.display(m),
            "g": g,
            "verified": verified,
        }),
        Counterexample::Junction { index, verdict } => json!({
            "type": "junction",
            "index": index,
            "verdict": verdict,
        }),
    }
}

fn verdict_json(m: &FiniteSemimodule, v: &InjectivityVerdict) -> Value {
    json!({
        "holds": v.holds,
        "counterexample": v.counterexample.as_ref().map(|c| counterexample_json(m, c)),
    })
}

fn injective(path: &Path, relative_to: &[std::path::PathBuf], caps: &Caps) -> Result<Report> {
    let i = load_module(path, caps)?;
    let mut rows = Vec::new();
    let mut ok = true;
    let mut text = format!("{:<24} {:>9} {:>11} {:>11}\n", "relative to", "injective", "i-injective", "e-injective");
    for p in relative_to {
        let m = load_module(p, caps)?;
        let inj = is_injective_rel(&i, &m, caps)?;
        let i_inj = is_i_injective_rel(&i, &m, caps)?;
        // e-injectivity along every Bourne sequence 0 → L → M → M/L → 0
        let mut e_inj: Option<(String, InjectivityVerdict)> = None;
        for l in enumerate_k_subsemimodules(&m, caps)? {
            let ses = ShortExactSequence::bourne(&m, &l)?;
            let v = is_e_injective_rel(&i, &ses, caps)?;
            if !v.holds {
                e_inj = Some((l.display(&m), v));
                break;
            }
        }
        ok &= i_inj.holds;
        let _ = writeln!(
            text,
            "{:<24} {:>9} {:>11} {:>11}",
            m.label(),
            inj.holds,
            i_inj.holds,
            e_inj.is_none()
        );
        rows.push(json!({
            "module": m.label(),
            "injective": verdict_json(&m, &inj),
            "i_injective": verdict_json(&m, &i_inj),
            "e_injective": match &e_inj {
                None => json!({ "holds": true, "counterexample": null }),
                Some((l, v)) => json!({
                    "holds": false,
                    "subsemimodule": l,
                    "counterexample": v.counterexample.as_ref().map(|c| counterexample_json(&m, c)),
                }),
            },
        }));
    }
    let json = json!({ "module": i.label(), "grid": rows });
    Ok(Report::new(ok, json, text))
}

fn classify(path: &Path, seed: u64, caps: &Caps) -> Result<Report> {
    let gens = match load_path(path, caps)? {
        Document::Generators(g) => g,
        other => {
            return Err(Error::Parameter(format!(
                "classify expects a list of matrices, found a {}",
                other.kind()
            )))
        }
    };
    let c = classify_k_closure_with(&gens, Sampler::new(seed))?;
    let mut text = format!("{}\n", c.family);
    for w in &c.generator_witnesses {
        let _ = writeln!(text, "  {} + {} = {}", w.target, w.ell, w.ell_prime);
    }
    let _ = writeln!(text, "checked {} members, verified {}", c.members_checked, c.verified);
    let json = serde_json::to_value(&c).expect("classifications serialize");
    Ok(Report::new(c.verified, json, text))
}

fn chains(kind: semikit::case::ChainKind, depth: usize) -> Result<Report> {
    let demo = chain_demo(kind, depth)?;
    let mut text = format!(
        "{} chain of depth {}: {} strict separations\n",
        serde_json::to_value(demo.kind).expect("kinds serialize").as_str().unwrap_or_default(),
        demo.depth,
        demo.separations.iter().filter(|s| s.verified).count()
    );
    for s in &demo.separations {
        let witness = match &s.witness {
            ChainWitness::Matrix(m) => m.to_string(),
            ChainWitness::Integer(n) => n.to_string(),
        };
        let _ = writeln!(text, "  {} ⊋ {}: {}", s.larger, s.smaller, witness);
    }
    let json = serde_json::to_value(&demo).expect("demos serialize");
    Ok(Report::new(demo.strict(), json, text))
}
