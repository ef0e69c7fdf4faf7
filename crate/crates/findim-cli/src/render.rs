//! Rendering of classification tables, decisions, graphs and closure results,
//! in both human-readable text and JSON.
//!
//! Conventions shared by both forms: generator and basis indices are 1-based;
//! rationals are exact strings (`"num"` or `"num/den"`, reduced, positive
//! denominator); lattice entries are JSON numbers (strings only in the
//! astronomically unlikely case they leave the 64-bit range). Output is
//! byte-deterministic for a fixed input and flag set.

use num_traits::{One, Signed, ToPrimitive};
use serde_json::{json, Value};

use findim_core::closure::{
    model_filiform, series_analysis, CapKind, ClosureResult, FiliformChain, SeriesReport,
    StructureConstants,
};
use findim_core::criteria::{DecisionReport, RTableEntry, Type2Violation, Verdict, Witness};
use findim_core::graph::{gamma_type1, gamma_type2, DiGraph};
use findim_core::{
    DerivationClass, HomogeneousDerivation, Int, LatticeVector, Rat, RationalVector,
};

pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn int_json(v: &Int) -> Value {
    match v.to_i64() {
        Some(small) => json!(small),
        None => json!(v.to_string()),
    }
}

fn lattice_json(v: &LatticeVector) -> Value {
    Value::Array(v.entries().iter().map(int_json).collect())
}

fn coeffs_json(v: &RationalVector) -> Value {
    Value::Array(v.entries().iter().map(|r| json!(rat_string(r))).collect())
}

fn index_json(indices: &[usize]) -> Value {
    Value::Array(indices.iter().map(|&i| json!(i + 1)).collect())
}

fn gen_names(indices: &[usize]) -> String {
    if indices.is_empty() {
        return "(none)".to_string();
    }
    indices
        .iter()
        .map(|&i| format!("D{}", i + 1))
        .collect::<Vec<_>>()
        .join(", ")
}

fn cycle_arrows(cycle: &[usize]) -> String {
    cycle
        .iter()
        .map(|&v| format!("D{}", v + 1))
        .collect::<Vec<_>>()
        .join(" -> ")
}

/// Classification of a full generator set, shared by most commands.
pub struct Analysis {
    pub gens: Vec<HomogeneousDerivation>,
    pub classes: Vec<DerivationClass>,
}

impl Analysis {
    pub fn new(gens: Vec<HomogeneousDerivation>) -> Self {
        let classes = gens.iter().map(|g| g.classify()).collect();
        Analysis { gens, classes }
    }

    /// The generator graph of the detected homogeneous type, with pretty
    /// labels; `None` for mixed or Laurent-containing sets. The empty set
    /// gets an empty graph.
    pub fn generator_graph(&self) -> Option<(&'static str, DiGraph)> {
        if self.gens.is_empty() {
            return Some(("empty", DiGraph::new(0)));
        }
        let labels: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        if self.classes.iter().all(DerivationClass::is_type1) {
            let data: Vec<_> = self
                .classes
                .iter()
                .map(|c| match c {
                    DerivationClass::TypeI(d) => d.clone(),
                    _ => unreachable!("checked above"),
                })
                .collect();
            let edges = gamma_type1(&data).expect("uniform dimensions");
            let mut g = DiGraph::with_labels(labels);
            for (u, v) in edges.edges() {
                g.add_edge(u, v).expect("edge endpoints in range");
            }
            return Some(("type-i", g));
        }
        if self.classes.iter().all(DerivationClass::is_type2) {
            let data: Vec<_> = self
                .classes
                .iter()
                .map(|c| match c {
                    DerivationClass::TypeII(d) => d.clone(),
                    _ => unreachable!("checked above"),
                })
                .collect();
            let edges = gamma_type2(&data).expect("uniform dimensions");
            let mut g = DiGraph::with_labels(labels);
            for (u, v) in edges.edges() {
                g.add_edge(u, v).expect("edge endpoints in range");
            }
            return Some(("type-ii", g));
        }
        None
    }
}

fn class_text(class: &DerivationClass) -> String {
    match class {
        DerivationClass::TypeI(d) => format!("type I (i={}, a={})", d.var + 1, d.exponents),
        DerivationClass::TypeII(d) => {
            format!("type II (p={}, beta={})", d.degree, d.coeffs)
        }
        DerivationClass::LaurentOnly => "laurent-only (not a polynomial derivation)".to_string(),
        DerivationClass::Zero => "zero".to_string(),
    }
}

fn class_json(class: &DerivationClass) -> Value {
    match class {
        DerivationClass::TypeI(d) => json!({
            "kind": "type-i",
            "i": d.var + 1,
            "a": lattice_json(&d.exponents),
        }),
        DerivationClass::TypeII(d) => json!({
            "kind": "type-ii",
            "p": lattice_json(&d.degree),
            "beta": coeffs_json(&d.coeffs),
        }),
        DerivationClass::LaurentOnly => json!({ "kind": "laurent-only" }),
        DerivationClass::Zero => json!({ "kind": "zero" }),
    }
}

pub fn classify_text(analysis: &Analysis, n: usize) -> String {
    let mut out = format!("n = {n}\n");
    if analysis.gens.is_empty() {
        out.push_str("(no generators)\n");
        return out;
    }
    for (k, (g, class)) in analysis.gens.iter().zip(&analysis.classes).enumerate() {
        out.push_str(&format!(
            "D{idx}: {g}  [{class}]  degree={deg} weight={w}\n",
            idx = k + 1,
            class = class_text(class),
            deg = g.degree(),
            w = g.weight(),
        ));
    }
    out
}

pub fn classify_json(analysis: &Analysis, n: usize) -> Value {
    let generators: Vec<Value> = analysis
        .gens
        .iter()
        .zip(&analysis.classes)
        .enumerate()
        .map(|(k, (g, class))| {
            json!({
                "index": k + 1,
                "display": g.to_string(),
                "degree": lattice_json(g.degree()),
                "coeffs": coeffs_json(g.coeffs()),
                "weight": int_json(&g.weight()),
                "class": class_json(class),
            })
        })
        .collect();
    json!({ "n": n, "generators": generators })
}

pub fn graph_text(kind: &str, graph: &DiGraph) -> String {
    let mut out = format!(
        "graph: {} generator graph on {} vertices\n",
        match kind {
            "type-i" => "type I",
            "type-ii" => "type II",
            _ => "empty",
        },
        graph.vertex_count()
    );
    if graph.edge_count() == 0 {
        out.push_str("edges: (none)\n");
    } else {
        out.push_str("edges:\n");
        for (u, v) in graph.edges() {
            out.push_str(&format!("  D{} -> D{}\n", u + 1, v + 1));
        }
    }
    out
}

pub fn graph_json(kind: &str, graph: &DiGraph) -> Value {
    let edges: Vec<Value> = graph.edges().map(|(u, v)| json!([u + 1, v + 1])).collect();
    json!({
        "kind": kind,
        "vertices": graph.vertex_count(),
        "edges": edges,
        "dot": graph.to_dot(),
    })
}

fn r_table_text(table: &[RTableEntry]) -> String {
    if table.is_empty() {
        return "  (empty)\n".to_string();
    }
    let mut out = String::new();
    for entry in table {
        out.push_str(&format!(
            "  r(D{}, D{}) = {}\n",
            entry.earlier + 1,
            entry.later + 1,
            entry.r
        ));
    }
    out
}

const UNDECIDED_NOTE: &str =
    "no exact criterion covers this set; run `findim closure` for a capped semidecision";

pub fn decide_text(analysis: &Analysis, report: &DecisionReport) -> String {
    let mut out = String::new();
    match &report.witness {
        Witness::Empty => {
            out.push_str("verdict: finite\n");
            out.push_str("the empty set generates the zero algebra (dimension 0)\n");
        }
        Witness::Type1Finite { cycle_vertices } => {
            out.push_str("verdict: finite (locally nilpotent criterion)\n");
            if cycle_vertices.is_empty() {
                out.push_str("generator graph is acyclic\n");
            } else {
                out.push_str(&format!(
                    "cycle vertices, all of weight zero: {}\n",
                    gen_names(cycle_vertices)
                ));
            }
        }
        Witness::Type1Infinite {
            cycle,
            positive_vertex,
        } => {
            out.push_str("verdict: infinite (locally nilpotent criterion)\n");
            out.push_str(&format!("witness cycle: {}\n", cycle_arrows(cycle)));
            out.push_str(&format!(
                "positive-weight vertex: D{} (weight {})\n",
                positive_vertex + 1,
                analysis.gens[*positive_vertex].weight()
            ));
        }
        Witness::Type2Finite {
            order,
            r_table,
            spectators,
        } => {
            out.push_str("verdict: finite (reorderability criterion)\n");
            out.push_str(&format!("ordering: {}\n", gen_names(order)));
            out.push_str("annihilating exponents:\n");
            out.push_str(&r_table_text(r_table));
            out.push_str(&format!(
                "weight-zero spectators: {}\n",
                gen_names(spectators)
            ));
        }
        Witness::Type2Infinite(violation) => {
            out.push_str("verdict: infinite (reorderability criterion)\n");
            match violation {
                Type2Violation::ProportionalWeightMismatch { i, j, pairing } => {
                    out.push_str(&format!(
                        "violation: D{} and D{} have proportional coefficient vectors but <beta, p({}) - p({})> = {} != 0\n",
                        i + 1, j + 1, i + 1, j + 1, rat_string(pairing)
                    ));
                }
                Type2Violation::NoFeasibleOrientation {
                    i,
                    j,
                    forward,
                    backward,
                } => {
                    out.push_str(&format!(
                        "violation: neither order of D{} and D{} satisfies the pair conditions\n",
                        i + 1,
                        j + 1
                    ));
                    out.push_str(&format!(
                        "  D{} before D{}: pairing vanishes: {}, annihilating exponent exists: {}\n",
                        i + 1, j + 1, forward.pairing_vanishes, forward.exponent_exists
                    ));
                    out.push_str(&format!(
                        "  D{} before D{}: pairing vanishes: {}, annihilating exponent exists: {}\n",
                        j + 1, i + 1, backward.pairing_vanishes, backward.exponent_exists
                    ));
                }
                Type2Violation::PrecedenceCycle { cycle } => {
                    out.push_str(&format!(
                        "violation: forced precedences form a cycle: {}\n",
                        cycle_arrows(cycle)
                    ));
                }
            }
        }
        Witness::Mixed {
            type1,
            type2,
            laurent,
        } => {
            out.push_str("verdict: undecided\n");
            out.push_str("reason: the set mixes generator classes\n");
            out.push_str(&format!("  type I: {}\n", gen_names(type1)));
            out.push_str(&format!("  type II: {}\n", gen_names(type2)));
            out.push_str(&format!("  laurent-only: {}\n", gen_names(laurent)));
            out.push_str(&format!("note: {UNDECIDED_NOTE}\n"));
        }
        Witness::LaurentPresent { laurent } => {
            out.push_str("verdict: undecided\n");
            out.push_str(&format!(
                "reason: laurent-only generators present: {}\n",
                gen_names(laurent)
            ));
            out.push_str(&format!("note: {UNDECIDED_NOTE}\n"));
        }
    }
    out
}

fn verdict_string(verdict: Verdict) -> &'static str {
    match verdict {
        Verdict::Finite => "finite",
        Verdict::Infinite => "infinite",
        Verdict::Undecided => "undecided",
    }
}

pub fn decide_json(report: &DecisionReport) -> Value {
    let verdict = verdict_string(report.verdict);
    match &report.witness {
        Witness::Empty => json!({
            "verdict": verdict,
            "kind": "empty",
            "dimension": 0,
        }),
        Witness::Type1Finite { cycle_vertices } => json!({
            "verdict": verdict,
            "kind": "type-i",
            "cycle_vertices": index_json(cycle_vertices),
        }),
        Witness::Type1Infinite {
            cycle,
            positive_vertex,
        } => json!({
            "verdict": verdict,
            "kind": "type-i",
            "cycle": index_json(cycle),
            "positive_vertex": positive_vertex + 1,
        }),
        Witness::Type2Finite {
            order,
            r_table,
            spectators,
        } => {
            let table: Vec<Value> = r_table
                .iter()
                .map(|e| {
                    json!({
                        "earlier": e.earlier + 1,
                        "later": e.later + 1,
                        "r": e.r.to_string(),
                    })
                })
                .collect();
            json!({
                "verdict": verdict,
                "kind": "type-ii",
                "order": index_json(order),
                "r_table": table,
                "spectators": index_json(spectators),
            })
        }
        Witness::Type2Infinite(violation) => {
            let violation_json = match violation {
                Type2Violation::ProportionalWeightMismatch { i, j, pairing } => json!({
                    "kind": "proportional-weight-mismatch",
                    "i": i + 1,
                    "j": j + 1,
                    "pairing": rat_string(pairing),
                }),
                Type2Violation::NoFeasibleOrientation {
                    i,
                    j,
                    forward,
                    backward,
                } => json!({
                    "kind": "no-feasible-orientation",
                    "i": i + 1,
                    "j": j + 1,
                    "forward": {
                        "pairing_vanishes": forward.pairing_vanishes,
                        "exponent_exists": forward.exponent_exists,
                    },
                    "backward": {
                        "pairing_vanishes": backward.pairing_vanishes,
                        "exponent_exists": backward.exponent_exists,
                    },
                }),
                Type2Violation::PrecedenceCycle { cycle } => json!({
                    "kind": "precedence-cycle",
                    "cycle": index_json(cycle),
                }),
            };
            json!({
                "verdict": verdict,
                "kind": "type-ii",
                "violation": violation_json,
            })
        }
        Witness::Mixed {
            type1,
            type2,
            laurent,
        } => json!({
            "verdict": verdict,
            "kind": "mixed",
            "type1": index_json(type1),
            "type2": index_json(type2),
            "laurent": index_json(laurent),
            "note": UNDECIDED_NOTE,
        }),
        Witness::LaurentPresent { laurent } => json!({
            "verdict": verdict,
            "kind": "laurent",
            "laurent": index_json(laurent),
            "note": UNDECIDED_NOTE,
        }),
    }
}

fn bracket_terms(coords: &[(usize, Rat)]) -> String {
    if coords.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (index, value)) in coords.iter().enumerate() {
        let magnitude = value.abs();
        if k == 0 {
            if value.is_negative() {
                out.push('-');
            }
        } else if value.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if !magnitude.is_one() {
            out.push_str(&rat_string(&magnitude));
            out.push('*');
        }
        out.push_str(&format!("b{}", index + 1));
    }
    out
}

fn series_text(series: &SeriesReport) -> String {
    let dims = |v: &[usize]| {
        v.iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    let mut out = String::new();
    out.push_str(&format!(
        "lower central series dims: {}\n",
        dims(&series.lower_central_dims)
    ));
    out.push_str(&format!(
        "derived series dims: {}\n",
        dims(&series.derived_dims)
    ));
    match series.nilpotency_class {
        Some(class) => out.push_str(&format!("nilpotency class: {class}\n")),
        None => out.push_str("nilpotency class: (not nilpotent)\n"),
    }
    out.push_str(&format!(
        "solvable: {}\n",
        if series.solvable { "yes" } else { "no" }
    ));
    out
}

fn series_json(series: &SeriesReport) -> Value {
    json!({
        "lower_central_dims": series.lower_central_dims,
        "derived_dims": series.derived_dims,
        "nilpotency_class": series.nilpotency_class,
        "solvable": series.solvable,
    })
}

fn chain_json(chain: &FiliformChain) -> Value {
    let elements: Vec<Value> = chain
        .elements
        .iter()
        .map(|d| {
            json!({
                "degree": lattice_json(d.degree()),
                "coeffs": coeffs_json(d.coeffs()),
                "display": d.to_string(),
            })
        })
        .collect();
    json!({ "filiform": true, "chain": elements })
}

fn constants_entries(sc: &StructureConstants) -> Vec<Value> {
    sc.nonzero_entries()
        .map(|(&(i, j), coords)| {
            let terms: Vec<Value> = coords
                .iter()
                .map(|(k, v)| json!({ "basis_index": k + 1, "value": rat_string(v) }))
                .collect();
            json!({ "left": i + 1, "right": j + 1, "bracket": terms })
        })
        .collect()
}

pub fn closure_text(
    analysis: &Analysis,
    result: &ClosureResult,
    max_weight: u32,
    max_elements: usize,
) -> String {
    let mut out = String::new();
    match result {
        ClosureResult::CapExceeded { kind, last_basis } => {
            out.push_str("status: cap exceeded (no verdict; the algebra may still be finite or infinite dimensional)\n");
            out.push_str(&format!(
                "cap: {}\n",
                match kind {
                    CapKind::Weight => "weight",
                    CapKind::ElementCount => "element-count",
                }
            ));
            out.push_str(&format!(
                "caps in effect: max weight {max_weight}, max elements {max_elements}\n"
            ));
            out.push_str(&format!(
                "dimension reached before the cap: {}\n",
                last_basis.total_dim()
            ));
        }
        ClosureResult::Closed(alg) => {
            out.push_str("status: closed\n");
            out.push_str(&format!("dimension: {}\n", alg.basis.total_dim()));
            out.push_str(&format!("generations: {}\n", alg.generations));
            if alg.basis.total_dim() == 0 {
                out.push_str("basis: (empty)\n");
            } else {
                out.push_str("basis:\n");
            }
            for (k, b) in alg.basis.elements().iter().enumerate() {
                out.push_str(&format!(
                    "  b{} = {}  [degree {}, weight {}]\n",
                    k + 1,
                    b,
                    b.degree(),
                    b.weight()
                ));
            }
            if !analysis.gens.is_empty() {
                out.push_str("generators in basis coordinates:\n");
                for (k, g) in analysis.gens.iter().enumerate() {
                    let coords = alg
                        .basis
                        .global_coordinates(g)
                        .expect("generators lie in the closed span");
                    out.push_str(&format!("  D{} = {}\n", k + 1, bracket_terms(&coords)));
                }
            }
            let entries: Vec<(String, String)> = alg
                .constants
                .nonzero_entries()
                .map(|(&(i, j), coords)| {
                    (format!("[b{}, b{}]", i + 1, j + 1), bracket_terms(coords))
                })
                .collect();
            if entries.is_empty() {
                out.push_str("structure constants: all brackets vanish\n");
            } else {
                out.push_str("nonzero structure constants:\n");
                for (lhs, rhs) in entries {
                    out.push_str(&format!("  {lhs} = {rhs}\n"));
                }
            }
            let series = series_analysis(result).expect("closed result");
            out.push_str(&series_text(&series));
            if alg.basis.total_dim() < 3 {
                out.push_str("model filiform: not applicable below dimension 3\n");
            } else {
                match model_filiform(result).expect("closed result") {
                    Some(chain) => {
                        out.push_str("model filiform: yes\n");
                        for (k, x) in chain.elements.iter().enumerate() {
                            out.push_str(&format!("  X{} = {}\n", k + 1, x));
                        }
                    }
                    None => out.push_str("model filiform: no\n"),
                }
            }
        }
    }
    out
}

pub fn closure_json(
    analysis: &Analysis,
    result: &ClosureResult,
    max_weight: u32,
    max_elements: usize,
) -> Value {
    let caps = json!({ "max_weight": max_weight, "max_elements": max_elements });
    match result {
        ClosureResult::CapExceeded { kind, last_basis } => json!({
            "status": "cap-exceeded",
            "cap": match kind {
                CapKind::Weight => "weight",
                CapKind::ElementCount => "element-count",
            },
            "partial_dimension": last_basis.total_dim(),
            "caps": caps,
        }),
        ClosureResult::Closed(alg) => {
            let basis: Vec<Value> = alg
                .basis
                .elements()
                .iter()
                .enumerate()
                .map(|(k, b)| {
                    json!({
                        "index": k + 1,
                        "degree": lattice_json(b.degree()),
                        "coeffs": coeffs_json(b.coeffs()),
                        "weight": int_json(&b.weight()),
                        "display": b.to_string(),
                    })
                })
                .collect();
            let generators: Vec<Value> = analysis
                .gens
                .iter()
                .enumerate()
                .map(|(k, g)| {
                    let coords = alg
                        .basis
                        .global_coordinates(g)
                        .expect("generators lie in the closed span");
                    let terms: Vec<Value> = coords
                        .iter()
                        .map(|(i, v)| json!({ "basis_index": i + 1, "value": rat_string(v) }))
                        .collect();
                    json!({ "index": k + 1, "coords": terms })
                })
                .collect();
            let series = series_analysis(result).expect("closed result");
            let filiform = if alg.basis.total_dim() < 3 {
                Value::Null
            } else {
                match model_filiform(result).expect("closed result") {
                    Some(chain) => chain_json(&chain),
                    None => json!({ "filiform": false }),
                }
            };
            json!({
                "status": "closed",
                "dimension": alg.basis.total_dim(),
                "generations": alg.generations,
                "basis": basis,
                "generators": generators,
                "structure_constants": constants_entries(&alg.constants),
                "series": series_json(&series),
                "model_filiform": filiform,
                "caps": caps,
            })
        }
    }
}
