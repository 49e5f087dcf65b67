use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::render::render_table;
use super::tables::{table1, table2};
use crate::error::{Error, Result};
use crate::geom::{schottky_stratum, stratum_data, theta_chi, theta_chi_odp, theta_chi_top, y_hodge_table, Stratum};
use crate::lie::{weyl_dim, GroupSpec, IrrepLabel};
use crate::nilfilt::{monodromy_filtration, triangle_render, NilpotentOperator};
use crate::perv::{delta_pm_diagrams, psi1_delta_diagram, FiltrationDiagram, FormalObject};
use crate::rep::{self, VirtualRep};

/// Output of one command: metadata, echoed input and a JSON payload.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    pub format_version: u32,
    pub input: Value,
    pub renderer: String,
    pub result: Value,
}

impl ReportDocument {
    fn new(command: &str, input: Value, renderer: &str, result: impl Serialize) -> Result<Self> {
        let result = serde_json::to_value(result).map_err(|e| Error::InvalidArgument(format!("serialization: {e}")))?;
        Ok(ReportDocument { command: command.into(), format_version: 1, input, renderer: renderer.into(), result })
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_canonical_json(&self) -> String {
        canonical_json(self)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse { pos: e.column(), msg: format!("line {}: {e}", e.line()) })
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn canonical_json<T: Serialize>(x: &T) -> String {
    let v = serde_json::to_value(x).expect("documents serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

/// A document together with its human-readable rendering.
#[derive(Debug, Clone)]
pub struct Report {
    pub doc: ReportDocument,
    pub text: String,
}

pub fn cmd_table1() -> Result<Report> {
    let t = table1()?;
    let text = render_table(&t);
    Ok(Report { doc: ReportDocument::new("table1", json!({}), "table", &t)?, text })
}

pub fn cmd_table2() -> Result<Report> {
    let t = table2()?;
    let text = render_table(&t);
    Ok(Report { doc: ReportDocument::new("table2", json!({}), "table", &t)?, text })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub term: String,
    pub mult: u32,
    pub weight: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowDoc {
    pub gr: i32,
    pub weight: i32,
    pub terms: Vec<TermDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramDoc {
    pub base_weight: i32,
    pub rows: Vec<RowDoc>,
    pub primitives: BTreeMap<i32, Vec<TermDoc>>,
}

fn term_docs(o: &FormalObject) -> Vec<TermDoc> {
    o.terms().iter().map(|(t, m)| TermDoc { term: t.to_string(), mult: *m, weight: t.weight() }).collect()
}

pub fn diagram_doc(d: &FiltrationDiagram) -> Result<DiagramDoc> {
    let rows = d
        .rows
        .iter()
        .rev()
        .map(|(i, o)| RowDoc { gr: *i, weight: d.weight_of(*i), terms: term_docs(o) })
        .collect();
    let primitives = d.primitives()?.iter().map(|(c, o)| (-c, term_docs(o))).collect();
    Ok(DiagramDoc { base_weight: d.base_weight, rows, primitives })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramsDoc {
    pub psi1_delta: DiagramDoc,
    pub delta_plus: DiagramDoc,
    pub delta_minus: DiagramDoc,
    pub weights: Vec<i32>,
}

pub fn cmd_diagrams() -> Result<Report> {
    let psi = psi1_delta_diagram();
    let (plus, minus) = delta_pm_diagrams()?;
    for d in [&psi, &plus, &minus] {
        d.check_weights()?;
        d.check_symmetry()?;
    }
    let mut weights: Vec<i32> = plus.weights().into_iter().chain(minus.weights()).collect();
    weights.sort();
    weights.dedup();
    let doc = DiagramsDoc {
        psi1_delta: diagram_doc(&psi)?,
        delta_plus: diagram_doc(&plus)?,
        delta_minus: diagram_doc(&minus)?,
        weights: weights.clone(),
    };
    let text = format!(
        "Ψ₁(δ)\n{}\nΨ₁(δ_+)\n{}\nΨ₁(δ_−)\n{}\nweights {}\n",
        psi.render()?,
        plus.render()?,
        minus.render()?,
        weights.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(", ")
    );
    Ok(Report { doc: ReportDocument::new("diagrams", json!({}), "diagrams", &doc)?, text })
}

pub fn cmd_hodge() -> Result<Report> {
    let t = y_hodge_table()?;
    let mut text = String::from("      h20  h11  h10\n");
    for (name, r) in t.rows() {
        text += &format!("{name:<4} {:>4} {:>4} {:>4}\n", r.h20, r.h11, r.h10);
    }
    text += &format!(
        "χ_top(Y) = {}, χ(O_Y) = {}, h²(Y) = {}\nχ_top(Y⁺) = {}, χ(O_Y⁺) = {}, h²(Y⁺) = {}\n",
        t.y.chi_top, t.y.chi_o, t.y.b2, t.y_plus.chi_top, t.y_plus.chi_o, t.y_plus.b2
    );
    for (name, v) in [("V_+", t.v_plus), ("V_−", t.v_minus)] {
        text += &format!("{name}: ({}, {}, {}), rank {}\n", v.h20, v.h11, v.h02, v.rank());
    }
    Ok(Report { doc: ReportDocument::new("hodge", json!({}), "hodge", &t)?, text })
}

pub fn cmd_euler(g: usize, r: u64) -> Result<Report> {
    let chi = if r == 0 { theta_chi(g)? } else { theta_chi_odp(g, r)? };
    let mut result = json!({ "chi": chi.to_string(), "g": g, "r": r });
    if r == 0 {
        result["chi_top"] = json!(theta_chi_top(g)?.to_string());
    }
    let text = format!("χ(δ_Θ) = {chi}  (g = {g}, {r} ordinary double point(s))\n");
    Ok(Report { doc: ReportDocument::new("euler", json!({ "g": g, "r": r }), "scalar", result)?, text })
}

pub fn cmd_dim(group: &str, weight: &str) -> Result<Report> {
    let label = IrrepLabel::parse(group, weight)?;
    let d = weyl_dim(&label)?;
    let text = format!("dim {label} = {d}\n");
    let input = json!({ "group": group, "weight": weight });
    Ok(Report { doc: ReportDocument::new("dim", input, "scalar", json!({ "dim": d.to_string() }))?, text })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepTerm {
    pub weight: String,
    pub mult: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepDoc {
    pub group: String,
    pub dim: String,
    pub terms: Vec<RepTerm>,
}

pub fn rep_doc(v: &VirtualRep) -> RepDoc {
    RepDoc {
        group: v.group().to_string(),
        dim: v.dim().to_string(),
        terms: v.terms().iter().map(|(w, m)| RepTerm { weight: v.group().compact_weight(w), mult: *m }).collect(),
    }
}

/// Sum of irreducibles written as `w1+w2+…`, each optionally `k*w`.
pub fn parse_rep(group: &str, spec: &str) -> Result<VirtualRep> {
    let g: GroupSpec = group.parse()?;
    let mut out = VirtualRep::zero(g.clone());
    for (i, part) in spec.split('+').enumerate() {
        let (k, w) = match part.split_once('*') {
            Some((k, w)) => (
                k.trim().parse::<i64>().map_err(|_| Error::Parse { pos: i, msg: format!("bad multiplicity in {part:?}") })?,
                w,
            ),
            None => (1, part),
        };
        out.add_scaled(&VirtualRep::irrep(&IrrepLabel::new(g.clone(), g.parse_weight(w)?)?), k)?;
    }
    Ok(out)
}

fn rep_report(command: &str, input: Value, v: &VirtualRep) -> Result<Report> {
    let text = format!("{v}\ndim {}\n", v.dim());
    Ok(Report { doc: ReportDocument::new(command, input, "rep", rep_doc(v))?, text })
}

pub fn cmd_tensor(group: &str, a: &str, b: &str) -> Result<Report> {
    let v = rep::tensor(&parse_rep(group, a)?, &parse_rep(group, b)?)?;
    rep_report("tensor", json!({ "a": a, "b": b, "group": group }), &v)
}

pub fn cmd_sym2(group: &str, a: &str) -> Result<Report> {
    let v = rep::sym2(&parse_rep(group, a)?)?;
    rep_report("sym2", json!({ "a": a, "group": group }), &v)
}

pub fn cmd_alt2(group: &str, a: &str) -> Result<Report> {
    let v = rep::alt2(&parse_rep(group, a)?)?;
    rep_report("alt2", json!({ "a": a, "group": group }), &v)
}

/// `matrix` is the JSON text of the operator; `base_weight` labels the rows.
pub fn cmd_nilfilt(matrix: &str, base_weight: i32) -> Result<Report> {
    let n = NilpotentOperator::from_json(matrix)?;
    let f = monodromy_filtration(&n);
    f.check()?;
    let result = json!({
        "blocks": n.block_sizes(),
        "filtration": f,
        "ranks": n.power_ranks(),
    });
    let input = json!({ "base_weight": base_weight, "matrix": n.matrix().to_json() });
    let text = triangle_render(&f, base_weight);
    Ok(Report { doc: ReportDocument::new("nilfilt", input, "triangle", result)?, text })
}

pub fn cmd_stratum(id: Option<&str>) -> Result<Report> {
    let data = match id {
        Some(id) => vec![schottky_stratum(id)?],
        None => Stratum::ALL.into_iter().map(stratum_data).collect(),
    };
    let mut text = String::new();
    for d in &data {
        let group = match (&d.group, d.conjectural) {
            (Some(g), true) => format!("{g} (conjectural)"),
            (Some(g), false) => g.clone(),
            (None, _) => "—".into(),
        };
        let chi = d.chi.map(|c| c.to_string()).unwrap_or_else(|| "—".into());
        text += &format!("{}) {:<38} G = {:<20} χ = {:<3} {}\n", d.stratum.letter(), d.locus, group, chi, d.singularities);
    }
    Ok(Report { doc: ReportDocument::new("stratum", json!({ "id": id }), "strata", &data)?, text })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_json_round_trips() {
        let r = cmd_euler(4, 2).unwrap();
        let s = r.doc.to_canonical_json();
        assert_eq!(ReportDocument::from_json(&s).unwrap(), r.doc);
        assert!(s.ends_with("}\n"));
        assert_eq!(r.doc.result["chi"], "20");
    }

    #[test]
    fn rep_specs() {
        let v = parse_rep("Sp8", "1000+2*0000").unwrap();
        assert_eq!(v.dim(), 10);
        assert!(parse_rep("Sp8", "x*1000").is_err());
        let t = cmd_tensor("Sp10", "10000", "00000").unwrap();
        assert_eq!(t.doc.result["terms"][0]["weight"], "10000");
    }
}
