use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::labels::{FormalObject, SimpleKind, Term};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Sym,
    Alt,
}

/// `S²` or `Λ²` of a simple object, from the genus-4 product table.
pub fn square_simple(kind: SimpleKind, variant: Variant) -> Result<FormalObject> {
    use SimpleKind::*;
    let terms: Vec<SimpleKind> = match (kind, variant) {
        (SkyPmE, Variant::Sym) => vec![SkyPm2E, SkySigmaPlus],
        (SkyPmE, Variant::Alt) => vec![SkySigmaMinus],
        (DeltaThetaS, Variant::Sym) => vec![DeltaAB(3, 3), DeltaAB(5, 1)],
        (DeltaThetaS, Variant::Alt) => vec![DeltaAB(4, 2), DeltaAB(6, 0)],
        (Unit, Variant::Sym) => vec![Unit],
        (Unit, Variant::Alt) => vec![],
        _ => return Err(Error::UnsupportedLabel(format!("no square rule for {}", kind.name()))),
    };
    Ok(FormalObject::from_terms(terms.into_iter().map(|k| (Term::simple(k), 1))))
}

/// Product of two simple objects: the square table on the diagonal,
/// otherwise an opaque product.
fn product_simple(a: SimpleKind, b: SimpleKind) -> FormalObject {
    if a == SimpleKind::Unit || b == SimpleKind::Unit {
        return FormalObject::of(if a == SimpleKind::Unit { b } else { a });
    }
    if a == b {
        if let (Ok(s), Ok(l)) = (square_simple(a, Variant::Sym), square_simple(a, Variant::Alt)) {
            return s.sum(&l);
        }
    }
    FormalObject::from_terms([(Term::product(vec![a, b], 0), 1)])
}

fn product_terms(x: &Term, y: &Term) -> FormalObject {
    let t = x.twist + y.twist;
    match (x.as_simple(), y.as_simple()) {
        (Some(a), Some(b)) => product_simple(a, b).twist(t),
        _ => {
            let mut f = x.factors().to_vec();
            f.extend_from_slice(y.factors());
            FormalObject::from_terms([(Term::product(f, t), 1)])
        }
    }
}

/// Full convolution product of formal objects.
pub fn product(x: &FormalObject, y: &FormalObject) -> FormalObject {
    let mut out = FormalObject::zero();
    for (a, m) in x.terms() {
        for (b, n) in y.terms() {
            let p = product_terms(a, b);
            for _ in 0..m * n {
                out.add(&p);
            }
        }
    }
    out
}

fn square_term(t: &Term, variant: Variant) -> Result<FormalObject> {
    let k = t.as_simple().ok_or_else(|| Error::UnsupportedLabel(format!("no square rule for the product {t}")))?;
    Ok(square_simple(k, variant)?.twist(2 * t.twist))
}

/// `S²` or `Λ²` of a formal object: `S²(mT) = m·S²T ⊕ C(m,2)·T*T`, cross
/// terms appear in full.
pub fn square(x: &FormalObject, variant: Variant) -> Result<FormalObject> {
    let terms: Vec<(&Term, &u32)> = x.terms().iter().collect();
    let mut out = FormalObject::zero();
    for (i, (t, m)) in terms.iter().enumerate() {
        let sq = square_term(t, variant)?;
        for _ in 0..**m {
            out.add(&sq);
        }
        let tt = product_terms(t, t);
        for _ in 0..(**m * (**m - 1) / 2) {
            out.add(&tt);
        }
        for (u, n) in &terms[i + 1..] {
            let p = product_terms(t, u);
            for _ in 0..(**m * **n) {
                out.add(&p);
            }
        }
    }
    Ok(out)
}

/// Monodromy-filtration diagram: graded pieces `Gr_i`, with `Gr_i` pure of
/// weight `base_weight + i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationDiagram {
    pub rows: BTreeMap<i32, FormalObject>,
    pub base_weight: i32,
}

impl FiltrationDiagram {
    pub fn new(base_weight: i32) -> Self {
        FiltrationDiagram { rows: BTreeMap::new(), base_weight }
    }

    pub fn weight_of(&self, i: i32) -> i32 {
        self.base_weight + i
    }

    pub fn row(&self, i: i32) -> FormalObject {
        self.rows.get(&i).cloned().unwrap_or_default()
    }

    pub fn add_to_row(&mut self, i: i32, x: &FormalObject) {
        if !x.is_zero() {
            self.rows.entry(i).or_default().add(x);
        }
    }

    pub fn weights(&self) -> Vec<i32> {
        self.rows.keys().map(|&i| self.weight_of(i)).collect()
    }

    /// Every summand of `Gr_i` has weight `base_weight + i`.
    pub fn check_weights(&self) -> Result<()> {
        for (i, row) in &self.rows {
            for t in row.terms().keys() {
                if t.weight() != self.weight_of(*i) {
                    return Err(Error::NegativeResult(format!(
                        "{t} in Gr_{i} has weight {}, expected {}",
                        t.weight(),
                        self.weight_of(*i)
                    )));
                }
            }
        }
        Ok(())
    }

    /// `N^i : Gr_i ≅ Gr_{−i}(−i)`, checked on the formal level.
    pub fn check_symmetry(&self) -> Result<()> {
        for (&i, row) in &self.rows {
            if i > 0 && self.row(-i).twist(-i) != *row {
                return Err(Error::Asymmetric(i));
            }
        }
        for &i in self.rows.keys() {
            if i < 0 && !self.rows.contains_key(&-i) {
                return Err(Error::Asymmetric(i));
            }
        }
        Ok(())
    }

    /// Primitive parts: `P_{−i} = Gr_{−i} ⊖ ⊕_{k≥1} P_{−i−2k}(−k)`, keyed by `i ≥ 0`.
    pub fn primitives(&self) -> Result<BTreeMap<i32, FormalObject>> {
        let top = self.rows.keys().map(|i| i.abs()).max().unwrap_or(0);
        let mut out: BTreeMap<i32, FormalObject> = BTreeMap::new();
        for i in (0..=top).rev() {
            let mut p = self.row(-i);
            let mut k = 1;
            while i + 2 * k <= top {
                if let Some(q) = out.get(&(i + 2 * k)) {
                    p = p.difference(&q.twist(-k))?;
                }
                k += 1;
            }
            if !p.is_zero() {
                out.insert(i, p);
            }
        }
        Ok(out)
    }

    /// Monospaced triangle: one line per `Gr_i` (top to bottom), one column
    /// per primitive part, entries `P_{−c}(−k)`.
    pub fn render(&self) -> Result<String> {
        let prims = self.primitives()?;
        let top = self.rows.keys().map(|i| i.abs()).max().unwrap_or(0);
        let cols: Vec<i32> = prims.keys().copied().collect();
        let mut grid: Vec<(i32, Vec<String>)> = Vec::new();
        for i in (-top..=top).rev() {
            let cells = cols
                .iter()
                .map(|&c| {
                    if i.abs() <= c && (i + c) % 2 == 0 {
                        let k = (i + c) / 2;
                        prims[&c].twist(-k).to_string()
                    } else {
                        String::new()
                    }
                })
                .collect();
            grid.push((i, cells));
        }
        let widths: Vec<usize> = (0..cols.len())
            .map(|j| grid.iter().map(|(_, r)| r[j].chars().count()).max().unwrap_or(0))
            .collect();
        let mut s = String::new();
        for (i, cells) in &grid {
            let _ = write!(s, "w={:<2} Gr_{:<3}|", self.weight_of(*i), i);
            for (j, c) in cells.iter().enumerate() {
                let pad = widths[j] - c.chars().count();
                let _ = write!(s, " {c}{} |", " ".repeat(pad));
            }
            s.push('\n');
        }
        Ok(s)
    }
}

/// The diagram of `Ψ₁(δ)`: `1_{±e}(−2)` over `δ_{Θ_s}` over `1_{±e}(−1)`,
/// base weight 3.
pub fn psi1_delta_diagram() -> FiltrationDiagram {
    let mut d = FiltrationDiagram::new(SimpleKind::DeltaThetaS.weight());
    d.add_to_row(1, &FormalObject::from_terms([(Term::twisted(SimpleKind::SkyPmE, -2), 1)]));
    d.add_to_row(0, &FormalObject::of(SimpleKind::DeltaThetaS));
    d.add_to_row(-1, &FormalObject::from_terms([(Term::twisted(SimpleKind::SkyPmE, -1), 1)]));
    d
}

/// `S²` or `Λ²` of a diagram: squares on each row, cross products of rows
/// `i₁ < i₂` in row `i₁ + i₂`; weights add.
pub fn diagram_square(d: &FiltrationDiagram, variant: Variant) -> Result<FiltrationDiagram> {
    let mut out = FiltrationDiagram::new(2 * d.base_weight);
    let rows: Vec<(&i32, &FormalObject)> = d.rows.iter().collect();
    for (a, (i, x)) in rows.iter().enumerate() {
        out.add_to_row(2 * **i, &square(x, variant)?);
        for (j, y) in &rows[a + 1..] {
            out.add_to_row(**i + **j, &product(x, y));
        }
    }
    Ok(out)
}

/// Full tensor product of diagrams, all ordered pairs of rows.
pub fn diagram_tensor(d1: &FiltrationDiagram, d2: &FiltrationDiagram) -> FiltrationDiagram {
    let mut out = FiltrationDiagram::new(d1.base_weight + d2.base_weight);
    for (i, x) in &d1.rows {
        for (j, y) in &d2.rows {
            out.add_to_row(i + j, &product(x, y));
        }
    }
    out
}

/// Diagrams of `Ψ₁(δ_+)` and `Ψ₁(δ_−)`: the two squares of the `Ψ₁(δ)`
/// diagram, with the unit `δ_{6,0}` removed from the alternating one.
pub fn delta_pm_diagrams() -> Result<(FiltrationDiagram, FiltrationDiagram)> {
    let d = psi1_delta_diagram();
    let plus = diagram_square(&d, Variant::Sym)?;
    let mut minus = diagram_square(&d, Variant::Alt)?;
    let unit = FormalObject::of(SimpleKind::DeltaAB(6, 0));
    let row0 = minus.row(0).difference(&unit)?;
    minus.rows.insert(0, row0);
    Ok((plus, minus))
}
