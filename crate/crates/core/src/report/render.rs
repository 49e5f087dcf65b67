use std::collections::BTreeMap;
use std::fmt::Write;

use super::tables::{PackageEntry, TableDoc};
use crate::graded::Sign;

fn column_title(name: &str) -> String {
    match name {
        "delta_plus" => "ℍ(δ_+)".into(),
        "delta_minus" => "ℍ(δ_−)".into(),
        n => match n.strip_prefix("delta_").map(|r| r.split('_').collect::<Vec<_>>()).as_deref() {
            Some([a, b]) => format!("ℍ(δ_{{{a},{b}}})"),
            _ => n.to_string(),
        },
    }
}

fn sign_suffix(s: Option<Sign>) -> &'static str {
    match s {
        Some(Sign::Plus) => "σ+",
        Some(Sign::Minus) => "σ−",
        None => "",
    }
}

fn mult_suffix(m: i64) -> String {
    if m == 1 {
        String::new()
    } else {
        format!("^⊕{m}")
    }
}

/// Display notation for one summand; `B` is the standard representation of
/// the second factor.
fn render_entry(e: &PackageEntry) -> String {
    let (first, second) = e.weight.split_once('|').unwrap_or((&e.weight, ""));
    let base = format!("({first}){}", sign_suffix(e.sign));
    let trivial_first = first.chars().all(|c| c == '0') && e.sign != Some(Sign::Minus);
    let body = match second {
        "" | "00000" => base,
        "10000" => format!("{base} ⊗ B"),
        "20000" if trivial_first => "S²(B)".into(),
        "20000" => format!("{base} ⊗ S²(B)"),
        other => format!("{base} ⊠ ({other})"),
    };
    format!("{body}{}", mult_suffix(e.mult))
}

/// Cells of one column at one level, folding `(01000) ⊕ (00000)` of the
/// second factor back into `Λ²(B)` when both occur with trivial first part.
fn cells(entries: &[&PackageEntry]) -> Vec<String> {
    let is_triv = |e: &PackageEntry, second: &str| {
        e.weight.split_once('|').is_some_and(|(f, s)| f.chars().all(|c| c == '0') && s == second)
            && e.sign != Some(Sign::Minus)
    };
    let lam = entries.iter().find(|e| is_triv(e, "01000")).map(|e| e.mult).unwrap_or(0);
    let one = entries.iter().find(|e| is_triv(e, "00000")).map(|e| e.mult).unwrap_or(0);
    let folded = lam.min(one);
    let mut out = Vec::new();
    for e in entries {
        if is_triv(e, "01000") {
            if folded > 0 {
                out.push(format!("Λ²(B){}", mult_suffix(folded)));
            }
            if e.mult > folded {
                out.push(format!("(0000)σ+ ⊠ (01000){}", mult_suffix(e.mult - folded)));
            }
        } else if is_triv(e, "00000") {
            if e.mult > folded {
                out.push(render_entry(&PackageEntry { mult: e.mult - folded, ..(*e).clone() }));
            }
        } else {
            out.push(render_entry(e));
        }
    }
    out
}

/// Plain-text table with one block per `[n]_t`.
pub fn render_table(doc: &TableDoc) -> String {
    let mut levels: BTreeMap<u32, Vec<Vec<String>>> = BTreeMap::new();
    for (j, col) in doc.columns.iter().enumerate() {
        let mut by_level: BTreeMap<u32, Vec<&PackageEntry>> = BTreeMap::new();
        for e in &col.entries {
            by_level.entry(e.level).or_default().push(e);
        }
        for (l, es) in by_level {
            levels.entry(l).or_insert_with(|| vec![Vec::new(); doc.columns.len()])[j] = cells(&es);
        }
    }
    let titles: Vec<String> = doc.columns.iter().map(|c| column_title(&c.name)).collect();
    let mut widths: Vec<usize> = titles.iter().map(|t| t.chars().count()).collect();
    for cols in levels.values() {
        for (j, c) in cols.iter().enumerate() {
            for s in c {
                widths[j] = widths[j].max(s.chars().count());
            }
        }
    }
    let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w - s.chars().count()));
    let rule = {
        let mut r = "------".to_string();
        for w in &widths {
            let _ = write!(r, "+{}", "-".repeat(w + 2));
        }
        r
    };
    let mut out = String::new();
    let _ = write!(out, "      ");
    for (t, w) in titles.iter().zip(&widths) {
        let _ = write!(out, "| {} ", pad(t, *w));
    }
    out = out.trim_end().to_string();
    let _ = writeln!(out, "\n{rule}");
    for (l, cols) in levels.iter().rev() {
        let height = cols.iter().map(Vec::len).max().unwrap_or(0);
        for i in 0..height {
            let label = if i == 0 { format!("[{l}]_t") } else { String::new() };
            let _ = write!(out, "{}", pad(&label, 6));
            for (c, w) in cols.iter().zip(&widths) {
                let _ = write!(out, "| {} ", pad(c.get(i).map(String::as_str).unwrap_or(""), *w));
            }
            out = out.trim_end().to_string();
            out.push('\n');
        }
        let _ = writeln!(out, "{rule}");
    }
    let _ = write!(out, "χ     ");
    for (c, w) in doc.columns.iter().zip(&widths) {
        let _ = write!(out, "| {} ", pad(&c.euler_char.to_string(), *w));
    }
    out = out.trim_end().to_string();
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(level: u32, sign: Option<Sign>, weight: &str, mult: i64) -> PackageEntry {
        PackageEntry { level, sign, weight: weight.into(), mult }
    }

    #[test]
    fn summand_notation() {
        assert_eq!(render_entry(&entry(3, Some(Sign::Plus), "0000|10000", 1)), "(0000)σ+ ⊗ B");
        assert_eq!(render_entry(&entry(0, Some(Sign::Plus), "0000|20000", 1)), "S²(B)");
        assert_eq!(render_entry(&entry(1, Some(Sign::Minus), "1000|00000", 2)), "(1000)σ− ^⊕2".replace(' ', ""));
        assert_eq!(render_entry(&entry(1, None, "1000", 4)), "(1000)^⊕4");
    }

    #[test]
    fn folds_lambda_two() {
        let a = entry(0, Some(Sign::Plus), "0000|01000", 1);
        let b = entry(0, Some(Sign::Plus), "0000|00000", 2);
        assert_eq!(cells(&[&a, &b]), vec!["Λ²(B)".to_string(), "(0000)σ+".to_string()]);
    }
}
