//! Plain-text reports: bracket tables, cocommutator tables, defect and
//! contraction summaries. Everything is deterministic so the output can
//! be frozen as golden files.

use crate::bialgebra::{DefectReport, LieBialgebra, RMatrix};
use crate::contraction::{
    ComponentStatus, DoubleContraction, ExponentFamily, PreservationReport,
};
use crate::double::DoubleAlgebra;
use crate::scalar::Scalar;
use crate::tensor::{CocommutatorTensor, CommutatorTensor};
use std::fmt::Write;

/// Render `coeff * name` as one additive term: unit coefficients
/// disappear, single-monomial coefficients sit before the generator,
/// anything longer is parenthesized.
fn term(coeff: &Scalar, name: &str) -> String {
    if coeff == &Scalar::one() {
        return name.to_string();
    }
    if coeff == &-Scalar::one() {
        return format!("-{name}");
    }
    let text = coeff.to_string();
    if text.contains(" + ") || text.contains(" - ") {
        format!("({text}) {name}")
    } else {
        format!("{text} {name}")
    }
}

/// Join terms with signed separators; an empty list renders as "0".
pub fn linear_combination(terms: &[(Scalar, String)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (coeff, name)) in terms.iter().enumerate() {
        let rendered = term(coeff, name);
        if i == 0 {
            out.push_str(&rendered);
        } else if let Some(stripped) = rendered.strip_prefix('-') {
            write!(out, " - {stripped}").unwrap();
        } else {
            write!(out, " + {rendered}").unwrap();
        }
    }
    out
}

fn bracket_line_ordered(
    c: &CommutatorTensor,
    names: &[String],
    a: usize,
    b: usize,
    targets: impl Iterator<Item = usize>,
) -> String {
    let terms: Vec<(Scalar, String)> = targets
        .filter_map(|k| {
            let v = c.get(a, b, k);
            (!v.is_zero()).then(|| (v, names[k - 1].clone()))
        })
        .collect();
    format!(
        "[{}, {}] = {}",
        names[a - 1],
        names[b - 1],
        linear_combination(&terms)
    )
}

/// One bracket line: `[a, b] = ...` as a combination of generators.
pub fn bracket_line(c: &CommutatorTensor, names: &[String], a: usize, b: usize) -> String {
    bracket_line_ordered(c, names, a, b, 1..=c.dim())
}

/// Bracket line of a double; the coadjoint (dual-block) part of a mixed
/// bracket prints before the back-action part, as in `[p2, P1] = -j12 + z P1`.
pub fn double_bracket_line(
    c: &CommutatorTensor,
    names: &[String],
    base_dim: usize,
    a: usize,
    b: usize,
) -> String {
    let n = base_dim;
    bracket_line_ordered(c, names, a, b, ((n + 1)..=(2 * n)).chain(1..=n))
}

/// The full canonical bracket table of a double: primal pairs, dual
/// pairs, then the mixed block row by row as `[x^a, X_b]`.
pub fn double_bracket_table(c: &CommutatorTensor, names: &[String], base_dim: usize) -> String {
    let n = base_dim;
    assert_eq!(c.dim(), 2 * n);
    assert_eq!(names.len(), 2 * n);
    let mut lines = Vec::new();
    for a in 1..=n {
        for b in (a + 1)..=n {
            lines.push(bracket_line(c, names, a, b));
        }
    }
    for a in 1..=n {
        for b in (a + 1)..=n {
            lines.push(bracket_line(c, names, n + a, n + b));
        }
    }
    for a in 1..=n {
        for b in 1..=n {
            lines.push(double_bracket_line(c, names, n, n + a, b));
        }
    }
    lines.join("\n")
}

/// Bracket table of an arbitrary algebra, canonical pairs only.
pub fn bracket_table(c: &CommutatorTensor, names: &[String]) -> String {
    let mut lines = Vec::new();
    for a in 1..=c.dim() {
        for b in (a + 1)..=c.dim() {
            lines.push(bracket_line(c, names, a, b));
        }
    }
    lines.join("\n")
}

/// Cocommutator table, one `delta(X) = ...` line per generator, wedge
/// terms rendered as `coeff A^B`.
pub fn cocommutator_table(f: &CocommutatorTensor, names: &[String]) -> String {
    let mut lines = Vec::new();
    for i in 1..=f.dim() {
        let terms: Vec<(Scalar, String)> = f
            .iter()
            .filter(|&(_, _, k, _)| k == i)
            .map(|(l, m, _, v)| (v.clone(), format!("{}^{}", names[l - 1], names[m - 1])))
            .collect();
        lines.push(format!(
            "delta({}) = {}",
            names[i - 1],
            linear_combination(&terms)
        ));
    }
    lines.join("\n")
}

pub fn rmatrix_line(rho: &RMatrix, names: &[String]) -> String {
    let terms: Vec<(Scalar, String)> = rho
        .iter()
        .map(|(i, j, v)| (v.clone(), format!("{}(x){}", names[i - 1], names[j - 1])))
        .collect();
    format!("r = {}", linear_combination(&terms))
}

pub fn defect_summary(reports: &[DefectReport]) -> String {
    let mut lines = Vec::new();
    for r in reports {
        if r.is_empty() {
            lines.push(format!("{}: ok", r.kind));
        } else {
            lines.push(format!("{}: {} violation(s)", r.kind, r.violations.len()));
            for (idx, value) in &r.violations {
                let idx = idx
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(", ");
                lines.push(format!("  at ({idx}): {value}"));
            }
        }
    }
    lines.join("\n")
}

pub fn validate_report(b: &LieBialgebra) -> (String, bool) {
    let reports = b.validate();
    let ok = reports.iter().all(DefectReport::is_empty);
    let mut out = format!("algebra: {} (dimension {})\n", b.name, b.dim());
    out.push_str(&defect_summary(&reports));
    out.push('\n');
    out.push_str(if ok {
        "all checks passed"
    } else {
        "validation failed"
    });
    (out, ok)
}

fn status_word(status: &ComponentStatus) -> String {
    match status {
        ComponentStatus::Kept(v) => format!("kept ({v})"),
        ComponentStatus::Vanished => "vanished".to_string(),
        ComponentStatus::Divergent => "divergent".to_string(),
    }
}

/// Per-component fate table for a contracted double, then the surviving
/// bracket table when the limit exists.
pub fn double_contraction_report(dc: &DoubleContraction, names: &[String]) -> String {
    let mut out = String::new();
    for (comp, formula) in dc.outcome.components.iter().zip(&dc.formulas) {
        let (i, j, k) = comp.index;
        writeln!(
            out,
            "[{}, {}] -> {}: {} (exponent {}, {})",
            names[i - 1],
            names[j - 1],
            names[k - 1],
            status_word(&comp.status),
            comp.exponent,
            formula
        )
        .unwrap();
    }
    match dc.outcome.commutator() {
        Some(c) => {
            out.push_str("\ncontracted brackets:\n");
            out.push_str(&double_bracket_table(&c, names, dc.base_dim));
        }
        None => out.push_str("\nlimit does not exist (divergent components above)"),
    }
    out
}

pub fn preservation_report(report: &PreservationReport) -> String {
    if report.is_empty() {
        return "double-preserving: yes".to_string();
    }
    let mut lines = vec!["double-preserving: no".to_string()];
    for v in &report.pair_violations {
        lines.push(format!(
            "  pair ({}, {}): m-difference {} but n-difference {}",
            v.pair.0, v.pair.1, v.primal_difference, v.dual_difference
        ));
    }
    for v in &report.primal_divergences {
        lines.push(format!(
            "  bracket triad {:?}: exponent {} < 0",
            v.triad, v.exponent
        ));
    }
    for v in &report.dual_divergences {
        lines.push(format!(
            "  cocommutator triad {:?}: exponent {} < 0",
            v.triad, v.exponent
        ));
    }
    lines.join("\n")
}

pub fn family_report(family: &ExponentFamily) -> String {
    // family.render() carries its own "n = " prefix.
    format!("m = {}\n{}", family.m.render(), family.render())
}

pub fn double_table_with_header(d: &DoubleAlgebra, title: &str) -> String {
    format!(
        "{title}: dimension {}\ngenerators: {}\n\n{}",
        d.dim(),
        d.names.join(", "),
        double_bracket_table(&d.c, &d.names, d.base_dim())
    )
}
