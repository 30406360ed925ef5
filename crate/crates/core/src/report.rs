//! Text and JSON renderings of analyses and tables.
//!
//! JSON goes through [`serde_json::Value`], whose maps keep keys sorted, so
//! the output is byte-stable.

use serde::Serialize;
use serde_json::Value;

use crate::catalog::ManifoldProduct;
use crate::engine::{BoundWithCitation, ObstructionReport, Rule};
use crate::ring::GradedClass;

#[derive(Debug, Clone, Serialize)]
pub struct TermJson {
    pub monomial: String,
    pub coefficient: Value,
    pub degree: u64,
    /// Present (and equal to 2) on 2-torsion monomials.
    #[serde(rename = "mod", skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ManifoldJson {
    pub expression: String,
    pub dimension: u32,
    pub orientable: bool,
    pub parallelizable: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TriJson {
    pub min_n: u32,
    pub exist_n: u32,
    pub optimal: bool,
    pub min_rule: Rule,
    pub exist_rule: Rule,
}

#[derive(Debug, Clone, Serialize)]
pub struct IndepJson {
    pub max_n: u32,
    pub exist_n: u32,
    pub optimal: bool,
    pub max_rule: Rule,
    pub exist_rule: Rule,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeJson {
    pub manifold: ManifoldJson,
    pub chern_class: Vec<TermJson>,
    pub inverse_class: Vec<TermJson>,
    pub tri: TriJson,
    pub indep: IndepJson,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChernJson {
    pub manifold: ManifoldJson,
    pub chern_class: Vec<TermJson>,
    pub inverse_class: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub k: u32,
    pub dimension: u32,
    pub tri_min_n: u32,
    pub tri_exist_n: u32,
    pub tri_optimal: bool,
    pub indep_max_n: u32,
    pub indep_exist_n: u32,
    pub indep_optimal: bool,
}

impl TableRow {
    pub fn from_report(k: u32, report: &ObstructionReport) -> Self {
        Self {
            k,
            dimension: report.dimension,
            tri_min_n: report.tri_min_n.value,
            tri_exist_n: report.tri_exist_n.value,
            tri_optimal: report.tri_optimal,
            indep_max_n: report.indep_max_n.value,
            indep_exist_n: report.indep_exist_n.value,
            indep_optimal: report.indep_optimal,
        }
    }
}

pub fn class_terms(class: &GradedClass) -> Vec<TermJson> {
    class
        .ordered_terms()
        .into_iter()
        .map(|(m, c)| TermJson {
            monomial: class.render_monomial(m),
            // Coefficients that do not fit in i64 are emitted as decimal strings.
            coefficient: i64::try_from(c).map_or_else(|_| Value::from(c.to_string()), Value::from),
            degree: class.monomial_degree(m),
            modulus: class.is_torsion_monomial(m).then_some(2),
        })
        .collect()
}

fn manifold_json_from_report(report: &ObstructionReport) -> ManifoldJson {
    ManifoldJson {
        expression: report.expression.clone(),
        dimension: report.dimension,
        orientable: report.orientable,
        parallelizable: report.parallelizable,
    }
}

pub fn analyze_json(report: &ObstructionReport) -> AnalyzeJson {
    AnalyzeJson {
        manifold: manifold_json_from_report(report),
        chern_class: class_terms(&report.chern_class),
        inverse_class: class_terms(&report.inverse_class),
        tri: TriJson {
            min_n: report.tri_min_n.value,
            exist_n: report.tri_exist_n.value,
            optimal: report.tri_optimal,
            min_rule: report.tri_min_n.rule,
            exist_rule: report.tri_exist_n.rule,
        },
        indep: IndepJson {
            max_n: report.indep_max_n.value,
            exist_n: report.indep_exist_n.value,
            optimal: report.indep_optimal,
            max_rule: report.indep_max_n.rule,
            exist_rule: report.indep_exist_n.rule,
        },
    }
}

pub fn chern_json(manifold: &ManifoldProduct, chern: &GradedClass, inverse: &GradedClass) -> ChernJson {
    ChernJson {
        manifold: ManifoldJson {
            expression: manifold.expression(),
            dimension: manifold.dimension(),
            orientable: manifold.orientable(),
            parallelizable: manifold.parallelizable(),
        },
        chern_class: class_terms(chern),
        inverse_class: class_terms(inverse),
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("report types serialize infallibly");
    let mut out = serde_json::to_string_pretty(&value).expect("values serialize infallibly");
    out.push('\n');
    out
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

fn torsion_note(class: &GradedClass) -> Option<String> {
    let torsion: Vec<String> = class
        .ordered_terms()
        .into_iter()
        .filter(|(m, _)| class.is_torsion_monomial(m))
        .map(|(m, _)| class.render_monomial(m))
        .collect();
    (!torsion.is_empty()).then(|| format!("order 2: {}", torsion.join(", ")))
}

fn class_lines(out: &mut String, label: &str, class: &GradedClass) {
    out.push_str(&format!("{label:<16}{class}\n"));
    if let Some(note) = torsion_note(class) {
        out.push_str(&format!("{:<16}({note})\n", ""));
    }
}

fn manifold_lines(out: &mut String, expression: &str, dimension: u32, orientable: bool, parallelizable: bool) {
    out.push_str(&format!("{:<16}{expression}\n", "manifold"));
    out.push_str(&format!("{:<16}{dimension}\n", "dimension"));
    out.push_str(&format!("{:<16}{}\n", "orientable", yes_no(orientable)));
    out.push_str(&format!("{:<16}{}\n", "parallelizable", yes_no(parallelizable)));
}

fn bound_line(out: &mut String, label: &str, bound: &BoundWithCitation) {
    out.push_str(&format!(
        "  {label:<14}{:<6}[{}] {}\n",
        bound.value,
        rule_name(bound.rule),
        bound.citation
    ));
}

pub fn rule_name(rule: Rule) -> String {
    match serde_json::to_value(rule) {
        Ok(Value::String(s)) => s,
        _ => format!("{rule:?}"),
    }
}

pub fn analyze_text(report: &ObstructionReport) -> String {
    let mut out = String::new();
    manifold_lines(
        &mut out,
        &report.expression,
        report.dimension,
        report.orientable,
        report.parallelizable,
    );
    class_lines(&mut out, "c(C(x)TM)", &report.chern_class);
    class_lines(&mut out, "c(Q)", &report.inverse_class);
    out.push_str("totally real immersion into C^N\n");
    bound_line(&mut out, "min N", &report.tri_min_n);
    bound_line(&mut out, "exists for N", &report.tri_exist_n);
    out.push_str(&format!("  {:<14}{}\n", "optimal", yes_no(report.tri_optimal)));
    out.push_str("independent mapping to C^N\n");
    bound_line(&mut out, "max N", &report.indep_max_n);
    bound_line(&mut out, "exists for N", &report.indep_exist_n);
    out.push_str(&format!("  {:<14}{}\n", "optimal", yes_no(report.indep_optimal)));
    out
}

pub fn chern_text(manifold: &ManifoldProduct, chern: &GradedClass, inverse: &GradedClass) -> String {
    let mut out = String::new();
    manifold_lines(
        &mut out,
        &manifold.expression(),
        manifold.dimension(),
        manifold.orientable(),
        manifold.parallelizable(),
    );
    class_lines(&mut out, "c(C(x)TM)", chern);
    class_lines(&mut out, "c(Q)", inverse);
    out
}

const TABLE_HEADERS: [&str; 8] = [
    "k",
    "dimension",
    "tri_min_n",
    "tri_exist_n",
    "tri_optimal",
    "indep_max_n",
    "indep_exist_n",
    "indep_optimal",
];

pub fn table_text(rows: &[TableRow]) -> String {
    let cells: Vec<[String; 8]> = rows
        .iter()
        .map(|r| {
            [
                r.k.to_string(),
                r.dimension.to_string(),
                r.tri_min_n.to_string(),
                r.tri_exist_n.to_string(),
                r.tri_optimal.to_string(),
                r.indep_max_n.to_string(),
                r.indep_exist_n.to_string(),
                r.indep_optimal.to_string(),
            ]
        })
        .collect();
    let widths: Vec<usize> = (0..8)
        .map(|i| {
            cells
                .iter()
                .map(|row| row[i].len())
                .chain([TABLE_HEADERS[i].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |items: &mut dyn Iterator<Item = &str>| {
        items
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            + "\n"
    };
    let mut out = line(&mut TABLE_HEADERS.iter().copied());
    for row in &cells {
        out.push_str(&line(&mut row.iter().map(String::as_str)));
    }
    out
}
