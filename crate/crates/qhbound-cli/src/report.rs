//! Output records and rendering: JSON lines, CSV rows, and right-aligned
//! human tables. Exact integers always serialize as decimal strings; the
//! only floats are display margins, rounded to three decimals.

use qhbound::{BoundReport, ChainReport, CodeParams, CodeRecord, SubsystemCode};
use serde::Serialize;

/// Round a display margin to 3 decimals for serialization; non-finite
/// margins (a zero side in the linear-programming check) become `None`
/// and serialize as `null`.
pub fn round3(x: f64) -> Option<f64> {
    if !x.is_finite() {
        return None;
    }
    let r = (x * 1000.0).round() / 1000.0;
    // Collapse -0.0 so serialization never distinguishes signed zeros.
    Some(if r == 0.0 { 0.0 } else { r })
}

/// Margin cell for tables: fixed three decimals, `inf`/`-inf` for the
/// non-finite cases.
pub fn fmt_margin(x: f64) -> String {
    match round3(x) {
        Some(r) => format!("{r:.3}"),
        None => {
            if x > 0.0 {
                "inf".to_owned()
            } else {
                "-inf".to_owned()
            }
        }
    }
}

/// Decimal rendering for human tables: values beyond 30 digits keep their
/// leading digits and gain a `…(N digits)` suffix.
pub fn format_big_human(s: &str) -> String {
    if s.len() > 30 {
        format!("{}…({} digits)", &s[..30], s.len())
    } else {
        s.to_owned()
    }
}

fn verdict(satisfied: bool) -> &'static str {
    if satisfied {
        "holds"
    } else {
        "VIOLATED"
    }
}

/// One bound's exact sides and verdict, as serialized inside scan records:
/// exactly these four keys, integers as decimal strings.
#[derive(Debug, Clone, Serialize)]
pub struct BoundSummary {
    pub lhs: String,
    pub rhs: String,
    pub satisfied: bool,
    pub margin_bits: Option<f64>,
}

impl From<&BoundReport> for BoundSummary {
    fn from(r: &BoundReport) -> Self {
        BoundSummary {
            lhs: r.lhs.to_string(),
            rhs: r.rhs.to_string(),
            satisfied: r.satisfied,
            margin_bits: round3(r.margin_bits),
        }
    }
}

/// [`BoundSummary`] plus the checker's explanatory note, for single checks.
#[derive(Debug, Clone, Serialize)]
pub struct BoundDetail {
    pub lhs: String,
    pub rhs: String,
    pub satisfied: bool,
    pub margin_bits: Option<f64>,
    pub note: Option<String>,
}

impl From<&BoundReport> for BoundDetail {
    fn from(r: &BoundReport) -> Self {
        BoundDetail {
            lhs: r.lhs.to_string(),
            rhs: r.rhs.to_string(),
            satisfied: r.satisfied,
            margin_bits: round3(r.margin_bits),
            note: r.note.clone(),
        }
    }
}

/// JSON record for `check`.
#[derive(Debug, Serialize)]
pub struct CheckRecord {
    pub n: u64,
    pub k: u64,
    pub r: u64,
    pub d: u64,
    pub hamming: BoundDetail,
    pub singleton: BoundDetail,
}

impl CheckRecord {
    pub fn new(p: &CodeParams, hamming: &BoundReport, singleton: &BoundReport) -> Self {
        CheckRecord {
            n: p.n(),
            k: p.k(),
            r: p.r(),
            d: p.d(),
            hamming: hamming.into(),
            singleton: singleton.into(),
        }
    }
}

/// One family member's parameters and verdicts; the JSON schema is fixed:
/// `{family, a, b, t, n, k, r, d, hamming:{lhs, rhs, satisfied,
/// margin_bits}, singleton:{...}}` with `t` null outside the odd family.
#[derive(Debug, Serialize)]
pub struct ScanRecord {
    pub family: &'static str,
    pub a: u64,
    pub b: u64,
    pub t: Option<u64>,
    pub n: u64,
    pub k: u64,
    pub r: u64,
    pub d: u64,
    pub hamming: BoundSummary,
    pub singleton: BoundSummary,
}

impl ScanRecord {
    pub fn new(
        family: &'static str,
        a: u64,
        b: u64,
        t: Option<u64>,
        p: &CodeParams,
        hamming: &BoundReport,
        singleton: &BoundReport,
    ) -> Self {
        ScanRecord {
            family,
            a,
            b,
            t,
            n: p.n(),
            k: p.k(),
            r: p.r(),
            d: p.d(),
            hamming: hamming.into(),
            singleton: singleton.into(),
        }
    }
}

pub const CSV_HEADER: &str = "family,a,b,t,n,k,r,d,hamming_lhs,hamming_rhs,hamming_satisfied,hamming_margin_bits,singleton_lhs,singleton_rhs,singleton_satisfied,singleton_margin_bits";

fn csv_margin(m: Option<f64>) -> String {
    m.map(|v| format!("{v:.3}")).unwrap_or_default()
}

pub fn csv_row(rec: &ScanRecord) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
        rec.family,
        rec.a,
        rec.b,
        rec.t.map(|t| t.to_string()).unwrap_or_default(),
        rec.n,
        rec.k,
        rec.r,
        rec.d,
        rec.hamming.lhs,
        rec.hamming.rhs,
        rec.hamming.satisfied,
        csv_margin(rec.hamming.margin_bits),
        rec.singleton.lhs,
        rec.singleton.rhs,
        rec.singleton.satisfied,
        csv_margin(rec.singleton.margin_bits),
    )
}

/// One lemma-chain row for `proof --json`.
#[derive(Debug, Serialize)]
pub struct ProofRow {
    pub t: u64,
    pub quadratic_ok: bool,
    pub power_ok: bool,
    pub binomial_ok: bool,
    pub suffices_ok: bool,
    pub full_violation_ok: bool,
    pub margin_bits: Option<f64>,
}

impl From<&ChainReport> for ProofRow {
    fn from(r: &ChainReport) -> Self {
        ProofRow {
            t: r.t,
            quadratic_ok: r.quadratic_ok,
            power_ok: r.power_ok,
            binomial_ok: r.binomial_ok,
            suffices_ok: r.suffices_ok,
            full_violation_ok: r.full_violation_ok,
            margin_bits: round3(r.margin_bits),
        }
    }
}

/// Distance-search section of a code report.
#[derive(Debug, Serialize)]
pub struct DistanceSection {
    pub max_weight: usize,
    pub budget: u64,
    pub outcome: &'static str,
    pub d: Option<usize>,
    pub witness: Option<String>,
    pub enumerated: u64,
    pub family_distance: usize,
    /// `null` when the search was truncated below the family distance and
    /// therefore proves nothing either way.
    pub matches_family: Option<bool>,
    pub purity: Option<&'static str>,
    pub purity_witness: Option<String>,
}

/// Full JSON record for `code`.
#[derive(Debug, Serialize)]
pub struct CodeReportRecord {
    pub a: usize,
    pub b: usize,
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub s: usize,
    pub certified: bool,
    pub gauge: Vec<String>,
    pub stabilizer: Vec<String>,
    pub min_stabilizer_weight: Option<usize>,
    pub distance: Option<DistanceSection>,
}

impl CodeReportRecord {
    pub fn new(
        code: &SubsystemCode,
        certified: bool,
        min_stabilizer_weight: Option<usize>,
        distance: Option<DistanceSection>,
    ) -> Self {
        let rec = CodeRecord::from(code);
        CodeReportRecord {
            a: rec.a,
            b: rec.b,
            n: rec.n,
            k: rec.k,
            r: rec.r,
            s: rec.s,
            certified,
            gauge: rec.gauge,
            stabilizer: rec.stabilizer,
            min_stabilizer_weight,
            distance,
        }
    }
}

fn pad(s: &str, width: usize, right_align: bool) -> String {
    let fill = " ".repeat(width.saturating_sub(s.chars().count()));
    if right_align {
        format!("{fill}{s}")
    } else {
        format!("{s}{fill}")
    }
}

/// Render a header and rows as a table; `right_align[i]` controls column i.
/// Every line is trimmed on the right so output carries no trailing spaces.
pub fn render_table(header: &[&str], rows: &[Vec<String>], right_align: &[bool]) -> String {
    let cols = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let render_row = |cells: Vec<String>| -> String {
        let mut line = String::new();
        for i in 0..cols {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(&pad(&cells[i], widths[i], right_align[i]));
        }
        line.trim_end().to_owned()
    };
    out.push_str(&render_row(header.iter().map(|h| (*h).to_owned()).collect()));
    out.push('\n');
    for row in rows {
        out.push_str(&render_row(row.clone()));
        out.push('\n');
    }
    out
}

/// Human table for a scan.
pub fn scan_table(records: &[ScanRecord]) -> String {
    let header = [
        "family", "a", "b", "t", "n", "k", "r", "d", "h_lhs", "h_rhs", "hamming", "h_margin",
        "s_lhs", "s_rhs", "singleton", "s_margin",
    ];
    let right = [
        false, true, true, true, true, true, true, true, true, true, false, true, true, true,
        false, true,
    ];
    let big = |s: &str| format_big_human(s);
    let margin = |m: Option<f64>| m.map(|v| format!("{v:.3}")).unwrap_or_else(|| "-".to_owned());
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|rec| {
            vec![
                rec.family.to_owned(),
                rec.a.to_string(),
                rec.b.to_string(),
                rec.t.map(|t| t.to_string()).unwrap_or_else(|| "-".to_owned()),
                rec.n.to_string(),
                rec.k.to_string(),
                rec.r.to_string(),
                rec.d.to_string(),
                big(&rec.hamming.lhs),
                big(&rec.hamming.rhs),
                verdict(rec.hamming.satisfied).to_owned(),
                margin(rec.hamming.margin_bits),
                big(&rec.singleton.lhs),
                big(&rec.singleton.rhs),
                verdict(rec.singleton.satisfied).to_owned(),
                margin(rec.singleton.margin_bits),
            ]
        })
        .collect();
    render_table(&header, &rows, &right)
}

/// Human block for a single check.
pub fn check_block(p: &CodeParams, hamming: &BoundReport, singleton: &BoundReport) -> String {
    let h_lhs = format_big_human(&hamming.lhs.to_string());
    let h_rhs = format_big_human(&hamming.rhs.to_string());
    let s_lhs = format_big_human(&singleton.lhs.to_string());
    let s_rhs = format_big_human(&singleton.rhs.to_string());
    let lhs_w = h_lhs.chars().count().max(s_lhs.chars().count());
    let rhs_w = h_rhs.chars().count().max(s_rhs.chars().count());
    let mut out = format!("{p}\n");
    for (name, lhs, rhs, rep) in [
        ("hamming  ", h_lhs, h_rhs, hamming),
        ("singleton", s_lhs, s_rhs, singleton),
    ] {
        out.push_str(&format!(
            "  {name}  lhs {}  rhs {}  {:<8}  margin {} bits\n",
            pad(&lhs, lhs_w, true),
            pad(&rhs, rhs_w, true),
            verdict(rep.satisfied),
            fmt_margin(rep.margin_bits),
        ));
    }
    for (name, rep) in [("hamming", hamming), ("singleton", singleton)] {
        if let Some(note) = &rep.note {
            out.push_str(&format!("  note ({name}): {note}\n"));
        }
    }
    out
}

/// Human table for the lemma chain.
pub fn proof_table(rows: &[ChainReport]) -> String {
    let header = [
        "t",
        "quadratic",
        "power",
        "binomial",
        "suffices",
        "violation",
        "margin_bits",
    ];
    let right = [true, false, false, false, false, false, true];
    let ok = |b: bool| if b { "ok" } else { "FAIL" }.to_owned();
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.t.to_string(),
                ok(r.quadratic_ok),
                ok(r.power_ok),
                ok(r.binomial_ok),
                ok(r.suffices_ok),
                ok(r.full_violation_ok),
                fmt_margin(r.margin_bits),
            ]
        })
        .collect();
    render_table(&header, &body, &right)
}

/// Human block for a code report.
pub fn code_block(rec: &CodeReportRecord) -> String {
    let d_family = rec.a.min(rec.b);
    let mut out = format!(
        "lattice {} x {}: [[{},{},{},{}]]  (s = {})\n",
        rec.a, rec.b, rec.n, rec.k, rec.r, d_family, rec.s
    );
    out.push_str(&format!(
        "certified: {}\n",
        if rec.certified { "yes" } else { "NO" }
    ));
    out.push_str(&format!("gauge generators ({}):\n", rec.gauge.len()));
    for g in &rec.gauge {
        out.push_str(&format!("  {g}\n"));
    }
    out.push_str(&format!("stabilizer generators ({}):\n", rec.stabilizer.len()));
    for s in &rec.stabilizer {
        out.push_str(&format!("  {s}\n"));
    }
    match rec.min_stabilizer_weight {
        Some(w) => out.push_str(&format!("minimum stabilizer-span weight: {w}\n")),
        None => out.push_str("minimum stabilizer-span weight: not computed (span too large)\n"),
    }
    if let Some(dist) = &rec.distance {
        out.push_str(&format!(
            "distance search: max weight {}, budget {}\n",
            dist.max_weight, dist.budget
        ));
        match (dist.d, &dist.witness) {
            (Some(d), Some(w)) => {
                out.push_str(&format!(
                    "  distance {d}  witness {w}  ({} candidates enumerated)\n",
                    dist.enumerated
                ));
                let tag = if dist.matches_family == Some(true) {
                    "match"
                } else {
                    "MISMATCH"
                };
                out.push_str(&format!(
                    "  family distance {}: {tag}\n",
                    dist.family_distance
                ));
            }
            _ => {
                out.push_str(&format!(
                    "  no qualifying operator of weight <= {}  ({} candidates enumerated)\n",
                    dist.max_weight, dist.enumerated
                ));
                match dist.matches_family {
                    Some(false) => out.push_str(&format!(
                        "  family distance {}: MISMATCH (not found within max weight)\n",
                        dist.family_distance
                    )),
                    _ => out.push_str(&format!(
                        "  family distance {}: search truncated below it; no verdict\n",
                        dist.family_distance
                    )),
                }
            }
        }
        match (dist.purity, &dist.purity_witness) {
            (Some("impure"), Some(w)) => out.push_str(&format!(
                "  purity: impure  (gauge element {w} lighter than the distance)\n"
            )),
            (Some("pure"), _) => {
                out.push_str("  purity: pure  (no gauge element lighter than the distance)\n")
            }
            _ => {}
        }
    }
    out
}
