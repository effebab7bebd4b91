use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use spiderlc::chromatic::{two_row_x_alpha_fast, two_row_x_fast, two_row_y_fast, two_row_y_oracle};
use spiderlc::corpus::{claw_free_connected, free_trees, random_graphs};
use spiderlc::iso::canonical_form;
use spiderlc::poly::{indep_poly, is_log_concave, is_strongly_log_concave, is_unimodal, PolyJson};
use spiderlc::scalar::to_rational;
use spiderlc::schur2::{fp_profile, is_2s_positive};
use spiderlc::verifier::{verify_pineapple, verify_spider, Report, SpiderOptions};
use spiderlc::{Certificate, Error, Graph, Poly, Result, TwoRowProfile};

use crate::input::{parse_weights, Instance};

/// Rendered output plus whether it records a violation.
pub struct Output {
    pub json: String,
    pub text: String,
    pub violation: bool,
}

impl Output {
    fn new(value: &impl Serialize, text: String, violation: bool) -> Self {
        Output {
            json: serde_json::to_string_pretty(value).expect("outputs serialize"),
            text,
            violation,
        }
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Serialize)]
struct IndepOut {
    vertices: usize,
    edges: usize,
    polynomial: PolyJson,
    display: String,
    independence_number: usize,
    log_concave: Certificate,
    strongly_log_concave: Certificate,
    unimodal: Certificate,
}

pub fn indep(g: &Graph) -> Output {
    let ip = indep_poly(g);
    let out = IndepOut {
        vertices: g.n(),
        edges: g.edge_count(),
        polynomial: PolyJson::from(&ip),
        display: ip.to_string(),
        independence_number: ip.degree().unwrap_or(0),
        log_concave: is_log_concave(&ip),
        strongly_log_concave: is_strongly_log_concave(&ip),
        unimodal: is_unimodal(&ip),
    };
    let text = format!(
        "{}, SLC: {}\nLC: {}\nunimodal: {}\n",
        out.display,
        yes(out.strongly_log_concave.holds()),
        yes(out.log_concave.holds()),
        yes(out.unimodal.holds()),
    );
    Output::new(&out, text, false)
}

#[derive(Serialize)]
struct Schur2Out {
    vertices: usize,
    alpha: Option<Vec<usize>>,
    profile: TwoRowProfile,
    display: String,
    two_s_positive: bool,
}

pub fn schur2(g: &Graph, alpha: Option<&str>) -> Result<Output> {
    let (alpha, profile) = match alpha {
        Some(s) => {
            let alpha = parse_weights(s, g)?;
            let x = two_row_x_alpha_fast(g, &alpha)?;
            (Some(alpha.0), x)
        }
        None => (None, two_row_x_fast(g)?.map(to_rational)),
    };
    let out = Schur2Out {
        vertices: g.n(),
        alpha,
        display: profile.to_string(),
        two_s_positive: is_2s_positive(&profile).positive,
        profile,
    };
    let text = format!(
        "{}\n2-s-positive: {}\n",
        out.display,
        yes(out.two_s_positive)
    );
    Ok(Output::new(&out, text, false))
}

#[derive(Serialize)]
struct OracleCheck {
    degree: usize,
    agrees: bool,
    oracle: TwoRowProfile,
}

#[derive(Serialize)]
struct YOut {
    polynomial: PolyJson,
    display: String,
    degree_cap: usize,
    profile: TwoRowProfile,
    profile_display: String,
    two_s_positive: bool,
    log_concave: bool,
    strongly_log_concave: bool,
    consistent: bool,
    /// First negative entry, e.g. a negative `(k, k)` gap.
    negative_entry: Option<String>,
    oracle: Option<OracleCheck>,
}

/// `Y` from a graph, or `F_P` from `--poly` coefficients.
pub fn y(
    graph: Option<&Graph>,
    poly: Option<&[usize]>,
    oracle: Option<usize>,
    degree_cap: Option<usize>,
) -> Result<Output> {
    let p: Poly<BigInt> = match (graph, poly) {
        (Some(g), None) => indep_poly(g),
        (None, Some(c)) => Poly::new(c.iter().map(|&v| BigInt::from(v)).collect()),
        _ => {
            return Err(Error::InvalidArgument(
                "give a graph or --poly, not both".into(),
            ))
        }
    };
    let cap = degree_cap.unwrap_or(2 * p.degree().unwrap_or(0) + 2);
    let profile = match (graph, poly) {
        (Some(g), _) => two_row_y_fast(g).truncate(cap),
        _ => fp_profile(&p, cap)?.map(to_rational),
    };
    let positivity = is_2s_positive(&profile);
    let lc = is_log_concave(&p).holds();
    let slc = is_strongly_log_concave(&p).holds();
    let check = match (graph, oracle) {
        (Some(g), Some(d)) => {
            let o = two_row_y_oracle(g, d)?;
            Some(OracleCheck {
                degree: d,
                agrees: o == two_row_y_fast(g).slice(d),
                oracle: o,
            })
        }
        (None, Some(_)) => {
            return Err(Error::InvalidArgument("--oracle needs a graph".into()));
        }
        _ => None,
    };
    // Positivity of the truncated profile matches LC only when the cap
    // reaches every diagonal entry, i.e. 2 * (deg + 1).
    let full = cap >= 2 * p.degree().unwrap_or(0) + 2;
    let consistent = !full || (positivity.positive == lc && lc == slc);
    let out = YOut {
        polynomial: PolyJson::from(&p),
        display: p.to_string(),
        degree_cap: cap,
        profile_display: profile.to_string(),
        two_s_positive: positivity.positive,
        log_concave: lc,
        strongly_log_concave: slc,
        consistent,
        negative_entry: positivity.witness.map(|(at, c)| format!("{at}: {c}")),
        oracle: check,
        profile,
    };
    let mut text = format!(
        "I = {}\nY up to degree {} = {}\n2-s-positive: {}\nLC: {}\nSLC: {}\nLC <=> 2s-positive: {}\n",
        out.display,
        cap,
        out.profile_display,
        yes(out.two_s_positive),
        yes(lc),
        yes(slc),
        if consistent { "consistent" } else { "INCONSISTENT" },
    );
    if let Some(neg) = &out.negative_entry {
        let _ = writeln!(text, "negative entry: {neg}");
    }
    if let Some(c) = &out.oracle {
        let _ = writeln!(
            text,
            "oracle degree {}: {}",
            c.degree,
            if c.agrees { "agrees" } else { "DISAGREES" }
        );
    }
    let violation = !consistent || out.oracle.as_ref().is_some_and(|c| !c.agrees);
    Ok(Output::new(&out, text, violation))
}

pub fn verify(instance: &Instance, options: SpiderOptions) -> Result<Output> {
    let report = match instance {
        Instance::Spider(lambda) => verify_spider(lambda, options)?.to_report(),
        Instance::Pineapple(n, lambda) => verify_pineapple(*n, lambda, options)?.to_report(),
        Instance::File(_) => {
            return Err(Error::InvalidArgument(
                "verify takes \"spider LAMBDA\" or \"pineapple N LAMBDA\"".into(),
            ))
        }
    };
    let text = render_report(&report);
    Ok(Output {
        json: report.to_json(),
        violation: !report.passed(),
        text,
    })
}

fn render_report(report: &Report) -> String {
    let d = &report.details;
    let mut text = format!(
        "{}: {}\nI = {}\n",
        report.instance,
        if report.passed() { "PASS" } else { "FAIL" },
        d["display"].as_str().unwrap_or("?"),
    );
    if !report.cases.is_empty() {
        let cases: Vec<String> = report
            .cases
            .iter()
            .map(|(k, v)| format!("{k}: {v}"))
            .collect();
        let _ = writeln!(text, "cases: {}", cases.join(", "));
    }
    if let Some(rows) = d["audit"]["rows"].as_array() {
        let _ = writeln!(
            text,
            "{:<16} {:>4} {:>3} {:>3} {:>10} {:>9} {:>9} {:>7}",
            "beta", "case", "a", "b", "slot", "critical", "expected", "maps"
        );
        for row in rows {
            let beta: Vec<String> = row["beta"]
                .as_array()
                .map(|b| b.iter().map(|v| v.to_string()).collect())
                .unwrap_or_default();
            let slot = format!(
                "({},{})",
                row["critical_slot"]["k"], row["critical_slot"]["l"]
            );
            let _ = writeln!(
                text,
                "{:<16} {:>4} {:>3} {:>3} {:>10} {:>9} {:>9} {:>7}",
                beta.join(","),
                row["case"].as_str().unwrap_or("?"),
                row["a"].to_string(),
                row["b"].to_string(),
                slot,
                row["critical_coefficient"].as_str().unwrap_or("?"),
                row["expected"].as_str().unwrap_or("?"),
                row["maps"].to_string(),
            );
        }
    }
    for v in &report.violations {
        let _ = writeln!(text, "violation: {v}");
    }
    text
}

#[derive(Clone, Debug)]
pub enum ScanKind {
    Random {
        max_n: usize,
        count: usize,
        seed: u64,
    },
    Trees(usize),
    ClawFree(usize),
}

#[derive(Serialize)]
struct ScanItem {
    key: String,
    vertices: usize,
    edges: Vec<[usize; 2]>,
    polynomial: String,
    log_concave: bool,
    unimodal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    y_two_s_positive: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    x_two_s_positive: Option<bool>,
}

#[derive(Serialize)]
struct ScanOut {
    corpus: String,
    model: Option<String>,
    items: usize,
    counts: BTreeMap<String, usize>,
    /// Failures of claims that must hold on this corpus.
    violations: Vec<String>,
    /// Failures reported as data only.
    observations: Vec<String>,
    results: Vec<ScanItem>,
}

fn scan_item(g: &Graph, kind: &ScanKind) -> Result<ScanItem> {
    let ip = indep_poly(g);
    let cf = canonical_form(g);
    let key = format!(
        "{:02}:{}",
        g.n(),
        cf.rows
            .iter()
            .map(|r| format!("{r:x}"))
            .collect::<Vec<_>>()
            .join(".")
    );
    let (y, x) = match kind {
        ScanKind::Random { .. } => (Some(is_2s_positive(&two_row_y_fast(g)).positive), None),
        ScanKind::Trees(_) => (None, None),
        ScanKind::ClawFree(_) => (None, Some(is_2s_positive(&two_row_x_fast(g)?).positive)),
    };
    Ok(ScanItem {
        key,
        vertices: g.n(),
        edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        polynomial: ip.to_string(),
        log_concave: is_log_concave(&ip).holds(),
        unimodal: is_unimodal(&ip).holds(),
        y_two_s_positive: y,
        x_two_s_positive: x,
    })
}

pub fn scan(kind: ScanKind) -> Result<Output> {
    let (corpus, model, graphs) = match &kind {
        ScanKind::Random { max_n, count, seed } => (
            format!("{count} random graphs, n <= {max_n}"),
            Some(format!(
                "G(n, 1/2), n uniform in 1..={max_n}, ChaCha8 seed {seed}"
            )),
            random_graphs(*count, 1, (*max_n).max(1), *seed),
        ),
        ScanKind::Trees(n) => (
            format!("all trees, n <= {n}"),
            None,
            (1..=*n).flat_map(free_trees).collect(),
        ),
        ScanKind::ClawFree(n) => (
            format!("all connected claw-free graphs, n <= {n}"),
            None,
            (1..=*n).flat_map(claw_free_connected).collect(),
        ),
    };
    let mut results = graphs
        .par_iter()
        .map(|g| scan_item(g, &kind))
        .collect::<Result<Vec<_>>>()?;
    results.sort_by(|a, b| a.key.cmp(&b.key));
    let mut counts = BTreeMap::new();
    let mut violations = Vec::new();
    let mut observations = Vec::new();
    for item in &results {
        let mut tally = |name: &str, hit: bool| {
            if hit {
                *counts.entry(name.to_string()).or_insert(0) += 1;
            }
        };
        tally("log-concave", item.log_concave);
        tally("unimodal", item.unimodal);
        tally("y 2-s-positive", item.y_two_s_positive == Some(true));
        tally("x 2-s-positive", item.x_two_s_positive == Some(true));
        let at = format!("{} ({})", item.key, item.polynomial);
        if !item.log_concave {
            observations.push(format!("{at}: not log-concave"));
        }
        match kind {
            ScanKind::Random { .. } => {
                if item.y_two_s_positive != Some(item.log_concave) {
                    violations.push(format!("{at}: LC and 2-s-positivity of Y disagree"));
                }
                if !item.unimodal {
                    observations.push(format!("{at}: not unimodal"));
                }
            }
            ScanKind::Trees(_) => {
                if !item.unimodal {
                    violations.push(format!("{at}: not unimodal"));
                }
            }
            ScanKind::ClawFree(_) => {
                if item.x_two_s_positive != Some(true) {
                    violations.push(format!("{at}: X is not 2-s-positive"));
                }
                if !item.log_concave {
                    violations.push(format!("{at}: not log-concave"));
                }
            }
        }
    }
    let out = ScanOut {
        corpus,
        model,
        items: results.len(),
        counts,
        violations,
        observations,
        results,
    };
    let mut text = format!("{}\n", out.corpus);
    if let Some(m) = &out.model {
        let _ = writeln!(text, "model: {m}");
    }
    let _ = writeln!(text, "items: {}", out.items);
    for (k, v) in &out.counts {
        let _ = writeln!(text, "{k}: {v}/{}", out.items);
    }
    if let ScanKind::Random { .. } = kind {
        let _ = writeln!(
            text,
            "LC <=> 2s-positive: {}",
            if out.violations.is_empty() {
                "consistent in all cases"
            } else {
                "INCONSISTENT"
            }
        );
    }
    for o in &out.observations {
        let _ = writeln!(text, "note: {o}");
    }
    for v in &out.violations {
        let _ = writeln!(text, "violation: {v}");
    }
    let _ = writeln!(
        text,
        "{}",
        if out.violations.is_empty() {
            "PASS"
        } else {
            "FAIL"
        }
    );
    let violation = !out.violations.is_empty();
    Ok(Output::new(&out, text, violation))
}
