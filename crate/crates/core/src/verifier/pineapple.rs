//! Pineapples `Pi(n, lambda) = S((lambda, 1))_v^{n-1}` and the restricted
//! `phi` that trades `alpha(u) = alpha(v_i) = 1` for `alpha(u) = 0`,
//! `alpha(v_i) = 2`.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chromatic::{two_row_x_alpha_fast, two_row_y_fast};
use crate::error::Result;
use crate::graph::{make_pineapple, Graph, SpiderShape, WeightMap};
use crate::poly::{indep_poly, indep_poly_bruteforce, is_log_concave, Certificate, PolyJson};
use crate::scalar::to_rational;
use crate::schur2::{is_2s_positive, Profile};

use super::report::{Outcome, Report};
use super::spider::{
    join, run_domain, verify_spider, EliminationRow, LegProfile, PhiCase, SpiderOptions,
    BRUTE_FORCE_CHECK_VERTICES,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PineappleAudit {
    pub cap: usize,
    /// Single-clique-vertex maps audited.
    pub maps: usize,
    /// How many of them have a non-2-s-positive `X^alpha`.
    pub negative: usize,
    pub cases: BTreeMap<String, usize>,
    pub injective: bool,
    pub rows: Vec<EliminationRow>,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PineappleReport {
    pub n: usize,
    pub lambda: Vec<usize>,
    pub vertices: usize,
    pub polynomial: PolyJson,
    pub display: String,
    pub lc: Certificate,
    pub bruteforce_agrees: Option<bool>,
    pub y_two_s_positive: bool,
    /// For `n = 1`: the graph is `S(lambda)` and the spider verdict agrees.
    pub matches_spider: Option<bool>,
    pub audit: Option<PineappleAudit>,
}

impl PineappleReport {
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.lc.holds() {
            out.push(format!("{} is not log-concave", self.display));
        }
        if self.bruteforce_agrees == Some(false) {
            out.push("recurrence and subset enumeration disagree".into());
        }
        if !self.y_two_s_positive {
            out.push("Y is not 2-s-positive".into());
        }
        if self.matches_spider == Some(false) {
            out.push("Pi(1, lambda) differs from S(lambda)".into());
        }
        if let Some(audit) = &self.audit {
            out.extend(audit.violations.iter().cloned());
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.violations().is_empty()
    }

    pub fn to_report(&self) -> Report {
        let violations = self.violations();
        Report {
            instance: format!("pineapple {} {}", self.n, join(&self.lambda)),
            verdict: Outcome::from_violations(&violations),
            cases: self
                .audit
                .as_ref()
                .map(|a| a.cases.clone())
                .unwrap_or_default(),
            violations,
            details: serde_json::to_value(self).expect("reports serialize"),
        }
    }
}

/// Log-concavity of `I_{Pi(n, lambda)}` and 2-s-positivity of its `Y`,
/// plus, for `n >= 2` and `audit`, the elimination audit of the single-clique-vertex case.
pub fn verify_pineapple(
    n: usize,
    lambda: &[usize],
    options: SpiderOptions,
) -> Result<PineappleReport> {
    let g = make_pineapple(n, lambda)?;
    let ip = indep_poly(&g);
    let bruteforce_agrees = (g.n() <= BRUTE_FORCE_CHECK_VERTICES)
        .then(|| indep_poly_bruteforce(&g).map(|b| b == ip))
        .transpose()?;
    let lc = is_log_concave(&ip);
    let matches_spider = if n == 1 {
        let spider = verify_spider(lambda, SpiderOptions::default())?;
        let same_graph = g.same_structure(&crate::make_spider(lambda)?);
        Some(same_graph && spider.slc.holds() == lc.holds())
    } else {
        None
    };
    let audit = (options.audit && n >= 2)
        .then(|| audit_pineapple(n, lambda, &g, options.cap))
        .transpose()?;
    Ok(PineappleReport {
        n,
        lambda: lambda.to_vec(),
        vertices: g.n(),
        polynomial: PolyJson::from(&ip),
        display: ip.to_string(),
        lc,
        bruteforce_agrees,
        y_two_s_positive: is_2s_positive(&two_row_y_fast(&g)).positive,
        matches_spider,
        audit,
    })
}

/// The single-clique-vertex case: `alpha(u) = 1`, exactly one `v_i` of weight 1 and the other
/// clique vertices 0. On the legs, the domain is the one of the spider
/// audit: runs of 1s from the torso, a 0 after each run, then weights in
/// `0..=cap`.
fn audit_pineapple(n: usize, lambda: &[usize], g: &Graph, cap: usize) -> Result<PineappleAudit> {
    let shape = SpiderShape::new(lambda)?;
    let base = shape.vertex_count();
    let groups = run_domain(&shape, cap, |_| true);
    let mut cases: BTreeMap<String, usize> = BTreeMap::new();
    let mut violations = Vec::new();
    let mut rows = Vec::new();
    let mut seen: HashMap<WeightMap, WeightMap> = HashMap::new();
    let mut injective = true;
    let (mut maps, mut negative) = (0, 0);
    let lift = |alpha: &WeightMap, i: usize| {
        let mut out = alpha.0.clone();
        out.resize(g.n(), 0);
        out[base + i] = 1;
        WeightMap(out)
    };
    for i in 0..n - 1 {
        let vi = base + i;
        for (spider_legs, group) in &groups {
            let mut beta = spider_legs.beta.clone();
            beta.push(1);
            let legs = LegProfile::from_beta(&beta);
            let Some(first) = group.first() else { continue };
            let first = lift(first, i);
            violations.extend(check_representative(
                g, &shape, &first, vi, n, &legs, &mut cases,
            )?);
            if i == 0 && !legs.is_balanced() {
                let crit = legs.critical_slot();
                let c0 = c0_vertices(&shape, &first, vi);
                let image = restricted_phi(&first, vi).restrict(&c0);
                rows.push(EliminationRow {
                    beta: beta.clone(),
                    case: PhiCase::Single,
                    a: legs.a,
                    b: legs.b,
                    critical_slot: crit,
                    critical_coefficient: two_row_x_alpha_fast(g, &image)?
                        .get(crit.k, crit.l)
                        .to_string(),
                    expected: legs.expected_critical().to_string(),
                    maps: group.len(),
                });
            }
            let lifted: Vec<WeightMap> = group.iter().map(|a| lift(a, i)).collect();
            let outcomes: Vec<Result<(bool, Vec<String>)>> = lifted
                .par_iter()
                .map(|alpha| {
                    let x = two_row_x_alpha_fast(g, alpha)?;
                    let image = restricted_phi(alpha, vi);
                    let sum = x.add(&two_row_x_alpha_fast(g, &image)?);
                    let mut errs = Vec::new();
                    let neg = !is_2s_positive(&x).positive;
                    if neg && legs.is_balanced() {
                        errs.push(format!("{alpha}: X^alpha negative with a balanced C_0"));
                    }
                    if let Some((slot, c)) = sum.first_negative() {
                        errs.push(format!(
                            "{alpha}: X^alpha + X^phi(alpha) negative at {slot}: {c}"
                        ));
                    }
                    Ok((neg, errs))
                })
                .collect();
            for (alpha, outcome) in lifted.iter().zip(outcomes) {
                let (neg, errs) = outcome?;
                violations.extend(errs);
                negative += usize::from(neg);
                maps += 1;
                let image = restricted_phi(alpha, vi);
                if let Some(prev) = seen.insert(image.clone(), alpha.clone()) {
                    injective = false;
                    violations.push(format!("phi({prev}) = phi({alpha}) = {image}"));
                }
            }
        }
    }
    cases.insert("single-clique-vertex".into(), maps);
    Ok(PineappleAudit {
        cap,
        maps,
        negative,
        cases,
        injective,
        rows,
        violations,
    })
}

fn restricted_phi(alpha: &WeightMap, vi: usize) -> WeightMap {
    let mut image = alpha.clone();
    image[0] = 0;
    image[vi] = 2;
    image
}

fn c0_vertices(shape: &SpiderShape, alpha: &WeightMap, vi: usize) -> Vec<usize> {
    let mut out = vec![0, vi];
    for leg in 0..shape.legs() {
        out.extend(shape.leg_vertices(leg).take_while(|&v| alpha[v] > 0));
    }
    out
}

/// Checks on one map per `(v_i, beta)`: the `C_0` profile and critical
/// coefficient, and that the neighbouring maps with a weight-2 vertex on
/// the edge `u v_i`, or with two weighted clique vertices, vanish on two
/// rows.
fn check_representative(
    g: &Graph,
    shape: &SpiderShape,
    alpha: &WeightMap,
    vi: usize,
    n: usize,
    legs: &LegProfile,
    cases: &mut BTreeMap<String, usize>,
) -> Result<Vec<String>> {
    let mut errs = Vec::new();
    let c0 = c0_vertices(shape, alpha, vi);
    let x_c0 = two_row_x_alpha_fast(g, &alpha.restrict(&c0))?;
    if !legs.is_balanced() {
        let (main, crit) = (legs.main_slot(), legs.critical_slot());
        let expected = Profile::schur(main.k, main.l).sub(&Profile::schur(crit.k, crit.l));
        if x_c0 != expected {
            errs.push(format!("{alpha}: X of C_0 is {x_c0}, expected {expected}"));
        }
        let image = restricted_phi(alpha, vi).restrict(&c0);
        let got = two_row_x_alpha_fast(g, &image)?.get(crit.k, crit.l);
        if got != to_rational(&legs.expected_critical()) {
            errs.push(format!(
                "{alpha}: critical coefficient {got}, expected {}",
                legs.expected_critical()
            ));
        }
    } else if !is_2s_positive(&x_c0).positive {
        errs.push(format!("{alpha}: balanced C_0 with X = {x_c0}"));
    }
    let mut variants = Vec::new();
    let mut heavy_u = alpha.clone();
    heavy_u[0] = 2;
    variants.push(("heavy", heavy_u));
    let mut heavy_v = alpha.clone();
    heavy_v[vi] = 2;
    variants.push(("heavy", heavy_v));
    if n >= 3 {
        let other = if vi + 1 < g.n() { vi + 1 } else { vi - 1 };
        let mut two = alpha.clone();
        two[other] = 1;
        variants.push(("two-clique-vertices", two));
    }
    for (case, variant) in variants {
        *cases.entry(case.to_string()).or_insert(0) += 1;
        let x = two_row_x_alpha_fast(g, &variant)?;
        if !x.is_zero() {
            errs.push(format!("{variant}: {case} case but X = {x}"));
        }
    }
    Ok(errs)
}
