//! Weight maps on spiders: the case split, the torso component `C_0`, the
//! injection `phi` from case C522 into case C6, and the elimination check
//! `X^alpha + X^phi(alpha) >=_2s 0`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chromatic::{stable_two_block_counts_alpha, two_row_x_alpha_fast, two_row_y_fast};
use crate::error::{Error, Result};
use crate::graph::{Graph, SpiderShape, Subgraph, WeightMap};
use crate::poly::{
    indep_poly, indep_poly_bruteforce, is_strongly_log_concave, Certificate, PolyJson,
};
use crate::schur2::{is_2s_positive, Partition2, Profile};
use crate::TwoRowProfile;

use super::report::{Outcome, Report};

/// Independence polynomials are cross-checked by subset enumeration up to
/// this many vertices.
pub const BRUTE_FORCE_CHECK_VERTICES: usize = 14;

/// Default weight cap on vertices outside `C_0` in the `phi` audit.
pub const DEFAULT_CAP: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    /// `alpha_0 >= 3`.
    C1,
    /// `alpha_0 = 2`, some leg start weighted.
    C2,
    /// `alpha_0 = 2`, no leg start weighted.
    C3,
    /// `alpha_0 = 1`, no leg start weighted.
    C4,
    /// `alpha_0 = 1`, some leg start of weight at least 2.
    C51,
    /// `alpha_0 = 1`, leg starts at most 1, `C_0` 2-s-positive.
    C521,
    /// `alpha_0 = 1`, leg starts at most 1, `C_0` not 2-s-positive.
    C522,
    /// `alpha_0 = 0`.
    C6,
}

impl CaseTag {
    pub const ALL: [CaseTag; 8] = [
        CaseTag::C1,
        CaseTag::C2,
        CaseTag::C3,
        CaseTag::C4,
        CaseTag::C51,
        CaseTag::C521,
        CaseTag::C522,
        CaseTag::C6,
    ];

    /// Cases whose clan graph contains a triangle.
    pub fn expects_zero(self) -> bool {
        matches!(self, CaseTag::C1 | CaseTag::C2 | CaseTag::C51)
    }

    pub fn expects_positive(self) -> bool {
        matches!(
            self,
            CaseTag::C3 | CaseTag::C4 | CaseTag::C521 | CaseTag::C6
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            CaseTag::C1 => "C1",
            CaseTag::C2 => "C2",
            CaseTag::C3 => "C3",
            CaseTag::C4 => "C4",
            CaseTag::C51 => "C51",
            CaseTag::C521 => "C521",
            CaseTag::C522 => "C522",
            CaseTag::C6 => "C6",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Leg data of `C_0 = S(beta)`, with `beta` kept in the leg order of the
/// ambient spider.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LegProfile {
    pub beta: Vec<usize>,
    pub odd_legs: Vec<usize>,
    /// Legs of positive even length.
    pub even_legs: Vec<usize>,
    pub a: usize,
    pub b: usize,
    pub beta_odd_plus: usize,
    pub beta_odd_minus: usize,
    pub beta_even: usize,
}

impl LegProfile {
    pub fn from_beta(beta: &[usize]) -> Self {
        let mut odd_legs = Vec::new();
        let mut even_legs = Vec::new();
        let (mut plus, mut minus, mut even) = (0, 0, 0);
        for (i, &len) in beta.iter().enumerate() {
            if len == 0 {
                continue;
            }
            if len % 2 == 1 {
                odd_legs.push(i);
                plus += len.div_ceil(2);
                minus += (len - 1) / 2;
            } else {
                even_legs.push(i);
                even += len / 2;
            }
        }
        LegProfile {
            beta: beta.to_vec(),
            a: odd_legs.len(),
            b: even_legs.len(),
            odd_legs,
            even_legs,
            beta_odd_plus: plus,
            beta_odd_minus: minus,
            beta_even: even,
        }
    }

    /// Sizes of the block avoiding the torso and of the block containing it.
    pub fn block_sizes(&self) -> (usize, usize) {
        (
            self.beta_odd_plus + self.beta_even,
            1 + self.beta_odd_minus + self.beta_even,
        )
    }

    pub fn is_balanced(&self) -> bool {
        let (p, q) = self.block_sizes();
        p.abs_diff(q) <= 1
    }

    /// Type of the unique two-block stable partition of `C_0`.
    pub fn main_slot(&self) -> Partition2 {
        let (p, q) = self.block_sizes();
        Partition2::new(p.max(q), p.min(q))
    }

    /// The slot where `X_{C_0}` is negative when `a >= 3`.
    pub fn critical_slot(&self) -> Partition2 {
        let (p, q) = self.block_sizes();
        Partition2::new(p - 1, q + 1)
    }

    /// `(a - 2) 2^b`.
    pub fn expected_critical(&self) -> BigInt {
        (BigInt::from(self.a) - 2) << self.b
    }

    /// First leg, in leg order, among the odd legs of least length.
    pub fn pivot(&self) -> Option<usize> {
        self.odd_legs
            .iter()
            .copied()
            .min_by_key(|&i| (self.beta[i], i))
    }

    /// First odd leg other than the pivot.
    pub fn partner(&self) -> Option<usize> {
        let pivot = self.pivot()?;
        self.odd_legs.iter().copied().find(|&i| i != pivot)
    }
}

fn check_len(shape: &SpiderShape, alpha: &WeightMap) -> Result<()> {
    if alpha.len() != shape.vertex_count() {
        return Err(Error::DomainMismatch {
            expected: shape.vertex_count(),
            got: alpha.len(),
        });
    }
    Ok(())
}

fn leg_starts<'a>(
    shape: &'a SpiderShape,
    alpha: &'a WeightMap,
) -> impl Iterator<Item = usize> + 'a {
    (0..shape.legs())
        .filter(|&i| shape.leg_len(i) > 0)
        .map(|i| alpha[shape.leg_vertex(i, 0)])
}

/// Vertices of `S(lambda)` whose clan copies form the component of the torso.
fn torso_component(shape: &SpiderShape, alpha: &WeightMap) -> Vec<usize> {
    let torso = shape.torso();
    if alpha[torso] == 0 {
        return Vec::new();
    }
    let mut out = vec![torso];
    for leg in 0..shape.legs() {
        out.extend(shape.leg_vertices(leg).take_while(|&v| alpha[v] > 0));
    }
    out
}

/// The case of `alpha` in the spider case analysis.
pub fn classify_alpha(shape: &SpiderShape, alpha: &WeightMap) -> Result<CaseTag> {
    check_len(shape, alpha)?;
    classify_with(shape, &shape.graph(), alpha)
}

fn classify_with(shape: &SpiderShape, g: &Graph, alpha: &WeightMap) -> Result<CaseTag> {
    let max_start = leg_starts(shape, alpha).max().unwrap_or(0);
    Ok(match alpha[shape.torso()] {
        0 => CaseTag::C6,
        1 if max_start == 0 => CaseTag::C4,
        1 if max_start >= 2 => CaseTag::C51,
        1 => {
            let c0 = alpha.restrict(&torso_component(shape, alpha));
            if is_2s_positive(&two_row_x_alpha_fast(g, &c0)?).positive {
                CaseTag::C521
            } else {
                CaseTag::C522
            }
        }
        2 if max_start >= 1 => CaseTag::C2,
        2 => CaseTag::C3,
        _ => CaseTag::C1,
    })
}

/// `C_0` as a spider `S(beta)` inside `S(lambda)`.
#[derive(Clone, Debug)]
pub struct TorsoComponent {
    pub legs: LegProfile,
    pub vertices: Vec<usize>,
    pub spider: Subgraph,
}

/// Reads off `beta`, the runs of weight-1 vertices starting at the torso.
///
/// Requires `alpha_0 = 1`, leg starts at most 1, and every run to end at a
/// weight-0 vertex or at the end of its leg; otherwise `C_0` is not a
/// spider and [`Error::WrongCase`] is returned.
pub fn extract_c0(shape: &SpiderShape, alpha: &WeightMap) -> Result<TorsoComponent> {
    check_len(shape, alpha)?;
    let legs = c0_legs(shape, alpha).ok_or_else(|| Error::WrongCase {
        expected: "alpha_0 = 1 with C_0 a spider".into(),
        got: classify_alpha(shape, alpha)
            .map(|t| t.to_string())
            .unwrap_or_default(),
    })?;
    let vertices = torso_component(shape, alpha);
    let spider = shape.graph().induced(&vertices);
    Ok(TorsoComponent {
        legs,
        vertices,
        spider,
    })
}

fn c0_legs(shape: &SpiderShape, alpha: &WeightMap) -> Option<LegProfile> {
    if alpha[shape.torso()] != 1 {
        return None;
    }
    let mut beta = Vec::with_capacity(shape.legs());
    for leg in 0..shape.legs() {
        let run = shape
            .leg_vertices(leg)
            .take_while(|&v| alpha[v] == 1)
            .count();
        if run < shape.leg_len(leg) && alpha[shape.leg_vertex(leg, run)] != 0 {
            return None;
        }
        beta.push(run);
    }
    Some(LegProfile::from_beta(&beta))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PhiCase {
    /// The pivot leg has length 1.
    #[serde(rename = "i")]
    Single,
    /// The pivot leg has length at least 3.
    #[serde(rename = "ii")]
    Double,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiImage {
    pub image: WeightMap,
    pub case: PhiCase,
    pub pivot: usize,
    pub partner: Option<usize>,
    pub legs: LegProfile,
}

/// `phi(alpha)` for a C522 map.
pub fn phi(shape: &SpiderShape, alpha: &WeightMap) -> Result<WeightMap> {
    Ok(phi_detailed(shape, alpha)?.image)
}

/// `phi(alpha)` together with the legs it acted on.
pub fn phi_detailed(shape: &SpiderShape, alpha: &WeightMap) -> Result<PhiImage> {
    check_len(shape, alpha)?;
    phi_with(shape, &shape.graph(), alpha)
}

fn phi_with(shape: &SpiderShape, g: &Graph, alpha: &WeightMap) -> Result<PhiImage> {
    let tag = classify_with(shape, g, alpha)?;
    if tag != CaseTag::C522 {
        return Err(Error::WrongCase {
            expected: CaseTag::C522.to_string(),
            got: tag.to_string(),
        });
    }
    let legs = c0_legs(shape, alpha).expect("C522 maps have a spider C_0");
    Ok(apply_phi(shape, alpha, legs))
}

fn apply_phi(shape: &SpiderShape, alpha: &WeightMap, legs: LegProfile) -> PhiImage {
    let pivot = legs.pivot().expect("C522 has at least three odd legs");
    let len = legs.beta[pivot];
    let mut image = alpha.clone();
    image[shape.torso()] = 0;
    for pos in 0..len {
        image[shape.leg_vertex(pivot, pos)] = if pos % 2 == 0 { 2 } else { 0 };
    }
    if len == 1 {
        return PhiImage {
            image,
            case: PhiCase::Single,
            pivot,
            partner: None,
            legs,
        };
    }
    let partner = legs.partner().expect("C522 has at least three odd legs");
    assert!(
        legs.beta[partner] >= len,
        "partner leg shorter than the pivot leg"
    );
    for pos in 0..len - 1 {
        image[shape.leg_vertex(partner, pos)] = if pos % 2 == 0 { 2 } else { 0 };
    }
    PhiImage {
        image,
        case: PhiCase::Double,
        pivot,
        partner: Some(partner),
        legs,
    }
}

/// Number of `K_2`s in the `2020...` run at the start of `leg`.
fn k2_run(shape: &SpiderShape, img: &WeightMap, leg: usize) -> usize {
    let len = shape.leg_len(leg);
    let mut t = 0;
    while 2 * t < len
        && img[shape.leg_vertex(leg, 2 * t)] == 2
        && (t == 0 || img[shape.leg_vertex(leg, 2 * t - 1)] == 0)
    {
        t += 1;
    }
    t
}

/// The unique C522 preimage of `img` under `phi`.
pub fn phi_inverse(shape: &SpiderShape, img: &WeightMap) -> Result<WeightMap> {
    check_len(shape, img)?;
    phi_inverse_with(shape, &shape.graph(), img)
}

fn phi_inverse_with(shape: &SpiderShape, g: &Graph, img: &WeightMap) -> Result<WeightMap> {
    let not_in_image = |why: &str| Error::NotInImage(format!("{img}: {why}"));
    if img[shape.torso()] != 0 {
        return Err(not_in_image("torso is weighted"));
    }
    let doubled: Vec<usize> = (0..shape.legs())
        .filter(|&i| shape.leg_len(i) > 0 && img[shape.leg_vertex(i, 0)] == 2)
        .collect();
    let mut cand = img.clone();
    cand[shape.torso()] = 1;
    match doubled[..] {
        [leg] => cand[shape.leg_vertex(leg, 0)] = 1,
        [x, y] => {
            let (tx, ty) = (k2_run(shape, img, x), k2_run(shape, img, y));
            if tx == ty {
                return Err(not_in_image("equal K_2 runs"));
            }
            let t = tx.min(ty);
            for leg in [x, y] {
                if shape.leg_len(leg) < 2 * t + 1 {
                    return Err(not_in_image("leg too short"));
                }
                for pos in 0..=2 * t {
                    cand[shape.leg_vertex(leg, pos)] = 1;
                }
            }
        }
        _ => {
            return Err(not_in_image(&format!(
                "{} leg starts of weight 2",
                doubled.len()
            )))
        }
    }
    match phi_with(shape, g, &cand) {
        Ok(back) if back.image == *img => Ok(cand),
        _ => Err(not_in_image("candidate preimage does not map back")),
    }
}

/// Everything the elimination step claims for one C522 map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Elimination {
    pub alpha: WeightMap,
    pub image: WeightMap,
    pub case: PhiCase,
    pub legs: LegProfile,
    pub main_slot: Partition2,
    pub critical_slot: Partition2,
    /// `X^{alpha|C_0}`.
    pub x_c0: TwoRowProfile,
    /// `X^{phi(alpha)|C_0}`.
    pub x_image_c0: TwoRowProfile,
    #[serde(with = "crate::scalar::as_string")]
    pub critical_coefficient: BigRational,
    #[serde(with = "crate::scalar::as_string")]
    pub expected_critical: BigInt,
    /// Semi-ordered counts in the clan graph of `phi(alpha)|C_0`.
    pub main_count: u64,
    pub critical_count: u64,
    pub expected_main_count: u64,
    pub expected_critical_count: u64,
    /// `X^alpha + X^phi(alpha)` from the clan graphs.
    pub direct_sum: TwoRowProfile,
    /// The same sum as `(X^{alpha|C_0} + X^{phi(alpha)|C_0}) X^{alpha|rest}`.
    pub factored_sum: TwoRowProfile,
    pub rest_unchanged: bool,
}

impl Elimination {
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let at = &self.alpha;
        let expected_c0 = Profile::schur(self.main_slot.k, self.main_slot.l)
            .sub(&Profile::schur(self.critical_slot.k, self.critical_slot.l));
        if self.x_c0 != expected_c0 {
            out.push(format!(
                "{at}: X of C_0 is {}, expected {expected_c0}",
                self.x_c0
            ));
        }
        if self.critical_coefficient != BigRational::from_integer(self.expected_critical.clone()) {
            out.push(format!(
                "{at}: critical coefficient {} at {}, expected {}",
                self.critical_coefficient, self.critical_slot, self.expected_critical
            ));
        }
        if (self.main_count, self.critical_count)
            != (self.expected_main_count, self.expected_critical_count)
        {
            out.push(format!(
                "{at}: semi-ordered counts ({}, {}), expected ({}, {})",
                self.main_count,
                self.critical_count,
                self.expected_main_count,
                self.expected_critical_count
            ));
        }
        let c0_sum = self.x_c0.add(&self.x_image_c0);
        if let Some((slot, c)) = c0_sum.first_negative() {
            out.push(format!("{at}: C_0 sum negative at {slot}: {c}"));
        }
        if let Some((slot, c)) = self.direct_sum.first_negative() {
            out.push(format!(
                "{at}: X^alpha + X^phi(alpha) negative at {slot}: {c}"
            ));
        }
        if self.direct_sum != self.factored_sum {
            out.push(format!("{at}: factored and direct sums differ"));
        }
        if !self.rest_unchanged {
            out.push(format!("{at}: phi changed weights outside C_0"));
        }
        out
    }

    pub fn holds(&self) -> bool {
        self.violations().is_empty()
    }
}

/// Recomputes every quantity of the elimination step for `alpha`.
pub fn verify_elimination(shape: &SpiderShape, alpha: &WeightMap) -> Result<Elimination> {
    check_len(shape, alpha)?;
    elimination_with(shape, &shape.graph(), alpha)
}

fn elimination_with(shape: &SpiderShape, g: &Graph, alpha: &WeightMap) -> Result<Elimination> {
    let phi = phi_with(shape, g, alpha)?;
    let legs = phi.legs.clone();
    let c0 = torso_component(shape, alpha);
    let rest: Vec<usize> = (0..shape.vertex_count())
        .filter(|v| !c0.contains(v))
        .collect();
    let image_c0 = phi.image.restrict(&c0);
    let x_c0 = two_row_x_alpha_fast(g, &alpha.restrict(&c0))?;
    let x_image_c0 = two_row_x_alpha_fast(g, &image_c0)?;
    let x_rest = two_row_x_alpha_fast(g, &alpha.restrict(&rest))?;
    let counts = stable_two_block_counts_alpha(g, &image_c0)?;
    let (main, crit) = (legs.main_slot(), legs.critical_slot());
    let scale = match phi.case {
        PhiCase::Single => legs.b + 1,
        PhiCase::Double => legs.beta[phi.pivot] + legs.b,
    };
    let direct_sum = two_row_x_alpha_fast(g, alpha)?.add(&two_row_x_alpha_fast(g, &phi.image)?);
    let factored_sum = x_c0.add(&x_image_c0).product(&x_rest);
    Ok(Elimination {
        alpha: alpha.clone(),
        rest_unchanged: phi.image.restrict(&rest) == alpha.restrict(&rest),
        image: phi.image,
        case: phi.case,
        main_slot: main,
        critical_slot: crit,
        critical_coefficient: x_image_c0.get(crit.k, crit.l),
        expected_critical: legs.expected_critical(),
        main_count: counts.get(main.k, main.l),
        critical_count: counts.get(crit.k, crit.l),
        expected_main_count: 1 << scale,
        expected_critical_count: (legs.a as u64 - 1) << scale,
        legs,
        x_c0,
        x_image_c0,
        direct_sum,
        factored_sum,
    })
}

/// The C522 part of the audit domain: `alpha_0 = 1`, runs of 1s of length
/// `beta_i` with `S(beta)` unbalanced, a 0 after each run that stops short
/// of the leg end, and weights in `0..=cap` beyond. Grouped by `beta`, in
/// lexicographic order of `beta` and then of the tails.
pub fn c522_domain(shape: &SpiderShape, cap: usize) -> Vec<(LegProfile, Vec<WeightMap>)> {
    run_domain(shape, cap, |legs| !legs.is_balanced())
}

/// All maps with `alpha_0 = 1` whose `C_0` is a spider, grouped by `beta`;
/// `keep` filters the `beta`s.
pub(crate) fn run_domain(
    shape: &SpiderShape,
    cap: usize,
    keep: impl Fn(&LegProfile) -> bool,
) -> Vec<(LegProfile, Vec<WeightMap>)> {
    let mut out = Vec::new();
    for beta in odometer(&shape.lambda().iter().map(|&l| l + 1).collect::<Vec<_>>()) {
        let legs = LegProfile::from_beta(&beta);
        if !keep(&legs) {
            continue;
        }
        let mut base = WeightMap::zeros(shape.vertex_count());
        base[shape.torso()] = 1;
        let mut free = Vec::new();
        for (leg, &run) in beta.iter().enumerate() {
            for pos in 0..run {
                base[shape.leg_vertex(leg, pos)] = 1;
            }
            free.extend((run + 1..shape.leg_len(leg)).map(|pos| shape.leg_vertex(leg, pos)));
        }
        let maps = odometer(&vec![cap + 1; free.len()])
            .map(|tail| {
                let mut alpha = base.clone();
                for (&v, &w) in free.iter().zip(&tail) {
                    alpha[v] = w;
                }
                alpha
            })
            .collect();
        out.push((legs, maps));
    }
    out
}

/// Every vector `x` with `0 <= x[i] < radix[i]`, in lexicographic order.
pub(crate) fn odometer(radix: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let mut next = radix.iter().all(|&r| r > 0).then(|| vec![0; radix.len()]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        for i in (0..radix.len()).rev() {
            succ[i] += 1;
            if succ[i] < radix[i] {
                next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(current)
    })
}

/// One line of the elimination table: a `C_0` shape and what it produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationRow {
    pub beta: Vec<usize>,
    pub case: PhiCase,
    pub a: usize,
    pub b: usize,
    pub critical_slot: Partition2,
    pub critical_coefficient: String,
    pub expected: String,
    pub maps: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiAudit {
    pub cap: usize,
    pub maps: usize,
    pub cases: BTreeMap<CaseTag, usize>,
    pub injective: bool,
    pub rows: Vec<EliminationRow>,
    pub violations: Vec<String>,
}

/// Runs every check of the `phi` argument over [`c522_domain`].
///
/// For each map: it is C522, its image is C6 with the same total weight,
/// `phi_inverse` recovers it, and `X^alpha + X^phi(alpha)` is 2-s-positive.
/// For the first map of each `beta`, the full [`Elimination`] is checked.
/// Images are compared pairwise through a hash map.
pub fn audit_phi(shape: &SpiderShape, cap: usize) -> Result<PhiAudit> {
    let g = shape.graph();
    let groups = c522_domain(shape, cap);
    let mut cases = BTreeMap::new();
    let mut violations = Vec::new();
    let mut rows = Vec::new();
    let mut seen: HashMap<WeightMap, WeightMap> = HashMap::new();
    let mut injective = true;
    let mut maps = 0;
    for (legs, group) in groups {
        let Some(first) = group.first() else { continue };
        let elim = elimination_with(shape, &g, first)?;
        violations.extend(elim.violations());
        rows.push(EliminationRow {
            beta: legs.beta.clone(),
            case: elim.case,
            a: legs.a,
            b: legs.b,
            critical_slot: elim.critical_slot,
            critical_coefficient: elim.critical_coefficient.to_string(),
            expected: elim.expected_critical.to_string(),
            maps: group.len(),
        });
        let outcomes: Vec<Result<AuditOne>> = group
            .par_iter()
            .map(|alpha| audit_one(shape, &g, alpha))
            .collect();
        for (alpha, outcome) in group.iter().zip(outcomes) {
            let (tag, image_tag, image, errs) = outcome?;
            *cases.entry(tag).or_insert(0) += 1;
            *cases.entry(image_tag).or_insert(0) += 1;
            violations.extend(errs);
            if let Some(prev) = seen.insert(image.clone(), alpha.clone()) {
                injective = false;
                violations.push(format!("phi({prev}) = phi({alpha}) = {image}"));
            }
            maps += 1;
        }
    }
    Ok(PhiAudit {
        cap,
        maps,
        cases,
        injective,
        rows,
        violations,
    })
}

/// Case of `alpha`, case of its image, the image, and the failed checks.
type AuditOne = (CaseTag, CaseTag, WeightMap, Vec<String>);

fn audit_one(shape: &SpiderShape, g: &Graph, alpha: &WeightMap) -> Result<AuditOne> {
    let mut errs = Vec::new();
    let tag = classify_with(shape, g, alpha)?;
    if tag != CaseTag::C522 {
        errs.push(format!("{alpha}: expected C522, classified {tag}"));
        return Ok((tag, tag, alpha.clone(), errs));
    }
    let legs = c0_legs(shape, alpha).expect("C522 maps have a spider C_0");
    let image = apply_phi(shape, alpha, legs).image;
    let image_tag = classify_with(shape, g, &image)?;
    if image_tag != CaseTag::C6 {
        errs.push(format!(
            "{alpha}: image {image} is {image_tag}, expected C6"
        ));
    }
    if image.total() != alpha.total() {
        errs.push(format!("{alpha}: phi changed |alpha| to {}", image.total()));
    }
    match phi_inverse_with(shape, g, &image) {
        Ok(back) if back == *alpha => {}
        Ok(back) => errs.push(format!("{alpha}: phi_inverse gave {back}")),
        Err(e) => errs.push(format!("{alpha}: {e}")),
    }
    let sum = two_row_x_alpha_fast(g, alpha)?.add(&two_row_x_alpha_fast(g, &image)?);
    if let Some((slot, c)) = sum.first_negative() {
        errs.push(format!(
            "{alpha}: X^alpha + X^phi(alpha) negative at {slot}: {c}"
        ));
    }
    Ok((tag, image_tag, image, errs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpiderOptions {
    pub audit: bool,
    pub cap: usize,
}

impl Default for SpiderOptions {
    fn default() -> Self {
        SpiderOptions {
            audit: false,
            cap: DEFAULT_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpiderReport {
    pub lambda: Vec<usize>,
    pub vertices: usize,
    pub polynomial: PolyJson,
    pub display: String,
    pub slc: Certificate,
    /// Agreement with subset enumeration, when the spider is small enough.
    pub bruteforce_agrees: Option<bool>,
    pub y_two_s_positive: bool,
    pub audit: Option<PhiAudit>,
}

impl SpiderReport {
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.slc.holds() {
            out.push(format!("{} is not strongly log-concave", self.display));
        }
        if self.bruteforce_agrees == Some(false) {
            out.push("recurrence and subset enumeration disagree".into());
        }
        if !self.y_two_s_positive {
            out.push("Y is not 2-s-positive".into());
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
        let cases = self
            .audit
            .as_ref()
            .map(|a| a.cases.iter().map(|(k, &v)| (k.to_string(), v)).collect())
            .unwrap_or_default();
        Report {
            instance: format!("spider {}", join(&self.lambda)),
            verdict: Outcome::from_violations(&violations),
            cases,
            violations,
            details: serde_json::to_value(self).expect("reports serialize"),
        }
    }
}

pub(crate) fn join(parts: &[usize]) -> String {
    parts
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Independence polynomial, strong log-concavity and 2-s-positivity of
/// `Y` for `S(lambda)`, plus the `phi` audit when requested.
pub fn verify_spider(lambda: &[usize], options: SpiderOptions) -> Result<SpiderReport> {
    let shape = SpiderShape::new(lambda)?;
    let g = shape.graph();
    let ip = indep_poly(&g);
    let bruteforce_agrees = (g.n() <= BRUTE_FORCE_CHECK_VERTICES)
        .then(|| indep_poly_bruteforce(&g).map(|b| b == ip))
        .transpose()?;
    let audit = options
        .audit
        .then(|| audit_phi(&shape, options.cap))
        .transpose()?;
    Ok(SpiderReport {
        lambda: lambda.to_vec(),
        vertices: g.n(),
        polynomial: PolyJson::from(&ip),
        display: ip.to_string(),
        slc: is_strongly_log_concave(&ip),
        bruteforce_agrees,
        y_two_s_positive: is_2s_positive(&two_row_y_fast(&g)).positive,
        audit,
    })
}

/// Tally of [`classify_alpha`] over every map with `|alpha| <= max_total`,
/// checking the profile claim of each case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseSweep {
    pub maps: usize,
    pub cases: BTreeMap<CaseTag, usize>,
    pub violations: Vec<String>,
}

/// Classifies every weight map of total at most `max_total` and checks that
/// C1, C2, C51 give a two-row-zero `X^alpha`, that C3, C4, C521, C6 give a
/// 2-s-positive one, and that a non-2-s-positive `X^alpha` always has a
/// non-2-s-positive `C_0`.
pub fn sweep_cases(shape: &SpiderShape, max_total: usize) -> Result<CaseSweep> {
    let g = shape.graph();
    let n = shape.vertex_count();
    let maps: Vec<WeightMap> = (0..=max_total)
        .flat_map(|d| crate::chromatic::Compositions::new(n, d))
        .collect();
    let results: Vec<Result<(CaseTag, Option<String>)>> = maps
        .par_iter()
        .map(|alpha| {
            let tag = classify_with(shape, &g, alpha)?;
            let x = two_row_x_alpha_fast(&g, alpha)?;
            let positive = is_2s_positive(&x).positive;
            let bad = if (tag.expects_zero() && !x.is_zero())
                || (tag.expects_positive() && !positive)
            {
                Some(format!("{alpha}: {tag} but X^alpha = {x}"))
            } else if !positive {
                let c0 = alpha.restrict(&torso_component(shape, alpha));
                let c0_positive = is_2s_positive(&two_row_x_alpha_fast(&g, &c0)?).positive;
                c0_positive.then(|| format!("{alpha}: X^alpha negative but C_0 is 2-s-positive"))
            } else {
                None
            };
            Ok((tag, bad))
        })
        .collect();
    let mut cases: BTreeMap<CaseTag, usize> = BTreeMap::new();
    let mut violations = Vec::new();
    for r in results {
        let (tag, bad) = r?;
        *cases.entry(tag).or_insert(0) += 1;
        violations.extend(bad);
    }
    Ok(CaseSweep {
        maps: maps.len(),
        cases,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    fn shape(l: &[usize]) -> SpiderShape {
        SpiderShape::new(l).unwrap()
    }

    fn w(v: &[usize]) -> WeightMap {
        WeightMap(v.to_vec())
    }

    #[test]
    fn classification() {
        let claw = shape(&[1, 1, 1]);
        assert_eq!(
            classify_alpha(&claw, &w(&[3, 0, 0, 0])).unwrap(),
            CaseTag::C1
        );
        assert_eq!(
            classify_alpha(&claw, &w(&[2, 1, 0, 0])).unwrap(),
            CaseTag::C2
        );
        assert_eq!(
            classify_alpha(&claw, &w(&[2, 0, 0, 0])).unwrap(),
            CaseTag::C3
        );
        assert_eq!(
            classify_alpha(&claw, &w(&[1, 0, 0, 0])).unwrap(),
            CaseTag::C4
        );
        assert_eq!(
            classify_alpha(&claw, &w(&[1, 2, 1, 0])).unwrap(),
            CaseTag::C51
        );
        assert_eq!(
            classify_alpha(&claw, &w(&[1, 1, 1, 0])).unwrap(),
            CaseTag::C521
        );
        assert_eq!(
            classify_alpha(&claw, &w(&[1, 1, 1, 1])).unwrap(),
            CaseTag::C522
        );
        assert_eq!(
            classify_alpha(&claw, &w(&[0, 5, 1, 1])).unwrap(),
            CaseTag::C6
        );
        assert!(classify_alpha(&claw, &w(&[1, 1])).is_err());
        // A weight-2 vertex right after the run makes C_0 non-bipartite.
        let s = shape(&[2, 1, 1]);
        assert_eq!(
            classify_alpha(&s, &w(&[1, 1, 2, 1, 1])).unwrap(),
            CaseTag::C521
        );
    }

    #[test]
    fn torso_component_legs() {
        let s = shape(&[3, 2, 2, 1]);
        let c0 = extract_c0(&s, &WeightMap::ones(9)).unwrap();
        assert_eq!(c0.legs.beta, vec![3, 2, 2, 1]);
        assert_eq!((c0.legs.a, c0.legs.b), (2, 2));
        let claw = extract_c0(&shape(&[1, 1, 1]), &WeightMap::ones(4)).unwrap();
        assert_eq!((claw.legs.a, claw.legs.b), (3, 0));
        assert_eq!(claw.legs.block_sizes(), (3, 1));
        let p3 = extract_c0(&shape(&[2]), &w(&[1, 1, 0])).unwrap();
        assert_eq!(p3.legs.beta, vec![1]);
        assert_eq!(p3.spider.graph.n(), 2);
        assert!(matches!(
            extract_c0(&shape(&[2]), &w(&[1, 1, 2])),
            Err(Error::WrongCase { .. })
        ));
        assert!(extract_c0(&shape(&[2]), &w(&[0, 1, 1])).is_err());
        // Zero-length legs of beta count as neither odd nor even.
        let lp = LegProfile::from_beta(&[3, 0, 1, 2]);
        assert_eq!((lp.a, lp.b), (2, 1));
        assert_eq!(lp.beta_odd_plus - lp.beta_odd_minus, lp.a);
    }

    #[test]
    fn phi_cases() {
        let claw = shape(&[1, 1, 1]);
        let img = phi_detailed(&claw, &WeightMap::ones(4)).unwrap();
        assert_eq!(img.image, w(&[0, 2, 1, 1]));
        assert_eq!(img.case, PhiCase::Single);
        assert_eq!(phi_inverse(&claw, &img.image).unwrap(), WeightMap::ones(4));

        let s333 = shape(&[3, 3, 3]);
        let img = phi_detailed(&s333, &WeightMap::ones(10)).unwrap();
        assert_eq!(img.case, PhiCase::Double);
        assert_eq!((img.pivot, img.partner), (0, Some(1)));
        assert_eq!(img.image, w(&[0, 2, 0, 2, 2, 0, 1, 1, 1, 1]));
        assert_eq!(phi_inverse(&s333, &img.image).unwrap(), WeightMap::ones(10));

        assert!(matches!(
            phi_inverse(&claw, &w(&[0, 2, 2, 2])),
            Err(Error::NotInImage(_))
        ));
        assert!(matches!(
            phi(&claw, &w(&[1, 1, 1, 0])),
            Err(Error::WrongCase { .. })
        ));
    }

    #[test]
    fn pivot_is_first_shortest_odd_leg() {
        let lp = LegProfile::from_beta(&[5, 3, 4, 3, 1, 1]);
        assert_eq!(lp.pivot(), Some(4));
        assert_eq!(lp.partner(), Some(0));
        let lp = LegProfile::from_beta(&[5, 3, 4, 3]);
        assert_eq!(lp.pivot(), Some(1));
        assert_eq!(lp.partner(), Some(0));
    }

    #[test]
    fn claw_elimination() {
        let e = verify_elimination(&shape(&[1, 1, 1]), &WeightMap::ones(4)).unwrap();
        assert_eq!(e.x_c0.to_string(), "s(3,1) - s(2,2)");
        assert_eq!(e.x_image_c0.to_string(), "s(3,1) + s(2,2)");
        assert_eq!(e.critical_coefficient, rational(1));
        assert_eq!((e.main_count, e.critical_count), (2, 4));
        assert!(e.holds(), "{:?}", e.violations());
    }

    #[test]
    fn small_audits() {
        for l in [&[1, 1, 1][..], &[3, 3, 3], &[2, 1, 1, 1], &[3, 1, 1]] {
            let audit = audit_phi(&shape(l), 2).unwrap();
            assert!(audit.violations.is_empty(), "{l:?}: {:?}", audit.violations);
            assert!(audit.injective && audit.maps > 0);
        }
        let report = verify_spider(
            &[1, 1, 1],
            SpiderOptions {
                audit: true,
                cap: 2,
            },
        )
        .unwrap();
        assert!(report.passed());
        assert_eq!(report.display, "1 + 4t + 3t^2 + t^3");
        assert_eq!(report.audit.unwrap().rows[0].critical_coefficient, "1");
    }

    #[test]
    fn case_sweep() {
        let sweep = sweep_cases(&shape(&[2, 1, 1]), 4).unwrap();
        assert!(sweep.violations.is_empty(), "{:?}", sweep.violations);
        assert_eq!(
            sweep.maps,
            (0..=4)
                .map(|d| crate::chromatic::Compositions::new(5, d).count())
                .sum::<usize>()
        );
    }

    #[test]
    fn odometer_order() {
        let v: Vec<_> = odometer(&[2, 3]).collect();
        assert_eq!(v.len(), 6);
        assert_eq!(v[1], vec![0, 1]);
        assert_eq!(odometer(&[]).count(), 1);
        assert_eq!(odometer(&[0, 2]).count(), 0);
    }
}
