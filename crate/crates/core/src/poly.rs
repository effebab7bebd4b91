//! Dense exact polynomials, independence polynomials, and the
//! log-concavity family of certificates.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Coefficient;

/// Largest graph the subset-enumeration oracles accept.
pub const MAX_BRUTE_FORCE_VERTICES: usize = 25;

/// A dense polynomial in one variable; `coeffs[j]` is the coefficient of
/// `t^j`. Trailing zeros are never stored, so the zero polynomial has no
/// coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Coefficient> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| T::from_u64(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![T::one()],
        }
    }

    /// `(1 + t)^n`.
    pub fn one_plus_t_pow(n: usize) -> Self {
        let mut row = vec![T::one()];
        for _ in 0..n {
            let mut next = vec![T::zero(); row.len() + 1];
            for (i, c) in row.into_iter().enumerate() {
                next[i] = next[i].clone() + c.clone();
                next[i + 1] = next[i + 1].clone() + c;
            }
            row = next;
        }
        Poly::new(row)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `t^j`, zero past the degree.
    pub fn coeff(&self, j: usize) -> T {
        self.coeffs.get(j).cloned().unwrap_or_else(T::zero)
    }

    /// Coefficient at a possibly negative index.
    pub fn coeff_at(&self, j: isize) -> T {
        if j < 0 {
            T::zero()
        } else {
            self.coeff(j as usize)
        }
    }

    /// Highest index with a nonzero coefficient; `None` for the zero
    /// polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|j| self.coeff(j) + other.coeff(j)).collect())
    }

    /// Exact convolution.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }

    /// Value at an integer point, by Horner's rule.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }
}

/// `p * q`.
pub fn poly_product<T: Coefficient>(p: &Poly<T>, q: &Poly<T>) -> Poly<T> {
    p.mul(q)
}

impl<T: Coefficient> fmt::Display for Poly<T> {
    /// Human form, e.g. `1 + 4t + 3t^2 + t^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs_value();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let unit = mag.is_one() && j > 0;
            if !unit {
                write!(f, "{mag}")?;
            }
            match j {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{j}")?,
            }
        }
        Ok(())
    }
}

/// Wire format `{"coeffs": ["1", "4", "3", "1"]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub coeffs: Vec<String>,
}

impl<T: Coefficient> From<&Poly<T>> for PolyJson {
    fn from(p: &Poly<T>) -> Self {
        PolyJson {
            coeffs: p.coeffs.iter().map(ToString::to_string).collect(),
        }
    }
}

impl<T: Coefficient + std::str::FromStr> TryFrom<&PolyJson> for Poly<T> {
    type Error = Error;

    fn try_from(json: &PolyJson) -> Result<Self> {
        let coeffs = json
            .coeffs
            .iter()
            .map(|s| {
                s.trim()
                    .parse::<T>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))
            })
            .collect::<Result<Vec<T>>>()?;
        Ok(Poly::new(coeffs))
    }
}

// ---- certificates ----

/// Which property a [`Certificate`] vouches for; `None` means the tested
/// property fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    LogConcave,
    StronglyLogConcave,
    Unimodal,
    None,
}

/// A concrete failure, checkable against the polynomial it came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// `a_j^2 < a_{j-1} a_{j+1}`.
    LogConcavity { j: usize },
    /// A negative coefficient (a failing 1x1 Toeplitz minor).
    Negative { j: usize },
    /// `a_m a_n < a_p a_q` with `p < m <= n < q`, `m + n = p + q`.
    Minor {
        p: usize,
        m: usize,
        n: usize,
        q: usize,
    },
    /// `a_descent < a_{descent-1}` and later `a_ascent > a_{ascent-1}`.
    Valley { descent: usize, ascent: usize },
}

impl Violation {
    /// Recomputes the inequality; true when it is strictly violated.
    pub fn is_strict_violation<T: Coefficient>(&self, p: &Poly<T>) -> bool {
        match *self {
            Violation::LogConcavity { j } => {
                j >= 1 && p.coeff(j) * p.coeff(j) < p.coeff(j - 1) * p.coeff(j + 1)
            }
            Violation::Negative { j } => p.coeff(j).is_negative(),
            Violation::Minor { p: a, m, n, q } => {
                a < m
                    && m <= n
                    && n < q
                    && m + n == a + q
                    && p.coeff(m) * p.coeff(n) < p.coeff(a) * p.coeff(q)
            }
            Violation::Valley { descent, ascent } => {
                descent >= 1
                    && descent < ascent
                    && p.coeff(descent) < p.coeff(descent - 1)
                    && p.coeff(ascent) > p.coeff(ascent - 1)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Violation>,
    /// Peak index, reported by the unimodality test when it succeeds.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<usize>,
}

impl Certificate {
    pub fn holds(&self) -> bool {
        self.verdict != Verdict::None
    }

    fn pass(verdict: Verdict) -> Self {
        Certificate {
            verdict,
            witness: None,
            mode: None,
        }
    }

    fn fail(witness: Violation) -> Self {
        Certificate {
            verdict: Verdict::None,
            witness: Some(witness),
            mode: None,
        }
    }
}

/// `a_j^2 >= a_{j-1} a_{j+1}` for `1 <= j <= d-1`, taken literally (no
/// positivity assumption).
pub fn is_log_concave<T: Coefficient>(p: &Poly<T>) -> Certificate {
    let c = p.coeffs();
    for j in 1..c.len().saturating_sub(1) {
        if c[j].clone() * c[j].clone() < c[j - 1].clone() * c[j + 1].clone() {
            return Certificate::fail(Violation::LogConcavity { j });
        }
    }
    Certificate::pass(Verdict::LogConcave)
}

/// Every minor of order at most 2 of the Toeplitz matrix `(a_{j-i})` is
/// nonnegative: all `a_j >= 0`, and `a_m a_n >= a_p a_q` for
/// `0 <= p < m <= n < q <= d + 1` with `m + n = p + q`. Minors touching
/// indices past `d + 1` involve only zeros and are skipped.
pub fn is_strongly_log_concave<T: Coefficient>(p: &Poly<T>) -> Certificate {
    if let Some(j) = p.coeffs().iter().position(Coefficient::is_negative) {
        return Certificate::fail(Violation::Negative { j });
    }
    let Some(d) = p.degree() else {
        return Certificate::pass(Verdict::StronglyLogConcave);
    };
    let top = d + 1;
    for m in 1..=top {
        for n in m..top {
            let lhs = p.coeff(m) * p.coeff(n);
            for lo in 0..m {
                let q = m + n - lo;
                if q > top {
                    continue;
                }
                if lhs < p.coeff(lo) * p.coeff(q) {
                    return Certificate::fail(Violation::Minor { p: lo, m, n, q });
                }
            }
        }
    }
    Certificate::pass(Verdict::StronglyLogConcave)
}

/// Coefficients rise weakly to a peak and then fall weakly.
pub fn is_unimodal<T: Coefficient>(p: &Poly<T>) -> Certificate {
    let c = p.coeffs();
    let Some(descent) = (1..c.len()).find(|&j| c[j] < c[j - 1]) else {
        return Certificate {
            mode: Some(c.len().saturating_sub(1)),
            ..Certificate::pass(Verdict::Unimodal)
        };
    };
    if let Some(ascent) = (descent + 1..c.len()).find(|&j| c[j] > c[j - 1]) {
        return Certificate::fail(Violation::Valley { descent, ascent });
    }
    Certificate {
        mode: Some(descent - 1),
        ..Certificate::pass(Verdict::Unimodal)
    }
}

// ---- independence polynomials ----

/// `I_G(t)`, the generating polynomial of independent sets by size.
///
/// Uses `I_G = I_{G-v} + t I_{G-N[v]}` pivoting on a vertex of maximum
/// degree, multiplies over connected components, and returns `(1+t)^n`
/// for edgeless graphs. Connected pieces are memoized on their edge list.
pub fn indep_poly(g: &Graph) -> Poly<BigInt> {
    let mut memo = HashMap::new();
    indep_rec(g, &mut memo)
}

type MemoKey = (usize, Vec<(usize, usize)>);

fn indep_rec(g: &Graph, memo: &mut HashMap<MemoKey, Poly<BigInt>>) -> Poly<BigInt> {
    if g.edge_count() == 0 {
        return Poly::one_plus_t_pow(g.n());
    }
    let comps = g.connected_components();
    if comps.len() > 1 {
        return comps
            .iter()
            .fold(Poly::one(), |acc, c| acc.mul(&indep_rec(&c.graph, memo)));
    }
    let key = (g.n(), g.edges());
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let pivot = (0..g.n())
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .expect("graph has edges");
    let without = g.delete_vertices(&[pivot]).expect("pivot in range").graph;
    let outside = g
        .delete_vertices(&g.closed_neighborhood(pivot))
        .expect("neighborhood in range")
        .graph;
    let result = indep_rec(&without, memo).add(&indep_rec(&outside, memo).shift(1));
    memo.insert(key, result.clone());
    result
}

/// Counts independent sets by direct subset enumeration. This is the
/// oracle for [`indep_poly`].
pub fn indep_poly_bruteforce(g: &Graph) -> Result<Poly<BigInt>> {
    let n = g.n();
    if n > MAX_BRUTE_FORCE_VERTICES {
        return Err(Error::TooLarge {
            what: "subset enumeration",
            size: n,
            limit: MAX_BRUTE_FORCE_VERTICES,
        });
    }
    let masks: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let mut counts = vec![0u64; n + 1];
    for set in 0u32..(1u32 << n) {
        let independent = (0..n).all(|v| set & (1 << v) == 0 || set & masks[v] == 0);
        if independent {
            counts[set.count_ones() as usize] += 1;
        }
    }
    Ok(Poly::new(counts.into_iter().map(BigInt::from).collect()))
}

/// Size of a maximum independent set, i.e. `deg I_G`.
pub fn independence_number(g: &Graph) -> usize {
    indep_poly(g).degree().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly<i64> {
        Poly::new(c.to_vec())
    }

    fn big(c: &[u64]) -> Poly<BigInt> {
        Poly::from_u64s(c)
    }

    #[test]
    fn arithmetic_and_display() {
        assert_eq!(p(&[1, 1]).mul(&p(&[1, 1])), p(&[1, 2, 1]));
        assert_eq!(p(&[3, 0, 2]).mul(&Poly::one()), p(&[3, 0, 2]));
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(Poly::<i64>::zero().degree(), None);
        assert_eq!(Poly::<i64>::one_plus_t_pow(4), p(&[1, 4, 6, 4, 1]));
        assert_eq!(p(&[1, 4, 3, 1]).to_string(), "1 + 4t + 3t^2 + t^3");
        assert_eq!(p(&[0, -1, 0, 2]).to_string(), "-t + 2t^3");
        assert_eq!(p(&[2, -1]).to_string(), "2 - t");
        assert_eq!(p(&[1, 2, 3]).eval(&2), 17);
    }

    #[test]
    fn json_roundtrip() {
        let q = big(&[1, 4, 3, 1]);
        let json = PolyJson::from(&q);
        assert_eq!(json.coeffs, vec!["1", "4", "3", "1"]);
        assert_eq!(
            serde_json::to_string(&json).unwrap(),
            r#"{"coeffs":["1","4","3","1"]}"#
        );
        assert_eq!(Poly::<BigInt>::try_from(&json).unwrap(), q);
        let bad = PolyJson {
            coeffs: vec!["x".into()],
        };
        assert!(Poly::<BigInt>::try_from(&bad).is_err());
    }

    #[test]
    fn log_concavity() {
        assert!(is_log_concave(&p(&[1, 4, 3, 1])).holds());
        assert!(is_log_concave(&p(&[1, 1, 1])).holds());
        let cert = is_log_concave(&p(&[1, 1, 2]));
        assert_eq!(cert.witness, Some(Violation::LogConcavity { j: 1 }));
        assert!(cert.witness.unwrap().is_strict_violation(&p(&[1, 1, 2])));
    }

    #[test]
    fn strong_log_concavity() {
        assert!(is_strongly_log_concave(&p(&[1, 4, 3, 1])).holds());
        for n in 0..8 {
            assert!(is_strongly_log_concave(&Poly::<i64>::one_plus_t_pow(n)).holds());
        }
        let gap = p(&[1, 1, 0, 1]);
        let cert = is_strongly_log_concave(&gap);
        assert_eq!(cert.verdict, Verdict::None);
        let w = cert.witness.unwrap();
        assert!(w.is_strict_violation(&gap));
        // Literal log-concavity fails too, at j = 2: 0 < 1 * 1.
        assert!(!is_log_concave(&gap).holds());
        assert_eq!(
            is_strongly_log_concave(&p(&[1, -1])).witness,
            Some(Violation::Negative { j: 1 })
        );
    }

    #[test]
    fn slc_minor_witness_is_found_with_zero_endpoint() {
        // 1 + t + 0t^2 + t^3: a_1 a_2 = 0 < a_0 a_3 = 1.
        let gap = p(&[1, 1, 0, 1]);
        let bad = Violation::Minor {
            p: 0,
            m: 1,
            n: 2,
            q: 3,
        };
        assert!(bad.is_strict_violation(&gap));
    }

    #[test]
    fn unimodality() {
        let cert = is_unimodal(&p(&[1, 4, 3]));
        assert!(cert.holds());
        assert_eq!(cert.mode, Some(1));
        let cert = is_unimodal(&p(&[2, 1, 2]));
        assert_eq!(
            cert.witness,
            Some(Violation::Valley {
                descent: 1,
                ascent: 2
            })
        );
        let cert = is_unimodal(&p(&[1, 3, 3, 1]));
        assert!(cert.holds());
        assert_eq!(cert.mode, Some(2));
        assert!(is_unimodal(&Poly::<i64>::zero()).holds());
    }

    #[test]
    fn independence_polynomials() {
        assert_eq!(indep_poly(&Graph::empty(3)), big(&[1, 3, 3, 1]));
        assert_eq!(indep_poly(&Graph::empty(0)), big(&[1]));
        assert_eq!(indep_poly(&Graph::star(3)), big(&[1, 4, 3, 1]));
        assert_eq!(indep_poly(&Graph::path(4)), big(&[1, 4, 3]));
        assert_eq!(indep_poly(&Graph::complete(3)), big(&[1, 3]));
        assert_eq!(indep_poly(&Graph::complete(1)), big(&[1, 1]));
        assert_eq!(indep_poly(&Graph::cycle(5)), big(&[1, 5, 5]));
    }

    #[test]
    fn brute_force_oracle() {
        assert_eq!(
            indep_poly_bruteforce(&Graph::complete(3)).unwrap(),
            big(&[1, 3])
        );
        assert_eq!(
            indep_poly_bruteforce(&Graph::complete(1)).unwrap(),
            big(&[1, 1])
        );
        assert_eq!(
            indep_poly_bruteforce(&Graph::cycle(5)).unwrap(),
            big(&[1, 5, 5])
        );
        assert_eq!(
            indep_poly_bruteforce(&Graph::star(3)).unwrap(),
            big(&[1, 4, 3, 1])
        );
        assert!(matches!(
            indep_poly_bruteforce(&Graph::empty(26)),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn products_over_disjoint_unions() {
        let p3 = indep_poly(&Graph::path(3));
        let k2 = indep_poly(&Graph::complete(2));
        let union = Graph::path(3).disjoint_union(&Graph::complete(2));
        assert_eq!(
            poly_product(&p3, &k2),
            indep_poly_bruteforce(&union).unwrap()
        );
    }
}
