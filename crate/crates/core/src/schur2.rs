//! Arithmetic in the quotient of symmetric functions by the span of Schur
//! functions with three or more rows.
//!
//! Setting all but two variables to zero kills exactly `s_lambda` with
//! `l(lambda) >= 3` and is injective on the rest, so a two-row profile is
//! stored as a map `(k, l) -> coefficient` and multiplied by passing
//! through its two-variable evaluation.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Coefficient;

/// A partition with at most two parts, `k >= l >= 0`. `(k, 0)` is the
/// one-row partition `(k)` and `(0, 0)` the empty partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition2 {
    pub k: usize,
    pub l: usize,
}

impl Partition2 {
    pub fn new(k: usize, l: usize) -> Self {
        assert!(k >= l, "({k},{l}) is not a partition");
        Partition2 { k, l }
    }

    pub fn degree(&self) -> usize {
        self.k + self.l
    }
}

/// Canonical order: by size, then by first part.
impl Ord for Partition2 {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree(), self.k).cmp(&(other.degree(), other.k))
    }
}

impl PartialOrd for Partition2 {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.k, self.l) {
            (0, _) => write!(f, "s()"),
            (k, 0) => write!(f, "s({k})"),
            (k, l) => write!(f, "s({k},{l})"),
        }
    }
}

/// Finitely supported map from two-row partitions to coefficients; zero
/// entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Profile<T> {
    entries: BTreeMap<Partition2, T>,
}

impl<T: Coefficient> Default for Profile<T> {
    fn default() -> Self {
        Profile::zero()
    }
}

impl<T: Coefficient> Profile<T> {
    pub fn zero() -> Self {
        Profile {
            entries: BTreeMap::new(),
        }
    }

    /// The constant 1, i.e. `s_()`.
    pub fn one() -> Self {
        Profile::schur(0, 0)
    }

    /// A single Schur function `s_(k,l)`.
    pub fn schur(k: usize, l: usize) -> Self {
        Profile::from_terms([(k, l, T::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, usize, T)>) -> Self {
        let mut out = Profile::zero();
        for (k, l, c) in terms {
            out.add_term(Partition2::new(k, l), c);
        }
        out
    }

    pub fn add_term(&mut self, at: Partition2, c: T) {
        if c.is_zero() {
            return;
        }
        let merged = match self.entries.remove(&at) {
            Some(old) => old + c,
            None => c,
        };
        if !merged.is_zero() {
            self.entries.insert(at, merged);
        }
    }

    pub fn get(&self, k: usize, l: usize) -> T {
        self.entries
            .get(&Partition2 { k, l })
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Partition2, &T)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest `k + l` in the support.
    pub fn max_degree(&self) -> Option<usize> {
        self.entries.keys().map(Partition2::degree).max()
    }

    /// Entries of total size exactly `d`.
    pub fn slice(&self, d: usize) -> Self {
        self.filtered(|p| p.degree() == d)
    }

    /// Entries of total size at most `d`.
    pub fn truncate(&self, d: usize) -> Self {
        self.filtered(|p| p.degree() <= d)
    }

    fn filtered(&self, keep: impl Fn(&Partition2) -> bool) -> Self {
        Profile {
            entries: self
                .entries
                .iter()
                .filter(|(p, _)| keep(p))
                .map(|(p, c)| (*p, c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.entries {
            out.add_term(*p, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&(T::zero() - T::one())))
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Profile::zero();
        for (p, v) in &self.entries {
            out.add_term(*p, v.clone() * c.clone());
        }
        out
    }

    /// Coefficientwise conversion into another ring.
    pub fn map<U: Coefficient>(&self, f: impl Fn(&T) -> U) -> Profile<U> {
        let mut out = Profile::zero();
        for (p, c) in &self.entries {
            out.add_term(*p, f(c));
        }
        out
    }

    /// The two-row part of the product.
    pub fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Profile::zero();
        }
        twovar_to_profile(&profile_to_twovar(self).mul(&profile_to_twovar(other)))
            .expect("products of symmetric polynomials are symmetric")
    }

    /// First negative entry in canonical order, if any.
    pub fn first_negative(&self) -> Option<(Partition2, T)> {
        self.entries
            .iter()
            .find(|(_, c)| c.is_negative())
            .map(|(p, c)| (*p, c.clone()))
    }
}

/// Result of a 2-Schur-positivity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Positivity<T> {
    pub positive: bool,
    pub witness: Option<(Partition2, T)>,
}

/// Nonnegativity of every stored entry.
pub fn is_2s_positive<T: Coefficient>(p: &Profile<T>) -> Positivity<T> {
    let witness = p.first_negative();
    Positivity {
        positive: witness.is_none(),
        witness,
    }
}

pub fn profile_add<T: Coefficient>(p: &Profile<T>, q: &Profile<T>) -> Profile<T> {
    p.add(q)
}

pub fn profile_scale<T: Coefficient>(c: &T, p: &Profile<T>) -> Profile<T> {
    p.scale(c)
}

pub fn profile_product<T: Coefficient>(p: &Profile<T>, q: &Profile<T>) -> Profile<T> {
    p.product(q)
}

impl<T: Coefficient> fmt::Display for Profile<T> {
    /// E.g. `s(3,1) - s(2,2)`; within a degree, larger first parts first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.entries.iter().collect();
        ordered.sort_by_key(|(p, _)| (p.degree(), std::cmp::Reverse(p.k)));
        for (i, (p, c)) in ordered.into_iter().enumerate() {
            let mag = c.abs_value();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if p.k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{p}")?;
            } else {
                write!(f, "{mag} {p}")?;
            }
        }
        Ok(())
    }
}

/// One entry of the profile wire format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileEntryJson {
    pub k: usize,
    pub l: usize,
    pub num: String,
    pub den: String,
}

/// Wire format `{"entries": [{"k":2,"l":2,"num":"-1","den":"1"}, ...]}`,
/// sorted by `(k + l, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileJson {
    pub entries: Vec<ProfileEntryJson>,
}

impl From<&Profile<BigRational>> for ProfileJson {
    fn from(p: &Profile<BigRational>) -> Self {
        ProfileJson {
            entries: p
                .entries()
                .map(|(at, c)| ProfileEntryJson {
                    k: at.k,
                    l: at.l,
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&ProfileJson> for Profile<BigRational> {
    type Error = Error;

    fn try_from(json: &ProfileJson) -> Result<Self> {
        let mut out = Profile::zero();
        for e in &json.entries {
            if e.k < e.l {
                return Err(Error::Parse(format!(
                    "({},{}) is not a partition",
                    e.k, e.l
                )));
            }
            let parse = |s: &str| {
                s.parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad integer {s:?}")))
            };
            let den = parse(&e.den)?;
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            out.add_term(
                Partition2::new(e.k, e.l),
                BigRational::new(parse(&e.num)?, den),
            );
        }
        Ok(out)
    }
}

impl Serialize for Profile<BigRational> {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        ProfileJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Profile<BigRational> {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let json = ProfileJson::deserialize(deserializer)?;
        Profile::try_from(&json).map_err(serde::de::Error::custom)
    }
}

/// A symmetric polynomial in two variables `x, y`. The coefficient of
/// `x^i y^j` is stored once, under `(i, j)` with `i >= j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoVarPoly<T> {
    coeffs: BTreeMap<(usize, usize), T>,
}

impl<T: Coefficient> TwoVarPoly<T> {
    pub fn zero() -> Self {
        TwoVarPoly {
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds from arbitrary monomial coefficients `(i, j) -> c` of
    /// `x^i y^j`, rejecting non-symmetric input.
    pub fn from_monomials(terms: impl IntoIterator<Item = ((usize, usize), T)>) -> Result<Self> {
        let mut full: BTreeMap<(usize, usize), T> = BTreeMap::new();
        for (ij, c) in terms {
            let slot = full.entry(ij).or_insert_with(T::zero);
            *slot = slot.clone() + c;
        }
        full.retain(|_, c| !c.is_zero());
        let mut coeffs = BTreeMap::new();
        for (&(i, j), c) in &full {
            let mirror = full.get(&(j, i)).cloned().unwrap_or_else(T::zero);
            if mirror != *c {
                return Err(Error::NotSymmetric { i, j });
            }
            if i >= j {
                coeffs.insert((i, j), c.clone());
            }
        }
        Ok(TwoVarPoly { coeffs })
    }

    /// `P(x) P(y)`.
    pub fn from_univariate_product(p: &Poly<T>) -> Self {
        let c = p.coeffs();
        let terms = (0..c.len())
            .flat_map(|i| (0..c.len()).map(move |j| (i, j)))
            .map(|(i, j)| ((i, j), c[i].clone() * c[j].clone()));
        TwoVarPoly::from_monomials(terms).expect("P(x)P(y) is symmetric")
    }

    /// Coefficient of `x^i y^j`.
    pub fn coeff(&self, i: usize, j: usize) -> T {
        let key = if i >= j { (i, j) } else { (j, i) };
        self.coeffs.get(&key).cloned().unwrap_or_else(T::zero)
    }

    fn add_sym(&mut self, i: usize, j: usize, c: T) {
        if c.is_zero() {
            return;
        }
        let key = if i >= j { (i, j) } else { (j, i) };
        let merged = self.coeffs.remove(&key).map_or(c.clone(), |old| old + c);
        if !merged.is_zero() {
            self.coeffs.insert(key, merged);
        }
    }

    /// Every monomial `x^i y^j` with its coefficient, both orientations.
    pub fn monomials(&self) -> impl Iterator<Item = ((usize, usize), T)> + '_ {
        self.coeffs.iter().flat_map(|(&(i, j), c)| {
            let mirror = (i != j).then(|| ((j, i), c.clone()));
            std::iter::once(((i, j), c.clone())).chain(mirror)
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut full: BTreeMap<(usize, usize), T> = BTreeMap::new();
        let rhs: Vec<_> = other.monomials().collect();
        for ((i, j), a) in self.monomials() {
            for ((p, q), b) in &rhs {
                let slot = full.entry((i + p, j + q)).or_insert_with(T::zero);
                *slot = slot.clone() + a.clone() * b.clone();
            }
        }
        let mut out = TwoVarPoly::zero();
        for ((i, j), c) in full {
            if i >= j {
                out.add_sym(i, j, c);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Coefficient> fmt::Display for TwoVarPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.monomials().collect();
        terms.sort_by_key(|&((i, j), _)| (i + j, std::cmp::Reverse(i)));
        for (n, ((i, j), c)) in terms.into_iter().enumerate() {
            let mag = c.abs_value();
            match (n, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let var = |name: &str, e: usize| match e {
                0 => String::new(),
                1 => name.to_string(),
                e => format!("{name}^{e}"),
            };
            let mono = format!("{}{}", var("x", i), var("y", j));
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}{mono}")?;
            }
        }
        Ok(())
    }
}

/// Two-variable evaluation, using
/// `s_(k,l)(x,y) = (xy)^l (x^{k-l} + x^{k-l-1} y + ... + y^{k-l})`.
pub fn profile_to_twovar<T: Coefficient>(p: &Profile<T>) -> TwoVarPoly<T> {
    let mut out = TwoVarPoly::zero();
    for (at, c) in p.entries() {
        let n = at.degree();
        for j in at.l..=n / 2 {
            out.add_sym(n - j, j, c.clone());
        }
    }
    out
}

/// Inverse of [`profile_to_twovar`]: peels off Schur functions from the
/// dominant monomial down, giving `[s_(k,l)] = [x^k y^l] - [x^{k+1} y^{l-1}]`.
pub fn twovar_to_profile<T: Coefficient>(q: &TwoVarPoly<T>) -> Result<Profile<T>> {
    let mut out = Profile::zero();
    for (&(i, j), c) in &q.coeffs {
        let above = if j == 0 {
            T::zero()
        } else {
            q.coeff(i + 1, j - 1)
        };
        out.add_term(Partition2::new(i, j), c.clone() - above);
    }
    // Monomials whose only contribution is the subtraction from below.
    for &(i, j) in q.coeffs.keys() {
        if i >= j + 2 && !q.coeffs.contains_key(&(i - 1, j + 1)) {
            out.add_term(Partition2::new(i - 1, j + 1), T::zero() - q.coeff(i, j));
        }
    }
    Ok(out)
}

/// Two-row part of `F_P = prod_i P(x_i)` up to total size `dmax`: the entry
/// at `(k, l)` is `a_k a_l - a_{k+1} a_{l-1}`, the 2x2 dual Jacobi-Trudi
/// determinant in the coefficients of `P`.
pub fn fp_profile<T: Coefficient>(p: &Poly<T>, dmax: usize) -> Result<Profile<T>> {
    if !p.coeff(0).is_one() {
        return Err(Error::ConstantTermNotOne);
    }
    let mut out = Profile::zero();
    for total in 0..=dmax {
        for l in 0..=total / 2 {
            let k = total - l;
            let (k_i, l_i) = (k as isize, l as isize);
            let v = p.coeff_at(k_i) * p.coeff_at(l_i) - p.coeff_at(k_i + 1) * p.coeff_at(l_i - 1);
            out.add_term(Partition2::new(k, l), v);
        }
    }
    Ok(out)
}
