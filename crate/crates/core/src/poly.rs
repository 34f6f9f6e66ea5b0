//! Exact polynomials in `t` with nonnegative big-integer coefficients.
//!
//! [`Poly`] is ordered by eventual dominance: `p ⪯ r` when `p(t) ≤ r(t)` for all
//! sufficiently large `t`. With nonnegative coefficients that is a comparison by
//! degree, then by coefficients from the top degree downward, and it is what
//! `Ord` implements.
//!
//! [`AlphaForm`] is a linear form `Σ_i c_i(t)·α_i` over per-sensor error symbols.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Polynomial with coefficients stored ascending by degree and no trailing
/// zeros. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigUint>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![BigUint::one()] }
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Poly { coeffs: vec![BigUint::zero(), BigUint::one()] }
    }

    pub fn from_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigUint>,
    {
        let mut p = Poly { coeffs: coeffs.into_iter().map(Into::into).collect() };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Coefficient of `t^d`; zero beyond the degree.
    pub fn coeff(&self, d: usize) -> BigUint {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `t · self`.
    pub fn mul_t(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigUint::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn scale(&self, c: &BigUint) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigUint::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly { coeffs }
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// Sum of the coefficients, i.e. the value at `t = 1`.
    pub fn coeff_sum(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// The eventual-dominance comparison `⪯`. Same as `Ord::cmp`.
    pub fn cmp_preceq(&self, other: &Poly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }

    /// Horner evaluation in `f64`.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::INFINITY))
    }

    /// Exact evaluation at a nonnegative integer.
    pub fn eval_biguint(&self, x: &BigUint) -> BigUint {
        self.coeffs.iter().rev().fold(BigUint::zero(), |acc, c| acc * x + c)
    }
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_preceq(other)
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> AddAssign<&'a Poly> for Poly {
    fn add_assign(&mut self, rhs: &'a Poly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigUint::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl<'a> Add<&'a Poly> for &Poly {
    type Output = Poly;

    fn add(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl<'a> std::iter::Sum<&'a Poly> for Poly {
    fn sum<I: Iterator<Item = &'a Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |mut acc, p| {
            acc += p;
            acc
        })
    }
}

/// Descending-degree form, e.g. `t^4+3t^3+4t^2`, `2t`, `1`, `0`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if d == 0 || !c.is_one() {
                write!(f, "{c}")?;
            }
            match d {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Parses the `Display` form back. Terms may repeat degrees (they add up) and
/// appear in any order; spaces are ignored.
impl FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::InvalidParameter(format!("cannot parse polynomial `{s}`"));
        if compact.is_empty() {
            return Err(bad());
        }
        let mut acc = Poly::zero();
        for term in compact.split('+') {
            if term.is_empty() {
                return Err(bad());
            }
            let (coef_str, deg) = match term.find('t') {
                None => (term, 0usize),
                Some(p) => {
                    let rest = &term[p + 1..];
                    let deg = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())?
                    };
                    (&term[..p], deg)
                }
            };
            let coef: BigUint = if coef_str.is_empty() {
                BigUint::one()
            } else {
                coef_str.trim_end_matches('*').parse().map_err(|_| bad())?
            };
            let mut coeffs = vec![BigUint::zero(); deg + 1];
            coeffs[deg] = coef;
            acc += &Poly::from_coeffs(coeffs);
        }
        Ok(acc)
    }
}

/// `{"coeffs": ["c0", "c1", ...]}` with decimal-string coefficients.
impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            coeffs: Vec<String>,
        }
        Repr { coeffs: self.coeffs.iter().map(ToString::to_string).collect() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            coeffs: Vec<String>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|c| c.parse::<BigUint>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }
}

/// A linear form `Σ_i c_i(t)·α_i`, keyed by the source vertex `i`.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct AlphaForm {
    terms: BTreeMap<usize, Poly>,
}

impl AlphaForm {
    pub fn zero() -> Self {
        AlphaForm::default()
    }

    /// The single symbol `α_source`.
    pub fn symbol(source: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(source, Poly::one());
        AlphaForm { terms }
    }

    pub fn terms(&self) -> &BTreeMap<usize, Poly> {
        &self.terms
    }

    /// `[α_source]` of this form; zero if absent.
    pub fn coeff(&self, source: usize) -> Poly {
        self.terms.get(&source).cloned().unwrap_or_default()
    }

    pub fn add_assign(&mut self, other: &AlphaForm) {
        for (&i, p) in &other.terms {
            if p.is_zero() {
                continue;
            }
            *self.terms.entry(i).or_default() += p;
        }
    }

    pub fn mul_t(&self) -> Self {
        AlphaForm { terms: self.terms.iter().map(|(&i, p)| (i, p.mul_t())).collect() }
    }

    /// Substitutes `α_i = 1` for every `i`.
    pub fn collapse(&self) -> Poly {
        self.terms.values().sum()
    }

    /// `Σ_i c_i(t)²`.
    pub fn sum_of_squares(&self) -> Poly {
        self.terms.values().fold(Poly::zero(), |mut acc, c| {
            acc += &c.square();
            acc
        })
    }

    /// Each `c_i(t)` evaluated at `t`.
    pub fn eval_alpha(&self, t: f64) -> BTreeMap<usize, f64> {
        self.terms.iter().map(|(&i, p)| (i, p.eval(t))).collect()
    }
}

impl fmt::Display for AlphaForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (i, p)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            if p.is_one_poly() {
                write!(f, "a{i}")?;
            } else if p.coeffs.iter().filter(|c| !c.is_zero()).count() == 1 {
                write!(f, "{p}*a{i}")?;
            } else {
                write!(f, "({p})*a{i}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlphaForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlphaForm({self})")
    }
}

impl Poly {
    fn is_one_poly(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

/// `{"alpha": {"i": {"coeffs": [...]}}}`.
impl Serialize for AlphaForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            alpha: BTreeMap<String, &'a Poly>,
        }
        Repr { alpha: self.terms.iter().map(|(i, p)| (i.to_string(), p)).collect() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AlphaForm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            alpha: BTreeMap<String, Poly>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let mut terms = BTreeMap::new();
        for (k, p) in repr.alpha {
            let i: usize = k.parse().map_err(D::Error::custom)?;
            if !p.is_zero() {
                terms.insert(i, p);
            }
        }
        Ok(AlphaForm { terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("t^2+t") + &p("t"), p("t^2+2t"));
        assert_eq!(p("t^3+2t^2").mul_t(), p("t^4+2t^3"));
        assert_eq!(p("t^2+t").square(), p("t^4+2t^3+t^2"));
        assert_eq!(p("t+1").scale(&BigUint::from(3u32)), p("3t+3"));
        assert_eq!(p("t").scale(&BigUint::zero()), Poly::zero());
        assert_eq!(Poly::zero().mul_t(), Poly::zero());
    }

    #[test]
    fn preceq_examples() {
        assert_eq!(p("t^4+2t^3+4t^2+2t").cmp_preceq(&p("t^4+3t^3+4t^2")), Ordering::Less);
        let q = p("3t^4+7t^3+4t^2+t");
        assert_eq!(q.cmp_preceq(&q), Ordering::Equal);
        assert_eq!(p("t^3").cmp_preceq(&p("5t^2+100t+100")), Ordering::Greater);
        assert_eq!(Poly::zero().cmp_preceq(&Poly::one()), Ordering::Less);
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p("t^2+t").eval(1.0), 2.0);
        assert_eq!(p("t^4+3t^3+4t^2").eval(1.0), 8.0);
        // 512 + 8*256 + 21*128 + 20*64 + 5*32
        let direct = 512.0 + 2048.0 + 2688.0 + 1280.0 + 160.0;
        assert_eq!(p("t^9+8t^8+21t^7+20t^6+5t^5").eval(2.0), direct);
        assert_eq!(direct, 6688.0);
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(p("t^4+3t^3+4t^2").to_string(), "t^4+3t^3+4t^2");
        assert_eq!(Poly::one().to_string(), "1");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(p("2t").to_string(), "2t");
        assert_eq!(p("1 + t + t"), p("2t+1"));
        assert_eq!(p("0"), Poly::zero());
        assert!("t^".parse::<Poly>().is_err());
        assert!("".parse::<Poly>().is_err());
        assert!("3x".parse::<Poly>().is_err());
    }

    #[test]
    fn json_shapes() {
        let q = p("t^2+2t");
        assert_eq!(serde_json::to_string(&q).unwrap(), r#"{"coeffs":["0","2","1"]}"#);
        let back: Poly = serde_json::from_str(r#"{"coeffs":["0","2","1","0"]}"#).unwrap();
        assert_eq!(back, q);

        let mut f = AlphaForm::symbol(1).mul_t();
        f.add_assign(&AlphaForm::symbol(3).mul_t().mul_t());
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"alpha":{"1":{"coeffs":["0","1"]},"3":{"coeffs":["0","0","1"]}}}"#);
        let back: AlphaForm = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn alpha_form_collapse_and_squares() {
        // t·α1 + (t^2+t)·α3
        let mut f = AlphaForm::symbol(1).mul_t();
        let mut g = AlphaForm::symbol(3).mul_t();
        g.add_assign(&AlphaForm::symbol(3));
        f.add_assign(&g.mul_t());
        assert_eq!(f.coeff(3), p("t^2+t"));
        assert_eq!(f.collapse(), p("t^2+2t"));
        assert_eq!(f.sum_of_squares(), p("t^4+2t^3+2t^2"));
        assert_eq!(f.eval_alpha(2.0)[&3], 6.0);
        assert_eq!(f.to_string(), "t*a1 + (t^2+t)*a3");
    }

    #[test]
    fn big_coefficients_do_not_overflow() {
        let mut q = Poly::one();
        for _ in 0..40 {
            q = q.mul(&p("t+3"));
        }
        // (t+3)^40 sums to 4^40 = 2^80.
        assert_eq!(q.coeff_sum().bits(), 81);
        assert_eq!(q.coeff(0), BigUint::from(3u32).pow(40));
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec(0u64..50, 0..7).prop_map(Poly::from_coeffs)
    }

    proptest! {
        #[test]
        fn preceq_matches_numeric_dominance(a in small_poly(), b in small_poly()) {
            // Beyond T = 1 + (sum of all coefficients) the top differing term
            // dominates, so numeric comparison there matches the order.
            let bound = BigUint::one() + a.coeff_sum() + b.coeff_sum();
            let (va, vb) = (a.eval_biguint(&bound), b.eval_biguint(&bound));
            prop_assert_eq!(a.cmp_preceq(&b), va.cmp(&vb));
        }

        #[test]
        fn preceq_is_total_and_antisymmetric(a in small_poly(), b in small_poly()) {
            prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
            prop_assert_eq!(a.cmp(&b) == Ordering::Equal, a == b);
        }

        #[test]
        fn preceq_compatible_with_addition(a in small_poly(), b in small_poly(), c in small_poly()) {
            if a <= b {
                prop_assert!(&a + &c <= &b + &c);
            }
        }

        #[test]
        fn display_round_trip(a in small_poly()) {
            prop_assert_eq!(a.to_string().parse::<Poly>().unwrap(), a);
        }

        #[test]
        fn square_is_self_mul_and_mul_t_shifts(a in small_poly()) {
            prop_assert_eq!(a.square(), a.mul(&a));
            prop_assert_eq!(a.mul_t(), a.mul(&Poly::t()));
        }
    }
}
