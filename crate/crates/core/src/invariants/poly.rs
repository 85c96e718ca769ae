//! Exact Laurent polynomials in one variable `A` with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exponent -> nonzero coefficient. Zero coefficients are never stored, so
/// derived equality is structural equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coeff * A^exp`.
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(One::is_one)
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Multiplies by `A^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitutes `A -> A^-1`.
    pub fn invert_variable(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Value at `A = a` for a nonzero integer `a`; `None` if a negative
    /// exponent makes the value non-integral.
    pub fn eval_integer(&self, a: i64) -> Option<BigInt> {
        let a = BigInt::from(a);
        let mut num = BigInt::zero();
        let low = self.min_exp().unwrap_or(0).min(0);
        // Evaluate a^(-low) * p(a), then divide back out.
        for (e, c) in self.terms() {
            num += c * a.pow((e - low) as u32);
        }
        let den = a.pow((-low) as u32);
        if (&num % &den).is_zero() {
            Some(num / den)
        } else {
            None
        }
    }

    /// `V(t)` exponents if every exponent of `A` is a multiple of 4, using
    /// `t = A^-4`. Returned as `(exp_t, coeff)` ascending in `t`.
    pub fn to_t_terms(&self) -> Option<Vec<(i64, BigInt)>> {
        if self.terms.keys().any(|e| e % 4 != 0) {
            return None;
        }
        let mut out: Vec<(i64, BigInt)> = self.terms().map(|(e, c)| (-e / 4, c.clone())).collect();
        out.sort_by_key(|(e, _)| *e);
        Some(out)
    }

    /// Human-readable form in `t`, descending exponents, e.g. `-t^4 + t^3 + t`.
    pub fn to_t_string(&self) -> Option<String> {
        let mut terms = self.to_t_terms()?;
        terms.reverse();
        Some(format_terms(terms.iter().map(|(e, c)| (*e, c)), "t"))
    }
}

fn format_terms<'a>(terms: impl Iterator<Item = (i64, &'a BigInt)>, var: &str) -> String {
    let mut out = String::new();
    for (i, (e, c)) in terms.enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let unit = mag.is_one();
        if !unit || e == 0 {
            out.push_str(&mag.to_string());
        }
        match e {
            0 => {}
            1 => out.push_str(var),
            _ => {
                out.push_str(var);
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for LaurentPoly {
    /// Descending exponents, e.g. `-A^5 - A^-3 + A^-7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.terms().rev(), "A"))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| &acc + &p)
    }
}

/// JSON form: `{"A": {"5": -1, "-3": -1}}`. Coefficients are emitted as
/// numbers when they fit in an `i64` and as decimal strings otherwise.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut inner = serde_json::Map::new();
        for (e, c) in self.terms().rev() {
            let v = match i64::try_from(c) {
                Ok(x) => serde_json::Value::from(x),
                Err(_) => serde_json::Value::from(c.to_string()),
            };
            inner.insert(e.to_string(), v);
        }
        let mut outer = serde_json::Map::new();
        outer.insert("A".into(), serde_json::Value::Object(inner));
        serde_json::Value::Object(outer).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Int(i64),
            Text(String),
        }
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Wire {
            #[serde(rename = "A")]
            a: BTreeMap<String, Coeff>,
        }
        let wire = Wire::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for (e, c) in wire.a {
            let e: i64 = e.parse().map_err(D::Error::custom)?;
            let c = match c {
                Coeff::Int(x) => BigInt::from(x),
                Coeff::Text(s) => s.parse().map_err(D::Error::custom)?,
            };
            p.add_term(e, c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn trefoil_bracket() -> LaurentPoly {
        LaurentPoly::from_terms([(5, -1), (-3, -1), (-7, 1)])
    }

    #[test]
    fn display_forms() {
        assert_eq!(trefoil_bracket().to_string(), "-A^5 - A^-3 + A^-7");
        assert_eq!(LaurentPoly::one().to_string(), "1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::from_terms([(1, 2), (0, -3)]).to_string(), "2A - 3");
        let jones = LaurentPoly::from_terms([(-16, -1), (-12, 1), (-4, 1)]);
        assert_eq!(jones.to_t_string().unwrap(), "-t^4 + t^3 + t");
        assert_eq!(trefoil_bracket().to_t_string(), None);
    }

    #[test]
    fn zero_coefficients_cancel() {
        let p = LaurentPoly::from_terms([(2, 1), (2, -1), (0, 1)]);
        assert!(p.is_one());
        assert_eq!(&trefoil_bracket() - &trefoil_bracket(), LaurentPoly::zero());
    }

    #[test]
    fn json_shape() {
        let text = serde_json::to_string(&trefoil_bracket()).unwrap();
        assert_eq!(text, r#"{"A":{"5":-1,"-3":-1,"-7":1}}"#);
        let back: LaurentPoly = serde_json::from_str(&text).unwrap();
        assert_eq!(back, trefoil_bracket());
    }

    #[test]
    fn big_coefficients_are_exact() {
        let x = LaurentPoly::from_terms([(1, 1), (-1, 1)]);
        let p = x.pow(80);
        // Central coefficient of (A + 1/A)^80 is C(80, 40).
        let c: BigInt = "107507208733336176461620".parse().unwrap();
        assert_eq!(p.coeff(0), c);
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<LaurentPoly>(&text).unwrap(), p);
    }

    #[test]
    fn integer_evaluation() {
        let delta = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
        assert_eq!(delta.eval_integer(1), Some(BigInt::from(-2)));
        assert_eq!(LaurentPoly::monomial(1, -1).eval_integer(2), None);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-8i64..8, -5i64..5), 0..6).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_laws(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!((&p * &q).invert_variable(), &p.invert_variable() * &q.invert_variable());
        }
    }
}
