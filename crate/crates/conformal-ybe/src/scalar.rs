//! Exact coefficients: rationals extended by free commuting parameters.
//!
//! A [`Scalar`] is an element of `Q[b, c, ...]` where the parameter names are
//! arbitrary identifiers. All arithmetic is exact; zero terms are never stored,
//! so structural equality coincides with mathematical equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Monomial in the parameters: sorted `(name, exponent)` pairs, exponents > 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ParamMono(Vec<(String, u32)>);

impl ParamMono {
    pub fn unit() -> Self {
        ParamMono(Vec::new())
    }

    pub fn param(name: &str) -> Self {
        ParamMono(vec![(name.to_string(), 1)])
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &ParamMono) -> ParamMono {
        let mut out: BTreeMap<String, u32> = self.0.iter().cloned().collect();
        for (name, e) in &other.0 {
            *out.entry(name.clone()).or_insert(0) += e;
        }
        ParamMono(out.into_iter().collect())
    }

    pub fn pow(&self, n: u32) -> ParamMono {
        ParamMono(self.0.iter().map(|(p, e)| (p.clone(), e * n)).collect())
    }

    pub fn params(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(|(p, _)| p.as_str())
    }
}

impl fmt::Display for ParamMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(p, e)| {
                if *e == 1 {
                    p.clone()
                } else {
                    format!("{}^{}", p, e)
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Exact scalar: finite sum of rational multiples of parameter monomials.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar {
    terms: BTreeMap<ParamMono, BigRational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(ParamMono::unit(), q);
        }
        Scalar { terms }
    }

    pub fn param(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(ParamMono::param(name), BigRational::one());
        Scalar { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The rational value, if this scalar is parameter-free.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            let (m, q) = self.terms.iter().next().unwrap();
            if m.is_unit() {
                return Some(q.clone());
            }
        }
        None
    }

    /// All parameter names occurring in this scalar.
    pub fn params(&self) -> Vec<String> {
        let mut names: Vec<String> = self
            .terms
            .keys()
            .flat_map(|m| m.params().map(String::from))
            .collect();
        names.sort();
        names.dedup();
        names
    }

    fn insert(&mut self, mono: ParamMono, q: BigRational) {
        if q.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + q;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn pow(&self, n: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute rational values for parameters, by name. Unlisted
    /// parameters are kept symbolic.
    pub fn eval_params(&self, values: &BTreeMap<String, BigRational>) -> Scalar {
        let mut out = Scalar::zero();
        for (mono, q) in &self.terms {
            let mut coeff = q.clone();
            let mut rest = Vec::new();
            for (p, e) in &mono.0 {
                if let Some(v) = values.get(p) {
                    let mut pw = BigRational::one();
                    for _ in 0..*e {
                        pw *= v;
                    }
                    coeff *= pw;
                } else {
                    rest.push((p.clone(), *e));
                }
            }
            out.insert(ParamMono(rest), coeff);
        }
        out
    }

    /// True when the scalar can be written without a leading `+` sign,
    /// i.e. it is a single term with a negative rational coefficient.
    pub(crate) fn is_single_negative(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().unwrap().is_negative()
    }

    /// True when embedding this scalar in a product needs parentheses.
    pub(crate) fn is_composite(&self) -> bool {
        self.terms.len() > 1
    }

    fn fmt_term(mono: &ParamMono, q: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if mono.is_unit() {
            write!(f, "{}", q)
        } else if q.is_one() {
            write!(f, "{}", mono)
        } else if (-q).is_one() {
            write!(f, "-{}", mono)
        } else {
            write!(f, "{}*{}", q, mono)
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (mono, q)) in self.terms.iter().enumerate() {
            if i == 0 {
                Scalar::fmt_term(mono, q, f)?;
            } else if q.is_negative() {
                write!(f, " - ")?;
                Scalar::fmt_term(mono, &-q, f)?;
            } else {
                write!(f, " + ")?;
                Scalar::fmt_term(mono, q, f)?;
            }
        }
        Ok(())
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (m, q) in &rhs.terms {
            out.insert(m.clone(), q.clone());
        }
        out
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (m, q) in &rhs.terms {
            out.insert(m.clone(), -q.clone());
        }
        out
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(m, q)| (m.clone(), -q.clone()))
                .collect(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (m1, q1) in &self.terms {
            for (m2, q2) in &rhs.terms {
                out.insert(m1.mul(m2), q1 * q2);
            }
        }
        out
    }
}
