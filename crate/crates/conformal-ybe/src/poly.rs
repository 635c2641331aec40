//! Sparse multivariate polynomials over [`Scalar`] coefficients.
//!
//! Variables are the spectral parameters `λ, μ, θ, ξ` and the per-tensor-slot
//! derivatives `∂₁, ∂₂, …`. Monomials are ordered graded-lexicographically
//! over `(λ, μ, θ, ξ, ∂₁, ∂₂, …)`, which fixes a canonical printing order.

use crate::scalar::Scalar;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A polynomial variable.
///
/// `Slot(i)` is the formal derivative acting on tensor factor `i` (1-based).
/// In a single-module context `Slot(1)` is "the ∂ of the result".
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variable {
    Lambda,
    Mu,
    Theta,
    Xi,
    Slot(u8),
}

impl Variable {
    pub fn token(&self) -> String {
        match self {
            Variable::Lambda => "L".to_string(),
            Variable::Mu => "M".to_string(),
            Variable::Theta => "T".to_string(),
            Variable::Xi => "X".to_string(),
            Variable::Slot(i) => format!("D{}", i),
        }
    }

    pub fn from_token(tok: &str) -> Option<Variable> {
        match tok {
            "L" => Some(Variable::Lambda),
            "M" => Some(Variable::Mu),
            "T" => Some(Variable::Theta),
            "X" => Some(Variable::Xi),
            "D" => Some(Variable::Slot(1)),
            _ => {
                let rest = tok.strip_prefix('D')?;
                let i: u8 = rest.parse().ok()?;
                if i >= 1 {
                    Some(Variable::Slot(i))
                } else {
                    None
                }
            }
        }
    }
}

/// Monomial: sorted `(variable, exponent)` pairs with positive exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Mono(Vec<(Variable, u32)>);

impl Mono {
    pub fn unit() -> Self {
        Mono(Vec::new())
    }

    pub fn var(v: Variable) -> Self {
        Mono(vec![(v, 1)])
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.0
            .iter()
            .find(|(w, _)| *w == v)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out: BTreeMap<Variable, u32> = self.0.iter().cloned().collect();
        for (v, e) in &other.0 {
            *out.entry(*v).or_insert(0) += e;
        }
        Mono(out.into_iter().collect())
    }

    pub fn vars(&self) -> impl Iterator<Item = Variable> + '_ {
        self.0.iter().map(|(v, _)| *v)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        // Graded lexicographic: total degree first, then exponents compared
        // variable by variable in ascending Variable order.
        let d = self.total_degree().cmp(&other.total_degree());
        if d != Ordering::Equal {
            return d;
        }
        let vars: BTreeSet<Variable> = self.vars().chain(other.vars()).collect();
        for v in vars {
            match self.exponent(v).cmp(&other.exponent(v)) {
                Ordering::Equal => continue,
                // Higher power of an earlier variable sorts LATER in the
                // BTreeMap so that reverse iteration prints it first.
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, e)| {
                if *e == 1 {
                    v.token()
                } else {
                    format!("{}^{}", v.token(), e)
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Sparse polynomial with exact [`Scalar`] coefficients. Canonical: no zero
/// coefficients are stored, so `==` is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Mono, Scalar>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Polynomial::constant(Scalar::one())
    }

    pub fn constant(s: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !s.is_zero() {
            terms.insert(Mono::unit(), s);
        }
        Polynomial { terms }
    }

    pub fn int(n: i64) -> Self {
        Polynomial::constant(Scalar::from_int(n))
    }

    pub fn param(name: &str) -> Self {
        Polynomial::constant(Scalar::param(name))
    }

    pub fn var(v: Variable) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Mono::var(v), Scalar::one());
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value if no variable occurs, else `None`.
    pub fn as_constant(&self) -> Option<Scalar> {
        if self.terms.is_empty() {
            return Some(Scalar::zero());
        }
        if self.terms.len() == 1 {
            let (m, s) = self.terms.iter().next().unwrap();
            if m.total_degree() == 0 {
                return Some(s.clone());
            }
        }
        None
    }

    pub fn contains_var(&self, v: Variable) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    pub fn degree_in(&self, v: Variable) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    fn insert(&mut self, mono: Mono, s: Scalar) {
        if s.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(s);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &s;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, s: &Scalar) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.insert(m.clone(), c * s);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Simultaneous substitution of polynomials for variables. Variables not
    /// in the map are left untouched; images are read in the new variables.
    pub fn subst(&self, map: &BTreeMap<Variable, Polynomial>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (mono, coeff) in &self.terms {
            let mut term = Polynomial::constant(coeff.clone());
            for (v, e) in &mono.0 {
                let factor = match map.get(v) {
                    Some(image) => image.pow(*e),
                    None => Polynomial::var(*v).pow(*e),
                };
                term = &term * &factor;
            }
            out = &out + &term;
        }
        out
    }

    pub fn subst_var(&self, v: Variable, image: &Polynomial) -> Polynomial {
        let mut map = BTreeMap::new();
        map.insert(v, image.clone());
        self.subst(&map)
    }

    /// Canonical representative modulo the ideal `(slot_1 + … + slot_s)`:
    /// eliminates the last slot variable via
    /// `slot_s ↦ −(slot_1 + … + slot_{s−1})`.
    pub fn reduce_mod_total(&self, slots: &[Variable]) -> Polynomial {
        assert!(slots.len() >= 2, "reduce_mod_total needs at least 2 slots");
        let last = *slots.last().unwrap();
        let mut image = Polynomial::zero();
        for v in &slots[..slots.len() - 1] {
            image = &image - &Polynomial::var(*v);
        }
        self.subst_var(last, &image)
    }

    /// Substitute rational values for parameters in every coefficient.
    pub fn eval_params(&self, values: &BTreeMap<String, num_rational::BigRational>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, s) in &self.terms {
            out.insert(m.clone(), s.eval_params(values));
        }
        out
    }

    pub fn params(&self) -> Vec<String> {
        let mut names: Vec<String> = self.terms.values().flat_map(|s| s.params()).collect();
        names.sort();
        names.dedup();
        names
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Scalar)> {
        self.terms.iter()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, s) in &rhs.terms {
            out.insert(m.clone(), s.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, s) in &rhs.terms {
            out.insert(m.clone(), -s);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, s)| (m.clone(), -s)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, s1) in &self.terms {
            for (m2, s2) in &rhs.terms {
                out.insert(m1.mul(m2), s1 * s2);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest monomial first.
        for (i, (mono, coeff)) in self.terms.iter().rev().enumerate() {
            let lead = i == 0;
            if mono.total_degree() == 0 {
                if lead {
                    write!(f, "{}", coeff)?;
                } else if coeff.is_single_negative() {
                    write!(f, " - {}", -coeff)?;
                } else if coeff.is_composite() {
                    write!(f, " + ({})", coeff)?;
                } else {
                    write!(f, " + {}", coeff)?;
                }
                continue;
            }
            let (sep, c) = if lead {
                ("", coeff.clone())
            } else if coeff.is_single_negative() {
                (" - ", -coeff)
            } else {
                (" + ", coeff.clone())
            };
            write!(f, "{}", sep)?;
            if let Some(q) = c.as_rational() {
                use num_traits::One;
                if q.is_one() {
                    write!(f, "{}", mono)?;
                } else if (-&q).is_one() {
                    write!(f, "-{}", mono)?;
                } else {
                    write!(f, "{}*{}", q, mono)?;
                }
            } else if c.is_composite() {
                write!(f, "({})*{}", c, mono)?;
            } else {
                write!(f, "{}*{}", c, mono)?;
            }
        }
        Ok(())
    }
}

/// Parse error with a byte offset into the source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    params: &'a BTreeSet<String>,
    allowed: &'a BTreeSet<Variable>,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while let Some(b'*') = self.peek() {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if let Some(b'^') = self.peek() {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return self.err("expected integer exponent after '^'");
            }
            let e: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| ParseError {
                    position: start,
                    message: "exponent out of range".to_string(),
                })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.factor()?)
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => self.rational(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.ident(),
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }

    fn rational(&mut self) -> Result<Polynomial, ParseError> {
        let num = self.uint()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let den_pos = self.pos;
            let den = self.uint()?;
            if den == 0 {
                return Err(ParseError {
                    position: den_pos,
                    message: "zero denominator".to_string(),
                });
            }
            Ok(Polynomial::constant(Scalar::from_ratio(num, den)))
        } else {
            Ok(Polynomial::int(num))
        }
    }

    fn uint(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| ParseError {
                position: start,
                message: "integer out of range".to_string(),
            })
    }

    fn ident(&mut self) -> Result<Polynomial, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        if let Some(v) = Variable::from_token(name) {
            if self.allowed.contains(&v) {
                return Ok(Polynomial::var(v));
            }
            return Err(ParseError {
                position: start,
                message: format!("variable '{}' is not allowed in this context", name),
            });
        }
        if self.params.contains(name) {
            return Ok(Polynomial::param(name));
        }
        Err(ParseError {
            position: start,
            message: format!("undeclared parameter or variable '{}'", name),
        })
    }
}

/// Parse the textual polynomial grammar: rationals `p/q`, declared parameter
/// identifiers, variable tokens `L M T X D D1 D2 D3 …`, operators `+ - * ^`
/// and parentheses.
pub fn parse_polynomial(
    text: &str,
    params: &BTreeSet<String>,
    allowed: &BTreeSet<Variable>,
) -> Result<Polynomial, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        params,
        allowed,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return p.err("trailing input");
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(list: &[Variable]) -> BTreeSet<Variable> {
        list.iter().copied().collect()
    }

    fn params(list: &[&str]) -> BTreeSet<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parse_virasoro_coefficient() {
        let p = parse_polynomial(
            "(D + 2*L)",
            &params(&[]),
            &vars(&[Variable::Lambda, Variable::Slot(1)]),
        )
        .unwrap();
        let expect = &Polynomial::var(Variable::Slot(1))
            + &(&Polynomial::int(2) * &Polynomial::var(Variable::Lambda));
        assert_eq!(p, expect);
    }

    #[test]
    fn parse_zero_forms() {
        let allowed = vars(&[Variable::Lambda]);
        let ps = params(&["b"]);
        assert!(parse_polynomial("0", &ps, &allowed).unwrap().is_zero());
        assert!(parse_polynomial("-b*L + b*L", &ps, &allowed)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn parse_rejects_undeclared() {
        let e = parse_polynomial("q*L", &params(&[]), &vars(&[Variable::Lambda])).unwrap_err();
        assert!(e.message.contains("undeclared"));
        let e = parse_polynomial("D2", &params(&[]), &vars(&[Variable::Lambda])).unwrap_err();
        assert!(e.message.contains("not allowed"));
    }

    #[test]
    fn difference_of_squares() {
        let l = Polynomial::var(Variable::Lambda);
        let d = Polynomial::var(Variable::Slot(1));
        let prod = &(&l + &d) * &(&l - &d);
        assert_eq!(prod, &(&l * &l) - &(&d * &d));
    }

    #[test]
    fn affine_substitution_q_convention() {
        // P(x, y) = x*y with y ↦ −x−y gives −x² − x*y.
        let x = Variable::Slot(1);
        let y = Variable::Slot(2);
        let p = &Polynomial::var(x) * &Polynomial::var(y);
        let image = &(-&Polynomial::var(x)) - &Polynomial::var(y);
        let q = p.subst_var(y, &image);
        let expect = &(-&Polynomial::var(x).pow(2)) - &(&Polynomial::var(x) * &Polynomial::var(y));
        assert_eq!(q, expect);
    }

    #[test]
    fn linear_shift() {
        // λ ↦ λ+μ applied to ∂+2λ gives ∂+2λ+2μ.
        let p = &Polynomial::var(Variable::Slot(1))
            + &Polynomial::var(Variable::Lambda).scale(&Scalar::from_int(2));
        let shifted = p.subst_var(
            Variable::Lambda,
            &(&Polynomial::var(Variable::Lambda) + &Polynomial::var(Variable::Mu)),
        );
        let expect = parse_polynomial(
            "D + 2*L + 2*M",
            &params(&[]),
            &vars(&[Variable::Lambda, Variable::Mu, Variable::Slot(1)]),
        )
        .unwrap();
        assert_eq!(shifted, expect);
    }

    #[test]
    fn reduce_mod_total_examples() {
        let slots = [Variable::Slot(1), Variable::Slot(2), Variable::Slot(3)];
        let sum =
            &(&Polynomial::var(slots[0]) + &Polynomial::var(slots[1])) + &Polynomial::var(slots[2]);
        assert!(sum.reduce_mod_total(&slots).is_zero());

        // ∂₃·q(∂₁,∂₂) reduces to (−∂₁−∂₂)·q(∂₁,∂₂).
        let q = &Polynomial::var(slots[0]) + &Polynomial::int(5);
        let p = &Polynomial::var(slots[2]) * &q;
        let expect = &(&(-&Polynomial::var(slots[0])) - &Polynomial::var(slots[1])) * &q;
        assert_eq!(p.reduce_mod_total(&slots), expect);
    }

    #[test]
    fn display_canonical_order() {
        let l = Polynomial::var(Variable::Lambda);
        let m = Polynomial::var(Variable::Mu);
        let d = Polynomial::var(Variable::Slot(1));
        let p = &(&(-&(&l * &l).scale(&Scalar::from_int(3)))
            - &(&l * &m).scale(&Scalar::from_int(3)))
            - &(&l * &d);
        assert_eq!(p.to_string(), "-3*L^2 - 3*L*M - L*D1");
    }

    #[test]
    fn print_parse_round_trip() {
        let b = Scalar::param("b");
        let l = Polynomial::var(Variable::Lambda);
        let d = Polynomial::var(Variable::Slot(1));
        let p = &(&l.pow(2).scale(&b) - &d.scale(&Scalar::from_ratio(1, 2))) + &Polynomial::int(7);
        let back = parse_polynomial(
            &p.to_string(),
            &params(&["b"]),
            &vars(&[Variable::Lambda, Variable::Slot(1)]),
        )
        .unwrap();
        assert_eq!(p, back);
    }
}
