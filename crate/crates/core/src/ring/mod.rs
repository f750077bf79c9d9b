//! The standard-graded polynomial ring `k[x_1, ..., x_n]` over a prime field.

mod graded;
mod monomial;
mod parse;
mod poly;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Write;

pub(crate) use graded::coordinates;
pub use graded::{graded_map_check, DegreeViolation, GradedFreeModule, GradedMap};
pub use monomial::{monomial_compare, monomials_of_degree, Monomial, MonomialOrder, MAX_VARS};
pub use parse::{parse_polynomial, ParseError};
pub use poly::Polynomial;

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Variables, ground field and monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    field: PrimeField,
    order: MonomialOrder,
    names: Vec<String>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(field: PrimeField, order: MonomialOrder, names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::Structure("a ring needs at least one variable".to_string()));
        }
        if names.len() > MAX_VARS {
            return Err(Error::Structure(alloc::format!(
                "{} variables exceeds the supported maximum of {MAX_VARS}",
                names.len()
            )));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::Structure(alloc::format!("variable `{a}` declared twice")));
            }
        }
        Ok(Ring { field, order, names })
    }

    /// `k[x1, ..., xn]` (or `x, y, z, w` for n <= 4) with grevlex over the default field.
    pub fn standard(n: usize) -> Self {
        let names: Vec<String> = if n <= 4 {
            ["x", "y", "z", "w"][..n].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=n).map(|i| alloc::format!("x{i}")).collect()
        };
        Ring::new(PrimeField::default(), MonomialOrder::Grevlex, &names).expect("valid ring")
    }

    /// Same ring with another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Ring { order, ..self.clone() }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn var(&self, i: usize) -> Polynomial {
        self.monomial(Monomial::var(self.nvars(), i), FieldElement::ONE)
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        self.monomial(self.one_monomial(), self.field.element(c))
    }

    pub fn monomial(&self, m: Monomial, c: FieldElement) -> Polynomial {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial { terms: alloc::vec![(m, c)] }
        }
    }

    /// Monomials of degree `d`, descending in the active order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let mut v = monomials_of_degree(self.nvars(), d);
        v.sort_by(|a, b| self.cmp(b, a));
        v
    }

    /// Canonical polynomial from an arbitrary term list.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, FieldElement)>) -> Polynomial {
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, FieldElement)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.field.add(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { terms: out }
    }

    /// Sorts and combines terms of `f` in place; the identity on canonical input.
    pub fn normalize(&self, f: &Polynomial) -> Polynomial {
        self.from_terms(f.terms.clone())
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.add_scaled(f, FieldElement::ONE, &self.one_monomial(), g)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let minus_one = self.field.neg(FieldElement::ONE);
        self.add_scaled(f, minus_one, &self.one_monomial(), g)
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        Polynomial { terms: f.terms.iter().map(|&(m, c)| (m, self.field.neg(c))).collect() }
    }

    pub fn scale(&self, f: &Polynomial, c: FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: f.terms.iter().map(|&(m, a)| (m, self.field.mul(a, c))).collect() }
    }

    /// `c * mono * f`; the order is multiplicative so sortedness is preserved.
    pub fn mul_term(&self, f: &Polynomial, c: FieldElement, mono: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: f.terms.iter().map(|&(m, a)| (m.mul(mono), self.field.mul(a, c))).collect() }
    }

    /// `f + c * mono * g` by a single merge.
    pub fn add_scaled(&self, f: &Polynomial, c: FieldElement, mono: &Monomial, g: &Polynomial) -> Polynomial {
        if c.is_zero() || g.is_zero() {
            return f.clone();
        }
        let field = &self.field;
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let mut a = f.terms.iter().peekable();
        let mut b = g.terms.iter().map(|&(m, x)| (m.mul(mono), field.mul(x, c))).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(*a.next().unwrap()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(&&(ma, ca)), Some(&(mb, cb))) => match self.cmp(&ma, &mb) {
                    Ordering::Greater => {
                        out.push((ma, ca));
                        a.next();
                    }
                    Ordering::Less => {
                        out.push((mb, cb));
                        b.next();
                    }
                    Ordering::Equal => {
                        let s = field.add(ca, cb);
                        if !s.is_zero() {
                            out.push((ma, s));
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
        Polynomial { terms: out }
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
        let mut acc = Polynomial::zero();
        for &(m, c) in &small.terms {
            acc = self.add_scaled(&acc, c, &m, large);
        }
        acc
    }

    pub fn pow(&self, f: &Polynomial, e: u32) -> Polynomial {
        let mut acc = self.constant(1);
        for _ in 0..e {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// Scales `f` to lead coefficient one.
    pub fn make_monic(&self, f: &Polynomial) -> Polynomial {
        match f.lead_coefficient() {
            None => Polynomial::zero(),
            Some(c) => self.scale(f, self.field.inv(c).expect("lead coefficient is nonzero")),
        }
    }

    /// Arithmetic with variable-count checks on both operands.
    pub fn poly_arith(&self, f: &Polynomial, g: &Polynomial, op: PolyOp) -> Result<Polynomial> {
        self.check_member(f)?;
        self.check_member(g)?;
        Ok(match op {
            PolyOp::Add => self.add(f, g),
            PolyOp::Sub => self.sub(f, g),
            PolyOp::Mul => self.mul(f, g),
        })
    }

    pub fn check_member(&self, f: &Polynomial) -> Result<()> {
        match f.terms.iter().find(|(m, _)| m.nvars() != self.nvars()) {
            Some((m, _)) => Err(Error::Structure(alloc::format!(
                "polynomial in {} variables used in a ring with {}",
                m.nvars(),
                self.nvars()
            ))),
            None => Ok(()),
        }
    }

    /// Human-readable form, e.g. `x*z - y^2`. Coefficients use the symmetric
    /// representative so the output re-parses to the same polynomial.
    pub fn display(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, &(m, c)) in f.terms.iter().enumerate() {
            let v = self.field.signed(c);
            let mag = v.unsigned_abs();
            if k == 0 {
                if v < 0 {
                    s.push('-');
                }
            } else {
                s.push_str(if v < 0 { " - " } else { " + " });
            }
            let mono = self.display_monomial(&m);
            match (mag, mono.is_empty()) {
                (_, true) => write!(s, "{mag}").unwrap(),
                (1, false) => s.push_str(&mono),
                (_, false) => write!(s, "{mag}*{mono}").unwrap(),
            }
        }
        s
    }

    /// `x^2*y`; empty for the unit monomial.
    pub fn display_monomial(&self, m: &Monomial) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.names[i].clone()),
                _ => parts.push(alloc::format!("{}^{}", self.names[i], e)),
            }
        }
        parts.join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring2(p: u32) -> Ring {
        Ring::new(PrimeField::new(p).unwrap(), MonomialOrder::Grevlex, &["x", "y"]).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let r = ring2(5);
        let (x, y) = (r.var(0), r.var(1));
        let s = r.add(&x, &y);
        let minus = r.neg(&s);
        assert!(r.add(&s, &minus).is_zero());
        let prod = r.mul(&s, &r.sub(&x, &y));
        let expect = r.from_terms(alloc::vec![
            (Monomial::from_exponents(&[2, 0]).unwrap(), r.field().element(1)),
            (Monomial::from_exponents(&[0, 2]).unwrap(), r.field().element(4)),
        ]);
        assert_eq!(prod, expect);
        assert_eq!(r.display(&prod), "x^2 - y^2");
        assert_eq!(prod.homogeneous_degree(), Ok(2));
    }

    #[test]
    fn homogeneous_degree_errors() {
        let r = ring2(7);
        let (x, y) = (r.var(0), r.var(1));
        assert_eq!(r.mul(&r.mul(&x, &x), &y).homogeneous_degree(), Ok(3));
        let bad = r.add(&r.mul(&x, &x), &y);
        assert_eq!(bad.homogeneous_degree(), Err(Error::Inhomogeneous { first: 2, second: 1 }));
        assert!(matches!(Polynomial::zero().homogeneous_degree(), Err(Error::Degenerate(_))));
    }

    #[test]
    fn ring_validation() {
        let f = PrimeField::default();
        assert!(Ring::new::<&str>(f, MonomialOrder::Lex, &[]).is_err());
        assert!(Ring::new(f, MonomialOrder::Lex, &["x", "x"]).is_err());
        let r = ring2(7);
        let other = Ring::standard(3);
        assert!(r.poly_arith(&r.var(0), &other.var(0), PolyOp::Add).is_err());
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
        prop::collection::vec((prop::collection::vec(0u32..4, n), -50i64..50), 0..8)
    }

    fn build(r: &Ring, raw: &[(Vec<u32>, i64)]) -> Polynomial {
        r.from_terms(
            raw.iter().map(|(e, c)| (Monomial::from_exponents(e).unwrap(), r.field().element(*c))).collect(),
        )
    }

    proptest! {
        #[test]
        fn canonical_form_is_a_fixed_point(raw in arb_poly(3), seed in any::<u64>()) {
            let r = Ring::standard(3);
            let f = build(&r, &raw);
            prop_assert_eq!(r.normalize(&f), f.clone());
            let mut shuffled = raw.clone();
            let len = shuffled.len();
            if len > 1 {
                shuffled.rotate_left((seed % len as u64) as usize);
                shuffled.reverse();
            }
            prop_assert_eq!(build(&r, &shuffled), f.clone());
            for w in f.terms().windows(2) {
                prop_assert_eq!(r.cmp(&w[0].0, &w[1].0), Ordering::Greater);
            }
        }

        #[test]
        fn ring_axioms(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
            let r = Ring::standard(3);
            let (f, g, h) = (build(&r, &a), build(&r, &b), build(&r, &c));
            prop_assert_eq!(r.mul(&f, &g), r.mul(&g, &f));
            prop_assert_eq!(r.mul(&f, &r.add(&g, &h)), r.add(&r.mul(&f, &g), &r.mul(&f, &h)));
            prop_assert_eq!(r.add(&r.add(&f, &g), &h), r.add(&f, &r.add(&g, &h)));
            prop_assert!(r.sub(&f, &f).is_zero());
        }

        #[test]
        fn degree_is_additive(d1 in 0u32..4, d2 in 0u32..4, s1 in any::<u64>(), s2 in any::<u64>()) {
            let r = Ring::standard(3);
            let pick = |d: u32, s: u64| {
                let mons = r.monomials_of_degree(d);
                let terms = mons.iter().enumerate()
                    .map(|(i, m)| (*m, r.field().element(((s >> (i % 60)) & 7) as i64 + 1)))
                    .collect();
                r.from_terms(terms)
            };
            let (f, g) = (pick(d1, s1), pick(d2, s2));
            prop_assert_eq!(r.mul(&f, &g).homogeneous_degree(), Ok(d1 + d2));
        }
    }
}
