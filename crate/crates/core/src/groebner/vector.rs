use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::field::FieldElement;
use crate::ring::{Monomial, Polynomial, Ring};

/// Term order on a graded free module `⊕ S(-s_i)`: total degree
/// `deg(mono) + s_i` first, then the ring order, then lower component first.
#[derive(Clone, Copy)]
pub(crate) struct ModuleOrder<'a> {
    pub ring: &'a Ring,
    pub shifts: &'a [i32],
}

impl ModuleOrder<'_> {
    #[inline]
    pub fn cmp(&self, a: &(usize, Monomial), b: &(usize, Monomial)) -> Ordering {
        let da = a.1.degree() as i64 + self.shifts[a.0] as i64;
        let db = b.1.degree() as i64 + self.shifts[b.0] as i64;
        da.cmp(&db).then_with(|| self.ring.cmp(&a.1, &b.1)).then_with(|| b.0.cmp(&a.0))
    }
}

pub(crate) type Term = (usize, Monomial, FieldElement);

/// Sparse element of a free module, terms strictly descending.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Vector {
    pub terms: Vec<Term>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn from_column(ord: &ModuleOrder<'_>, column: &[Polynomial]) -> Vector {
        let mut terms: Vec<Term> = column
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.terms().iter().map(move |&(m, c)| (i, m, c)))
            .collect();
        terms.sort_by(|a, b| ord.cmp(&(b.0, b.1), &(a.0, a.1)));
        Vector { terms }
    }

    pub fn to_column(&self, ring: &Ring, rank: usize) -> Vec<Polynomial> {
        let mut parts: Vec<Vec<(Monomial, FieldElement)>> = alloc::vec![Vec::new(); rank];
        for &(i, m, c) in &self.terms {
            parts[i].push((m, c));
        }
        parts.into_iter().map(|t| ring.from_terms(t)).collect()
    }

    /// Degree of the lead term in the graded module.
    pub fn degree(&self, shifts: &[i32]) -> Option<i32> {
        self.lead().map(|(i, m, _)| m.degree() as i32 + shifts[*i])
    }

    /// `self + c * mono * other`.
    pub fn add_scaled(
        &self,
        ord: &ModuleOrder<'_>,
        c: FieldElement,
        mono: &Monomial,
        other: &Vector,
    ) -> Vector {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let field = ord.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().copied().peekable();
        let mut b = other.terms.iter().map(|&(i, m, x)| (i, m.mul(mono), field.mul(x, c))).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(&(ia, ma, ca)), Some(&(ib, mb, cb))) => match ord.cmp(&(ia, ma), &(ib, mb)) {
                    Ordering::Greater => out.push(a.next().unwrap()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let s = field.add(ca, cb);
                        if !s.is_zero() {
                            out.push((ia, ma, s));
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
        Vector { terms: out }
    }

    pub fn scale(&self, ord: &ModuleOrder<'_>, c: FieldElement) -> Vector {
        let field = ord.ring.field();
        if c.is_zero() {
            return Vector::zero();
        }
        Vector { terms: self.terms.iter().map(|&(i, m, x)| (i, m, field.mul(x, c))).collect() }
    }

    /// Single-term vector `c * mono * e_i`.
    pub fn term(i: usize, mono: Monomial, c: FieldElement) -> Vector {
        if c.is_zero() {
            Vector::zero()
        } else {
            Vector { terms: alloc::vec![(i, mono, c)] }
        }
    }
}
