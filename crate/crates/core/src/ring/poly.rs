use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::FieldElement;

use super::Monomial;

/// Sparse polynomial with terms strictly descending in the ring's order.
///
/// Canonical form (sorted, no zero coefficients, no repeated monomials) is
/// maintained by the constructors and arithmetic on [`super::Ring`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    pub(crate) terms: Vec<(Monomial, FieldElement)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Monomial, FieldElement)> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn lead_coefficient(&self) -> Option<FieldElement> {
        self.terms.first().map(|&(_, c)| c)
    }

    /// True for the zero polynomial as well.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    /// The common degree of all terms.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        let (first, _) = self.terms.first().ok_or(Error::Degenerate("the zero polynomial has no degree"))?;
        let d = first.degree();
        match self.terms.iter().find(|(t, _)| t.degree() != d) {
            Some((t, _)) => Err(Error::Inhomogeneous { first: d, second: t.degree() }),
            None => Ok(d),
        }
    }

    /// Whether `c` is a nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        self.terms.iter().find(|(t, _)| t == m).map(|&(_, c)| c).unwrap_or(FieldElement::ZERO)
    }

    /// Number of variables of the monomials, if any term is present.
    pub fn nvars(&self) -> Option<usize> {
        self.terms.first().map(|(m, _)| m.nvars())
    }
}
