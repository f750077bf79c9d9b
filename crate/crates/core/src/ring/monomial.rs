use core::cmp::Ordering;
use core::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// Upper bound on the number of ring variables.
pub const MAX_VARS: usize = 16;

/// A monomial as a dense exponent vector with its total degree cached.
///
/// Slots at index `>= nvars` are always zero.
#[derive(Clone, Copy)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
    deg: u32,
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.nvars.hash(state);
        self.exps.hash(state);
    }
}

impl core::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        Monomial { exps: [0; MAX_VARS], nvars: nvars as u8, deg: 0 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        assert!(i < nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::Structure(alloc::format!(
                "{} variables exceeds the supported maximum of {MAX_VARS}",
                exps.len()
            )));
        }
        let mut m = Monomial::one(exps.len());
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e)
                .map_err(|_| Error::Parameter(alloc::format!("exponent {e} is too large")))?;
            m.deg += e;
        }
        Ok(m)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = *self;
        for i in 0..self.nvars as usize {
            out.exps[i] += other.exps[i];
        }
        out.deg += other.deg;
        out
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && (0..self.nvars as usize).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut out = *other;
        for i in 0..self.nvars as usize {
            out.exps[i] -= self.exps[i];
        }
        out.deg -= self.deg;
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        out.deg = 0;
        for i in 0..self.nvars as usize {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            out.deg += out.exps[i] as u32;
        }
        out
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        out.deg = 0;
        for i in 0..self.nvars as usize {
            out.exps[i] = self.exps[i].min(other.exps[i]);
            out.deg += out.exps[i] as u32;
        }
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..self.nvars as usize).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Same monomial with exponent `e` in slot `i`.
    pub fn with_exponent(&self, i: usize, e: u16) -> Monomial {
        let mut out = *self;
        out.deg = out.deg - out.exps[i] as u32 + e as u32;
        out.exps[i] = e;
        out
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    Grevlex,
    Lex,
}

impl MonomialOrder {
    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Lex => "lex",
        }
    }

    #[inline]
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = a.nvars as usize;
        match self {
            MonomialOrder::Grevlex => a.deg.cmp(&b.deg).then_with(|| {
                // smaller exponent in the last differing variable wins
                for i in (0..n).rev() {
                    if a.exps[i] != b.exps[i] {
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }),
            MonomialOrder::Lex => {
                for i in 0..n {
                    if a.exps[i] != b.exps[i] {
                        return a.exps[i].cmp(&b.exps[i]);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Checked comparison; monomials from rings of different sizes are rejected.
pub fn monomial_compare(a: &Monomial, b: &Monomial, order: MonomialOrder) -> Result<Ordering> {
    if a.nvars != b.nvars {
        return Err(Error::Structure(alloc::format!(
            "comparing monomials in {} and {} variables",
            a.nvars,
            b.nvars
        )));
    }
    Ok(order.cmp(a, b))
}

/// All monomials of degree `d` in `n` variables, in lex-descending order.
pub fn monomials_of_degree(n: usize, d: u32) -> alloc::vec::Vec<Monomial> {
    let mut out = alloc::vec::Vec::new();
    let mut exps = alloc::vec![0u32; n];
    fill(&mut out, &mut exps, 0, d);
    out
}

fn fill(out: &mut alloc::vec::Vec<Monomial>, exps: &mut [u32], i: usize, remaining: u32) {
    let n = exps.len();
    if n == 0 {
        if remaining == 0 {
            out.push(Monomial::one(0));
        }
        return;
    }
    if i == n - 1 {
        exps[i] = remaining;
        out.push(Monomial::from_exponents(exps).expect("bounded exponent vector"));
        return;
    }
    for e in (0..=remaining).rev() {
        exps[i] = e;
        fill(out, exps, i + 1, remaining - e);
    }
    exps[i] = 0;
}
