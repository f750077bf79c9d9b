use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ring::Monomial;

/// `numerator(t) / (1 - t)^n`, the Hilbert series of `S/I`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct HilbertSeries {
    /// Coefficients of the numerator, constant term first, no trailing zeros.
    pub numerator: Vec<i64>,
    pub nvars: usize,
}

impl HilbertSeries {
    /// `dim_k (S/I)_d` from the closed form.
    pub fn coefficient(&self, d: u32) -> i64 {
        let n = self.nvars as i64;
        self.numerator
            .iter()
            .enumerate()
            .filter(|&(k, _)| k as u32 <= d)
            .map(|(k, &c)| c * binomial_i64(d as i64 - k as i64 + n - 1, n - 1))
            .sum()
    }

    /// The numerator after cancelling every factor `(1 - t)` it shares with
    /// the denominator, and the remaining exponent of `(1 - t)`.
    pub fn reduced(&self) -> Option<(Vec<i64>, usize)> {
        if self.numerator.is_empty() {
            return None;
        }
        let mut num = self.numerator.clone();
        let mut dim = self.nvars;
        while dim > 0 && num.iter().sum::<i64>() == 0 {
            num = divide_by_one_minus_t(&num);
            dim -= 1;
        }
        Some((num, dim))
    }
}

fn binomial_i64(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

/// Exact quotient by `1 - t` of a polynomial vanishing at `t = 1`.
fn divide_by_one_minus_t(num: &[i64]) -> Vec<i64> {
    // q_k = sum_{i <= k} a_i
    let mut out = Vec::with_capacity(num.len().saturating_sub(1));
    let mut acc = 0;
    for &a in &num[..num.len() - 1] {
        acc += a;
        out.push(acc);
    }
    trim(out)
}

pub(crate) fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub(crate) fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &y) in b.iter().enumerate() {
        out[i] += y;
    }
    trim(out)
}

/// `1 - t^d`.
pub fn one_minus_t_pow(d: u32) -> Vec<i64> {
    if d == 0 {
        return Vec::new();
    }
    let mut v = vec![0; d as usize + 1];
    v[0] = 1;
    v[d as usize] = -1;
    v
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Hilbert series numerator of `S / (monomial ideal)` by pivoting on a variable:
/// `N(M) = N(M + (x)) + t * N(M : x)`.
pub fn monomial_numerator(gens: &[Monomial], nvars: usize) -> Vec<i64> {
    let gens = minimalize(gens.to_vec());
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(Monomial::is_one) {
        return Vec::new();
    }
    let pairwise_coprime =
        gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        return gens.iter().fold(vec![1], |acc, g| poly_mul(&acc, &one_minus_t_pow(g.degree())));
    }
    // pivot on the variable occurring in the most non-linear generators
    let mut counts = vec![0usize; nvars];
    for g in gens.iter().filter(|g| g.degree() > 1) {
        for (i, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let pivot = (0..nvars).max_by_key(|&i| (counts[i], core::cmp::Reverse(i))).unwrap();
    let x = Monomial::var(nvars, pivot);

    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exponent(pivot) == 0).copied().collect();
    plus.push(x);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let e = g.exponent(pivot);
            if e > 0 {
                g.with_exponent(pivot, e - 1)
            } else {
                *g
            }
        })
        .collect();
    let a = monomial_numerator(&plus, nvars);
    let b = monomial_numerator(&colon, nvars);
    poly_add(&a, &poly_mul(&[0, 1], &b))
}

pub fn hilbert_series(ideal: &Ideal) -> HilbertSeries {
    let n = ideal.ring().nvars();
    HilbertSeries { numerator: monomial_numerator(&ideal.lead_monomials(), n), nvars: n }
}

/// `dim_k (S/I)_d`.
pub fn hilbert_function(ideal: &Ideal, d: u32) -> u64 {
    let v = hilbert_series(ideal).coefficient(d);
    debug_assert!(v >= 0);
    v as u64
}

/// Krull dimension of `S/I`.
pub fn krull_dim(ideal: &Ideal) -> Result<usize> {
    hilbert_series(ideal)
        .reduced()
        .map(|(_, dim)| dim)
        .ok_or(Error::Degenerate("the unit ideal has an empty quotient"))
}
