use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg::Matrix;

use super::{Monomial, Polynomial, Ring};

/// `⊕_j S(-d_j)`, recorded by its shifts `d_j`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedFreeModule {
    shifts: Vec<i32>,
}

impl GradedFreeModule {
    pub fn new(shifts: Vec<i32>) -> Self {
        GradedFreeModule { shifts }
    }

    /// The ring itself, `S(0)`.
    pub fn ring() -> Self {
        GradedFreeModule { shifts: alloc::vec![0] }
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    #[inline]
    pub fn shifts(&self) -> &[i32] {
        &self.shifts
    }

    #[inline]
    pub fn shift(&self, i: usize) -> i32 {
        self.shifts[i]
    }

    /// Coordinate basis of the degree-`d` piece: pairs `(component, monomial)`,
    /// components in order, monomials descending.
    pub fn basis_in_degree(&self, ring: &Ring, d: i32) -> Vec<(usize, Monomial)> {
        let mut out = Vec::new();
        for (i, &s) in self.shifts.iter().enumerate() {
            if d >= s {
                out.extend(ring.monomials_of_degree((d - s) as u32).into_iter().map(|m| (i, m)));
            }
        }
        out
    }

    pub fn dim_in_degree(&self, ring: &Ring, d: i32) -> usize {
        let n = ring.nvars() as u64;
        self.shifts
            .iter()
            .filter(|&&s| d >= s)
            .map(|&s| binomial(n - 1 + (d - s) as u64, n - 1) as usize)
            .sum()
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Matrix of homogeneous polynomials `source -> target`, stored by columns.
///
/// Column `j` is the image of the `j`-th basis element of `source`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    source: GradedFreeModule,
    target: GradedFreeModule,
    columns: Vec<Vec<Polynomial>>,
}

impl GradedMap {
    pub fn new(
        source: GradedFreeModule,
        target: GradedFreeModule,
        columns: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        if columns.len() != source.rank() {
            return Err(Error::Structure(alloc::format!(
                "{} columns for a source of rank {}",
                columns.len(),
                source.rank()
            )));
        }
        if let Some(c) = columns.iter().find(|c| c.len() != target.rank()) {
            return Err(Error::Structure(alloc::format!(
                "column of length {} for a target of rank {}",
                c.len(),
                target.rank()
            )));
        }
        Ok(GradedMap { source, target, columns })
    }

    pub fn zero(source: GradedFreeModule, target: GradedFreeModule) -> Self {
        let columns = (0..source.rank()).map(|_| alloc::vec![Polynomial::zero(); target.rank()]).collect();
        GradedMap { source, target, columns }
    }

    pub fn source(&self) -> &GradedFreeModule {
        &self.source
    }

    pub fn target(&self) -> &GradedFreeModule {
        &self.target
    }

    pub fn columns(&self) -> &[Vec<Polynomial>] {
        &self.columns
    }

    pub fn into_columns(self) -> Vec<Vec<Polynomial>> {
        self.columns
    }

    /// Entry in row `i` (target) and column `j` (source).
    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.columns[j][i]
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.iter().all(Polynomial::is_zero))
    }

    /// Whether some entry is a nonzero constant.
    pub fn has_unit_entry(&self) -> bool {
        self.columns.iter().any(|c| c.iter().any(Polynomial::is_unit))
    }

    /// `self ∘ inner`, where `inner: A -> source(self)`.
    pub fn compose(&self, ring: &Ring, inner: &GradedMap) -> Result<GradedMap> {
        if inner.target.rank() != self.source.rank() {
            return Err(Error::Structure("composing maps with mismatched ranks".into()));
        }
        let columns =
            inner.columns.iter().map(|col| apply(ring, &self.columns, self.target.rank(), col)).collect();
        Ok(GradedMap { source: inner.source.clone(), target: self.target.clone(), columns })
    }

    /// Image of a vector in `source`.
    pub fn apply(&self, ring: &Ring, v: &[Polynomial]) -> Vec<Polynomial> {
        apply(ring, &self.columns, self.target.rank(), v)
    }

    /// The k-linear map on degree-`d` pieces in the coordinate bases of
    /// [`GradedFreeModule::basis_in_degree`].
    pub fn piece_matrix(&self, ring: &Ring, d: i32) -> Matrix {
        let src = self.source.basis_in_degree(ring, d);
        let tgt = self.target.basis_in_degree(ring, d);
        let mut m = Matrix::zeros(tgt.len(), src.len());
        // target basis index by (component, monomial)
        let index = |comp: usize, mono: &Monomial| -> usize {
            tgt.binary_search_by(|(c, m)| c.cmp(&comp).then_with(|| ring.cmp(mono, m)))
                .expect("image term lies in the target piece")
        };
        for (col, (j, mu)) in src.iter().enumerate() {
            for (i, entry) in self.columns[*j].iter().enumerate() {
                for (t, c) in entry.terms() {
                    let row = index(i, &t.mul(mu));
                    m.add_to(ring.field(), row, col, *c);
                }
            }
        }
        m
    }
}

fn apply(ring: &Ring, columns: &[Vec<Polynomial>], rank: usize, v: &[Polynomial]) -> Vec<Polynomial> {
    let mut out = alloc::vec![Polynomial::zero(); rank];
    for (coef, col) in v.iter().zip(columns) {
        if coef.is_zero() {
            continue;
        }
        for (o, e) in out.iter_mut().zip(col) {
            if !e.is_zero() {
                *o = ring.add(o, &ring.mul(coef, e));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeViolation {
    pub row: usize,
    pub col: usize,
    /// `source shift - target shift`.
    pub expected: i32,
    /// Degree of the offending entry's lead term.
    pub found: u32,
    pub homogeneous: bool,
}

/// Lists every entry whose degree disagrees with the shifts. Empty means valid.
pub fn graded_map_check(map: &GradedMap) -> Vec<DegreeViolation> {
    let mut out = Vec::new();
    for (j, col) in map.columns.iter().enumerate() {
        for (i, e) in col.iter().enumerate() {
            let Some((lead, _)) = e.lead() else { continue };
            let expected = map.source.shift(j) - map.target.shift(i);
            let homogeneous = e.is_homogeneous();
            if !homogeneous || expected < 0 || lead.degree() as i32 != expected {
                out.push(DegreeViolation { row: i, col: j, expected, found: lead.degree(), homogeneous });
            }
        }
    }
    out
}

/// Coordinates of a polynomial in the basis `monomials` (must contain its support).
pub(crate) fn coordinates(ring: &Ring, f: &Polynomial, monomials: &[Monomial]) -> Vec<FieldElement> {
    let mut v = alloc::vec![FieldElement::ZERO; monomials.len()];
    for (m, c) in f.terms() {
        let k = monomials.binary_search_by(|b| ring.cmp(m, b)).expect("monomial in basis");
        v[k] = *c;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn koszul_map_check() {
        let r = Ring::standard(2);
        let (x, y) = (r.var(0), r.var(1));
        let koszul = GradedMap::new(
            GradedFreeModule::new(alloc::vec![2]),
            GradedFreeModule::new(alloc::vec![1, 1]),
            alloc::vec![alloc::vec![r.neg(&y), x.clone()]],
        )
        .unwrap();
        assert!(graded_map_check(&koszul).is_empty());

        let bad = GradedMap::new(
            GradedFreeModule::new(alloc::vec![2]),
            GradedFreeModule::new(alloc::vec![1, 1]),
            alloc::vec![alloc::vec![r.mul(&x, &x), Polynomial::zero()]],
        )
        .unwrap();
        let v = graded_map_check(&bad);
        assert_eq!(v.len(), 1);
        assert_eq!((v[0].expected, v[0].found), (1, 2));

        let zero =
            GradedMap::zero(GradedFreeModule::new(alloc::vec![0, 7]), GradedFreeModule::new(alloc::vec![3]));
        assert!(graded_map_check(&zero).is_empty());
    }

    #[test]
    fn piece_matrix_of_koszul_complex_composes_to_zero() {
        let r = Ring::standard(2);
        let (x, y) = (r.var(0), r.var(1));
        let d1 = GradedMap::new(
            GradedFreeModule::new(alloc::vec![1, 1]),
            GradedFreeModule::ring(),
            alloc::vec![alloc::vec![x.clone()], alloc::vec![y.clone()]],
        )
        .unwrap();
        let d2 = GradedMap::new(
            GradedFreeModule::new(alloc::vec![2]),
            GradedFreeModule::new(alloc::vec![1, 1]),
            alloc::vec![alloc::vec![r.neg(&y), x.clone()]],
        )
        .unwrap();
        assert!(d1.compose(&r, &d2).unwrap().is_zero());
        for d in 0..6 {
            let a = d1.piece_matrix(&r, d);
            let b = d2.piece_matrix(&r, d);
            if a.cols() > 0 && b.cols() > 0 {
                assert!(a.mul(r.field(), &b).is_zero());
            }
            assert_eq!(a.cols(), d1.source().dim_in_degree(&r, d));
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
    }
}
