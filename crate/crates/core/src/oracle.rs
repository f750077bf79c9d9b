//! Brute-force recomputation of the engine's invariants by dense linear
//! algebra on graded pieces. Nothing here touches Gröbner bases; the
//! matrices have `C(n - 1 + d, d)`-sized blocks, so keep `n` and `d` small.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::field::{FieldElement, PrimeField};
use crate::groebner::Ideal;
use crate::invariants::BettiTable;
use crate::linalg::Matrix;
use crate::ring::{GradedFreeModule, GradedMap, Monomial, Polynomial, Ring};

/// The monomials of `S_d`, descending in the ring order: the coordinate basis of `S_d`.
#[derive(Clone, Debug)]
pub struct GradedPieceBasis {
    pub degree: u32,
    pub monomials: Vec<Monomial>,
}

impl GradedPieceBasis {
    pub fn new(ring: &Ring, degree: u32) -> Self {
        GradedPieceBasis { degree, monomials: ring.monomials_of_degree(degree) }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    fn index(&self, ring: &Ring, m: &Monomial) -> usize {
        self.monomials.binary_search_by(|b| ring.cmp(m, b)).expect("monomial of this degree")
    }

    pub fn coordinates(&self, ring: &Ring, f: &Polynomial) -> Vec<FieldElement> {
        let mut v = vec![FieldElement::ZERO; self.len()];
        for (m, c) in f.terms() {
            let k = self.index(ring, m);
            v[k] = ring.field().add(v[k], *c);
        }
        v
    }
}

fn degree_of(f: &Polynomial) -> u32 {
    f.homogeneous_degree().expect("homogeneous generator")
}

/// Spanning vectors of `I_d`: every `monomial * generator` of degree `d`.
fn ideal_piece(ring: &Ring, gens: &[Polynomial], basis: &GradedPieceBasis) -> Vec<Vec<FieldElement>> {
    let mut rows = Vec::new();
    for g in gens {
        let e = degree_of(g);
        if e > basis.degree {
            continue;
        }
        for mu in ring.monomials_of_degree(basis.degree - e) {
            rows.push(basis.coordinates(ring, &ring.mul_term(g, FieldElement::ONE, &mu)));
        }
    }
    rows
}

/// `dim S_d - rank I_d`.
pub fn hf_bruteforce(ideal: &Ideal, d: u32) -> u64 {
    let ring = ideal.ring();
    let basis = GradedPieceBasis::new(ring, d);
    let rows = ideal_piece(ring, ideal.generators(), &basis);
    let rank = if rows.is_empty() { 0 } else { Matrix::from_rows(basis.len(), rows).rank(ring.field()) };
    (basis.len() - rank) as u64
}

/// `(S/I)_d` as `S_d` modulo the row-reduced span of `I_d`. The non-pivot
/// monomials form its basis.
#[derive(Clone, Debug)]
pub struct QuotientPiece {
    basis: GradedPieceBasis,
    rref: Matrix,
    pivots: Vec<usize>,
    free: Vec<usize>,
}

impl QuotientPiece {
    pub fn new(ring: &Ring, gens: &[Polynomial], d: u32) -> Self {
        let basis = GradedPieceBasis::new(ring, d);
        let rows = ideal_piece(ring, gens, &basis);
        let (rref, pivots) = if rows.is_empty() {
            (Matrix::zeros(0, basis.len()), Vec::new())
        } else {
            let (m, p) = Matrix::from_rows(basis.len(), rows).rref(ring.field());
            (m, p)
        };
        let free = (0..basis.len()).filter(|c| !pivots.contains(c)).collect();
        QuotientPiece { basis, rref, pivots, free }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Standard-monomial representatives of the basis.
    pub fn basis_monomials(&self) -> Vec<Monomial> {
        self.free.iter().map(|&k| self.basis.monomials[k]).collect()
    }

    /// Class of `f` (homogeneous of this degree) in the free-column coordinates.
    pub fn reduce(&self, ring: &Ring, f: &Polynomial) -> Vec<FieldElement> {
        let mut v = self.basis.coordinates(ring, f);
        self.reduce_coordinates(ring.field(), &mut v);
        self.free.iter().map(|&k| v[k]).collect()
    }

    fn reduce_coordinates(&self, field: &PrimeField, v: &mut [FieldElement]) {
        for (r, &pc) in self.pivots.iter().enumerate() {
            let c = v[pc];
            if c.is_zero() {
                continue;
            }
            for (k, x) in v.iter_mut().enumerate() {
                let a = self.rref.get(r, k);
                if !a.is_zero() {
                    *x = field.sub(*x, field.mul(c, a));
                }
            }
        }
    }
}

/// Kernel bases of `(a_j) -> Σ a_j f_j` on `⊕_j S_{e - d_j} -> S_e`, for each `e <= degree_bound`.
pub fn syzygies_bruteforce(ideal: &Ideal, degree_bound: u32) -> BTreeMap<u32, Vec<Vec<Polynomial>>> {
    let ring = ideal.ring();
    let gens: Vec<Vec<Polynomial>> = ideal.generators().iter().map(|g| vec![g.clone()]).collect();
    let shifts: Vec<i32> = ideal.generators().iter().map(|g| degree_of(g) as i32).collect();
    let map =
        GradedMap::new(GradedFreeModule::new(shifts), GradedFreeModule::ring(), gens).expect("generator row");
    (0..=degree_bound).map(|e| (e, kernel_in_degree(ring, &map, e as i32))).collect()
}

/// Basis of `ker(map)` in degree `e`, as polynomial columns.
fn kernel_in_degree(ring: &Ring, map: &GradedMap, e: i32) -> Vec<Vec<Polynomial>> {
    let src = map.source().basis_in_degree(ring, e);
    if src.is_empty() {
        return Vec::new();
    }
    let m = map.piece_matrix(ring, e);
    let kernel = if m.rows() == 0 {
        (0..src.len())
            .map(|k| {
                let mut v = vec![FieldElement::ZERO; src.len()];
                v[k] = FieldElement::ONE;
                v
            })
            .collect()
    } else {
        m.kernel(ring.field())
    };
    kernel.into_iter().map(|v| to_column(ring, map.source().rank(), &src, &v)).collect()
}

fn to_column(ring: &Ring, rank: usize, basis: &[(usize, Monomial)], v: &[FieldElement]) -> Vec<Polynomial> {
    let mut parts: Vec<Vec<(Monomial, FieldElement)>> = vec![Vec::new(); rank];
    for ((comp, m), c) in basis.iter().zip(v) {
        if !c.is_zero() {
            parts[*comp].push((*m, *c));
        }
    }
    parts.into_iter().map(|t| ring.from_terms(t)).collect()
}

fn column_coordinates(ring: &Ring, basis: &[(usize, Monomial)], column: &[Polynomial]) -> Vec<FieldElement> {
    let mut v = vec![FieldElement::ZERO; basis.len()];
    for (comp, p) in column.iter().enumerate() {
        for (m, c) in p.terms() {
            let k = basis
                .binary_search_by(|(bc, bm)| bc.cmp(&comp).then_with(|| ring.cmp(m, bm)))
                .expect("term in piece");
            v[k] = *c;
        }
    }
    v
}

/// Dimension of the degree-0 first-order deformations of `I`: tuples
/// `(g_j)`, `g_j ∈ (S/I)_{d_j}`, with `Σ a_j g_j ∈ I` for every syzygy `a`
/// of degree `<= degree_bound`.
pub fn tangent_bruteforce(ideal: &Ideal, degree_bound: u32) -> usize {
    let ring = ideal.ring();
    let gens = ideal.generators();
    if gens.is_empty() {
        return 0;
    }
    let degrees: Vec<u32> = gens.iter().map(degree_of).collect();
    let pieces: Vec<QuotientPiece> = degrees.iter().map(|&d| QuotientPiece::new(ring, gens, d)).collect();
    let offsets: Vec<usize> = pieces
        .iter()
        .scan(0, |acc, p| {
            let o = *acc;
            *acc += p.dim();
            Some(o)
        })
        .collect();
    let unknowns: usize = pieces.iter().map(QuotientPiece::dim).sum();
    if unknowns == 0 {
        return 0;
    }
    let mut matrix = Matrix::zeros(0, unknowns);
    for (e, syzygies) in syzygies_bruteforce(ideal, degree_bound) {
        if syzygies.is_empty() {
            continue;
        }
        let target = QuotientPiece::new(ring, gens, e);
        if target.dim() == 0 {
            continue;
        }
        for a in &syzygies {
            let mut block = vec![vec![FieldElement::ZERO; unknowns]; target.dim()];
            for (j, aj) in a.iter().enumerate() {
                if aj.is_zero() {
                    continue;
                }
                for (k, nu) in pieces[j].basis_monomials().iter().enumerate() {
                    let image = ring.mul_term(aj, FieldElement::ONE, nu);
                    for (row, c) in target.reduce(ring, &image).into_iter().enumerate() {
                        block[row][offsets[j] + k] = c;
                    }
                }
            }
            for row in block {
                matrix.push_row(row);
            }
        }
    }
    if matrix.rows() == 0 {
        unknowns
    } else {
        unknowns - matrix.rank(ring.field())
    }
}

/// A resolution assembled degree by degree from explicitly chosen minimal
/// generators; `maps[0]` is the generator row.
#[derive(Clone, Debug)]
pub struct DenseResolution {
    pub maps: Vec<GradedMap>,
    pub betti: BettiTable,
}

/// Betti numbers from minimal generators of iterated syzygy modules, each
/// computed in degrees `<= degree_bound` by rank computations alone.
pub fn betti_bruteforce(ideal: &Ideal, max_step: usize, degree_bound: u32) -> DenseResolution {
    let ring = ideal.ring();
    let field = ring.field();
    let bound = degree_bound as i32;
    let mut maps: Vec<GradedMap> = Vec::new();
    let mut entries = Vec::new();

    // minimal generators of I among the given ones
    let mut chosen: Vec<Polynomial> = Vec::new();
    for e in 0..=degree_bound {
        let basis = GradedPieceBasis::new(ring, e);
        let mut span = EchelonSpan::new(*field, basis.len());
        for v in ideal_piece(ring, &chosen, &basis) {
            span.insert(v);
        }
        for g in ideal.generators().iter().filter(|g| degree_of(g) == e) {
            if span.insert(basis.coordinates(ring, g)) {
                chosen.push(g.clone());
                entries.push(((0usize, e as i32), 1usize));
            }
        }
    }
    if chosen.is_empty() {
        return DenseResolution { maps, betti: BettiTable::default() };
    }
    let shifts: Vec<i32> = chosen.iter().map(|g| degree_of(g) as i32).collect();
    maps.push(
        GradedMap::new(
            GradedFreeModule::new(shifts),
            GradedFreeModule::ring(),
            chosen.into_iter().map(|g| vec![g]).collect(),
        )
        .unwrap(),
    );

    for step in 1..max_step {
        let last = maps.last().unwrap();
        let module = last.source().clone();
        let mut gens: Vec<Vec<Polynomial>> = Vec::new();
        let mut gen_shifts = Vec::new();
        let mut prev_kernel: Vec<Vec<Polynomial>> = Vec::new();
        for e in 0..=bound {
            let kernel = kernel_in_degree(ring, last, e);
            let basis = module.basis_in_degree(ring, e);
            if basis.is_empty() {
                prev_kernel = kernel;
                continue;
            }
            // span of x_i * (degree e-1 kernel)
            let mut span = EchelonSpan::new(*field, basis.len());
            for w in &prev_kernel {
                for i in 0..ring.nvars() {
                    let x = ring.var(i);
                    let col: Vec<Polynomial> = w.iter().map(|p| ring.mul(p, &x)).collect();
                    span.insert(column_coordinates(ring, &basis, &col));
                }
            }
            for k in &kernel {
                if span.insert(column_coordinates(ring, &basis, k)) {
                    gens.push(k.clone());
                    gen_shifts.push(e);
                    entries.push(((step, e), 1));
                }
            }
            prev_kernel = kernel;
        }
        if gens.is_empty() {
            break;
        }
        let next = GradedMap::new(GradedFreeModule::new(gen_shifts), module, gens).unwrap();
        maps.push(next);
    }
    DenseResolution { maps, betti: BettiTable::from_entries(entries) }
}

fn rank(field: &PrimeField, dim: usize, rows: &[Vec<FieldElement>]) -> usize {
    crate::linalg::rank_of(field, dim, rows)
}

/// Row-echelon basis grown one vector at a time.
struct EchelonSpan {
    field: PrimeField,
    dim: usize,
    rows: Vec<(usize, Vec<FieldElement>)>,
}

impl EchelonSpan {
    fn new(field: PrimeField, dim: usize) -> Self {
        EchelonSpan { field, dim, rows: Vec::new() }
    }

    /// Adds `v`; true iff it was outside the span.
    fn insert(&mut self, mut v: Vec<FieldElement>) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        let f = &self.field;
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c.is_zero() {
                continue;
            }
            for k in *pivot..self.dim {
                if !row[k].is_zero() {
                    v[k] = f.sub(v[k], f.mul(c, row[k]));
                }
            }
        }
        let Some(pivot) = v.iter().position(|c| !c.is_zero()) else { return false };
        let inv = f.inv(v[pivot]).expect("nonzero pivot");
        for c in &mut v[pivot..] {
            *c = f.mul(*c, inv);
        }
        self.rows.push((pivot, v));
        true
    }
}

/// `dim Ext^1(I, S/I)_0` from the dense resolution: cycles on `F_2` killed
/// by `sigma_3`, modulo the boundaries `alpha ∘ sigma_2`.
pub fn ext1_bruteforce(ideal: &Ideal, degree_bound: u32) -> usize {
    let ring = ideal.ring();
    let field = ring.field();
    let gens = ideal.generators();
    let res = betti_bruteforce(ideal, 3, degree_bound);
    let Some(sigma2) = res.maps.get(1) else { return 0 };
    let f1 = res.maps[0].source();
    let f2 = sigma2.source();
    let piece = |d: i32| -> QuotientPiece { QuotientPiece::new(ring, gens, d.max(0) as u32) };
    let hom_basis = |module: &GradedFreeModule| -> Vec<(usize, Monomial)> {
        let mut out = Vec::new();
        for (j, &s) in module.shifts().iter().enumerate() {
            if s >= 0 {
                out.extend(piece(s).basis_monomials().into_iter().map(|m| (j, m)));
            }
        }
        out
    };
    let f1_basis = hom_basis(f1);
    let f2_basis = hom_basis(f2);
    // coordinates of Hom(F_2, S/I)_0 = ⊕_k (S/I)_{shift_k}
    let f2_pieces: Vec<QuotientPiece> = f2.shifts().iter().map(|&s| piece(s)).collect();
    let f2_offsets: Vec<usize> = f2_pieces
        .iter()
        .scan(0, |acc, p| {
            let o = *acc;
            *acc += p.dim();
            Some(o)
        })
        .collect();
    let dim_f2 = f2_basis.len();

    // boundaries: alpha ∘ sigma_2 for alpha = nu * e_j^*
    let mut boundaries = Vec::new();
    for &(j, nu) in &f1_basis {
        let mut v = vec![FieldElement::ZERO; dim_f2];
        for (k, p) in f2_pieces.iter().enumerate() {
            let entry = sigma2.entry(j, k);
            if entry.is_zero() || p.dim() == 0 {
                continue;
            }
            let image = ring.mul_term(entry, FieldElement::ONE, &nu);
            for (t, c) in p.reduce(ring, &image).into_iter().enumerate() {
                v[f2_offsets[k] + t] = c;
            }
        }
        boundaries.push(v);
    }
    let boundary_rank = rank(field, dim_f2, &boundaries);

    // cycles: beta with beta ∘ sigma_3 = 0
    let cycles = match res.maps.get(2) {
        None => dim_f2,
        Some(sigma3) => {
            let f3 = sigma3.source();
            let mut rows: Vec<Vec<FieldElement>> = Vec::new();
            for (c, &s) in f3.shifts().iter().enumerate() {
                let target = piece(s);
                if target.dim() == 0 {
                    continue;
                }
                let mut block = vec![vec![FieldElement::ZERO; dim_f2]; target.dim()];
                for (col, &(k, nu)) in f2_basis.iter().enumerate() {
                    let entry = sigma3.entry(k, c);
                    if entry.is_zero() {
                        continue;
                    }
                    let image = ring.mul_term(entry, FieldElement::ONE, &nu);
                    for (row, v) in target.reduce(ring, &image).into_iter().enumerate() {
                        block[row][col] = v;
                    }
                }
                rows.extend(block);
            }
            dim_f2 - rank(field, dim_f2, &rows)
        }
    };
    cycles - boundary_rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::groebner::{ideal_sum, maximal_ideal_power};
    use crate::invariants::{betti_table, hilbert_function, hilbert_series};
    use crate::ring::Ring;

    fn ideal(n: usize, gens: &[&str]) -> Ideal {
        Ideal::parse(Ring::standard(n), gens).unwrap()
    }

    #[test]
    fn hf_examples() {
        assert_eq!(hf_bruteforce(&ideal(2, &["x^2"]), 3), 2);
        assert_eq!(hf_bruteforce(&corpus::zero_ideal(3), 5), 21);
        assert_eq!(hf_bruteforce(&corpus::twisted_cubic(), 4), 13);
    }

    #[test]
    fn syzygy_examples() {
        let ci = syzygies_bruteforce(&corpus::complete_intersection(2), 4);
        assert_eq!(ci[&4].len(), 1);
        assert!(ci[&1].is_empty());
        let tc = syzygies_bruteforce(&corpus::twisted_cubic(), 3);
        assert_eq!(tc[&3].len(), 2);
        assert!(tc[&2].is_empty());
    }

    #[test]
    fn tangent_examples() {
        assert_eq!(tangent_bruteforce(&ideal(2, &["x^2"]), 4), 2);
        assert_eq!(tangent_bruteforce(&corpus::complete_intersection(2), 5), 2);
        assert_eq!(tangent_bruteforce(&corpus::monomial_square(), 5), 0);
    }

    #[test]
    fn frozen_deformation_values() {
        assert_eq!(tangent_bruteforce(&corpus::twisted_cubic(), 6), 12);
        assert_eq!(tangent_bruteforce(&corpus::quadric_cone(), 6), 9);
        assert_eq!(ext1_bruteforce(&corpus::twisted_cubic(), 6), 11);
        assert_eq!(ext1_bruteforce(&corpus::complete_intersection(2), 8), 0);
        assert_eq!(ext1_bruteforce(&corpus::monomial_square(), 6), 0);
        assert_eq!(ext1_bruteforce(&ideal(2, &["x^2"]), 4), 0);
    }

    #[test]
    fn betti_examples() {
        let m = betti_bruteforce(&corpus::maximal_power(2, 1), 3, 4).betti;
        assert_eq!(m.get(0, 1), 2);
        assert_eq!(m.get(1, 2), 1);
        assert_eq!(m.length(), 2);
        let tc = betti_bruteforce(&corpus::twisted_cubic(), 4, 6).betti;
        assert_eq!(tc.get(0, 2), 3);
        assert_eq!(tc.get(1, 3), 2);
        assert_eq!(tc, betti_table(&corpus::twisted_cubic()).unwrap());
    }

    #[test]
    fn betti_matches_engine_on_truncation() {
        let tc = corpus::twisted_cubic();
        let gamma = ideal_sum(&tc, &maximal_ideal_power(tc.ring(), 4).unwrap()).unwrap();
        let dense = betti_bruteforce(&gamma, 5, 9).betti;
        assert_eq!(dense, betti_table(&gamma).unwrap());
        assert_eq!(dense.get(0, 4), 13);
    }

    #[test]
    fn euler_characteristic_gives_numerator() {
        for (name, i) in corpus::all() {
            if i.is_zero() {
                continue;
            }
            let n = i.ring().nvars();
            let table = betti_bruteforce(&i, n + 1, 10).betti.quotient();
            let mut num = vec![0i64; 16];
            for e in table.entries() {
                let sign = if e.i % 2 == 0 { 1 } else { -1 };
                num[e.j as usize] += sign * e.beta as i64;
            }
            while num.last() == Some(&0) {
                num.pop();
            }
            assert_eq!(num, hilbert_series(&i).numerator, "{name}");
        }
    }

    #[test]
    fn hf_matches_engine() {
        for (name, i) in corpus::all() {
            for d in 0..=8 {
                assert_eq!(hf_bruteforce(&i, d), hilbert_function(&i, d), "{name} d={d}");
            }
        }
    }
}
