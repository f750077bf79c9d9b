//! Degree-0 tangent and obstruction spaces of a graded ideal, and their
//! comparison under truncation by a power of the maximal ideal.
//!
//! A degree-0 map `F -> S/I` out of a graded free module `⊕ S(-s_k)` is a
//! tuple of classes in `(S/I)_{s_k}`; all such maps are written in the
//! standard-monomial basis of each piece, monomials descending, blocks in
//! component order. `Hom(I, S/I)_0` is the kernel of precomposition with
//! `sigma_2`, and `Ext^1(I, S/I)_0` is the homology at `Hom(F_2, S/I)_0`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::groebner::{column_degree, ideal_member, ideal_sum, maximal_ideal_power, module_syzygies, Ideal};
use crate::invariants::{minimal_free_resolution, regularity};
use crate::linalg::{rank_of, Matrix};
use crate::ring::coordinates;
use crate::ring::{GradedFreeModule, Monomial, Polynomial};

/// Degree-0 maps `⊕ S(-s_k) -> S/I` in coordinates.
#[derive(Clone, Debug)]
struct HomSpace {
    blocks: Vec<Vec<Monomial>>,
    offsets: Vec<usize>,
    dim: usize,
}

impl HomSpace {
    fn new(ideal: &Ideal, module: &GradedFreeModule) -> Self {
        let blocks: Vec<Vec<Monomial>> = module
            .shifts()
            .iter()
            .map(|&s| if s < 0 { Vec::new() } else { ideal.standard_monomials(s as u32) })
            .collect();
        let mut offsets = Vec::with_capacity(blocks.len());
        let mut dim = 0;
        for b in &blocks {
            offsets.push(dim);
            dim += b.len();
        }
        HomSpace { blocks, offsets, dim }
    }

    fn to_polynomials(&self, ideal: &Ideal, v: &[FieldElement]) -> Vec<Polynomial> {
        let ring = ideal.ring();
        self.blocks
            .iter()
            .zip(&self.offsets)
            .map(|(b, &o)| ring.from_terms(b.iter().zip(&v[o..o + b.len()]).map(|(m, c)| (*m, *c)).collect()))
            .collect()
    }

    /// Coordinates of a normal form sitting in block `k`.
    fn place(&self, ideal: &Ideal, k: usize, nf: &Polynomial, out: &mut [FieldElement]) {
        let c = coordinates(ideal.ring(), nf, &self.blocks[k]);
        out[self.offsets[k]..self.offsets[k] + c.len()].copy_from_slice(&c);
    }
}

/// Matrix of `alpha -> alpha ∘ sigma` from `Hom(F, S/I)_0` to `Hom(G, S/I)_0`,
/// where `sigma: G -> F` is given by its columns.
fn precompose(ideal: &Ideal, from: &HomSpace, to: &HomSpace, sigma: &[Vec<Polynomial>]) -> Matrix {
    let ring = ideal.ring();
    let mut m = Matrix::zeros(to.dim, from.dim);
    for (c, col) in sigma.iter().enumerate() {
        if to.blocks[c].is_empty() {
            continue;
        }
        for (k, entry) in col.iter().enumerate() {
            if entry.is_zero() {
                continue;
            }
            for (t, nu) in from.blocks[k].iter().enumerate() {
                let nf = ideal.normal_form(&ring.mul_term(entry, FieldElement::ONE, nu));
                let mut v = vec![FieldElement::ZERO; to.dim];
                to.place(ideal, c, &nf, &mut v);
                for (r, x) in v.into_iter().enumerate() {
                    if !x.is_zero() {
                        m.add_to(ring.field(), r, from.offsets[k] + t, x);
                    }
                }
            }
        }
    }
    m
}

fn kernel_of(m: &Matrix, dim: usize, field: &crate::field::PrimeField) -> Vec<Vec<FieldElement>> {
    if m.rows() == 0 {
        return (0..dim)
            .map(|k| {
                let mut v = vec![FieldElement::ZERO; dim];
                v[k] = FieldElement::ONE;
                v
            })
            .collect();
    }
    m.kernel(field)
}

fn columns_of(m: &Matrix) -> Vec<Vec<FieldElement>> {
    (0..m.cols()).map(|j| m.column(j)).collect()
}

/// Generators and the first two syzygy layers of an ideal: `sigma_1` is the
/// generator row, `sigma_2: F_2 -> F_1`, `sigma_3: F_3 -> F_2`, each given
/// by columns. `sigma_3` generates the kernel of `sigma_2`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub generators: Vec<Polynomial>,
    pub f1: GradedFreeModule,
    pub sigma2: Vec<Vec<Polynomial>>,
    pub f2: GradedFreeModule,
    pub sigma3: Vec<Vec<Polynomial>>,
    pub f3: GradedFreeModule,
}

impl Presentation {
    /// From the minimal free resolution.
    pub fn minimal(ideal: &Ideal) -> Result<Self> {
        if ideal.is_zero() {
            return Ok(Presentation {
                generators: Vec::new(),
                f1: GradedFreeModule::default(),
                sigma2: Vec::new(),
                f2: GradedFreeModule::default(),
                sigma3: Vec::new(),
                f3: GradedFreeModule::default(),
            });
        }
        let res = minimal_free_resolution(ideal, 3)?;
        let maps = res.maps();
        let layer = |i: usize| -> (Vec<Vec<Polynomial>>, GradedFreeModule) {
            maps.get(i).map(|m| (m.columns().to_vec(), m.source().clone())).unwrap_or_default()
        };
        let (sigma2, f2) = layer(1);
        let (sigma3, f3) = layer(2);
        Ok(Presentation {
            generators: res.generators(),
            f1: maps[0].source().clone(),
            sigma2,
            f2,
            sigma3,
            f3,
        })
    }
}

/// `Hom_S(I, S/I)_0`: tuples `(g_j)` with `g_j ∈ (S/I)_{d_j}` killed by `sigma_2`.
#[derive(Clone, Debug)]
pub struct TangentSpace {
    pub dimension: usize,
    /// Each element assigns a standard-monomial combination to every generator.
    pub basis: Vec<Vec<Polynomial>>,
    pub presentation: Presentation,
}

impl TangentSpace {
    /// Checks that every basis element deforms the generators to first
    /// order: for `f_j + ε g_j`, each syzygy `a` satisfies `Σ a_j g_j ∈ I`.
    pub fn lifts_all_syzygies(&self, ideal: &Ideal) -> bool {
        let ring = ideal.ring();
        self.basis.iter().all(|g| {
            self.presentation.sigma2.iter().all(|a| {
                let mut acc = Polynomial::zero();
                for (aj, gj) in a.iter().zip(g) {
                    acc = ring.add(&acc, &ring.mul(aj, gj));
                }
                ideal_member(&acc, ideal)
            })
        })
    }
}

/// `Ext^1_S(I, S/I)_0` as cycles `beta: F_2 -> S/I` with `beta ∘ sigma_3 = 0`
/// modulo boundaries `alpha ∘ sigma_2`.
#[derive(Clone, Debug)]
pub struct Ext1Space {
    pub dimension: usize,
    pub cycle_basis: Vec<Vec<Polynomial>>,
    pub boundary_rank: usize,
}

fn check_proper(ideal: &Ideal) -> Result<()> {
    if ideal.is_unit() {
        return Err(Error::Degenerate("the unit ideal has no deformations to compute"));
    }
    Ok(())
}

struct Spaces {
    hom1: HomSpace,
    hom2: HomSpace,
    /// `Hom(F_1) -> Hom(F_2)`
    p2: Matrix,
    /// `Hom(F_2) -> Hom(F_3)`
    p3: Matrix,
}

impl Spaces {
    fn new(ideal: &Ideal, p: &Presentation) -> Self {
        let hom1 = HomSpace::new(ideal, &p.f1);
        let hom2 = HomSpace::new(ideal, &p.f2);
        let hom3 = HomSpace::new(ideal, &p.f3);
        let p2 = precompose(ideal, &hom1, &hom2, &p.sigma2);
        let p3 = precompose(ideal, &hom2, &hom3, &p.sigma3);
        Spaces { hom1, hom2, p2, p3 }
    }

    fn tangent(&self, ideal: &Ideal) -> Vec<Vec<FieldElement>> {
        kernel_of(&self.p2, self.hom1.dim, ideal.ring().field())
    }

    fn cycles(&self, ideal: &Ideal) -> Vec<Vec<FieldElement>> {
        kernel_of(&self.p3, self.hom2.dim, ideal.ring().field())
    }

    fn boundaries(&self) -> Vec<Vec<FieldElement>> {
        columns_of(&self.p2)
    }
}

pub fn tangent_space(ideal: &Ideal) -> Result<TangentSpace> {
    check_proper(ideal)?;
    let presentation = Presentation::minimal(ideal)?;
    tangent_space_of(ideal, presentation)
}

/// Tangent space over an explicit presentation, which must generate `I`
/// and its syzygies.
pub fn tangent_space_of(ideal: &Ideal, presentation: Presentation) -> Result<TangentSpace> {
    check_proper(ideal)?;
    let spaces = Spaces::new(ideal, &presentation);
    let kernel = spaces.tangent(ideal);
    let basis = kernel.iter().map(|v| spaces.hom1.to_polynomials(ideal, v)).collect();
    Ok(TangentSpace { dimension: kernel.len(), basis, presentation })
}

pub fn ext1_space(ideal: &Ideal) -> Result<Ext1Space> {
    check_proper(ideal)?;
    ext1_space_of(ideal, &Presentation::minimal(ideal)?)
}

pub fn ext1_space_of(ideal: &Ideal, presentation: &Presentation) -> Result<Ext1Space> {
    check_proper(ideal)?;
    let spaces = Spaces::new(ideal, presentation);
    let field = ideal.ring().field();
    let cycles = spaces.cycles(ideal);
    let boundary_rank = rank_of(field, spaces.hom2.dim, &spaces.boundaries());
    Ok(Ext1Space {
        dimension: cycles.len() - boundary_rank,
        cycle_basis: cycles.iter().map(|v| spaces.hom2.to_polynomials(ideal, v)).collect(),
        boundary_rank,
    })
}

/// Ranks comparing the deformation data of `I_Y` with that of `I_Y + m^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ComparisonReport {
    #[cfg_attr(feature = "serde", serde(rename = "tangent_dim_Y"))]
    pub tangent_dim_y: usize,
    #[cfg_attr(feature = "serde", serde(rename = "tangent_dim_Gamma"))]
    pub tangent_dim_gamma: usize,
    pub tangent_rank: usize,
    pub tangent_bijective: bool,
    #[cfg_attr(feature = "serde", serde(rename = "ext1_dim_Y"))]
    pub ext1_dim_y: usize,
    #[cfg_attr(feature = "serde", serde(rename = "ext1_dim_Gamma"))]
    pub ext1_dim_gamma: usize,
    pub obstruction_kernel_dim: usize,
    pub obstruction_injective: bool,
    pub m: u32,
    pub reg: u32,
}

/// The truncation `I_Y + m^m` with a presentation extending that of `I_Y`:
/// generators `f_Y` followed by the standard monomials of degree `m`,
/// syzygies `sigma_2^Y` (padded) followed by new syzygies of degree `> m`,
/// and likewise one layer up.
pub(crate) fn truncated_presentation(
    ideal_y: &Ideal,
    py: &Presentation,
    m: u32,
) -> Result<(Ideal, Presentation)> {
    let ring = ideal_y.ring();
    let gamma = ideal_sum(ideal_y, &maximal_ideal_power(ring, m as i64)?)?;
    let new_gens: Vec<Polynomial> =
        ideal_y.standard_monomials(m).into_iter().map(|mu| ring.monomial(mu, FieldElement::ONE)).collect();
    let r1 = py.generators.len();
    let mut generators = py.generators.clone();
    generators.extend(new_gens.iter().cloned());
    let mut shifts1 = py.f1.shifts().to_vec();
    shifts1.extend(core::iter::repeat_n(m as i32, new_gens.len()));
    let f1 = GradedFreeModule::new(shifts1);

    let pad = |col: &Vec<Polynomial>, extra: usize| -> Vec<Polynomial> {
        let mut c = col.clone();
        c.extend(core::iter::repeat_n(Polynomial::zero(), extra));
        c
    };

    let mut sigma2: Vec<Vec<Polynomial>> = py.sigma2.iter().map(|c| pad(c, new_gens.len())).collect();
    let mut shifts2 = py.f2.shifts().to_vec();
    if !generators.is_empty() {
        let rows: Vec<Vec<Polynomial>> = generators.iter().map(|g| vec![g.clone()]).collect();
        for col in module_syzygies(ring, &[0], &rows) {
            let d = column_degree(&f1, &col).expect("nonzero syzygy");
            if d > m as i32 {
                sigma2.push(col);
                shifts2.push(d);
            }
        }
    }
    let f2 = GradedFreeModule::new(shifts2);

    let r2 = py.sigma2.len();
    let added2 = sigma2.len() - r2;
    let mut sigma3: Vec<Vec<Polynomial>> = py.sigma3.iter().map(|c| pad(c, added2)).collect();
    let mut shifts3 = py.f3.shifts().to_vec();
    if !sigma2.is_empty() {
        for col in module_syzygies(ring, f1.shifts(), &sigma2) {
            let d = column_degree(&f2, &col).expect("nonzero syzygy");
            if d > m as i32 {
                sigma3.push(col);
                shifts3.push(d);
            }
        }
    }
    debug_assert_eq!(r1 + new_gens.len(), generators.len());
    let f3 = GradedFreeModule::new(shifts3);
    Ok((gamma, Presentation { generators, f1, sigma2, f2, sigma3, f3 }))
}

/// Matrix of `q: Hom(F^Y, S/I_Y)_0 -> Hom(F^Γ, S/I_Γ)_0`, `beta -> (q ∘ beta, 0)`,
/// where the first blocks of `F^Γ` are those of `F^Y`.
fn quotient_map(ideal_y: &Ideal, from: &HomSpace, gamma: &Ideal, to: &HomSpace) -> Matrix {
    let ring = ideal_y.ring();
    let mut m = Matrix::zeros(to.dim, from.dim);
    for (k, block) in from.blocks.iter().enumerate() {
        for (t, nu) in block.iter().enumerate() {
            let nf = gamma.normal_form(&ring.monomial(*nu, FieldElement::ONE));
            let mut v = vec![FieldElement::ZERO; to.dim];
            to.place(gamma, k, &nf, &mut v);
            for (r, x) in v.into_iter().enumerate() {
                if !x.is_zero() {
                    m.set(r, from.offsets[k] + t, x);
                }
            }
        }
    }
    m
}

/// Builds `I_Γ = I_Y + m^m` and compares tangent and obstruction spaces.
///
/// Requires `m >= reg(I_Y) + 2` unless `force` is set.
pub fn compare_truncation(ideal_y: &Ideal, m: u32, force: bool) -> Result<ComparisonReport> {
    check_proper(ideal_y)?;
    let reg = regularity(ideal_y)?;
    if m < 1 {
        return Err(Error::Parameter("truncation degree must be at least 1".into()));
    }
    if !force && m < reg + 2 {
        return Err(Error::BelowRegularityBound { m, reg, required: reg + 2 });
    }
    let py = Presentation::minimal(ideal_y)?;
    let (gamma, pg) = truncated_presentation(ideal_y, &py, m)?;
    let field = ideal_y.ring().field();

    let sy = Spaces::new(ideal_y, &py);
    let sg = Spaces::new(&gamma, &pg);

    // every component landing in (S/I_Γ)_{>= m} vanishes
    let tail_zero = pg.f1.shifts()[py.generators.len()..]
        .iter()
        .chain(&pg.f2.shifts()[py.sigma2.len()..])
        .all(|&s| gamma.standard_monomials(s as u32).is_empty());
    if !tail_zero {
        return Err(Error::Structure("maps into (S/I_Γ)_{>=m} do not vanish".into()));
    }

    // tangent map, expressed in the kernel basis of the Γ side
    let ty = sy.tangent(ideal_y);
    let tg = sg.tangent(&gamma);
    let q1 = quotient_map(ideal_y, &sy.hom1, &gamma, &sg.hom1);
    let images: Vec<Vec<FieldElement>> = ty.iter().map(|v| q1.mul_vec(field, v)).collect();
    let well_defined =
        images.iter().all(|w| sg.p2.rows() == 0 || sg.p2.mul_vec(field, w).iter().all(|c| c.is_zero()));
    let tangent_rank = if well_defined && !tg.is_empty() {
        let basis = Matrix::from_columns(sg.hom1.dim, &tg);
        let coords: Vec<Vec<FieldElement>> =
            images.iter().map(|w| basis.solve(field, w).expect("image lies in the tangent space")).collect();
        rank_of(field, tg.len(), &coords)
    } else {
        rank_of(field, sg.hom1.dim, &images)
    };
    let tangent_bijective = well_defined && tangent_rank == ty.len() && tangent_rank == tg.len();

    // obstruction map on cycle representatives
    let zy = sy.cycles(ideal_y);
    let zg = sg.cycles(&gamma);
    let by = sy.boundaries();
    let bg = sg.boundaries();
    let rank_by = rank_of(field, sy.hom2.dim, &by);
    let rank_bg = rank_of(field, sg.hom2.dim, &bg);
    let q2 = quotient_map(ideal_y, &sy.hom2, &gamma, &sg.hom2);
    let pushed: Vec<Vec<FieldElement>> = zy.iter().map(|v| q2.mul_vec(field, v)).collect();
    let cycles_to_cycles =
        pushed.iter().all(|w| sg.p3.rows() == 0 || sg.p3.mul_vec(field, w).iter().all(|c| c.is_zero()));
    let mut joint = bg.clone();
    joint.extend(pushed.iter().cloned());
    let rank_joint = rank_of(field, sg.hom2.dim, &joint);
    let mut bound_joint = bg.clone();
    bound_joint.extend(by.iter().map(|v| q2.mul_vec(field, v)));
    let boundaries_to_boundaries = rank_of(field, sg.hom2.dim, &bound_joint) == rank_bg;
    // dim{z in Z_Y : q(z) in B_Γ} - dim B_Y
    let obstruction_kernel_dim = (zy.len() + rank_bg - rank_joint).saturating_sub(rank_by);

    Ok(ComparisonReport {
        tangent_dim_y: ty.len(),
        tangent_dim_gamma: tg.len(),
        tangent_rank,
        tangent_bijective,
        ext1_dim_y: zy.len() - rank_by,
        ext1_dim_gamma: zg.len() - rank_bg,
        obstruction_kernel_dim,
        obstruction_injective: obstruction_kernel_dim == 0 && cycles_to_cycles && boundaries_to_boundaries,
        m,
        reg,
    })
}
