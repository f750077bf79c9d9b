//! Ideals, division, reduced Gröbner bases and syzygies.

mod engine;
mod vector;

use alloc::vec::Vec;
use core::cell::OnceCell;

use crate::error::{Error, Result};
use crate::ring::{GradedFreeModule, Monomial, Polynomial, Ring};

use engine::Engine;
use vector::{ModuleOrder, Vector};

/// A homogeneous ideal given by generators, with its reduced Gröbner basis
/// computed on first use.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    gb: OnceCell<Vec<Polynomial>>,
}

impl PartialEq for Ideal {
    /// Same ring and generator list; not ideal equality.
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.generators == other.generators
    }
}

impl Ideal {
    /// Zero generators are dropped; the rest must be homogeneous.
    pub fn new(ring: Ring, generators: Vec<Polynomial>) -> Result<Self> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            ring.check_member(&g)?;
            if g.is_zero() {
                continue;
            }
            g.homogeneous_degree()?;
            gens.push(ring.normalize(&g));
        }
        Ok(Ideal { ring, generators: gens, gb: OnceCell::new() })
    }

    /// Parses each generator with [`crate::ring::parse_polynomial`].
    pub fn parse<S: AsRef<str>>(ring: Ring, generators: &[S]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|g| {
                crate::ring::parse_polynomial(&ring, g.as_ref())
                    .map_err(|e| Error::Parameter(alloc::format!("`{}`: {e}", g.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn zero(ring: Ring) -> Self {
        Ideal { ring, generators: Vec::new(), gb: OnceCell::new() }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn generator_degrees(&self) -> Vec<u32> {
        self.generators.iter().map(|g| g.homogeneous_degree().expect("homogeneous")).collect()
    }

    /// The same generators read in a ring with another monomial order.
    pub fn with_order(&self, order: crate::ring::MonomialOrder) -> Ideal {
        let ring = self.ring.with_order(order);
        let generators = self.generators.iter().map(|g| ring.normalize(g)).collect();
        Ideal { ring, generators, gb: OnceCell::new() }
    }

    /// Same ideal, generators listed in another order.
    pub fn permuted(&self, perm: &[usize]) -> Ideal {
        let generators = perm.iter().map(|&k| self.generators[k].clone()).collect();
        Ideal { ring: self.ring.clone(), generators, gb: OnceCell::new() }
    }

    /// The reduced Gröbner basis, computed once.
    pub fn groebner_basis(&self) -> &[Polynomial] {
        self.gb.get_or_init(|| buchberger_uncached(&self.ring, &self.generators))
    }

    /// Lead monomials of the reduced Gröbner basis.
    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.groebner_basis().iter().map(|g| *g.lead_monomial().unwrap()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Whether the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.groebner_basis().iter().any(Polynomial::is_unit)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        ideal_member(f, self)
    }

    /// Remainder of `f` on the reduced Gröbner basis.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        divide(&self.ring, f, self.groebner_basis()).1
    }

    /// Whether `m` avoids every lead monomial of the Gröbner basis.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.groebner_basis().iter().any(|g| g.lead_monomial().unwrap().divides(m))
    }

    /// Monomials of degree `d` outside the lead-term ideal, descending.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        let leads = self.lead_monomials();
        self.ring.monomials_of_degree(d).into_iter().filter(|m| !leads.iter().any(|l| l.divides(m))).collect()
    }
}

fn poly_order(ring: &Ring) -> ModuleOrder<'_> {
    ModuleOrder { ring, shifts: &[0] }
}

fn to_vector(ring: &Ring, f: &Polynomial) -> Vector {
    let _ = ring;
    Vector { terms: f.terms().iter().map(|&(m, c)| (0, m, c)).collect() }
}

impl Vector {
    fn into_poly(self) -> Polynomial {
        Polynomial { terms: self.terms.into_iter().map(|(_, m, c)| (m, c)).collect() }
    }
}

/// Division of `f` by the list `divisors`: `f = Σ q_i g_i + r` with no term of
/// `r` divisible by any lead term; always reduces by the first divisor found.
pub fn divide(ring: &Ring, f: &Polynomial, divisors: &[Polynomial]) -> (Vec<Polynomial>, Polynomial) {
    let ord = poly_order(ring);
    let engine = Engine { ord, rep_ord: ord, track: false };
    let basis: Vec<Vector> = divisors.iter().map(|g| to_vector(ring, g)).collect();
    let (q, r) = engine.divide(&to_vector(ring, f), &basis);
    (q, r.into_poly())
}

/// Reduced Gröbner basis of `ideal`, cached on the ideal.
pub fn buchberger(ideal: &Ideal) -> Vec<Polynomial> {
    ideal.groebner_basis().to_vec()
}

fn buchberger_uncached(ring: &Ring, generators: &[Polynomial]) -> Vec<Polynomial> {
    let ord = poly_order(ring);
    let engine = Engine { ord, rep_ord: ord, track: false };
    let inputs: Vec<Vector> = generators.iter().map(|g| to_vector(ring, g)).collect();
    engine.groebner(&inputs).elems.into_iter().map(Vector::into_poly).collect()
}

/// S-polynomial of two nonzero polynomials, normalized by lead coefficients.
pub fn s_polynomial(ring: &Ring, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let field = ring.field();
    let (mf, cf) = *f.lead().expect("nonzero");
    let (mg, cg) = *g.lead().expect("nonzero");
    let l = mf.lcm(&mg);
    let a = ring.mul_term(f, field.inv(cf).unwrap(), &mf.quotient_of(&l).unwrap());
    let b = ring.mul_term(g, field.inv(cg).unwrap(), &mg.quotient_of(&l).unwrap());
    ring.sub(&a, &b)
}

pub fn ideal_member(f: &Polynomial, ideal: &Ideal) -> bool {
    f.is_zero() || ideal.normal_form(f).is_zero()
}

/// `I + J`: concatenated generators.
pub fn ideal_sum(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if i.ring != j.ring {
        return Err(Error::Structure("ideals live in different rings".into()));
    }
    let mut gens = i.generators.clone();
    gens.extend(j.generators.iter().cloned());
    Ok(Ideal { ring: i.ring.clone(), generators: gens, gb: OnceCell::new() })
}

/// `𝔪^m`, generated by all monomials of degree `m` in descending order.
pub fn maximal_ideal_power(ring: &Ring, m: i64) -> Result<Ideal> {
    if m <= 0 {
        return Err(Error::Parameter(alloc::format!("power of the maximal ideal must be positive, got {m}")));
    }
    let gens = ring
        .monomials_of_degree(m as u32)
        .into_iter()
        .map(|mono| ring.monomial(mono, crate::field::FieldElement::ONE))
        .collect();
    Ok(Ideal { ring: ring.clone(), generators: gens, gb: OnceCell::new() })
}

/// Generators of the syzygies of an ideal's generator list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyBasis {
    /// One shift per generator: `⊕ S(-deg f_j)`.
    pub ambient: GradedFreeModule,
    /// Each element `(a_1, ..., a_s)` satisfies `Σ a_j f_j = 0`.
    pub elements: Vec<Vec<Polynomial>>,
}

impl SyzygyBasis {
    /// Degree of each element as a map into the ideal.
    pub fn degrees(&self) -> Vec<i32> {
        self.elements.iter().map(|v| column_degree(&self.ambient, v).unwrap_or(0)).collect()
    }
}

/// Degree of a homogeneous column in a graded free module.
pub fn column_degree(module: &GradedFreeModule, column: &[Polynomial]) -> Option<i32> {
    column.iter().enumerate().find_map(|(i, p)| p.lead().map(|(m, _)| m.degree() as i32 + module.shift(i)))
}

pub fn syzygies(ideal: &Ideal) -> SyzygyBasis {
    let ring = &ideal.ring;
    let shifts: Vec<i32> = ideal.generator_degrees().into_iter().map(|d| d as i32).collect();
    let columns: Vec<Vec<Polynomial>> = ideal.generators.iter().map(|g| alloc::vec![g.clone()]).collect();
    let elements = module_syzygies(ring, &[0], &columns);
    SyzygyBasis { ambient: GradedFreeModule::new(shifts), elements }
}

/// Generators of `{a : Σ a_j v_j = 0}` for homogeneous nonzero columns `v_j`
/// of the free module with the given shifts.
///
/// Computes a Gröbner basis with the change of basis recorded, takes the
/// S-pair syzygies of the basis and maps them back to the inputs, then adds
/// `e_j - A·b_j` where `b_j` expresses `v_j` over the basis.
pub fn module_syzygies(ring: &Ring, shifts: &[i32], columns: &[Vec<Polynomial>]) -> Vec<Vec<Polynomial>> {
    let ord = ModuleOrder { ring, shifts };
    let inputs: Vec<Vector> = columns.iter().map(|c| Vector::from_column(&ord, c)).collect();
    assert!(inputs.iter().all(|v| !v.is_zero()), "syzygy inputs must be nonzero");
    let input_shifts: Vec<i32> = inputs.iter().map(|v| v.degree(shifts).unwrap()).collect();
    let rep_ord = ModuleOrder { ring, shifts: &input_shifts };
    let engine = Engine { ord, rep_ord, track: true };
    let basis = engine.groebner(&inputs);

    let basis_shifts: Vec<i32> = basis.elems.iter().map(|v| v.degree(shifts).unwrap()).collect();
    let syz_ord = ModuleOrder { ring, shifts: &basis_shifts };
    let frame = engine.basis_syzygies(&basis.elems, &syz_ord);

    let field = ring.field();
    let mut out: Vec<Vector> = Vec::new();
    for z in frame {
        let mut v = Vector::zero();
        for &(k, m, c) in &z.terms {
            v = v.add_scaled(&rep_ord, c, &m, &basis.reps[k]);
        }
        out.push(v);
    }
    let one = Monomial::one(ring.nvars());
    for (j, input) in inputs.iter().enumerate() {
        let (quotients, rem) = engine.divide(input, &basis.elems);
        debug_assert!(rem.is_zero());
        let mut v = Vector::term(j, one, crate::field::FieldElement::ONE);
        for (k, q) in quotients.iter().enumerate() {
            for &(m, c) in q.terms() {
                v = v.add_scaled(&rep_ord, field.neg(c), &m, &basis.reps[k]);
            }
        }
        out.push(v);
    }
    let mut seen: Vec<Vector> = Vec::new();
    for v in out {
        if v.is_zero() || seen.contains(&v) {
            continue;
        }
        seen.push(v);
    }
    // lowest degree first
    seen.sort_by_key(|v| v.degree(&input_shifts).unwrap());
    seen.into_iter().map(|v| v.to_column(ring, columns.len())).collect()
}

/// Checks `Σ a_j v_j = 0` for a candidate syzygy.
pub fn is_syzygy(ring: &Ring, columns: &[Vec<Polynomial>], a: &[Polynomial]) -> bool {
    let rank = columns.first().map_or(0, Vec::len);
    let mut acc = alloc::vec![Polynomial::zero(); rank];
    for (coef, col) in a.iter().zip(columns) {
        for (o, e) in acc.iter_mut().zip(col) {
            *o = ring.add(o, &ring.mul(coef, e));
        }
    }
    acc.iter().all(Polynomial::is_zero)
}
