//! Truncating a graded ideal by a power of the maximal ideal, and cutting a
//! cone by two generic forms.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::deform::{compare_truncation, ComparisonReport};
use crate::error::{Error, Result};
use crate::groebner::{ideal_sum, maximal_ideal_power, Ideal};
use crate::invariants::{
    betti_table, hilbert_function, hilbert_series, krull_dim, one_minus_t_pow, poly_mul, regularity,
};
use crate::ring::{Polynomial, Ring};

/// `I_Y + m^m`. Unless `force` is set, `m` must be at least `reg(I_Y) + 2`.
pub fn truncate_ideal(ideal_y: &Ideal, m: u32, force: bool) -> Result<Ideal> {
    if ideal_y.is_unit() {
        return Err(Error::Degenerate("cannot truncate the unit ideal"));
    }
    if m == 0 {
        return Err(Error::Parameter("truncation degree must be at least 1".into()));
    }
    if !force {
        let reg = regularity(ideal_y)?;
        if m < reg + 2 {
            return Err(Error::BelowRegularityBound { m, reg, required: reg + 2 });
        }
    }
    ideal_sum(ideal_y, &maximal_ideal_power(ideal_y.ring(), m as i64)?)
}

/// `h_Y(d)` below `m`, zero from `m` on.
pub fn predicted_hilbert_function(h_y: impl Fn(u32) -> u64, m: u32, d: u32) -> u64 {
    if d < m {
        h_y(d)
    } else {
        0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TruncationReport {
    pub m: u32,
    pub reg: u32,
    pub degree_bound: u32,
    pub hilbert_ok: bool,
    pub first_hilbert_failure: Option<u32>,
    pub resolution_shape_ok: bool,
    /// `t_1, t_2, ...`: the extra Betti numbers at homological index `i - 1`, degree `m + i - 1`.
    pub strand_multiplicities: Vec<usize>,
    pub comparison: ComparisonReport,
    pub warnings: Vec<String>,
}

impl TruncationReport {
    pub fn passed(&self) -> bool {
        self.hilbert_ok
            && self.resolution_shape_ok
            && self.comparison.tangent_bijective
            && self.comparison.obstruction_injective
    }
}

/// Checks the Hilbert function of `I_Y + m^m` in degrees `<= degree_bound`,
/// the shape of its Betti table, and the deformation comparison.
///
/// The shape holds when every entry of the table of `I_Y` sits below the
/// strand `j = m + i`, and the table of the truncation is that of `I_Y`
/// plus entries on the strand.
pub fn verify_truncation(
    ideal_y: &Ideal,
    m: u32,
    degree_bound: u32,
    force: bool,
) -> Result<TruncationReport> {
    let gamma = truncate_ideal(ideal_y, m, force)?;
    let reg = regularity(ideal_y)?;

    let first_hilbert_failure = (0..=degree_bound).find(|&d| {
        hilbert_function(&gamma, d) != predicted_hilbert_function(|e| hilbert_function(ideal_y, e), m, d)
    });

    let table_y = betti_table(ideal_y)?;
    let table_g = betti_table(&gamma)?;
    let on_strand = |i: usize, j: i32| j == m as i32 + i as i32;
    let separated = table_y.entries().iter().all(|e| e.j < m as i32 + e.i as i32);
    let off_strand_equal = table_g
        .entries()
        .iter()
        .filter(|e| !on_strand(e.i, e.j))
        .all(|e| table_y.get(e.i, e.j) == e.beta)
        && table_y.entries().iter().filter(|e| !on_strand(e.i, e.j)).all(|e| table_g.get(e.i, e.j) == e.beta);
    let length = table_g.length().max(table_y.length());
    let strand_multiplicities: Vec<usize> = (0..length)
        .map(|i| table_g.get(i, m as i32 + i as i32).saturating_sub(table_y.get(i, m as i32 + i as i32)))
        .collect();

    let mut warnings = Vec::new();
    for (i, &t) in strand_multiplicities.iter().enumerate() {
        if t == 0 {
            warnings.push(format!("strand multiplicity t_{} is zero", i + 1));
        }
    }
    let comparison = compare_truncation(ideal_y, m, force)?;
    Ok(TruncationReport {
        m,
        reg,
        degree_bound,
        hilbert_ok: first_hilbert_failure.is_none(),
        first_hilbert_failure,
        resolution_shape_ok: separated && off_strand_equal,
        strand_multiplicities,
        comparison,
        warnings,
    })
}

fn draw_forms(rng: &mut ChaCha8Rng, ring: &Ring, degree: u32, count: usize) -> Vec<Polynomial> {
    let field = ring.field();
    let monomials = ring.monomials_of_degree(degree);
    (0..count)
        .map(|_| {
            let terms = monomials
                .iter()
                .map(|&mono| (mono, field.reduce(rng.gen_range(0..field.modulus()))))
                .collect();
            ring.from_terms(terms)
        })
        .collect()
}

/// `count` forms of the given degree with coefficients from a ChaCha8 stream
/// seeded by `seed`, one monomial at a time in descending order.
pub fn random_forms(ring: &Ring, degree: u32, count: usize, seed: u64) -> Vec<Polynomial> {
    draw_forms(&mut ChaCha8Rng::seed_from_u64(seed), ring, degree, count)
}

/// Whether two forms of equal degree `m` are a regular sequence on `S/I`,
/// by comparing the Hilbert series numerator of `S/(I + (g_1, g_2))` with
/// that of `S/I` times `(1 - t^m)^2`.
pub fn is_regular_sequence(ideal: &Ideal, forms: &[Polynomial; 2]) -> Result<bool> {
    let d0 = forms[0].homogeneous_degree().map_err(|e| Error::Parameter(format!("first form: {e}")))?;
    let d1 = forms[1].homogeneous_degree().map_err(|e| Error::Parameter(format!("second form: {e}")))?;
    if d0 != d1 {
        return Err(Error::Parameter(format!("forms have different degrees {d0} and {d1}")));
    }
    let extra = Ideal::new(ideal.ring().clone(), forms.to_vec())?;
    let cut = ideal_sum(ideal, &extra)?;
    let factor = one_minus_t_pow(d0);
    let mut expected = poly_mul(&poly_mul(&hilbert_series(ideal).numerator, &factor), &factor);
    while expected.last() == Some(&0) {
        expected.pop();
    }
    Ok(hilbert_series(&cut).numerator == expected)
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConeCurveReport {
    pub m: u32,
    pub seed: u64,
    pub trials_used: u32,
    pub degrees: [u32; 2],
    pub hs_ok: bool,
    pub dim_ok: bool,
    pub dim_x: usize,
    pub dim_c: usize,
    pub numerator_x: Vec<i64>,
    pub numerator_c: Vec<i64>,
    pub warnings: Vec<String>,
}

impl ConeCurveReport {
    pub fn passed(&self) -> bool {
        self.hs_ok && self.dim_ok
    }
}

/// `I_X + (g_1, g_2)` for two random forms of degree `m` forming a regular
/// sequence on `S/I_X`, trying at most `max_trials` pairs from one seeded stream.
pub fn cone_curve(ideal_x: &Ideal, m: u32, seed: u64, max_trials: u32) -> Result<(Ideal, ConeCurveReport)> {
    if ideal_x.is_unit() {
        return Err(Error::Degenerate("the unit ideal defines the empty cone"));
    }
    let reg = regularity(ideal_x)?;
    if m < reg + 2 {
        return Err(Error::BelowRegularityBound { m, reg, required: reg + 2 });
    }
    let dim_x = krull_dim(ideal_x)?;
    if dim_x < 2 {
        return Err(Error::Parameter(format!(
            "S/I has dimension {dim_x}; two forms need dimension at least 2"
        )));
    }
    let mut warnings = Vec::new();
    if dim_x != 3 {
        warnings.push(format!("S/I has dimension {dim_x}, not 3; the result is not a curve cone"));
    }
    let ring = ideal_x.ring();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 1..=max_trials {
        let forms = draw_forms(&mut rng, ring, m, 2);
        let pair = [forms[0].clone(), forms[1].clone()];
        if pair.iter().any(Polynomial::is_zero) || !is_regular_sequence(ideal_x, &pair)? {
            continue;
        }
        let ideal_c = ideal_sum(ideal_x, &Ideal::new(ring.clone(), forms)?)?;
        let dim_c = krull_dim(&ideal_c)?;
        let report = ConeCurveReport {
            m,
            seed,
            trials_used: trial,
            degrees: [m, m],
            hs_ok: true,
            dim_ok: dim_c + 2 == dim_x,
            dim_x,
            dim_c,
            numerator_x: hilbert_series(ideal_x).numerator,
            numerator_c: hilbert_series(&ideal_c).numerator,
            warnings,
        };
        return Ok((ideal_c, report));
    }
    Err(Error::GenericityFailure { trials: max_trials })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use alloc::vec;

    #[test]
    fn truncation_examples() {
        let m1 = corpus::maximal_power(3, 1);
        assert_eq!(truncate_ideal(&m1, 3, false).unwrap().groebner_basis(), m1.groebner_basis());
        let g = truncate_ideal(&corpus::zero_ideal(2), 2, false).unwrap();
        assert_eq!(g.groebner_basis(), corpus::monomial_square().groebner_basis());
        assert_eq!((0..4).map(|d| hilbert_function(&g, d)).collect::<Vec<_>>(), vec![1, 2, 0, 0]);
        let tc = corpus::twisted_cubic();
        let g = truncate_ideal(&tc, 4, false).unwrap();
        assert_eq!((0..6).map(|d| hilbert_function(&g, d)).collect::<Vec<_>>(), vec![1, 4, 7, 10, 0, 0]);
        assert_eq!(krull_dim(&g).unwrap(), 0);
        assert!(matches!(
            truncate_ideal(&tc, 3, false),
            Err(Error::BelowRegularityBound { required: 4, .. })
        ));
        assert!(truncate_ideal(&tc, 3, true).is_ok());
    }

    #[test]
    fn predicted_values() {
        assert_eq!(predicted_hilbert_function(|d| 3 * d as u64 + 1, 4, 3), 10);
        assert_eq!(predicted_hilbert_function(|_| 99, 4, 4), 0);
        assert_eq!(predicted_hilbert_function(|d| d as u64 + 1, 1, 0), 1);
    }

    #[test]
    fn verify_twisted_cubic() {
        let r = verify_truncation(&corpus::twisted_cubic(), 4, 8, false).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.strand_multiplicities[0], 13);
    }

    #[test]
    fn verify_complete_intersection() {
        let r = verify_truncation(&corpus::complete_intersection(2), 5, 10, false).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn forced_small_m_breaks_shape_only() {
        let r = verify_truncation(&corpus::twisted_cubic(), 2, 8, true).unwrap();
        assert!(r.hilbert_ok);
        assert!(!r.resolution_shape_ok);
        assert!(!r.passed());
    }

    #[test]
    fn random_forms_are_deterministic() {
        let r = Ring::standard(2);
        let a = random_forms(&r, 2, 2, 7);
        assert_eq!(a, random_forms(&r, 2, 2, 7));
        assert_ne!(a[0], a[1]);
        let support = r.monomials_of_degree(2);
        assert!(a.iter().all(|f| f.terms().iter().all(|(m, _)| support.contains(m))));
        assert_eq!(random_forms(&r, 2, 1, 7)[0], a[0]);
    }

    #[test]
    fn regular_sequence_examples() {
        let r3 = Ring::standard(3);
        let z = corpus::zero_ideal(3);
        let x2 = crate::ring::parse_polynomial(&r3, "x^2").unwrap();
        let y2 = crate::ring::parse_polynomial(&r3, "y^2").unwrap();
        assert!(is_regular_sequence(&z, &[x2.clone(), y2.clone()]).unwrap());
        assert_eq!(
            hilbert_series(&Ideal::new(r3.clone(), vec![x2.clone(), y2]).unwrap()).numerator,
            vec![1, 0, -2, 0, 1]
        );

        let r2 = Ring::standard(2);
        let z2 = corpus::zero_ideal(2);
        let a = crate::ring::parse_polynomial(&r2, "x^2").unwrap();
        let b = crate::ring::parse_polynomial(&r2, "x*y").unwrap();
        assert!(!is_regular_sequence(&z2, &[a.clone(), b]).unwrap());

        let lin = crate::ring::parse_polynomial(&r2, "y").unwrap();
        assert!(matches!(is_regular_sequence(&z2, &[a, lin]), Err(Error::Parameter(_))));
    }

    #[test]
    fn cone_over_quadric() {
        let (ic, rep) = cone_curve(&corpus::quadric_cone(), 4, 1, 5).unwrap();
        assert!(rep.passed());
        assert!(rep.trials_used <= 5);
        assert_eq!(krull_dim(&ic).unwrap(), 1);
        let expected = poly_mul(&poly_mul(&[1, 0, -1], &one_minus_t_pow(4)), &one_minus_t_pow(4));
        assert_eq!(rep.numerator_c, expected);
        assert!(rep.warnings.is_empty());
        assert_eq!(cone_curve(&corpus::quadric_cone(), 4, 1, 5).unwrap().1, rep);
    }

    #[test]
    fn cone_over_affine_space() {
        let (_, rep) = cone_curve(&corpus::zero_ideal(3), 2, 3, 5).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.numerator_c, vec![1, 0, -2, 0, 1]);
        assert!(matches!(
            cone_curve(&corpus::zero_ideal(3), 2, 3, 0),
            Err(Error::GenericityFailure { trials: 0 })
        ));
    }
}
