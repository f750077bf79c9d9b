//! Named example ideals over `F_32003`.

use alloc::vec::Vec;

use crate::field::PrimeField;
use crate::groebner::{maximal_ideal_power, Ideal};
use crate::ring::{MonomialOrder, Ring};

fn ring(names: &[&str]) -> Ring {
    Ring::new(PrimeField::default(), MonomialOrder::Grevlex, names).expect("valid ring")
}

/// The affine cone over the twisted cubic in `k[x, y, z, w]`.
pub fn twisted_cubic() -> Ideal {
    Ideal::parse(ring(&["x", "y", "z", "w"]), &["x*z - y^2", "x*w - y*z", "y*w - z^2"]).unwrap()
}

/// `x0*x3 - x1*x2` in four variables.
pub fn quadric_cone() -> Ideal {
    Ideal::parse(ring(&["x0", "x1", "x2", "x3"]), &["x0*x3 - x1*x2"]).unwrap()
}

pub fn complete_intersection(power: u32) -> Ideal {
    let gens = [alloc::format!("x^{power}"), alloc::format!("y^{power}")];
    Ideal::parse(ring(&["x", "y"]), &gens).unwrap()
}

/// `𝔪^power` in `n` variables.
pub fn maximal_power(n: usize, power: i64) -> Ideal {
    maximal_ideal_power(&Ring::standard(n), power).unwrap()
}

pub fn zero_ideal(n: usize) -> Ideal {
    Ideal::zero(Ring::standard(n))
}

/// `(x^2, x*y, y^2)`.
pub fn monomial_square() -> Ideal {
    Ideal::parse(ring(&["x", "y"]), &["x^2", "x*y", "y^2"]).unwrap()
}

/// All named ideals with a short label.
pub fn all() -> Vec<(&'static str, Ideal)> {
    alloc::vec![
        ("twisted_cubic", twisted_cubic()),
        ("quadric_cone", quadric_cone()),
        ("ci_2_2", complete_intersection(2)),
        ("ci_3_3", complete_intersection(3)),
        ("max_n2", maximal_power(2, 1)),
        ("max_sq_n2", maximal_power(2, 2)),
        ("max_n3", maximal_power(3, 1)),
        ("max_sq_n3", maximal_power(3, 2)),
        ("monomial_square", monomial_square()),
        ("zero_n2", zero_ideal(2)),
        ("zero_n3", zero_ideal(3)),
    ]
}
