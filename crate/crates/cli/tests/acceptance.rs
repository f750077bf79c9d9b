//! Acceptance suite. Each criterion prints one `PASS`/`FAIL` line with its
//! runtime; the test fails if any criterion fails or exceeds its time limit.
//!
//! Run with `cargo test -p punctual --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use punctual_core::corpus;
use punctual_core::deform::{ext1_space, tangent_space};
use punctual_core::groebner::syzygies;
use punctual_core::invariants::{
    betti_table, hilbert_function, hilbert_series, krull_dim, minimal_free_resolution, one_minus_t_pow,
    quotient_regularity, regularity,
};
use punctual_core::linalg::rank_of;
use punctual_core::oracle::{betti_bruteforce, hf_bruteforce, syzygies_bruteforce, tangent_bruteforce};
use punctual_core::strata::{cone_curve, predicted_hilbert_function, truncate_ideal, verify_truncation};
use punctual_core::{FieldElement, Ideal, MonomialOrder};
use rand::seq::SliceRandom;
use rand::SeedableRng;

// Time limits per criterion. "Per ideal" limits are multiplied by the corpus size.
const LIMIT_HILBERT: Duration = Duration::from_secs(30);
const LIMIT_PER_IDEAL: Duration = Duration::from_secs(60);
const LIMIT_CONE: Duration = Duration::from_secs(30);
const LIMIT_ORACLE: Duration = Duration::from_secs(300);
const LIMIT_STRUCTURAL: Duration = Duration::from_secs(300);
const LIMIT_NEGATIVE: Duration = Duration::from_secs(10);

// Search and grid parameters.
const CONE_MAX_TRIALS: u32 = 5;
const CONE_SEED: u64 = 1;
const ORACLE_HF_DEGREE: u32 = 12;
const SHUFFLES: usize = 10;
const SHUFFLE_SEED: u64 = 2024;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Each corpus ideal with its regularity.
fn corpus_with_reg() -> Vec<(&'static str, Ideal, u32)> {
    corpus::all()
        .into_iter()
        .map(|(name, i)| {
            let reg = regularity(&i).unwrap();
            (name, i, reg)
        })
        .collect()
}

fn piecewise_hilbert() -> Outcome {
    let mut checked = 0;
    for (name, y, reg) in corpus_with_reg() {
        for m in 1..=reg + 4 {
            let g = truncate_ideal(&y, m, true).map_err(|e| format!("{name} m={m}: {e}"))?;
            for d in 0..=reg + m + 4 {
                let got = hilbert_function(&g, d);
                let want = predicted_hilbert_function(|e| hilbert_function(&y, e), m, d);
                check(got == want, || format!("{name} m={m} d={d}: {got} != {want}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} values"))
}

fn resolution_shape() -> Outcome {
    let mut cases = 0;
    for (name, y, reg) in corpus_with_reg() {
        for m in [reg + 2, reg + 3] {
            let r = verify_truncation(&y, m, reg + m + 4, false).map_err(|e| format!("{name} m={m}: {e}"))?;
            check(r.resolution_shape_ok, || format!("{name} m={m}: shape check failed"))?;
            let t1 = r.strand_multiplicities.first().copied().unwrap_or(0) as u64;
            let hm = hilbert_function(&y, m);
            check(t1 == hm, || format!("{name} m={m}: t_1 = {t1} but h_m = {hm}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (ideal, m) pairs"))
}

fn tangent_bijection() -> Outcome {
    let mut cases = 0;
    for (name, y, reg) in corpus_with_reg() {
        for m in [reg + 2, reg + 3] {
            let r = verify_truncation(&y, m, reg + m + 4, false).map_err(|e| format!("{name} m={m}: {e}"))?;
            let c = &r.comparison;
            check(c.tangent_dim_y == c.tangent_dim_gamma, || {
                format!("{name} m={m}: dims {} vs {}", c.tangent_dim_y, c.tangent_dim_gamma)
            })?;
            check(c.tangent_bijective && c.tangent_rank == c.tangent_dim_y, || {
                format!(
                    "{name} m={m}: rank {} of a {}x{} matrix",
                    c.tangent_rank, c.tangent_dim_gamma, c.tangent_dim_y
                )
            })?;
            let g = truncate_ideal(&y, m, false).unwrap();
            let oy = tangent_bruteforce(&y, reg + 2);
            let og = tangent_bruteforce(&g, m + 2);
            check(oy == c.tangent_dim_y && og == c.tangent_dim_gamma, || {
                format!("{name} m={m}: oracle {oy}/{og}, engine {}/{}", c.tangent_dim_y, c.tangent_dim_gamma)
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (ideal, m) pairs"))
}

fn obstruction_injection() -> Outcome {
    let mut cases = 0;
    for (name, y, reg) in corpus_with_reg() {
        for m in [reg + 2, reg + 3] {
            let r = verify_truncation(&y, m, reg + m + 4, false).map_err(|e| format!("{name} m={m}: {e}"))?;
            let c = &r.comparison;
            check(c.obstruction_kernel_dim == 0 && c.obstruction_injective, || {
                format!("{name} m={m}: kernel dimension {}", c.obstruction_kernel_dim)
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (ideal, m) pairs"))
}

fn cone_curves() -> Outcome {
    let mut notes = Vec::new();
    for (name, x) in [("quadric_cone", corpus::quadric_cone()), ("zero_n3", corpus::zero_ideal(3))] {
        let m = regularity(&x).unwrap() + 2;
        let (ic, r) = cone_curve(&x, m, CONE_SEED, CONE_MAX_TRIALS).map_err(|e| format!("{name}: {e}"))?;
        check(r.trials_used <= CONE_MAX_TRIALS, || format!("{name}: {} trials", r.trials_used))?;
        let f = one_minus_t_pow(m);
        let mut want = mul(&mul(&hilbert_series(&x).numerator, &f), &f);
        while want.last() == Some(&0) {
            want.pop();
        }
        let got = hilbert_series(&ic).numerator;
        check(got == want, || format!("{name}: numerator {got:?} != {want:?}"))?;
        let (dx, dc) = (krull_dim(&x).unwrap(), krull_dim(&ic).unwrap());
        check(dx == dc + 2, || format!("{name}: dimension {dx} -> {dc}"))?;
        let (_, again) = cone_curve(&x, m, CONE_SEED, CONE_MAX_TRIALS).unwrap();
        check(again == r, || format!("{name}: rerun with the same seed differs"))?;
        notes.push(format!("{name} m={m} trials={}", r.trials_used));
    }
    Ok(notes.join(", "))
}

fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Rank in degree `e` of the submodule spanned by the engine's syzygies.
fn engine_syzygy_rank(ideal: &Ideal, e: u32) -> usize {
    let ring = ideal.ring();
    let mut basis = Vec::new();
    for (j, &d) in ideal.generator_degrees().iter().enumerate() {
        if e >= d {
            basis.extend(ring.monomials_of_degree(e - d).into_iter().map(|m| (j, m)));
        }
    }
    let syz = syzygies(ideal);
    let mut rows = Vec::new();
    for (col, deg) in syz.elements.iter().zip(syz.degrees()) {
        if deg > e as i32 {
            continue;
        }
        for mu in ring.monomials_of_degree(e - deg as u32) {
            let mut v = vec![FieldElement::ZERO; basis.len()];
            for (j, p) in col.iter().enumerate() {
                for (m, c) in ring.mul_term(p, FieldElement::ONE, &mu).terms() {
                    let k = basis.iter().position(|(bj, bm)| *bj == j && bm == m).unwrap();
                    v[k] = *c;
                }
            }
            rows.push(v);
        }
    }
    rank_of(ring.field(), basis.len(), &rows)
}

fn oracle_equivalence() -> Outcome {
    let mut compared = 0;
    for (name, i, reg) in corpus_with_reg() {
        let n = i.ring().nvars() as u32;
        for d in 0..=ORACLE_HF_DEGREE {
            let (e, o) = (hilbert_function(&i, d), hf_bruteforce(&i, d));
            check(e == o, || format!("{name} h_{d}: engine {e}, oracle {o}"))?;
            compared += 1;
        }
        for (e, kernel) in syzygies_bruteforce(&i, reg + 3) {
            let rank = engine_syzygy_rank(&i, e);
            check(rank == kernel.len(), || {
                format!("{name} syzygies in degree {e}: {rank} vs {}", kernel.len())
            })?;
            compared += 1;
        }
        if !i.is_zero() {
            let dense = betti_bruteforce(&i, n as usize + 1, reg + n + 1).betti;
            let engine = betti_table(&i).unwrap();
            check(dense == engine, || {
                format!("{name}: Betti tables differ\n{}\n{}", engine.render(), dense.render())
            })?;
            compared += 1;
        }
        let (e, o) = (tangent_space(&i).unwrap().dimension, tangent_bruteforce(&i, reg + 2));
        check(e == o, || format!("{name} tangent: engine {e}, oracle {o}"))?;
        compared += 1;
    }
    Ok(format!("{compared} comparisons"))
}

fn structural() -> Outcome {
    let mut rng = rand::rngs::StdRng::seed_from_u64(SHUFFLE_SEED);
    for (name, i, reg) in corpus_with_reg() {
        // confluence under generator shuffles
        let gb = i.groebner_basis().to_vec();
        let mut perm: Vec<usize> = (0..i.generators().len()).collect();
        for _ in 0..SHUFFLES {
            perm.shuffle(&mut rng);
            let shuffled = i.permuted(&perm);
            check(shuffled.groebner_basis() == gb.as_slice(), || {
                format!("{name}: basis depends on order {perm:?}")
            })?;
        }
        if i.is_zero() {
            continue;
        }
        let ring = i.ring();
        let res = minimal_free_resolution(&i, ring.nvars() + 1).unwrap();
        check(res.composes_to_zero(), || format!("{name}: consecutive maps do not compose to zero"))?;
        check(res.maps().iter().all(|m| !m.has_unit_entry()), || {
            format!("{name}: unit entry in a minimal resolution")
        })?;
        // exactness on graded pieces: rank(d_k) + rank(d_{k+1}) = dim F_k in each degree
        let maps = res.maps();
        for e in 0..=(reg + ring.nvars() as u32 + 1) as i32 {
            let first = maps[0].piece_matrix(ring, e).rank(ring.field());
            let dim_s = maps[0].target().dim_in_degree(ring, e);
            let h = hilbert_function(&i, e as u32) as usize;
            check(dim_s - first == h, || format!("{name}: image of F_1 in degree {e}"))?;
            for k in 0..maps.len() {
                let dim = maps[k].source().dim_in_degree(ring, e);
                let out = maps[k].piece_matrix(ring, e).rank(ring.field());
                let inc = maps.get(k + 1).map_or(0, |m| m.piece_matrix(ring, e).rank(ring.field()));
                check(out + inc == dim, || format!("{name}: not exact at F_{} in degree {e}", k + 1))?;
            }
        }
        let qr = quotient_regularity(&i).unwrap();
        check(reg == qr + 1, || format!("{name}: reg(I) = {reg}, reg(S/I) = {qr}"))?;

        let lex = i.with_order(MonomialOrder::Lex);
        for d in 0..=8 {
            check(hilbert_function(&lex, d) == hilbert_function(&i, d), || format!("{name}: lex h_{d}"))?;
        }
        check(betti_table(&lex).unwrap() == betti_table(&i).unwrap(), || format!("{name}: lex Betti table"))?;
        check(regularity(&lex).unwrap() == reg, || format!("{name}: lex regularity"))?;
        check(tangent_space(&lex).unwrap().dimension == tangent_space(&i).unwrap().dimension, || {
            format!("{name}: lex tangent dimension")
        })?;
        check(ext1_space(&lex).unwrap().dimension == ext1_space(&i).unwrap().dimension, || {
            format!("{name}: lex ext1 dimension")
        })?;
    }
    Ok(format!("{} ideals", corpus::all().len()))
}

fn negative_control() -> Outcome {
    let y = corpus::twisted_cubic();
    let r = verify_truncation(&y, 2, regularity(&y).unwrap() + 2 + 4, true).map_err(|e| e.to_string())?;
    check(r.hilbert_ok, || "Hilbert check failed at m = 2".into())?;
    check(!r.resolution_shape_ok, || "shape check passed at m = 2".into())?;
    let json = serde_json::to_value(&r).unwrap();
    check(json["hilbert_ok"] == true && json["resolution_shape_ok"] == false, || {
        "report does not record both outcomes".into()
    })?;
    Ok("hilbert ok, shape fails".into())
}

#[test]
fn acceptance() {
    let n = corpus::all().len() as u32;
    let criteria: Vec<Criterion> = vec![
        ("1 piecewise Hilbert function", LIMIT_HILBERT, piecewise_hilbert),
        ("2 resolution shape", LIMIT_PER_IDEAL * n, resolution_shape),
        ("3 tangent bijection", LIMIT_PER_IDEAL * n, tangent_bijection),
        ("4 obstruction injection", LIMIT_PER_IDEAL * n, obstruction_injection),
        ("5 cone-curve construction", LIMIT_CONE, cone_curves),
        ("6 oracle equivalence", LIMIT_ORACLE, oracle_equivalence),
        ("7 structural suites", LIMIT_STRUCTURAL, structural),
        ("8 negative control", LIMIT_NEGATIVE, negative_control),
    ];
    let mut failed = Vec::new();
    for (label, limit, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > limit => Err(format!("{detail}; took {elapsed:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS  {label:<30} {elapsed:>10.2?}  {detail}"),
            Err(why) => {
                println!("FAIL  {label:<30} {elapsed:>10.2?}  {why}");
                failed.push(label);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
