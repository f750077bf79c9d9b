use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::groebner::{column_degree, module_syzygies, Ideal};
use crate::ring::{GradedFreeModule, GradedMap, Polynomial, Ring};

/// A free resolution `... -> F_2 -> F_1 -> I -> 0` of a homogeneous ideal.
///
/// `maps[0]` is the augmentation `F_1 -> S` (the generator row), `maps[1]` is
/// `F_2 -> F_1`, and so on. The resolution of `S/I` is the same data with
/// `S` in homological degree zero.
#[derive(Clone, Debug)]
pub struct Resolution {
    ring: Ring,
    maps: Vec<GradedMap>,
    minimal: bool,
}

impl Resolution {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn maps(&self) -> &[GradedMap] {
        &self.maps
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// Number of free modules `F_1, ..., F_len`.
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// The generators `F_1 -> I`.
    pub fn generators(&self) -> Vec<Polynomial> {
        self.maps.first().map(|m| m.columns().iter().map(|c| c[0].clone()).collect()).unwrap_or_default()
    }

    /// `F_{i+1}`, i.e. homological index `i` with `F_1` at index 0.
    pub fn module(&self, i: usize) -> Option<&GradedFreeModule> {
        self.maps.get(i).map(GradedMap::source)
    }

    /// `F_{i+2} -> F_{i+1}` (`sigma_{i+2}`); `differential(0)` is `sigma_2`.
    pub fn differential(&self, i: usize) -> Option<&GradedMap> {
        self.maps.get(i + 1)
    }

    pub fn betti_table(&self) -> BettiTable {
        let mut t = BettiTable::default();
        for (i, m) in self.maps.iter().enumerate() {
            for &s in m.source().shifts() {
                *t.entries.entry((i, s)).or_insert(0) += 1;
            }
        }
        t
    }

    /// Whether every pair of consecutive maps composes to zero.
    pub fn composes_to_zero(&self) -> bool {
        self.maps.windows(2).all(|w| w[0].compose(&self.ring, &w[1]).map(|c| c.is_zero()).unwrap_or(false))
    }
}

/// Graded Betti numbers `beta_{i,j}` of an ideal, `i = 0` for its generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i32), usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BettiEntry {
    pub i: usize,
    pub j: i32,
    pub beta: usize,
}

impl BettiTable {
    pub fn from_entries<I: IntoIterator<Item = ((usize, i32), usize)>>(it: I) -> Self {
        let mut t = BettiTable::default();
        for (k, v) in it {
            if v > 0 {
                *t.entries.entry(k).or_insert(0) += v;
            }
        }
        t
    }

    pub fn get(&self, i: usize, j: i32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> Vec<BettiEntry> {
        self.entries.iter().map(|(&(i, j), &beta)| BettiEntry { i, j, beta }).collect()
    }

    /// `max(j - i)`, or `None` for the empty table.
    pub fn regularity(&self) -> Option<i32> {
        self.entries.keys().map(|&(i, j)| j - i as i32).max()
    }

    /// Number of free modules.
    pub fn length(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i + 1).max().unwrap_or(0)
    }

    /// Total rank of the `i`-th module.
    pub fn rank(&self, i: usize) -> usize {
        self.entries.iter().filter(|(k, _)| k.0 == i).map(|(_, v)| v).sum()
    }

    /// Table of `S/I`: every entry moves up one homological step and
    /// `beta_{0,0} = 1` is added.
    pub fn quotient(&self) -> BettiTable {
        let mut t = BettiTable::from_entries(self.entries.iter().map(|(&(i, j), &v)| ((i + 1, j), v)));
        t.entries.insert((0, 0), 1);
        t
    }

    /// Entries with `j < bound`.
    pub fn below_degree(&self, bound: i32) -> BettiTable {
        BettiTable::from_entries(self.entries.iter().filter(|(k, _)| k.1 < bound).map(|(&k, &v)| (k, v)))
    }

    /// Macaulay-style layout: columns are homological indices, rows are `j - i`.
    pub fn render(&self) -> String {
        let mut s = String::new();
        if self.entries.is_empty() {
            s.push_str("(zero)\n");
            return s;
        }
        let cols = self.length();
        let lo = self.entries.keys().map(|&(i, j)| j - i as i32).min().unwrap();
        let hi = self.regularity().unwrap();
        let width = self.entries.values().map(|v| alloc::format!("{v}").len()).max().unwrap().max(2);
        let _ = write!(s, "{:>4}:", "");
        for i in 0..cols {
            let _ = write!(s, " {i:>width$}");
        }
        s.push('\n');
        let _ = write!(s, "{:>4}:", "total");
        for i in 0..cols {
            let _ = write!(s, " {:>width$}", self.rank(i));
        }
        s.push('\n');
        for row in lo..=hi {
            let _ = write!(s, "{row:>4}:");
            for i in 0..cols {
                let v = self.get(i, row + i as i32);
                if v == 0 {
                    let _ = write!(s, " {:>width$}", "-");
                } else {
                    let _ = write!(s, " {v:>width$}");
                }
            }
            s.push('\n');
        }
        s
    }
}

/// Minimal free resolution of `I` through `F_{max_step}`.
///
/// Starts from the reduced Gröbner basis, takes syzygies of the last map's
/// columns, and prunes every unit entry (first in `(row, column)` order)
/// before going one step further. One extra step is computed and dropped so
/// the reported modules are minimal.
pub fn minimal_free_resolution(ideal: &Ideal, max_step: usize) -> Result<Resolution> {
    if max_step == 0 {
        return Err(Error::Parameter("max_step must be at least 1".into()));
    }
    let ring = ideal.ring().clone();
    if ideal.is_zero() {
        return Ok(Resolution { ring, maps: Vec::new(), minimal: true });
    }
    if ideal.is_unit() {
        return Err(Error::Degenerate("the unit ideal is free of rank one"));
    }
    let gens = ideal.groebner_basis().to_vec();
    let shifts: Vec<i32> = gens.iter().map(|g| g.homogeneous_degree().unwrap() as i32).collect();
    let first = GradedMap::new(
        GradedFreeModule::new(shifts),
        GradedFreeModule::ring(),
        gens.into_iter().map(|g| alloc::vec![g]).collect(),
    )?;
    let mut maps = alloc::vec![first];
    let mut complete = false;
    while maps.len() <= max_step {
        drop_zero_columns(&mut maps);
        let last = maps.last().unwrap();
        if last.source().rank() == 0 {
            maps.pop();
            complete = true;
            break;
        }
        let kernel = module_syzygies(&ring, last.target().shifts(), last.columns());
        if kernel.is_empty() {
            complete = true;
            break;
        }
        let shifts: Vec<i32> = kernel.iter().map(|c| column_degree(last.source(), c).unwrap()).collect();
        let next = GradedMap::new(GradedFreeModule::new(shifts), last.source().clone(), kernel)?;
        maps.push(next);
        prune_units(&ring, &mut maps);
    }
    if !complete {
        maps.truncate(max_step);
    }
    Ok(Resolution { ring, maps, minimal: true })
}

/// Columns of the newest map that vanish generate nothing.
fn drop_zero_columns(maps: &mut [GradedMap]) {
    let last = maps.last_mut().unwrap();
    if last.columns().iter().all(|c| c.iter().any(|p| !p.is_zero())) {
        return;
    }
    let (src, tgt) = (last.source().clone(), last.target().clone());
    let mut shifts = Vec::new();
    let mut cols = Vec::new();
    for (j, c) in last.columns().iter().enumerate() {
        if c.iter().any(|p| !p.is_zero()) {
            shifts.push(src.shift(j));
            cols.push(c.clone());
        }
    }
    *last = GradedMap::new(GradedFreeModule::new(shifts), tgt, cols).unwrap();
}

/// Cancels unit entries of the newest map `d: F_{k+1} -> F_k` against the
/// previous map `F_k -> F_{k-1}` until none remain.
fn prune_units(ring: &Ring, maps: &mut [GradedMap]) {
    let field = ring.field();
    let t = maps.len() - 1;
    loop {
        let d = &maps[t];
        let mut pivot = None;
        'search: for i in 0..d.target().rank() {
            for j in 0..d.source().rank() {
                if d.entry(i, j).is_unit() {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else { return };
        let u = d.entry(pi, pj).lead_coefficient().unwrap();
        let u_inv = field.inv(u).unwrap();

        // d'[a][b] = d[a][b] - d[a][j] * u^-1 * d[i][b]
        let pivot_col = d.columns()[pj].clone();
        let mut cols = Vec::new();
        let mut src_shifts = Vec::new();
        for (b, col) in d.columns().iter().enumerate() {
            if b == pj {
                continue;
            }
            let factor = ring.scale(&col[pi], field.neg(u_inv));
            let new_col: Vec<Polynomial> = col
                .iter()
                .enumerate()
                .filter(|&(a, _)| a != pi)
                .map(|(a, e)| {
                    if factor.is_zero() || pivot_col[a].is_zero() {
                        e.clone()
                    } else {
                        ring.add(e, &ring.mul(&pivot_col[a], &factor))
                    }
                })
                .collect();
            cols.push(new_col);
            src_shifts.push(d.source().shift(b));
        }
        let tgt_shifts: Vec<i32> =
            d.target().shifts().iter().enumerate().filter(|&(a, _)| a != pi).map(|(_, &s)| s).collect();
        let new_d = GradedMap::new(
            GradedFreeModule::new(src_shifts),
            GradedFreeModule::new(tgt_shifts.clone()),
            cols,
        )
        .unwrap();

        let prev = &maps[t - 1];
        let prev_cols: Vec<Vec<Polynomial>> =
            prev.columns().iter().enumerate().filter(|&(a, _)| a != pi).map(|(_, c)| c.clone()).collect();
        let new_prev =
            GradedMap::new(GradedFreeModule::new(tgt_shifts), prev.target().clone(), prev_cols).unwrap();
        maps[t - 1] = new_prev;
        maps[t] = new_d;
    }
}

pub fn betti_table(ideal: &Ideal) -> Result<BettiTable> {
    let n = ideal.ring().nvars();
    Ok(minimal_free_resolution(ideal, n + 1)?.betti_table())
}

/// Castelnuovo–Mumford regularity of `I`; the zero ideal has regularity 0 by convention.
pub fn regularity(ideal: &Ideal) -> Result<u32> {
    if ideal.is_zero() {
        return Ok(0);
    }
    let t = betti_table(ideal)?;
    Ok(t.regularity().unwrap_or(0).max(0) as u32)
}

/// Regularity of `S/I` from its own Betti table (with `beta_{0,0} = 1`).
pub fn quotient_regularity(ideal: &Ideal) -> Result<u32> {
    if ideal.is_zero() {
        return Ok(0);
    }
    let t = betti_table(ideal)?.quotient();
    Ok(t.regularity().unwrap_or(0).max(0) as u32)
}
