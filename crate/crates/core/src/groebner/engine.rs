//! Buchberger's algorithm on graded free modules, with optional tracking of
//! each basis element as a combination of the inputs, and syzygies of a
//! Gröbner basis from its S-pair reductions.

use alloc::vec::Vec;

use crate::field::FieldElement;
use crate::ring::{Monomial, Polynomial, Ring};

use super::vector::{ModuleOrder, Vector};

pub(crate) struct Basis {
    /// Monic, reduced, in order of discovery (non-decreasing degree).
    pub elems: Vec<Vector>,
    /// `elems[k] = Σ_i reps[k]_i · input_i`; empty when not tracked.
    pub reps: Vec<Vector>,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    comp: usize,
    lcm: Monomial,
    degree: i32,
}

pub(crate) struct Engine<'a> {
    pub ord: ModuleOrder<'a>,
    /// Order on the coefficient module of representations.
    pub rep_ord: ModuleOrder<'a>,
    pub track: bool,
}

impl<'a> Engine<'a> {
    fn ring(&self) -> &'a Ring {
        self.ord.ring
    }

    fn rank_one(&self) -> bool {
        self.ord.shifts.len() == 1
    }

    /// First element of `basis` (list order) whose lead term divides `(comp, m)`.
    fn find_reducer(basis: &[Vector], comp: usize, m: &Monomial) -> Option<(usize, Monomial)> {
        basis.iter().enumerate().find_map(|(k, g)| {
            let &(gc, gm, _) = g.lead()?;
            if gc == comp {
                gm.quotient_of(m).map(|q| (k, q))
            } else {
                None
            }
        })
    }

    /// Reduces `f` (and its representation) by `basis`. With `full`, every
    /// term is reduced; otherwise only the lead term.
    pub fn reduce(
        &self,
        f: Vector,
        mut rep: Vector,
        basis: &[Vector],
        reps: &[Vector],
        full: bool,
    ) -> (Vector, Vector) {
        let field = self.ring().field();
        let mut p = f;
        let mut rest = Vec::new();
        while let Some(&(i, m, c)) = p.lead() {
            if let Some((k, q)) = Self::find_reducer(basis, i, &m) {
                let lc = basis[k].lead().unwrap().2;
                let coef = field.neg(field.div(c, lc).expect("nonzero lead"));
                p = p.add_scaled(&self.ord, coef, &q, &basis[k]);
                if self.track {
                    rep = rep.add_scaled(&self.rep_ord, coef, &q, &reps[k]);
                }
            } else if full {
                rest.push(p.terms.remove(0));
            } else {
                break;
            }
        }
        if full {
            (Vector { terms: rest }, rep)
        } else {
            (p, rep)
        }
    }

    /// Division with quotients: `f = Σ q_k basis_k + r`, reducing by the first
    /// divisor in list order.
    pub fn divide(&self, f: &Vector, basis: &[Vector]) -> (Vec<Polynomial>, Vector) {
        let ring = self.ring();
        let field = ring.field();
        let mut quotients: Vec<Vec<(Monomial, FieldElement)>> = alloc::vec![Vec::new(); basis.len()];
        let mut p = f.clone();
        let mut rest = Vec::new();
        while let Some(&(i, m, c)) = p.lead() {
            if let Some((k, q)) = Self::find_reducer(basis, i, &m) {
                let lc = basis[k].lead().unwrap().2;
                let coef = field.div(c, lc).expect("nonzero lead");
                quotients[k].push((q, coef));
                p = p.add_scaled(&self.ord, field.neg(coef), &q, &basis[k]);
            } else {
                rest.push(p.terms.remove(0));
            }
        }
        let quotients = quotients.into_iter().map(|t| ring.from_terms(t)).collect();
        (quotients, Vector { terms: rest })
    }

    /// Reduced Gröbner basis of the submodule generated by homogeneous `inputs`.
    pub fn groebner(&self, inputs: &[Vector]) -> Basis {
        let field = self.ring().field();
        let shifts = self.ord.shifts;
        let mut elems: Vec<Vector> = Vec::new();
        let mut reps: Vec<Vector> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();

        let mut queue: Vec<(i32, usize)> =
            inputs.iter().enumerate().filter_map(|(k, v)| v.degree(shifts).map(|d| (d, k))).collect();
        queue.sort();
        let mut queue = queue.into_iter().peekable();

        loop {
            let pair_deg = pairs.iter().map(|p| p.degree).min();
            let (candidate, rep) = match (queue.peek(), pair_deg) {
                (None, None) => break,
                (Some(&(d, k)), pd) if pd.is_none_or(|pd| d <= pd) => {
                    queue.next();
                    let rep = if self.track {
                        Vector::term(k, Monomial::one(self.ring().nvars()), FieldElement::ONE)
                    } else {
                        Vector::zero()
                    };
                    let _ = d;
                    (inputs[k].clone(), rep)
                }
                _ => {
                    let pos = self.next_pair(&pairs);
                    let p = pairs.swap_remove(pos);
                    self.s_vector(&p, &elems, &reps)
                }
            };
            let (h, hrep) = self.reduce(candidate, rep, &elems, &reps, true);
            let Some(&(_, _, lc)) = h.lead() else { continue };
            let inv = field.inv(lc).expect("nonzero lead");
            let h = h.scale(&self.ord, inv);
            let hrep = if self.track { hrep.scale(&self.rep_ord, inv) } else { hrep };
            self.update(&mut pairs, &elems, &h);
            elems.push(h);
            reps.push(hrep);
        }
        self.interreduce(&mut elems, &mut reps);
        Basis { elems, reps }
    }

    /// Normal selection: lowest degree, then smallest lcm, then indices.
    fn next_pair(&self, pairs: &[Pair]) -> usize {
        let mut best = 0;
        for k in 1..pairs.len() {
            let (a, b) = (&pairs[k], &pairs[best]);
            let ord = a
                .degree
                .cmp(&b.degree)
                .then_with(|| self.ord.cmp(&(a.comp, a.lcm), &(b.comp, b.lcm)))
                .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
            if ord.is_lt() {
                best = k;
            }
        }
        best
    }

    fn s_vector(&self, p: &Pair, elems: &[Vector], reps: &[Vector]) -> (Vector, Vector) {
        let field = self.ring().field();
        let gi = &elems[p.i];
        let gj = &elems[p.j];
        let ui = gi.lead().unwrap().1.quotient_of(&p.lcm).unwrap();
        let uj = gj.lead().unwrap().1.quotient_of(&p.lcm).unwrap();
        let minus = field.neg(FieldElement::ONE);
        let s = Vector::zero()
            .add_scaled(&self.ord, FieldElement::ONE, &ui, gi)
            .add_scaled(&self.ord, minus, &uj, gj);
        let rep = if self.track {
            Vector::zero().add_scaled(&self.rep_ord, FieldElement::ONE, &ui, &reps[p.i]).add_scaled(
                &self.rep_ord,
                minus,
                &uj,
                &reps[p.j],
            )
        } else {
            Vector::zero()
        };
        (s, rep)
    }

    /// Gebauer–Möller pair update for a new element `h` about to receive index
    /// `elems.len()`. The product criterion only applies to ideals.
    fn update(&self, pairs: &mut Vec<Pair>, elems: &[Vector], h: &Vector) {
        let t = elems.len();
        let &(hc, hm, _) = h.lead().unwrap();
        let shift = self.ord.shifts[hc];
        let coprime = |m: &Monomial| self.rank_one() && hm.is_coprime(m);

        let mut fresh: Vec<(usize, Monomial, bool)> = elems
            .iter()
            .enumerate()
            .filter_map(|(k, g)| {
                let &(gc, gm, _) = g.lead()?;
                (gc == hc).then(|| (k, hm.lcm(&gm), coprime(&gm)))
            })
            .collect();

        // chain criterion among the new pairs
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while !fresh.is_empty() {
            let (k, l, cp) = fresh.remove(0);
            let dominated = fresh.iter().chain(kept.iter()).any(|(_, l2, _)| l2.divides(&l));
            if cp || !dominated {
                kept.push((k, l, cp));
            }
        }

        // chain criterion on old pairs
        pairs.retain(|p| {
            if p.comp != hc || !hm.divides(&p.lcm) {
                return true;
            }
            let li = elems[p.i].lead().unwrap().1.lcm(&hm);
            let lj = elems[p.j].lead().unwrap().1.lcm(&hm);
            li == p.lcm || lj == p.lcm
        });

        for (k, l, cp) in kept {
            if !cp {
                pairs.push(Pair { i: k, j: t, comp: hc, lcm: l, degree: l.degree() as i32 + shift });
            }
        }
    }

    fn interreduce(&self, elems: &mut Vec<Vector>, reps: &mut Vec<Vector>) {
        // drop elements whose lead is divisible by another lead
        let mut keep = alloc::vec![true; elems.len()];
        for a in 0..elems.len() {
            let &(ca, ma, _) = elems[a].lead().unwrap();
            for b in 0..elems.len() {
                if a == b || !keep[b] {
                    continue;
                }
                let &(cb, mb, _) = elems[b].lead().unwrap();
                if ca == cb && mb.divides(&ma) {
                    keep[a] = false;
                    break;
                }
            }
        }
        let mut k = 0;
        elems.retain(|_| {
            k += 1;
            keep[k - 1]
        });
        let mut k = 0;
        reps.retain(|_| {
            k += 1;
            keep[k - 1]
        });

        for idx in 0..elems.len() {
            let g = elems[idx].clone();
            let lead = g.terms[0];
            let tail = Vector { terms: g.terms[1..].to_vec() };
            let others: Vec<Vector> = elems
                .iter()
                .enumerate()
                .map(|(k, e)| if k == idx { Vector::zero() } else { e.clone() })
                .collect();
            let (r, rrep) = self.reduce(tail, reps[idx].clone(), &others, reps, true);
            let mut terms = alloc::vec![lead];
            terms.extend(r.terms);
            elems[idx] = Vector { terms };
            reps[idx] = rrep;
        }

        // canonical listing: ascending degree, descending lead term within a degree
        let shifts = self.ord.shifts;
        let mut order: Vec<usize> = (0..elems.len()).collect();
        order.sort_by(|&a, &b| {
            let (la, lb) = (elems[a].lead().unwrap(), elems[b].lead().unwrap());
            elems[a]
                .degree(shifts)
                .cmp(&elems[b].degree(shifts))
                .then_with(|| self.ord.cmp(&(lb.0, lb.1), &(la.0, la.1)))
        });
        let sorted: Vec<Vector> = order.iter().map(|&k| elems[k].clone()).collect();
        *elems = sorted;
        if self.track {
            let sorted: Vec<Vector> = order.iter().map(|&k| reps[k].clone()).collect();
            *reps = sorted;
        }
    }

    /// Generators of the syzygies of a Gröbner basis `basis` (monic), one per
    /// S-pair in the Schreyer frame: for each `i`, the pairs `(i, j)`, `j > i`,
    /// whose lcm quotient is a minimal generator of `⟨lcm(i,j)/lm_i : j > i⟩`.
    /// Vectors live in `⊕ S e_k` ordered by `syz_ord`.
    pub fn basis_syzygies(&self, basis: &[Vector], syz_ord: &ModuleOrder<'_>) -> Vec<Vector> {
        let field = self.ring().field();
        let one = Monomial::one(self.ring().nvars());
        let minus = field.neg(FieldElement::ONE);
        let mut out = Vec::new();
        for i in 0..basis.len() {
            let &(ci, mi, _) = basis[i].lead().unwrap();
            let cands: Vec<(usize, Monomial)> = (i + 1..basis.len())
                .filter_map(|j| {
                    let &(cj, mj, _) = basis[j].lead().unwrap();
                    (cj == ci).then(|| (j, mi.quotient_of(&mi.lcm(&mj)).unwrap()))
                })
                .collect();
            for (pos, &(j, q)) in cands.iter().enumerate() {
                let redundant = cands
                    .iter()
                    .enumerate()
                    .any(|(pos2, (_, q2))| pos2 != pos && q2.divides(&q) && (q2 != &q || pos2 < pos));
                if redundant {
                    continue;
                }
                let l = q.mul(&mi);
                let mj = basis[j].lead().unwrap().1;
                let qj = mj.quotient_of(&l).unwrap();
                let s = Vector::zero()
                    .add_scaled(&self.ord, FieldElement::ONE, &q, &basis[i])
                    .add_scaled(&self.ord, minus, &qj, &basis[j]);
                let (quotients, rem) = self.divide(&s, basis);
                debug_assert!(rem.is_zero(), "S-vector of a Gröbner basis reduces to zero");
                let mut z = Vector::term(i, q, FieldElement::ONE).add_scaled(
                    syz_ord,
                    minus,
                    &one,
                    &Vector::term(j, qj, FieldElement::ONE),
                );
                for (k, qk) in quotients.iter().enumerate() {
                    for &(m, c) in qk.terms() {
                        z = z.add_scaled(syz_ord, field.neg(c), &one, &Vector::term(k, m, FieldElement::ONE));
                    }
                }
                if !z.is_zero() {
                    out.push(z);
                }
            }
        }
        out
    }
}
