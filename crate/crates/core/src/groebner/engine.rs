//! Buchberger's algorithm on raw term lists.
//!
//! Pairs are selected by the normal strategy (sugar degree, weighted lcm degree,
//! creation order) and pruned with the Gebauer–Möller installation of the
//! product and chain criteria. All basis elements are monic.

use std::collections::BTreeMap;
use std::cmp::Ordering;

use crate::arith::{Field, Monomial, MonomialOrder, PolyRing, Term};
use crate::error::{Error, Result};

/// Resource caps. Exceeding one is an error, never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GbLimits {
    /// Maximum number of S-pairs reduced.
    pub max_pairs: usize,
    /// Maximum length of any intermediate polynomial.
    pub max_terms: usize,
}

impl Default for GbLimits {
    fn default() -> Self {
        GbLimits {
            max_pairs: 1_000_000,
            max_terms: 2_000_000,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub(crate) struct GbOptions {
    pub limits: GbLimits,
    /// Degree weights for sugar; standard degree when absent. Zero weights allowed.
    pub sugar_weights: Option<Vec<u32>>,
    /// Keep every element and its cofactors with respect to the input generators.
    pub track: bool,
    /// Skip pairs whose sugar exceeds this bound.
    pub max_degree: Option<u32>,
}

pub(crate) struct EngineOutput<K> {
    /// Reduced basis sorted by ascending leading monomial (untracked), or every
    /// element in creation order (tracked).
    pub basis: Vec<Vec<Term<K>>>,
    pub cofactors: Vec<Vec<Vec<Term<K>>>>,
    pub truncated: bool,
}

pub(crate) struct Reducer<'a, K> {
    pub terms: &'a [Term<K>],
    pub mask: u64,
    pub lc_inv: K,
}

impl<'a, K: Field> Reducer<'a, K> {
    pub fn new(terms: &'a [Term<K>]) -> Self {
        Reducer {
            terms,
            mask: terms[0].mono.support_mask(),
            lc_inv: terms[0].coeff.inv(),
        }
    }
}

/// Replaces ascending `w` by `w - c * q * tail`, with `tail` descending.
fn sub_scaled<K: Field>(
    order: &MonomialOrder,
    w: &mut Vec<Term<K>>,
    buf: &mut Vec<Term<K>>,
    tail: &[Term<K>],
    c: &K,
    q: &Monomial,
) {
    buf.clear();
    let negc = c.neg();
    let mut j = tail.len();
    let product = |j: usize| Term::new(tail[j - 1].coeff.mul(&negc), tail[j - 1].mono.mul(q));
    let mut next = (j > 0).then(|| product(j));
    let mut it = w.drain(..).peekable();
    while let (Some(g), Some(x)) = (next.as_ref(), it.peek()) {
        match order.cmp(&x.mono, &g.mono) {
            Ordering::Less => buf.push(it.next().expect("peeked")),
            Ordering::Greater => {
                buf.push(next.take().expect("present"));
                j -= 1;
                next = (j > 0).then(|| product(j));
            }
            Ordering::Equal => {
                let x = it.next().expect("peeked");
                let s = x.coeff.add(&g.coeff);
                if !s.is_zero() {
                    buf.push(Term::new(s, x.mono));
                }
                j -= 1;
                next = (j > 0).then(|| product(j));
            }
        }
    }
    buf.extend(it);
    if let Some(g) = next {
        buf.push(g);
        while j > 1 {
            j -= 1;
            buf.push(product(j));
        }
    }
    std::mem::swap(w, buf);
}

/// Normal form of `p` (descending) against `reducers`.
///
/// With `full` every term is reduced, otherwise only the head. `record`
/// receives `(reducer index, coefficient, multiplier)` for each step, so
/// that `p = sum(coefficient * multiplier * reducer) + result`.
pub(crate) fn reduce_terms<K: Field>(
    order: &MonomialOrder,
    p: Vec<Term<K>>,
    reducers: &[Reducer<'_, K>],
    full: bool,
    max_terms: usize,
    mut record: impl FnMut(usize, &K, &Monomial),
) -> Result<Vec<Term<K>>> {
    let mut w: Vec<Term<K>> = p;
    w.reverse();
    let mut buf = Vec::with_capacity(w.len());
    let mut rem: Vec<Term<K>> = Vec::new();
    while let Some(lt) = w.last() {
        let mask = lt.mono.support_mask();
        let found = reducers.iter().enumerate().find_map(|(k, r)| {
            if r.mask & !mask != 0 {
                return None;
            }
            r.terms[0].mono.quotient_of(&lt.mono).map(|q| (k, q))
        });
        match found {
            Some((k, q)) => {
                let lt = w.pop().expect("nonempty");
                let r = &reducers[k];
                let c = lt.coeff.mul(&r.lc_inv);
                record(k, &c, &q);
                sub_scaled(order, &mut w, &mut buf, &r.terms[1..], &c, &q);
                if w.len() > max_terms {
                    return Err(Error::ComputationLimit(format!(
                        "intermediate polynomial exceeds {max_terms} terms"
                    )));
                }
            }
            None if full => rem.push(w.pop().expect("nonempty")),
            None => break,
        }
    }
    w.reverse();
    rem.extend(w);
    Ok(rem)
}

pub(crate) fn make_monic<K: Field>(p: &mut [Term<K>]) -> K {
    let lc = p[0].coeff.clone();
    if !lc.is_one() {
        let inv = lc.inv();
        for t in p.iter_mut() {
            t.coeff = t.coeff.mul(&inv);
        }
    }
    lc
}

pub(crate) fn scale_shift<'a, K: Field>(p: &'a [Term<K>], c: &K, q: &Monomial) -> impl Iterator<Item = Term<K>> + 'a {
    let c = c.clone();
    let q = q.clone();
    p.iter().map(move |t| Term::new(t.coeff.mul(&c), t.mono.mul(&q)))
}

/// `acc += c * q * p`, all descending.
pub(crate) fn add_scaled<K: Field>(ring: &PolyRing, acc: &mut Vec<Term<K>>, p: &[Term<K>], c: &K, q: &Monomial) {
    if p.is_empty() || c.is_zero() {
        return;
    }
    *acc = crate::arith::merge_terms(ring, acc, scale_shift(p, c, q));
}

struct Element<K> {
    terms: Vec<Term<K>>,
    mask: u64,
    sugar: u32,
    redundant: bool,
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine<'r, K: Field> {
    ring: &'r PolyRing,
    opts: &'r GbOptions,
    elems: Vec<Element<K>>,
    cofs: Vec<Vec<Vec<Term<K>>>>,
    ninputs: usize,
    pairs: BTreeMap<(u32, u32, u64), Pair>,
    seq: u64,
    truncated: bool,
}

impl<'r, K: Field> Engine<'r, K> {
    fn wdeg(&self, m: &Monomial) -> u32 {
        match &self.opts.sugar_weights {
            Some(w) => m.weighted_degree(w),
            None => m.degree(),
        }
    }

    fn poly_sugar(&self, p: &[Term<K>]) -> u32 {
        p.iter().map(|t| self.wdeg(&t.mono)).max().unwrap_or(0)
    }

    fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    /// Reduces `p` against the live basis; returns monic remainder, its sugar and cofactor.
    fn reduce(
        &self,
        p: Vec<Term<K>>,
        sugar: u32,
        cof: Option<Vec<Vec<Term<K>>>>,
    ) -> Result<(Vec<Term<K>>, u32, Option<Vec<Vec<Term<K>>>>)> {
        let live: Vec<usize> = (0..self.elems.len()).filter(|&k| !self.elems[k].redundant).collect();
        let reducers: Vec<Reducer<K>> = live
            .iter()
            .map(|&k| Reducer {
                terms: &self.elems[k].terms,
                mask: self.elems[k].mask,
                lc_inv: K::one(),
            })
            .collect();
        let mut steps: Vec<(usize, K, Monomial)> = Vec::new();
        let mut sug = sugar;
        let track = cof.is_some();
        let r = reduce_terms(self.order(), p, &reducers, true, self.opts.limits.max_terms, |k, c, q| {
            let e = &self.elems[live[k]];
            sug = sug.max(e.sugar + self.wdeg(q));
            if track {
                steps.push((live[k], c.clone(), q.clone()));
            }
        })?;
        let cof = cof.map(|mut cof| {
            for (k, c, q) in &steps {
                let negc = c.neg();
                for (slot, part) in cof.iter_mut().zip(&self.cofs[*k]) {
                    add_scaled(self.ring, slot, part, &negc, q);
                }
            }
            cof
        });
        Ok((r, sug, cof))
    }

    fn insert(&mut self, mut terms: Vec<Term<K>>, sugar: u32, cof: Option<Vec<Vec<Term<K>>>>) {
        let lc = make_monic(&mut terms);
        let t = self.elems.len();
        if let Some(mut cof) = cof {
            if !lc.is_one() {
                let inv = lc.inv();
                let one = Monomial::one(self.ring.nvars());
                for slot in cof.iter_mut() {
                    *slot = scale_shift(slot, &inv, &one).collect();
                }
            }
            self.cofs.push(cof);
        }
        let lm = terms[0].mono.clone();
        self.elems.push(Element {
            mask: lm.support_mask(),
            terms,
            sugar,
            redundant: false,
        });
        self.update(t, &lm);
    }

    /// Gebauer–Möller update for the new element `t`.
    fn update(&mut self, t: usize, lm: &Monomial) {
        let cands: Vec<(usize, Monomial, bool)> = (0..t)
            .filter(|&k| !self.elems[k].redundant)
            .map(|k| {
                let lk = &self.elems[k].terms[0].mono;
                (k, lk.lcm(lm), lk.is_coprime(lm))
            })
            .collect();
        let mut kept: Vec<usize> = Vec::new();
        for (idx, (_, lcm, coprime)) in cands.iter().enumerate() {
            let dominated = cands[idx + 1..].iter().any(|(_, l, _)| l.divides(lcm))
                || kept.iter().any(|&q| cands[q].1.divides(lcm));
            if *coprime || !dominated {
                kept.push(idx);
            }
        }
        // Chain criterion on old pairs.
        let elems = &self.elems;
        self.pairs.retain(|_, p| {
            if !lm.divides(&p.lcm) {
                return true;
            }
            let li = elems[p.i].terms[0].mono.lcm(lm);
            let lj = elems[p.j].terms[0].mono.lcm(lm);
            li == p.lcm || lj == p.lcm
        });
        for idx in kept {
            let (k, ref lcm, coprime) = cands[idx];
            if coprime {
                continue;
            }
            let si = self.elems[k].sugar + self.wdeg(&self.elems[k].terms[0].mono.quotient_of(lcm).expect("lcm"));
            let sj = self.elems[t].sugar + self.wdeg(&lm.quotient_of(lcm).expect("lcm"));
            let key = (si.max(sj), self.wdeg(lcm), self.seq);
            self.seq += 1;
            self.pairs.insert(key, Pair { i: k, j: t, lcm: lcm.clone() });
        }
        for k in 0..t {
            if !self.elems[k].redundant && lm.divides(&self.elems[k].terms[0].mono) {
                self.elems[k].redundant = true;
            }
        }
    }

    fn s_poly(&self, p: &Pair) -> (Vec<Term<K>>, Option<Vec<Vec<Term<K>>>>) {
        let (a, b) = (&self.elems[p.i], &self.elems[p.j]);
        let qa = a.terms[0].mono.quotient_of(&p.lcm).expect("lcm");
        let qb = b.terms[0].mono.quotient_of(&p.lcm).expect("lcm");
        let one = K::one();
        let mone = one.neg();
        let s = crate::arith::merge_terms(
            self.ring,
            &scale_shift(&a.terms[1..], &one, &qa).collect::<Vec<_>>(),
            scale_shift(&b.terms[1..], &mone, &qb),
        );
        let cof = self.opts.track.then(|| {
            self.cofs[p.i]
                .iter()
                .zip(&self.cofs[p.j])
                .map(|(ca, cb)| {
                    crate::arith::merge_terms(
                        self.ring,
                        &scale_shift(ca, &one, &qa).collect::<Vec<_>>(),
                        scale_shift(cb, &mone, &qb),
                    )
                })
                .collect()
        });
        (s, cof)
    }

    fn run(&mut self, gens: &[Vec<Term<K>>]) -> Result<()> {
        let mut order_idx: Vec<usize> = (0..gens.len()).filter(|&i| !gens[i].is_empty()).collect();
        let ord = self.order().clone();
        order_idx.sort_by(|&a, &b| ord.cmp(&gens[a][0].mono, &gens[b][0].mono));
        for i in order_idx {
            let cof = self.opts.track.then(|| {
                let mut c = vec![Vec::new(); self.ninputs];
                c[i] = vec![Term::new(K::one(), Monomial::one(self.ring.nvars()))];
                c
            });
            let sugar = self.poly_sugar(&gens[i]);
            let (r, sugar, cof) = self.reduce(gens[i].clone(), sugar, cof)?;
            if !r.is_empty() {
                self.insert(r, sugar, cof);
            }
        }
        let mut processed = 0usize;
        while let Some((key, pair)) = self.pairs.pop_first() {
            if let Some(d) = self.opts.max_degree {
                if key.0 > d {
                    self.truncated = true;
                    self.pairs.clear();
                    break;
                }
            }
            processed += 1;
            if processed > self.opts.limits.max_pairs {
                return Err(Error::ComputationLimit(format!(
                    "more than {} S-pairs",
                    self.opts.limits.max_pairs
                )));
            }
            let (s, cof) = self.s_poly(&pair);
            let (r, sugar, cof) = self.reduce(s, key.0, cof)?;
            if !r.is_empty() {
                self.insert(r, sugar, cof);
            }
        }
        Ok(())
    }

    /// Minimal, interreduced, monic, ascending by leading monomial.
    fn reduced_basis(&self) -> Result<Vec<Vec<Term<K>>>> {
        let mut live: Vec<&Element<K>> = self.elems.iter().filter(|e| !e.redundant).collect();
        live.sort_by(|a, b| self.order().cmp(&a.terms[0].mono, &b.terms[0].mono));
        let mut out = Vec::with_capacity(live.len());
        for (k, e) in live.iter().enumerate() {
            let others: Vec<Reducer<K>> = live
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, o)| Reducer {
                    terms: &o.terms,
                    mask: o.mask,
                    lc_inv: K::one(),
                })
                .collect();
            let tail = reduce_terms(
                self.order(),
                e.terms[1..].to_vec(),
                &others,
                true,
                self.opts.limits.max_terms,
                |_, _, _| {},
            )?;
            let mut g = Vec::with_capacity(tail.len() + 1);
            g.push(e.terms[0].clone());
            g.extend(tail);
            out.push(g);
        }
        Ok(out)
    }
}

pub(crate) fn groebner<K: Field>(
    ring: &PolyRing,
    gens: &[Vec<Term<K>>],
    opts: &GbOptions,
) -> Result<EngineOutput<K>> {
    let mut eng = Engine {
        ring,
        opts,
        elems: Vec::new(),
        cofs: Vec::new(),
        ninputs: gens.len(),
        pairs: BTreeMap::new(),
        seq: 0,
        truncated: false,
    };
    eng.run(gens)?;
    if opts.track {
        let basis = eng.elems.into_iter().map(|e| e.terms).collect();
        return Ok(EngineOutput {
            basis,
            cofactors: eng.cofs,
            truncated: eng.truncated,
        });
    }
    let basis = eng.reduced_basis()?;
    Ok(EngineOutput {
        basis,
        cofactors: Vec::new(),
        truncated: eng.truncated,
    })
}
