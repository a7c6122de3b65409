//! Normal forms in the KLR algebra on the basis `psi_w y^m e(i)`.
//!
//! `psi_w` always means the product along the canonical reduced word of
//! [`perm::canonical_word`]. Products are straightened by left multiplication
//! with generators, memoised per basis term.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

use num_traits::{One, Zero};

use super::perm::{self, Perm};
use super::poly::{braid_correction, q_poly, Coeff, YPoly};
use crate::cartan::{CartanDatum, RootVector};
use crate::error::{KlrError, Result};
use crate::words::{weight, words_of_weight, Word};

/// The basis element `psi_w y^m e(i)`, with `i` the word on the right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    pub perm: Perm,
    pub exps: Vec<u16>,
    pub word: Vec<u8>,
}

impl Term {
    pub fn idempotent(word: &[u8]) -> Term {
        Term { perm: perm::identity(word.len()), exps: vec![0; word.len()], word: word.to_vec() }
    }

    pub fn new(perm: Perm, exps: Vec<u16>, word: Vec<u8>) -> Term {
        Term { perm, exps, word }
    }

    /// The word `w . i` of the idempotent on the left.
    pub fn left_word(&self) -> Vec<u8> {
        perm::act(&self.perm, &self.word)
    }

    pub fn y_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    fn with_perm(&self, perm: Perm) -> Term {
        Term { perm, exps: self.exps.clone(), word: self.word.clone() }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in perm::canonical_word(&self.perm) {
            write!(f, "psi{} ", a + 1)?;
        }
        for (t, &m) in self.exps.iter().enumerate() {
            match m {
                0 => {}
                1 => write!(f, "y{} ", t + 1)?,
                m => write!(f, "y{}^{m} ", t + 1)?,
            }
        }
        write!(f, "e{}", Word(self.word.clone()))
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A linear combination of basis terms.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Element {
    pub terms: BTreeMap<Term, Coeff>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_term(t: Term) -> Self {
        let mut e = Self::zero();
        e.add_term(t, Coeff::one());
        e
    }

    pub fn add_term(&mut self, t: Term, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&t) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&t);
                }
            }
            None => {
                self.terms.insert(t, c);
            }
        }
    }

    pub fn add_scaled(&mut self, o: &Element, c: &Coeff) {
        for (t, x) in &o.terms {
            self.add_term(t.clone(), x * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t: &Term) -> Coeff {
        self.terms.get(t).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(t, c)| format!("({c}) {t}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A generator of the algebra (0-based indices).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    E(Word),
    Y(usize),
    Psi(usize),
}

/// The KLR algebra on strands of length `d`.
pub struct KlrAlgebra {
    datum: CartanDatum,
    d: usize,
    psi_cache: RwLock<HashMap<(usize, Term), Element>>,
    y_cache: RwLock<HashMap<(usize, Term), Element>>,
}

impl KlrAlgebra {
    pub fn new(datum: &CartanDatum, d: usize) -> Self {
        Self {
            datum: datum.clone(),
            d,
            psi_cache: RwLock::new(HashMap::new()),
            y_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn strands(&self) -> usize {
        self.d
    }

    /// Degree of a basis term.
    pub fn degree(&self, t: &Term) -> i64 {
        let mut deg = 0;
        let w = &t.perm;
        for p in 0..self.d {
            for q in p + 1..self.d {
                if w[p] > w[q] {
                    deg -= self.datum.dot(t.word[p], t.word[q]);
                }
            }
        }
        for (k, &m) in t.exps.iter().enumerate() {
            deg += m as i64 * self.datum.dot(t.word[k], t.word[k]);
        }
        deg
    }

    /// `psi_a * t`.
    pub fn psi_times(&self, a: usize, t: &Term) -> Element {
        if let Some(e) = self.psi_cache.read().unwrap().get(&(a, t.clone())) {
            return e.clone();
        }
        let r = self.psi_frame(a, t, self.d);
        self.psi_cache.write().unwrap().insert((a, t.clone()), r.clone());
        r
    }

    /// `psi_a * t`, where the permutation of `t` fixes positions `n..`.
    fn psi_frame(&self, a: usize, t: &Term, n: usize) -> Element {
        debug_assert!(a + 1 < n);
        let w = &t.perm;
        let r = w[n - 1] as usize;
        if a + 1 < r {
            // psi_a commutes past the block psi_r ... psi_{n-2}
            let u = strip_block(w, r, n);
            let inner = self.psi_frame(a, &t.with_perm(u), n - 1);
            return prefix_block(&inner, r, n);
        }
        if a + 1 == r {
            return Element::from_term(t.with_perm(perm::left_mul_s(a, w)));
        }
        if a == r {
            // psi_a psi_a Y = Q(y_a, y_{a+1}) Y
            let y = t.with_perm(perm::left_mul_s(a, w));
            let j = y.left_word();
            let q = q_poly(&self.datum, j[a], j[a + 1]).at(self.d, a, a + 1);
            return self.poly_times(&q, &y);
        }
        // a > r: psi_r ... psi_{a-2} (psi_a psi_{a-1} psi_a) Z
        let u = strip_block(w, r, n);
        let main = prefix_block(&self.psi_frame(a - 1, &t.with_perm(u.clone()), n - 1), r, n);
        let mut z_perm = u;
        for b in (a + 1..n - 1).rev() {
            z_perm = perm::left_mul_s(b, &z_perm);
        }
        let z = t.with_perm(z_perm);
        let j = z.left_word();
        if j[a - 1] != j[a + 1] {
            return main;
        }
        let corr = braid_correction(&self.datum, self.d, a - 1, j[a - 1], j[a]);
        let mut e = self.poly_times(&corr, &z);
        for b in (r..a - 1).rev() {
            e = self.psi_times_elem(b, &e);
        }
        let mut out = main;
        out.add_scaled(&e, &Coeff::one());
        out
    }

    /// `y_t * term`.
    pub fn y_times(&self, t: usize, term: &Term) -> Element {
        if let Some(e) = self.y_cache.read().unwrap().get(&(t, term.clone())) {
            return e.clone();
        }
        let out = match perm::first_letter(&term.perm) {
            None => {
                let mut x = term.clone();
                x.exps[t] += 1;
                Element::from_term(x)
            }
            Some(a) => {
                // y_t psi_a X = psi_a y_{s_a(t)} X + [j_a = j_{a+1}] D_a(y_t) X
                let x = term.with_perm(perm::left_mul_s(a, &term.perm));
                let st = if t == a { a + 1 } else if t == a + 1 { a } else { t };
                let mut out = self.psi_times_elem(a, &self.y_times(st, &x));
                let j = x.left_word();
                if j[a] == j[a + 1] && (t == a || t == a + 1) {
                    let sign = if t == a + 1 { Coeff::one() } else { -Coeff::one() };
                    out.add_term(x, sign);
                }
                out
            }
        };
        self.y_cache.write().unwrap().insert((t, term.clone()), out.clone());
        out
    }

    pub fn psi_times_elem(&self, a: usize, e: &Element) -> Element {
        let mut out = Element::zero();
        for (t, c) in &e.terms {
            out.add_scaled(&self.psi_times(a, t), c);
        }
        out
    }

    pub fn y_times_elem(&self, t: usize, e: &Element) -> Element {
        let mut out = Element::zero();
        for (x, c) in &e.terms {
            out.add_scaled(&self.y_times(t, x), c);
        }
        out
    }

    /// `p * term` for a polynomial `p` in the `y`s.
    pub fn poly_times(&self, p: &YPoly, term: &Term) -> Element {
        let mut out = Element::zero();
        for (e, c) in p.terms() {
            let mut x = Element::from_term(term.clone());
            for (t, &m) in e.iter().enumerate() {
                for _ in 0..m {
                    x = self.y_times_elem(t, &x);
                }
            }
            out.add_scaled(&x, c);
        }
        out
    }

    pub fn poly_times_elem(&self, p: &YPoly, e: &Element) -> Element {
        let mut out = Element::zero();
        for (t, c) in &e.terms {
            out.add_scaled(&self.poly_times(p, t), c);
        }
        out
    }

    /// `e(i) * x`: keep the terms whose left word is `i`.
    pub fn e_times_elem(&self, word: &[u8], e: &Element) -> Element {
        Element { terms: e.terms.iter().filter(|(t, _)| t.left_word() == word).map(|(t, c)| (t.clone(), c.clone())).collect() }
    }

    pub fn gen_times(&self, g: &Gen, e: &Element) -> Element {
        match g {
            Gen::E(w) => self.e_times_elem(&w.0, e),
            Gen::Y(t) => self.y_times_elem(*t, e),
            Gen::Psi(a) => self.psi_times_elem(*a, e),
        }
    }

    /// The identity of `R_alpha`: the sum of all idempotents of weight `alpha`.
    pub fn identity(&self, alpha: &RootVector) -> Element {
        let mut e = Element::zero();
        for w in words_of_weight(&self.datum, alpha) {
            e.add_term(Term::idempotent(&w.0), Coeff::one());
        }
        e
    }

    /// Normal form of the product `g_1 g_2 ... g_k` in `R_alpha`.
    pub fn normal_form(&self, alpha: &RootVector, gens: &[Gen]) -> Result<Element> {
        if alpha.height() as usize != self.d {
            return Err(KlrError::WeightMismatch(format!("{alpha} on {} strands", self.d)));
        }
        for g in gens {
            match g {
                Gen::E(w) => {
                    if &weight(&self.datum, &w.0) != alpha {
                        return Err(KlrError::WeightMismatch(format!("e{w} in R_{alpha}")));
                    }
                }
                Gen::Y(t) if *t >= self.d => return Err(KlrError::Parse(format!("y{}", t + 1))),
                Gen::Psi(a) if *a + 1 >= self.d => return Err(KlrError::Parse(format!("psi{}", a + 1))),
                _ => {}
            }
        }
        let mut x = match gens.last() {
            Some(Gen::E(w)) => Element::from_term(Term::idempotent(&w.0)),
            _ => self.identity(alpha),
        };
        for g in gens.iter().rev() {
            x = self.gen_times(g, &x);
        }
        Ok(x)
    }

    /// `psi_{c(w)} * x`, applying the canonical word from the right.
    pub fn psi_word_times(&self, w: &[u8], x: &Element) -> Element {
        let mut e = x.clone();
        for a in perm::canonical_word(w).into_iter().rev() {
            e = self.psi_times_elem(a, &e);
        }
        e
    }

    /// Product of two basis terms.
    pub fn mul_terms(&self, s: &Term, t: &Term) -> Element {
        if s.word != t.left_word() {
            return Element::zero();
        }
        let mut e = Element::from_term(t.clone());
        for (k, &m) in s.exps.iter().enumerate() {
            for _ in 0..m {
                e = self.y_times_elem(k, &e);
            }
        }
        self.psi_word_times(&s.perm, &e)
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::zero();
        for (s, c) in &a.terms {
            for (t, k) in &b.terms {
                out.add_scaled(&self.mul_terms(s, t), &(c * k));
            }
        }
        out
    }
}

/// `u = s_{n-2} ... s_r w`.
fn strip_block(w: &[u8], r: usize, n: usize) -> Perm {
    let mut u = w.to_vec();
    for a in r..n - 1 {
        u = perm::left_mul_s(a, &u);
    }
    u
}

/// Prefix `psi_r ... psi_{n-2}` to every term; canonical since the perms fix `n-1`.
fn prefix_block(e: &Element, r: usize, n: usize) -> Element {
    if r + 1 >= n {
        return e.clone();
    }
    let mut out = Element::zero();
    for (t, c) in &e.terms {
        debug_assert_eq!(t.perm[n - 1] as usize, n - 1);
        let mut w = t.perm.clone();
        for a in (r..n - 1).rev() {
            w = perm::left_mul_s(a, &w);
        }
        out.add_term(t.with_perm(w), c.clone());
    }
    out
}
