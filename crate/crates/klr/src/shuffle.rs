//! The quantum shuffle algebra on words and the subspace spanned by shuffles of letters.

use std::collections::BTreeMap;
use std::fmt;

use crate::cartan::{CartanDatum, RootVector};
use crate::error::{KlrError, Result};
use crate::laurent::{qfact, LaurentPoly, RatFunc};
use crate::words::{lex_cmp, order_key, weight, words_of_weight, Word};

/// A `Z[q, q^-1]`-linear combination of words of one weight.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WordSum {
    terms: BTreeMap<Word, LaurentPoly>,
}

fn same_content(a: &[u8], b: &[u8]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    x.sort_unstable();
    y.sort_unstable();
    x == y
}

impl WordSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: impl Into<Word>) -> Self {
        Self::term(w, LaurentPoly::one())
    }

    pub fn term(w: impl Into<Word>, c: LaurentPoly) -> Self {
        let mut s = Self::zero();
        s.add_term(w.into(), c);
        s
    }

    /// Build from terms; all words must have the same letters up to order.
    pub fn from_terms<I: IntoIterator<Item = (Word, LaurentPoly)>>(terms: I) -> Result<Self> {
        let mut s = Self::zero();
        for (w, c) in terms {
            if let Some(first) = s.terms.keys().next() {
                if !same_content(&first.0, &w.0) {
                    return Err(KlrError::WeightMismatch(format!("{first} and {w}")));
                }
            }
            s.add_term(w, c);
        }
        Ok(s)
    }

    pub fn add_term(&mut self, w: Word, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        debug_assert!(self.terms.keys().next().is_none_or(|f| same_content(&f.0, &w.0)));
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &LaurentPoly)> {
        self.terms.iter()
    }

    /// Terms in decreasing lexicographic order for the datum's letter order.
    pub fn sorted_terms(&self, datum: &CartanDatum) -> Vec<(&Word, &LaurentPoly)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| lex_cmp(datum, &b.0 .0, &a.0 .0));
        v
    }

    pub fn weight(&self, datum: &CartanDatum) -> Option<RootVector> {
        self.terms.keys().next().map(|w| weight(datum, &w.0))
    }

    pub fn add(&self, other: &WordSum) -> WordSum {
        let mut r = self.clone();
        for (w, c) in &other.terms {
            r.add_term(w.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &WordSum) -> WordSum {
        self.add(&other.scale(&LaurentPoly::constant(-1)))
    }

    pub fn scale(&self, c: &LaurentPoly) -> WordSum {
        let mut r = WordSum::zero();
        for (w, x) in &self.terms {
            r.add_term(w.clone(), x * c);
        }
        r
    }

    /// Prepend a word to every term.
    pub fn prepend(&self, prefix: &Word) -> WordSum {
        WordSum { terms: self.terms.iter().map(|(w, c)| (prefix.concat(w), c.clone())).collect() }
    }

    /// Quantum shuffle product.
    pub fn shuffle(&self, other: &WordSum, datum: &CartanDatum) -> WordSum {
        let mut r = WordSum::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca * cb;
                for (w, e) in shuffle_words(datum, &a.0, &b.0) {
                    r.add_term(Word(w), c.shift(-e));
                }
            }
        }
        r
    }

    /// Coefficient-wise bar involution.
    pub fn bar(&self) -> WordSum {
        WordSum { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.bar())).collect() }
    }

    /// Deconcatenation coproduct: all splits `w = u v` with the coefficient of `w`.
    pub fn coproduct(&self) -> Vec<(Word, Word, LaurentPoly)> {
        let mut out = Vec::new();
        for (w, c) in &self.terms {
            for k in 0..=w.len() {
                out.push((Word(w.0[..k].to_vec()), Word(w.0[k..].to_vec()), c.clone()));
            }
        }
        out
    }

    /// `theta*_i`: delete a trailing `i`, killing words that end otherwise.
    pub fn theta_star(&self, i: u8) -> WordSum {
        let mut r = WordSum::zero();
        for (w, c) in &self.terms {
            if w.0.last() == Some(&i) {
                r.add_term(Word(w.0[..w.len() - 1].to_vec()), c.clone());
            }
        }
        r
    }

    /// Divided power `theta*_i^n / [n]!_i`; fails if the division is not exact.
    pub fn divided_theta_star(&self, i: u8, n: u32, datum: &CartanDatum) -> Result<WordSum> {
        let mut x = self.clone();
        for _ in 0..n {
            x = x.theta_star(i);
        }
        let f = qfact(n, datum.dot(i, i))?;
        let mut r = WordSum::zero();
        for (w, c) in &x.terms {
            r.add_term(w.clone(), c.div_exact(&f)?);
        }
        Ok(r)
    }

    /// The lexicographically largest word and its coefficient.
    pub fn max_word(&self, datum: &CartanDatum) -> Result<(Word, LaurentPoly)> {
        self.terms
            .iter()
            .max_by(|a, b| lex_cmp(datum, &a.0 .0, &b.0 .0))
            .map(|(w, c)| (w.clone(), c.clone()))
            .ok_or(KlrError::ZeroElement)
    }

    pub fn eval_one(&self) -> BTreeMap<Word, num_bigint::BigInt> {
        self.terms.iter().map(|(w, c)| (w.clone(), c.eval_one())).collect()
    }

    /// Readable form with terms in decreasing lexicographic order.
    pub fn display(&self, datum: &CartanDatum) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.sorted_terms(datum)
            .into_iter()
            .map(|(w, c)| if c.is_one() { w.to_string() } else { format!("({c}){w}") })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Debug for WordSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c}){w}")).collect();
        write!(f, "WordSum[{}]", parts.join(" + "))
    }
}

/// All shuffles of `a` and `b` as `(word, e)`, the term carrying `q^{-e}`.
/// Placing a letter of `b` ahead of the unplaced letters of `a` costs their pairing.
pub fn shuffle_words(datum: &CartanDatum, a: &[u8], b: &[u8]) -> Vec<(Vec<u8>, i64)> {
    // suffix[i][l] = l . (a_i + ... + a_end)
    let mut suffix = vec![vec![0i64; datum.rank() + 1]; a.len() + 1];
    for i in (0..a.len()).rev() {
        for l in datum.letters() {
            suffix[i][l as usize] = suffix[i + 1][l as usize] + datum.dot(l, a[i]);
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(a.len() + b.len());
    fn rec(a: &[u8], b: &[u8], i: usize, j: usize, e: i64, suffix: &[Vec<i64>], cur: &mut Vec<u8>, out: &mut Vec<(Vec<u8>, i64)>) {
        if i == a.len() && j == b.len() {
            out.push((cur.clone(), e));
            return;
        }
        if i < a.len() {
            cur.push(a[i]);
            rec(a, b, i + 1, j, e, suffix, cur, out);
            cur.pop();
        }
        if j < b.len() {
            cur.push(b[j]);
            rec(a, b, i, j + 1, e + suffix[i][b[j] as usize], suffix, cur, out);
            cur.pop();
        }
    }
    rec(a, b, 0, 0, 0, &suffix, &mut cur, &mut out);
    out
}

/// `(i_1) o (i_2) o ... o (i_d)`.
pub fn letter_shuffle(datum: &CartanDatum, w: &[u8]) -> WordSum {
    let mut acc = WordSum::word(Word::empty());
    for &l in w {
        acc = acc.shuffle(&WordSum::word(vec![l]), datum);
    }
    acc
}

/// Shuffle power `x^{o n}`.
pub fn shuffle_power(datum: &CartanDatum, x: &WordSum, n: u32) -> WordSum {
    let mut acc = WordSum::word(Word::empty());
    for _ in 0..n {
        acc = acc.shuffle(x, datum);
    }
    acc
}

/// The twisted product on `f* (x) f*`: `(x (x) y)(z (x) w) = q^{-|y|.|z|} (x o z) (x) (y o w)`.
pub fn twisted_product(
    datum: &CartanDatum,
    left: &[(Word, Word, LaurentPoly)],
    right: &[(Word, Word, LaurentPoly)],
) -> BTreeMap<(Word, Word), LaurentPoly> {
    let mut out: BTreeMap<(Word, Word), LaurentPoly> = BTreeMap::new();
    for (x, y, c1) in left {
        for (z, w, c2) in right {
            let e = datum.bilinear(&weight(datum, &y.0), &weight(datum, &z.0));
            let c = (c1 * c2).shift(-e);
            for (u, e1) in shuffle_words(datum, &x.0, &z.0) {
                for (v, e2) in shuffle_words(datum, &y.0, &w.0) {
                    let entry = out.entry((Word(u.clone()), Word(v))).or_default();
                    *entry += &c.shift(-e1 - e2);
                }
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Group a coproduct by split and drop zero terms.
pub fn collect_coproduct(terms: Vec<(Word, Word, LaurentPoly)>) -> BTreeMap<(Word, Word), LaurentPoly> {
    let mut out: BTreeMap<(Word, Word), LaurentPoly> = BTreeMap::new();
    for (a, b, c) in terms {
        *out.entry((a, b)).or_default() += &c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub const DEFAULT_HEIGHT_GUARD: u32 = 8;

/// A subspace of the weight space in reduced row echelon form over `Q(q)`,
/// pivots taken at the largest word of each row.
#[derive(Clone, Debug)]
pub struct EchelonSubspace {
    pub weight: RootVector,
    /// Rows keyed by order keys (see [`order_key`]); pivots strictly decrease.
    rows: Vec<BTreeMap<Vec<u8>, RatFunc>>,
    order: Vec<u8>,
}

impl EchelonSubspace {
    pub fn new(datum: &CartanDatum, weight: RootVector) -> Self {
        Self { weight, rows: Vec::new(), order: datum.order().to_vec() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn unkey(&self, k: &[u8]) -> Word {
        Word(k.iter().map(|&p| self.order[p as usize]).collect())
    }

    pub fn pivots(&self) -> Vec<Word> {
        self.rows.iter().map(|r| self.unkey(r.keys().next_back().unwrap())).collect()
    }

    pub fn rows(&self) -> Vec<Vec<(Word, RatFunc)>> {
        self.rows
            .iter()
            .map(|r| r.iter().rev().map(|(k, c)| (self.unkey(k), c.clone())).collect())
            .collect()
    }

    /// Insert a vector; returns whether the dimension grew.
    pub fn insert(&mut self, datum: &CartanDatum, x: &WordSum) -> bool {
        let mut v: BTreeMap<Vec<u8>, RatFunc> = x
            .terms()
            .map(|(w, c)| (order_key(datum, &w.0), RatFunc::from_poly(c.clone())))
            .collect();
        for row in &self.rows {
            let p = row.keys().next_back().unwrap();
            if let Some(c) = v.get(p).cloned() {
                axpy(&mut v, &(-&c), row);
            }
        }
        let Some((p, lead)) = v.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = lead.inv().expect("nonzero pivot");
        for c in v.values_mut() {
            *c = &*c * &inv;
        }
        for row in self.rows.iter_mut() {
            if let Some(c) = row.get(&p).cloned() {
                axpy(row, &(-&c), &v);
            }
        }
        let at = self.rows.iter().position(|r| r.keys().next_back().unwrap() < &p).unwrap_or(self.rows.len());
        self.rows.insert(at, v);
        true
    }
}

fn axpy(v: &mut BTreeMap<Vec<u8>, RatFunc>, a: &RatFunc, row: &BTreeMap<Vec<u8>, RatFunc>) {
    for (k, c) in row {
        let add = a * c;
        match v.get_mut(k) {
            Some(x) => {
                *x = &*x + &add;
                if x.is_zero() {
                    v.remove(k);
                }
            }
            None => {
                v.insert(k.clone(), add);
            }
        }
    }
}

/// The span of all letter shuffles of weight `alpha`, in echelon form.
pub fn f_star_subspace(datum: &CartanDatum, alpha: &RootVector, guard: u32) -> Result<EchelonSubspace> {
    let h = alpha.height();
    if h > guard {
        return Err(KlrError::HeightGuard { height: h, guard });
    }
    let mut e = EchelonSubspace::new(datum, alpha.clone());
    for w in words_of_weight(datum, alpha) {
        e.insert(datum, &letter_shuffle(datum, &w.0));
    }
    Ok(e)
}

/// Words realised as `max(x)` for `x` in the span: the echelon pivots, sorted increasingly.
pub fn good_words_oracle(datum: &CartanDatum, alpha: &RootVector, guard: u32) -> Result<Vec<Word>> {
    let mut p = f_star_subspace(datum, alpha, guard)?.pivots();
    p.sort_by(|a, b| lex_cmp(datum, &a.0, &b.0));
    Ok(p)
}
