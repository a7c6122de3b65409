//! Good Lyndon words, Kostant partitions and good words.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::cartan::{CartanDatum, RootVector};
use crate::error::{KlrError, Result};
use crate::laurent::{qfact, LaurentPoly};
use crate::words::{is_lyndon, lex_cmp, Word};

/// Positive roots paired with their good Lyndon words.
#[derive(Clone, Debug)]
pub struct LyndonTable {
    datum: CartanDatum,
    roots: Vec<RootVector>,
    words: Vec<Word>,
    index: HashMap<RootVector, usize>,
}

impl LyndonTable {
    /// Build `i(beta)` by `i(beta) = max { i(g) i(d) : beta = g + d, i(g) < i(d) }`
    /// over roots of increasing height.
    pub fn new(datum: &CartanDatum) -> Self {
        let roots = datum.positive_roots();
        let index: HashMap<RootVector, usize> = roots.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        let mut words: Vec<Option<Word>> = vec![None; roots.len()];
        for (k, b) in roots.iter().enumerate() {
            if b.height() == 1 {
                words[k] = Some(Word(b.support()));
                continue;
            }
            let mut best: Option<Vec<u8>> = None;
            for (g, gr) in roots.iter().enumerate() {
                if gr.height() >= b.height() {
                    break;
                }
                let Some(dr) = b.checked_sub(gr) else { continue };
                let Some(&di) = index.get(&dr) else { continue };
                let (gw, dw) = (words[g].as_ref().unwrap(), words[di].as_ref().unwrap());
                if lex_cmp(datum, &gw.0, &dw.0) != Ordering::Less {
                    continue;
                }
                let cand = gw.concat(dw).0;
                if best.as_ref().is_none_or(|x| lex_cmp(datum, &cand, x) == Ordering::Greater) {
                    best = Some(cand);
                }
            }
            words[k] = Some(Word(best.expect("every non-simple root splits into two roots")));
        }
        Self {
            datum: datum.clone(),
            roots,
            words: words.into_iter().map(Option::unwrap).collect(),
            index,
        }
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn roots(&self) -> &[RootVector] {
        &self.roots
    }

    pub fn entries(&self) -> impl Iterator<Item = (&RootVector, &Word)> {
        self.roots.iter().zip(&self.words)
    }

    pub fn word(&self, beta: &RootVector) -> Result<&Word> {
        self.index
            .get(beta)
            .map(|&k| &self.words[k])
            .ok_or_else(|| KlrError::NotARoot(beta.to_string()))
    }

    pub fn root_of(&self, w: &Word) -> Option<&RootVector> {
        self.words.iter().position(|x| x == w).map(|k| &self.roots[k])
    }

    /// The convex order on roots transported from the words.
    pub fn root_cmp(&self, b: &RootVector, g: &RootVector) -> Result<Ordering> {
        Ok(lex_cmp(&self.datum, &self.word(b)?.0, &self.word(g)?.0))
    }

    /// Roots sorted decreasingly in the transported order.
    pub fn roots_decreasing(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.roots.len()).collect();
        idx.sort_by(|&a, &b| lex_cmp(&self.datum, &self.words[b].0, &self.words[a].0));
        idx
    }

    /// Kostant partitions of `alpha` as `(root, multiplicity)` lists in
    /// decreasing root order. Partitions are listed in a fixed order.
    pub fn kostant_partitions(&self, alpha: &RootVector) -> Vec<Vec<(RootVector, u32)>> {
        let order = self.roots_decreasing();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.partition_rec(&order, 0, alpha.clone(), &mut cur, &mut out);
        out
    }

    fn partition_rec(
        &self,
        order: &[usize],
        from: usize,
        rest: RootVector,
        cur: &mut Vec<(RootVector, u32)>,
        out: &mut Vec<Vec<(RootVector, u32)>>,
    ) {
        if rest.is_zero() {
            out.push(cur.clone());
            return;
        }
        if from == order.len() {
            return;
        }
        let r = &self.roots[order[from]];
        let mut n = 0u32;
        let mut left = rest.clone();
        loop {
            if n > 0 {
                cur.push((r.clone(), n));
            }
            self.partition_rec(order, from + 1, left.clone(), cur, out);
            if n > 0 {
                cur.pop();
            }
            match left.checked_sub(r) {
                Some(l) => {
                    left = l;
                    n += 1;
                }
                None => break,
            }
        }
    }

    /// Good words of weight `alpha`, one per Kostant partition, in decreasing lexicographic order.
    pub fn good_words(&self, alpha: &RootVector) -> Vec<GoodWord> {
        let mut out: Vec<GoodWord> = self
            .kostant_partitions(alpha)
            .into_iter()
            .map(|p| self.good_word_from_partition(&p))
            .collect();
        out.sort_by(|a, b| lex_cmp(&self.datum, &b.word.0, &a.word.0));
        out
    }

    fn good_word_from_partition(&self, p: &[(RootVector, u32)]) -> GoodWord {
        let mut factors: Vec<Factor> = p
            .iter()
            .map(|(r, n)| Factor { word: self.word(r).unwrap().clone(), mult: *n, root: r.clone() })
            .collect();
        factors.sort_by(|a, b| lex_cmp(&self.datum, &b.word.0, &a.word.0));
        let mut w = Vec::new();
        let mut s2 = 0i64;
        for f in &factors {
            for _ in 0..f.mult {
                w.extend_from_slice(&f.word.0);
            }
            s2 += self.datum.norm(&f.root) * (f.mult as i64) * (f.mult as i64 - 1);
        }
        assert_eq!(s2 % 4, 0, "s(i) is integral");
        GoodWord { word: Word(w), factors, s: s2 / 4 }
    }

    /// The good word with the given letters, if it is one.
    pub fn good_word(&self, w: &Word) -> Result<GoodWord> {
        let alpha = crate::words::weight(&self.datum, &w.0);
        self.good_words(&alpha)
            .into_iter()
            .find(|g| &g.word == w)
            .ok_or_else(|| KlrError::Parse(format!("{w} is not a good word")))
    }

    /// Is `n beta` a sum of roots all strictly below `beta`?
    pub fn convexity_violation(&self, beta: &RootVector, n: u32) -> Option<Vec<(RootVector, u32)>> {
        let target = beta.scale(n);
        self.kostant_partitions(&target).into_iter().find(|p| {
            p.iter().all(|(g, _)| self.root_cmp(g, beta).unwrap() == Ordering::Less)
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub word: Word,
    pub mult: u32,
    pub root: RootVector,
}

/// A good word with its canonical factorisation into powers of good Lyndon words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoodWord {
    pub word: Word,
    pub factors: Vec<Factor>,
    pub s: i64,
}

/// Source of the coefficients `kappa` of cuspidal characters at their Lyndon words.
pub trait KappaSource {
    fn lyndon_kappa(&self, beta: &RootVector) -> Result<LaurentPoly>;
}

impl GoodWord {
    /// `kappa = prod_k kappa_{j(k)}^{n_k} [n_k]!_{beta_k}`.
    pub fn kappa(&self, datum: &CartanDatum, src: &dyn KappaSource) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::one();
        for f in &self.factors {
            let k = src.lyndon_kappa(&f.root)?;
            acc = &acc * &k.pow(f.mult);
            acc = &acc * &qfact(f.mult, datum.norm(&f.root))?;
        }
        Ok(acc)
    }

    pub fn height(&self) -> usize {
        self.word.len()
    }
}

/// `prod q_beta^{-n(n-1)/2} [n]!_beta`, the coefficient of the concatenation in the shuffle power.
pub fn leading_coefficient(datum: &CartanDatum, factors: &[Factor]) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for f in factors {
        let norm = datum.norm(&f.root);
        let n = f.mult as i64;
        acc = &acc * &qfact(f.mult, norm).unwrap().shift(-(norm / 2) * n * (n - 1) / 2);
    }
    acc
}

/// Kostant partition count by a coin-change recursion, independent of the enumerator.
pub fn kostant_count(datum: &CartanDatum, alpha: &RootVector) -> BigInt {
    let roots = datum.positive_roots();
    let mut memo: HashMap<(usize, RootVector), BigInt> = HashMap::new();
    fn go(roots: &[RootVector], k: usize, a: &RootVector, memo: &mut HashMap<(usize, RootVector), BigInt>) -> BigInt {
        if a.is_zero() {
            return BigInt::from(1);
        }
        if k == roots.len() {
            return BigInt::from(0);
        }
        if let Some(v) = memo.get(&(k, a.clone())) {
            return v.clone();
        }
        let mut total = go(roots, k + 1, a, memo);
        if let Some(b) = a.checked_sub(&roots[k]) {
            total += go(roots, k, &b, memo);
        }
        memo.insert((k, a.clone()), total.clone());
        total
    }
    go(&roots, 0, alpha, &mut memo)
}

/// Every good Lyndon word is Lyndon of the right weight, and distinct roots get distinct words.
pub fn check_bijection(table: &LyndonTable) -> Result<()> {
    let d = table.datum();
    let mut seen = std::collections::HashSet::new();
    for (r, w) in table.entries() {
        if !is_lyndon(d, &w.0) || &crate::words::weight(d, &w.0) != r || !seen.insert(w.clone()) {
            return Err(KlrError::NotARoot(format!("bad Lyndon word {w} for {r}")));
        }
    }
    Ok(())
}

/// All weights of height between 1 and `max_height` for the given rank.
pub fn weights_up_to(rank: usize, max_height: u32) -> Vec<RootVector> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; rank];
    fn rec(k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<RootVector>) {
        if k == cur.len() {
            if cur.iter().sum::<u32>() > 0 {
                out.push(RootVector(cur.clone()));
            }
            return;
        }
        for c in 0..=left {
            cur[k] = c;
            rec(k + 1, left - c, cur, out);
        }
        cur[k] = 0;
    }
    rec(0, max_height, &mut cur, &mut out);
    out.sort_by_key(|r| (r.height(), r.clone()));
    out
}
