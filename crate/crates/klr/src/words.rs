//! Words in the letters of a Cartan datum.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanDatum, RootVector};
use crate::error::{KlrError, Result};
use crate::laurent::{qfact, LaurentPoly};

/// A finite sequence of letters `1..=rank`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn repeat(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }

    pub fn range(from: u8, to: u8) -> Word {
        if from > to {
            return Word::empty();
        }
        Word((from..=to).collect())
    }

    /// Parse the CLI syntax `1,1,2`. The empty string is the empty word.
    pub fn parse(s: &str) -> Result<Word> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Word::empty());
        }
        s.split(',')
            .map(|t| t.trim().parse::<u8>().map_err(|e| KlrError::Parse(format!("word {s:?}: {e}"))))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn check(&self, datum: &CartanDatum) -> Result<()> {
        self.0.iter().try_for_each(|&i| datum.check_letter(i))
    }
}

impl From<Vec<u8>> for Word {
    fn from(v: Vec<u8>) -> Self {
        Word(v)
    }
}

impl From<&[u8]> for Word {
    fn from(v: &[u8]) -> Self {
        Word(v.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Lexicographic order through the datum's letter order. A proper prefix is smaller.
pub fn lex_cmp(datum: &CartanDatum, a: &[u8], b: &[u8]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match datum.cmp_letters(*x, *y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// The word rewritten as positions in the letter order, so plain slice
/// comparison agrees with [`lex_cmp`].
pub fn order_key(datum: &CartanDatum, w: &[u8]) -> Vec<u8> {
    w.iter().map(|&l| datum.letter_rank(l)).collect()
}

pub fn is_lyndon(datum: &CartanDatum, w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|k| lex_cmp(datum, w, &w[k..]) == Ordering::Less)
}

/// `w = u v` with `v` the longest proper Lyndon suffix; `None` for words of length below 2.
pub fn standard_factorization(datum: &CartanDatum, w: &[u8]) -> Option<(Word, Word)> {
    (1..w.len()).find(|&k| is_lyndon(datum, &w[k..])).map(|k| (Word(w[..k].to_vec()), Word(w[k..].to_vec())))
}

/// Chen-Fox-Lyndon factorisation by Duval's algorithm: Lyndon factors in
/// nonincreasing order whose concatenation is `w`.
pub fn canonical_factorization(datum: &CartanDatum, w: &[u8]) -> Vec<Word> {
    let s = order_key(datum, w);
    let n = s.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && s[k] <= s[j] {
            if s[k] < s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            out.push(Word(w[i..i + j - k].to_vec()));
            i += j - k;
        }
    }
    out
}

pub fn weight(datum: &CartanDatum, w: &[u8]) -> RootVector {
    let mut v = RootVector::zero(datum.rank());
    for &l in w {
        v.0[l as usize - 1] += 1;
    }
    v
}

/// `[i]!`: product of `[m]!_j` over the maximal runs `j^m` of the word.
pub fn word_factorial(datum: &CartanDatum, w: &[u8]) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    let mut k = 0;
    while k < w.len() {
        let mut e = k;
        while e < w.len() && w[e] == w[k] {
            e += 1;
        }
        acc = &acc * &qfact((e - k) as u32, datum.dot(w[k], w[k])).expect("letter norms are even");
        k = e;
    }
    acc
}

/// All words of the given weight, in increasing lexicographic order.
pub fn words_of_weight(datum: &CartanDatum, alpha: &RootVector) -> Vec<Word> {
    let mut counts: Vec<(u8, u32)> = datum
        .order()
        .iter()
        .map(|&l| (l, alpha.coeff(l)))
        .filter(|&(_, c)| c > 0)
        .collect();
    let d = alpha.height() as usize;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn rec(counts: &mut [(u8, u32)], cur: &mut Vec<u8>, d: usize, out: &mut Vec<Word>) {
        if cur.len() == d {
            out.push(Word(cur.clone()));
            return;
        }
        for k in 0..counts.len() {
            if counts[k].1 == 0 {
                continue;
            }
            counts[k].1 -= 1;
            cur.push(counts[k].0);
            rec(counts, cur, d, out);
            cur.pop();
            counts[k].1 += 1;
        }
    }
    rec(&mut counts, &mut cur, d, &mut out);
    out
}
