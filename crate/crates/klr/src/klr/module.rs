//! Finite-dimensional graded modules given by explicit generator matrices.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::poly::{Coeff, YPoly};
use crate::cartan::{CartanDatum, RootVector};
use crate::error::{KlrError, Result};
use crate::laurent::LaurentPoly;
use crate::shuffle::WordSum;
use crate::words::{weight, Word};

/// Sparse vector over a module basis.
pub type Vector = BTreeMap<usize, Coeff>;

pub fn vec_add(v: &mut Vector, k: usize, c: Coeff) {
    if c.is_zero() {
        return;
    }
    match v.get_mut(&k) {
        Some(x) => {
            *x += c;
            if x.is_zero() {
                v.remove(&k);
            }
        }
        None => {
            v.insert(k, c);
        }
    }
}

pub fn vec_add_scaled(v: &mut Vector, o: &Vector, c: &Coeff) {
    for (k, x) in o {
        vec_add(v, *k, x * c);
    }
}

pub fn unit(k: usize) -> Vector {
    let mut v = Vector::new();
    v.insert(k, Coeff::one());
    v
}

/// A linear operator stored column by column: `cols[j]` is the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub cols: Vec<Vector>,
}

impl Matrix {
    pub fn zero(n: usize) -> Self {
        Self { cols: vec![Vector::new(); n] }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn set(&mut self, row: usize, col: usize, c: Coeff) {
        if c.is_zero() {
            self.cols[col].remove(&row);
        } else {
            self.cols[col].insert(row, c);
        }
    }

    pub fn get(&self, row: usize, col: usize) -> Coeff {
        self.cols[col].get(&row).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        let mut out = Vector::new();
        for (j, c) in v {
            vec_add_scaled(&mut out, &self.cols[*j], c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisVector {
    pub word: Word,
    pub degree: i64,
}

/// A generator acting on a module (0-based indices).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModGen {
    Y(usize),
    Psi(usize),
}

/// Polynomial-degree bookkeeping for truncated modules such as the polynomial representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncation {
    pub poly_degree: Vec<u32>,
    pub bound: u32,
}

/// A finite-dimensional graded module over `R_{beta_1} (x) ... (x) R_{beta_k}`.
///
/// With one block this is an `R_alpha`-module. With several blocks the `psi`
/// at a block boundary is absent.
#[derive(Clone, Debug)]
pub struct FiniteModule {
    pub datum: CartanDatum,
    pub blocks: Vec<RootVector>,
    pub basis: Vec<BasisVector>,
    pub y: Vec<Matrix>,
    pub psi: Vec<Option<Matrix>>,
    pub truncation: Option<Truncation>,
}

impl FiniteModule {
    /// A module with the given basis and all generators acting by zero.
    pub fn zero_action(datum: &CartanDatum, blocks: Vec<RootVector>, basis: Vec<BasisVector>) -> Result<Self> {
        let d: u32 = blocks.iter().map(|b| b.height()).sum();
        let d = d as usize;
        let n = basis.len();
        let mut boundaries = Vec::new();
        let mut acc = 0;
        for b in &blocks[..blocks.len().saturating_sub(1)] {
            acc += b.height() as usize;
            boundaries.push(acc - 1);
        }
        let psi = (0..d.saturating_sub(1))
            .map(|a| if boundaries.contains(&a) { None } else { Some(Matrix::zero(n)) })
            .collect();
        let m = Self {
            datum: datum.clone(),
            blocks,
            basis,
            y: (0..d).map(|_| Matrix::zero(n)).collect(),
            psi,
            truncation: None,
        };
        m.check_words()?;
        Ok(m)
    }

    /// Every basis word has the block weights in order.
    pub fn check_words(&self) -> Result<()> {
        for b in &self.basis {
            let mut at = 0;
            for blk in &self.blocks {
                let h = blk.height() as usize;
                if b.word.len() < at + h || &weight(&self.datum, &b.word.0[at..at + h]) != blk {
                    return Err(KlrError::WeightMismatch(format!("basis word {} against blocks", b.word)));
                }
                at += h;
            }
            if at != b.word.len() {
                return Err(KlrError::WeightMismatch(format!("basis word {} is too long", b.word)));
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn strands(&self) -> usize {
        self.y.len()
    }

    pub fn weight(&self) -> RootVector {
        self.blocks.iter().skip(1).fold(self.blocks[0].clone(), |a, b| a.add(b))
    }

    /// First position of each block.
    pub fn block_offsets(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut acc = 0;
        for b in &self.blocks {
            out.push(acc);
            acc += b.height() as usize;
        }
        out
    }

    pub fn matrix(&self, g: ModGen) -> Option<&Matrix> {
        match g {
            ModGen::Y(t) => self.y.get(t),
            ModGen::Psi(a) => self.psi.get(a).and_then(|m| m.as_ref()),
        }
    }

    pub fn apply(&self, g: ModGen, v: &Vector) -> Result<Vector> {
        self.matrix(g)
            .map(|m| m.apply(v))
            .ok_or_else(|| KlrError::Module(format!("{g:?} is not defined on this module")))
    }

    /// Apply a polynomial in the `y`s.
    pub fn apply_poly(&self, p: &YPoly, v: &Vector) -> Vector {
        let mut out = Vector::new();
        for (e, c) in p.terms() {
            let mut x = v.clone();
            for (t, &m) in e.iter().enumerate() {
                for _ in 0..m {
                    x = self.y[t].apply(&x);
                }
            }
            vec_add_scaled(&mut out, &x, c);
        }
        out
    }

    /// The idempotent `e(i)` as a projection.
    pub fn apply_e(&self, w: &Word, v: &Vector) -> Vector {
        v.iter().filter(|(k, _)| &self.basis[**k].word == w).map(|(k, c)| (*k, c.clone())).collect()
    }

    /// Graded character: the sum of `q^deg` times the word of each basis vector.
    pub fn q_character(&self) -> WordSum {
        let mut s = WordSum::zero();
        for b in &self.basis {
            s.add_term(b.word.clone(), LaurentPoly::monomial(b.degree, 1));
        }
        s
    }

    /// Grading shift: all degrees go up by `m`.
    pub fn shift(&self, m: i64) -> Self {
        let mut out = self.clone();
        for b in out.basis.iter_mut() {
            b.degree += m;
        }
        out
    }

    /// Graded dimension.
    pub fn graded_dim(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for b in &self.basis {
            p.add_term(b.degree, 1.into());
        }
        p
    }

    /// Merge all blocks into one; the caller supplies the missing `psi`s.
    pub fn with_blocks_merged(mut self, boundary_psi: Vec<(usize, Matrix)>) -> Self {
        let w = self.weight();
        self.blocks = vec![w];
        for (a, m) in boundary_psi {
            self.psi[a] = Some(m);
        }
        self
    }

    /// Rename letters through `map` (indexed by old letter) into another datum.
    pub fn relabel(&self, target: &CartanDatum, map: &[u8]) -> Result<Self> {
        for i in self.datum.letters() {
            for j in self.datum.letters() {
                if self.datum.dot(i, j) != target.dot(map[i as usize], map[j as usize]) {
                    return Err(KlrError::Module("relabelling does not preserve the form".into()));
                }
            }
        }
        let rw = |w: &Word| Word(w.0.iter().map(|&l| map[l as usize]).collect());
        let mut out = self.clone();
        out.datum = target.clone();
        out.blocks = self
            .blocks
            .iter()
            .map(|b| {
                let mut v = RootVector::zero(target.rank());
                for i in self.datum.letters() {
                    v.0[map[i as usize] as usize - 1] += b.coeff(i);
                }
                v
            })
            .collect();
        for b in out.basis.iter_mut() {
            b.word = rw(&b.word);
        }
        Ok(out)
    }

    /// Outer tensor product `M (x) N`.
    pub fn boxtimes(&self, other: &FiniteModule) -> Result<FiniteModule> {
        if self.datum != other.datum {
            return Err(KlrError::Module("outer tensor of modules over different data".into()));
        }
        let (n1, n2) = (self.dim(), other.dim());
        let mut basis = Vec::with_capacity(n1 * n2);
        for a in &self.basis {
            for b in &other.basis {
                basis.push(BasisVector { word: a.word.concat(&b.word), degree: a.degree + b.degree });
            }
        }
        let idx = |i: usize, j: usize| i * n2 + j;
        let left = |m: &Matrix| {
            let mut out = Matrix::zero(n1 * n2);
            for i in 0..n1 {
                for (r, c) in &m.cols[i] {
                    for j in 0..n2 {
                        out.set(idx(*r, j), idx(i, j), c.clone());
                    }
                }
            }
            out
        };
        let right = |m: &Matrix| {
            let mut out = Matrix::zero(n1 * n2);
            for j in 0..n2 {
                for (r, c) in &m.cols[j] {
                    for i in 0..n1 {
                        out.set(idx(i, *r), idx(i, j), c.clone());
                    }
                }
            }
            out
        };
        let mut y: Vec<Matrix> = self.y.iter().map(left).collect();
        y.extend(other.y.iter().map(right));
        let mut psi: Vec<Option<Matrix>> = self.psi.iter().map(|m| m.as_ref().map(left)).collect();
        psi.push(None);
        psi.extend(other.psi.iter().map(|m| m.as_ref().map(right)));
        let mut blocks = self.blocks.clone();
        blocks.extend(other.blocks.iter().cloned());
        Ok(FiniteModule { datum: self.datum.clone(), blocks, basis, y, psi, truncation: None })
    }

    /// Split the first block at `beta`: keep the basis vectors whose first `ht(beta)`
    /// letters have weight `beta`, as a module over `R_beta (x) R_gamma (x) ...`.
    pub fn restrict(&self, beta: &RootVector) -> Result<FiniteModule> {
        let h = beta.height() as usize;
        let first = &self.blocks[0];
        let gamma = first
            .checked_sub(beta)
            .filter(|g| !g.is_zero() && h > 0)
            .ok_or_else(|| KlrError::WeightMismatch(format!("cannot split {first} at {beta}")))?;
        let keep: Vec<usize> = (0..self.dim())
            .filter(|&k| &weight(&self.datum, &self.basis[k].word.0[..h]) == beta)
            .collect();
        let pos: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(n, &k)| (k, n)).collect();
        let sub = |m: &Matrix| {
            let mut out = Matrix::zero(keep.len());
            for (n, &k) in keep.iter().enumerate() {
                for (r, c) in &m.cols[k] {
                    // operators preserving the split never leave the subspace
                    if let Some(&rr) = pos.get(r) {
                        out.set(rr, n, c.clone());
                    }
                }
            }
            out
        };
        let mut blocks = vec![beta.clone(), gamma];
        blocks.extend(self.blocks[1..].iter().cloned());
        let psi = self
            .psi
            .iter()
            .enumerate()
            .map(|(a, m)| if a + 1 == h { None } else { m.as_ref().map(sub) })
            .collect();
        Ok(FiniteModule {
            datum: self.datum.clone(),
            blocks,
            basis: keep.iter().map(|&k| self.basis[k].clone()).collect(),
            y: self.y.iter().map(sub).collect(),
            psi,
            truncation: None,
        })
    }

    /// Indices of the basis vectors with word `w`.
    pub fn weight_space(&self, w: &Word) -> Vec<usize> {
        (0..self.dim()).filter(|&k| &self.basis[k].word == w).collect()
    }
}

/// Integer-valued convenience for building explicit matrices.
pub fn set_int(m: &mut Matrix, row: usize, col: usize, c: i64) {
    m.set(row, col, super::poly::coeff(c));
}
