//! Induction: merge two adjacent blocks of a parabolic module.
//!
//! The induced module has basis `psi_w (x) m` for `w` a shuffle of the two
//! blocks and `m` a basis vector. A local generator `g` sends `psi_w (x) m` to
//! `sum_v c_v psi_v y^k (x) m`, and each `psi_v y^k (x) m` is reduced back to the
//! basis by writing `v = w' x` with `x` in the parabolic subgroup.

use std::collections::HashMap;

use num_traits::One;

use super::algebra::{Element, KlrAlgebra, Term};
use super::module::{vec_add_scaled, BasisVector, FiniteModule, Matrix, ModGen, Vector};
use super::perm::{self, Perm};
use super::poly::Coeff;
use crate::error::{KlrError, Result};
use crate::words::Word;

pub const DEFAULT_INDUCE_GUARD: usize = 20_000;

/// `Ind` of `m` from `... (x) R_beta (x) R_gamma (x) ...` to `... (x) R_{beta+gamma} (x) ...`,
/// merging blocks `block` and `block + 1`.
pub fn induce(m: &FiniteModule, block: usize, guard: usize) -> Result<FiniteModule> {
    if block + 1 >= m.blocks.len() {
        return Err(KlrError::Module(format!("no block after block {block}")));
    }
    let offsets = m.block_offsets();
    let p0 = offsets[block];
    let b = m.blocks[block].height() as usize;
    let c = m.blocks[block + 1].height() as usize;
    let n = b + c;
    let cosets = perm::shuffles(b, c);
    let size = cosets.len() * m.dim();
    if size > guard {
        return Err(KlrError::SizeGuard(format!("induced module would have dimension {size}")));
    }
    let alg = KlrAlgebra::new(&m.datum, n);
    let seg = |k: usize| m.basis[k].word.0[p0..p0 + n].to_vec();
    let index: HashMap<(Perm, usize), usize> = cosets
        .iter()
        .enumerate()
        .flat_map(|(wi, w)| (0..m.dim()).map(move |k| ((w.clone(), k), wi * m.dim() + k)))
        .collect();

    let mut basis = Vec::with_capacity(size);
    for w in &cosets {
        for k in 0..m.dim() {
            let local = Term::new(w.clone(), vec![0; n], seg(k));
            let mut word = m.basis[k].word.0.clone();
            word[p0..p0 + n].copy_from_slice(&local.left_word());
            basis.push(BasisVector { word: Word(word), degree: m.basis[k].degree + alg.degree(&local) });
        }
    }

    let mut red = Reducer { m, alg: &alg, p0, b, index: &index, memo: HashMap::new() };
    let d = m.strands();
    let mut y = Vec::with_capacity(d);
    for t in 0..d {
        let mut mat = Matrix::zero(size);
        for (wi, w) in cosets.iter().enumerate() {
            for k in 0..m.dim() {
                let col = wi * m.dim() + k;
                let img = if (p0..p0 + n).contains(&t) {
                    let e = alg.y_times(t - p0, &Term::new(w.clone(), vec![0; n], seg(k)));
                    red.reduce_element(&e, k)?
                } else {
                    lift(&m.y[t].cols[k], wi, m.dim())
                };
                mat.cols[col] = img;
            }
        }
        y.push(mat);
    }
    let mut psi = Vec::with_capacity(d.saturating_sub(1));
    for a in 0..d.saturating_sub(1) {
        let local = a >= p0 && a + 1 < p0 + n;
        if !local && m.psi[a].is_none() {
            psi.push(None);
            continue;
        }
        let mut mat = Matrix::zero(size);
        for (wi, w) in cosets.iter().enumerate() {
            for k in 0..m.dim() {
                let col = wi * m.dim() + k;
                mat.cols[col] = if local {
                    let e = alg.psi_times(a - p0, &Term::new(w.clone(), vec![0; n], seg(k)));
                    red.reduce_element(&e, k)?
                } else {
                    lift(&m.psi[a].as_ref().unwrap().cols[k], wi, m.dim())
                };
            }
        }
        psi.push(Some(mat));
    }
    let mut blocks = m.blocks.clone();
    let merged = blocks[block].add(&blocks[block + 1]);
    blocks.splice(block..block + 2, [merged]);
    Ok(FiniteModule { datum: m.datum.clone(), blocks, basis, y, psi, truncation: None })
}

fn lift(v: &Vector, wi: usize, dim: usize) -> Vector {
    v.iter().map(|(r, c)| (wi * dim + r, c.clone())).collect()
}

struct Reducer<'a> {
    m: &'a FiniteModule,
    alg: &'a KlrAlgebra,
    p0: usize,
    b: usize,
    index: &'a HashMap<(Perm, usize), usize>,
    memo: HashMap<(Term, usize), Vector>,
}

impl Reducer<'_> {
    fn reduce_element(&mut self, e: &Element, k: usize) -> Result<Vector> {
        let mut out = Vector::new();
        for (t, c) in &e.terms {
            let v = self.reduce(t, k)?;
            vec_add_scaled(&mut out, &v, c);
        }
        Ok(out)
    }

    /// `psi_v y^m (x) e_k` in the induced basis.
    fn reduce(&mut self, t: &Term, k: usize) -> Result<Vector> {
        if let Some(v) = self.memo.get(&(t.clone(), k)) {
            return Ok(v.clone());
        }
        let (w, x) = perm::coset_split(&t.perm, self.b);
        // psi_{c(x)} y^m acting inside the module
        let mut vec = super::module::unit(k);
        for (s, &e) in t.exps.iter().enumerate() {
            for _ in 0..e {
                vec = self.m.apply(ModGen::Y(self.p0 + s), &vec)?;
            }
        }
        for a in perm::canonical_word(&x).into_iter().rev() {
            vec = self.m.apply(ModGen::Psi(self.p0 + a), &vec)?;
        }
        let mut out = Vector::new();
        for (l, c) in &vec {
            let col = self.index[&(w.clone(), *l)];
            super::module::vec_add(&mut out, col, c.clone());
        }
        if !perm::is_identity(&w) && !perm::is_identity(&x) {
            // psi_{c(w)} psi_{c(x)} y^m = psi_{c(v)} y^m + lower terms
            let base = Element::from_term(Term::new(x.clone(), t.exps.clone(), t.word.clone()));
            let mut prod = self.alg.psi_word_times(&w, &base);
            let lead = prod.terms.remove(t);
            if lead != Some(Coeff::one()) {
                return Err(KlrError::Module(format!("straightening of {t} lost its leading term")));
            }
            for (s, c) in &prod.terms {
                let v = self.reduce(s, k)?;
                vec_add_scaled(&mut out, &v, &-c.clone());
            }
        }
        self.memo.insert((t.clone(), k), out.clone());
        Ok(out)
    }
}

/// Induction product `M o N` of two single-block modules.
pub fn induction_product(m: &FiniteModule, n: &FiniteModule, guard: usize) -> Result<FiniteModule> {
    induce(&m.boxtimes(n)?, m.blocks.len() - 1, guard)
}
