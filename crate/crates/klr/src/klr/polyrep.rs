//! Truncated polynomial representation of the nil-Hecke algebra `R_{n alpha_i}`.

use std::collections::HashMap;

use super::module::{BasisVector, FiniteModule, Matrix, Truncation};
use super::poly::{coeff, YPoly};
use crate::cartan::{CartanDatum, RootVector};
use crate::error::{KlrError, Result};
use crate::words::Word;

/// Monomials `y^m` with `|m| <= bound` on the word `(i, ..., i)`; `y_t` multiplies
/// (dropping anything above the bound) and `psi_t` is the divided difference
/// `f -> (s_t f - f) / (y_t - y_{t+1})`.
pub fn poly_rep(datum: &CartanDatum, i: u8, n: usize, bound: u32) -> Result<FiniteModule> {
    datum.check_letter(i)?;
    if n == 0 {
        return Err(KlrError::EmptyWord);
    }
    let mut monos: Vec<Vec<u16>> = Vec::new();
    fn rec(k: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[k] = e as u16;
            rec(k + 1, left - e, cur, out);
        }
        cur[k] = 0;
    }
    rec(0, bound, &mut vec![0u16; n], &mut monos);
    monos.sort_by_key(|m| (m.iter().map(|&x| x as u32).sum::<u32>(), m.clone()));
    let index: HashMap<Vec<u16>, usize> = monos.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
    let norm = datum.dot(i, i);
    let shift = norm * (n * (n - 1)) as i64 / 4;
    let word = Word(vec![i; n]);
    let basis: Vec<BasisVector> = monos
        .iter()
        .map(|m| BasisVector {
            word: word.clone(),
            degree: norm * m.iter().map(|&x| x as i64).sum::<i64>() - shift,
        })
        .collect();
    let mut alpha = RootVector::zero(datum.rank());
    alpha.0[i as usize - 1] = n as u32;
    let mut module = FiniteModule::zero_action(datum, vec![alpha], basis)?;
    for t in 0..n {
        let mut mat = Matrix::zero(monos.len());
        for (k, m) in monos.iter().enumerate() {
            let mut e = m.clone();
            e[t] += 1;
            if let Some(&r) = index.get(&e) {
                mat.set(r, k, coeff(1));
            }
        }
        module.y[t] = mat;
    }
    for t in 0..n - 1 {
        let mut mat = Matrix::zero(monos.len());
        for (k, m) in monos.iter().enumerate() {
            // (s_t f - f)/(y_t - y_{t+1}) = (f - s_t f)/(y_{t+1} - y_t)
            let f = YPoly::monomial(m.clone(), coeff(1));
            for (e, c) in f.divided_difference(t).terms() {
                mat.set(index[e], k, c.clone());
            }
        }
        module.psi[t] = Some(mat);
    }
    module.truncation = Some(Truncation {
        poly_degree: monos.iter().map(|m| m.iter().map(|&x| x as u32).sum()).collect(),
        bound,
    });
    Ok(module)
}
