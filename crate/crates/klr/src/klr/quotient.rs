//! Modules `R_alpha / J` where `J` is spanned by all standard basis elements
//! outside a finite kept set.

use std::collections::HashMap;

use super::algebra::{Element, KlrAlgebra, Term};
use super::module::{BasisVector, FiniteModule, Matrix, Vector};
use super::perm;
use crate::cartan::RootVector;
use crate::error::{KlrError, Result};
use crate::words::{weight, Word};

/// `(R_alpha / J)<shift>` with basis the images of `keep`.
///
/// The kept terms must share one right idempotent `e` and have no `y`s.
/// Closure of `J` under left multiplication is checked on every standard basis
/// element `psi_w y^m e` outside `keep` with `|m| <= 1`, against every generator.
pub fn quotient_module(alg: &KlrAlgebra, alpha: &RootVector, keep: &[Term], shift: i64) -> Result<FiniteModule> {
    let datum = alg.datum();
    let d = alg.strands();
    if alpha.height() as usize != d {
        return Err(KlrError::WeightMismatch(format!("{alpha} on {d} strands")));
    }
    let Some(first) = keep.first() else {
        return Err(KlrError::Module("empty kept set".into()));
    };
    let e = first.word.clone();
    if &weight(datum, &e) != alpha {
        return Err(KlrError::WeightMismatch(format!("idempotent {} in R_{alpha}", Word(e))));
    }
    for t in keep {
        if t.word != e || t.y_degree() != 0 || t.perm.len() != d {
            return Err(KlrError::Module(format!("kept term {t} is not of the form psi_w e")));
        }
    }
    let index: HashMap<&Term, usize> = keep.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let project = |x: &Element| -> Vector {
        x.terms.iter().filter_map(|(t, c)| index.get(t).map(|&k| (k, c.clone()))).collect()
    };

    // closure of J; other right idempotents lie wholly in J
    for w in perm::all_perms(d) {
        let mut exps = vec![vec![0u16; d]];
        for t in 0..d {
            let mut m = vec![0u16; d];
            m[t] = 1;
            exps.push(m);
        }
        for m in exps {
            let b = Term::new(w.clone(), m, e.clone());
            if index.contains_key(&b) {
                continue;
            }
            for t in 0..d {
                if !project(&alg.y_times(t, &b)).is_empty() {
                    return Err(KlrError::NotClosed(format!("y{} * {b} leaves J", t + 1)));
                }
            }
            for a in 0..d - 1 {
                if !project(&alg.psi_times(a, &b)).is_empty() {
                    return Err(KlrError::NotClosed(format!("psi{} * {b} leaves J", a + 1)));
                }
            }
        }
    }

    let basis = keep
        .iter()
        .map(|t| BasisVector { word: Word(t.left_word()), degree: alg.degree(t) + shift })
        .collect();
    let mut module = FiniteModule::zero_action(datum, vec![alpha.clone()], basis)?;
    for t in 0..d {
        let mut mat = Matrix::zero(keep.len());
        for (k, b) in keep.iter().enumerate() {
            mat.cols[k] = project(&alg.y_times(t, b));
        }
        module.y[t] = mat;
    }
    for a in 0..d - 1 {
        let mut mat = Matrix::zero(keep.len());
        for (k, b) in keep.iter().enumerate() {
            mat.cols[k] = project(&alg.psi_times(a, b));
        }
        module.psi[a] = Some(mat);
    }
    Ok(module)
}
