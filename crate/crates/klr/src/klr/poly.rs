//! The polynomials `Q_ij(u, v)` and polynomials in the dot generators `y_1, ..., y_d`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cartan::CartanDatum;

pub type Coeff = BigRational;

pub fn coeff(n: i64) -> Coeff {
    BigRational::from_integer(n.into())
}

/// A polynomial in two variables `u, v` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QPoly {
    pub terms: BTreeMap<(u32, u32), i64>,
}

impl QPoly {
    fn add(&mut self, a: u32, b: u32, c: i64) {
        let e = self.terms.entry((a, b)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(a, b));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest total degree of a term.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|(a, b)| a + b).max().unwrap_or(0)
    }

    /// Substitute `u = y_r`, `v = y_s`.
    pub fn at(&self, d: usize, r: usize, s: usize) -> YPoly {
        let mut p = YPoly::zero(d);
        for (&(a, b), &c) in &self.terms {
            let mut e = vec![0u16; d];
            e[r] += a as u16;
            e[s] += b as u16;
            p.add_term(e, coeff(c));
        }
        p
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(a, b), c)| format!("{c}*u^{a}*v^{b}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `Q_ij(u, v)` for the datum's letter order.
pub fn q_poly(datum: &CartanDatum, i: u8, j: u8) -> QPoly {
    let mut q = QPoly::default();
    if i == j {
        return q;
    }
    if datum.dot(i, j) == 0 {
        q.add(0, 0, 1);
        return q;
    }
    let a = (-datum.a(i, j)) as u32;
    let b = (-datum.a(j, i)) as u32;
    let sign = if datum.cmp_letters(i, j) == std::cmp::Ordering::Greater { -1 } else { 1 };
    q.add(a, 0, sign);
    q.add(0, b, -sign);
    q
}

/// `(Q(w, v) - Q(u, v)) / (w - u)` as a polynomial in `(u, v, w)`.
pub fn braid_quotient(q: &QPoly) -> BTreeMap<(u32, u32, u32), i64> {
    let mut out: BTreeMap<(u32, u32, u32), i64> = BTreeMap::new();
    for (&(a, b), &c) in &q.terms {
        // (w^a - u^a)/(w - u) = sum_k w^k u^{a-1-k}
        for k in 0..a {
            *out.entry((a - 1 - k, b, k)).or_insert(0) += c;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// The right-hand side of the braid relation at position `r` (0-based) for letters `(i, j, i)`.
pub fn braid_correction(datum: &CartanDatum, d: usize, r: usize, i: u8, j: u8) -> YPoly {
    let mut p = YPoly::zero(d);
    for ((a, b, c), k) in braid_quotient(&q_poly(datum, i, j)) {
        let mut e = vec![0u16; d];
        e[r] += a as u16;
        e[r + 1] += b as u16;
        e[r + 2] += c as u16;
        p.add_term(e, coeff(k));
    }
    p
}

/// A polynomial in `y_1, ..., y_d` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YPoly {
    d: usize,
    terms: BTreeMap<Vec<u16>, Coeff>,
}

impl YPoly {
    pub fn zero(d: usize) -> Self {
        Self { d, terms: BTreeMap::new() }
    }

    pub fn one(d: usize) -> Self {
        Self::monomial(vec![0; d], Coeff::one())
    }

    pub fn var(d: usize, t: usize) -> Self {
        let mut e = vec![0; d];
        e[t] = 1;
        Self::monomial(e, Coeff::one())
    }

    pub fn monomial(e: Vec<u16>, c: Coeff) -> Self {
        let mut p = Self::zero(e.len());
        p.add_term(e, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.d
    }

    pub fn add_term(&mut self, e: Vec<u16>, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &Coeff)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().map(|&x| x as u32).sum()).max().unwrap_or(0)
    }

    pub fn add(&self, o: &YPoly) -> YPoly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn scale(&self, k: &Coeff) -> YPoly {
        let mut r = YPoly::zero(self.d);
        for (e, c) in &self.terms {
            r.add_term(e.clone(), c * k);
        }
        r
    }

    pub fn mul(&self, o: &YPoly) -> YPoly {
        let mut r = YPoly::zero(self.d);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1 * c2);
            }
        }
        r
    }

    /// Swap `y_r` and `y_{r+1}`.
    pub fn swap(&self, r: usize) -> YPoly {
        let mut out = YPoly::zero(self.d);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.swap(r, r + 1);
            out.add_term(e, c.clone());
        }
        out
    }

    /// `(f - s_r f) / (y_{r+1} - y_r)`.
    pub fn divided_difference(&self, r: usize) -> YPoly {
        let mut out = YPoly::zero(self.d);
        for (e, c) in &self.terms {
            let (a, b) = (e[r], e[r + 1]);
            if a == b {
                continue;
            }
            let lo = a.min(b);
            let gap = a.max(b) - lo;
            // y_r^a y_{r+1}^b - y_r^b y_{r+1}^a over (y_{r+1} - y_r)
            let sign = if a > b { -c.clone() } else { c.clone() };
            for k in 0..gap {
                let mut m = e.clone();
                m[r] = lo + k;
                m[r + 1] = lo + gap - 1 - k;
                out.add_term(m, sign.clone());
            }
        }
        out
    }
}

impl fmt::Display for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x > 0)
                    .map(|(t, &x)| if x == 1 { format!("y{}", t + 1) } else { format!("y{}^{x}", t + 1) })
                    .collect();
                if mono.is_empty() {
                    c.to_string()
                } else {
                    format!("{c}*{}", mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YPoly({self})")
    }
}
