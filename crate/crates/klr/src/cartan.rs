//! Finite-type Cartan data and positive roots.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{KlrError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub fn letter(self) -> char {
        match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        }
    }
}

impl FromStr for CartanType {
    type Err = KlrError;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(CartanType::A),
            "B" => Ok(CartanType::B),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            "E" => Ok(CartanType::E),
            "F" => Ok(CartanType::F),
            "G" => Ok(CartanType::G),
            _ => Err(KlrError::InvalidType(s.to_string())),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// An element of the positive root lattice, as multiplicities of the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(pub Vec<u32>);

impl RootVector {
    pub fn zero(rank: usize) -> Self {
        RootVector(vec![0; rank])
    }

    /// The simple root for letter `i` (1-based).
    pub fn simple(rank: usize, i: u8) -> Self {
        let mut v = vec![0; rank];
        v[i as usize - 1] = 1;
        RootVector(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn coeff(&self, i: u8) -> u32 {
        self.0[i as usize - 1]
    }

    pub fn add(&self, other: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, n: u32) -> RootVector {
        RootVector(self.0.iter().map(|a| a * n).collect())
    }

    /// `self - other` if it stays in the positive cone.
    pub fn checked_sub(&self, other: &RootVector) -> Option<RootVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(RootVector)
    }

    /// Nodes with nonzero coefficient.
    pub fn support(&self) -> Vec<u8> {
        (0..self.0.len()).filter(|&k| self.0[k] > 0).map(|k| k as u8 + 1).collect()
    }

    pub fn parse(s: &str, rank: usize) -> Result<RootVector> {
        let v = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|e| KlrError::Parse(format!("weight {s:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        if v.len() != rank {
            return Err(KlrError::Parse(format!("weight {s:?} needs {rank} entries")));
        }
        Ok(RootVector(v))
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if c > 1 {
                write!(f, "{c}")?;
            }
            write!(f, "a{}", k + 1)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A Cartan datum of finite type together with a total order on its nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanDatum {
    ty: CartanType,
    rank: usize,
    dot: Vec<Vec<i64>>,
    /// Letters from smallest to largest.
    order: Vec<u8>,
    /// `pos[i-1]` is the position of letter `i` in `order`.
    pos: Vec<u8>,
}

fn edges(ty: CartanType, rank: usize) -> Vec<(usize, usize)> {
    let chain = |from: usize, to: usize| (from..to).map(|k| (k, k + 1)).collect::<Vec<_>>();
    match ty {
        CartanType::A | CartanType::B | CartanType::C | CartanType::F | CartanType::G => chain(1, rank),
        CartanType::D => {
            let mut e = vec![(1, 3), (2, 3)];
            e.extend(chain(3, rank));
            e
        }
        CartanType::E => {
            let mut e = vec![(1, 3), (3, 4), (2, 4)];
            e.extend(chain(4, rank));
            e
        }
    }
}

impl CartanDatum {
    pub fn new(ty: CartanType, rank: usize) -> Result<Self> {
        Self::with_order(ty, rank, None)
    }

    /// Build a datum. `order` lists the letters from smallest to largest; `None`
    /// means the natural order `1 < 2 < ... < rank`.
    pub fn with_order(ty: CartanType, rank: usize, order: Option<Vec<u8>>) -> Result<Self> {
        let ok = match ty {
            CartanType::A => rank >= 1,
            CartanType::B | CartanType::C => rank >= 2,
            CartanType::D => rank >= 4,
            CartanType::E => (6..=8).contains(&rank),
            CartanType::F => rank == 4,
            CartanType::G => rank == 2,
        };
        if !ok || rank > 200 {
            return Err(KlrError::InvalidRank { ty: ty.letter(), rank });
        }
        let norm = |k: usize| -> i64 {
            match ty {
                CartanType::B => if k == 1 { 2 } else { 4 },
                CartanType::C => if k == 1 { 4 } else { 2 },
                CartanType::F => if k <= 2 { 4 } else { 2 },
                CartanType::G => if k == 1 { 2 } else { 6 },
                _ => 2,
            }
        };
        let mut dot = vec![vec![0i64; rank]; rank];
        for k in 1..=rank {
            dot[k - 1][k - 1] = norm(k);
        }
        for (i, j) in edges(ty, rank) {
            let v = -norm(i).max(norm(j)) / 2;
            dot[i - 1][j - 1] = v;
            dot[j - 1][i - 1] = v;
        }
        let order = order.unwrap_or_else(|| (1..=rank as u8).collect());
        let mut seen = order.clone();
        seen.sort_unstable();
        if seen != (1..=rank as u8).collect::<Vec<_>>() {
            return Err(KlrError::InvalidOrder(rank));
        }
        let mut pos = vec![0u8; rank];
        for (p, &l) in order.iter().enumerate() {
            pos[l as usize - 1] = p as u8;
        }
        Ok(Self { ty, rank, dot, order, pos })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> &[u8] {
        &self.order
    }

    pub fn is_natural_order(&self) -> bool {
        self.order.iter().enumerate().all(|(p, &l)| l as usize == p + 1)
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.ty, CartanType::A | CartanType::D | CartanType::E)
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.ty, self.rank)
    }

    pub fn check_letter(&self, i: u8) -> Result<()> {
        if i == 0 || i as usize > self.rank {
            return Err(KlrError::InvalidLetter(i));
        }
        Ok(())
    }

    /// `i . j` for letters (1-based).
    pub fn dot(&self, i: u8, j: u8) -> i64 {
        self.dot[i as usize - 1][j as usize - 1]
    }

    /// `a_ij = 2 (i.j) / (i.i)`.
    pub fn a(&self, i: u8, j: u8) -> i64 {
        2 * self.dot(i, j) / self.dot(i, i)
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        (1..=self.rank as u8)
            .map(|i| (1..=self.rank as u8).map(|j| self.a(i, j)).collect())
            .collect()
    }

    pub fn letters(&self) -> impl Iterator<Item = u8> {
        1..=self.rank as u8
    }

    /// Position of a letter in the chosen total order.
    pub fn letter_rank(&self, i: u8) -> u8 {
        self.pos[i as usize - 1]
    }

    pub fn cmp_letters(&self, i: u8, j: u8) -> Ordering {
        self.letter_rank(i).cmp(&self.letter_rank(j))
    }

    pub fn bilinear(&self, a: &RootVector, b: &RootVector) -> i64 {
        let mut s = 0;
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                s += x as i64 * y as i64 * self.dot[i][j];
            }
        }
        s
    }

    /// `letter . beta`.
    pub fn dot_letter(&self, i: u8, b: &RootVector) -> i64 {
        b.0.iter().enumerate().map(|(j, &y)| y as i64 * self.dot[i as usize - 1][j]).sum()
    }

    pub fn norm(&self, b: &RootVector) -> i64 {
        self.bilinear(b, b)
    }

    /// Positive roots, ordered by height and then by coefficient vector.
    pub fn positive_roots(&self) -> Vec<RootVector> {
        let mut all: BTreeSet<(u32, RootVector)> = BTreeSet::new();
        let mut layer: Vec<RootVector> = self.letters().map(|i| RootVector::simple(self.rank, i)).collect();
        let mut known: HashSet<RootVector> = layer.iter().cloned().collect();
        while !layer.is_empty() {
            let mut next = BTreeSet::new();
            for b in &layer {
                all.insert((b.height(), b.clone()));
                for i in self.letters() {
                    let ai = RootVector::simple(self.rank, i);
                    // Length p of the string below b in direction i.
                    let mut p = 0i64;
                    let mut cur = b.clone();
                    while let Some(c) = cur.checked_sub(&ai) {
                        if !known.contains(&c) {
                            break;
                        }
                        p += 1;
                        cur = c;
                    }
                    let pairing = 2 * self.dot_letter(i, b) / self.dot(i, i);
                    if p - pairing > 0 {
                        next.insert(b.add(&ai));
                    }
                }
            }
            layer = next.into_iter().collect();
            known.extend(layer.iter().cloned());
        }
        all.into_iter().map(|(_, r)| r).collect()
    }

    pub fn is_root(&self, b: &RootVector) -> bool {
        b.rank() == self.rank && self.positive_roots().contains(b)
    }
}
