//! Permutations in one-line notation and their canonical reduced words.
//!
//! Positions are 0-based; `s_a` swaps positions `a` and `a + 1`. A permutation
//! `w` acts on words by moving the letter at position `p` to position `w[p]`.

pub type Perm = Vec<u8>;

pub fn identity(d: usize) -> Perm {
    (0..d as u8).collect()
}

pub fn is_identity(w: &[u8]) -> bool {
    w.iter().enumerate().all(|(p, &x)| x as usize == p)
}

/// `s_a * w`.
pub fn left_mul_s(a: usize, w: &[u8]) -> Perm {
    w.iter()
        .map(|&x| {
            let x = x as usize;
            (if x == a { a + 1 } else if x == a + 1 { a } else { x }) as u8
        })
        .collect()
}

pub fn compose(u: &[u8], v: &[u8]) -> Perm {
    v.iter().map(|&x| u[x as usize]).collect()
}

pub fn inverse(w: &[u8]) -> Perm {
    let mut inv = vec![0u8; w.len()];
    for (p, &x) in w.iter().enumerate() {
        inv[x as usize] = p as u8;
    }
    inv
}

pub fn length(w: &[u8]) -> usize {
    let mut n = 0;
    for p in 0..w.len() {
        for q in p + 1..w.len() {
            if w[p] > w[q] {
                n += 1;
            }
        }
    }
    n
}

/// The word obtained by letting `w` act on `word`.
pub fn act(w: &[u8], word: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; word.len()];
    for (p, &x) in w.iter().enumerate() {
        out[x as usize] = word[p];
    }
    out
}

/// Largest frame `n` with `w[n-1] != n-1`, with `r = w[n-1]`.
pub fn top_block(w: &[u8]) -> Option<(usize, usize)> {
    (1..=w.len()).rev().find(|&n| w[n - 1] as usize != n - 1).map(|n| (n, w[n - 1] as usize))
}

/// Canonical reduced word: `c(w) = [r, r+1, ..., n-2] ++ c(u)` where `r = w[n-1]`
/// and `w = s_r s_{r+1} ... s_{n-2} u` with `u` fixing `n-1`.
pub fn canonical_word(w: &[u8]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut cur = w.to_vec();
    for n in (1..=w.len()).rev() {
        let r = cur[n - 1] as usize;
        for a in r..n - 1 {
            out.push(a);
        }
        for a in r..n - 1 {
            cur = left_mul_s(a, &cur);
        }
    }
    out
}

/// First letter of the canonical word, if any.
pub fn first_letter(w: &[u8]) -> Option<usize> {
    top_block(w).map(|(_, r)| r)
}

/// Permutation of a word of generators `s_{a_1} ... s_{a_k}`.
pub fn from_word(d: usize, letters: &[usize]) -> Perm {
    let mut w = identity(d);
    for &a in letters.iter().rev() {
        w = left_mul_s(a, &w);
    }
    w
}

/// All permutations of `0..d` in lexicographic order.
pub fn all_perms(d: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur = identity(d);
    loop {
        out.push(cur.clone());
        // next permutation
        let Some(i) = (0..d.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else { break };
        let j = (i + 1..d).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// Minimal length coset representatives of `S_b x S_c` in `S_{b+c}`: the shuffles.
pub fn shuffles(b: usize, c: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let n = b + c;
    fn rec(n: usize, b: usize, start: usize, chosen: &mut Vec<u8>, out: &mut Vec<Perm>) {
        if chosen.len() == b {
            let rest: Vec<u8> = (0..n as u8).filter(|x| !chosen.contains(x)).collect();
            let mut w = chosen.clone();
            w.extend(rest);
            out.push(w);
            return;
        }
        for x in start..n {
            chosen.push(x as u8);
            rec(n, b, x + 1, chosen, out);
            chosen.pop();
        }
    }
    rec(n, b, 0, &mut Vec::new(), &mut out);
    out
}

/// Split `v = w x` with `w` a shuffle and `x` in `S_b x S_c`.
pub fn coset_split(v: &[u8], b: usize) -> (Perm, Perm) {
    let mut w = v.to_vec();
    w[..b].sort_unstable();
    w[b..].sort_unstable();
    let x = compose(&inverse(&w), v);
    (w, x)
}
