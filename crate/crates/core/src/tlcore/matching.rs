//! Planar matchings between `bottom` lower and `top` upper points.
//!
//! Endpoint labels follow the boundary circle: upper points `0..top` left to
//! right, then lower points right to left. A matching is non-crossing iff it
//! is a balanced parenthesis word in this order, so it is stored as a 64-bit
//! Dyck word (bit `k` set when label `k` opens a pair).
//!
//! A square matching (`top == bottom == n`) is a diagram of `TL_n`; other
//! shapes are used for half diagrams and the intermediate stages of the
//! seminormal construction.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_ENDPOINTS: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarMatching {
    top: u8,
    bottom: u8,
    word: u64,
}

/// A boundary point of a matching.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum End {
    Top(usize),
    Bottom(usize),
}

impl PlanarMatching {
    pub fn top(&self) -> usize {
        self.top as usize
    }

    pub fn bottom(&self) -> usize {
        self.bottom as usize
    }

    /// Strand count of a square matching.
    pub fn n(&self) -> usize {
        debug_assert_eq!(self.top, self.bottom);
        self.top as usize
    }

    pub fn is_square(&self) -> bool {
        self.top == self.bottom
    }

    pub fn word(&self) -> u64 {
        self.word
    }

    fn len(&self) -> usize {
        self.top as usize + self.bottom as usize
    }

    fn label(&self, e: End) -> usize {
        match e {
            End::Top(j) => j,
            End::Bottom(j) => self.top as usize + self.bottom as usize - 1 - j,
        }
    }

    fn end(&self, label: usize) -> End {
        if label < self.top as usize {
            End::Top(label)
        } else {
            End::Bottom(self.len() - 1 - label)
        }
    }

    /// Partner of every label.
    pub fn pairing(&self) -> Vec<u8> {
        let len = self.len();
        let mut out = vec![0u8; len];
        let mut stack = [0u8; MAX_ENDPOINTS];
        let mut sp = 0;
        for k in 0..len {
            if self.word >> k & 1 == 1 {
                stack[sp] = k as u8;
                sp += 1;
            } else {
                sp -= 1;
                let o = stack[sp];
                out[k] = o;
                out[o as usize] = k as u8;
            }
        }
        out
    }

    /// Builds from a partner array over the circular labels.
    pub fn from_pairing(top: usize, bottom: usize, pairing: &[usize]) -> Result<PlanarMatching> {
        let len = top + bottom;
        if len > MAX_ENDPOINTS || len % 2 == 1 {
            return Err(Error::InvalidMatching(format!("{len} endpoints")));
        }
        if pairing.len() != len {
            return Err(Error::InvalidMatching(format!("pairing has {} entries, expected {len}", pairing.len())));
        }
        let mut word = 0u64;
        let mut stack = Vec::with_capacity(len);
        for (k, &q) in pairing.iter().enumerate() {
            if q >= len || q == k || pairing[q] != k {
                return Err(Error::InvalidMatching(format!("label {k} is not part of a pair")));
            }
            if q > k {
                word |= 1 << k;
                stack.push(k);
            } else if stack.pop() != Some(q) {
                return Err(Error::InvalidMatching("pairs cross".into()));
            }
        }
        Ok(PlanarMatching { top: top as u8, bottom: bottom as u8, word })
    }

    /// Builds from a list of pairs of boundary points.
    pub fn from_pairs(top: usize, bottom: usize, pairs: &[(End, End)]) -> Result<PlanarMatching> {
        let shell = PlanarMatching { top: top as u8, bottom: bottom as u8, word: 0 };
        let len = top + bottom;
        let mut partner = vec![usize::MAX; len];
        for &(a, b) in pairs {
            for e in [a, b] {
                let ok = match e {
                    End::Top(j) => j < top,
                    End::Bottom(j) => j < bottom,
                };
                if !ok {
                    return Err(Error::InvalidMatching(format!("{e:?} out of range")));
                }
            }
            let (x, y) = (shell.label(a), shell.label(b));
            if partner[x] != usize::MAX || partner[y] != usize::MAX {
                return Err(Error::InvalidMatching("endpoint used twice".into()));
            }
            partner[x] = y;
            partner[y] = x;
        }
        PlanarMatching::from_pairing(top, bottom, &partner)
    }

    /// All pairs as boundary points, each pair listed once.
    pub fn pairs(&self) -> Vec<(End, End)> {
        let p = self.pairing();
        (0..self.len()).filter(|&k| (p[k] as usize) > k).map(|k| (self.end(k), self.end(p[k] as usize))).collect()
    }

    pub fn partner(&self, e: End) -> End {
        self.end(self.pairing()[self.label(e)] as usize)
    }

    pub fn identity(n: usize) -> PlanarMatching {
        let pairs: Vec<_> = (0..n).map(|j| (End::Top(j), End::Bottom(j))).collect();
        PlanarMatching::from_pairs(n, n, &pairs).expect("identity is planar")
    }

    /// `u_i` (1-based), cups `(i, i+1)` on both sides.
    pub fn generator(i: usize, n: usize) -> Result<PlanarMatching> {
        if i == 0 || i >= n {
            return Err(Error::IndexRange { index: i, lo: 1, hi: n.saturating_sub(1) });
        }
        let mut pairs = vec![(End::Top(i - 1), End::Top(i)), (End::Bottom(i - 1), End::Bottom(i))];
        pairs.extend((0..n).filter(|&j| j != i - 1 && j != i).map(|j| (End::Top(j), End::Bottom(j))));
        PlanarMatching::from_pairs(n, n, &pairs)
    }

    /// Vertical reflection: upper and lower points exchange roles.
    pub fn star(&self) -> PlanarMatching {
        let flip = |e: End| match e {
            End::Top(j) => End::Bottom(j),
            End::Bottom(j) => End::Top(j),
        };
        let pairs: Vec<_> = self.pairs().into_iter().map(|(a, b)| (flip(a), flip(b))).collect();
        PlanarMatching::from_pairs(self.bottom(), self.top(), &pairs).expect("reflection is planar")
    }

    /// Number of pairs joining an upper point to a lower point.
    pub fn through_count(&self) -> usize {
        self.pairs()
            .iter()
            .filter(|(a, b)| matches!((a, b), (End::Top(_), End::Bottom(_)) | (End::Bottom(_), End::Top(_))))
            .count()
    }

    /// Whether some pair joins two upper points.
    pub fn has_top_cap(&self) -> bool {
        self.pairs().iter().any(|(a, b)| matches!((a, b), (End::Top(_), End::Top(_))))
    }

    /// Side-by-side juxtaposition with `other` on the right.
    pub fn tensor(&self, other: &PlanarMatching) -> PlanarMatching {
        let (t, b) = (self.top(), self.bottom());
        let shift = |e: End| match e {
            End::Top(j) => End::Top(j + t),
            End::Bottom(j) => End::Bottom(j + b),
        };
        let mut pairs = self.pairs();
        pairs.extend(other.pairs().into_iter().map(|(x, y)| (shift(x), shift(y))));
        PlanarMatching::from_pairs(t + other.top(), b + other.bottom(), &pairs).expect("juxtaposition is planar")
    }

    /// `upper` stacked on `lower`, glued along `lower.top == upper.bottom`.
    /// Returns the resulting matching and the number of closed loops.
    pub fn compose(upper: &PlanarMatching, lower: &PlanarMatching) -> Result<(PlanarMatching, u32)> {
        if upper.bottom != lower.top {
            return Err(Error::SizeMismatch(upper.bottom(), lower.top()));
        }
        Ok(compose_unchecked(upper, lower))
    }
}

/// Gluing by path tracing. Middle points are indexed left to right.
pub(crate) fn compose_unchecked(x: &PlanarMatching, y: &PlanarMatching) -> (PlanarMatching, u32) {
    let (c, b, a) = (x.top as usize, x.bottom as usize, y.bottom as usize);
    let px = x.pairing();
    let py = y.pairing();
    let mut visited = [false; MAX_ENDPOINTS];
    let rlen = c + a;
    let mut res = [0u8; MAX_ENDPOINTS];
    let mut done = [false; MAX_ENDPOINTS];
    // result labels: top j -> j, bottom j -> c + a - 1 - j
    let x_bot_label = |m: usize| c + b - 1 - m;
    let x_bot_mid = |l: usize| c + b - 1 - l;
    let y_bot_label = |j: usize| b + a - 1 - j;
    let y_bot_res = |l: usize| {
        let j = b + a - 1 - l;
        c + a - 1 - j
    };
    for start in 0..rlen {
        if done[start] {
            continue;
        }
        // `in_x` tells which diagram we are about to step through, `l` is a label there.
        let (mut in_x, mut l) = if start < c { (true, start) } else { (false, y_bot_label(c + a - 1 - start)) };
        let end = loop {
            if in_x {
                let q = px[l] as usize;
                if q < c {
                    break q;
                }
                let m = x_bot_mid(q);
                visited[m] = true;
                in_x = false;
                l = m;
            } else {
                let q = py[l] as usize;
                if q >= b {
                    break y_bot_res(q);
                }
                visited[q] = true;
                in_x = true;
                l = x_bot_label(q);
            }
        };
        res[start] = end as u8;
        res[end] = start as u8;
        done[start] = true;
        done[end] = true;
    }
    let mut loops = 0u32;
    for m0 in 0..b {
        if visited[m0] {
            continue;
        }
        loops += 1;
        let mut m = m0;
        loop {
            visited[m] = true;
            let m1 = py[m] as usize;
            visited[m1] = true;
            let m2 = x_bot_mid(px[x_bot_label(m1)] as usize);
            if m2 == m0 {
                break;
            }
            m = m2;
        }
    }
    let mut word = 0u64;
    for (k, &r) in res.iter().enumerate().take(rlen) {
        if r as usize > k {
            word |= 1 << k;
        }
    }
    (PlanarMatching { top: c as u8, bottom: a as u8, word }, loops)
}

impl fmt::Display for PlanarMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |e: End| match e {
            End::Top(j) => format!("N{}", j + 1),
            End::Bottom(j) => format!("S{}", j + 1),
        };
        let parts: Vec<String> = self.pairs().into_iter().map(|(a, b)| format!("{}-{}", name(a), name(b))).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl fmt::Debug for PlanarMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All planar matchings with the given numbers of points, in increasing
/// order of their canonical word.
pub fn enumerate_matchings(top: usize, bottom: usize) -> Vec<PlanarMatching> {
    let len = top + bottom;
    let mut out = Vec::new();
    if len % 2 == 1 {
        return out;
    }
    fn rec(k: usize, len: usize, open: usize, word: u64, out: &mut Vec<u64>) {
        if k == len {
            if open == 0 {
                out.push(word);
            }
            return;
        }
        if open < len - k - 1 {
            rec(k + 1, len, open + 1, word | 1 << k, out);
        }
        if open > 0 {
            rec(k + 1, len, open - 1, word, out);
        }
    }
    let mut words = Vec::new();
    rec(0, len, 0, 0, &mut words);
    words.sort();
    out.extend(words.into_iter().map(|w| PlanarMatching { top: top as u8, bottom: bottom as u8, word: w }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_pairing() {
        let u = PlanarMatching::generator(1, 2).unwrap();
        assert_eq!(u.pairing(), vec![1, 0, 3, 2]);
        let (v, loops) = PlanarMatching::compose(&u, &u).unwrap();
        assert_eq!((v, loops), (u, 1));
    }

    #[test]
    fn crossing_rejected() {
        assert!(PlanarMatching::from_pairing(2, 2, &[2, 3, 0, 1]).is_err());
    }
}
