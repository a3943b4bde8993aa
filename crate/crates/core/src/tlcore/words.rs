//! Generator words for diagrams, the map from symmetric-group words, and
//! Jucys-Murphy elements.

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use super::element::{Ring, TLElement};
use super::matching::{compose_unchecked, PlanarMatching};
use crate::arith::Rational;
use crate::error::{Error, Result};

pub type WordTable = HashMap<PlanarMatching, Vec<usize>>;

/// A shortest word `u_{w_1} ... u_{w_m}` for every diagram of `TL_n`, found
/// by breadth-first search over loop-free products. Ties go to the smaller
/// generator index at each step. Cached per `n`.
pub fn generator_words(n: usize) -> Arc<WordTable> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<WordTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("word cache").get(&n) {
        return t.clone();
    }
    let table = Arc::new(build_words(n));
    cache.lock().expect("word cache").insert(n, table.clone());
    table
}

fn build_words(n: usize) -> WordTable {
    let mut table = WordTable::new();
    let id = PlanarMatching::identity(n);
    table.insert(id, Vec::new());
    let gens: Vec<PlanarMatching> = (1..n).map(|k| PlanarMatching::generator(k, n).expect("in range")).collect();
    let mut queue = VecDeque::from([id]);
    while let Some(d) = queue.pop_front() {
        let w = table[&d].clone();
        for (k, g) in gens.iter().enumerate() {
            let (e, loops) = compose_unchecked(&d, g);
            if loops == 0 && !table.contains_key(&e) {
                let mut w2 = w.clone();
                w2.push(k + 1);
                table.insert(e, w2);
                queue.push_back(e);
            }
        }
    }
    table
}

/// The product `u_{w_1} ... u_{w_m}` in `TL_n`.
pub fn word_element(word: &[usize], n: usize) -> Result<TLElement> {
    let mut acc = TLElement::one(n);
    for &k in word {
        acc = acc.mul(&TLElement::generator(k, n)?)?;
    }
    Ok(acc)
}

/// Image of a signed sum of symmetric-group words, `s_i -> u_i - 1`.
pub fn phi(sum: &[(Rational, Vec<usize>)], n: usize) -> Result<TLElement> {
    let mut total = TLElement::zero(n, Ring::Q);
    for (c, word) in sum {
        let mut acc = TLElement::one(n);
        for &k in word {
            if k == 0 || k >= n {
                return Err(Error::IndexRange { index: k, lo: 1, hi: n.saturating_sub(1) });
            }
            let s = TLElement::generator(k, n)?.add_scalar(&-Rational::one());
            acc = acc.mul(&s)?;
        }
        total = total.add(&acc.scale(c))?;
    }
    Ok(total)
}

/// The palindromic word `s_j s_{j+1} ... s_{i-1} ... s_{j+1} s_j` of the
/// transposition `(j, i)`.
pub fn transposition_word(j: usize, i: usize) -> Vec<usize> {
    let mut w: Vec<usize> = (j..i).collect();
    w.extend((j..i - 1).rev());
    w
}

/// `L_i = Phi((1,i) + ... + (i-1,i))`, `L_1 = 0`.
pub fn jm_element(i: usize, n: usize) -> Result<TLElement> {
    if i == 0 || i > n {
        return Err(Error::IndexRange { index: i, lo: 1, hi: n });
    }
    let sum: Vec<(Rational, Vec<usize>)> = (1..i).map(|j| (Rational::one(), transposition_word(j, i))).collect();
    phi(&sum, n)
}
