//! Human-readable notation: `1 - 1/2 u1 + u1u2`. Diagrams of `TL_n` with
//! `n <= WORD_LIMIT` are written as shortest generator words, larger ones in
//! pairing notation `[N1-N2 S1-S2 ...]`.

use super::element::TLElement;
use super::words::generator_words;
use crate::arith::Rational;

pub const WORD_LIMIT: usize = 8;

fn monomial(word: &[usize]) -> String {
    if word.is_empty() {
        "1".to_string()
    } else {
        word.iter().map(|k| format!("u{k}")).collect()
    }
}

fn push_term(out: &mut String, c: &Rational, body: &str, is_unit: bool) {
    let neg = c.is_negative();
    let a = c.abs();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if is_unit {
        out.push_str(&a.to_string());
    } else if a.is_one() {
        out.push_str(body);
    } else {
        out.push_str(&format!("{a} {body}"));
    }
}

pub fn format_element(x: &TLElement) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    if x.n() <= WORD_LIMIT {
        let table = generator_words(x.n());
        let mut rows: Vec<(&Vec<usize>, &Rational)> = x.terms().map(|(d, c)| (&table[d], c)).collect();
        rows.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(b.0)));
        for (w, c) in rows {
            push_term(&mut out, c, &monomial(w), w.is_empty());
        }
    } else {
        for (d, c) in x.terms() {
            push_term(&mut out, c, &d.to_string(), false);
        }
    }
    out
}
