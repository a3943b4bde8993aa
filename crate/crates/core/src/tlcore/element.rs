//! Linear combinations of planar matchings.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::matching::{compose_unchecked, PlanarMatching};
use crate::arith::{check_prime, is_p_integral, reduce_mod_p, Rational};
use crate::error::{Error, Result};
use crate::par::{self, Exec};

/// Coefficient ring of an element. `Zp` stores rationals with denominators
/// prime to `p`; `Fp` stores residues in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Ring {
    Q,
    Zp(u64),
    Fp(u64),
}

impl Ring {
    pub fn prime(&self) -> Option<u64> {
        match *self {
            Ring::Q => None,
            Ring::Zp(p) | Ring::Fp(p) => Some(p),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Ring::Q => "Q",
            Ring::Zp(_) => "Zp",
            Ring::Fp(_) => "Fp",
        }
    }

    pub fn parse(name: &str, p: Option<u64>) -> Result<Ring> {
        let need = || p.ok_or_else(|| Error::Parse(format!("ring {name} needs a prime")));
        let r = match name {
            "Q" => Ring::Q,
            "Zp" => Ring::Zp(need()?),
            "Fp" => Ring::Fp(need()?),
            _ => return Err(Error::Parse(format!("unknown ring {name:?}"))),
        };
        if let Some(p) = r.prime() {
            check_prime(p)?;
        }
        Ok(r)
    }

    fn normalize(&self, q: Rational) -> Result<Rational> {
        match *self {
            Ring::Q => Ok(q),
            Ring::Zp(p) => {
                if is_p_integral(&q, p)? {
                    Ok(q)
                } else {
                    Err(Error::NotIntegral { value: q.to_string(), p })
                }
            }
            Ring::Fp(p) => Ok(reduce_mod_p(&q, p)?.to_rational()),
        }
    }
}

type Terms = BTreeMap<PlanarMatching, Rational>;

fn accumulate(map: &mut HashMap<PlanarMatching, Rational>, d: PlanarMatching, c: Rational) {
    match map.entry(d) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

/// All products `a_i b_j` glued as `a_i` over `b_j`, with loop factor `2^loops`.
fn compose_terms(upper: &Terms, lower: &Terms, exec: Exec) -> HashMap<PlanarMatching, Rational> {
    let ups: Vec<(&PlanarMatching, &Rational)> = upper.iter().collect();
    let lows: Vec<(&PlanarMatching, &Rational)> = lower.iter().collect();
    let chunk = (ups.len() / 64).max(1);
    let chunks: Vec<&[(&PlanarMatching, &Rational)]> = ups.chunks(chunk).collect();
    let parts = par::map(exec, &chunks, |ch| {
        let mut acc = HashMap::new();
        for (x, cx) in ch.iter() {
            for (y, cy) in &lows {
                let (d, loops) = compose_unchecked(x, y);
                accumulate(&mut acc, d, (*cx * *cy).mul_pow2(loops));
            }
        }
        acc
    });
    let mut it = parts.into_iter();
    let mut total = it.next().unwrap_or_default();
    for part in it {
        for (d, c) in part {
            accumulate(&mut total, d, c);
        }
    }
    total
}

fn collect_terms(map: HashMap<PlanarMatching, Rational>) -> Terms {
    map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Linear combination of matchings with a fixed number of upper and lower
/// points, over `Q`. Used for half diagrams and intermediate constructions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tangle {
    top: usize,
    bottom: usize,
    terms: Terms,
}

impl Tangle {
    pub fn zero(top: usize, bottom: usize) -> Tangle {
        Tangle { top, bottom, terms: Terms::new() }
    }

    pub fn from_matching(d: PlanarMatching) -> Tangle {
        let mut terms = Terms::new();
        terms.insert(d, Rational::one());
        Tangle { top: d.top(), bottom: d.bottom(), terms }
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlanarMatching, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `upper` over `lower`.
    pub fn compose(upper: &Tangle, lower: &Tangle, exec: Exec) -> Result<Tangle> {
        if upper.bottom != lower.top {
            return Err(Error::SizeMismatch(upper.bottom, lower.top));
        }
        Ok(Tangle {
            top: upper.top,
            bottom: lower.bottom,
            terms: collect_terms(compose_terms(&upper.terms, &lower.terms, exec)),
        })
    }

    pub fn tensor(&self, other: &PlanarMatching) -> Tangle {
        let terms = self.terms.iter().map(|(d, c)| (d.tensor(other), c.clone())).collect();
        Tangle { top: self.top + other.top(), bottom: self.bottom + other.bottom(), terms }
    }

    pub fn star(&self) -> Tangle {
        let terms = self.terms.iter().map(|(d, c)| (d.star(), c.clone())).collect();
        Tangle { top: self.bottom, bottom: self.top, terms }
    }

    pub fn scale(&self, s: &Rational) -> Tangle {
        if s.is_zero() {
            return Tangle::zero(self.top, self.bottom);
        }
        let terms = self.terms.iter().map(|(d, c)| (*d, c * s)).collect();
        Tangle { top: self.top, bottom: self.bottom, terms }
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn retain(&mut self, keep: impl Fn(&PlanarMatching) -> bool) {
        self.terms.retain(|d, _| keep(d));
    }

    /// Reinterprets a square tangle as an element of `TL_n` over `Q`.
    pub fn into_element(self) -> Result<TLElement> {
        if self.top != self.bottom {
            return Err(Error::SizeMismatch(self.top, self.bottom));
        }
        Ok(TLElement { n: self.top, ring: Ring::Q, terms: self.terms })
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct TLElement {
    n: usize,
    ring: Ring,
    terms: Terms,
}

impl TLElement {
    pub fn zero(n: usize, ring: Ring) -> TLElement {
        TLElement { n, ring, terms: Terms::new() }
    }

    pub fn one(n: usize) -> TLElement {
        TLElement::from_matching(PlanarMatching::identity(n))
    }

    pub fn from_matching(d: PlanarMatching) -> TLElement {
        assert!(d.is_square(), "TL elements need square matchings");
        let mut terms = Terms::new();
        terms.insert(d, Rational::one());
        TLElement { n: d.n(), ring: Ring::Q, terms }
    }

    pub fn generator(i: usize, n: usize) -> Result<TLElement> {
        Ok(TLElement::from_matching(PlanarMatching::generator(i, n)?))
    }

    pub fn from_terms(
        n: usize,
        ring: Ring,
        terms: impl IntoIterator<Item = (PlanarMatching, Rational)>,
    ) -> Result<TLElement> {
        let mut map = Terms::new();
        for (d, c) in terms {
            if !d.is_square() || d.n() != n {
                return Err(Error::SizeMismatch(d.top(), n));
            }
            let e = map.entry(d).or_insert_with(Rational::zero);
            *e += c;
        }
        let mut out = TLElement { n, ring, terms: Terms::new() };
        for (d, c) in map {
            let c = ring.normalize(c)?;
            if !c.is_zero() {
                out.terms.insert(d, c);
            }
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlanarMatching, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &PlanarMatching) -> Rational {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    /// Coefficient of the identity diagram.
    pub fn identity_coeff(&self) -> Rational {
        self.coeff(&PlanarMatching::identity(self.n))
    }

    fn check(&self, o: &TLElement) -> Result<()> {
        if self.n != o.n {
            return Err(Error::SizeMismatch(self.n, o.n));
        }
        if self.ring != o.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    fn rebuild(&self, map: HashMap<PlanarMatching, Rational>) -> TLElement {
        let mut terms = Terms::new();
        for (d, c) in map {
            let c = self.ring.normalize(c).expect("ring closed under its operations");
            if !c.is_zero() {
                terms.insert(d, c);
            }
        }
        TLElement { n: self.n, ring: self.ring, terms }
    }

    pub fn add(&self, o: &TLElement) -> Result<TLElement> {
        self.check(o)?;
        let mut map: HashMap<PlanarMatching, Rational> = self.terms.iter().map(|(d, c)| (*d, c.clone())).collect();
        for (d, c) in &o.terms {
            accumulate(&mut map, *d, c.clone());
        }
        Ok(self.rebuild(map))
    }

    pub fn sub(&self, o: &TLElement) -> Result<TLElement> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> TLElement {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, s: &Rational) -> TLElement {
        let s = self.ring.normalize(s.clone()).expect("scalar outside the coefficient ring");
        let map = self.terms.iter().map(|(d, c)| (*d, c * &s)).collect();
        self.rebuild(map)
    }

    /// `self + s * 1`.
    pub fn add_scalar(&self, s: &Rational) -> TLElement {
        self.add(&TLElement::one(self.n).to_ring(self.ring).expect("unit lies in every ring").scale(s))
            .expect("same shape")
    }

    /// Product `self * o`: `self` on top of `o`, closed loops evaluate to 2.
    pub fn mul(&self, o: &TLElement) -> Result<TLElement> {
        self.mul_with(o, Exec::default())
    }

    pub fn mul_with(&self, o: &TLElement, exec: Exec) -> Result<TLElement> {
        self.check(o)?;
        Ok(self.rebuild(compose_terms(&self.terms, &o.terms, exec)))
    }

    /// The anti-automorphism reflecting every diagram vertically.
    pub fn star(&self) -> TLElement {
        let terms = self.terms.iter().map(|(d, c)| (d.star(), c.clone())).collect();
        TLElement { n: self.n, ring: self.ring, terms }
    }

    /// `self (x) 1_k`: `k` extra through strands on the right.
    pub fn tensor_id(&self, k: usize) -> TLElement {
        let id = PlanarMatching::identity(k);
        let terms = self.terms.iter().map(|(d, c)| (d.tensor(&id), c.clone())).collect();
        TLElement { n: self.n + k, ring: self.ring, terms }
    }

    /// Changes the coefficient ring; fails when a coefficient does not lie in
    /// the target ring.
    pub fn to_ring(&self, ring: Ring) -> Result<TLElement> {
        match (self.ring, ring) {
            (a, b) if a == b => Ok(self.clone()),
            (Ring::Fp(_), _) => Err(Error::RingMismatch),
            (Ring::Zp(_), Ring::Q) => Ok(TLElement { n: self.n, ring, terms: self.terms.clone() }),
            (_, target) => {
                let mut terms = Terms::new();
                for (d, c) in &self.terms {
                    let c = target.normalize(c.clone()).map_err(|e| match e {
                        Error::NotIntegral { value, p } => {
                            Error::IntegralityViolation { coeff: value, context: d.to_string(), p }
                        }
                        other => other,
                    })?;
                    if !c.is_zero() {
                        terms.insert(*d, c);
                    }
                }
                Ok(TLElement { n: self.n, ring: target, terms })
            }
        }
    }

    /// Every coefficient is `p`-integral.
    pub fn is_p_integral(&self, p: u64) -> Result<bool> {
        for c in self.terms.values() {
            if !is_p_integral(c, p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn as_tangle(&self) -> Tangle {
        Tangle { top: self.n, bottom: self.n, terms: self.terms.clone() }
    }

    pub fn to_json(&self) -> ElementJson {
        ElementJson {
            n: self.n,
            ring: self.ring.name().to_string(),
            p: self.ring.prime(),
            terms: self
                .terms
                .iter()
                .map(|(d, c)| TermJson {
                    pairing: d.pairing().into_iter().map(usize::from).collect(),
                    coeff: c.clone(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &ElementJson) -> Result<TLElement> {
        let ring = Ring::parse(&j.ring, j.p)?;
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            terms.push((PlanarMatching::from_pairing(j.n, j.n, &t.pairing)?, t.coeff.clone()));
        }
        TLElement::from_terms(j.n, ring, terms)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("element serializes")
    }

    pub fn from_json_str(s: &str) -> Result<TLElement> {
        let j: ElementJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        TLElement::from_json(&j)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub n: usize,
    pub ring: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub pairing: Vec<usize>,
    pub coeff: Rational,
}

impl fmt::Debug for TLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TLElement(n={}, {:?}, {})", self.n, self.ring, super::notation::format_element(self))
    }
}

impl fmt::Display for TLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::notation::format_element(self))
    }
}
