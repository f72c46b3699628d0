use std::fmt;

use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use super::spec::{AlgebraSpec, Gen, TriClass};
use crate::arith::Rat;
use crate::error::Result;

/// A PBW monomial: generators in non-decreasing global order, stored as the
/// flat word (so `E21 E11²` is `[E21, E11, E11]`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<Gen>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// Panics if `word` is not sorted.
    pub fn from_sorted(word: Vec<Gen>) -> Self {
        assert!(word.windows(2).all(|w| w[0] <= w[1]), "unsorted PBW word");
        Monomial(word)
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// `(generator, exponent)` pairs, strictly ascending.
    pub fn factors(&self) -> Vec<(Gen, usize)> {
        let mut out: Vec<(Gen, usize)> = Vec::new();
        for &g in &self.0 {
            match out.last_mut() {
                Some((h, e)) if *h == g => *e += 1,
                _ => out.push((g, 1)),
            }
        }
        out
    }

    fn prepend(&self, g: Gen) -> Monomial {
        let mut w = Vec::with_capacity(self.0.len() + 1);
        w.push(g);
        w.extend_from_slice(&self.0);
        Monomial(w)
    }

    fn tail(&self) -> Monomial {
        Monomial(self.0[1..].to_vec())
    }

    pub fn display(&self, spec: &AlgebraSpec) -> String {
        if self.is_one() {
            return "1".into();
        }
        self.factors()
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    spec.label(g)
                } else {
                    format!("{}^{e}", spec.label(g))
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<u16> = self.0.iter().map(|g| g.0).collect();
        write!(f, "M{w:?}")
    }
}

/// Element of `U(g)`: exact rational combination of PBW monomials. Zero
/// coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct UElement {
    terms: FxHashMap<Monomial, Rat>,
}

impl UElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn generator(g: Gen) -> Self {
        Self::term(Monomial(vec![g]), Rat::one())
    }

    pub fn term(m: Monomial, c: Rat) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// Terms ordered by degree, then by word.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| (a.0.degree(), a.0).cmp(&(b.0.degree(), b.0)));
        v
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficient of the empty monomial.
    pub fn constant_term(&self) -> Rat {
        self.coeff(&Monomial::one())
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::hash_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &UElement, c: &Rat) {
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a * c);
        }
    }

    pub fn add(&self, other: &UElement) -> UElement {
        let mut out = self.clone();
        out.add_scaled(other, &Rat::one());
        out
    }

    pub fn sub(&self, other: &UElement) -> UElement {
        let mut out = self.clone();
        out.add_scaled(other, &-Rat::one());
        out
    }

    pub fn scale(&self, c: &Rat) -> UElement {
        if c.is_zero() {
            return UElement::zero();
        }
        UElement {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Keep the terms whose monomial satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Monomial) -> bool) -> UElement {
        UElement {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn display(&self, spec: &AlgebraSpec) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.sorted_terms()
            .iter()
            .map(|(m, c)| {
                if m.is_one() {
                    c.to_string()
                } else if c.is_one() {
                    m.display(spec)
                } else {
                    format!("({c})·{}", m.display(spec))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// `true` if the element is an `ad(h)`-weight vector of weight zero.
    pub fn is_weight_zero(&self, spec: &AlgebraSpec) -> bool {
        self.terms
            .keys()
            .all(|m| spec.monomial_weight(m).iter().all(|&x| x == 0))
    }

    /// `true` when every monomial is a product of Cartan generators.
    pub fn is_cartan(&self, spec: &AlgebraSpec) -> bool {
        self.terms
            .keys()
            .all(|m| m.letters().iter().all(|g| spec.info(*g).class == TriClass::Cartan))
    }
}

impl fmt::Debug for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        f.debug_map().entries(v).finish()
    }
}

impl AlgebraSpec {
    /// Normal form of `g · m` for a PBW monomial `m`. Rewrites `g x → x g + [g, x]`
    /// at the front until `g` sits in order; results are memoized.
    pub fn lmul_monomial(&self, g: Gen, m: &Monomial) -> UElement {
        match m.letters().first() {
            None => return UElement::generator(g),
            Some(&x) if g <= x => return UElement::term(m.prepend(g), Rat::one()),
            _ => {}
        }
        let key = (g, m.clone());
        if let Some(hit) = self.lmul_cache.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let x = m.letters()[0];
        let rest = m.tail();
        // g·x·rest = x·(g·rest) + [g,x]·rest
        let moved = self.lmul_monomial(g, &rest);
        let mut out = UElement::zero();
        for (mm, c) in moved.terms() {
            out.add_scaled(&self.lmul_monomial(x, mm), c);
        }
        for (z, c) in self.bracket(g, x) {
            out.add_scaled(&self.lmul_monomial(*z, &rest), c);
        }
        self.lmul_cache.lock().unwrap().insert(key, out.clone());
        out
    }

    /// `g · a`, normalized.
    pub fn lmul(&self, g: Gen, a: &UElement) -> UElement {
        let mut out = UElement::zero();
        for (m, c) in a.terms() {
            out.add_scaled(&self.lmul_monomial(g, m), c);
        }
        out
    }

    /// `a · b`, normalized.
    pub fn mul(&self, a: &UElement, b: &UElement) -> UElement {
        let mut out = UElement::zero();
        for (m, c) in a.terms() {
            let mut acc = b.clone();
            for &g in m.letters().iter().rev() {
                acc = self.lmul(g, &acc);
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    /// `[a, b] = ab − ba`.
    pub fn commutator(&self, a: &UElement, b: &UElement) -> UElement {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    /// Normal form of an arbitrary word of generators.
    pub fn word(&self, letters: &[Gen]) -> UElement {
        letters
            .iter()
            .rev()
            .fold(UElement::one(), |acc, &g| self.lmul(g, &acc))
    }

    /// Normalize a formal sum `Σ c · (product of matrix entries)`, each entry
    /// named by its `(row, col)` index pair.
    pub fn pbw_normalize(&self, expr: &[(Rat, Vec<(i32, i32)>)]) -> Result<UElement> {
        let mut out = UElement::zero();
        for (c, factors) in expr {
            let mut acc = UElement::constant(c.clone());
            for &(i, j) in factors.iter().rev() {
                acc = self.mul(&self.entry_element(i, j)?, &acc);
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    pub fn cache_len(&self) -> usize {
        self.lmul_cache.lock().unwrap().len()
    }
}
