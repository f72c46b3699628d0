//! Falling-sequence decompositions and the minimal polynomials they predict.

use num_traits::One;
use serde::Serialize;

use crate::arith::{int, Rat, UniPoly};
use crate::error::Result;
use crate::lie::{AlgebraSpec, Family, Weight};

/// Whether a term entered the decomposition as `l_i` or as `−l_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    Plain,
    Starred,
}

/// One falling part. `mirror` is the id of the paired part in a mirror
/// decomposition and `None` for GL.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Part {
    pub id: usize,
    #[serde(serialize_with = "crate::arith::ser::rats")]
    pub terms: Vec<Rat>,
    pub origins: Vec<Origin>,
    pub mirror: Option<usize>,
}

impl Part {
    fn singleton(id: usize, x: Rat, origin: Origin, mirror: Option<usize>) -> Self {
        Part {
            id,
            terms: vec![x],
            origins: vec![origin],
            mirror,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn first(&self) -> &Rat {
        &self.terms[0]
    }

    pub fn last(&self) -> &Rat {
        self.terms.last().unwrap()
    }

    pub fn is_plain(&self) -> bool {
        self.origins.iter().all(|o| *o == Origin::Plain)
    }

    pub fn is_falling(&self) -> bool {
        self.terms.windows(2).all(|w| &w[0] - &w[1] == Rat::one())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ShuffleKind {
    Gl,
    Mirror,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
    #[serde(rename = "n/a")]
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShuffleDecomposition {
    pub kind: ShuffleKind,
    pub parts: Vec<Part>,
    pub parity: Parity,
    /// Last terms of the parts (GL).
    #[serde(serialize_with = "crate::arith::ser::rats")]
    pub endpoints: Vec<Rat>,
    /// First terms of the parts (mirror).
    #[serde(serialize_with = "crate::arith::ser::rats")]
    pub first_terms: Vec<Rat>,
}

impl ShuffleDecomposition {
    fn finish(kind: ShuffleKind, parts: Vec<Part>, parity: Parity) -> Self {
        let (endpoints, first_terms) = match kind {
            ShuffleKind::Gl => (parts.iter().map(|p| p.last().clone()).collect(), Vec::new()),
            ShuffleKind::Mirror => (Vec::new(), parts.iter().map(|p| p.first().clone()).collect()),
        };
        ShuffleDecomposition {
            kind,
            parts,
            parity,
            endpoints,
            first_terms,
        }
    }

    /// Whether some part made only of plain terms ends in `x`.
    pub fn ends_plain(&self, x: &Rat) -> bool {
        self.parts.iter().any(|p| p.is_plain() && p.last() == x)
    }

    /// Part term lists in creation order.
    pub fn term_lists(&self) -> Vec<Vec<Rat>> {
        self.parts.iter().map(|p| p.terms.clone()).collect()
    }

    /// All terms with multiplicity, sorted.
    pub fn all_terms(&self) -> Vec<Rat> {
        let mut v: Vec<Rat> = self.parts.iter().flat_map(|p| p.terms.iter().cloned()).collect();
        v.sort();
        v
    }
}

/// Greedy decomposition of `l` read left to right: `l_k` goes to the end of
/// the longest part ending in `l_k + 1`, earliest-created on ties.
pub fn shuffle_gl(l: &[Rat]) -> ShuffleDecomposition {
    let mut parts: Vec<Part> = Vec::new();
    for x in l {
        let target = x + Rat::one();
        let best = longest(&parts, |p| p.last() == &target);
        match best {
            Some(idx) => {
                parts[idx].terms.push(x.clone());
                parts[idx].origins.push(Origin::Plain);
            }
            None => {
                let id = parts.len();
                parts.push(Part::singleton(id, x.clone(), Origin::Plain, None));
            }
        }
    }
    ShuffleDecomposition::finish(ShuffleKind::Gl, parts, Parity::NotApplicable)
}

/// Index of the longest part satisfying `pred`, earliest on ties.
fn longest(parts: &[Part], pred: impl Fn(&Part) -> bool) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (idx, p) in parts.iter().enumerate() {
        if pred(p) && best.is_none_or(|b| p.len() > parts[b].len()) {
            best = Some(idx);
        }
    }
    best
}

/// Decomposition of `l ∪ l*` into mirror pairs, built from `l_n` outward:
/// `l_1` is prepended to the longest part beginning with `l_1 − 1` and
/// `−l_1` appended to its mirror. Ties go to the earliest-created part; a
/// new pair is created plain part first, so the plain part wins ties
/// within a pair.
pub fn shuffle_mirror(l: &[Rat], epsilon: &Rat) -> ShuffleDecomposition {
    let mut parts: Vec<Part> = Vec::new();
    for x in l.iter().rev() {
        let target = x - Rat::one();
        match longest(&parts, |p| p.first() == &target) {
            Some(idx) => {
                let mirror = parts[idx].mirror.unwrap();
                parts[idx].terms.insert(0, x.clone());
                parts[idx].origins.insert(0, Origin::Plain);
                parts[mirror].terms.push(-x);
                parts[mirror].origins.push(Origin::Starred);
            }
            None => {
                let id = parts.len();
                parts.push(Part::singleton(id, x.clone(), Origin::Plain, Some(id + 1)));
                parts.push(Part::singleton(id + 1, -x, Origin::Starred, Some(id)));
            }
        }
    }
    let mut d = ShuffleDecomposition::finish(ShuffleKind::Mirror, parts, Parity::Even);
    if d.ends_plain(epsilon) {
        d.parity = Parity::Odd;
    }
    d
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Fast,
    Certified,
}

/// Departures from the literal statement of the classical-case rule, each
/// adopted because certification disagrees with the literal reading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Erratum {
    /// Odd parity drops `−ε` from `Ã`, not `ε`.
    MinusEpsilonRemoved,
    /// Odd orthogonal, even parity: `−ε` is added to `Ã`, giving the extra
    /// root `n` that the `2n` terms of `l ∪ l*` cannot account for.
    OddOrthogonalRoot,
    /// Odd orthogonal, some plain part ends in `1`: one `−1` is dropped,
    /// as the symplectic parity rule would.
    OddOrthogonalIntegral,
}

/// What the combinatorial rule predicts for `L(λ)`.
#[derive(Clone, Debug, Serialize)]
pub struct Prediction {
    pub weight: Weight,
    #[serde(serialize_with = "crate::arith::ser::rats")]
    pub l: Vec<Rat>,
    pub decomposition: ShuffleDecomposition,
    /// The first term dropped from `Ã` in odd parity.
    #[serde(serialize_with = "crate::arith::ser::opt_rat")]
    pub removed: Option<Rat>,
    pub errata: Vec<Erratum>,
    pub polynomial: UniPoly,
}

/// Fast-mode prediction. GL: roots are the part endpoints of `λ + ρ`.
/// o/sp: roots are `n − 1 + ε − α` over the first terms `α` of the mirror
/// decomposition, with one `−ε` dropped when the decomposition is odd and,
/// for odd orthogonal algebras, one `−ε` added when it is even.
pub fn predict(spec: &AlgebraSpec, weight: &Weight) -> Result<Prediction> {
    weight.check_rank(spec)?;
    let l = weight.shifted(spec);
    if spec.family().is_gl() {
        let decomposition = shuffle_gl(&l);
        let polynomial = UniPoly::from_roots(&decomposition.endpoints);
        return Ok(Prediction {
            weight: weight.clone(),
            l,
            decomposition,
            removed: None,
            errata: Vec::new(),
            polynomial,
        });
    }
    let eps = spec.epsilon().clone();
    let decomposition = shuffle_mirror(&l, &eps);
    let mut alphas = decomposition.first_terms.clone();
    let mut removed = None;
    let mut errata = Vec::new();
    let minus_eps = -&eps;
    if decomposition.parity == Parity::Odd {
        if let Some(pos) = alphas.iter().position(|a| a == &minus_eps) {
            alphas.remove(pos);
            removed = Some(minus_eps);
            errata.push(Erratum::MinusEpsilonRemoved);
        }
    } else if spec.family() == Family::OOdd {
        alphas.push(minus_eps);
        errata.push(Erratum::OddOrthogonalRoot);
    }
    if spec.family() == Family::OOdd && decomposition.ends_plain(&Rat::one()) {
        let minus_one = -Rat::one();
        if let Some(pos) = alphas.iter().position(|a| a == &minus_one) {
            alphas.remove(pos);
            errata.push(Erratum::OddOrthogonalIntegral);
        }
    }
    let shift = int(spec.rank() as i64 - 1) + &eps;
    let roots: Vec<Rat> = alphas.iter().map(|a| &shift - a).collect();
    Ok(Prediction {
        weight: weight.clone(),
        l,
        decomposition,
        removed,
        errata,
        polynomial: UniPoly::from_roots(&roots),
    })
}

/// Minimal polynomial of `L(λ)`: the combinatorial prediction, or in
/// certified mode the polynomial proved minimal by the projection test.
pub fn minpoly_from_weight(spec: &AlgebraSpec, weight: &Weight, mode: Mode) -> Result<UniPoly> {
    match mode {
        Mode::Fast => Ok(predict(spec, weight)?.polynomial),
        Mode::Certified => {
            let mut certifier = crate::verify::Certifier::new(spec);
            Ok(certifier.certified_minpoly(weight, None)?.polynomial)
        }
    }
}

/// `(root, multiplicity)` pairs, ascending. Every predicted polynomial
/// splits over `Q`.
pub fn root_multiplicities(p: &UniPoly) -> Vec<(Rat, usize)> {
    let (roots, rest) = p.rational_roots();
    debug_assert!(rest.degree().unwrap_or(0) == 0 || rest.is_zero());
    roots
}
