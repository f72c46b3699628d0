//! The dual pair `(gl_n, gl_k)` inside the Weyl algebra of `k×n` matrices:
//! normal ordering, the embeddings `L(E′) = X Dᵗ` and `R(E) = Xᵗ D`, and
//! checks of the transfer identities and the divisibility theorem.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{binomial, int, ser, Rat, RatMatrix, UniPoly};
use crate::error::{Error, Result};
use crate::lie::{AlgebraSpec, Family, Weight};
use crate::oracle::{matrix_minpoly, oracle_minpoly, RepMatrices};
use crate::shuffle::{minpoly_from_weight, Mode};

/// `x^α ∂^β` with exponents indexed by the flattened position `(a, i)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylMonomial {
    pub x: Vec<u16>,
    pub d: Vec<u16>,
}

impl WeylMonomial {
    fn one(vars: usize) -> Self {
        WeylMonomial {
            x: vec![0; vars],
            d: vec![0; vars],
        }
    }

    pub fn degree(&self) -> usize {
        self.x.iter().chain(&self.d).map(|&e| e as usize).sum()
    }
}

/// One letter of an unnormalized word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeylLetter {
    /// `x_{ai}`, 1-based.
    X(usize, usize),
    /// `∂_{ai}`, 1-based.
    D(usize, usize),
}

/// Polynomial-coefficient differential operators on `k×n` matrices, in
/// normal order (all `x` to the left of all `∂`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    k: usize,
    n: usize,
    terms: BTreeMap<WeylMonomial, Rat>,
}

impl WeylElement {
    pub fn zero(k: usize, n: usize) -> Self {
        WeylElement {
            k,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(k: usize, n: usize, c: Rat) -> Self {
        let mut e = Self::zero(k, n);
        e.add_term(WeylMonomial::one(k * n), c);
        e
    }

    pub fn one(k: usize, n: usize) -> Self {
        Self::constant(k, n, Rat::one())
    }

    fn slot(k: usize, n: usize, a: usize, i: usize) -> Result<usize> {
        if a == 0 || a > k || i == 0 || i > n {
            return Err(Error::IndexOutOfRange(format!(
                "variable ({a},{i}) outside {k}×{n}"
            )));
        }
        Ok((a - 1) * n + (i - 1))
    }

    pub fn x(k: usize, n: usize, a: usize, i: usize) -> Result<Self> {
        let s = Self::slot(k, n, a, i)?;
        let mut m = WeylMonomial::one(k * n);
        m.x[s] = 1;
        let mut e = Self::zero(k, n);
        e.add_term(m, Rat::one());
        Ok(e)
    }

    pub fn d(k: usize, n: usize, a: usize, i: usize) -> Result<Self> {
        let s = Self::slot(k, n, a, i)?;
        let mut m = WeylMonomial::one(k * n);
        m.d[s] = 1;
        let mut e = Self::zero(k, n);
        e.add_term(m, Rat::one());
        Ok(e)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeylMonomial, &Rat)> {
        self.terms.iter()
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

    fn add_term(&mut self, m: WeylMonomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &WeylElement) -> WeylElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &WeylElement) -> WeylElement {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> WeylElement {
        if c.is_zero() {
            return Self::zero(self.k, self.n);
        }
        WeylElement {
            k: self.k,
            n: self.n,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Product in normal order. `∂^β x^γ = Σ_μ C(β,μ) C(γ,μ) μ! x^{γ−μ} ∂^{β−μ}`,
    /// multi-index notation.
    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        let mut out = Self::zero(self.k, self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                for (m, w) in leibniz(&m1.d, &m2.x) {
                    let x = m1.x.iter().zip(&m.x).map(|(a, b)| a + b).collect();
                    let d = m.d.iter().zip(&m2.d).map(|(a, b)| a + b).collect();
                    out.add_term(WeylMonomial { x, d }, &c * w);
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &WeylElement) -> WeylElement {
        self.mul(other).sub(&other.mul(self))
    }

    /// Apply to a polynomial given as a map from exponent vectors.
    pub fn apply(&self, poly: &BTreeMap<Vec<u16>, Rat>) -> BTreeMap<Vec<u16>, Rat> {
        let mut out: BTreeMap<Vec<u16>, Rat> = BTreeMap::new();
        for (m, c) in &self.terms {
            'mono: for (p, a) in poly {
                let mut coeff = c * a;
                let mut e = Vec::with_capacity(p.len());
                for s in 0..p.len() {
                    if m.d[s] > p[s] {
                        continue 'mono;
                    }
                    // falling factorial from differentiating x^p d times
                    for t in 0..m.d[s] {
                        coeff *= int((p[s] - t) as i64);
                    }
                    e.push(p[s] - m.d[s] + m.x[s]);
                }
                let slot = out.entry(e.clone()).or_insert_with(Rat::zero);
                *slot += coeff;
                if slot.is_zero() {
                    out.remove(&e);
                }
            }
        }
        out
    }
}

/// Terms of `∂^β x^γ` as `(x^{γ−μ} ∂^{β−μ}, weight)`.
fn leibniz(beta: &[u16], gamma: &[u16]) -> Vec<(WeylMonomial, Rat)> {
    let mut out = vec![(
        WeylMonomial {
            x: Vec::new(),
            d: Vec::new(),
        },
        Rat::one(),
    )];
    for (&b, &g) in beta.iter().zip(gamma) {
        let mut next = Vec::with_capacity(out.len() * (b.min(g) as usize + 1));
        for (m, w) in &out {
            let mut fact = Rat::one();
            for mu in 0..=b.min(g) {
                if mu > 0 {
                    fact *= int(mu as i64);
                }
                let c = binomial(b as usize, mu as usize) * binomial(g as usize, mu as usize) * &fact;
                let mut m2 = m.clone();
                m2.x.push(g - mu);
                m2.d.push(b - mu);
                next.push((m2, w * c));
            }
        }
        out = next;
    }
    out
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let name = |s: usize| format!("{}{}", s / self.n + 1, s % self.n + 1);
        for (t, (m, c)) in self.terms.iter().enumerate() {
            if t > 0 {
                write!(f, " + ")?;
            }
            let mut factors = Vec::new();
            for (s, &e) in m.x.iter().enumerate() {
                for _ in 0..e {
                    factors.push(format!("x{}", name(s)));
                }
            }
            for (s, &e) in m.d.iter().enumerate() {
                for _ in 0..e {
                    factors.push(format!("d{}", name(s)));
                }
            }
            if factors.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "({c})*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Normal form of a product of letters in `W(k×n)`.
pub fn weyl_normalize(k: usize, n: usize, word: &[WeylLetter]) -> Result<WeylElement> {
    let mut acc = WeylElement::one(k, n);
    for letter in word {
        let f = match *letter {
            WeylLetter::X(a, i) => WeylElement::x(k, n, a, i)?,
            WeylLetter::D(a, i) => WeylElement::d(k, n, a, i)?,
        };
        acc = acc.mul(&f);
    }
    Ok(acc)
}

type WeylMatrix = Vec<Vec<WeylElement>>;

fn mat_mul(a: &WeylMatrix, b: &WeylMatrix, k: usize, n: usize) -> WeylMatrix {
    let size = a.len();
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    (0..size).fold(WeylElement::zero(k, n), |acc, l| acc.add(&a[i][l].mul(&b[l][j])))
                })
                .collect()
        })
        .collect()
}

fn mat_identity(size: usize, k: usize, n: usize) -> WeylMatrix {
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    if i == j {
                        WeylElement::one(k, n)
                    } else {
                        WeylElement::zero(k, n)
                    }
                })
                .collect()
        })
        .collect()
}

/// The dual pair `(gl_n, gl_k)` acting on `k×n` matrices.
#[derive(Clone, Debug)]
pub struct DualPairEmbedding {
    pub n: usize,
    pub k: usize,
    /// `L(E′)_{ab} = Σ_i x_{ai} ∂_{bi}`, a `k×k` matrix.
    pub left: WeylMatrix,
    /// `R(E)_{ij} = Σ_a x_{ai} ∂_{aj}`, an `n×n` matrix.
    pub right: WeylMatrix,
}

impl DualPairEmbedding {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::InvalidArgument("dual pair needs n, k ≥ 1".into()));
        }
        let x = |a, i| WeylElement::x(k, n, a, i).unwrap();
        let d = |a, i| WeylElement::d(k, n, a, i).unwrap();
        let left = (1..=k)
            .map(|a| {
                (1..=k)
                    .map(|b| (1..=n).fold(WeylElement::zero(k, n), |acc, i| acc.add(&x(a, i).mul(&d(b, i)))))
                    .collect()
            })
            .collect();
        let right = (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| (1..=k).fold(WeylElement::zero(k, n), |acc, a| acc.add(&x(a, i).mul(&d(a, j)))))
                    .collect()
            })
            .collect();
        Ok(DualPairEmbedding { n, k, left, right })
    }

    pub fn x(&self, a: usize, i: usize) -> WeylElement {
        WeylElement::x(self.k, self.n, a, i).unwrap()
    }

    pub fn d(&self, a: usize, i: usize) -> WeylElement {
        WeylElement::d(self.k, self.n, a, i).unwrap()
    }

    /// Index quadruples `(a, b, i, j)` with `[L_ab, R_ij] ≠ 0`.
    pub fn commutant_failures(&self) -> Vec<(usize, usize, usize, usize)> {
        let mut bad = Vec::new();
        for a in 0..self.k {
            for b in 0..self.k {
                for i in 0..self.n {
                    for j in 0..self.n {
                        if !self.left[a][b].commutator(&self.right[i][j]).is_zero() {
                            bad.push((a + 1, b + 1, i + 1, j + 1));
                        }
                    }
                }
            }
        }
        bad
    }

    /// Whether `[M_ab, M_cd] = δ_bc M_ad − δ_da M_cb` holds entrywise.
    pub fn satisfies_gl_relations(m: &WeylMatrix) -> bool {
        let size = m.len();
        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    for d in 0..size {
                        let mut rhs = m[a][a].scale(&Rat::zero());
                        if b == c {
                            rhs = rhs.add(&m[a][d]);
                        }
                        if d == a {
                            rhs = rhs.sub(&m[c][b]);
                        }
                        if m[a][b].commutator(&m[c][d]) != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn shifted_left(&self) -> WeylMatrix {
        let mut m = self.left.clone();
        let shift = int(self.n as i64 - self.k as i64);
        for (a, row) in m.iter_mut().enumerate() {
            row[a] = row[a].add(&WeylElement::constant(self.k, self.n, shift.clone()));
        }
        m
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConvPowersCheck {
    pub r: usize,
    pub i: usize,
    pub a: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConvPowersReport {
    pub n: usize,
    pub k: usize,
    pub r_max: usize,
    pub checks: Vec<ConvPowersCheck>,
    pub all_pass: bool,
}

/// `Σ_l (Eʳ)_{il} x_{al} = Σ_b ((E′+(n−k)I)ʳ)_{ab} x_{bi}` for `r ≤ r_max`.
pub fn check_conv_powers(n: usize, k: usize, r_max: usize) -> Result<ConvPowersReport> {
    let pair = DualPairEmbedding::new(n, k)?;
    let shifted = pair.shifted_left();
    let mut e_pow = mat_identity(n, k, n);
    let mut f_pow = mat_identity(k, k, n);
    let mut checks = Vec::new();
    for r in 0..=r_max {
        if r > 0 {
            e_pow = mat_mul(&e_pow, &pair.right, k, n);
            f_pow = mat_mul(&f_pow, &shifted, k, n);
        }
        for i in 1..=n {
            for a in 1..=k {
                let lhs = (1..=n).fold(WeylElement::zero(k, n), |acc, l| {
                    acc.add(&e_pow[i - 1][l - 1].mul(&pair.x(a, l)))
                });
                let rhs = (1..=k).fold(WeylElement::zero(k, n), |acc, b| {
                    acc.add(&f_pow[a - 1][b - 1].mul(&pair.x(b, i)))
                });
                checks.push(ConvPowersCheck {
                    r,
                    i,
                    a,
                    pass: lhs == rhs,
                });
            }
        }
    }
    let all_pass = checks.iter().all(|c| c.pass);
    Ok(ConvPowersReport {
        n,
        k,
        r_max,
        checks,
        all_pass,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TransferCheck {
    /// Power `p` of `u⁻¹`.
    pub order: usize,
    pub i: usize,
    pub j: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TransferReport {
    pub n: usize,
    pub k: usize,
    pub order: usize,
    pub checks: Vec<TransferCheck>,
    pub all_pass: bool,
}

/// `u T(u) = I + (T′(u+k−n) X)ᵗ D` coefficientwise in `u⁻¹` up to `u^{−order}`.
///
/// On the left the coefficient of `u^{−p}` is `Eᵖ`. On the right, expanding
/// `(u+c)^{−r−1}` with `c = k−n` gives
/// `B_p = Σ_{r+m=p−1} C(p−1, m) (−c)^m E′^r` and the entry
/// `δ_{p0} δ_ij + Σ_{ab} (B_p)_{ab} x_{bi} ∂_{aj}`.
pub fn check_resolvent_transfer(n: usize, k: usize, order: usize) -> Result<TransferReport> {
    if order < 2 {
        return Err(Error::TruncationTooShort { order, needed: 2 });
    }
    let pair = DualPairEmbedding::new(n, k)?;
    let c = int(k as i64 - n as i64);
    let mut e_powers = vec![mat_identity(n, k, n)];
    let mut f_powers = vec![mat_identity(k, k, n)];
    for _ in 1..=order {
        e_powers.push(mat_mul(e_powers.last().unwrap(), &pair.right, k, n));
        f_powers.push(mat_mul(f_powers.last().unwrap(), &pair.left, k, n));
    }
    let mut checks = Vec::new();
    for p in 0..=order {
        let b_p: Option<WeylMatrix> = (p > 0).then(|| {
            let mut acc: WeylMatrix = vec![vec![WeylElement::zero(k, n); k]; k];
            for m in 0..p {
                let r = p - 1 - m;
                let coeff = binomial(p - 1, m) * pow(&-c.clone(), m);
                for a in 0..k {
                    for b in 0..k {
                        acc[a][b] = acc[a][b].add(&f_powers[r][a][b].scale(&coeff));
                    }
                }
            }
            acc
        });
        for i in 1..=n {
            for j in 1..=n {
                let lhs = &e_powers[p][i - 1][j - 1];
                let mut rhs = if p == 0 && i == j {
                    WeylElement::one(k, n)
                } else {
                    WeylElement::zero(k, n)
                };
                if let Some(b_p) = &b_p {
                    for a in 1..=k {
                        for b in 1..=k {
                            rhs = rhs.add(&b_p[a - 1][b - 1].mul(&pair.x(b, i)).mul(&pair.d(a, j)));
                        }
                    }
                }
                checks.push(TransferCheck {
                    order: p,
                    i,
                    j,
                    pass: *lhs == rhs,
                });
            }
        }
    }
    let all_pass = checks.iter().all(|c| c.pass);
    Ok(TransferReport {
        n,
        k,
        order,
        checks,
        all_pass,
    })
}

fn pow(x: &Rat, e: usize) -> Rat {
    (0..e).fold(Rat::one(), |acc, _| acc * x)
}

#[derive(Clone, Debug, Serialize)]
pub struct DivisibilityReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// Minimal polynomial of `R(E)` on degree-`d` polynomials.
    pub q: UniPoly,
    /// Minimal polynomial of `L(E′)` on the same space.
    pub q_prime: UniPoly,
    /// `q′` from the shuffle formula at `(d, 0, …, 0)`.
    pub q_prime_predicted: UniPoly,
    #[serde(serialize_with = "ser::rat")]
    pub shift: Rat,
    pub q_divides: bool,
    pub q_prime_divides: bool,
    pub prediction_agrees: bool,
    pub pass: bool,
}

/// Matrices of `ops` on the span of degree-`d` monomials in `vars` variables.
fn action_on_degree(ops: &[&WeylElement], vars: usize, d: usize) -> Vec<RatMatrix> {
    let basis = exponents(vars, d);
    let index: BTreeMap<Vec<u16>, usize> = basis.iter().cloned().enumerate().map(|(s, e)| (e, s)).collect();
    ops.iter()
        .map(|op| {
            let mut m = RatMatrix::zeros(basis.len(), basis.len());
            for (col, e) in basis.iter().enumerate() {
                let mut p = BTreeMap::new();
                p.insert(e.clone(), Rat::one());
                for (img, c) in op.apply(&p) {
                    m[(index[&img], col)] = c;
                }
            }
            m
        })
        .collect()
}

fn exponents(vars: usize, d: usize) -> Vec<Vec<u16>> {
    if vars == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in exponents(vars - 1, d - first) {
            rest.insert(0, first as u16);
            out.push(rest);
        }
    }
    out
}

/// The Euler family: `n = 1`, degree-`d` polynomials on `k×1` matrices.
/// `gl_1` acts by `d`, `gl_k` by `S^d(Cᵏ) = L(d, 0, …, 0)`. Checks
/// `q(u) | u q′(u+k−n)` and `q′(u) | u q(u−k+n)`.
pub fn check_divisibility_instance(n: usize, k: usize, d: usize) -> Result<DivisibilityReport> {
    if n != 1 {
        return Err(Error::Unsupported {
            family: format!("(gl_{n}, gl_{k})"),
            what: "divisibility instances are constructed for n = 1 only".into(),
        });
    }
    let pair = DualPairEmbedding::new(n, k)?;
    let euler = action_on_degree(&[&pair.right[0][0]], k, d);
    let q = matrix_minpoly(&euler[0]);

    let gl_k = AlgebraSpec::new(Family::Gl, k)?;
    let ops: Vec<&WeylElement> = gl_k
        .gens()
        .map(|g| {
            let info = gl_k.info(g);
            &pair.left[(info.row - 1) as usize][(info.col - 1) as usize]
        })
        .collect();
    let action = action_on_degree(&ops, k, d);
    let rep = RepMatrices {
        dim: action[0].rows(),
        action,
    };
    let q_prime = oracle_minpoly(&gl_k, &rep);

    let mut lambda = vec![0i64; k];
    lambda[0] = d as i64;
    let q_prime_predicted = minpoly_from_weight(&gl_k, &Weight::from_ints(&lambda), Mode::Fast)?;

    let shift = int(k as i64 - n as i64);
    let q_divides = q.divides(&q_prime.shift(&shift).shl(1));
    let q_prime_divides = q_prime.divides(&q.shift(&-shift.clone()).shl(1));
    let prediction_agrees = q_prime == q_prime_predicted;
    Ok(DivisibilityReport {
        n,
        k,
        d,
        q,
        q_prime,
        q_prime_predicted,
        shift,
        q_divides,
        q_prime_divides,
        prediction_agrees,
        pass: q_divides && q_prime_divides && prediction_agrees,
    })
}
