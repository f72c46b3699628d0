//! Square matrices over `U(g)`: the generator matrix, its powers, polynomial
//! evaluation, traces, and the coefficient data of the formal resolvent.

use num_traits::{One, Zero};

use crate::arith::{Rat, RatMatrix, UniPoly};
use crate::error::{Error, Result};
use crate::lie::{AlgebraSpec, UElement, Weight};

/// `N×N` matrix of `U(g)` elements, rows and columns labelled by module
/// indices (a subset of the spec's index set).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixU {
    indices: Vec<i32>,
    entries: Vec<UElement>,
}

impl MatrixU {
    pub fn zeros(indices: &[i32]) -> Self {
        let n = indices.len();
        MatrixU {
            indices: indices.to_vec(),
            entries: vec![UElement::zero(); n * n],
        }
    }

    pub fn identity(indices: &[i32]) -> Self {
        let mut m = Self::zeros(indices);
        for k in 0..indices.len() {
            m.entries[k * indices.len() + k] = UElement::one();
        }
        m
    }

    /// Entry `(i, j)` is `E_ij` (GL) or `F_ij` written through its canonical
    /// representative.
    pub fn generator_matrix(spec: &AlgebraSpec) -> Self {
        Self::generator_submatrix(spec, spec.indices())
    }

    /// The generator matrix restricted to the rows/columns in `indices`.
    pub fn generator_submatrix(spec: &AlgebraSpec, indices: &[i32]) -> Self {
        let mut m = Self::zeros(indices);
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                m.entries[a * indices.len() + b] =
                    spec.entry_element(i, j).expect("index from the spec");
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.indices.len()
    }

    pub fn indices(&self) -> &[i32] {
        &self.indices
    }

    fn pos(&self, i: i32) -> usize {
        self.indices
            .iter()
            .position(|&x| x == i)
            .unwrap_or_else(|| panic!("index {i} not in {:?}", self.indices))
    }

    /// Entry by module indices.
    pub fn get(&self, i: i32, j: i32) -> &UElement {
        &self.entries[self.pos(i) * self.size() + self.pos(j)]
    }

    /// Entry by positions `0..N`.
    pub fn at(&self, a: usize, b: usize) -> &UElement {
        &self.entries[a * self.size() + b]
    }

    pub fn set(&mut self, i: i32, j: i32, value: UElement) {
        let k = self.pos(i) * self.size() + self.pos(j);
        self.entries[k] = value;
    }

    pub fn map(&self, f: impl Fn(&UElement) -> UElement) -> MatrixU {
        MatrixU {
            indices: self.indices.clone(),
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &MatrixU) -> MatrixU {
        assert_eq!(self.indices, other.indices);
        MatrixU {
            indices: self.indices.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> MatrixU {
        self.map(|e| e.scale(c))
    }

    /// Matrix product with every entry normalized.
    pub fn mul(&self, spec: &AlgebraSpec, other: &MatrixU) -> MatrixU {
        assert_eq!(self.indices, other.indices);
        let n = self.size();
        let mut out = MatrixU::zeros(&self.indices);
        for a in 0..n {
            for b in 0..n {
                let mut acc = UElement::zero();
                for l in 0..n {
                    let left = self.at(a, l);
                    if left.is_zero() || other.at(l, b).is_zero() {
                        continue;
                    }
                    acc = acc.add(&mul_fast(spec, left, other.at(l, b)));
                }
                out.entries[a * n + b] = acc;
            }
        }
        out
    }

    pub fn trace(&self) -> UElement {
        (0..self.size()).fold(UElement::zero(), |acc, k| acc.add(self.at(k, k)))
    }

    /// Sum of the diagonal entries in rows other than `±n`.
    pub fn trace_prime(&self, spec: &AlgebraSpec) -> Result<UElement> {
        if spec.family().is_gl() {
            return Err(Error::Unsupported {
                family: spec.name(),
                what: "trace' is defined for orthogonal and symplectic algebras".into(),
            });
        }
        let n = spec.rank() as i32;
        Ok(self
            .indices
            .iter()
            .filter(|&&i| i != n && i != -n)
            .fold(UElement::zero(), |acc, &i| acc.add(self.get(i, i))))
    }

    /// Evaluate every entry through `ev_λ ∘ pr_{g/h}`.
    pub fn pr_at(&self, spec: &AlgebraSpec, weight: &Weight) -> Result<RatMatrix> {
        let n = self.size();
        let mut out = RatMatrix::zeros(n, n);
        for a in 0..n {
            for b in 0..n {
                out[(a, b)] = spec.pr_at(self.at(a, b), weight)?;
            }
        }
        Ok(out)
    }
}

/// Left factors that are a single scaled generator go through `lmul`
/// directly, which is how every power of the generator matrix is built.
fn mul_fast(spec: &AlgebraSpec, left: &UElement, right: &UElement) -> UElement {
    if left.len() == 1 {
        let (m, c) = left.terms().next().unwrap();
        if m.degree() == 1 {
            return spec.lmul(m.letters()[0], right).scale(c);
        }
    }
    spec.mul(left, right)
}

/// Powers `M⁰, M¹, …, Mᴷ` of a matrix over `U(g)`: the coefficients of the
/// formal resolvent `(u − M)⁻¹ = Σ Mᵏ u^{−k−1}`.
#[derive(Clone, Debug)]
pub struct ResolventCoeffs {
    coeffs: Vec<MatrixU>,
}

impl ResolventCoeffs {
    pub fn new(spec: &AlgebraSpec, m: &MatrixU, order: usize) -> Self {
        let mut coeffs = vec![MatrixU::identity(m.indices())];
        for k in 0..order {
            let next = m.mul(spec, &coeffs[k]);
            coeffs.push(next);
        }
        ResolventCoeffs { coeffs }
    }

    /// Highest power available.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn power(&self, k: usize) -> &MatrixU {
        &self.coeffs[k]
    }

    pub fn powers(&self) -> &[MatrixU] {
        &self.coeffs
    }

    /// `q(M)` from the stored powers.
    pub fn poly_apply(&self, q: &UniPoly) -> MatrixU {
        let d = q.degree().unwrap_or(0);
        assert!(d <= self.order(), "polynomial degree exceeds stored powers");
        let mut out = MatrixU::zeros(self.coeffs[0].indices());
        for (k, c) in q.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.coeffs[k].scale(c));
            }
        }
        out
    }
}

/// `q(M)`, normalized; the constant term contributes `q₀·I`.
pub fn poly_apply(spec: &AlgebraSpec, q: &UniPoly, m: &MatrixU) -> MatrixU {
    let d = q.degree().unwrap_or(0);
    ResolventCoeffs::new(spec, m, d).poly_apply(q)
}

/// `pr_{g/h}` of every entry of every power `Mᵏ`, `k ≤ K`: the only data
/// the projection criterion and the projected resolvent ever look at.
/// Independent of `λ`, so it is computed once per algebra and order.
#[derive(Clone, Debug)]
pub struct ProjectedPowers {
    indices: Vec<i32>,
    projected: Vec<MatrixU>,
}

impl ProjectedPowers {
    pub fn new(spec: &AlgebraSpec, order: usize) -> Self {
        let m = MatrixU::generator_matrix(spec);
        let res = ResolventCoeffs::new(spec, &m, order);
        Self::from_resolvent(spec, &res)
    }

    pub fn from_resolvent(spec: &AlgebraSpec, res: &ResolventCoeffs) -> Self {
        ProjectedPowers {
            indices: res.power(0).indices().to_vec(),
            projected: res
                .powers()
                .iter()
                .map(|p| p.map(|e| spec.project_hc(e)))
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.projected.len() - 1
    }

    pub fn indices(&self) -> &[i32] {
        &self.indices
    }

    /// `pr_{g/h}((Mᵏ)_{ij})`.
    pub fn get(&self, k: usize, i: i32, j: i32) -> &UElement {
        self.projected[k].get(i, j)
    }

    /// `pr_{g/h}(q(M)_{ij})` by linearity.
    pub fn poly_entry(&self, q: &UniPoly, i: i32, j: i32) -> UElement {
        let d = q.degree().unwrap_or(0);
        assert!(d <= self.order(), "polynomial degree exceeds stored powers");
        let mut out = UElement::zero();
        for (k, c) in q.coeffs().iter().enumerate() {
            out.add_scaled(self.get(k, i, j), c);
        }
        out
    }

    /// `ev_λ pr((Mᵏ)_{ij})` for all `k`.
    pub fn evaluated_entry(&self, spec: &AlgebraSpec, i: i32, j: i32, weight: &Weight) -> Result<Vec<Rat>> {
        (0..=self.order())
            .map(|k| spec.evaluate_at_weight(self.get(k, i, j), weight))
            .collect()
    }

    /// `ev_λ pr(tr Mᵏ)` for all `k`.
    pub fn evaluated_trace(&self, spec: &AlgebraSpec, weight: &Weight) -> Result<Vec<Rat>> {
        (0..=self.order())
            .map(|k| spec.evaluate_at_weight(&self.projected[k].trace(), weight))
            .collect()
    }
}

/// `Σ_k coeff_k u^{−k−1}` helper: the scalar resolvent series `1/(u − c)`.
pub fn geometric_tail(c: &Rat, order: usize) -> Vec<Rat> {
    let mut out = Vec::with_capacity(order);
    let mut p = Rat::one();
    for _ in 0..order {
        out.push(p.clone());
        p *= c;
    }
    out
}
