//! Ground truth that does not go through the PBW engine: explicit
//! representation matrices, exact minimal polynomials of the operator
//! `Σ e_ij ⊗ ρ(g_ij)`, and highest-weight coefficients read off a truncated
//! Verma module built from the bracket table alone.

use std::cell::RefCell;

use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::arith::{int, monic_lcm, Rat, RatMatrix, UniPoly};
use crate::error::{Error, Result};
use crate::lie::{AlgebraSpec, Gen, TriClass, UElement, Weight};

/// `ρ(g)` for every generator `g`, indexed by `Gen`.
#[derive(Clone, Debug)]
pub struct RepMatrices {
    pub dim: usize,
    pub action: Vec<RatMatrix>,
}

impl RepMatrices {
    pub fn get(&self, g: Gen) -> &RatMatrix {
        &self.action[g.index()]
    }

    /// Generator pairs whose bracket is not reproduced exactly.
    pub fn bracket_failures(&self, spec: &AlgebraSpec) -> Vec<(Gen, Gen)> {
        let mut bad = Vec::new();
        for a in spec.gens() {
            for b in spec.gens() {
                let lhs = self.get(a).commutator(self.get(b));
                let mut rhs = RatMatrix::zeros(self.dim, self.dim);
                for (g, c) in spec.bracket(a, b) {
                    rhs = rhs.add(&self.get(*g).scale(c));
                }
                if lhs != rhs {
                    bad.push((a, b));
                }
            }
        }
        bad
    }

    /// `ρ` of a generator-matrix entry, including its sign.
    fn entry(&self, spec: &AlgebraSpec, i: i32, j: i32) -> RatMatrix {
        match spec.entry(i, j).expect("index from the spec") {
            None => RatMatrix::zeros(self.dim, self.dim),
            Some((c, g)) => self.get(g).scale(&c),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CatalogRep {
    Trivial,
    Defining,
}

/// Trivial or defining representation.
pub fn build_catalog_rep(spec: &AlgebraSpec, which: CatalogRep) -> RepMatrices {
    match which {
        CatalogRep::Trivial => RepMatrices {
            dim: 1,
            action: spec.gens().map(|_| RatMatrix::zeros(1, 1)).collect(),
        },
        CatalogRep::Defining => {
            let idx = spec.indices();
            let n = idx.len();
            let pos = |i: i32| idx.iter().position(|&x| x == i).unwrap();
            let action = spec
                .gens()
                .map(|g| {
                    let info = spec.info(g);
                    let (i, j) = (info.row, info.col);
                    let mut m = RatMatrix::zeros(n, n);
                    m[(pos(i), pos(j))] += Rat::one();
                    if !spec.family().is_gl() {
                        // F_ij = E_ij − θ_ij E_{−j,−i}
                        m[(pos(-j), pos(-i))] -= int(spec.theta(i, j) as i64);
                    }
                    m
                })
                .collect();
            RepMatrices { dim: n, action }
        }
    }
}

/// Weyl dimension of the `gl_n` irrep with highest weight `λ`.
pub fn weyl_dimension_gl(lambda: &[i64]) -> Rat {
    let n = lambda.len();
    let mut num = Rat::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= Rat::new(
                (lambda[i] - lambda[j] + (j - i) as i64).into(),
                ((j - i) as i64).into(),
            );
        }
    }
    num
}

/// `L(λ)` for `gl_n`, `λ` dominant integral, realised as the image of the
/// Young symmetrizer in `(Cⁿ)^{⊗d}` after shifting `λ` by a multiple of the
/// determinant so that `λ_n = 0`. `size_bound` caps `d = |λ − λ_n|`.
pub fn build_irrep_gl(spec: &AlgebraSpec, weight: &Weight, size_bound: usize) -> Result<RepMatrices> {
    if !spec.family().is_gl() {
        return Err(Error::Unsupported {
            family: spec.name(),
            what: "Schur-Weyl construction is for gl_n".into(),
        });
    }
    weight.check_rank(spec)?;
    let n = spec.rank();
    let mut lambda = Vec::with_capacity(n);
    for c in weight.coords() {
        if !c.is_integer() {
            return Err(Error::NotDominantIntegral(weight.to_string()));
        }
        lambda.push(i64::try_from(c.to_integer()).map_err(|_| Error::TooLarge(weight.to_string()))?);
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotDominantIntegral(weight.to_string()));
    }
    let shift = lambda[n - 1];
    let shape: Vec<usize> = lambda.iter().map(|&x| (x - shift) as usize).filter(|&x| x > 0).collect();
    let d: usize = shape.iter().sum();
    if d > size_bound {
        return Err(Error::TooLarge(format!(
            "|λ| = {d} exceeds the Schur-Weyl bound {size_bound}"
        )));
    }
    let basis = young_image(n, &shape);
    let expected = weyl_dimension_gl(&lambda);
    assert_eq!(int(basis.vectors.len() as i64), expected, "Young symmetrizer image has the wrong dimension");

    let action = spec
        .gens()
        .map(|g| {
            let info = spec.info(g);
            let (i, j) = ((info.row - 1) as usize, (info.col - 1) as usize);
            let mut m = RatMatrix::zeros(basis.vectors.len(), basis.vectors.len());
            for (col, v) in basis.vectors.iter().enumerate() {
                let image = tensor_action(n, d, i, j, v);
                for (row, x) in basis.coordinates(&image).into_iter().enumerate() {
                    m[(row, col)] = x;
                }
            }
            if i == j && shift != 0 {
                m = m.add(&RatMatrix::identity(basis.vectors.len()).scale(&int(shift)));
            }
            m
        })
        .collect();
    Ok(RepMatrices {
        dim: basis.vectors.len(),
        action,
    })
}

/// A basis of a subspace of `Q^D` with a left inverse on chosen rows.
struct SubspaceBasis {
    vectors: Vec<Vec<Rat>>,
    pivot_rows: Vec<usize>,
    inverse: RatMatrix,
}

impl SubspaceBasis {
    fn coordinates(&self, w: &[Rat]) -> Vec<Rat> {
        let restricted: Vec<Rat> = self.pivot_rows.iter().map(|&r| w[r].clone()).collect();
        self.inverse.apply(&restricted)
    }
}

fn decode(mut code: usize, n: usize, d: usize) -> Vec<usize> {
    let mut t = vec![0; d];
    for k in (0..d).rev() {
        t[k] = code % n;
        code /= n;
    }
    t
}

fn encode(t: &[usize], n: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * n + x)
}

/// `Δ(E_ij)` on a tensor of `(Cⁿ)^{⊗d}`.
fn tensor_action(n: usize, d: usize, i: usize, j: usize, v: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); v.len()];
    for (code, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let t = decode(code, n, d);
        for k in 0..d {
            if t[k] == j {
                let mut s = t.clone();
                s[k] = i;
                out[encode(&s, n)] += x;
            }
        }
    }
    out
}

/// All permutations of `items`.
fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for k in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(k);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn sign(p: &[usize], base: &[usize]) -> i64 {
    // parity of the permutation taking `base` to `p`
    let pos: Vec<usize> = p.iter().map(|x| base.iter().position(|y| y == x).unwrap()).collect();
    let mut inv = 0;
    for a in 0..pos.len() {
        for b in a + 1..pos.len() {
            if pos[a] > pos[b] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Subgroup of `S_d` generated by permuting each block independently, as
/// full permutations (`σ[k]` = image of position `k`) with signs.
fn block_group(blocks: &[Vec<usize>], d: usize) -> Vec<(Vec<usize>, i64)> {
    let mut group: Vec<(Vec<usize>, i64)> = vec![((0..d).collect(), 1)];
    for block in blocks {
        let mut next = Vec::new();
        for (sigma, s) in &group {
            for p in permutations(block) {
                let mut tau = sigma.clone();
                for (from, to) in block.iter().zip(&p) {
                    tau[*from] = *to;
                }
                next.push((tau, s * sign(&p, block)));
            }
        }
        group = next;
    }
    group
}

/// Basis of `b·a·(Cⁿ)^{⊗d}` for the canonical (row-by-row) filling of the
/// shape, `a` the row symmetrizer and `b` the column antisymmetrizer.
fn young_image(n: usize, shape: &[usize]) -> SubspaceBasis {
    let d: usize = shape.iter().sum();
    let total = n.pow(d as u32);
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut next = 0;
    for &len in shape {
        rows.push((next..next + len).collect());
        next += len;
    }
    let cols: Vec<Vec<usize>> = (0..shape.first().copied().unwrap_or(0))
        .map(|c| rows.iter().filter(|r| r.len() > c).map(|r| r[c]).collect())
        .collect();
    let row_group = block_group(&rows, d);
    let col_group = block_group(&cols, d);
    let permute = |t: &[usize], sigma: &[usize]| {
        let mut s = vec![0; d];
        for k in 0..d {
            s[sigma[k]] = t[k];
        }
        s
    };

    let target = if d == 0 {
        1
    } else {
        let mut lambda: Vec<i64> = shape.iter().map(|&x| x as i64).collect();
        lambda.resize(n, 0);
        weyl_dimension_gl(&lambda).to_integer().try_into().unwrap_or(usize::MAX)
    };
    let mut vectors: Vec<Vec<Rat>> = Vec::new();
    let mut reduced: Vec<(usize, Vec<Rat>)> = Vec::new();
    for code in 0..total {
        if vectors.len() == target {
            break;
        }
        let t = decode(code, n, d);
        // tensors differing by a row permutation have the same image
        if rows.iter().any(|r| r.windows(2).any(|w| t[w[0]] > t[w[1]])) {
            continue;
        }
        let mut sym: FxHashMap<Vec<usize>, Rat> = FxHashMap::default();
        for (p, _) in &row_group {
            *sym.entry(permute(&t, p)).or_insert_with(Rat::zero) += Rat::one();
        }
        let mut v = vec![Rat::zero(); total];
        for (s, c) in &sym {
            for (q, sg) in &col_group {
                v[encode(&permute(s, q), n)] += c * int(*sg);
            }
        }
        let mut r = v.clone();
        for (p, b) in &reduced {
            if !r[*p].is_zero() {
                let f = r[*p].clone() / &b[*p];
                for (x, y) in r.iter_mut().zip(b) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        if let Some(p) = r.iter().position(|x| !x.is_zero()) {
            reduced.push((p, r));
            vectors.push(v);
        }
    }
    let pivot_rows: Vec<usize> = reduced.iter().map(|(p, _)| *p).collect();
    let m = vectors.len();
    let mut sub = RatMatrix::zeros(m, m);
    for (a, &r) in pivot_rows.iter().enumerate() {
        for (b, v) in vectors.iter().enumerate() {
            sub[(a, b)] = v[r].clone();
        }
    }
    let inverse = sub.inverse().expect("pivot rows of an independent set");
    SubspaceBasis {
        vectors,
        pivot_rows,
        inverse,
    }
}

/// The operator `Σ_{ij} e_ij ⊗ ρ(g_ij)` on `C^N ⊗ V`.
pub fn big_operator(spec: &AlgebraSpec, rep: &RepMatrices) -> RatMatrix {
    let idx = spec.indices();
    let n = idx.len();
    let mut out = RatMatrix::zeros(n * rep.dim, n * rep.dim);
    for (a, &i) in idx.iter().enumerate() {
        for (b, &j) in idx.iter().enumerate() {
            let block = rep.entry(spec, i, j);
            for r in 0..rep.dim {
                for c in 0..rep.dim {
                    if !block[(r, c)].is_zero() {
                        out[(a * rep.dim + r, b * rep.dim + c)] = block[(r, c)].clone();
                    }
                }
            }
        }
    }
    out
}

/// Minimal polynomial of a square matrix: annihilators of each basis vector
/// from exact Krylov sequences, combined by `lcm`.
pub fn matrix_minpoly(m: &RatMatrix) -> UniPoly {
    let n = m.rows();
    let mut annihilators = Vec::with_capacity(n);
    for s in 0..n {
        let mut v = vec![Rat::zero(); n];
        v[s] = Rat::one();
        let mut krylov: Vec<Vec<Rat>> = vec![v];
        loop {
            let next = m.apply(krylov.last().unwrap());
            let k = RatMatrix::from_rows(
                (0..n).map(|r| krylov.iter().map(|col| col[r].clone()).collect()).collect(),
            );
            if let Some(x) = k.solve(&next) {
                let mut coeffs: Vec<Rat> = x.into_iter().map(|c| -c).collect();
                coeffs.push(Rat::one());
                annihilators.push(UniPoly::new(coeffs));
                break;
            }
            krylov.push(next);
        }
    }
    monic_lcm(annihilators.iter())
}

/// Minimal polynomial of `Σ e_ij ⊗ ρ(g_ij)`.
pub fn oracle_minpoly(spec: &AlgebraSpec, rep: &RepMatrices) -> UniPoly {
    matrix_minpoly(&big_operator(spec, rep))
}

/// Verma module `M(λ)` truncated at a PBW degree, acted on by generators
/// through the bracket table and the weights only.
pub struct VermaTruncation<'a> {
    spec: &'a AlgebraSpec,
    weight: Weight,
    depth: usize,
    /// Negative generators in the order used for basis monomials. The
    /// reverse of the global PBW order, so the two paths do not share a
    /// normal form.
    rank_of: FxHashMap<Gen, usize>,
    cache: RefCell<FxHashMap<(Gen, Vec<Gen>), FxHashMap<Vec<Gen>, Rat>>>,
}

type Vector = FxHashMap<Vec<Gen>, Rat>;

impl<'a> VermaTruncation<'a> {
    pub fn new(spec: &'a AlgebraSpec, weight: &Weight, depth: usize) -> Result<Self> {
        weight.check_rank(spec)?;
        let mut negatives: Vec<Gen> = spec
            .gens()
            .filter(|g| spec.info(*g).class == TriClass::Negative)
            .collect();
        negatives.reverse();
        Ok(VermaTruncation {
            spec,
            weight: weight.clone(),
            depth,
            rank_of: negatives.iter().enumerate().map(|(k, g)| (*g, k)).collect(),
            cache: RefCell::new(FxHashMap::default()),
        })
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// `g · y_1 ⋯ y_m v_λ`.
    fn act(&self, g: Gen, mono: &[Gen]) -> Vector {
        if let Some(v) = self.cache.borrow().get(&(g, mono.to_vec())) {
            return v.clone();
        }
        let spec = self.spec;
        let info = spec.info(g);
        let mut out = Vector::default();
        match info.class {
            TriClass::Cartan => {
                let slot = spec.cartan_slot(g).unwrap();
                let mut value = self.weight.coords()[slot].clone();
                for y in mono {
                    value += int(spec.info(*y).weight[slot] as i64);
                }
                if !value.is_zero() {
                    out.insert(mono.to_vec(), value);
                }
            }
            _ if mono.is_empty() => {
                if info.class == TriClass::Negative && self.depth > 0 {
                    out.insert(vec![g], Rat::one());
                }
            }
            TriClass::Negative if self.rank_of[&g] <= self.rank_of[&mono[0]] => {
                if mono.len() < self.depth {
                    let mut m = Vec::with_capacity(mono.len() + 1);
                    m.push(g);
                    m.extend_from_slice(mono);
                    out.insert(m, Rat::one());
                }
            }
            _ => {
                // g y rest = y (g rest) + [g, y] rest
                let (y, rest) = (mono[0], &mono[1..]);
                for (m, c) in self.act(g, rest) {
                    add_into(&mut out, &self.act(y, &m), &c);
                }
                for (h, c) in spec.bracket(g, y) {
                    add_into(&mut out, &self.act(*h, rest), c);
                }
            }
        }
        self.cache.borrow_mut().insert((g, mono.to_vec()), out.clone());
        out
    }

    /// `word · v_λ`, letters applied right to left.
    pub fn apply_word(&self, word: &[Gen]) -> Vector {
        let mut v = Vector::default();
        v.insert(Vec::new(), Rat::one());
        for &g in word.iter().rev() {
            let mut next = Vector::default();
            for (m, c) in &v {
                add_into(&mut next, &self.act(g, m), c);
            }
            v = next;
        }
        v
    }

    /// Coefficient of `v_λ` in `a · v_λ`.
    pub fn hw_coefficient(&self, a: &UElement) -> Result<Rat> {
        if a.degree() > self.depth {
            return Err(Error::DepthTooSmall {
                depth: self.depth,
                degree: a.degree(),
            });
        }
        let mut total = Rat::zero();
        for (m, c) in a.terms() {
            let v = self.apply_word(m.letters());
            if let Some(x) = v.get(&Vec::new()) {
                total += c * x;
            }
        }
        Ok(total)
    }
}

fn add_into(out: &mut Vector, v: &Vector, c: &Rat) {
    for (m, x) in v {
        let e = out.entry(m.clone()).or_insert_with(Rat::zero);
        *e += c * x;
        if e.is_zero() {
            out.remove(m);
        }
    }
}

/// Coefficient of `v_λ` in `a · v_λ`, through a fresh truncation.
pub fn hw_coefficient(spec: &AlgebraSpec, a: &UElement, weight: &Weight, depth: usize) -> Result<Rat> {
    VermaTruncation::new(spec, weight, depth)?.hw_coefficient(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::Family;
    use crate::arith::rat;

    fn roots(v: &[i64]) -> UniPoly {
        UniPoly::from_roots(&v.iter().map(|&x| int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn catalog_reps_respect_brackets() {
        for (family, n) in [(Family::Gl, 3), (Family::Sp, 1), (Family::Sp, 2), (Family::OOdd, 1), (Family::OEven, 2), (Family::OOdd, 2)] {
            let s = AlgebraSpec::new(family, n).unwrap();
            for which in [CatalogRep::Trivial, CatalogRep::Defining] {
                let rep = build_catalog_rep(&s, which);
                assert!(rep.bracket_failures(&s).is_empty(), "{} {which:?}", s.name());
            }
        }
    }

    #[test]
    fn sp2_defining_matrices() {
        let s = AlgebraSpec::new(Family::Sp, 1).unwrap();
        let rep = build_catalog_rep(&s, CatalogRep::Defining);
        let (_, h) = s.entry(-1, -1).unwrap().unwrap();
        assert_eq!(rep.get(h), &RatMatrix::from_rows(vec![vec![int(1), int(0)], vec![int(0), int(-1)]]));
        let (_, e) = s.entry(-1, 1).unwrap().unwrap();
        assert_eq!(rep.get(e), &RatMatrix::from_rows(vec![vec![int(0), int(2)], vec![int(0), int(0)]]));
    }

    #[test]
    fn defining_and_trivial_minpolys() {
        let gl2 = AlgebraSpec::new(Family::Gl, 2).unwrap();
        assert_eq!(oracle_minpoly(&gl2, &build_catalog_rep(&gl2, CatalogRep::Defining)), roots(&[0, 2]));
        let sp2 = AlgebraSpec::new(Family::Sp, 1).unwrap();
        assert_eq!(oracle_minpoly(&sp2, &build_catalog_rep(&sp2, CatalogRep::Defining)), roots(&[-1, 3]));
        let gl3 = AlgebraSpec::new(Family::Gl, 3).unwrap();
        assert_eq!(oracle_minpoly(&gl3, &build_catalog_rep(&gl3, CatalogRep::Trivial)), UniPoly::var());
        let o3 = AlgebraSpec::new(Family::OOdd, 1).unwrap();
        assert_eq!(oracle_minpoly(&o3, &build_catalog_rep(&o3, CatalogRep::Defining)), roots(&[-1, 1, 2]));
    }

    #[test]
    fn schur_weyl_irreps() {
        let gl2 = AlgebraSpec::new(Family::Gl, 2).unwrap();
        let rep = build_irrep_gl(&gl2, &Weight::from_ints(&[1, 0]), 4).unwrap();
        assert_eq!(rep.dim, 2);
        assert_eq!(oracle_minpoly(&gl2, &rep), roots(&[0, 2]));
        let rep = build_irrep_gl(&gl2, &Weight::from_ints(&[0, 0]), 4).unwrap();
        assert_eq!(rep.dim, 1);
        assert!(rep.action.iter().all(RatMatrix::is_zero));
        let rep = build_irrep_gl(&gl2, &Weight::from_ints(&[2, 0]), 4).unwrap();
        assert_eq!(rep.dim, 3);
        assert!(rep.bracket_failures(&gl2).is_empty());
        let gl3 = AlgebraSpec::new(Family::Gl, 3).unwrap();
        for lam in [[2, 1, 0], [1, 1, 0], [1, 0, -1], [0, 0, -1], [3, 0, 0]] {
            let rep = build_irrep_gl(&gl3, &Weight::from_ints(&lam), 4).unwrap();
            assert_eq!(int(rep.dim as i64), weyl_dimension_gl(&lam));
            assert!(rep.bracket_failures(&gl3).is_empty(), "{lam:?}");
        }
        assert!(build_irrep_gl(&gl2, &Weight::from_ints(&[0, 1]), 4).is_err());
        assert!(build_irrep_gl(&gl2, &Weight::new(vec![rat(1, 2), int(0)]), 4).is_err());
        assert!(build_irrep_gl(&gl2, &Weight::from_ints(&[5, 0]), 4).is_err());
    }

    #[test]
    fn highest_weight_coefficients() {
        let s = AlgebraSpec::new(Family::Gl, 2).unwrap();
        let lam = Weight::from_ints(&[1, 0]);
        let a = s.pbw_normalize(&[(int(1), vec![(1, 2), (2, 1)])]).unwrap();
        assert_eq!(hw_coefficient(&s, &a, &lam, 2).unwrap(), int(1));
        let e11 = s.entry_element(1, 1).unwrap();
        let ab = Weight::new(vec![rat(3, 4), rat(-2, 1)]);
        assert_eq!(hw_coefficient(&s, &e11, &ab, 1).unwrap(), rat(3, 4));
        let e21 = s.entry_element(2, 1).unwrap();
        assert_eq!(hw_coefficient(&s, &e21, &ab, 1).unwrap(), int(0));
        assert!(matches!(hw_coefficient(&s, &a, &lam, 1), Err(Error::DepthTooSmall { .. })));
    }

    #[test]
    fn raw_word_matches_projection() {
        // E12 E21 E21 E12 is not in PBW order; compare against the engine
        let s = AlgebraSpec::new(Family::Sp, 2).unwrap();
        let lam = Weight::new(vec![rat(1, 3), int(2)]);
        let v = VermaTruncation::new(&s, &lam, 4).unwrap();
        let gens: Vec<Gen> = s.gens().collect();
        for w in [[gens[0], gens[9], gens[9], gens[0]], [gens[9], gens[1], gens[8], gens[2]]] {
            let direct = v.apply_word(&w).get(&Vec::new()).cloned().unwrap_or_else(Rat::zero);
            let engine = s.pr_at(&s.word(&w), &lam).unwrap();
            assert_eq!(direct, engine);
        }
    }

    #[test]
    fn irreps_match_shuffle_prediction() {
        for n in 1..=3usize {
            let s = AlgebraSpec::new(Family::Gl, n).unwrap();
            for lam in dominant(n, 3, -1) {
                let w = Weight::from_ints(&lam);
                let Ok(rep) = build_irrep_gl(&s, &w, 4) else { continue };
                let pred = crate::shuffle::predict(&s, &w).unwrap();
                assert_eq!(oracle_minpoly(&s, &rep), pred.polynomial, "{} {lam:?}", s.name());
            }
        }
        for (family, n) in [(Family::Sp, 1), (Family::Sp, 2), (Family::OEven, 2), (Family::OOdd, 1), (Family::OOdd, 2)] {
            let s = AlgebraSpec::new(family, n).unwrap();
            let mut lam = vec![0; n];
            lam[0] = 1;
            let pred = crate::shuffle::predict(&s, &Weight::from_ints(&lam)).unwrap();
            let rep = build_catalog_rep(&s, CatalogRep::Defining);
            assert_eq!(oracle_minpoly(&s, &rep), pred.polynomial, "{}", s.name());
        }
    }

    fn dominant(n: usize, top: i64, bottom: i64) -> Vec<Vec<i64>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (bottom..=top).rev() {
            for mut rest in dominant(n - 1, first, bottom) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
}
