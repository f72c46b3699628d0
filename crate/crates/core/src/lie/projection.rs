use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::pbw::{Monomial, UElement};
use super::spec::{AlgebraSpec, Gen, TriClass};
use crate::arith::{Rat, RatMatrix};
use crate::error::{Error, Result};

/// A weight `λ ∈ h*` as its values `λ_i = λ(H_i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Weight(#[serde(serialize_with = "crate::arith::ser::rats")] pub Vec<Rat>);

impl Weight {
    pub fn new(coords: Vec<Rat>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![Rat::zero(); rank])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Weight(v.iter().map(|&x| crate::arith::int(x)).collect())
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// `l = λ + ρ`.
    pub fn shifted(&self, spec: &AlgebraSpec) -> Vec<Rat> {
        self.0.iter().zip(spec.rho()).map(|(a, b)| a + b).collect()
    }

    pub fn check_rank(&self, spec: &AlgebraSpec) -> Result<()> {
        if self.rank() != spec.rank() {
            return Err(Error::RankMismatch {
                rank: spec.rank(),
                got: self.rank(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight{self}")
    }
}

/// One parabolic of the nested chain. Level `L` has Levi factor
/// `g_{L−1} ⊕ gl_1^{n−L+1}`; its nilradicals collect every generator that
/// first appears at a level `≥ L`. Level `n` is the maximal parabolic used
/// by the inductive formulas, level 1 is the Borel.
#[derive(Clone, Debug, Serialize)]
pub struct ParabolicData {
    pub level: usize,
    pub levi: Vec<Gen>,
    pub upper: Vec<Gen>,
    pub lower: Vec<Gen>,
    #[serde(skip)]
    in_levi: Vec<bool>,
}

impl ParabolicData {
    pub fn new(spec: &AlgebraSpec, level: usize) -> Result<Self> {
        if level == 0 || level > spec.rank() {
            return Err(Error::InvalidArgument(format!(
                "parabolic level {level} outside 1..={}",
                spec.rank()
            )));
        }
        let (mut levi, mut upper, mut lower) = (Vec::new(), Vec::new(), Vec::new());
        let mut in_levi = vec![false; spec.num_generators()];
        for g in spec.gens() {
            let info = spec.info(g);
            match info.class {
                TriClass::Positive if info.level >= level => upper.push(g),
                TriClass::Negative if info.level >= level => lower.push(g),
                _ => {
                    in_levi[g.index()] = true;
                    levi.push(g);
                }
            }
        }
        Ok(ParabolicData {
            level,
            levi,
            upper,
            lower,
            in_levi,
        })
    }

    /// The maximal parabolic with Levi `g' ⊕ gl_1`.
    pub fn top(spec: &AlgebraSpec) -> Self {
        Self::new(spec, spec.rank()).expect("rank ≥ 1")
    }

    pub fn contains(&self, g: Gen) -> bool {
        self.in_levi[g.index()]
    }

    /// The Cartan generator spanning the `gl_1` split off at this level.
    pub fn split_cartan(&self, spec: &AlgebraSpec) -> Gen {
        let slot = if spec.family().is_gl() {
            self.level - 1
        } else {
            spec.rank() - self.level
        };
        spec.cartan()[slot]
    }

    /// Whether an `ad(h)`-weight lies in `ZS`, the root lattice of the Levi.
    /// Weights of `U(g)` already lie in the root lattice of `g`, so a
    /// rational span test suffices.
    pub fn weight_in_levi_lattice(&self, spec: &AlgebraSpec, weight: &[i32]) -> bool {
        let roots: Vec<Vec<Rat>> = self
            .levi
            .iter()
            .filter(|g| spec.info(**g).class != TriClass::Cartan)
            .map(|g| spec.info(*g).weight.iter().map(|&x| Rat::from_integer(x.into())).collect())
            .collect();
        if weight.iter().all(|&x| x == 0) {
            return true;
        }
        if roots.is_empty() {
            return false;
        }
        let n = spec.rank();
        let a = RatMatrix::from_rows(
            (0..n)
                .map(|i| roots.iter().map(|r| r[i].clone()).collect())
                .collect(),
        );
        let b: Vec<Rat> = weight.iter().map(|&x| Rat::from_integer(x.into())).collect();
        a.solve(&b).is_some()
    }
}

impl AlgebraSpec {
    /// Absolute Harish-Chandra projection: the `U(h)` component. With the
    /// nested generator order this keeps exactly the Cartan-only monomials.
    pub fn project_hc(&self, a: &UElement) -> UElement {
        a.filter(|m| {
            m.letters()
                .iter()
                .all(|g| self.info(*g).class == TriClass::Cartan)
        })
    }

    /// Relative projection onto `U(m_S)` for the given parabolic.
    pub fn project_relative(&self, a: &UElement, p: &ParabolicData) -> UElement {
        a.filter(|m| m.letters().iter().all(|g| p.contains(*g)))
    }

    /// Evaluate a Cartan-only element at `λ` via `H_i ↦ λ_i`.
    pub fn evaluate_at_weight(&self, a: &UElement, weight: &Weight) -> Result<Rat> {
        weight.check_rank(self)?;
        let mut total = Rat::zero();
        for (m, c) in a.terms() {
            let mut value = c.clone();
            for g in m.letters() {
                let slot = self
                    .cartan_slot(*g)
                    .ok_or_else(|| Error::NotCartan(m.display(self)))?;
                value *= &weight.0[slot];
            }
            total += value;
        }
        Ok(total)
    }

    /// Substitute the scalar `value` for the Cartan generator `h` wherever it
    /// occurs. Only meaningful on `U(m_S)` where `h` is central.
    pub fn evaluate_partial(&self, a: &UElement, h: Gen, value: &Rat) -> UElement {
        let mut out = UElement::zero();
        for (m, c) in a.terms() {
            let mut coeff = c.clone();
            let mut rest = Vec::with_capacity(m.degree());
            for &g in m.letters() {
                if g == h {
                    coeff *= value;
                } else {
                    rest.push(g);
                }
            }
            out.add_term(Monomial::from_sorted(rest), coeff);
        }
        out
    }

    /// `pr_n`: relative projection to the top Levi followed by evaluating the
    /// split-off Cartan generator at the matching coordinate of `λ`.
    pub fn project_top(&self, a: &UElement, weight: &Weight) -> Result<UElement> {
        weight.check_rank(self)?;
        let p = ParabolicData::top(self);
        let h = p.split_cartan(self);
        let slot = self.cartan_slot(h).unwrap();
        Ok(self.evaluate_partial(&self.project_relative(a, &p), h, &weight.0[slot]))
    }

    /// `pr = ev_λ ∘ pr_{g/h}`.
    pub fn pr_at(&self, a: &UElement, weight: &Weight) -> Result<Rat> {
        self.evaluate_at_weight(&self.project_hc(a), weight)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::lie::Family;

    #[test]
    fn gl2_projections() {
        let s = AlgebraSpec::new(Family::Gl, 2).unwrap();
        let a = s.pbw_normalize(&[(int(1), vec![(1, 2), (2, 1)])]).unwrap();
        let expected = s
            .pbw_normalize(&[(int(1), vec![(1, 1)]), (int(-1), vec![(2, 2)])])
            .unwrap();
        assert_eq!(s.project_hc(&a), expected);
        let top = ParabolicData::top(&s);
        assert_eq!(s.project_relative(&a, &top), expected);
        let e12 = s.entry_element(1, 2).unwrap();
        assert!(s.project_hc(&e12).is_zero());
        assert!(s.project_relative(&e12, &top).is_zero());
        let e11sq = s.pbw_normalize(&[(int(1), vec![(1, 1), (1, 1)])]).unwrap();
        assert_eq!(s.project_hc(&e11sq), e11sq);
    }

    #[test]
    fn evaluation() {
        let s = AlgebraSpec::new(Family::Gl, 2).unwrap();
        let lam = Weight::from_ints(&[1, 0]);
        let a = s
            .pbw_normalize(&[(int(1), vec![(1, 1)]), (int(-1), vec![(2, 2)])])
            .unwrap();
        assert_eq!(s.evaluate_at_weight(&a, &lam).unwrap(), int(1));
        let b = s
            .pbw_normalize(&[
                (int(1), vec![(1, 1), (1, 1)]),
                (int(1), vec![(1, 1)]),
                (int(-1), vec![(2, 2)]),
            ])
            .unwrap();
        assert_eq!(s.evaluate_at_weight(&b, &lam).unwrap(), int(2));
        assert_eq!(
            s.evaluate_at_weight(&UElement::constant(int(5)), &Weight::from_ints(&[7, -3])).unwrap(),
            int(5)
        );
        let e21 = s.entry_element(2, 1).unwrap();
        assert!(matches!(s.evaluate_at_weight(&e21, &lam), Err(Error::NotCartan(_))));
        assert!(matches!(
            s.evaluate_at_weight(&a, &Weight::from_ints(&[1])),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn parabolic_partitions_generators() {
        for (family, n) in [(Family::Gl, 3), (Family::Sp, 2), (Family::OEven, 2), (Family::OOdd, 2)] {
            let s = AlgebraSpec::new(family, n).unwrap();
            for level in 1..=n {
                let p = ParabolicData::new(&s, level).unwrap();
                assert_eq!(p.levi.len() + p.upper.len() + p.lower.len(), s.num_generators());
                assert_eq!(p.upper.len(), p.lower.len());
            }
        }
        let s = AlgebraSpec::new(Family::Gl, 3).unwrap();
        let top = ParabolicData::top(&s);
        let upper: Vec<String> = top.upper.iter().map(|g| s.label(*g)).collect();
        let lower: Vec<String> = top.lower.iter().map(|g| s.label(*g)).collect();
        assert_eq!(upper, ["E[1,3]", "E[2,3]"]);
        assert_eq!(lower, ["E[3,1]", "E[3,2]"]);
        assert_eq!(s.label(top.split_cartan(&s)), "E[3,3]");
        // symplectic top level includes F_{-n,n} in the upper nilradical
        let s = AlgebraSpec::new(Family::Sp, 2).unwrap();
        let top = ParabolicData::top(&s);
        let upper: Vec<String> = top.upper.iter().map(|g| s.label(*g)).collect();
        assert_eq!(upper, ["F[-2,-1]", "F[-2,1]", "F[-2,2]"]);
        assert_eq!(s.label(top.split_cartan(&s)), "F[-2,-2]");
    }

    #[test]
    fn levi_lattice_membership() {
        let s = AlgebraSpec::new(Family::Gl, 3).unwrap();
        let top = ParabolicData::top(&s);
        assert!(top.weight_in_levi_lattice(&s, &[1, -1, 0]));
        assert!(!top.weight_in_levi_lattice(&s, &[1, 0, -1]));
        let borel = ParabolicData::new(&s, 1).unwrap();
        assert!(!borel.weight_in_levi_lattice(&s, &[1, -1, 0]));
        assert!(borel.weight_in_levi_lattice(&s, &[0, 0, 0]));
    }
}
