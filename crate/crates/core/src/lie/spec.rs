use std::fmt;
use std::sync::Mutex;

use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use serde::Serialize;

use super::pbw::{Monomial, UElement};
use crate::arith::{int, rat, Rat};
use crate::error::{Error, Result};

/// The four classical series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Gl,
    OEven,
    OOdd,
    Sp,
}

impl Family {
    pub fn is_gl(self) -> bool {
        self == Family::Gl
    }

    pub fn is_orthogonal(self) -> bool {
        matches!(self, Family::OEven | Family::OOdd)
    }
}

/// Index of a generator in the global PBW order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Gen(pub u16);

impl Gen {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TriClass {
    Negative,
    Cartan,
    Positive,
}

/// One basis element `E_ij` (GL) or `F_ij` (o/sp, canonical representative).
#[derive(Clone, Debug, Serialize)]
pub struct GenInfo {
    pub row: i32,
    pub col: i32,
    pub class: TriClass,
    /// `ad(h)`-weight in the `H_1..H_n` coordinates.
    pub weight: Vec<i32>,
    /// Level of the nested chain at which the generator first appears.
    pub level: usize,
}

/// A classical Lie algebra presented by matrix-unit style generators with
/// exact structure constants and a global PBW order that is compatible with
/// every parabolic of the nested chain `g_1 ⊂ g_2 ⊂ … ⊂ g_n`.
pub struct AlgebraSpec {
    family: Family,
    rank: usize,
    size: usize,
    epsilon: Rat,
    indices: Vec<i32>,
    gens: Vec<GenInfo>,
    entries: FxHashMap<(i32, i32), Option<(Rat, Gen)>>,
    brackets: Vec<Vec<Vec<(Gen, Rat)>>>,
    rho: Vec<Rat>,
    cartan: Vec<Gen>,
    pub(super) lmul_cache: Mutex<FxHashMap<(Gen, Monomial), UElement>>,
}

impl fmt::Debug for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraSpec({})", self.name())
    }
}

impl AlgebraSpec {
    /// Build the presentation of `gl_n`, `o_{2n}`, `o_{2n+1}` or `sp_{2n}`.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidArgument("rank must be at least 1".into()));
        }
        let n = rank as i32;
        let (size, epsilon, indices): (usize, Rat, Vec<i32>) = match family {
            Family::Gl => (rank, Rat::zero(), (1..=n).collect()),
            Family::OEven => (2 * rank, Rat::zero(), (-n..=n).filter(|&i| i != 0).collect()),
            Family::OOdd => (2 * rank + 1, rat(1, 2), (-n..=n).collect()),
            Family::Sp => (2 * rank, Rat::one(), (-n..=n).filter(|&i| i != 0).collect()),
        };
        let rho: Vec<Rat> = (0..rank)
            .map(|i| &epsilon + int((rank - 1 - i) as i64))
            .collect();

        let order = if family.is_gl() {
            gl_order(rank)
        } else {
            classical_order(family, rank)
        };
        let mut gens = Vec::with_capacity(order.len());
        for (row, col, level) in order {
            let weight = sub_weights(&index_weight(family, rank, row), &index_weight(family, rank, col));
            let class = match row.cmp(&col) {
                std::cmp::Ordering::Less => TriClass::Positive,
                std::cmp::Ordering::Equal => TriClass::Cartan,
                std::cmp::Ordering::Greater => TriClass::Negative,
            };
            gens.push(GenInfo { row, col, class, weight, level });
        }

        let mut entries = FxHashMap::default();
        let position: FxHashMap<(i32, i32), Gen> = gens
            .iter()
            .enumerate()
            .map(|(k, g)| ((g.row, g.col), Gen(k as u16)))
            .collect();
        for &i in &indices {
            for &j in &indices {
                let value = if family.is_gl() {
                    Some((Rat::one(), position[&(i, j)]))
                } else {
                    let (ci, cj, sign) = canonical_pair(family, i, j);
                    if sign.is_zero() {
                        None
                    } else {
                        Some((sign, position[&(ci, cj)]))
                    }
                };
                entries.insert((i, j), value);
            }
        }

        let cartan = (1..=rank)
            .map(|a| {
                let idx = if family.is_gl() { a as i32 } else { a as i32 - n - 1 };
                position[&(idx, idx)]
            })
            .collect();

        let mut spec = AlgebraSpec {
            family,
            rank,
            size,
            epsilon,
            indices,
            gens,
            entries,
            brackets: Vec::new(),
            rho,
            cartan,
            lmul_cache: Mutex::new(FxHashMap::default()),
        };
        spec.brackets = spec.structure_constants();
        Ok(spec)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Matrix size `N` of the defining representation.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn epsilon(&self) -> &Rat {
        &self.epsilon
    }

    pub fn rho(&self) -> &[Rat] {
        &self.rho
    }

    /// Row/column labels of the defining module: `1..n` for GL and
    /// `-n..n` (without `0` when `N` is even) otherwise.
    pub fn indices(&self) -> &[i32] {
        &self.indices
    }

    pub fn generators(&self) -> &[GenInfo] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn info(&self, g: Gen) -> &GenInfo {
        &self.gens[g.index()]
    }

    pub fn gens(&self) -> impl Iterator<Item = Gen> + '_ {
        (0..self.gens.len()).map(|k| Gen(k as u16))
    }

    /// `H_1, …, H_n`.
    pub fn cartan(&self) -> &[Gen] {
        &self.cartan
    }

    /// Position of `g` among `H_1..H_n`, if it is a Cartan generator.
    pub fn cartan_slot(&self, g: Gen) -> Option<usize> {
        self.cartan.iter().position(|&h| h == g)
    }

    /// Short name such as `gl_3`, `sp_4`, `o_5`.
    pub fn name(&self) -> String {
        match self.family {
            Family::Gl => format!("gl_{}", self.size),
            Family::Sp => format!("sp_{}", self.size),
            Family::OEven | Family::OOdd => format!("o_{}", self.size),
        }
    }

    /// `θ_{ij}`: `1` for orthogonal algebras, `sgn i · sgn j` for symplectic.
    pub fn theta(&self, i: i32, j: i32) -> i32 {
        theta(self.family, i, j)
    }

    /// The generator-matrix entry at `(i, j)` as `sign · generator`, or
    /// `None` when it vanishes identically.
    pub fn entry(&self, i: i32, j: i32) -> Result<Option<(Rat, Gen)>> {
        self.entries
            .get(&(i, j))
            .cloned()
            .ok_or_else(|| Error::UnknownGenerator(format!("({i},{j}) in {}", self.name())))
    }

    /// The entry `(i, j)` of the generator matrix as an element of `U(g)`.
    pub fn entry_element(&self, i: i32, j: i32) -> Result<UElement> {
        Ok(match self.entry(i, j)? {
            None => UElement::zero(),
            Some((c, g)) => UElement::generator(g).scale(&c),
        })
    }

    /// `[a, b]` as a combination of generators.
    pub fn bracket(&self, a: Gen, b: Gen) -> &[(Gen, Rat)] {
        &self.brackets[a.index()][b.index()]
    }

    pub fn label(&self, g: Gen) -> String {
        let info = self.info(g);
        let letter = if self.family.is_gl() { 'E' } else { 'F' };
        format!("{letter}[{},{}]", info.row, info.col)
    }

    /// Bracket of two matrix-unit style elements, straight from the
    /// commutation relations, expressed through canonical generators.
    fn structure_constants(&self) -> Vec<Vec<Vec<(Gen, Rat)>>> {
        let g = self.gens.len();
        let mut table = vec![vec![Vec::new(); g]; g];
        for a in 0..g {
            for b in 0..g {
                let (i, j) = (self.gens[a].row, self.gens[a].col);
                let (k, l) = (self.gens[b].row, self.gens[b].col);
                let mut acc: Vec<(i32, i32, i32)> = Vec::new();
                if self.family.is_gl() {
                    // [E_ij, E_kl] = δ_jk E_il − δ_li E_kj
                    if j == k {
                        acc.push((1, i, l));
                    }
                    if l == i {
                        acc.push((-1, k, j));
                    }
                } else {
                    // [F_ij, F_kl] = δ_kj F_il − δ_il F_kj − θ_{k,−j} δ_{i,−k} F_{−j,l} + θ_{i,−l} δ_{−l,j} F_{k,−i}
                    if k == j {
                        acc.push((1, i, l));
                    }
                    if i == l {
                        acc.push((-1, k, j));
                    }
                    if i == -k {
                        acc.push((-self.theta(k, -j), -j, l));
                    }
                    if -l == j {
                        acc.push((self.theta(i, -l), k, -i));
                    }
                }
                let mut combo: FxHashMap<Gen, Rat> = FxHashMap::default();
                for (c, r, s) in acc {
                    if let Some((sign, gen)) = self.entries[&(r, s)].clone() {
                        *combo.entry(gen).or_insert_with(Rat::zero) += sign * int(c as i64);
                    }
                }
                let mut terms: Vec<(Gen, Rat)> =
                    combo.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                terms.sort_by_key(|(gen, _)| *gen);
                table[a][b] = terms;
            }
        }
        table
    }

    /// Weight of an `ad(h)`-eigen monomial.
    pub fn monomial_weight(&self, m: &Monomial) -> Vec<i32> {
        let mut w = vec![0; self.rank];
        for g in m.letters() {
            for (acc, x) in w.iter_mut().zip(&self.info(*g).weight) {
                *acc += x;
            }
        }
        w
    }
}

pub(crate) fn theta(family: Family, i: i32, j: i32) -> i32 {
    match family {
        Family::Sp => i.signum() * j.signum(),
        _ => 1,
    }
}

/// Canonical representative of `F_ij`: the lexicographically smaller of
/// `(i, j)` and `(−j, −i)`, with `F_{−j,−i} = −θ_ij F_ij`. A zero sign means
/// the element vanishes.
fn canonical_pair(family: Family, i: i32, j: i32) -> (i32, i32, Rat) {
    let partner = (-j, -i);
    if (i, j) == partner {
        // F_{i,−i} = −θ_{i,−i} F_{i,−i}
        return if theta(family, i, -i) == -1 {
            (i, j, Rat::one())
        } else {
            (i, j, Rat::zero())
        };
    }
    if (i, j) < partner {
        (i, j, Rat::one())
    } else {
        (partner.0, partner.1, int(-theta(family, i, j) as i64))
    }
}

/// Contribution of basis vector `v_i` to weights, in `H_1..H_n` coordinates.
fn index_weight(family: Family, rank: usize, i: i32) -> Vec<i32> {
    let mut w = vec![0; rank];
    if family.is_gl() {
        w[(i - 1) as usize] = 1;
    } else if i < 0 {
        w[(rank as i32 + i) as usize] = 1;
    } else if i > 0 {
        w[(rank as i32 - i) as usize] = -1;
    }
    w
}

fn sub_weights(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `(row, col, level)` in the nested order
/// `[E_{m,j}]_{j<m} < gl_{m−1} < E_mm < [E_{i,m}]_{i<m}`.
fn gl_order(m: usize) -> Vec<(i32, i32, usize)> {
    if m == 0 {
        return Vec::new();
    }
    let mi = m as i32;
    let mut out: Vec<(i32, i32, usize)> = (1..mi).map(|j| (mi, j, m)).collect();
    out.extend(gl_order(m - 1));
    out.push((mi, mi, m));
    out.extend((1..mi).map(|i| (i, mi, m)));
    out
}

/// Same nesting along `g_{k−1} ⊂ g_k`: negatives `F_{j,−k}`, then `g_{k−1}`,
/// then `F_{−k,−k}`, then positives `F_{−k,j}`.
fn classical_order(family: Family, k: usize) -> Vec<(i32, i32, usize)> {
    if k == 0 {
        return Vec::new();
    }
    let ki = k as i32;
    let idx: Vec<i32> = (-ki..=ki)
        .filter(|&i| i != 0 || family == Family::OOdd)
        .filter(|&i| i != -ki)
        .filter(|&i| i != ki || family == Family::Sp)
        .collect();
    let mut out: Vec<(i32, i32, usize)> = idx.iter().map(|&j| (j, -ki, k)).collect();
    out.extend(classical_order(family, k - 1));
    out.push((-ki, -ki, k));
    out.extend(idx.iter().map(|&j| (-ki, j, k)));
    out
}
