//! The bar complex of a finite group with coefficients in a lattice.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::snf::{smith_normal_form, IntMatrix, Smith};
use super::{FiniteGroupTable, IntegralRepresentation, TwoCocycle, Vector};
use crate::error::{Error, Result};

/// Largest cochain module (as a `Z`-rank) the complex will build.
pub const MAX_COCHAIN_DIM: usize = 4096;

/// A finitely generated abelian group `Z^r + Z/t_1 + ... + Z/t_s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cohomology {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl Cohomology {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for Cohomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Normalised cochains `(F \ {e})^k -> Z^n` with the coboundary
/// `(d c)(g_1..g_k+1) = g_1 c(g_2..) + sum_i (-1)^i c(.., g_i g_i+1, ..)
/// + (-1)^(k+1) c(g_1..g_k)`.
#[derive(Clone, Debug)]
pub struct BarComplex {
    group: FiniteGroupTable,
    rep: IntegralRepresentation,
    // Position of each element among the non-identity elements.
    slot: Vec<Option<usize>>,
    elems: Vec<usize>,
}

impl BarComplex {
    pub fn new(group: &FiniteGroupTable, rep: &IntegralRepresentation) -> Self {
        let elems = group.non_identity();
        let mut slot = vec![None; group.order()];
        for (i, &g) in elems.iter().enumerate() {
            slot[g] = Some(i);
        }
        BarComplex {
            group: group.clone(),
            rep: rep.clone(),
            slot,
            elems,
        }
    }

    pub fn rank(&self) -> usize {
        self.rep.rank()
    }

    /// `Z`-rank of the degree `k` cochains, if it fits the budget.
    pub fn cochain_dim(&self, k: usize) -> Option<usize> {
        let m = self.elems.len();
        let tuples = m.checked_pow(u32::try_from(k).ok()?)?;
        let dim = tuples.checked_mul(self.rank())?;
        (dim <= MAX_COCHAIN_DIM).then_some(dim)
    }

    fn dims(&self, k: usize) -> Result<(usize, usize)> {
        match (self.cochain_dim(k), self.cochain_dim(k + 1)) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(Error::UnsupportedDegree(k)),
        }
    }

    fn tuple(&self, mut index: usize, k: usize) -> Vec<usize> {
        let m = self.elems.len();
        let mut t = vec![0; k];
        for x in t.iter_mut().rev() {
            *x = self.elems[index % m];
            index /= m;
        }
        t
    }

    /// Index of a tuple, or `None` when it contains the identity.
    fn index(&self, tuple: &[usize]) -> Option<usize> {
        let m = self.elems.len();
        tuple
            .iter()
            .try_fold(0usize, |acc, &g| Some(acc * m + self.slot[g]?))
    }

    /// The matrix of `d^k : C^k -> C^(k+1)`.
    pub fn coboundary(&self, k: usize) -> Result<IntMatrix> {
        let (cols, rows) = self.dims(k)?;
        let n = self.rank();
        let mut d = IntMatrix::zeros(rows, cols);
        if n == 0 {
            return Ok(d);
        }
        for r in 0..rows / n {
            let g = self.tuple(r, k + 1);
            // g_1 c(g_2..g_k+1)
            if let Some(c) = self.index(&g[1..]) {
                let m = self.rep.matrix(g[0]);
                for i in 0..n {
                    for j in 0..n {
                        let v = d.get(r * n + i, c * n + j) + m.get(i, j);
                        d.set(r * n + i, c * n + j, v);
                    }
                }
            }
            let mut face = |tuple: &[usize], sign: i64| {
                if let Some(c) = self.index(tuple) {
                    for i in 0..n {
                        let v = d.get(r * n + i, c * n + i) + sign;
                        d.set(r * n + i, c * n + i, v);
                    }
                }
            };
            for i in 1..=k {
                let mut t = g[..i - 1].to_vec();
                t.push(self.group.mul(g[i - 1], g[i]));
                t.extend_from_slice(&g[i + 1..]);
                face(&t, if i % 2 == 0 { 1 } else { -1 });
            }
            face(&g[..k], if (k + 1).is_multiple_of(2) { 1 } else { -1 });
        }
        Ok(d)
    }

    fn smith_below(&self, k: usize) -> Result<Option<Smith>> {
        if k == 0 {
            return Ok(None);
        }
        Ok(Some(smith_normal_form(&self.coboundary(k - 1)?)))
    }

    /// `H^k = ker d^k / im d^(k-1)`.
    pub fn cohomology(&self, k: usize) -> Result<Cohomology> {
        let (dim, _) = self.dims(k)?;
        let above = smith_normal_form(&self.coboundary(k)?);
        let below = self.smith_below(k)?;
        let rank_below = below.as_ref().map_or(0, |s| s.rank);
        let torsion = below
            .map(|s| {
                s.invariant_factors()
                    .into_iter()
                    .filter(|t| !t.is_one())
                    .collect()
            })
            .unwrap_or_default();
        Ok(Cohomology {
            free_rank: dim - above.rank - rank_below,
            torsion,
        })
    }

    /// A `(k-1)`-cochain `b` with `d b = c`, or `NoIntegralSolution`.
    pub fn coboundary_preimage(&self, k: usize, c: &[BigInt]) -> Result<Vec<BigInt>> {
        if k == 0 {
            return Err(Error::UnsupportedDegree(0));
        }
        let smith = smith_normal_form(&self.coboundary(k - 1)?);
        if c.len() != smith.u.cols() {
            return Err(Error::invalid("cochain has the wrong length"));
        }
        smith
            .solve(c)
            .ok_or_else(|| Error::NoIntegralSolution(format!("cochain is not a coboundary in degree {k}")))
    }

    pub fn is_coboundary(&self, k: usize, c: &[BigInt]) -> Result<bool> {
        match self.coboundary_preimage(k, c) {
            Ok(_) => Ok(true),
            Err(Error::NoIntegralSolution(_)) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Flattens a 2-cocycle into a 2-cochain.
    pub fn cochain_of(&self, c: &TwoCocycle) -> Vec<BigInt> {
        let mut out = Vec::new();
        for &f in &self.elems {
            for &g in &self.elems {
                out.extend(c.get(f, g).iter().cloned());
            }
        }
        out
    }

    /// A 1-cochain as a function on all of `F`, zero at the identity.
    pub fn function_of(&self, b: &[BigInt]) -> Vec<Vector> {
        let n = self.rank();
        (0..self.group.order())
            .map(|g| match self.slot[g] {
                Some(i) => b[i * n..(i + 1) * n].to_vec(),
                None => vec![BigInt::zero(); n],
            })
            .collect()
    }
}

/// A chain in the homogeneous bar resolution: integer combination of tuples.
pub type Chain = BTreeMap<Vec<usize>, BigInt>;

fn push(chain: &mut Chain, key: Vec<usize>, c: BigInt) {
    let e = chain.entry(key).or_insert_with(BigInt::zero);
    *e += c;
    if e.is_zero() {
        chain.retain(|_, v| !v.is_zero());
    }
}

/// The homogeneous bar resolution `Z[F^(k+1)]` of `Z`, with faces `d_i`,
/// `del = sum (-1)^i d_i` and the contraction `h(g_0..g_k) = (e, g_0..g_k)`.
#[derive(Clone, Debug)]
pub struct BarResolution {
    group: FiniteGroupTable,
}

impl BarResolution {
    pub fn new(group: &FiniteGroupTable) -> Self {
        BarResolution {
            group: group.clone(),
        }
    }

    pub fn face(&self, i: usize, chain: &Chain) -> Chain {
        let mut out = Chain::new();
        for (t, c) in chain {
            let mut s = t.clone();
            s.remove(i);
            push(&mut out, s, c.clone());
        }
        out
    }

    pub fn boundary(&self, chain: &Chain) -> Chain {
        let mut out = Chain::new();
        for (t, c) in chain {
            for i in 0..t.len() {
                let mut s = t.clone();
                s.remove(i);
                let c = if i % 2 == 0 { c.clone() } else { -c };
                push(&mut out, s, c);
            }
        }
        out
    }

    pub fn contraction(&self, chain: &Chain) -> Chain {
        chain
            .iter()
            .map(|(t, c)| {
                let mut s = vec![self.group.identity()];
                s.extend_from_slice(t);
                (s, c.clone())
            })
            .collect()
    }

    /// `F` acting diagonally on tuples.
    pub fn act(&self, g: usize, chain: &Chain) -> Chain {
        chain
            .iter()
            .map(|(t, c)| (t.iter().map(|&x| self.group.mul(g, x)).collect(), c.clone()))
            .collect()
    }

    fn augmentation(chain: &Chain) -> BigInt {
        chain.values().sum()
    }

    fn basis(&self, k: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
        let q = self.group.order();
        (0..q.pow(k as u32 + 1)).map(move |mut i| {
            let mut t = vec![0; k + 1];
            for x in t.iter_mut().rev() {
                *x = i % q;
                i /= q;
            }
            t
        })
    }

    /// Checks `del del = 0`, equivariance of `del`, and `del h + h del = id`
    /// (with `del h + h eps = id` in degree 0) on every basis tuple of degree
    /// at most `max_degree`.
    pub fn verify(&self, max_degree: usize) -> bool {
        for k in 0..=max_degree {
            for t in self.basis(k) {
                let x: Chain = [(t, BigInt::one())].into_iter().collect();
                if k > 0 && !self.boundary(&self.boundary(&x)).is_empty() {
                    return false;
                }
                for g in 0..self.group.order() {
                    if self.boundary(&self.act(g, &x)) != self.act(g, &self.boundary(&x)) {
                        return false;
                    }
                }
                let mut lhs = self.boundary(&self.contraction(&x));
                let other = if k == 0 {
                    [(vec![self.group.identity()], Self::augmentation(&x))]
                        .into_iter()
                        .collect()
                } else {
                    self.contraction(&self.boundary(&x))
                };
                for (s, c) in other {
                    push(&mut lhs, s, c);
                }
                if lhs != x {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sign_rep(f: &FiniteGroupTable, sign: i64) -> IntegralRepresentation {
        IntegralRepresentation::new(
            f,
            1,
            vec![IntMatrix::identity(1), IntMatrix::from_rows(&[vec![sign]])],
        )
        .unwrap()
    }

    fn z2(t: i64) -> Cohomology {
        Cohomology {
            free_rank: 0,
            torsion: vec![BigInt::from(t)],
        }
    }

    #[test]
    fn cyclic_of_order_two() {
        let f = FiniteGroupTable::cyclic(2);
        let triv = BarComplex::new(&f, &sign_rep(&f, 1));
        assert_eq!(triv.cohomology(2).unwrap(), z2(2));
        assert!(triv.cohomology(1).unwrap().is_zero());
        assert_eq!(triv.cohomology(0).unwrap().free_rank, 1);
        assert_eq!(triv.cohomology(4).unwrap(), z2(2));
        let sign = BarComplex::new(&f, &sign_rep(&f, -1));
        assert!(sign.cohomology(2).unwrap().is_zero());
        assert_eq!(sign.cohomology(1).unwrap(), z2(2));
        assert_eq!(triv.cohomology(2).unwrap().to_string(), "Z/2");
    }

    #[test]
    fn larger_groups() {
        let c3 = FiniteGroupTable::cyclic(3);
        let bc = BarComplex::new(&c3, &IntegralRepresentation::trivial(&c3, 2));
        assert_eq!(bc.cohomology(2).unwrap().torsion, vec![BigInt::from(3), BigInt::from(3)]);
        let k = FiniteGroupTable::direct_product(&FiniteGroupTable::cyclic(2), &FiniteGroupTable::cyclic(2));
        let bc = BarComplex::new(&k, &IntegralRepresentation::trivial(&k, 1));
        // H^2(Z/2 x Z/2, Z) = Z/2 x Z/2.
        assert_eq!(bc.cohomology(2).unwrap().torsion, vec![BigInt::from(2), BigInt::from(2)]);
        assert_eq!(bc.cohomology(3).unwrap().torsion, vec![BigInt::from(2)]);
    }

    #[test]
    fn trivial_group_is_acyclic() {
        let f = FiniteGroupTable::cyclic(1);
        let bc = BarComplex::new(&f, &IntegralRepresentation::trivial(&f, 3));
        for k in 1..=5 {
            assert!(bc.cohomology(k).unwrap().is_zero());
        }
        assert_eq!(bc.cohomology(0).unwrap().free_rank, 3);
    }

    #[test]
    fn coboundaries_compose_to_zero() {
        let g = super::super::CrystallographicGroup::pgg();
        let bc = BarComplex::new(g.holonomy(), g.representation());
        for k in 0..3 {
            let d = bc.coboundary(k + 1).unwrap().mul(&bc.coboundary(k).unwrap());
            assert!(d.is_zero(), "degree {k}");
        }
        let c = bc.cochain_of(g.cocycle());
        assert!(bc.coboundary(2).unwrap().mul_vec(&c).iter().all(Zero::is_zero));
    }

    #[test]
    fn order_kills_the_extension_class() {
        let f = FiniteGroupTable::cyclic(2);
        let rep = sign_rep(&f, 1);
        let one = vec![BigInt::one()];
        let c = TwoCocycle::new(&f, &rep, vec![vec![vec![BigInt::zero()]; 2], vec![vec![BigInt::zero()], one]])
            .unwrap();
        let bc = BarComplex::new(&f, &rep);
        let cc = bc.cochain_of(&c);
        assert!(!bc.is_coboundary(2, &cc).unwrap());
        assert!(matches!(bc.coboundary_preimage(2, &cc), Err(Error::NoIntegralSolution(_))));
        let twice: Vec<BigInt> = cc.iter().map(|x| x * 2).collect();
        let b = bc.coboundary_preimage(2, &twice).unwrap();
        assert_eq!(bc.coboundary(1).unwrap().mul_vec(&b), twice);

        for g in [super::super::CrystallographicGroup::pgg(), super::super::CrystallographicGroup::split_sign(2)] {
            let bc = BarComplex::new(g.holonomy(), g.representation());
            let q = BigInt::from(g.holonomy().order());
            let c: Vec<BigInt> = bc.cochain_of(g.cocycle()).iter().map(|x| x * &q).collect();
            assert!(bc.is_coboundary(2, &c).unwrap());
        }
        // pgg is non-split.
        let g = super::super::CrystallographicGroup::pgg();
        let bc = BarComplex::new(g.holonomy(), g.representation());
        assert!(!bc.is_coboundary(2, &bc.cochain_of(g.cocycle())).unwrap());
    }

    #[test]
    fn budget() {
        let f = FiniteGroupTable::cyclic(8);
        let bc = BarComplex::new(&f, &IntegralRepresentation::trivial(&f, 1));
        assert_eq!(bc.cohomology(5), Err(Error::UnsupportedDegree(5)));
    }

    #[test]
    fn resolution_contracts() {
        for f in [
            FiniteGroupTable::cyclic(1),
            FiniteGroupTable::cyclic(2),
            FiniteGroupTable::cyclic(3),
            FiniteGroupTable::direct_product(&FiniteGroupTable::cyclic(2), &FiniteGroupTable::cyclic(2)),
        ] {
            assert!(BarResolution::new(&f).verify(3));
        }
        let r = BarResolution::new(&FiniteGroupTable::cyclic(3));
        let x: Chain = [(vec![1, 2, 0], BigInt::one())].into_iter().collect();
        assert_eq!(r.face(1, &x).keys().next().unwrap(), &vec![1, 0]);
    }
}
