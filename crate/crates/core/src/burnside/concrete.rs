//! Finite `C`-sets as explicit permutations.

use num_bigint::BigInt;

use super::VirtualCyclicSet;
use crate::error::{Error, Result};

/// Default cap on the number of points of a simulated set.
pub const DEFAULT_SIZE_BOUND: usize = 1 << 16;

/// A finite set with the generator of `C` acting as a permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcreteCyclicSet {
    perm: Vec<usize>,
}

fn bounded(size: usize, bound: usize) -> Result<()> {
    if size > bound {
        return Err(Error::SizeBound { size, bound });
    }
    Ok(())
}

impl ConcreteCyclicSet {
    /// The disjoint union of `Z/m` with `x -> x + 1`, one per listed size.
    pub fn from_orbit_sizes(sizes: &[usize], bound: usize) -> Result<Self> {
        let total = sizes.iter().try_fold(0usize, |a, &s| a.checked_add(s));
        let total = total.unwrap_or(usize::MAX);
        bounded(total, bound)?;
        let mut perm = Vec::with_capacity(total);
        for &m in sizes {
            if m == 0 {
                return Err(Error::invalid("orbit sizes are positive"));
            }
            let base = perm.len();
            perm.extend((0..m).map(|i| base + (i + 1) % m));
        }
        Ok(ConcreteCyclicSet { perm })
    }

    /// An effective virtual set realised on points.
    pub fn realize(x: &VirtualCyclicSet, bound: usize) -> Result<Self> {
        let mut sizes = Vec::new();
        for (n, m) in x.orbits() {
            let m = usize::try_from(m).map_err(|_| Error::invalid("set is not effective"))?;
            bounded(m.saturating_mul(n as usize), bound)?;
            sizes.extend(std::iter::repeat_n(n as usize, m));
        }
        Self::from_orbit_sizes(&sizes, bound)
    }

    pub fn size(&self) -> usize {
        self.perm.len()
    }

    /// Image of point `x` under the generator.
    pub fn act(&self, x: usize) -> usize {
        self.perm[x]
    }

    /// Orbit sizes, collected into a virtual set.
    pub fn orbit_decompose(&self) -> VirtualCyclicSet {
        let mut seen = vec![false; self.size()];
        let mut counts = std::collections::BTreeMap::new();
        for start in 0..self.size() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.perm[x];
                len += 1;
            }
            *counts.entry(len).or_insert(0u64) += 1;
        }
        VirtualCyclicSet::from_pairs(counts.into_iter().map(|(n, m)| (n, BigInt::from(m))))
    }

    /// Points fixed by the `k`-th power of the generator.
    pub fn fixed_points(&self, k: u64) -> usize {
        (0..self.size())
            .filter(|&x| {
                let mut y = x;
                for _ in 0..k {
                    y = self.perm[y];
                }
                y == x
            })
            .count()
    }

    /// Cartesian product with the diagonal action.
    pub fn product(&self, other: &Self, bound: usize) -> Result<Self> {
        let size = self.size().saturating_mul(other.size());
        bounded(size, bound)?;
        let w = other.size();
        let perm = (0..size)
            .map(|p| self.perm[p / w] * w + other.perm[p % w])
            .collect();
        Ok(ConcreteCyclicSet { perm })
    }

    /// Restriction to the subgroup `nC`, whose generator acts as the
    /// `n`-th power.
    pub fn restrict(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("subgroup index must be positive"));
        }
        let perm = (0..self.size())
            .map(|x| (0..n).fold(x, |y, _| self.perm[y]))
            .collect();
        Ok(ConcreteCyclicSet { perm })
    }

    /// Induction from `nC`, with `self` a set for the generator of `nC`:
    /// points `(i, x)` for `0 <= i < n`, with `(i, x) -> (i + 1, x)` and
    /// `(n - 1, x) -> (0, g x)`.
    pub fn induce(&self, n: usize, bound: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("subgroup index must be positive"));
        }
        let w = self.size();
        let size = w.saturating_mul(n);
        bounded(size, bound)?;
        let perm = (0..size)
            .map(|p| {
                let (i, x) = (p / w, p % w);
                if i + 1 < n {
                    (i + 1) * w + x
                } else {
                    self.perm[x]
                }
            })
            .collect();
        Ok(ConcreteCyclicSet { perm })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const B: usize = DEFAULT_SIZE_BOUND;

    fn set(sizes: &[usize]) -> ConcreteCyclicSet {
        ConcreteCyclicSet::from_orbit_sizes(sizes, B).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(set(&[4]).orbit_decompose(), VirtualCyclicSet::orbit(4));
        let p = set(&[2]).product(&set(&[3]), B).unwrap();
        assert_eq!(p.orbit_decompose(), VirtualCyclicSet::orbit(6));
        assert_eq!(set(&[3]).fixed_points(3), 3);
        assert_eq!(set(&[1, 2]).fixed_points(2), 3);
        let sq = set(&[2]).product(&set(&[2]), B).unwrap();
        assert_eq!(sq.orbit_decompose(), VirtualCyclicSet::from_pairs([(2, 2)]));
        assert_eq!(set(&[6]).restrict(2).unwrap().orbit_decompose(), VirtualCyclicSet::from_pairs([(3, 2)]));
        assert_eq!(set(&[3]).induce(2, B).unwrap().orbit_decompose(), VirtualCyclicSet::orbit(6));
    }

    #[test]
    fn size_bound() {
        assert_eq!(
            ConcreteCyclicSet::from_orbit_sizes(&[5, 6], 10),
            Err(Error::SizeBound { size: 11, bound: 10 })
        );
        assert!(matches!(set(&[8]).product(&set(&[8]), 63), Err(Error::SizeBound { .. })));
        assert!(matches!(set(&[8]).induce(8, 63), Err(Error::SizeBound { .. })));
    }

    fn sizes() -> impl Strategy<Value = Vec<usize>> {
        prop::collection::vec(1usize..=8, 0..5)
    }

    proptest! {
        #[test]
        fn formulas_match_simulation(a in sizes(), b in sizes(), n in 1usize..=4) {
            let (x, y) = (set(&a), set(&b));
            let (vx, vy) = (x.orbit_decompose(), y.orbit_decompose());
            prop_assert_eq!(ConcreteCyclicSet::realize(&vx, B).unwrap().orbit_decompose(), vx.clone());
            prop_assert_eq!(x.product(&y, B).unwrap().orbit_decompose(), vx.mul(&vy));
            prop_assert_eq!(x.restrict(n).unwrap().orbit_decompose(), vx.frobenius(n as u64).unwrap());
            prop_assert_eq!(x.induce(n, B).unwrap().orbit_decompose(), vx.verschiebung(n as u64).unwrap());
            for k in 1..=12u64 {
                prop_assert_eq!(BigInt::from(x.fixed_points(k)), vx.fixed_points(k));
            }
        }
    }
}
