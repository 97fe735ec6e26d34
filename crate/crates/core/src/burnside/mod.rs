//! The Burnside ring of the infinite cyclic group `C`.
//!
//! Finite `C`-sets are disjoint unions of orbits `C/nC`; a virtual set
//! assigns an integer multiplicity to each orbit size. The ring structure
//! comes from disjoint union and cartesian product, and the number of
//! `kC`-fixed points gives the ghost coordinates. [`concrete`] simulates
//! actual permutations and serves as an oracle for the closed formulas.

pub mod concrete;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{Elem, Ring};
use crate::error::{Error, Result};
use crate::series::{binomial_power, UnitSeries};
use crate::witt::WittVector;

pub use concrete::{ConcreteCyclicSet, DEFAULT_SIZE_BOUND};

/// A finitely supported multiplicity `m_n` for each orbit `C/nC`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VirtualCyclicSet {
    orbits: BTreeMap<u64, BigInt>,
}

/// The Möbius function.
pub fn mobius(mut n: u64) -> i64 {
    assert!(n >= 1);
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn divisors(n: u64) -> impl Iterator<Item = u64> {
    (1..=n).filter(move |d| n.is_multiple_of(*d))
}

impl VirtualCyclicSet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The single orbit `C/nC`.
    pub fn orbit(n: u64) -> Self {
        Self::from_pairs([(n, 1)])
    }

    pub fn from_pairs<M: Into<BigInt>>(pairs: impl IntoIterator<Item = (u64, M)>) -> Self {
        let mut s = Self::empty();
        for (n, m) in pairs {
            s.add_orbits(n, m.into());
        }
        s
    }

    fn add_orbits(&mut self, n: u64, m: BigInt) {
        assert!(n >= 1, "orbit sizes are positive");
        let entry = self.orbits.entry(n).or_default();
        *entry += m;
        if entry.is_zero() {
            self.orbits.remove(&n);
        }
    }

    pub fn multiplicity(&self, n: u64) -> BigInt {
        self.orbits.get(&n).cloned().unwrap_or_default()
    }

    /// Nonzero multiplicities in increasing orbit size.
    pub fn orbits(&self) -> impl Iterator<Item = (u64, &BigInt)> + '_ {
        self.orbits.iter().map(|(&n, m)| (n, m))
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    /// All multiplicities nonnegative.
    pub fn is_effective(&self) -> bool {
        self.orbits.values().all(|m| !m.is_negative())
    }

    /// Number of points, counted with sign.
    pub fn cardinality(&self) -> BigInt {
        self.orbits.iter().map(|(&n, m)| m * n).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for (&n, m) in &other.orbits {
            s.add_orbits(n, m.clone());
        }
        s
    }

    pub fn neg(&self) -> Self {
        VirtualCyclicSet {
            orbits: self.orbits.iter().map(|(&n, m)| (n, -m)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Cartesian product: `C/m x C/n = gcd(m, n) C/lcm(m, n)`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut s = Self::empty();
        for (&m, a) in &self.orbits {
            for (&n, b) in &other.orbits {
                s.add_orbits(m.lcm(&n), a * b * m.gcd(&n));
            }
        }
        s
    }

    /// Restriction to `nC`: `C/m -> gcd(n, m) C/(m / gcd(n, m))`.
    pub fn frobenius(&self, n: u64) -> Result<Self> {
        check_index(n)?;
        let mut s = Self::empty();
        for (&m, a) in &self.orbits {
            let g = n.gcd(&m);
            s.add_orbits(m / g, a * g);
        }
        Ok(s)
    }

    /// Induction from `nC`: `C/m -> C/(nm)`.
    pub fn verschiebung(&self, n: u64) -> Result<Self> {
        check_index(n)?;
        let mut s = Self::empty();
        for (&m, a) in &self.orbits {
            let size = m
                .checked_mul(n)
                .ok_or_else(|| Error::invalid("orbit size overflows"))?;
            s.add_orbits(size, a.clone());
        }
        Ok(s)
    }

    /// Number of `kC`-fixed points: `sum_{d | k} d m_d`.
    pub fn fixed_points(&self, k: u64) -> BigInt {
        assert!(k >= 1, "fixed points are indexed from 1");
        self.orbits
            .iter()
            .filter(|(&d, _)| k.is_multiple_of(d))
            .map(|(&d, m)| m * d)
            .sum()
    }

    /// Fixed-point counts for `k = 1..N`.
    pub fn ghost(&self, n: usize) -> Vec<BigInt> {
        (1..=n as u64).map(|k| self.fixed_points(k)).collect()
    }

    /// Recovers `m_1..m_N` from fixed-point counts `g_1..g_N` by Möbius
    /// inversion, `m_n = (1/n) sum_{d | n} mu(n/d) g_d`.
    pub fn from_fixed_points(g: &[BigInt]) -> Result<Self> {
        let mut s = Self::empty();
        for n in 1..=g.len() as u64 {
            let sum: BigInt = divisors(n)
                .map(|d| &g[d as usize - 1] * mobius(n / d))
                .sum();
            let (q, r) = sum.div_rem(&BigInt::from(n));
            if !r.is_zero() {
                return Err(Error::NonIntegral {
                    value: sum.to_string(),
                    divisor: n.to_string(),
                    ring: Ring::Integers.to_string(),
                });
            }
            s.add_orbits(n, q);
        }
        Ok(s)
    }

    /// The image `prod_n (1 - t^n)^(m_n)` in `W(Z)` at truncation `N`.
    pub fn embed_to_witt(&self, trunc: usize) -> WittVector {
        let r = Ring::Integers;
        let mut acc = UnitSeries::one(r.clone(), trunc);
        for (&n, m) in self.orbits.range(..=trunc as u64) {
            let factor = binomial_power(&r, n as usize, &Elem::Int(m.clone()), trunc)
                .expect("Z is a binomial ring");
            acc = acc.mul(&factor).expect("same ring and truncation");
        }
        WittVector::new(acc)
    }
}

fn check_index(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("operator index must be positive"));
    }
    Ok(())
}

impl fmt::Display for VirtualCyclicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orbits.is_empty() {
            return write!(f, "0");
        }
        for (i, (n, m)) in self.orbits.iter().enumerate() {
            let sign = if m.is_negative() { "-" } else { "+" };
            match (i, m.is_negative()) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                _ => write!(f, " {sign} ")?,
            }
            let a = m.abs();
            if a.is_one() {
                write!(f, "C/{n}")?;
            } else {
                write!(f, "{a}*C/{n}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(p: &[(u64, i64)]) -> VirtualCyclicSet {
        VirtualCyclicSet::from_pairs(p.iter().copied())
    }

    fn big(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn mobius_values() {
        let mu: Vec<i64> = (1..=12).map(mobius).collect();
        assert_eq!(mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn fixed_point_examples() {
        assert_eq!(v(&[(3, 1)]).fixed_points(6), BigInt::from(3));
        assert_eq!(v(&[(3, 1)]).fixed_points(2), BigInt::from(0));
        assert_eq!(v(&[(1, 1), (2, 1)]).fixed_points(2), BigInt::from(3));
    }

    #[test]
    fn inversion_examples() {
        let g = big(&[1, 3, 1, 3, 1, 3]);
        assert_eq!(VirtualCyclicSet::from_fixed_points(&g).unwrap(), v(&[(1, 1), (2, 1)]));
        assert!(VirtualCyclicSet::from_fixed_points(&big(&[0; 5])).unwrap().is_empty());
        assert_eq!(
            VirtualCyclicSet::from_fixed_points(&big(&[1, 0, 0])),
            Err(Error::NonIntegral {
                value: "-1".into(),
                divisor: "2".into(),
                ring: "Z".into()
            })
        );
    }

    #[test]
    fn product_and_operators() {
        assert_eq!(v(&[(2, 1)]).mul(&v(&[(2, 1)])), v(&[(2, 2)]));
        assert_eq!(v(&[(2, 1)]).mul(&v(&[(3, 1)])), v(&[(6, 1)]));
        let x = v(&[(4, 2), (6, -1)]);
        assert_eq!(VirtualCyclicSet::orbit(1).mul(&x), x);
        assert_eq!(v(&[(6, 1)]).frobenius(2).unwrap(), v(&[(3, 2)]));
        assert_eq!(v(&[(3, 1)]).verschiebung(2).unwrap(), v(&[(6, 1)]));
        assert_eq!(x.frobenius(1).unwrap(), x);
        assert_eq!(x.verschiebung(1).unwrap(), x);
    }

    #[test]
    fn embedding_examples() {
        let z = |c: &[i64]| WittVector::from_ints(Ring::Integers, c);
        assert_eq!(v(&[(2, 1)]).embed_to_witt(3), z(&[0, -1, 0]));
        assert_eq!(VirtualCyclicSet::empty().embed_to_witt(3), z(&[0, 0, 0]));
        assert_eq!(v(&[(1, 1), (2, 1)]).embed_to_witt(4), z(&[-1, -1, 1, 0]));
    }

    #[test]
    fn display() {
        assert_eq!(v(&[(2, 1), (3, -2)]).to_string(), "C/2 - 2*C/3");
        assert_eq!(VirtualCyclicSet::empty().to_string(), "0");
    }

    fn virtual_set() -> impl Strategy<Value = VirtualCyclicSet> {
        prop::collection::vec((1u64..=8, -3i64..=3), 0..5)
            .prop_map(VirtualCyclicSet::from_pairs)
    }

    proptest! {
        #[test]
        fn fixed_points_are_a_ring_map(x in virtual_set(), y in virtual_set()) {
            for k in 1..=12 {
                prop_assert_eq!(x.mul(&y).fixed_points(k), x.fixed_points(k) * y.fixed_points(k));
                prop_assert_eq!(x.add(&y).fixed_points(k), x.fixed_points(k) + y.fixed_points(k));
            }
        }

        #[test]
        fn ghost_laws(x in virtual_set(), n in 1u64..=4) {
            let f = x.frobenius(n).unwrap();
            let vs = x.verschiebung(n).unwrap();
            for k in 1..=12u64 {
                prop_assert_eq!(f.fixed_points(k), x.fixed_points(n * k));
                let expect = if k % n == 0 { x.fixed_points(k / n) * n } else { BigInt::zero() };
                prop_assert_eq!(vs.fixed_points(k), expect);
            }
        }

        #[test]
        fn fixed_points_determine_the_set(x in virtual_set()) {
            let g = x.ghost(8);
            prop_assert_eq!(VirtualCyclicSet::from_fixed_points(&g).unwrap(), x);
        }

        #[test]
        fn embedding_is_compatible(x in virtual_set(), y in virtual_set(), n in 1usize..=4) {
            let t = 12;
            let (ex, ey) = (x.embed_to_witt(t), y.embed_to_witt(t));
            let gh = ex.ghost();
            for k in 1..=t {
                prop_assert_eq!(gh.get(k), &Elem::Int(x.fixed_points(k as u64)));
            }
            prop_assert_eq!(x.mul(&y).embed_to_witt(t), ex.mul(&ey).unwrap());
            prop_assert_eq!(
                x.frobenius(n as u64).unwrap().embed_to_witt(t / n),
                ex.frobenius(n).unwrap()
            );
            prop_assert_eq!(
                x.verschiebung(n as u64).unwrap().embed_to_witt(t),
                ex.verschiebung(n).unwrap()
            );
        }

        #[test]
        fn frobenius_reciprocity(x in virtual_set(), y in virtual_set(), m in 1u64..=4) {
            let lhs = x.mul(&y.frobenius(m).unwrap()).verschiebung(m).unwrap();
            let rhs = x.verschiebung(m).unwrap().mul(&y);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
