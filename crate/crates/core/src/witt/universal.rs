//! Universal polynomials for Witt multiplication and Frobenius.
//!
//! The product of the generic series `1 + sum a_i t^i` and `1 + sum b_i t^i`
//! is computed once over `Z[a_1..a_N, b_1..b_N]` through ghost components
//! (pointwise product, then exact inversion of the ghost recursion) and
//! afterwards specialised at concrete coefficients in any ring. The same is
//! done for Frobenius over `Z[a_1..a_(nN)]`.
//!
//! Tables are cached per truncation. Construction happens at most once per
//! key even under concurrent callers; readers share an `Arc`.

use std::sync::Arc;

use crate::algebra::{Elem, Poly, Ring};
use crate::cache::Cache;
use crate::error::{Error, Result};
use crate::series::{GhostVector, UnitSeries};

/// Largest truncation (for Frobenius: `n * N`) the universal engine accepts.
pub const MAX_UNIVERSAL_TRUNC: usize = 24;

fn integrality(e: Error) -> Error {
    match e {
        Error::NonIntegral { value, divisor, .. } => Error::InternalIntegrality(format!(
            "universal polynomial {value} not divisible by {divisor}"
        )),
        other => other,
    }
}

/// `1 + x_(offset+1) t + ... + x_(offset+len) t^len` over `ring`.
fn generic_series(ring: &Ring, offset: usize, len: usize) -> UnitSeries {
    let coeffs = (0..len).map(|i| ring.var(offset + i)).collect();
    UnitSeries::new(ring.clone(), coeffs).expect("variables belong to the ring")
}

fn polys(s: &UnitSeries) -> Vec<Poly> {
    s.coeffs()
        .iter()
        .map(|c| match c {
            Elem::Poly(p) => p.clone(),
            _ => unreachable!("universal series live in a polynomial ring"),
        })
        .collect()
}

/// Coefficient `k` of the Witt product of generic series, as a polynomial
/// in `a_1..a_k, b_1..b_k`.
#[derive(Debug)]
pub struct UniversalProductTable {
    trunc: usize,
    ring: Ring,
    coeffs: Vec<Poly>,
}

impl UniversalProductTable {
    /// Builds the table without consulting the cache.
    pub fn build(trunc: usize) -> Result<Self> {
        if trunc > MAX_UNIVERSAL_TRUNC {
            return Err(Error::BudgetExceeded(format!(
                "universal product table at truncation {trunc} (limit {MAX_UNIVERSAL_TRUNC})"
            )));
        }
        let names = (1..=trunc)
            .map(|i| format!("a{i}"))
            .chain((1..=trunc).map(|i| format!("b{i}")));
        let ring = Ring::multipoly(names);
        let alpha = generic_series(&ring, 0, trunc);
        let beta = generic_series(&ring, trunc, trunc);
        let gh = alpha.ghost().mul(&beta.ghost())?;
        let product = gh.unghost().map_err(integrality)?;
        let table = UniversalProductTable {
            trunc,
            coeffs: polys(&product),
            ring,
        };
        table.self_check()?;
        Ok(table)
    }

    /// Cached table for `trunc`.
    pub fn get(trunc: usize) -> Result<Arc<Self>> {
        static CACHE: Cache<usize, UniversalProductTable> = Cache::new();
        CACHE.get_or_build(trunc, || Self::build(trunc))
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    /// The polynomial ring `Z[a_1..a_N, b_1..b_N]`.
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Polynomial for the coefficient of `t^k`, `1 <= k <= N`.
    pub fn coefficient(&self, k: usize) -> &Poly {
        &self.coeffs[k - 1]
    }

    /// Product of two series of this truncation over any ring.
    pub fn multiply(&self, u: &UnitSeries, v: &UnitSeries) -> Result<UnitSeries> {
        u.compatible(v)?;
        if u.trunc() != self.trunc {
            return Err(Error::TruncationMismatch(self.trunc, u.trunc()));
        }
        let r = u.ring();
        let values: Vec<Elem> = u.coeffs().iter().chain(v.coeffs()).cloned().collect();
        let coeffs = self.coeffs.iter().map(|p| r.eval_poly(p, &values)).collect();
        UnitSeries::new(r.clone(), coeffs)
    }

    // Specialising at integer series must agree with the ghost-pointwise
    // product computed directly over Z.
    fn self_check(&self) -> Result<()> {
        let n = self.trunc;
        let samples: [(Vec<i64>, Vec<i64>); 2] = [
            ((1..=n as i64).collect(), (1..=n as i64).map(|i| 2 - i).collect()),
            (
                (0..n as i64).map(|i| (i * 7 % 5) - 2).collect(),
                (0..n as i64).map(|i| (i * 3 % 4) - 1).collect(),
            ),
        ];
        for (a, b) in samples {
            let u = UnitSeries::from_ints(Ring::Integers, &a);
            let v = UnitSeries::from_ints(Ring::Integers, &b);
            let direct = u.ghost().mul(&v.ghost())?.unghost().map_err(integrality)?;
            if self.multiply(&u, &v)? != direct {
                return Err(Error::InternalIntegrality(format!(
                    "universal product table at truncation {n} failed its self-check"
                )));
            }
        }
        Ok(())
    }
}

/// Frobenius `F_n` on generic series: coefficient `k <= N` of `F_n(alpha)`
/// as a polynomial in `a_1..a_(nN)`.
#[derive(Debug)]
pub struct UniversalFrobeniusTable {
    n: usize,
    trunc: usize,
    coeffs: Vec<Poly>,
}

impl UniversalFrobeniusTable {
    pub fn build(n: usize, trunc: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("Frobenius index must be positive"));
        }
        let source = n * trunc;
        if source > MAX_UNIVERSAL_TRUNC {
            return Err(Error::BudgetExceeded(format!(
                "universal Frobenius needs truncation {source} (limit {MAX_UNIVERSAL_TRUNC})"
            )));
        }
        let ring = Ring::multipoly_indexed("a", source);
        let gh = generic_series(&ring, 0, source).ghost();
        let picked: Vec<Elem> = (1..=trunc).map(|k| gh.get(k * n).clone()).collect();
        let image = GhostVector::new(ring, picked)?.unghost().map_err(integrality)?;
        Ok(UniversalFrobeniusTable {
            n,
            trunc,
            coeffs: polys(&image),
        })
    }

    pub fn get(n: usize, trunc: usize) -> Result<Arc<Self>> {
        static CACHE: Cache<(usize, usize), UniversalFrobeniusTable> = Cache::new();
        CACHE.get_or_build((n, trunc), || Self::build(n, trunc))
    }

    /// `F_n(u)` for `u` of truncation at least `n * N`.
    pub fn apply(&self, u: &UnitSeries) -> Result<UnitSeries> {
        let needed = self.n * self.trunc;
        if u.trunc() < needed {
            return Err(Error::TruncationMismatch(u.trunc(), needed));
        }
        let r = u.ring();
        let values = &u.coeffs()[..needed];
        let coeffs = self.coeffs.iter().map(|p| r.eval_poly(p, values)).collect();
        UnitSeries::new(r.clone(), coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Monomial;
    use num_bigint::BigInt;

    #[test]
    fn low_degree_product_polynomials() {
        let t = UniversalProductTable::build(2).unwrap();
        // Vars: a1 a2 b1 b2. Coefficient 1 is -a1 b1.
        let m = |e: [u16; 4]| Monomial::from_exponents(e.to_vec());
        let c1 = t.coefficient(1);
        assert_eq!(c1.num_terms(), 1);
        assert_eq!(c1.coeff(&m([1, 0, 1, 0])), BigInt::from(-1));
        // Coefficient 2: a1^2 b2 + a2 b1^2 - 2 a2 b2.
        let c2 = t.coefficient(2);
        assert_eq!(c2.num_terms(), 3);
        assert_eq!(c2.coeff(&m([2, 0, 0, 1])), BigInt::from(1));
        assert_eq!(c2.coeff(&m([0, 1, 2, 0])), BigInt::from(1));
        assert_eq!(c2.coeff(&m([0, 1, 0, 1])), BigInt::from(-2));
    }

    #[test]
    fn cache_returns_shared_table() {
        let a = UniversalProductTable::get(3).unwrap();
        let b = UniversalProductTable::get(3).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }

    #[test]
    fn concurrent_construction_is_single() {
        let handles: Vec<_> = (0..4)
            .map(|_| std::thread::spawn(|| UniversalProductTable::get(5).unwrap()))
            .collect();
        let tables: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(tables.windows(2).all(|w| Arc::ptr_eq(&w[0], &w[1])));
    }

    #[test]
    fn budget_guard() {
        assert!(matches!(
            UniversalProductTable::build(MAX_UNIVERSAL_TRUNC + 1),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(matches!(
            UniversalFrobeniusTable::build(5, 5),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn frobenius_polynomials() {
        // F_2 at truncation 1: coefficient is 2 a2 - a1^2.
        let t = UniversalFrobeniusTable::build(2, 1).unwrap();
        let m = |e: [u16; 2]| Monomial::from_exponents(e.to_vec());
        assert_eq!(t.coeffs[0].coeff(&m([2, 0])), BigInt::from(-1));
        assert_eq!(t.coeffs[0].coeff(&m([0, 1])), BigInt::from(2));
    }
}
