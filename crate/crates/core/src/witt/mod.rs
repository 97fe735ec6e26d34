//! The big Witt ring `W(R)` at finite truncation.
//!
//! A [`WittVector`] is a unit series; Witt addition is multiplication of
//! series, the Witt zero is `1` and the Witt one is `1 - t`. Multiplication
//! is determined by `(1 - a t)(1 - b t) = 1 - ab t` together with
//! functoriality, and is available through two independent engines.
//!
//! Frobenius `F_n` and exterior powers `lambda_n` read ghost components up
//! to `n * k` to produce component `k`, so on truncation `N` they land in
//! truncation `N / n` (rounded down). Verschiebung keeps the truncation.

pub mod universal;

use num_integer::Integer;

use crate::algebra::{Elem, Ring};
use crate::error::{Error, Result};
use crate::series::{binomial_power, GhostVector, UnitSeries};
use crate::symfn;

pub use universal::{UniversalFrobeniusTable, UniversalProductTable, MAX_UNIVERSAL_TRUNC};

/// Which algorithm computes a Witt product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MulEngine {
    /// Specialise the cached universal polynomials.
    Universal,
    /// Biadditive expansion in orbit coordinates.
    #[default]
    Orbit,
}

/// An element of `W(R)` modulo `t^(N+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WittVector(UnitSeries);

impl From<UnitSeries> for WittVector {
    fn from(s: UnitSeries) -> Self {
        WittVector(s)
    }
}

fn positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid(format!("{what} index must be positive")));
    }
    Ok(())
}

impl WittVector {
    pub fn new(series: UnitSeries) -> Self {
        WittVector(series)
    }

    pub fn from_ints(ring: Ring, coeffs: &[i64]) -> Self {
        WittVector(UnitSeries::from_ints(ring, coeffs))
    }

    /// The additive identity, the series `1`.
    pub fn zero(ring: Ring, trunc: usize) -> Self {
        WittVector(UnitSeries::one(ring, trunc))
    }

    /// The multiplicative identity `1 - t`.
    pub fn one(ring: Ring, trunc: usize) -> Self {
        let mut c = vec![ring.zero(); trunc];
        if trunc > 0 {
            c[0] = ring.from_int(-1);
        }
        WittVector(UnitSeries::new(ring, c).expect("constants belong to the ring"))
    }

    pub fn series(&self) -> &UnitSeries {
        &self.0
    }

    pub fn into_series(self) -> UnitSeries {
        self.0
    }

    pub fn ring(&self) -> &Ring {
        self.0.ring()
    }

    pub fn trunc(&self) -> usize {
        self.0.trunc()
    }

    pub fn ghost(&self) -> GhostVector {
        self.0.ghost()
    }

    pub fn truncate(&self, trunc: usize) -> Result<Self> {
        self.0.truncate(trunc).map(WittVector)
    }

    pub fn add(&self, other: &WittVector) -> Result<Self> {
        self.0.mul(&other.0).map(WittVector)
    }

    pub fn neg(&self) -> Self {
        WittVector(self.0.inv())
    }

    pub fn sub(&self, other: &WittVector) -> Result<Self> {
        self.add(&other.neg())
    }

    /// `n`-fold Witt sum (negative `n` negates).
    pub fn scale(&self, n: i64) -> Self {
        WittVector(self.0.pow(n))
    }

    /// Product with the default engine.
    pub fn mul(&self, other: &WittVector) -> Result<Self> {
        self.mul_with(other, MulEngine::default())
    }

    pub fn mul_with(&self, other: &WittVector, engine: MulEngine) -> Result<Self> {
        self.0.compatible(&other.0)?;
        match engine {
            MulEngine::Universal => UniversalProductTable::get(self.trunc())?
                .multiply(&self.0, &other.0)
                .map(WittVector),
            MulEngine::Orbit => Ok(self.mul_orbit(other)),
        }
    }

    // (1 - a t^m)(1 - b t^n) = (1 - a^(n/d) b^(m/d) t^(mn/d))^d, d = gcd(m, n).
    fn mul_orbit(&self, other: &WittVector) -> Self {
        let r = self.ring();
        let n = self.trunc();
        let a = self.0.to_orbit_coords();
        let b = other.0.to_orbit_coords();
        let mut acc = Accumulator::new(r, n);
        for i in 1..=n {
            let ai = a.get(i);
            if r.is_zero(ai) {
                continue;
            }
            for j in 1..=n {
                let bj = b.get(j);
                let d = i.gcd(&j);
                let l = i / d * j;
                if l > n || r.is_zero(bj) {
                    continue;
                }
                let c = r.mul(&r.pow(ai, (j / d) as u64), &r.pow(bj, (i / d) as u64));
                acc.factor(&c, l, d);
            }
        }
        acc.finish()
    }

    /// `F_n`, from truncation `N` to `N / n`, on the orbit-coordinate path
    /// `F_n(1 - b t^i) = (1 - b^(n/d) t^(i/d))^d`, `d = gcd(n, i)`.
    pub fn frobenius(&self, n: usize) -> Result<Self> {
        positive(n, "Frobenius")?;
        if n == 1 {
            return Ok(self.clone());
        }
        let r = self.ring();
        let target = self.trunc() / n;
        let b = self.0.to_orbit_coords();
        let mut acc = Accumulator::new(r, target);
        for i in 1..=self.trunc() {
            let d = n.gcd(&i);
            if i / d > target || r.is_zero(b.get(i)) {
                continue;
            }
            acc.factor(&r.pow(b.get(i), (n / d) as u64), i / d, d);
        }
        Ok(acc.finish())
    }

    /// `F_n` through the universal Frobenius polynomials.
    pub fn frobenius_universal(&self, n: usize) -> Result<Self> {
        positive(n, "Frobenius")?;
        UniversalFrobeniusTable::get(n, self.trunc() / n)?
            .apply(&self.0)
            .map(WittVector)
    }

    /// `V_n`: `p(t) -> p(t^n)`, truncation unchanged.
    pub fn verschiebung(&self, n: usize) -> Result<Self> {
        positive(n, "Verschiebung")?;
        self.0.substitute_power(n).map(WittVector)
    }

    /// Exterior power `lambda_n`, from truncation `N` to `N / n`, with the
    /// default variable budget.
    pub fn lambda(&self, n: usize) -> Result<Self> {
        self.lambda_with_budget(n, symfn::LAMBDA_VARIABLE_BUDGET)
    }

    pub fn lambda_with_budget(&self, n: usize, budget: usize) -> Result<Self> {
        positive(n, "exterior power")?;
        if n == 1 {
            return Ok(self.clone());
        }
        let target = self.trunc() / n;
        let universal = symfn::lambda_universal_with_budget(n, target, budget)?;
        let r = self.ring();
        let values = &self.0.coeffs()[..n * target];
        let coeffs = universal
            .iter()
            .map(|c| c.specialize(r, values))
            .collect::<Result<Vec<_>>>()?;
        UnitSeries::new(r.clone(), coeffs).map(WittVector)
    }

    /// Adams operation `psi_k` from the exterior-power structure of `W(R)`:
    /// the `k`-th ghost component, computed inside `W(R)`, of
    /// `sum_j (-1)^j lambda^j(u) s^j`. Lands in truncation `N / k`.
    pub fn adams(&self, k: usize) -> Result<Self> {
        self.adams_with_budget(k, symfn::LAMBDA_VARIABLE_BUDGET)
    }

    pub fn adams_with_budget(&self, k: usize, budget: usize) -> Result<Self> {
        positive(k, "Adams")?;
        let target = self.trunc() / k;
        let r = self.ring().clone();
        // a[j] = (-1)^j lambda^j(u) at truncation `target`.
        let mut a = vec![WittVector::one(r.clone(), target)];
        for j in 1..=k {
            let l = self.truncate(j * target)?.lambda_with_budget(j, budget)?;
            a.push(if j % 2 == 1 { l.neg() } else { l });
        }
        let mut gh: Vec<WittVector> = Vec::with_capacity(k);
        for m in 1..=k {
            let mut s = a[m].scale(m as i64);
            for i in 1..m {
                s = s.add(&gh[i - 1].mul(&a[m - i])?)?;
            }
            gh.push(s.neg());
        }
        Ok(gh.pop().expect("k >= 1"))
    }
}

/// Running product of factors `(1 - c t^l)^d` at a fixed truncation.
struct Accumulator<'a> {
    ring: &'a Ring,
    full: Vec<Elem>,
}

impl<'a> Accumulator<'a> {
    fn new(ring: &'a Ring, trunc: usize) -> Self {
        let mut full = vec![ring.zero(); trunc + 1];
        full[0] = ring.one();
        Accumulator { ring, full }
    }

    fn factor(&mut self, c: &Elem, l: usize, d: usize) {
        let r = self.ring;
        let n = self.full.len() - 1;
        for _ in 0..d {
            for k in (l..=n).rev() {
                let t = r.mul(c, &self.full[k - l]);
                self.full[k] = r.sub(&self.full[k], &t);
            }
        }
    }

    fn finish(mut self) -> WittVector {
        self.full.remove(0);
        WittVector(UnitSeries::from_parts(self.ring.clone(), self.full))
    }
}

/// A ring with a chosen lambda structure, for Adams operations on scalars.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LambdaStructure {
    /// `lambda(a) = (1 - t)^a` on a binomial ring.
    Binomial,
}

/// `psi_k(a)`: the `k`-th ghost component of the lambda series of `a`.
pub fn adams_from_lambda(
    k: usize,
    ring: &Ring,
    a: &Elem,
    structure: Option<LambdaStructure>,
) -> Result<Elem> {
    positive(k, "Adams")?;
    match structure {
        Some(LambdaStructure::Binomial) if ring.binomial() => {
            let series = binomial_power(ring, 1, a, k)?;
            Ok(series.ghost().get(k).clone())
        }
        _ => Err(Error::NoLambdaStructure(ring.to_string())),
    }
}

/// `psi_k(a)` for the built-in structure of `ring`, if it has one.
pub fn adams(k: usize, ring: &Ring, a: &Elem) -> Result<Elem> {
    let structure = ring.binomial().then_some(LambdaStructure::Binomial);
    adams_from_lambda(k, ring, a, structure)
}
