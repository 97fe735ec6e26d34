//! Truncated unit power series and their coordinate systems.
//!
//! A [`UnitSeries`] of truncation `N` stands for the class of
//! `1 + a_1 t + ... + a_N t^N` modulo `t^(N+1)`. Every operation here is
//! exact at that truncation. Besides the coefficient coordinates there are
//! ghost coordinates (`-t d/dt log`), orbit coordinates `prod (1 - b_i t^i)`
//! and, over binomial rings, binomial coordinates `prod (1 - t^i)^(b_i)`.
//!
//! Truncation `0` is allowed and denotes the trivial series `1`; it arises
//! as the target of Frobenius operators with `n > N`.

use crate::algebra::{Elem, Ring};
use crate::error::{Error, Result};
use num_bigint::BigInt;

/// `1 + a_1 t + ... + a_N t^N` modulo `t^(N+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitSeries {
    ring: Ring,
    coeffs: Vec<Elem>,
}

/// Ghost components `gh_1..gh_N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GhostVector {
    ring: Ring,
    entries: Vec<Elem>,
}

/// Orbit coordinates: `b_1..b_N` with the series `prod (1 - b_i t^i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrbitCoords {
    ring: Ring,
    entries: Vec<Elem>,
}

/// Binomial coordinates: `b_1..b_N` with the series `prod (1 - t^i)^(b_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinomialCoords {
    ring: Ring,
    entries: Vec<Elem>,
}

fn check_all(ring: &Ring, xs: &[Elem]) -> Result<()> {
    xs.iter().try_for_each(|x| ring.check(x))
}

impl UnitSeries {
    pub fn new(ring: Ring, coeffs: Vec<Elem>) -> Result<Self> {
        check_all(&ring, &coeffs)?;
        Ok(UnitSeries { ring, coeffs })
    }

    pub(crate) fn from_parts(ring: Ring, coeffs: Vec<Elem>) -> Self {
        debug_assert!(coeffs.iter().all(|c| ring.contains(c)));
        UnitSeries { ring, coeffs }
    }

    /// The series `1`.
    pub fn one(ring: Ring, trunc: usize) -> Self {
        let coeffs = vec![ring.zero(); trunc];
        UnitSeries { ring, coeffs }
    }

    pub fn from_ints(ring: Ring, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| ring.from_int(c)).collect();
        UnitSeries { ring, coeffs }
    }

    /// The polynomial `1 + a_1 t + ... + a_d t^d` reduced to truncation `trunc`.
    pub fn from_poly(ring: Ring, coeffs: &[Elem], trunc: usize) -> Result<Self> {
        check_all(&ring, coeffs)?;
        let mut c: Vec<Elem> = coeffs.iter().take(trunc).cloned().collect();
        c.resize(trunc, ring.zero());
        Ok(UnitSeries { ring, coeffs: c })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len()
    }

    /// `a_1..a_N`.
    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of `t^k`; `a_0 = 1`.
    pub fn coeff(&self, k: usize) -> Elem {
        match k {
            0 => self.ring.one(),
            k if k <= self.trunc() => self.coeffs[k - 1].clone(),
            _ => self.ring.zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.iter().all(|c| self.ring.is_zero(c))
    }

    /// Reduction to a smaller truncation.
    pub fn truncate(&self, trunc: usize) -> Result<Self> {
        if trunc > self.trunc() {
            return Err(Error::TruncationMismatch(self.trunc(), trunc));
        }
        Ok(UnitSeries {
            ring: self.ring.clone(),
            coeffs: self.coeffs[..trunc].to_vec(),
        })
    }

    pub(crate) fn full(&self) -> Vec<Elem> {
        let mut v = Vec::with_capacity(self.trunc() + 1);
        v.push(self.ring.one());
        v.extend(self.coeffs.iter().cloned());
        v
    }

    fn from_full(ring: Ring, mut full: Vec<Elem>) -> Self {
        full.remove(0);
        UnitSeries { ring, coeffs: full }
    }

    pub(crate) fn compatible(&self, other: &UnitSeries) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(
                self.ring.to_string(),
                other.ring.to_string(),
            ));
        }
        if self.trunc() != other.trunc() {
            return Err(Error::TruncationMismatch(self.trunc(), other.trunc()));
        }
        Ok(())
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &UnitSeries) -> Result<UnitSeries> {
        self.compatible(other)?;
        let r = &self.ring;
        let (a, b) = (self.full(), other.full());
        let n = self.trunc();
        let mut out = vec![r.zero(); n + 1];
        for (i, ai) in a.iter().enumerate() {
            if r.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.iter().enumerate().take(n + 1 - i) {
                out[i + j] = r.add(&out[i + j], &r.mul(ai, bj));
            }
        }
        Ok(UnitSeries::from_full(r.clone(), out))
    }

    /// Multiplicative inverse modulo `t^(N+1)`.
    pub fn inv(&self) -> UnitSeries {
        let r = &self.ring;
        let a = self.full();
        let n = self.trunc();
        let mut b = vec![r.one()];
        for k in 1..=n {
            let mut s = r.zero();
            for i in 1..=k {
                s = r.add(&s, &r.mul(&a[i], &b[k - i]));
            }
            b.push(r.neg(&s));
        }
        UnitSeries::from_full(r.clone(), b)
    }

    /// `p^e` for an integer exponent, using the inverse for `e < 0`.
    pub fn pow(&self, e: i64) -> UnitSeries {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = UnitSeries::one(self.ring.clone(), self.trunc());
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq).expect("same ring and truncation");
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq).expect("same ring and truncation");
            }
        }
        acc
    }

    /// `p(t^n)` modulo `t^(N+1)`.
    pub fn substitute_power(&self, n: usize) -> Result<UnitSeries> {
        if n == 0 {
            return Err(Error::invalid("substitution exponent must be positive"));
        }
        let r = &self.ring;
        let mut coeffs = vec![r.zero(); self.trunc()];
        for k in 1..=self.trunc() / n {
            coeffs[k * n - 1] = self.coeffs[k - 1].clone();
        }
        Ok(UnitSeries::from_parts(r.clone(), coeffs))
    }

    /// Ghost components from the division-free recursion
    /// `k a_k + gh_1 a_(k-1) + ... + gh_(k-1) a_1 + gh_k = 0`.
    pub fn ghost(&self) -> GhostVector {
        let r = &self.ring;
        let a = self.full();
        let n = self.trunc();
        let mut gh: Vec<Elem> = Vec::with_capacity(n);
        for k in 1..=n {
            let mut s = r.mul_int(&a[k], &BigInt::from(k));
            for i in 1..k {
                s = r.add(&s, &r.mul(&gh[i - 1], &a[k - i]));
            }
            gh.push(r.neg(&s));
        }
        GhostVector {
            ring: r.clone(),
            entries: gh,
        }
    }

    /// Orbit coordinates by successive extraction: `b_i` is minus the
    /// current coefficient of `t^i`, after which the factor `1 - b_i t^i`
    /// is divided out.
    pub fn to_orbit_coords(&self) -> OrbitCoords {
        let r = &self.ring;
        let n = self.trunc();
        let mut cur = self.full();
        let mut b = Vec::with_capacity(n);
        for i in 1..=n {
            let bi = r.neg(&cur[i]);
            if !r.is_zero(&bi) {
                // cur <- cur / (1 - bi t^i), i.e. new[k] = cur[k] + bi new[k-i].
                for k in i..=n {
                    let t = r.mul(&bi, &cur[k - i]);
                    cur[k] = r.add(&cur[k], &t);
                }
            }
            debug_assert!(r.is_zero(&cur[i]));
            b.push(bi);
        }
        OrbitCoords {
            ring: r.clone(),
            entries: b,
        }
    }

    /// Binomial coordinates; requires a binomial ring.
    pub fn to_binomial_coords(&self) -> Result<BinomialCoords> {
        let r = &self.ring;
        if !r.binomial() {
            return Err(Error::NotBinomialRing(r.to_string()));
        }
        let n = self.trunc();
        let mut cur = self.clone();
        let mut b = Vec::with_capacity(n);
        for i in 1..=n {
            let bi = r.neg(&cur.coeff(i));
            if !r.is_zero(&bi) {
                let factor = binomial_power(r, i, &r.neg(&bi), n)?;
                cur = cur.mul(&factor)?;
            }
            debug_assert!(r.is_zero(&cur.coeff(i)));
            b.push(bi);
        }
        Ok(BinomialCoords {
            ring: r.clone(),
            entries: b,
        })
    }
}

/// `(1 - t^i)^a = sum_k binom(a, k) (-1)^k t^(ik)` truncated at `t^N`.
pub fn binomial_power(ring: &Ring, i: usize, a: &Elem, trunc: usize) -> Result<UnitSeries> {
    if !ring.binomial() {
        return Err(Error::NotBinomialRing(ring.to_string()));
    }
    if i == 0 {
        return Err(Error::invalid("binomial power index must be positive"));
    }
    ring.check(a)?;
    let mut coeffs = vec![ring.zero(); trunc];
    for k in 1..=trunc / i {
        let c = ring.binomial_coeff(a, k as u64)?;
        coeffs[i * k - 1] = if k % 2 == 1 { ring.neg(&c) } else { c };
    }
    Ok(UnitSeries::from_parts(ring.clone(), coeffs))
}

macro_rules! coordinate_vector {
    ($ty:ident) => {
        impl $ty {
            pub fn new(ring: Ring, entries: Vec<Elem>) -> Result<Self> {
                check_all(&ring, &entries)?;
                Ok($ty { ring, entries })
            }

            pub fn from_ints(ring: Ring, entries: &[i64]) -> Self {
                let entries = entries.iter().map(|&c| ring.from_int(c)).collect();
                $ty { ring, entries }
            }

            pub fn ring(&self) -> &Ring {
                &self.ring
            }

            pub fn len(&self) -> usize {
                self.entries.len()
            }

            pub fn is_empty(&self) -> bool {
                self.entries.is_empty()
            }

            pub fn entries(&self) -> &[Elem] {
                &self.entries
            }

            /// Entry with 1-based index `k`.
            pub fn get(&self, k: usize) -> &Elem {
                &self.entries[k - 1]
            }
        }
    };
}

coordinate_vector!(GhostVector);
coordinate_vector!(OrbitCoords);
coordinate_vector!(BinomialCoords);

impl GhostVector {
    pub fn zero(ring: Ring, len: usize) -> Self {
        let entries = vec![ring.zero(); len];
        GhostVector { ring, entries }
    }

    fn zip_with(&self, other: &GhostVector, f: impl Fn(&Elem, &Elem) -> Elem) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(
                self.ring.to_string(),
                other.ring.to_string(),
            ));
        }
        if self.len() != other.len() {
            return Err(Error::TruncationMismatch(self.len(), other.len()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| f(a, b))
            .collect();
        Ok(GhostVector {
            ring: self.ring.clone(),
            entries,
        })
    }

    pub fn add(&self, other: &GhostVector) -> Result<Self> {
        self.zip_with(other, |a, b| self.ring.add(a, b))
    }

    /// Pointwise product.
    pub fn mul(&self, other: &GhostVector) -> Result<Self> {
        self.zip_with(other, |a, b| self.ring.mul(a, b))
    }

    pub fn truncate(&self, len: usize) -> Result<Self> {
        if len > self.len() {
            return Err(Error::TruncationMismatch(self.len(), len));
        }
        Ok(GhostVector {
            ring: self.ring.clone(),
            entries: self.entries[..len].to_vec(),
        })
    }

    /// Solves the ghost recursion for the coefficients, dividing exactly by
    /// `k` at step `k`. Fails with `NonIntegral` when the vector is not a
    /// ghost vector over this ring.
    pub fn unghost(&self) -> Result<UnitSeries> {
        let r = &self.ring;
        let n = self.len();
        let mut a = vec![r.one()];
        for k in 1..=n {
            let mut s = self.entries[k - 1].clone();
            for i in 1..k {
                s = r.add(&s, &r.mul(&self.entries[i - 1], &a[k - i]));
            }
            let ak = r.exact_div_int(&r.neg(&s), k as u64)?;
            a.push(ak);
        }
        Ok(UnitSeries::from_full(r.clone(), a))
    }
}

impl OrbitCoords {
    /// The truncated product `prod (1 - b_i t^i)`.
    pub fn to_series(&self) -> UnitSeries {
        let r = &self.ring;
        let n = self.len();
        let mut cur = vec![r.zero(); n + 1];
        cur[0] = r.one();
        for (idx, b) in self.entries.iter().enumerate() {
            let i = idx + 1;
            if r.is_zero(b) {
                continue;
            }
            for k in (i..=n).rev() {
                let t = r.mul(b, &cur[k - i]);
                cur[k] = r.sub(&cur[k], &t);
            }
        }
        UnitSeries::from_full(r.clone(), cur)
    }
}

impl BinomialCoords {
    /// The truncated product `prod (1 - t^i)^(b_i)`.
    pub fn to_series(&self) -> Result<UnitSeries> {
        let r = &self.ring;
        let n = self.len();
        let mut acc = UnitSeries::one(r.clone(), n);
        for (idx, b) in self.entries.iter().enumerate() {
            if !r.is_zero(b) {
                acc = acc.mul(&binomial_power(r, idx + 1, b, n)?)?;
            }
        }
        Ok(acc)
    }
}
