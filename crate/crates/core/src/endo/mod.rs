//! Endomorphisms of free modules and their classes.
//!
//! An [`EndoObject`] is a square matrix over a coefficient ring, read as an
//! endomorphism of `R^d`. Its reversed characteristic polynomial
//! `det(1 - t f)` is computed without division, so it is valid over every
//! ring, including `Z/m` with composite `m`. A [`RationalClass`] is a
//! quotient of two such polynomials.

use std::fmt;

use crate::algebra::{Elem, Ring};
use crate::error::{Error, Result};
use crate::series::{GhostVector, UnitSeries};

/// A polynomial `1 + c_1 t + ... + c_d t^d` with no trailing zero
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitPoly {
    ring: Ring,
    coeffs: Vec<Elem>,
}

impl UnitPoly {
    pub fn new(ring: Ring, mut coeffs: Vec<Elem>) -> Result<Self> {
        for c in &coeffs {
            ring.check(c)?;
        }
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        Ok(UnitPoly { ring, coeffs })
    }

    pub fn one(ring: Ring) -> Self {
        UnitPoly {
            ring,
            coeffs: Vec::new(),
        }
    }

    pub fn from_ints(ring: Ring, coeffs: &[i64]) -> Self {
        let c = coeffs.iter().map(|&k| ring.from_int(k)).collect();
        Self::new(ring, c).expect("integers embed in every ring")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// `c_1..c_d`.
    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn mul(&self, other: &UnitPoly) -> Result<UnitPoly> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(
                self.ring.to_string(),
                other.ring.to_string(),
            ));
        }
        let r = &self.ring;
        let d = self.degree() + other.degree();
        let mut out = vec![r.zero(); d];
        let a = self.full();
        let b = other.full();
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                if i + j > 0 {
                    out[i + j - 1] = r.add(&out[i + j - 1], &r.mul(x, y));
                }
            }
        }
        UnitPoly::new(r.clone(), out)
    }

    fn full(&self) -> Vec<Elem> {
        let mut v = vec![self.ring.one()];
        v.extend(self.coeffs.iter().cloned());
        v
    }

    /// The class modulo `t^(N+1)`.
    pub fn to_series(&self, trunc: usize) -> UnitSeries {
        UnitSeries::from_poly(self.ring.clone(), &self.coeffs, trunc)
            .expect("coefficients were checked")
    }

    /// `p(t^n)`.
    pub fn substitute_power(&self, n: usize) -> UnitPoly {
        let r = &self.ring;
        let mut c = vec![r.zero(); self.degree() * n];
        for (k, x) in self.coeffs.iter().enumerate() {
            c[(k + 1) * n - 1] = x.clone();
        }
        UnitPoly::new(r.clone(), c).expect("same ring")
    }
}

impl fmt::Display for UnitPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if !self.ring.is_zero(c) {
                write!(f, " + ({})*t^{}", self.ring.format(c), k + 1)?;
            }
        }
        Ok(())
    }
}

/// A `d x d` matrix over a ring, as an endomorphism of `R^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EndoObject {
    ring: Ring,
    dim: usize,
    // Row-major.
    entries: Vec<Elem>,
}

impl EndoObject {
    pub fn new(ring: Ring, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::invalid(format!(
                    "row {i} has {} entries, expected {dim}",
                    row.len()
                )));
            }
            for x in row {
                ring.check(&x)?;
                entries.push(x);
            }
        }
        Ok(EndoObject { ring, dim, entries })
    }

    pub fn from_ints(ring: Ring, rows: &[Vec<i64>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&k| ring.from_int(k)).collect())
            .collect();
        Self::new(ring, rows)
    }

    fn from_fn(ring: Ring, dim: usize, f: impl Fn(usize, usize) -> Elem) -> Self {
        let entries = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        EndoObject { ring, dim, entries }
    }

    pub fn identity(ring: Ring, dim: usize) -> Self {
        let (one, zero) = (ring.one(), ring.zero());
        Self::from_fn(ring, dim, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    pub fn zero(ring: Ring, dim: usize) -> Self {
        let zero = ring.zero();
        Self::from_fn(ring, dim, |_, _| zero.clone())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        if self.dim == 0 {
            return Vec::new();
        }
        self.entries.chunks(self.dim).map(<[Elem]>::to_vec).collect()
    }

    fn same_ring(&self, other: &EndoObject) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(
                self.ring.to_string(),
                other.ring.to_string(),
            ));
        }
        Ok(())
    }

    /// Composition `self * other`.
    pub fn compose(&self, other: &EndoObject) -> Result<Self> {
        self.same_ring(other)?;
        if self.dim != other.dim {
            return Err(Error::invalid("composing endomorphisms of different rank"));
        }
        let r = &self.ring;
        let d = self.dim;
        Ok(Self::from_fn(r.clone(), d, |i, j| {
            (0..d).fold(r.zero(), |acc, k| {
                r.add(&acc, &r.mul(self.get(i, k), other.get(k, j)))
            })
        }))
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut acc = Self::identity(self.ring.clone(), self.dim);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.compose(&base).expect("same shape");
            }
            n >>= 1;
            if n > 0 {
                base = base.compose(&base).expect("same shape");
            }
        }
        acc
    }

    pub fn trace(&self) -> Elem {
        let r = &self.ring;
        (0..self.dim).fold(r.zero(), |acc, i| r.add(&acc, self.get(i, i)))
    }

    /// `det(1 - t f)` by Berkowitz's division-free algorithm.
    pub fn char_poly_rev(&self) -> UnitPoly {
        let r = &self.ring;
        // p holds the coefficients of det(x - A_k), leading coefficient first,
        // for the leading principal k x k block A_k.
        let mut p = vec![r.one()];
        for k in 0..self.dim {
            // Column of the Toeplitz matrix: 1, -a_kk, -R C, -R A C, ...
            let mut col = Vec::with_capacity(k + 2);
            col.push(r.one());
            col.push(r.neg(self.get(k, k)));
            // v = A_k^j C, starting from C = A[0..k][k].
            let mut v: Vec<Elem> = (0..k).map(|i| self.get(i, k).clone()).collect();
            for _ in 0..k {
                let rc = (0..k).fold(r.zero(), |acc, i| r.add(&acc, &r.mul(self.get(k, i), &v[i])));
                col.push(r.neg(&rc));
                v = (0..k)
                    .map(|i| {
                        (0..k).fold(r.zero(), |acc, j| r.add(&acc, &r.mul(self.get(i, j), &v[j])))
                    })
                    .collect();
            }
            let next: Vec<Elem> = (0..k + 2)
                .map(|i| {
                    (0..=i.min(k)).fold(r.zero(), |acc, j| {
                        r.add(&acc, &r.mul(&col[i - j], &p[j]))
                    })
                })
                .collect();
            p = next;
        }
        p.remove(0);
        UnitPoly::new(r.clone(), p).expect("entries come from the ring")
    }

    /// `tr(f), tr(f^2), ..., tr(f^N)`.
    pub fn trace_seq(&self, n: usize) -> GhostVector {
        let mut acc = self.clone();
        let mut out = Vec::with_capacity(n);
        for k in 1..=n {
            out.push(acc.trace());
            if k < n {
                acc = acc.compose(self).expect("same shape");
            }
        }
        GhostVector::new(self.ring.clone(), out).expect("traces lie in the ring")
    }

    /// Block-diagonal `f (+) g`.
    pub fn direct_sum(&self, other: &EndoObject) -> Result<Self> {
        self.same_ring(other)?;
        let (a, b) = (self.dim, other.dim);
        let zero = self.ring.zero();
        Ok(Self::from_fn(self.ring.clone(), a + b, |i, j| match (i < a, j < a) {
            (true, true) => self.get(i, j).clone(),
            (false, false) => other.get(i - a, j - a).clone(),
            _ => zero.clone(),
        }))
    }

    /// Kronecker product; basis vector `e_i (x) e_j` has index `i * d_g + j`.
    pub fn tensor_product(&self, other: &EndoObject) -> Result<Self> {
        self.same_ring(other)?;
        let r = &self.ring;
        let dg = other.dim;
        Ok(Self::from_fn(r.clone(), self.dim * dg, |p, q| {
            r.mul(self.get(p / dg, q / dg), other.get(p % dg, q % dg))
        }))
    }

    /// `F_n(f) = f^n`.
    pub fn frobenius(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("Frobenius index must be positive"));
        }
        Ok(self.pow(n as u64))
    }

    /// `V_n(f)`: identity blocks on the block subdiagonal and `f` in the
    /// top-right block.
    pub fn verschiebung(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("Verschiebung index must be positive"));
        }
        let d = self.dim;
        let (one, zero) = (self.ring.one(), self.ring.zero());
        Ok(Self::from_fn(self.ring.clone(), n * d, |p, q| {
            let (bi, bj, i, j) = (p / d, q / d, p % d, q % d);
            if bi == 0 && bj == n - 1 {
                self.get(i, j).clone()
            } else if bi == bj + 1 && i == j {
                one.clone()
            } else {
                zero.clone()
            }
        }))
    }
}

/// The `k x k` companion matrix with `det(1 - tC) = 1 + a_1 t + ... + a_k t^k`:
/// ones on the subdiagonal and `-a_k, ..., -a_1` down the last column.
pub fn companion(ring: &Ring, a: &[Elem]) -> Result<EndoObject> {
    for x in a {
        ring.check(x)?;
    }
    let k = a.len();
    let zero = ring.zero();
    Ok(EndoObject::from_fn(ring.clone(), k, |i, j| {
        if j == k - 1 {
            ring.neg(&a[k - 1 - i])
        } else if i == j + 1 {
            ring.one()
        } else {
            zero.clone()
        }
    }))
}

/// A class `num / den` of unit polynomials. Equality is by
/// cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalClass {
    num: UnitPoly,
    den: UnitPoly,
}

impl PartialEq for RationalClass {
    fn eq(&self, other: &Self) -> bool {
        match (self.num.mul(&other.den), other.num.mul(&self.den)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for RationalClass {}

impl RationalClass {
    pub fn new(num: UnitPoly, den: UnitPoly) -> Result<Self> {
        if num.ring != den.ring {
            return Err(Error::RingMismatch(num.ring.to_string(), den.ring.to_string()));
        }
        Ok(RationalClass { num, den })
    }

    /// `(det(1 - tf), 1)`.
    pub fn of(f: &EndoObject) -> Self {
        RationalClass {
            num: f.char_poly_rev(),
            den: UnitPoly::one(f.ring.clone()),
        }
    }

    pub fn one(ring: Ring) -> Self {
        Self::of(&EndoObject::identity(ring, 1))
    }

    pub fn zero(ring: Ring) -> Self {
        RationalClass {
            num: UnitPoly::one(ring.clone()),
            den: UnitPoly::one(ring),
        }
    }

    pub fn numerator(&self) -> &UnitPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UnitPoly {
        &self.den
    }

    pub fn ring(&self) -> &Ring {
        &self.num.ring
    }

    pub fn add(&self, other: &RationalClass) -> Result<Self> {
        Ok(RationalClass {
            num: self.num.mul(&other.num)?,
            den: self.den.mul(&other.den)?,
        })
    }

    pub fn neg(&self) -> Self {
        RationalClass {
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }

    /// Product realised on companion matrices:
    /// `[C(n1) (x) C(n2) (+) C(d1) (x) C(d2)] - [C(n1) (x) C(d2) (+) C(d1) (x) C(n2)]`.
    pub fn mul(&self, other: &RationalClass) -> Result<Self> {
        let r = self.ring();
        if r != other.ring() {
            return Err(Error::RingMismatch(r.to_string(), other.ring().to_string()));
        }
        let c = |p: &UnitPoly| companion(r, p.coeffs());
        let (n1, d1, n2, d2) = (c(&self.num)?, c(&self.den)?, c(&other.num)?, c(&other.den)?);
        let pos = n1.tensor_product(&n2)?.direct_sum(&d1.tensor_product(&d2)?)?;
        let neg = n1.tensor_product(&d2)?.direct_sum(&d1.tensor_product(&n2)?)?;
        Ok(RationalClass {
            num: pos.char_poly_rev(),
            den: neg.char_poly_rev(),
        })
    }

    /// `num / den` modulo `t^(N+1)`.
    pub fn to_series(&self, trunc: usize) -> UnitSeries {
        let n = self.num.to_series(trunc);
        n.mul(&self.den.to_series(trunc).inv()).expect("same ring and truncation")
    }
}
