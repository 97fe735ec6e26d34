//! Symmetric functions.
//!
//! A [`SymFunc`] is an integer polynomial in the basis symbols `H_1, H_2, ...`
//! where `H_k` is the coefficient of `t^k` in `prod_i (1 - x_i t)`. Thus
//! `H_k = (-1)^k e_k` with `e_k` the elementary symmetric function. Working
//! in finitely many variables is faithful as soon as their number is at
//! least the degree.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{Elem, Monomial, Poly, Ring};
use crate::cache::Cache;
use crate::error::{Error, Result};
use crate::series::UnitSeries;

/// Default cap on `n * N` for [`lambda_universal`].
pub const LAMBDA_VARIABLE_BUDGET: usize = 8;

/// An integer polynomial in `H_1..H_K`.
///
/// The stored arity is always the largest index that occurs, so structural
/// equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymFunc {
    poly: Poly,
}

impl SymFunc {
    /// Wraps a polynomial whose variable `i` stands for `H_(i+1)`.
    pub fn from_poly(poly: &Poly) -> Self {
        let top = poly.occurring_vars().last().map_or(0, |&i| i + 1);
        SymFunc {
            poly: poly.with_nvars(top).expect("trailing variables do not occur"),
        }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        SymFunc {
            poly: Poly::constant(0, c.into()),
        }
    }

    /// The basis element `H_k`, `k >= 1`.
    pub fn h(k: usize) -> Self {
        assert!(k >= 1, "basis symbols start at H_1");
        SymFunc {
            poly: Poly::var(k, k - 1),
        }
    }

    /// The elementary symmetric function `e_k = (-1)^k H_k`.
    pub fn elementary(k: usize) -> Self {
        let h = Self::h(k);
        if k % 2 == 1 {
            h.neg()
        } else {
            h
        }
    }

    /// The underlying polynomial; variable `i` is `H_(i+1)`.
    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    /// Largest basis index that occurs.
    pub fn basis_size(&self) -> usize {
        self.poly.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Degree in the `x_i`, where `H_k` has degree `k`.
    pub fn degree(&self) -> usize {
        self.poly
            .terms()
            .map(|(m, _)| weight(m))
            .max()
            .unwrap_or(0)
    }

    fn lift(&self, k: usize) -> Poly {
        self.poly.with_nvars(k).expect("lifting never drops variables")
    }

    fn binary(&self, other: &SymFunc, op: impl Fn(&Poly, &Poly) -> Poly) -> SymFunc {
        let k = self.basis_size().max(other.basis_size());
        Self::from_poly(&op(&self.lift(k), &other.lift(k)))
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        self.binary(other, Poly::add)
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.binary(other, Poly::sub)
    }

    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        self.binary(other, Poly::mul)
    }

    pub fn neg(&self) -> SymFunc {
        SymFunc {
            poly: self.poly.neg(),
        }
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> SymFunc {
        Self::from_poly(&self.poly.scale(&k.into()))
    }

    pub fn pow(&self, e: u32) -> SymFunc {
        Self::from_poly(&self.poly.pow(e))
    }

    /// Evaluates with `H_k -> values[k-1]` in `ring`.
    pub fn specialize(&self, ring: &Ring, values: &[Elem]) -> Result<Elem> {
        if values.len() < self.basis_size() {
            return Err(Error::TooFewVariables {
                needed: self.basis_size(),
                given: values.len(),
            });
        }
        Ok(ring.eval_poly(&self.poly, values))
    }
}

fn weight(m: &Monomial) -> usize {
    m.exponents()
        .iter()
        .enumerate()
        .map(|(i, &e)| (i + 1) * e as usize)
        .sum()
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.basis_size()).map(|k| format!("H{k}")).collect();
        write!(f, "{}", self.poly.display_with(&names))
    }
}

/// `e_0..e_m` in `m` variables.
fn elementary_polys(m: usize) -> Vec<Poly> {
    let mut e = vec![Poly::zero(m); m + 1];
    e[0] = Poly::one(m);
    for i in 0..m {
        let x = Poly::var(m, i);
        for k in (1..=i + 1).rev() {
            e[k] = e[k].add(&e[k - 1].mul(&x));
        }
    }
    e
}

/// The symmetric polynomial in `x_1..x_M` represented by `sf`.
pub fn expand(sf: &SymFunc, m: usize) -> Result<Poly> {
    let deg = sf.degree();
    if m < deg {
        return Err(Error::TooFewVariables {
            needed: deg,
            given: m,
        });
    }
    let e = elementary_polys(m);
    let ring = Ring::MultiPoly(Arc::from(vec![String::new(); m]));
    let values: Vec<Elem> = (1..=sf.basis_size())
        .map(|k| {
            let ek = e.get(k).cloned().unwrap_or_else(|| Poly::zero(m));
            Elem::Poly(if k % 2 == 1 { ek.neg() } else { ek })
        })
        .collect();
    match ring.eval_poly(sf.poly(), &values) {
        Elem::Poly(p) => Ok(p),
        _ => unreachable!(),
    }
}

fn is_symmetric(p: &Poly) -> bool {
    let m = p.nvars();
    let mut perm: Vec<usize> = (0..m).collect();
    (0..m.saturating_sub(1)).all(|i| {
        perm.swap(i, i + 1);
        let same = p.permuted(&perm) == *p;
        perm.swap(i, i + 1);
        same
    })
}

/// Writes a symmetric polynomial in `x_1..x_M` in the `H` basis by
/// repeatedly cancelling the graded-lex leading term against the matching
/// product of elementary functions.
pub fn reduce_to_basis(p: &Poly) -> Result<SymFunc> {
    let m = p.nvars();
    if !is_symmetric(p) {
        return Err(Error::NotSymmetric);
    }
    let e = elementary_polys(m);
    let mut rest = p.clone();
    let mut out = Poly::zero(m);
    while let Some((lead, c)) = rest.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        let exps = lead.exponents();
        let mut mult = vec![0u16; m];
        let mut product = Poly::one(m);
        for i in 0..m {
            let next = exps.get(i + 1).copied().unwrap_or(0);
            if exps[i] < next {
                // The leading monomial of a symmetric polynomial is a partition.
                return Err(Error::NotSymmetric);
            }
            mult[i] = exps[i] - next;
            if mult[i] > 0 {
                product = product.mul(&e[i + 1].pow(u32::from(mult[i])));
            }
        }
        rest = rest.sub(&product.scale(&c));
        let sign = if lead.degree() % 2 == 1 { -c } else { c };
        out.add_term(Monomial::from_exponents(mult), sign);
    }
    Ok(SymFunc::from_poly(&out))
}

/// `p_k = sum_i x_i^k`, via the ghost recursion on `1 + H_1 t + ... + H_k t^k`.
pub fn power_sum(k: usize) -> SymFunc {
    assert!(k >= 1, "power sums start at p_1");
    let ring = Ring::multipoly_indexed("H", k);
    let generic = UnitSeries::new(ring.clone(), (0..k).map(|i| ring.var(i)).collect())
        .expect("variables belong to the ring");
    match generic.ghost().get(k) {
        Elem::Poly(p) => SymFunc::from_poly(p),
        _ => unreachable!(),
    }
}

/// Coefficients of `t^1..t^N` in `lambda_n(U) = prod_{|I| = n} (1 - x_I t)`,
/// with the default budget on `n * N`.
pub fn lambda_universal(n: usize, trunc: usize) -> Result<Arc<Vec<SymFunc>>> {
    lambda_universal_with_budget(n, trunc, LAMBDA_VARIABLE_BUDGET)
}

/// As [`lambda_universal`] with an explicit cap on the number of variables.
pub fn lambda_universal_with_budget(
    n: usize,
    trunc: usize,
    budget: usize,
) -> Result<Arc<Vec<SymFunc>>> {
    if n == 0 {
        return Err(Error::invalid("exterior power index must be positive"));
    }
    let vars = n * trunc;
    if vars > budget {
        return Err(Error::BudgetExceeded(format!(
            "lambda_{n} at truncation {trunc} needs {vars} variables (budget {budget})"
        )));
    }
    static CACHE: Cache<(usize, usize), Vec<SymFunc>> = Cache::new();
    CACHE.get_or_build((n, trunc), || build_lambda(n, trunc))
}

fn build_lambda(n: usize, trunc: usize) -> Result<Vec<SymFunc>> {
    let m = n * trunc;
    let mut coeffs = vec![Poly::zero(m); trunc + 1];
    coeffs[0] = Poly::one(m);
    for subset in subsets(m, n) {
        let mut exps = vec![0u16; m];
        for &i in &subset {
            exps[i] = 1;
        }
        let x_i = Poly::term(Monomial::from_exponents(exps), -BigInt::one());
        for k in (1..=trunc).rev() {
            if coeffs[k - 1].is_zero() {
                continue;
            }
            coeffs[k] = coeffs[k].add(&coeffs[k - 1].mul(&x_i));
        }
    }
    coeffs[1..].iter().map(reduce_to_basis).collect()
}

/// All `k`-element subsets of `0..m` in lexicographic order.
fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > m {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < m - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

impl Zero for SymFunc {
    fn zero() -> Self {
        SymFunc::constant(0)
    }
    fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

impl std::ops::Add for SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: SymFunc) -> SymFunc {
        SymFunc::add(&self, &rhs)
    }
}
