//! Contracting lattice maps, admissible primes and fixed sublattices.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;

use super::snf::{hermite_basis, smith_normal_form, IntMatrix};
use super::{IntegralRepresentation, Vector};
use crate::error::{Error, Result};

/// The linear form `(x, y) -> S x + T y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ContractingMap {
    pub s: i64,
    pub t: i64,
}

impl ContractingMap {
    pub fn eval(&self, x: i64, y: i64) -> i128 {
        self.s as i128 * x as i128 + self.t as i128 * y as i128
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    let e = i128::from(a).extended_gcd(&i128::from(p));
    e.x.rem_euclid(i128::from(p)) as u64
}

/// A form `(S, T)` with `|S|, |T| <= sqrt(p)` whose kernel mod `p` is the
/// line spanned by `(gx, gy)`.
///
/// Pairs `(s, t)` in `[0, floor(sqrt p)]^2` are enumerated in lexicographic
/// order; among pairs with equal `s + t k mod p` the lexicographically first
/// colliding pair is used, and the difference is oriented so that its first
/// nonzero entry is positive.
pub fn lattice_contract(p: u64, gx: i64, gy: i64) -> Result<ContractingMap> {
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    let pi = p as i128;
    let x = (gx as i128).rem_euclid(pi) as u64;
    let y = (gy as i128).rem_euclid(pi) as u64;
    match (x, y) {
        (0, 0) => {
            return Err(Error::InvalidSubgroup(
                "the generator is zero mod p".into(),
            ))
        }
        (0, _) => return Ok(ContractingMap { s: 1, t: 0 }),
        (_, 0) => return Ok(ContractingMap { s: 0, t: 1 }),
        _ => {}
    }
    let k = ((y as u128 * inverse_mod(x, p) as u128) % p as u128) as u64;
    let r = isqrt(p);
    let mut seen: HashMap<u64, ((u64, u64), Option<(u64, u64)>)> = HashMap::new();
    for s in 0..=r {
        for t in 0..=r {
            let v = ((s as u128 + t as u128 * k as u128) % p as u128) as u64;
            seen.entry(v)
                .and_modify(|e| {
                    if e.1.is_none() {
                        e.1 = Some((s, t));
                    }
                })
                .or_insert(((s, t), None));
        }
    }
    let (first, second) = seen
        .values()
        .filter_map(|&(a, b)| b.map(|b| (a, b)))
        .min()
        .expect("pigeonhole guarantees a collision");
    let mut s = second.0 as i64 - first.0 as i64;
    let mut t = second.1 as i64 - first.1 as i64;
    if s < 0 || (s == 0 && t < 0) {
        s = -s;
        t = -t;
    }
    Ok(ContractingMap { s, t })
}

/// The smallest prime `p <= bound` with `p = 3 mod 4`, `gcd(p, l) = 1` and
/// `gcd(p - 1, l) = 1`, where `l` is the odd part of `order`.
pub fn admissible_prime(order: u64, bound: u64) -> Result<u64> {
    if bound < 3 {
        return Err(Error::invalid("the search bound must be at least 3"));
    }
    if order == 0 {
        return Err(Error::invalid("group order must be positive"));
    }
    let l = order >> order.trailing_zeros();
    (3..=bound)
        .find(|&p| p % 4 == 3 && is_prime(p) && p.gcd(&l) == 1 && (p - 1).gcd(&l) == 1)
        .ok_or(Error::NotFound(bound))
}

/// A basis of the vectors fixed by every `rho(f)`, in Hermite normal form.
pub fn fixed_sublattice(rep: &IntegralRepresentation) -> Vec<Vector> {
    let n = rep.rank();
    let id = IntMatrix::identity(n);
    let blocks: Vec<IntMatrix> = (0..rep.order()).map(|f| rep.matrix(f).sub(&id)).collect();
    let stacked = IntMatrix::vstack(n, &blocks);
    hermite_basis(&smith_normal_form(&stacked).kernel_basis(), n)
}

/// Sum of `rho(f) v` over the group.
pub fn average(rep: &IntegralRepresentation, v: &[BigInt]) -> Vector {
    let mut out = vec![BigInt::from(0); rep.rank()];
    for f in 0..rep.order() {
        for (o, x) in out.iter_mut().zip(rep.act(f, v)) {
            *o += x;
        }
    }
    out
}
