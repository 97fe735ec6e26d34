//! Coefficient rings.
//!
//! A [`Ring`] is a runtime descriptor and [`Elem`] a canonical value; all
//! arithmetic goes through the ring so that modular reduction and arity
//! checks live in one place. Values are immutable and canonical, so
//! structural equality is mathematical equality.

mod poly;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use poly::{Monomial, Poly};

use crate::error::{Error, Result};

/// The commutative rings every other module computes over.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    Rationals,
    /// `Z/m` for a positive, possibly composite, modulus.
    Modular(BigInt),
    /// `Z[vars]`, variables named and ordered as given.
    MultiPoly(Arc<[String]>),
}

/// A canonical ring value. Which variant is valid depends on the ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    Int(BigInt),
    Rat(BigRational),
    /// Residue in `[0, m)`.
    Mod(BigInt),
    Poly(Poly),
}

impl Ring {
    pub fn modular(m: impl Into<BigInt>) -> Result<Ring> {
        let m = m.into();
        if !m.is_positive() {
            return Err(Error::invalid(format!("modulus must be positive, got {m}")));
        }
        Ok(Ring::Modular(m))
    }

    pub fn multipoly<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Ring {
        Ring::MultiPoly(vars.into_iter().map(Into::into).collect())
    }

    /// Polynomial ring in `prefix1, prefix2, ...`.
    pub fn multipoly_indexed(prefix: &str, n: usize) -> Ring {
        Ring::multipoly((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn torsion_free(&self) -> bool {
        !matches!(self, Ring::Modular(_))
    }

    pub fn binomial(&self) -> bool {
        matches!(self, Ring::Integers | Ring::Rationals)
    }

    pub fn characteristic(&self) -> BigInt {
        match self {
            Ring::Modular(m) => m.clone(),
            _ => BigInt::zero(),
        }
    }

    pub fn nvars(&self) -> usize {
        match self {
            Ring::MultiPoly(v) => v.len(),
            _ => 0,
        }
    }

    pub fn var_names(&self) -> &[String] {
        match self {
            Ring::MultiPoly(v) => v,
            _ => &[],
        }
    }

    /// True when `x` is a canonical element of this ring.
    pub fn contains(&self, x: &Elem) -> bool {
        match (self, x) {
            (Ring::Integers, Elem::Int(_)) => true,
            (Ring::Rationals, Elem::Rat(q)) => q.denom().is_positive(),
            (Ring::Modular(m), Elem::Mod(r)) => !r.is_negative() && r < m,
            (Ring::MultiPoly(v), Elem::Poly(p)) => p.nvars() == v.len(),
            _ => false,
        }
    }

    pub fn zero(&self) -> Elem {
        self.from_bigint(BigInt::zero())
    }

    pub fn one(&self) -> Elem {
        self.from_bigint(BigInt::one())
    }

    pub fn from_int(&self, k: i64) -> Elem {
        self.from_bigint(BigInt::from(k))
    }

    /// Image of an integer under the unique map `Z -> R`.
    pub fn from_bigint(&self, k: BigInt) -> Elem {
        match self {
            Ring::Integers => Elem::Int(k),
            Ring::Rationals => Elem::Rat(BigRational::from_integer(k)),
            Ring::Modular(m) => Elem::Mod(k.mod_floor(m)),
            Ring::MultiPoly(v) => Elem::Poly(Poly::constant(v.len(), k)),
        }
    }

    /// The variable `x_i` of a polynomial ring.
    pub fn var(&self, i: usize) -> Elem {
        match self {
            Ring::MultiPoly(v) => Elem::Poly(Poly::var(v.len(), i)),
            _ => panic!("{self} has no variables"),
        }
    }

    pub fn is_zero(&self, x: &Elem) -> bool {
        match x {
            Elem::Int(a) | Elem::Mod(a) => a.is_zero(),
            Elem::Rat(q) => q.is_zero(),
            Elem::Poly(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self, x: &Elem) -> bool {
        *x == self.one()
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (self, a, b) {
            (Ring::Integers, Elem::Int(x), Elem::Int(y)) => Elem::Int(x + y),
            (Ring::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x + y),
            (Ring::Modular(m), Elem::Mod(x), Elem::Mod(y)) => {
                let s = x + y;
                Elem::Mod(if &s >= m { s - m } else { s })
            }
            (Ring::MultiPoly(_), Elem::Poly(x), Elem::Poly(y)) => Elem::Poly(x.add(y)),
            _ => self.foreign(a, b),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (self, a) {
            (Ring::Integers, Elem::Int(x)) => Elem::Int(-x),
            (Ring::Rationals, Elem::Rat(x)) => Elem::Rat(-x),
            (Ring::Modular(m), Elem::Mod(x)) => {
                Elem::Mod(if x.is_zero() { x.clone() } else { m - x })
            }
            (Ring::MultiPoly(_), Elem::Poly(x)) => Elem::Poly(x.neg()),
            _ => self.foreign(a, a),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (self, a, b) {
            (Ring::Integers, Elem::Int(x), Elem::Int(y)) => Elem::Int(x * y),
            (Ring::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x * y),
            (Ring::Modular(m), Elem::Mod(x), Elem::Mod(y)) => Elem::Mod((x * y) % m),
            (Ring::MultiPoly(_), Elem::Poly(x), Elem::Poly(y)) => Elem::Poly(x.mul(y)),
            _ => self.foreign(a, b),
        }
    }

    /// `k * a` for an integer `k`.
    pub fn mul_int(&self, a: &Elem, k: &BigInt) -> Elem {
        match (self, a) {
            (Ring::Integers, Elem::Int(x)) => Elem::Int(x * k),
            (Ring::Rationals, Elem::Rat(x)) => Elem::Rat(x * BigRational::from_integer(k.clone())),
            (Ring::Modular(m), Elem::Mod(x)) => Elem::Mod((x * k).mod_floor(m)),
            (Ring::MultiPoly(_), Elem::Poly(x)) => Elem::Poly(x.scale(k)),
            _ => self.foreign(a, a),
        }
    }

    pub fn pow(&self, a: &Elem, mut e: u64) -> Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Returns `q` with `k * q = x`, or `NonIntegral` if there is none.
    ///
    /// Over `Z/m` with `gcd(k, m) = g > 1` the solution is not unique; the
    /// representative in `[0, m/g)` is returned.
    pub fn exact_div_int(&self, x: &Elem, k: u64) -> Result<Elem> {
        if k == 0 {
            return Err(Error::invalid("division by zero"));
        }
        let kb = BigInt::from(k);
        let fail = || Error::NonIntegral {
            value: self.format(x),
            divisor: k.to_string(),
            ring: self.to_string(),
        };
        match (self, x) {
            (Ring::Integers, Elem::Int(a)) => {
                let (q, r) = a.div_rem(&kb);
                if r.is_zero() {
                    Ok(Elem::Int(q))
                } else {
                    Err(fail())
                }
            }
            (Ring::Rationals, Elem::Rat(a)) => Ok(Elem::Rat(a / BigRational::from_integer(kb))),
            (Ring::Modular(m), Elem::Mod(a)) => {
                let g = kb.gcd(m);
                if !(a % &g).is_zero() {
                    return Err(fail());
                }
                let m_red = m / &g;
                let k_red = (&kb / &g).mod_floor(&m_red);
                let inv = mod_inverse(&k_red, &m_red).ok_or_else(fail)?;
                Ok(Elem::Mod(((a / &g) * inv).mod_floor(&m_red)))
            }
            (Ring::MultiPoly(_), Elem::Poly(p)) => p.exact_div(&kb).map(Elem::Poly).ok_or_else(fail),
            _ => self.foreign(x, x),
        }
    }

    /// `binom(a, k)` in a binomial ring.
    pub fn binomial_coeff(&self, a: &Elem, k: u64) -> Result<Elem> {
        if !self.binomial() {
            return Err(Error::NotBinomialRing(self.to_string()));
        }
        let mut num = self.one();
        for i in 0..k {
            let term = self.sub(a, &self.from_int(i as i64));
            num = self.mul(&num, &term);
        }
        let fact: BigInt = (1..=k).map(BigInt::from).product();
        match (self, num) {
            (Ring::Integers, Elem::Int(n)) => Ok(Elem::Int(n / fact)),
            (Ring::Rationals, Elem::Rat(n)) => Ok(Elem::Rat(n / BigRational::from_integer(fact))),
            _ => unreachable!("binomial rings are Z and Q"),
        }
    }

    /// Evaluates `p` with `x_i -> values[i]` in `self`.
    ///
    /// Powers of each value are cached, so this is linear in the number of
    /// terms of `p` times its arity.
    pub fn eval_poly(&self, p: &Poly, values: &[Elem]) -> Elem {
        let mut max_exp = vec![0u16; p.nvars()];
        for (m, _) in p.terms() {
            for (i, &e) in m.exponents().iter().enumerate() {
                max_exp[i] = max_exp[i].max(e);
            }
        }
        let powers: Vec<Vec<Elem>> = max_exp
            .iter()
            .enumerate()
            .map(|(i, &top)| {
                let mut v = Vec::with_capacity(top as usize + 1);
                v.push(self.one());
                assert!(top == 0 || i < values.len(), "variable {i} has no value");
                for e in 1..=top as usize {
                    let next = self.mul(&v[e - 1], &values[i]);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = self.zero();
        for (m, c) in p.terms() {
            let mut t = self.from_bigint(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = self.mul(&t, &powers[i][e as usize]);
                }
            }
            acc = self.add(&acc, &t);
        }
        acc
    }

    /// Image of `p` (an element of this polynomial ring) under the ring map
    /// into `target` given by a variable assignment.
    pub fn specialize(
        &self,
        p: &Elem,
        target: &Ring,
        assignment: &std::collections::HashMap<String, Elem>,
    ) -> Result<Elem> {
        let (Ring::MultiPoly(names), Elem::Poly(poly)) = (self, p) else {
            return Err(Error::invalid(format!("specialize needs a polynomial ring, got {self}")));
        };
        let mut values = vec![target.zero(); names.len()];
        for i in poly.occurring_vars() {
            let v = assignment
                .get(&names[i])
                .ok_or_else(|| Error::UnassignedVariable(names[i].clone()))?;
            if !target.contains(v) {
                return Err(Error::RingMismatch(target.to_string(), format!("{v:?}")));
            }
            values[i] = v.clone();
        }
        Ok(target.eval_poly(poly, &values))
    }

    /// Canonical string form: decimal integers, `p/q` fractions, residues,
    /// or polynomial expressions.
    pub fn format(&self, x: &Elem) -> String {
        match x {
            Elem::Int(a) | Elem::Mod(a) => a.to_string(),
            Elem::Rat(q) => {
                if q.denom().is_one() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            Elem::Poly(p) => p.display_with(self.var_names()).to_string(),
        }
    }

    /// Parses the canonical string form. Modular inputs may be any integer
    /// and are reduced; polynomial rings are not parseable.
    pub fn parse(&self, s: &str) -> Result<Elem> {
        let bad = || Error::invalid(format!("cannot parse `{s}` as an element of {self}"));
        let s = s.trim();
        match self {
            Ring::Integers => s.parse::<BigInt>().map(Elem::Int).map_err(|_| bad()),
            Ring::Modular(m) => s
                .parse::<BigInt>()
                .map(|a| Elem::Mod(a.mod_floor(m)))
                .map_err(|_| bad()),
            Ring::Rationals => {
                let q = match s.split_once('/') {
                    Some((n, d)) => {
                        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                        if d.is_zero() {
                            return Err(bad());
                        }
                        BigRational::new(n, d)
                    }
                    None => BigRational::from_integer(s.parse().map_err(|_| bad())?),
                };
                Ok(Elem::Rat(q))
            }
            Ring::MultiPoly(_) => Err(bad()),
        }
    }

    /// Integer value of an element of `Z`, when it fits.
    pub fn to_i64(&self, x: &Elem) -> Option<i64> {
        match x {
            Elem::Int(a) | Elem::Mod(a) => a.to_i64(),
            Elem::Rat(q) if q.is_integer() => q.numer().to_i64(),
            _ => None,
        }
    }

    pub(crate) fn check(&self, x: &Elem) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::RingMismatch(self.to_string(), format!("{x:?}")))
        }
    }

    fn foreign(&self, a: &Elem, b: &Elem) -> ! {
        panic!("elements {a:?}, {b:?} do not belong to {self}")
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::Rationals => write!(f, "Q"),
            Ring::Modular(m) => write!(f, "Z/{m}"),
            Ring::MultiPoly(v) => write!(f, "Z[{}]", v.join(",")),
        }
    }
}

impl From<i64> for Elem {
    fn from(k: i64) -> Self {
        Elem::Int(BigInt::from(k))
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    use proptest::prelude::*;

    fn int(k: i64) -> Elem {
        Elem::from(k)
    }

    #[test]
    fn exact_division_examples() {
        let z = Ring::Integers;
        assert_eq!(z.exact_div_int(&int(6), 3).unwrap(), int(2));
        assert!(matches!(
            z.exact_div_int(&int(5), 2),
            Err(Error::NonIntegral { .. })
        ));
        let z7 = Ring::modular(7).unwrap();
        // Oracle: exhaustive search over residues.
        let x = z7.from_int(3);
        let brute: Vec<i64> = (0..7)
            .filter(|q| z7.mul_int(&z7.from_int(*q), &BigInt::from(2)) == x)
            .collect();
        assert_eq!(brute, vec![5]);
        assert_eq!(z7.exact_div_int(&x, 2).unwrap(), z7.from_int(5));
    }

    #[test]
    fn modular_division_with_shared_factor() {
        let z6 = Ring::modular(6).unwrap();
        let q = z6.exact_div_int(&z6.from_int(4), 2).unwrap();
        assert_eq!(z6.mul_int(&q, &BigInt::from(2)), z6.from_int(4));
        assert!(z6.exact_div_int(&z6.from_int(3), 2).is_err());
    }

    #[test]
    fn capabilities() {
        assert!(Ring::Integers.torsion_free() && Ring::Integers.binomial());
        assert!(Ring::Rationals.binomial());
        let m = Ring::modular(12).unwrap();
        assert!(!m.torsion_free() && !m.binomial());
        assert_eq!(m.characteristic(), BigInt::from(12));
        let p = Ring::multipoly(["x"]);
        assert!(p.torsion_free() && !p.binomial());
        assert_eq!(p.characteristic(), BigInt::zero());
        assert!(Ring::modular(0).is_err());
    }

    #[test]
    fn specialize_examples() {
        let r = Ring::multipoly(["x", "y"]);
        let p = r.add(&r.mul(&r.var(0), &r.var(1)), &r.from_int(2));
        let asg: HashMap<String, Elem> =
            [("x".into(), int(3)), ("y".into(), int(4))].into_iter().collect();
        assert_eq!(r.specialize(&p, &Ring::Integers, &asg).unwrap(), int(14));

        let r1 = Ring::multipoly(["x"]);
        let asg: HashMap<String, Elem> = [("x".into(), r1.var(0))].into_iter().collect();
        assert_eq!(r1.specialize(&r1.var(0), &r1, &asg).unwrap(), r1.var(0));

        let z2 = Ring::modular(2).unwrap();
        let p = r1.add(&r1.pow(&r1.var(0), 2), &r1.var(0));
        let asg: HashMap<String, Elem> = [("x".into(), z2.one())].into_iter().collect();
        assert_eq!(r1.specialize(&p, &z2, &asg).unwrap(), z2.zero());

        let empty = HashMap::new();
        assert_eq!(
            r1.specialize(&p, &z2, &empty),
            Err(Error::UnassignedVariable("x".into()))
        );
    }

    #[test]
    fn rational_canonical_form() {
        let q = Ring::Rationals;
        let a = q.parse("6/-4").unwrap();
        assert_eq!(q.format(&a), "-3/2");
        assert!(q.contains(&a));
        assert_eq!(q.format(&q.parse("4/2").unwrap()), "2");
    }

    #[test]
    fn binomial_coefficients() {
        let z = Ring::Integers;
        assert_eq!(z.binomial_coeff(&int(5), 2).unwrap(), int(10));
        assert_eq!(z.binomial_coeff(&int(-1), 3).unwrap(), int(-1));
        assert!(Ring::modular(5).unwrap().binomial_coeff(&Elem::Mod(1.into()), 1).is_err());
    }

    fn ring_strategy() -> impl Strategy<Value = Ring> {
        prop_oneof![
            Just(Ring::Integers),
            Just(Ring::Rationals),
            (1i64..40).prop_map(|m| Ring::modular(m).unwrap()),
            Just(Ring::multipoly(["x", "y"])),
        ]
    }

    fn elem_for(ring: &Ring, seed: (i64, i64, i64)) -> Elem {
        let (a, b, c) = seed;
        match ring {
            Ring::Rationals => Elem::Rat(BigRational::new(a.into(), (b.abs() + 1).into())),
            Ring::MultiPoly(_) => {
                let x = ring.var(0);
                let y = ring.var(1);
                let t1 = ring.mul_int(&ring.mul(&x, &x), &a.into());
                let t2 = ring.mul_int(&y, &b.into());
                ring.add(&ring.add(&t1, &t2), &ring.from_int(c))
            }
            _ => ring.from_int(a * 7 + b - c),
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_axioms(
            ring in ring_strategy(),
            a in (-50i64..50, -50i64..50, -50i64..50),
            b in (-50i64..50, -50i64..50, -50i64..50),
            c in (-50i64..50, -50i64..50, -50i64..50),
        ) {
            let (a, b, c) = (elem_for(&ring, a), elem_for(&ring, b), elem_for(&ring, c));
            prop_assert!(ring.contains(&a));
            prop_assert_eq!(ring.add(&ring.add(&a, &b), &c), ring.add(&a, &ring.add(&b, &c)));
            prop_assert_eq!(ring.mul(&ring.mul(&a, &b), &c), ring.mul(&a, &ring.mul(&b, &c)));
            prop_assert_eq!(ring.mul(&a, &b), ring.mul(&b, &a));
            prop_assert_eq!(
                ring.mul(&a, &ring.add(&b, &c)),
                ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c))
            );
            prop_assert_eq!(ring.mul(&a, &ring.one()), a.clone());
            prop_assert!(ring.is_zero(&ring.add(&a, &ring.neg(&a))));
        }

        #[test]
        fn exact_div_inverts_scaling(
            ring in ring_strategy(),
            a in (-50i64..50, -50i64..50, -50i64..50),
            k in 1u64..=20,
        ) {
            let x = elem_for(&ring, a);
            let kx = ring.mul_int(&x, &BigInt::from(k));
            let q = ring.exact_div_int(&kx, k).unwrap();
            // Over Z/m the quotient is only determined modulo m/gcd(k,m).
            prop_assert_eq!(ring.mul_int(&q, &BigInt::from(k)), kx);
            if ring.torsion_free() {
                prop_assert_eq!(q, x);
            }
        }

        #[test]
        fn specialize_is_multiplicative(
            a in (-9i64..9, -9i64..9, -9i64..9),
            b in (-9i64..9, -9i64..9, -9i64..9),
            vx in -20i64..20,
            vy in -20i64..20,
            m in 2i64..30,
        ) {
            let r = Ring::multipoly(["x", "y"]);
            let (p, q) = (elem_for(&r, a), elem_for(&r, b));
            for target in [Ring::Integers, Ring::modular(m).unwrap()] {
                let asg: HashMap<String, Elem> =
                    [("x".to_string(), target.from_int(vx)), ("y".to_string(), target.from_int(vy))]
                        .into_iter()
                        .collect();
                let lhs = r.specialize(&r.mul(&p, &q), &target, &asg).unwrap();
                let rhs = target.mul(
                    &r.specialize(&p, &target, &asg).unwrap(),
                    &r.specialize(&q, &target, &asg).unwrap(),
                );
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
