//! Expansive endomorphisms of crystallographic groups and the affine maps
//! intertwining them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::Zero;

use super::bar::BarComplex;
use super::{add_vec, CrystallographicGroup, Element, RatVector, Vector};
use crate::error::{Error, Result};

/// `phi(a, f) = (s a + b(f), f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansiveMap {
    pub s: BigInt,
    /// `b(f)` for every holonomy element, zero at the identity.
    pub b: Vec<Vector>,
}

impl ExpansiveMap {
    pub fn apply(&self, x: &Element) -> Element {
        let a = x.lattice.iter().map(|v| v * &self.s).collect::<Vec<_>>();
        Element {
            lattice: add_vec(&a, &self.b[x.holonomy]),
            holonomy: x.holonomy,
        }
    }

    /// Checks `phi(xy) = phi(x) phi(y)` for all sampled pairs.
    pub fn is_homomorphism_on(&self, g: &CrystallographicGroup, sample: &[Element]) -> bool {
        sample.iter().all(|x| {
            let px = self.apply(x);
            sample
                .iter()
                .all(|y| self.apply(&g.mul(x, y)) == g.mul(&px, &self.apply(y)))
        })
    }
}

/// Solves `(s - 1) c = d b` for the cocycle `c` of `g`. Needs
/// `s = 1 mod |F|`; the result is checked on all pairs of elements with
/// lattice part in `{-1, 0, 1}^n`.
pub fn solve_expansive(g: &CrystallographicGroup, s: &BigInt) -> Result<ExpansiveMap> {
    let q = BigInt::from(g.holonomy().order());
    let sm1: BigInt = s - 1;
    if !sm1.is_multiple_of(&q) {
        return Err(Error::PreconditionViolated(format!("{s} is not 1 mod {q}")));
    }
    let bc = BarComplex::new(g.holonomy(), g.representation());
    let target: Vec<BigInt> = bc.cochain_of(g.cocycle()).iter().map(|x| x * &sm1).collect();
    let b = bc.coboundary_preimage(2, &target)?;
    let map = ExpansiveMap {
        s: s.clone(),
        b: bc.function_of(&b),
    };
    if !map.is_homomorphism_on(g, &g.sample_elements()) {
        return Err(Error::InternalIntegrality(
            "solved expansive map is not a homomorphism".into(),
        ));
    }
    Ok(map)
}

/// `x -> s x + u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantMap {
    pub s: BigInt,
    pub u: RatVector,
}

impl EquivariantMap {
    pub fn apply(&self, x: &[BigRational]) -> RatVector {
        let s = BigRational::from_integer(self.s.clone());
        x.iter().zip(&self.u).map(|(a, u)| a * &s + u).collect()
    }
}

fn grid(n: usize) -> Vec<RatVector> {
    let r = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
    let values = [r(-1, 1), r(-1, 2), r(0, 1), r(1, 3), r(3, 2)];
    if n <= 3 {
        let mut pts = vec![Vec::new()];
        for _ in 0..n {
            pts = pts
                .into_iter()
                .flat_map(|p: RatVector| {
                    values.iter().map(move |v| {
                        let mut p = p.clone();
                        p.push(v.clone());
                        p
                    })
                })
                .collect();
        }
        return pts;
    }
    let mut pts = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for a in &values {
                for b in &values {
                    let mut p = vec![BigRational::zero(); n];
                    p[i] = a.clone();
                    p[j] = b.clone();
                    pts.push(p);
                }
            }
        }
    }
    pts
}

/// The `phi`-equivariant affine map `x -> s x + u` with
/// `u = (1/|F|) sum_f d(f)` and `d(g) = v_phi(g) - s v_g`.
pub fn solve_equivariant_translation(
    g: &CrystallographicGroup,
    phi: &ExpansiveMap,
) -> Result<EquivariantMap> {
    if g.translations().is_none() {
        return Err(Error::PreconditionViolated("group has no affine realisation".into()));
    }
    let n = g.rank();
    let s = BigRational::from_integer(phi.s.clone());
    let d = |x: &Element| -> RatVector {
        let t = g.translation_part(x).expect("translations present");
        let tp = g.translation_part(&phi.apply(x)).expect("translations present");
        tp.iter().zip(&t).map(|(a, b)| a - b * &s).collect()
    };
    for i in 0..n {
        let mut a = vec![BigInt::zero(); n];
        a[i] = BigInt::from(1);
        let v = d(&g.element(a, g.holonomy().identity()));
        if v.iter().any(|x| !x.is_zero()) {
            return Err(Error::DerivationNotFactoring(format!("lattice basis vector {i}")));
        }
    }
    let q = BigRational::from_integer(BigInt::from(g.holonomy().order()));
    let mut u = vec![BigRational::zero(); n];
    for f in 0..g.holonomy().order() {
        let df = d(&g.element(vec![BigInt::zero(); n], f));
        u = u.iter().zip(&df).map(|(a, b)| a + b).collect();
    }
    let map = EquivariantMap {
        s: phi.s.clone(),
        u: u.into_iter().map(|x| x / &q).collect(),
    };
    let mut gens: Vec<Element> = (0..g.holonomy().order())
        .map(|f| g.element(vec![BigInt::zero(); n], f))
        .collect();
    for i in 0..n {
        let mut a = vec![BigInt::zero(); n];
        a[i] = BigInt::from(1);
        gens.push(g.element(a, g.holonomy().identity()));
    }
    for x in grid(n) {
        let fx = map.apply(&x);
        for h in &gens {
            let lhs = map.apply(&g.act(h, &x).expect("translations present"));
            let rhs = g.act(&phi.apply(h), &fx).expect("translations present");
            if lhs != rhs {
                return Err(Error::InternalIntegrality(
                    "averaged translation is not equivariant".into(),
                ));
            }
        }
    }
    Ok(map)
}
