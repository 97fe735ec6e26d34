//! Crystallographic groups `1 -> Z^n -> G -> F -> 1` given by a finite group
//! table, an integral representation and a normalised 2-cocycle.
//!
//! Elements of `G` are pairs `(a, f)` with multiplication
//! `(a, f)(b, g) = (a + f.b + c(f, g), fg)`. An optional affine realisation
//! assigns to each `f` a rational translation `v_f`; `(a, f)` then acts on
//! `Q^n` by `x -> rho(f) x + v_f + a`, and the cocycle is
//! `c(f, g) = v_f + rho(f) v_g - v_(fg)`.

mod bar;
mod expansive;
mod lattice;
pub mod snf;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use bar::{BarComplex, BarResolution, Chain, Cohomology, MAX_COCHAIN_DIM};
pub use expansive::{solve_equivariant_translation, solve_expansive, EquivariantMap, ExpansiveMap};
pub use lattice::{admissible_prime, average, fixed_sublattice, lattice_contract, ContractingMap};
pub use snf::{smith_normal_form, IntMatrix, Smith};

/// A lattice vector.
pub type Vector = Vec<BigInt>;
/// A rational vector.
pub type RatVector = Vec<BigRational>;

#[cfg(test)]
pub(crate) fn ints(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

pub(crate) fn add_vec(a: &[BigInt], b: &[BigInt]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn mul_rat(m: &IntMatrix, v: &[BigRational]) -> RatVector {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .zip(v)
                .map(|(a, x)| x * BigRational::from_integer(a.clone()))
                .sum()
        })
        .collect()
}

/// Multiplication table of a finite group on `0..q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTable {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroupTable {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let q = table.len();
        if q == 0 {
            return Err(Error::invalid("a group has at least one element"));
        }
        if table.iter().any(|r| r.len() != q || r.iter().any(|&x| x >= q)) {
            return Err(Error::invalid("group table is not a closed q x q table"));
        }
        let identity = (0..q)
            .find(|&e| (0..q).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::invalid("group table has no identity"))?;
        let mut inverse = Vec::with_capacity(q);
        for g in 0..q {
            let inv = (0..q)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::invalid(format!("element {g} has no inverse")))?;
            inverse.push(inv);
        }
        for a in 0..q {
            for b in 0..q {
                for c in 0..q {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::invalid(format!(
                            "group table is not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroupTable {
            table,
            identity,
            inverse,
        })
    }

    /// `Z/q` with `i * j = i + j mod q`.
    pub fn cyclic(q: usize) -> Self {
        let table = (0..q).map(|i| (0..q).map(|j| (i + j) % q).collect()).collect();
        Self::new(table).expect("cyclic tables are groups")
    }

    /// `A x B` with `(a, b)` at index `a * |B| + b`.
    pub fn direct_product(a: &Self, b: &Self) -> Self {
        let (p, q) = (a.order(), b.order());
        let table = (0..p * q)
            .map(|x| {
                (0..p * q)
                    .map(|y| a.mul(x / q, y / q) * q + b.mul(x % q, y % q))
                    .collect()
            })
            .collect();
        Self::new(table).expect("products of groups are groups")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// Elements other than the identity, in index order.
    pub fn non_identity(&self) -> Vec<usize> {
        (0..self.order()).filter(|&g| g != self.identity).collect()
    }
}

/// A homomorphism `F -> GL_n(Z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralRepresentation {
    rank: usize,
    matrices: Vec<IntMatrix>,
}

impl IntegralRepresentation {
    /// Validates shapes, `rho(e) = I` and `rho(f) rho(g) = rho(fg)`. The
    /// latter with `g = f^-1` makes every matrix invertible over `Z`.
    pub fn new(group: &FiniteGroupTable, rank: usize, matrices: Vec<IntMatrix>) -> Result<Self> {
        if matrices.len() != group.order() {
            return Err(Error::invalid(format!(
                "{} matrices for a group of order {}",
                matrices.len(),
                group.order()
            )));
        }
        if matrices.iter().any(|m| m.rows() != rank || m.cols() != rank) {
            return Err(Error::invalid(format!("representation matrices must be {rank} x {rank}")));
        }
        if matrices[group.identity()] != IntMatrix::identity(rank) {
            return Err(Error::invalid("the identity must act trivially"));
        }
        for f in 0..group.order() {
            for g in 0..group.order() {
                if matrices[f].mul(&matrices[g]) != matrices[group.mul(f, g)] {
                    return Err(Error::invalid(format!(
                        "representation is not multiplicative at ({f}, {g})"
                    )));
                }
            }
        }
        Ok(IntegralRepresentation { rank, matrices })
    }

    /// The trivial action on `Z^n`.
    pub fn trivial(group: &FiniteGroupTable, rank: usize) -> Self {
        Self::new(group, rank, vec![IntMatrix::identity(rank); group.order()])
            .expect("the trivial action is a representation")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Order of the acting group.
    pub fn order(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrix(&self, f: usize) -> &IntMatrix {
        &self.matrices[f]
    }

    pub fn act(&self, f: usize, v: &[BigInt]) -> Vector {
        self.matrices[f].mul_vec(v)
    }

    pub fn is_faithful(&self) -> bool {
        let id = IntMatrix::identity(self.rank);
        self.matrices.iter().filter(|m| **m == id).count() == 1
    }

    /// `sum_f rho(f)^T rho(f)`, positive definite and preserved by every
    /// `rho(f)`.
    pub fn invariant_form(&self) -> IntMatrix {
        let mut q = IntMatrix::zeros(self.rank, self.rank);
        for m in &self.matrices {
            q = q.add(&m.transpose().mul(m));
        }
        q
    }
}

/// A normalised 2-cocycle `F x F -> Z^n`, stored as a `q x q` table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCocycle {
    values: Vec<Vec<Vector>>,
}

impl TwoCocycle {
    pub fn zero(group: &FiniteGroupTable, rank: usize) -> Self {
        let q = group.order();
        TwoCocycle {
            values: vec![vec![vec![BigInt::zero(); rank]; q]; q],
        }
    }

    /// Validates normalisation and the cocycle identity
    /// `c(f, g) + c(fg, h) = f.c(g, h) + c(f, gh)`.
    pub fn new(
        group: &FiniteGroupTable,
        rep: &IntegralRepresentation,
        values: Vec<Vec<Vector>>,
    ) -> Result<Self> {
        let q = group.order();
        let n = rep.rank();
        if values.len() != q
            || values
                .iter()
                .any(|r| r.len() != q || r.iter().any(|v| v.len() != n))
        {
            return Err(Error::invalid("cocycle must be a q x q table of rank-n vectors"));
        }
        let e = group.identity();
        for f in 0..q {
            if values[e][f].iter().any(|x| !x.is_zero()) || values[f][e].iter().any(|x| !x.is_zero())
            {
                return Err(Error::invalid("cocycle is not normalised"));
            }
        }
        for f in 0..q {
            for g in 0..q {
                for h in 0..q {
                    let lhs = add_vec(&values[f][g], &values[group.mul(f, g)][h]);
                    let rhs = add_vec(&rep.act(f, &values[g][h]), &values[f][group.mul(g, h)]);
                    if lhs != rhs {
                        return Err(Error::invalid(format!(
                            "cocycle identity fails at ({f}, {g}, {h})"
                        )));
                    }
                }
            }
        }
        Ok(TwoCocycle { values })
    }

    pub fn get(&self, f: usize, g: usize) -> &Vector {
        &self.values[f][g]
    }
}

/// An element `(a, f)` of a crystallographic group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    pub lattice: Vector,
    pub holonomy: usize,
}

/// Extension data of a crystallographic group, optionally with an affine
/// realisation.
#[derive(Clone, Debug)]
pub struct CrystallographicGroup {
    group: FiniteGroupTable,
    rep: IntegralRepresentation,
    cocycle: TwoCocycle,
    translations: Option<Vec<RatVector>>,
}

impl CrystallographicGroup {
    /// The representation must be faithful.
    pub fn new(
        group: FiniteGroupTable,
        rep: IntegralRepresentation,
        cocycle: TwoCocycle,
    ) -> Result<Self> {
        if !rep.is_faithful() {
            return Err(Error::invalid("holonomy representation is not faithful"));
        }
        Ok(CrystallographicGroup {
            group,
            rep,
            cocycle,
            translations: None,
        })
    }

    /// Builds the group from translation parts `v_f`, deriving the cocycle.
    /// Requires `v_e = 0` and integral `v_f + rho(f) v_g - v_(fg)`.
    pub fn from_affine(
        group: FiniteGroupTable,
        rep: IntegralRepresentation,
        translations: Vec<RatVector>,
    ) -> Result<Self> {
        let q = group.order();
        let n = rep.rank();
        if translations.len() != q || translations.iter().any(|v| v.len() != n) {
            return Err(Error::invalid("one rank-n translation per group element is required"));
        }
        let mut values = vec![vec![Vec::new(); q]; q];
        for f in 0..q {
            for g in 0..q {
                let mv = mul_rat(rep.matrix(f), &translations[g]);
                let fg = group.mul(f, g);
                let mut c = Vec::with_capacity(n);
                for i in 0..n {
                    let x = &translations[f][i] + &mv[i] - &translations[fg][i];
                    if !x.is_integer() {
                        return Err(Error::invalid(format!(
                            "translations do not define an integral cocycle at ({f}, {g})"
                        )));
                    }
                    c.push(x.to_integer());
                }
                values[f][g] = c;
            }
        }
        let cocycle = TwoCocycle::new(&group, &rep, values)?;
        let mut g = Self::new(group, rep, cocycle)?;
        g.translations = Some(translations);
        Ok(g)
    }

    /// Attaches translations to existing data after checking they induce
    /// exactly the stored cocycle.
    pub fn with_translations(self, translations: Vec<RatVector>) -> Result<Self> {
        let derived = Self::from_affine(self.group.clone(), self.rep.clone(), translations)?;
        if derived.cocycle != self.cocycle {
            return Err(Error::invalid("translations do not match the cocycle"));
        }
        Ok(derived)
    }

    /// `Z^n x| Z/2` with `-1` acting, realised by `x -> -x`.
    pub fn split_sign(rank: usize) -> Self {
        let f = FiniteGroupTable::cyclic(2);
        let minus = IntMatrix::identity(rank).neg();
        let rep = IntegralRepresentation::new(&f, rank, vec![IntMatrix::identity(rank), minus])
            .expect("sign action");
        let zero = vec![vec![BigRational::zero(); rank]; 2];
        Self::from_affine(f, rep, zero).expect("split extension")
    }

    /// The glide-reflection group pgg in lattice coordinates: holonomy
    /// `{e, p, q, pq}` with `p = diag(-1, 1)`, `q = diag(1, -1)` and
    /// translations `v_p = (0, 1/2)`, `v_q = (1/2, 0)`, `v_pq = (-1/2, 1/2)`.
    pub fn pgg() -> Self {
        let f = FiniteGroupTable::direct_product(&FiniteGroupTable::cyclic(2), &FiniteGroupTable::cyclic(2));
        // Index a * 2 + b: 0 = e, 1 = q, 2 = p, 3 = pq.
        let m = |a: i64, b: i64| IntMatrix::from_rows(&[vec![a, 0], vec![0, b]]);
        let rep = IntegralRepresentation::new(&f, 2, vec![m(1, 1), m(1, -1), m(-1, 1), m(-1, -1)])
            .expect("pgg holonomy");
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let zero = BigRational::zero();
        let translations = vec![
            vec![zero.clone(), zero.clone()],
            vec![half.clone(), zero.clone()],
            vec![zero.clone(), half.clone()],
            vec![-half.clone(), half],
        ];
        Self::from_affine(f, rep, translations).expect("pgg data")
    }

    /// The lattice `Z^n` itself.
    pub fn lattice(rank: usize) -> Self {
        let f = FiniteGroupTable::cyclic(1);
        let rep = IntegralRepresentation::trivial(&f, rank);
        Self::from_affine(f, rep, vec![vec![BigRational::zero(); rank]]).expect("free abelian")
    }

    pub fn holonomy(&self) -> &FiniteGroupTable {
        &self.group
    }

    pub fn representation(&self) -> &IntegralRepresentation {
        &self.rep
    }

    pub fn cocycle(&self) -> &TwoCocycle {
        &self.cocycle
    }

    pub fn translations(&self) -> Option<&[RatVector]> {
        self.translations.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.rep.rank()
    }

    pub fn element(&self, lattice: Vector, holonomy: usize) -> Element {
        assert_eq!(lattice.len(), self.rank());
        Element { lattice, holonomy }
    }

    pub fn identity(&self) -> Element {
        self.element(vec![BigInt::zero(); self.rank()], self.group.identity())
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let (f, g) = (x.holonomy, y.holonomy);
        let a = add_vec(
            &add_vec(&x.lattice, &self.rep.act(f, &y.lattice)),
            self.cocycle.get(f, g),
        );
        Element {
            lattice: a,
            holonomy: self.group.mul(f, g),
        }
    }

    /// Translation part `v_f + a` of the affine map of `(a, f)`.
    pub fn translation_part(&self, x: &Element) -> Option<RatVector> {
        let t = self.translations.as_ref()?;
        Some(
            t[x.holonomy]
                .iter()
                .zip(&x.lattice)
                .map(|(v, a)| v + BigRational::from_integer(a.clone()))
                .collect(),
        )
    }

    /// `rho(f) x + v_f + a`.
    pub fn act(&self, g: &Element, x: &[BigRational]) -> Option<RatVector> {
        let t = self.translation_part(g)?;
        Some(
            mul_rat(self.rep.matrix(g.holonomy), x)
                .into_iter()
                .zip(t)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// All elements with lattice part in `{-1, 0, 1}^n`.
    pub fn sample_elements(&self) -> Vec<Element> {
        let n = self.rank();
        let mut out = Vec::new();
        for code in 0..3usize.pow(n as u32) {
            let a: Vector = (0..n)
                .map(|i| BigInt::from((code / 3usize.pow(i as u32)) % 3) - 1)
                .collect();
            for f in 0..self.group.order() {
                out.push(self.element(a.clone(), f));
            }
        }
        out
    }
}
