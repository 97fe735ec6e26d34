//! JSON forms of rings, series, coordinate vectors, matrices, virtual
//! cyclic sets and crystallographic group data.
//!
//! Ring elements are decimal strings (`"p/q"` over `Q`). Objects are written
//! with a fixed key order, so serialising a parsed canonical document gives
//! back the same bytes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{Elem, Ring};
use crate::burnside::VirtualCyclicSet;
use crate::crysto::{
    CrystallographicGroup, FiniteGroupTable, IntMatrix, IntegralRepresentation, TwoCocycle,
};
use crate::endo::EndoObject;
use crate::error::{Error, Result};
use crate::series::{BinomialCoords, GhostVector, OrbitCoords, UnitSeries};

/// An integer written either as a JSON number or as a decimal string.
/// Serialises as a number when it fits in an `i64`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) => s.serialize_i64(v),
            Err(_) => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = JsonInt;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                write!(f, "an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<JsonInt, E> {
                v.trim()
                    .parse()
                    .map(JsonInt)
                    .map_err(|_| E::custom(format!("`{v}` is not an integer")))
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<String>,
}

impl RingJson {
    pub fn from_ring(r: &Ring) -> Result<Self> {
        let (kind, modulus) = match r {
            Ring::Integers => ("int", None),
            Ring::Rationals => ("rat", None),
            Ring::Modular(m) => ("mod", Some(m.to_string())),
            Ring::MultiPoly(_) => {
                return Err(Error::invalid("polynomial rings have no JSON form"))
            }
        };
        Ok(RingJson {
            kind: kind.into(),
            modulus,
        })
    }

    pub fn to_ring(&self) -> Result<Ring> {
        match (self.kind.as_str(), &self.modulus) {
            ("int", None) => Ok(Ring::Integers),
            ("rat", None) => Ok(Ring::Rationals),
            ("mod", Some(m)) => {
                let m: BigInt = m
                    .trim()
                    .parse()
                    .map_err(|_| Error::invalid(format!("bad modulus `{m}`")))?;
                Ring::modular(m)
            }
            _ => Err(Error::invalid(format!("unknown ring descriptor `{}`", self.kind))),
        }
    }
}

fn format_all(r: &Ring, xs: &[Elem]) -> Vec<String> {
    xs.iter().map(|x| r.format(x)).collect()
}

fn parse_all(r: &Ring, xs: &[String]) -> Result<Vec<Elem>> {
    xs.iter().map(|x| r.parse(x)).collect()
}

fn check_len(trunc: usize, len: usize) -> Result<()> {
    if trunc != len {
        return Err(Error::invalid(format!(
            "trunc is {trunc} but {len} entries are given"
        )));
    }
    Ok(())
}

/// `{"ring": .., "trunc": N, "coeffs": [a_1, .., a_N]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesJson {
    pub ring: RingJson,
    pub trunc: usize,
    pub coeffs: Vec<String>,
}

impl SeriesJson {
    pub fn from_series(u: &UnitSeries) -> Result<Self> {
        Ok(SeriesJson {
            ring: RingJson::from_ring(u.ring())?,
            trunc: u.trunc(),
            coeffs: format_all(u.ring(), u.coeffs()),
        })
    }

    pub fn to_series(&self) -> Result<UnitSeries> {
        check_len(self.trunc, self.coeffs.len())?;
        let r = self.ring.to_ring()?;
        UnitSeries::new(r.clone(), parse_all(&r, &self.coeffs)?)
    }
}

macro_rules! coords_json {
    ($name:ident, $ty:ty, $key:ident) => {
        #[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
        #[serde(deny_unknown_fields)]
        pub struct $name {
            pub ring: RingJson,
            pub trunc: usize,
            pub $key: Vec<String>,
        }

        impl $name {
            pub fn from_coords(v: &$ty) -> Result<Self> {
                Ok($name {
                    ring: RingJson::from_ring(v.ring())?,
                    trunc: v.len(),
                    $key: format_all(v.ring(), v.entries()),
                })
            }

            pub fn to_coords(&self) -> Result<$ty> {
                check_len(self.trunc, self.$key.len())?;
                let r = self.ring.to_ring()?;
                <$ty>::new(r.clone(), parse_all(&r, &self.$key)?)
            }
        }
    };
}

coords_json!(GhostJson, GhostVector, ghost);
coords_json!(OrbitJson, OrbitCoords, orbit);
coords_json!(BinomJson, BinomialCoords, binom);

/// `{"ring": .., "dim": d, "rows": [[..], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub ring: RingJson,
    pub dim: usize,
    pub rows: Vec<Vec<String>>,
}

impl MatrixJson {
    pub fn from_endo(f: &EndoObject) -> Result<Self> {
        let r = f.ring();
        Ok(MatrixJson {
            ring: RingJson::from_ring(r)?,
            dim: f.dim(),
            rows: f.rows().iter().map(|row| format_all(r, row)).collect(),
        })
    }

    pub fn to_endo(&self) -> Result<EndoObject> {
        check_len(self.dim, self.rows.len())?;
        let r = self.ring.to_ring()?;
        let rows = self
            .rows
            .iter()
            .map(|row| {
                check_len(self.dim, row.len())?;
                parse_all(&r, row)
            })
            .collect::<Result<Vec<_>>>()?;
        EndoObject::new(r, rows)
    }
}

/// `{"orbits": {"n": multiplicity, ..}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BurnsideJson {
    pub orbits: BTreeMap<u64, JsonInt>,
}

impl BurnsideJson {
    pub fn from_set(x: &VirtualCyclicSet) -> Self {
        BurnsideJson {
            orbits: x.orbits().map(|(n, m)| (n, JsonInt(m.clone()))).collect(),
        }
    }

    pub fn to_set(&self) -> Result<VirtualCyclicSet> {
        if self.orbits.contains_key(&0) {
            return Err(Error::invalid("orbit sizes are positive"));
        }
        Ok(VirtualCyclicSet::from_pairs(
            self.orbits.iter().map(|(&n, m)| (n, m.0.clone())),
        ))
    }
}

/// A crystallographic group file. Element indices are keys `"g"`; cocycle
/// entries are keyed `"f,g"` and missing entries are zero. Without a
/// cocycle the translations determine it; without either the extension
/// splits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub rank: usize,
    pub rep: BTreeMap<usize, Vec<Vec<JsonInt>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cocycle: Option<BTreeMap<String, Vec<JsonInt>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub translations: Option<BTreeMap<usize, Vec<String>>>,
}

fn parse_pair(key: &str, q: usize) -> Result<(usize, usize)> {
    let bad = || Error::invalid(format!("bad cocycle key `{key}`"));
    let (f, g) = key.split_once(',').ok_or_else(bad)?;
    let f: usize = f.trim().parse().map_err(|_| bad())?;
    let g: usize = g.trim().parse().map_err(|_| bad())?;
    if f >= q || g >= q {
        return Err(bad());
    }
    Ok((f, g))
}

fn parse_rational(s: &str) -> Result<BigRational> {
    match Ring::Rationals.parse(s)? {
        Elem::Rat(q) => Ok(q),
        _ => unreachable!("rationals parse to rationals"),
    }
}

impl GroupJson {
    /// The holonomy table and its action, without the extension data.
    pub fn to_holonomy(&self) -> Result<(FiniteGroupTable, IntegralRepresentation)> {
        let q = self.order;
        if self.table.len() != q {
            return Err(Error::invalid(format!("table has {} rows, order is {q}", self.table.len())));
        }
        let f = FiniteGroupTable::new(self.table.clone())?;
        if let Some(&g) = self.rep.keys().find(|&&g| g >= q) {
            return Err(Error::invalid(format!("matrix for unknown element {g}")));
        }
        let mut mats = Vec::with_capacity(q);
        for g in 0..q {
            let m = self
                .rep
                .get(&g)
                .ok_or_else(|| Error::invalid(format!("no matrix for element {g}")))?;
            if m.len() != self.rank || m.iter().any(|r| r.len() != self.rank) {
                return Err(Error::invalid(format!("matrix {g} is not {0} x {0}", self.rank)));
            }
            let rows = m.iter().map(|r| r.iter().map(|x| x.0.clone()).collect()).collect();
            mats.push(IntMatrix::from_big_rows(rows, self.rank)?);
        }
        let rep = IntegralRepresentation::new(&f, self.rank, mats)?;
        Ok((f, rep))
    }

    pub fn to_group(&self) -> Result<CrystallographicGroup> {
        let q = self.order;
        let (f, rep) = self.to_holonomy()?;
        let translations = match &self.translations {
            None => None,
            Some(t) => {
                let mut out = Vec::with_capacity(q);
                for g in 0..q {
                    let v = t
                        .get(&g)
                        .ok_or_else(|| Error::invalid(format!("no translation for element {g}")))?;
                    check_len(self.rank, v.len())?;
                    out.push(v.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?);
                }
                Some(out)
            }
        };
        match (&self.cocycle, translations) {
            (None, Some(t)) => CrystallographicGroup::from_affine(f, rep, t),
            (c, t) => {
                let mut values = TwoCocycle::zero(&f, self.rank);
                if let Some(c) = c {
                    let mut table = vec![vec![vec![BigInt::from(0); self.rank]; q]; q];
                    for (k, v) in c {
                        let (a, b) = parse_pair(k, q)?;
                        check_len(self.rank, v.len())?;
                        table[a][b] = v.iter().map(|x| x.0.clone()).collect();
                    }
                    values = TwoCocycle::new(&f, &rep, table)?;
                }
                let g = CrystallographicGroup::new(f, rep, values)?;
                match t {
                    Some(t) => g.with_translations(t),
                    None => Ok(g),
                }
            }
        }
    }

    /// The canonical file for `g`: nonzero cocycle entries only, and
    /// translations when present.
    pub fn from_group(g: &CrystallographicGroup) -> Self {
        let f = g.holonomy();
        let q = f.order();
        let rank = g.rank();
        let rep = (0..q)
            .map(|e| {
                let m = g.representation().matrix(e);
                let rows = (0..rank)
                    .map(|i| m.row(i).iter().map(|x| JsonInt(x.clone())).collect())
                    .collect();
                (e, rows)
            })
            .collect();
        let mut cocycle = BTreeMap::new();
        for a in 0..q {
            for b in 0..q {
                let v = g.cocycle().get(a, b);
                if v.iter().any(|x| x != &BigInt::from(0)) {
                    cocycle.insert(format!("{a},{b}"), v.iter().map(|x| JsonInt(x.clone())).collect());
                }
            }
        }
        let translations = g.translations().map(|t| {
            t.iter()
                .enumerate()
                .map(|(e, v)| (e, v.iter().map(|x| Ring::Rationals.format(&Elem::Rat(x.clone()))).collect()))
                .collect()
        });
        GroupJson {
            order: q,
            table: f.table().to_vec(),
            rank,
            rep,
            cocycle: Some(cocycle),
            translations,
        }
    }
}

/// Parses a JSON document.
pub fn from_str<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::invalid(format!("malformed JSON: {e}")))
}

/// Compact JSON with a trailing newline.
pub fn to_string<T: Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string(x).expect("JSON values serialise");
    s.push('\n');
    s
}
