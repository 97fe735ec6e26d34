use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Value};
use witt_core::burnside::VirtualCyclicSet;
use witt_core::crysto::{self, BarComplex};
use witt_core::endo::{companion, EndoObject};
use witt_core::json::{
    to_string, BinomJson, BurnsideJson, GhostJson, GroupJson, MatrixJson, OrbitJson, SeriesJson,
};
use witt_core::witt::{MulEngine, WittVector};
use witt_core::{Elem, Error, GhostVector, OrbitCoords, Result, Ring, UnitSeries};

use crate::input;
use crate::{
    BurnsideArgs, BurnsideOp, Command, CrystoArgs, CrystoOp, EndoArgs, EndoOp, Engine, WittArgs,
    WittOp,
};

pub fn run(cmd: Command) -> Result<String> {
    match cmd {
        Command::Witt(a) => witt(a),
        Command::Endo(a) => endo(a),
        Command::Burnside(a) => burnside(a),
        Command::Crysto(a) => crysto(a),
    }
}

fn required_trunc(t: Option<usize>) -> Result<usize> {
    t.ok_or_else(|| Error::InvalidInput("--trunc N is required".into()))
}

fn fit(len: usize, trunc: usize) -> Result<()> {
    if len < trunc {
        return Err(Error::InvalidInput(format!(
            "input has truncation {len}, below --trunc {trunc}"
        )));
    }
    Ok(())
}

fn series_in(j: &SeriesJson, trunc: usize) -> Result<WittVector> {
    let u = j.to_series()?;
    fit(u.trunc(), trunc)?;
    Ok(WittVector::new(u.truncate(trunc)?))
}

fn series_out(u: &UnitSeries) -> Result<String> {
    Ok(to_string(&SeriesJson::from_series(u)?))
}

fn witt(a: WittArgs) -> Result<String> {
    let n = required_trunc(a.trunc)?;
    let one = |files: &[String]| -> Result<WittVector> { series_in(&input::one(files)?, n) };
    let two = |files: &[String]| -> Result<(WittVector, WittVector)> {
        let (x, y): (SeriesJson, SeriesJson) = input::two(files)?;
        Ok((series_in(&x, n)?, series_in(&y, n)?))
    };
    let out = match a.op {
        WittOp::Add { files } => {
            let (x, y) = two(&files)?;
            x.add(&y)?
        }
        WittOp::Neg { files } => one(&files)?.neg(),
        WittOp::Mul { files } => {
            let (x, y) = two(&files)?;
            let engine = match a.engine {
                Engine::Orbit => MulEngine::Orbit,
                Engine::Universal => MulEngine::Universal,
            };
            x.mul_with(&y, engine)?
        }
        WittOp::Ghost { files } => {
            return Ok(to_string(&GhostJson::from_coords(&one(&files)?.ghost())?));
        }
        WittOp::Unghost { files } => {
            let g: GhostVector = input::one::<GhostJson>(&files)?.to_coords()?;
            fit(g.len(), n)?;
            WittVector::new(g.truncate(n)?.unghost()?)
        }
        WittOp::Orbit { files } => {
            let c = one(&files)?.series().to_orbit_coords();
            return Ok(to_string(&OrbitJson::from_coords(&c)?));
        }
        WittOp::Unorbit { files } => {
            let c: OrbitCoords = input::one::<OrbitJson>(&files)?.to_coords()?;
            fit(c.len(), n)?;
            let c = OrbitCoords::new(c.ring().clone(), c.entries()[..n].to_vec())?;
            WittVector::new(c.to_series())
        }
        WittOp::Binom { files } => {
            let c = one(&files)?.series().to_binomial_coords()?;
            return Ok(to_string(&BinomJson::from_coords(&c)?));
        }
        WittOp::Frob { n: k, files } => one(&files)?.frobenius(k)?,
        WittOp::Versch { n: k, files } => one(&files)?.verschiebung(k)?,
        WittOp::Lambda { n: k, files } => one(&files)?.lambda(k)?,
    };
    series_out(out.series())
}

fn endo(a: EndoArgs) -> Result<String> {
    let matrix = |files: &[String]| -> Result<EndoObject> { input::one::<MatrixJson>(files)?.to_endo() };
    match a.op {
        EndoOp::Charpoly { files } => {
            let f = matrix(&files)?;
            let p = f.char_poly_rev();
            series_out(&p.to_series(a.trunc.unwrap_or(f.dim())))
        }
        EndoOp::Traces { n, files } => Ok(to_string(&GhostJson::from_coords(&matrix(&files)?.trace_seq(n))?)),
        EndoOp::Tensor { files } => {
            let (x, y): (MatrixJson, MatrixJson) = input::two(&files)?;
            Ok(to_string(&MatrixJson::from_endo(&x.to_endo()?.tensor_product(&y.to_endo()?)?)?))
        }
        EndoOp::Companion { files } => {
            let u = input::one::<SeriesJson>(&files)?.to_series()?;
            Ok(to_string(&MatrixJson::from_endo(&companion(u.ring(), u.coeffs())?)?))
        }
    }
}

fn burnside(a: BurnsideArgs) -> Result<String> {
    let set = |files: &[String]| -> Result<VirtualCyclicSet> { input::one::<BurnsideJson>(files)?.to_set() };
    let out = match a.op {
        BurnsideOp::Ghost { n, files } => {
            let g = set(&files)?.ghost(n);
            let v = GhostVector::new(Ring::Integers, g.into_iter().map(Elem::Int).collect())?;
            return Ok(to_string(&GhostJson::from_coords(&v)?));
        }
        BurnsideOp::Mul { files } => {
            let (x, y): (BurnsideJson, BurnsideJson) = input::two(&files)?;
            x.to_set()?.mul(&y.to_set()?)
        }
        BurnsideOp::Frob { n, files } => set(&files)?.frobenius(n)?,
        BurnsideOp::Versch { n, files } => set(&files)?.verschiebung(n)?,
        BurnsideOp::Embed { n, files } => return series_out(set(&files)?.embed_to_witt(n).series()),
        BurnsideOp::Invert { files } => {
            let g = input::one::<GhostJson>(&files)?.to_coords()?;
            if g.ring() != &Ring::Integers {
                return Err(Error::InvalidInput("fixed-point counts must be integers".into()));
            }
            let counts: Vec<BigInt> = g
                .entries()
                .iter()
                .map(|e| match e {
                    Elem::Int(x) => x.clone(),
                    _ => unreachable!("integer ring"),
                })
                .collect();
            VirtualCyclicSet::from_fixed_points(&counts)?
        }
    };
    Ok(to_string(&BurnsideJson::from_set(&out)))
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn crysto(a: CrystoArgs) -> Result<String> {
    let group = |f: &str| -> Result<crysto::CrystallographicGroup> { input::file::<GroupJson>(f)?.to_group() };
    let value: Value = match a.op {
        CrystoOp::Lattice { p, gx, gy } => {
            let m = crysto::lattice_contract(p, gx, gy)?;
            json!({"S": m.s, "T": m.t})
        }
        CrystoOp::Expansive { file, s } => {
            let s: BigInt = s
                .parse()
                .map_err(|_| Error::InvalidInput(format!("`{s}` is not an integer")))?;
            let g = group(&file)?;
            let phi = crysto::solve_expansive(&g, &s)?;
            let b: BTreeMap<String, Vec<String>> =
                phi.b.iter().enumerate().map(|(f, v)| (f.to_string(), strings(v))).collect();
            let mut out = json!({"s": s.to_string(), "b": b});
            if g.translations().is_some() {
                let f = crysto::solve_equivariant_translation(&g, &phi)?;
                let u: Vec<String> = f
                    .u
                    .iter()
                    .map(|x| Ring::Rationals.format(&Elem::Rat(x.clone())))
                    .collect();
                out["u"] = json!(u);
            }
            out
        }
        CrystoOp::Cohomology { file, k } => {
            let (f, rep) = input::file::<GroupJson>(&file)?.to_holonomy()?;
            let h = BarComplex::new(&f, &rep).cohomology(k)?;
            json!({
                "degree": k,
                "free_rank": h.free_rank,
                "torsion": strings(&h.torsion),
                "group": h.to_string(),
            })
        }
        CrystoOp::Prime { order, bound } => json!({"prime": crysto::admissible_prime(order, bound)?}),
        CrystoOp::Fixed { file } => {
            let (_, rep) = input::file::<GroupJson>(&file)?.to_holonomy()?;
            let basis: Vec<Vec<String>> =
                crysto::fixed_sublattice(&rep).iter().map(|v| strings(v)).collect();
            json!({"basis": basis})
        }
    };
    Ok(to_string(&value))
}
