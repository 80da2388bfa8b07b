//! JSON form of a dg-module: algebra, components, and matrices whose entries
//! are `[numerator, denominator]` pairs.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{Bideg, DgError, DgModule, Generator, KoszulAlgebra, Window};
use crate::linalg::{Matrix, Q};

#[derive(Serialize, Deserialize)]
struct AlgebraDoc {
    ext: Vec<Generator>,
    sym: Vec<Generator>,
    diff: Vec<Vec<Value>>,
    #[serde(default = "default_weight")]
    weight: i64,
}

fn default_weight() -> i64 {
    2
}

#[derive(Serialize, Deserialize)]
struct MapDoc {
    source: Bideg,
    matrix: Vec<Vec<Value>>,
}

#[derive(Serialize, Deserialize)]
struct ComponentDoc {
    bidegree: Bideg,
    dim: usize,
}

#[derive(Serialize, Deserialize)]
struct ModuleDoc {
    algebra: AlgebraDoc,
    window: Window,
    components: Vec<ComponentDoc>,
    differential: Vec<MapDoc>,
    actions: Vec<Vec<MapDoc>>,
}

fn int_value(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(x.to_string()),
    }
}

fn parse_int(v: &Value) -> Result<BigInt, DgError> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| DgError::Json(format!("bad integer {n}"))),
        Value::String(s) => s.parse().map_err(|_| DgError::Json(format!("bad integer {s}"))),
        other => Err(DgError::Json(format!("expected integer, got {other}"))),
    }
}

fn matrix_doc(m: &Matrix) -> Vec<Vec<Value>> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| Value::Array(vec![int_value(x.numer()), int_value(x.denom())]))
                .collect()
        })
        .collect()
}

fn matrix_from_doc(rows: &[Vec<Value>], shape: (usize, usize)) -> Result<Matrix, DgError> {
    if rows.len() != shape.0 {
        return Err(DgError::Json("matrix row count does not match components".into()));
    }
    let mut out = Vec::with_capacity(rows.len());
    for r in rows {
        let mut row = Vec::with_capacity(r.len());
        for e in r {
            let pair = e.as_array().filter(|a| a.len() == 2).ok_or_else(|| DgError::Json("entry must be [num, den]".into()))?;
            let den = parse_int(&pair[1])?;
            if den == BigInt::from(0) {
                return Err(DgError::Json("zero denominator".into()));
            }
            row.push(Q::new(parse_int(&pair[0])?, den));
        }
        out.push(row);
    }
    Ok(Matrix::from_rows_with_cols(out, shape.1))
}

pub fn module_to_json(m: &DgModule) -> Value {
    let a = m.algebra();
    let maps = |t: &BTreeMap<Bideg, Matrix>| {
        t.iter().map(|(b, x)| MapDoc { source: *b, matrix: matrix_doc(x) }).collect::<Vec<_>>()
    };
    let doc = ModuleDoc {
        algebra: AlgebraDoc {
            ext: a.ext().to_vec(),
            sym: a.sym().to_vec(),
            diff: matrix_doc(a.diff()),
            weight: a.internal_weight(),
        },
        window: m.window(),
        components: m.dims().iter().map(|(b, n)| ComponentDoc { bidegree: *b, dim: *n }).collect(),
        differential: maps(m.d_table()),
        actions: (0..a.n_gens()).map(|g| maps(m.action_table(g))).collect(),
    };
    serde_json::to_value(doc).expect("plain data")
}

pub fn module_from_json(v: &Value) -> Result<DgModule, DgError> {
    let doc: ModuleDoc = serde_json::from_value(v.clone()).map_err(|e| DgError::Json(e.to_string()))?;
    let diff = matrix_from_doc(&doc.algebra.diff, (doc.algebra.sym.len(), doc.algebra.ext.len()))?;
    let algebra = Arc::new(KoszulAlgebra::with_weight(doc.algebra.ext, doc.algebra.sym, diff, doc.algebra.weight)?);
    let dims: BTreeMap<Bideg, usize> = doc.components.iter().map(|c| (c.bidegree, c.dim)).collect();
    let dim = |b: Bideg| dims.get(&b).copied().unwrap_or(0);
    let read = |maps: &[MapDoc], p: Bideg| -> Result<BTreeMap<Bideg, Matrix>, DgError> {
        maps.iter()
            .map(|md| {
                let shape = (dim((md.source.0 + p.0, md.source.1 + p.1)), dim(md.source));
                Ok((md.source, matrix_from_doc(&md.matrix, shape)?))
            })
            .collect()
    };
    let d = read(&doc.differential, (1, 0))?;
    if doc.actions.len() != algebra.n_gens() {
        return Err(DgError::Json("one action list per generator expected".into()));
    }
    let actions = doc
        .actions
        .iter()
        .enumerate()
        .map(|(g, maps)| read(maps, algebra.generator(g).bidegree))
        .collect::<Result<Vec<_>, _>>()?;
    DgModule::new(algebra, dims, d, actions, doc.window)
}
