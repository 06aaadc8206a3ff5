//! JSON manifold description files.
//!
//! ```json
//! {"genus": 2, "cone_points": [[5, 1, 0], [5, 4, 0]], "obstruction": [-1, 0]}
//! ```
//!
//! `monodromy` is an optional list of `2g` matrices given as rows. Integers
//! may be JSON numbers or decimal strings (for values beyond 64 bits).

use std::path::Path;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Deserialize;
use serde_json::Value;

use seifert4::exactmat::IntMatrix;
use seifert4::seifert::{ConePoint, SeifertData};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ManifoldFile {
    genus: usize,
    cone_points: Vec<[Value; 3]>,
    obstruction: [Value; 2],
    #[serde(default)]
    monodromy: Option<Vec<[[Value; 2]; 2]>>,
}

fn int(v: &Value, what: &str) -> Result<BigInt, String> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from))
            .ok_or_else(|| format!("{}: {} is not an integer", what, n)),
        Value::String(s) => s.trim().parse().map_err(|_| format!("{}: {:?} is not an integer", what, s)),
        other => Err(format!("{}: expected an integer, got {}", what, other)),
    }
}

pub fn parse(text: &str) -> Result<SeifertData, String> {
    let file: ManifoldFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let mut cone_points = Vec::with_capacity(file.cone_points.len());
    for (i, [m, a, b]) in file.cone_points.iter().enumerate() {
        let what = format!("cone point {}", i + 1);
        let m = int(m, &what)?
            .to_u64()
            .ok_or_else(|| format!("{}: order must be a non-negative 64-bit integer", what))?;
        cone_points.push(ConePoint {
            m,
            a: int(a, &what)?,
            b: int(b, &what)?,
        });
    }
    let obstruction = (int(&file.obstruction[0], "obstruction")?, int(&file.obstruction[1], "obstruction")?);
    let monodromy = match file.monodromy {
        None => vec![IntMatrix::identity(2); 2 * file.genus],
        Some(list) => list
            .iter()
            .enumerate()
            .map(|(i, rows)| {
                let what = format!("monodromy matrix {}", i + 1);
                let entries = rows
                    .iter()
                    .flatten()
                    .map(|v| int(v, &what))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(IntMatrix::from_entries(2, 2, entries).expect("four entries"))
            })
            .collect::<Result<Vec<_>, String>>()?,
    };
    Ok(SeifertData {
        genus: file.genus,
        cone_points,
        obstruction,
        monodromy,
    })
}

pub fn read(path: &Path) -> Result<SeifertData, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))?;
    parse(&text).map_err(|e| format!("{}: {}", path.display(), e))
}

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
pub fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(x.to_string()),
    }
}

pub fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(int_json).collect()))
            .collect(),
    )
}

/// Manifold file text with keys in the documented order.
pub fn to_json(data: &SeifertData) -> Value {
    let mut map = serde_json::Map::new();
    map.insert("genus".into(), Value::from(data.genus));
    map.insert(
        "cone_points".into(),
        Value::Array(
            data.cone_points
                .iter()
                .map(|c| Value::Array(vec![Value::from(c.m), int_json(&c.a), int_json(&c.b)]))
                .collect(),
        ),
    );
    map.insert(
        "obstruction".into(),
        Value::Array(vec![int_json(&data.obstruction.0), int_json(&data.obstruction.1)]),
    );
    map.insert("monodromy".into(), Value::Array(data.monodromy.iter().map(matrix_json).collect()));
    Value::Object(map)
}
