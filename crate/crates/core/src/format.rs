//! The `AlgebraFile` JSON format.
//!
//! ```json
//! {
//!   "field": "Q",
//!   "dim": 2,
//!   "labels": ["e11", "e12"],
//!   "unit": [1, 0],
//!   "sc": [[0, 0, 0, 1, 1], [0, 1, 1, 1, 1]],
//!   "levi": [{"size": 1, "units": [[1, 0]]}],
//!   "subspaces": {"B": [[0, 1]]},
//!   "elements": {"e": [1, 0]}
//! }
//! ```
//!
//! Structure constants are `[i, j, k, num, den]` over `Q` and `[i, j, k, c]`
//! over `F_p`. Coordinates are integers or strings such as `"-3/2"`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde_json::Value;

use crate::algebra::{Algebra, MatrixUnitSystem};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{Subspace, Vector};

/// A parsed document: the algebra plus named subspaces and elements.
#[derive(Clone, Debug)]
pub struct AlgebraFile {
    pub algebra: Algebra,
    pub subspaces: BTreeMap<String, Vec<Vector>>,
    pub elements: BTreeMap<String, Vector>,
}

impl AlgebraFile {
    pub fn new(algebra: Algebra) -> Self {
        AlgebraFile {
            algebra,
            subspaces: BTreeMap::new(),
            elements: BTreeMap::new(),
        }
    }

    pub fn with_subspace(mut self, name: &str, s: &Subspace) -> Self {
        self.subspaces.insert(name.to_string(), s.basis().to_vec());
        self
    }

    pub fn with_element(mut self, name: &str, v: Vector) -> Self {
        self.elements.insert(name.to_string(), v);
        self
    }

    /// The named subspace, canonicalized.
    pub fn subspace(&self, name: &str) -> Result<Subspace> {
        let vs = self
            .subspaces
            .get(name)
            .ok_or_else(|| Error::Precondition(format!("no subspace named `{name}` in file")))?;
        Subspace::span(self.algebra.field(), self.algebra.dim(), vs.clone())
    }

    pub fn parse(src: &str) -> Result<Self> {
        let doc: Value = serde_json::from_str(src).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        Parser { src, doc: &doc }.run()
    }

    pub fn read(path: &std::path::Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// Canonical text: fixed key order, structure constants sorted, one
    /// entry per line.
    pub fn emit(&self) -> String {
        let a = &self.algebra;
        let mut out = emit_constants(a.field(), a.labels(), a.unit(), a.structure_constants());
        if let Some(levi) = a.known_levi() {
            let blocks: Vec<String> = levi
                .blocks()
                .iter()
                .map(|b| {
                    let units: Vec<String> = b.units().iter().map(|u| format!("      {}", vector_json(u))).collect();
                    format!("    {{\"size\": {}, \"units\": [\n{}\n    ]}}", b.size(), units.join(",\n"))
                })
                .collect();
            out.push_str(",\n");
            out.push_str(&list_block("levi", &blocks, 2));
        }
        if !self.subspaces.is_empty() {
            let items: Vec<String> = self
                .subspaces
                .iter()
                .map(|(name, vs)| {
                    let rows: Vec<String> = vs.iter().map(|v| format!("      {}", vector_json(v))).collect();
                    if rows.is_empty() {
                        format!("    {}: []", Value::String(name.clone()))
                    } else {
                        format!("    {}: [\n{}\n    ]", Value::String(name.clone()), rows.join(",\n"))
                    }
                })
                .collect();
            let _ = write!(out, ",\n  \"subspaces\": {{\n{}\n  }}", items.join(",\n"));
        }
        if !self.elements.is_empty() {
            let items: Vec<String> = self
                .elements
                .iter()
                .map(|(name, v)| format!("    {}: {}", Value::String(name.clone()), vector_json(v)))
                .collect();
            let _ = write!(out, ",\n  \"elements\": {{\n{}\n  }}", items.join(",\n"));
        }
        out.push_str("\n}\n");
        out
    }
}

/// The `field`, `dim`, `labels`, `unit` and `sc` members, without the
/// closing brace. Usable for constants that do not form an algebra.
fn emit_constants(
    field: FieldSpec,
    labels: &[String],
    unit: Option<&Vector>,
    mut sc: Vec<(usize, usize, usize, Scalar)>,
) -> String {
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"field\": \"{field}\",");
    let _ = writeln!(out, "  \"dim\": {},", labels.len());
    let quoted: Vec<String> = labels.iter().map(|l| Value::String(l.clone()).to_string()).collect();
    let _ = writeln!(out, "  \"labels\": [{}],", quoted.join(", "));
    if let Some(u) = unit {
        let _ = writeln!(out, "  \"unit\": {},", vector_json(u));
    }
    sc.sort_by(|x, y| (x.0, x.1, x.2).cmp(&(y.0, y.1, y.2)));
    let entries: Vec<String> = sc
        .iter()
        .map(|(i, j, k, c)| match field {
            FieldSpec::Rational => {
                let (n, d) = c.to_ratio();
                format!("    [{i}, {j}, {k}, {}, {}]", int_json(&n), int_json(&d))
            }
            FieldSpec::Prime(_) => format!("    [{i}, {j}, {k}, {}]", int_json(&c.to_ratio().0)),
        })
        .collect();
    out.push_str(&list_block("sc", &entries, 2));
    out
}

/// A complete document for raw structure constants, e.g. a corrupted table
/// that failed the associativity check.
pub fn emit_raw(field: FieldSpec, labels: &[String], unit: Option<&Vector>, sc: Vec<(usize, usize, usize, Scalar)>) -> String {
    let mut out = emit_constants(field, labels, unit, sc);
    out.push_str("\n}\n");
    out
}

fn list_block(key: &str, items: &[String], indent: usize) -> String {
    let pad = " ".repeat(indent);
    if items.is_empty() {
        format!("{pad}\"{key}\": []")
    } else {
        format!("{pad}\"{key}\": [\n{}\n{pad}]", items.join(",\n"))
    }
}

fn int_json(n: &BigInt) -> String {
    match n.to_i64() {
        Some(v) => v.to_string(),
        None => format!("\"{n}\""),
    }
}

fn scalar_json(c: &Scalar) -> String {
    let (n, d) = c.to_ratio();
    if d.is_one() {
        int_json(&n)
    } else {
        format!("\"{n}/{d}\"")
    }
}

pub(crate) fn vector_json(v: &Vector) -> String {
    let parts: Vec<String> = v.iter().map(scalar_json).collect();
    format!("[{}]", parts.join(", "))
}

struct Parser<'s> {
    src: &'s str,
    doc: &'s Value,
}

impl Parser<'_> {
    /// Error positioned at the first occurrence of `"key"` in the source.
    fn err(&self, key: &str, message: String) -> Error {
        let needle = format!("\"{key}\"");
        let (line, column) = match self.src.find(&needle) {
            Some(off) => {
                let before = &self.src[..off];
                let line = before.matches('\n').count() + 1;
                let column = off - before.rfind('\n').map_or(0, |p| p + 1) + 1;
                (line, column)
            }
            None => (1, 1),
        };
        Error::Parse { line, column, message }
    }

    fn get(&self, key: &str) -> Result<&Value> {
        self.doc
            .get(key)
            .ok_or_else(|| self.err(key, format!("missing field `{key}`")))
    }

    fn run(&self) -> Result<AlgebraFile> {
        if !self.doc.is_object() {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: "document must be a JSON object".into(),
            });
        }
        let field: FieldSpec = self
            .get("field")?
            .as_str()
            .ok_or_else(|| self.err("field", "`field` must be a string".into()))?
            .parse()
            .map_err(|e: Error| self.err("field", e.to_string()))?;
        let dim = self
            .get("dim")?
            .as_u64()
            .ok_or_else(|| self.err("dim", "`dim` must be a nonnegative integer".into()))? as usize;
        let labels: Vec<String> = match self.doc.get("labels") {
            None => (0..dim).map(|i| format!("x{i}")).collect(),
            Some(v) => v
                .as_array()
                .and_then(|xs| xs.iter().map(|x| x.as_str().map(str::to_string)).collect::<Option<Vec<_>>>())
                .ok_or_else(|| self.err("labels", "`labels` must be a list of strings".into()))?,
        };
        if labels.len() != dim {
            return Err(self.err("labels", format!("expected {dim} labels, found {}", labels.len())));
        }
        let unit = match self.doc.get("unit") {
            None | Some(Value::Null) => None,
            Some(v) => Some(self.vector("unit", v, field, dim)?),
        };
        let sc = self
            .get("sc")?
            .as_array()
            .ok_or_else(|| self.err("sc", "`sc` must be a list".into()))?;
        let mut entries = Vec::with_capacity(sc.len());
        let width = if field == FieldSpec::Rational { 5 } else { 4 };
        for (n, e) in sc.iter().enumerate() {
            let xs = e
                .as_array()
                .filter(|xs| xs.len() == width || (width == 5 && xs.len() == 4))
                .ok_or_else(|| self.err("sc", format!("entry {n} must have {width} components")))?;
            let idx = |m: usize| -> Result<usize> {
                xs[m]
                    .as_u64()
                    .map(|v| v as usize)
                    .filter(|&v| v < dim)
                    .ok_or_else(|| self.err("sc", format!("entry {n}: index out of range")))
            };
            let (i, j, k) = (idx(0)?, idx(1)?, idx(2)?);
            let num = self.scalar("sc", &xs[3], field)?;
            let c = if xs.len() == 5 {
                let den = self.scalar("sc", &xs[4], field)?;
                let inv = den
                    .inv()
                    .ok_or_else(|| self.err("sc", format!("entry {n}: zero denominator")))?;
                &num * &inv
            } else {
                num
            };
            entries.push((i, j, k, c));
        }
        let algebra = Algebra::new(field, labels, entries, unit)?;
        let algebra = match self.doc.get("levi") {
            None | Some(Value::Null) => algebra,
            Some(v) => {
                let blocks = v
                    .as_array()
                    .ok_or_else(|| self.err("levi", "`levi` must be a list".into()))?;
                let mut systems = Vec::new();
                for b in blocks {
                    let size = b
                        .get("size")
                        .and_then(Value::as_u64)
                        .ok_or_else(|| self.err("levi", "block needs an integer `size`".into()))?
                        as usize;
                    let units = b
                        .get("units")
                        .and_then(Value::as_array)
                        .ok_or_else(|| self.err("levi", "block needs a `units` list".into()))?
                        .iter()
                        .map(|u| self.vector("levi", u, field, dim))
                        .collect::<Result<Vec<_>>>()?;
                    systems.push(MatrixUnitSystem::new(size, units).map_err(|e| self.err("levi", e.to_string()))?);
                }
                algebra.with_levi(systems)?
            }
        };
        let mut file = AlgebraFile::new(algebra);
        if let Some(v) = self.doc.get("subspaces") {
            let obj = v
                .as_object()
                .ok_or_else(|| self.err("subspaces", "`subspaces` must be an object".into()))?;
            for (name, vs) in obj {
                let rows = vs
                    .as_array()
                    .ok_or_else(|| self.err(name, format!("subspace `{name}` must be a list of vectors")))?
                    .iter()
                    .map(|r| self.vector(name, r, field, dim))
                    .collect::<Result<Vec<_>>>()?;
                file.subspaces.insert(name.clone(), rows);
            }
        }
        if let Some(v) = self.doc.get("elements") {
            let obj = v
                .as_object()
                .ok_or_else(|| self.err("elements", "`elements` must be an object".into()))?;
            for (name, x) in obj {
                file.elements.insert(name.clone(), self.vector(name, x, field, dim)?);
            }
        }
        Ok(file)
    }

    fn scalar(&self, key: &str, v: &Value, field: FieldSpec) -> Result<Scalar> {
        match v {
            Value::Number(n) => {
                let text = n.to_string();
                if text.contains(['.', 'e', 'E']) {
                    return Err(self.err(key, format!("`{text}` is not an exact scalar")));
                }
                field.parse_scalar(&text).map_err(|e| self.err(key, e.to_string()))
            }
            Value::String(s) => field.parse_scalar(s).map_err(|e| self.err(key, e.to_string())),
            _ => Err(self.err(key, format!("expected a scalar, found {v}"))),
        }
    }

    fn vector(&self, key: &str, v: &Value, field: FieldSpec, dim: usize) -> Result<Vector> {
        let xs = v
            .as_array()
            .ok_or_else(|| self.err(key, format!("expected a coordinate list, found {v}")))?;
        if xs.len() != dim {
            return Err(self.err(key, format!("expected {dim} coordinates, found {}", xs.len())));
        }
        Ok(Vector::new(xs.iter().map(|x| self.scalar(key, x, field)).collect::<Result<_>>()?))
    }
}
