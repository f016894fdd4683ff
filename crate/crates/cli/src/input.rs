//! Reading matrices and choosing the field.

use std::path::Path;

use anyhow::{bail, Context, Result};
use num_integer::Integer;
use ore_hopf::exactnum::{lcm_all, CycloJson, MAX_CONDUCTOR};
use ore_hopf::{Cyclo, CycloCtx, QPMatrix};
use serde::Deserialize;

use crate::expr::Expr;

/// One matrix entry on disk: an expression, an integer, or the exact wire
/// form `{"N": 4, "coeffs": ["0", "1"]}`.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Text(String),
    Int(i64),
    Exact(CycloJson),
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum MatrixFile {
    Wrapped { entries: Vec<Vec<Entry>> },
    Bare(Vec<Vec<Entry>>),
}

/// A matrix parsed but not yet placed in a field.
pub enum RawMatrix {
    Entries(Vec<Vec<Entry>>),
    /// The quantum plane with parameter p.
    Plane(Expr),
}

enum Parsed {
    Expr(Expr),
    Exact(CycloJson),
}

impl RawMatrix {
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let file: MatrixFile =
            serde_json::from_str(&text).with_context(|| format!("{}: expected {{\"entries\": [[...]]}}", path.display()))?;
        let entries = match file {
            MatrixFile::Wrapped { entries } | MatrixFile::Bare(entries) => entries,
        };
        Ok(RawMatrix::Entries(entries))
    }

    fn parsed(&self) -> Result<Vec<Vec<Parsed>>> {
        match self {
            RawMatrix::Plane(p) => Ok(vec![
                vec![Parsed::Expr(Expr::Int(1)), Parsed::Expr(Expr::Pow(Box::new(p.clone()), -1))],
                vec![Parsed::Expr(p.clone()), Parsed::Expr(Expr::Int(1))],
            ]),
            RawMatrix::Entries(rows) => rows
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(j, e)| {
                            Ok(match e {
                                Entry::Text(t) => {
                                    Parsed::Expr(Expr::parse(t).with_context(|| format!("entry [{i}][{j}]"))?)
                                }
                                Entry::Int(k) => Parsed::Expr(Expr::Int(*k)),
                                Entry::Exact(c) => Parsed::Exact(c.clone()),
                            })
                        })
                        .collect()
                })
                .collect(),
        }
    }

    /// Orders of the roots of unity the entries need.
    pub fn root_orders(&self) -> Result<Vec<u64>> {
        let mut out = Vec::new();
        for row in self.parsed()? {
            for e in row {
                match e {
                    Parsed::Expr(x) => x.root_orders(&mut out),
                    Parsed::Exact(c) => out.push(c.conductor),
                }
            }
        }
        Ok(out)
    }

    pub fn build(&self, ctx: &CycloCtx, q: Option<&Cyclo>) -> Result<QPMatrix> {
        let mut rows = Vec::new();
        for (i, row) in self.parsed()?.into_iter().enumerate() {
            let mut out = Vec::new();
            for (j, e) in row.into_iter().enumerate() {
                let v = match e {
                    Parsed::Expr(x) => x.eval(ctx, q),
                    Parsed::Exact(c) => c.into_cyclo().and_then(|c| c.embed(ctx)).map_err(Into::into),
                }
                .with_context(|| format!("entry [{i}][{j}]"))?;
                out.push(v);
            }
            rows.push(out);
        }
        Ok(QPMatrix::new(ctx, rows)?)
    }
}

/// Q(ζ_N) with N the least common multiple of `orders`, or the user's
/// conductor when given (which must then be a multiple of it).
pub fn field(orders: impl IntoIterator<Item = u64>, conductor: Option<u64>) -> Result<CycloCtx> {
    let need = lcm_all(orders);
    let n = match conductor {
        Some(c) if c == 0 || c % need != 0 => bail!("conductor {c} is not a multiple of the required {need}"),
        Some(c) => c,
        None => need,
    };
    if n > MAX_CONDUCTOR {
        bail!("conductor {n} exceeds the supported maximum {MAX_CONDUCTOR}");
    }
    Ok(CycloCtx::new(n)?)
}

/// q = ζ_n^k in `ctx`, with k a unit mod n.
pub fn choose_q(ctx: &CycloCtx, n: u64, k: i64) -> Result<Cyclo> {
    if (k.rem_euclid(n as i64) as u64).gcd(&n) != 1 {
        bail!("q exponent {k} is not coprime to n = {n}");
    }
    Ok(ctx.primitive_root(n)?.pow(k)?)
}

pub fn parse_b(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|s| s.trim().parse::<i64>().with_context(|| format!("bad entry `{s}` in --b")))
        .collect()
}
