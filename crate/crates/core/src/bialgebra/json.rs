use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use super::element::{AlgElement, TensorElement};
use super::structure::StructureConstantBialgebra;
use crate::error::{Error, Result};
use crate::scalar::Ring;

/// One nonzero row of the multiplication table: e_i e_j = Σ c e_k.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultEntry<F> {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<(usize, F)>,
}

/// Serialized form of a [`StructureConstantBialgebra`].
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound(serialize = "F: Serialize", deserialize = "F: Deserialize<'de>"))]
pub struct StructureJson<F> {
    pub basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<usize>>,
    pub unit: Vec<(usize, F)>,
    pub mult: Vec<MultEntry<F>>,
    pub delta: Vec<Vec<(usize, usize, F)>>,
    pub counit: Vec<F>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Vec<(usize, F)>>>,
}

pub(crate) fn terms_of<F: Ring>(m: &BTreeMap<usize, F>) -> Vec<(usize, F)> {
    m.iter().map(|(&k, c)| (k, c.clone())).collect()
}

impl<F: Ring> StructureConstantBialgebra<F> {
    pub fn to_json(&self) -> StructureJson<F> {
        let dim = self.dim();
        let mult = (0..dim)
            .flat_map(|i| (0..dim).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.mult_basis(i, j).is_empty())
            .map(|(i, j)| MultEntry {
                i,
                j,
                terms: terms_of(self.mult_basis(i, j)),
            })
            .collect();
        StructureJson {
            basis: self.names.clone(),
            generators: self.generators.clone(),
            unit: terms_of(&self.unit),
            mult,
            delta: self
                .delta
                .iter()
                .map(|t| t.iter().map(|(&(a, b), c)| (a, b, c.clone())).collect())
                .collect(),
            counit: self.counit.clone(),
            antipode: self.antipode.as_ref().map(|s| s.iter().map(terms_of).collect()),
        }
    }

    pub fn from_json(j: StructureJson<F>) -> Result<Self> {
        let ctx = j
            .unit
            .first()
            .map(|(_, c)| c.context())
            .ok_or_else(|| Error::Parse("unit must be nonzero".into()))?;
        let dim = j.basis.len();
        let mut seen_ctx = Vec::new();
        let mut collect = |c: &F| seen_ctx.push(c.context());
        j.unit.iter().for_each(|(_, c)| collect(c));
        j.mult.iter().flat_map(|m| &m.terms).for_each(|(_, c)| collect(c));
        j.delta.iter().flatten().for_each(|(_, _, c)| collect(c));
        j.counit.iter().for_each(&mut collect);
        j.antipode.iter().flatten().flatten().for_each(|(_, c)| collect(c));
        if seen_ctx.iter().any(|c| *c != ctx) {
            return Err(Error::Parse("coefficients live in different scalar fields".into()));
        }
        let mut mult = vec![vec![BTreeMap::new(); dim]; dim];
        for e in j.mult {
            if e.i >= dim || e.j >= dim {
                return Err(Error::Parse(format!("mult entry ({}, {}) out of range", e.i, e.j)));
            }
            mult[e.i][e.j] = collect_terms(e.terms);
        }
        let delta = j
            .delta
            .into_iter()
            .map(|t| {
                let mut m = BTreeMap::new();
                for (a, b, c) in t {
                    super::element::accumulate(&mut m, (a, b), c);
                }
                m
            })
            .collect();
        let alg = StructureConstantBialgebra::new(
            ctx,
            j.basis,
            mult,
            collect_terms(j.unit),
            delta,
            j.counit,
            j.antipode.map(|s| s.into_iter().map(collect_terms).collect()),
        )?;
        match j.generators {
            Some(g) => alg.with_generators(g),
            None => Ok(alg),
        }
    }

    pub fn element_from_terms_json(&self, terms: Vec<(usize, F)>) -> Result<AlgElement<F>> {
        if terms.iter().any(|(k, _)| *k >= self.dim()) {
            return Err(Error::Parse("element index out of range".into()));
        }
        Ok(self.element(terms))
    }

    pub fn tensor_from_terms_json(&self, terms: Vec<(usize, usize, F)>) -> Result<TensorElement<F>> {
        if terms.iter().any(|(a, b, _)| *a >= self.dim() || *b >= self.dim()) {
            return Err(Error::Parse("tensor index out of range".into()));
        }
        Ok(self.tensor(terms.into_iter().map(|(a, b, c)| ((a, b), c))))
    }
}

impl<F: Ring + Serialize> StructureConstantBialgebra<F> {
    /// Pretty-printed JSON with a trailing newline; stable for golden files.
    pub fn export_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
        s.push('\n');
        s
    }
}

impl<F: Ring + DeserializeOwned> StructureConstantBialgebra<F> {
    pub fn import_json(text: &str) -> Result<Self> {
        let j: StructureJson<F> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(j)
    }
}

fn collect_terms<F: Ring>(terms: Vec<(usize, F)>) -> BTreeMap<usize, F> {
    let mut m = BTreeMap::new();
    for (k, c) in terms {
        super::element::accumulate(&mut m, k, c);
    }
    m
}
