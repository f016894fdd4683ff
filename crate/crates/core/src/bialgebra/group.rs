use std::collections::BTreeMap;

use super::structure::StructureConstantBialgebra;
use crate::error::{Error, Result};
use crate::scalar::Ring;

/// Group algebra of Z_{o_1} × … × Z_{o_k} with Δ(g) = g⊗g, ε(g) = 1 and
/// S(g) = g⁻¹.
///
/// Basis elements are g_1^{a_1} ⋯ g_k^{a_k}, indexed in mixed radix with the
/// last exponent varying fastest, and named "x^a y^b" after `symbols`.
#[derive(Debug, Clone)]
pub struct AbelianGroupAlgebra<F: Ring> {
    pub algebra: StructureConstantBialgebra<F>,
    pub orders: Vec<u64>,
}

impl<F: Ring> AbelianGroupAlgebra<F> {
    pub fn new(ctx: &F::Ctx, orders: &[u64], symbols: &[&str]) -> Result<Self> {
        if orders.is_empty() || orders.len() != symbols.len() || orders.contains(&0) {
            return Err(Error::InvalidParams("one positive order per symbol required".into()));
        }
        let dim: u64 = orders.iter().product();
        let dim = dim as usize;
        let names = (0..dim)
            .map(|i| {
                exponents(orders, i)
                    .iter()
                    .zip(symbols)
                    .map(|(e, s)| format!("{s}^{e}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        let one = || F::one_in(ctx);
        let single = |k: usize| BTreeMap::from([(k, one())]);
        let mult = (0..dim)
            .map(|i| (0..dim).map(|j| single(mul_index(orders, i, j))).collect())
            .collect();
        let delta = (0..dim).map(|i| BTreeMap::from([((i, i), one())])).collect();
        let counit = vec![one(); dim];
        let antipode = (0..dim).map(|i| single(inverse_index(orders, i))).collect();
        let gens = (0..orders.len())
            .map(|k| {
                let mut e = vec![0; orders.len()];
                e[k] = 1 % orders[k];
                index(orders, &e)
            })
            .collect();
        let algebra = StructureConstantBialgebra::new(
            ctx.clone(),
            names,
            mult,
            single(0),
            delta,
            counit,
            Some(antipode),
        )?
        .with_generators(gens)?;
        Ok(AbelianGroupAlgebra {
            algebra,
            orders: orders.to_vec(),
        })
    }

    pub fn exponents(&self, i: usize) -> Vec<u64> {
        exponents(&self.orders, i)
    }

    /// Index of the element with the given exponents (reduced mod the orders;
    /// negative exponents allowed).
    pub fn index_of_exponents(&self, e: &[i64]) -> usize {
        let reduced: Vec<u64> = e
            .iter()
            .zip(&self.orders)
            .map(|(&a, &o)| a.rem_euclid(o as i64) as u64)
            .collect();
        index(&self.orders, &reduced)
    }
}

fn exponents(orders: &[u64], mut i: usize) -> Vec<u64> {
    let mut e = vec![0; orders.len()];
    for k in (0..orders.len()).rev() {
        e[k] = i as u64 % orders[k];
        i /= orders[k] as usize;
    }
    e
}

fn index(orders: &[u64], e: &[u64]) -> usize {
    e.iter()
        .zip(orders)
        .fold(0usize, |acc, (&a, &o)| acc * o as usize + (a % o) as usize)
}

fn mul_index(orders: &[u64], i: usize, j: usize) -> usize {
    let s: Vec<u64> = exponents(orders, i)
        .iter()
        .zip(exponents(orders, j))
        .map(|(x, y)| x + y)
        .collect();
    index(orders, &s)
}

fn inverse_index(orders: &[u64], i: usize) -> usize {
    let s: Vec<u64> = exponents(orders, i)
        .iter()
        .zip(orders)
        .map(|(x, o)| (o - x) % o)
        .collect();
    index(orders, &s)
}
