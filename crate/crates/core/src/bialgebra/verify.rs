use std::collections::BTreeMap;

use serde::Serialize;

use super::element::{accumulate, AlgElement};
use super::structure::{SparseVec, StructureConstantBialgebra};
use crate::error::{Error, Result};
use crate::linalg::Rref;
use crate::report::Report;
use crate::scalar::{Field, Ring};

/// How many basis pairs the multiplicativity checks visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CheckScope {
    /// Generator × basis pairs when the declared generators provably
    /// generate the algebra, all pairs otherwise.
    #[default]
    Auto,
    /// Every ordered pair of basis elements.
    Exhaustive,
}

/// A left integral together with the evidence gathered while computing it.
#[derive(Debug, Clone)]
pub struct LeftIntegral<F: Ring> {
    pub element: AlgElement<F>,
    /// Dimension of the space of left integrals.
    pub solution_dim: usize,
    pub counit: F,
}

impl<F: Ring> LeftIntegral<F> {
    pub fn semisimple(&self) -> bool {
        !self.counit.is_zero()
    }
}

/// Summary of a left integral, for reports.
#[derive(Debug, Clone, Serialize)]
pub struct IntegralSummary {
    pub solution_dim: usize,
    pub counit: String,
    pub semisimple: bool,
}

impl<F: Ring> StructureConstantBialgebra<F> {
    fn sum_rows(&self, coeffs: &SparseVec<F>, row: impl Fn(usize) -> usize, col: impl Fn(usize) -> usize) -> SparseVec<F> {
        let mut out = BTreeMap::new();
        for (&m, c) in coeffs {
            for (&k, d) in self.mult_basis(row(m), col(m)) {
                accumulate(&mut out, k, d.clone() * c);
            }
        }
        out
    }

    /// Associativity on all basis triples and two-sided unit on all basis
    /// elements.
    pub fn check_algebra(&self) -> Report {
        let mut rep = Report::new("algebra");
        let dim = self.dim();
        let n = &self.names;
        for i in 0..dim {
            for j in 0..dim {
                let ij = self.mult_basis(i, j);
                for k in 0..dim {
                    let lhs = self.sum_rows(ij, |m| m, |_| k);
                    let rhs = self.sum_rows(self.mult_basis(j, k), |_| i, |m| m);
                    rep.check(lhs == rhs, "associativity", || {
                        format!(
                            "({a} {b}) {c} = {} but {a} ({b} {c}) = {}",
                            self.format_element(&self.element(lhs.clone())),
                            self.format_element(&self.element(rhs.clone())),
                            a = n[i],
                            b = n[j],
                            c = n[k]
                        )
                    });
                }
            }
        }
        let one = self.one();
        for i in 0..dim {
            let e = self.basis(i);
            let l = self.mul(&one, &e).expect("own elements");
            let r = self.mul(&e, &one).expect("own elements");
            rep.check(l == e, "left unit", || format!("1 {} = {}", n[i], self.format_element(&l)));
            rep.check(r == e, "right unit", || format!("{} 1 = {}", n[i], self.format_element(&r)));
        }
        rep
    }

    /// Coassociativity and both counit laws on every basis element.
    pub fn check_coassoc_counit(&self) -> Report {
        let mut rep = Report::new("coalgebra");
        for i in 0..self.dim() {
            let e = self.basis(i);
            let d = self.delta(&e).expect("own elements");
            let l = self.delta_left(&d).expect("own elements");
            let r = self.delta_right(&d).expect("own elements");
            rep.check(l == r, "coassociativity", || {
                format!(
                    "on {}: (Δ⊗id)Δ = {} but (id⊗Δ)Δ = {}",
                    self.names[i],
                    self.format_tensor3(&l),
                    self.format_tensor3(&r)
                )
            });
            let cl = self.counit_left(&d).expect("own elements");
            let cr = self.counit_right(&d).expect("own elements");
            rep.check(cl == e, "left counit", || {
                format!("(ε⊗id)Δ({}) = {}", self.names[i], self.format_element(&cl))
            });
            rep.check(cr == e, "right counit", || {
                format!("(id⊗ε)Δ({}) = {}", self.names[i], self.format_element(&cr))
            });
        }
        rep
    }

    /// Δ and ε are unital and multiplicative.
    pub fn check_bialgebra_compat(&self) -> Report {
        self.check_bialgebra_compat_with(CheckScope::Auto)
    }

    pub fn check_bialgebra_compat_with(&self, scope: CheckScope) -> Report {
        let mut rep = Report::new("bialgebra compatibility");
        let one = self.one();
        let d1 = self.delta(&one).expect("own elements");
        rep.check(d1 == self.one_tensor(), "Δ(1) = 1⊗1", || self.format_tensor(&d1));
        let e1 = self.counit(&one).expect("own elements");
        rep.check(e1.is_one(), "ε(1) = 1", || format!("ε(1) = {e1}"));

        let dim = self.dim();
        let lefts: Vec<usize> = match (scope, self.generators()) {
            (CheckScope::Auto, Some(g)) if self.generation_proven() => {
                rep.note(format!(
                    "Δ multiplicativity checked on generators × basis ({} pairs)",
                    g.len() * dim
                ));
                g.to_vec()
            }
            _ => (0..dim).collect(),
        };
        let deltas: Vec<_> = (0..dim)
            .map(|i| self.delta(&self.basis(i)).expect("own elements"))
            .collect();
        for &i in &lefts {
            for j in 0..dim {
                let prod = self.element(self.mult_basis(i, j).clone());
                let lhs = self.delta(&prod).expect("own elements");
                let rhs = self.tensor_mul(&deltas[i], &deltas[j]).expect("own elements");
                rep.check(lhs == rhs, "Δ multiplicative", || {
                    format!(
                        "Δ({a} {b}) = {} but Δ({a})Δ({b}) = {}",
                        self.format_tensor(&lhs),
                        self.format_tensor(&rhs),
                        a = self.names[i],
                        b = self.names[j]
                    )
                });
            }
        }
        // ε is cheap, so it is always checked on every pair.
        for i in 0..dim {
            for j in 0..dim {
                let prod = self.element(self.mult_basis(i, j).clone());
                let lhs = self.counit(&prod).expect("own elements");
                let rhs = self.counit[i].clone() * &self.counit[j];
                rep.check(lhs == rhs, "ε multiplicative", || {
                    format!(
                        "ε({a} {b}) = {lhs} but ε({a})ε({b}) = {rhs}",
                        a = self.names[i],
                        b = self.names[j]
                    )
                });
            }
        }
        rep
    }

    /// μ(S⊗id)Δ(e_i) = ε(e_i)1 = μ(id⊗S)Δ(e_i) for every basis element.
    pub fn check_antipode(&self) -> Result<Report> {
        let s = self.antipode_map()?;
        let mut rep = Report::new("antipode");
        for i in 0..self.dim() {
            let e = self.basis(i);
            let d = self.delta(&e)?;
            let want = self.constant(&self.counit[i]);
            let left = self.mu(&self.map_tensor(&d, |a| Ok(s.image(a).clone()), |b| Ok(self.basis(b)))?)?;
            let right = self.mu(&self.map_tensor(&d, |a| Ok(self.basis(a)), |b| Ok(s.image(b).clone()))?)?;
            rep.check(left == want, "μ(S⊗id)Δ = ε1", || {
                format!("on {}: {}", self.names[i], self.format_element(&left))
            });
            rep.check(right == want, "μ(id⊗S)Δ = ε1", || {
                format!("on {}: {}", self.names[i], self.format_element(&right))
            });
        }
        Ok(rep)
    }

    /// All axiom verifiers; the antipode is checked when present.
    pub fn check_all(&self) -> Report {
        let mut rep = Report::new("structure");
        rep.absorb(self.check_algebra());
        rep.absorb(self.check_coassoc_counit());
        rep.absorb(self.check_bialgebra_compat());
        if let Ok(a) = self.check_antipode() {
            rep.absorb(a);
        }
        rep
    }
}

impl<F: Field> StructureConstantBialgebra<F> {
    /// A nonzero Λ with hΛ = ε(h)Λ for all h, normalized so that its first
    /// nonzero coordinate is 1.
    ///
    /// When the generators are proven to generate, the system is built from
    /// them alone; the result is then re-checked against every basis element.
    pub fn left_integral(&self) -> Result<LeftIntegral<F>> {
        let dim = self.dim();
        let hs: Vec<usize> = match self.generators() {
            Some(g) if self.generation_proven() => g.to_vec(),
            _ => (0..dim).collect(),
        };
        let mut rref = Rref::new(dim);
        for &h in &hs {
            let mut rows = self.left_mult_rows(&self.basis(h));
            for (m, row) in rows.iter_mut().enumerate() {
                accumulate(row, m, -self.counit[h].clone());
            }
            for row in rows {
                rref.push(row)?;
            }
        }
        let basis = rref.nullspace(&self.ctx);
        let solution_dim = basis.len();
        let first = basis.into_iter().next().ok_or(Error::NoIntegral)?;
        let lead = first
            .iter()
            .find(|c| !c.is_zero())
            .cloned()
            .ok_or(Error::NoIntegral)?
            .inv()?;
        let element = self.element(first.into_iter().enumerate().map(|(i, c)| (i, c * &lead)));
        for h in 0..dim {
            let lhs = self.mul(&self.basis(h), &element)?;
            if lhs != element.scale(&self.counit[h]) {
                return Err(Error::NoIntegral);
            }
        }
        let counit = self.counit(&element)?;
        Ok(LeftIntegral {
            element,
            solution_dim,
            counit,
        })
    }
}

impl<F: Ring> LeftIntegral<F> {
    pub fn summary(&self) -> IntegralSummary {
        IntegralSummary {
            solution_dim: self.solution_dim,
            counit: self.counit.to_string(),
            semisimple: self.semisimple(),
        }
    }
}
