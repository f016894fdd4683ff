use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use super::element::{accumulate, ensure_same, AlgElement, AlgebraId, EndoMap, Tensor3, TensorElement};
use crate::error::{Error, Result};
use crate::scalar::Ring;

pub type SparseVec<F> = BTreeMap<usize, F>;
pub type SparseTensor<F> = BTreeMap<(usize, usize), F>;

/// A finite-dimensional (co)algebra given by structure constants on a named
/// basis: e_i e_j = Σ_k c^k_{ij} e_k, Δ(e_i), ε(e_i) and optionally S(e_i).
///
/// The tables are trusted only as far as the verifiers say; construction
/// checks sizes and index ranges only.
#[derive(Debug, Clone)]
pub struct StructureConstantBialgebra<F: Ring> {
    pub(crate) id: AlgebraId,
    pub(crate) ctx: F::Ctx,
    pub(crate) names: Vec<String>,
    pub(crate) mult: Vec<SparseVec<F>>,
    pub(crate) unit: SparseVec<F>,
    pub(crate) delta: Vec<SparseTensor<F>>,
    pub(crate) counit: Vec<F>,
    pub(crate) antipode: Option<Vec<SparseVec<F>>>,
    pub(crate) generators: Option<Vec<usize>>,
}

impl<F: Ring> StructureConstantBialgebra<F> {
    /// `mult[i][j]` is the product e_i e_j.
    pub fn new(
        ctx: F::Ctx,
        names: Vec<String>,
        mult: Vec<Vec<SparseVec<F>>>,
        unit: SparseVec<F>,
        delta: Vec<SparseTensor<F>>,
        counit: Vec<F>,
        antipode: Option<Vec<SparseVec<F>>>,
    ) -> Result<Self> {
        let dim = names.len();
        if dim == 0 {
            return Err(Error::SizeMismatch("empty basis".into()));
        }
        let size = |what: &str, got: usize| -> Result<()> {
            if got == dim {
                Ok(())
            } else {
                Err(Error::SizeMismatch(format!("{what} has {got} entries, basis has {dim}")))
            }
        };
        size("mult", mult.len())?;
        for row in &mult {
            size("mult row", row.len())?;
        }
        size("delta", delta.len())?;
        size("counit", counit.len())?;
        if let Some(s) = &antipode {
            size("antipode", s.len())?;
        }
        let bad_vec = |v: &SparseVec<F>| v.keys().any(|&k| k >= dim);
        let bad_ten = |v: &SparseTensor<F>| v.keys().any(|&(a, b)| a >= dim || b >= dim);
        if mult.iter().flatten().any(bad_vec)
            || bad_vec(&unit)
            || delta.iter().any(bad_ten)
            || antipode.iter().flatten().any(bad_vec)
        {
            return Err(Error::SizeMismatch(format!("basis index out of range 0..{dim}")));
        }
        let strip = |mut v: SparseVec<F>| {
            v.retain(|_, c| !c.is_zero());
            v
        };
        Ok(StructureConstantBialgebra {
            id: AlgebraId::fresh(),
            ctx,
            names,
            mult: mult.into_iter().flatten().map(strip).collect(),
            unit: strip(unit),
            delta: delta
                .into_iter()
                .map(|mut t| {
                    t.retain(|_, c| !c.is_zero());
                    t
                })
                .collect(),
            counit,
            antipode: antipode.map(|s| s.into_iter().map(strip).collect()),
            generators: None,
        })
    }

    /// Declares basis elements that generate the algebra. Verifiers use them
    /// only after [`generation_proven`](Self::generation_proven) confirms it.
    pub fn with_generators(mut self, gens: Vec<usize>) -> Result<Self> {
        if gens.iter().any(|&g| g >= self.dim()) {
            return Err(Error::SizeMismatch("generator index out of range".into()));
        }
        self.generators = Some(gens);
        Ok(self)
    }

    pub fn id(&self) -> AlgebraId {
        self.id
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.names
    }

    pub fn generators(&self) -> Option<&[usize]> {
        self.generators.as_deref()
    }

    pub fn has_antipode(&self) -> bool {
        self.antipode.is_some()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Structure constants of e_i e_j.
    pub fn mult_basis(&self, i: usize, j: usize) -> &SparseVec<F> {
        &self.mult[i * self.dim() + j]
    }

    pub fn delta_basis(&self, i: usize) -> &SparseTensor<F> {
        &self.delta[i]
    }

    pub fn counit_basis(&self, i: usize) -> &F {
        &self.counit[i]
    }

    pub fn antipode_basis(&self, i: usize) -> Option<&SparseVec<F>> {
        self.antipode.as_ref().map(|s| &s[i])
    }

    pub fn zero(&self) -> AlgElement<F> {
        AlgElement::zero(self.id)
    }

    pub fn one(&self) -> AlgElement<F> {
        AlgElement {
            algebra: self.id,
            terms: self.unit.clone(),
        }
    }

    pub fn basis(&self, i: usize) -> AlgElement<F> {
        assert!(i < self.dim(), "basis index {i} out of range");
        AlgElement::from_terms(self.id, [(i, F::one_in(&self.ctx))])
    }

    pub fn basis_by_name(&self, name: &str) -> Result<AlgElement<F>> {
        self.index_of(name)
            .map(|i| self.basis(i))
            .ok_or_else(|| Error::InvalidParams(format!("no basis element named `{name}`")))
    }

    pub fn element(&self, terms: impl IntoIterator<Item = (usize, F)>) -> AlgElement<F> {
        AlgElement::from_terms(self.id, terms)
    }

    pub fn constant(&self, c: &F) -> AlgElement<F> {
        self.one().scale(c)
    }

    pub fn tensor(&self, terms: impl IntoIterator<Item = ((usize, usize), F)>) -> TensorElement<F> {
        TensorElement::from_terms(self.id, terms)
    }

    pub fn one_tensor(&self) -> TensorElement<F> {
        self.pure_tensor(&self.one(), &self.one()).expect("own elements")
    }

    pub fn one_tensor3(&self) -> Tensor3<F> {
        let mut out = Tensor3::zero(self.id);
        for (&a, ca) in &self.unit {
            for (&b, cb) in &self.unit {
                for (&c, cc) in &self.unit {
                    accumulate(&mut out.terms, (a, b, c), ca.clone() * cb * cc);
                }
            }
        }
        out
    }

    /// a ⊗ b.
    pub fn pure_tensor(&self, a: &AlgElement<F>, b: &AlgElement<F>) -> Result<TensorElement<F>> {
        ensure_same(self.id, a.algebra)?;
        ensure_same(self.id, b.algebra)?;
        let mut out = TensorElement::zero(self.id);
        for (&i, ci) in &a.terms {
            for (&j, cj) in &b.terms {
                accumulate(&mut out.terms, (i, j), ci.clone() * cj);
            }
        }
        Ok(out)
    }

    /// T ⊗ 1 in A⊗A⊗A.
    pub fn tensor_then_one(&self, t: &TensorElement<F>) -> Result<Tensor3<F>> {
        ensure_same(self.id, t.algebra)?;
        let mut out = Tensor3::zero(self.id);
        for (&(a, b), c) in &t.terms {
            for (&u, cu) in &self.unit {
                accumulate(&mut out.terms, (a, b, u), c.clone() * cu);
            }
        }
        Ok(out)
    }

    /// 1 ⊗ T in A⊗A⊗A.
    pub fn one_then_tensor(&self, t: &TensorElement<F>) -> Result<Tensor3<F>> {
        ensure_same(self.id, t.algebra)?;
        let mut out = Tensor3::zero(self.id);
        for (&(a, b), c) in &t.terms {
            for (&u, cu) in &self.unit {
                accumulate(&mut out.terms, (u, a, b), c.clone() * cu);
            }
        }
        Ok(out)
    }

    fn mul_into(&self, out: &mut SparseVec<F>, i: usize, j: usize, c: &F) {
        for (&k, d) in self.mult_basis(i, j) {
            accumulate(out, k, d.clone() * c);
        }
    }

    pub fn mul(&self, a: &AlgElement<F>, b: &AlgElement<F>) -> Result<AlgElement<F>> {
        ensure_same(self.id, a.algebra)?;
        ensure_same(self.id, b.algebra)?;
        let mut out = BTreeMap::new();
        for (&i, ci) in &a.terms {
            for (&j, cj) in &b.terms {
                self.mul_into(&mut out, i, j, &(ci.clone() * cj));
            }
        }
        Ok(AlgElement {
            algebra: self.id,
            terms: out,
        })
    }

    pub fn mul_all<'a>(&self, factors: impl IntoIterator<Item = &'a AlgElement<F>>) -> Result<AlgElement<F>> {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, a: &AlgElement<F>, e: u32) -> Result<AlgElement<F>> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// Componentwise product in A⊗A: (a⊗b)(c⊗d) = ac ⊗ bd.
    pub fn tensor_mul(&self, x: &TensorElement<F>, y: &TensorElement<F>) -> Result<TensorElement<F>> {
        ensure_same(self.id, x.algebra)?;
        ensure_same(self.id, y.algebra)?;
        // Contract the left legs first into W[k, b, d] = Σ x_ab y_cd [e_a e_c]_k,
        // then the right legs. This avoids forming |e_a e_c|·|e_b e_d| products
        // per pair of terms.
        let mut w: BTreeMap<(usize, usize, usize), F> = BTreeMap::new();
        for (&(a, b), cx) in &x.terms {
            for (&(c, d), cy) in &y.terms {
                let left = self.mult_basis(a, c);
                if left.is_empty() {
                    continue;
                }
                let s = cx.clone() * cy;
                for (&k, ck) in left {
                    accumulate(&mut w, (k, b, d), ck.clone() * &s);
                }
            }
        }
        let mut out = TensorElement::zero(self.id);
        for ((k, b, d), c) in w {
            for (&l, cl) in self.mult_basis(b, d) {
                accumulate(&mut out.terms, (k, l), cl.clone() * &c);
            }
        }
        Ok(out)
    }

    pub fn tensor3_mul(&self, x: &Tensor3<F>, y: &Tensor3<F>) -> Result<Tensor3<F>> {
        ensure_same(self.id, x.algebra)?;
        ensure_same(self.id, y.algebra)?;
        let mut out = Tensor3::zero(self.id);
        for (&(a, b, c), cx) in &x.terms {
            for (&(d, e, f), cy) in &y.terms {
                let s = cx.clone() * cy;
                for (&k, ck) in self.mult_basis(a, d) {
                    let sk = ck.clone() * &s;
                    for (&l, cl) in self.mult_basis(b, e) {
                        let skl = cl.clone() * &sk;
                        for (&m, cm) in self.mult_basis(c, f) {
                            accumulate(&mut out.terms, (k, l, m), cm.clone() * &skl);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn delta(&self, a: &AlgElement<F>) -> Result<TensorElement<F>> {
        ensure_same(self.id, a.algebra)?;
        let mut out = TensorElement::zero(self.id);
        for (&i, c) in &a.terms {
            for (&k, d) in &self.delta[i] {
                accumulate(&mut out.terms, k, d.clone() * c);
            }
        }
        Ok(out)
    }

    pub fn counit(&self, a: &AlgElement<F>) -> Result<F> {
        ensure_same(self.id, a.algebra)?;
        let mut s = F::zero_in(&self.ctx);
        for (&i, c) in &a.terms {
            s += &(self.counit[i].clone() * c);
        }
        Ok(s)
    }

    pub fn antipode(&self, a: &AlgElement<F>) -> Result<AlgElement<F>> {
        ensure_same(self.id, a.algebra)?;
        let table = self.antipode.as_ref().ok_or(Error::MissingAntipode)?;
        let mut out = AlgElement::zero(self.id);
        for (&i, c) in &a.terms {
            for (&k, d) in &table[i] {
                accumulate(&mut out.terms, k, d.clone() * c);
            }
        }
        Ok(out)
    }

    /// The antipode as an [`EndoMap`].
    pub fn antipode_map(&self) -> Result<EndoMap<F>> {
        let table = self.antipode.as_ref().ok_or(Error::MissingAntipode)?;
        EndoMap::new(
            self.id,
            table
                .iter()
                .map(|t| AlgElement {
                    algebra: self.id,
                    terms: t.clone(),
                })
                .collect(),
        )
    }

    /// Multiplication A⊗A → A.
    pub fn mu(&self, t: &TensorElement<F>) -> Result<AlgElement<F>> {
        ensure_same(self.id, t.algebra)?;
        let mut out = BTreeMap::new();
        for (&(a, b), c) in &t.terms {
            self.mul_into(&mut out, a, b, c);
        }
        Ok(AlgElement {
            algebra: self.id,
            terms: out,
        })
    }

    /// (f ⊗ g)(T) for linear maps given on basis elements.
    pub fn map_tensor(
        &self,
        t: &TensorElement<F>,
        f: impl Fn(usize) -> Result<AlgElement<F>>,
        g: impl Fn(usize) -> Result<AlgElement<F>>,
    ) -> Result<TensorElement<F>> {
        ensure_same(self.id, t.algebra)?;
        let mut out = TensorElement::zero(self.id);
        for (&(a, b), c) in &t.terms {
            let fa = f(a)?;
            let gb = g(b)?;
            for (&k, ck) in &fa.terms {
                let s = ck.clone() * c;
                for (&l, cl) in &gb.terms {
                    accumulate(&mut out.terms, (k, l), cl.clone() * &s);
                }
            }
        }
        Ok(out)
    }

    /// (Δ ⊗ id)(T).
    pub fn delta_left(&self, t: &TensorElement<F>) -> Result<Tensor3<F>> {
        ensure_same(self.id, t.algebra)?;
        let mut out = Tensor3::zero(self.id);
        for (&(a, b), c) in &t.terms {
            for (&(k, l), d) in &self.delta[a] {
                accumulate(&mut out.terms, (k, l, b), d.clone() * c);
            }
        }
        Ok(out)
    }

    /// (id ⊗ Δ)(T).
    pub fn delta_right(&self, t: &TensorElement<F>) -> Result<Tensor3<F>> {
        ensure_same(self.id, t.algebra)?;
        let mut out = Tensor3::zero(self.id);
        for (&(a, b), c) in &t.terms {
            for (&(k, l), d) in &self.delta[b] {
                accumulate(&mut out.terms, (a, k, l), d.clone() * c);
            }
        }
        Ok(out)
    }

    /// (ε ⊗ id)(T).
    pub fn counit_left(&self, t: &TensorElement<F>) -> Result<AlgElement<F>> {
        ensure_same(self.id, t.algebra)?;
        let mut out = AlgElement::zero(self.id);
        for (&(a, b), c) in &t.terms {
            accumulate(&mut out.terms, b, self.counit[a].clone() * c);
        }
        Ok(out)
    }

    /// (id ⊗ ε)(T).
    pub fn counit_right(&self, t: &TensorElement<F>) -> Result<AlgElement<F>> {
        ensure_same(self.id, t.algebra)?;
        let mut out = AlgElement::zero(self.id);
        for (&(a, b), c) in &t.terms {
            accumulate(&mut out.terms, a, self.counit[b].clone() * c);
        }
        Ok(out)
    }

    /// Left multiplication matrix of `a`, as rows: entry (m, k) is the
    /// coefficient of e_m in a·e_k.
    pub(crate) fn left_mult_rows(&self, a: &AlgElement<F>) -> Vec<SparseVec<F>> {
        let mut rows = vec![BTreeMap::new(); self.dim()];
        for (&i, c) in &a.terms {
            for k in 0..self.dim() {
                for (&m, d) in self.mult_basis(i, k) {
                    accumulate(&mut rows[m], k, d.clone() * c);
                }
            }
        }
        rows
    }

    /// True when the declared generators provably generate the algebra:
    /// starting from the unit, left multiplication by generators reaches
    /// every basis element through single-term products.
    pub fn generation_proven(&self) -> bool {
        let Some(gens) = &self.generators else {
            return false;
        };
        let unit_idx = match self.unit_index() {
            Some(u) => u,
            None => return false,
        };
        let dim = self.dim();
        let mut seen = vec![false; dim];
        seen[unit_idx] = true;
        let mut queue = VecDeque::from([unit_idx]);
        while let Some(b) = queue.pop_front() {
            for &g in gens {
                let p = self.mult_basis(g, b);
                if p.len() == 1 {
                    let (&k, _) = p.iter().next().expect("one term");
                    if !seen[k] {
                        seen[k] = true;
                        queue.push_back(k);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Index of the basis element equal to 1, if the unit is a basis element.
    pub fn unit_index(&self) -> Option<usize> {
        if self.unit.len() == 1 {
            let (&u, c) = self.unit.iter().next()?;
            c.is_one().then_some(u)
        } else {
            None
        }
    }

    pub fn format_element(&self, a: &AlgElement<F>) -> String {
        format_terms(a.terms.iter().map(|(&i, c)| (self.names[i].clone(), c)))
    }

    pub fn format_tensor(&self, t: &TensorElement<F>) -> String {
        format_terms(
            t.terms
                .iter()
                .map(|(&(a, b), c)| (format!("{} ⊗ {}", self.names[a], self.names[b]), c)),
        )
    }

    pub fn format_tensor3(&self, t: &Tensor3<F>) -> String {
        format_terms(t.terms.iter().map(|(&(a, b, c), k)| {
            (
                format!("{} ⊗ {} ⊗ {}", self.names[a], self.names[b], self.names[c]),
                k,
            )
        }))
    }

    /// Replaces one structure constant; meant for building negative controls.
    pub fn with_mult_entry(&self, i: usize, j: usize, value: SparseVec<F>) -> Self {
        let mut out = self.clone();
        out.id = AlgebraId::fresh();
        let dim = self.dim();
        out.mult[i * dim + j] = value;
        out
    }

    pub fn with_delta_entry(&self, i: usize, value: SparseTensor<F>) -> Self {
        let mut out = self.clone();
        out.id = AlgebraId::fresh();
        out.delta[i] = value;
        out
    }

    pub fn with_counit_entry(&self, i: usize, value: F) -> Self {
        let mut out = self.clone();
        out.id = AlgebraId::fresh();
        out.counit[i] = value;
        out
    }

    pub fn with_antipode_entry(&self, i: usize, value: SparseVec<F>) -> Self {
        let mut out = self.clone();
        out.id = AlgebraId::fresh();
        if let Some(s) = out.antipode.as_mut() {
            s[i] = value;
        }
        out
    }

    /// Moves an element of another structure with the same basis into this
    /// one (used after rebuilding a table with `with_*`).
    pub fn adopt(&self, a: &AlgElement<F>) -> AlgElement<F> {
        AlgElement {
            algebra: self.id,
            terms: a.terms.clone(),
        }
    }

    pub fn adopt_tensor(&self, t: &TensorElement<F>) -> TensorElement<F> {
        TensorElement {
            algebra: self.id,
            terms: t.terms.clone(),
        }
    }
}

fn format_terms<'a, F: Ring>(terms: impl Iterator<Item = (String, &'a F)>) -> String {
    let mut s = String::new();
    for (name, c) in terms {
        if !s.is_empty() {
            s.push_str(" + ");
        }
        if c.is_one() {
            s.push_str(&name);
        } else {
            let _ = write!(s, "({c})*{name}");
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}
