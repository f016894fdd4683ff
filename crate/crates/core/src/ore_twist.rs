//! Twists, twisted homomorphisms and the quotient Hopf algebra
//! R[z;σ]/⟨z² − t⟩.
//!
//! The quotient has basis {r_i, r_i z}; an element of R[z;σ]/⟨z²−t⟩ is
//! a + bz with a, b ∈ R, multiplied by (a z^s)(b z^u) = a σ^s(b) z^{s+u}
//! with z² replaced by t.

use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::bialgebra::{
    accumulate, AlgElement, EndoMap, SparseTensor, SparseVec, StructureConstantBialgebra, StructureJson,
    TensorElement,
};
use crate::error::{Error, Result};
use crate::linalg;
use crate::report::Report;
use crate::scalar::{Field, Ring};

/// Candidate input (σ, J, t) for the quotient construction over R.
#[derive(Debug, Clone)]
pub struct TwistData<F: Ring> {
    pub r: StructureConstantBialgebra<F>,
    pub sigma: EndoMap<F>,
    pub j: TensorElement<F>,
    pub j_inv: TensorElement<F>,
    pub t: AlgElement<F>,
    pub t_inv: Option<AlgElement<F>>,
}

impl<F: Ring> TwistData<F> {
    /// Checks that every component lives in `r` and that the inverse
    /// witnesses are inverses.
    pub fn new(
        r: StructureConstantBialgebra<F>,
        sigma: EndoMap<F>,
        j: TensorElement<F>,
        j_inv: TensorElement<F>,
        t: AlgElement<F>,
        t_inv: Option<AlgElement<F>>,
    ) -> Result<Self> {
        let id = r.id();
        if sigma.algebra_id() != id
            || j.algebra_id() != id
            || j_inv.algebra_id() != id
            || t.algebra_id() != id
            || t_inv.as_ref().is_some_and(|x| x.algebra_id() != id)
        {
            return Err(Error::AlgebraMismatch);
        }
        if sigma.images().len() != r.dim() {
            return Err(Error::SizeMismatch("sigma must have one image per basis element".into()));
        }
        if let Some(ti) = &t_inv {
            if !r.mul(&t, ti)?.eq(&r.one()) || !r.mul(ti, &t)?.eq(&r.one()) {
                return Err(Error::NotInvertible("t · t_inv != 1".into()));
            }
        }
        Ok(TwistData {
            r,
            sigma,
            j,
            j_inv,
            t,
            t_inv,
        })
    }
}

impl<F: Field> TwistData<F> {
    /// Like [`TwistData::new`], but computes J⁻¹ and t⁻¹ by exact linear
    /// solves.
    pub fn with_computed_inverses(
        r: StructureConstantBialgebra<F>,
        sigma: EndoMap<F>,
        j: TensorElement<F>,
        t: AlgElement<F>,
    ) -> Result<Self> {
        let j_inv = invert_tensor(&r, &j)?;
        let t_inv = invert_element(&r, &t)?;
        Self::new(r, sigma, j, j_inv, t, Some(t_inv))
    }
}

/// Right inverse of J in R⊗R, verified to be two-sided.
pub fn invert_tensor<F: Field>(r: &StructureConstantBialgebra<F>, j: &TensorElement<F>) -> Result<TensorElement<F>> {
    let d = r.dim();
    let col = |a: usize, b: usize| a * d + b;
    let mut rows: Vec<SparseVec<F>> = vec![BTreeMap::new(); d * d];
    for a in 0..d {
        for b in 0..d {
            let prod = r.tensor_mul(j, &r.tensor([((a, b), F::one_in(r.ctx()))]))?;
            for (&(k, l), c) in prod.terms() {
                accumulate(&mut rows[col(k, l)], col(a, b), c.clone());
            }
        }
    }
    let one = r.one_tensor();
    let eqs = rows.into_iter().enumerate().map(|(idx, row)| {
        let rhs = one
            .coeff(&(idx / d, idx % d))
            .cloned()
            .unwrap_or_else(|| F::zero_in(r.ctx()));
        (row, rhs)
    });
    let sol = linalg::solve(r.ctx(), d * d, eqs)?
        .ok_or_else(|| Error::NotInvertible(r.format_tensor(j)))?;
    let inv = r.tensor(sol.into_iter().enumerate().map(|(idx, c)| ((idx / d, idx % d), c)));
    if r.tensor_mul(&inv, j)? != one {
        return Err(Error::NotInvertible(r.format_tensor(j)));
    }
    Ok(inv)
}

/// Inverse of an element of R, verified to be two-sided.
pub fn invert_element<F: Field>(r: &StructureConstantBialgebra<F>, a: &AlgElement<F>) -> Result<AlgElement<F>> {
    let rows = r.left_mult_rows(a);
    let one = r.one();
    let eqs = rows.into_iter().enumerate().map(|(m, row)| {
        (row, one.coeff(&m).cloned().unwrap_or_else(|| F::zero_in(r.ctx())))
    });
    let sol = linalg::solve(r.ctx(), r.dim(), eqs)?.ok_or_else(|| Error::NotInvertible(r.format_element(a)))?;
    let inv = r.element(sol.into_iter().enumerate());
    if r.mul(&inv, a)? != one {
        return Err(Error::NotInvertible(r.format_element(a)));
    }
    Ok(inv)
}

/// Right twist conditions: (id⊗Δ)(J)(1⊗J) = (Δ⊗id)(J)(J⊗1) and
/// (id⊗ε)(J) = 1 = (ε⊗id)(J).
pub fn check_right_twist<F: Ring>(
    r: &StructureConstantBialgebra<F>,
    j: &TensorElement<F>,
    j_inv: &TensorElement<F>,
) -> Result<Report> {
    let one = r.one_tensor();
    if r.tensor_mul(j, j_inv)? != one || r.tensor_mul(j_inv, j)? != one {
        return Err(Error::NotInvertible("J · J_inv != 1⊗1".into()));
    }
    let mut rep = Report::new("right twist");
    let lhs = r.tensor3_mul(&r.delta_right(j)?, &r.one_then_tensor(j)?)?;
    let rhs = r.tensor3_mul(&r.delta_left(j)?, &r.tensor_then_one(j)?)?;
    rep.check(lhs == rhs, "(id⊗Δ)(J)(1⊗J) = (Δ⊗id)(J)(J⊗1)", || {
        format!("{} != {}", r.format_tensor3(&lhs), r.format_tensor3(&rhs))
    });
    let right = r.counit_right(j)?;
    let left = r.counit_left(j)?;
    rep.check(right == r.one(), "(id⊗ε)(J) = 1", || r.format_element(&right));
    rep.check(left == r.one(), "(ε⊗id)(J) = 1", || r.format_element(&left));
    Ok(rep)
}

/// Twisted homomorphism conditions J(σ⊗σ)Δ(h) = Δ(σ(h))J and ε∘σ = ε, on
/// every basis element. Also checks that σ is a unital algebra map, which
/// the Ore extension needs.
pub fn check_twisted_homomorphism<F: Ring>(
    r: &StructureConstantBialgebra<F>,
    sigma: &EndoMap<F>,
    j: &TensorElement<F>,
) -> Result<Report> {
    let mut rep = Report::new("twisted homomorphism");
    let names = r.basis_names();
    for h in 0..r.dim() {
        let e = r.basis(h);
        let lhs = r.tensor_mul(j, &sigma.apply_tensor(&r.delta(&e)?)?)?;
        let sh = sigma.apply(&e)?;
        let rhs = r.tensor_mul(&r.delta(&sh)?, j)?;
        rep.check(lhs == rhs, "J(σ⊗σ)Δ(h) = Δ(σ(h))J", || {
            format!("h = {}: {} != {}", names[h], r.format_tensor(&lhs), r.format_tensor(&rhs))
        });
        let es = r.counit(&sh)?;
        rep.check(es == *r.counit_basis(h), "ε∘σ = ε", || {
            format!("ε(σ({})) = {es}", names[h])
        });
    }
    let s1 = sigma.apply(&r.one())?;
    rep.check(s1 == r.one(), "σ(1) = 1", || r.format_element(&s1));
    for a in 0..r.dim() {
        for b in 0..r.dim() {
            let l = sigma.apply(&r.element(r.mult_basis(a, b).clone()))?;
            let rr = r.mul(sigma.image(a), sigma.image(b))?;
            rep.check(l == rr, "σ multiplicative", || {
                format!("σ({} {}) = {} but σ({})σ({}) = {}", names[a], names[b], r.format_element(&l), names[a], names[b], r.format_element(&rr))
            });
        }
    }
    Ok(rep)
}

/// Δ(t) = J (σ⊗σ)(J) (t⊗t) and ε(t) = 1.
pub fn check_t_condition<F: Ring>(
    r: &StructureConstantBialgebra<F>,
    sigma: &EndoMap<F>,
    j: &TensorElement<F>,
    t: &AlgElement<F>,
) -> Result<Report> {
    if t.is_zero() {
        return Err(Error::ZeroT);
    }
    let mut rep = Report::new("t condition");
    let lhs = r.delta(t)?;
    // multiply by t⊗t one leg at a time
    let jj = r.tensor_mul(j, &sigma.apply_tensor(j)?)?;
    let rhs = r.tensor_mul(
        &r.tensor_mul(&jj, &r.pure_tensor(t, &r.one())?)?,
        &r.pure_tensor(&r.one(), t)?,
    )?;
    rep.check(lhs == rhs, "Δ(t) = J(σ⊗σ)(J)(t⊗t)", || {
        format!("{} != {}", r.format_tensor(&lhs), r.format_tensor(&rhs))
    });
    let et = r.counit(t)?;
    rep.check(et.is_one(), "ε(t) = 1", || format!("ε(t) = {et}"));
    Ok(rep)
}

/// σ∘S = S∘σ, σ² = id, tJ¹S(J²) = 1 and tσ(S(J¹)J²) = 1.
pub fn check_antipode_conditions<F: Ring>(
    r: &StructureConstantBialgebra<F>,
    sigma: &EndoMap<F>,
    j: &TensorElement<F>,
    t: &AlgElement<F>,
) -> Result<Report> {
    let s = r.antipode_map()?;
    let mut rep = Report::new("antipode conditions");
    let names = r.basis_names();
    for h in 0..r.dim() {
        let e = r.basis(h);
        let ss = sigma.apply(&s.apply(&e)?)?;
        let ss2 = s.apply(&sigma.apply(&e)?)?;
        rep.check(ss == ss2, "σ∘S = S∘σ", || {
            format!("on {}: {} != {}", names[h], r.format_element(&ss), r.format_element(&ss2))
        });
        let s2 = sigma.apply(sigma.image(h))?;
        rep.check(s2 == e, "σ² = id", || format!("σ²({}) = {}", names[h], r.format_element(&s2)));
    }
    let j1_sj2 = r.mu(&r.map_tensor(j, |a| Ok(r.basis(a)), |b| Ok(s.image(b).clone()))?)?;
    let c1 = r.mul(t, &j1_sj2)?;
    rep.check(c1 == r.one(), "tJ¹S(J²) = 1", || r.format_element(&c1));
    let sj1_j2 = r.mu(&r.map_tensor(j, |a| Ok(s.image(a).clone()), |b| Ok(r.basis(b)))?)?;
    let c2 = r.mul(t, &sigma.apply(&sj1_j2)?)?;
    rep.check(c2 == r.one(), "tσ(S(J¹)J²) = 1", || r.format_element(&c2));
    Ok(rep)
}

fn require(name: &str, rep: Report) -> Result<()> {
    if rep.pass {
        Ok(())
    } else {
        Err(Error::HypothesisFailed {
            checker: name.to_string(),
            report: Box::new(rep),
        })
    }
}

/// Layout helper for the quotient: index of r_i z^k.
fn q_index(d: usize, i: usize, k: usize) -> usize {
    k * d + i
}

/// Builds R[z;σ]/⟨z² − t⟩ as a bialgebra, after checking the twist,
/// twisted-homomorphism and t conditions. The antipode is added when R has
/// one and the antipode conditions hold.
pub fn build_ore_quotient_hopf<F: Ring>(data: &TwistData<F>) -> Result<StructureConstantBialgebra<F>> {
    let TwistData { r, sigma, j, j_inv, t, .. } = data;
    require("check_right_twist", check_right_twist(r, j, j_inv)?)?;
    require("check_twisted_homomorphism", check_twisted_homomorphism(r, sigma, j)?)?;
    require("check_t_condition", check_t_condition(r, sigma, j, t)?)?;
    let with_antipode = r.has_antipode();
    if with_antipode {
        require("check_antipode_conditions", check_antipode_conditions(r, sigma, j, t)?)?;
    }
    assemble(data, with_antipode)
}

/// Writes out the tables of the quotient without checking hypotheses.
/// Used by the builder and by tests that want to see what goes wrong when a
/// hypothesis fails.
pub fn assemble<F: Ring>(data: &TwistData<F>, with_antipode: bool) -> Result<StructureConstantBialgebra<F>> {
    let TwistData { r, sigma, j, t, .. } = data;
    let d = r.dim();
    let u = r
        .unit_index()
        .ok_or_else(|| Error::InvalidParams("the unit of R must be a basis element".into()))?;
    let ctx = r.ctx().clone();
    let names: Vec<String> = (0..2)
        .flat_map(|k| r.basis_names().iter().map(move |n| format!("{n} z^{k}")))
        .collect();

    let mut mult = vec![vec![BTreeMap::new(); 2 * d]; 2 * d];
    for s in 0..2 {
        for a in 0..d {
            for uu in 0..2 {
                for b in 0..d {
                    let eb = r.basis(b);
                    let twisted = if s == 1 { sigma.apply(&eb)? } else { eb };
                    let mut prod = r.mul(&r.basis(a), &twisted)?;
                    let mut k = s + uu;
                    if k == 2 {
                        prod = r.mul(&prod, t)?;
                        k = 0;
                    }
                    mult[q_index(d, a, s)][q_index(d, b, uu)] =
                        prod.terms().iter().map(|(&i, c)| (q_index(d, i, k), c.clone())).collect();
                }
            }
        }
    }

    // Δ(r z) = Δ(r) J (z⊗z): the coefficients of Δ(r)J land on (r_a z, r_b z).
    let mut delta: Vec<SparseTensor<F>> = Vec::with_capacity(2 * d);
    for k in 0..2 {
        for a in 0..d {
            let mut da = r.delta(&r.basis(a))?;
            if k == 1 {
                da = r.tensor_mul(&da, j)?;
            }
            delta.push(
                da.terms()
                    .iter()
                    .map(|(&(x, y), c)| ((q_index(d, x, k), q_index(d, y, k)), c.clone()))
                    .collect(),
            );
        }
    }
    let counit: Vec<F> = (0..2).flat_map(|_| (0..d).map(|a| r.counit_basis(a).clone())).collect();

    let antipode = if with_antipode {
        let mut s_table = Vec::with_capacity(2 * d);
        for k in 0..2 {
            for a in 0..d {
                let sa = r.antipode(&r.basis(a))?;
                let img = if k == 1 { sigma.apply(&sa)? } else { sa };
                s_table.push(
                    img.terms()
                        .iter()
                        .map(|(&i, c)| (q_index(d, i, k), c.clone()))
                        .collect::<SparseVec<F>>(),
                );
            }
        }
        Some(s_table)
    } else {
        None
    };

    let mut gens: Vec<usize> = r.generators().map(|g| g.to_vec()).unwrap_or_default();
    gens.push(q_index(d, u, 1));
    StructureConstantBialgebra::new(
        ctx.clone(),
        names,
        mult,
        BTreeMap::from([(q_index(d, u, 0), F::one_in(&ctx))]),
        delta,
        counit,
        antipode,
    )?
    .with_generators(gens)
}

/// Reads (σ, J, t) back out of a quotient built over `r`: σ from z·h = σ(h)z,
/// J from the coefficients of Δ(z), and t = z².
pub fn extract_twist<F: Ring>(
    h: &StructureConstantBialgebra<F>,
    r: &StructureConstantBialgebra<F>,
) -> Result<(EndoMap<F>, TensorElement<F>, AlgElement<F>)> {
    let d = r.dim();
    if h.dim() != 2 * d {
        return Err(Error::SizeMismatch(format!("expected dimension {}, got {}", 2 * d, h.dim())));
    }
    let u = r
        .unit_index()
        .ok_or_else(|| Error::InvalidParams("the unit of R must be a basis element".into()))?;
    let z = q_index(d, u, 1);
    let not_in = |what: &str| Error::InvalidParams(format!("{what} is not of the expected shape"));
    let mut images = Vec::with_capacity(d);
    for a in 0..d {
        let p = h.mult_basis(z, a);
        if p.keys().any(|&i| i < d) {
            return Err(not_in("z·h"));
        }
        images.push(r.element(p.iter().map(|(&i, c)| (i - d, c.clone()))));
    }
    let sigma = EndoMap::new(r.id(), images)?;
    let dz = h.delta_basis(z);
    if dz.keys().any(|&(a, b)| a < d || b < d) {
        return Err(not_in("Δ(z)"));
    }
    let j = r.tensor(dz.iter().map(|(&(a, b), c)| ((a - d, b - d), c.clone())));
    let zz = h.mult_basis(z, z);
    if zz.keys().any(|&i| i >= d) {
        return Err(not_in("z²"));
    }
    let t = r.element(zz.iter().map(|(&i, c)| (i, c.clone())));
    Ok((sigma, j, t))
}

/// Serialized form of [`TwistData`].
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound(serialize = "F: Serialize", deserialize = "F: Deserialize<'de>"))]
pub struct TwistDataJson<F> {
    #[serde(rename = "R")]
    pub r: StructureJson<F>,
    pub sigma: Vec<Vec<(usize, F)>>,
    #[serde(rename = "J")]
    pub j: Vec<(usize, usize, F)>,
    #[serde(rename = "J_inv")]
    pub j_inv: Vec<(usize, usize, F)>,
    pub t: Vec<(usize, F)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_inv: Option<Vec<(usize, F)>>,
}

impl<F: Ring> TwistData<F> {
    pub fn to_json(&self) -> TwistDataJson<F> {
        let el = |a: &AlgElement<F>| a.terms().iter().map(|(&k, c)| (k, c.clone())).collect();
        let ten = |a: &TensorElement<F>| a.terms().iter().map(|(&(x, y), c)| (x, y, c.clone())).collect();
        TwistDataJson {
            r: self.r.to_json(),
            sigma: self.sigma.images().iter().map(el).collect(),
            j: ten(&self.j),
            j_inv: ten(&self.j_inv),
            t: el(&self.t),
            t_inv: self.t_inv.as_ref().map(el),
        }
    }

    pub fn from_json(j: TwistDataJson<F>) -> Result<Self> {
        let r = StructureConstantBialgebra::from_json(j.r)?;
        let sigma = EndoMap::new(
            r.id(),
            j.sigma
                .into_iter()
                .map(|t| r.element_from_terms_json(t))
                .collect::<Result<Vec<_>>>()?,
        )?;
        let jj = r.tensor_from_terms_json(j.j)?;
        let ji = r.tensor_from_terms_json(j.j_inv)?;
        let t = r.element_from_terms_json(j.t)?;
        let ti = j.t_inv.map(|x| r.element_from_terms_json(x)).transpose()?;
        TwistData::new(r, sigma, jj, ji, t, ti)
    }
}

impl<F: Ring + Serialize> TwistData<F> {
    pub fn export_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
        s.push('\n');
        s
    }
}

impl<F: Ring + DeserializeOwned> TwistData<F> {
    pub fn import_json(text: &str) -> Result<Self> {
        let j: TwistDataJson<F> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(j)
    }
}

/// Runs the four hypothesis checkers in order and gathers their reports.
pub fn check_all_hypotheses<F: Ring>(data: &TwistData<F>) -> Result<Report> {
    let TwistData { r, sigma, j, j_inv, t, .. } = data;
    let mut rep = Report::new("twist data");
    rep.absorb(check_right_twist(r, j, j_inv)?);
    rep.absorb(check_twisted_homomorphism(r, sigma, j)?);
    rep.absorb(check_t_condition(r, sigma, j, t)?);
    if r.has_antipode() {
        rep.absorb(check_antipode_conditions(r, sigma, j, t)?);
    }
    Ok(rep)
}
