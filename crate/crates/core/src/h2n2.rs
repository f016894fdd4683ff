//! The Hopf algebras H_{2n²} = F[Z_n × Z_n][z;σ]/⟨z² − t⟩.
//!
//! With x, y generating Z_n × Z_n and q a primitive n-th root of unity:
//! e_j = (1/n) Σ_i q^{-ij} x^i, σ swaps x and y, J = Σ_i e_i ⊗ y^i and
//! t = Σ_i e_i y^i.

use crate::bialgebra::{AbelianGroupAlgebra, AlgElement, EndoMap, StructureConstantBialgebra, TensorElement};
use crate::error::{Error, Result};
use crate::exactnum::{Cyclo, CycloCtx, Rat};
use crate::ore_twist::{self, TwistData};
use crate::report::Report;

/// Parameters of one member of the family.
#[derive(Debug, Clone, PartialEq)]
pub struct H2n2Params {
    pub n: u64,
    pub q: Cyclo,
    pub ctx: CycloCtx,
}

impl H2n2Params {
    pub fn new(ctx: &CycloCtx, n: u64, q: Cyclo) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams(format!("order n must be > 1, got {n}")));
        }
        if q.ctx() != ctx {
            return Err(Error::ContextMismatch {
                left: ctx.conductor(),
                right: q.ctx().conductor(),
            });
        }
        if !q.is_primitive_root(n) {
            return Err(Error::NotPrimitiveRoot(q.to_string(), n));
        }
        Ok(H2n2Params { n, q, ctx: ctx.clone() })
    }

    /// q = ζ_N^{N/n} in the given field; n must divide N.
    pub fn standard_in(ctx: &CycloCtx, n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams(format!("order n must be > 1, got {n}")));
        }
        let q = ctx.primitive_root(n)?;
        Self::new(ctx, n, q)
    }

    /// q = ζ_n in Q(ζ_n).
    pub fn standard(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams(format!("order n must be > 1, got {n}")));
        }
        Self::standard_in(&CycloCtx::new(n)?, n)
    }

    /// q^k for any integer k.
    pub fn q_pow(&self, k: i64) -> Cyclo {
        self.q.pow(k).expect("q is a nonzero root of unity")
    }
}

/// One fully built member of the family, with its ingredients.
#[derive(Debug, Clone)]
pub struct H2n2 {
    pub params: H2n2Params,
    pub group: AbelianGroupAlgebra<Cyclo>,
    /// The group algebra F[Z_n × Z_n]; basis x^i y^j at index i·n + j.
    pub r: StructureConstantBialgebra<Cyclo>,
    /// H_{2n²}; basis x^i y^j z^k at index k·n² + i·n + j.
    pub h: StructureConstantBialgebra<Cyclo>,
    pub sigma: EndoMap<Cyclo>,
    pub j: TensorElement<Cyclo>,
    pub j_inv: TensorElement<Cyclo>,
    pub t: AlgElement<Cyclo>,
    pub t_inv: AlgElement<Cyclo>,
}

/// F[Z_n × Z_n] with generators x, y.
pub fn group_algebra(params: &H2n2Params) -> Result<AbelianGroupAlgebra<Cyclo>> {
    AbelianGroupAlgebra::new(&params.ctx, &[params.n, params.n], &["x", "y"])
}

fn r_index(n: u64, i: i64, j: i64) -> usize {
    let n = n as i64;
    (i.rem_euclid(n) * n + j.rem_euclid(n)) as usize
}

/// e_0, …, e_{n−1} in the x-leg of F[Z_n × Z_n].
pub fn idempotents(params: &H2n2Params, r: &StructureConstantBialgebra<Cyclo>) -> Vec<AlgElement<Cyclo>> {
    leg_idempotents(params, r, false)
}

/// ē_0, …, ē_{n−1}: the same idempotents in the y-leg.
pub fn idempotents_bar(params: &H2n2Params, r: &StructureConstantBialgebra<Cyclo>) -> Vec<AlgElement<Cyclo>> {
    leg_idempotents(params, r, true)
}

fn leg_idempotents(params: &H2n2Params, r: &StructureConstantBialgebra<Cyclo>, bar: bool) -> Vec<AlgElement<Cyclo>> {
    let n = params.n as i64;
    let inv_n = Rat::new(1, n);
    (0..n)
        .map(|j| {
            r.element((0..n).map(|i| {
                let idx = if bar { r_index(params.n, 0, i) } else { r_index(params.n, i, 0) };
                (idx, params.q_pow(-i * j).scale(&inv_n))
            }))
        })
        .collect()
}

/// x^i y^j as an element of R.
pub fn monomial(params: &H2n2Params, r: &StructureConstantBialgebra<Cyclo>, i: i64, j: i64) -> AlgElement<Cyclo> {
    r.basis(r_index(params.n, i, j))
}

/// The swap automorphism x^i y^s ↦ x^s y^i.
pub fn swap(params: &H2n2Params, r: &StructureConstantBialgebra<Cyclo>) -> Result<EndoMap<Cyclo>> {
    let n = params.n as i64;
    let images = (0..n)
        .flat_map(|i| (0..n).map(move |s| (i, s)))
        .map(|(i, s)| monomial(params, r, s, i))
        .collect();
    EndoMap::new(r.id(), images)
}

/// J = Σ_i e_i ⊗ y^i and J⁻¹ = Σ_j e_j ⊗ y^{-j}.
pub fn build_twist(
    params: &H2n2Params,
    r: &StructureConstantBialgebra<Cyclo>,
) -> Result<(TensorElement<Cyclo>, TensorElement<Cyclo>)> {
    let e = idempotents(params, r);
    let n = params.n as i64;
    let mut j = r.tensor([]);
    let mut j_inv = r.tensor([]);
    for i in 0..n {
        j = j.try_add(&r.pure_tensor(&e[i as usize], &monomial(params, r, 0, i))?)?;
        j_inv = j_inv.try_add(&r.pure_tensor(&e[i as usize], &monomial(params, r, 0, -i))?)?;
    }
    Ok((j, j_inv))
}

/// t = Σ_i e_i y^i and t⁻¹ = Σ_i e_i y^{-i}.
pub fn build_t(
    params: &H2n2Params,
    r: &StructureConstantBialgebra<Cyclo>,
) -> Result<(AlgElement<Cyclo>, AlgElement<Cyclo>)> {
    let e = idempotents(params, r);
    let n = params.n as i64;
    let mut t = r.zero();
    let mut t_inv = r.zero();
    for i in 0..n {
        t = t.try_add(&r.mul(&e[i as usize], &monomial(params, r, 0, i))?)?;
        t_inv = t_inv.try_add(&r.mul(&e[i as usize], &monomial(params, r, 0, -i))?)?;
    }
    Ok((t, t_inv))
}

/// Assembles H_{2n²} through the generic quotient builder.
pub fn build_h2n2(params: &H2n2Params) -> Result<H2n2> {
    let group = group_algebra(params)?;
    let r = group.algebra.clone();
    let sigma = swap(params, &r)?;
    let (j, j_inv) = build_twist(params, &r)?;
    let (t, t_inv) = build_t(params, &r)?;
    let data = TwistData::new(r.clone(), sigma.clone(), j.clone(), j_inv.clone(), t.clone(), Some(t_inv.clone()))?;
    let h = ore_twist::build_ore_quotient_hopf(&data)?;
    Ok(H2n2 {
        params: params.clone(),
        group,
        r,
        h,
        sigma,
        j,
        j_inv,
        t,
        t_inv,
    })
}

impl H2n2 {
    pub fn n(&self) -> u64 {
        self.params.n
    }

    pub fn dim(&self) -> usize {
        self.h.dim()
    }

    /// Index of x^i y^j z^k in H.
    pub fn h_index(&self, i: i64, j: i64, k: i64) -> usize {
        let n2 = (self.n() * self.n()) as usize;
        k.rem_euclid(2) as usize * n2 + r_index(self.n(), i, j)
    }

    /// Exponents (i, j, k) of the basis element at `idx`.
    pub fn exponents(&self, idx: usize) -> (u64, u64, u64) {
        let n = self.n() as usize;
        let k = idx / (n * n);
        let rest = idx % (n * n);
        ((rest / n) as u64, (rest % n) as u64, k as u64)
    }

    pub fn x(&self) -> AlgElement<Cyclo> {
        self.h.basis(self.h_index(1, 0, 0))
    }

    pub fn y(&self) -> AlgElement<Cyclo> {
        self.h.basis(self.h_index(0, 1, 0))
    }

    pub fn z(&self) -> AlgElement<Cyclo> {
        self.h.basis(self.h_index(0, 0, 1))
    }

    pub fn monomial_h(&self, i: i64, j: i64, k: i64) -> AlgElement<Cyclo> {
        self.h.basis(self.h_index(i, j, k))
    }

    /// The image in H of an element of R.
    pub fn embed(&self, a: &AlgElement<Cyclo>) -> AlgElement<Cyclo> {
        self.h.element(a.terms().iter().map(|(&i, c)| (i, c.clone())))
    }

    pub fn embed_tensor(&self, a: &TensorElement<Cyclo>) -> TensorElement<Cyclo> {
        self.h.tensor(a.terms().iter().map(|(&k, c)| (k, c.clone())))
    }

    pub fn twist_data(&self) -> TwistData<Cyclo> {
        TwistData {
            r: self.r.clone(),
            sigma: self.sigma.clone(),
            j: self.j.clone(),
            j_inv: self.j_inv.clone(),
            t: self.t.clone(),
            t_inv: Some(self.t_inv.clone()),
        }
    }

    pub fn export_json(&self) -> String {
        self.h.export_json()
    }

    /// Every identity about e_i, ē_i, J and t used by the construction,
    /// checked in R (and, for the last two, in H).
    pub fn check_family_identities(&self) -> Result<Report> {
        let p = &self.params;
        let r = &self.r;
        let n = p.n as i64;
        let mut rep = Report::new(format!("family identities n={} q={}", p.n, p.q));
        let e = idempotents(p, r);
        let eb = idempotents_bar(p, r);

        // completeness, orthogonality and the eigenvalue relations
        let mut sum = r.zero();
        for ej in &e {
            sum = sum.try_add(ej)?;
        }
        rep.check(sum == r.one(), "Σ e_i = 1", || r.format_element(&sum));
        for a in 0..n as usize {
            for b in 0..n as usize {
                let prod = r.mul(&e[a], &e[b])?;
                let want = if a == b { e[a].clone() } else { r.zero() };
                rep.check(prod == want, "e_j e_l = δ_jl e_j", || {
                    format!("e_{a} e_{b} = {}", r.format_element(&prod))
                });
            }
            for k in 0..n {
                let lhs = r.mul(&e[a], &monomial(p, r, k, 0))?;
                let rhs = e[a].scale(&p.q_pow(a as i64 * k));
                rep.check(lhs == rhs, "e_j x^k = q^{jk} e_j", || format!("j={a} k={k}"));
                let lhs = r.mul(&eb[a], &monomial(p, r, 0, k))?;
                let rhs = eb[a].scale(&p.q_pow(a as i64 * k));
                rep.check(lhs == rhs, "ē_i y^k = q^{ik} ē_i", || format!("i={a} k={k}"));
            }
            // Δ(e_i) = Σ_k e_k ⊗ e_{i−k}
            let mut want = r.tensor([]);
            for k in 0..n {
                let other = (a as i64 - k).rem_euclid(n) as usize;
                want = want.try_add(&r.pure_tensor(&e[k as usize], &e[other])?)?;
            }
            let got = r.delta(&e[a])?;
            rep.check(got == want, "Δ(e_i) = Σ e_k ⊗ e_{i−k}", || format!("i={a}"));
        }

        // J, its inverse, and the changed-sides form Σ x^i ⊗ ē_i
        let one = r.one_tensor();
        let jj = r.tensor_mul(&self.j, &self.j_inv)?;
        rep.check(jj == one, "J J⁻¹ = 1⊗1", || r.format_tensor(&jj));
        let mut sides = r.tensor([]);
        for i in 0..n {
            sides = sides.try_add(&r.pure_tensor(&monomial(p, r, i, 0), &eb[i as usize])?)?;
        }
        rep.check(sides == self.j, "J = Σ x^i ⊗ ē_i", || r.format_tensor(&sides));

        // t
        let tt = r.mul(&self.t, &self.t_inv)?;
        rep.check(tt == r.one(), "t t⁻¹ = 1", || r.format_element(&tt));
        let st = self.sigma.apply(&self.t)?;
        rep.check(st == self.t, "σ(t) = t", || r.format_element(&st));
        let s_t = r.antipode(&self.t)?;
        rep.check(s_t == self.t, "S(t) = t", || r.format_element(&s_t));
        let mut want = r.tensor([]);
        for i in 0..n {
            for m in 0..n {
                let left = r.mul(&e[i as usize], &monomial(p, r, 0, m))?;
                let right = r.mul(&e[(m - i).rem_euclid(n) as usize], &monomial(p, r, 0, m))?;
                want = want.try_add(&r.pure_tensor(&left, &right)?)?;
            }
        }
        let dt = r.delta(&self.t)?;
        rep.check(dt == want, "Δ(t) = Σ e_i y^m ⊗ e_{m−i} y^m", || r.format_tensor(&dt));

        // non-commutative, non-cocommutative
        let h = &self.h;
        let xz = h.mul(&self.x(), &self.z())?;
        let zx = h.mul(&self.z(), &self.x())?;
        rep.check(xz != zx, "xz ≠ zx", || h.format_element(&xz));
        let dz = h.delta(&self.z())?;
        rep.check(dz != dz.flip(), "Δ(z) ≠ flip Δ(z)", || h.format_tensor(&dz));
        Ok(rep)
    }

    /// Witness computation for the Hopf ideal lemma:
    /// (x − y) z · (z t⁻¹) = x − y in H.
    pub fn check_hopf_ideal_lemma(&self) -> Result<Report> {
        check_hopf_ideal_identity(self, &self.t_inv)
    }
}

/// (x − y) z · (z · t_inv) = x − y, for a caller-supplied t_inv.
pub fn check_hopf_ideal_identity(h2: &H2n2, t_inv: &AlgElement<Cyclo>) -> Result<Report> {
    let h = &h2.h;
    let mut rep = Report::new("hopf ideal lemma");
    let x_minus_y = h2.x().try_sub(&h2.y())?;
    let lhs = h.mul_all([&x_minus_y, &h2.z(), &h2.z(), &h2.embed(&h2.r.adopt(t_inv))])?;
    rep.check(lhs == x_minus_y, "(x−y)z(zt⁻¹) = x−y", || h.format_element(&lhs));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n1_is_rejected() {
        assert!(matches!(H2n2Params::standard(1), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn non_primitive_q_is_rejected() {
        let ctx = CycloCtx::new(4).unwrap();
        assert!(matches!(
            H2n2Params::new(&ctx, 4, ctx.int(-1)),
            Err(Error::NotPrimitiveRoot(..))
        ));
    }

    #[test]
    fn h8_idempotents_and_t() {
        let p = H2n2Params::standard(2).unwrap();
        let g = group_algebra(&p).unwrap();
        let r = &g.algebra;
        let half = p.ctx.rational(Rat::new(1, 2));
        let e = idempotents(&p, r);
        let x = monomial(&p, r, 1, 0);
        let y = monomial(&p, r, 0, 1);
        let xy = monomial(&p, r, 1, 1);
        assert_eq!(e[0], r.one().try_add(&x).unwrap().scale(&half));
        assert_eq!(e[1], r.one().try_sub(&x).unwrap().scale(&half));
        let (t, _) = build_t(&p, r).unwrap();
        let want = r.one().try_add(&x).unwrap().try_add(&y).unwrap().try_sub(&xy).unwrap().scale(&half);
        assert_eq!(t, want);
    }

    #[test]
    fn family_identities_small_n() {
        for n in 2..=4 {
            let h = build_h2n2(&H2n2Params::standard(n).unwrap()).unwrap();
            assert_eq!(h.dim() as u64, 2 * n * n);
            let rep = h.check_family_identities().unwrap();
            assert!(rep.pass, "{}", rep.to_markdown());
            assert!(h.check_hopf_ideal_lemma().unwrap().pass);
        }
    }

    #[test]
    fn corrupted_t_inverse_fails_the_ideal_lemma() {
        let h = build_h2n2(&H2n2Params::standard(2).unwrap()).unwrap();
        // for n = 2, t⁻¹ = t, so shift it by a group-like instead
        let bad = h.r.mul(&h.t_inv, &monomial(&h.params, &h.r, 1, 0)).unwrap();
        assert!(!check_hopf_ideal_identity(&h, &bad).unwrap().pass);
    }
}
