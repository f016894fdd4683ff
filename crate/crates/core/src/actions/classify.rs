//! Classification of H_8 actions on the quantum plane vu = p uv.
//!
//! H_8 is H_{2n²} with n = 2 and q = −1. A module-algebra action restricts
//! to graded automorphisms x, y of A = k⟨u, v⟩/(vu − p uv), and z swaps u
//! and v. For p ≠ ±1 the graded automorphisms are diagonal, which is the
//! torus branch. For p = −1 they may also be anti-diagonal; x and y then
//! get symbolic coefficients u ↦ α₀ v, v ↦ α₁ u (resp. β) and the relations
//! of H_8 become polynomial equations in α, β.

use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::actions::act::{Gen, LinearAction};
use crate::actions::spec::{is_inner_faithful, ActionSpec};
use crate::actions::symbolic::{solve, SymCtx, SymPoly};
use crate::actions::verify::{
    annihilator_dimension, check_action_compat_with_q, verify_module_algebra,
};
use crate::error::{Error, Result};
use crate::exactnum::{Cyclo, CycloCtx};
use crate::h2n2::{build_h2n2, H2n2, H2n2Params};
use crate::qpa::{QPAlgebra, QPMatrix, QPolynomial};
use crate::report::Report;

/// Degree up to which candidate actions are verified.
pub const CLASSIFY_DEGREE_BOUND: u32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    InnerFaithfulActionExists,
    NoInnerFaithfulAction,
    NoAction,
}

/// What happened to one torus spec (τ = (12), b ∈ Z_2²).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TorusOutcome {
    pub spec: ActionSpec,
    pub compatible: bool,
    pub module_algebra: bool,
    pub inner_faithful: bool,
    pub first_violation: Option<String>,
}

/// One solution of the anti-diagonal system and how it fares.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SwapOutcome {
    pub alpha: [String; 2],
    pub beta: [String; 2],
    pub module_algebra: bool,
    /// dim Ann_H(A_{≤d}); zero means faithful, hence inner faithful.
    pub annihilator_dim: usize,
    pub xz_vs_zy_on_vu: [String; 2],
    /// yz·(vu); yz is not equal to xz in H_8, so this is informational.
    pub yz_on_vu: String,
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub p: String,
    pub conductor: u64,
    pub verdict: Verdict,
    pub specs: Vec<TorusOutcome>,
    pub swap_solutions: Vec<SwapOutcome>,
    pub witnesses: Vec<String>,
    pub transcript: Vec<String>,
}

impl ClassificationReport {
    pub fn to_markdown(&self) -> String {
        let mut s = format!("# H_8 on the quantum plane, p = {}\n\nverdict: {:?}\n\n", self.p, self.verdict);
        s.push_str("## torus specs\n\n");
        for o in &self.specs {
            s.push_str(&format!(
                "- τ = {}, b = {:?}: compatible {}, module algebra {}, inner faithful {}\n",
                o.spec.tau_cycles(),
                o.spec.b,
                o.compatible,
                o.module_algebra,
                o.inner_faithful
            ));
        }
        if !self.swap_solutions.is_empty() {
            s.push_str("\n## anti-diagonal solutions\n\n");
            for o in &self.swap_solutions {
                s.push_str(&format!(
                    "- α = ({}, {}), β = ({}, {}): module algebra {}, annihilator dimension {}\n",
                    o.alpha[0], o.alpha[1], o.beta[0], o.beta[1], o.module_algebra, o.annihilator_dim
                ));
            }
        }
        s.push_str("\n## witnesses\n\n");
        for w in &self.witnesses {
            s.push_str(&format!("- {w}\n"));
        }
        s.push_str("\n## transcript\n\n");
        for t in &self.transcript {
            s.push_str(&format!("    {t}\n"));
        }
        s
    }
}

/// Classifies H_8-module-algebra structures on k⟨u, v⟩/(vu − p uv) with z
/// swapping u and v.
pub fn classify_h8_quantum_plane(p: &Cyclo) -> Result<ClassificationReport> {
    if p.is_zero() {
        return Err(Error::InvalidParams("p must be nonzero".into()));
    }
    let conductor = p.ctx().conductor().lcm(&4);
    let ctx = CycloCtx::new(conductor)?;
    let p = p.embed(&ctx)?;
    let h8 = build_h2n2(&H2n2Params::standard_in(&ctx, 2)?)?;
    let m = QPMatrix::quantum_plane(&p)?;
    let q = h8.params.q.clone();
    let minus_one = ctx.int(-1);
    let mut transcript = vec![format!("A = k<u, v>/(vu - p uv), p = {p}, working in Q(zeta{conductor})")];
    let mut witnesses = Vec::new();

    transcript.push("torus branch: x·u = q^b1 u, x·v = q^b2 v, y·u = q^b2 u, y·v = q^b1 v, z swaps u, v".into());
    let mut specs = Vec::new();
    for b1 in 0..2 {
        for b2 in 0..2 {
            let spec = ActionSpec::new(2, vec![2, 1], vec![b1, b2])?;
            let compat = check_action_compat_with_q(&m, &spec, &q)?;
            let full = verify_module_algebra(&h8, &LinearAction::from_spec(&h8, &m, &spec, 4)?, CLASSIFY_DEGREE_BOUND)?;
            let faithful = is_inner_faithful(&spec);
            let b12 = spec.b_matrix().get(0, 1);
            transcript.push(format!(
                "  b = ({b1}, {b2}): B12 = {b12}, p² = q^B12 {}, module algebra {}, f injective {}",
                yes(compat.pass),
                yes(full.pass),
                yes(faithful.inner_faithful)
            ));
            let first_violation = full.violations.first().map(|v| format!("{}: {}", v.check, v.detail));
            if let Some(v) = &first_violation {
                transcript.push(format!("    first failure: {v}"));
            }
            if let Some((i, j)) = faithful.witness {
                transcript.push(format!("    x^{i} y^{j} acts trivially"));
            }
            specs.push(TorusOutcome {
                spec,
                compatible: compat.pass,
                module_algebra: full.pass,
                inner_faithful: faithful.inner_faithful,
                first_violation,
            });
        }
    }
    let p_sq = p.clone() * &p;
    if p == minus_one {
        // For p = −1 compatibility reads p² = (−1)^{B12}, and p² = 1.
        transcript.push(format!(
            "p = -1: p² = {p_sq}, so compatibility forces B12 = 0, i.e. b1 = b2; (−1)^1 = -1 ≠ p²"
        ));
        witnesses.push(format!("q^B12 with B12 = 1 is -1 but p² = {p_sq}"));
    }

    let mut swap_solutions = Vec::new();
    if p == minus_one {
        mixed_exclusion(&ctx, &p, &mut transcript, &mut witnesses)?;
        swap_solutions = swap_branch(&h8, &ctx, &p, &m, &mut transcript, &mut witnesses)?;
    } else {
        transcript.push("p ≠ -1: graded automorphisms of A are diagonal, so the torus branch is exhaustive".into());
    }

    let torus_exists = specs.iter().any(|s| s.module_algebra);
    let torus_if = specs.iter().any(|s| s.module_algebra && s.inner_faithful);
    let swap_exists = swap_solutions.iter().any(|s| s.module_algebra);
    let swap_if = swap_solutions.iter().any(|s| s.module_algebra && s.annihilator_dim == 0);
    let verdict = if torus_if || swap_if {
        Verdict::InnerFaithfulActionExists
    } else if torus_exists || swap_exists {
        Verdict::NoInnerFaithfulAction
    } else {
        Verdict::NoAction
    };
    for s in specs.iter().filter(|s| s.module_algebra && !s.inner_faithful) {
        witnesses.push(format!(
            "b = {:?} gives an action whose f map is not injective",
            s.spec.b
        ));
    }
    transcript.push(format!("verdict: {verdict:?}"));
    Ok(ClassificationReport {
        p: p.to_string(),
        conductor,
        verdict,
        specs,
        swap_solutions,
        witnesses,
        transcript,
    })
}

fn yes(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

fn symbolic_plane(field: &CycloCtx, p: &Cyclo, names: &[&str]) -> Result<(SymCtx, Arc<QPAlgebra<SymPoly>>)> {
    let sctx = SymCtx::new(field, names);
    let entries = vec![
        vec![sctx.constant(field.one()), sctx.constant(p.inv()?)],
        vec![sctx.constant(p.clone()), sctx.constant(field.one())],
    ];
    let alg = QPAlgebra::new(QPMatrix::new(&sctx, entries)?, 4);
    Ok((sctx, alg))
}

/// The anti-diagonal map u ↦ a v, v ↦ b u, or the diagonal u ↦ a u, v ↦ b v.
fn images(alg: &Arc<QPAlgebra<SymPoly>>, a: SymPoly, b: SymPoly, swap: bool) -> Vec<QPolynomial<SymPoly>> {
    let u = QPolynomial::generator(alg, 0);
    let v = QPolynomial::generator(alg, 1);
    if swap {
        vec![v.scale(&a), u.scale(&b)]
    } else {
        vec![u.scale(&a), v.scale(&b)]
    }
}

/// One of x, y diagonal and the other anti-diagonal is impossible: zy = xz
/// (or zx = yz) on u compares polynomials with different support.
fn mixed_exclusion(field: &CycloCtx, p: &Cyclo, transcript: &mut Vec<String>, witnesses: &mut Vec<String>) -> Result<()> {
    let (sctx, alg) = symbolic_plane(field, p, &["a0", "a1", "b0", "b1"])?;
    let q = sctx.constant(field.int(-1));
    let z = images(&alg, sctx.constant(field.one()), sctx.constant(field.one()), true);
    for (x_swap, label) in [(false, "x diagonal, y anti-diagonal"), (true, "x anti-diagonal, y diagonal")] {
        let x = images(&alg, sctx.var(0), sctx.var(1), x_swap);
        let y = images(&alg, sctx.var(2), sctx.var(3), !x_swap);
        let act = LinearAction::new(&alg, 2, &q, x, y, z.clone())?;
        let u = QPolynomial::generator(&alg, 0);
        let lhs = act.act_gen_word(&[Gen::Z, Gen::Y], &u)?;
        let rhs = act.act_gen_word(&[Gen::X, Gen::Z], &u)?;
        let ls: Vec<_> = lhs.terms().keys().cloned().collect();
        let rs: Vec<_> = rhs.terms().keys().cloned().collect();
        if ls != rs {
            transcript.push(format!(
                "{label}: zy·u = {lhs} and xz·u = {rhs} have different support, so both coefficients vanish and x or y is not invertible"
            ));
            witnesses.push(format!("{label} excluded by zy·u = {lhs} vs xz·u = {rhs}"));
        } else {
            transcript.push(format!("{label}: support check inconclusive ({lhs} vs {rhs})"));
        }
    }
    Ok(())
}

fn coefficient_equations(poly: &QPolynomial<SymPoly>) -> Vec<SymPoly> {
    poly.terms().values().cloned().collect()
}

fn swap_branch(
    h8: &H2n2,
    field: &CycloCtx,
    p: &Cyclo,
    m: &QPMatrix<Cyclo>,
    transcript: &mut Vec<String>,
    witnesses: &mut Vec<String>,
) -> Result<Vec<SwapOutcome>> {
    transcript.push("anti-diagonal branch: x·u = α0 v, x·v = α1 u, y·u = β0 v, y·v = β1 u, z swaps u, v".into());
    let (sctx, alg) = symbolic_plane(field, p, &["α0", "α1", "β0", "β1"])?;
    let q = sctx.constant(field.int(-1));
    let x = images(&alg, sctx.var(0), sctx.var(1), true);
    let y = images(&alg, sctx.var(2), sctx.var(3), true);
    let z = images(&alg, sctx.constant(field.one()), sctx.constant(field.one()), true);
    let act = LinearAction::new(&alg, 2, &q, x, y, z)?;
    let psym = sctx.constant(p.clone());

    let zvu = act.act_z_word(&[1, 0])?;
    let zuv = act.act_z_word(&[0, 1])?;
    transcript.push(format!("z·(vu) = {zvu}"));
    transcript.push(format!("z·(uv) = {zuv}"));
    let rel = zvu.sub(&zuv.scale(&psym))?;
    let mut eqs = coefficient_equations(&rel);
    transcript.push(format!(
        "z·(vu) = p z·(uv) gives {}",
        eqs.iter().map(|e| format!("{e} = 0")).collect::<Vec<_>>().join(", ")
    ));
    let relations: [(&str, Vec<Gen>, Vec<Gen>); 5] = [
        ("x² = 1", vec![Gen::X, Gen::X], vec![]),
        ("y² = 1", vec![Gen::Y, Gen::Y], vec![]),
        ("xy = yx", vec![Gen::X, Gen::Y], vec![Gen::Y, Gen::X]),
        ("xz = zy", vec![Gen::X, Gen::Z], vec![Gen::Z, Gen::Y]),
        ("zx = yz", vec![Gen::Z, Gen::X], vec![Gen::Y, Gen::Z]),
    ];
    for (name, l, r) in &relations {
        let mut found = Vec::new();
        for s in 0..2 {
            let g = QPolynomial::generator(&alg, s);
            let d = act.act_gen_word(l, &g)?.sub(&act.act_gen_word(r, &g)?)?;
            found.extend(coefficient_equations(&d));
        }
        transcript.push(format!(
            "{name} on u, v gives {}",
            if found.is_empty() {
                "nothing".to_string()
            } else {
                found.iter().map(|e| format!("{e} = 0")).collect::<Vec<_>>().join(", ")
            }
        ));
        eqs.extend(found);
    }
    let sols = solve(&sctx, &eqs);
    transcript.extend(sols.steps.iter().cloned());
    if !sols.complete {
        transcript.push("warning: the solution set may be incomplete".into());
    }

    let mut outcomes = Vec::new();
    let calg = QPAlgebra::new(m.clone(), 4);
    for point in &sols.points {
        let cu = QPolynomial::generator(&calg, 0);
        let cv = QPolynomial::generator(&calg, 1);
        let xi = vec![cv.scale(&point[0]), cu.scale(&point[1])];
        let yi = vec![cv.scale(&point[2]), cu.scale(&point[3])];
        let zi = vec![cv.clone(), cu.clone()];
        let cact = LinearAction::new(&calg, 2, &h8.params.q, xi, yi, zi)?;
        let rep: Report = verify_module_algebra(h8, &cact, CLASSIFY_DEGREE_BOUND)?;
        let vu = QPolynomial::word(&calg, &[1, 0])?;
        let xz = cact.act_gen_word(&[Gen::X, Gen::Z], &vu)?;
        let zy = cact.act_gen_word(&[Gen::Z, Gen::Y], &vu)?;
        let yz = cact.act_gen_word(&[Gen::Y, Gen::Z], &vu)?;
        let label = format!("α = ({}, {}), β = ({}, {})", point[0], point[1], point[2], point[3]);
        transcript.push(format!("{label}: xz·(vu) = {xz}, zy·(vu) = {zy} ({})", if xz == zy { "equal" } else { "different" }));
        transcript.push(format!(
            "  yz·(vu) = {yz} ({} xz·(vu)); yz = zx is a different element of H_8, so this comparison is not a relation",
            if yz == xz { "equal to" } else { "differs from" }
        ));
        if xz != zy {
            witnesses.push(format!("{label}: xz·(vu) = {xz} ≠ zy·(vu) = {zy}"));
        }
        for v in rep.violations.iter().take(3) {
            transcript.push(format!("  {}: {}", v.check, v.detail));
        }
        if let Some(v) = rep.violations.first() {
            witnesses.push(format!("{label}: {} fails, {}", v.check, v.detail));
        }
        let ann = annihilator_dimension(h8, &cact, CLASSIFY_DEGREE_BOUND)?;
        transcript.push(format!("  annihilator of A up to degree {CLASSIFY_DEGREE_BOUND} has dimension {ann}"));
        outcomes.push(SwapOutcome {
            alpha: [point[0].to_string(), point[1].to_string()],
            beta: [point[2].to_string(), point[3].to_string()],
            module_algebra: rep.pass,
            annihilator_dim: ann,
            xz_vs_zy_on_vu: [xz.to_string(), zy.to_string()],
            yz_on_vu: yz.to_string(),
            violations: rep.violations.iter().map(|v| format!("{}: {}", v.check, v.detail)).collect(),
        });
    }
    if sols.points.is_empty() {
        transcript.push("the anti-diagonal system has no solution".into());
    }
    Ok(outcomes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_equal_i_has_inner_faithful_action() {
        let ctx = CycloCtx::new(4).unwrap();
        let rep = classify_h8_quantum_plane(&ctx.root(1)).unwrap();
        assert_eq!(rep.verdict, Verdict::InnerFaithfulActionExists, "{:#?}", rep.transcript);
        let good: Vec<_> = rep.specs.iter().filter(|s| s.module_algebra).map(|s| s.spec.b.clone()).collect();
        assert_eq!(good, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn p_equal_one_has_no_inner_faithful_action() {
        let ctx = CycloCtx::new(1).unwrap();
        let rep = classify_h8_quantum_plane(&ctx.one()).unwrap();
        assert_eq!(rep.verdict, Verdict::NoInnerFaithfulAction);
        assert!(rep.specs.iter().filter(|s| s.compatible).all(|s| !s.inner_faithful));
    }

    #[test]
    fn generic_p_has_no_action() {
        let ctx = CycloCtx::new(3).unwrap();
        let rep = classify_h8_quantum_plane(&ctx.root(1)).unwrap();
        assert_eq!(rep.verdict, Verdict::NoAction);
        assert_eq!(rep.conductor, 12);
    }

    #[test]
    fn p_minus_one_admits_anti_diagonal_action() {
        let ctx = CycloCtx::new(2).unwrap();
        let rep = classify_h8_quantum_plane(&ctx.int(-1)).unwrap();
        assert_eq!(rep.swap_solutions.len(), 2);
        let i = CycloCtx::new(4).unwrap().root(1);
        for s in &rep.swap_solutions {
            assert!(s.module_algebra, "{:?}", s.violations);
            assert_eq!(s.annihilator_dim, 0);
            assert_eq!(s.xz_vs_zy_on_vu[0], s.xz_vs_zy_on_vu[1]);
            assert!(s.alpha[0] == i.to_string() || s.alpha[0] == (-i.clone()).to_string());
        }
        // b = (0, 0) is a torus action too, with x and y acting trivially.
        let trivial = &rep.specs[0];
        assert_eq!(trivial.spec.b, vec![0, 0]);
        assert!(trivial.module_algebra && !trivial.inner_faithful);
        assert_eq!(rep.verdict, Verdict::InnerFaithfulActionExists);
    }

    #[test]
    fn zero_is_rejected() {
        let ctx = CycloCtx::new(4).unwrap();
        assert!(classify_h8_quantum_plane(&ctx.zero()).is_err());
    }
}
