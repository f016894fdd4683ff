#![allow(dead_code)]

use ore_hopf::actions::{
    annihilator_group_check, check_action_compat, check_closed_form_degree_two, has_invertible_b, is_inner_faithful,
    permutations, ActionSpec, LinearAction,
};
use ore_hopf::qpa::QPAlgebra;
use ore_hopf::{CycloCtx, QPMatrix};

/// One compatible spec from the sweep, with both faithfulness verdicts.
pub struct SweepCase {
    pub matrix: &'static str,
    pub spec: ActionSpec,
    pub f_injective: bool,
    pub oracle_faithful: bool,
    pub invertible_b: bool,
    pub closed_form: bool,
}

/// The matrices swept for a given (n, r): commutative, and q-skew with
/// m_ij = q for i < j.
pub fn sweep_matrices(ctx: &CycloCtx, n: u64, r: usize) -> Vec<(&'static str, QPMatrix)> {
    let q = ctx.primitive_root(n).unwrap();
    vec![
        ("commutative", QPMatrix::identity(ctx, r)),
        ("q-skew", QPMatrix::uniform_skew(r, &q).unwrap()),
    ]
}

/// Every compatible (τ, b) for n ≤ `max_n`, r ≤ `max_r`.
pub fn sweep(max_n: u64, max_r: usize) -> Vec<SweepCase> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        let ctx = CycloCtx::new(n).unwrap();
        let q = ctx.primitive_root(n).unwrap();
        for r in 1..=max_r {
            for (label, m) in sweep_matrices(&ctx, n, r) {
                let alg = QPAlgebra::new(m.clone(), 4);
                for tau in permutations(r) {
                    for code in 0..n.pow(r as u32) {
                        let b: Vec<i64> = (0..r).map(|i| (code / n.pow(i as u32) % n) as i64).collect();
                        let spec = ActionSpec::new(n, tau.clone(), b).unwrap();
                        if !check_action_compat(&m, &spec).unwrap().pass {
                            continue;
                        }
                        let act = LinearAction::from_spec_in(&alg, &spec, &q).unwrap();
                        out.push(SweepCase {
                            matrix: label,
                            f_injective: is_inner_faithful(&spec).inner_faithful,
                            oracle_faithful: annihilator_group_check(&act).unwrap().inner_faithful,
                            invertible_b: has_invertible_b(&spec),
                            closed_form: check_closed_form_degree_two(&alg, &spec, &q).unwrap().pass,
                            spec,
                        });
                    }
                }
            }
        }
    }
    out
}

/// F_{q²}[u₁,u₂][u₃] over Q(ζ6): u₂u₁ = q² u₁u₂, u₃ central.
pub fn h72_matrix(ctx: &CycloCtx) -> QPMatrix {
    let q = ctx.primitive_root(6).unwrap();
    let one = ctx.one();
    let q2 = q.pow(2).unwrap();
    let qm2 = q.pow(-2).unwrap();
    QPMatrix::new(
        ctx,
        vec![
            vec![one.clone(), qm2, one.clone()],
            vec![q2, one.clone(), one.clone()],
            vec![one.clone(), one.clone(), one],
        ],
    )
    .unwrap()
}

pub fn h72_spec() -> ActionSpec {
    ActionSpec::new(6, vec![3, 2, 1], vec![2, 2, 1]).unwrap()
}
