mod common;

use ore_hopf::actions::{
    annihilator_group_check_spec, check_action_compat, closed_form_z_scalar, enumerate_actions, has_invertible_b,
    is_inner_faithful, verify_action, Gen, LinearAction,
};
use ore_hopf::qpa::QPAlgebra;
use ore_hopf::{build_h2n2, ActionSpec, CycloCtx, H2n2Params, QPMatrix, QPolynomial, Rat};

use common::{h72_matrix, h72_spec, sweep};

#[test]
fn h72_spec_data() {
    let spec = h72_spec();
    assert_eq!(spec.lambda_exponents(), vec![2, 2, 1]);
    assert_eq!(spec.mu_exponents(), vec![1, 2, 2]);
    let mut seen = std::collections::BTreeSet::new();
    for i in 0..6 {
        for j in 0..6 {
            let want = vec![(2 * i + j) % 6, 2 * (i + j) % 6, (i + 2 * j) % 6];
            assert_eq!(spec.f_map(i, j), want);
            seen.insert(want);
        }
    }
    assert_eq!(seen.len(), 36);
    assert!(is_inner_faithful(&spec).inner_faithful);
    assert!(!has_invertible_b(&spec));
    let bm = spec.b_matrix();
    for s in 0..3 {
        for t in 0..3 {
            assert_ne!(num_integer::gcd(bm.get(s, t), 6), 1);
        }
    }
}

// u₁ and u₃ commute, yet the condition asks m₁₃ = q^{B₃₁} m₃₁ with B₃₁ = 3,
// i.e. 1 = −1. The example as stated is not an action on this algebra.
#[test]
fn h72_example_fails_compatibility_as_stated() {
    let ctx = CycloCtx::new(6).unwrap();
    let m = h72_matrix(&ctx);
    let rep = check_action_compat(&m, &h72_spec()).unwrap();
    assert!(!rep.pass);
    assert!(rep.violations.iter().any(|v| v.detail.starts_with("m_13")), "{rep}");
    let h = build_h2n2(&H2n2Params::standard_in(&ctx, 6).unwrap()).unwrap();
    let full = verify_action(&h, &m, &h72_spec(), 2).unwrap();
    assert!(!full.pass);
    assert!(full.violations.iter().any(|v| v.check == "z² = t"));
}

#[test]
fn quantum_plane_n2_to_6() {
    for n in 2..=6u64 {
        let ctx = CycloCtx::new(2 * n).unwrap();
        let q = ctx.primitive_root(n).unwrap();
        let h = build_h2n2(&H2n2Params::standard_in(&ctx, n).unwrap()).unwrap();
        let spec = ActionSpec::new(n, vec![2, 1], vec![1, 0]).unwrap();
        assert!(is_inner_faithful(&spec).inner_faithful);
        assert!(has_invertible_b(&spec));
        for k in 0..2 * n as i64 {
            let p = ctx.root(k);
            let m = QPMatrix::quantum_plane(&p).unwrap();
            let compat = check_action_compat(&m, &spec).unwrap().pass;
            assert_eq!(compat, p.clone() * &p == q, "n={n} k={k}");
            if compat && n <= 4 {
                let rep = verify_action(&h, &m, &spec, 3).unwrap();
                assert!(rep.pass, "{}", rep.to_markdown());
            }
        }
    }
}

#[test]
fn quantum_plane_p_equal_one_fails_for_n2() {
    let ctx = CycloCtx::new(2).unwrap();
    let m = QPMatrix::quantum_plane(&ctx.one()).unwrap();
    let spec = ActionSpec::new(2, vec![2, 1], vec![1, 0]).unwrap();
    assert!(!check_action_compat(&m, &spec).unwrap().pass);
    let h = build_h2n2(&H2n2Params::standard(2).unwrap()).unwrap();
    let rep = verify_action(&h, &m, &spec, 2).unwrap();
    assert!(rep.violations.iter().any(|v| v.detail.starts_with("z·(vu) ≠ p·z·(uv)")));
}

#[test]
fn z_on_uv_in_the_quantum_plane() {
    let ctx = CycloCtx::new(4).unwrap();
    let p = ctx.root(1);
    let alg = QPAlgebra::new(QPMatrix::quantum_plane(&p).unwrap(), 4);
    let spec = ActionSpec::new(2, vec![2, 1], vec![1, 0]).unwrap();
    let q = ctx.int(-1);
    let act = LinearAction::from_spec_in(&alg, &spec, &q).unwrap();
    let u = QPolynomial::generator(&alg, 0);
    let v = QPolynomial::generator(&alg, 1);
    assert_eq!(act.act_generator(Gen::Z, &u).unwrap(), v);
    assert_eq!(act.act_generator(Gen::Z, &v).unwrap(), u);
    let uv = u.mul(&v).unwrap();
    let vu = v.mul(&u).unwrap();
    assert_eq!(vu, uv.scale(&p));
    assert_eq!(act.act_z(&uv).unwrap(), vu);
}

#[test]
fn element_actions_on_generators() {
    let ctx = CycloCtx::new(4).unwrap();
    let h = build_h2n2(&H2n2Params::standard_in(&ctx, 2).unwrap()).unwrap();
    let m = QPMatrix::quantum_plane(&ctx.root(1)).unwrap();
    let spec = ActionSpec::new(2, vec![2, 1], vec![1, 0]).unwrap();
    let act = LinearAction::from_spec(&h, &m, &spec, 4).unwrap();
    let alg = act.algebra().clone();
    let t = h.embed(&h.t);
    for s in 0..2 {
        let g = QPolynomial::generator(&alg, s);
        let word = |w: &[Gen]| act.act_gen_word(w, &g).unwrap();
        assert_eq!(word(&[Gen::Z, Gen::Y]), word(&[Gen::X, Gen::Z]));
        assert_eq!(word(&[Gen::Z, Gen::Z]), act.act_element(&h, &t, &g).unwrap());
    }
    // e₀ = ½(1 + x) kills u because x·u = −u
    let half = ctx.rational(Rat::new(1, 2));
    let e0 = h.h.one().try_add(&h.x()).unwrap().scale(&half);
    let u = QPolynomial::generator(&alg, 0);
    assert!(act.act_element(&h, &e0, &u).unwrap().is_zero());
}

#[test]
fn sweep_properties() {
    let cases = sweep(4, 3);
    assert!(cases.len() > 50);
    for c in &cases {
        let s = &c.spec;
        assert_eq!(c.f_injective, c.oracle_faithful, "{} {:?}", c.matrix, s);
        if c.invertible_b {
            assert!(c.f_injective, "{} {:?}", c.matrix, s);
        }
        assert!(c.closed_form, "{} {:?}", c.matrix, s);
        let (lam, mu) = (s.lambda_exponents(), s.mu_exponents());
        for i in 0..s.r {
            assert_eq!(mu[i], lam[s.tau0(i)]);
        }
    }
    assert!(cases.iter().any(|c| c.f_injective) && cases.iter().any(|c| !c.f_injective));
}

#[test]
fn b_matrix_is_antisymmetric() {
    for n in 2..=5u64 {
        for r in 1..=3usize {
            for tau in ore_hopf::actions::permutations(r) {
                for code in 0..n.pow(r as u32) {
                    let b: Vec<i64> = (0..r).map(|i| (code / n.pow(i as u32) % n) as i64).collect();
                    let bm = ActionSpec::new(n, tau.clone(), b).unwrap().b_matrix();
                    assert!(bm.is_antisymmetric());
                    for s in 0..r {
                        for t in 0..r {
                            assert_eq!((bm.get(s, t) + bm.get(t, s)) % n, 0);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn annihilator_oracle_examples() {
    let ctx = CycloCtx::new(2).unwrap();
    let q = ctx.int(-1);
    let got = |b: Vec<i64>| {
        annihilator_group_check_spec(&ActionSpec::new(2, vec![2, 1], b).unwrap(), &q)
            .unwrap()
            .annihilating
    };
    assert_eq!(got(vec![1, 1]), vec![(1, 1)]);
    assert_eq!(got(vec![0, 0]), vec![(0, 1), (1, 0), (1, 1)]);
    let ctx6 = CycloCtx::new(6).unwrap();
    let h72 = annihilator_group_check_spec(&h72_spec(), &ctx6.primitive_root(6).unwrap()).unwrap();
    assert!(h72.annihilating.is_empty());
}

// Compatibility alone does not make every defining relation act as zero.
// (z² − t) vanishes on generators exactly when τ is an involution and
// b_i b_τ(i) ≡ 0 mod n, and (zx − yz) exactly when b = b∘τ². The relations
// x^n = 1, y^n = 1 and zy = xz always hold.
#[test]
fn z_squared_relation_needs_extra_condition() {
    for n in 2..=4u64 {
        let ctx = CycloCtx::new(n).unwrap();
        let q = ctx.primitive_root(n).unwrap();
        let h = build_h2n2(&H2n2Params::standard_in(&ctx, n).unwrap()).unwrap();
        let t = h.embed(&h.t);
        let xs = vec![Gen::X; n as usize];
        let ys = vec![Gen::Y; n as usize];
        for r in 1..=3 {
            for (_, m) in common::sweep_matrices(&ctx, n, r) {
                let alg = QPAlgebra::new(m.clone(), 4);
                for tau in ore_hopf::actions::permutations(r) {
                    for code in 0..n.pow(r as u32) {
                        let b: Vec<i64> = (0..r).map(|i| (code / n.pow(i as u32) % n) as i64).collect();
                        let spec = ActionSpec::new(n, tau.clone(), b).unwrap();
                        if !check_action_compat(&m, &spec).unwrap().pass {
                            continue;
                        }
                        let act = LinearAction::from_spec_in(&alg, &spec, &q).unwrap();
                        let expect =
                            (0..r).all(|i| spec.tau0(spec.tau0(i)) == i && (spec.b[i] * spec.b_tau(i)).is_multiple_of(n));
                        let expect_zx = (0..r).all(|i| spec.b[spec.tau0(spec.tau0(i))] == spec.b[i]);
                        let mut holds = true;
                        let mut holds_zx = true;
                        for s in 0..r {
                            let g = QPolynomial::generator(&alg, s);
                            let word = |w: &[Gen]| act.act_gen_word(w, &g).unwrap();
                            holds &= word(&[Gen::Z, Gen::Z]) == act.act_element(&h, &t, &g).unwrap();
                            assert_eq!(word(&xs), g);
                            assert_eq!(word(&ys), g);
                            holds_zx &= word(&[Gen::Z, Gen::X]) == word(&[Gen::Y, Gen::Z]);
                            assert_eq!(word(&[Gen::Z, Gen::Y]), word(&[Gen::X, Gen::Z]));
                        }
                        assert_eq!(holds, expect, "{spec:?}");
                        assert_eq!(holds_zx, expect_zx, "{spec:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn closed_form_matches_a_hand_value() {
    // n = 3, τ = (12), b = (1, 2): z·(u₁u₂) = q^{b₂ b₂} u₂u₁ = q u₂u₁
    let ctx = CycloCtx::new(3).unwrap();
    let q = ctx.root(1);
    let spec = ActionSpec::new(3, vec![2, 1], vec![1, 2]).unwrap();
    assert_eq!(closed_form_z_scalar(&spec, &q, 0, 1), q);
    assert_eq!(closed_form_z_scalar(&spec, &q, 0, 0), q.pow(2).unwrap());
}

#[test]
fn enumeration_examples() {
    let ctx = CycloCtx::new(4).unwrap();
    let good = enumerate_actions(&QPMatrix::quantum_plane(&ctx.root(1)).unwrap(), 2).unwrap();
    assert!(good
        .iter()
        .any(|a| a.spec.tau == vec![2, 1] && a.spec.b == vec![1, 0] && a.inner_faithful));

    let ctx2 = CycloCtx::new(2).unwrap();
    let commutative = enumerate_actions(&QPMatrix::quantum_plane(&ctx2.one()).unwrap(), 2).unwrap();
    assert!(!commutative.is_empty());
    assert!(commutative.iter().all(|a| !a.inner_faithful));

    // the H₇₂ triple is not among the compatible specs for its algebra
    let ctx6 = CycloCtx::new(6).unwrap();
    let found = enumerate_actions(&h72_matrix(&ctx6), 6).unwrap();
    assert!(!found.iter().any(|a| a.spec == h72_spec()));
    assert!(found.iter().all(|a| check_action_compat(&h72_matrix(&ctx6), &a.spec).unwrap().pass));
}
