use ore_hopf::actions::{classify_h8_quantum_plane, Gen, LinearAction, Verdict};
use ore_hopf::qpa::QPAlgebra;
use ore_hopf::{ClassificationReport, Cyclo, CycloCtx, QPMatrix, QPolynomial, Rat};

fn classify(p: &Cyclo) -> ClassificationReport {
    classify_h8_quantum_plane(p).unwrap()
}

#[test]
fn both_square_roots_of_minus_one() {
    let ctx = CycloCtx::new(8).unwrap();
    for k in [2, 6] {
        let rep = classify(&ctx.root(k));
        assert_eq!(rep.verdict, Verdict::InnerFaithfulActionExists);
        assert_eq!(rep.conductor, 8);
        let good: Vec<_> = rep.specs.iter().filter(|s| s.compatible).collect();
        assert_eq!(good.len(), 2);
        assert!(good.iter().all(|s| s.module_algebra && s.inner_faithful));
    }
}

#[test]
fn p_one_only_has_trivial_looking_actions() {
    let rep = classify(&CycloCtx::new(1).unwrap().one());
    assert_eq!(rep.verdict, Verdict::NoInnerFaithfulAction);
    let acts: Vec<_> = rep.specs.iter().filter(|s| s.module_algebra).collect();
    assert!(!acts.is_empty());
    assert!(acts.iter().all(|s| !s.inner_faithful));
    assert!(rep.swap_solutions.is_empty());
}

#[test]
fn other_roots_of_unity_have_no_action() {
    for (n, k) in [(3, 1), (5, 2), (8, 1), (6, 1)] {
        let rep = classify(&CycloCtx::new(n).unwrap().root(k));
        assert_eq!(rep.verdict, Verdict::NoAction, "ζ{n}^{k}");
    }
    let two = CycloCtx::new(1).unwrap().rational(Rat::new(2, 1));
    assert_eq!(classify(&two).verdict, Verdict::NoAction);
}

// Hand expansion of Δ(z) = ½(z⊗z + xz⊗z + z⊗yz − xz⊗yz) on a word of
// length two, for x·u = a0 v, x·v = a1 u, y·u = b0 v, y·v = b1 u and z
// swapping u and v.
fn z_on_pair(alg: &std::sync::Arc<QPAlgebra<Cyclo>>, ab: [&Cyclo; 4], first: usize, second: usize) -> QPolynomial {
    let ctx = alg.ctx().clone();
    let g = |i| QPolynomial::generator(alg, i);
    let z = |i: usize| g(1 - i);
    // xz·w = x·(z·w), yz·w = y·(z·w)
    let x_img = |i: usize| g(1 - i).scale(ab[i]);
    let y_img = |i: usize| g(1 - i).scale(ab[2 + i]);
    let xz = |i: usize| x_img(1 - i);
    let yz = |i: usize| y_img(1 - i);
    let half = ctx.rational(Rat::new(1, 2));
    let t1 = z(first).mul(&z(second)).unwrap();
    let t2 = xz(first).mul(&z(second)).unwrap();
    let t3 = z(first).mul(&yz(second)).unwrap();
    let t4 = xz(first).mul(&yz(second)).unwrap();
    t1.add(&t2).unwrap().add(&t3).unwrap().sub(&t4).unwrap().scale(&half)
}

#[test]
fn p_minus_one_anti_diagonal_actions() {
    let rep = classify(&CycloCtx::new(2).unwrap().int(-1));
    let ctx = CycloCtx::new(4).unwrap();
    let i = ctx.root(1);
    let mi = -i.clone();
    assert_eq!(rep.swap_solutions.len(), 2);
    let mut alphas: Vec<_> = rep.swap_solutions.iter().map(|s| s.alpha.clone()).collect();
    alphas.sort();
    let mut want = vec![[i.to_string(), mi.to_string()], [mi.to_string(), i.to_string()]];
    want.sort();
    assert_eq!(alphas, want);
    for s in &rep.swap_solutions {
        // β = −α, and the chain α₀α₁ = 1, α₁ = β₀, α₀ = β₁
        let a0 = if s.alpha[0] == i.to_string() { i.clone() } else { mi.clone() };
        let a1 = a0.inv().unwrap();
        assert_eq!(s.alpha[1], a1.to_string());
        assert_eq!(s.beta, [a1.to_string(), a0.to_string()]);
        assert!(s.module_algebra, "{:?}", s.violations);
        assert_eq!(s.annihilator_dim, 0);
        // xz·(vu) and zy·(vu) agree, so that comparison refutes nothing
        assert_eq!(s.xz_vs_zy_on_vu[0], s.xz_vs_zy_on_vu[1]);

        let p = ctx.int(-1);
        let alg = QPAlgebra::new(QPMatrix::quantum_plane(&p).unwrap(), 4);
        let (b0, b1) = (a1.clone(), a0.clone());
        let ab = [&a0, &a1, &b0, &b1];
        let g = |k| QPolynomial::generator(&alg, k);
        let x = vec![g(1).scale(&a0), g(0).scale(&a1)];
        let y = vec![g(1).scale(&b0), g(0).scale(&b1)];
        let act = LinearAction::new(&alg, 2, &ctx.int(-1), x, y, vec![g(1), g(0)]).unwrap();
        for (f, s2) in [(0, 1), (1, 0), (0, 0), (1, 1)] {
            assert_eq!(act.act_z_word(&[f, s2]).unwrap(), z_on_pair(&alg, ab, f, s2));
        }
        let zvu = z_on_pair(&alg, ab, 1, 0);
        let zuv = z_on_pair(&alg, ab, 0, 1);
        assert_eq!(zvu, zuv.scale(&p));
        let vu = g(1).mul(&g(0)).unwrap();
        assert_eq!(
            act.act_gen_word(&[Gen::X, Gen::Z], &vu).unwrap(),
            act.act_gen_word(&[Gen::Z, Gen::Y], &vu).unwrap()
        );
    }
    // the trivial torus action also exists for p = −1
    assert!(rep.specs.iter().any(|s| s.spec.b == vec![0, 0] && s.module_algebra));
    assert_eq!(rep.verdict, Verdict::InnerFaithfulActionExists);
    assert!(rep.transcript.iter().any(|t| t.starts_with("z·(vu) = p z·(uv) gives")));
}

#[test]
fn report_serializes() {
    let rep = classify(&CycloCtx::new(4).unwrap().root(1));
    let json = serde_json::to_string(&rep).unwrap();
    assert!(json.contains("\"verdict\":\"inner_faithful_action_exists\""));
    let back: ClassificationReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back.verdict, rep.verdict);
    assert_eq!(back.specs.len(), 4);
    let md = rep.to_markdown();
    assert_eq!(md.lines().filter(|l| l.starts_with("- τ = (12)")).count(), 4);
}

#[test]
fn deterministic() {
    let p = CycloCtx::new(2).unwrap().int(-1);
    let a = serde_json::to_string(&classify(&p)).unwrap();
    let b = serde_json::to_string(&classify(&p)).unwrap();
    assert_eq!(a, b);
}
