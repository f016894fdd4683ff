// The eight-dimensional Kac–Paljutkin algebra, read back from a golden
// export and compared against its presentation with hand-written
// coefficients.

use std::collections::BTreeMap;

use ore_hopf::{build_h2n2, AlgElement, Bialgebra, Cyclo, CycloCtx, H2n2Params, Rat, TensorElement};

const GOLDEN: &str = include_str!("data/h8.json");

fn golden() -> Bialgebra {
    Bialgebra::import_json(GOLDEN).expect("golden parses")
}

fn half(ctx: &CycloCtx) -> Cyclo {
    ctx.rational(Rat::new(1, 2))
}

fn el(h: &Bialgebra, terms: &[(&str, i64)], scale: &Cyclo) -> AlgElement {
    let ctx = h.ctx();
    h.element(
        terms
            .iter()
            .map(|(name, c)| (h.index_of(name).unwrap(), ctx.int(*c) * scale)),
    )
}

fn tens(h: &Bialgebra, terms: &[(&str, &str, i64)], scale: &Cyclo) -> TensorElement {
    let ctx = h.ctx();
    h.tensor(terms.iter().map(|(a, b, c)| {
        (
            (h.index_of(a).unwrap(), h.index_of(b).unwrap()),
            ctx.int(*c) * scale,
        )
    }))
}

const ONE: &str = "x^0 y^0 z^0";
const X: &str = "x^1 y^0 z^0";
const Y: &str = "x^0 y^1 z^0";
const XY: &str = "x^1 y^1 z^0";
const Z: &str = "x^0 y^0 z^1";
const XZ: &str = "x^1 y^0 z^1";
const YZ: &str = "x^0 y^1 z^1";

#[test]
fn export_matches_golden_bytes() {
    let h = build_h2n2(&H2n2Params::standard(2).unwrap()).unwrap();
    assert_eq!(h.export_json().trim_end(), GOLDEN.trim_end());
}

#[test]
fn golden_round_trips() {
    let h = golden();
    assert_eq!(h.dim(), 8);
    assert_eq!(h.export_json().trim_end(), GOLDEN.trim_end());
}

#[test]
fn relations() {
    let h = golden();
    let ctx = h.ctx().clone();
    let one = ctx.one();
    let z = h.basis_by_name(Z).unwrap();
    let x = h.basis_by_name(X).unwrap();
    let y = h.basis_by_name(Y).unwrap();

    let zz = h.mul(&z, &z).unwrap();
    assert_eq!(zz, el(&h, &[(ONE, 1), (X, 1), (Y, 1), (XY, -1)], &half(&ctx)));

    let yz = el(&h, &[(YZ, 1)], &one);
    let xz = el(&h, &[(XZ, 1)], &one);
    assert_eq!(h.mul(&z, &x).unwrap(), yz);
    assert_eq!(h.mul(&y, &z).unwrap(), yz);
    assert_eq!(h.mul(&z, &y).unwrap(), xz);
    assert_eq!(h.mul(&x, &z).unwrap(), xz);
    assert_ne!(xz, yz);
    assert_eq!(h.mul(&x, &y).unwrap(), h.mul(&y, &x).unwrap());
    assert_eq!(h.mul(&x, &x).unwrap(), h.one());
}

#[test]
fn coproduct_counit_antipode() {
    let h = golden();
    let ctx = h.ctx().clone();
    let one = ctx.one();
    let z = h.basis_by_name(Z).unwrap();
    // ½(1⊗1 + x⊗1 + 1⊗y − x⊗y)(z⊗z), multiplied out by hand
    let want = tens(
        &h,
        &[(Z, Z, 1), (XZ, Z, 1), (Z, YZ, 1), (XZ, YZ, -1)],
        &half(&ctx),
    );
    assert_eq!(h.delta(&z).unwrap(), want);
    for g in [X, Y] {
        let e = h.basis_by_name(g).unwrap();
        assert_eq!(h.delta(&e).unwrap(), tens(&h, &[(g, g, 1)], &one));
        assert_eq!(h.counit(&e).unwrap(), one);
    }
    assert_eq!(h.counit(&z).unwrap(), one);
    for g in [X, Y, Z] {
        let e = h.basis_by_name(g).unwrap();
        assert_eq!(h.antipode(&e).unwrap(), e, "S({g})");
    }
}

#[test]
fn all_verifiers_pass() {
    let h = golden();
    let rep = h.check_all();
    assert!(rep.pass, "{}", rep.to_markdown());
    assert!(rep.checked > 100);
    let li = h.left_integral().unwrap();
    assert_eq!(li.solution_dim, 1);
    assert!(li.semisimple());
}

#[test]
fn grouplike_z_breaks_multiplicativity() {
    let h = golden();
    let z = h.index_of(Z).unwrap();
    let plain: BTreeMap<_, _> = [((z, z), h.ctx().one())].into();
    let bad = h.with_delta_entry(z, plain);
    let rep = bad.check_bialgebra_compat();
    assert!(!rep.pass);
    assert!(rep.violations.iter().any(|v| v.check == "Δ multiplicative" && v.detail.contains(Z)));
    assert!(!bad.check_coassoc_counit().pass);
}

#[test]
fn zero_counit_on_z_is_caught() {
    let h = golden();
    let bad = h.with_counit_entry(h.index_of(Z).unwrap(), h.ctx().zero());
    assert!(!bad.check_coassoc_counit().pass);
    let rep = bad.check_bialgebra_compat();
    assert!(rep.violations.iter().any(|v| v.check == "ε multiplicative"));
}

#[test]
fn wrong_antipode_is_caught() {
    let h = golden();
    let xz: BTreeMap<_, _> = [(h.index_of(XZ).unwrap(), h.ctx().one())].into();
    let bad = h.with_antipode_entry(h.index_of(Z).unwrap(), xz);
    let rep = bad.check_antipode().unwrap();
    assert!(!rep.pass);
    assert!(rep.violations.iter().any(|v| v.detail.contains(Z)));
}

#[test]
fn corrupted_product_names_the_triple() {
    let h = golden();
    let (z, x) = (h.index_of(Z).unwrap(), h.index_of(X).unwrap());
    let xz: BTreeMap<_, _> = [(h.index_of(XZ).unwrap(), h.ctx().one())].into();
    // zx = xz is the classic wrong guess
    let bad = h.with_mult_entry(z, x, xz);
    let rep = bad.check_algebra();
    assert!(!rep.pass);
    let v = rep
        .violations
        .iter()
        .find(|v| v.check == "associativity")
        .expect("an associativity witness");
    assert!(v.detail.contains(Z) && v.detail.contains(X), "{}", v.detail);
}
