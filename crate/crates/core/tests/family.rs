use ore_hopf::h2n2::{check_hopf_ideal_identity, idempotents, monomial};
use ore_hopf::ore_twist::{check_all_hypotheses, extract_twist};
use ore_hopf::{build_h2n2, CycloCtx, H2n2, H2n2Params, Rat};

fn members(n: u64) -> Vec<H2n2> {
    let ctx = CycloCtx::new(n).unwrap();
    ctx.primitive_roots(n)
        .unwrap()
        .into_iter()
        .map(|q| build_h2n2(&H2n2Params::new(&ctx, n, q).unwrap()).unwrap())
        .collect()
}

#[test]
fn every_primitive_root_gives_a_hopf_algebra() {
    for n in 2..=6 {
        let ms = members(n);
        assert_eq!(ms.len(), ore_hopf::exactnum::prime_factors(n).iter().fold(n, |a, p| a / p * (p - 1)) as usize);
        for h in ms {
            assert_eq!(h.dim() as u64, 2 * n * n);
            let hyp = check_all_hypotheses(&h.twist_data()).unwrap();
            assert!(hyp.pass, "n={n} q={}: {}", h.params.q, hyp.to_markdown());
            let fam = h.check_family_identities().unwrap();
            assert!(fam.pass, "{}", fam.to_markdown());
            let all = h.h.check_all();
            assert!(all.pass, "n={n} q={}: {}", h.params.q, all.to_markdown());
        }
    }
}

#[test]
fn integral_is_one_dimensional_and_not_killed_by_counit() {
    for n in 2..=6 {
        let h = build_h2n2(&H2n2Params::standard(n).unwrap()).unwrap();
        let li = h.h.left_integral().unwrap();
        assert_eq!(li.solution_dim, 1, "n={n}");
        assert!(li.semisimple(), "n={n}");
        // Λ is a left integral: x Λ = Λ = z Λ up to the counit
        for g in [h.x(), h.y(), h.z()] {
            assert_eq!(h.h.mul(&g, &li.element).unwrap(), li.element);
        }
    }
}

#[test]
fn e0_is_the_averaging_idempotent() {
    // e_0 = (1/n) Σ x^i, computed here without the library's formula
    for n in 2..=5 {
        let h = build_h2n2(&H2n2Params::standard(n).unwrap()).unwrap();
        let inv_n = h.params.ctx.rational(Rat::new(1, n as i64));
        let mut avg = h.r.zero();
        for i in 0..n as i64 {
            avg = avg.try_add(&monomial(&h.params, &h.r, i, 0)).unwrap();
        }
        assert_eq!(idempotents(&h.params, &h.r)[0], avg.scale(&inv_n));
    }
}

#[test]
fn quotient_remembers_its_twist() {
    for n in 2..=4 {
        let h = build_h2n2(&H2n2Params::standard(n).unwrap()).unwrap();
        let (sigma, j, t) = extract_twist(&h.h, &h.r).unwrap();
        assert_eq!(sigma, h.sigma);
        assert_eq!(j, h.j);
        assert_eq!(t, h.t);
    }
}

#[test]
fn hopf_ideal_lemma() {
    for n in 2..=3 {
        let h = build_h2n2(&H2n2Params::standard(n).unwrap()).unwrap();
        assert!(h.check_hopf_ideal_lemma().unwrap().pass);
        let wrong = h.r.mul(&h.t_inv, &monomial(&h.params, &h.r, 0, 1)).unwrap();
        assert!(!check_hopf_ideal_identity(&h, &wrong).unwrap().pass);
    }
}
