//! Exact arithmetic in Q and in cyclotomic fields Q(ζ_N).

mod cyclo;
mod rat;

pub use cyclo::{cyclotomic_polynomial, Cyclo, CycloCtx, CycloJson, MAX_CONDUCTOR};
pub use rat::Rat;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Least common multiple of a list of positive integers (1 for an empty list).
pub fn lcm_all(values: impl IntoIterator<Item = u64>) -> u64 {
    values.into_iter().fold(1, |acc, v| acc.lcm(&v.max(1)))
}

/// ζ_N^k.
pub fn cyclo_root(ctx: &CycloCtx, k: i64) -> Cyclo {
    ctx.root(k)
}

/// Σ_{i=0}^{n−1} (q^j)^i for a primitive n-th root of unity q.
///
/// Evaluates the sum term by term; the result is n when j ≡ 0 (mod n) and
/// 0 otherwise.
pub fn root_power_sum(ctx: &CycloCtx, q: &Cyclo, j: i64, n: u64) -> Result<Cyclo> {
    if q.ctx() != ctx {
        return Err(Error::ContextMismatch {
            left: ctx.conductor(),
            right: q.ctx().conductor(),
        });
    }
    if !q.is_primitive_root(n) {
        return Err(Error::NotPrimitiveRoot(q.to_string(), n));
    }
    let step = q.pow(j)?;
    let mut term = ctx.one();
    let mut sum = ctx.zero();
    for _ in 0..n {
        sum += &term;
        term *= &step;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Ring;
    use proptest::prelude::*;

    fn ctx(n: u64) -> CycloCtx {
        CycloCtx::new(n).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials_small() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // Φ_105 is the first with a coefficient outside {-1, 0, 1}.
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn roots_reduce_canonically() {
        assert_eq!(cyclo_root(&ctx(4), 2), ctx(4).int(-1));
        assert_eq!(cyclo_root(&ctx(6), 3), ctx(6).int(-1));
        assert_eq!(cyclo_root(&ctx(2), 1), ctx(2).int(-1));
        assert_eq!(cyclo_root(&ctx(5), 0), ctx(5).one());
        assert_eq!(cyclo_root(&ctx(5), -1), cyclo_root(&ctx(5), 4));
    }

    #[test]
    fn min_poly_vanishes_at_zeta_for_all_small_conductors() {
        for n in 1..=64 {
            let c = ctx(n);
            let z = c.root(1);
            let mut acc = c.zero();
            for (k, &a) in c.min_poly().iter().enumerate() {
                acc += &(z.pow_u(k as u64) * &c.int(a));
            }
            assert!(acc.is_zero(), "Phi_{n}(zeta_{n}) != 0");
        }
    }

    #[test]
    fn root_inverse_is_conjugate_power() {
        for n in [3u64, 5, 8, 12] {
            let c = ctx(n);
            assert_eq!(c.root(1).inv().unwrap(), c.root(n as i64 - 1));
        }
    }

    #[test]
    fn full_set_of_roots_sums_to_zero() {
        for n in 2..=12u64 {
            let c = ctx(n);
            let mut s = c.zero();
            for k in 0..n {
                s += &c.root(k as i64);
            }
            assert!(s.is_zero());
        }
    }

    #[test]
    fn inv_zero_is_division_by_zero() {
        assert!(matches!(ctx(7).zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn mixing_contexts_is_an_error() {
        let a = ctx(3).root(1);
        let b = ctx(4).root(1);
        assert!(matches!(a.try_add(&b), Err(Error::ContextMismatch { .. })));
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn root_power_sum_examples() {
        let c2 = ctx(2);
        let q = c2.int(-1);
        assert_eq!(root_power_sum(&c2, &q, 0, 2).unwrap(), c2.int(2));
        assert!(root_power_sum(&c2, &q, 1, 2).unwrap().is_zero());
        let c6 = ctx(6);
        assert!(root_power_sum(&c6, &c6.root(1), 2, 6).unwrap().is_zero());
        // q = zeta_6^2 is a cube root, not primitive of order 6
        assert!(matches!(
            root_power_sum(&c6, &c6.root(2), 1, 6),
            Err(Error::NotPrimitiveRoot(..))
        ));
    }

    #[test]
    fn root_power_sum_is_orthogonality() {
        for n in 1..=12u64 {
            let c = ctx(n);
            let q = c.primitive_root(n).unwrap();
            for j in 0..n as i64 {
                let got = root_power_sum(&c, &q, j, n).unwrap();
                let want = if j == 0 { c.int(n as i64) } else { c.zero() };
                assert_eq!(got, want, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn embedding_preserves_roots() {
        let c3 = ctx(3);
        let c12 = ctx(12);
        assert_eq!(c3.root(1).embed(&c12).unwrap(), c12.root(4));
        assert!(c12.root(1).embed(&c3).is_err());
    }

    #[test]
    fn primitivity_and_orders() {
        let c = ctx(12);
        assert!(c.root(1).is_primitive_root(12));
        assert!(!c.root(2).is_primitive_root(12));
        assert_eq!(c.root(3).root_of_unity_order(), Some(4));
        assert_eq!(c.int(-1).root_of_unity_order(), Some(2));
        assert_eq!(c.int(2).root_of_unity_order(), None);
        assert_eq!(ctx(3).int(-1).root_of_unity_order(), Some(2));
        assert_eq!(c.primitive_roots(4).unwrap(), vec![c.root(3), c.root(9)]);
    }

    #[test]
    fn json_form() {
        let c = ctx(4);
        let x = c.root(1).scale(&Rat::new(1, 2)) + &c.int(3);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"N":4,"coeffs":["3","1/2"]}"#);
        let back: Cyclo = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<Cyclo>(r#"{"N":4,"coeffs":["1"]}"#).is_err());
    }

    /// Dense matrix of multiplication by `a` on the power basis, used as an
    /// independent route to inverses.
    fn solve_inverse_linear(a: &Cyclo) -> Vec<Rat> {
        let c = a.ctx();
        let d = c.degree();
        // columns: a * zeta^k
        let cols: Vec<Vec<Rat>> = (0..d)
            .map(|k| (a.clone() * &c.root(k as i64)).coeffs().to_vec())
            .collect();
        // augmented rows [M | e_0]
        let mut m: Vec<Vec<Rat>> = (0..d)
            .map(|i| {
                let mut row: Vec<Rat> = (0..d).map(|k| cols[k][i].clone()).collect();
                row.push(if i == 0 { Rat::one() } else { Rat::zero() });
                row
            })
            .collect();
        for col in 0..d {
            let piv = (col..d).find(|&r| !m[r][col].is_zero()).unwrap();
            m.swap(col, piv);
            let inv = m[col][col].recip().unwrap();
            for x in m[col].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..d {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    let pivot_row = m[col].clone();
                    for (x, p) in m[r].iter_mut().zip(pivot_row.iter()) {
                        *x -= &(&f * p);
                    }
                }
            }
        }
        m.into_iter().map(|row| row[d].clone()).collect()
    }

    fn arb_cyclo(n: u64) -> impl Strategy<Value = Cyclo> {
        let d = ctx(n).degree();
        proptest::collection::vec((-9i64..10, 1i64..6), d)
            .prop_map(move |v| {
                ctx(n)
                    .from_coeffs(v.into_iter().map(|(a, b)| Rat::new(a, b)).collect())
                    .unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn subtraction_gives_canonical_zero(a in arb_cyclo(15)) {
            let z = a.clone() - &a;
            prop_assert!(z.coeffs().iter().all(Rat::is_zero));
            prop_assert_eq!(z, ctx(15).zero());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn inverse_matches_linear_solve(a in arb_cyclo(12)) {
            prop_assume!(!a.is_zero());
            let inv = a.inv().unwrap();
            prop_assert!((a.clone() * &inv).is_one());
            prop_assert_eq!(inv.coeffs().to_vec(), solve_inverse_linear(&a));
        }

        #[test]
        fn field_axioms(a in arb_cyclo(7), b in arb_cyclo(7), c in arb_cyclo(7)) {
            prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
            prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
            prop_assert_eq!(a.clone() * &b, b.clone() * &a);
        }
    }
}
