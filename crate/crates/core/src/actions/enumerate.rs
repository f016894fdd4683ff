use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::actions::spec::{is_inner_faithful, permutations, ActionSpec};
use crate::error::{Error, Result};
use crate::exactnum::Cyclo;
use crate::qpa::QPMatrix;

pub const MAX_ENUM_R: usize = 5;
pub const MAX_ENUM_N: u64 = 8;

/// One compatible spec found by [`enumerate_actions`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumeratedAction {
    pub spec: ActionSpec,
    pub inner_faithful: bool,
}

/// Every (τ, b) ∈ S_r × Z_n^r whose spec passes the compatibility condition,
/// ordered lexicographically by (τ in one-line notation, b). q is the
/// standard primitive n-th root in the matrix's field.
pub fn enumerate_actions(m: &QPMatrix<Cyclo>, n: u64) -> Result<Vec<EnumeratedAction>> {
    let q = m.ctx().primitive_root(n)?;
    enumerate_actions_with_q(m, n, &q)
}

pub fn enumerate_actions_with_q(m: &QPMatrix<Cyclo>, n: u64, q: &Cyclo) -> Result<Vec<EnumeratedAction>> {
    let r = m.r();
    if n < 2 {
        return Err(Error::InvalidParams(format!("order n must be > 1, got {n}")));
    }
    if r > MAX_ENUM_R || n > MAX_ENUM_N {
        let size = (1..=r as u128).product::<u128>() * (n as u128).pow(r as u32);
        return Err(Error::SearchSpaceTooLarge { size });
    }
    if !q.is_primitive_root(n) {
        return Err(Error::NotPrimitiveRoot(q.to_string(), n));
    }
    // logs[s][t][s'][t'] = k with m_st = q^k m_s't', if any.
    let powers: Vec<Cyclo> = (0..n).map(|k| q.pow(k as i64)).collect::<Result<_>>()?;
    let mut logs = vec![vec![vec![vec![None; r]; r]; r]; r];
    for s in 0..r {
        for t in 0..r {
            for s2 in 0..r {
                for t2 in 0..r {
                    let ratio = m.m(s, t).clone() * &m.m(s2, t2).inv()?;
                    logs[s][t][s2][t2] = powers.iter().position(|p| *p == ratio).map(|k| k as u64);
                }
            }
        }
    }
    let perms = permutations(r);
    let per_perm = n.pow(r as u32);
    let total = perms.len() as u64 * per_perm;
    let found: Vec<EnumeratedAction> = (0..total)
        .into_par_iter()
        .filter_map(|code| {
            let tau = perms[(code / per_perm) as usize].clone();
            let mut rest = code % per_perm;
            let mut b = vec![0i64; r];
            for slot in b.iter_mut().rev() {
                *slot = (rest % n) as i64;
                rest /= n;
            }
            let spec = ActionSpec::new(n, tau, b).expect("valid by construction");
            let bm = spec.b_matrix();
            let ok = (0..r).all(|s| {
                (0..r).all(|t| {
                    let (ts, tt) = (spec.tau0(s), spec.tau0(t));
                    logs[s][t][ts][tt] == Some(bm.get(ts, tt))
                })
            });
            ok.then(|| EnumeratedAction {
                inner_faithful: is_inner_faithful(&spec).inner_faithful,
                spec,
            })
        })
        .collect();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::verify::check_action_compat;
    use crate::exactnum::CycloCtx;

    #[test]
    fn agrees_with_report_check() {
        let ctx = CycloCtx::new(4).unwrap();
        let m = QPMatrix::quantum_plane(&ctx.root(1)).unwrap();
        let got = enumerate_actions(&m, 4).unwrap();
        let mut expected = Vec::new();
        for tau in permutations(2) {
            for b0 in 0..4 {
                for b1 in 0..4 {
                    let spec = ActionSpec::new(4, tau.clone(), vec![b0, b1]).unwrap();
                    if check_action_compat(&m, &spec).unwrap().pass {
                        expected.push(spec);
                    }
                }
            }
        }
        assert_eq!(got.iter().map(|a| a.spec.clone()).collect::<Vec<_>>(), expected);
        assert!(!got.iter().any(|a| a.spec.b == vec![1, 0] && a.spec.tau == vec![2, 1]));
    }

    #[test]
    fn refuses_large_spaces() {
        let ctx = CycloCtx::new(3).unwrap();
        let m = QPMatrix::<Cyclo>::identity(&ctx, 6);
        assert!(matches!(enumerate_actions(&m, 3), Err(Error::SearchSpaceTooLarge { size: 524880 })));
        let ctx9 = CycloCtx::new(9).unwrap();
        let m2 = QPMatrix::<Cyclo>::identity(&ctx9, 2);
        assert!(matches!(enumerate_actions(&m2, 9), Err(Error::SearchSpaceTooLarge { .. })));
    }

    #[test]
    fn output_is_sorted() {
        let ctx = CycloCtx::new(3).unwrap();
        let m = QPMatrix::<Cyclo>::identity(&ctx, 3);
        let got = enumerate_actions(&m, 3).unwrap();
        assert!(!got.is_empty());
        let specs: Vec<_> = got.iter().map(|a| (a.spec.tau.clone(), a.spec.b.clone())).collect();
        let mut sorted = specs.clone();
        sorted.sort();
        assert_eq!(specs, sorted);
    }
}
