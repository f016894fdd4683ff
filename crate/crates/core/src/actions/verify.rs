use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::actions::act::{closed_form_z_scalar, Gen, LinearAction};
use crate::actions::spec::ActionSpec;
use crate::error::{Error, Result};
use crate::exactnum::Cyclo;
use crate::h2n2::H2n2;
use crate::linalg::{Rref, SparseRow};
use crate::qpa::{Exponents, QPAlgebra, QPMatrix, QPolynomial};
use crate::report::Report;
use crate::scalar::Ring;

/// Default total degree up to which module-algebra identities are checked.
pub const DEFAULT_DEGREE_BOUND: u32 = 4;

/// m_st = q^{B_τ(s)τ(t)} m_τ(s)τ(t) for all ordered pairs, with q the
/// standard primitive n-th root in the matrix's field.
pub fn check_action_compat(m: &QPMatrix<Cyclo>, spec: &ActionSpec) -> Result<Report> {
    let q = m.ctx().primitive_root(spec.n)?;
    check_action_compat_with_q(m, spec, &q)
}

pub fn check_action_compat_with_q(m: &QPMatrix<Cyclo>, spec: &ActionSpec, q: &Cyclo) -> Result<Report> {
    if m.r() != spec.r {
        return Err(Error::SizeMismatch(format!("matrix is {0}×{0}, spec has r = {1}", m.r(), spec.r)));
    }
    if q.ctx() != m.ctx() {
        return Err(Error::ContextMismatch {
            left: m.ctx().conductor(),
            right: q.ctx().conductor(),
        });
    }
    let bm = spec.b_matrix();
    let mut rep = Report::new("action compatibility");
    for s in 0..spec.r {
        for t in 0..spec.r {
            let (ts, tt) = (spec.tau0(s), spec.tau0(t));
            let e = bm.get(ts, tt);
            let rhs = q.pow(e as i64)? * m.m(ts, tt);
            rep.check(*m.m(s, t) == rhs, "m_st = q^B m_τ(s)τ(t)", || {
                format!(
                    "m_{a}{b} = {} but q^B_{c}{d} m_{c}{d} = {rhs} (B_{c}{d} = {e})",
                    m.m(s, t),
                    a = s + 1,
                    b = t + 1,
                    c = ts + 1,
                    d = tt + 1
                )
            });
        }
    }
    Ok(rep)
}

/// Letter names: u, v for two generators, u1, u2, … otherwise.
pub fn letter(r: usize, i: usize) -> String {
    if r == 2 {
        ["u", "v"][i].to_string()
    } else {
        format!("u{}", i + 1)
    }
}

pub fn word_name(r: usize, w: &[usize]) -> String {
    if r == 2 {
        w.iter().map(|&i| letter(r, i)).collect()
    } else {
        w.iter().map(|&i| letter(r, i)).collect::<Vec<_>>().join(" ")
    }
}

fn monomial_name(r: usize, e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(i, &a)| if a == 1 { letter(r, i) } else { format!("{}^{a}", letter(r, i)) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

fn all_words(r: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..r).map(move |i| {
                    let mut w2 = w.clone();
                    w2.push(i);
                    w2
                })
            })
            .collect();
    }
    out
}

/// z·w = m_kl z·w' for every word w of length ≤ `bound` and every adjacent
/// pair u_k u_l (k > l) in it, where w' has that pair swapped; and x, y
/// preserve the defining relations.
pub fn check_relations_on_words<F: Ring>(act: &LinearAction<F>, bound: u32, rep: &mut Report) -> Result<()> {
    let alg = act.algebra().clone();
    let r = alg.r();
    let m = alg.matrix();
    for g in [Gen::X, Gen::Y] {
        for k in 0..r {
            for l in 0..k {
                let img = act.images(g);
                let lhs = img[k].mul(&img[l])?;
                let rhs = img[l].mul(&img[k])?.scale(m.m(k, l));
                rep.check(lhs == rhs, "relations of A_M", || {
                    format!(
                        "{g:?}·({}) ≠ m_{}{}·{g:?}·({})",
                        word_name(r, &[k, l]),
                        k + 1,
                        l + 1,
                        word_name(r, &[l, k])
                    )
                });
            }
        }
    }
    for len in 2..=bound as usize {
        for w in all_words(r, len) {
            for p in 0..len - 1 {
                let (k, l) = (w[p], w[p + 1]);
                if k <= l {
                    continue;
                }
                let mut w2 = w.clone();
                w2.swap(p, p + 1);
                let lhs = act.act_z_word(&w)?;
                let rhs = act.act_z_word(&w2)?.scale(m.m(k, l));
                rep.check(lhs == rhs, "relations of A_M", || {
                    let mname = if r == 2 && (k, l) == (1, 0) {
                        "p".to_string()
                    } else {
                        format!("m_{}{}", k + 1, l + 1)
                    };
                    format!(
                        "z·({}) ≠ {mname}·z·({}): {lhs} vs {rhs}",
                        word_name(r, &w),
                        word_name(r, &w2)
                    )
                });
            }
        }
    }
    Ok(())
}

/// Checks that `act` is an H-module-algebra structure on A_M, up to total
/// degree `bound`:
///
/// * (gh)·f = g·(h·f) for generators g and all basis h (enough, since the
///   generators generate H);
/// * 1·f = f and h·1 = ε(h) 1;
/// * h·(fg) = Σ (h₁·f)(h₂·g) with Δ taken from the structure constants;
/// * the action respects the relations of A_M on words;
/// * x^n − 1, y^n − 1, xy − yx, zx − yz, zy − xz and z² − t act as zero.
///
/// By linearity it is enough to take f, g monomials.
pub fn verify_module_algebra(h: &H2n2, act: &LinearAction<Cyclo>, bound: u32) -> Result<Report> {
    let alg = act.algebra().clone();
    let r = alg.r();
    let hb = &h.h;
    let dim = hb.dim();
    let mut rep = Report::new("module algebra");

    let monos: Vec<Exponents> = (0..=bound).flat_map(|d| alg.monomials_of_degree(d)).collect();
    let mono_index: std::collections::HashMap<Exponents, usize> =
        monos.iter().enumerate().map(|(k, e)| (e.clone(), k)).collect();
    let one_c = alg.ctx().one();
    let poly = |e: &Exponents| QPolynomial::monomial(&alg, e.clone(), one_c.clone());

    // table[h][f] = e_h · f
    let mut table: Vec<Vec<QPolynomial<Cyclo>>> = Vec::with_capacity(dim);
    for idx in 0..dim {
        let row = monos.iter().map(|e| act.act_basis(h, idx, &poly(e))).collect::<Result<Vec<_>>>()?;
        table.push(row);
    }
    let act_on = |idx: usize, f: &QPolynomial<Cyclo>| -> Result<QPolynomial<Cyclo>> {
        f.map_terms(|e, c| {
            let k = mono_index
                .get(e)
                .copied()
                .ok_or(Error::DegreeCapExceeded { degree: e.iter().sum::<u32>() as usize, cap: bound as usize })?;
            Ok(table[idx][k].scale(c))
        })
    };
    let act_elem = |a: &crate::bialgebra::AlgElement<Cyclo>, f: &QPolynomial<Cyclo>| -> Result<QPolynomial<Cyclo>> {
        let mut out = QPolynomial::zero(&alg);
        for (&idx, c) in a.terms() {
            out = out.add(&act_on(idx, f)?.scale(c))?;
        }
        Ok(out)
    };

    let gens = [(Gen::X, h.x()), (Gen::Y, h.y()), (Gen::Z, h.z())];
    for (g, ge) in &gens {
        for idx in 0..dim {
            let prod = hb.mul(ge, &hb.basis(idx))?;
            for (k, e) in monos.iter().enumerate() {
                let lhs = act_elem(&prod, &poly(e))?;
                let rhs = act.act_generator(*g, &table[idx][k])?;
                rep.check(lhs == rhs, "associativity", || {
                    format!(
                        "({g:?}·{})·{} ≠ {g:?}·({}·{})",
                        hb.basis_names()[idx],
                        monomial_name(r, e),
                        hb.basis_names()[idx],
                        monomial_name(r, e)
                    )
                });
            }
        }
    }

    let unit = hb.one();
    for e in &monos {
        let f = poly(e);
        rep.check(act_elem(&unit, &f)? == f, "unit", || format!("1·{} ≠ {}", monomial_name(r, e), monomial_name(r, e)));
    }
    let one_poly = QPolynomial::one(&alg);
    for idx in 0..dim {
        let lhs = act_on(idx, &one_poly)?;
        let rhs = one_poly.scale(hb.counit_basis(idx));
        rep.check(lhs == rhs, "h·1 = ε(h)1", || format!("{}·1 = {lhs}", hb.basis_names()[idx]));
    }

    for idx in 0..dim {
        let delta = hb.delta_basis(idx).clone();
        for e1 in &monos {
            let d1: u32 = e1.iter().sum();
            for e2 in &monos {
                let d2: u32 = e2.iter().sum();
                if d1 + d2 > bound {
                    continue;
                }
                let prod = poly(e1).mul(&poly(e2))?;
                let lhs = act_on(idx, &prod)?;
                let mut rhs = QPolynomial::zero(&alg);
                for (&(a, b), c) in &delta {
                    let k1 = mono_index[e1];
                    let k2 = mono_index[e2];
                    rhs = rhs.add(&table[a][k1].mul(&table[b][k2])?.scale(c))?;
                }
                rep.check(lhs == rhs, "h·(fg) = Σ (h₁·f)(h₂·g)", || {
                    format!(
                        "{}·({} · {}): {lhs} vs {rhs}",
                        hb.basis_names()[idx],
                        monomial_name(r, e1),
                        monomial_name(r, e2)
                    )
                });
            }
        }
    }

    check_relations_on_words(act, bound, &mut rep)?;

    let n = h.n();
    let t = h.embed(&h.t);
    let xs = vec![Gen::X; n as usize];
    let ys = vec![Gen::Y; n as usize];
    let rels: [(&str, Vec<Gen>, Vec<Gen>); 5] = [
        ("x^n = 1", xs, vec![]),
        ("y^n = 1", ys, vec![]),
        ("xy = yx", vec![Gen::X, Gen::Y], vec![Gen::Y, Gen::X]),
        ("zx = yz", vec![Gen::Z, Gen::X], vec![Gen::Y, Gen::Z]),
        ("zy = xz", vec![Gen::Z, Gen::Y], vec![Gen::X, Gen::Z]),
    ];
    for e in &monos {
        let f = poly(e);
        for (name, l, rr) in &rels {
            let lhs = act.act_gen_word(l, &f)?;
            let rhs = act.act_gen_word(rr, &f)?;
            rep.check(lhs == rhs, name, || format!("on {}: {lhs} vs {rhs}", monomial_name(r, e)));
        }
        let zz = act.act_gen_word(&[Gen::Z, Gen::Z], &f)?;
        let tf = act.act_element(h, &t, &f)?;
        rep.check(zz == tf, "z² = t", || format!("on {}: z²· = {zz} but t· = {tf}", monomial_name(r, e)));
    }
    Ok(rep)
}

/// Builds the torus action of `spec` on A_M (degree cap = bound) and runs
/// [`verify_module_algebra`].
pub fn verify_action(h: &H2n2, m: &QPMatrix<Cyclo>, spec: &ActionSpec, bound: u32) -> Result<Report> {
    let act = LinearAction::from_spec(h, m, spec, bound.max(2) as usize)?;
    verify_module_algebra(h, &act, bound)
}

/// Group elements x^i y^j ≠ 1 with (1 − x^i y^j)·A = 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnihilatorCheck {
    pub annihilating: Vec<(u64, u64)>,
    pub inner_faithful: bool,
}

/// Computes, through the action itself, which 1 − x^i y^j with
/// (i, j) ≠ (0, 0) kill every generator. x^i y^j acts by an algebra
/// automorphism, so killing the generators means killing A_M.
pub fn annihilator_group_check<F: Ring>(act: &LinearAction<F>) -> Result<AnnihilatorCheck> {
    let alg = act.algebra().clone();
    let n = act.n();
    let mut annihilating = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if (i, j) == (0, 0) {
                continue;
            }
            let mut all = true;
            for s in 0..alg.r() {
                let u = QPolynomial::generator(&alg, s);
                if !u.sub(&act.act_monomial(i, j, 0, &u)?)?.is_zero() {
                    all = false;
                    break;
                }
            }
            if all {
                annihilating.push((i, j));
            }
        }
    }
    Ok(AnnihilatorCheck {
        inner_faithful: annihilating.is_empty(),
        annihilating,
    })
}

/// Dimension of {h ∈ H : h·f = 0 for every f of degree ≤ `bound`}. Zero
/// means the action is faithful, hence inner faithful.
pub fn annihilator_dimension(h: &H2n2, act: &LinearAction<Cyclo>, bound: u32) -> Result<usize> {
    let alg = act.algebra().clone();
    let dim = h.dim();
    let mut rref = Rref::new(dim);
    for d in 0..=bound {
        for e in alg.monomials_of_degree(d) {
            let f = QPolynomial::monomial(&alg, e, alg.ctx().one());
            let images = (0..dim).map(|k| act.act_basis(h, k, &f)).collect::<Result<Vec<_>>>()?;
            let mut rows: std::collections::BTreeMap<Exponents, SparseRow<Cyclo>> = Default::default();
            for (k, img) in images.iter().enumerate() {
                for (g, c) in img.terms() {
                    rows.entry(g.clone()).or_default().insert(k, c.clone());
                }
            }
            for row in rows.into_values() {
                rref.push(row)?;
            }
        }
    }
    Ok(dim - rref.rank())
}

/// Convenience: the annihilator check for a torus spec (the matrix does not
/// affect how x, y act on generators, so a commutative one is used).
pub fn annihilator_group_check_spec(spec: &ActionSpec, q: &Cyclo) -> Result<AnnihilatorCheck> {
    let alg = QPAlgebra::new(QPMatrix::<Cyclo>::identity(q.ctx(), spec.r), 2);
    annihilator_group_check(&LinearAction::from_spec_in(&alg, spec, q)?)
}

/// z·(u_k u_l) from the iterated coproduct against q^{b_τ(k) b_τ(τ(l))}
/// u_τ(k) u_τ(l), for all generator pairs.
pub fn check_closed_form_degree_two(algebra: &Arc<QPAlgebra<Cyclo>>, spec: &ActionSpec, q: &Cyclo) -> Result<Report> {
    let act = LinearAction::from_spec_in(algebra, spec, q)?;
    let r = spec.r;
    let mut rep = Report::new("degree-two closed form");
    for k in 0..r {
        for l in 0..r {
            let lhs = act.act_z_word(&[k, l])?;
            let rhs = QPolynomial::word(algebra, &[spec.tau0(k), spec.tau0(l)])?
                .scale(&closed_form_z_scalar(spec, q, k, l));
            rep.check(lhs == rhs, "z·(u_k u_l)", || {
                format!("z·({}) = {lhs}, closed form gives {rhs}", word_name(r, &[k, l]))
            });
        }
    }
    Ok(rep)
}
