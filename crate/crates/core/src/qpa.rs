//! Quantum polynomial algebras A_M = F[u_1, …, u_r] with u_i u_j = m_ij u_j u_i.
//!
//! Monomials are kept in normal order u_1^{a_1} ⋯ u_r^{a_r}; the product of
//! two normal monomials is u^a · u^b = Π_{i>j} m_ij^{a_i b_j} u^{a+b}.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::bialgebra::accumulate;
use crate::error::{Error, Result};
use crate::report::Report;
use crate::scalar::{Field, Ring};

pub type Exponents = SmallVec<[u32; 4]>;

pub const DEFAULT_DEGREE_CAP: usize = 16;

/// The commutation matrix M.
#[derive(Debug, Clone, PartialEq)]
pub struct QPMatrix<F: Ring> {
    ctx: F::Ctx,
    entries: Vec<Vec<F>>,
}

impl<F: Ring> QPMatrix<F> {
    /// A matrix that is not checked for m_ii = m_ij m_ji = 1; see
    /// [`validate_matrix`].
    pub fn raw(ctx: &F::Ctx, entries: Vec<Vec<F>>) -> Result<Self> {
        let r = entries.len();
        if r == 0 || entries.iter().any(|row| row.len() != r) {
            return Err(Error::SizeMismatch("commutation matrix must be square and nonempty".into()));
        }
        Ok(QPMatrix {
            ctx: ctx.clone(),
            entries,
        })
    }

    /// A validated matrix.
    pub fn new(ctx: &F::Ctx, entries: Vec<Vec<F>>) -> Result<Self> {
        let m = Self::raw(ctx, entries)?;
        let rep = validate_matrix(&m);
        if !rep.pass {
            return Err(Error::InvalidParams(format!(
                "invalid commutation matrix: {}",
                rep.violations.iter().map(|v| v.detail.as_str()).collect::<Vec<_>>().join("; ")
            )));
        }
        Ok(m)
    }

    pub fn identity(ctx: &F::Ctx, r: usize) -> Self {
        let entries = (0..r).map(|_| (0..r).map(|_| F::one_in(ctx)).collect()).collect();
        QPMatrix {
            ctx: ctx.clone(),
            entries,
        }
    }

    pub fn r(&self) -> usize {
        self.entries.len()
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    /// m_ij with 0-based indices.
    pub fn m(&self, i: usize, j: usize) -> &F {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<F>] {
        &self.entries
    }
}

impl<F: Field> QPMatrix<F> {
    /// The quantum plane vu = p uv: M = [[1, p⁻¹], [p, 1]].
    pub fn quantum_plane(p: &F) -> Result<Self> {
        let ctx = p.context();
        let one = F::one_in(&ctx);
        Self::new(&ctx, vec![vec![one.clone(), p.inv()?], vec![p.clone(), one]])
    }

    /// The matrix with m_ij = c for i < j (and c⁻¹ below the diagonal).
    pub fn uniform_skew(r: usize, c: &F) -> Result<Self> {
        let ctx = c.context();
        let inv = c.inv()?;
        let entries = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| match i.cmp(&j) {
                        std::cmp::Ordering::Less => c.clone(),
                        std::cmp::Ordering::Equal => F::one_in(&ctx),
                        std::cmp::Ordering::Greater => inv.clone(),
                    })
                    .collect()
            })
            .collect();
        Self::new(&ctx, entries)
    }
}

/// m_ii = 1 and m_ij m_ji = 1 for all i, j.
pub fn validate_matrix<F: Ring>(m: &QPMatrix<F>) -> Report {
    let mut rep = Report::new("commutation matrix");
    let r = m.r();
    for i in 0..r {
        rep.check(m.m(i, i).is_one(), "m_ii = 1", || format!("m_{0}{0} = {1}", i + 1, m.m(i, i)));
        for j in i + 1..r {
            let p = m.m(i, j).clone() * m.m(j, i);
            rep.check(p.is_one(), "m_ij m_ji = 1", || {
                format!("m_{a}{b} m_{b}{a} = {p}", a = i + 1, b = j + 1)
            });
        }
    }
    rep
}

/// A_M together with the degree cap enforced on products.
#[derive(Debug)]
pub struct QPAlgebra<F: Ring> {
    matrix: QPMatrix<F>,
    degree_cap: usize,
}

impl<F: Ring> QPAlgebra<F> {
    pub fn new(matrix: QPMatrix<F>, degree_cap: usize) -> Arc<Self> {
        Arc::new(QPAlgebra { matrix, degree_cap })
    }

    pub fn with_default_cap(matrix: QPMatrix<F>) -> Arc<Self> {
        Self::new(matrix, DEFAULT_DEGREE_CAP)
    }

    pub fn matrix(&self) -> &QPMatrix<F> {
        &self.matrix
    }

    pub fn r(&self) -> usize {
        self.matrix.r()
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn ctx(&self) -> &F::Ctx {
        self.matrix.ctx()
    }

    /// Scalar c with u^a · u^b = c u^{a+b}.
    pub fn normal_order_scalar(&self, a: &[u32], b: &[u32]) -> F {
        let mut c = F::one_in(self.ctx());
        for i in 0..a.len() {
            if a[i] == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate().take(i) {
                let e = a[i] as u64 * bj as u64;
                if e > 0 {
                    c *= &self.matrix.m(i, j).pow_u(e);
                }
            }
        }
        c
    }

    /// Every exponent vector of total degree exactly `d`, in lexicographic order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Exponents> {
        fn rec(r: usize, left: u32, cur: &mut Exponents, out: &mut Vec<Exponents>) {
            if cur.len() + 1 == r {
                cur.push(left);
                out.push(cur.clone());
                cur.pop();
                return;
            }
            for a in (0..=left).rev() {
                cur.push(a);
                rec(r, left - a, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(self.r(), d, &mut SmallVec::new(), &mut out);
        out.sort();
        out
    }
}

/// An element of A_M, sparse over normal-ordered monomials.
#[derive(Clone)]
pub struct QPolynomial<F: Ring> {
    algebra: Arc<QPAlgebra<F>>,
    terms: BTreeMap<Exponents, F>,
}

impl<F: Ring> PartialEq for QPolynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && same_algebra(&self.algebra, &other.algebra)
    }
}

fn same_algebra<F: Ring>(a: &Arc<QPAlgebra<F>>, b: &Arc<QPAlgebra<F>>) -> bool {
    Arc::ptr_eq(a, b) || a.matrix == b.matrix
}

impl<F: Ring> QPolynomial<F> {
    pub fn zero(algebra: &Arc<QPAlgebra<F>>) -> Self {
        QPolynomial {
            algebra: algebra.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(algebra: &Arc<QPAlgebra<F>>) -> Self {
        let r = algebra.r();
        Self::monomial(algebra, SmallVec::from_elem(0, r), F::one_in(algebra.ctx()))
    }

    pub fn constant(algebra: &Arc<QPAlgebra<F>>, c: F) -> Self {
        let r = algebra.r();
        Self::monomial(algebra, SmallVec::from_elem(0, r), c)
    }

    /// The generator u_i, 0-based.
    pub fn generator(algebra: &Arc<QPAlgebra<F>>, i: usize) -> Self {
        let mut e: Exponents = SmallVec::from_elem(0, algebra.r());
        e[i] = 1;
        Self::monomial(algebra, e, F::one_in(algebra.ctx()))
    }

    pub fn monomial(algebra: &Arc<QPAlgebra<F>>, exps: Exponents, c: F) -> Self {
        assert_eq!(exps.len(), algebra.r(), "exponent vector length");
        let mut p = Self::zero(algebra);
        accumulate(&mut p.terms, exps, c);
        p
    }

    pub fn from_terms(algebra: &Arc<QPAlgebra<F>>, terms: impl IntoIterator<Item = (Exponents, F)>) -> Self {
        let mut p = Self::zero(algebra);
        for (e, c) in terms {
            assert_eq!(e.len(), algebra.r(), "exponent vector length");
            accumulate(&mut p.terms, e, c);
        }
        p
    }

    /// The product u_{w_1} u_{w_2} ⋯ of generators (0-based), normal ordered.
    pub fn word(algebra: &Arc<QPAlgebra<F>>, w: &[usize]) -> Result<Self> {
        let mut acc = Self::one(algebra);
        for &i in w {
            acc = acc.mul(&Self::generator(algebra, i))?;
        }
        Ok(acc)
    }

    pub fn algebra(&self) -> &Arc<QPAlgebra<F>> {
        &self.algebra
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, F> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> Option<&F> {
        self.terms.get(e)
    }

    /// Total degree of the highest term (0 for zero).
    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&a| a as usize).sum())
            .max()
            .unwrap_or(0)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if same_algebra(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            accumulate(&mut out.terms, e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            accumulate(&mut out.terms, e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &F) -> Self {
        let mut out = Self::zero(&self.algebra);
        for (e, c) in &self.terms {
            accumulate(&mut out.terms, e.clone(), c.clone() * s);
        }
        out
    }

    /// Product in A_M; errors if a term would exceed the degree cap.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let cap = self.algebra.degree_cap;
        let mut out = Self::zero(&self.algebra);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let sum: Exponents = a.iter().zip(b).map(|(x, y)| x + y).collect();
                let deg: usize = sum.iter().map(|&x| x as usize).sum();
                if deg > cap {
                    return Err(Error::DegreeCapExceeded { degree: deg, cap });
                }
                let c = self.algebra.normal_order_scalar(a, b) * ca * cb;
                accumulate(&mut out.terms, sum, c);
            }
        }
        Ok(out)
    }

    /// Applies `f` to every term and sums, with linear extension.
    pub fn map_terms(&self, mut f: impl FnMut(&Exponents, &F) -> Result<Self>) -> Result<Self> {
        let mut out = Self::zero(&self.algebra);
        for (e, c) in &self.terms {
            let img = f(e, c)?;
            for (e2, c2) in img.terms {
                accumulate(&mut out.terms, e2, c2);
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Vec<TermJson<F>> {
        self.terms
            .iter()
            .map(|(e, c)| TermJson {
                exponents: e.to_vec(),
                coeff: c.clone(),
            })
            .collect()
    }
}

/// One term of a polynomial in JSON form.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermJson<F> {
    pub exponents: Vec<u32>,
    pub coeff: F,
}

impl<F: Ring> fmt::Display for QPolynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) ·")?;
            let mut any = false;
            for (i, &a) in e.iter().enumerate() {
                if a > 0 {
                    write!(f, " u{}^{}", i + 1, a)?;
                    any = true;
                }
            }
            if !any {
                write!(f, " 1")?;
            }
        }
        Ok(())
    }
}

impl<F: Ring> fmt::Debug for QPolynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
