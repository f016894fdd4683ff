//! Actions of H_{2n²} on a quantum polynomial algebra.
//!
//! x and y act as algebra automorphisms given by their images on the
//! generators. z acts on the generators by its images and on longer words
//! through Δ(z) = (1/n) Σ_{i,j} q^{-ij} x^i z ⊗ y^j z, i.e.
//! z·(u_s w) = (1/n) Σ_{i,j} q^{-ij} (x^i·(z·u_s)) (y^j·(z·w)).
//! The value on a normal monomial is the value on its normal word; whether
//! that is consistent with the relations of A_M is a separate check.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use smallvec::SmallVec;

use crate::actions::spec::ActionSpec;
use crate::bialgebra::AlgElement;
use crate::error::{Error, Result};
use crate::exactnum::{Cyclo, Rat};
use crate::h2n2::H2n2;
use crate::qpa::{Exponents, QPAlgebra, QPMatrix, QPolynomial};
use crate::scalar::Ring;

/// A generator of H_{2n²}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    X,
    Y,
    Z,
}

/// An action specified on generators.
pub struct LinearAction<F: Ring> {
    algebra: Arc<QPAlgebra<F>>,
    n: u64,
    q_pows: Vec<F>,
    inv_n: F,
    x_images: Vec<QPolynomial<F>>,
    y_images: Vec<QPolynomial<F>>,
    z_images: Vec<QPolynomial<F>>,
    z_words: Mutex<HashMap<Vec<usize>, QPolynomial<F>>>,
}

impl<F: Ring> std::fmt::Debug for LinearAction<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LinearAction")
            .field("n", &self.n)
            .field("x", &self.x_images)
            .field("y", &self.y_images)
            .field("z", &self.z_images)
            .finish()
    }
}

/// The normal word u_1^{a_1} ⋯ u_r^{a_r} as a list of 0-based letters.
pub fn normal_word(e: &[u32]) -> Vec<usize> {
    e.iter()
        .enumerate()
        .flat_map(|(i, &a)| std::iter::repeat_n(i, a as usize))
        .collect()
}

impl<F: Ring> LinearAction<F> {
    /// `q` must be a primitive n-th root of unity; images are given per
    /// generator, 0-based.
    pub fn new(
        algebra: &Arc<QPAlgebra<F>>,
        n: u64,
        q: &F,
        x_images: Vec<QPolynomial<F>>,
        y_images: Vec<QPolynomial<F>>,
        z_images: Vec<QPolynomial<F>>,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams(format!("order n must be > 1, got {n}")));
        }
        let r = algebra.r();
        for (name, imgs) in [("x", &x_images), ("y", &y_images), ("z", &z_images)] {
            if imgs.len() != r {
                return Err(Error::SizeMismatch(format!("{} images of {name} for {r} generators", imgs.len())));
            }
            for p in imgs {
                if !Arc::ptr_eq(p.algebra(), algebra) && p.algebra().matrix() != algebra.matrix() {
                    return Err(Error::AlgebraMismatch);
                }
            }
        }
        let ctx = algebra.ctx();
        let mut q_pows = vec![F::one_in(ctx)];
        for k in 1..n as usize {
            let next = q_pows[k - 1].clone() * q;
            q_pows.push(next);
        }
        Ok(LinearAction {
            algebra: algebra.clone(),
            n,
            q_pows,
            inv_n: F::from_rat(ctx, &Rat::new(1, n as i64)),
            x_images,
            y_images,
            z_images,
            z_words: Mutex::new(HashMap::new()),
        })
    }

    pub fn algebra(&self) -> &Arc<QPAlgebra<F>> {
        &self.algebra
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// q^k for any integer k.
    pub fn q_pow(&self, k: i64) -> &F {
        &self.q_pows[k.rem_euclid(self.n as i64) as usize]
    }

    pub fn images(&self, g: Gen) -> &[QPolynomial<F>] {
        match g {
            Gen::X => &self.x_images,
            Gen::Y => &self.y_images,
            Gen::Z => &self.z_images,
        }
    }

    /// Extends generator images multiplicatively along normal words.
    fn substitute(&self, images: &[QPolynomial<F>], f: &QPolynomial<F>) -> Result<QPolynomial<F>> {
        f.map_terms(|e, c| {
            let mut acc = QPolynomial::constant(&self.algebra, c.clone());
            for i in normal_word(e) {
                acc = acc.mul(&images[i])?;
            }
            Ok(acc)
        })
    }

    pub fn act_x(&self, f: &QPolynomial<F>) -> Result<QPolynomial<F>> {
        self.substitute(&self.x_images, f)
    }

    pub fn act_y(&self, f: &QPolynomial<F>) -> Result<QPolynomial<F>> {
        self.substitute(&self.y_images, f)
    }

    fn iterate(&self, g: Gen, k: u64, f: &QPolynomial<F>) -> Result<QPolynomial<F>> {
        let mut acc = f.clone();
        for _ in 0..k {
            acc = self.act_generator(g, &acc)?;
        }
        Ok(acc)
    }

    /// z acting on a word of generators (0-based letters).
    pub fn act_z_word(&self, w: &[usize]) -> Result<QPolynomial<F>> {
        match w.len() {
            0 => return Ok(QPolynomial::one(&self.algebra)),
            1 => return Ok(self.z_images[w[0]].clone()),
            _ => {}
        }
        if let Some(hit) = self.z_words.lock().expect("cache lock").get(w) {
            return Ok(hit.clone());
        }
        let head = &self.z_images[w[0]];
        let tail = self.act_z_word(&w[1..])?;
        let n = self.n;
        // x^i·(z·u_s) and y^j·(z·w) for 0 ≤ i, j < n.
        let mut xs = vec![head.clone()];
        let mut ys = vec![tail];
        for k in 1..n as usize {
            let xk = self.act_x(&xs[k - 1])?;
            let yk = self.act_y(&ys[k - 1])?;
            xs.push(xk);
            ys.push(yk);
        }
        let mut out = QPolynomial::zero(&self.algebra);
        for (i, xi) in xs.iter().enumerate() {
            let mut inner = QPolynomial::zero(&self.algebra);
            for (j, yj) in ys.iter().enumerate() {
                inner = inner.add(&yj.scale(self.q_pow(-((i * j) as i64))))?;
            }
            out = out.add(&xi.mul(&inner)?)?;
        }
        let out = out.scale(&self.inv_n);
        self.z_words.lock().expect("cache lock").insert(w.to_vec(), out.clone());
        Ok(out)
    }

    /// z acting on a polynomial through the normal words of its terms.
    pub fn act_z(&self, f: &QPolynomial<F>) -> Result<QPolynomial<F>> {
        f.map_terms(|e, c| Ok(self.act_z_word(&normal_word(e))?.scale(c)))
    }

    pub fn act_generator(&self, g: Gen, f: &QPolynomial<F>) -> Result<QPolynomial<F>> {
        match g {
            Gen::X => self.act_x(f),
            Gen::Y => self.act_y(f),
            Gen::Z => self.act_z(f),
        }
    }

    /// The product g_1 g_2 ⋯ g_k of generators acting on f (rightmost first).
    pub fn act_gen_word(&self, gens: &[Gen], f: &QPolynomial<F>) -> Result<QPolynomial<F>> {
        let mut acc = f.clone();
        for &g in gens.iter().rev() {
            acc = self.act_generator(g, &acc)?;
        }
        Ok(acc)
    }

    /// x^i y^j z^k acting on f.
    pub fn act_monomial(&self, i: u64, j: u64, k: u64, f: &QPolynomial<F>) -> Result<QPolynomial<F>> {
        let f = self.iterate(Gen::Z, k, f)?;
        let f = self.iterate(Gen::Y, j, &f)?;
        self.iterate(Gen::X, i, &f)
    }

    /// h acting on a word of generators, where only z needs the word.
    pub fn act_on_word(&self, gens: &[Gen], w: &[usize]) -> Result<QPolynomial<F>> {
        let Some((&last, rest)) = gens.split_last() else {
            return QPolynomial::word(&self.algebra, w);
        };
        let f = match last {
            Gen::Z => self.act_z_word(w)?,
            g => self.act_generator(g, &QPolynomial::word(&self.algebra, w)?)?,
        };
        self.act_gen_word(rest, &f)
    }
}

impl LinearAction<Cyclo> {
    /// The torus-type action of `spec`, with q and the field taken from `h`.
    pub fn from_spec(h: &H2n2, matrix: &QPMatrix<Cyclo>, spec: &ActionSpec, degree_cap: usize) -> Result<Self> {
        if spec.n != h.n() {
            return Err(Error::InvalidParams(format!("spec has n = {}, algebra has n = {}", spec.n, h.n())));
        }
        if matrix.r() != spec.r {
            return Err(Error::SizeMismatch(format!("matrix is {0}×{0}, spec has r = {1}", matrix.r(), spec.r)));
        }
        if matrix.ctx() != &h.params.ctx {
            return Err(Error::ContextMismatch {
                left: matrix.ctx().conductor(),
                right: h.params.ctx.conductor(),
            });
        }
        let algebra = QPAlgebra::new(matrix.clone(), degree_cap);
        Self::from_spec_in(&algebra, spec, &h.params.q)
    }

    /// The torus-type action of `spec` on a given algebra.
    pub fn from_spec_in(algebra: &Arc<QPAlgebra<Cyclo>>, spec: &ActionSpec, q: &Cyclo) -> Result<Self> {
        if algebra.r() != spec.r {
            return Err(Error::SizeMismatch(format!("algebra has r = {}, spec has r = {}", algebra.r(), spec.r)));
        }
        let qp = |e: u64| q.pow(e as i64).expect("root of unity");
        let gen = |i| QPolynomial::generator(algebra, i);
        let x = (0..spec.r).map(|i| gen(i).scale(&qp(spec.b[i]))).collect();
        let y = (0..spec.r).map(|i| gen(i).scale(&qp(spec.b_tau(i)))).collect();
        let z = (0..spec.r).map(|i| gen(spec.tau0(i))).collect();
        Self::new(algebra, spec.n, q, x, y, z)
    }

    /// The basis element of H at `idx` acting on f.
    pub fn act_basis(&self, h: &H2n2, idx: usize, f: &QPolynomial<Cyclo>) -> Result<QPolynomial<Cyclo>> {
        let (i, j, k) = h.exponents(idx);
        self.act_monomial(i, j, k, f)
    }

    /// An arbitrary element of H acting on f.
    pub fn act_element(&self, h: &H2n2, a: &AlgElement<Cyclo>, f: &QPolynomial<Cyclo>) -> Result<QPolynomial<Cyclo>> {
        let mut out = QPolynomial::zero(&self.algebra);
        for (&idx, c) in a.terms() {
            out = out.add(&self.act_basis(h, idx, f)?.scale(c))?;
        }
        Ok(out)
    }
}

/// The scalar c with z·(u_k u_l) = c u_τ(k) u_τ(l) for a torus-type spec,
/// c = q^{b_τ(k) b_τ(τ(l))}; k, l are 0-based.
pub fn closed_form_z_scalar(spec: &ActionSpec, q: &Cyclo, k: usize, l: usize) -> Cyclo {
    let e = spec.b_tau(k) * spec.b_tau(spec.tau0(l)) % spec.n;
    q.pow(e as i64).expect("root of unity")
}

/// The exponent vector of a single generator.
pub fn unit_exponents(r: usize, i: usize) -> Exponents {
    let mut e: Exponents = SmallVec::from_elem(0, r);
    e[i] = 1;
    e
}
