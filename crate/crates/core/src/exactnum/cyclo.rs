use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::{smallvec, SmallVec};

use super::{prime_factors, Rat};
use crate::error::{Error, Result};
use crate::scalar::{Field, Ring};

/// Largest conductor accepted by [`CycloCtx::new`].
pub const MAX_CONDUCTOR: u64 = 2048;

type Coeffs = SmallVec<[Rat; 4]>;

/// The cyclotomic field Q(ζ_N), presented as Q[x]/Φ_N(x).
///
/// Contexts are interned per conductor, so cloning is a reference-count
/// bump and two contexts compare equal iff their conductors do.
#[derive(Clone)]
pub struct CycloCtx(Arc<CtxInner>);

struct CtxInner {
    conductor: u64,
    /// Coefficients of Φ_N, lowest degree first; monic of degree φ(N).
    min_poly: Vec<i64>,
    /// `powers[k]` is ζ^k reduced modulo Φ_N, for `0 <= k < N`.
    powers: Vec<Vec<i64>>,
}

fn ctx_registry() -> &'static Mutex<HashMap<u64, CycloCtx>> {
    static REGISTRY: OnceLock<Mutex<HashMap<u64, CycloCtx>>> = OnceLock::new();
    REGISTRY.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Φ_N by exact division of x^N − 1 by Φ_d for every proper divisor d of N.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    let mut cache: HashMap<u64, Vec<i128>> = HashMap::new();
    cyclotomic_rec(n, &mut cache)
        .into_iter()
        .map(|c| i64::try_from(c).expect("cyclotomic coefficient overflow"))
        .collect()
}

fn cyclotomic_rec(n: u64, cache: &mut HashMap<u64, Vec<i128>>) -> Vec<i128> {
    if let Some(p) = cache.get(&n) {
        return p.clone();
    }
    // x^n - 1
    let mut num = vec![0i128; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_rec(d, cache);
            num = exact_monic_div(&num, &phi_d);
        }
    }
    cache.insert(n, num.clone());
    num
}

fn exact_monic_div(num: &[i128], den: &[i128]) -> Vec<i128> {
    let dn = den.len() - 1;
    debug_assert_eq!(den[dn], 1);
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i128; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        if c != 0 {
            for (m, &dc) in den.iter().enumerate() {
                rem[k + m] -= c * dc;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "division was not exact");
    quot
}

impl CycloCtx {
    pub fn new(conductor: u64) -> Result<Self> {
        if conductor == 0 || conductor > MAX_CONDUCTOR {
            return Err(Error::BadConductor(conductor));
        }
        let mut reg = ctx_registry().lock().expect("context registry poisoned");
        if let Some(ctx) = reg.get(&conductor) {
            return Ok(ctx.clone());
        }
        let min_poly = cyclotomic_polynomial(conductor);
        let phi = min_poly.len() - 1;
        let mut powers = Vec::with_capacity(conductor as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..conductor {
            powers.push(cur.clone());
            // multiply by x and reduce
            let top = cur[phi - 1];
            let mut next = vec![0i64; phi];
            next[1..phi].copy_from_slice(&cur[..(phi - 1)]);
            if top != 0 {
                for m in 0..phi {
                    next[m] -= top * min_poly[m];
                }
            }
            cur = next;
        }
        let ctx = CycloCtx(Arc::new(CtxInner {
            conductor,
            min_poly,
            powers,
        }));
        reg.insert(conductor, ctx.clone());
        Ok(ctx)
    }

    /// The conductor N.
    pub fn conductor(&self) -> u64 {
        self.0.conductor
    }

    /// φ(N), the dimension of Q(ζ_N) over Q.
    pub fn degree(&self) -> usize {
        self.0.min_poly.len() - 1
    }

    pub fn min_poly(&self) -> &[i64] {
        &self.0.min_poly
    }

    pub fn zero(&self) -> Cyclo {
        Cyclo {
            ctx: self.clone(),
            coeffs: smallvec![Rat::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> Cyclo {
        self.rational(Rat::one())
    }

    pub fn rational(&self, r: Rat) -> Cyclo {
        let mut z = self.zero();
        z.coeffs[0] = r;
        z
    }

    pub fn int(&self, k: i64) -> Cyclo {
        self.rational(Rat::from(k))
    }

    /// ζ_N^k in canonical form; `k` is taken modulo N.
    pub fn root(&self, k: i64) -> Cyclo {
        let n = self.conductor() as i64;
        let idx = k.rem_euclid(n) as usize;
        Cyclo {
            ctx: self.clone(),
            coeffs: self.0.powers[idx].iter().map(|&c| Rat::from(c)).collect(),
        }
    }

    /// ζ_N^{N/n}, the standard primitive n-th root of unity; `n` must divide N.
    pub fn primitive_root(&self, n: u64) -> Result<Cyclo> {
        if n == 0 || !self.conductor().is_multiple_of(n) {
            return Err(Error::NotInField {
                conductor: self.conductor(),
                detail: format!("no primitive {n}-th root of unity"),
            });
        }
        Ok(self.root((self.conductor() / n) as i64))
    }

    /// All primitive n-th roots of unity, ordered by exponent of ζ_N^{N/n}.
    pub fn primitive_roots(&self, n: u64) -> Result<Vec<Cyclo>> {
        let base = self.primitive_root(n)?;
        Ok((1..=n)
            .filter(|k| k.gcd(&n) == 1)
            .map(|k| base.pow(k as i64).expect("roots of unity are invertible"))
            .collect())
    }

    /// Builds an element from rational coefficients in the power basis
    /// 1, ζ, …, ζ^{φ(N)−1}.
    pub fn from_coeffs(&self, coeffs: Vec<Rat>) -> Result<Cyclo> {
        if coeffs.len() != self.degree() {
            return Err(Error::SizeMismatch(format!(
                "expected {} coefficients for Q(zeta_{}), got {}",
                self.degree(),
                self.conductor(),
                coeffs.len()
            )));
        }
        Ok(Cyclo {
            ctx: self.clone(),
            coeffs: coeffs.into_iter().collect(),
        })
    }

    /// Reduces an arbitrary-length coefficient vector modulo Φ_N.
    fn reduce(&self, mut poly: Vec<Rat>) -> Coeffs {
        let phi = self.degree();
        let mp = self.min_poly();
        if poly.len() > phi {
            for k in (phi..poly.len()).rev() {
                if poly[k].is_zero() {
                    continue;
                }
                let c = std::mem::replace(&mut poly[k], Rat::zero());
                for m in 0..phi {
                    if mp[m] != 0 {
                        let delta = c.mul_int(mp[m]);
                        poly[k - phi + m] -= &delta;
                    }
                }
            }
            poly.truncate(phi);
        } else {
            poly.resize(phi, Rat::zero());
        }
        poly.into_iter().collect()
    }
}

impl PartialEq for CycloCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.conductor() == other.conductor()
    }
}

impl Eq for CycloCtx {}

impl fmt::Debug for CycloCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.conductor())
    }
}

/// An exact element of Q(ζ_N), stored as its canonical coefficient vector
/// with respect to 1, ζ, …, ζ^{φ(N)−1}.
#[derive(Clone)]
pub struct Cyclo {
    ctx: CycloCtx,
    coeffs: Coeffs,
}

impl Cyclo {
    pub fn ctx(&self) -> &CycloCtx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rat::is_zero)
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rat> {
        if self.coeffs[1..].iter().all(Rat::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check_ctx(&self, other: &Cyclo) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch {
                left: self.ctx.conductor(),
                right: other.ctx.conductor(),
            })
        }
    }

    fn assert_ctx(&self, other: &Cyclo) {
        if let Err(e) = self.check_ctx(other) {
            panic!("{e}");
        }
    }

    pub fn try_add(&self, other: &Cyclo) -> Result<Cyclo> {
        self.check_ctx(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_mul(&self, other: &Cyclo) -> Result<Cyclo> {
        self.check_ctx(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Cyclo) -> Cyclo {
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(other.coeffs.iter()) {
            *a += b;
        }
        out
    }

    fn mul_unchecked(&self, other: &Cyclo) -> Cyclo {
        let phi = self.ctx.degree();
        // Rational scaling needs no reduction.
        if let Some(r) = other.as_rational() {
            return self.scale(r);
        }
        if let Some(r) = self.as_rational() {
            return other.scale(r);
        }
        let mut prod = vec![Rat::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = a * b;
                prod[i + j] += &t;
            }
        }
        Cyclo {
            ctx: self.ctx.clone(),
            coeffs: self.ctx.reduce(prod),
        }
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, r: &Rat) -> Cyclo {
        if r.is_one() {
            return self.clone();
        }
        Cyclo {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm in Q[x].
    pub fn inv(&self) -> Result<Cyclo> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(self.ctx.rational(r.recip()?));
        }
        let modulus: Vec<Rat> = self.ctx.min_poly().iter().map(|&c| Rat::from(c)).collect();
        let a: Vec<Rat> = self.coeffs.to_vec();
        // Invariant: s_i * a ≡ r_i (mod Φ_N).
        let (mut r0, mut r1) = (modulus, trim(a));
        let (mut s0, mut s1) = (vec![], vec![Rat::one()]);
        while !(r1.len() == 1 && !r1[0].is_zero()) {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            if r1.is_empty() {
                // gcd is not a constant; impossible for an irreducible modulus
                return Err(Error::NotInvertible(self.to_string()));
            }
        }
        let c = r1[0].recip()?;
        let s: Vec<Rat> = s1.iter().map(|x| x * &c).collect();
        Ok(Cyclo {
            ctx: self.ctx.clone(),
            coeffs: self.ctx.reduce(s),
        })
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Cyclo> {
        if e < 0 {
            Ok(self.inv()?.pow_u(e.unsigned_abs()))
        } else {
            Ok(self.pow_u(e as u64))
        }
    }

    /// The multiplicative order if this is a root of unity in Q(ζ_N).
    pub fn root_of_unity_order(&self) -> Option<u64> {
        let n = self.ctx.conductor();
        // The roots of unity in Q(ζ_N) have order dividing lcm(N, 2).
        let m = n.lcm(&2);
        if !self.pow_u(m).is_one() {
            return None;
        }
        (1..=m).filter(|d| m.is_multiple_of(*d)).find(|&d| self.pow_u(d).is_one())
    }

    /// Whether this element is a primitive n-th root of unity.
    pub fn is_primitive_root(&self, n: u64) -> bool {
        if n == 0 || !self.pow_u(n).is_one() {
            return false;
        }
        prime_factors(n).into_iter().all(|p| !self.pow_u(n / p).is_one())
    }

    /// Embeds into Q(ζ_M) for a multiple M of the current conductor.
    pub fn embed(&self, target: &CycloCtx) -> Result<Cyclo> {
        let n = self.ctx.conductor();
        let m = target.conductor();
        if !m.is_multiple_of(n) {
            return Err(Error::NotInField {
                conductor: m,
                detail: format!("Q(zeta_{n}) does not embed into Q(zeta_{m})"),
            });
        }
        if m == n {
            return Ok(self.clone());
        }
        let step = (m / n) as i64;
        let mut out = target.zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out += &target.root(j as i64 * step).scale(c);
            }
        }
        Ok(out)
    }

    /// Serializable form `{"N": N, "coeffs": [...]}`.
    pub fn to_json(&self) -> CycloJson {
        CycloJson {
            conductor: self.ctx.conductor(),
            coeffs: self.coeffs.to_vec(),
        }
    }
}

fn trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.last().is_some_and(Rat::is_zero) {
        p.pop();
    }
    p
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(out)
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    trim(out)
}

fn poly_divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let b = trim(b.to_vec());
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let lead_inv = b.last().expect("nonzero divisor").recip().expect("nonzero");
    let mut quot = vec![Rat::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() * &lead_inv;
        for (i, bc) in b.iter().enumerate() {
            rem[shift + i] -= &(&c * bc);
        }
        quot[shift] = c;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclo {}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.ctx.conductor();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.signum() < 0;
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if k == 1 {
                        write!(f, "zeta{n}")?;
                    } else {
                        write!(f, "zeta{n}^{k}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Wire form of a [`Cyclo`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CycloJson {
    #[serde(rename = "N")]
    pub conductor: u64,
    pub coeffs: Vec<Rat>,
}

impl CycloJson {
    pub fn into_cyclo(self) -> Result<Cyclo> {
        CycloCtx::new(self.conductor)?.from_coeffs(self.coeffs)
    }
}

impl Serialize for Cyclo {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclo {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        CycloJson::deserialize(d)?
            .into_cyclo()
            .map_err(serde::de::Error::custom)
    }
}

macro_rules! cyclo_binop {
    ($tr:ident, $method:ident, $assign_tr:ident, $assign:ident, $f:expr) => {
        impl $tr<&Cyclo> for &Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: &Cyclo) -> Cyclo {
                self.assert_ctx(rhs);
                let f: fn(&Cyclo, &Cyclo) -> Cyclo = $f;
                f(self, rhs)
            }
        }
        impl $tr<&Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: &Cyclo) -> Cyclo {
                (&self).$method(rhs)
            }
        }
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: Cyclo) -> Cyclo {
                (&self).$method(&rhs)
            }
        }
        impl $assign_tr<&Cyclo> for Cyclo {
            fn $assign(&mut self, rhs: &Cyclo) {
                *self = (&*self).$method(rhs);
            }
        }
    };
}

cyclo_binop!(Mul, mul, MulAssign, mul_assign, |a, b| a.mul_unchecked(b));

impl Add<&Cyclo> for &Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        self.assert_ctx(rhs);
        self.add_unchecked(rhs)
    }
}

impl Add<&Cyclo> for Cyclo {
    type Output = Cyclo;
    fn add(mut self, rhs: &Cyclo) -> Cyclo {
        self += rhs;
        self
    }
}

impl Add<Cyclo> for Cyclo {
    type Output = Cyclo;
    fn add(mut self, rhs: Cyclo) -> Cyclo {
        self += &rhs;
        self
    }
}

impl AddAssign<&Cyclo> for Cyclo {
    fn add_assign(&mut self, rhs: &Cyclo) {
        self.assert_ctx(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl Sub<&Cyclo> for &Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub<&Cyclo> for Cyclo {
    type Output = Cyclo;
    fn sub(mut self, rhs: &Cyclo) -> Cyclo {
        self -= rhs;
        self
    }
}

impl Sub<Cyclo> for Cyclo {
    type Output = Cyclo;
    fn sub(mut self, rhs: Cyclo) -> Cyclo {
        self -= &rhs;
        self
    }
}

impl SubAssign<&Cyclo> for Cyclo {
    fn sub_assign(&mut self, rhs: &Cyclo) {
        self.assert_ctx(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(mut self) -> Cyclo {
        for c in self.coeffs.iter_mut() {
            *c = -&*c;
        }
        self
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -self.clone()
    }
}

impl Ring for Cyclo {
    type Ctx = CycloCtx;

    fn context(&self) -> CycloCtx {
        self.ctx.clone()
    }

    fn zero_in(ctx: &CycloCtx) -> Self {
        ctx.zero()
    }

    fn one_in(ctx: &CycloCtx) -> Self {
        ctx.one()
    }

    fn from_rat(ctx: &CycloCtx, r: &Rat) -> Self {
        ctx.rational(r.clone())
    }

    fn is_zero(&self) -> bool {
        Cyclo::is_zero(self)
    }

    fn is_one(&self) -> bool {
        Cyclo::is_one(self)
    }
}

impl Field for Cyclo {
    fn inv(&self) -> Result<Self> {
        Cyclo::inv(self)
    }
}
