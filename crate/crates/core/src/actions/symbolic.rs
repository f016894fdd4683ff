//! Multivariate polynomials over a cyclotomic field, used as scalars when
//! an action has unknown coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use smallvec::SmallVec;

use crate::exactnum::{Cyclo, CycloCtx, Rat};
use crate::scalar::Ring;

type Mono = SmallVec<[u16; 4]>;

/// The field of constants together with the variable names.
#[derive(Clone, Debug, PartialEq)]
pub struct SymCtx(Arc<(CycloCtx, Vec<String>)>);

impl SymCtx {
    pub fn new(field: &CycloCtx, names: &[&str]) -> Self {
        SymCtx(Arc::new((field.clone(), names.iter().map(|s| s.to_string()).collect())))
    }

    pub fn field(&self) -> &CycloCtx {
        &self.0 .0
    }

    pub fn nvars(&self) -> usize {
        self.0 .1.len()
    }

    pub fn name(&self, k: usize) -> &str {
        &self.0 .1[k]
    }

    pub fn var(&self, k: usize) -> SymPoly {
        let mut m: Mono = SmallVec::from_elem(0, self.nvars());
        m[k] = 1;
        SymPoly::from_terms(self, [(m, self.field().one())])
    }

    pub fn constant(&self, c: Cyclo) -> SymPoly {
        SymPoly::from_terms(self, [(SmallVec::from_elem(0, self.nvars()), c)])
    }
}

#[derive(Clone, PartialEq)]
pub struct SymPoly {
    ctx: SymCtx,
    terms: BTreeMap<Mono, Cyclo>,
}

impl SymPoly {
    pub fn from_terms(ctx: &SymCtx, terms: impl IntoIterator<Item = (Mono, Cyclo)>) -> Self {
        let mut out = SymPoly {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        };
        for (m, c) in terms {
            crate::bialgebra::accumulate(&mut out.terms, m, c);
        }
        out
    }

    pub fn ctx(&self) -> &SymCtx {
        &self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<Mono, Cyclo> {
        &self.terms
    }

    /// The value if no variable occurs.
    pub fn as_constant(&self) -> Option<Cyclo> {
        if self.terms.is_empty() {
            return Some(self.ctx.field().zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().expect("one term");
            if m.iter().all(|&e| e == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn degree_in(&self, k: usize) -> u16 {
        self.terms.keys().map(|m| m[k]).max().unwrap_or(0)
    }

    pub fn variables(&self) -> Vec<usize> {
        (0..self.ctx.nvars()).filter(|&k| self.degree_in(k) > 0).collect()
    }

    /// Writes self = a·v_k + rest with rest free of v_k, when a is constant
    /// and v_k occurs only linearly.
    pub fn linear_in(&self, k: usize) -> Option<(Cyclo, SymPoly)> {
        if self.degree_in(k) != 1 {
            return None;
        }
        let mut a = None;
        let mut rest = SymPoly::from_terms(&self.ctx, []);
        for (m, c) in &self.terms {
            if m[k] == 1 {
                if m.iter().enumerate().any(|(i, &e)| i != k && e > 0) {
                    return None;
                }
                a = Some(c.clone());
            } else {
                crate::bialgebra::accumulate(&mut rest.terms, m.clone(), c.clone());
            }
        }
        a.map(|a| (a, rest))
    }

    /// Replaces v_k by `value`.
    pub fn substitute(&self, k: usize, value: &SymPoly) -> SymPoly {
        let mut out = SymPoly::from_terms(&self.ctx, []);
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let e = rest[k];
            rest[k] = 0;
            let term = SymPoly::from_terms(&self.ctx, [(rest, c.clone())]) * &value.pow_u(e as u64);
            out += &term;
        }
        out
    }

    /// Coefficients c_0, c_1, … when only v_k occurs.
    pub fn univariate(&self, k: usize) -> Option<Vec<Cyclo>> {
        let mut coeffs = vec![self.ctx.field().zero(); self.degree_in(k) as usize + 1];
        for (m, c) in &self.terms {
            if m.iter().enumerate().any(|(i, &e)| i != k && e > 0) {
                return None;
            }
            coeffs[m[k] as usize] = c.clone();
        }
        Some(coeffs)
    }

    /// The same polynomial divided by its leading coefficient.
    pub fn monic(&self) -> SymPoly {
        match self.terms.iter().next_back() {
            Some((_, lead)) => {
                let inv = lead.inv().expect("nonzero");
                let c = self.ctx.constant(inv);
                self.clone() * &c
            }
            None => self.clone(),
        }
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.ctx.name(i).to_string()
                    } else {
                        format!("{}^{e}", self.ctx.name(i))
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "({c})*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl AddAssign<&SymPoly> for SymPoly {
    fn add_assign(&mut self, rhs: &SymPoly) {
        for (m, c) in &rhs.terms {
            crate::bialgebra::accumulate(&mut self.terms, m.clone(), c.clone());
        }
    }
}

impl SubAssign<&SymPoly> for SymPoly {
    fn sub_assign(&mut self, rhs: &SymPoly) {
        for (m, c) in &rhs.terms {
            crate::bialgebra::accumulate(&mut self.terms, m.clone(), -c.clone());
        }
    }
}

impl MulAssign<&SymPoly> for SymPoly {
    fn mul_assign(&mut self, rhs: &SymPoly) {
        *self = self.clone() * rhs;
    }
}

impl Mul<&SymPoly> for SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: &SymPoly) -> SymPoly {
        let mut out = SymPoly::from_terms(&self.ctx, []);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let m: Mono = a.iter().zip(b).map(|(x, y)| x + y).collect();
                crate::bialgebra::accumulate(&mut out.terms, m, ca.clone() * cb);
            }
        }
        out
    }
}

impl Add<&SymPoly> for SymPoly {
    type Output = SymPoly;
    fn add(mut self, rhs: &SymPoly) -> SymPoly {
        self += rhs;
        self
    }
}

impl Sub<&SymPoly> for SymPoly {
    type Output = SymPoly;
    fn sub(mut self, rhs: &SymPoly) -> SymPoly {
        self -= rhs;
        self
    }
}

impl Add for SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: SymPoly) -> SymPoly {
        self + &rhs
    }
}

impl Sub for SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: SymPoly) -> SymPoly {
        self - &rhs
    }
}

impl Mul for SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: SymPoly) -> SymPoly {
        self * &rhs
    }
}

impl Neg for SymPoly {
    type Output = SymPoly;
    fn neg(mut self) -> SymPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Ring for SymPoly {
    type Ctx = SymCtx;

    fn context(&self) -> SymCtx {
        self.ctx.clone()
    }

    fn zero_in(ctx: &SymCtx) -> Self {
        SymPoly::from_terms(ctx, [])
    }

    fn one_in(ctx: &SymCtx) -> Self {
        ctx.constant(ctx.field().one())
    }

    fn from_rat(ctx: &SymCtx, r: &Rat) -> Self {
        ctx.constant(ctx.field().rational(r.clone()))
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Outcome of [`solve`].
#[derive(Debug, Clone)]
pub struct Solutions {
    /// Complete assignments of every variable.
    pub points: Vec<Vec<Cyclo>>,
    /// One line per derivation step.
    pub steps: Vec<String>,
    /// False if some univariate equation had roots outside the roots of
    /// unity (and zero) of the field, or a variable stayed free.
    pub complete: bool,
}

/// Solves a polynomial system by repeatedly eliminating a variable that
/// occurs linearly with constant coefficient, then finding the roots of a
/// remaining univariate equation among 0 and the roots of unity of the
/// field.
pub fn solve(ctx: &SymCtx, equations: &[SymPoly]) -> Solutions {
    let mut steps = Vec::new();
    let mut points = Vec::new();
    let mut complete = true;
    let assignment: Vec<Option<SymPoly>> = vec![None; ctx.nvars()];
    solve_rec(ctx, equations.to_vec(), assignment, &mut steps, &mut points, &mut complete, 0);
    Solutions { points, steps, complete }
}

fn solve_rec(
    ctx: &SymCtx,
    mut eqs: Vec<SymPoly>,
    mut assignment: Vec<Option<SymPoly>>,
    steps: &mut Vec<String>,
    points: &mut Vec<Vec<Cyclo>>,
    complete: &mut bool,
    depth: usize,
) {
    let pad = "  ".repeat(depth);
    loop {
        eqs.retain(|e| !e.is_zero());
        dedupe(&mut eqs);
        if let Some(bad) = eqs.iter().find(|e| e.as_constant().is_some()) {
            steps.push(format!("{pad}contradiction: {bad} = 0"));
            return;
        }
        let pick = eqs.iter().enumerate().find_map(|(ei, e)| {
            (0..ctx.nvars()).find_map(|k| e.linear_in(k).map(|(a, rest)| (ei, k, a, rest)))
        });
        let Some((ei, k, a, rest)) = pick else { break };
        let value = rest * &ctx.constant(-a.inv().expect("nonzero"));
        steps.push(format!("{pad}from {} = 0: {} = {}", eqs[ei], ctx.name(k), value));
        eqs.remove(ei);
        for e in eqs.iter_mut() {
            *e = e.substitute(k, &value);
        }
        for v in assignment.iter_mut().flatten() {
            *v = v.substitute(k, &value);
        }
        assignment[k] = Some(value);
    }
    if eqs.is_empty() {
        let mut point = Vec::new();
        for (k, v) in assignment.iter().enumerate() {
            match v.as_ref().and_then(|p| p.as_constant()) {
                Some(c) => point.push(c),
                None => {
                    steps.push(format!("{pad}{} is not determined", ctx.name(k)));
                    *complete = false;
                    return;
                }
            }
        }
        steps.push(format!(
            "{pad}solution: {}",
            (0..ctx.nvars()).map(|k| format!("{} = {}", ctx.name(k), point[k])).collect::<Vec<_>>().join(", ")
        ));
        points.push(point);
        return;
    }
    let found = eqs.iter().enumerate().find_map(|(ei, e)| {
        let vars = e.variables();
        (vars.len() == 1).then(|| (ei, vars[0], e.univariate(vars[0]).expect("single variable")))
    });
    let Some((ei, k, coeffs)) = found else {
        steps.push(format!("{pad}no univariate equation left in {eqs:?}"));
        *complete = false;
        return;
    };
    let field = ctx.field();
    let deg = coeffs.len() - 1;
    let order = num_integer::Integer::lcm(&field.conductor(), &2);
    let mut candidates = vec![field.zero()];
    candidates.extend((0..order as i64).map(|j| field.root(j)));
    let mut roots: Vec<Cyclo> = Vec::new();
    for c in candidates {
        let val = coeffs.iter().rev().fold(field.zero(), |acc, a| acc * &c + a);
        if val.is_zero() && !roots.contains(&c) {
            roots.push(c);
        }
    }
    steps.push(format!(
        "{pad}{} = 0 has roots {} ({} of degree {deg})",
        eqs[ei].monic(),
        roots.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", "),
        roots.len()
    ));
    if roots.len() != deg {
        *complete = false;
    }
    for root in roots {
        steps.push(format!("{pad}case {} = {root}:", ctx.name(k)));
        let value = ctx.constant(root);
        let sub_eqs = eqs.iter().map(|e| e.substitute(k, &value)).collect();
        let mut sub_assign = assignment.clone();
        for v in sub_assign.iter_mut().flatten() {
            *v = v.substitute(k, &value);
        }
        sub_assign[k] = Some(value);
        solve_rec(ctx, sub_eqs, sub_assign, steps, points, complete, depth + 1);
    }
}

fn dedupe(eqs: &mut Vec<SymPoly>) {
    let mut out: Vec<SymPoly> = Vec::new();
    for e in eqs.drain(..) {
        let m = e.monic();
        if !out.iter().any(|o| o.monic() == m) {
            out.push(e);
        }
    }
    *eqs = out;
}
