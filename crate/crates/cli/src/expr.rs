//! Exact scalar expressions such as `1/2`, `-zeta8^3`, `q^2` or
//! `(1 + zeta4)/2`.
//!
//! Parsing and evaluation are separate so the field can be chosen after
//! seeing which roots of unity an input mentions.

use anyhow::{anyhow, bail, Result};
use ore_hopf::{Cyclo, CycloCtx};

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Int(i64),
    /// ζ_N; `i` parses as ζ_4.
    Zeta(u64),
    /// The chosen primitive n-th root of unity, when the command has one.
    Q,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

impl Expr {
    pub fn parse(text: &str) -> Result<Expr> {
        let mut p = Parser { s: text.as_bytes(), pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            bail!("unexpected `{}` at offset {} in `{text}`", &text[p.pos..], p.pos);
        }
        Ok(e)
    }

    /// Orders of the roots of unity that appear explicitly.
    pub fn root_orders(&self, out: &mut Vec<u64>) {
        match self {
            Expr::Int(_) | Expr::Q => {}
            Expr::Zeta(n) => out.push(*n),
            Expr::Neg(a) | Expr::Pow(a, _) => a.root_orders(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.root_orders(out);
                b.root_orders(out);
            }
        }
    }

    pub fn eval(&self, ctx: &CycloCtx, q: Option<&Cyclo>) -> Result<Cyclo> {
        Ok(match self {
            Expr::Int(k) => ctx.int(*k),
            Expr::Zeta(n) => ctx
                .primitive_root(*n)
                .map_err(|_| anyhow!("zeta{n} is not in Q(zeta{})", ctx.conductor()))?,
            Expr::Q => q.ok_or_else(|| anyhow!("`q` is not defined here"))?.clone(),
            Expr::Neg(a) => -a.eval(ctx, q)?,
            Expr::Add(a, b) => a.eval(ctx, q)? + b.eval(ctx, q)?,
            Expr::Sub(a, b) => a.eval(ctx, q)? - b.eval(ctx, q)?,
            Expr::Mul(a, b) => a.eval(ctx, q)? * &b.eval(ctx, q)?,
            Expr::Div(a, b) => {
                let d = b.eval(ctx, q)?;
                if d.is_zero() {
                    bail!("division by zero");
                }
                a.eval(ctx, q)? * &d.inv()?
            }
            Expr::Pow(a, e) => a.eval(ctx, q)?.pow(*e)?,
        })
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut e = self.term()?;
        loop {
            if self.eat(b'+') {
                e = Expr::Add(Box::new(e), Box::new(self.term()?));
            } else if self.eat(b'-') {
                e = Expr::Sub(Box::new(e), Box::new(self.term()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut e = self.unary()?;
        loop {
            if self.eat(b'*') {
                e = Expr::Mul(Box::new(e), Box::new(self.unary()?));
            } else if self.eat(b'/') {
                e = Expr::Div(Box::new(e), Box::new(self.unary()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let neg = self.eat(b'-');
            let k = self.digits()?.ok_or_else(|| anyhow!("expected an exponent at offset {}", self.pos))?;
            let k = i64::try_from(k)?;
            return Ok(Expr::Pow(Box::new(base), if neg { -k } else { k }));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Result<Option<u64>> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let text = std::str::from_utf8(&self.s[start..self.pos])?;
        Ok(Some(text.parse().map_err(|_| anyhow!("number `{text}` is too large"))?))
    }

    fn atom(&mut self) -> Result<Expr> {
        if self.eat(b'(') {
            let e = self.expr()?;
            if !self.eat(b')') {
                bail!("missing `)` at offset {}", self.pos);
            }
            return Ok(e);
        }
        if let Some(k) = self.digits()? {
            return Ok(Expr::Int(i64::try_from(k)?));
        }
        let rest = &self.s[self.pos..];
        if rest.starts_with(b"zeta") {
            self.pos += 4;
            let n = self.digits()?.ok_or_else(|| anyhow!("`zeta` needs an order, as in zeta4"))?;
            if n == 0 {
                bail!("zeta0 is not a root of unity");
            }
            return Ok(Expr::Zeta(n));
        }
        if let Some(&c) = rest.first() {
            let next_is_word = rest.get(1).is_some_and(|b| b.is_ascii_alphanumeric());
            if !next_is_word && c == b'i' {
                self.pos += 1;
                return Ok(Expr::Zeta(4));
            }
            if !next_is_word && c == b'q' {
                self.pos += 1;
                return Ok(Expr::Q);
            }
        }
        match self.peek() {
            Some(_) => bail!(
                "unexpected `{}` at offset {}",
                String::from_utf8_lossy(&self.s[self.pos..]),
                self.pos
            ),
            None => bail!("unexpected end of expression"),
        }
    }
}
