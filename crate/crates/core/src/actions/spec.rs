use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::Cyclo;

/// Parameters (n, r, τ, b) of a torus-type action of H_{2n²} on A_M:
/// x·u_i = q^{b_i} u_i, y·u_i = q^{b_τ(i)} u_i, z·u_i = u_τ(i).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ActionSpec {
    pub n: u64,
    pub r: usize,
    /// One-line notation, 1-based: τ(i) = tau[i − 1].
    pub tau: Vec<usize>,
    pub b: Vec<u64>,
}

impl ActionSpec {
    /// Validates τ and reduces b mod n.
    pub fn new(n: u64, tau: Vec<usize>, b: Vec<i64>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams(format!("order n must be > 1, got {n}")));
        }
        let r = tau.len();
        if r == 0 {
            return Err(Error::InvalidParams("r must be at least 1".into()));
        }
        if b.len() != r {
            return Err(Error::SizeMismatch(format!("b has {} entries, tau has {r}", b.len())));
        }
        let mut seen = vec![false; r];
        for &t in &tau {
            if t == 0 || t > r || seen[t - 1] {
                return Err(Error::InvalidParams(format!("{tau:?} is not a permutation of 1..={r}")));
            }
            seen[t - 1] = true;
        }
        let b = b.into_iter().map(|v| v.rem_euclid(n as i64) as u64).collect();
        Ok(ActionSpec { n, r, tau, b })
    }

    /// τ as a 0-based map.
    pub fn tau0(&self, i: usize) -> usize {
        self.tau[i] - 1
    }

    /// b_{τ(i)} with a 0-based i.
    pub fn b_tau(&self, i: usize) -> u64 {
        self.b[self.tau0(i)]
    }

    /// Exponents of λ_i = q^{b_i}.
    pub fn lambda_exponents(&self) -> Vec<u64> {
        self.b.clone()
    }

    /// Exponents of μ_i = q^{b_τ(i)}.
    pub fn mu_exponents(&self) -> Vec<u64> {
        (0..self.r).map(|i| self.b_tau(i)).collect()
    }

    pub fn lambda(&self, q: &Cyclo) -> Vec<Cyclo> {
        self.lambda_exponents().into_iter().map(|e| pow(q, e)).collect()
    }

    pub fn mu(&self, q: &Cyclo) -> Vec<Cyclo> {
        self.mu_exponents().into_iter().map(|e| pow(q, e)).collect()
    }

    /// B_st = b_s b_τ(t) − b_t b_τ(s) mod n, 0-based.
    pub fn b_matrix(&self) -> BMatrix {
        let n = self.n as i64;
        let entries = (0..self.r)
            .map(|s| {
                (0..self.r)
                    .map(|t| {
                        let v = self.b[s] as i64 * self.b_tau(t) as i64 - self.b[t] as i64 * self.b_tau(s) as i64;
                        v.rem_euclid(n) as u64
                    })
                    .collect()
            })
            .collect();
        BMatrix { n: self.n, entries }
    }

    /// f(i, j) = (i b_1 + j b_τ(1), …, i b_r + j b_τ(r)) mod n.
    pub fn f_map(&self, i: u64, j: u64) -> Vec<u64> {
        (0..self.r)
            .map(|s| (i * self.b[s] + j * self.b_tau(s)) % self.n)
            .collect()
    }

    /// Cycle notation with 1-based points, e.g. "(13)" or "id".
    pub fn tau_cycles(&self) -> String {
        format_cycles(&self.tau)
    }
}

fn pow(q: &Cyclo, e: u64) -> Cyclo {
    q.pow(e as i64).expect("roots of unity are invertible")
}

/// The matrix B_st, entries in Z_n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BMatrix {
    pub n: u64,
    pub entries: Vec<Vec<u64>>,
}

impl BMatrix {
    pub fn get(&self, s: usize, t: usize) -> u64 {
        self.entries[s][t]
    }

    /// B_st + B_ts ≡ 0 mod n everywhere.
    pub fn is_antisymmetric(&self) -> bool {
        let r = self.entries.len();
        (0..r).all(|s| (0..r).all(|t| (self.get(s, t) + self.get(t, s)).is_multiple_of(self.n)))
    }

    /// 1-based pairs (s, t) whose entry is a unit mod n.
    pub fn invertible_entries(&self) -> Vec<(usize, usize)> {
        let r = self.entries.len();
        let mut out = Vec::new();
        for s in 0..r {
            for t in 0..r {
                if self.get(s, t).gcd(&self.n) == 1 {
                    out.push((s + 1, t + 1));
                }
            }
        }
        out
    }
}

/// Result of the brute-force injectivity test of f.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InnerFaithfulness {
    pub inner_faithful: bool,
    /// Some (i, j) ≠ (0, 0) with f(i, j) = 0 when f is not injective.
    pub witness: Option<(u64, u64)>,
}

/// Decides injectivity of f over all n² inputs. f is a group homomorphism,
/// so it is injective exactly when its kernel is trivial; the search still
/// compares all images pairwise-free by hashing.
pub fn is_inner_faithful(spec: &ActionSpec) -> InnerFaithfulness {
    let n = spec.n;
    let mut seen = std::collections::HashMap::new();
    let mut injective = true;
    let mut witness = None;
    for i in 0..n {
        for j in 0..n {
            let img = spec.f_map(i, j);
            if img.iter().all(|&v| v == 0) && (i, j) != (0, 0) && witness.is_none() {
                witness = Some((i, j));
            }
            if seen.insert(img, (i, j)).is_some() {
                injective = false;
            }
        }
    }
    InnerFaithfulness {
        inner_faithful: injective,
        witness: if injective { None } else { witness },
    }
}

/// True when some B_st is a unit in Z_n.
pub fn has_invertible_b(spec: &ActionSpec) -> bool {
    !spec.b_matrix().invertible_entries().is_empty()
}

/// Parses cycle notation such as "(13)", "(1 3)(2 4)" or "id" into one-line
/// notation on r points.
pub fn parse_cycles(text: &str, r: usize) -> Result<Vec<usize>> {
    let mut perm: Vec<usize> = (1..=r).collect();
    let t = text.trim();
    if t.is_empty() || t == "id" || t == "()" {
        return Ok(perm);
    }
    let mut used = vec![false; r + 1];
    let mut rest = t;
    while !rest.is_empty() {
        let open = rest
            .find('(')
            .filter(|&k| rest[..k].trim().is_empty())
            .ok_or_else(|| Error::Parse(format!("expected '(' in `{text}`")))?;
        let close = rest[open..]
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed cycle in `{text}`")))?
            + open;
        let body = &rest[open + 1..close];
        let points: Vec<usize> = if body.contains(|c: char| c == ',' || c.is_whitespace()) {
            body.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|e| Error::Parse(format!("{s}: {e}"))))
                .collect::<Result<_>>()?
        } else {
            body.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad point `{c}` in `{text}`")))
                })
                .collect::<Result<_>>()?
        };
        for &p in &points {
            if p == 0 || p > r || used[p] {
                return Err(Error::Parse(format!("point {p} invalid or repeated in `{text}`")));
            }
            used[p] = true;
        }
        for (k, &p) in points.iter().enumerate() {
            perm[p - 1] = points[(k + 1) % points.len()];
        }
        rest = rest[close + 1..].trim_start();
    }
    Ok(perm)
}

/// Cycle notation of a 1-based one-line permutation.
pub fn format_cycles(tau: &[usize]) -> String {
    let r = tau.len();
    let mut seen = vec![false; r];
    let mut out = String::new();
    let sep = if r >= 10 { " " } else { "" };
    for start in 0..r {
        if seen[start] || tau[start] == start + 1 {
            seen[start] = true;
            continue;
        }
        let mut cycle = Vec::new();
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            cycle.push((k + 1).to_string());
            k = tau[k] - 1;
        }
        out.push('(');
        out.push_str(&cycle.join(sep));
        out.push(')');
    }
    if out.is_empty() {
        "id".into()
    } else {
        out
    }
}

/// All permutations of 1..=r in lexicographic one-line order.
pub fn permutations(r: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (1..=r).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (0..r.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..r).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}
