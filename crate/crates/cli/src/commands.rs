use std::fmt::Write as _;
use std::path::Path;

use anyhow::{Context, Result};
use ore_hopf::actions::{
    annihilator_group_check_spec, check_action_compat_with_q, classify_h8_quantum_plane, enumerate_actions_with_q,
    format_cycles, has_invertible_b, is_inner_faithful, parse_cycles, verify_action,
};
use ore_hopf::qpa::validate_matrix;
use ore_hopf::{build_h2n2, ActionSpec, Bialgebra, H2n2Params, Report};
use serde_json::{json, Value};

use crate::expr::Expr;
use crate::input::{choose_q, field, parse_b, RawMatrix};

/// What a command emits: the same content twice, plus the exit verdict.
pub struct Output {
    pub json: Value,
    pub markdown: String,
    pub pass: bool,
}

/// Markdown shows the first few violations of each report; JSON keeps all.
const MARKDOWN_VIOLATIONS: usize = 12;

fn reports_markdown(reports: &[Report]) -> String {
    reports
        .iter()
        .map(|r| {
            let mut short = r.clone();
            short.violations.truncate(MARKDOWN_VIOLATIONS);
            let mut s = short.to_markdown();
            if r.violations.len() > MARKDOWN_VIOLATIONS {
                let _ = writeln!(s, "\n({} more violations in the JSON report)", r.violations.len() - MARKDOWN_VIOLATIONS);
            }
            s
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn integral_report(h: &Bialgebra) -> Result<(Report, Value)> {
    let li = h.left_integral()?;
    let mut rep = Report::new("left integral");
    rep.check(li.solution_dim == 1, "one-dimensional", || format!("dimension {}", li.solution_dim));
    rep.check(li.semisimple(), "ε(Λ) ≠ 0", || "ε(Λ) = 0".into());
    Ok((rep, serde_json::to_value(li.summary())?))
}

pub fn build_hopf(n: u64, q_exponent: i64, conductor: Option<u64>, export: Option<&Path>) -> Result<Output> {
    let ctx = field([n], conductor)?;
    let q = choose_q(&ctx, n, q_exponent)?;
    let h = build_h2n2(&H2n2Params::new(&ctx, n, q.clone())?)?;
    if let Some(path) = export {
        let mut text = h.export_json();
        text.push('\n');
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    let mut reports = vec![ore_hopf::ore_twist::check_all_hypotheses(&h.twist_data())?];
    reports.push(h.check_family_identities()?);
    reports.push(h.check_hopf_ideal_lemma()?);
    reports.push(h.h.check_algebra());
    reports.push(h.h.check_coassoc_counit());
    reports.push(h.h.check_bialgebra_compat());
    reports.push(h.h.check_antipode()?);
    let (int_rep, int_json) = integral_report(&h.h)?;
    reports.push(int_rep);
    let pass = reports.iter().all(|r| r.pass);
    let mut md = format!(
        "# H_{{2n²}} with n = {n}\n\ndimension {}, q = {q}, field Q(zeta{})\n\n",
        h.dim(),
        ctx.conductor()
    );
    md.push_str(&reports_markdown(&reports));
    Ok(Output {
        json: json!({
            "n": n,
            "q": q.to_string(),
            "conductor": ctx.conductor(),
            "dimension": h.dim(),
            "export": export.map(|p| p.display().to_string()),
            "integral": int_json,
            "reports": reports,
            "pass": pass,
        }),
        markdown: md,
        pass,
    })
}

pub fn verify(input: &Path) -> Result<Output> {
    let text = std::fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
    let h = Bialgebra::import_json(&text).with_context(|| format!("{}: not a structure export", input.display()))?;
    let mut reports = vec![h.check_algebra(), h.check_coassoc_counit(), h.check_bialgebra_compat()];
    if h.has_antipode() {
        reports.push(h.check_antipode()?);
    }
    let (int_rep, int_json) = integral_report(&h)?;
    // semisimplicity is reported but is not an axiom
    let pass = reports.iter().all(|r| r.pass);
    let mut md = format!("# {} ({} basis elements)\n\n", input.display(), h.dim());
    md.push_str(&reports_markdown(&reports));
    md.push('\n');
    md.push_str(&int_rep.to_markdown());
    Ok(Output {
        json: json!({
            "dimension": h.dim(),
            "reports": reports,
            "integral": int_json,
            "pass": pass,
        }),
        markdown: md,
        pass,
    })
}

/// Where the matrix comes from.
pub enum MatrixSource<'a> {
    File(&'a Path),
    Plane(&'a str),
}

fn load_matrix(src: &MatrixSource) -> Result<RawMatrix> {
    match src {
        MatrixSource::File(p) => RawMatrix::from_file(p),
        MatrixSource::Plane(p) => Ok(RawMatrix::Plane(Expr::parse(p).context("--p")?)),
    }
}

pub struct ActionArgs<'a> {
    pub n: u64,
    pub matrix: MatrixSource<'a>,
    pub tau: &'a str,
    pub b: &'a str,
    pub degree_cap: u32,
    pub q_exponent: i64,
    pub conductor: Option<u64>,
}

pub fn check_action(a: &ActionArgs) -> Result<Output> {
    let raw = load_matrix(&a.matrix)?;
    let ctx = field(raw.root_orders()?.into_iter().chain([a.n]), a.conductor)?;
    let q = choose_q(&ctx, a.n, a.q_exponent)?;
    let m = raw.build(&ctx, Some(&q))?;
    let r = m.r();
    let spec = ActionSpec::new(a.n, parse_cycles(a.tau, r)?, parse_b(a.b)?)?;

    let valid = validate_matrix(&m);
    let compat = check_action_compat_with_q(&m, &spec, &q)?;
    let faithful = is_inner_faithful(&spec);
    let oracle = annihilator_group_check_spec(&spec, &q)?;
    let bm = spec.b_matrix();
    let invertible = has_invertible_b(&spec);
    let mut notes = Vec::new();
    if spec.n != 2 {
        notes.push(format!("invertibility of B_st is decided in Z_{}", spec.n));
    }
    let h = build_h2n2(&H2n2Params::new(&ctx, a.n, q.clone())?)?;
    let module = verify_action(&h, &m, &spec, a.degree_cap)?;
    let pass = valid.pass && compat.pass && module.pass;

    let lam = spec.lambda_exponents();
    let mu = spec.mu_exponents();
    let mut md = format!(
        "# action of H_{{2n²}}, n = {}, τ = {}, b = {:?}\n\nq = {q}, field Q(zeta{})\n\n",
        a.n,
        spec.tau_cycles(),
        spec.b,
        ctx.conductor()
    );
    md.push_str("| generator | x·u_i = q^λ u_i | y·u_i = q^μ u_i | z·u_i |\n|---|---|---|---|\n");
    for i in 0..r {
        let _ = writeln!(md, "| u{} | {} | {} | u{} |", i + 1, lam[i], mu[i], spec.tau0(i) + 1);
    }
    md.push_str("\nB (mod n):\n\n");
    for row in &bm.entries {
        let _ = writeln!(md, "    {}", row.iter().map(|x| format!("{x:>2}")).collect::<Vec<_>>().join(" "));
    }
    let _ = writeln!(
        md,
        "\ninner faithful (f injective): {}{}",
        yes_no(faithful.inner_faithful),
        faithful.witness.map(|(i, j)| format!(", f({i},{j}) = 0")).unwrap_or_default()
    );
    let _ = writeln!(
        md,
        "annihilating group elements (oracle): {}",
        if oracle.annihilating.is_empty() {
            "none".to_string()
        } else {
            oracle.annihilating.iter().map(|(i, j)| format!("x^{i}y^{j}")).collect::<Vec<_>>().join(", ")
        }
    );
    let _ = writeln!(md, "some B_st invertible: {}", yes_no(invertible));
    for note in &notes {
        let _ = writeln!(md, "note: {note}");
    }
    md.push('\n');
    md.push_str(&reports_markdown(&[valid.clone(), compat.clone(), module.clone()]));
    Ok(Output {
        json: json!({
            "spec": spec,
            "tau_cycles": spec.tau_cycles(),
            "q": q.to_string(),
            "conductor": ctx.conductor(),
            "lambda_exponents": lam,
            "mu_exponents": mu,
            "b_matrix": bm.entries,
            "inner_faithful": faithful.inner_faithful,
            "f_kernel_witness": faithful.witness,
            "annihilating_group_elements": oracle.annihilating,
            "invertible_b": invertible,
            "invertible_b_entries": bm.invertible_entries(),
            "notes": notes,
            "matrix": valid,
            "compatibility": compat,
            "module_algebra": module,
            "pass": pass,
        }),
        markdown: md,
        pass,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn enumerate(n: u64, matrix: MatrixSource, q_exponent: i64, conductor: Option<u64>) -> Result<Output> {
    let raw = load_matrix(&matrix)?;
    let ctx = field(raw.root_orders()?.into_iter().chain([n]), conductor)?;
    let q = choose_q(&ctx, n, q_exponent)?;
    let m = raw.build(&ctx, Some(&q))?;
    let valid = validate_matrix(&m);
    if !valid.pass {
        anyhow::bail!("not a valid quantum polynomial matrix:\n{}", valid.to_markdown());
    }
    let found = enumerate_actions_with_q(&m, n, &q)?;
    let mut md = format!(
        "# compatible specs, n = {n}, r = {}, q = {q}\n\n{} found\n\n| τ | b | inner faithful |\n|---|---|---|\n",
        m.r(),
        found.len()
    );
    let rows: Vec<Value> = found
        .iter()
        .map(|a| {
            let _ = writeln!(
                md,
                "| {} | ({}) | {} |",
                format_cycles(&a.spec.tau),
                a.spec.b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
                yes_no(a.inner_faithful)
            );
            json!({
                "tau": a.spec.tau,
                "tau_cycles": format_cycles(&a.spec.tau),
                "b": a.spec.b,
                "inner_faithful": a.inner_faithful,
            })
        })
        .collect();
    Ok(Output {
        json: json!({
            "n": n,
            "r": m.r(),
            "q": q.to_string(),
            "conductor": ctx.conductor(),
            "count": found.len(),
            "actions": rows,
        }),
        markdown: md,
        pass: true,
    })
}

pub fn classify(p: &str, conductor: Option<u64>) -> Result<Output> {
    let e = Expr::parse(p).context("--p")?;
    let mut orders = Vec::new();
    e.root_orders(&mut orders);
    let ctx = field(orders, conductor)?;
    let p = e.eval(&ctx, None)?;
    let rep = classify_h8_quantum_plane(&p)?;
    Ok(Output {
        json: serde_json::to_value(&rep)?,
        markdown: rep.to_markdown(),
        pass: true,
    })
}
