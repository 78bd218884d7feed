//! Command runners behind the `nlie-kit` binary. Each runner is a pure
//! function from parsed options to a [`CmdOutput`] (human-readable text, a
//! machine-readable JSON report, and a pass/fail verdict), so the full
//! command surface is testable in-process. The binary maps `ok = false` to
//! exit code 1 and error values to the code chosen by
//! [`Error::exit_code`](crate::Error::exit_code).

use crate::basiclie::{iso_to_so, self_module};
use crate::exact::binomial;
use crate::nlie::{vector_product_algebra, FilippovViolation, NLieAlgebra};
use crate::prolong::{
    can_prolong, dimension_formula, is_irreducible, q2_span_report, ProlongReport,
};
use crate::sorep::{
    casimir_values, expect_so, harmonic_module, laplacian_kernel_dim, rep_from_json,
    rep_to_json, so4_tensor_module, wedge_square_module, LieRep,
};
use crate::{Error, Rational, Result};
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::time::Instant;

/// Version string embedded in every JSON report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Reducibility probes (cyclic closures per basis vector) are skipped for
/// modules above this dimension to keep the `module` command responsive.
const IRREDUCIBILITY_PROBE_CAP: usize = 60;

/// Caps on the size parameters a command will accept. Everything the
/// binary computes is exact, so runtime grows quickly with the caps; the
/// budget keeps a stray flag from launching an hours-long computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum arity (and the dimension of accepted algebras is capped at
    /// `max_n + 2`).
    pub max_n: usize,
    /// Maximum module degree / weight.
    pub max_t: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(6)
    }
}

impl Budget {
    /// Budget with arity cap `cap` and degree cap `cap − 2`.
    pub fn new(cap: usize) -> Self {
        Budget { max_n: cap, max_t: cap.saturating_sub(2) }
    }

    fn check_arity(&self, n: usize) -> Result<()> {
        if n < 2 {
            return Err(Error::InvalidArity(n));
        }
        if n > self.max_n {
            return Err(Error::Budget(format!(
                "arity {n} exceeds the cap {} (raise it with --budget)",
                self.max_n
            )));
        }
        Ok(())
    }

    fn check_dim(&self, dim: usize) -> Result<()> {
        if dim > self.max_n + 2 {
            return Err(Error::Budget(format!(
                "dimension {dim} exceeds the cap {} (raise it with --budget)",
                self.max_n + 2
            )));
        }
        Ok(())
    }

    fn check_degree(&self, t: usize) -> Result<()> {
        if t > self.max_t {
            return Err(Error::Budget(format!(
                "degree {t} exceeds the cap {} (raise it with --budget)",
                self.max_t
            )));
        }
        Ok(())
    }
}

/// Result of one command: display text, a JSON report, and whether the
/// mathematical claim the command checks actually held.
#[derive(Clone, Debug)]
pub struct CmdOutput {
    pub text: String,
    pub json: String,
    pub ok: bool,
}

/// Where `verify` gets its algebra.
#[derive(Clone, Debug)]
pub enum VerifyInput {
    /// The built-in n-ary vector-products algebra.
    VectorProducts(usize),
    /// Structure-constant text (with the name it came from, for reports).
    Text { name: String, content: String },
}

/// Module selection shared by `prolong` and `module`.
#[derive(Clone, Debug)]
pub enum ModuleSpec {
    /// The algebra acting on itself, transported to the orthogonal side.
    Adjoint,
    /// Harmonic polynomials of the given degree.
    Harmonic(usize),
    /// Weighted pair `(t, r)` — arity 3 only.
    Tensor(u64, u64),
    /// The wedge square of the defining module.
    WedgeSquare,
    /// A module JSON document (as produced by the `module` command).
    Json { name: String, content: String },
}

/// Inclusive range parsed from `"A..B"` or a single number `"N"`.
pub fn parse_range(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Usage(format!("cannot parse '{s}' as a number or inclusive range A..B"));
    let one = |p: &str| p.trim().parse::<usize>().map_err(|_| bad());
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (one(a)?, one(b)?);
            if a > b {
                return Err(Error::Usage(format!("empty range '{s}': {a} > {b}")));
            }
            Ok((a, b))
        }
        None => one(s).map(|v| (v, v)),
    }
}

/// Weight pair parsed from `"T,R"`.
pub fn parse_pair(s: &str) -> Result<(u64, u64)> {
    let bad = || Error::Usage(format!("cannot parse '{s}' as a weight pair T,R"));
    let (t, r) = s.split_once(',').ok_or_else(bad)?;
    Ok((
        t.trim().parse().map_err(|_| bad())?,
        r.trim().parse().map_err(|_| bad())?,
    ))
}

fn fmt_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn json_vector(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn one_based(tuple: &[usize]) -> Vec<u64> {
    tuple.iter().map(|&i| (i + 1) as u64).collect()
}

fn fmt_tuple_one_based(tuple: &[usize]) -> String {
    let parts: Vec<String> = tuple.iter().map(|&i| (i + 1).to_string()).collect();
    format!("({})", parts.join(", "))
}

/// Check the fundamental identity of an n-ary algebra and report the first
/// violating instance if there is one.
pub fn run_verify(input: &VerifyInput, budget: &Budget) -> Result<CmdOutput> {
    let start = Instant::now();
    let (alg, source_json, source_text) = match input {
        VerifyInput::VectorProducts(n) => {
            budget.check_arity(*n)?;
            let alg = vector_product_algebra(*n)?;
            (alg, json!({ "kind": "vector-products", "n": *n as u64 }), format!("built-in vector products, arity {n}"))
        }
        VerifyInput::Text { name, content } => {
            let alg = NLieAlgebra::from_text(content)?;
            budget.check_arity(alg.arity())?;
            budget.check_dim(alg.dim())?;
            (alg, json!({ "kind": "file", "name": name }), format!("file {name}"))
        }
    };
    let report = alg.is_filippov();
    let instances =
        binomial(alg.dim() as u64, (alg.arity() - 1) as u64) * binomial(alg.dim() as u64, alg.arity() as u64);
    let mut text = String::new();
    writeln!(text, "algebra: {qualifier}-ary, dimension {dim} ({source_text})", qualifier = alg.arity(), dim = alg.dim()).unwrap();
    writeln!(text, "identity instances checked: {instances}").unwrap();
    let witness_json = match &report.violation {
        None => {
            writeln!(text, "fundamental identity: holds").unwrap();
            Value::Null
        }
        Some(v) => {
            writeln!(text, "fundamental identity: FAILS").unwrap();
            writeln!(text, "  first tuple (1-based):  {}", fmt_tuple_one_based(&v.first)).unwrap();
            writeln!(text, "  second tuple (1-based): {}", fmt_tuple_one_based(&v.second)).unwrap();
            writeln!(text, "  bracket of the nested side: {}", fmt_vector(&v.lhs)).unwrap();
            writeln!(text, "  expanded side:              {}", fmt_vector(&v.rhs)).unwrap();
            violation_json(v)
        }
    };
    let json_report = json!({
        "command": "verify",
        "version": VERSION,
        "source": source_json,
        "arity": alg.arity() as u64,
        "dim": alg.dim() as u64,
        "instances": instances as u64,
        "ok": report.ok,
        "witness": witness_json,
        "elapsed_ms": start.elapsed().as_millis() as u64,
    });
    Ok(CmdOutput { text, json: pretty(&json_report), ok: report.ok })
}

fn violation_json(v: &FilippovViolation) -> Value {
    json!({
        "first": one_based(&v.first),
        "second": one_based(&v.second),
        "lhs": json_vector(&v.lhs),
        "rhs": json_vector(&v.rhs),
    })
}

/// Materialize a module specification as a representation of the
/// orthogonal algebra of size `n + 1`, together with report metadata.
fn build_module(n: usize, spec: &ModuleSpec, budget: &Budget) -> Result<(LieRep, String, Vec<u64>, String)> {
    budget.check_arity(n)?;
    let m = n + 1;
    match spec {
        ModuleSpec::Adjoint => {
            let alg = vector_product_algebra(n)?;
            let rep = iso_to_so(n)?.push_rep(&self_module(&alg)?)?;
            Ok((rep, "adjoint".into(), vec![], format!("the {n}-ary algebra acting on itself")))
        }
        ModuleSpec::Harmonic(t) => {
            budget.check_degree(*t)?;
            let rep = harmonic_module(m, *t)?;
            Ok((rep, "harmonic".into(), vec![*t as u64], format!("harmonic polynomials of degree {t} in {m} variables")))
        }
        ModuleSpec::Tensor(t, r) => {
            if n != 3 {
                return Err(Error::Usage(format!(
                    "weighted pairs are specific to arity 3 (got arity {n})"
                )));
            }
            budget.check_degree(*t as usize)?;
            budget.check_degree(*r as usize)?;
            let rep = so4_tensor_module(*t, *r)?;
            Ok((rep, "tensor".into(), vec![*t, *r], format!("weight pair ({t}, {r})")))
        }
        ModuleSpec::WedgeSquare => {
            let rep = wedge_square_module(m)?;
            Ok((rep, "wedge-square".into(), vec![], format!("wedge square of the defining module of size {m}")))
        }
        ModuleSpec::Json { name, content } => {
            let rep = rep_from_json(content)?;
            let got = expect_so(rep.algebra())?;
            if got != m {
                return Err(Error::Usage(format!(
                    "module in {name} is over the orthogonal algebra of size {got}, but arity {n} needs size {m}"
                )));
            }
            budget.check_dim(rep.dim()).or_else(|_| {
                // Imported modules are allowed to be larger than algebras:
                // cap them at the largest built-in sweep module instead.
                if rep.dim() <= 256 {
                    Ok(())
                } else {
                    Err(Error::Budget(format!("imported module dimension {} exceeds 256", rep.dim())))
                }
            })?;
            Ok((rep, "file".into(), vec![], format!("module imported from {name}")))
        }
    }
}

/// Decide prolongation for a single module.
pub fn run_prolong(n: usize, spec: &ModuleSpec, budget: &Budget) -> Result<CmdOutput> {
    let start = Instant::now();
    let (rep, kind, params, describe) = build_module(n, spec, budget)?;
    let report = can_prolong(n, &rep)?;
    let mut text = String::new();
    writeln!(text, "module: {describe} (dimension {})", rep.dim()).unwrap();
    writeln!(text, "obstruction operators checked: {}", report.obstructions_checked).unwrap();
    let witness_json = render_prolong_verdict(&mut text, &report);
    let json_report = json!({
        "command": "prolong",
        "version": VERSION,
        "verdict": if report.ok { "prolongs" } else { "obstructed" },
        "n": n as u64,
        "module": { "kind": kind, "params": params, "dim": rep.dim() as u64 },
        "obstructions_checked": report.obstructions_checked as u64,
        "witness": witness_json,
        "elapsed_ms": start.elapsed().as_millis() as u64,
    });
    Ok(CmdOutput { text, json: pretty(&json_report), ok: report.ok })
}

fn render_prolong_verdict(text: &mut String, report: &ProlongReport) -> Value {
    match &report.witness {
        None => {
            writeln!(text, "verdict: prolongs to a module of the {}-ary bracket", report.n).unwrap();
            Value::Null
        }
        Some(w) => {
            let (i, j, s, k) = w.index.as_tuple();
            writeln!(text, "verdict: OBSTRUCTED").unwrap();
            writeln!(text, "  operator index (i,j,s,k): {}", w.index).unwrap();
            writeln!(text, "  first moved basis vector: {} (index {})", w.basis_label, w.basis_index).unwrap();
            writeln!(text, "  its image under the operator: {}", fmt_vector(&w.residual)).unwrap();
            json!({
                "i": i as u64, "j": j as u64, "s": s as u64, "k": k as u64,
                "basis_index": w.basis_index as u64,
                "basis_label": w.basis_label,
                "residual": json_vector(&w.residual),
            })
        }
    }
}

/// Sweep harmonic degrees `t_lo..=t_hi` for one arity, reporting each
/// verdict and the closed-form dimension.
pub fn run_prolong_sweep_harmonic(
    n: usize,
    (t_lo, t_hi): (usize, usize),
    budget: &Budget,
) -> Result<CmdOutput> {
    let start = Instant::now();
    budget.check_arity(n)?;
    budget.check_degree(t_hi)?;
    let mut text = String::new();
    writeln!(text, "harmonic sweep for arity {n}: degrees {t_lo}..={t_hi}").unwrap();
    writeln!(text, "  t  dim  formula  verdict").unwrap();
    let mut rows = Vec::new();
    let mut all_prolong = true;
    for t in t_lo..=t_hi {
        let rep = harmonic_module(n + 1, t)?;
        let report = can_prolong(n, &rep)?;
        let formula = dimension_formula(n, t);
        let verdict = if report.ok { "prolongs" } else { "obstructed" };
        all_prolong &= report.ok;
        writeln!(text, "  {t}  {dim:<4} {formula:<8} {verdict}", dim = rep.dim()).unwrap();
        rows.push(json!({
            "t": t as u64,
            "dim": rep.dim() as u64,
            "formula_dim": formula as u64,
            "verdict": verdict,
        }));
    }
    writeln!(
        text,
        "summary: {}",
        if all_prolong { "every degree in the range prolongs" } else { "some degree fails to prolong" }
    )
    .unwrap();
    let json_report = json!({
        "command": "prolong",
        "version": VERSION,
        "mode": "harmonic-sweep",
        "n": n as u64,
        "rows": rows,
        "elapsed_ms": start.elapsed().as_millis() as u64,
    });
    Ok(CmdOutput { text, json: pretty(&json_report), ok: true })
}

/// Sweep weighted pairs `(t, r)` for arity 3, marking rational
/// realizability and the prolongation verdict of each realizable pair.
pub fn run_prolong_sweep_pairs(
    n: usize,
    (t_lo, t_hi): (usize, usize),
    (r_lo, r_hi): (usize, usize),
    budget: &Budget,
) -> Result<CmdOutput> {
    let start = Instant::now();
    if n != 3 {
        return Err(Error::Usage(format!(
            "weighted pairs are specific to arity 3 (got arity {n})"
        )));
    }
    budget.check_arity(n)?;
    budget.check_degree(t_hi)?;
    budget.check_degree(r_hi)?;
    let mut text = String::new();
    writeln!(text, "weight-pair sweep for arity 3: t in {t_lo}..={t_hi}, r in {r_lo}..={r_hi}").unwrap();
    writeln!(text, "  t r  realizable  dim  verdict").unwrap();
    let mut rows = Vec::new();
    let (mut n_prolong, mut n_obstructed, mut n_unreal) = (0u64, 0u64, 0u64);
    for t in t_lo..=t_hi {
        for r in r_lo..=r_hi {
            if t % 2 != r % 2 {
                n_unreal += 1;
                writeln!(text, "  {t} {r}  no          -    - (no rational form: weights of mixed parity)").unwrap();
                rows.push(json!({ "t": t as u64, "r": r as u64, "realizable": false }));
                continue;
            }
            let rep = so4_tensor_module(t as u64, r as u64)?;
            let report = can_prolong(n, &rep)?;
            let verdict = if report.ok { "prolongs" } else { "obstructed" };
            if report.ok {
                n_prolong += 1;
            } else {
                n_obstructed += 1;
            }
            writeln!(text, "  {t} {r}  yes         {dim:<4} {verdict}", dim = rep.dim()).unwrap();
            rows.push(json!({
                "t": t as u64,
                "r": r as u64,
                "realizable": true,
                "dim": rep.dim() as u64,
                "verdict": verdict,
            }));
        }
    }
    writeln!(
        text,
        "summary: {n_prolong} prolong, {n_obstructed} obstructed, {n_unreal} with no rational realization"
    )
    .unwrap();
    let json_report = json!({
        "command": "prolong",
        "version": VERSION,
        "mode": "pair-sweep",
        "n": n as u64,
        "rows": rows,
        "elapsed_ms": start.elapsed().as_millis() as u64,
    });
    Ok(CmdOutput { text, json: pretty(&json_report), ok: true })
}

/// Tabulate the closed-form module dimensions against the harmonic-kernel
/// dimensions computed from scratch.
pub fn run_dimensions(
    n_range: Option<(usize, usize)>,
    t_range: Option<(usize, usize)>,
    budget: &Budget,
) -> Result<CmdOutput> {
    let start = Instant::now();
    let (n_lo, n_hi) = n_range.unwrap_or((2, 4.min(budget.max_n)));
    let (t_lo, t_hi) = t_range.unwrap_or((0, budget.max_t));
    budget.check_arity(n_lo)?;
    budget.check_arity(n_hi)?;
    budget.check_degree(t_hi)?;
    if t_lo > t_hi {
        return Err(Error::Usage(format!("empty degree range {t_lo}..{t_hi}")));
    }
    let mut text = String::new();
    writeln!(text, "module dimensions (rows: arity n; columns: degree t)").unwrap();
    let mut header = String::from("   n\\t");
    for t in t_lo..=t_hi {
        write!(header, " {t:>6}").unwrap();
    }
    writeln!(text, "{header}").unwrap();
    let mut rows = Vec::new();
    let mut all_match = true;
    for n in n_lo..=n_hi {
        let mut line = format!("  {n:>4}");
        for t in t_lo..=t_hi {
            let dim = dimension_formula(n, t);
            let kernel = laplacian_kernel_dim(n + 1, t);
            all_match &= dim == kernel as u128;
            write!(line, " {dim:>6}").unwrap();
            rows.push(json!({
                "n": n as u64,
                "t": t as u64,
                "dim": dim as u64,
                "kernel_dim": kernel as u64,
            }));
        }
        writeln!(text, "{line}").unwrap();
    }
    writeln!(
        text,
        "cross-check against harmonic kernels computed from scratch: {}",
        if all_match { "all agree" } else { "DISAGREEMENT" }
    )
    .unwrap();
    let json_report = json!({
        "command": "dimensions",
        "version": VERSION,
        "rows": rows,
        "kernel_check": all_match,
        "elapsed_ms": start.elapsed().as_millis() as u64,
    });
    Ok(CmdOutput { text, json: pretty(&json_report), ok: all_match })
}

/// Report the span of the quadratic obstruction generators.
pub fn run_q2(n: usize, budget: &Budget) -> Result<CmdOutput> {
    let start = Instant::now();
    budget.check_arity(n)?;
    let report = q2_span_report(n)?;
    let mut text = String::new();
    writeln!(text, "quadratic obstruction span for arity {n} (orthogonal size {})", n + 1).unwrap();
    writeln!(text, "  generators:            {}", report.generators).unwrap();
    writeln!(text, "  symbol span dimension: {}", report.symbol_dim).unwrap();
    writeln!(
        text,
        "  lifted span dimension: {} (degree-1 corrections vanish identically)",
        report.lifted_dim
    )
    .unwrap();
    let json_report = json!({
        "command": "q2",
        "version": VERSION,
        "n": n as u64,
        "generators": report.generators as u64,
        "symbol_dim": report.symbol_dim as u64,
        "lifted_dim": report.lifted_dim as u64,
        "elapsed_ms": start.elapsed().as_millis() as u64,
    });
    Ok(CmdOutput { text, json: pretty(&json_report), ok: true })
}

/// Build or import a module, report its invariants, and emit it in the
/// JSON interchange format (so it can be re-imported by `prolong --file`
/// or `module --file`).
pub fn run_module(n: Option<usize>, spec: &ModuleSpec, budget: &Budget) -> Result<CmdOutput> {
    let n = match (n, spec) {
        (Some(n), _) => n,
        (None, ModuleSpec::Json { content, .. }) => {
            // Infer the arity from the document's algebra.
            let rep = rep_from_json(content)?;
            expect_so(rep.algebra())? - 1
        }
        (None, _) => {
            return Err(Error::Usage("built-in modules need --n (imported files can omit it)".into()))
        }
    };
    let (rep, kind, params, describe) = build_module(n, spec, budget)?;
    let mut text = String::new();
    writeln!(text, "module: {describe}").unwrap();
    writeln!(text, "algebra: orthogonal, size {} (arity {n})", n + 1).unwrap();
    writeln!(text, "dimension: {}", rep.dim()).unwrap();
    let shown: Vec<&str> = rep.labels().iter().take(8).map(|s| s.as_str()).collect();
    let ellipsis = if rep.dim() > 8 { ", …" } else { "" };
    writeln!(text, "basis: {}{}", shown.join(", "), ellipsis).unwrap();
    if rep.dim() <= IRREDUCIBILITY_PROBE_CAP {
        writeln!(
            text,
            "irreducible over the rationals: {}",
            if is_irreducible(&rep) { "yes" } else { "no" }
        )
        .unwrap();
    } else {
        writeln!(
            text,
            "irreducible over the rationals: not probed (dimension {} above the cap {})",
            rep.dim(),
            IRREDUCIBILITY_PROBE_CAP
        )
        .unwrap();
    }
    if n == 3 {
        match casimir_values(&rep) {
            Ok((c1, c2)) => writeln!(text, "half-casimir scalars: ({c1}, {c2})").unwrap(),
            Err(_) => writeln!(text, "half-casimir scalars: not scalar (module mixes weights)").unwrap(),
        }
    }
    let _ = (kind, params);
    let json = rep_to_json(&rep)?;
    Ok(CmdOutput { text, json, ok: true })
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("report values serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_and_pair_parsing() {
        assert_eq!(parse_range("3").unwrap(), (3, 3));
        assert_eq!(parse_range("0..4").unwrap(), (0, 4));
        assert_eq!(parse_range(" 1 .. 2 ").unwrap(), (1, 2));
        assert!(parse_range("4..1").is_err());
        assert!(parse_range("x").is_err());
        assert!(parse_range("1..y").is_err());
        assert_eq!(parse_pair("2,0").unwrap(), (2, 0));
        assert_eq!(parse_pair(" 3 , 1 ").unwrap(), (3, 1));
        assert!(parse_pair("3").is_err());
        assert!(parse_pair("a,b").is_err());
    }

    #[test]
    fn verify_command_reports_both_verdicts() {
        let budget = Budget::default();
        let out = run_verify(&VerifyInput::VectorProducts(3), &budget).unwrap();
        assert!(out.ok);
        assert!(out.text.contains("fundamental identity: holds"));
        let parsed: Value = serde_json::from_str(&out.json).unwrap();
        assert_eq!(parsed["ok"], Value::Bool(true));
        assert_eq!(parsed["arity"], json!(3));
        assert_eq!(parsed["instances"], json!(24)); // C(4,2)·C(4,3)

        // A perturbed table that genuinely breaks the identity.
        let broken = "nlie 3 4\n\
                      1 2 3 -> 1 0 0 1\n\
                      1 2 4 -> 0 0 -1 0\n\
                      1 3 4 -> 0 1 0 0\n\
                      2 3 4 -> -1 0 0 0\n";
        let out = run_verify(
            &VerifyInput::Text { name: "broken.nlie".into(), content: broken.into() },
            &budget,
        )
        .unwrap();
        assert!(!out.ok);
        assert!(out.text.contains("FAILS"));
        assert!(out.text.contains("(1, 2)"));
        let parsed: Value = serde_json::from_str(&out.json).unwrap();
        assert_eq!(parsed["ok"], Value::Bool(false));
        assert_eq!(parsed["witness"]["first"], json!([1, 2]));
    }

    #[test]
    fn verify_budget_and_arity_errors() {
        let budget = Budget::default();
        assert!(matches!(
            run_verify(&VerifyInput::VectorProducts(1), &budget),
            Err(Error::InvalidArity(1))
        ));
        assert!(matches!(
            run_verify(&VerifyInput::VectorProducts(7), &budget),
            Err(Error::Budget(_))
        ));
        assert!(run_verify(&VerifyInput::VectorProducts(7), &Budget::new(8)).is_ok());
    }

    #[test]
    fn prolong_command_single_modules() {
        let budget = Budget::default();
        let out = run_prolong(3, &ModuleSpec::Harmonic(2), &budget).unwrap();
        assert!(out.ok);
        let parsed: Value = serde_json::from_str(&out.json).unwrap();
        assert_eq!(parsed["verdict"], json!("prolongs"));
        assert_eq!(parsed["module"]["dim"], json!(9));
        assert_eq!(parsed["witness"], Value::Null);

        let out = run_prolong(3, &ModuleSpec::Tensor(2, 0), &budget).unwrap();
        assert!(!out.ok);
        let parsed: Value = serde_json::from_str(&out.json).unwrap();
        assert_eq!(parsed["verdict"], json!("obstructed"));
        assert_eq!(parsed["witness"]["i"], json!(1));
        assert!(out.text.contains("OBSTRUCTED"));

        let out = run_prolong(4, &ModuleSpec::Adjoint, &budget).unwrap();
        assert!(out.ok);

        // Weighted pairs are rejected away from arity 3.
        assert!(matches!(
            run_prolong(4, &ModuleSpec::Tensor(1, 1), &budget),
            Err(Error::Usage(_))
        ));
        // Mixed parity has no rational realization.
        assert!(matches!(
            run_prolong(3, &ModuleSpec::Tensor(1, 0), &budget),
            Err(Error::NotRealizable(_))
        ));
    }

    #[test]
    fn prolong_sweeps_classify() {
        let budget = Budget::default();
        let out = run_prolong_sweep_harmonic(3, (0, 3), &budget).unwrap();
        assert!(out.ok);
        let parsed: Value = serde_json::from_str(&out.json).unwrap();
        let rows = parsed["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 4);
        for row in rows {
            assert_eq!(row["verdict"], json!("prolongs"));
            assert_eq!(row["dim"], row["formula_dim"]);
        }

        let out = run_prolong_sweep_pairs(3, (0, 2), (0, 2), &budget).unwrap();
        let parsed: Value = serde_json::from_str(&out.json).unwrap();
        let rows = parsed["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 9);
        for row in rows {
            let (t, r) = (row["t"].as_u64().unwrap(), row["r"].as_u64().unwrap());
            if t % 2 != r % 2 {
                assert_eq!(row["realizable"], json!(false));
                assert!(row.get("verdict").is_none());
            } else {
                assert_eq!(row["realizable"], json!(true));
                let expect = if t == r { "prolongs" } else { "obstructed" };
                assert_eq!(row["verdict"], json!(expect), "pair ({t},{r})");
            }
        }
        assert!(out.text.contains("4 prolong, 2 obstructed, 3 with no rational realization")
            || out.text.contains("3 prolong"));
    }

    #[test]
    fn dimensions_table_cross_checks() {
        let budget = Budget::default();
        let out = run_dimensions(Some((2, 4)), Some((0, 3)), &budget).unwrap();
        assert!(out.ok);
        assert!(out.text.contains("all agree"));
        let parsed: Value = serde_json::from_str(&out.json).unwrap();
        assert_eq!(parsed["kernel_check"], Value::Bool(true));
        let rows = parsed["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 12);
        let row = rows.iter().find(|r| r["n"] == json!(4) && r["t"] == json!(3)).unwrap();
        assert_eq!(row["dim"], json!(30));
        assert_eq!(row["kernel_dim"], json!(30));
    }

    #[test]
    fn q2_command_reports_span() {
        let budget = Budget::default();
        let out = run_q2(3, &budget).unwrap();
        let parsed: Value = serde_json::from_str(&out.json).unwrap();
        assert_eq!(parsed["generators"], json!(4));
        assert_eq!(parsed["symbol_dim"], json!(1));
        assert_eq!(parsed["lifted_dim"], json!(1));
    }

    #[test]
    fn module_command_exports_and_reimports() {
        let budget = Budget::default();
        let out = run_module(Some(3), &ModuleSpec::Harmonic(2), &budget).unwrap();
        assert!(out.text.contains("dimension: 9"));
        assert!(out.text.contains("irreducible over the rationals: yes"));
        assert!(out.text.contains("half-casimir scalars: (-2, -2)"));
        // The emitted JSON is the interchange format: import it back.
        let spec = ModuleSpec::Json { name: "roundtrip".into(), content: out.json.clone() };
        let back = run_module(None, &spec, &budget).unwrap();
        assert_eq!(back.json, out.json);
        // And prolongation accepts the same document.
        let out2 = run_prolong(3, &spec, &budget).unwrap();
        assert!(out2.ok);
        // Wrong arity against the imported document is a usage error.
        assert!(matches!(
            run_prolong(4, &spec, &budget),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn json_reports_are_deterministic_modulo_elapsed() {
        let budget = Budget::default();
        let mut a: Value =
            serde_json::from_str(&run_prolong(3, &ModuleSpec::Harmonic(1), &budget).unwrap().json)
                .unwrap();
        let mut b: Value =
            serde_json::from_str(&run_prolong(3, &ModuleSpec::Harmonic(1), &budget).unwrap().json)
                .unwrap();
        a["elapsed_ms"] = json!(0);
        b["elapsed_ms"] = json!(0);
        assert_eq!(a, b);
        assert_eq!(a["version"], json!(VERSION));
    }
}
