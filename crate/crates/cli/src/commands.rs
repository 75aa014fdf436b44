use std::fmt::Write as _;

use lz_core::expansion::{expand_lz, expand_weight, latex_line, reduce_even};
use lz_core::numerics::{verify_expansion, Method};
use lz_core::partitions::{enumerate_partitions, Parity, PartitionFilter};
use lz_core::solver::{express_at_weight, survey, Expressibility, Mode};
use lz_core::{Error, ZetaCombination, ZetaMonomial};
use serde_json::{json, Value};

use crate::{Command, MethodArg, ModeArg, ParityArg};

pub const MAX_DIGITS: u32 = 60;
pub const MAX_SURVEY_WEIGHT: u32 = 40;

/// A finished command in every output format, plus its exit code.
pub struct Rendered {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub text: String,
    pub latex: String,
    pub exit: u8,
}

pub struct Failure {
    pub message: String,
    pub exit: u8,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { message: message.into(), exit: 1 }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let exit = match e {
            Error::InvalidArgument(_) | Error::Parse { .. } => 1,
            Error::PrecisionUnreachable { .. } | Error::NonConvergence { .. } | Error::CertificateRejected(_) => 3,
        };
        Failure { message: e.to_string(), exit }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable result")
}

fn check_pair(a: u32, b: u32, cap: u32) -> Result<(), Failure> {
    if a == 0 || b == 0 {
        return Err(Failure::usage(format!("Lz(a,b) needs a, b ≥ 1, got ({a},{b})")));
    }
    check_weight(a + b, cap)
}

fn check_weight(n: u32, cap: u32) -> Result<(), Failure> {
    if n > cap {
        return Err(Failure::usage(format!(
            "weight {n} exceeds the cap {cap}; raise it with --max-weight or ZL_MAX_WEIGHT"
        )));
    }
    Ok(())
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Optimistic => Mode::Optimistic,
            ModeArg::Strict => Mode::Strict,
        }
    }
}

pub fn run(cmd: &Command, cap: u32) -> Result<Rendered, Failure> {
    match *cmd {
        Command::Expand { a, b, reduce } => expand(a, b, reduce, cap),
        Command::Table { n, reduce } => table(n, reduce, cap),
        Command::Verify { a, b, digits, method } => verify(a, b, digits, method, cap),
        Command::Express { ref monomial, mode, weight } => express(monomial, mode.into(), weight, cap),
        Command::Survey { from, to, mode } => survey_cmd(from, to, mode.into()),
        Command::Partitions { n, min_part, parts, parity } => partitions(n, min_part, parts, parity),
    }
}

/// `(text, latex, json)` for one expansion.
fn render(e: &ZetaCombination, reduce: bool) -> (String, String, Value) {
    if reduce {
        let r = reduce_even(e);
        (r.to_string(), r.latex(), to_json(&r))
    } else {
        (e.to_string(), e.latex(), to_json(e))
    }
}

fn expand(a: u32, b: u32, reduce: bool, cap: u32) -> Result<Rendered, Failure> {
    check_pair(a, b, cap)?;
    let (text, latex, value) = render(&expand_lz(a, b), reduce);
    Ok(Rendered {
        command: "expand",
        inputs: json!({ "a": a, "b": b, "reduce": reduce }),
        result: json!({ "a": a, "b": b, "expansion": value }),
        latex: latex_line(a, b, &latex),
        text,
        exit: 0,
    })
}

fn table(n: u32, reduce: bool, cap: u32) -> Result<Rendered, Failure> {
    if n < 2 {
        return Err(Failure::usage(format!("table needs N ≥ 2, got {n}")));
    }
    check_weight(n, cap)?;
    let (mut text, mut latex, mut rows) = (String::new(), String::new(), Vec::new());
    for ((a, b), e) in expand_weight(n).into_iter().rev() {
        let (t, l, v) = render(&e, reduce);
        writeln!(text, "Lz({a},{b}) = {t}").unwrap();
        writeln!(latex, "{}", latex_line(a, b, &l)).unwrap();
        rows.push(json!({ "a": a, "b": b, "expansion": v }));
    }
    Ok(Rendered {
        command: "table",
        inputs: json!({ "n": n, "reduce": reduce }),
        result: json!({ "weight": n, "rows": rows }),
        text,
        latex,
        exit: 0,
    })
}

fn verify(a: u32, b: u32, digits: u32, method: MethodArg, cap: u32) -> Result<Rendered, Failure> {
    check_pair(a, b, cap)?;
    if !(6..=MAX_DIGITS).contains(&digits) {
        return Err(Failure::usage(format!("--digits must lie in 6..={MAX_DIGITS}, got {digits}")));
    }
    let method = match method {
        MethodArg::Series => Method::Series,
        MethodArg::Quadrature => Method::Quadrature,
        MethodArg::Both => Method::Both,
    };
    let r = verify_expansion(a, b, digits, method)?;
    let verdict = if r.passed { "pass" } else { "FAIL" };
    let mut text = format!("Lz({a},{b}) = {}\n  symbolic    {}\n", r.expansion, r.symbolic);
    if let Some(s) = &r.series {
        writeln!(text, "  series      {s}").unwrap();
    }
    if let Some(q) = &r.quadrature {
        writeln!(text, "  quadrature  {q}").unwrap();
    }
    writeln!(text, "  deviation   {} (threshold {}): {verdict}", r.max_deviation, r.threshold).unwrap();
    let latex = format!("{}\\approx {}", latex_line(a, b, &r.expansion.latex()), r.symbolic);
    Ok(Rendered {
        command: "verify",
        inputs: json!({ "a": a, "b": b, "digits": digits, "method": method }),
        result: to_json(&r),
        text,
        latex,
        exit: if r.passed { 0 } else { 3 },
    })
}

fn express(monomial: &str, mode: Mode, weight: Option<u32>, cap: u32) -> Result<Rendered, Failure> {
    let target: ZetaMonomial = monomial.parse()?;
    let weight = weight.unwrap_or(target.weight());
    check_weight(weight, cap)?;
    let outcome = express_at_weight(&target, weight, mode)?;
    let (text, latex, exit) = match &outcome {
        Expressibility::Expressed { certificate } => {
            let mut text = certificate.to_string();
            let lcd = certificate.lcd_form();
            if lcd != text {
                write!(text, "\n{lcd}").unwrap();
            }
            (text, certificate.latex(), 0)
        }
        Expressibility::NotExpressible => {
            let msg = format!("{target} is not expressible at weight {weight} ({mode} mode)");
            (msg.clone(), format!("% {msg}"), 2)
        }
        Expressibility::UnresolvedDependency { missing } => {
            let list: Vec<String> = missing.iter().map(|m| m.to_string()).collect();
            let msg = format!(
                "{target} at weight {weight} needs lower-weight monomials that are themselves unresolved: {}",
                list.join(", ")
            );
            (msg.clone(), format!("% {msg}"), 2)
        }
    };
    Ok(Rendered {
        command: "express",
        inputs: json!({ "monomial": target, "mode": mode, "weight": weight }),
        result: to_json(&outcome),
        text,
        latex,
        exit,
    })
}

fn survey_cmd(from: u32, to: u32, mode: Mode) -> Result<Rendered, Failure> {
    if !(3 <= from && from <= to && to <= MAX_SURVEY_WEIGHT) {
        return Err(Failure::usage(format!(
            "survey needs 3 ≤ --from ≤ --to ≤ {MAX_SURVEY_WEIGHT}, got {from}..{to}"
        )));
    }
    let report = survey(from, to, mode)?;
    let names = |v: &[ZetaMonomial]| v.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" ");
    let mut text = format!("{:>3} {:>9} {:>8} {:>5}  {:>15}  inexpressible\n", "N", "equations", "unknowns", "rank", "counting");
    let mut latex = String::from("\\begin{tabular}{rrrrl}\n$N$ & equations & unknowns & rank & inexpressible \\\\\n\\hline\n");
    for r in &report.records {
        let counting = format!("{} vs {}", r.counting.equations, r.counting.unknowns);
        let line = format!(
            "{:>3} {:>9} {:>8} {:>5}  {counting:>15}  {}",
            r.weight,
            r.equations,
            r.unknowns,
            r.rank,
            names(&r.inexpressible)
        );
        writeln!(text, "{}", line.trim_end()).unwrap();
        let inexpr: Vec<String> = r.inexpressible.iter().map(|m| format!("${}$", m.latex())).collect();
        writeln!(
            latex,
            "{} & {} & {} & {} & {} \\\\",
            r.weight,
            r.equations,
            r.unknowns,
            r.rank,
            inexpr.join(", ")
        )
        .unwrap();
    }
    latex.push_str("\\end{tabular}\n");
    for d in &report.divergences {
        writeln!(text, "note: {d}").unwrap();
    }
    Ok(Rendered {
        command: "survey",
        inputs: json!({ "from": from, "to": to, "mode": mode }),
        result: to_json(&report),
        text,
        latex,
        exit: 0,
    })
}

fn partitions(n: u32, min_part: u32, parts: Option<u32>, parity: ParityArg) -> Result<Rendered, Failure> {
    if n == 0 || min_part == 0 {
        return Err(Failure::usage("partitions needs N ≥ 1 and --min-part ≥ 1"));
    }
    let parity = match parity {
        ParityArg::Any => Parity::Any,
        ParityArg::Odd => Parity::Odd,
        ParityArg::Even => Parity::Even,
    };
    let mut filter = PartitionFilter::new(min_part).with_parity(parity);
    if let Some(t) = parts {
        filter = filter.with_parts(t);
    }
    let list = enumerate_partitions(n, &filter);
    let mut text = String::new();
    let mut latex = String::new();
    for x in &list {
        writeln!(text, "{x}").unwrap();
        let inner: Vec<String> = x.parts_descending().iter().map(u32::to_string).collect();
        writeln!(latex, "\\{{{}\\}}", inner.join(",")).unwrap();
    }
    writeln!(text, "count: {}", list.len()).unwrap();
    Ok(Rendered {
        command: "partitions",
        inputs: json!({ "n": n, "min_part": min_part, "parts": parts, "parity": parity }),
        result: json!({ "count": list.len(), "partitions": list }),
        text,
        latex,
        exit: 0,
    })
}
