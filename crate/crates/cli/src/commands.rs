use std::time::Instant;

use oddzeta::forensics::forensics;
use oddzeta::line_one::{
    eta_zero_scan, uniform_norm_probe, zeta_line_one, zeta_line_one_flat, zeta_line_one_integral,
    LineOnePoint, NormLemma,
};
use oddzeta::odd::{
    f_ratio, odd_error_table, zeta_known_ref, zeta_odd_closed_traced, zeta_odd_literature,
    zeta_odd_literature_traced, FMode, LiteratureVariant,
};
use oddzeta::zeta::{
    euler_product, zeta_dirichlet, zeta_eta_real, zeta_even_closed, zeta_even_recurrence,
};
use oddzeta::{Exec, Real, ZetaError};

use crate::report::{Cell, Report};
use crate::{
    CliError, Command, CompareArgs, EvalArgs, EvalMethod, ForensicsArgs, FscanArgs, FscanMode,
    Line1Args, Line1Method, OddTableArgs, ProbeArgs, RunConfig, ZerosArgs,
};

pub(crate) fn dispatch(command: &Command, cfg: &RunConfig) -> Result<Report, CliError> {
    match command {
        Command::Eval(a) => eval(a, cfg),
        Command::OddTable(a) => odd_table(a, cfg),
        Command::Fscan(a) => fscan(a, cfg),
        Command::Line1(a) => line1(a, cfg),
        Command::Zeros(a) => zeros(a, cfg),
        Command::Probe(a) => probe(a, cfg),
        Command::Forensics(a) => forensics_report(a, cfg),
        Command::Compare(a) => compare(a, cfg),
    }
}

fn method_id(m: EvalMethod) -> &'static str {
    match m {
        EvalMethod::Dirichlet => "dirichlet",
        EvalMethod::Eta => "eta",
        EvalMethod::Euler => "euler",
        EvalMethod::EvenClosed => "even-closed",
        EvalMethod::EvenRecurrence => "even-recurrence",
        EvalMethod::OddApprox => "odd-approx",
        EvalMethod::Ref3 => "ref3",
        EvalMethod::Ref5 => "ref5",
        EvalMethod::Ref7 => "ref7",
        EvalMethod::Eq23 => "eq23",
        EvalMethod::Eq24 => "eq24",
        EvalMethod::Eq25 => "eq25",
        EvalMethod::Eq26 => "eq26",
    }
}

fn require_s(a: &EvalArgs, cfg: &RunConfig) -> Result<Real, CliError> {
    match &a.s {
        Some(s) => Ok(cfg.real(s)?),
        None => Err(CliError::Usage(format!(
            "--method {} needs --s",
            method_id(a.method)
        ))),
    }
}

fn integer_arg(s: &Real) -> Result<i64, CliError> {
    s.to_i64_exact().ok_or_else(|| {
        ZetaError::Domain(format!(
            "method needs an integer argument (got {})",
            s.to_sci(10)
        ))
        .into()
    })
}

/// Index `n` of an odd argument `2n + 1 ≥ 3`.
fn odd_index(s: &Real) -> Result<u32, CliError> {
    let n = integer_arg(s)?;
    if n < 3 || n % 2 == 0 {
        return Err(
            ZetaError::Domain(format!("method needs an odd integer >= 3 (got {n})")).into(),
        );
    }
    Ok(((n - 1) / 2) as u32)
}

fn eval(a: &EvalArgs, cfg: &RunConfig) -> Result<Report, CliError> {
    let mut report = Report::new(
        "eval",
        &["method", "s", "b", "re", "im", "terms", "est_error"],
    );
    let b = match &a.b {
        Some(b) => cfg.real(b)?,
        None => Real::zero(cfg.digits),
    };
    let id = Cell::text(method_id(a.method));

    if !b.is_zero() {
        if a.method != EvalMethod::Eta {
            return Err(ZetaError::Domain(
                "complex arguments are only evaluated by --method eta on Re(s) = 1".into(),
            )
            .into());
        }
        let s = match &a.s {
            Some(s) => cfg.real(s)?,
            None => Real::one(cfg.digits),
        };
        if !(&s - 1.0).is_zero() {
            return Err(ZetaError::Domain(format!(
                "complex arguments need Re(s) = 1 (got {})",
                s.to_sci(10)
            ))
            .into());
        }
        let p = zeta_line_one(&b, &cfg.tol)?;
        report.push(vec![
            id,
            Cell::from(s),
            Cell::from(b),
            Cell::from(&p.value.re),
            Cell::from(&p.value.im),
            Cell::Int(p.terms_used as i64),
            Cell::from(p.est_error),
        ]);
        return Ok(report);
    }

    let zero = Real::zero(cfg.digits);
    let (s, value, terms, est) = match a.method {
        EvalMethod::Dirichlet | EvalMethod::Eta => {
            let s = require_s(a, cfg)?;
            let r = if a.method == EvalMethod::Dirichlet {
                zeta_dirichlet(&s, &cfg.tol)?
            } else {
                zeta_eta_real(&s, &cfg.tol)?
            };
            let v = r.real_value().clone();
            (
                Cell::from(s),
                v,
                Cell::Int(r.terms_used as i64),
                Cell::from(r.trunc_estimate),
            )
        }
        EvalMethod::Euler => {
            let s = require_s(a, cfg)?;
            let v = euler_product(&s, cfg.prime_bound_cap)?;
            (Cell::from(s), v, Cell::Missing, Cell::Missing)
        }
        EvalMethod::EvenClosed | EvalMethod::EvenRecurrence => {
            let s = require_s(a, cfg)?;
            let n = integer_arg(&s)?;
            let v = if a.method == EvalMethod::EvenClosed {
                zeta_even_closed(n, cfg.digits)?
            } else {
                zeta_even_recurrence(n, cfg.digits)?
            };
            (Cell::from(s), v, Cell::Missing, Cell::Missing)
        }
        EvalMethod::OddApprox => {
            let s = require_s(a, cfg)?;
            let n = odd_index(&s)?;
            let (v, nodes) = zeta_odd_closed_traced(n, &cfg.real(&a.f)?)?;
            (
                Cell::from(s),
                v,
                Cell::Int(nodes.len() as i64),
                Cell::Missing,
            )
        }
        EvalMethod::Ref3 | EvalMethod::Ref5 | EvalMethod::Ref7 => {
            let target = match a.method {
                EvalMethod::Ref3 => 3,
                EvalMethod::Ref5 => 5,
                _ => 7,
            };
            if let Some(s) = &a.s {
                if integer_arg(&cfg.real(s)?)? != i64::from(target) {
                    return Err(CliError::Usage(format!(
                        "--method {} evaluates zeta({target}) only",
                        method_id(a.method)
                    )));
                }
            }
            let v = zeta_known_ref(target, &cfg.tol)?;
            (
                Cell::from(Real::from_u64(u64::from(target), cfg.digits)),
                v,
                Cell::Missing,
                Cell::Missing,
            )
        }
        EvalMethod::Eq23 | EvalMethod::Eq24 | EvalMethod::Eq25 | EvalMethod::Eq26 => {
            let s = require_s(a, cfg)?;
            let n = odd_index(&s)?;
            let variant = LiteratureVariant::from_id(method_id(a.method))
                .expect("literature ids match method ids");
            let v = zeta_odd_literature(n, variant, &cfg.tol)?;
            (Cell::from(s), v, Cell::Missing, Cell::Missing)
        }
    };
    report.push(vec![
        id,
        s,
        Cell::from(b),
        Cell::from(value),
        Cell::from(zero),
        terms,
        est,
    ]);
    Ok(report)
}

fn odd_table(a: &OddTableArgs, cfg: &RunConfig) -> Result<Report, CliError> {
    let f = cfg.real(&a.f)?;
    let rows = odd_error_table(a.max, &f, &cfg.tol)?;
    let mut report = Report::new(
        "odd-table",
        &["argument", "formula", "reference", "difference"],
    );
    for r in rows {
        report.push(vec![
            Cell::Int(i64::from(r.argument)),
            Cell::from(r.formula_value),
            Cell::from(r.reference_value),
            Cell::from(r.abs_diff),
        ]);
    }
    Ok(report)
}

fn fscan(a: &FscanArgs, cfg: &RunConfig) -> Result<Report, CliError> {
    if a.s_min < 1 || a.s_min > a.s_max {
        return Err(CliError::Usage(format!(
            "need 1 <= --s-min <= --s-max (got {}..{})",
            a.s_min, a.s_max
        )));
    }
    let (mode, mode_id) = match a.mode {
        FscanMode::Closed => (FMode::Closed, "closed"),
        FscanMode::Direct => (FMode::Direct, "direct"),
    };
    let s_values: Vec<u32> = (a.s_min..=a.s_max).collect();
    let samples = Exec::default().try_map(&s_values, |&s| f_ratio(s, mode, &cfg.tol))?;
    let mut report = Report::new(
        "fscan",
        &["s", "mode", "f", "f_minus_2", "zeta_even", "zeta_odd"],
    );
    for sample in samples {
        let f = sample
            .f(mode)
            .cloned()
            .ok_or_else(|| ZetaError::Domain(format!("no f value in {mode_id} mode")))?;
        let gap = &f - 2.0;
        report.push(vec![
            Cell::Int(i64::from(sample.s)),
            Cell::text(mode_id),
            Cell::from(f),
            Cell::from(gap),
            Cell::from(sample.zeta_even),
            Cell::from(sample.zeta_odd),
        ]);
    }
    Ok(report)
}

fn line_row(p: LineOnePoint) -> Vec<Cell> {
    vec![
        Cell::from(&p.b),
        Cell::text(p.method.id()),
        Cell::from(&p.value.re),
        Cell::from(&p.value.im),
        Cell::from(p.value.norm()),
        Cell::Int(p.terms_used as i64),
        Cell::from(p.est_error),
    ]
}

fn line1(a: &Line1Args, cfg: &RunConfig) -> Result<Report, CliError> {
    let b = cfg.real(&a.b)?;
    let p = match a.method {
        Line1Method::Eta => zeta_line_one(&b, &cfg.tol)?,
        Line1Method::Flat => zeta_line_one_flat(&b, a.order)?,
        Line1Method::Integral => zeta_line_one_integral(&b, &cfg.tol)?,
    };
    let mut report = Report::new(
        "line1",
        &["b", "method", "re", "im", "abs", "terms", "est_error"],
    );
    report.push(line_row(p));
    Ok(report)
}

/// `"3"` or an inclusive range `"1..3"`; negative bounds are allowed.
fn parse_k_range(text: &str) -> Result<Vec<i64>, CliError> {
    let bad = || {
        CliError::Usage(format!(
            "--k expects an integer or a range a..b (got {text:?})"
        ))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (
            lo.trim().parse::<i64>().map_err(|_| bad())?,
            hi.trim().parse::<i64>().map_err(|_| bad())?,
        ),
        None => {
            let k = text.trim().parse::<i64>().map_err(|_| bad())?;
            (k, k)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}

fn zeros(a: &ZerosArgs, cfg: &RunConfig) -> Result<Report, CliError> {
    let ks = parse_k_range(&a.k)?;
    let rows = Exec::default().try_map(&ks, |&k| eta_zero_scan(k, &cfg.tol))?;
    let mut report = Report::new("zeros", &["k", "b_k", "eta_abs", "zeta_abs"]);
    for z in rows {
        report.push(vec![
            Cell::Int(z.k),
            Cell::from(z.b),
            Cell::from(z.eta_abs),
            Cell::from(z.zeta_abs),
        ]);
    }
    Ok(report)
}

fn probe(a: &ProbeArgs, cfg: &RunConfig) -> Result<Report, CliError> {
    let lemma = NormLemma::from_id(&a.lemma).ok_or_else(|| {
        CliError::Usage(format!("--lemma must be 1, 2i or 2ii (got {:?})", a.lemma))
    })?;
    let p = uniform_norm_probe(lemma, a.n, a.k, &cfg.real(&a.b)?, a.grid)?;
    let holds = p.holds();
    let mut report = Report::new("probe", &["lemma", "n", "k", "grid_sup", "bound", "holds"]);
    report.push(vec![
        Cell::text(p.lemma.id()),
        Cell::Int(i64::from(p.n)),
        Cell::Int(i64::from(p.k)),
        Cell::from(p.grid_sup),
        Cell::from(p.bound),
        Cell::Bool(holds),
    ]);
    Ok(report)
}

fn forensics_report(a: &ForensicsArgs, cfg: &RunConfig) -> Result<Report, CliError> {
    let ids: Vec<&str> = a
        .ids
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    if ids.is_empty() {
        return Err(CliError::Usage(
            "--ids needs at least one formula id".into(),
        ));
    }
    let reports = forensics(&ids, &cfg.tol)?;
    let mut report = Report::new(
        "forensics",
        &[
            "formula_id",
            "verdict",
            "deviation",
            "oracle_re",
            "oracle_im",
            "formula_re",
            "formula_im",
            "corrected_residual",
            "note",
        ],
    );
    for r in reports {
        report.push(vec![
            Cell::text(r.formula_id),
            Cell::text(r.verdict.id()),
            Cell::from(r.deviation),
            Cell::from(&r.oracle_value.re),
            Cell::from(&r.oracle_value.im),
            Cell::from(&r.formula_value.re),
            Cell::from(&r.formula_value.im),
            r.corrected_residual.map_or(Cell::Missing, Cell::from),
            Cell::text(r.note),
        ]);
    }
    Ok(report)
}

fn compare(a: &CompareArgs, cfg: &RunConfig) -> Result<Report, CliError> {
    if a.n_max < 1 {
        return Err(CliError::Usage("--n-max must be at least 1".into()));
    }
    let mut columns = vec![
        "argument",
        "method",
        "value",
        "abs_error",
        "zeta_inputs",
        "odd_zeta_inputs",
    ];
    if a.timing {
        columns.push("micros");
    }
    let mut report = Report::new("compare", &columns);
    let two = Real::from_u64(2, cfg.digits);
    for n in 1..=a.n_max {
        let arg = 2 * n + 1;
        let reference = zeta_dirichlet(&Real::from_u64(u64::from(arg), cfg.digits), &cfg.tol)?
            .real_value()
            .clone();
        let start = Instant::now();
        let closed = zeta_odd_closed_traced(n, &two)?;
        let mut runs = vec![("odd-approx", closed, start.elapsed())];
        for variant in LiteratureVariant::ALL {
            let start = Instant::now();
            let traced = zeta_odd_literature_traced(n, variant, &cfg.tol)?;
            runs.push((variant.id(), traced, start.elapsed()));
        }
        for (id, (value, nodes), elapsed) in runs {
            let err = (&value - &reference).abs();
            let mut row = vec![
                Cell::Int(i64::from(arg)),
                Cell::text(id),
                Cell::from(value),
                Cell::from(err),
                Cell::Int(nodes.len() as i64),
                Cell::Int(nodes.iter().filter(|z| z.is_odd()).count() as i64),
            ];
            if a.timing {
                row.push(Cell::Int(elapsed.as_micros() as i64));
            }
            report.push(row);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_ranges() {
        assert_eq!(parse_k_range("1..3").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_k_range("-2..-1").unwrap(), vec![-2, -1]);
        assert_eq!(parse_k_range("4").unwrap(), vec![4]);
        assert!(parse_k_range("3..1").is_err());
        assert!(parse_k_range("x").is_err());
    }
}
