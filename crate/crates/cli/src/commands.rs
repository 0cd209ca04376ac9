use crate::{Cli, Command, OrderArg, Pattern};
use mixedrep::forms::{self, CoefficientOrder, EliminationConfig, MixedForm, ParseError, TermKind};
use mixedrep::series::{self, Identity};
use mixedrep::verify::{
    Bounds, CheckName, ReportBuilder, Status, Toolkit, VerificationReport, Witness,
};
use mixedrep::Error;
use serde_json::json;
use std::io::{self, Write};

enum Failure {
    Usage(String),
    Internal(String),
    Io(io::Error),
}

/// Largest scan bound or series order accepted; keeps allocations in memory.
const MAX_SIZE: u64 = 1_000_000_000;

fn check_size(what: &str, v: u64) -> Result<(), Failure> {
    if v > MAX_SIZE {
        return Err(Failure::Usage(format!(
            "{what} {v} exceeds the supported maximum {MAX_SIZE}"
        )));
    }
    Ok(())
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Overflow(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn parse_form(text: &str) -> Result<MixedForm, Failure> {
    text.parse().map_err(|e: ParseError| {
        Failure::Usage(format!(
            "cannot parse form\n  {text}\n  {}^\n  {e}",
            " ".repeat(e.position)
        ))
    })
}

struct Output<'a> {
    cli: &'a Cli,
    out: io::StdoutLock<'static>,
}

impl Output<'_> {
    fn progress(&self, msg: &str) {
        if !self.cli.quiet {
            eprintln!("{msg}");
        }
    }

    /// Prints a report as JSON, or `human` when not in JSON mode.
    fn report(&mut self, report: &VerificationReport, human: &str) -> io::Result<()> {
        if self.cli.json {
            writeln!(self.out, "{}", report.to_json_line())
        } else {
            writeln!(self.out, "{human}")
        }
    }
}

pub fn run(cli: &Cli) -> u8 {
    let mut out = Output {
        cli,
        out: io::stdout().lock(),
    };
    match dispatch(cli, &mut out) {
        Ok(all_passed) => u8::from(!all_passed),
        // output piped into e.g. `head`
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            3
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            3
        }
    }
}

/// `Ok(false)` when a verification check failed.
fn dispatch(cli: &Cli, out: &mut Output) -> Result<bool, Failure> {
    match &cli.command {
        Command::Count {
            form,
            n,
            split_slot,
        } => {
            let form = parse_form(form)?;
            let mut b = ReportBuilder::start("count");
            b.param("form", form.to_string()).param("n", *n);
            let human = match split_slot {
                Some(slot) => {
                    let pc = forms::parity_split_count(&form, *slot, *n)?;
                    b.param("slot", *slot as u64)
                        .param("total", pc.total)
                        .param("even", pc.even)
                        .param("odd", pc.odd);
                    format!("total {}, even {}, odd {}", pc.total, pc.even, pc.odd)
                }
                None => {
                    let total = forms::count_representations(&form, *n)?;
                    b.param("total", total);
                    format!("total {total}")
                }
            };
            out.report(
                &b.finish(Status::Pass, "exact count by exhaustive enumeration"),
                &human,
            )?;
            Ok(true)
        }
        Command::Scan { form, bound, csv } => {
            let form = parse_form(form)?;
            check_size("bound", *bound)?;
            out.progress(&format!("scanning {form} up to {bound}"));
            let rep = forms::representable_upto(&form, *bound);
            if *csv {
                writeln!(out.out, "n,representable")?;
                for (n, r) in rep.iter().enumerate() {
                    writeln!(out.out, "{n},{r}")?;
                }
                return Ok(true);
            }
            let misses: Vec<u64> = rep
                .iter()
                .enumerate()
                .filter(|(_, &r)| !r)
                .map(|(n, _)| n as u64)
                .collect();
            let mut b = ReportBuilder::start("scan");
            b.param("form", form.to_string()).param("bound", *bound);
            b.witnesses(misses.iter().map(|&n| Witness::Value(n)));
            let report = b.finish(
                Status::BoundedPass,
                format!("listed values are missed (exhaustive); everything else up to {bound} is represented"),
            );
            let human = if misses.is_empty() {
                format!("{form}: no exceptions up to {bound}")
            } else {
                format!("{form}: exceptions up to {bound}: {misses:?}")
            };
            out.report(&report, &human)?;
            Ok(true)
        }
        Command::Equiv {
            form1,
            form2,
            bound,
        } => {
            let (f, g) = (parse_form(form1)?, parse_form(form2)?);
            check_size("bound", *bound)?;
            let mismatch = forms::value_sets_equal_up_to(&f, &g, *bound);
            let mut b = ReportBuilder::start("equiv");
            b.param("form1", f.to_string())
                .param("form2", g.to_string())
                .param("bound", *bound);
            let human = match mismatch {
                None => format!("equal up to {bound}"),
                Some(n) => {
                    b.witness(Witness::Value(n));
                    format!(
                        "first mismatch at {n} ({f}: {}, {g}: {})",
                        yes_no(forms::is_representable(&f, n)),
                        yes_no(forms::is_representable(&g, n))
                    )
                }
            };
            out.report(
                &b.finish(
                    Status::BoundedPass,
                    format!("value sets compared for n ≤ {bound}"),
                ),
                &human,
            )?;
            Ok(true)
        }
        Command::Eliminate {
            pattern,
            coefficient_box,
            rep_bound,
            order,
        } => {
            use TermKind::{Square as S, Triangular as T};
            check_size("rep-bound", *rep_bound)?;
            let (kinds, default_order) = match pattern {
                Pattern::Sst => ([S, S, T], CoefficientOrder::FirstAtMostSecond),
                Pattern::Stt => ([S, T, T], CoefficientOrder::SecondAtLeastThird),
                Pattern::Ttt => ([T, T, T], CoefficientOrder::NonDecreasing),
            };
            let order = match order {
                None => default_order,
                Some(OrderArg::None) => CoefficientOrder::Unconstrained,
                Some(OrderArg::FirstAtMostSecond) => CoefficientOrder::FirstAtMostSecond,
                Some(OrderArg::SecondAtLeastThird) => CoefficientOrder::SecondAtLeastThird,
                Some(OrderArg::NonDecreasing) => CoefficientOrder::NonDecreasing,
            };
            let config = EliminationConfig {
                pattern: kinds,
                coefficient_box: *coefficient_box,
                order,
                rep_bound: *rep_bound,
            };
            out.progress(&format!(
                "eliminating {} candidates",
                config.candidates().len()
            ));
            let result = forms::eliminate(&config)?;
            let mut b = ReportBuilder::start("eliminate");
            b.param("pattern", format!("{pattern:?}").to_lowercase())
                .param("box", coefficient_box.to_vec())
                .param("order", order.label())
                .param("rep_bound", *rep_bound)
                .param("survivors", json!(result.survivors))
                .param(
                    "eliminated",
                    json!(result
                        .witnesses
                        .iter()
                        .map(|(v, w)| [v[0], v[1], v[2], *w])
                        .collect::<Vec<_>>()),
                );
            let mut human = format!(
                "survivors ({}, each represents every n ≤ {rep_bound}; not proven universal):\n",
                result.survivors.len()
            );
            for v in &result.survivors {
                let f = MixedForm::from_pattern(kinds, *v)?;
                human.push_str(&format!("  {v:?}  {f}\n"));
            }
            human.push_str(&format!("eliminated ({}):", result.witnesses.len()));
            for (v, w) in &result.witnesses {
                human.push_str(&format!("\n  {v:?} misses {w}"));
            }
            let report = b.finish(
                Status::BoundedPass,
                format!(
                    "eliminations are exact; survivors are candidates checked up to {rep_bound}"
                ),
            );
            out.report(&report, &human)?;
            Ok(true)
        }
        Command::Series { identity, order } => {
            let id: Identity = identity.parse().map_err(|_| {
                let names: Vec<&str> = Identity::ALL.iter().map(|i| i.name()).collect();
                Failure::Usage(format!(
                    "unknown identity '{identity}'; expected one of {}",
                    names.join(", ")
                ))
            })?;
            check_size("order", *order as u64)?;
            out.progress(&format!("expanding {id} to order {order}"));
            let mut b = ReportBuilder::start("series");
            b.param("identity", id.name())
                .param("statement", id.statement())
                .param("order", *order as u64);
            let (lhs, rhs) = id.sides(&series::phi(*order), &series::psi(*order))?;
            if let Some(k) = lhs.first_mismatch(&rhs) {
                b.witness(Witness::labeled(id.name(), k as u64));
            }
            let report = b.finish(
                Status::BoundedPass,
                format!("coefficients of q^0..q^{order} compared exactly"),
            );
            let human = report.to_string();
            out.report(&report, &human)?;
            Ok(report.passed())
        }
        Command::Verify { check, .. } => verify(cli, out, check),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "represented"
    } else {
        "not represented"
    }
}

fn verify(cli: &Cli, out: &mut Output, check: &str) -> Result<bool, Failure> {
    let Command::Verify {
        bound,
        series_order,
        hurwitz_odd,
        theorem1i_bound,
        theorem1ii_bound,
        theorem1iii_m,
        rep_bound,
        essential_bound,
        conjecture1_bound,
        conjecture23_bound,
        dickson_bound,
        ..
    } = &cli.command
    else {
        unreachable!("verify called for another command")
    };
    let checks: Vec<CheckName> = if check == "all" {
        if bound.is_some() {
            return Err(Failure::Usage(
                "--bound needs a single check; use the per-check flags with `all`".into(),
            ));
        }
        CheckName::ALL.to_vec()
    } else {
        let names: Vec<&str> = CheckName::ALL.iter().map(|c| c.name()).collect();
        vec![check.parse().map_err(|_| {
            Failure::Usage(format!(
                "unknown check '{check}'; expected all, witness_registry, or one of {}",
                names.join(", ")
            ))
        })?]
    };

    let mut b = Bounds::default();
    let set = |slot: &mut u64, v: &Option<u64>| {
        if let Some(v) = v {
            *slot = *v;
        }
    };
    if let Some(v) = series_order {
        b.series_order = *v;
    }
    set(&mut b.hurwitz_odd, hurwitz_odd);
    set(&mut b.theorem1i, theorem1i_bound);
    set(&mut b.theorem1ii, theorem1ii_bound);
    set(&mut b.theorem1iii_m, theorem1iii_m);
    set(&mut b.rep_bound, rep_bound);
    set(&mut b.essential, essential_bound);
    set(&mut b.conjecture1, conjecture1_bound);
    set(&mut b.conjecture23, conjecture23_bound);
    set(&mut b.dickson, dickson_bound);
    if let (Some(v), [only]) = (bound, checks.as_slice()) {
        match only {
            CheckName::Identities => b.series_order = *v as usize,
            CheckName::Hurwitz => b.hurwitz_odd = *v,
            CheckName::Theorem1i => b.theorem1i = *v,
            CheckName::Theorem1ii => b.theorem1ii = *v,
            CheckName::Theorem1iii => b.theorem1iii_m = *v,
            CheckName::Classifications => b.rep_bound = *v,
            CheckName::EssentialForms => b.essential = *v,
            CheckName::Conjectures => {
                b.conjecture1 = *v;
                b.conjecture23 = *v;
            }
            CheckName::DicksonChain => b.dickson = *v,
            CheckName::WitnessRegistry => {}
        }
    }

    let toolkit = Toolkit::standard();
    let mut all_passed = true;
    for c in checks {
        out.progress(&format!("running {c} ..."));
        let report = toolkit.run(c, &b).map_err(|e| match e {
            Error::Overflow(_) => Failure::Internal(format!("{c}: {e}")),
            other => Failure::Usage(format!("{c}: {other}")),
        })?;
        all_passed &= report.passed();
        let human = report.to_string();
        out.report(&report, &human)?;
        out.out.flush()?;
    }
    Ok(all_passed)
}
