//! Subcommand bodies. Each returns the text to emit and an exit code, or a
//! [`CliError`] carrying the refusal.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write as _};
use std::path::PathBuf;

use serde_json::{json, Value};
use serrewt_core::oracle::{lemma_sweeps, Mutation, SweepConfig, SweepReport, SWEEP_NAMES};
use serrewt_core::{DLPresentation, Error, RootDatum, SerrePresentation, SerreWeight, TameParam};

use crate::{parse, DatumArgs, EliminateArgs, Format, ParamArgs, VerifyArgs};

pub const EXIT_OK: u8 = 0;
pub const EXIT_REFUSED: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;
pub const EXIT_FAILED: u8 = 4;

/// What a successful (or completed but failing) command prints.
pub struct Output {
    pub stdout: String,
    /// Written before anything is printed.
    pub file: Option<(PathBuf, String)>,
    pub code: u8,
}

impl Output {
    fn document(text: String, path: Option<&PathBuf>) -> Self {
        match path {
            Some(p) => Output {
                stdout: String::new(),
                file: Some((p.clone(), text)),
                code: EXIT_OK,
            },
            None => Output {
                stdout: text,
                file: None,
                code: EXIT_OK,
            },
        }
    }

    pub fn emit(&self) -> io::Result<()> {
        if let Some((path, text)) = &self.file {
            fs::write(path, text)?;
        }
        let mut out = io::stdout().lock();
        out.write_all(self.stdout.as_bytes())?;
        out.flush()
    }
}

/// A refusal, printed to stderr as JSON.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub kind: &'static str,
    pub message: String,
    pub details: Value,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_REFUSED,
            kind: "usage",
            message: message.into(),
            details: Value::Null,
        }
    }

    fn with(mut self, details: Value) -> Self {
        self.details = details;
        self
    }

    pub fn to_json(&self) -> String {
        let mut obj = json!({
            "error": self.kind,
            "exit_code": self.code,
            "message": self.message,
        });
        if let (Value::Object(o), Value::Object(d)) = (&mut obj, &self.details) {
            o.extend(d.clone());
        }
        obj.to_string()
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::InvalidDatum(_) => (EXIT_REFUSED, "invalid-datum"),
            Error::Shape { .. }
            | Error::NotAPermutation(_)
            | Error::RootOutOfRange { .. }
            | Error::Parse(_) => (EXIT_REFUSED, "schema"),
            Error::InvalidPresentation(_) => (EXIT_REFUSED, "invalid-weight"),
            Error::Depth { .. } => (EXIT_REFUSED, "depth"),
            Error::Precondition(_) => (EXIT_REFUSED, "precondition"),
            Error::NotEliminable => (EXIT_REFUSED, "not-eliminable"),
            Error::Inconclusive(_) => (EXIT_BUDGET, "inconclusive"),
            Error::Budget { .. } => (EXIT_BUDGET, "budget"),
            Error::Certificate(_) => (EXIT_FAILED, "certificate"),
        };
        let details = match &e {
            Error::Depth {
                what,
                required,
                actual,
            } => {
                json!({ "what": what, "required": required, "actual": actual })
            }
            _ => Value::Null,
        };
        CliError {
            code,
            kind,
            message: e.to_string(),
            details,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn datum(a: &DatumArgs) -> Result<RootDatum> {
    Ok(RootDatum::new(a.n, a.f, a.p)?)
}

fn datum_json(d: &RootDatum) -> Value {
    json!({ "n": d.n(), "f": d.f(), "p": d.p() })
}

fn param(d: &RootDatum, a: &ParamArgs) -> Result<TameParam> {
    let s = parse::permutation(&a.s, d.n(), d.f())?;
    let mu = parse::weight(&a.mu, d.n(), d.f())?;
    Ok(TameParam::from_parts(s, mu)?)
}

fn param_json(t: &TameParam) -> Value {
    json!({ "s": t.s(), "mu": t.mu() })
}

/// Genericity of the parameter against the depth a command needs; refuses
/// when no presentation is deep enough.
fn genericity(d: &RootDatum, t: &TameParam, required: i64) -> Result<Value> {
    let g = t.genericity(d)?;
    let pres = d.tame_presentation(t, required)?;
    Ok(json!({
        "genericity": g,
        "required": required,
        "presentation": pres,
    }))
}

/// Presentations grouped by the weight they name, in weight order.
fn by_weight(
    d: &RootDatum,
    pres: Vec<SerrePresentation>,
) -> Result<BTreeMap<SerreWeight, Vec<SerrePresentation>>> {
    let mut out: BTreeMap<SerreWeight, Vec<SerrePresentation>> = BTreeMap::new();
    for x in pres {
        out.entry(d.serre_weight(&x)?).or_default().push(x);
    }
    for v in out.values_mut() {
        v.sort();
        v.dedup();
    }
    Ok(out)
}

fn refuse_dot(a: &ParamArgs, what: &str) -> Result<()> {
    if a.format == Format::Dot {
        return Err(CliError::usage(format!(
            "--format dot is only available for graph; {what} is a set, not a graph"
        )));
    }
    Ok(())
}

pub fn wset(a: &ParamArgs) -> Result<Output> {
    refuse_dot(a, "wset")?;
    let d = datum(&a.datum)?;
    let t = param(&d, a)?;
    let gen = genericity(&d, &t, d.h_eta())?;
    let groups = by_weight(&d, d.wset_presentations(&t)?)?;
    let obv = d.wobv(&t)?;
    let weights: Vec<Value> = groups
        .iter()
        .map(|(sigma, pres)| {
            json!({
                "lambda": sigma.lambda(),
                "obvious": obv.binary_search(sigma).is_ok(),
                "presentations": pres,
            })
        })
        .collect();
    let doc = json!({
        "command": "wset",
        "datum": datum_json(&d),
        "tau": param_json(&t),
        "genericity": gen,
        "wset": weights,
        "wobv": obv.iter().map(SerreWeight::lambda).collect::<Vec<_>>(),
        "counts": { "wset": groups.len(), "wobv": obv.len() },
    });
    Ok(Output::document(pretty(&doc), a.output.as_ref()))
}

pub fn jh(a: &ParamArgs) -> Result<Output> {
    refuse_dot(a, "jh")?;
    let d = datum(&a.datum)?;
    let s = parse::permutation(&a.s, d.n(), d.f())?;
    let mu = parse::weight(&a.mu, d.n(), d.f())?;
    let r = DLPresentation::from_parts(s, mu)?;
    let g = d.dl_genericity(&r)?;
    let deep = d.deep_presentation(&r, d.h_eta(), "Deligne-Lusztig presentation")?;
    let groups = by_weight(&d, d.jh_presentations(&r)?)?;
    let outer = d.jh_outer(&r)?;
    let factors: Vec<Value> = groups
        .iter()
        .map(|(sigma, pres)| {
            json!({
                "lambda": sigma.lambda(),
                "outer": outer.iter().any(|(_, o)| o == sigma),
                "presentations": pres,
            })
        })
        .collect();
    let doc = json!({
        "command": "jh",
        "datum": datum_json(&d),
        "R": { "s": r.s(), "mu": r.mu() },
        "genericity": { "genericity": g, "required": d.h_eta(), "presentation": deep },
        "jh": factors,
        "outer": outer
            .iter()
            .map(|(w, o)| json!({ "w": w, "lambda": o.lambda() }))
            .collect::<Vec<_>>(),
        "counts": { "jh": groups.len() },
    });
    Ok(Output::document(pretty(&doc), a.output.as_ref()))
}

pub fn graph(a: &ParamArgs) -> Result<Output> {
    let d = datum(&a.datum)?;
    let t = param(&d, a)?;
    let gen = genericity(&d, &t, 2 * d.h_eta())?;
    let g = d.connectivity_graph(&t)?;
    let text = match a.format {
        Format::Dot => g.to_dot(),
        Format::Json => {
            let mut doc = json!({
                "command": "graph",
                "datum": datum_json(&d),
                "tau": param_json(&t),
                "genericity": gen,
            });
            if let (Value::Object(o), Value::Object(body)) = (&mut doc, g.to_json()) {
                o.extend(body);
            }
            pretty(&doc)
        }
    };
    Ok(Output::document(text, a.output.as_ref()))
}

pub fn eliminate(a: &EliminateArgs) -> Result<Output> {
    let p = &a.params;
    refuse_dot(p, "a certificate")?;
    let d = datum(&p.datum)?;
    let t = param(&d, p)?;
    let lambda = parse::highest_weight(&a.sigma, d.n(), d.f())?;
    let sigma = SerreWeight::new(&d, &lambda)?;
    let gen = genericity(&d, &t, d.h_eta())?;

    let members: Vec<SerrePresentation> = by_weight(&d, d.wset_presentations(&t)?)?
        .remove(&sigma)
        .unwrap_or_default();
    if !members.is_empty() {
        return Err(CliError::from(Error::NotEliminable).with(json!({
            "sigma": sigma.lambda(),
            "witness": {
                "tau": gen["presentation"],
                "presentations": members,
            },
        })));
    }

    let cert = d.eliminate(&sigma, &t)?;
    cert.validate(&d)?;
    let doc = json!({
        "command": "eliminate",
        "datum": datum_json(&d),
        "tau": param_json(&t),
        "sigma": sigma.lambda(),
        "certificate": cert,
        "revalidated": true,
    });
    Ok(Output::document(pretty(&doc), p.output.as_ref()))
}

fn sweep_config(a: &VerifyArgs) -> Result<SweepConfig> {
    let mut cfg = SweepConfig::desk(a.n, a.f, a.p);
    if let Some(r) = a.radius {
        cfg.radius = r;
    }
    if let Some(l) = a.order_length {
        cfg.order_length = l;
    }
    if let Some(s) = a.samples {
        cfg.samples = s;
    }
    if let Some(m) = &a.mutate {
        cfg.mutation = Some(m.parse::<Mutation>()?);
    }
    if !a.sweep.is_empty() {
        for name in &a.sweep {
            if !SWEEP_NAMES.contains(&name.as_str()) {
                return Err(CliError::usage(format!(
                    "unknown sweep {name:?}; known sweeps: {}",
                    SWEEP_NAMES.join(", ")
                )));
            }
        }
        cfg.only = Some(a.sweep.clone());
    }
    Ok(cfg)
}

fn summary(report: &SweepReport) -> String {
    let mut s = String::new();
    for r in &report.sweeps {
        s.push_str(&format!(
            "{:<32} checked {:>7}  failed {:>5}  errors {:>5}  {}\n",
            r.name,
            r.checked,
            r.failed,
            r.errors,
            if r.ok() { "pass" } else { "FAIL" }
        ));
    }
    let bad = report.sweeps.iter().filter(|r| !r.ok()).count();
    if bad == 0 {
        s.push_str(&format!("all {} sweeps passed\n", report.sweeps.len()));
    } else {
        s.push_str(&format!(
            "{bad} of {} sweeps failed, {} counterexamples\n",
            report.sweeps.len(),
            report.counterexamples()
        ));
    }
    s
}

pub fn verify(a: &VerifyArgs) -> Result<Output> {
    let run = sweep_config(a).and_then(|cfg| {
        RootDatum::new(cfg.n, cfg.f, cfg.p)?;
        Ok(lemma_sweeps(&cfg)?)
    });
    match run {
        Ok(report) => {
            let text = pretty(&serde_json::to_value(&report).expect("reports serialize"));
            let stdout = if a.json {
                text.clone()
            } else {
                summary(&report)
            };
            Ok(Output {
                stdout,
                file: Some((a.output.clone(), text)),
                code: if report.all_passed {
                    EXIT_OK
                } else {
                    EXIT_FAILED
                },
            })
        }
        Err(err) => {
            // The report file records the refusal too.
            let body: Value = serde_json::from_str(&err.to_json()).expect("error json");
            fs::write(&a.output, pretty(&body))
                .map_err(|e| CliError::usage(format!("cannot write report: {e}")))?;
            Err(err)
        }
    }
}
