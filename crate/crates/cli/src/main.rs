use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use conicstab::combinat::{
    classify_psd_binomial, classify_stable_binomial, det_support_analysis, is_jump_system,
    non_mixed_analysis, step_search, structure_check, DetBlockSpec, SearchOutcome, StepKind,
    SupportSet,
};
use conicstab::corpus::{audit_sweep, lieb_sokal_triples, run_cases};
use conicstab::preservers::{apply, audit, PreserverSpec};
use conicstab::report::ResultDocument;
use conicstab::stabcheck::check_stability;
use conicstab::symmat::diag_restriction;
use conicstab::text::{
    format_monomial, format_polynomial, parse_cone, parse_det_term, parse_polynomial,
    parse_transform,
};
use conicstab::{ConeSpec, FalsifierConfig, Polynomial, Space};
use serde_json::json;

#[derive(Parser)]
#[command(name = "conicstab", version, about = "Test and transform conically stable polynomials")]
struct Cli {
    /// Falsifier seed.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Falsifier trials.
    #[arg(long, global = true, default_value_t = 200)]
    trials: usize,
    /// Relative residual bound for witnesses.
    #[arg(long, global = true)]
    tol_root: Option<f64>,
    /// Interior margin for witnesses.
    #[arg(long, global = true)]
    tol_interior: Option<f64>,
    /// Variable space, `vector:N` or `sym:N`.
    #[arg(long, global = true)]
    space: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    out: Format,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out_file: Option<String>,
    /// Record wall-clock time in the result (breaks byte-identical output).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Search for a root with imaginary part in the relative interior of a cone.
    Check {
        polynomial: String,
        /// `orthant`, `psd` or `poly:[v1;v2;...]`.
        #[arg(long, default_value = "orthant")]
        cone: String,
    },
    /// Apply a preserver, optionally auditing it with the falsifier.
    Transform {
        polynomial: String,
        /// Transform such as `psd_minor([1,2])` or `specialize(1, (0+1i))`.
        #[arg(long = "apply")]
        transform: String,
        #[arg(long, default_value = "orthant")]
        cone: String,
        #[arg(long)]
        audit: bool,
    },
    /// Support analysis: jump system, binomial forms, structure checks.
    Support { polynomial: String },
    /// Step search from a support monomial to a diagonal monomial.
    Conjecture {
        polynomial: String,
        /// Start monomial, e.g. `z12*z13^2`.
        #[arg(long)]
        monomial: String,
        /// Comma-separated step kinds; default all.
        #[arg(long, value_delimiter = ',')]
        kinds: Vec<Kind>,
    },
    /// Support analysis of a polynomial in block principal minors.
    Detpoly {
        /// Block sizes, e.g. `2,1`.
        #[arg(long, value_delimiter = ',', required = true)]
        blocks: Vec<usize>,
        /// Term `e1,e2,...=coefficient`; repeatable.
        #[arg(long = "term", required = true)]
        terms: Vec<String>,
    },
    /// Run the regression cases and the preserver audit sweep.
    Corpus {
        /// Sweep rounds over the stable members.
        #[arg(long, default_value_t = 3)]
        rounds: usize,
        /// Lieb-Sokal triples to audit.
        #[arg(long, default_value_t = 30)]
        triples: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Linear,
    Double,
    Transposition,
}

impl From<Kind> for StepKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Linear => StepKind::Linear,
            Kind::Double => StepKind::Double,
            Kind::Transposition => StepKind::Transposition,
        }
    }
}

struct Output {
    doc: ResultDocument,
    text: Vec<String>,
    audit_failed: bool,
}

impl Output {
    fn new(doc: ResultDocument, text: Vec<String>) -> Self {
        Output {
            doc,
            text,
            audit_failed: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let start = Instant::now();
    let mut out = match run(&cli) {
        Ok(o) => o,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    if cli.timing {
        out.doc.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    let rendered = match cli.out {
        Format::Json => out.doc.to_json() + "\n",
        Format::Text => {
            let mut s = out.text.join("\n") + "\n";
            if let Some(ms) = out.doc.timing_ms {
                s.push_str(&format!("time: {ms:.1} ms\n"));
            }
            s
        }
    };
    match &cli.out_file {
        Some(path) => {
            if let Err(e) = fs::write(path, rendered) {
                eprintln!("error: cannot write {path}: {e}");
                return ExitCode::from(1);
            }
        }
        None => print!("{rendered}"),
    }
    if out.audit_failed {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}

fn config(cli: &Cli) -> FalsifierConfig {
    let mut cfg = FalsifierConfig::with_trials(cli.trials, cli.seed);
    if let Some(t) = cli.tol_root {
        cfg.root_tol = t;
    }
    if let Some(t) = cli.tol_interior {
        cfg.interior_margin = t;
    }
    cfg
}

fn space(cli: &Cli) -> Result<Space, String> {
    let s = cli.space.as_deref().ok_or("--space is required for this command")?;
    s.parse().map_err(|e| format!("--space: {e}"))
}

fn poly(src: &str, space: &Space) -> Result<Polynomial, String> {
    parse_polynomial(src, space).map_err(|e| format!("polynomial: {e}"))
}

fn cone(src: &str, space: &Space) -> Result<ConeSpec, String> {
    parse_cone(src, space).map_err(|e| format!("cone: {e}"))
}

fn document(cli: &Cli, command: &str, with_falsifier: bool) -> ResultDocument {
    let mut doc = ResultDocument::new(command);
    if with_falsifier {
        doc.seed = Some(cli.seed);
        doc.trials = Some(cli.trials);
    }
    if let Some(s) = &cli.space {
        doc = doc.input("space", s);
    }
    doc
}

fn run(cli: &Cli) -> Result<Output, String> {
    let cfg = config(cli);
    match &cli.command {
        Command::Check { polynomial, cone: c } => {
            let sp = space(cli)?;
            let f = poly(polynomial, &sp)?;
            let k = cone(c, &sp)?;
            let v = check_stability(&f, &k, &cfg).map_err(|e| e.to_string())?;
            let mut text = vec![
                format!("f = {}", format_polynomial(&f, &sp)),
                format!("cone: {}", c.trim()),
                v.to_string(),
            ];
            if let Some(w) = &v.witness {
                text.push(format!("witness: {}", format_point(&w.point)));
            }
            let doc = document(cli, "check", true)
                .input("polynomial", format_polynomial(&f, &sp))
                .input("cone", c.trim())
                .with_result(&v);
            Ok(Output::new(doc, text))
        }
        Command::Transform {
            polynomial,
            transform,
            cone: c,
            audit: do_audit,
        } => {
            let sp = space(cli)?;
            let f = poly(polynomial, &sp)?;
            let spec = parse_transform(transform, &sp).map_err(|e| format!("transform: {e}"))?;
            let doc = document(cli, "transform", *do_audit)
                .input("polynomial", format_polynomial(&f, &sp))
                .input("transform", transform.trim());
            if *do_audit {
                let k = cone(c, &sp)?;
                let r = audit(&spec, &sp, &f, &k, &cfg).map_err(|e| e.to_string())?;
                let mut doc = doc.input("cone", c.trim());
                if let Some(tag) = &r.guarantee.tag {
                    doc.tag(tag);
                }
                let mut text = vec![
                    format!("input: {}", r.input),
                    format!("input verdict: {}", r.input_verdict),
                    format!("output ({}): {}", r.output_space, r.output),
                    match &r.output_verdict {
                        Some(v) => format!("output verdict: {v}"),
                        None => "output verdict: zero polynomial".to_string(),
                    },
                    format!(
                        "guarantee: {} ({})",
                        if r.guarantee.applies { "applies" } else { "does not apply" },
                        r.guarantee.reason
                    ),
                    format!("agreement: {}", r.agreement),
                ];
                text.extend(r.notes.iter().map(|n| format!("note: {n}")));
                let failed = !r.agreement;
                let mut out = Output::new(doc.with_result(&r), text);
                out.audit_failed = failed;
                Ok(out)
            } else {
                let t = apply(&spec, &sp, &f).map_err(|e| e.to_string())?;
                let g = format_polynomial(&t.polynomial, &t.space);
                let text = vec![format!("output ({}): {g}", t.space)];
                let doc = doc.with_result(json!({
                    "space": t.space.to_string(),
                    "polynomial": g,
                    "condition": t.condition,
                }));
                Ok(Output::new(doc, text))
            }
        }
        Command::Support { polynomial } => {
            let sp = space(cli)?;
            let f = poly(polynomial, &sp)?;
            support(cli, &sp, &f)
        }
        Command::Conjecture {
            polynomial,
            monomial,
            kinds,
        } => {
            let sp = space(cli)?;
            let s = *sp.as_sym().ok_or("conjecture needs a sym:N space")?;
            let f = poly(polynomial, &sp)?;
            let m = poly(monomial, &sp)?;
            let beta = match m.terms().collect::<Vec<_>>().as_slice() {
                [(e, _)] => (*e).clone(),
                _ => return Err("--monomial must be a single monomial".to_string()),
            };
            let kinds: Vec<StepKind> = if kinds.is_empty() {
                StepKind::ALL.to_vec()
            } else {
                kinds.iter().map(|&k| k.into()).collect()
            };
            let outcome = step_search(&s, &f, &beta, &kinds).map_err(|e| e.to_string())?;
            let mut text = vec![format!("start: {}", format_monomial(&beta, &sp))];
            match &outcome {
                SearchOutcome::Path(p) => {
                    text.push(format!(
                        "target: {} (distance {})",
                        format_monomial(&p.target, &sp),
                        p.start_distance
                    ));
                    for st in &p.steps {
                        text.push(format!(
                            "{:?} step to {} (distance {})",
                            st.kind,
                            format_monomial(&st.to, &sp),
                            st.distance
                        ));
                    }
                    text.push(format!("steps: {}", p.steps.len()));
                }
                SearchOutcome::Exhausted { explored } => {
                    text.push(format!("no path found ({explored} monomials explored)"));
                }
            }
            let doc = document(cli, "conjecture", false)
                .input("polynomial", format_polynomial(&f, &sp))
                .input("monomial", format_monomial(&beta, &sp))
                .input("kinds", &kinds)
                .with_result(&outcome);
            Ok(Output::new(doc, text))
        }
        Command::Detpoly { blocks, terms } => {
            let parsed = terms
                .iter()
                .map(|t| parse_det_term(t, blocks.len()).map_err(|e| format!("term '{t}': {e}")))
                .collect::<Result<Vec<_>, _>>()?;
            let spec = DetBlockSpec::new(blocks.clone(), parsed).map_err(|e| e.to_string())?;
            let r = det_support_analysis(&spec).map_err(|e| e.to_string())?;
            let text = vec![
                format!("gamma: {:?}", r.gamma),
                format!("supp_det: {:?}", r.supp_det),
                format!("jump system: {}", r.jump_system.holds()),
                format!("block sizes ok: {}", r.block_size_ok),
                format!("interval property: {}", r.interval_property),
                format!(
                    "verdict: {}",
                    if r.not_psd_stable() {
                        "not psd-stable"
                    } else {
                        "consistent with psd-stability"
                    }
                ),
            ];
            let doc = document(cli, "detpoly", false)
                .input("blocks", blocks)
                .input("terms", terms)
                .with_result(&r);
            Ok(Output::new(doc, text))
        }
        Command::Corpus { rounds, triples } => corpus(cli, &cfg, *rounds, *triples),
    }
}

fn format_point(z: &[num_complex::Complex64]) -> String {
    let parts: Vec<String> = z.iter().map(|c| format!("{:.6e}{:+.6e}i", c.re, c.im)).collect();
    format!("[{}]", parts.join(", "))
}

fn support(cli: &Cli, sp: &Space, f: &Polynomial) -> Result<Output, String> {
    let set = SupportSet::of_polynomial(f);
    let jump = is_jump_system(&set);
    let mut text = vec![
        format!("f = {}", format_polynomial(f, sp)),
        format!("support size: {}", set.len()),
        format!("flat support is a jump system: {}", jump.holds()),
    ];
    if let Some(w) = jump.witness() {
        text.push(format!(
            "two-steps failure: alpha {:?}, beta {:?}, sigma {:?}",
            w.alpha, w.beta, w.sigma
        ));
    }
    let mut result = json!({
        "support": set.iter().collect::<Vec<_>>(),
        "jump_system": jump,
    });
    let terms: Vec<_> = f.terms().collect();
    match sp {
        Space::Vector(_) => {
            if let [(a, ca), (b, cb)] = terms.as_slice() {
                let form = classify_stable_binomial(a, b, **ca, **cb).map_err(|e| e.to_string())?;
                text.push(format!(
                    "binomial form: {form:?} ({})",
                    if form.is_consistent() { "consistent with stability" } else { "not stable" }
                ));
                result["stable_binomial"] = json!(form);
            }
        }
        Space::Sym(s) => {
            if terms.len() == 2 {
                let c = classify_psd_binomial(s, f).map_err(|e| e.to_string())?;
                text.push(format!(
                    "psd binomial: {:?} ({})",
                    c.form,
                    if c.is_consistent() { "consistent with psd-stability" } else { "not psd-stable" }
                ));
                result["psd_binomial"] = json!(c);
            }
            let d = diag_restriction(s, f).map_err(|e| e.to_string())?;
            let diag_jump = is_jump_system(&SupportSet::of_polynomial(&d));
            text.push(format!("diagonal restriction support is a jump system: {}", diag_jump.holds()));
            result["diagonal_jump_system"] = json!(diag_jump);
            let st = structure_check(s, f).map_err(|e| e.to_string())?;
            text.push(format!(
                "structure check: {}",
                if st.is_ok() {
                    "ok".to_string()
                } else {
                    let v: Vec<String> = st
                        .violations
                        .iter()
                        .map(|(i, j)| format!("z{}{}", i + 1, j + 1))
                        .collect();
                    format!("fails at {}", v.join(", "))
                }
            ));
            let nm = non_mixed_analysis(s, f).map_err(|e| e.to_string())?;
            text.push(format!("non-mixed analysis: {}", nm.verdict()));
            result["structure"] = json!(st);
            result["non_mixed"] = json!(nm);
        }
    }
    let doc = document(cli, "support", false)
        .input("polynomial", format_polynomial(f, sp))
        .with_result(result);
    Ok(Output::new(doc, text))
}

fn corpus(cli: &Cli, cfg: &FalsifierConfig, rounds: usize, triples: usize) -> Result<Output, String> {
    let cases = run_cases(cfg);
    let sweep = audit_sweep(cfg, rounds);
    let mut text: Vec<String> = cases
        .iter()
        .map(|c| format!("{} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.key, c.detail))
        .collect();
    let mut ls_violations = Vec::new();
    let mut ls_clean = 0;
    for (k, t) in lieb_sokal_triples(cfg.seed, triples).into_iter().enumerate() {
        let spec = PreserverSpec::LiebSokal { g: t.g, v: t.v };
        match audit(&spec, &t.space, &t.f, &t.cone, cfg) {
            Ok(r) => {
                ls_clean += usize::from(r.output_verdict.as_ref().is_none_or(|v| v.is_clean()));
                if !r.agreement {
                    ls_violations.push(k);
                }
            }
            Err(e) => return Err(format!("lieb-sokal triple {k}: {e}")),
        }
    }
    text.push(format!(
        "audit sweep: {} applications, {} guaranteed, {} violations, {} errors",
        sweep.applications,
        sweep.guaranteed,
        sweep.violations.len(),
        sweep.errors.len()
    ));
    for v in &sweep.violations {
        text.push(format!("violation: {} on {}", v.transform, v.member));
    }
    for e in &sweep.errors {
        text.push(format!("error: {e}"));
    }
    text.push(format!(
        "lieb-sokal: {triples} triples, {ls_clean} clean outputs, {} violations",
        ls_violations.len()
    ));
    let failed = cases.iter().any(|c| !c.passed) || !sweep.passed() || !ls_violations.is_empty();
    let mut doc = document(cli, "corpus", true)
        .input("rounds", rounds)
        .input("triples", triples);
    for t in &sweep.tags {
        doc.tag(t);
    }
    doc.tag("conic-lieb-sokal");
    let doc = doc.with_result(json!({
        "cases": cases,
        "sweep": sweep,
        "lieb_sokal": {
            "triples": triples,
            "clean_outputs": ls_clean,
            "violations": ls_violations,
        },
    }));
    let mut out = Output::new(doc, text);
    out.audit_failed = failed;
    Ok(out)
}
