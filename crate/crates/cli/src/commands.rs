use std::fmt::Write as _;
use std::path::Path;

use diagram_core::canonical::{equal_with, multiply, normal_form, reduce, Equality};
use diagram_core::diagram::VertexId;
use diagram_core::groupops::{self, MuComparison};
use diagram_core::oracle::{self, OrbitBounds};
use diagram_core::presentation::parse_presentation;
use diagram_core::rewrite::{idempotent_search, kb_complete, KbBudget, VerdictKind, WordProblem};
use diagram_core::thompson::{self, EmbedOptions, EmbedOutcome};
use diagram_core::{Caps, Diagram, Error, PlanarGraph, Presentation, Word};

use crate::{Cli, Command, Outcome, Status};

enum CliError {
    Core(Error),
    Input(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

type Res = Result<Outcome, CliError>;

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(out) => out,
        Err(CliError::Input(msg)) => Outcome::new("", Status::Usage, msg),
        Err(CliError::Core(e)) => {
            let status = match e {
                Error::ExceededBounds(_) | Error::Timeout => Status::Unknown,
                Error::NotASum(_) | Error::BadWitness(_) | Error::StuckCyclicReduction => Status::Fail,
                _ => Status::Usage,
            };
            Outcome::new("", status, e.to_string())
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn presentation(cli: &Cli) -> Result<Presentation, CliError> {
    let path = cli.presentation.as_ref().ok_or_else(|| CliError::Input("missing -p <presentation>".into()))?;
    Ok(parse_presentation(&read(path)?)?)
}

fn diagram(p: &Presentation, path: &Path) -> Result<Diagram, CliError> {
    Ok(Diagram::parse(p, &read(path)?)?)
}

fn base_word(cli: &Cli, p: &Presentation) -> Result<Word, CliError> {
    let w = cli.word.as_ref().ok_or_else(|| CliError::Input("missing -w <word>".into()))?;
    Ok(p.parse_word(w)?)
}

fn caps(cli: &Cli, default: Caps) -> Caps {
    Caps {
        max_word_len: cli.max_len.unwrap_or(default.max_word_len),
        node_budget: cli.budget.unwrap_or(default.node_budget),
    }
}

fn vertex(g: &PlanarGraph, spec: &str) -> Result<VertexId, CliError> {
    let bad = || CliError::Input(format!("bad vertex `{spec}` (use an id, t<k> or b<k>)"));
    let (path, index) = match spec.as_bytes().first() {
        Some(b't') => (Some(&g.top_vertices), &spec[1..]),
        Some(b'b') => (Some(&g.bottom_vertices), &spec[1..]),
        _ => (None, spec),
    };
    let k: usize = index.parse().map_err(|_| bad())?;
    match path {
        Some(vs) => vs.get(k).copied().ok_or_else(bad),
        None if k < g.vertex_count => Ok(VertexId(k)),
        None => Err(bad()),
    }
}

fn block(name: &str, text: &str) -> String {
    format!("begin {name}\n{text}end {name}\n")
}

fn dispatch(cli: &Cli) -> Res {
    match &cli.command {
        Command::GenF => return gen_f(),
        Command::VerifyF { witness } => return verify_f(cli, witness),
        _ => {}
    }
    let p = presentation(cli)?;
    let mode = if cli.strict_isotopy { Equality::Isotopy } else { Equality::Group };
    match &cli.command {
        Command::Reduce { diagram: path } => {
            let d = diagram(&p, path)?;
            let r = reduce(&p, &d)?;
            let detail = format!("reduced {} -> {} cells", d.cells(), r.cells());
            Ok(Outcome::ok(r.to_text(&p), detail))
        }
        Command::Nf { diagram: path } => {
            let nf = normal_form(&p, &diagram(&p, path)?)?;
            let detail = format!("normal form, {} cells", nf.cells());
            Ok(Outcome::ok(nf.to_text(&p), detail))
        }
        Command::Eq { first, second } => {
            let (d1, d2) = (diagram(&p, first)?, diagram(&p, second)?);
            Ok(if equal_with(&p, &d1, &d2, mode)? {
                Outcome::ok("EQUAL\n", "equal")
            } else {
                Outcome::new("DISTINCT\n", Status::Fail, "distinct")
            })
        }
        Command::Mul { first, second } => {
            let m = multiply(&p, &diagram(&p, first)?, &diagram(&p, second)?)?;
            let detail = format!("product, {} cells", m.cells());
            Ok(Outcome::ok(m.to_text(&p), detail))
        }
        Command::Sum { first, second } => {
            let s = diagram(&p, first)?.sum(&p, &diagram(&p, second)?)?;
            let detail = format!("sum, {} cells", s.cells());
            Ok(Outcome::ok(s.to_text(&p), detail))
        }
        Command::Inv { diagram: path } => {
            let i = diagram(&p, path)?.inverse(&p)?;
            let detail = format!("inverse, {} cells", i.cells());
            Ok(Outcome::ok(i.to_text(&p), detail))
        }
        Command::Conj { diagram: path, conjugator } => {
            let c = groupops::conjugate(&p, &diagram(&p, path)?, &diagram(&p, conjugator)?)?;
            let detail = format!("conjugate, {} cells", c.cells());
            Ok(Outcome::ok(c.to_text(&p), detail))
        }
        Command::Comp { diagram: path } => {
            let n = groupops::comp(&p, &diagram(&p, path)?)?;
            Ok(Outcome::ok(format!("{n}\n"), format!("comp = {n}")))
        }
        Command::Components { diagram: path } => {
            let dec = groupops::decompose_components(&p, &diagram(&p, path)?)?;
            let mut out = String::new();
            for (i, part) in dec.parts.iter().enumerate() {
                out.push_str(&block(&format!("part{i}"), &part.to_text(&p)));
            }
            let detail = format!("{} parts, {} nontrivial", dec.parts.len(), dec.nontrivial());
            Ok(Outcome::ok(out, detail))
        }
        Command::Absred { diagram: path } => {
            let cr = groupops::absolutely_reduce(&p, &diagram(&p, path)?)?;
            let out = block("conjugator", &cr.conjugator.to_text(&p)) + &block("core", &cr.core.to_text(&p));
            let detail = format!("core {} cells, conjugator {} cells", cr.core.cells(), cr.conjugator.cells());
            Ok(Outcome::ok(out, detail))
        }
        Command::Mu { diagram: path, from, to } => {
            let g = diagram(&p, path)?.realize(&p)?;
            let (o, o2) = (vertex(&g, from)?, vertex(&g, to)?);
            Ok(match groupops::mu(&g, o, o2) {
                Some(w) => Outcome::ok(format!("{}\n", p.show_word(&w)), format!("mu(v{}, v{})", o.0, o2.0)),
                None => Outcome::new("", Status::Fail, format!("no positive path from v{} to v{}", o.0, o2.0)),
            })
        }
        Command::Lemma1 { diagram: path, split } => {
            let d = diagram(&p, path)?;
            let report = groupops::check_lemma1(&p, &d, *split, caps(cli, Caps::default()))?;
            let mut out = String::new();
            for c in &report.checks {
                let verdict = match c.outcome {
                    MuComparison::Equal => "equal",
                    MuComparison::Unknown => "unknown",
                    MuComparison::Distinct => "distinct",
                };
                let _ = writeln!(
                    out,
                    "v{}: {} vs {} {verdict}",
                    c.vertex.0,
                    p.show_word(&c.to_top),
                    p.show_word(&c.to_bottom)
                );
            }
            let detail = format!(
                "{} equal, {} unknown, {} distinct",
                report.count(MuComparison::Equal),
                report.count(MuComparison::Unknown),
                report.count(MuComparison::Distinct)
            );
            let status = if report.passed() { Status::Ok } else { Status::Fail };
            Ok(Outcome::new(out, status, detail))
        }
        Command::Wp { u, v } => {
            let (u, v) = (p.parse_word(u)?, p.parse_word(v)?);
            let engine = WordProblem::new(&p, caps(cli, Caps::default())).with_completion(KbBudget::default());
            let verdict = engine.decide(&u, &v);
            let mut out = format!("{verdict}\n");
            let status = match &verdict.kind {
                VerdictKind::Equal(d) => {
                    out.push_str(&d.to_text(&p, "derivation"));
                    Status::Ok
                }
                VerdictKind::NoWitnessUnderCap { decisive: true } => Status::Fail,
                _ => Status::Unknown,
            };
            Ok(Outcome::new(out, status, verdict.to_string().to_lowercase()))
        }
        Command::Kb => {
            let sys = kb_complete(&p, KbBudget::default())?;
            let mut out = String::new();
            for (l, r) in &sys.rules {
                let _ = writeln!(out, "{} -> {}", p.show_word(l), p.show_word(r));
            }
            Ok(Outcome::ok(out, format!("confluent, {} rules", sys.rules.len())))
        }
        Command::Idem { max_len } => {
            let s = idempotent_search(&p, *max_len, caps(cli, Caps::default()));
            let mut out = String::new();
            for (e, d) in &s.found {
                let _ = writeln!(out, "e: {}", p.show_word(e));
                out.push_str(&d.to_text(&p, "idem"));
            }
            let (status, detail) = if !s.found.is_empty() {
                (Status::Ok, format!("{} idempotents of length <= {max_len}", s.found.len()))
            } else if s.decisive() {
                (Status::Fail, format!("no idempotent of length <= {max_len} (decisive)"))
            } else {
                (Status::Unknown, format!("no idempotent found; {} candidates undecided", s.undecided.len()))
            };
            Ok(Outcome::new(out, status, detail))
        }
        Command::Qof => {
            let q = p.q_transform();
            Ok(Outcome::ok(q.to_string(), format!("{} letters, {} rules", q.rank(), q.relations.len())))
        }
        Command::EmbedF { idem_len } => {
            let w = base_word(cli, &p)?;
            let defaults = EmbedOptions::default();
            let opts = EmbedOptions { max_idempotent_len: *idem_len, caps: caps(cli, defaults.caps) };
            Ok(match thompson::embed_f(&p, &w, opts)? {
                EmbedOutcome::Found(ew) => {
                    let iw = &ew.witness;
                    let detail = format!(
                        "F embeds in D(P, {}): w1={} e={} w2={}",
                        p.show_word(&w),
                        p.show_word(&iw.w1),
                        p.show_word(&iw.e),
                        p.show_word(&iw.w2)
                    );
                    Outcome::ok(ew.to_text(&p), detail)
                }
                EmbedOutcome::NotFound { absent, reason } => {
                    let note = if absent { " (no idempotents exist)" } else { "" };
                    Outcome::new("", Status::Fail, format!("NotFound: {reason}{note}"))
                }
            })
        }
        Command::OracleCheck { first, second } => {
            let bounds = OrbitBounds::default();
            let d1 = diagram(&p, first)?;
            let all = oracle::all_reductions(&p, &d1, &bounds)?;
            let fast = reduce(&p, &d1)?;
            let mut out = String::new();
            for (i, r) in all.iter().enumerate() {
                out.push_str(&block(&format!("reduction{i}"), &r.to_text(&p)));
            }
            if all.len() != 1 || !all.contains(&fast) {
                return Ok(Outcome::new(out, Status::Fail, format!("{} distinct reductions", all.len())));
            }
            let Some(second) = second else {
                return Ok(Outcome::ok(out, "unique reduction matches reduce"));
            };
            let d2 = diagram(&p, second)?;
            let slow = oracle::oracle_equal(&p, &d1, &d2, &bounds)?;
            let quick = diagram_core::equal_diagrams(&p, &d1, &d2)?;
            let _ = writeln!(out, "{}", if slow { "EQUAL" } else { "DISTINCT" });
            Ok(if slow == quick {
                Outcome::ok(out, "oracle agrees with equal_diagrams")
            } else {
                Outcome::new(out, Status::Fail, "oracle disagrees with equal_diagrams")
            })
        }
        Command::Dot { diagram: path } => {
            let d = diagram(&p, path)?;
            let g = d.realize(&p)?;
            Ok(Outcome::ok(crate::dot::render(&p, &g), format!("{} vertices, {} cells", g.vertex_count, g.cells.len())))
        }
        Command::GenF | Command::VerifyF { .. } => unreachable!(),
    }
}

fn gen_f() -> Res {
    let p = thompson::dunce_hat();
    let w = p.parse_word("x")?;
    match thompson::embed_f(&p, &w, EmbedOptions::default())? {
        EmbedOutcome::Found(ew) => {
            let r = &ew.report;
            let detail =
                format!("canonical pair over x: rel1={} rel2={} noncommute={}", r.rel1_ok, r.rel2_ok, r.noncommute);
            let status = if r.pass() { Status::Ok } else { Status::Fail };
            Ok(Outcome::new(ew.to_text(&p), status, detail))
        }
        EmbedOutcome::NotFound { reason, .. } => Ok(Outcome::new("", Status::Fail, reason)),
    }
}

fn verify_f(cli: &Cli, path: &Path) -> Res {
    // without -p the witness is checked against the Dunce hat
    let p = match cli.presentation {
        Some(_) => presentation(cli)?,
        None => thompson::dunce_hat(),
    };
    let ew = thompson::parse_witness(&p, &read(path)?)?;
    let report = thompson::verify_witness(&p, &ew)?;
    let detail =
        format!("witness verified: F in D(P, {}), commutator {} cells", p.show_word(&ew.w), report.commutator_cells);
    Ok(Outcome::ok("", detail))
}
