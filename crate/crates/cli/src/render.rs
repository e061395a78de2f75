//! Text, markdown and JSON emitters. Every function returns the complete
//! output so that runs are byte-identical for identical inputs.

use std::fmt::Write;

use chamberkit::braid::{Abelianization, PureBraidPresentation};
use chamberkit::curves::{AuditReport, FamilyKind, NegativeSpheres};
use chamberkit::invariants::{SympReport, TableDocument};
use chamberkit::packing::{PackingSpec, PackingVerdict};
use chamberkit::reduction::ReductionTrace;
use chamberkit::{FormClass, HomologyClass};
use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA: &str = "report-v1";

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Markdown,
    Json,
}

pub struct Output {
    pub body: String,
    /// False when the command ran but the answer is a failed check.
    pub ok: bool,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, ok: true }
    }
}

fn envelope(kind: &str, payload: impl Serialize) -> String {
    let mut v = serde_json::to_value(payload).expect("report serializes");
    if let Value::Object(m) = &mut v {
        m.insert("schema".into(), SCHEMA.into());
        m.insert("kind".into(), kind.into());
    }
    let mut s = serde_json::to_string_pretty(&v).expect("json value prints");
    s.push('\n');
    s
}

/// Rows of cells rendered either as aligned text or as a markdown table.
fn grid(header: &[&str], rows: &[Vec<String>], format: Format) -> String {
    let mut out = String::new();
    if format == Format::Markdown {
        let _ = writeln!(out, "| {} |", header.join(" | "));
        let _ = writeln!(out, "|{}", header.iter().map(|_| "---|").collect::<String>());
        for r in rows {
            let _ = writeln!(out, "| {} |", r.join(" | "));
        }
        return out;
    }
    let width: Vec<usize> = (0..header.len())
        .map(|i| {
            rows.iter()
                .map(|r| r[i].chars().count())
                .chain([header[i].chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, c) in cells.iter().enumerate() {
            if i + 1 == cells.len() {
                s.push_str(c);
            } else {
                s.push_str(c);
                s.push_str(&" ".repeat(width[i] - c.chars().count() + 2));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    out.push_str(&line(header.to_vec()));
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

fn fields(pairs: &[(&str, String)], format: Format) -> String {
    let rows: Vec<Vec<String>> = pairs
        .iter()
        .map(|(k, v)| vec![k.to_string(), v.clone()])
        .collect();
    match format {
        Format::Markdown => grid(&["field", "value"], &rows, format),
        _ => {
            let w = pairs.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
            pairs
                .iter()
                .map(|(k, v)| format!("{k}{}  {v}\n", " ".repeat(w - k.chars().count())))
                .collect()
        }
    }
}

fn list(items: &[HomologyClass]) -> String {
    if items.is_empty() {
        "none".into()
    } else {
        items.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
    }
}

pub fn analyze(r: &SympReport, format: Format) -> Output {
    if format == Format::Json {
        return Output::ok(envelope("analyze", r));
    }
    let torsion = r
        .pi1
        .torsion
        .iter()
        .map(|t| format!("Z{t}"))
        .collect::<Vec<_>>()
        .join(" ⊕ ");
    let mut pairs = vec![
        ("input", r.input.to_string()),
        ("reduced", r.reduced.to_string()),
        ("face", r.face.label_or_dash().to_string()),
        ("conditions", r.face.conditions.clone()),
        ("Γ_L", format!("{} (|W| = {})", r.gamma_l, r.pi0.weyl_order)),
        ("N", r.n.to_string()),
        ("N_L", r.n_l.to_string()),
        ("Torelli", r.pi0.torelli.name().to_string()),
        ("π₀", r.pi0.note.clone()),
        ("π₁ rank", r.pi1.rank().to_string()),
    ];
    if !torsion.is_empty() {
        pairs.push(("π₁ torsion", torsion));
    }
    pairs.push(("Q", r.q.map_or("unknown".into(), |q| q.to_string())));
    for f in &r.flags {
        pairs.push(("flag", format!("{}: {}", f.code, f.message)));
    }
    Output::ok(fields(&pairs, format))
}

pub fn table(doc: &TableDocument, paper_compare: bool, format: Format) -> Output {
    if format == Format::Json {
        return Output::ok(envelope("table", doc));
    }
    let mut header = vec!["label", "Γ_L", "N", "π₁", "area conditions"];
    if paper_compare {
        header.extend(["printed Γ_L", "printed N", "printed π₁", "notes"]);
    }
    let rows: Vec<Vec<String>> = doc
        .rows
        .iter()
        .map(|r| {
            let mut v = vec![
                r.label.clone(),
                r.gamma_l.to_string(),
                r.n.to_string(),
                r.pi1.to_string(),
                r.conditions.clone(),
            ];
            if paper_compare {
                let dash = || "-".to_string();
                match &r.printed {
                    Some(p) => v.extend([
                        p.gamma_l.to_string(),
                        p.n.to_string(),
                        p.pi1.map_or_else(dash, |x| x.to_string()),
                    ]),
                    None => v.extend([dash(), dash(), dash()]),
                }
                v.push(if r.discrepancies.is_empty() {
                    dash()
                } else {
                    r.discrepancies.join("; ")
                });
            }
            v
        })
        .collect();
    let mut out = grid(&header, &rows, format);
    if let Some(q) = doc.published_q {
        let _ = writeln!(out, "\npublished Q = {q}");
    }
    Output::ok(out)
}

pub fn roots(k: usize, exceptional: bool, classes: &[HomologyClass], format: Format) -> Output {
    let body = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(classes).expect("classes serialize");
            s.push('\n');
            s
        }
        Format::Markdown => {
            let what = if exceptional { "exceptional classes" } else { "roots" };
            let mut s = format!("{} {what} for k = {k}\n\n", classes.len());
            for c in classes {
                let _ = writeln!(s, "- `{c}`");
            }
            s
        }
        Format::Text => classes.iter().map(|c| format!("{c}\n")).collect(),
    };
    Output::ok(body)
}

pub fn reduce(trace: &ReductionTrace, normalized: Option<&FormClass>, format: Format) -> Output {
    let body = match format {
        Format::Json => envelope(
            "reduce",
            json!({
                "input": trace.start,
                "reduced": trace.end,
                "normalized": normalized,
                "steps": trace.steps.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            }),
        ),
        Format::Markdown => {
            let mut s = format!("reduced: `{}`\n\n```\n{}```\n", trace.end, trace.to_log());
            if let Some(n) = normalized {
                let _ = writeln!(s, "\nnormalized: `{n}`");
            }
            s
        }
        Format::Text => {
            let mut s = trace.to_log();
            if let Some(n) = normalized {
                let _ = writeln!(s, "# normalized {n}");
            }
            s
        }
    };
    Output::ok(body)
}

fn family_name(f: FamilyKind) -> &'static str {
    match f {
        FamilyKind::B => "B - kF - Σ r_i E_i",
        FamilyKind::F => "F - Σ r_i E_i",
        FamilyKind::E => "E_j - Σ r_i E_i",
    }
}

pub fn curves(
    w: &FormClass,
    spheres: Option<&(NegativeSpheres, Vec<HomologyClass>)>,
    audit: Option<&AuditReport>,
    format: Format,
) -> Output {
    if format == Format::Json {
        let families = spheres.map(|(s, _)| &s.families);
        let higher = spheres.map(|(s, _)| &s.higher_genus);
        let zero = spheres.map(|(_, z)| z);
        let body = envelope(
            "curves",
            json!({
                "form": w,
                "families": families,
                "higherGenus": higher,
                "squareZero": zero,
                "audit": audit,
            }),
        );
        return Output {
            body,
            ok: audit.is_none_or(|a| a.violations.is_empty()),
        };
    }
    let mut pairs = vec![("form", w.to_string())];
    if let Some((s, zero)) = spheres {
        for f in &s.families {
            pairs.push((family_name(f.family), list(&f.members)));
        }
        pairs.push(("square zero", list(zero)));
        if !s.higher_genus.is_empty() {
            pairs.push(("higher genus", list(&s.higher_genus)));
        }
    }
    if let Some(a) = audit {
        pairs.push(("audit bound", a.bound.to_string()));
        pairs.push(("searched", a.searched.to_string()));
        pairs.push(("checked", a.checked.to_string()));
        pairs.push(("violations", list(&a.violations)));
        let census = a
            .census
            .iter()
            .map(|(p, n)| format!("p={p}: {n}"))
            .collect::<Vec<_>>()
            .join(", ");
        pairs.push(("census", census));
        if a.precondition_breach {
            pairs.push(("warning", "form is not reduced; violations are expected".into()));
        }
    }
    Output {
        body: fields(&pairs, format),
        ok: audit.is_none_or(|a| a.violations.is_empty()),
    }
}

pub fn packing(spec: &PackingSpec, v: &PackingVerdict, format: Format) -> Output {
    if format == Format::Json {
        return Output::ok(envelope("packing", json!({
            "sizes": spec.sizes().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "verdict": v,
        })));
    }
    let sizes = spec.sizes().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ");
    let tight: Vec<HomologyClass> = v
        .checks
        .iter()
        .filter(|c| c.slack == v.min_slack)
        .map(|c| c.class.clone())
        .collect();
    let pairs = vec![
        ("sizes", sizes),
        ("feasible", if v.feasible { "yes" } else { "no" }.to_string()),
        ("boundary", if v.boundary { "yes" } else { "no" }.to_string()),
        ("certificate", v.certificate.to_string()),
        ("min slack", v.min_slack.to_string()),
        ("tight classes", list(&tight)),
    ];
    Output::ok(fields(&pairs, format))
}

pub fn abelianize(p: &PureBraidPresentation, ab: &Abelianization, format: Format) -> Output {
    let group = if p.quotient_full_twist {
        format!("PB_{}(S²)/⟨τ⟩", p.n)
    } else {
        format!("PB_{}(S²)", p.n)
    };
    if format == Format::Json {
        return Output::ok(envelope(
            "braid-abelianize",
            json!({
                "n": p.n,
                "quotient": p.quotient_full_twist,
                "freeRank": ab.free_rank,
                "torsion": ab.torsion.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
                "group": ab.to_string(),
            }),
        ));
    }
    let pairs = vec![
        ("group", group),
        ("generators", p.generators.len().to_string()),
        ("relations", p.relation_words.len().to_string()),
        ("abelianization", ab.to_string()),
    ];
    Output::ok(fields(&pairs, format))
}

pub fn span(n: usize, subset: &[(usize, usize)], spans: bool, format: Format) -> Output {
    let names: Vec<String> = subset.iter().map(|(i, j)| format!("A{i}-{j}")).collect();
    if format == Format::Json {
        return Output::ok(envelope(
            "braid-span",
            json!({ "n": n, "generators": names, "spans": spans }),
        ));
    }
    let pairs = vec![
        ("n", n.to_string()),
        ("generators", names.join(", ")),
        ("spans abelianization", if spans { "yes" } else { "no" }.to_string()),
    ];
    Output::ok(fields(&pairs, format))
}

pub fn verify(trace: &ReductionTrace, replayed: &FormClass, format: Format) -> Output {
    let ok = *replayed == trace.end;
    let body = match format {
        Format::Json => envelope(
            "verify-trace",
            json!({
                "ok": ok,
                "steps": trace.steps.len(),
                "end": trace.end,
                "replayed": replayed,
            }),
        ),
        _ => {
            let verdict = if ok { "ok" } else { "mismatch" };
            fields(
                &[
                    ("verdict", verdict.to_string()),
                    ("steps", trace.steps.len().to_string()),
                    ("END", trace.end.to_string()),
                    ("replayed", replayed.to_string()),
                ],
                format,
            )
        }
    };
    Output { body, ok }
}
