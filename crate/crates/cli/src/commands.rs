use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use cactus_core::cactus::{CactusSystem, CactusWord, ClassicalGenerator, TypeADictionary};
use cactus_core::linalg::{in_span, Vector};
use cactus_core::racg::{BigEntry, RacgContext};
use cactus_core::rep::{check_relations as check, quotient_rep, stable_lines as lines, PiOnSimple, PiRep, RhoRep};
use cactus_core::scalar::{parse_rational, rational_string};
use cactus_core::{CoxeterSystem, Error, Matrix, Rational, Scalar};
use serde_json::{json, Value};

use crate::{Config, RepKind};

pub struct Output {
    pub json: Value,
    pub text: String,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Scalar(_) | Error::UnknownType(_) | Error::UnknownLabel(_) | Error::WordSyntax(_) | Error::Dimension(_) => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Domain(other),
        }
    }
}

type CliResult = Result<Output, CliError>;

pub struct Context {
    pub cactus: CactusSystem,
    pub t: Rational,
}

impl Context {
    pub fn load(config: &Config) -> Result<Self, CliError> {
        let t = parse_rational(&config.t).map_err(|e| CliError::Usage(format!("--t: {e}")))?;
        let sys = CoxeterSystem::load(&config.system)?;
        let cactus = match &config.family {
            None => CactusSystem::new(&sys)?,
            Some(text) => {
                let family = text
                    .split(';')
                    .map(|s| s.trim())
                    .filter(|s| !s.is_empty())
                    .map(|s| sys.parse_subset(s))
                    .collect::<Result<Vec<_>, _>>()?;
                CactusSystem::with_family(&sys, family)?
            }
        };
        Ok(Self { cactus, t })
    }

    fn sys(&self) -> &CoxeterSystem {
        self.cactus.system()
    }

    fn word(&self, text: &str) -> Result<CactusWord, CliError> {
        Ok(self.cactus.parse_word(text)?)
    }

    fn labels(&self) -> Vec<String> {
        (0..self.cactus.generator_count())
            .map(|l| self.sys().format_subset(self.cactus.subset(l)))
            .collect()
    }

    fn t_string(&self) -> String {
        rational_string(&self.t)
    }
}

fn lines_text<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().fold(String::new(), |mut acc, l| {
        acc.push_str(&l);
        acc.push('\n');
        acc
    })
}

pub fn fset(ctx: &Context) -> CliResult {
    let labels = ctx.labels();
    Ok(Output {
        json: json!({ "family": labels }),
        text: lines_text(labels.clone()),
    })
}

pub fn longest(ctx: &Context, subset: &str) -> CliResult {
    let sys = ctx.sys();
    let s = sys.parse_subset(subset)?;
    let w = sys.longest_element(s)?;
    let word = sys.format_word(w.word());
    Ok(Output {
        json: json!({ "subset": sys.format_subset(s), "word": word, "length": w.length() }),
        text: format!("{word}\n"),
    })
}

pub fn sset(ctx: &Context) -> CliResult {
    let racg = RacgContext::new(&ctx.cactus)?;
    let data = racg.to_json();
    let mut text = String::new();
    for x in 0..racg.size() {
        let g = &data.generators[x];
        let _ = writeln!(text, "{}\t{}\torder {}\t{}", x, racg.subgroup_label(x), g.order, g.elements.join(", "));
    }
    text.push('\n');
    for row in &data.matrix {
        text.push_str(&lines_text([row.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")]));
    }
    let labels: Vec<String> = (0..racg.size()).map(|x| racg.subgroup_label(x)).collect();
    let mut json = serde_json::to_value(&data).expect("serializable");
    json["labels"] = json!(labels);
    Ok(Output { json, text })
}

pub fn eval(ctx: &Context, word: &str) -> CliResult {
    let w = ctx.word(word)?;
    let image = ctx.cactus.evaluate(&w);
    let reduced = ctx.sys().format_word(image.word());
    Ok(Output {
        json: json!({ "word": ctx.cactus.format_word(&w), "image": reduced, "length": image.length() }),
        text: format!("{reduced}\n"),
    })
}

pub fn pure(ctx: &Context, word: &str) -> CliResult {
    let w = ctx.word(word)?;
    let p = ctx.cactus.is_pure(&w);
    Ok(Output {
        json: json!({ "word": ctx.cactus.format_word(&w), "pure": p }),
        text: format!("{p}\n"),
    })
}

pub fn equal(ctx: &Context, left: &str, right: &str) -> CliResult {
    let (u, v) = (ctx.word(left)?, ctx.word(right)?);
    let racg = RacgContext::new(&ctx.cactus)?;
    let eq = racg.cactus_equal(&u, &v);
    Ok(Output {
        json: json!({
            "left": ctx.cactus.format_word(&u),
            "right": ctx.cactus.format_word(&v),
            "equal": eq,
        }),
        text: format!("{eq}\n"),
    })
}

pub fn normalize(ctx: &Context, word: &str) -> CliResult {
    let w = ctx.word(word)?;
    let racg = RacgContext::new(&ctx.cactus)?;
    let e = racg.embed(&w);
    let labels: Vec<String> = e.racg_part.iter().map(|&x| racg.subgroup_label(x)).collect();
    let text = format!(
        "word: {}\npermutation: {}\n",
        if labels.is_empty() { "e".to_string() } else { labels.join(" ") },
        e.aut_part.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    );
    Ok(Output {
        json: json!({ "word": e.racg_part, "permutation": e.aut_part, "labels": labels }),
        text,
    })
}

struct RepData {
    basis: Vec<String>,
    names: Vec<String>,
    matrices: Vec<Value>,
    texts: Vec<String>,
    gram_csv: String,
}

fn rational_rep(basis: Vec<String>, names: Vec<String>, gens: &[Matrix<Rational>], csv: String) -> RepData {
    RepData {
        basis,
        names,
        matrices: gens.iter().map(|m| serde_json::to_value(m).expect("serializable")).collect(),
        texts: gens.iter().map(|m| m.to_string()).collect(),
        gram_csv: csv,
    }
}

/// Generator matrices over the rationals, for the cactus representations.
fn cactus_generators(ctx: &Context, kind: RepKind) -> Result<(Vec<String>, Vec<Matrix<Rational>>, String), CliError> {
    match kind {
        RepKind::Rho => {
            let rho = RhoRep::new(&ctx.cactus, &ctx.t)?;
            Ok((rho.form().labels.clone(), rho.generators().to_vec(), rho.form().to_csv()))
        }
        RepKind::BigPi => {
            let racg = RacgContext::new(&ctx.cactus)?;
            let pi = PiRep::checked(&racg, &ctx.t)?;
            Ok((pi.form().labels.clone(), pi.generators().to_vec(), pi.form().to_csv()))
        }
        RepKind::Pi => Err(CliError::Usage(
            "pi is a representation of W, not of the cactus group; use rho or Pi".into(),
        )),
    }
}

fn rep_data(ctx: &Context, kind: RepKind) -> Result<RepData, CliError> {
    match kind {
        RepKind::Pi => {
            let sys = ctx.sys();
            let pi = PiOnSimple::new(sys, &ctx.t);
            let gens = pi.generators();
            Ok(RepData {
                basis: sys.labels().to_vec(),
                names: sys.labels().to_vec(),
                matrices: gens.iter().map(|m| serde_json::to_value(m).expect("serializable")).collect(),
                texts: gens.iter().map(|m| m.to_string()).collect(),
                gram_csv: pi.form().to_csv(),
            })
        }
        _ => {
            let (basis, gens, csv) = cactus_generators(ctx, kind)?;
            Ok(rational_rep(basis, ctx.labels(), &gens, csv))
        }
    }
}

fn kind_name(kind: RepKind) -> &'static str {
    match kind {
        RepKind::Rho => "rho",
        RepKind::Pi => "pi",
        RepKind::BigPi => "Pi",
    }
}

pub fn rep(ctx: &Context, kind: RepKind) -> CliResult {
    let data = rep_data(ctx, kind)?;
    let mut text = format!("basis: {}\n", data.basis.join(" "));
    let mut gens = Vec::new();
    for ((name, m), t) in data.names.iter().zip(&data.matrices).zip(&data.texts) {
        let _ = writeln!(text, "\n{name}:\n{t}");
        gens.push(json!({ "generator": name, "matrix": m }));
    }
    Ok(Output {
        json: json!({
            "representation": kind_name(kind),
            "t": ctx.t_string(),
            "basis": data.basis,
            "generators": gens,
        }),
        text,
    })
}

pub fn gram(ctx: &Context, kind: RepKind) -> CliResult {
    let data = rep_data(ctx, kind)?;
    Ok(Output {
        json: json!({ "representation": kind_name(kind), "t": ctx.t_string(), "csv": data.gram_csv }),
        text: data.gram_csv,
    })
}

pub fn check_relations(ctx: &Context, kind: RepKind) -> CliResult {
    let (_, gens, _) = cactus_generators(ctx, kind)?;
    let report = check(&ctx.cactus, &gens);
    let described = report.describe(&ctx.cactus);
    let text = if report.passed() {
        format!("ok: {} relations hold\n", report.checked)
    } else {
        format!(
            "{} of {} relations fail\n{}",
            described.len(),
            report.checked,
            lines_text(described.clone())
        )
    };
    Ok(Output {
        json: json!({
            "representation": kind_name(kind),
            "t": ctx.t_string(),
            "checked": report.checked,
            "passed": report.passed(),
            "violations": described,
        }),
        text,
    })
}

fn vector_strings<T: Scalar>(v: &[T]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

pub fn stable_lines(ctx: &Context, kind: RepKind) -> CliResult {
    let (basis, gens, _) = cactus_generators(ctx, kind)?;
    let found = lines(&gens);
    let names = ctx.labels();
    let mut text = format!("basis: {}\n", basis.join(" "));
    let mut out = Vec::new();
    for space in &found {
        let signs: BTreeMap<&str, i8> = names.iter().map(String::as_str).zip(space.signs.iter().copied()).collect();
        let vectors: Vec<Vec<String>> = space.basis.iter().map(|v| vector_strings(v)).collect();
        let sign_text: Vec<String> = names
            .iter()
            .zip(&space.signs)
            .map(|(n, s)| format!("{n}:{}", if *s > 0 { "+" } else { "-" }))
            .collect();
        let _ = writeln!(text, "\nsigns {} (dimension {})", sign_text.join(" "), space.dim());
        for v in &vectors {
            let _ = writeln!(text, "  ({})", v.join(", "));
        }
        out.push(json!({
            "signs": space.signs,
            "characters": signs,
            "dimension": space.dim(),
            "basis": vectors,
        }));
    }
    Ok(Output {
        json: json!({
            "representation": kind_name(kind),
            "t": ctx.t_string(),
            "basis": basis,
            "generators": names,
            "spaces": out,
        }),
        text,
    })
}

fn parse_vectors(text: &str, dim: usize) -> Result<Vec<Vector<Rational>>, CliError> {
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|v| {
            let entries = v
                .split(',')
                .map(|x| parse_rational(x.trim()).map_err(|e| CliError::Usage(format!("vector {v:?}: {e}"))))
                .collect::<Result<Vec<_>, _>>()?;
            if entries.len() != dim {
                return Err(CliError::Usage(format!(
                    "vector {v:?} has {} entries, expected {dim}",
                    entries.len()
                )));
            }
            Ok(entries)
        })
        .collect()
}

fn unit(dim: usize, i: usize) -> Vector<Rational> {
    (0..dim).map(|k| Rational::from_integer(((k == i) as i64).into())).collect()
}

/// Extend `subspace` greedily by vectors from `pool`.
fn extend_basis(subspace: &[Vector<Rational>], pool: &[Vector<Rational>]) -> Vec<Vector<Rational>> {
    let mut span = subspace.to_vec();
    let mut out = Vec::new();
    for v in pool {
        if !in_span(&span, v) {
            span.push(v.clone());
            out.push(v.clone());
        }
    }
    out
}

pub fn quotient(
    ctx: &Context,
    kind: RepKind,
    subspace: &str,
    within: Option<&str>,
    complement: Option<&str>,
) -> CliResult {
    let (basis, gens, _) = cactus_generators(ctx, kind)?;
    let dim = basis.len();
    let sub = parse_vectors(subspace, dim)?;
    let pool = match within {
        Some(w) => parse_vectors(w, dim)?,
        None => (0..dim).map(|i| unit(dim, i)).collect(),
    };
    let comp = match complement {
        Some(c) => parse_vectors(c, dim)?,
        None => extend_basis(&sub, &pool),
    };
    let mats = quotient_rep(&gens, &sub, &comp)?;
    let names = ctx.labels();
    let comp_strings: Vec<Vec<String>> = comp.iter().map(|v| vector_strings(v)).collect();
    let mut text = String::from("basis:\n");
    for v in &comp_strings {
        let _ = writeln!(text, "  ({})", v.join(", "));
    }
    let mut gens_json = Vec::new();
    for (name, m) in names.iter().zip(&mats) {
        let _ = writeln!(text, "\n{name}:\n{m}");
        gens_json.push(json!({ "generator": name, "matrix": m }));
    }
    Ok(Output {
        json: json!({
            "representation": kind_name(kind),
            "t": ctx.t_string(),
            "subspace": sub.iter().map(|v| vector_strings(v)).collect::<Vec<_>>(),
            "basis": comp_strings,
            "generators": gens_json,
        }),
        text,
    })
}

pub fn diagram(ctx: &Context) -> CliResult {
    let racg = RacgContext::new(&ctx.cactus)?;
    let n = racg.size();
    let labels: Vec<String> = (0..n).map(|x| racg.subgroup_label(x)).collect();
    let mut edges = Vec::new();
    let mut dot = String::from("graph commutation {\n");
    for (x, l) in labels.iter().enumerate() {
        let _ = writeln!(dot, "  n{x} [label=\"{}\"];", l.replace('"', "\\\""));
    }
    for x in 0..n {
        for y in x + 1..n {
            if racg.entry(x, y) == BigEntry::Commute {
                let _ = writeln!(dot, "  n{x} -- n{y};");
                edges.push([x, y]);
            }
        }
    }
    dot.push_str("}\n");
    Ok(Output {
        json: json!({ "nodes": labels, "edges": edges, "dot": dot }),
        text: dot,
    })
}

pub fn dict_a(ctx: &Context, word: &str) -> CliResult {
    let dict = TypeADictionary::new(&ctx.cactus)?;
    let trimmed = word.trim();
    let (classical, cactus_word) = if trimmed.starts_with('g') || trimmed == "e" {
        let w = ctx.word(trimmed)?;
        let gens = w
            .letters()
            .iter()
            .map(|&l| dict.from_cactus(l))
            .collect::<Result<Vec<_>, _>>()?;
        (gens, w)
    } else {
        let gens = trimmed
            .split_whitespace()
            .map(str::parse::<ClassicalGenerator>)
            .collect::<Result<Vec<_>, _>>()?;
        let w = dict.translate(&gens)?;
        (gens, w)
    };
    let classical_text = if classical.is_empty() {
        "e".to_string()
    } else {
        classical.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ")
    };
    let cactus_text = ctx.cactus.format_word(&cactus_word);
    Ok(Output {
        json: json!({ "n": dict.n(), "classical": classical_text, "cactus": cactus_text }),
        text: format!("{classical_text} = {cactus_text}\n"),
    })
}

pub fn elements(ctx: &Context, max_len: usize) -> CliResult {
    let racg = RacgContext::new(&ctx.cactus)?;
    let words = ctx.cactus.words_up_to(max_len);
    let mut seen = std::collections::HashSet::new();
    let mut reps = Vec::new();
    for w in &words {
        let e = racg.embed(w);
        if seen.insert(e.clone()) {
            reps.push((w.clone(), e));
        }
    }
    let mut text = format!("{} words, {} distinct elements\n", words.len(), reps.len());
    let mut out = Vec::new();
    for (w, e) in &reps {
        let name = ctx.cactus.format_word(w);
        let _ = writeln!(text, "{name}");
        out.push(json!({ "word": name, "normal_form": e.racg_part, "permutation": e.aut_part }));
    }
    Ok(Output {
        json: json!({ "max_len": max_len, "words": words.len(), "distinct": reps.len(), "elements": out }),
        text,
    })
}
