use std::fmt::Write;

use bseq_core::bott_samelson::{integrate, multiply, multiply_generator, restriction_table};
use bseq_core::ordinary::{ordinary_multiply, relations, OrdinaryClass};
use bseq_core::schubert::{billey, check_billey_identity, BilleyQuery};
use bseq_core::{BsWord, Class, Error, Gallery, Rational, SimpleWord};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::args::{Cli, Command};
use crate::config::{read_file, CliConfig};
use crate::{selftest, CliError, EXIT_INTERNAL};

/// Word length above which `table` warns about output size.
pub const TABLE_WARN_LEN: usize = 12;

/// What a successful command produced. `status` is nonzero only when a
/// verification ran to completion and found disagreements.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub warnings: Vec<String>,
    pub status: i32,
}

impl Outcome {
    fn text(stdout: String) -> Self {
        Self { stdout, ..Self::default() }
    }
}

fn with_schema(mut value: Value) -> String {
    if let Value::Object(map) = &mut value {
        map.insert("schema".into(), json!(1));
    }
    let mut out = serde_json::to_string_pretty(&value).expect("json values serialize");
    out.push('\n');
    out
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|l| l + "\n").collect()
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    if let Command::Selftest = cli.command {
        return Ok(cmd_selftest(cli.seed));
    }
    let cfg = CliConfig::from_cli(cli)?;
    match &cli.command {
        Command::Roots => cmd_roots(&cfg),
        Command::Table => cmd_table(&cfg),
        Command::Restrict { class, at } => cmd_restrict(&cfg, class, at.as_deref()),
        Command::Product { left, right, check } => cmd_product(&cfg, left, right, *check),
        Command::Integrate { gallery, class } => cmd_integrate(&cfg, gallery, class),
        Command::Billey { w, v, verify } => cmd_billey(&cfg, w, v, *verify),
        Command::Ordinary { product } => cmd_ordinary(&cfg, product.as_deref()),
        Command::Selftest => unreachable!("handled above"),
    }
}

/// A gallery bit string, an inline JSON class, or a path to one.
pub fn load_class(cfg: &CliConfig, spec: &str) -> Result<Class, CliError> {
    let spec = spec.trim();
    if !spec.is_empty() && spec.chars().all(|c| c == '0' || c == '1') {
        let word = cfg.bs_word()?;
        return Ok(Class::basis(&word, Gallery::parse(spec)?)?);
    }
    let text = if spec.starts_with('{') { spec.to_owned() } else { read_file(spec.as_ref())? };
    Ok(Class::from_json(cfg.rs.clone(), &text, cfg.gallery_cap)?)
}

fn parse_gallery(word: &BsWord, text: &str) -> Result<Gallery, CliError> {
    let e = Gallery::parse(text)?;
    word.check_gallery(&e)?;
    Ok(e)
}

pub fn cmd_roots(cfg: &CliConfig) -> Result<Outcome, CliError> {
    let rs = &cfg.rs;
    let roots = rs.positive_roots::<Rational>();
    let longest = rs.longest_word();
    if cfg.json() {
        let roots: Vec<Vec<i64>> = roots.iter().map(|r| r.to_ints().expect("roots are integral")).collect();
        return Ok(Outcome::text(with_schema(json!({
            "label": rs.label(),
            "cartan": rs.cartan_matrix(),
            "positive_roots": roots,
            "longest_length": rs.num_positive_roots(),
            "longest_word": longest.letters(),
        }))));
    }
    let mut out = String::new();
    if let Some(label) = rs.label() {
        writeln!(out, "type: {label}").unwrap();
    }
    writeln!(out, "cartan matrix:").unwrap();
    for row in rs.cartan_matrix() {
        let cells: Vec<String> = row.iter().map(|a| format!("{a:>3}")).collect();
        writeln!(out, "{}", cells.join("")).unwrap();
    }
    let roots: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
    writeln!(out, "positive roots: {}", roots.join(", ")).unwrap();
    writeln!(out, "length of w0: {}", rs.num_positive_roots()).unwrap();
    writeln!(out, "longest word: {longest}").unwrap();
    Ok(Outcome::text(out))
}

/// Rows `ε: σ_ε(ε'_1), σ_ε(ε'_2), …`, both in canonical gallery order.
pub fn table_lines(word: &BsWord) -> Vec<String> {
    restriction_table::<Rational>(word)
        .into_iter()
        .map(|(e, row)| {
            let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            format!("{e}: {}", cells.join(", "))
        })
        .collect()
}

pub fn cmd_table(cfg: &CliConfig) -> Result<Outcome, CliError> {
    let word = cfg.bs_word()?;
    let mut warnings = Vec::new();
    if word.len() > TABLE_WARN_LEN {
        warnings.push(format!("word length {} gives a {n} x {n} table", word.len(), n = 1u64 << word.len()));
    }
    let stdout = if cfg.json() {
        let table = restriction_table::<Rational>(&word);
        let galleries: Vec<String> = table.iter().map(|(e, _)| e.to_string()).collect();
        let rows: Vec<Vec<String>> = table.iter().map(|(_, row)| row.iter().map(|p| p.to_string()).collect()).collect();
        with_schema(json!({ "word": word.letters(), "galleries": galleries, "table": rows }))
    } else {
        lines(table_lines(&word))
    };
    Ok(Outcome { stdout, warnings, status: 0 })
}

pub fn cmd_restrict(cfg: &CliConfig, class: &str, at: Option<&str>) -> Result<Outcome, CliError> {
    let c = load_class(cfg, class)?;
    let points = match at {
        Some(text) => vec![parse_gallery(c.word(), text)?],
        None => c.word().galleries(),
    };
    let values =
        points.iter().map(|e| Ok((e.to_string(), c.restrict_at(e)?.to_string()))).collect::<Result<Vec<_>, Error>>()?;
    let stdout = if cfg.json() {
        let map: serde_json::Map<String, Value> = values.into_iter().map(|(e, v)| (e, json!(v))).collect();
        with_schema(json!({ "word": c.word().letters(), "values": map }))
    } else if at.is_some() {
        lines(values.into_iter().map(|(_, v)| v))
    } else {
        lines(values.into_iter().map(|(e, v)| format!("{e}: {v}")))
    };
    Ok(Outcome::text(stdout))
}

fn check_product(word: &BsWord, left: Gallery, right: Gallery, product: &Class) -> Result<String, CliError> {
    let mut notes = Vec::new();
    let pairs = if left == right { vec![(left, right)] } else { vec![(left, right), (right, left)] };
    for (generator, other) in pairs {
        if generator.length() == 1 {
            let i = generator.plus().next().expect("one selected position");
            let closed = multiply_generator::<Rational>(word, i, &other)?;
            if closed != *product {
                return Err(CliError::Check(format!("single-generator formula gives {closed}")));
            }
            notes.push(format!("generator {i}"));
        }
    }
    let l = Class::basis(word, left)?;
    let r = Class::basis(word, right)?;
    for e in word.galleries() {
        let expected = &l.restrict_at(&e)? * &r.restrict_at(&e)?;
        if product.restrict_at(&e)? != expected {
            return Err(CliError::Check(format!("restriction at {e} differs")));
        }
    }
    notes.push("restrictions".into());
    Ok(format!("check: ok ({})", notes.join(", ")))
}

pub fn cmd_product(cfg: &CliConfig, left: &str, right: &str, check: bool) -> Result<Outcome, CliError> {
    let word = cfg.bs_word()?;
    let (l, r) = (Gallery::parse(left)?, Gallery::parse(right)?);
    if l.len() != r.len() {
        return Err(Error::LengthMismatch { expected: l.len(), found: r.len() }.into());
    }
    word.check_gallery(&l)?;
    let product = multiply(&Class::basis(&word, l)?, &Class::basis(&word, r)?)?;
    let check_line = if check { Some(check_product(&word, l, r, &product)?) } else { None };
    let stdout = if cfg.json() {
        let mut value = serde_json::to_value(product.to_json()).expect("class serializes");
        if let Some(line) = &check_line {
            value["check"] = json!(line);
        }
        with_schema(value)
    } else {
        lines(std::iter::once(product.to_string()).chain(check_line))
    };
    Ok(Outcome::text(stdout))
}

pub fn cmd_integrate(cfg: &CliConfig, gallery: &str, class: &str) -> Result<Outcome, CliError> {
    let c = load_class(cfg, class)?;
    let e = parse_gallery(c.word(), gallery)?;
    let value = integrate(c.word(), &e, &c)?;
    let stdout = if cfg.json() {
        with_schema(json!({ "word": c.word().letters(), "gallery": e.to_string(), "value": value.to_string() }))
    } else {
        lines([value.to_string()])
    };
    Ok(Outcome::text(stdout))
}

pub fn cmd_billey(cfg: &CliConfig, w: &str, v: &str, verify: bool) -> Result<Outcome, CliError> {
    let rs = &cfg.rs;
    let w_word: SimpleWord = w.parse()?;
    let v_word: SimpleWord = v.parse()?;
    rs.check_word(&w_word)?;
    rs.check_word(&v_word)?;
    let w_elem = rs.weyl_from_word(&w_word)?;
    let query = BilleyQuery::new(rs, w_elem.clone(), v_word)?;
    let value = billey::<Rational>(&query);
    let mut out_lines = vec![value.to_string()];
    let mut status = 0;
    let mut counts = None;
    if verify {
        let word = cfg.bs_word()?;
        let reduced: Vec<Gallery> = word
            .galleries()
            .into_iter()
            .filter(|e| rs.length(&word.v(e).expect("gallery of word")) == e.length())
            .collect();
        let skipped = word.galleries().len() - reduced.len();
        let results = reduced
            .par_iter()
            .map(|e| check_billey_identity::<Rational>(&word, &w_elem, e))
            .collect::<Result<Vec<_>, _>>()?;
        let passed = results.iter().filter(|ok| **ok).count();
        let failed = results.len() - passed;
        if failed > 0 {
            status = EXIT_INTERNAL;
        }
        out_lines.push(format!("verify: {passed} passed, {failed} failed, {skipped} non-reduced galleries skipped"));
        counts = Some((passed, failed, skipped));
    }
    let stdout = if cfg.json() {
        let mut value_json =
            json!({ "w": w_word.letters(), "v": query.v_word().letters(), "value": value.to_string() });
        if let Some((passed, failed, skipped)) = counts {
            value_json["verify"] = json!({ "passed": passed, "failed": failed, "skipped": skipped });
        }
        with_schema(value_json)
    } else {
        lines(out_lines)
    };
    Ok(Outcome { stdout, warnings: Vec::new(), status })
}

pub fn relation_lines(word: &BsWord) -> Vec<String> {
    relations::<Rational>(word).iter().map(|r| r.to_string()).collect()
}

pub fn cmd_ordinary(cfg: &CliConfig, product: Option<&[String]>) -> Result<Outcome, CliError> {
    let word = cfg.bs_word()?;
    let rels = relation_lines(&word);
    let prod = match product {
        Some([m1, m2]) => {
            let a = OrdinaryClass::<Rational>::basis(&word, parse_gallery(&word, m1)?)?;
            let b = OrdinaryClass::basis(&word, parse_gallery(&word, m2)?)?;
            Some(ordinary_multiply(&a, &b)?)
        }
        Some(_) => return Err(CliError::Usage("--product takes two galleries".into())),
        None => None,
    };
    let stdout = if cfg.json() {
        let mut value = json!({ "word": word.letters(), "relations": rels });
        if let Some(p) = &prod {
            value["product"] = p.to_json();
        }
        with_schema(value)
    } else {
        lines(rels.into_iter().chain(prod.map(|p| p.to_string())))
    };
    Ok(Outcome::text(stdout))
}

pub fn cmd_selftest(seed: u64) -> Outcome {
    let reports = selftest::run_all(seed);
    let failed = reports.iter().any(|r| !r.passed);
    Outcome {
        stdout: lines(reports.iter().map(|r| r.to_string())),
        warnings: Vec::new(),
        status: if failed { EXIT_INTERNAL } else { 0 },
    }
}

#[cfg(test)]
mod tests {
    use clap::Parser;

    use super::*;

    fn config(args: &[&str]) -> CliConfig {
        let cli = Cli::try_parse_from(std::iter::once("bseq").chain(args.iter().copied()).chain(["roots"])).unwrap();
        CliConfig::from_cli(&cli).unwrap()
    }

    #[test]
    fn word_defaults_to_longest() {
        assert_eq!(config(&["--type", "B2"]).word, "1 2 1 2".parse().unwrap());
        assert_eq!(config(&["--type", "A2", "--word", "2 1"]).word, "2,1".parse().unwrap());
    }

    #[test]
    fn class_specs() {
        let cfg = config(&["--type", "A2", "--word", "1,2,1"]);
        let basis = load_class(&cfg, "010").unwrap();
        assert_eq!(basis.to_string(), "010: 1");
        let inline = load_class(&cfg, r#"{"word": [1, 2], "coords": {"01": "a2"}}"#).unwrap();
        assert_eq!(inline.word().letters(), &[1, 2]);
        assert!(matches!(load_class(&cfg, "01"), Err(CliError::Core(Error::LengthMismatch { .. }))));
        assert!(matches!(load_class(&cfg, "no/such/file.json"), Err(CliError::Io { .. })));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::from(Error::EmptyWord).exit_code(), 2);
        assert_eq!(CliError::from(Error::ResidualDenominator("a1".into())).exit_code(), 3);
        assert_eq!(CliError::Check("x".into()).exit_code(), 3);
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
    }

    #[test]
    fn table_warns_on_long_words() {
        let cfg = config(&["--type", "A1", "--word", "1,1,1,1,1,1,1,1,1,1,1,1,1"]);
        let out = cmd_table(&cfg).unwrap();
        assert_eq!(out.warnings.len(), 1);
        assert_eq!(out.stdout.lines().count(), 1 << 13);
    }
}
