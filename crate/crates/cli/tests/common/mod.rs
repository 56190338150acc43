#![allow(dead_code)]

pub mod g4ip;
pub mod gen;

use std::path::PathBuf;

use copsearch::lexer::ParseError;
use copsearch::parser;
use copsearch_core::ljt::star_sequent;
use copsearch_core::{Engine, Forest, Sequent};

pub fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// `(kind, text)` pairs from values.txt.
pub fn values() -> Vec<(String, String)> {
    golden("values.txt")
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (k, t) = l.split_once(' ').expect("kind and text");
            (k.to_string(), t.to_string())
        })
        .collect()
}

fn same<T: PartialEq + std::fmt::Display + std::fmt::Debug>(
    text: &str,
    value: T,
    reparse: impl Fn(&str) -> Result<T, ParseError>,
) -> Result<(), String> {
    let shown = value.to_string();
    if shown != text {
        return Err(format!("`{text}` renders as `{shown}`"));
    }
    let again = reparse(&shown).map_err(|e| format!("`{shown}` does not parse back: {e}"))?;
    if again != value {
        return Err(format!("`{shown}` parses back to a different value {again:?}"));
    }
    Ok(())
}

/// Parses `text` as a `kind`, renders it and parses the rendering again;
/// both the text and the value must survive.
pub fn round_trip(kind: &str, text: &str) -> Result<(), String> {
    let err = |e: ParseError| format!("`{text}`: {e}");
    match kind {
        "ljp-formula" => same(text, parser::ljp_formula(text).map_err(err)?, parser::ljp_formula),
        "ljt-formula" => same(text, parser::ljt_formula(text).map_err(err)?, parser::ljt_formula),
        "ljp-sequent" => same(text, parser::ljp_sequent(text).map_err(err)?, parser::ljp_sequent),
        "ljt-sequent" => same(text, parser::ljt_sequent(text).map_err(err)?, parser::ljt_sequent),
        "ljp-term" => same(text, parser::ljp_term(text).map_err(err)?, parser::ljp_term),
        "ljt-term" => same(text, parser::ljt_term(text).map_err(err)?, parser::ljt_term),
        "forest" => same(text, parser::forest(text).map_err(err)?, parser::forest),
        other => Err(format!("unknown kind `{other}`")),
    }
}

/// Values derived from the corpus sequents: their finitary forests, the
/// translations of the LJT ones and small members, all rendered.
pub fn derived_values(engine: &Engine) -> Vec<(String, String)> {
    let mut seqs: Vec<Sequent> = Vec::new();
    let mut out = Vec::new();
    for (kind, text) in values() {
        match kind.as_str() {
            "ljp-sequent" => seqs.push(parser::ljp_sequent(&text).unwrap()),
            "ljt-sequent" => {
                let s = star_sequent(&parser::ljt_sequent(&text).unwrap()).unwrap();
                out.push(("ljp-sequent".to_string(), s.to_string()));
                seqs.push(s);
            }
            _ => {}
        }
    }
    for s in &seqs {
        let f: Forest = engine.finrep_closed(s);
        out.push(("forest".to_string(), f.to_string()));
        for t in engine.members(s, 8) {
            out.push(("ljp-term".to_string(), t.to_string()));
        }
    }
    out
}
