//! Command dispatch. `run` is pure apart from the clock and the memo-stats
//! environment variable, so tests drive it in-process.

use std::collections::BTreeSet;
use std::time::Instant;

use clap::{Parser as ClapParser, ValueEnum};
use copsearch_core::ljt::{
    check_ljt_verbose, decide_ljt, erase, erase_sequent, forget, members_ljt, oracle_search_ljt, star_formula,
    star_sequent, star_term, Answer, DecideError, DecideKind, LjtSequent,
};
use copsearch_core::{check_verbose, oracle_search, CountError, Engine, Sequent};
use serde::Serialize;
use serde_json::Value as Json;

use crate::parser;

pub const MEMO_STATS_VAR: &str = "COPSEARCH_MEMO_STATS";

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Calculus {
    Ljp,
    Ljt,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Type-check TERM against SEQUENT
    Check,
    /// Print the finitary representation of the search space
    Space,
    /// Is the sequent inhabited?
    Inhabited,
    /// Does the sequent have finitely many inhabitants?
    Finite,
    /// Number of inhabitants (error when infinite)
    Count,
    /// Inhabitants up to --max-size, from the finitary representation
    Enumerate,
    /// Translate from LJT into LJP, or back with --back
    Translate,
    /// Inhabitants up to --max-size, by direct bounded search
    Oracle,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Formula,
    Sequent,
    Term,
}

/// Proof search, inhabitation, finiteness and enumeration for focused
/// intuitionistic logic.
#[derive(ClapParser, Debug)]
#[command(name = "copsearch", version)]
pub struct Args {
    /// Calculus of the input
    pub calculus: Calculus,
    pub command: Command,
    /// A sequent, or for `translate` a value of the chosen --kind
    pub input: String,
    /// Proof term for `check`
    pub term: Option<String>,
    /// Size bound for `enumerate` and `oracle`
    #[arg(long, default_value_t = 10)]
    pub max_size: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// For `translate`: read LJP and print its LJT preimage
    #[arg(long)]
    pub back: bool,
    /// For `translate`: what the input is
    #[arg(long, value_enum, default_value_t = Kind::Sequent)]
    pub kind: Kind,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct Query<'a> {
    calculus: Calculus,
    command: Command,
    input: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    term: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    back: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kind: Option<Kind>,
}

#[derive(Serialize)]
struct Stats {
    forest_nodes: usize,
    elapsed_ms: u128,
}

#[derive(Serialize)]
struct Report<'a> {
    schema: &'static str,
    query: Query<'a>,
    result: Json,
    witnesses: Vec<String>,
    stats: Stats,
}

/// What a command produced before rendering.
struct Reply {
    result: Json,
    witnesses: Vec<String>,
    forest_nodes: usize,
    /// Exit status: 0 for yes, 1 for no.
    code: i32,
    /// Extra diagnostic, printed to stderr.
    note: Option<String>,
}

impl Reply {
    fn answer(b: bool) -> Reply {
        Reply { result: Json::Bool(b), witnesses: Vec::new(), forest_nodes: 0, code: if b { 0 } else { 1 }, note: None }
    }

    fn value(text: String) -> Reply {
        Reply { result: Json::String(text), witnesses: Vec::new(), forest_nodes: 0, code: 0, note: None }
    }

    fn witnesses(ws: Vec<String>) -> Reply {
        Reply { result: Json::from(ws.len()), witnesses: ws, forest_nodes: 0, code: 0, note: None }
    }

    fn nodes(mut self, n: usize) -> Reply {
        self.forest_nodes = n;
        self
    }
}

fn sorted<T: ToString>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|t| t.to_string()).collect::<BTreeSet<_>>().into_iter().collect()
}

enum Goal {
    Ljp(Sequent),
    Ljt(LjtSequent, Sequent),
}

impl Goal {
    fn parse(calculus: Calculus, text: &str) -> Result<Goal, String> {
        match calculus {
            Calculus::Ljp => Ok(Goal::Ljp(parser::ljp_sequent(text).map_err(|e| e.to_string())?)),
            Calculus::Ljt => {
                let s = parser::ljt_sequent(text).map_err(|e| e.to_string())?;
                let image = star_sequent(&s).map_err(|e| e.to_string())?;
                Ok(Goal::Ljt(s, image))
            }
        }
    }

    fn ljp(&self) -> &Sequent {
        match self {
            Goal::Ljp(s) | Goal::Ljt(_, s) => s,
        }
    }
}

fn dispatch(args: &Args, engine: &Engine) -> Result<Reply, String> {
    if args.term.is_some() && args.command != Command::Check {
        return Err(format!("`{}` takes a single argument", command_name(args.command)));
    }
    if args.command == Command::Translate {
        return translate(args);
    }
    let goal = Goal::parse(args.calculus, &args.input)?;
    let nodes = || engine.finrep_closed(goal.ljp()).size();
    Ok(match args.command {
        Command::Check => {
            let src = args.term.as_deref().ok_or("`check` needs a SEQUENT and a TERM")?;
            let verdict = match &goal {
                Goal::Ljp(s) => {
                    let t = parser::ljp_term(src).map_err(|e| e.to_string())?;
                    check_verbose(s, &t).map_err(|e| e.to_string())
                }
                Goal::Ljt(s, _) => {
                    let t = parser::ljt_term_for(src, s).map_err(|e| e.to_string())?;
                    check_ljt_verbose(s, &t).map_err(|e| e.to_string())
                }
            };
            match verdict {
                Ok(()) => Reply::answer(true),
                Err(why) => Reply { note: Some(why), ..Reply::answer(false) },
            }
        }
        Command::Space => {
            let f = engine.finrep_closed(goal.ljp());
            Reply::value(f.to_string()).nodes(f.size())
        }
        Command::Inhabited => Reply::answer(engine.inhabited(goal.ljp())).nodes(nodes()),
        Command::Finite => Reply::answer(engine.finite(goal.ljp())).nodes(nodes()),
        Command::Count => {
            let n = match &goal {
                Goal::Ljp(s) => engine.count(s),
                Goal::Ljt(s, _) => match decide_ljt(engine, DecideKind::Count, s) {
                    Ok(Answer::Count(n)) => Ok(n),
                    Ok(Answer::Bool(_)) => unreachable!("count answers with a number"),
                    Err(DecideError::Count(e)) => Err(e),
                    Err(e) => return Err(e.to_string()),
                },
            };
            match n {
                // numbers beyond u64 are given as decimal strings
                Ok(n) => {
                    let result = u64::try_from(n).map(Json::from).unwrap_or_else(|_| Json::String(n.to_string()));
                    Reply { result, ..Reply::value(String::new()) }.nodes(nodes())
                }
                Err(CountError::Infinite) => return Err("the sequent has infinitely many inhabitants".into()),
                Err(e) => return Err(e.to_string()),
            }
        }
        Command::Enumerate => {
            let ws = match &goal {
                Goal::Ljp(s) => sorted(engine.members(s, args.max_size)),
                Goal::Ljt(s, _) => sorted(members_ljt(engine, s, args.max_size).map_err(|e| e.to_string())?),
            };
            Reply::witnesses(ws).nodes(nodes())
        }
        Command::Oracle => {
            let ws = match &goal {
                Goal::Ljp(s) => sorted(oracle_search(s, args.max_size)),
                Goal::Ljt(s, _) => sorted(oracle_search_ljt(s, args.max_size)),
            };
            Reply::witnesses(ws)
        }
        Command::Translate => unreachable!(),
    })
}

fn translate(args: &Args) -> Result<Reply, String> {
    let src = args.input.as_str();
    let err = |e: &dyn std::fmt::Display| e.to_string();
    let text = match (args.kind, args.back) {
        (Kind::Formula, false) => star_formula(&parser::ljt_formula(src).map_err(|e| err(&e))?).to_string(),
        (Kind::Formula, true) => erase(&parser::ljp_formula(src).map_err(|e| err(&e))?).map_err(|e| err(&e))?.to_string(),
        (Kind::Sequent, false) => {
            star_sequent(&parser::ljt_sequent(src).map_err(|e| err(&e))?).map_err(|e| err(&e))?.to_string()
        }
        (Kind::Sequent, true) => {
            erase_sequent(&parser::ljp_sequent(src).map_err(|e| err(&e))?).map_err(|e| err(&e))?.to_string()
        }
        (Kind::Term, false) => star_term(&parser::ljt_term(src).map_err(|e| err(&e))?).map_err(|e| err(&e))?.to_string(),
        (Kind::Term, true) => forget(&parser::ljp_term(src).map_err(|e| err(&e))?).map_err(|e| err(&e))?.to_string(),
    };
    Ok(Reply::value(text))
}

fn command_name(c: Command) -> String {
    c.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

/// One line for the result, except for enumerations, which print one
/// witness per line.
fn render_text(args: &Args, reply: &Reply) -> String {
    let mut out = String::new();
    if !matches!(args.command, Command::Enumerate | Command::Oracle) {
        match &reply.result {
            Json::String(s) => out.push_str(s),
            other => out.push_str(&other.to_string()),
        }
        out.push('\n');
    }
    for w in &reply.witnesses {
        out.push_str(w);
        out.push('\n');
    }
    out
}

fn render_json(args: &Args, reply: Reply, elapsed_ms: u128) -> String {
    let enumerates = matches!(args.command, Command::Enumerate | Command::Oracle);
    let translates = args.command == Command::Translate;
    let report = Report {
        schema: "1",
        query: Query {
            calculus: args.calculus,
            command: args.command,
            input: &args.input,
            term: args.term.as_deref(),
            max_size: enumerates.then_some(args.max_size),
            back: translates.then_some(args.back),
            kind: translates.then_some(args.kind),
        },
        result: reply.result,
        witnesses: reply.witnesses,
        stats: Stats { forest_nodes: reply.forest_nodes, elapsed_ms },
    };
    let mut s = serde_json::to_string(&report).expect("reports serialize");
    s.push('\n');
    s
}

/// Runs one command line (including the program name) against a fresh engine.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let engine = Engine::new();
    let start = Instant::now();
    let reply = dispatch(&args, &engine);
    let elapsed_ms = start.elapsed().as_millis();
    let mut stderr = String::new();
    if std::env::var_os(MEMO_STATS_VAR).is_some() {
        let m = engine.memo_stats();
        stderr.push_str(&format!("memo: forests={} inhabited={} members={}\n", m.forests, m.inhabited, m.members));
    }
    match reply {
        Ok(reply) => {
            if let Some(note) = &reply.note {
                stderr.push_str(note);
                stderr.push('\n');
            }
            let code = reply.code;
            let stdout = match args.format {
                Format::Text => render_text(&args, &reply),
                Format::Json => render_json(&args, reply, elapsed_ms),
            };
            Outcome { code, stdout, stderr }
        }
        Err(msg) => {
            stderr.push_str(&format!("error: {msg}\n"));
            Outcome { code: 2, stdout: String::new(), stderr }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        run(std::iter::once("copsearch").chain(args.iter().copied()))
    }

    #[test]
    fn decisions_and_exit_codes() {
        let peirce = go(&["ljt", "inhabited", "· => ((a->b)->a)->a"]);
        assert_eq!((peirce.code, peirce.stdout.as_str()), (1, "false\n"));
        let two = go(&["ljp", "count", "x: a-, y: a- |- a-"]);
        assert_eq!((two.code, two.stdout.as_str()), (0, "2\n"));
        let space = go(&["ljp", "space", "x: a- |- a-"]);
        assert_eq!(space.stdout, "gfp Y@(x: a- |- a-). coret x (nil)\n");
        let inf = go(&["ljt", "count", "f: a -> a, x: a |- a"]);
        assert_eq!(inf.code, 2);
        assert!(inf.stderr.contains("infinitely"));
        assert_eq!(go(&["ljp", "inhabited", "a"]).code, 2);
        assert_eq!(go(&["ljp", "frobnicate", "|- a-"]).code, 2);
    }

    #[test]
    fn json_report() {
        let out = go(&["ljp", "enumerate", "x: a-, y: a- |- a-", "--format", "json", "--max-size", "4"]);
        let v: Json = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["schema"], "1");
        assert_eq!(v["result"], 2);
        assert_eq!(v["witnesses"], serde_json::json!(["coret x (nil)", "coret y (nil)"]));
        assert_eq!(v["query"]["max_size"], 4);
        let yes = go(&["ljt", "inhabited", "=> a -> a", "--format", "json"]);
        let v: Json = serde_json::from_str(&yes.stdout).unwrap();
        assert_eq!(v["result"], true);
        assert!(v["stats"]["forest_nodes"].as_u64().unwrap() > 0);
    }

    #[test]
    fn check_and_translate() {
        let ok = go(&["ljp", "check", "=> down a- -> a-", "lam(x^a-. coret x (nil))"]);
        assert_eq!(ok.code, 0);
        let bad = go(&["ljp", "check", "x: a-, y: b- |- a-", "coret y (nil)"]);
        assert_eq!(bad.code, 1);
        assert!(!bad.stderr.is_empty());
        let ljt = go(&["ljt", "check", "f: a -> a, x: a |- a", "f (x (nil) :: nil)"]);
        assert_eq!(ljt.code, 0, "{}", ljt.stderr);
        let t = go(&["ljt", "translate", "--kind", "formula", "a -> a \\/ b"]);
        assert_eq!(t.stdout, "down a- -> up (down a- \\/ down b-)\n");
        let back = go(&["ljt", "translate", "--back", "--kind", "term", "lam(x^a-. coret x (nil))"]);
        assert_eq!(back.stdout, "lam(x^a. x (nil))\n");
        let s = go(&["ljt", "translate", "f: a -> b |- a \\/ b"]);
        assert_eq!(s.stdout, "f: down a- -> b- |- down a- \\/ down b-\n");
    }
}
