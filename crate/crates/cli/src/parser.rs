//! Recursive-descent parser for the ASCII surface syntax of formulas,
//! sequents, proof terms and forests in both calculi.

use std::sync::Arc;

use copsearch_core::ljt::{Arm, LExpr, LSpine, LTerm, LjtCtx, LjtSequent, LjtTerm};
use copsearch_core::{canon_sum, Ctx, Forest, Formula, IFormula, Index, LjpTerm, Neg, Pos, Sequent, Sort, Sym};

use crate::lexer::{tokenize, ParseError, Pos as SrcPos, Tok};

const KEYWORDS: &[&str] = &[
    "bot", "up", "down", "lam", "pair", "nil", "thunk", "inj1", "inj2", "ea", "ep", "cothunk", "dlv", "ret",
    "coret", "abort", "copair", "case", "sum", "zero", "gfp",
];

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
enum Mark {
    Plus,
    Minus,
}

/// Formula before polarity checking.
#[derive(Clone, Debug)]
enum Raw {
    Atom(String, Option<Mark>),
    Bot,
    Up(Box<Raw>, SrcPos),
    Down(Box<Raw>, SrcPos),
    Imp(Box<Raw>, Box<Raw>, SrcPos),
    And(Box<Raw>, Box<Raw>, SrcPos),
    Or(Box<Raw>, Box<Raw>, SrcPos),
}

struct Parser {
    toks: Vec<(Tok, SrcPos)>,
    i: usize,
    ljp: bool,
}

type R<T> = Result<T, ParseError>;

impl Parser {
    fn new(src: &str, ljp: bool) -> R<Parser> {
        Ok(Parser { toks: tokenize(src)?, i: 0, ljp })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.i + k).min(self.toks.len() - 1)].0
    }

    fn pos(&self) -> SrcPos {
        self.toks[self.i].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.i].0.clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn error<T>(&self, msg: impl Into<String>) -> R<T> {
        Err(ParseError::new(self.pos(), msg))
    }

    fn unexpected<T>(&self, wanted: &str) -> R<T> {
        self.error(format!("expected {wanted}, found {}", self.peek()))
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok) -> R<()> {
        if self.eat(&t) {
            Ok(())
        } else {
            self.unexpected(&t.to_string())
        }
    }

    fn is_kw(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(x) if x == kw)
    }

    fn name(&mut self) -> R<String> {
        match self.peek().clone() {
            Tok::Ident(x) if !KEYWORDS.contains(&x.as_str()) => {
                self.bump();
                Ok(x)
            }
            Tok::Ident(x) => self.error(format!("`{x}` is a reserved word")),
            _ => self.unexpected("a name"),
        }
    }

    fn finish(&self) -> R<()> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            self.unexpected("end of input")
        }
    }

    // formulas

    fn raw(&mut self) -> R<Raw> {
        let lhs = self.raw_or()?;
        let pos = self.pos();
        if self.eat(&Tok::Arrow) {
            Ok(Raw::Imp(Box::new(lhs), Box::new(self.raw()?), pos))
        } else {
            Ok(lhs)
        }
    }

    fn raw_or(&mut self) -> R<Raw> {
        let lhs = self.raw_and()?;
        let pos = self.pos();
        if self.eat(&Tok::Or) {
            Ok(Raw::Or(Box::new(lhs), Box::new(self.raw_or()?), pos))
        } else {
            Ok(lhs)
        }
    }

    fn raw_and(&mut self) -> R<Raw> {
        let lhs = self.raw_prefix()?;
        let pos = self.pos();
        if self.eat(&Tok::And) {
            Ok(Raw::And(Box::new(lhs), Box::new(self.raw_and()?), pos))
        } else {
            Ok(lhs)
        }
    }

    fn raw_prefix(&mut self) -> R<Raw> {
        let pos = self.pos();
        for (kw, up) in [("up", true), ("down", false)] {
            if self.is_kw(kw) {
                if !self.ljp {
                    return self.error(format!("`{kw}` is not intuitionistic syntax"));
                }
                self.bump();
                let inner = Box::new(self.raw_prefix()?);
                return Ok(if up { Raw::Up(inner, pos) } else { Raw::Down(inner, pos) });
            }
        }
        if self.is_kw("bot") {
            self.bump();
            return Ok(Raw::Bot);
        }
        if self.eat(&Tok::LParen) {
            let f = self.raw()?;
            self.expect(Tok::RParen)?;
            return Ok(f);
        }
        let name = self.name()?;
        let mark = match self.peek() {
            Tok::Plus => Some(Mark::Plus),
            Tok::Minus => Some(Mark::Minus),
            _ => None,
        };
        match (mark, self.ljp) {
            (Some(_), true) => {
                self.bump();
            }
            (None, true) => return self.error(format!("atom `{name}` is missing its polarity marker (+ or -)")),
            (Some(_), false) => return self.error("polarity markers are not intuitionistic syntax"),
            (None, false) => {}
        }
        Ok(Raw::Atom(name, mark))
    }

    fn formula(&mut self) -> R<Formula> {
        let start = self.pos();
        let raw = self.raw()?;
        polarize(&raw, start)
    }

    fn neg(&mut self) -> R<Neg> {
        let start = self.pos();
        match self.formula()? {
            Formula::Neg(n) => Ok(n),
            Formula::Pos(p) => Err(ParseError::new(start, format!("`{p}` is positive, a negative formula is needed"))),
        }
    }

    fn positive(&mut self) -> R<Pos> {
        let start = self.pos();
        match self.formula()? {
            Formula::Pos(p) => Ok(p),
            Formula::Neg(n) => Err(ParseError::new(start, format!("`{n}` is negative, a positive formula is needed"))),
        }
    }

    fn iformula(&mut self) -> R<IFormula> {
        let raw = self.raw()?;
        Ok(intuitionistic(&raw))
    }

    // sequents

    fn bindings<F>(&mut self, mut item: impl FnMut(&mut Self) -> R<F>) -> R<Vec<(String, F, SrcPos)>> {
        let mut out = Vec::new();
        if self.eat(&Tok::EmptyCtx) {
            return Ok(out);
        }
        if !(matches!(self.peek(), Tok::Ident(_)) && *self.peek_at(1) == Tok::Colon) {
            return Ok(out);
        }
        loop {
            let pos = self.pos();
            let x = self.name()?;
            self.expect(Tok::Colon)?;
            out.push((x, item(self)?, pos));
            if !self.eat(&Tok::Comma) {
                return Ok(out);
            }
        }
    }

    fn ljp_ctx(&mut self) -> R<Ctx> {
        let mut ctx = Ctx::new();
        for (x, f, pos) in self.bindings(|p| p.formula())? {
            if !f.is_left() {
                return Err(ParseError::new(
                    pos,
                    format!("`{x}` has type `{f}`; context formulas must be negative or positive atoms"),
                ));
            }
            ctx.push(x.as_str().into(), f).map_err(|e| ParseError::new(pos, e.to_string()))?;
        }
        Ok(ctx)
    }

    fn ljp_sequent(&mut self) -> R<Sequent> {
        let ctx = self.ljp_ctx()?;
        let seq = match self.peek() {
            Tok::Turnstile => {
                self.bump();
                if self.eat(&Tok::LBracket) {
                    let goal = self.positive()?;
                    self.expect(Tok::RBracket)?;
                    Sequent::focus_right(ctx, goal)
                } else {
                    Sequent::stable(ctx, self.formula()?)
                }
            }
            Tok::Fat => {
                self.bump();
                Sequent::invert_right(ctx, self.neg()?)
            }
            Tok::LBracket => {
                self.bump();
                let focus = self.neg()?;
                self.expect(Tok::RBracket)?;
                self.expect(Tok::Turnstile)?;
                let pos = self.pos();
                let right = self.formula()?;
                if !right.is_right() {
                    return Err(ParseError::new(pos, format!("`{right}` is not a positive formula or negative atom")));
                }
                Sequent::focus_left(ctx, focus, right)
            }
            Tok::Bar => {
                self.bump();
                let hyp = self.positive()?;
                self.expect(Tok::Fat)?;
                Sequent::invert_left(ctx, hyp, self.formula()?)
            }
            _ => return self.unexpected("`|-`, `=>`, `[` or `|`"),
        };
        Ok(seq)
    }

    fn ljt_sequent(&mut self) -> R<LjtSequent> {
        let mut ctx = LjtCtx::new();
        for (x, f, pos) in self.bindings(|p| p.iformula())? {
            ctx.push(x.as_str().into(), f).map_err(|e| ParseError::new(pos, e.to_string()))?;
        }
        let right_formula = |p: &mut Self| -> R<IFormula> {
            let pos = p.pos();
            let r = p.iformula()?;
            if r.is_right() {
                Ok(r)
            } else {
                Err(ParseError::new(pos, format!("`{r}` is not a right formula (atom, bot or disjunction)")))
            }
        };
        match self.peek() {
            Tok::Turnstile => {
                self.bump();
                Ok(LjtSequent::Stable { ctx, right: right_formula(self)? })
            }
            Tok::Fat => {
                self.bump();
                Ok(LjtSequent::Invert { ctx, goal: self.iformula()? })
            }
            Tok::LBracket => {
                self.bump();
                let focus = self.iformula()?;
                self.expect(Tok::RBracket)?;
                self.expect(Tok::Turnstile)?;
                Ok(LjtSequent::Focus { ctx, focus, right: right_formula(self)? })
            }
            _ => self.unexpected("`|-`, `=>` or `[`"),
        }
    }

    // forests; terms are the forests without sums, variables or binders

    fn index(&mut self) -> R<Index> {
        match self.peek() {
            Tok::Number(1) => {
                self.bump();
                Ok(Index::One)
            }
            Tok::Number(2) => {
                self.bump();
                Ok(Index::Two)
            }
            _ => self.unexpected("`1` or `2`"),
        }
    }

    fn sym(&self, pos: SrcPos, f: Sym, kids: Vec<Forest>) -> R<Forest> {
        Forest::sym(f, kids).map_err(|e| ParseError::new(pos, e.to_string()))
    }

    fn paren_forest(&mut self) -> R<Forest> {
        self.expect(Tok::LParen)?;
        let f = self.forest()?;
        self.expect(Tok::RParen)?;
        Ok(f)
    }

    fn annotation(&mut self) -> R<copsearch_core::Stable> {
        self.expect(Tok::At)?;
        self.expect(Tok::LParen)?;
        let pos = self.pos();
        let seq = self.ljp_sequent()?;
        self.expect(Tok::RParen)?;
        match seq {
            Sequent::Stable(s) if s.is_r_stable() => Ok(s),
            other => Err(ParseError::new(pos, format!("`{other}` is not an R-stable sequent"))),
        }
    }

    fn forest(&mut self) -> R<Forest> {
        let pos = self.pos();
        let head = self.forest_primary()?;
        if *self.peek() == Tok::Cons {
            self.bump();
            let rest = self.forest()?;
            return self.sym(pos, Sym::App, vec![head, rest]);
        }
        Ok(head)
    }

    fn forest_primary(&mut self) -> R<Forest> {
        let pos = self.pos();
        if let Tok::Number(_) = self.peek() {
            let i = self.index()?;
            self.expect(Tok::Cons)?;
            let rest = self.forest()?;
            return self.sym(pos, Sym::Proj(i), vec![rest]);
        }
        let word = match self.peek() {
            Tok::Ident(w) => w.clone(),
            _ => return self.unexpected("a term"),
        };
        let unary = |p: &mut Self, f: Sym| -> R<Forest> {
            p.bump();
            let kid = p.paren_forest()?;
            p.sym(pos, f, vec![kid])
        };
        let binary = |p: &mut Self, f: Sym| -> R<Forest> {
            p.bump();
            p.expect(Tok::LParen)?;
            let a = p.forest()?;
            p.expect(Tok::Comma)?;
            let b = p.forest()?;
            p.expect(Tok::RParen)?;
            p.sym(pos, f, vec![a, b])
        };
        match word.as_str() {
            "thunk" => unary(self, Sym::Thunk),
            "ea" => unary(self, Sym::Ea),
            "ep" => unary(self, Sym::Ep),
            "lam" => unary(self, Sym::Lam),
            "cothunk" => unary(self, Sym::CoThunk),
            "dlv" => unary(self, Sym::Dlv),
            "ret" => unary(self, Sym::Ret),
            "pair" => binary(self, Sym::Pair),
            "copair" => binary(self, Sym::Copair),
            "nil" => {
                self.bump();
                Ok(Forest::leaf(Sym::Nil))
            }
            "inj1" | "inj2" => {
                self.bump();
                let i = if word == "inj1" { Index::One } else { Index::Two };
                self.expect(Tok::LBracket)?;
                let other = self.positive()?;
                self.expect(Tok::RBracket)?;
                let kid = self.paren_forest()?;
                self.sym(pos, Sym::Inj(i, other), vec![kid])
            }
            "abort" => {
                self.bump();
                self.expect(Tok::LBracket)?;
                let a = self.formula()?;
                self.expect(Tok::RBracket)?;
                Ok(Forest::leaf(Sym::Abort(a)))
            }
            "coret" => {
                self.bump();
                let x = self.name()?;
                let kid = self.paren_forest()?;
                self.sym(pos, Sym::CoRet(x.as_str().into()), vec![kid])
            }
            "sum" => {
                self.bump();
                self.expect(Tok::LBrace)?;
                let mut parts = vec![self.forest()?];
                while self.eat(&Tok::Comma) {
                    parts.push(self.forest()?);
                }
                self.expect(Tok::RBrace)?;
                let sort = parts[0].sort();
                canon_sum(sort, parts).map_err(|e| ParseError::new(pos, e.to_string()))
            }
            "zero" => {
                self.bump();
                self.expect(Tok::LBracket)?;
                let sort = match self.name()?.as_str() {
                    "v" => Sort::V,
                    "s" => Sort::S,
                    "e" => Sort::E,
                    other => return Err(ParseError::new(pos, format!("no sums of sort `{other}`"))),
                };
                self.expect(Tok::RBracket)?;
                Ok(Forest::zero(sort))
            }
            "gfp" => {
                self.bump();
                let x = self.name()?;
                let rho = self.annotation()?;
                self.expect(Tok::Dot)?;
                let body = self.forest()?;
                Forest::gfp(x.as_str().into(), rho, body).map_err(|e| ParseError::new(pos, e.to_string()))
            }
            _ => {
                let x = self.name()?;
                match self.peek() {
                    Tok::At => {
                        let rho = self.annotation()?;
                        Forest::var(x.as_str().into(), rho).map_err(|e| ParseError::new(pos, e.to_string()))
                    }
                    Tok::Caret => {
                        self.bump();
                        let ty = self.formula()?;
                        self.expect(Tok::Dot)?;
                        let body = self.forest()?;
                        let f = match ty {
                            Formula::Pos(Pos::Atom(a)) => Sym::BindPos(x.as_str().into(), a),
                            Formula::Neg(n) => Sym::BindNeg(x.as_str().into(), n),
                            Formula::Pos(p) => {
                                return Err(ParseError::new(
                                    pos,
                                    format!("cannot bind `{x}` at `{p}`: only negative formulas and positive atoms"),
                                ))
                            }
                        };
                        self.sym(pos, f, vec![body])
                    }
                    _ => Ok(Forest::leaf(Sym::Var(x.as_str().into()))),
                }
            }
        }
    }

    // LJT terms

    fn ljt_term(&mut self) -> R<LTerm> {
        if self.is_kw("lam") {
            self.bump();
            self.expect(Tok::LParen)?;
            let x = self.name()?;
            self.expect(Tok::Caret)?;
            let a = self.iformula()?;
            self.expect(Tok::Dot)?;
            let body = self.ljt_term()?;
            self.expect(Tok::RParen)?;
            return Ok(LTerm::Lam(x.as_str().into(), a, Arc::new(body)));
        }
        if self.is_kw("pair") {
            self.bump();
            self.expect(Tok::LParen)?;
            let a = self.ljt_term()?;
            self.expect(Tok::Comma)?;
            let b = self.ljt_term()?;
            self.expect(Tok::RParen)?;
            return Ok(LTerm::pair(a, b));
        }
        Ok(self.ljt_expr()?.into())
    }

    fn ljt_expr(&mut self) -> R<LExpr> {
        for (kw, i) in [("inj1", Index::One), ("inj2", Index::Two)] {
            if self.is_kw(kw) {
                self.bump();
                self.expect(Tok::LBracket)?;
                let other = self.iformula()?;
                self.expect(Tok::RBracket)?;
                self.expect(Tok::LParen)?;
                let t = self.ljt_term()?;
                self.expect(Tok::RParen)?;
                return Ok(LExpr::inj(i, other, t));
            }
        }
        let x = self.name()?;
        self.expect(Tok::LParen)?;
        let s = self.ljt_spine()?;
        self.expect(Tok::RParen)?;
        Ok(LExpr::App(x.as_str().into(), Arc::new(s)))
    }

    fn ljt_arm(&mut self) -> R<Arm> {
        let x = self.name()?;
        self.expect(Tok::Caret)?;
        let ty = self.iformula()?;
        self.expect(Tok::Dot)?;
        let body = self.ljt_expr()?;
        Ok(Arm { var: x.as_str().into(), ty, body: Arc::new(body) })
    }

    fn ljt_spine(&mut self) -> R<LSpine> {
        if let Tok::Number(_) = self.peek() {
            let i = self.index()?;
            self.expect(Tok::Cons)?;
            return Ok(LSpine::proj(i, self.ljt_spine()?));
        }
        if self.is_kw("nil") {
            self.bump();
            return Ok(LSpine::Nil);
        }
        if self.is_kw("abort") {
            self.bump();
            self.expect(Tok::LBracket)?;
            let r = self.iformula()?;
            self.expect(Tok::RBracket)?;
            return Ok(LSpine::Abort(r));
        }
        if self.is_kw("case") {
            self.bump();
            self.expect(Tok::LParen)?;
            let a = self.ljt_arm()?;
            self.expect(Tok::Comma)?;
            let b = self.ljt_arm()?;
            self.expect(Tok::RParen)?;
            return Ok(LSpine::Case(a, b));
        }
        let t = self.ljt_term()?;
        self.expect(Tok::Cons)?;
        Ok(LSpine::cons(t, self.ljt_spine()?))
    }
}

fn polarize(raw: &Raw, start: SrcPos) -> R<Formula> {
    let neg = |r: &Raw, pos: SrcPos| -> R<Neg> {
        match polarize(r, pos)? {
            Formula::Neg(n) => Ok(n),
            Formula::Pos(p) => Err(ParseError::new(pos, format!("`{p}` is positive where a negative formula is needed"))),
        }
    };
    let pos_ = |r: &Raw, pos: SrcPos| -> R<Pos> {
        match polarize(r, pos)? {
            Formula::Pos(p) => Ok(p),
            Formula::Neg(n) => Err(ParseError::new(pos, format!("`{n}` is negative where a positive formula is needed"))),
        }
    };
    Ok(match raw {
        Raw::Atom(a, Some(Mark::Minus)) => Neg::atom(a).into(),
        Raw::Atom(a, _) => Pos::atom(a).into(),
        Raw::Bot => Pos::Bot.into(),
        Raw::Up(p, at) => Neg::up(pos_(p, *at)?).into(),
        Raw::Down(n, at) => Pos::down(neg(n, *at)?).into(),
        Raw::Imp(p, n, at) => Neg::imp(pos_(p, start)?, neg(n, *at)?).into(),
        Raw::And(a, b, at) => Neg::and(neg(a, start)?, neg(b, *at)?).into(),
        Raw::Or(a, b, at) => Pos::or(pos_(a, start)?, pos_(b, *at)?).into(),
    })
}

fn intuitionistic(raw: &Raw) -> IFormula {
    match raw {
        Raw::Atom(a, _) => IFormula::atom(a),
        Raw::Bot => IFormula::Bot,
        Raw::Imp(a, b, _) => IFormula::imp(intuitionistic(a), intuitionistic(b)),
        Raw::And(a, b, _) => IFormula::and(intuitionistic(a), intuitionistic(b)),
        Raw::Or(a, b, _) => IFormula::or(intuitionistic(a), intuitionistic(b)),
        // rejected while parsing in intuitionistic mode
        Raw::Up(..) | Raw::Down(..) => unreachable!(),
    }
}

fn whole<T>(src: &str, ljp: bool, f: impl FnOnce(&mut Parser) -> R<T>) -> R<T> {
    let mut p = Parser::new(src, ljp)?;
    let out = f(&mut p)?;
    p.finish()?;
    Ok(out)
}

pub fn ljp_formula(src: &str) -> R<Formula> {
    whole(src, true, Parser::formula)
}

pub fn ljp_sequent(src: &str) -> R<Sequent> {
    whole(src, true, Parser::ljp_sequent)
}

pub fn ljp_context(src: &str) -> R<Ctx> {
    whole(src, true, Parser::ljp_ctx)
}

pub fn forest(src: &str) -> R<Forest> {
    whole(src, true, Parser::forest)
}

/// An LJP proof term; its sort is read off the outermost constructor.
pub fn ljp_term(src: &str) -> R<LjpTerm> {
    let f = forest(src)?;
    f.to_term()
        .ok_or_else(|| ParseError::new(SrcPos { line: 1, column: 1 }, "sums, fixed points and variables X@(...) are not terms"))
}

pub fn ljt_formula(src: &str) -> R<IFormula> {
    whole(src, false, Parser::iformula)
}

pub fn ljt_sequent(src: &str) -> R<LjtSequent> {
    whole(src, false, Parser::ljt_sequent)
}

/// An LJT proof term of the given sort: spines for focus sequents,
/// expressions for stable ones, terms otherwise.
pub fn ljt_term_for(src: &str, seq: &LjtSequent) -> R<LjtTerm> {
    match seq {
        LjtSequent::Invert { .. } => whole(src, false, Parser::ljt_term).map(LjtTerm::Term),
        LjtSequent::Stable { .. } => whole(src, false, Parser::ljt_expr).map(LjtTerm::Expr),
        LjtSequent::Focus { .. } => whole(src, false, Parser::ljt_spine).map(LjtTerm::Spine),
    }
}

/// An LJT proof term whose sort is guessed from its shape: spine syntax
/// (`nil`, `::`, `abort`, `case`) gives a spine, `lam`/`pair` a term and
/// anything else an expression.
pub fn ljt_term(src: &str) -> R<LjtTerm> {
    if let Ok(e) = whole(src, false, Parser::ljt_expr) {
        return Ok(LjtTerm::Expr(e));
    }
    if let Ok(t) = whole(src, false, Parser::ljt_term) {
        return Ok(LjtTerm::Term(t));
    }
    whole(src, false, Parser::ljt_spine).map(LjtTerm::Spine)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formulas() {
        let f = ljp_formula("down a- -> a-").unwrap();
        assert_eq!(f, Neg::imp(Pos::down(Neg::atom("a")), Neg::atom("a")).into());
        let err = ljp_formula("a").unwrap_err();
        assert!(err.message.contains("polarity"), "{err}");
        let err = ljp_formula("a+ /\\ b-").unwrap_err();
        assert_eq!(err.pos.column, 1);
        assert!(ljp_formula("up a-").is_err());
        assert_eq!(ljt_formula("(a -> b) -> a").unwrap().to_string(), "(a -> b) -> a");
        assert!(ljt_formula("a-").is_err());
    }

    #[test]
    fn sequents() {
        let s = ljp_sequent("x: a- |- a-").unwrap();
        assert_eq!(s.to_string(), "x: a- |- a-");
        assert_eq!(ljp_sequent("· |- [bot]").unwrap().to_string(), "|- [bot]");
        let err = ljp_sequent("z: down a- |- a-").unwrap_err();
        assert!(err.message.contains("context"), "{err}");
        let t = ljt_sequent("f: a -> a, x: a |- a").unwrap();
        assert!(matches!(t, LjtSequent::Stable { .. }));
        assert!(ljt_sequent("|- a -> a").is_err());
        assert!(ljp_sequent("x: a-, x: b- |- a-").is_err());
    }

    #[test]
    fn terms_and_forests() {
        let t = ljp_term("lam(x^a-. coret x (nil))").unwrap();
        assert_eq!(t.to_string(), "lam(x^a-. coret x (nil))");
        let s = ljp_term("thunk(ea(coret y (nil))) :: 2 :: nil").unwrap();
        assert_eq!(s.sort(), Sort::S);
        let f = forest("gfp Y@(x: a- |- a-). coret x (nil)").unwrap();
        assert_eq!(f.to_string(), "gfp Y@(x: a- |- a-). coret x (nil)");
        assert!(ljp_term("sum{coret x (nil), coret y (nil)}").is_err());
        assert!(forest("ret(nil)").is_err());
        let e = ljt_term("lam(x^a. x (nil))").unwrap();
        assert!(matches!(e, LjtTerm::Term(_)));
        assert!(matches!(ljt_term("x (nil)").unwrap(), LjtTerm::Expr(_)));
        assert!(matches!(ljt_term("1 :: nil").unwrap(), LjtTerm::Spine(_)));
    }
}
