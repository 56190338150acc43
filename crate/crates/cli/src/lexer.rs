use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Tok {
    Ident(String),
    Number(u32),
    Arrow,
    And,
    Or,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Colon,
    Cons,
    Turnstile,
    Fat,
    Bar,
    Dot,
    Caret,
    At,
    Plus,
    Minus,
    EmptyCtx,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Ident(x) => return write!(f, "`{x}`"),
            Tok::Number(n) => return write!(f, "`{n}`"),
            Tok::Arrow => "->",
            Tok::And => "/\\",
            Tok::Or => "\\/",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::LBrace => "{",
            Tok::RBrace => "}",
            Tok::Comma => ",",
            Tok::Colon => ":",
            Tok::Cons => "::",
            Tok::Turnstile => "|-",
            Tok::Fat => "=>",
            Tok::Bar => "|",
            Tok::Dot => ".",
            Tok::Caret => "^",
            Tok::At => "@",
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::EmptyCtx => "·",
            Tok::Eof => return f.write_str("end of input"),
        };
        write!(f, "`{s}`")
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, Default)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
}

impl ParseError {
    pub fn new(pos: Pos, message: impl Into<String>) -> ParseError {
        ParseError { pos, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.pos.line, self.pos.column, self.message)
    }
}

impl std::error::Error for ParseError {}

pub fn tokenize(src: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column };
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' || c == '\'' {
                    s.push(c);
                    bump(&mut chars);
                } else {
                    break;
                }
            }
            out.push((Tok::Ident(s), pos));
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    s.push(c);
                    bump(&mut chars);
                } else {
                    break;
                }
            }
            let n = s.parse().map_err(|_| ParseError::new(pos, "number too large"))?;
            out.push((Tok::Number(n), pos));
            continue;
        }
        bump(&mut chars);
        let next = chars.peek().copied();
        let two = |chars: &mut std::iter::Peekable<std::str::Chars>, column: &mut usize, t: Tok| {
            chars.next();
            *column += 1;
            t
        };
        let tok = match (c, next) {
            ('-', Some('>')) => two(&mut chars, &mut column, Tok::Arrow),
            ('/', Some('\\')) => two(&mut chars, &mut column, Tok::And),
            ('\\', Some('/')) => two(&mut chars, &mut column, Tok::Or),
            (':', Some(':')) => two(&mut chars, &mut column, Tok::Cons),
            ('|', Some('-')) => two(&mut chars, &mut column, Tok::Turnstile),
            ('=', Some('>')) => two(&mut chars, &mut column, Tok::Fat),
            ('-', _) => Tok::Minus,
            ('+', _) => Tok::Plus,
            ('(', _) => Tok::LParen,
            (')', _) => Tok::RParen,
            ('[', _) => Tok::LBracket,
            (']', _) => Tok::RBracket,
            ('{', _) => Tok::LBrace,
            ('}', _) => Tok::RBrace,
            (',', _) => Tok::Comma,
            (':', _) => Tok::Colon,
            ('|', _) => Tok::Bar,
            ('.', _) => Tok::Dot,
            ('^', _) => Tok::Caret,
            ('@', _) => Tok::At,
            ('·', _) => Tok::EmptyCtx,
            _ => return Err(ParseError::new(pos, format!("unexpected character `{c}`"))),
        };
        out.push((tok, pos));
    }
    out.push((Tok::Eof, Pos { line, column }));
    Ok(out)
}
