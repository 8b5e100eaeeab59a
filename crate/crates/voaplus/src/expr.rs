//! The expression mini-language of the command line: whitespace-separated
//! operators applied right-to-left to a terminal state.
//!
//! ```text
//! expr   := op* state
//! op     := 'a(' INT ')' | 'L(' INT ')' | '[' expr ']_' INT
//! state  := '1' | 'E' INT? | 'F' INT? | 'J' | 'w'
//! ```
//!
//! `a(n)` is the Heisenberg mode, `L(n)` the Virasoro mode, `[v]_n` the
//! general mode application, `w` the conformal vector; `E`/`F` default to
//! the charge-1 combinations and `E2` means the charge-2 one.

use crate::fock::FockElement;
use crate::vertex::{Engine, Named, VertexError};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum State {
    One,
    E(u32),
    F(u32),
    J,
    Omega,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Op {
    Alpha(i64),
    Virasoro(i64),
    Mode(Box<ExprAst>, i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprAst {
    pub ops: Vec<Op>,
    pub state: State,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at byte {}: found {}, expected {}",
            self.offset,
            self.found,
            self.expected.join(" | ")
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Alpha(i64),
    Vir(i64),
    Open,
    CloseMode(i64),
    One,
    E(u32),
    F(u32),
    J,
    Omega,
}

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn err(&self, expected: Vec<&'static str>) -> ParseError {
        let found = match self.bytes.get(self.pos) {
            Some(&c) => format!("{:?}", c as char),
            None => "end of input".to_string(),
        };
        ParseError {
            offset: self.pos,
            expected,
            found,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') || self.bytes.get(self.pos) == Some(&b'+') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .map_or(false, |c| c.is_ascii_digit())
        {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(self.err(vec!["integer"]));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err(vec!["integer"]))
    }

    fn expect(&mut self, c: u8, what: &'static str) -> Result<(), ParseError> {
        if self.bytes.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(vec![what]))
        }
    }

    fn optional_index(&mut self) -> Result<u32, ParseError> {
        if self
            .bytes
            .get(self.pos)
            .map_or(false, |c| c.is_ascii_digit())
        {
            let n = self.integer()?;
            if n < 1 {
                return Err(self.err(vec!["positive sector index"]));
            }
            Ok(n as u32)
        } else {
            Ok(1)
        }
    }

    fn next(&mut self) -> Result<Option<Token>, ParseError> {
        self.skip_ws();
        let c = match self.bytes.get(self.pos) {
            Some(&c) => c,
            None => return Ok(None),
        };
        let tok = match c {
            b'a' | b'L' => {
                self.pos += 1;
                self.expect(b'(', "'('")?;
                let n = self.integer()?;
                self.expect(b')', "')'")?;
                if c == b'a' {
                    Token::Alpha(n)
                } else {
                    Token::Vir(n)
                }
            }
            b'[' => {
                self.pos += 1;
                Token::Open
            }
            b']' => {
                self.pos += 1;
                self.expect(b'_', "'_'")?;
                Token::CloseMode(self.integer()?)
            }
            b'1' => {
                self.pos += 1;
                Token::One
            }
            b'E' => {
                self.pos += 1;
                Token::E(self.optional_index()?)
            }
            b'F' => {
                self.pos += 1;
                Token::F(self.optional_index()?)
            }
            b'J' => {
                self.pos += 1;
                Token::J
            }
            b'w' => {
                self.pos += 1;
                Token::Omega
            }
            _ => {
                return Err(self.err(vec!["a(", "L(", "[", "1", "E", "F", "J", "w"]));
            }
        };
        Ok(Some(tok))
    }
}

/// Parse an expression; errors carry the byte offset and expected tokens.
pub fn parse_expr(text: &str) -> Result<ExprAst, ParseError> {
    let mut lx = Lexer {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let ast = parse_inner(&mut lx)?;
    lx.skip_ws();
    if lx.pos != lx.bytes.len() {
        return Err(lx.err(vec!["end of input"]));
    }
    Ok(ast)
}

fn parse_inner(lx: &mut Lexer) -> Result<ExprAst, ParseError> {
    let mut ops = Vec::new();
    loop {
        let before = lx.pos;
        let tok = lx
            .next()?
            .ok_or_else(|| lx.err(vec!["operator", "state"]))?;
        match tok {
            Token::Alpha(n) => ops.push(Op::Alpha(n)),
            Token::Vir(n) => ops.push(Op::Virasoro(n)),
            Token::Open => {
                let inner = parse_inner(lx)?;
                lx.skip_ws();
                let at = lx.pos;
                match lx.next()? {
                    Some(Token::CloseMode(n)) => ops.push(Op::Mode(Box::new(inner), n)),
                    other => {
                        return Err(ParseError {
                            offset: at,
                            expected: vec!["]_INT"],
                            found: format!("{:?}", other),
                        })
                    }
                }
            }
            Token::One => return Ok(ExprAst { ops, state: State::One }),
            Token::E(m) => return Ok(ExprAst { ops, state: State::E(m) }),
            Token::F(m) => return Ok(ExprAst { ops, state: State::F(m) }),
            Token::J => return Ok(ExprAst { ops, state: State::J }),
            Token::Omega => {
                return Ok(ExprAst {
                    ops,
                    state: State::Omega,
                })
            }
            Token::CloseMode(_) => {
                lx.pos = before;
                return Err(lx.err(vec!["state before ']'"]));
            }
        }
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            State::One => write!(f, "1"),
            State::E(1) => write!(f, "E"),
            State::E(m) => write!(f, "E{}", m),
            State::F(1) => write!(f, "F"),
            State::F(m) => write!(f, "F{}", m),
            State::J => write!(f, "J"),
            State::Omega => write!(f, "w"),
        }
    }
}

impl fmt::Display for ExprAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for op in &self.ops {
            match op {
                Op::Alpha(n) => write!(f, "a({}) ", n)?,
                Op::Virasoro(n) => write!(f, "L({}) ", n)?,
                Op::Mode(inner, n) => write!(f, "[{}]_{} ", inner, n)?,
            }
        }
        write!(f, "{}", self.state)
    }
}

/// Evaluate an AST through the mode engine: the state first, then the
/// operators right-to-left.
pub fn eval(eng: &Engine, ast: &ExprAst) -> Result<FockElement, VertexError> {
    let mut acc = match ast.state {
        State::One => eng.build_named(Named::One)?,
        State::E(m) => eng.build_named(Named::Em(m as i64))?,
        State::F(m) => eng.build_named(Named::Fm(m as i64))?,
        State::J => eng.j_vector(),
        State::Omega => eng.omega(),
    };
    for op in ast.ops.iter().rev() {
        acc = match op {
            Op::Alpha(n) => eng.apply_alpha(*n, &acc),
            Op::Virasoro(n) => eng.virasoro(*n, &acc)?,
            Op::Mode(inner, n) => {
                let v = eval(eng, inner)?;
                eng.mode_apply(&v, *n, &acc)?
            }
        };
    }
    Ok(acc)
}
