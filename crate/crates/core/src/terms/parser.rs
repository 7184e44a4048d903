// term  := join
// join  := diff  { "v" diff }
// diff  := meet  { "\" meet }
// meet  := isect { "^" isect }
// isect := atom  { "&" atom }
// atom  := "0" | "x" digits | "(" term ")"

use super::{Op, Term};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Zero,
    Var(u32),
    Op(Op),
    Open,
    Close,
    End,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    /// Next token and its byte offset.
    fn next(&mut self) -> Result<(Tok, usize)> {
        self.skip_ws();
        let start = self.pos;
        let Some(c) = self.src[start..].chars().next() else {
            return Ok((Tok::End, start));
        };
        self.pos += c.len_utf8();
        let tok = match c {
            '0' => Tok::Zero,
            '(' => Tok::Open,
            ')' => Tok::Close,
            '&' => Tok::Op(Op::Isect),
            '^' => Tok::Op(Op::Meet),
            '\\' => Tok::Op(Op::Diff),
            'v' => Tok::Op(Op::Join),
            'x' => {
                let digits = self.src[self.pos..]
                    .bytes()
                    .take_while(u8::is_ascii_digit)
                    .count();
                if digits == 0 {
                    return Err(Error::parse(self.pos, "expected digits after 'x'"));
                }
                let text = &self.src[self.pos..self.pos + digits];
                self.pos += digits;
                match text.parse::<u32>() {
                    Ok(i) if i >= 1 => Tok::Var(i),
                    _ => return Err(Error::parse(start, format!("invalid variable x{text}"))),
                }
            }
            other => return Err(Error::parse(start, format!("unknown token {other:?}"))),
        };
        Ok((tok, start))
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    peeked: (Tok, usize),
}

const LEVELS: [Op; 4] = [Op::Join, Op::Diff, Op::Meet, Op::Isect];

impl<'a> Parser<'a> {
    fn advance(&mut self) -> Result<(Tok, usize)> {
        let next = self.lexer.next()?;
        Ok(std::mem::replace(&mut self.peeked, next))
    }

    fn binary(&mut self, level: usize) -> Result<Term> {
        if level == LEVELS.len() {
            return self.atom();
        }
        let op = LEVELS[level];
        let mut lhs = self.binary(level + 1)?;
        while self.peeked.0 == Tok::Op(op) {
            self.advance()?;
            let rhs = self.binary(level + 1)?;
            lhs = Term::binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<Term> {
        match self.advance()? {
            (Tok::Zero, _) => Ok(Term::Zero),
            (Tok::Var(i), _) => Ok(Term::Var(i)),
            (Tok::Open, _) => {
                let inner = self.binary(0)?;
                match self.advance()? {
                    (Tok::Close, _) => Ok(inner),
                    (_, pos) => Err(Error::parse(pos, "expected ')'")),
                }
            }
            (Tok::End, pos) => Err(Error::parse(pos, "unexpected end of input")),
            (_, pos) => Err(Error::parse(pos, "expected '0', a variable or '('")),
        }
    }
}

/// Parses a term; errors carry the byte offset of the offending token.
pub fn parse(text: &str) -> Result<Term> {
    let mut lexer = Lexer { src: text, pos: 0 };
    let peeked = lexer.next()?;
    let mut parser = Parser { lexer, peeked };
    let term = parser.binary(0)?;
    match parser.peeked {
        (Tok::End, _) => Ok(term),
        (_, pos) => Err(Error::parse(pos, "unexpected trailing input")),
    }
}
