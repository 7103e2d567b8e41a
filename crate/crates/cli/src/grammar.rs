//! Family expressions such as `product(pn:7,cube:2)`.
//!
//! ```text
//! expr := ("cube" | "cross" | "pn" | "qn") ":" N
//!       | "product" "(" expr "," expr ")"
//!       | "dilate" "(" expr "," K ")"
//! ```

use std::fmt;

use ehrhart_core::polytope::{self, LatticePolytope};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrammarError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for GrammarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "family expression, column {}: {}", self.position + 1, self.message)
    }
}

impl std::error::Error for GrammarError {}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, position: usize, message: impl Into<String>) -> Result<T, GrammarError> {
        Err(GrammarError { position, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<(), GrammarError> {
        self.skip_ws();
        match self.peek() {
            Some(got) if got == c => {
                self.pos += 1;
                Ok(())
            }
            Some(got) => self.err(self.pos, format!("expected `{c}`, found `{got}`")),
            None => self.err(self.pos, format!("expected `{c}`, found end of input")),
        }
    }

    fn word(&mut self) -> (usize, &'a str) {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .find(|c: char| !c.is_ascii_alphanumeric() && c != '_')
            .unwrap_or(self.src.len() - start);
        self.pos += len;
        (start, &self.src[start..start + len])
    }

    fn number(&mut self) -> Result<u64, GrammarError> {
        let (start, w) = self.word();
        if w.is_empty() {
            return self.err(start, "expected a number");
        }
        w.parse()
            .or_else(|_| self.err(start, format!("`{w}` is not a non-negative integer")))
    }

    fn expr(&mut self) -> Result<LatticePolytope, GrammarError> {
        let (start, name) = self.word();
        let built = match name {
            "cube" | "cross" | "pn" | "qn" => {
                self.expect(':')?;
                let n = self.number()? as usize;
                match name {
                    "cube" => polytope::cube(n),
                    "cross" => polytope::crosspolytope(n),
                    "pn" => polytope::pn_family(n),
                    _ => polytope::qn_family(n),
                }
            }
            "product" => {
                self.expect('(')?;
                let p = self.expr()?;
                self.expect(',')?;
                let q = self.expr()?;
                self.expect(')')?;
                Ok(polytope::product(&p, &q))
            }
            "dilate" => {
                self.expect('(')?;
                let p = self.expr()?;
                self.expect(',')?;
                let k = self.number()?;
                self.expect(')')?;
                polytope::dilate(&p, k)
            }
            "" => return self.err(start, "expected a family name"),
            other => {
                return self.err(
                    start,
                    format!("unknown family `{other}` (cube, cross, pn, qn, product, dilate)"),
                )
            }
        };
        built.or_else(|e| self.err(start, e.to_string()))
    }
}

pub fn parse_family(src: &str) -> Result<LatticePolytope, GrammarError> {
    let mut p = Parser { src, pos: 0 };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != src.len() {
        return p.err(p.pos, format!("unexpected trailing input `{}`", &src[p.pos..]));
    }
    Ok(out)
}
