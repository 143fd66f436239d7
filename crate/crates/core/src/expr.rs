//! Graph expressions such as `join(cycle(4),prod(path(2),complete(3)))`.
//!
//! ```text
//! expr  := atom | "join" "(" expr ("," expr)* ")" | "prod" "(" expr "," expr ")"
//! atom  := "path(n)" | "cycle(n)" | "complete(n)" | "kbip(a,b)" | "kbip_mm(n)"
//!        | "ttree(k)" | "pendant_path(e)" | "caterpillar(e)"
//! ```
//!
//! Whitespace is ignored between tokens. Positions in errors are byte offsets.

use crate::error::{Error, Result};
use crate::graph::{cartesian_product, generate, join, Family, FamilySpec, Graph};

pub fn parse_expression(text: &str) -> Result<Graph> {
    let mut p = Parser { src: text, pos: 0 };
    let g = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("trailing input"));
    }
    Ok(g)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, ch: char) -> Result<()> {
        self.skip_ws();
        if self.rest().starts_with(ch) {
            self.pos += ch.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected `{ch}`")))
        }
    }

    fn peek_is(&mut self, ch: char) -> bool {
        self.skip_ws();
        self.rest().starts_with(ch)
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &str {
        self.skip_ws();
        let start = self.pos;
        let len = self.rest().find(|c| !f(c)).unwrap_or(self.rest().len());
        self.pos += len;
        &self.src[start..self.pos]
    }

    fn number(&mut self) -> Result<usize> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Err(self.error("expected a number"));
        }
        digits.parse().map_err(|_| Error::Syntax {
            pos: start,
            msg: "number out of range".into(),
        })
    }

    fn numbers(&mut self) -> Result<Vec<usize>> {
        let mut out = vec![self.number()?];
        while self.peek_is(',') {
            self.eat(',')?;
            out.push(self.number()?);
        }
        Ok(out)
    }

    fn expr(&mut self) -> Result<Graph> {
        self.skip_ws();
        let start = self.pos;
        let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_').to_owned();
        if name.is_empty() {
            return Err(self.error("expected a graph expression"));
        }
        self.eat('(')?;
        let g = match name.as_str() {
            "join" => {
                let mut parts = vec![self.expr()?];
                while self.peek_is(',') {
                    self.eat(',')?;
                    parts.push(self.expr()?);
                }
                let refs: Vec<&Graph> = parts.iter().collect();
                join(&refs)?
            }
            "prod" => {
                let a = self.expr()?;
                self.eat(',')?;
                let b = self.expr()?;
                cartesian_product(&a, &b)?
            }
            _ => {
                let family = match name.as_str() {
                    "path" => Family::Path,
                    "cycle" => Family::Cycle,
                    "complete" => Family::Complete,
                    "kbip" => Family::CompleteBipartite,
                    "kbip_mm" => Family::BipartiteMinusMatching,
                    "ttree" => Family::TTree,
                    "pendant_path" => Family::PendantPath,
                    "caterpillar" => Family::CaterpillarG6,
                    _ => {
                        return Err(Error::Syntax {
                            pos: start,
                            msg: format!("unknown constructor `{name}`"),
                        })
                    }
                };
                generate(&FamilySpec::new(family, self.numbers()?))?
            }
        };
        self.eat(')')?;
        Ok(g)
    }
}
