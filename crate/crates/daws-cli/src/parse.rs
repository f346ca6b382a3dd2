//! The textual grammar, whitespace-insensitive:
//!
//! ```text
//! element := "X[" weight "]" ( "Y[" intvec "]" )? ( word )?
//! weight  := ("w:")? intvec ";" int ";" int
//! intvec  := int ("," int)*
//! word    := ("s" digit)+          -- finite simple reflections only
//! root    := intvec ";" int ";" int
//! ```
//!
//! The weight's finite part is read in simple-root coordinates by default;
//! the `w:` prefix switches to fundamental-weight coordinates.

use std::sync::Arc;

use daws::{
    AffineWeight, AffineWeylElement, DoubleAffineRoot, Root, RootSystem, SemigroupElement, Weight,
    WeylElement,
};

use crate::CliError;

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Cursor<'a> {
        Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn error<T>(&self, msg: &str) -> Result<T, CliError> {
        Err(CliError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn eat(&mut self, expected: u8) -> Result<(), CliError> {
        match self.peek() {
            Some(b) if b == expected => {
                self.pos += 1;
                Ok(())
            }
            _ => self.error(&format!("expected '{}'", expected as char)),
        }
    }

    fn eat_if(&mut self, expected: u8) -> bool {
        if self.peek() == Some(expected) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.bytes[self.pos..].starts_with(s.as_bytes()) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<i64, CliError> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits_start {
            self.pos = start;
            return self.error("expected an integer");
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<i64>()
            .map_err(|_| CliError::Syntax {
                pos: start,
                msg: "integer out of range".to_string(),
            })
    }

    fn intvec(&mut self) -> Result<Vec<i64>, CliError> {
        let mut out = vec![self.int()?];
        while self.eat_if(b',') {
            out.push(self.int()?);
        }
        Ok(out)
    }

    fn end(&mut self) -> Result<(), CliError> {
        self.skip_ws();
        if self.pos != self.bytes.len() {
            return self.error("trailing input");
        }
        Ok(())
    }
}

fn check_rank(c: &Cursor, v: &[i64], rank: usize) -> Result<(), CliError> {
    if v.len() != rank {
        return Err(CliError::Syntax {
            pos: c.pos,
            msg: format!("expected {} coordinates, found {}", rank, v.len()),
        });
    }
    Ok(())
}

/// Rank implied by the first coordinate vector in an element or root literal,
/// used when --rank is not given.
pub fn infer_rank(text: &str) -> Option<usize> {
    let mut c = Cursor::new(text);
    if c.eat_str("X") {
        c.eat(b'[').ok()?;
        let _ = c.eat_str("w:");
    }
    c.intvec().ok().map(|v| v.len())
}

pub fn parse_element(sys: &Arc<RootSystem>, text: &str) -> Result<SemigroupElement, CliError> {
    let rank = sys.rank();
    let mut c = Cursor::new(text);
    if !c.eat_str("X") {
        return c.error("expected 'X['");
    }
    c.eat(b'[')?;
    let in_weight_coords = c.eat_str("w:");
    let mu_coords = c.intvec()?;
    check_rank(&c, &mu_coords, rank)?;
    c.eat(b';')?;
    let m = c.int()?;
    c.eat(b';')?;
    let l = c.int()?;
    c.eat(b']')?;

    let mu = if in_weight_coords {
        Weight::new(sys, mu_coords)
    } else {
        Weight::new(sys, sys.root_to_weight_coords(&mu_coords))
    };
    let zeta = AffineWeight::new(mu, m, l);

    let mut lambda = vec![0i64; rank];
    if c.eat_str("Y") {
        c.eat(b'[')?;
        lambda = c.intvec()?;
        check_rank(&c, &lambda, rank)?;
        c.eat(b']')?;
    }

    let mut w = WeylElement::identity(sys);
    while c.peek() == Some(b's') {
        c.pos += 1;
        let d = match c.peek() {
            Some(d @ b'1'..=b'9') => (d - b'1') as usize,
            _ => return c.error("expected a generator digit after 's'"),
        };
        c.pos += 1;
        if d >= rank {
            return Err(CliError::Syntax {
                pos: c.pos - 1,
                msg: format!("generator s{} exceeds rank {}", d + 1, rank),
            });
        }
        w = w.compose(&WeylElement::simple(sys, d).map_err(CliError::domain)?);
    }
    c.end()?;

    SemigroupElement::from_parts(zeta, AffineWeylElement::new(lambda, w)).map_err(CliError::domain)
}

pub fn parse_root(sys: &Arc<RootSystem>, text: &str) -> Result<DoubleAffineRoot, CliError> {
    let mut c = Cursor::new(text);
    let nu_coords = c.intvec()?;
    check_rank(&c, &nu_coords, sys.rank())?;
    c.eat(b';')?;
    let r = c.int()?;
    c.eat(b';')?;
    let j = c.int()?;
    c.end()?;
    let nu = Root::new(sys, nu_coords).map_err(CliError::domain)?;
    Ok(DoubleAffineRoot::new(nu, r, j))
}

/// Finite root argument: either a bare coordinate vector or a full root
/// literal whose finite part is taken.
pub fn parse_finite_root(sys: &Arc<RootSystem>, text: &str) -> Result<Root, CliError> {
    if text.contains(';') {
        return Ok(parse_root(sys, text)?.fin().clone());
    }
    let mut c = Cursor::new(text);
    let nu_coords = c.intvec()?;
    check_rank(&c, &nu_coords, sys.rank())?;
    c.end()?;
    Root::new(sys, nu_coords).map_err(CliError::domain)
}
