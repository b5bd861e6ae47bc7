//! Textual link/tangle specifications: parser and serializer.
//!
//! Grammar (whitespace carries no meaning and is stripped):
//!
//! ```text
//! spec     := braid | pd | rational | pretzel | montesinos | named
//!           | mirror | sum | disjoint
//! braid    := "braid:" int ":[" ints? "]"
//! pd       := "pd:[" "[" int "," int "," int "," int "]" ("," ...)* "]"
//! rational := "rational:" int "/" int
//! pretzel  := "pretzel:[" ints "]"
//! montesinos := "montesinos:[" frac ("," frac)* "]"
//! named    := "named:" key
//! mirror   := "mirror(" spec ")"
//! sum      := "sum(" spec (";" spec)+ ")"
//! disjoint := "disjoint(" spec (";" spec)+ ")"
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Normalized rational number `p/q` with `gcd(|p|,|q|) = 1` and `q >= 0`;
/// `(1, 0)` encodes the infinity tangle.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Fraction {
    p: i64,
    q: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

impl Fraction {
    pub fn new(p: i64, q: i64) -> Result<Self, Error> {
        if p == 0 && q == 0 {
            return Err(Error::ZeroFraction);
        }
        let g = gcd(p, q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 {
            p = -p;
            q = -q;
        }
        if q == 0 {
            p = 1; // infinity tangle is 1/0 regardless of sign
        }
        Ok(Fraction { p, q })
    }

    pub fn infinity() -> Self {
        Fraction { p: 1, q: 0 }
    }

    pub fn from_int(n: i64) -> Self {
        Fraction { p: n, q: 1 }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_infinity(&self) -> bool {
        self.q == 0
    }

    pub fn is_zero(&self) -> bool {
        self.p == 0
    }

    pub fn negated(&self) -> Self {
        Fraction { p: -self.p, q: self.q }
    }

    /// `q/p`, the fraction of the rotated tangle (up to mirror).
    pub fn reciprocal(&self) -> Result<Self, Error> {
        Fraction::new(self.q, self.p)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// A link or tangle specification.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum LinkSpec {
    Braid { strands: usize, word: Vec<i64> },
    Pd { crossings: Vec<[usize; 4]> },
    Rational(Fraction),
    Pretzel(Vec<i64>),
    Montesinos(Vec<Fraction>),
    Named(String),
    Mirror(Box<LinkSpec>),
    ConnSum(Vec<LinkSpec>),
    Disjoint(Vec<LinkSpec>),
}

impl LinkSpec {
    pub fn braid(strands: usize, word: Vec<i64>) -> Result<Self, Error> {
        if strands == 0 {
            return Err(Error::Invalid("braid needs at least one strand".into()));
        }
        for &letter in &word {
            if letter == 0 || letter.unsigned_abs() as usize > strands.saturating_sub(1) {
                return Err(Error::BraidLetterOutOfRange { letter, strands });
            }
        }
        Ok(LinkSpec::Braid { strands, word })
    }
}

/// Serializes a spec into the exact grammar accepted by [`parse_spec`].
pub fn serialize_spec(spec: &LinkSpec) -> String {
    match spec {
        LinkSpec::Braid { strands, word } => {
            let letters: Vec<String> = word.iter().map(|w| w.to_string()).collect();
            format!("braid:{}:[{}]", strands, letters.join(","))
        }
        LinkSpec::Pd { crossings } => {
            let rows: Vec<String> = crossings
                .iter()
                .map(|c| format!("[{},{},{},{}]", c[0], c[1], c[2], c[3]))
                .collect();
            format!("pd:[{}]", rows.join(","))
        }
        LinkSpec::Rational(f) => format!("rational:{f}"),
        LinkSpec::Pretzel(ns) => {
            let items: Vec<String> = ns.iter().map(|n| n.to_string()).collect();
            format!("pretzel:[{}]", items.join(","))
        }
        LinkSpec::Montesinos(fs) => {
            let items: Vec<String> = fs.iter().map(|f| f.to_string()).collect();
            format!("montesinos:[{}]", items.join(","))
        }
        LinkSpec::Named(key) => format!("named:{key}"),
        LinkSpec::Mirror(inner) => format!("mirror({})", serialize_spec(inner)),
        LinkSpec::ConnSum(parts) => {
            let items: Vec<String> = parts.iter().map(serialize_spec).collect();
            format!("sum({})", items.join(";"))
        }
        LinkSpec::Disjoint(parts) => {
            let items: Vec<String> = parts.iter().map(serialize_spec).collect();
            format!("disjoint({})", items.join(";"))
        }
    }
}

/// Parses a spec string. Round-trips with [`serialize_spec`]; fractions are
/// normalized on the way in.
pub fn parse_spec(text: &str) -> Result<LinkSpec, Error> {
    if let Some(offset) = text.bytes().position(|b| !b.is_ascii()) {
        return Err(Error::Syntax { offset, message: "spec must be ASCII".into() });
    }
    let stripped: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser { input: stripped.as_bytes(), pos: 0 };
    let spec = p.spec()?;
    p.expect_end()?;
    Ok(spec)
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Syntax { offset: self.pos, message: message.into() }
    }

    fn peek(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> Result<(), Error> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", b as char)))
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        if self.input[self.pos..].starts_with(s.as_bytes()) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect_end(&self) -> Result<(), Error> {
        if self.pos == self.input.len() {
            Ok(())
        } else {
            Err(self.err("trailing input"))
        }
    }

    fn int(&mut self) -> Result<i64, Error> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(self.err("expected integer"));
        }
        std::str::from_utf8(&self.input[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("integer out of range"))
    }

    fn int_list(&mut self) -> Result<Vec<i64>, Error> {
        self.eat(b'[')?;
        let mut items = Vec::new();
        if self.peek() == Some(b']') {
            self.pos += 1;
            return Ok(items);
        }
        loop {
            items.push(self.int()?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b']') => {
                    self.pos += 1;
                    return Ok(items);
                }
                _ => return Err(self.err("expected ',' or ']'")),
            }
        }
    }

    fn fraction(&mut self) -> Result<Fraction, Error> {
        let p = self.int()?;
        self.eat(b'/')?;
        let q = self.int()?;
        Fraction::new(p, q).map_err(|_| self.err("invalid fraction 0/0"))
    }

    fn spec(&mut self) -> Result<LinkSpec, Error> {
        if self.eat_str("braid:") {
            let strands = self.int()?;
            if strands < 1 {
                return Err(self.err("braid needs at least one strand"));
            }
            self.eat(b':')?;
            let word = self.int_list()?;
            let start = self.pos;
            LinkSpec::braid(strands as usize, word).map_err(|e| Error::Syntax {
                offset: start,
                message: e.to_string(),
            })
        } else if self.eat_str("pd:") {
            self.eat(b'[')?;
            let mut crossings = Vec::new();
            loop {
                let row = self.int_list()?;
                if row.len() != 4 || row.iter().any(|&v| v < 0) {
                    return Err(self.err("pd row must be four nonnegative integers"));
                }
                crossings.push([
                    row[0] as usize,
                    row[1] as usize,
                    row[2] as usize,
                    row[3] as usize,
                ]);
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b']') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.err("expected ',' or ']'")),
                }
            }
            Ok(LinkSpec::Pd { crossings })
        } else if self.eat_str("rational:") {
            Ok(LinkSpec::Rational(self.fraction()?))
        } else if self.eat_str("pretzel:") {
            let ns = self.int_list()?;
            if ns.is_empty() {
                return Err(self.err("pretzel needs at least one column"));
            }
            Ok(LinkSpec::Pretzel(ns))
        } else if self.eat_str("montesinos:") {
            self.eat(b'[')?;
            let mut fs = vec![self.fraction()?];
            loop {
                match self.peek() {
                    Some(b',') => {
                        self.pos += 1;
                        fs.push(self.fraction()?);
                    }
                    Some(b']') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.err("expected ',' or ']'")),
                }
            }
            Ok(LinkSpec::Montesinos(fs))
        } else if self.eat_str("named:") {
            let start = self.pos;
            while matches!(self.peek(), Some(c) if c != b')' && c != b';') {
                self.pos += 1;
            }
            if self.pos == start {
                return Err(self.err("expected catalog key"));
            }
            let key = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
            Ok(LinkSpec::Named(key.to_string()))
        } else if self.eat_str("mirror(") {
            let inner = self.spec()?;
            self.eat(b')')?;
            Ok(LinkSpec::Mirror(Box::new(inner)))
        } else if self.eat_str("sum(") {
            let parts = self.spec_list()?;
            Ok(LinkSpec::ConnSum(parts))
        } else if self.eat_str("disjoint(") {
            let parts = self.spec_list()?;
            Ok(LinkSpec::Disjoint(parts))
        } else {
            Err(self.err("expected a spec"))
        }
    }

    fn spec_list(&mut self) -> Result<Vec<LinkSpec>, Error> {
        let mut parts = vec![self.spec()?];
        loop {
            match self.peek() {
                Some(b';') => {
                    self.pos += 1;
                    parts.push(self.spec()?);
                }
                Some(b')') => {
                    self.pos += 1;
                    return Ok(parts);
                }
                _ => return Err(self.err("expected ';' or ')'")),
            }
        }
    }
}
