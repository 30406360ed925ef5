//! Manifold expressions such as `CP2^2 x RP2 x S1`.
//!
//! ```text
//! Expr := Term (('x' | '*') Term)*
//! Term := Atom ('^' UInt)?
//! Atom := 'CP' UInt | 'RP' UInt | 'S' UInt | 'T' UInt | '(' Expr ')'
//! ```
//!
//! Keywords are case-insensitive and whitespace between tokens is ignored.
//! `S1` is the circle and `Tn` the n-torus. Offsets in errors count
//! characters from the start of the input.

use std::fmt;

use thiserror::Error;

use crate::catalog::{product_of_kinds, BlockKind, CatalogError, ManifoldProduct, MAX_DIMENSION};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
    /// The offending character, or `None` at end of input.
    pub found: Option<char>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at offset {}: expected ", self.offset)?;
        match self.expected.as_slice() {
            [] => f.write_str("nothing")?,
            [one] => f.write_str(one)?,
            [init @ .., last] => write!(f, "{} or {}", init.join(", "), last)?,
        }
        match self.found {
            Some(c) => write!(f, ", found {c:?}"),
            None => f.write_str(", found end of input"),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ast {
    Block(BlockKind),
    Product(Vec<Ast>),
    Power(Box<Ast>, u32),
}

impl Ast {
    /// Number of factors after expanding powers, saturating.
    fn factor_count(&self) -> u64 {
        match self {
            Ast::Block(_) => 1,
            Ast::Product(terms) => terms
                .iter()
                .fold(0u64, |acc, t| acc.saturating_add(t.factor_count())),
            Ast::Power(base, k) => base.factor_count().saturating_mul(u64::from(*k)),
        }
    }

    fn expand_into(&self, out: &mut Vec<BlockKind>) {
        match self {
            Ast::Block(kind) => out.push(*kind),
            Ast::Product(terms) => terms.iter().for_each(|t| t.expand_into(out)),
            Ast::Power(base, k) => {
                for _ in 0..*k {
                    base.expand_into(out);
                }
            }
        }
    }
}

/// A parsed expression, before catalog lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldExpr {
    pub source: String,
    pub ast: Ast,
}

impl ManifoldExpr {
    pub fn parse(source: &str) -> Result<Self, ParseError> {
        let mut parser = Parser {
            chars: source.chars().collect(),
            pos: 0,
        };
        let ast = parser.expr()?;
        if let Some(c) = parser.peek() {
            return Err(ParseError {
                offset: parser.pos,
                expected: vec!["'x'", "'*'", "end of input"],
                found: Some(c),
            });
        }
        Ok(Self {
            source: source.to_owned(),
            ast,
        })
    }

    /// Flattens the expression into its list of factors, powers repeated.
    pub fn factors(&self) -> Result<Vec<BlockKind>, CatalogError> {
        let count = self.ast.factor_count();
        // Every block has dimension at least 1.
        if count > u64::from(MAX_DIMENSION) {
            return Err(CatalogError::TooLarge(format!(
                "{count} factors exceed dimension limit {MAX_DIMENSION}"
            )));
        }
        let mut out = Vec::with_capacity(count as usize);
        self.ast.expand_into(&mut out);
        Ok(out)
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&mut self) -> Option<char> {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
        self.chars.get(self.pos).copied()
    }

    fn error(&mut self, expected: Vec<&'static str>) -> ParseError {
        let found = self.peek();
        ParseError {
            offset: self.pos,
            expected,
            found,
        }
    }

    fn expr(&mut self) -> Result<Ast, ParseError> {
        let mut terms = vec![self.term()?];
        while matches!(self.peek(), Some('x' | 'X' | '*')) {
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().expect("one term")
        } else {
            Ast::Product(terms)
        })
    }

    fn term(&mut self) -> Result<Ast, ParseError> {
        let atom = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let start = self.pos;
            let power = self.uint()?;
            if power == 0 {
                self.pos = start;
                return Err(self.error(vec!["positive integer"]));
            }
            return Ok(Ast::Power(Box::new(atom), power));
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Ast, ParseError> {
        let kind = match self.peek().map(|c| c.to_ascii_uppercase()) {
            Some('C') => {
                self.pos += 1;
                self.keyword_p()?;
                BlockKind::ComplexProjective(self.uint()?)
            }
            Some('R') => {
                self.pos += 1;
                self.keyword_p()?;
                BlockKind::RealProjective(self.uint()?)
            }
            Some('S') => {
                self.pos += 1;
                match self.uint()? {
                    1 => BlockKind::Circle,
                    n => BlockKind::Sphere(n),
                }
            }
            Some('T') => {
                self.pos += 1;
                BlockKind::Torus(self.uint()?)
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error(vec!["'x'", "'*'", "')'"]));
                }
                self.pos += 1;
                return Ok(inner);
            }
            _ => return Err(self.error(vec!["'CP'", "'RP'", "'S'", "'T'", "'('"])),
        };
        Ok(Ast::Block(kind))
    }

    fn keyword_p(&mut self) -> Result<(), ParseError> {
        if matches!(self.peek(), Some('p' | 'P')) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(vec!["'P'"]))
        }
    }

    fn uint(&mut self) -> Result<u32, ParseError> {
        self.peek();
        let start = self.pos;
        let mut value: u32 = 0;
        while let Some(d) = self.chars.get(self.pos).and_then(|c| c.to_digit(10)) {
            value = match value.checked_mul(10).and_then(|v| v.checked_add(d)) {
                Some(v) => v,
                None => {
                    self.pos = start;
                    return Err(self.error(vec!["integer below 2^32"]));
                }
            };
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error(vec!["unsigned integer"]));
        }
        Ok(value)
    }
}

/// Parses an expression and builds the product manifold.
pub fn parse_manifold(source: &str) -> Result<ManifoldProduct, ExprError> {
    let expr = ManifoldExpr::parse(source)?;
    let kinds = expr.factors()?;
    Ok(product_of_kinds(&kinds)?)
}
