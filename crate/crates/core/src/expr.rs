//! Surface syntax for enveloping-algebra elements and scalars.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary | '/' INT)*
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? INT)?
//! atom   := INT | IDENT | '(' expr ')'
//! ```
//!
//! `*` is the noncommutative product and is never implicit. `i` is the
//! imaginary unit; other identifiers resolve to generators of the target
//! algebra first, then to declared scalar symbols. A negative power is only
//! accepted on a unit scalar such as `eps`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::LieAlgebra;
use crate::scalar::{GaussianRational, Scalar, ScalarError, DEFAULT_SYMBOLS};
use crate::uea::{Element, Uea, UeaError, Word};

/// Longest word averaged over its orderings by symmetrization.
const MAX_SYMMETRIZED_FACTORS: usize = 8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExprError {
    #[error("{line}:{col}: syntax error: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: unknown identifier `{name}`")]
    UnknownIdentifier { line: usize, col: usize, name: String },
    #[error("generator `{0}` is not allowed in a scalar expression")]
    GeneratorInScalar(String),
    #[error("negative power of a non-invertible expression")]
    NegativePower,
    #[error("product of {0} factors is too long to symmetrize")]
    TooManyFactors(usize),
    #[error(transparent)]
    Uea(#[from] UeaError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// How noncommuting factors of a product are ordered on evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ordering {
    /// Factors multiplied exactly as written.
    Verbatim,
    /// Every monomial replaced by the average over all orderings of its
    /// letters (Weyl ordering).
    Symmetrized,
}

impl fmt::Display for Ordering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ordering::Verbatim => write!(f, "verbatim"),
            Ordering::Symmetrized => write!(f, "symmetrized"),
        }
    }
}

/// Parse tree with identifiers already resolved.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Imag,
    Symbol(String),
    Gen { index: usize, name: String },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, BigInt),
    Pow(Box<Expr>, i32),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ExprError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut col) = (1, 1);
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            k += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            k += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Token { tok, line: l0, col: c0 });
            k += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[start..k].iter().collect();
            col += k - start;
            out.push(Token { tok: Tok::Int(digits.parse().expect("ascii digits")), line: l0, col: c0 });
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            col += k - start;
            out.push(Token { tok: Tok::Ident(chars[start..k].iter().collect()), line: l0, col: c0 });
            continue;
        }
        return Err(ExprError::Syntax { line: l0, col: c0, msg: format!("unexpected character `{c}`") });
    }
    out.push(Token { tok: Tok::End, line, col });
    Ok(out)
}

/// Identifier lookup for the parser.
pub struct Resolver<'a> {
    generators: &'a [String],
    symbols: Vec<String>,
}

impl<'a> Resolver<'a> {
    /// Generators of `algebra`, its symbols and the default symbols.
    pub fn for_algebra(algebra: &'a LieAlgebra) -> Self {
        let mut symbols: Vec<String> = algebra.symbols().to_vec();
        for s in DEFAULT_SYMBOLS {
            if !symbols.iter().any(|x| x == s) {
                symbols.push(s.to_string());
            }
        }
        Resolver { generators: algebra.generator_names(), symbols }
    }

    /// Scalars only.
    pub fn scalars(symbols: &[String]) -> Resolver<'static> {
        let mut all: Vec<String> = symbols.to_vec();
        for s in DEFAULT_SYMBOLS {
            if !all.iter().any(|x| x == s) {
                all.push(s.to_string());
            }
        }
        Resolver { generators: &[], symbols: all }
    }
}

struct Parser<'r, 'a> {
    toks: Vec<Token>,
    pos: usize,
    resolver: &'r Resolver<'a>,
}

impl Parser<'_, '_> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, t: &Token, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax { line: t.line, col: t.col, msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.next();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.next();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Slash => {
                    self.next();
                    let t = self.next();
                    match t.tok {
                        Tok::Int(n) if !n.is_zero() => lhs = Expr::Div(Box::new(lhs), n),
                        Tok::Int(_) => return self.err(&t, "division by zero"),
                        _ => return self.err(&t, "`/` must be followed by an integer literal"),
                    }
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.peek().tok == Tok::Minus {
            self.next();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.next();
        let negative = if self.peek().tok == Tok::Minus {
            self.next();
            true
        } else {
            false
        };
        let t = self.next();
        let Tok::Int(n) = &t.tok else {
            return self.err(&t, "`^` must be followed by an integer exponent");
        };
        let Ok(mut e) = i32::try_from(n.clone()) else {
            return self.err(&t, "exponent out of range");
        };
        if negative {
            e = -e;
        }
        Ok(Expr::Pow(Box::new(base), e))
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let t = self.next();
        match &t.tok {
            Tok::Int(n) => Ok(Expr::Int(n.clone())),
            Tok::Ident(name) => {
                if name == "i" {
                    return Ok(Expr::Imag);
                }
                if let Some(index) = self.resolver.generators.iter().position(|g| g == name) {
                    return Ok(Expr::Gen { index, name: name.clone() });
                }
                if self.resolver.symbols.iter().any(|s| s == name) {
                    return Ok(Expr::Symbol(name.clone()));
                }
                Err(ExprError::UnknownIdentifier { line: t.line, col: t.col, name: name.clone() })
            }
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.next();
                if close.tok != Tok::RParen {
                    return self.err(&close, "expected `)`");
                }
                Ok(inner)
            }
            Tok::End => self.err(&t, "unexpected end of input"),
            other => self.err(&t, format!("unexpected token {other:?}")),
        }
    }
}

/// Parse `text` into a resolved tree.
pub fn parse(text: &str, resolver: &Resolver<'_>) -> Result<Expr, ExprError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, resolver };
    let e = p.expr()?;
    let t = p.peek().clone();
    if t.tok != Tok::End {
        return p.err(&t, "unexpected trailing input");
    }
    Ok(e)
}

/// Parse and evaluate (verbatim ordering) into a normal-form element.
pub fn parse_expression(text: &str, algebra: &LieAlgebra) -> Result<Element, ExprError> {
    let tree = parse(text, &Resolver::for_algebra(algebra))?;
    tree.evaluate(&Uea::new(algebra), Ordering::Verbatim)
}

/// Parse a pure scalar, e.g. a structure-constant coefficient.
pub fn parse_scalar(text: &str, symbols: &[String]) -> Result<Scalar, ExprError> {
    parse(text, &Resolver::scalars(symbols))?.to_scalar()
}

impl Expr {
    /// Evaluate as a scalar; generators are rejected.
    pub fn to_scalar(&self) -> Result<Scalar, ExprError> {
        Ok(match self {
            Expr::Int(n) => {
                Scalar::constant(GaussianRational::new(BigRational::from_integer(n.clone()), BigRational::zero()))
            }
            Expr::Imag => Scalar::i(),
            Expr::Symbol(s) => Scalar::symbol(s),
            Expr::Gen { name, .. } => return Err(ExprError::GeneratorInScalar(name.clone())),
            Expr::Neg(a) => -a.to_scalar()?,
            Expr::Add(a, b) => a.to_scalar()? + b.to_scalar()?,
            Expr::Sub(a, b) => a.to_scalar()? - b.to_scalar()?,
            Expr::Mul(a, b) => a.to_scalar()? * b.to_scalar()?,
            Expr::Div(a, n) => a.to_scalar()?.scale(&reciprocal(n)),
            Expr::Pow(a, e) => a.to_scalar()?.pow(*e)?,
        })
    }

    /// Evaluate to a normal-form element.
    pub fn evaluate(&self, uea: &Uea<'_>, ordering: Ordering) -> Result<Element, ExprError> {
        match ordering {
            Ordering::Verbatim => self.evaluate_ordered(uea),
            Ordering::Symmetrized => Ok(uea.normal_form(&weyl_symmetrize(&self.expand_free()?)?)?),
        }
    }

    fn evaluate_ordered(&self, uea: &Uea<'_>) -> Result<Element, ExprError> {
        Ok(match self {
            Expr::Int(_) | Expr::Imag | Expr::Symbol(_) => Element::scalar(self.to_scalar()?),
            Expr::Gen { index, .. } => Element::generator(*index),
            Expr::Neg(a) => -&a.evaluate_ordered(uea)?,
            Expr::Add(a, b) => &a.evaluate_ordered(uea)? + &b.evaluate_ordered(uea)?,
            Expr::Sub(a, b) => &a.evaluate_ordered(uea)? - &b.evaluate_ordered(uea)?,
            Expr::Div(a, n) => a.evaluate_ordered(uea)?.scale(&Scalar::constant(reciprocal(n))),
            Expr::Mul(a, b) => uea.product(&a.evaluate_ordered(uea)?, &b.evaluate_ordered(uea)?)?,
            Expr::Pow(a, e) => {
                let base = a.evaluate_ordered(uea)?;
                if *e >= 0 {
                    uea.power(&base, e.unsigned_abs())?
                } else {
                    scalar_power(&base, *e)?
                }
            }
        })
    }

    /// Expand into words of the free algebra, without any reordering.
    pub fn expand_free(&self) -> Result<Element, ExprError> {
        Ok(match self {
            Expr::Int(_) | Expr::Imag | Expr::Symbol(_) => Element::scalar(self.to_scalar()?),
            Expr::Gen { index, .. } => Element::generator(*index),
            Expr::Neg(a) => -&a.expand_free()?,
            Expr::Add(a, b) => &a.expand_free()? + &b.expand_free()?,
            Expr::Sub(a, b) => &a.expand_free()? - &b.expand_free()?,
            Expr::Div(a, n) => a.expand_free()?.scale(&Scalar::constant(reciprocal(n))),
            Expr::Mul(a, b) => a.expand_free()?.concat(&b.expand_free()?),
            Expr::Pow(a, e) => {
                let base = a.expand_free()?;
                if *e >= 0 {
                    let mut acc = Element::unit();
                    for _ in 0..*e {
                        acc = acc.concat(&base);
                    }
                    acc
                } else {
                    scalar_power(&base, *e)?
                }
            }
        })
    }
}

fn scalar_power(base: &Element, e: i32) -> Result<Element, ExprError> {
    let s = base.as_scalar().ok_or(ExprError::NegativePower)?;
    Ok(Element::scalar(s.pow(e).map_err(|_| ExprError::NegativePower)?))
}

/// Replace every word by the average of all orderings of its letters.
/// The result is not normalized.
pub fn weyl_symmetrize(free: &Element) -> Result<Element, ExprError> {
    let mut out = Element::zero();
    for (word, coeff) in free.terms() {
        if word.len() > MAX_SYMMETRIZED_FACTORS {
            return Err(ExprError::TooManyFactors(word.len()));
        }
        let mut letters: Vec<u16> = word.letters().to_vec();
        letters.sort_unstable();
        let mut orderings = Vec::new();
        loop {
            orderings.push(Word(letters.clone()));
            if !next_permutation(&mut letters) {
                break;
            }
        }
        let share = coeff * &Scalar::rational(1, orderings.len() as i64);
        for w in orderings {
            out.add_term(w, share.clone());
        }
    }
    Ok(out)
}

/// Lexicographic successor; false once the sequence is the last one.
fn next_permutation(v: &mut [u16]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn reciprocal(n: &BigInt) -> GaussianRational {
    GaussianRational::new(BigRational::new(BigInt::one(), n.clone()), BigRational::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn single_generator() {
        let g = catalog::galilei_central().unwrap();
        let e = parse_expression("M", &g).unwrap();
        assert_eq!(e, Element::generator(g.index_of("M").unwrap()));
    }

    #[test]
    fn imaginary_times_eps_squared() {
        let p = catalog::poincare().unwrap();
        let e = parse_expression("i*eps^2*Jz", &p).unwrap();
        let jz = Element::generator(p.index_of("Jz").unwrap());
        assert_eq!(e, jz.scale(&(&Scalar::i() * &Scalar::eps_pow(2))));
        assert_eq!(e.display(&p).to_string(), "i*eps^2*Jz");
    }

    #[test]
    fn casimir_text_round_trips() {
        let p = catalog::poincare().unwrap();
        let e = parse_expression("H^2 - Px*Px - Py*Py - Pz*Pz", &p).unwrap();
        let printed = e.display(&p).to_string();
        assert_eq!(printed, "H^2 - Px^2 - Py^2 - Pz^2");
        assert_eq!(parse_expression(&printed, &p).unwrap(), e);
    }

    #[test]
    fn errors_carry_position() {
        let p = catalog::poincare().unwrap();
        match parse_expression("H +\n  Foo", &p) {
            Err(ExprError::UnknownIdentifier { line, col, name }) => {
                assert_eq!((line, col, name.as_str()), (2, 3, "Foo"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_expression("H H", &p), Err(ExprError::Syntax { line: 1, col: 3, .. })));
        assert!(matches!(parse_expression("(H", &p), Err(ExprError::Syntax { .. })));
        assert!(matches!(parse_expression("H/0", &p), Err(ExprError::Syntax { .. })));
    }

    #[test]
    fn precedence() {
        let p = catalog::poincare().unwrap();
        // ^ binds tighter than *, unary minus applies to the power
        let a = parse_expression("-Px^2*2", &p).unwrap();
        let b = parse_expression("-2*Px*Px", &p).unwrap();
        assert_eq!(a, b);
        let half = parse_expression("(Px*Px)/2", &p).unwrap();
        assert_eq!(half, parse_expression("1/2*Px^2", &p).unwrap());
    }

    #[test]
    fn negative_powers_only_for_units() {
        let p = catalog::poincare().unwrap();
        assert!(parse_expression("eps^-2*Px", &p).is_ok());
        assert_eq!(parse_expression("Px^-1", &p), Err(ExprError::NegativePower));
        assert!(parse_expression("m0^-1", &p).is_err());
    }

    #[test]
    fn scalar_parsing() {
        let s = parse_scalar("-(1/2)*i*eps^2 + c", &[]).unwrap();
        let expected = &(&Scalar::rational(-1, 2) * &Scalar::i()) * &Scalar::eps_pow(2);
        assert_eq!(s, &expected + &Scalar::symbol("c"));
        assert!(matches!(parse_scalar("q", &[]), Err(ExprError::UnknownIdentifier { .. })));
        assert!(parse_scalar("q", &["q".to_string()]).is_ok());
    }

    #[test]
    fn symmetrized_product_is_weyl_average() {
        // sym(Px*KGx) = (Px*KGx + KGx*Px)/2 = KGx*Px - i/2 M
        let g = catalog::galilei_central().unwrap();
        let uea = Uea::new(&g);
        let tree = parse("Px*KGx", &Resolver::for_algebra(&g)).unwrap();
        let sym = tree.evaluate(&uea, Ordering::Symmetrized).unwrap();
        let expected = parse_expression("KGx*Px - i/2*M", &g).unwrap();
        assert_eq!(sym, expected);
    }
}
