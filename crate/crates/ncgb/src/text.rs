//! Problem-file parsing and canonical printing.
//!
//! The input language is line-insensitive; statements end with `;`:
//!
//! ```text
//! field Q;                 # or: field GF 7;
//! vars x:1, y:2;
//! order deglex x > y;
//! gens: x^2 - y, 3/2*x*y*x - y^2*x;
//! ```
//!
//! `*` is noncommutative concatenation, `^` repeats the preceding variable,
//! and a bare `1` is the empty word. `field` defaults to the rationals and
//! `order` to deglex in declaration order when omitted.

use num::bigint::BigInt;
use num::traits::{One, ToPrimitive, Zero};

use crate::error::{Error, ParseError};
use crate::order::OrderSpec;
use crate::poly::{Context, Poly};
use crate::scalar::{FieldSpec, Scalar};
use crate::word::{Signature, Word};

/// A fully validated problem: context plus nonzero generators.
#[derive(Debug, Clone)]
pub struct ProblemFile {
    pub context: Context,
    pub generators: Vec<Poly>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Int(BigInt),
    Star,
    Caret,
    Plus,
    Minus,
    Slash,
    Comma,
    Semi,
    Colon,
    Greater,
    Eof,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Ident(s) => format!("`{s}`"),
            Token::Int(n) => format!("`{n}`"),
            Token::Star => "`*`".into(),
            Token::Caret => "`^`".into(),
            Token::Plus => "`+`".into(),
            Token::Minus => "`-`".into(),
            Token::Slash => "`/`".into(),
            Token::Comma => "`,`".into(),
            Token::Semi => "`;`".into(),
            Token::Colon => "`:`".into(),
            Token::Greater => "`>`".into(),
            Token::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Pos {
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<(Token, Pos)>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut column = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column };
        match c {
            '\n' => {
                chars.next();
                line += 1;
                column = 1;
            }
            _ if c.is_whitespace() => {
                chars.next();
                column += 1;
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                    column += 1;
                }
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                        column += 1;
                    } else {
                        break;
                    }
                }
                let n = digits.parse::<BigInt>().expect("digits");
                out.push((Token::Int(n), pos));
            }
            _ if c.is_alphabetic() || c == '_' => {
                let mut ident = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_alphanumeric() || d == '_' {
                        ident.push(d);
                        chars.next();
                        column += 1;
                    } else {
                        break;
                    }
                }
                out.push((Token::Ident(ident), pos));
            }
            _ => {
                let token = match c {
                    '*' => Token::Star,
                    '^' => Token::Caret,
                    '+' => Token::Plus,
                    '-' => Token::Minus,
                    '/' => Token::Slash,
                    ',' => Token::Comma,
                    ';' => Token::Semi,
                    ':' => Token::Colon,
                    '>' => Token::Greater,
                    other => {
                        return Err(ParseError {
                            line,
                            column,
                            message: format!("unexpected character `{other}`"),
                            expected: vec![],
                        })
                    }
                };
                chars.next();
                column += 1;
                out.push((token, pos));
            }
        }
    }
    out.push((
        Token::Eof,
        Pos { line, column },
    ));
    Ok(out)
}

struct Parser {
    tokens: Vec<(Token, Pos)>,
    index: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.index].0
    }

    fn pos(&self) -> Pos {
        self.tokens[self.index].1
    }

    fn advance(&mut self) -> Token {
        let t = self.tokens[self.index].0.clone();
        if self.index + 1 < self.tokens.len() {
            self.index += 1;
        }
        t
    }

    fn fail<T>(&self, message: impl Into<String>, expected: &[&str]) -> Result<T, ParseError> {
        let pos = self.pos();
        Err(ParseError {
            line: pos.line,
            column: pos.column,
            message: message.into(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        })
    }

    fn unexpected<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        self.fail(format!("unexpected {}", self.peek().describe()), expected)
    }

    fn expect(&mut self, token: Token, show: &str) -> Result<(), ParseError> {
        if *self.peek() == token {
            self.advance();
            Ok(())
        } else {
            self.unexpected(&[show])
        }
    }

    fn expect_int(&mut self, what: &str) -> Result<(BigInt, Pos), ParseError> {
        let pos = self.pos();
        match self.peek().clone() {
            Token::Int(n) => {
                self.advance();
                Ok((n, pos))
            }
            _ => self.unexpected(&[what]),
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<(String, Pos), ParseError> {
        let pos = self.pos();
        match self.peek().clone() {
            Token::Ident(s) => {
                self.advance();
                Ok((s, pos))
            }
            _ => self.unexpected(&[what]),
        }
    }
}

fn err_at(pos: Pos, message: impl Into<String>) -> ParseError {
    ParseError {
        line: pos.line,
        column: pos.column,
        message: message.into(),
        expected: vec![],
    }
}

/// Parses and validates a whole problem file.
pub fn parse_problem(text: &str) -> Result<ProblemFile, Error> {
    let mut p = Parser {
        tokens: lex(text)?,
        index: 0,
    };

    let mut field: Option<FieldSpec> = None;
    let mut vars: Option<(Vec<String>, Vec<u64>)> = None;
    let mut order: Option<Vec<usize>> = None;
    let mut gens: Option<Vec<Poly>> = None;

    loop {
        match p.peek().clone() {
            Token::Eof => break,
            Token::Ident(kw) => match kw.as_str() {
                "field" => {
                    let pos = p.pos();
                    if field.is_some() {
                        return Err(err_at(pos, "duplicate `field` statement").into());
                    }
                    if gens.is_some() {
                        return Err(err_at(pos, "`field` must precede `gens`").into());
                    }
                    p.advance();
                    field = Some(parse_field(&mut p)?);
                    p.expect(Token::Semi, "`;`")?;
                }
                "vars" => {
                    let pos = p.pos();
                    if vars.is_some() {
                        return Err(err_at(pos, "duplicate `vars` statement").into());
                    }
                    if gens.is_some() || order.is_some() {
                        return Err(err_at(pos, "`vars` must precede `order` and `gens`").into());
                    }
                    p.advance();
                    vars = Some(parse_vars(&mut p)?);
                    p.expect(Token::Semi, "`;`")?;
                }
                "order" => {
                    let pos = p.pos();
                    if order.is_some() {
                        return Err(err_at(pos, "duplicate `order` statement").into());
                    }
                    if gens.is_some() {
                        return Err(err_at(pos, "`order` must precede `gens`").into());
                    }
                    let Some((names, _)) = &vars else {
                        return Err(err_at(pos, "`order` needs `vars` first").into());
                    };
                    p.advance();
                    order = Some(parse_order(&mut p, names)?);
                    p.expect(Token::Semi, "`;`")?;
                }
                "gens" => {
                    let pos = p.pos();
                    if gens.is_some() {
                        return Err(err_at(pos, "duplicate `gens` statement").into());
                    }
                    let Some((names, weights)) = vars.clone() else {
                        return Err(err_at(pos, "`gens` needs `vars` first").into());
                    };
                    p.advance();
                    p.expect(Token::Colon, "`:`")?;
                    let ctx = build_context(field, names, weights, order.clone())?;
                    gens = Some(parse_gens(&mut p, &ctx)?);
                    // Rebuilding below is cheap; keep the context source single.
                    p.expect(Token::Semi, "`;`")?;
                }
                _ => {
                    return p
                        .unexpected(&["`field`", "`vars`", "`order`", "`gens`"])
                        .map_err(Into::into)
                }
            },
            _ => {
                return p
                    .unexpected(&["`field`", "`vars`", "`order`", "`gens`"])
                    .map_err(Into::into)
            }
        }
    }

    let Some((names, weights)) = vars else {
        let pos = p.pos();
        return Err(err_at(pos, "missing `vars` statement").into());
    };
    let context = build_context(field, names, weights, order)?;
    Ok(ProblemFile {
        context,
        generators: gens.unwrap_or_default(),
    })
}

fn build_context(
    field: Option<FieldSpec>,
    names: Vec<String>,
    weights: Vec<u64>,
    order: Option<Vec<usize>>,
) -> Result<Context, Error> {
    let nvars = names.len();
    let signature = Signature::new(names, weights)?;
    let order = match order {
        Some(precedence) => OrderSpec::deglex(precedence)?,
        None => OrderSpec::deglex_default(nvars),
    };
    Context::new(field.unwrap_or(FieldSpec::Rationals), signature, order)
}

fn parse_field(p: &mut Parser) -> Result<FieldSpec, Error> {
    let (name, pos) = p.expect_ident("`Q` or `GF`")?;
    match name.as_str() {
        "Q" => Ok(FieldSpec::Rationals),
        "GF" => {
            let (n, npos) = p.expect_int("a prime modulus")?;
            let modulus = n
                .to_u64()
                .ok_or_else(|| err_at(npos, "modulus does not fit in a machine word"))?;
            FieldSpec::prime_field(modulus)
                .map_err(|_| err_at(npos, format!("modulus {modulus} is not prime")).into())
        }
        other => Err(err_at(pos, format!("unknown field `{other}`")).into()),
    }
}

fn parse_vars(p: &mut Parser) -> Result<(Vec<String>, Vec<u64>), Error> {
    let mut names = Vec::new();
    let mut weights = Vec::new();
    loop {
        let (name, pos) = p.expect_ident("a variable name")?;
        if names.contains(&name) {
            return Err(err_at(pos, format!("duplicate variable name `{name}`")).into());
        }
        p.expect(Token::Colon, "`:`")?;
        let (weight, wpos) = p.expect_int("a positive weight")?;
        if weight.is_zero() {
            return Err(err_at(wpos, "weight must be positive").into());
        }
        let weight = weight
            .to_u64()
            .ok_or_else(|| err_at(wpos, "weight does not fit in a machine word"))?;
        names.push(name);
        weights.push(weight);
        if *p.peek() == Token::Comma {
            p.advance();
        } else {
            return Ok((names, weights));
        }
    }
}

fn parse_order(p: &mut Parser, names: &[String]) -> Result<Vec<usize>, Error> {
    let (kind, kpos) = p.expect_ident("`deglex`")?;
    if kind != "deglex" {
        return Err(err_at(kpos, format!("unknown ordering `{kind}`")).into());
    }
    let mut precedence = Vec::new();
    loop {
        let (name, pos) = p.expect_ident("a variable name")?;
        let idx = names
            .iter()
            .position(|n| *n == name)
            .ok_or_else(|| err_at(pos, format!("unknown variable `{name}`")))?;
        if precedence.contains(&idx) {
            return Err(err_at(pos, format!("variable `{name}` listed twice in order")).into());
        }
        precedence.push(idx);
        if *p.peek() == Token::Greater {
            p.advance();
        } else {
            break;
        }
    }
    if precedence.len() != names.len() {
        let pos = p.pos();
        return Err(err_at(pos, "order must list every declared variable").into());
    }
    Ok(precedence)
}

fn parse_gens(p: &mut Parser, ctx: &Context) -> Result<Vec<Poly>, Error> {
    let mut gens = Vec::new();
    loop {
        let pos = p.pos();
        let f = parse_poly(p, ctx)?;
        if f.is_zero() {
            return Err(err_at(pos, "zero polynomial among generators").into());
        }
        gens.push(f);
        if *p.peek() == Token::Comma {
            p.advance();
        } else {
            return Ok(gens);
        }
    }
}

fn parse_poly(p: &mut Parser, ctx: &Context) -> Result<Poly, Error> {
    let mut raw: Vec<(Scalar, Word)> = Vec::new();
    let mut negative = false;
    if *p.peek() == Token::Minus {
        p.advance();
        negative = true;
    }
    loop {
        let (coeff, word) = parse_term(p, ctx)?;
        let coeff = if negative { -&coeff } else { coeff };
        raw.push((coeff, word));
        match p.peek() {
            Token::Plus => {
                p.advance();
                negative = false;
            }
            Token::Minus => {
                p.advance();
                negative = true;
            }
            _ => break,
        }
    }
    Ok(Poly::normalize(raw, ctx))
}

fn parse_term(p: &mut Parser, ctx: &Context) -> Result<(Scalar, Word), Error> {
    match p.peek().clone() {
        Token::Int(_) => {
            let (num, _) = p.expect_int("a coefficient")?;
            let coeff = if *p.peek() == Token::Slash {
                p.advance();
                let (den, dpos) = p.expect_int("a denominator")?;
                if den.is_zero() {
                    return Err(err_at(dpos, "zero denominator").into());
                }
                Scalar::from_ratio(ctx.field, &num, &den)?
            } else {
                Scalar::from_bigint(ctx.field, &num)
            };
            if *p.peek() == Token::Star {
                p.advance();
                let word = parse_word(p, ctx)?;
                Ok((coeff, word))
            } else {
                Ok((coeff, Word::one()))
            }
        }
        Token::Ident(_) => {
            let word = parse_word(p, ctx)?;
            Ok((Scalar::one(ctx.field), word))
        }
        _ => p
            .unexpected(&["a coefficient", "a variable name"])
            .map_err(Into::into),
    }
}

fn parse_word(p: &mut Parser, ctx: &Context) -> Result<Word, Error> {
    let mut letters: Vec<u32> = Vec::new();
    loop {
        match p.peek().clone() {
            Token::Ident(name) => {
                let pos = p.pos();
                p.advance();
                let idx = ctx
                    .signature
                    .index_of(&name)
                    .ok_or_else(|| err_at(pos, format!("unknown variable `{name}`")))?;
                let mut count = 1u64;
                if *p.peek() == Token::Caret {
                    p.advance();
                    let (n, npos) = p.expect_int("a positive exponent")?;
                    if n.is_zero() {
                        return Err(err_at(npos, "exponent must be positive").into());
                    }
                    count = n
                        .to_u64()
                        .filter(|&k| k <= 1_000_000)
                        .ok_or_else(|| err_at(npos, "exponent too large"))?;
                }
                letters.extend(std::iter::repeat(idx as u32).take(count as usize));
            }
            Token::Int(ref n) if n.is_one() => {
                // A bare 1 is the empty word.
                p.advance();
            }
            _ => return p.unexpected(&["a variable name", "`1`"]).map_err(Into::into),
        }
        if *p.peek() == Token::Star {
            p.advance();
        } else {
            return Ok(Word::from_letters(letters));
        }
    }
}

/// Parses a single polynomial expression against an existing context.
pub fn parse_poly_text(text: &str, ctx: &Context) -> Result<Poly, Error> {
    let mut p = Parser {
        tokens: lex(text)?,
        index: 0,
    };
    let f = parse_poly(&mut p, ctx)?;
    if *p.peek() != Token::Eof {
        return p.unexpected(&["end of input"]).map_err(Into::into);
    }
    Ok(f)
}

/// Canonical word form: letters joined by `*`, powers collapsed, `1` for the
/// empty word.
pub fn print_word(w: &Word, sig: &Signature) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    let mut pieces: Vec<String> = Vec::new();
    let letters = w.letters();
    let mut i = 0;
    while i < letters.len() {
        let mut j = i;
        while j < letters.len() && letters[j] == letters[i] {
            j += 1;
        }
        let name = sig.name(letters[i] as usize);
        if j - i == 1 {
            pieces.push(name.to_string());
        } else {
            pieces.push(format!("{name}^{}", j - i));
        }
        i = j;
    }
    pieces.join("*")
}

/// Canonical polynomial form: terms in strictly descending order, unit
/// coefficients omitted, rational signs folded into the `+`/`-` separators.
pub fn print_poly(f: &Poly, ctx: &Context) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in f.terms().iter().enumerate() {
        let negative = t.coeff.is_negative();
        let magnitude = t.coeff.abs();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let word = print_word(&t.word, &ctx.signature);
        if t.word.is_empty() {
            out.push_str(&magnitude.to_string());
        } else if magnitude.is_one() {
            out.push_str(&word);
        } else {
            out.push_str(&format!("{magnitude}*{word}"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn parses_the_basic_problem() {
        let pf = parse_problem("field Q; vars x:1, y:1; order deglex x > y; gens: x*y - y*x;")
            .unwrap();
        assert_eq!(pf.generators.len(), 1);
        assert_eq!(pf.context.signature.nvars(), 2);
        assert_eq!(pf.context.signature.weight(0), 1);
        assert_eq!(pf.context.signature.weight(1), 1);
        assert_eq!(print_poly(&pf.generators[0], &pf.context), "x*y - y*x");
    }

    #[test]
    fn parses_prime_fields_and_weights() {
        let pf = parse_problem("field GF 7; vars x:1, y:2; order deglex x > y; gens: x^2 - y;")
            .unwrap();
        assert_eq!(pf.context.field, FieldSpec::PrimeField { modulus: 7 });
        use crate::poly::Homogeneity;
        assert_eq!(
            pf.generators[0].homogeneity(&pf.context.signature),
            Homogeneity::Degree(2)
        );
        // -1 is stored as the canonical residue 6.
        assert_eq!(print_poly(&pf.generators[0], &pf.context), "x^2 + 6*y");
    }

    #[test]
    fn rejects_nonpositive_weights() {
        let err = parse_problem("vars x:0;").unwrap_err();
        match err {
            Error::Parse(e) => {
                assert!(e.message.contains("weight must be positive"), "{e}");
                assert_eq!((e.line, e.column), (1, 8));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_invalid_inputs_with_positions() {
        assert!(matches!(
            parse_problem("vars x:1; gens: x*z;"),
            Err(Error::Parse(e)) if e.message.contains("unknown variable `z`")
        ));
        assert!(matches!(
            parse_problem("vars x:1, x:2;"),
            Err(Error::Parse(e)) if e.message.contains("duplicate variable name")
        ));
        assert!(matches!(
            parse_problem("field GF 6; vars x:1;"),
            Err(Error::Parse(e)) if e.message.contains("not prime")
        ));
        assert!(matches!(
            parse_problem("vars x:1; gens: x - x;"),
            Err(Error::Parse(e)) if e.message.contains("zero polynomial")
        ));
        assert!(matches!(
            parse_problem("vars x:1, y:1; order deglex x;"),
            Err(Error::Parse(e)) if e.message.contains("every declared variable")
        ));
        // Parse errors carry expected-token sets.
        match parse_problem("vars x:1; gens: x +;") {
            Err(Error::Parse(e)) => assert!(!e.expected.is_empty()),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn field_and_order_default_sensibly() {
        let pf = parse_problem("vars x:1, y:1; gens: x*y;").unwrap();
        assert_eq!(pf.context.field, FieldSpec::Rationals);
        assert_eq!(pf.context.order.precedence(), &[0, 1]);
    }

    #[test]
    fn printing_examples() {
        let pf = parse_problem("vars x:1, y:1; gens: x*y - y*x, 3/2*x^2*y;").unwrap();
        assert_eq!(print_poly(&pf.generators[0], &pf.context), "x*y - y*x");
        assert_eq!(print_poly(&pf.generators[1], &pf.context), "3/2*x^2*y");
        assert_eq!(print_poly(&Poly::zero(), &pf.context), "0");
    }

    #[test]
    fn exponent_shorthand_expands() {
        let pf = parse_problem("vars x:1, y:1; gens: x^2*y;").unwrap();
        assert_eq!(
            pf.generators[0].leading_word().unwrap().letters(),
            &[0, 0, 1]
        );
    }

    #[test]
    fn round_trips_random_polynomials() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let pf = parse_problem("vars x:1, y:2, z:1; order deglex y > x > z;").unwrap();
        let ctx = &pf.context;
        for _ in 0..300 {
            let raw: Vec<(Scalar, Word)> = (0..rng.gen_range(0..6))
                .map(|_| {
                    let len = rng.gen_range(0..10);
                    let word =
                        Word::from_letters((0..len).map(|_| rng.gen_range(0..3)).collect());
                    let num = BigInt::from(rng.gen_range(-100i64..=100));
                    let den = BigInt::from(rng.gen_range(1i64..=100));
                    (Scalar::from_ratio(ctx.field, &num, &den).unwrap(), word)
                })
                .collect();
            let f = Poly::normalize(raw, ctx);
            let text = print_poly(&f, ctx);
            let back = parse_poly_text(&text, ctx).unwrap();
            assert_eq!(back, f, "round trip through `{text}`");
        }
    }

    #[test]
    fn round_trips_prime_field_polynomials() {
        let mut rng = ChaCha8Rng::seed_from_u64(78);
        let pf = parse_problem("field GF 13; vars x:1, y:1;").unwrap();
        let ctx = &pf.context;
        for _ in 0..100 {
            let raw: Vec<(Scalar, Word)> = (0..rng.gen_range(0..5))
                .map(|_| {
                    let len = rng.gen_range(0..6);
                    let word =
                        Word::from_letters((0..len).map(|_| rng.gen_range(0..2)).collect());
                    (Scalar::from_integer(ctx.field, rng.gen_range(-30..30)), word)
                })
                .collect();
            let f = Poly::normalize(raw, ctx);
            let back = parse_poly_text(&print_poly(&f, ctx), ctx).unwrap();
            assert_eq!(back, f);
        }
    }
}
