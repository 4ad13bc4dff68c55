//! Exact polynomial expressions.
//!
//! Grammar (whitespace ignored, `#` starts a comment to end of line):
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := ("+" | "-") unary | power
//! power  := atom ("^" integer)?
//! atom   := integer | identifier | "(" expr ")"
//! ```
//!
//! Division is only allowed by nonzero constants, so `3/4*x` is accepted
//! and `x/y` is not. There is no implicit multiplication.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{MPoly, Rational, Var, NVARS};

/// A parsed polynomial `unit * poly` with `poly` primitive with integer
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parsed {
    pub poly: MPoly,
    pub unit: Rational,
}

/// Maps identifiers to the four internal variables.
#[derive(Clone, Debug)]
pub struct VarNames {
    names: [Option<String>; NVARS],
}

impl VarNames {
    /// `curve` names `x, y`; `params` names `t` and optionally `s`.
    pub fn new(curve: [&str; 2], params: &[&str]) -> Result<Self> {
        if params.is_empty() || params.len() > 2 {
            return Err(Error::Hypothesis("one or two parameters expected".into()));
        }
        let mut names: [Option<String>; NVARS] = Default::default();
        names[Var::X.index()] = Some(curve[0].to_string());
        names[Var::Y.index()] = Some(curve[1].to_string());
        names[Var::T.index()] = Some(params[0].to_string());
        if let Some(p) = params.get(1) {
            names[Var::S.index()] = Some(p.to_string());
        }
        let given: Vec<&String> = names.iter().flatten().collect();
        for (i, a) in given.iter().enumerate() {
            if !is_identifier(a) {
                return Err(Error::Hypothesis(format!("invalid variable name {a:?}")));
            }
            if given[..i].contains(a) {
                return Err(Error::Hypothesis(format!("variable {a} declared twice")));
            }
        }
        Ok(VarNames { names })
    }

    pub fn standard() -> Self {
        VarNames::new(["x", "y"], &["t", "s"]).expect("distinct names")
    }

    fn lookup(&self, id: &str) -> Option<Var> {
        Var::ALL
            .into_iter()
            .find(|v| self.names[v.index()].as_deref() == Some(id))
    }

    /// Names for printing, with the internal names for unused slots.
    pub fn print_names(&self) -> [&str; NVARS] {
        let mut out = ["x", "y", "t", "s"];
        for v in Var::ALL {
            if let Some(n) = &self.names[v.index()] {
                out[v.index()] = n;
            }
        }
        out
    }
}

fn is_identifier(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
    End,
}

fn position(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn error_at(src: &str, offset: usize, message: impl Into<String>) -> Error {
    let (line, column) = position(src, offset);
    Error::Parse {
        line,
        column,
        offset,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let mut toks = vec![];
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let ch = src[i..].chars().next().expect("in bounds");
        match ch {
            '#' => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            c if c.is_whitespace() => i += c.len_utf8(),
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && (bytes[i] == b'.' || bytes[i] == b'e' || bytes[i] == b'E') {
                    return Err(error_at(
                        src,
                        i,
                        "decimal and exponent notation are not exact; write a/b",
                    ));
                }
                let v: BigInt = src[start..i].parse().expect("digits");
                toks.push((Tok::Int(v), start));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                toks.push((Tok::Ident(src[start..i].to_string()), start));
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                toks.push((Tok::Op(ch), i));
                i += 1;
            }
            '.' => return Err(error_at(src, i, "decimal notation is not exact; write a/b")),
            other => return Err(error_at(src, i, format!("unexpected character {other:?}"))),
        }
    }
    toks.push((Tok::End, src.len()));
    Ok(toks)
}

/// A polynomial with rational coefficients kept as `num / den`.
#[derive(Clone)]
struct RPoly {
    num: MPoly,
    den: BigInt,
}

impl RPoly {
    fn int(p: MPoly) -> Self {
        RPoly {
            num: p,
            den: BigInt::one(),
        }
    }

    fn add(&self, o: &RPoly, sign: i64) -> RPoly {
        let a = self.num.scale(&o.den);
        let b = o.num.scale(&(&self.den * BigInt::from(sign)));
        RPoly {
            num: &a + &b,
            den: &self.den * &o.den,
        }
    }

    fn mul(&self, o: &RPoly) -> RPoly {
        RPoly {
            num: &self.num * &o.num,
            den: &self.den * &o.den,
        }
    }

    fn constant(&self) -> Option<Rational> {
        self.num
            .as_constant()
            .map(|c| Rational::new(c, self.den.clone()))
            .or_else(|| self.num.is_zero().then(Rational::zero))
    }
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    names: &'a VarNames,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        error_at(self.src, self.offset(), msg)
    }

    fn expr(&mut self) -> Result<RPoly> {
        let mut acc = self.term()?;
        while let Tok::Op(c @ ('+' | '-')) = *self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = acc.add(&rhs, if c == '+' { 1 } else { -1 });
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RPoly> {
        let mut acc = self.unary()?;
        while let Tok::Op(c @ ('*' | '/')) = *self.peek() {
            let at = self.offset();
            self.pos += 1;
            let rhs = self.unary()?;
            if c == '*' {
                acc = acc.mul(&rhs);
                continue;
            }
            match rhs.constant() {
                Some(q) if !q.is_zero() => {
                    acc = acc.mul(&RPoly {
                        num: MPoly::constant(q.denom().clone()),
                        den: q.numer().clone(),
                    });
                }
                Some(_) => return Err(error_at(self.src, at, "division by zero")),
                None => return Err(error_at(self.src, at, "division by a non-constant")),
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RPoly> {
        match *self.peek() {
            Tok::Op('-') => {
                self.pos += 1;
                let v = self.unary()?;
                Ok(RPoly {
                    num: -&v.num,
                    den: v.den,
                })
            }
            Tok::Op('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RPoly> {
        let base = self.atom()?;
        if *self.peek() != Tok::Op('^') {
            return Ok(base);
        }
        self.pos += 1;
        let k = match self.peek() {
            Tok::Int(k) => u32::try_from(k).map_err(|_| self.err("exponent too large"))?,
            _ => return Err(self.err("expected a non-negative integer exponent")),
        };
        self.pos += 1;
        Ok(RPoly {
            num: base.num.pow(k),
            den: num_traits::pow(base.den, k as usize),
        })
    }

    fn atom(&mut self) -> Result<RPoly> {
        let tok = self.peek().clone();
        match tok {
            Tok::Int(v) => {
                self.pos += 1;
                Ok(RPoly::int(MPoly::constant(v)))
            }
            Tok::Ident(id) => match self.names.lookup(&id) {
                Some(v) => {
                    self.pos += 1;
                    Ok(RPoly::int(MPoly::var(v)))
                }
                None => Err(self.err(format!("undeclared variable {id}"))),
            },
            Tok::Op('(') => {
                let open = self.offset();
                self.pos += 1;
                let e = self.expr()?;
                if *self.peek() != Tok::Op(')') {
                    return Err(error_at(self.src, open, "unbalanced parenthesis"));
                }
                self.pos += 1;
                Ok(e)
            }
            Tok::End => Err(self.err("unexpected end of input")),
            Tok::Op(c) => Err(self.err(format!("unexpected {c:?}"))),
        }
    }
}

/// Parses one polynomial expression over the declared variable names.
pub fn parse_polynomial(text: &str, names: &VarNames) -> Result<Parsed> {
    let toks = lex(text)?;
    let mut p = Parser {
        src: text,
        toks,
        pos: 0,
        names,
    };
    let v = p.expr()?;
    match p.peek() {
        Tok::End => {}
        Tok::Op(')') => return Err(p.err("unbalanced parenthesis")),
        Tok::Int(_) | Tok::Ident(_) | Tok::Op('(') => {
            return Err(p.err("missing operator (implicit multiplication is not allowed)"))
        }
        Tok::Op(c) => return Err(p.err(format!("unexpected {c:?}"))),
    }
    if v.num.is_zero() {
        return Ok(Parsed {
            poly: MPoly::zero(),
            unit: Rational::one(),
        });
    }
    let ic = v.num.integer_content();
    let ic = if v.num.lex_leading().is_some_and(|(_, c)| c.is_negative()) {
        -ic
    } else {
        ic
    };
    Ok(Parsed {
        poly: v.num.div_integer(&ic).expect("content divides"),
        unit: Rational::new(ic, v.den),
    })
}

/// Prints a polynomial in the input grammar.
pub fn print_polynomial(p: &MPoly, names: &VarNames) -> String {
    p.display_with(&names.print_names())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{c, rat, s, t, x, y};

    fn parse(s: &str) -> Result<Parsed> {
        parse_polynomial(s, &VarNames::standard())
    }

    #[test]
    fn fixtures() {
        let cas = parse("(x^2+y^2+t^2)^2 - 4*t^2*x^2 - s^4").unwrap();
        let q = &(&x().pow(2) + &y().pow(2)) + &t().pow(2);
        let want = &(&q.pow(2) - &(&c(4) * &(&t().pow(2) * &x().pow(2)))) - &s().pow(4);
        assert_eq!(&cas.poly.scale(cas.unit.numer()), &want);
        let lin = parse("-1 + x^2 + t*(x-y) + s*(x^3-y)").unwrap();
        let a = &(&c(-1) + &x().pow(2)) + &(&t() * &(&x() - &y()));
        let want = &a + &(&s() * &(&x().pow(3) - &y()));
        assert_eq!(lin.poly.scale(lin.unit.numer()), want);
    }

    #[test]
    fn rationals_are_cleared() {
        let p = parse("x/2 + 1/3").unwrap();
        assert_eq!(p.poly, &(&c(3) * &x()) + &c(2));
        assert_eq!(p.unit, rat(1, 6));
        let p = parse("-2*x").unwrap();
        assert_eq!(p.poly, x());
        assert_eq!(p.unit, rat(-2, 1));
    }

    #[test]
    fn errors_carry_positions() {
        match parse("x + ") {
            Err(Error::Parse {
                offset,
                line,
                column,
                ..
            }) => {
                assert_eq!((offset, line, column), (4, 1, 5));
            }
            other => panic!("{other:?}"),
        }
        match parse("x +\n  z") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
        for bad in [
            "(x + y", "x + y)", "2x", "x y", "1.5*x", "x/y", "x^y", "x^-1", "1/0", "x $ y", "",
            "3e2",
        ] {
            assert!(matches!(parse(bad), Err(Error::Parse { .. })), "{bad}");
        }
    }

    #[test]
    fn comments_and_names() {
        let names = VarNames::new(["u", "v"], &["p", "d"]).unwrap();
        let p = parse_polynomial("# offset\nu^2 - p*d # tail\n", &names).unwrap();
        assert_eq!(p.poly, &x().pow(2) - &(&t() * &s()));
        let printed = print_polynomial(&p.poly, &names);
        assert!(
            printed.contains('u') && printed.contains("p*d"),
            "{printed}"
        );
        assert_eq!(parse_polynomial(&printed, &names).unwrap(), p);
        assert!(VarNames::new(["x", "x"], &["t"]).is_err());
        assert!(parse_polynomial("s", &VarNames::new(["x", "y"], &["t"]).unwrap()).is_err());
    }
}
