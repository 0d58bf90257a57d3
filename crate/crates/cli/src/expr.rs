//! Expression language for ring elements.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := factor ('^' int)?
//! factor := 's[' int (',' int)* ']' | 'q' | int | '(' expr ')'
//! ```
//!
//! `s[a]` with a single entry is the special class `σ_a`.

use qschubert::combination::QuantumBasis;
use qschubert::{multiply_classical, quantum_multiply, CohomClass, Partition, QuantumClass, Shape};

use crate::{CliError, Mode};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Class { parts: Vec<i64>, pos: usize },
    Q,
    Int(i64),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    S,
    Q,
    Int(i64),
    LBracket,
    RBracket,
    Comma,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(input: &str) -> Result<Vec<(Token, usize)>, CliError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = input.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, ch) = chars[i];
        let tok = match ch {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let end = chars.get(i).map_or(input.len(), |c| c.0);
                let text = &input[chars[start].0..end];
                let value = text
                    .parse()
                    .map_err(|_| CliError::Parse { pos, msg: format!("integer literal {text} is too large") })?;
                out.push((Token::Int(value), pos));
                continue;
            }
            's' => Token::S,
            'q' => Token::Q,
            '[' => Token::LBracket,
            ']' => Token::RBracket,
            ',' => Token::Comma,
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            other => return Err(CliError::Parse { pos, msg: format!("unknown token '{other}'") }),
        };
        out.push((tok, pos));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    idx: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.idx).map(|t| &t.0)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.idx).map_or(self.end, |t| t.1)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, CliError> {
        Err(CliError::Parse { pos: self.pos(), msg: msg.into() })
    }

    fn expect(&mut self, tok: Token, what: &str) -> Result<(), CliError> {
        if self.peek() == Some(&tok) {
            self.idx += 1;
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn int(&mut self) -> Result<i64, CliError> {
        match self.peek() {
            Some(&Token::Int(v)) => {
                self.idx += 1;
                Ok(v)
            }
            _ => self.err("expected integer"),
        }
    }

    fn expr(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.idx += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.idx += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Token::Star) {
            self.idx += 1;
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, CliError> {
        if self.peek() == Some(&Token::Minus) {
            self.idx += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.factor()?;
        if self.peek() == Some(&Token::Caret) {
            self.idx += 1;
            let pos = self.pos();
            let exp = self.int()?;
            let exp = u32::try_from(exp).map_err(|_| CliError::Parse { pos, msg: "exponent too large".into() })?;
            return Ok(Expr::Pow(Box::new(base), exp));
        }
        Ok(base)
    }

    fn factor(&mut self) -> Result<Expr, CliError> {
        let pos = self.pos();
        match self.peek() {
            Some(Token::S) => {
                self.idx += 1;
                self.expect(Token::LBracket, "'[' after 's'")?;
                let mut parts = vec![self.int()?];
                while self.peek() == Some(&Token::Comma) {
                    self.idx += 1;
                    parts.push(self.int()?);
                }
                self.expect(Token::RBracket, "']' closing class literal")?;
                Ok(Expr::Class { parts, pos })
            }
            Some(Token::Q) => {
                self.idx += 1;
                Ok(Expr::Q)
            }
            Some(&Token::Int(v)) => {
                self.idx += 1;
                Ok(Expr::Int(v))
            }
            Some(Token::LParen) => {
                self.idx += 1;
                let inner = self.expr()?;
                self.expect(Token::RParen, "')'")?;
                Ok(inner)
            }
            Some(_) => self.err("unexpected token"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `input` without reference to a shape.
pub fn parse(input: &str) -> Result<Expr, CliError> {
    let tokens = lex(input)?;
    let mut p = Parser { tokens, idx: 0, end: input.len() };
    let e = p.expr()?;
    if p.idx != p.tokens.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

/// Parses and checks every class literal against `shape`.
pub fn parse_for_shape(shape: &Shape, input: &str) -> Result<Expr, CliError> {
    let e = parse(input)?;
    e.validate(shape)?;
    Ok(e)
}

fn literal_partition(shape: &Shape, parts: &[i64], pos: usize) -> Result<Partition, CliError> {
    Partition::new(shape, parts).map_err(|e| CliError::Parse { pos, msg: e.to_string() })
}

/// Multiplies in `H*(G)[q]` with the classical product, q-degrees adding.
fn classical_product(shape: &Shape, lhs: &QuantumClass, rhs: &QuantumClass) -> Result<QuantumClass, CliError> {
    let mut out = QuantumClass::zero();
    for (x, &a) in lhs {
        for (y, &b) in rhs {
            let prod = multiply_classical(shape, &CohomClass::basis(x.partition.clone()), &CohomClass::basis(y.partition.clone()))?;
            let coeff = a.checked_mul(b).ok_or(qschubert::Error::Overflow)?;
            out.add_scaled(&QuantumClass::from_classical(&prod, x.degree + y.degree), coeff)?;
        }
    }
    Ok(out)
}

impl Expr {
    pub fn validate(&self, shape: &Shape) -> Result<(), CliError> {
        match self {
            Expr::Class { parts, pos } => literal_partition(shape, parts, *pos).map(|_| ()),
            Expr::Q | Expr::Int(_) => Ok(()),
            Expr::Neg(e) | Expr::Pow(e, _) => e.validate(shape),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.validate(shape)?;
                b.validate(shape)
            }
        }
    }

    pub fn eval(&self, shape: &Shape, mode: Mode) -> Result<QuantumClass, CliError> {
        let one = || QuantumClass::schubert(shape.zero_partition(), 0);
        let mul = |a: &QuantumClass, b: &QuantumClass| match mode {
            Mode::Quantum => quantum_multiply(shape, a, b).map_err(CliError::from),
            Mode::Classical => classical_product(shape, a, b),
        };
        Ok(match self {
            Expr::Class { parts, pos } => QuantumClass::schubert(literal_partition(shape, parts, *pos)?, 0),
            Expr::Q => QuantumClass::basis(QuantumBasis { degree: 1, partition: shape.zero_partition() }),
            Expr::Int(v) => one().scaled(*v)?,
            Expr::Neg(e) => e.eval(shape, mode)?.scaled(-1)?,
            Expr::Add(a, b) => a.eval(shape, mode)?.checked_add(&b.eval(shape, mode)?)?,
            Expr::Sub(a, b) => a.eval(shape, mode)?.checked_sub(&b.eval(shape, mode)?)?,
            Expr::Mul(a, b) => mul(&a.eval(shape, mode)?, &b.eval(shape, mode)?)?,
            Expr::Pow(e, exp) => {
                let base = e.eval(shape, mode)?;
                let mut acc = one();
                for _ in 0..*exp {
                    acc = mul(&acc, &base)?;
                }
                acc
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(parts: &[i64], pos: usize) -> Expr {
        Expr::Class { parts: parts.to_vec(), pos }
    }

    #[test]
    fn grammar_examples() {
        assert_eq!(
            parse("s[2,1]*s[1,0]").unwrap(),
            Expr::Mul(Box::new(class(&[2, 1], 0)), Box::new(class(&[1, 0], 7)))
        );
        let e = parse("q*s[1,0]+2*s[2,2]").unwrap();
        assert_eq!(
            e,
            Expr::Add(
                Box::new(Expr::Mul(Box::new(Expr::Q), Box::new(class(&[1, 0], 2)))),
                Box::new(Expr::Mul(Box::new(Expr::Int(2)), Box::new(class(&[2, 2], 11)))),
            )
        );
    }

    #[test]
    fn validation_against_shape() {
        let s = Shape::new(4, 2).unwrap();
        let err = parse_for_shape(&s, "s[3,1]").unwrap_err();
        assert!(err.to_string().contains("exceeds k=2"), "{err}");
        assert!(parse_for_shape(&s, "s[1,2]").is_err());
        assert!(parse_for_shape(&s, "s[1,0,0]").is_err());
        assert!(parse_for_shape(&s, "s[2]").is_ok());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        for (input, pos) in [("s[1,0", 5), ("s[1,0]]", 6), ("s 1", 2), ("x", 0), ("(q", 2), ("", 0), ("s[1,]", 4)] {
            match parse(input) {
                Err(CliError::Parse { pos: p, .. }) => assert_eq!(p, pos, "{input}"),
                other => panic!("{input}: {other:?}"),
            }
        }
    }

    #[test]
    fn evaluation_modes() {
        let s = Shape::new(4, 2).unwrap();
        let e = parse_for_shape(&s, "s[1,0]*s[2,1]").unwrap();
        let quantum = e.eval(&s, Mode::Quantum).unwrap();
        let classical = e.eval(&s, Mode::Classical).unwrap();
        assert_eq!(quantum.len(), 2);
        assert_eq!(classical.len(), 1);
        let p = parse_for_shape(&s, "s[1]^8").unwrap().eval(&s, Mode::Quantum).unwrap();
        let top = Partition::new(&s, &[2, 2]).unwrap();
        let mut ins = vec![Partition::new(&s, &[1]).unwrap(); 8];
        ins.insert(0, top);
        let gw = qschubert::gromov_witten(&s, &ins, 2).unwrap();
        assert_eq!(p.coeff_of(&s.zero_partition(), 2), gw);
    }
}
