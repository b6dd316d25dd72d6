//! Parser for the textual form `c*E(n)^k + ...` used by table files.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! value  := term (('+' | '-') term)* | '-' term ...
//! term   := rat | rat '*' root | root
//! root   := 'E(' int ')' ('^' int)?
//! rat    := int ('/' int)?
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::CycNum;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cyclotomic literal parse error at column {position}: {message}")]
pub struct ParseCycError {
    pub position: usize,
    pub message: String,
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseCycError> {
        let position = self.chars.get(self.pos).map(|c| c.0).unwrap_or(self.len);
        Err(ParseCycError { position, message: message.into() })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseCycError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseCycError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            self.pos = start;
            return self.err("expected an integer");
        }
        let digits: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn small(&mut self) -> Result<i64, ParseCycError> {
        let save = self.pos;
        let v = self.integer()?;
        i64::try_from(v).or_else(|_| {
            self.pos = save;
            self.err("integer out of range")
        })
    }

    fn root(&mut self) -> Result<(u32, i64), ParseCycError> {
        self.expect('E')?;
        self.expect('(')?;
        let save = self.pos;
        let n = self.small()?;
        if n <= 0 || n > u32::MAX as i64 {
            self.pos = save;
            return self.err("root order must be positive");
        }
        self.expect(')')?;
        let k = if self.eat('^') {
            let neg = self.eat('-');
            let k = self.small()?;
            if neg {
                -k
            } else {
                k
            }
        } else {
            1
        };
        Ok((n as u32, k))
    }

    fn term(&mut self) -> Result<CycNum, ParseCycError> {
        if self.peek() == Some('E') {
            let (n, k) = self.root()?;
            return Ok(CycNum::root_of_unity(n, k));
        }
        let num = self.integer()?;
        let mut coeff = BigRational::from_integer(num);
        if self.eat('/') {
            let save = self.pos;
            let den = self.integer()?;
            if den.is_zero() {
                self.pos = save;
                return self.err("zero denominator");
            }
            coeff /= BigRational::from_integer(den);
        }
        if self.eat('*') {
            let (n, k) = self.root()?;
            return Ok(CycNum::root_of_unity(n, k).scale(&coeff));
        }
        Ok(CycNum::from_rational(coeff))
    }
}

pub(super) fn parse(s: &str) -> Result<CycNum, ParseCycError> {
    let chars: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut p = Parser { chars, pos: 0, len: s.len() };
    if p.chars.is_empty() {
        return p.err("empty value");
    }
    let mut acc = CycNum::zero();
    let mut first = true;
    while p.pos < p.chars.len() {
        let sign = if p.eat('-') {
            -BigRational::one()
        } else if p.eat('+') || first {
            BigRational::one()
        } else {
            return p.err("expected '+' or '-'");
        };
        first = false;
        let t = p.term()?;
        acc = acc.add(&t.scale(&sign));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_grammar() {
        // (-1 + s)/2 with s the Gauss sum for 7
        let s = crate::cyclotomic::quadratic_gauss_sum(7);
        let half = BigRational::new(1.into(), 2.into());
        let w = (&s - &CycNum::one()).scale(&half);
        assert_eq!(parse("E(7)+E(7)^2+E(7)^4").unwrap(), w);
        let v = parse(" -1/2 + 1/2*E(7) + 1/2*E(7)^2 + 1/2*E(7)^4 ").unwrap();
        assert_eq!(v, (&w - &CycNum::one()).scale(&half));
        assert_eq!(parse("E(4)^2").unwrap(), CycNum::from_int(-1));
        assert_eq!(parse("-E(3)-E(3)^2").unwrap(), CycNum::one());
        assert_eq!(parse("3").unwrap(), CycNum::from_int(3));
    }

    #[test]
    fn reports_positions() {
        assert_eq!(parse("").unwrap_err().position, 0);
        let e = parse("1+E(0)").unwrap_err();
        assert_eq!(e.position, 4);
        let e = parse("2*X").unwrap_err();
        assert_eq!(e.position, 2);
        assert!(parse("1/0").is_err());
        assert!(parse("1E(3)").is_err());
    }
}
