//! Expressions over C[SU_q(2)]: generators `a as g gs`, products by
//! juxtaposition or `*`, `^` powers, and scalar subexpressions in `q`.

use qgw_core::ncalg::{suq2, NCPoly};
use qgw_core::scalars::ScalarQ;
use qgw_core::{Error, Result};

/// Parses into the free algebra; nothing is normalized.
pub fn parse_expression(text: &str) -> Result<NCPoly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let v = p.sum()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

/// Inverse of [`parse_expression`] up to normalization.
pub fn render(p: &NCPoly) -> String {
    suq2().alphabet().render(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

fn starts_factor(c: u8) -> bool {
    c == b'(' || c.is_ascii_alphanumeric()
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<NCPoly> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.product()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<NCPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary()?;
                    let c = scalar_of(&d).ok_or(Error::Syntax { pos: at, msg: "can only divide by a scalar".into() })?;
                    let inv = c.inv().map_err(|_| Error::Syntax { pos: at, msg: "division by zero".into() })?;
                    acc = acc.scale(&inv);
                }
                Some(c) if starts_factor(c) => acc = &acc * &self.power()?,
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<NCPoly> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<NCPoly> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.pos;
        let e = self.exponent()?;
        if e < 0 {
            let c = scalar_of(&base)
                .ok_or(Error::Syntax { pos: at, msg: "negative powers need a scalar base".into() })?;
            let v = c.pow(e).map_err(|_| Error::Syntax { pos: at, msg: "negative power of zero".into() })?;
            return Ok(NCPoly::scalar(v));
        }
        Ok((0..e).fold(NCPoly::one(), |acc, _| &acc * &base))
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.peek() == Some(b'(');
        if paren {
            self.pos += 1;
        }
        let neg = self.peek() == Some(b'-');
        if neg {
            self.pos += 1;
        }
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let n: i64 = digits.parse().map_err(|_| Error::Syntax { pos: start, msg: "expected an integer exponent".into() })?;
        if paren {
            if self.peek() != Some(b')') {
                return Err(self.err("expected `)`"));
            }
            self.pos += 1;
        }
        Ok(if neg { -n } else { n })
    }

    fn atom(&mut self) -> Result<NCPoly> {
        let start = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                return Ok(v);
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
                let n = qgw_core::scalars::parse_scalar(digits)?;
                return Ok(NCPoly::scalar(n));
            }
            Some(c) if c.is_ascii_alphabetic() => self.pos,
            Some(_) => return Err(self.err("unexpected character")),
            None => return Err(self.err("unexpected end of input")),
        };
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
        if name == "q" {
            return Ok(NCPoly::scalar(ScalarQ::q()));
        }
        match suq2().alphabet().index(name) {
            Some(g) => Ok(NCPoly::gen(g)),
            None => Err(Error::UnknownSymbol { symbol: name.into(), pos: start }),
        }
    }
}

fn scalar_of(p: &NCPoly) -> Option<ScalarQ> {
    match p.terms().next() {
        None => Some(ScalarQ::zero()),
        Some((w, c)) if w.is_empty() && p.len() == 1 => Some(c.clone()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use qgw_core::ncalg::{A, AS, G, GS};
    use qgw_core::scalars::parse_scalar;

    use super::*;

    #[test]
    fn examples() {
        assert_eq!(parse_expression("g*a").unwrap(), NCPoly::word(vec![G, A]));
        assert_eq!(suq2().normalize(&parse_expression("g*a").unwrap()), NCPoly::term(ScalarQ::q_pow(-1), vec![A, G]));
        assert_eq!(parse_expression("1").unwrap(), NCPoly::one());
        let c = parse_scalar("1/(1+q^2)").unwrap();
        assert_eq!(parse_expression("(1/(1+q^2)) * g gs").unwrap(), NCPoly::term(c, vec![G, GS]));
    }

    #[test]
    fn precedence() {
        // power binds tighter than product, product tighter than sum
        assert_eq!(parse_expression("a g^2").unwrap(), NCPoly::word(vec![A, G, G]));
        let p = parse_expression("as a + 2 g").unwrap();
        assert_eq!(p, &NCPoly::word(vec![AS, A]) + &NCPoly::term(ScalarQ::from_int(2), vec![G]));
        assert_eq!(parse_expression("q^-1 a").unwrap(), NCPoly::term(ScalarQ::q_pow(-1), vec![A]));
        assert_eq!(parse_expression("-a").unwrap(), NCPoly::term(ScalarQ::from_int(-1), vec![A]));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_expression("a + x"), Err(Error::UnknownSymbol { pos: 4, .. })));
        assert!(matches!(parse_expression("(a"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_expression("a / g"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_expression("a^-1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_expression("1/(q-q)"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn render_roundtrip() {
        let sys = suq2();
        for text in ["g*a", "as a", "(1/(1+q^2)) * g gs - 3 q^-2 a as g", "a^3 gs^2 + q", "0"] {
            let p = sys.normalize(&parse_expression(text).unwrap());
            assert_eq!(parse_expression(&render(&p)).unwrap(), p, "{text}");
        }
    }
}
