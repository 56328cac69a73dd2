//! A small reader for polynomials written in TeX-like notation, e.g.
//! `1 - q Z_{11}Z_{21}^2` or `1 - Y \bm{X}_{1|23}`.

use num_bigint::BigInt;

use super::poly::{Monomial, Poly};
use super::var::Var;
use super::AlgebraError;

struct Reader<'a> {
    s: &'a [u8],
    pos: usize,
}

fn clean(src: &str) -> String {
    let mut t = src.to_string();
    for (from, to) in [
        ("\\bm{X}", "X"),
        ("\\left", ""),
        ("\\right", ""),
        ("\\qquad", " "),
        ("\\quad", " "),
        ("\\times", "*"),
        ("\\cdot", "*"),
        ("\\\\", " "),
        ("&", " "),
        ("\n", " "),
    ] {
        t = t.replace(from, to);
    }
    t
}

impl<'a> Reader<'a> {
    fn err(&self, what: &str) -> AlgebraError {
        AlgebraError::Parse(format!("{} at byte {}", what, self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && (self.s[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expect(&mut self, c: u8) -> Result<(), AlgebraError> {
        if self.bump() == Some(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn digits(&mut self) -> Result<String, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    /// Subscript body: a single digit or a braced group, returned raw.
    fn subscript(&mut self) -> Result<String, AlgebraError> {
        self.expect(b'_')?;
        if self.peek() == Some(b'{') {
            self.pos += 1;
            let start = self.pos;
            while self.pos < self.s.len() && self.s[self.pos] != b'}' {
                self.pos += 1;
            }
            let body = String::from_utf8_lossy(&self.s[start..self.pos]).replace(' ', "");
            self.expect(b'}')?;
            Ok(body)
        } else {
            let c = self.bump().ok_or_else(|| self.err("missing subscript"))?;
            Ok((c as char).to_string())
        }
    }

    fn exponent(&mut self) -> Result<i32, AlgebraError> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        let braced = self.peek() == Some(b'{');
        if braced {
            self.pos += 1;
        }
        let neg = self.peek() == Some(b'-');
        if neg {
            self.pos += 1;
        }
        let d: i32 = self.digits()?.parse().map_err(|_| self.err("bad exponent"))?;
        if braced {
            self.expect(b'}')?;
        }
        Ok(if neg { -d } else { d })
    }

    fn index(&self, body: &str) -> Result<usize, AlgebraError> {
        body.parse().map_err(|_| self.err("bad index"))
    }

    fn variable(&mut self, c: u8) -> Result<Monomial, AlgebraError> {
        let m = match c {
            b'Y' => Monomial::var(Var::y()),
            b'q' => Monomial::var(Var::q()),
            b'u' => Monomial::var(Var::u()),
            b'X' => {
                if self.s.get(self.pos) != Some(&b'_') {
                    Monomial::var(Var::big_x())
                } else {
                    let body = self.subscript()?;
                    let mut m = Monomial::one();
                    if body.contains(',') {
                        let set: Result<Vec<usize>, _> = body.split(',').map(|p| self.index(p)).collect();
                        m = Monomial::var(Var::x_of(&set?));
                    } else {
                        for part in body.split('|') {
                            let set: Vec<usize> = part.bytes().map(|b| (b - b'0') as usize).collect();
                            m = m.mul(&Monomial::var(Var::x_of(&set)));
                        }
                    }
                    m
                }
            }
            b'Z' => {
                let body = self.subscript()?;
                let v = if let Some((i, j)) = body.split_once(',') {
                    Var::z(self.index(i)?, self.index(j)?)
                } else if body.len() == 2 {
                    let b = body.as_bytes();
                    Var::z((b[0] - b'0') as usize, (b[1] - b'0') as usize)
                } else {
                    Var::zi(self.index(&body)?)
                };
                Monomial::var(v)
            }
            b'x' | b'y' | b't' => {
                let body = self.subscript()?;
                let i = self.index(&body)?;
                Monomial::var(match c {
                    b'x' => Var::lx(i),
                    b'y' => Var::ly(i),
                    _ => Var::t(i),
                })
            }
            _ => return Err(self.err("unknown symbol")),
        };
        Ok(m)
    }

    fn atom(&mut self) -> Result<Poly, AlgebraError> {
        match self.peek() {
            Some(b'(') | Some(b'{') => {
                let close = if self.bump() == Some(b'(') { b')' } else { b'}' };
                let p = self.expr()?;
                self.expect(close)?;
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits()?;
                Ok(Poly::constant(d.parse::<BigInt>().map_err(|_| self.err("bad integer"))?))
            }
            Some(c) => {
                self.pos += 1;
                Ok(Poly::term(1, self.variable(c)?))
            }
            None => Err(self.err("unexpected end")),
        }
    }

    fn term(&mut self) -> Result<Poly, AlgebraError> {
        let mut acc = Poly::one();
        let mut any = false;
        loop {
            match self.peek() {
                None | Some(b'+') | Some(b'-') | Some(b')') | Some(b'}') | Some(b',') => break,
                Some(b'*') => {
                    self.pos += 1;
                }
                _ => {
                    let a = self.atom()?;
                    let e = self.exponent()?;
                    let f = if e >= 0 {
                        a.pow(e as u32)
                    } else if a.len() == 1 {
                        let (m, c) = a.terms().next().map(|(m, c)| (m.clone(), c.clone())).unwrap();
                        if c != BigInt::from(1) {
                            return Err(self.err("negative power of a non-monomial"));
                        }
                        Poly::term(1, m.pow(e))
                    } else {
                        return Err(self.err("negative power of a non-monomial"));
                    };
                    acc = &acc * &f;
                    any = true;
                }
            }
        }
        if !any {
            return Err(self.err("empty term"));
        }
        Ok(acc)
    }

    fn expr(&mut self) -> Result<Poly, AlgebraError> {
        let mut acc = Poly::zero();
        let mut sign = 1;
        if self.peek() == Some(b'+') {
            self.pos += 1;
        } else if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -1;
        }
        loop {
            let t = self.term()?;
            acc = if sign > 0 { &acc + &t } else { &acc - &t };
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => break,
            }
        }
        Ok(acc)
    }
}

/// Parse a polynomial expression.
pub fn parse_poly(src: &str) -> Result<Poly, AlgebraError> {
    let text = clean(src);
    let mut r = Reader { s: text.as_bytes(), pos: 0 };
    let p = r.expr()?;
    if r.peek().is_some() {
        return Err(r.err("trailing input"));
    }
    Ok(p)
}

/// Parse a product of factors `(1 - m_1)(1 - m_2)...` into the monomials `m_i`.
pub fn parse_den(src: &str) -> Result<Vec<Monomial>, AlgebraError> {
    let text = clean(src);
    let mut r = Reader { s: text.as_bytes(), pos: 0 };
    let mut out = Vec::new();
    while r.peek().is_some() {
        if r.peek() == Some(b'*') {
            r.pos += 1;
            continue;
        }
        r.expect(b'(')?;
        let p = r.expr()?;
        r.expect(b')')?;
        let one_minus = &Poly::one() - &p;
        if one_minus.len() != 1 {
            return Err(r.err("factor is not of the form 1 - m"));
        }
        let (m, c) = one_minus.terms().next().unwrap();
        if *c != BigInt::from(1) {
            return Err(r.err("factor is not of the form 1 - m"));
        }
        out.push(m.clone());
    }
    Ok(out)
}
