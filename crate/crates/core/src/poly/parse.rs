use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

use super::Poly;

pub(super) fn format_poly(p: &Poly) -> String {
    let f = p.field();
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (e, &c) in p.coeffs().iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('+');
        }
        let cs = f.format_elem(c);
        let compound = cs.contains('+');
        let mono = match e {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{e}"),
        };
        if e == 0 {
            if compound {
                out.push_str(&format!("({cs})"));
            } else {
                out.push_str(&cs);
            }
        } else if c == 1 {
            out.push_str(&mono);
        } else if compound {
            out.push_str(&format!("({cs}){mono}"));
        } else {
            out.push_str(&cs);
            out.push_str(&mono);
        }
    }
    out
}

fn read_uint(bytes: &[u8], pos: &mut usize) -> Option<usize> {
    let st = *pos;
    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
        *pos += 1;
    }
    std::str::from_utf8(&bytes[st..*pos]).ok()?.parse().ok()
}

pub(super) fn parse_poly(field: &Field, input: &str) -> Result<Poly> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let bytes = s.as_bytes();
    let mut coeffs: Vec<Elem> = Vec::new();
    let mut pos = 0;
    let mut first = true;
    while pos < bytes.len() {
        let mut negative = false;
        match bytes[pos] {
            b'+' | b'-' => {
                negative = bytes[pos] == b'-';
                pos += 1;
            }
            _ if !first => {
                return Err(Error::Parse(format!(
                    "expected '+' or '-' at offset {pos} in '{input}'"
                )))
            }
            _ => {}
        }
        first = false;

        let coeff: Option<Elem> = if pos < bytes.len() && bytes[pos] == b'(' {
            let close = s[pos..]
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced '(' in '{input}'")))?;
            let c = field.parse_elem(&s[pos + 1..pos + close])?;
            pos += close + 1;
            Some(c)
        } else {
            let st = pos;
            while pos < bytes.len() && matches!(bytes[pos], b'0'..=b'9' | b'a' | b'^') {
                pos += 1;
            }
            if pos > st {
                Some(field.parse_elem(&s[st..pos])?)
            } else {
                None
            }
        };
        if pos < bytes.len() && bytes[pos] == b'*' {
            pos += 1;
        }
        let mut exp = 0usize;
        let mut has_x = false;
        if pos < bytes.len() && bytes[pos] == b'x' {
            has_x = true;
            pos += 1;
            exp = 1;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                exp = read_uint(bytes, &mut pos)
                    .ok_or_else(|| Error::Parse(format!("bad exponent in '{input}'")))?;
            }
        }
        if coeff.is_none() && !has_x {
            return Err(Error::Parse(format!(
                "unexpected character at offset {pos} in '{input}'"
            )));
        }
        let mut c = coeff.unwrap_or(1);
        if negative {
            c = field.neg(c);
        }
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, 0);
        }
        coeffs[exp] = field.add(coeffs[exp], c);
    }
    Ok(Poly::new(field, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_prime_field() {
        let f = Field::prime(3).unwrap();
        let p = Poly::parse(&f, "x^3+2x+2").unwrap();
        assert_eq!(p, Poly::from_ints(&f, &[2, 2, 0, 1]));
        assert_eq!(p.to_string(), "x^3+2x+2");
        let q = Poly::parse(&f, " 2 + x^3 - x ").unwrap();
        assert_eq!(q, p);
        assert_eq!(Poly::parse(&f, "2*x^3").unwrap().to_string(), "2x^3");
        assert_eq!(Poly::parse(&f, "0").unwrap().to_string(), "0");
        assert_eq!(Poly::parse(&f, "x+x+x").unwrap().to_string(), "0");
    }

    #[test]
    fn parse_extension_coefficients() {
        let f = Field::with_order(4).unwrap();
        let a = f.generator().unwrap();
        let a2 = f.mul(a, a);
        let p = Poly::parse(&f, "(a^2+1)x^3 + a").unwrap();
        assert_eq!(p, Poly::new(&f, vec![a, 0, 0, f.add(a2, 1)]));
        let q = Poly::parse(&f, "a^2x^8+a^2x^7+a^2x^6+x^3+x+1").unwrap();
        assert_eq!(q.coeff(8), a2);
        assert_eq!(q.coeff(0), 1);
        for s in ["(a+1)x^2+ax+(a+1)", "x^3+a", "a*x^4+1"] {
            let p = Poly::parse(&f, s).unwrap();
            assert_eq!(Poly::parse(&f, &p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn parse_errors() {
        let f = Field::prime(2).unwrap();
        assert!(Poly::parse(&f, "").is_err());
        assert!(Poly::parse(&f, "x^").is_err());
        assert!(Poly::parse(&f, "ax").is_err());
        assert!(Poly::parse(&f, "x y").is_err());
        assert!(Poly::parse(&f, "2x").is_err());
        assert!(Poly::parse(&f, "(1").is_err());
    }
}
