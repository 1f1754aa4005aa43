//! The small integer expression language used by the data files.
//!
//! Expressions support `+ - * / %` (floor division), comparisons, `&&`, `||`,
//! `!`, parentheses and the functions `min`, `max`. Booleans are 0 and 1.

use std::collections::HashMap;

use num_integer::Integer;

use crate::error::{Error, Result};

pub type Vars = HashMap<String, i64>;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Op(&'static str),
    LParen,
    RParen,
    Comma,
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    const OPS: [&str; 14] = ["&&", "||", "==", "!=", "<=", ">=", "<", ">", "+", "-", "*", "/", "%", "!"];
    let mut out = Vec::new();
    let cs: Vec<char> = src.chars().collect();
    let mut i = 0;
    'outer: while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = cs[start..i].iter().collect();
            out.push(Tok::Num(s.parse().map_err(|_| parse_err(src, "integer too large"))?));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[start..i].iter().collect()));
            continue;
        }
        match c {
            '(' => out.push(Tok::LParen),
            ')' => out.push(Tok::RParen),
            ',' => out.push(Tok::Comma),
            _ => {
                for op in OPS {
                    let n = op.len();
                    if i + n <= cs.len() && cs[i..i + n].iter().collect::<String>() == op {
                        out.push(Tok::Op(op));
                        i += n;
                        continue 'outer;
                    }
                }
                return Err(parse_err(src, &format!("unexpected character {c:?}")));
            }
        }
        i += 1;
    }
    Ok(out)
}

fn parse_err(src: &str, why: &str) -> Error {
    Error::Parse(format!("expression {src:?}: {why}"))
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a Vars,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat_op(&mut self, ops: &[&'static str]) -> Option<&'static str> {
        if let Some(Tok::Op(o)) = self.peek() {
            if let Some(found) = ops.iter().find(|x| *x == o) {
                self.pos += 1;
                return Some(found);
            }
        }
        None
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(parse_err(self.src, &format!("expected {t:?}")))
        }
    }

    fn or(&mut self) -> Result<i64> {
        let mut v = self.and()?;
        while self.eat_op(&["||"]).is_some() {
            let r = self.and()?;
            v = ((v != 0) || (r != 0)) as i64;
        }
        Ok(v)
    }

    fn and(&mut self) -> Result<i64> {
        let mut v = self.cmp()?;
        while self.eat_op(&["&&"]).is_some() {
            let r = self.cmp()?;
            v = ((v != 0) && (r != 0)) as i64;
        }
        Ok(v)
    }

    fn cmp(&mut self) -> Result<i64> {
        let l = self.add()?;
        if let Some(op) = self.eat_op(&["==", "!=", "<=", ">=", "<", ">"]) {
            let r = self.add()?;
            let b = match op {
                "==" => l == r,
                "!=" => l != r,
                "<=" => l <= r,
                ">=" => l >= r,
                "<" => l < r,
                _ => l > r,
            };
            return Ok(b as i64);
        }
        Ok(l)
    }

    fn add(&mut self) -> Result<i64> {
        let mut v = self.mul()?;
        while let Some(op) = self.eat_op(&["+", "-"]) {
            let r = self.mul()?;
            v = if op == "+" { v + r } else { v - r };
        }
        Ok(v)
    }

    fn mul(&mut self) -> Result<i64> {
        let mut v = self.unary()?;
        while let Some(op) = self.eat_op(&["*", "/", "%"]) {
            let r = self.unary()?;
            if op != "*" && r == 0 {
                return Err(parse_err(self.src, "division by zero"));
            }
            v = match op {
                "*" => v * r,
                "/" => Integer::div_floor(&v, &r),
                _ => Integer::mod_floor(&v, &r),
            };
        }
        Ok(v)
    }

    fn unary(&mut self) -> Result<i64> {
        if self.eat_op(&["-"]).is_some() {
            return Ok(-self.unary()?);
        }
        if self.eat_op(&["!"]).is_some() {
            return Ok((self.unary()? == 0) as i64);
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<i64> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(n)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let v = self.or()?;
                self.expect(Tok::RParen)?;
                Ok(v)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::LParen) {
                    self.pos += 1;
                    let mut args = vec![self.or()?];
                    while self.peek() == Some(&Tok::Comma) {
                        self.pos += 1;
                        args.push(self.or()?);
                    }
                    self.expect(Tok::RParen)?;
                    match name.as_str() {
                        "min" => Ok(*args.iter().min().unwrap()),
                        "max" => Ok(*args.iter().max().unwrap()),
                        _ => Err(parse_err(self.src, &format!("unknown function {name}"))),
                    }
                } else {
                    self.vars
                        .get(&name)
                        .copied()
                        .ok_or_else(|| parse_err(self.src, &format!("unbound variable {name}")))
                }
            }
            _ => Err(parse_err(self.src, "unexpected end or token")),
        }
    }
}

pub fn eval(src: &str, vars: &Vars) -> Result<i64> {
    let mut p = Parser {
        src,
        toks: tokenize(src)?,
        pos: 0,
        vars,
    };
    let v = p.or()?;
    if p.pos != p.toks.len() {
        return Err(parse_err(src, "trailing input"));
    }
    Ok(v)
}

pub fn eval_bool(src: &str, vars: &Vars) -> Result<bool> {
    Ok(eval(src, vars)? != 0)
}

/// Splits on `sep` outside of parentheses and brackets.
pub fn split_top_level<'a>(s: &'a str, sep: &str) -> Vec<&'a str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < s.len() {
        match bytes[i] {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth -= 1,
            _ => {}
        }
        if depth == 0 && s.is_char_boundary(i) && s[i..].starts_with(sep) {
            out.push(&s[start..i]);
            i += sep.len();
            start = i;
            continue;
        }
        i += 1;
    }
    out.push(&s[start..]);
    out
}

/// Expands `"lo..hi"`, `"lo..hi step k"` or a single expression; bounds inclusive.
pub fn expand_range(src: &str, vars: &Vars) -> Result<Vec<i64>> {
    let (body, step) = match src.split_once(" step ") {
        Some((b, s)) => (b, eval(s, vars)?),
        None => (src, 1),
    };
    if step <= 0 {
        return Err(parse_err(src, "step must be positive"));
    }
    match split_top_level(body, "..").as_slice() {
        [single] => Ok(vec![eval(single, vars)?]),
        [lo, hi] => {
            let (lo, hi) = (eval(lo, vars)?, eval(hi, vars)?);
            Ok((lo..=hi).step_by(step as usize).collect())
        }
        _ => Err(parse_err(src, "malformed range")),
    }
}

/// Expands a comma-separated list of ranges.
pub fn expand_range_list(src: &str, vars: &Vars) -> Result<Vec<i64>> {
    let src = src.trim();
    if src.is_empty() || src == "-" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for part in split_top_level(src, ",") {
        out.extend(expand_range(part.trim(), vars)?);
    }
    Ok(out)
}

/// Matches `input` against a pattern such as `"su({p},{q})"`, binding the
/// braced names to (possibly negative) integers.
pub fn match_pattern(pattern: &str, input: &str) -> Option<Vars> {
    let mut vars = Vars::new();
    let pat: Vec<char> = pattern.chars().collect();
    let inp: Vec<char> = input.chars().collect();
    let (mut i, mut j) = (0, 0);
    while i < pat.len() {
        if pat[i] == '{' {
            let close = pat[i..].iter().position(|&c| c == '}')? + i;
            let name: String = pat[i + 1..close].iter().collect();
            let start = j;
            if j < inp.len() && inp[j] == '-' {
                j += 1;
            }
            while j < inp.len() && inp[j].is_ascii_digit() {
                j += 1;
            }
            let text: String = inp[start..j].iter().collect();
            let v: i64 = text.parse().ok()?;
            if let Some(old) = vars.insert(name, v) {
                if old != v {
                    return None;
                }
            }
            i = close + 1;
        } else {
            if j >= inp.len() || inp[j] != pat[i] {
                return None;
            }
            i += 1;
            j += 1;
        }
    }
    (j == inp.len()).then_some(vars)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(pairs: &[(&str, i64)]) -> Vars {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn arithmetic_and_logic() {
        let v = vars(&[("p", 3), ("q", 8)]);
        assert_eq!(eval("p+q-4*(p/2)", &v).unwrap(), 7);
        assert_eq!(eval("-7/2", &v).unwrap(), -4);
        assert_eq!(eval("min(p, (p+q-1)/2)", &v).unwrap(), 3);
        assert!(eval_bool("p < q && q % 2 == 0", &v).unwrap());
        assert!(!eval_bool("!(p <= q) || p == 0", &v).unwrap());
        assert!(eval("r", &v).is_err());
        assert!(eval("1/0", &v).is_err());
    }

    #[test]
    fn ranges() {
        let v = vars(&[("m", 4)]);
        assert_eq!(expand_range_list("1..2*m-1 step 2", &v).unwrap(), vec![1, 3, 5, 7]);
        assert_eq!(expand_range_list("2, 5..4, m", &v).unwrap(), vec![2, 4]);
        assert_eq!(expand_range_list("-", &v).unwrap(), Vec::<i64>::new());
    }

    #[test]
    fn patterns() {
        let m = match_pattern("su({p},{q})", "su(2,3)").unwrap();
        assert_eq!((m["p"], m["q"]), (2, 3));
        assert!(match_pattern("su({p},{q})", "su(2,3").is_none());
        assert!(match_pattern("sl({n},R)", "sl(,R)").is_none());
        assert!(match_pattern("EI", "EII").is_none());
        assert!(match_pattern("x({a},{a})", "x(1,2)").is_none());
    }

    #[test]
    fn top_level_split() {
        assert_eq!(split_top_level("a, min(b, c), [1,2]", ","), vec!["a", " min(b, c)", " [1,2]"]);
    }
}
