//! Word and presentation syntax shared by every group model and the CLI.
//!
//! A word is a whitespace-separated list of items. An item is a generator
//! name or a parenthesized word, optionally followed by `^k` (any integer,
//! including `^-1`) or the suffix `⁻¹`. The names `1`, `id`, `Id` and `e`
//! denote the empty word unless the alphabet declares them. An unknown name
//! made only of single-letter generators is read letter by letter, so
//! `(yuy)^4` works without spaces.
//!
//! Presentation files hold one `gens: g1 g2 ...` line and any number of
//! `rel: W1 = W2` lines; `#` starts a comment.

use std::collections::HashSet;

use num_bigint::BigInt;

use crate::abgrp::{cokernel_of_relations, FgAbelianGroup, IntMatrix};
use crate::error::{Error, Result};

/// One letter of an expanded word: a generator index and its sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize, inverse: bool) -> Self {
        Letter { gen, inverse }
    }

    pub fn inv(self) -> Self {
        Letter { gen: self.gen, inverse: !self.inverse }
    }
}

pub fn invert_word(word: &[Letter]) -> Vec<Letter> {
    word.iter().rev().map(|l| l.inv()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
}

const IDENTITY_NAMES: [&str; 4] = ["1", "id", "Id", "e"];

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Alphabet { names: names.iter().map(|s| s.as_ref().to_string()).collect() }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Renders a word back into token syntax, e.g. `y u^-1`.
    pub fn render(&self, word: &[Letter]) -> String {
        if word.is_empty() {
            return "1".into();
        }
        word.iter()
            .map(|l| if l.inverse { format!("{}^-1", self.names[l.gen]) } else { self.names[l.gen].clone() })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    alphabet: &'a Alphabet,
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

impl Parser<'_> {
    fn column(&self) -> usize {
        self.pos + 1
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn word(&mut self, nested: bool) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None if nested => {
                    return Err(Error::MalformedWord { column: self.column(), message: "unclosed `(`".into() })
                }
                None => return Ok(out),
                Some(')') if nested => return Ok(out),
                Some(')') => {
                    return Err(Error::MalformedWord { column: self.column(), message: "unmatched `)`".into() })
                }
                Some(_) => {
                    let item = self.item()?;
                    out.extend(item);
                }
            }
        }
    }

    fn item(&mut self) -> Result<Vec<Letter>> {
        let start = self.column();
        let base = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.word(true)?;
                self.pos += 1; // ')'
                inner
            }
            Some(c) if is_name_char(c) => {
                let begin = self.pos;
                while self.peek().is_some_and(is_name_char) {
                    self.pos += 1;
                }
                let name: String = self.chars[begin..self.pos].iter().collect();
                self.resolve(&name, start)?
            }
            Some(c) => {
                return Err(Error::MalformedWord { column: start, message: format!("unexpected character `{c}`") })
            }
            None => unreachable!("item called at end of input"),
        };
        let exponent = self.exponent()?;
        Ok(power(&base, exponent))
    }

    fn resolve(&self, name: &str, column: usize) -> Result<Vec<Letter>> {
        if let Some(i) = self.alphabet.index(name) {
            return Ok(vec![Letter::new(i, false)]);
        }
        if IDENTITY_NAMES.contains(&name) {
            return Ok(Vec::new());
        }
        let split: Option<Vec<Letter>> =
            name.chars().map(|c| self.alphabet.index(&c.to_string()).map(|i| Letter::new(i, false))).collect();
        match split {
            Some(letters) if name.chars().count() > 1 => Ok(letters),
            _ => Err(Error::UnknownToken { token: name.to_string(), column }),
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        match self.peek() {
            Some('^') => {
                self.pos += 1;
                let col = self.column();
                let begin = self.pos;
                if self.peek() == Some('-') || self.peek() == Some('+') {
                    self.pos += 1;
                }
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let text: String = self.chars[begin..self.pos].iter().collect();
                text.parse::<i64>()
                    .map_err(|_| Error::MalformedWord { column: col, message: format!("bad exponent `{text}`") })
            }
            Some('⁻') if self.chars.get(self.pos + 1) == Some(&'¹') => {
                self.pos += 2;
                Ok(-1)
            }
            _ => Ok(1),
        }
    }
}

fn power(base: &[Letter], k: i64) -> Vec<Letter> {
    let unit = if k < 0 { invert_word(base) } else { base.to_vec() };
    let mut out = Vec::with_capacity(unit.len() * k.unsigned_abs() as usize);
    for _ in 0..k.unsigned_abs() {
        out.extend_from_slice(&unit);
    }
    out
}

/// Parses a word into letters with all exponents expanded.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Vec<Letter>> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0, alphabet };
    p.word(false)
}

/// A finite presentation: generators and relations `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub alphabet: Alphabet,
    pub relations: Vec<(Vec<Letter>, Vec<Letter>)>,
    /// Each relation as written in the source, e.g. `(y u y)^4 = 1`.
    pub labels: Vec<String>,
}

impl Presentation {
    /// Rows are `expsum(lhs) - expsum(rhs)` for each relation.
    pub fn abelianized_relations(&self) -> IntMatrix {
        let n = self.alphabet.len();
        let mut m = IntMatrix::zeros(self.relations.len(), n);
        for (r, (lhs, rhs)) in self.relations.iter().enumerate() {
            for l in lhs {
                m[(r, l.gen)] += if l.inverse { BigInt::from(-1) } else { BigInt::from(1) };
            }
            for l in rhs {
                m[(r, l.gen)] -= if l.inverse { BigInt::from(-1) } else { BigInt::from(1) };
            }
        }
        m
    }

    pub fn abelianization(&self) -> FgAbelianGroup {
        cokernel_of_relations(&self.abelianized_relations())
    }
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut alphabet: Option<Alphabet> = None;
    let mut pending: Vec<(usize, String)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, rest)) = line.split_once(':') else {
            return Err(Error::Presentation {
                line: line_no,
                message: format!("expected `gens:` or `rel:`, got `{line}`"),
            });
        };
        match key.trim() {
            "gens" => {
                if alphabet.is_some() {
                    return Err(Error::Presentation { line: line_no, message: "second `gens:` line".into() });
                }
                let names: Vec<&str> = rest.split_whitespace().collect();
                let mut seen = HashSet::new();
                for n in &names {
                    if !seen.insert(*n) {
                        return Err(Error::Presentation {
                            line: line_no,
                            message: format!("duplicate generator `{n}`"),
                        });
                    }
                    if !n.chars().all(is_name_char) || IDENTITY_NAMES.contains(n) {
                        return Err(Error::Presentation {
                            line: line_no,
                            message: format!("invalid generator name `{n}`"),
                        });
                    }
                }
                alphabet = Some(Alphabet::new(&names));
            }
            "rel" => pending.push((line_no, rest.to_string())),
            other => {
                return Err(Error::Presentation { line: line_no, message: format!("unknown line kind `{other}`") })
            }
        }
    }
    let alphabet = alphabet.ok_or(Error::Presentation { line: 0, message: "missing `gens:` line".into() })?;
    let mut relations = Vec::new();
    let mut labels = Vec::new();
    for (line_no, rel) in pending {
        let (lhs, rhs) = rel
            .split_once('=')
            .ok_or(Error::Presentation { line: line_no, message: "relation must have the form `W1 = W2`".into() })?;
        let wrap = |e: Error| Error::Presentation { line: line_no, message: e.to_string() };
        let l = parse_strict(lhs, &alphabet).map_err(wrap)?;
        let r = parse_strict(rhs, &alphabet).map_err(wrap)?;
        relations.push((l, r));
        labels.push(format!("{} = {}", lhs.trim(), rhs.trim()));
    }
    Ok(Presentation { alphabet, relations, labels })
}

/// Like [`parse_word`] but without splitting unknown names into letters, so
/// undeclared generators in a presentation are always reported.
fn parse_strict(text: &str, alphabet: &Alphabet) -> Result<Vec<Letter>> {
    let word = parse_word(text, alphabet)?;
    for tok in text.split(|c: char| !is_name_char(c)).filter(|t| !t.is_empty()) {
        if tok.chars().all(|c| c.is_ascii_digit()) || IDENTITY_NAMES.contains(&tok) || alphabet.index(tok).is_some() {
            continue;
        }
        if tok.chars().count() > 1 && tok.chars().all(|c| alphabet.index(&c.to_string()).is_some()) {
            continue;
        }
        return Err(Error::UnknownToken { token: tok.to_string(), column: text.find(tok).unwrap_or(0) + 1 });
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yuab() -> Alphabet {
        Alphabet::new(&["Y", "U", "A", "B"])
    }

    #[test]
    fn plain_tokens() {
        let w = parse_word("Y U Y", &yuab()).unwrap();
        assert_eq!(w, vec![Letter::new(0, false), Letter::new(1, false), Letter::new(0, false)]);
    }

    #[test]
    fn exponents_expand() {
        let w = parse_word("A^-1 B^2", &yuab()).unwrap();
        assert_eq!(w, vec![Letter::new(2, true), Letter::new(3, false), Letter::new(3, false)]);
        let w = parse_word("B⁻¹ Y", &yuab()).unwrap();
        assert_eq!(w, vec![Letter::new(3, true), Letter::new(0, false)]);
    }

    #[test]
    fn groups_and_juxtaposition() {
        let a = Alphabet::new(&["y", "u"]);
        assert_eq!(parse_word("(yuy)^4", &a).unwrap().len(), 12);
        assert_eq!(parse_word("(y u)^-2", &a).unwrap(), parse_word("u^-1 y^-1 u^-1 y^-1", &a).unwrap());
        assert!(parse_word("y y^-1 id", &a).unwrap().len() == 2);
    }

    #[test]
    fn unknown_generator_reports_column() {
        let err = parse_word("Y  Q", &yuab()).unwrap_err();
        assert_eq!(err, Error::UnknownToken { token: "Q".into(), column: 4 });
        assert!(matches!(parse_word("(Y U", &yuab()), Err(Error::MalformedWord { .. })));
        assert!(matches!(parse_word("Y^x", &yuab()), Err(Error::MalformedWord { .. })));
    }

    #[test]
    fn presentation_round() {
        let p = parse_presentation("gens: y u a b\nrel: yuy = uyu\nrel: (yuy)^4 = id\n").unwrap();
        assert_eq!(p.relations.len(), 2);
        let free = parse_presentation("gens: x y\n").unwrap();
        assert!(free.relations.is_empty());
        assert_eq!(free.abelianization(), FgAbelianGroup::free(2));
    }

    #[test]
    fn presentation_errors() {
        assert!(parse_presentation("gens: y\nrel: x = y\n").is_err());
        assert!(parse_presentation("gens: y y\n").is_err());
        assert!(parse_presentation("gens: y\nrel: y y\n").is_err());
        assert!(parse_presentation("rel: y = y\n").is_err());
        assert!(parse_presentation("gens: a\nfoo: a\n").is_err());
    }
}
