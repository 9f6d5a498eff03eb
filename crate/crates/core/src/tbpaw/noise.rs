//! Noise on rendered TB-paws: letters swapped in for whole tokens, or
//! letters sprinkled between digits.

use super::TbPaw;
use crate::error::{Error, Result};
use crate::label::Label;
use crate::rng::Lcg;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Noise {
    /// Tokens whose rendering equals a table value are written as the letter.
    Substitute(BTreeMap<char, String>),
    /// `count` lowercase letters at seeded positions.
    InsertLetters { seed: u64, count: usize },
}

impl Noise {
    /// Parses `x=11,y=22`.
    pub fn parse_table(s: &str) -> Result<Noise> {
        let mut table = BTreeMap::new();
        for pair in s.split(',').filter(|p| !p.trim().is_empty()) {
            let (k, v) = pair
                .split_once('=')
                .ok_or_else(|| Error::NonDecodable(format!("entry {pair} is not letter=digits")))?;
            let mut chars = k.trim().chars();
            let (Some(c), None) = (chars.next(), chars.next()) else {
                return Err(Error::NonDecodable(format!("key {k} is not one letter")));
            };
            if table.insert(c, v.trim().to_string()).is_some() {
                return Err(Error::NonDecodable(format!("letter {c} listed twice")));
            }
        }
        let n = Noise::Substitute(table);
        n.check()?;
        Ok(n)
    }

    fn check(&self) -> Result<()> {
        if let Noise::Substitute(table) = self {
            for (&c, v) in table {
                if !c.is_ascii_alphabetic() {
                    return Err(Error::NonDecodable(format!("{c} is not a letter")));
                }
                if v.is_empty() || !v.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::NonDecodable(format!("{c} maps to {v:?}, not a digit string")));
                }
            }
            for (a, va) in table {
                for (b, vb) in table {
                    if a != b && vb.starts_with(va.as_str()) {
                        return Err(Error::NonDecodable(format!("{a}={va} is a prefix of {b}={vb}")));
                    }
                }
            }
        }
        Ok(())
    }
}

pub fn noise_encode(d: &TbPaw, noise: &Noise) -> Result<String> {
    noise.check()?;
    match noise {
        Noise::Substitute(table) => {
            let back: BTreeMap<&str, char> = table.iter().map(|(c, v)| (v.as_str(), *c)).collect();
            Ok(d.tokens
                .iter()
                .map(|t| {
                    let r = t.render();
                    back.get(r.as_str()).map(|c| c.to_string()).unwrap_or(r)
                })
                .collect())
        }
        Noise::InsertLetters { seed, count } => {
            let mut rng = Lcg::new(*seed);
            let mut chars: Vec<char> = d.rendered().chars().collect();
            for _ in 0..*count {
                let at = rng.below(chars.len() + 1);
                let letter = (b'a' + rng.below(26) as u8) as char;
                chars.insert(at, letter);
            }
            Ok(chars.into_iter().collect())
        }
    }
}

/// Restores the rendered string. Token boundaries inside digit runs are not
/// recoverable, so each digit there comes back as its own token.
pub fn noise_decode(s: &str, noise: &Noise) -> Result<TbPaw> {
    noise.check()?;
    let mut tokens = Vec::new();
    for c in s.chars() {
        if let Some(d) = c.to_digit(10) {
            tokens.push(Label::Num(d as i64));
            continue;
        }
        match noise {
            Noise::Substitute(table) => {
                let v = table.get(&c).ok_or_else(|| Error::NonDecodable(format!("letter {c} not in table")))?;
                tokens.push(Label::Num(v.parse().map_err(|_| Error::NonDecodable(v.clone()))?));
            }
            Noise::InsertLetters { .. } if c.is_ascii_alphabetic() => {}
            Noise::InsertLetters { .. } => return Err(Error::NonDecodable(format!("unexpected {c:?}"))),
        }
    }
    Ok(TbPaw::new(tokens, "noise removed"))
}
