use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Dense 0-based symbol id within an [`Alphabet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub u32);

impl Symbol {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Ordered set of distinct tokens. Ids follow insertion order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Alphabet {
    tokens: Vec<String>,
    lookup: HashMap<String, Symbol>,
}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_tokens<I, S>(tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut alphabet = Self::new();
        for t in tokens {
            let t = t.into();
            if alphabet.lookup.contains_key(&t) {
                return Err(Error::Alphabet(format!("duplicate token {t:?}")));
            }
            alphabet.insert(t)?;
        }
        Ok(alphabet)
    }

    /// Returns the id of `token`, adding it if unseen.
    pub fn insert(&mut self, token: impl Into<String>) -> Result<Symbol> {
        let token = token.into();
        if let Some(&s) = self.lookup.get(&token) {
            return Ok(s);
        }
        if token.is_empty() || token.chars().any(char::is_whitespace) {
            return Err(Error::Alphabet(format!(
                "token {token:?} must be non-empty and free of whitespace"
            )));
        }
        let s = Symbol(self.tokens.len() as u32);
        self.lookup.insert(token.clone(), s);
        self.tokens.push(token);
        Ok(s)
    }

    pub fn symbol(&self, token: &str) -> Option<Symbol> {
        self.lookup.get(token).copied()
    }

    pub fn token(&self, s: Symbol) -> Option<&str> {
        self.tokens.get(s.index()).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn contains(&self, s: Symbol) -> bool {
        s.index() < self.tokens.len()
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.tokens.len() as u32).map(Symbol)
    }

    /// Parses whitespace-separated tokens into a sequence; unknown tokens are errors.
    pub fn parse_seq(&self, text: &str) -> Result<Sequence> {
        text.split_whitespace()
            .map(|t| {
                self.symbol(t)
                    .ok_or_else(|| Error::Alphabet(format!("unknown token {t:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Sequence::new)
    }

    /// Space-separated rendering of `seq`. Ids outside the alphabet print as `#<id>`.
    pub fn render(&self, seq: &[Symbol]) -> String {
        seq.iter()
            .map(|&s| match self.token(s) {
                Some(t) => t.to_string(),
                None => format!("#{}", s.0),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sequence(Vec<Symbol>);

impl Sequence {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Sequence(symbols)
    }

    pub fn as_slice(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<Symbol> {
        self.0
    }
}

impl std::ops::Deref for Sequence {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Vec<Symbol>> for Sequence {
    fn from(v: Vec<Symbol>) -> Self {
        Sequence(v)
    }
}

impl From<&[Symbol]> for Sequence {
    fn from(v: &[Symbol]) -> Self {
        Sequence(v.to_vec())
    }
}

/// A sequence standing for `weight` identical input strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedString {
    seq: Sequence,
    weight: u64,
}

impl WeightedString {
    pub fn new(seq: Sequence, weight: u64) -> Result<Self> {
        if weight == 0 {
            return Err(Error::InvalidInstance("string weight must be >= 1".into()));
        }
        Ok(WeightedString { seq, weight })
    }

    pub fn seq(&self) -> &Sequence {
        &self.seq
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// Number of admissible window offsets for a pattern of length `len`.
    pub fn offset_count(&self, len: usize) -> usize {
        (self.seq.len() + 1).saturating_sub(len)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternInstance {
    alphabet: Alphabet,
    strings: Vec<WeightedString>,
    pattern_length: usize,
    budget: Option<u64>,
}

impl PatternInstance {
    pub fn new(
        alphabet: Alphabet,
        strings: Vec<WeightedString>,
        pattern_length: usize,
        budget: Option<u64>,
    ) -> Result<Self> {
        if pattern_length == 0 {
            return Err(Error::InvalidInstance("pattern length must be >= 1".into()));
        }
        for (i, ws) in strings.iter().enumerate() {
            if ws.seq.len() < pattern_length {
                return Err(Error::InvalidInstance(format!(
                    "string {i} has length {} < pattern length {pattern_length}",
                    ws.seq.len()
                )));
            }
            if let Some(bad) = ws.seq.iter().find(|&&s| !alphabet.contains(s)) {
                return Err(Error::InvalidInstance(format!(
                    "string {i} uses symbol id {} outside the alphabet",
                    bad.0
                )));
            }
        }
        Ok(PatternInstance {
            alphabet,
            strings,
            pattern_length,
            budget,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn strings(&self) -> &[WeightedString] {
        &self.strings
    }

    pub fn pattern_length(&self) -> usize {
        self.pattern_length
    }

    pub fn budget(&self) -> Option<u64> {
        self.budget
    }

    pub fn with_budget(mut self, budget: Option<u64>) -> Self {
        self.budget = budget;
        self
    }

    /// Logical number of input strings, counting multiplicities.
    pub fn total_weight(&self) -> u64 {
        self.strings.iter().map(|w| w.weight).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.strings.is_empty()
    }

    /// Copy with every weight multiplied by `factor` (must be >= 1).
    pub fn scaled(&self, factor: u64) -> Result<Self> {
        let strings = self
            .strings
            .iter()
            .map(|w| WeightedString::new(w.seq.clone(), w.weight * factor))
            .collect::<Result<Vec<_>>>()?;
        PatternInstance::new(
            self.alphabet.clone(),
            strings,
            self.pattern_length,
            self.budget,
        )
    }
}

/// A pattern with one window offset per weighted string, and its claimed cost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub pattern: Sequence,
    pub offsets: Vec<usize>,
    pub total_cost: u64,
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
