//! Line-oriented instance and solution files.
//!
//! Instance:
//! ```text
//! pattern_length <L>
//! alphabet <tok> ...        # optional, fixes symbol ids
//! budget <d>                # optional
//! string <weight> <tok> ...
//! ```
//! Solution (one or more blocks):
//! ```text
//! pattern <tok> ...
//! offsets <o1> <o2> ...
//! cost <c>                  # optional
//! ```

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};

use super::objective::{verify_parts, VerifyReport};
use super::types::{Alphabet, PatternInstance, Sequence, Solution, WeightedString};

/// Non-blank, non-comment lines as `(1-based line number, keyword, rest)`.
pub(crate) fn directives(text: &str) -> impl Iterator<Item = (usize, &str, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            return None;
        }
        let (kw, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        Some((i + 1, kw, rest.trim()))
    })
}

pub(crate) fn parse_num<T: FromStr>(line: usize, what: &str, s: &str) -> Result<T> {
    s.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} {s:?}")))
}

pub fn parse_instance(text: &str) -> Result<PatternInstance> {
    let mut pattern_length = None;
    let mut budget = None;
    let mut alphabet = Alphabet::new();
    let mut fixed_alphabet = false;
    let mut raw_strings: Vec<(usize, u64, Vec<&str>)> = Vec::new();

    for (line, kw, rest) in directives(text) {
        if pattern_length.is_none() && kw != "pattern_length" {
            return Err(parse_err(line, "first directive must be `pattern_length`"));
        }
        match kw {
            "pattern_length" => {
                if pattern_length.is_some() {
                    return Err(parse_err(line, "duplicate `pattern_length`"));
                }
                pattern_length = Some(parse_num::<usize>(line, "pattern length", rest)?);
            }
            "alphabet" => {
                if fixed_alphabet || !raw_strings.is_empty() {
                    return Err(parse_err(line, "`alphabet` must appear once, before any string"));
                }
                alphabet = Alphabet::from_tokens(rest.split_whitespace())
                    .map_err(|e| parse_err(line, e.to_string()))?;
                fixed_alphabet = true;
            }
            "budget" => {
                if budget.is_some() {
                    return Err(parse_err(line, "duplicate `budget`"));
                }
                budget = Some(parse_num::<u64>(line, "budget", rest)?);
            }
            "string" => {
                let mut toks = rest.split_whitespace();
                let w = toks
                    .next()
                    .ok_or_else(|| parse_err(line, "missing weight"))?;
                let w = parse_num::<u64>(line, "weight", w)?;
                raw_strings.push((line, w, toks.collect()));
            }
            other => return Err(parse_err(line, format!("unknown directive `{other}`"))),
        }
    }

    let pattern_length = pattern_length.ok_or_else(|| parse_err(0, "missing `pattern_length`"))?;
    let mut strings = Vec::with_capacity(raw_strings.len());
    for (line, w, toks) in raw_strings {
        let seq = toks
            .into_iter()
            .map(|t| {
                if fixed_alphabet {
                    alphabet
                        .symbol(t)
                        .ok_or_else(|| parse_err(line, format!("token {t:?} not in alphabet")))
                } else {
                    alphabet.insert(t).map_err(|e| parse_err(line, e.to_string()))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let ws = WeightedString::new(Sequence::new(seq), w)
            .map_err(|e| parse_err(line, e.to_string()))?;
        strings.push(ws);
    }
    PatternInstance::new(alphabet, strings, pattern_length, budget)
}

pub fn write_instance(instance: &PatternInstance) -> String {
    let a = instance.alphabet();
    let mut out = String::new();
    writeln!(out, "pattern_length {}", instance.pattern_length()).unwrap();
    writeln!(out, "alphabet {}", a.tokens().join(" ")).unwrap();
    if let Some(d) = instance.budget() {
        writeln!(out, "budget {d}").unwrap();
    }
    for ws in instance.strings() {
        writeln!(out, "string {} {}", ws.weight(), a.render(ws.seq())).unwrap();
    }
    out
}

/// One solution block as read from a file; the cost line is optional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionRecord {
    pub pattern: Sequence,
    pub offsets: Vec<usize>,
    pub cost: Option<u64>,
}

impl SolutionRecord {
    pub fn verify(&self, instance: &PatternInstance) -> VerifyReport {
        verify_parts(instance, &self.pattern, &self.offsets, self.cost)
    }
}

impl From<Solution> for SolutionRecord {
    fn from(s: Solution) -> Self {
        SolutionRecord {
            pattern: s.pattern,
            offsets: s.offsets,
            cost: Some(s.total_cost),
        }
    }
}

/// Reads every solution block. Pattern tokens must belong to `alphabet`.
/// An `optimum <c>` line is accepted and ignored so solver output parses as-is.
pub fn parse_solutions(text: &str, alphabet: &Alphabet) -> Result<Vec<SolutionRecord>> {
    let mut out: Vec<SolutionRecord> = Vec::new();
    let mut pending: Option<(usize, Sequence)> = None;
    for (line, kw, rest) in directives(text) {
        match kw {
            "optimum" => {
                parse_num::<u64>(line, "optimum", rest)?;
            }
            "pattern" => {
                if let Some((l, _)) = pending {
                    return Err(parse_err(l, "`pattern` without `offsets`"));
                }
                let seq = alphabet
                    .parse_seq(rest)
                    .map_err(|e| parse_err(line, e.to_string()))?;
                pending = Some((line, seq));
            }
            "offsets" => {
                let (_, pattern) = pending
                    .take()
                    .ok_or_else(|| parse_err(line, "`offsets` before `pattern`"))?;
                let offsets = rest
                    .split_whitespace()
                    .map(|t| parse_num::<usize>(line, "offset", t))
                    .collect::<Result<Vec<_>>>()?;
                out.push(SolutionRecord {
                    pattern,
                    offsets,
                    cost: None,
                });
            }
            "cost" => {
                let last = match (pending.is_some(), out.last_mut()) {
                    (false, Some(last)) if last.cost.is_none() => last,
                    _ => return Err(parse_err(line, "`cost` must follow `offsets`")),
                };
                last.cost = Some(parse_num::<u64>(line, "cost", rest)?);
            }
            other => return Err(parse_err(line, format!("unknown directive `{other}`"))),
        }
    }
    if let Some((l, _)) = pending {
        return Err(parse_err(l, "`pattern` without `offsets`"));
    }
    if out.is_empty() {
        return Err(Error::Parse {
            line: 0,
            msg: "no solution block".into(),
        });
    }
    Ok(out)
}

pub fn write_solution(alphabet: &Alphabet, sol: &Solution) -> String {
    let offsets = sol
        .offsets
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    format!(
        "pattern {}\noffsets {}\ncost {}\n",
        alphabet.render(&sol.pattern),
        offsets,
        sol.total_cost
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "\
# two strings
pattern_length 2
budget 3
string 2 a b c
string 1 c a
";

    #[test]
    fn parses_and_rewrites() {
        let inst = parse_instance(SMALL).unwrap();
        assert_eq!(inst.pattern_length(), 2);
        assert_eq!(inst.budget(), Some(3));
        assert_eq!(inst.strings().len(), 2);
        assert_eq!(inst.alphabet().tokens(), ["a", "b", "c"]);
        let again = parse_instance(&write_instance(&inst)).unwrap();
        assert_eq!(again, inst);
    }

    #[test]
    fn declared_alphabet_keeps_unused_symbols() {
        let inst = parse_instance("pattern_length 1\nalphabet z o a\nstring 1 a\n").unwrap();
        assert_eq!(inst.alphabet().len(), 3);
        assert_eq!(inst.alphabet().symbol("a").unwrap().0, 2);
        let err = parse_instance("pattern_length 1\nalphabet z\nstring 1 a\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn instance_errors_carry_lines() {
        for (text, line) in [
            ("budget 3\npattern_length 1\n", 1),
            ("pattern_length x\n", 1),
            ("pattern_length 1\nstring 0 a\n", 2),
            ("pattern_length 1\nstring\n", 2),
            ("pattern_length 1\nfoo 1\n", 2),
            ("pattern_length 1\nbudget 1\nbudget 2\n", 3),
        ] {
            match parse_instance(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        // too-short strings surface as instance errors
        assert!(matches!(
            parse_instance("pattern_length 3\nstring 1 a b\n"),
            Err(Error::InvalidInstance(_))
        ));
    }

    #[test]
    fn solution_blocks() {
        let inst = parse_instance(SMALL).unwrap();
        let text = "optimum 1\npattern a b\noffsets 0 1\ncost 1\n\npattern c a\noffsets 2 0\n";
        let recs = parse_solutions(text, inst.alphabet()).unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[0].cost, Some(1));
        assert_eq!(recs[1].cost, None);
        assert_eq!(recs[1].offsets, vec![2, 0]);

        assert!(parse_solutions("pattern a b\n", inst.alphabet()).is_err());
        assert!(parse_solutions("offsets 0\n", inst.alphabet()).is_err());
        assert!(parse_solutions("pattern q\noffsets 0\n", inst.alphabet()).is_err());
        assert!(parse_solutions("cost 1\n", inst.alphabet()).is_err());
        assert!(parse_solutions("", inst.alphabet()).is_err());
    }

    #[test]
    fn written_solution_parses_back() {
        let inst = parse_instance(SMALL).unwrap();
        let sol = Solution {
            pattern: inst.alphabet().parse_seq("c a").unwrap(),
            offsets: vec![1, 0],
            total_cost: 2,
        };
        let recs = parse_solutions(&write_solution(inst.alphabet(), &sol), inst.alphabet()).unwrap();
        assert_eq!(recs, vec![SolutionRecord::from(sol)]);
    }
}
