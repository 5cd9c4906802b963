//! Problem model and instance file format.
//!
//! An instance is an integer list (duplicates allowed, order preserved), a
//! target sum, and a subset cardinality. The text format is two lines:
//!
//! ```text
//! n m S
//! x1 x2 ... xn
//! ```
//!
//! Lines starting with `#` are comments; readers accept arbitrary
//! whitespace runs, writers emit exactly the shape above.

use crate::error::{Error, Result};

/// Per-element magnitude cap. Keeps every k-sum, and the collision key
/// built from two of them, inside a checked `i128` accumulator.
pub const MAX_ELEMENT_MAGNITUDE: i64 = 1 << 62;

/// One subset-sum question: does some `cardinality`-element index subset
/// of `values` sum to `target`?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemInstance {
    values: Vec<i64>,
    target: i128,
    cardinality: usize,
}

/// Achievable sums of an m-element subset: `[s_min, s_max]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FeasibleRange {
    pub s_min: i128,
    pub s_max: i128,
}

impl FeasibleRange {
    pub fn contains(&self, target: i128) -> bool {
        self.s_min <= target && target <= self.s_max
    }
}

impl ProblemInstance {
    pub fn new(values: Vec<i64>, cardinality: usize, target: i128) -> Result<Self> {
        for (i, &v) in values.iter().enumerate() {
            if v.checked_abs().is_none_or(|a| a > MAX_ELEMENT_MAGNITUDE) {
                return Err(Error::InvalidArgument(format!(
                    "element {} ({v}) exceeds the supported magnitude 2^62",
                    i + 1
                )));
            }
        }
        Ok(Self {
            values,
            target,
            cardinality,
        })
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn target(&self) -> i128 {
        self.target
    }

    pub fn cardinality(&self) -> usize {
        self.cardinality
    }

    /// Same values, different question.
    pub fn with_target(&self, target: i128) -> Self {
        Self {
            target,
            ..self.clone()
        }
    }

    /// Parses the two-line text format. Errors carry the 1-based line and
    /// column of the offending token.
    pub fn parse(text: &str) -> Result<Self> {
        let mut tokens = tokenize(text);
        let n: usize = next_token(&mut tokens, text, "set size n")?;
        let m: usize = next_token(&mut tokens, text, "cardinality m")?;
        let target: i128 = next_token(&mut tokens, text, "target S")?;
        let mut values = Vec::with_capacity(n);
        for i in 0..n {
            let tok = take_token(&mut tokens, text, &format!("element {}", i + 1))?;
            let v: i64 = tok.parse_as()?;
            if v.unsigned_abs() > MAX_ELEMENT_MAGNITUDE as u64 {
                return Err(tok.error("integer out of supported width (|x| <= 2^62)"));
            }
            values.push(v);
        }
        if let Some(extra) = tokens.next() {
            return Err(extra.error(&format!("unexpected token after {n} elements")));
        }
        Ok(Self {
            values,
            target,
            cardinality: m,
        })
    }

    /// Canonical writer shape: header line, then one line of values.
    pub fn render(&self) -> String {
        let mut out = format!("{} {} {}\n", self.n(), self.cardinality, self.target);
        if !self.values.is_empty() {
            let line: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// `[s_min, s_max]`: sums of the m smallest and m largest elements.
    pub fn feasible_range(&self) -> Result<FeasibleRange> {
        feasible_range_of(&self.values, self.cardinality)
    }

    /// True iff the target lies in the feasible range. Every solver checks
    /// this before building anything.
    pub fn in_range(&self) -> Result<bool> {
        Ok(self.feasible_range()?.contains(self.target))
    }

    /// Sum of all n elements.
    pub fn total_sum(&self) -> Result<i128> {
        let mut acc: i128 = 0;
        for &v in &self.values {
            acc = acc.checked_add(v as i128).ok_or(Error::Overflow {
                context: "total sum",
            })?;
        }
        Ok(acc)
    }

    /// Swaps the question for its mirror image: an (n-m)-subset summing to
    /// `total - S`. A subset solves the transformed instance iff its
    /// complement solves the original; applying the transform twice gives
    /// back the original instance.
    pub fn complement_transform(&self) -> Result<Self> {
        let n = self.n();
        let m = self.cardinality;
        if m > n {
            return Err(Error::CardinalityTooLarge { m, n });
        }
        let target = self
            .total_sum()?
            .checked_sub(self.target)
            .ok_or(Error::Overflow {
                context: "complement target",
            })?;
        Ok(Self {
            values: self.values.clone(),
            target,
            cardinality: n - m,
        })
    }
}

/// Range over an arbitrary index sub-universe; shared with the solvers,
/// which screen per-exclusion and per-block subproblems the same way.
pub(crate) fn feasible_range_of(values: &[i64], m: usize) -> Result<FeasibleRange> {
    let n = values.len();
    if m > n {
        return Err(Error::CardinalityTooLarge { m, n });
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let s_min = sorted[..m].iter().map(|&v| v as i128).sum();
    let s_max = sorted[n - m..].iter().map(|&v| v as i128).sum();
    Ok(FeasibleRange { s_min, s_max })
}

struct Token<'a> {
    line: usize,
    column: usize,
    text: &'a str,
}

impl Token<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn parse_as<T: std::str::FromStr>(&self) -> Result<T> {
        self.text
            .parse()
            .map_err(|_| self.error(&format!("malformed integer `{}`", self.text)))
    }
}

fn tokenize(text: &str) -> impl Iterator<Item = Token<'_>> {
    text.lines().enumerate().flat_map(|(ln, line)| {
        let body = if line.trim_start().starts_with('#') {
            ""
        } else {
            line
        };
        body.split_whitespace().map(move |word| {
            // offset_from is safe: word borrows from line
            let column = unsafe { word.as_ptr().offset_from(line.as_ptr()) } as usize + 1;
            Token {
                line: ln + 1,
                column,
                text: word,
            }
        })
    })
}

fn take_token<'a>(
    tokens: &mut impl Iterator<Item = Token<'a>>,
    text: &str,
    what: &str,
) -> Result<Token<'a>> {
    tokens.next().ok_or_else(|| Error::Parse {
        line: text.lines().count().max(1),
        column: 1,
        message: format!("missing {what}"),
    })
}

fn next_token<'a, T: std::str::FromStr>(
    tokens: &mut impl Iterator<Item = Token<'a>>,
    text: &str,
    what: &str,
) -> Result<T> {
    take_token(tokens, text, what)?.parse_as()
}
