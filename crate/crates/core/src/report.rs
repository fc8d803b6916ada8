//! Verdicts and witnesses returned by every verifier.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;

/// Which property a verifier checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Forbidden-free and every one-element extension creates a configuration.
    Sat,
    /// Every one-element extension creates a configuration through the new element.
    Semisat,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sat" => Ok(Mode::Sat),
            "semisat" => Ok(Mode::Semisat),
            other => Err(Error::MalformedInput(format!("unknown mode {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Saturated,
    SemisaturatedOnly,
    NotSemisaturated,
    ContainsForbidden,
}

impl Verdict {
    /// Short name used by `--expect`.
    pub fn slug(self) -> &'static str {
        match self {
            Verdict::Saturated => "saturated",
            Verdict::SemisaturatedOnly => "semisaturated",
            Verdict::NotSemisaturated => "not-semisaturated",
            Verdict::ContainsForbidden => "contains-forbidden",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

impl FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "saturated" => Ok(Verdict::Saturated),
            "semisaturated" | "semisaturated-only" => Ok(Verdict::SemisaturatedOnly),
            "not-semisaturated" => Ok(Verdict::NotSemisaturated),
            "contains-forbidden" => Ok(Verdict::ContainsForbidden),
            other => Err(Error::MalformedInput(format!("unknown verdict {other:?}"))),
        }
    }
}

/// Evidence attached to a verdict. Serialized untagged so each shape is
/// recognisable by its own field names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    /// New vertex whose edges to `parts[i]` get color `i + 1`.
    ColorPartition { parts: Vec<Vec<usize>> },
    /// Monochromatic clique found inside a graph.
    Clique { color: usize, vertices: Vec<usize> },
    /// New poset element placed above `down` and below `up`.
    PosetExtension { down: Vec<usize>, up: Vec<usize> },
    /// Chain or antichain found inside a poset.
    PosetSubset { chain: bool, elements: Vec<usize> },
    /// New value inserted before index `position` (0-based).
    Insertion { position: usize, value: String },
    /// Monotone subsequence (by index) found inside a sequence.
    Subsequence { increasing: bool, positions: Vec<usize> },
    /// New point, with its orientation signs against every point pair and,
    /// for cups and caps, the number of points to its left.
    Sample {
        point: (String, String),
        signs: Vec<i8>,
        #[serde(skip_serializing_if = "Option::is_none")]
        x_rank: Option<usize>,
    },
    /// Cup or cap (by point index) found inside a point set.
    PointChain { cup: bool, indices: Vec<usize> },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    /// Extension classes (or search nodes) examined.
    pub examined: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub free_extension: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forbidden_witness: Option<Witness>,
    pub stats: Stats,
}

impl VerificationReport {
    pub fn contains_forbidden(witness: Witness) -> Self {
        Self {
            verdict: Verdict::ContainsForbidden,
            free_extension: None,
            forbidden_witness: Some(witness),
            stats: Stats::default(),
        }
    }

    /// Report for a structure already known to be forbidden-free when `mode`
    /// is [`Mode::Sat`].
    pub fn from_search(mode: Mode, free: Option<Witness>, examined: u64) -> Self {
        let verdict = match (&free, mode) {
            (Some(_), _) => Verdict::NotSemisaturated,
            (None, Mode::Sat) => Verdict::Saturated,
            (None, Mode::Semisat) => Verdict::SemisaturatedOnly,
        };
        Self {
            verdict,
            free_extension: free,
            forbidden_witness: None,
            stats: Stats { examined },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }

    /// True for SATURATED and SEMISATURATED_ONLY.
    pub fn is_semisaturated(&self) -> bool {
        matches!(self.verdict, Verdict::Saturated | Verdict::SemisaturatedOnly)
    }
}
