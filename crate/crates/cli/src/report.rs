//! The JSON report emitted by `--json`. Key names and order are stable.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exact,
    Heuristic,
    Formula,
    TreeDp,
    TkPeel,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Heuristic => "heuristic",
            Method::Formula => "formula",
            Method::TreeDp => "tree-dp",
            Method::TkPeel => "tk-peel",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputSummary {
    pub n: usize,
    pub m: usize,
    pub diameter: u32,
}

/// Two vertices sharing a truncated vector under the checked set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Collision {
    pub pair: [String; 2],
    pub vector: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultSummary {
    pub size: usize,
    /// Original labels, ascending by vertex id.
    pub witness: Option<Vec<String>>,
    /// Set by `verify`.
    pub resolving: Option<bool>,
    pub collision: Option<Collision>,
    /// Exact recheck requested with `--verify`.
    pub oracle_size: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub input: InputSummary,
    /// `None` for quantities not tied to a truncation level.
    pub k: Option<u32>,
    pub result: ResultSummary,
    pub method: Option<Method>,
    pub elapsed_ms: f64,
    pub warnings: Vec<String>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self, quantity: &str) -> String {
        let mut s = String::new();
        let i = &self.input;
        let _ = writeln!(s, "graph: n = {}, m = {}, diameter = {}", i.n, i.m, i.diameter);
        if let Some(k) = self.k {
            let _ = writeln!(s, "k = {k}");
        }
        match self.result.resolving {
            Some(yes) => {
                let _ = writeln!(s, "resolving: {}", if yes { "yes" } else { "no" });
                if let Some(c) = &self.result.collision {
                    let _ = writeln!(s, "collision: {} and {} share {:?}", c.pair[0], c.pair[1], c.vector);
                }
            }
            None => {
                let method = self.method.map_or(String::new(), |m| format!(" ({})", m.tag()));
                let _ = writeln!(s, "{quantity} = {}{method}", self.result.size);
            }
        }
        if let Some(w) = &self.result.witness {
            let _ = writeln!(s, "set: {}", w.join(" "));
        }
        if let Some(o) = self.result.oracle_size {
            let _ = writeln!(s, "exact recheck: {o}");
        }
        let _ = writeln!(s, "elapsed: {:.3} ms", self.elapsed_ms);
        s
    }
}

/// Milliseconds since `start`, rounded to the microsecond.
pub fn millis(start: std::time::Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}
