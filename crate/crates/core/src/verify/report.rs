use serde::Serialize;
use serde_json::Value;
use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// A finite claim, fully verified.
    Pass,
    /// An unbounded claim, verified exhaustively up to the recorded bound.
    BoundedPass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::BoundedPass => "bounded_pass",
            Status::Fail => "fail",
        })
    }
}

/// A counterexample or mismatch found by a check.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Value(u64),
    Vector([u64; 3]),
    Labeled { label: String, n: u64 },
}

impl Witness {
    pub fn labeled(label: impl Into<String>, n: u64) -> Self {
        Witness::Labeled {
            label: label.into(),
            n,
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Value(n) => write!(f, "{n}"),
            Witness::Vector([a, b, c]) => write!(f, "({a},{b},{c})"),
            Witness::Labeled { label, n } => write!(f, "{label} @ {n}"),
        }
    }
}

/// One check's outcome. Serializes with fields in declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    pub elapsed_ms: u64,
    pub bound_note: String,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Equality ignoring `elapsed_ms`.
    pub fn same_content(&self, other: &Self) -> bool {
        VerificationReport {
            elapsed_ms: 0,
            ..self.clone()
        } == VerificationReport {
            elapsed_ms: 0,
            ..other.clone()
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "[{}] {} ({} ms)",
            self.status, self.check, self.elapsed_ms
        )?;
        for (k, v) in &self.params {
            writeln!(f, "  {k}: {v}")?;
        }
        if !self.witnesses.is_empty() {
            let shown: Vec<String> = self
                .witnesses
                .iter()
                .take(20)
                .map(|w| w.to_string())
                .collect();
            let more = self.witnesses.len().saturating_sub(20);
            write!(f, "  witnesses: {}", shown.join(", "))?;
            if more > 0 {
                write!(f, " … (+{more})")?;
            }
            writeln!(f)?;
        }
        write!(f, "  note: {}", self.bound_note)
    }
}

/// Collects params and witnesses while a check runs.
pub struct ReportBuilder {
    check: &'static str,
    started: Instant,
    params: BTreeMap<String, Value>,
    witnesses: Vec<Witness>,
}

impl ReportBuilder {
    pub fn start(check: &'static str) -> Self {
        ReportBuilder {
            check,
            started: Instant::now(),
            params: BTreeMap::new(),
            witnesses: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn witness(&mut self, w: Witness) {
        self.witnesses.push(w);
    }

    pub fn witnesses(&mut self, ws: impl IntoIterator<Item = Witness>) {
        self.witnesses.extend(ws);
    }

    /// `success` is the status used when no witness was recorded.
    pub fn finish(self, success: Status, bound_note: impl Into<String>) -> VerificationReport {
        let status = if self.witnesses.is_empty() {
            success
        } else {
            Status::Fail
        };
        VerificationReport {
            check: self.check.to_string(),
            params: self.params,
            status,
            witnesses: self.witnesses,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
            bound_note: bound_note.into(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_field_order_is_fixed() {
        let mut b = ReportBuilder::start("demo");
        b.param("bound", 10u64);
        b.witness(Witness::Value(3));
        b.witness(Witness::Vector([1, 2, 3]));
        b.witness(Witness::labeled("s+5s+t", 13));
        let r = b.finish(Status::BoundedPass, "note");
        let line = r.to_json_line();
        let keys = [
            "\"check\"",
            "\"params\"",
            "\"status\"",
            "\"witnesses\"",
            "\"elapsed_ms\"",
            "\"bound_note\"",
        ];
        let pos: Vec<usize> = keys.iter().map(|k| line.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]), "{line}");
        assert!(line.contains("\"status\":\"fail\""));
        assert!(line.contains("[3,[1,2,3],{\"label\":\"s+5s+t\",\"n\":13}]"));
        assert!(!line.contains('.'), "no floating point: {line}");
    }

    #[test]
    fn empty_witnesses_keep_success_status() {
        let r = ReportBuilder::start("x").finish(Status::BoundedPass, "");
        assert_eq!(r.status, Status::BoundedPass);
        assert!(r.to_json_line().contains("\"bounded_pass\""));
    }
}
