//! Machine-readable check reports.

use serde::Serialize;

#[derive(Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct CheckResult {
    pub check_id: String,
    pub algebra: String,
    pub field: String,
    pub status: Status,
    pub details: String,
    pub elapsed_ms: u64,
}

#[derive(Serialize, Clone, Debug, Default)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub total: usize,
}

#[derive(Serialize, Clone, Debug)]
pub struct Report {
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    /// Order-stable assembly: sorted by check id, then algebra, then field.
    pub fn new(mut checks: Vec<CheckResult>) -> Report {
        checks.sort_by(|a, b| {
            (&a.check_id, &a.algebra, &a.field).cmp(&(&b.check_id, &b.algebra, &b.field))
        });
        let mut summary = Summary::default();
        for c in &checks {
            summary.total += 1;
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        Report { checks, summary }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{:<7} {} [{}/{}] {} ({} ms)\n",
                c.status.label().to_uppercase(),
                c.check_id,
                c.algebra,
                c.field,
                c.details,
                c.elapsed_ms
            ));
        }
        out.push_str(&format!(
            "{} checks: {} passed, {} failed, {} skipped\n",
            self.summary.total, self.summary.pass, self.summary.fail, self.summary.skipped
        ));
        out
    }
}

/// Glob with '*' as the only wildcard.
pub fn glob_match(pattern: &str, text: &str) -> bool {
    fn rec(p: &[u8], t: &[u8]) -> bool {
        match p.split_first() {
            None => t.is_empty(),
            Some((b'*', rest)) => {
                (0..=t.len()).any(|i| rec(rest, &t[i..]))
            }
            Some((c, rest)) => t.split_first().is_some_and(|(d, tr)| c == d && rec(rest, tr)),
        }
    }
    rec(pattern.as_bytes(), text.as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn globs() {
        assert!(glob_match("*", "anything"));
        assert!(glob_match("confluence.*", "confluence.rules_close"));
        assert!(!glob_match("confluence.*", "cleft.section"));
        assert!(glob_match("*.section", "cleft.section"));
        assert!(glob_match("abc", "abc"));
        assert!(!glob_match("abc", "abcd"));
    }

    #[test]
    fn report_sorts_and_counts() {
        let mk = |id: &str, status| CheckResult {
            check_id: id.to_string(),
            algebra: "A".to_string(),
            field: "Qr".to_string(),
            status,
            details: String::new(),
            elapsed_ms: 0,
        };
        let r = Report::new(vec![
            mk("b.second", Status::Fail),
            mk("a.first", Status::Pass),
            mk("c.third", Status::Skipped),
        ]);
        assert_eq!(r.checks[0].check_id, "a.first");
        assert_eq!(r.summary.total, 3);
        assert_eq!(r.summary.fail, 1);
        assert!(!r.passed());
    }
}
