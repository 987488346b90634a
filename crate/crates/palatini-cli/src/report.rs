//! Verification reports: an ordered list of named checks, each carrying an
//! expected value (or marked report-only), the computed value, and an
//! optional wall-clock timing.
//!
//! Rendering is deterministic: with `--no-timings` two runs with the same
//! flags produce byte-identical output.

use serde::Serialize;
use std::fmt::Display;
use std::time::Instant;

#[derive(Debug, Clone, Serialize)]
pub struct Metadata {
    pub field: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
}

impl Metadata {
    pub fn bare(field: impl Into<String>) -> Self {
        Metadata {
            field: field.into(),
            prime: None,
            seed: None,
            count: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    /// Where the expected value comes from: a classical invariant, an
    /// arithmetic identity, a construction contract, ...
    pub source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    pub computed: String,
    pub report_only: bool,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ms: Option<u128>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub metadata: Metadata,
    pub checks: Vec<Check>,
    pub passed: bool,
}

pub struct ReportBuilder {
    report: Report,
    timings: bool,
}

impl ReportBuilder {
    pub fn new(command: impl Into<String>, metadata: Metadata, timings: bool) -> ReportBuilder {
        ReportBuilder {
            report: Report {
                command: command.into(),
                metadata,
                checks: Vec::new(),
                passed: true,
            },
            timings,
        }
    }
}

impl ReportBuilder {
    fn push(&mut self, mut check: Check, started: Instant) {
        if self.timings {
            check.ms = Some(started.elapsed().as_millis());
        }
        if !check.report_only && !check.pass {
            self.report.passed = false;
        }
        self.report.checks.push(check);
    }

    /// Run a computation and compare its printed value with the expectation.
    pub fn check<T: Display, U: Display>(
        &mut self,
        name: &str,
        source: &str,
        expected: T,
        compute: impl FnOnce() -> U,
    ) -> bool {
        let started = Instant::now();
        let computed = compute().to_string();
        let expected = expected.to_string();
        let pass = computed == expected;
        self.push(
            Check {
                name: name.into(),
                source: source.into(),
                expected: Some(expected),
                computed,
                report_only: false,
                pass,
                ms: None,
            },
            started,
        );
        pass
    }

    /// A check of a property that either holds or fails with a diagnostic.
    pub fn check_property(
        &mut self,
        name: &str,
        source: &str,
        compute: impl FnOnce() -> Result<(), String>,
    ) -> bool {
        let started = Instant::now();
        let outcome = compute();
        let (pass, computed) = match outcome {
            Ok(()) => (true, "holds".to_string()),
            Err(detail) => (false, format!("fails: {detail}")),
        };
        self.push(
            Check {
                name: name.into(),
                source: source.into(),
                expected: Some("holds".into()),
                computed,
                report_only: false,
                pass,
                ms: None,
            },
            started,
        );
        pass
    }

    /// Record a computed value with no expectation attached.
    pub fn report_only<U: Display>(
        &mut self,
        name: &str,
        source: &str,
        compute: impl FnOnce() -> U,
    ) {
        let started = Instant::now();
        let computed = compute().to_string();
        self.push(
            Check {
                name: name.into(),
                source: source.into(),
                expected: None,
                computed,
                report_only: true,
                pass: true,
                ms: None,
            },
            started,
        );
    }

    pub fn finish(self) -> Report {
        self.report
    }
}

impl Report {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "report: {} (field {})\n",
            self.command, self.metadata.field
        ));
        if let Some(seed) = self.metadata.seed {
            out.push_str(&format!("seed: {seed}\n"));
        }
        if let Some(prime) = self.metadata.prime {
            out.push_str(&format!("prime: {prime}\n"));
        }
        if let Some(count) = self.metadata.count {
            out.push_str(&format!("count: {count}\n"));
        }
        for c in &self.checks {
            let status = if c.report_only {
                "info"
            } else if c.pass {
                "ok  "
            } else {
                "FAIL"
            };
            out.push_str(&format!("{status} [{}] {}", c.source, c.name));
            match &c.expected {
                Some(e) if *e == c.computed => out.push_str(&format!(": {}", c.computed)),
                Some(e) => out.push_str(&format!(": expected {}, computed {}", e, c.computed)),
                None => out.push_str(&format!(": {}", c.computed)),
            }
            if let Some(ms) = c.ms {
                out.push_str(&format!(" ({ms} ms)"));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "result: {}\n",
            if self.passed { "pass" } else { "FAIL" }
        ));
        out
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            self.render_json()
        } else {
            self.render_text()
        }
    }
}
