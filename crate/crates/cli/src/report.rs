//! Deterministic check reports: a plain-text summary for stdout and an
//! optional key=value sidecar.  No timestamps; checks render in insertion
//! order, which every suite keeps deterministic.

use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    fn word(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckRecord {
    pub id: String,
    pub status: Status,
    pub witness: String,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn new(suite: &str) -> Report {
        Report {
            suite: suite.to_string(),
            checks: Vec::new(),
        }
    }

    pub fn add(&mut self, id: impl Into<String>, status: Status, witness: impl Into<String>) {
        self.checks.push(CheckRecord {
            id: id.into(),
            status,
            witness: witness.into(),
        });
    }

    /// Records an Ok(()) as pass and an Err as error, with the message as
    /// witness.
    pub fn add_result<E: std::fmt::Display>(
        &mut self,
        id: impl Into<String>,
        result: Result<(), E>,
    ) {
        match result {
            Ok(()) => self.add(id, Status::Pass, ""),
            Err(e) => self.add(id, Status::Error, e.to_string()),
        }
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let pass = self.checks.iter().filter(|c| c.status == Status::Pass).count();
        let fail = self.checks.iter().filter(|c| c.status == Status::Fail).count();
        let error = self.checks.iter().filter(|c| c.status == Status::Error).count();
        (pass, fail, error)
    }

    pub fn all_pass(&self) -> bool {
        let (_, fail, error) = self.counts();
        fail == 0 && error == 0
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "== suite {} ==", self.suite);
        for c in &self.checks {
            let mark = match c.status {
                Status::Pass => "PASS ",
                Status::Fail => "FAIL ",
                Status::Error => "ERROR",
            };
            if c.witness.is_empty() {
                let _ = writeln!(out, "{mark} {}", c.id);
            } else {
                let _ = writeln!(out, "{mark} {}: {}", c.id, c.witness);
            }
        }
        let (pass, fail, error) = self.counts();
        let _ = writeln!(
            out,
            "-- {} checks: {pass} pass, {fail} fail, {error} error",
            self.checks.len()
        );
        out
    }

    pub fn render_sidecar(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite = {}", self.suite);
        for c in &self.checks {
            let _ = writeln!(out, "{} = {}", c.id, c.status.word());
            if !c.witness.is_empty() {
                let _ = writeln!(out, "{}.witness = {}", c.id, c.witness);
            }
        }
        let (pass, fail, error) = self.counts();
        let _ = writeln!(out, "total = {}", self.checks.len());
        let _ = writeln!(out, "pass = {pass}");
        let _ = writeln!(out, "fail = {fail}");
        let _ = writeln!(out, "error = {error}");
        out
    }
}
