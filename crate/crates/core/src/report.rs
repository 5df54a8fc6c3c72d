//! Pass/fail reports shared by the verification suites and the CLI.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub detail: Value,
}

/// Informational entry that does not affect `pass`.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Note {
    pub name: String,
    pub detail: Value,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Report {
    pub suite: String,
    pub pass: bool,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<Note>,
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Report { suite: suite.to_string(), pass: true, checks: Vec::new(), notes: Vec::new() }
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool, detail: Value) -> &mut Self {
        self.pass &= pass;
        self.checks.push(Check { name: name.into(), pass, detail });
        self
    }

    pub fn note(&mut self, name: impl Into<String>, detail: Value) -> &mut Self {
        self.notes.push(Note { name: name.into(), detail });
        self
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}
