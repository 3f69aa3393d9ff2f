use std::fmt;
use std::path::PathBuf;
use std::time::Duration;

/// Summary of one generator run, printed as `key: value` lines.
#[derive(Debug, Default)]
pub struct RunReport {
    pub command: String,
    pub k: usize,
    pub candidates_tested: usize,
    pub exceptions_found: usize,
    pub skipped_not_3connected: usize,
    pub elapsed: Duration,
    pub outputs: Vec<PathBuf>,
    /// Extra lines in insertion order, e.g. the skip mode or class count.
    pub extra: Vec<(&'static str, String)>,
}

impl RunReport {
    pub fn new(command: &str, k: usize) -> Self {
        RunReport { command: command.to_string(), k, ..Default::default() }
    }

    pub fn note(&mut self, key: &'static str, value: impl fmt::Display) {
        self.extra.push((key, value.to_string()));
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "command: {}", self.command)?;
        writeln!(f, "k: {}", self.k)?;
        for (key, value) in &self.extra {
            writeln!(f, "{key}: {value}")?;
        }
        writeln!(f, "candidates_tested: {}", self.candidates_tested)?;
        writeln!(f, "exceptions_found: {}", self.exceptions_found)?;
        writeln!(f, "skipped_not_3connected: {}", self.skipped_not_3connected)?;
        writeln!(f, "elapsed: {:.3}s", self.elapsed.as_secs_f64())?;
        let outputs: Vec<String> = self.outputs.iter().map(|p| p.display().to_string()).collect();
        writeln!(f, "outputs: {}", outputs.join(" "))
    }
}
