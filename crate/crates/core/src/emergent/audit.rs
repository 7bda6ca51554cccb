//! Sampled property checks with deterministic per-sample seeds.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub type SampleRng = ChaCha8Rng;

/// The generator for sample `index` of a check salted by `salt`. Independent
/// of worker count and evaluation order.
pub fn sample_rng(seed: u64, salt: &str, index: u64) -> SampleRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fnv1a(salt));
    rng.set_stream(index);
    rng
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub samples: usize,
    pub passed: bool,
    /// First failing sample, rendered with the values needed to replay it.
    pub witness: Option<String>,
    /// Observations that are reported but not required to hold.
    pub informational: bool,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>, samples: usize) -> Self {
        CheckResult {
            name: name.into(),
            samples,
            passed: true,
            witness: None,
            informational: false,
        }
    }

    pub fn fail(name: impl Into<String>, samples: usize, witness: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            samples,
            passed: false,
            witness: Some(witness.into()),
            informational: false,
        }
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }

    pub fn status(&self) -> &'static str {
        match (self.informational, self.passed) {
            (false, true) => "pass",
            (false, false) => "fail",
            (true, true) => "holds",
            (true, false) => "violated",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuditReport {
    pub checks: Vec<CheckResult>,
    pub seed: u64,
    pub tolerance: f64,
}

impl AuditReport {
    pub fn new(seed: u64, tolerance: f64) -> Self {
        AuditReport {
            checks: Vec::new(),
            seed,
            tolerance,
        }
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: AuditReport) {
        self.checks.extend(other.checks);
        self.tolerance = self.tolerance.max(other.tolerance);
    }

    /// Required checks only; informational ones never fail a report.
    pub fn all_passed(&self) -> bool {
        self.checks
            .iter()
            .all(|c| c.passed || c.informational)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed && !c.informational)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Draws `n` samples with `generate`, evaluates `holds` on each (in
/// parallel) and reports the lowest-index failure rendered by `describe`.
pub fn run_check<T, G, H, D>(
    name: &str,
    n: usize,
    seed: u64,
    generate: G,
    holds: H,
    describe: D,
) -> CheckResult
where
    T: Send,
    G: Fn(&mut SampleRng) -> T + Sync,
    H: Fn(&T) -> bool + Sync,
    D: Fn(&T) -> String,
{
    let failure = (0..n as u64).into_par_iter().find_map_first(|i| {
        let mut rng = sample_rng(seed, name, i);
        let sample = generate(&mut rng);
        (!holds(&sample)).then_some((i, sample))
    });
    match failure {
        None => CheckResult::pass(name, n),
        Some((i, sample)) => {
            CheckResult::fail(name, n, format!("sample {i}: {}", describe(&sample)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn first_failure_is_lowest_index() {
        let c = run_check(
            "gt",
            200,
            7,
            |rng| rng.gen_range(0..10),
            |v| *v < 9,
            |v| v.to_string(),
        );
        assert!(!c.passed);
        let again = run_check(
            "gt",
            200,
            7,
            |rng| rng.gen_range(0..10),
            |v| *v < 9,
            |v| v.to_string(),
        );
        assert_eq!(c, again);
    }

    #[test]
    fn informational_failures_do_not_fail_report() {
        let mut r = AuditReport::new(0, 0.0);
        r.push(CheckResult::fail("x", 1, "w").informational());
        assert!(r.all_passed());
        r.push(CheckResult::fail("y", 1, "w"));
        assert!(!r.all_passed());
        assert_eq!(r.first_failure().unwrap().name, "y");
    }
}
