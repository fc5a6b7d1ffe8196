//! Exhaustive cross-checks over a grid of actions.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::actions::{
    build_graph, fixed_point_weights, invariant_deformation_dimension, second_extension,
    strata_intersections, stratum_codimension, toric_extensions, weyl_orbit, CircleAction,
};
use crate::arith::Rational;
use crate::delzant::check_lambda;
use crate::karshon::{canonical_form, edge_sphere_data, validate_admissible, KarshonGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    EquivalenceOrbits,
    ExtensionSoundness,
    StrataCount,
    CodimConsistency,
    Admissibility,
    LocalizationSum,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::EquivalenceOrbits,
        Check::ExtensionSoundness,
        Check::StrataCount,
        Check::CodimConsistency,
        Check::Admissibility,
        Check::LocalizationSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::EquivalenceOrbits => "equivalence-orbits",
            Check::ExtensionSoundness => "extension-soundness",
            Check::StrataCount => "strata-count",
            Check::CodimConsistency => "codim-consistency",
            Check::Admissibility => "admissibility",
            Check::LocalizationSum => "localization-sum",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown check {s:?}; expected one of {}",
                    Check::ALL.map(Check::name).join(", ")
                )
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("at least one check must be enabled")]
    NoChecks,
    #[error("max_ab and max_m must be positive")]
    EmptyGrid,
    #[error("lambda = {0} is not valid for any m <= {1}")]
    UselessLambda(Rational, u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    max_ab: u32,
    max_m: u32,
    lambdas: Vec<Rational>,
    checks: BTreeSet<Check>,
}

impl SweepConfig {
    pub fn new(
        max_ab: u32,
        max_m: u32,
        lambdas: Vec<Rational>,
        checks: BTreeSet<Check>,
    ) -> Result<Self, SweepError> {
        if checks.is_empty() {
            return Err(SweepError::NoChecks);
        }
        if max_ab == 0 || max_m == 0 {
            return Err(SweepError::EmptyGrid);
        }
        for l in &lambdas {
            if !(0..=max_m).any(|m| check_lambda(m, l).is_ok()) {
                return Err(SweepError::UselessLambda(l.clone(), max_m));
            }
        }
        Ok(SweepConfig {
            max_ab,
            max_m,
            lambdas,
            checks,
        })
    }

    /// The grid |a|, |b| <= 6, m <= 6 with lambda in {1, 3/2, ..., 7/2}.
    pub fn standard(checks: BTreeSet<Check>) -> Result<Self, SweepError> {
        let lambdas = ["1", "3/2", "2", "5/2", "3", "7/2"]
            .map(|s| s.parse().expect("literal"))
            .to_vec();
        SweepConfig::new(6, 6, lambdas, checks)
    }

    pub fn checks(&self) -> &BTreeSet<Check> {
        &self.checks
    }

    /// Every effective action in range whose lambda is valid for its m.
    pub fn grid(&self) -> Vec<CircleAction> {
        let n = i64::from(self.max_ab);
        let mut out = Vec::new();
        for m in 0..=self.max_m {
            for l in &self.lambdas {
                for a in -n..=n {
                    for b in -n..=n {
                        if let Ok(x) = CircleAction::new(a, b, m, l.clone()) {
                            out.push(x);
                        }
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: Check,
    pub cases: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub results: Vec<CheckResult>,
}

impl SweepSummary {
    pub fn total_failures(&self) -> usize {
        self.results.iter().map(|r| r.failures.len()).sum()
    }

    pub fn result(&self, check: Check) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.check == check)
    }

    /// Counts per check, then the first ten counterexamples overall.
    pub fn render(&self) -> String {
        use std::fmt::Write as _;
        let mut s = String::new();
        for r in &self.results {
            let _ = writeln!(
                s,
                "{}: {} cases, {} failures",
                r.check,
                r.cases,
                r.failures.len()
            );
        }
        let cases: usize = self.results.iter().map(|r| r.cases).sum();
        let _ = writeln!(
            s,
            "total: {cases} cases, {} failures",
            self.total_failures()
        );
        let all: Vec<String> = self
            .results
            .iter()
            .flat_map(|r| r.failures.iter().map(move |f| format!("[{}] {f}", r.check)))
            .collect();
        for f in all.iter().take(10) {
            let _ = writeln!(s, "  {f}");
        }
        s
    }
}

fn canonical_key(g: &KarshonGraph) -> String {
    serde_json::to_string(&canonical_form(g)).expect("graphs serialize")
}

fn check_orbits(grid: &[CircleAction]) -> (usize, Vec<String>) {
    let mut groups: BTreeMap<(u32, Rational), Vec<&CircleAction>> = BTreeMap::new();
    for x in grid {
        groups
            .entry((x.m(), x.lambda().clone()))
            .or_default()
            .push(x);
    }
    let results: Vec<(usize, Vec<String>)> = groups
        .into_par_iter()
        .map(|(_, members)| {
            let keys: Vec<String> = members
                .iter()
                .map(|x| canonical_key(&build_graph(x)))
                .collect();
            let mut class: HashMap<&str, usize> = HashMap::new();
            let ids: Vec<usize> = keys
                .iter()
                .map(|k| {
                    let n = class.len();
                    *class.entry(k.as_str()).or_insert(n)
                })
                .collect();
            let mut fails = Vec::new();
            let mut cases = 0;
            for (i, x) in members.iter().enumerate() {
                let orbit: BTreeSet<(i64, i64)> = weyl_orbit(x).into_iter().collect();
                for (j, y) in members.iter().enumerate() {
                    cases += 1;
                    let by_graph = ids[i] == ids[j];
                    let predicted = orbit.contains(&(y.a(), y.b()));
                    if by_graph != predicted {
                        fails.push(format!(
                            "{x} vs ({},{}): graphs {}, orbit prediction {}",
                            y.a(),
                            y.b(),
                            if by_graph { "equal" } else { "differ" },
                            if predicted {
                                "equivalent"
                            } else {
                                "inequivalent"
                            }
                        ));
                    }
                }
            }
            (cases, fails)
        })
        .collect();
    merge(results)
}

fn merge(results: Vec<(usize, Vec<String>)>) -> (usize, Vec<String>) {
    let cases = results.iter().map(|r| r.0).sum();
    let mut fails: Vec<String> = results.into_iter().flat_map(|r| r.1).collect();
    fails.sort();
    (cases, fails)
}

fn per_action<F>(grid: &[CircleAction], f: F) -> (usize, Vec<String>)
where
    F: Fn(&CircleAction) -> Option<Vec<String>> + Sync,
{
    let results: Vec<(usize, Vec<String>)> = grid
        .par_iter()
        .filter_map(|x| f(x).map(|fails| (1, fails)))
        .collect();
    merge(results)
}

fn check_extensions(x: &CircleAction) -> Option<Vec<String>> {
    let (target, (c, d)) = second_extension(x)?;
    let other = match x.with_presentation(c, d, target) {
        Ok(o) => o,
        Err(e) => {
            return Some(vec![format!(
                "{x}: second extension ({c},{d};{target}) does not exist: {e}"
            )])
        }
    };
    let (k1, k2) = (
        canonical_key(&build_graph(x)),
        canonical_key(&build_graph(&other)),
    );
    Some(if k1 == k2 {
        vec![]
    } else {
        vec![format!("{x}: canonical graph differs from {other}")]
    })
}

/// Strata found by trying every subcircle of every toric action on the same
/// manifold whose weights at P match a fixed point of `x`.
pub fn brute_force_strata(x: &CircleAction) -> Vec<u32> {
    let key = canonical_key(&build_graph(x));
    let mut pairs = BTreeSet::new();
    for fp in fixed_point_weights(x) {
        let (p, q) = fp.weights;
        pairs.extend([(p, q), (q, p), (-p, -q), (-q, -p)]);
    }
    let mut out = Vec::new();
    let mut n = x.m() % 2;
    while check_lambda(n, x.lambda()).is_ok() {
        let hit = pairs.iter().any(|&(c, d)| {
            x.with_presentation(c, d, n)
                .is_ok_and(|y| canonical_key(&build_graph(&y)) == key)
        });
        if hit {
            out.push(n);
        }
        n += 2;
    }
    out
}

fn two_strata_condition(x: &CircleAction) -> bool {
    let (a, b, m) = (x.a(), x.b(), i64::from(x.m()));
    a.abs() == 1
        && b != 0
        && b != a * m
        && x.lambda().scale(2) > Rational::integer((2 * b - a * m).abs() + x.epsilon())
}

fn check_strata(x: &CircleAction) -> Option<Vec<String>> {
    let mut fails = Vec::new();
    let strata = strata_intersections(x);
    let expected = if two_strata_condition(x) { 2 } else { 1 };
    if strata.len() != expected {
        fails.push(format!(
            "{x}: {} strata {strata:?}, expected {expected}",
            strata.len()
        ));
    }
    let brute = brute_force_strata(x);
    if brute != strata {
        fails.push(format!(
            "{x}: strata {strata:?} but brute force finds {brute:?}"
        ));
    }
    Some(fails)
}

fn check_codim(x: &CircleAction) -> Option<Vec<String>> {
    let mut fails = Vec::new();
    let report = toric_extensions(x);
    let codims: Vec<u32> = report.entries.iter().map(|e| e.complex_codim).collect();
    if codims.iter().any(|&c| c > 1) {
        fails.push(format!("{x}: codimensions {codims:?} outside {{0, 1}}"));
    }
    if codims.iter().filter(|&&c| c == 0).count() != 1 {
        fails.push(format!(
            "{x}: codimensions {codims:?} do not have exactly one 0"
        ));
    }
    if x.a().abs() == 1 {
        let at_m = stratum_codimension(x, x.m());
        let dim = invariant_deformation_dimension(x);
        if at_m != Ok(dim) {
            fails.push(format!(
                "{x}: deformation dimension {dim} but codimension at U_m is {at_m:?}"
            ));
        }
    }
    Some(fails)
}

fn check_admissible(x: &CircleAction) -> Option<Vec<String>> {
    let g = build_graph(x);
    let mut fails: Vec<String> = validate_admissible(&g)
        .failures
        .into_iter()
        .map(|f| format!("{x}: {}", f.message))
        .collect();
    for e in g.edges() {
        match edge_sphere_data(&g, e) {
            Ok(d) if d.area.is_positive() => {}
            Ok(d) => fails.push(format!("{x}: edge {}-{} has area {}", e.a, e.b, d.area)),
            Err(err) => fails.push(format!("{x}: edge {}-{}: {err}", e.a, e.b)),
        }
    }
    Some(fails)
}

fn check_localization(x: &CircleAction) -> Option<Vec<String>> {
    let sum = build_graph(x).localization_sum()?;
    Some(if sum.is_zero() {
        vec![]
    } else {
        vec![format!("{x}: sum of 1/(w1 w2) is {sum}")]
    })
}

pub fn run_sweep(config: &SweepConfig) -> SweepSummary {
    let grid = config.grid();
    let results = config
        .checks
        .iter()
        .map(|&check| {
            let (cases, failures) = match check {
                Check::EquivalenceOrbits => check_orbits(&grid),
                Check::ExtensionSoundness => per_action(&grid, check_extensions),
                Check::StrataCount => per_action(&grid, check_strata),
                Check::CodimConsistency => per_action(&grid, check_codim),
                Check::Admissibility => per_action(&grid, check_admissible),
                Check::LocalizationSum => per_action(&grid, check_localization),
            };
            CheckResult {
                check,
                cases,
                failures,
            }
        })
        .collect();
    SweepSummary { results }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn config_validation() {
        let all: BTreeSet<Check> = Check::ALL.into_iter().collect();
        assert_eq!(
            SweepConfig::new(6, 6, vec![q(2, 1)], BTreeSet::new()),
            Err(SweepError::NoChecks)
        );
        assert!(matches!(
            SweepConfig::new(6, 6, vec![q(1, 2)], all.clone()),
            Err(SweepError::UselessLambda(..))
        ));
        assert!(SweepConfig::new(6, 6, vec![q(3, 2)], all).is_ok());
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn brute_force_finds_both_strata() {
        let x = CircleAction::new(1, 1, 2, q(2, 1)).unwrap();
        assert_eq!(brute_force_strata(&x), vec![0, 2]);
        let y = CircleAction::new(1, 5, 2, q(2, 1)).unwrap();
        assert_eq!(brute_force_strata(&y), vec![2]);
    }

    #[test]
    fn small_sweep_is_clean() {
        let checks: BTreeSet<Check> = Check::ALL.into_iter().collect();
        let config = SweepConfig::new(2, 2, vec![q(3, 2), q(2, 1)], checks).unwrap();
        let summary = run_sweep(&config);
        assert_eq!(summary.total_failures(), 0, "{}", summary.render());
    }
}
