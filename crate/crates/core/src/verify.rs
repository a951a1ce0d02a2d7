//! Named verification suites over parameter boxes.

use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::{alexander, bridge, chebgen};

/// Trig cross-check tolerance for double precision at `n <= 50`, `h <= 10`.
pub const TRIG_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_TRIG_SAMPLES: u32 = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Suite {
    RecurrenceVsClosed,
    Equidistance,
    Connection,
    Skein,
    BridgeT1h,
    BridgeT2h,
    Trig,
    InverseRecipe,
    Palindromy,
    All,
}

impl Suite {
    pub fn expand(self) -> Vec<Suite> {
        use Suite::*;
        match self {
            All => vec![
                RecurrenceVsClosed,
                Equidistance,
                Connection,
                Skein,
                BridgeT1h,
                BridgeT2h,
                Trig,
                InverseRecipe,
                Palindromy,
            ],
            s => vec![s],
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    /// Accepts the kebab-case names used on the command line.
    fn from_str(s: &str) -> Result<Self> {
        <Suite as clap::ValueEnum>::from_str(s, false).map_err(Error::Parse)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ranges {
    pub k_max: u32,
    pub h_max: u32,
    pub n_max: u32,
    pub samples: u32,
}

impl Default for Ranges {
    fn default() -> Self {
        Ranges {
            k_max: 10,
            h_max: 10,
            n_max: 50,
            samples: DEFAULT_TRIG_SAMPLES,
        }
    }
}

impl Ranges {
    fn validate(&self, suites: &[Suite]) -> Result<()> {
        if self.k_max == 0 || self.h_max == 0 {
            return Err(Error::InvalidParams("k-max and h-max must be at least 1".into()));
        }
        if suites.contains(&Suite::Skein) && self.n_max < 3 {
            return Err(Error::InvalidParams(format!(
                "skein tower needs n-max >= 3, got {}",
                self.n_max
            )));
        }
        let needs_odd = [Suite::BridgeT1h, Suite::BridgeT2h, Suite::InverseRecipe, Suite::Trig];
        if suites.iter().any(|s| needs_odd.contains(s)) && self.n_max < 1 {
            return Err(Error::InvalidParams("n-max must be at least 1".into()));
        }
        if suites.contains(&Suite::Trig) && self.samples == 0 {
            return Err(Error::InvalidParams("samples must be at least 1".into()));
        }
        Ok(())
    }
}

/// Runs every suite `suite` expands to, in a fixed order.
pub fn run(suite: Suite, ranges: &Ranges) -> Result<Vec<VerificationReport>> {
    let suites = suite.expand();
    ranges.validate(&suites)?;
    let Ranges { k_max, h_max, n_max, samples } = *ranges;
    let mut out = Vec::new();
    for s in suites {
        match s {
            Suite::RecurrenceVsClosed => out.push(chebgen::scan::constructions(k_max, h_max, n_max)),
            Suite::Equidistance => out.push(chebgen::scan::equidistance(k_max, h_max, n_max)),
            Suite::Connection => out.push(chebgen::scan::connection(h_max, n_max)),
            Suite::Skein => out.push(alexander::scan::skein(n_max as u64)?),
            Suite::BridgeT1h => {
                let (t1h, invariance) = bridge::scan::t1h(n_max as u64, h_max)?;
                out.push(t1h);
                out.push(invariance);
            }
            Suite::BridgeT2h => out.push(bridge::scan::t2h(n_max as u64, h_max)?),
            Suite::Trig => out.push(chebgen::scan::trig(
                k_max,
                h_max,
                1,
                n_max,
                samples,
                TRIG_TOLERANCE,
            )),
            Suite::InverseRecipe => out.push(bridge::scan::inverse(n_max as u64, h_max)?),
            Suite::Palindromy => out.push(alexander::scan::palindromy(n_max as u64)?),
            Suite::All => unreachable!("expanded above"),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_cli_names() {
        assert_eq!("bridge-t1h".parse::<Suite>().unwrap(), Suite::BridgeT1h);
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn all_expands_without_itself() {
        let all = Suite::All.expand();
        assert_eq!(all.len(), 9);
        assert!(!all.contains(&Suite::All));
    }

    #[test]
    fn small_all_passes() {
        let ranges = Ranges { k_max: 3, h_max: 3, n_max: 9, samples: 50 };
        let reports = run(Suite::All, &ranges).unwrap();
        assert!(reports.iter().all(VerificationReport::passed));
    }

    #[test]
    fn skein_range_too_small() {
        let ranges = Ranges { n_max: 2, ..Ranges::default() };
        assert!(matches!(run(Suite::Skein, &ranges), Err(Error::InvalidParams(_))));
        assert!(matches!(run(Suite::All, &ranges), Err(Error::InvalidParams(_))));
        assert!(run(Suite::Connection, &ranges).is_ok());
    }
}
