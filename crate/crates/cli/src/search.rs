use std::fmt;

use clifperm::search6::{self, CrossCheck, SearchReport, CERT_SUBGROUPS};
use serde::Serialize;

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubgroupCount {
    pub generators: Vec<String>,
    pub certified: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Search6Output {
    #[serde(flatten)]
    pub report: SearchReport,
    pub subgroups: Vec<SubgroupCount>,
    pub cross_check: Option<CrossCheck>,
}

/// Seed of the cross-check sample, fixed so that runs are reproducible.
pub const CROSS_CHECK_SEED: u64 = 0x0005_eac3;

pub fn search6(
    threads: usize,
    cross_check_sample: Option<usize>,
) -> Result<Search6Output, CliError> {
    let report = search6::run_search(threads)?;
    Ok(Search6Output {
        subgroups: CERT_SUBGROUPS
            .iter()
            .zip(report.certified_by)
            .map(|(g, certified)| SubgroupCount {
                generators: g.iter().map(|s| s.to_string()).collect(),
                certified,
            })
            .collect(),
        cross_check: cross_check_sample
            .map(|k| search6::cross_check(search6::sample_masks(k, CROSS_CHECK_SEED))),
        report,
    })
}

impl fmt::Display for Search6Output {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.report;
        writeln!(f, "masks: {}", r.total)?;
        writeln!(f, "in C3: {}", r.c3_count)?;
        writeln!(f, "mismatch-free: {}", r.mismatch_free_count)?;
        for (i, s) in self.subgroups.iter().enumerate() {
            writeln!(
                f,
                "certified by subgroup {} <{}>: {}",
                i + 1,
                s.generators.join(", "),
                s.certified
            )?;
        }
        writeln!(f, "uncertified: {}", r.failures.len())?;
        if let Some(c) = &self.cross_check {
            writeln!(
                f,
                "cross-check: {} sampled, {} in C3, {} disagreements",
                c.sampled,
                c.c3_sampled,
                c.disagreements.len()
            )?;
        }
        writeln!(
            f,
            "time: {:.2}s on {} threads",
            r.wall_time_secs, r.thread_count
        )
    }
}
