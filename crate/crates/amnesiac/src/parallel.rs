//! Multi-threaded exhaustive sweep.

use amnesiac_core::analysis::enumerate::mask_count;
use amnesiac_core::analysis::{check_sweep_bound, sweep_masks, SweepSummary};
use rayon::prelude::*;

use crate::CliError;

const CHUNK: u64 = 1 << 12;

/// Same result as `amnesiac_core::analysis::sweep`, computed on `jobs`
/// worker threads. Chunks are merged in mask order, so the summary does not
/// depend on `jobs`.
pub fn parallel_sweep(n_max: usize, jobs: usize) -> Result<SweepSummary, CliError> {
    check_sweep_bound(n_max)?;
    if jobs == 0 {
        return Err(CliError::BadArgument("--jobs must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::BadArgument(format!("cannot start worker pool: {e}")))?;
    let chunks: Vec<(usize, std::ops::Range<u64>)> = (1..=n_max)
        .flat_map(|n| {
            let total = mask_count(n);
            (0..total.div_ceil(CHUNK)).map(move |i| (n, i * CHUNK..((i + 1) * CHUNK).min(total)))
        })
        .collect();
    let partials: Vec<SweepSummary> =
        pool.install(|| chunks.into_par_iter().map(|(n, masks)| sweep_masks(n_max, n, masks)).collect());
    let mut summary = SweepSummary::empty(n_max);
    for partial in partials {
        summary.merge(partial);
    }
    Ok(summary)
}
