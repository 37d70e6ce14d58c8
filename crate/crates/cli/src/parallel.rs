//! Partitioned codeword enumeration across OS threads. Partial counts merge
//! by addition, so the result is independent of the partition.

use bsymbol_core::bsymbol::{weight_counts_range, WeightEnumerator};
use bsymbol_core::codes::LinearCode;
use bsymbol_core::{Error, ENUMERATION_CAP};

pub fn default_threads() -> usize {
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

/// Exact b-symbol weight enumerator, fanned out over message-index ranges.
pub fn weight_enumerator_parallel(
    code: &LinearCode,
    b: usize,
    threads: usize,
    cap: u64,
) -> Result<WeightEnumerator, Error> {
    let size = code.size()?;
    if size as u128 > cap.max(1) as u128 {
        return Err(Error::CapExceeded {
            required: size as u128,
            cap,
        });
    }
    let threads = threads.max(1).min(size.max(1) as usize);
    let counts = if threads == 1 {
        weight_counts_range(code, b, 0, size)?
    } else {
        let chunk = size.div_ceil(threads as u64);
        let partials: Vec<Result<Vec<u64>, Error>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads as u64)
                .map(|t| {
                    let start = t * chunk;
                    let end = (start + chunk).min(size);
                    scope.spawn(move || weight_counts_range(code, b, start, end))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });
        let mut merged = vec![0u64; code.length() + 1];
        for partial in partials {
            for (m, v) in merged.iter_mut().zip(partial?) {
                *m += v;
            }
        }
        merged
    };
    let enumerator = WeightEnumerator { b, counts };
    enumerator.check_sanity(size)?;
    Ok(enumerator)
}

pub fn weight_enumerator_default(code: &LinearCode, b: usize) -> Result<WeightEnumerator, Error> {
    weight_enumerator_parallel(code, b, default_threads(), ENUMERATION_CAP)
}
