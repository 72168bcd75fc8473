// SPDX-License-Identifier: Apache-2.0
//
// prelog — capacity pre-log toolkit for correlated block-fading SIMO channels

#ifndef PRELOG_PARALLEL_HPP
#define PRELOG_PARALLEL_HPP

#include <functional>
#include <vector>

namespace prelog {

/// Worker count for Monte Carlo runs: hardware concurrency, capped by the
/// PRELOG_BENCH_THREADS environment variable when set. At least 1.
unsigned worker_count();

/// Deterministic chunked Monte Carlo driver. Splits total_samples into
/// fixed-size chunks, evaluates work(chunk_index, samples_in_chunk) for each
/// (possibly concurrently) and sums the returned accumulator vectors in
/// chunk order. Chunking and reduction order depend only on total_samples
/// and chunk_size, so the result is bit-identical for every worker count.
/// Each chunk must draw randomness only from a stream derived from its
/// chunk index.
std::vector<double> run_chunked(long total_samples, long chunk_size,
                                const std::function<std::vector<double>(long, long)> &work);

/// As above but with a caller-supplied combiner, applied in chunk order
/// (needed when some accumulator slots reduce by min/max instead of sum).
std::vector<double>
run_chunked(long total_samples, long chunk_size,
            const std::function<std::vector<double>(long, long)> &work,
            const std::function<void(std::vector<double> &, const std::vector<double> &)> &merge);

} // namespace prelog

#endif // PRELOG_PARALLEL_HPP
