// SPDX-License-Identifier: Apache-2.0
//
// prelog — capacity pre-log toolkit for correlated block-fading SIMO channels

#include "prelog/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "prelog/errors.hpp"

namespace prelog {

unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) {
        hw = 1;
    }
    if (const char *cap = std::getenv("PRELOG_BENCH_THREADS")) {
        try {
            const long parsed = std::stol(cap);
            if (parsed >= 1) {
                hw = std::min<unsigned long>(hw, static_cast<unsigned long>(parsed));
            }
        } catch (const std::exception &) {
            // unparsable cap: ignore and use hardware concurrency
        }
    }
    return hw;
}

std::vector<double> run_chunked(long total_samples, long chunk_size,
                                const std::function<std::vector<double>(long, long)> &work) {
    return run_chunked(total_samples, chunk_size, work,
                       [](std::vector<double> &acc, const std::vector<double> &part) {
                           for (std::size_t i = 0; i < acc.size(); ++i) {
                               acc[i] += part[i];
                           }
                       });
}

std::vector<double>
run_chunked(long total_samples, long chunk_size,
            const std::function<std::vector<double>(long, long)> &work,
            const std::function<void(std::vector<double> &, const std::vector<double> &)> &merge) {
    if (total_samples < 1 || chunk_size < 1) {
        throw ValidationError("run_chunked: sample and chunk counts must be positive");
    }
    const long n_chunks = (total_samples + chunk_size - 1) / chunk_size;

    std::vector<std::vector<double>> partials(static_cast<std::size_t>(n_chunks));
    std::atomic<long> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto run_worker = [&]() {
        for (;;) {
            const long chunk = next.fetch_add(1);
            if (chunk >= n_chunks) {
                return;
            }
            const long begin = chunk * chunk_size;
            const long count = std::min(chunk_size, total_samples - begin);
            try {
                partials[static_cast<std::size_t>(chunk)] = work(chunk, count);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                return;
            }
        }
    };

    const unsigned workers =
        std::min<unsigned long>(worker_count(), static_cast<unsigned long>(n_chunks));
    if (workers <= 1) {
        run_worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) {
            pool.emplace_back(run_worker);
        }
        for (std::thread &t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    // Fixed-order reduction: chunk 0, 1, 2, ...
    std::vector<double> acc = std::move(partials.front());
    for (long chunk = 1; chunk < n_chunks; ++chunk) {
        const std::vector<double> &part = partials[static_cast<std::size_t>(chunk)];
        if (part.size() != acc.size()) {
            throw Error("run_chunked: chunks returned accumulators of different widths");
        }
        merge(acc, part);
    }
    return acc;
}

} // namespace prelog
