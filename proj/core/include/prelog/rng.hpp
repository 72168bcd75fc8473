// SPDX-License-Identifier: Apache-2.0
//
// prelog — capacity pre-log toolkit for correlated block-fading SIMO channels

#ifndef PRELOG_RNG_HPP
#define PRELOG_RNG_HPP

#include <cstdint>
#include <vector>

#include "prelog/complex_matrix.hpp"

namespace prelog {

/// Counter-based splittable random stream.
///
/// Output i of a stream is mix(base + (i+1) * gamma) where the base is a
/// strong hash of (master_seed, stream_id) and mix is the SplitMix64
/// finalizer (Steele/Lea/Flood construction). Two consequences the
/// Monte Carlo machinery relies on:
///   - identical (master_seed, stream_id) replays the identical sequence;
///   - distinct stream_ids are statistically independent by construction,
///     so results never depend on how work is split across workers.
///
/// Streams must not be shared across workers; derive one per chunk with
/// substream().
class RngStream {
  public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

    std::uint64_t master_seed() const noexcept { return master_seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    /// Child stream k; deterministic in (master_seed, stream_id, k).
    RngStream substream(std::uint64_t k) const;

    std::uint64_t next_u64();

    /// Uniform on [0, 1), 53-bit resolution.
    double next_unit();

    /// Uniform on (0, 1]; safe under log().
    double next_unit_open();

    /// Circularly-symmetric complex Gaussian, unit variance per entry
    /// (real and imaginary parts each have variance 1/2).
    cplx next_cgauss();

  private:
    std::uint64_t master_seed_;
    std::uint64_t stream_id_;
    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

/// rows x cols matrix of i.i.d. CN(0,1) entries, filled row-major.
ComplexMatrix sample_gaussian_matrix(std::size_t rows, std::size_t cols, RngStream &rng);

/// Haar-uniform direction in C^dim scaled to the given radius; the returned
/// vector has Euclidean norm equal to radius up to rounding.
std::vector<cplx> sample_sphere(std::size_t dim, double radius, RngStream &rng);

} // namespace prelog

#endif // PRELOG_RNG_HPP
