// SPDX-License-Identifier: Apache-2.0
//
// prelog — capacity pre-log toolkit for correlated block-fading SIMO channels

#include "prelog/rng.hpp"

#include <cmath>
#include <numbers>

#include "prelog/errors.hpp"

namespace prelog {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

// SplitMix64 finalizer (Vigna's fixed-increment variant of the
// SplittableRandom mixer). Bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

std::uint64_t stream_base(std::uint64_t master_seed, std::uint64_t stream_id) {
    // Full mixing on both inputs keeps counter ranges of distinct streams
    // disjoint with overwhelming probability.
    return mix64(mix64(master_seed ^ 0x243F6A8885A308D3ULL) + mix64(stream_id ^ 0x13198A2E03707344ULL));
}

} // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : master_seed_(master_seed), stream_id_(stream_id), base_(stream_base(master_seed, stream_id)) {}

RngStream RngStream::substream(std::uint64_t k) const {
    return RngStream(master_seed_, mix64(stream_id_ ^ 0xA0761D6478BD642FULL) + k);
}

std::uint64_t RngStream::next_u64() {
    ++counter_;
    return mix64(base_ + counter_ * kGamma);
}

double RngStream::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_unit_open() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

cplx RngStream::next_cgauss() {
    // |w|^2 ~ Exp(1), phase uniform: exact CN(0,1) from two uniforms.
    const double radius = std::sqrt(-std::log(next_unit_open()));
    const double angle = 2.0 * std::numbers::pi * next_unit();
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

ComplexMatrix sample_gaussian_matrix(std::size_t rows, std::size_t cols, RngStream &rng) {
    ComplexMatrix out(rows, cols);
    for (cplx &z : out.entries()) {
        z = rng.next_cgauss();
    }
    return out;
}

std::vector<cplx> sample_sphere(std::size_t dim, double radius, RngStream &rng) {
    if (dim < 1) {
        throw ValidationError("sample_sphere: dim must be >= 1");
    }
    if (!(radius > 0.0)) {
        throw ValidationError("sample_sphere: radius must be positive");
    }
    std::vector<cplx> v(dim);
    double nrm = 0.0;
    do {
        for (cplx &z : v) {
            z = rng.next_cgauss();
        }
        nrm = norm2(v);
    } while (nrm == 0.0); // probability zero; guards underflow
    for (cplx &z : v) {
        z *= radius / nrm;
    }
    return v;
}

} // namespace prelog
