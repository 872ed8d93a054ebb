#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <string_view>

#include "shellcalc/expr.hpp"

namespace shellcalc {

/// Produces one set of bindings per call. Samplers own their RNG state, so a
/// fixed seed makes every downstream sweep deterministic.
using Sampler = std::function<Bindings()>;

/// Mixes a tag into a master seed (FNV-1a), so independent sweeps derived
/// from one seed stay decoupled and order-independent.
std::uint64_t sub_seed(std::uint64_t master, std::string_view tag);

/// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
double uniform_unit(std::mt19937_64& rng);

/// Uniform in [lo, hi]; with both_signs the sign is flipped with probability
/// 1/2 (magnitude stays in [lo, hi], keeping samples away from 0).
struct SampleRange {
    double lo = 0.0;
    double hi = 1.0;
    bool both_signs = false;
};

/// Draws each configured symbol independently from its range.
class RangeSampler {
public:
    RangeSampler(std::map<std::string, SampleRange> ranges, std::uint64_t seed)
        : ranges_(std::move(ranges)), rng_(seed) {}

    Bindings operator()();

private:
    std::map<std::string, SampleRange> ranges_;
    std::mt19937_64 rng_;
};

/// Default sampling domain for the standard momentum chart:
/// |p_i| in [0.1, 2] with random sign, m in [0.5, 2].
std::map<std::string, SampleRange> standard_base_ranges();

/// Relative agreement test: |a-b| <= tol * (1 + max(|a|,|b|)).
bool approx_equal(Complex a, Complex b, double tol);

/// Relative residual |a-b| / (1 + max(|a|,|b|)).
double relative_residual(Complex a, Complex b);

/// True iff `a` and `b` agree (per approx_equal) at every sampled point.
/// Samples where either side is singular are skipped; if every one of the
/// `trials` samples is singular, throws SamplerError.
bool equal_numeric(const Expr& a, const Expr& b, Sampler& sampler, double tol, int trials);

/// Max relative residual between `a` and `b` over the sampled points,
/// skipping singular samples (SamplerError if all are).
double max_residual(const Expr& a, const Expr& b, Sampler& sampler, int trials);

}  // namespace shellcalc
