#include "shellcalc/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace shellcalc {

std::uint64_t sub_seed(std::uint64_t master, std::string_view tag) {
    std::uint64_t h = 14695981039346656037ull;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    h ^= master + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Bindings RangeSampler::operator()() {
    Bindings b;
    for (const auto& [name, range] : ranges_) {
        double v = range.lo + (range.hi - range.lo) * uniform_unit(rng_);
        if (range.both_signs && (rng_() & 1u)) v = -v;
        b[name] = Complex{v, 0.0};
    }
    return b;
}

std::map<std::string, SampleRange> standard_base_ranges() {
    return {
        {"p1", {0.1, 2.0, true}},
        {"p2", {0.1, 2.0, true}},
        {"p3", {0.1, 2.0, true}},
        {"m", {0.5, 2.0, false}},
    };
}

bool approx_equal(Complex a, Complex b, double tol) {
    return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

double relative_residual(Complex a, Complex b) {
    return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b)));
}

namespace {

template <typename Fn>
void sweep(Sampler& sampler, int trials, Fn&& fn) {
    if (trials < 1) throw EvalError("trials must be >= 1");
    int valid = 0;
    for (int t = 0; t < trials; ++t) {
        Bindings b = sampler();
        try {
            fn(b);
        } catch (const EvalError&) {
            continue;  // singular sample, skip
        }
        ++valid;
    }
    if (valid == 0) throw SamplerError("all samples hit singularities");
}

}  // namespace

bool equal_numeric(const Expr& a, const Expr& b, Sampler& sampler, double tol, int trials) {
    bool equal = true;
    sweep(sampler, trials, [&](const Bindings& bind) {
        Complex va = eval(a, bind);
        Complex vb = eval(b, bind);
        if (!approx_equal(va, vb, tol)) equal = false;
    });
    return equal;
}

double max_residual(const Expr& a, const Expr& b, Sampler& sampler, int trials) {
    double worst = 0.0;
    sweep(sampler, trials, [&](const Bindings& bind) {
        worst = std::max(worst, relative_residual(eval(a, bind), eval(b, bind)));
    });
    return worst;
}

}  // namespace shellcalc
