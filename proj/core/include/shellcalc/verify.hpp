#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace shellcalc {

enum class CheckDirection { AtMost, AtLeast };

struct VerifyCheck {
    std::string name;
    int criterion = 0;  // 1..8, groups checks per acceptance criterion
    double residual = 0.0;
    double tolerance = 0.0;
    CheckDirection direction = CheckDirection::AtMost;
    long samples = 0;
    bool passed = false;
    double wall_ms = 0.0;  // human output only; never serialized
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::vector<VerifyCheck> checks;  // sorted by name

    bool all_passed() const;
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    /// Replaces the tolerance of every upper-bound check; separation
    /// (lower-bound) checks keep their stated thresholds.
    std::optional<double> tolerance_override;
};

/// Runs the full reproduction suite. Deterministic for a fixed seed: every
/// sweep derives its RNG from the seed and the check name, so results do not
/// depend on execution order.
VerifyReport run_verify(const VerifyOptions& options = {});

/// Canonical machine-readable form ("schema": 1). Byte-identical across runs
/// with the same seed; wall times are deliberately not included.
std::string verify_report_json(const VerifyReport& report);

/// Human-readable table, one line per check, with wall times.
std::string verify_report_text(const VerifyReport& report);

}  // namespace shellcalc
