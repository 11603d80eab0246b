#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace windmill {

enum class VerifyMode { Count, Oracle, Color, Irreducible };

std::optional<VerifyMode> parse_verify_mode(std::string_view name);
std::string_view to_string(VerifyMode mode);

/// Largest accepted sweep bound for each mode.
std::int64_t verify_limit(VerifyMode mode);

struct SweepResult {
    std::int64_t checked = 0;
    /// One line per failing item, in input order.
    std::vector<std::string> failures;
};

/// Runs the invariant suite of `mode` over every odd prime <= max_value (every
/// n in [1, max_value] for Irreducible), fanning items out over `jobs` threads.
SweepResult verify_sweep(VerifyMode mode, std::int64_t max_value, int jobs);

/// The invariant suite for a single item; nothing on success.
std::optional<std::string> verify_item(VerifyMode mode, std::int64_t value);

}  // namespace windmill
