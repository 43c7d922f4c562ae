#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>

namespace farahidi::cli {

// Exit statuses shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotFound = 2;

inline constexpr const char* kVersion = "farahidi 1.0.0";

struct LengthCheck {
    int length = 0;
    std::uint64_t closed_form = 0;
    std::optional<std::uint64_t> enumerated; // empty when not run
};

struct VerifyReport {
    std::array<LengthCheck, 4> lengths{};
    std::uint64_t total = 0;
    std::uint64_t expected_total = 0;
    double closed_form_seconds = 0;
    double enumeration_seconds = 0;

    bool passed() const;
};

/// Recomputes the per-length root counts by the falling-factorial formula
/// and by exhaustive enumeration (lengths 2-3, or 2-5 with `full`).
VerifyReport verify_root_counts(bool full, std::uint64_t expected_total);

/// Entry point of the `farahidi` tool. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace farahidi::cli
