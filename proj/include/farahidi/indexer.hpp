#pragma once

#include "farahidi/alphabet.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace farahidi {

inline constexpr int kMinRootLength = 2;
inline constexpr int kMaxRootLength = 5;
inline constexpr std::uint64_t kRadix = 28;

/// Perfect-hash value of a root. Valid values are [kMinIndex, kMaxIndex].
struct LexIndex {
    std::uint64_t value = 0;

    friend bool operator==(LexIndex, LexIndex) = default;
    friend auto operator<=>(LexIndex, LexIndex) = default;
};

inline constexpr std::uint64_t kMinIndex = 1;
// 28^2 + 28^3 + 28^4 + 28^5
inline constexpr std::uint64_t kMaxIndex = 17'847'760;

/// Weights d1..d5; d1 is the first letter read. Unused trailing digits are 0.
using DigitVector = std::array<LetterWeight, kMaxRootLength>;

/// A root of 2-5 letters, hamza excluded. Repeated letters are allowed.
class RootWord {
public:
    /// All three throw InvalidRoot on a bad length or a hamza/out-of-range weight.
    static RootWord from_letters(std::span<const Letter> letters);
    static RootWord from_weights(std::span<const LetterWeight> weights);
    /// normalize_text followed by from_letters.
    static RootWord parse(std::string_view raw);

    int length() const noexcept { return length_; }
    Letter at(int i) const noexcept { return Letter::from_weight(digits_[static_cast<std::size_t>(i)]); }
    const DigitVector& digits() const noexcept { return digits_; }
    std::vector<Letter> letters() const;
    std::string utf8() const;
    bool has_distinct_letters() const noexcept;

    friend bool operator==(const RootWord&, const RootWord&) = default;

private:
    RootWord() = default;
    DigitVector digits_{};
    int length_ = 0;
};

LexIndex encode(const RootWord& word) noexcept;
/// Throws IndexOutOfRange outside [1, 17847760].
RootWord decode(LexIndex index);
DigitVector decode_digits(LexIndex index);

struct IndexRange {
    LexIndex first;
    LexIndex last; // inclusive

    std::uint64_t size() const noexcept { return last.value - first.value + 1; }
    bool contains(LexIndex i) const noexcept { return first <= i && i <= last; }
    friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Throws InvalidSyllable for lengths outside 2..5.
IndexRange index_range(int length);
/// Throws IndexOutOfRange.
int word_length_of(LexIndex index);

} // namespace farahidi
