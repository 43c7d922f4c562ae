#pragma once

#include "farahidi/alphabet.hpp"
#include "farahidi/indexer.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace farahidi {

/// Number of roots counted by Al-Farahidy over all lengths 2..5.
inline constexpr std::uint64_t kFarahidyTotal = 12'305'412;

/// 28!/(28-r)!: roots of length r with pairwise-distinct letters.
/// Throws InvalidSyllable for r outside 2..5.
std::uint64_t count_roots(int r);

/// Sum of count_roots over 2..5.
std::uint64_t total_root_count();

/// 28^r: every length-r letter sequence, repetition allowed.
std::uint64_t hash_space_size(int r);

/// Counts distinct-letter roots of length r by walking every one of them.
/// Independent of the closed form in count_roots.
std::uint64_t enumerate_distinct_roots(int r);

/// 2-5 pairwise-distinct non-hamza letters.
class LetterSet {
public:
    /// Throws InvalidLetterSet.
    explicit LetterSet(std::span<const Letter> letters);

    std::size_t size() const noexcept { return letters_.size(); }
    const std::vector<Letter>& letters() const noexcept { return letters_; }

private:
    std::vector<Letter> letters_; // ascending by weight
};

/// All |s|! orderings of s, ascending by weight tuple in reading order.
std::vector<RootWord> enumerate_permutations(const LetterSet& s);

} // namespace farahidi
