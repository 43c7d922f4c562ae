#include "farahidi/combinatorics.hpp"

#include "farahidi/error.hpp"

#include <algorithm>

namespace farahidi {

namespace {

void require_length(int r)
{
    if (r < kMinRootLength || r > kMaxRootLength)
        throw InvalidSyllable(r);
}

// Depth-first walk over ordered selections without repetition.
std::uint64_t count_leaves(int remaining, std::uint32_t used)
{
    if (remaining == 0)
        return 1;
    std::uint64_t n = 0;
    for (int w = 1; w <= kLetterCount; ++w) {
        const std::uint32_t bit = 1u << w;
        if (!(used & bit))
            n += count_leaves(remaining - 1, used | bit);
    }
    return n;
}

} // namespace

std::uint64_t count_roots(int r)
{
    require_length(r);
    std::uint64_t n = 1;
    for (int k = 0; k < r; ++k)
        n *= static_cast<std::uint64_t>(kLetterCount - k);
    return n;
}

std::uint64_t total_root_count()
{
    std::uint64_t total = 0;
    for (int r = kMinRootLength; r <= kMaxRootLength; ++r)
        total += count_roots(r);
    return total;
}

std::uint64_t hash_space_size(int r)
{
    require_length(r);
    std::uint64_t n = 1;
    for (int k = 0; k < r; ++k)
        n *= kRadix;
    return n;
}

std::uint64_t enumerate_distinct_roots(int r)
{
    require_length(r);
    return count_leaves(r, 0);
}

LetterSet::LetterSet(std::span<const Letter> letters) : letters_(letters.begin(), letters.end())
{
    if (letters_.size() < static_cast<std::size_t>(kMinRootLength) ||
        letters_.size() > static_cast<std::size_t>(kMaxRootLength))
        throw InvalidLetterSet("letter set must have 2 to 5 letters, got " +
                               std::to_string(letters_.size()));
    std::sort(letters_.begin(), letters_.end());
    if (letters_.front().is_hamza())
        throw InvalidLetterSet("hamza cannot be a root letter");
    if (std::adjacent_find(letters_.begin(), letters_.end()) != letters_.end())
        throw InvalidLetterSet("letters must be pairwise distinct");
}

std::vector<RootWord> enumerate_permutations(const LetterSet& s)
{
    std::vector<Letter> order = s.letters();
    std::vector<RootWord> out;
    do {
        out.push_back(RootWord::from_letters(order));
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

} // namespace farahidi
