#include "farahidi/indexer.hpp"

#include "farahidi/error.hpp"

namespace farahidi {

namespace {

constexpr std::uint64_t kPairSpan = kRadix * kRadix; // 784

// First index of each length class, i.e. 1 + sum of 28^k for 2 <= k < length.
constexpr std::array<std::uint64_t, kMaxRootLength + 2> kRangeStart{
    0, 0, 1, 785, 22'737, 637'393, kMaxIndex + 1};

bool valid_length(long long n) noexcept
{
    return n >= kMinRootLength && n <= kMaxRootLength;
}

} // namespace

RootWord RootWord::from_weights(std::span<const LetterWeight> weights)
{
    if (!valid_length(static_cast<long long>(weights.size())))
        throw InvalidRoot("root must have 2 to 5 letters, got " + std::to_string(weights.size()));
    RootWord w;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 1 || weights[i] > kLetterCount)
            throw InvalidRoot("letter weight " + std::to_string(weights[i]) + " at position " +
                              std::to_string(i) + " is not a root letter");
        w.digits_[i] = weights[i];
    }
    w.length_ = static_cast<int>(weights.size());
    return w;
}

RootWord RootWord::from_letters(std::span<const Letter> letters)
{
    std::array<LetterWeight, kMaxRootLength> buf{};
    if (!valid_length(static_cast<long long>(letters.size())))
        throw InvalidRoot("root must have 2 to 5 letters, got " + std::to_string(letters.size()));
    for (std::size_t i = 0; i < letters.size(); ++i)
        buf[i] = letters[i].weight();
    return from_weights(std::span(buf.data(), letters.size()));
}

RootWord RootWord::parse(std::string_view raw)
{
    const auto letters = normalize_text(raw);
    return from_letters(letters);
}

std::vector<Letter> RootWord::letters() const
{
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(length_));
    for (int i = 0; i < length_; ++i)
        out.push_back(at(i));
    return out;
}

std::string RootWord::utf8() const
{
    return to_utf8(letters());
}

bool RootWord::has_distinct_letters() const noexcept
{
    std::uint32_t seen = 0;
    for (int i = 0; i < length_; ++i) {
        const std::uint32_t bit = 1u << digits_[static_cast<std::size_t>(i)];
        if (seen & bit)
            return false;
        seen |= bit;
    }
    return true;
}

LexIndex encode(const RootWord& word) noexcept
{
    const auto& d = word.digits();
    const std::uint64_t d1 = static_cast<std::uint64_t>(d[0]);
    const std::uint64_t d2 = static_cast<std::uint64_t>(d[1]);
    const std::uint64_t d3 = static_cast<std::uint64_t>(d[2]);
    const std::uint64_t d4 = static_cast<std::uint64_t>(d[3]);
    const std::uint64_t d5 = static_cast<std::uint64_t>(d[4]);
    // Horner form of d5*28^4 + d4*28^3 + d3*28^2 + (d2-1)*28 + d1.
    const std::uint64_t high = ((d5 * kRadix + d4) * kRadix + d3) * kPairSpan;
    return LexIndex{high + (d2 - 1) * kRadix + d1};
}

DigitVector decode_digits(LexIndex index)
{
    const std::uint64_t i = index.value;
    if (i < kMinIndex || i > kMaxIndex)
        throw IndexOutOfRange(static_cast<long long>(i));
    DigitVector d{};
    // The low pair always occupies one full 784 block, so it is plain base 28
    // offset by one; the remaining digits are bijective base 28.
    const std::uint64_t t = (i - 1) % kPairSpan + 1;
    d[0] = static_cast<LetterWeight>((t - 1) % kRadix + 1);
    d[1] = static_cast<LetterWeight>((t - 1) / kRadix + 1);
    std::uint64_t q = (i - t) / kPairSpan;
    std::size_t k = 2;
    while (q > 0) {
        const std::uint64_t digit = (q - 1) % kRadix + 1;
        d[k++] = static_cast<LetterWeight>(digit);
        q = (q - digit) / kRadix;
    }
    return d;
}

RootWord decode(LexIndex index)
{
    const DigitVector d = decode_digits(index);
    std::size_t length = 0;
    while (length < d.size() && d[length] != 0)
        ++length;
    return RootWord::from_weights(std::span(d.data(), length));
}

IndexRange index_range(int length)
{
    if (!valid_length(length))
        throw InvalidSyllable(length);
    const auto l = static_cast<std::size_t>(length);
    return {LexIndex{kRangeStart[l]}, LexIndex{kRangeStart[l + 1] - 1}};
}

int word_length_of(LexIndex index)
{
    if (index.value < kMinIndex || index.value > kMaxIndex)
        throw IndexOutOfRange(static_cast<long long>(index.value));
    int length = kMinRootLength;
    while (index.value >= kRangeStart[static_cast<std::size_t>(length) + 1])
        ++length;
    return length;
}

} // namespace farahidi
