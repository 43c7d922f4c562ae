#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace farahidi {

/// Phonetic rank of a letter in Al-Farahidy's order: 1 (ع) .. 28 (ا);
/// 0 is the hamza ء, which never appears in a root.
using LetterWeight = int;

inline constexpr int kLetterCount = 28;   // base letters, hamza excluded
inline constexpr int kTableSize = 29;     // base letters plus hamza
inline constexpr LetterWeight kHamzaWeight = 0;

/// One of the 29 code points of the Al-Khalil table. Always valid once built.
class Letter {
public:
    /// Throws UnknownLetter unless `cp` is one of the 29 table letters.
    static Letter from_codepoint(char32_t cp);
    /// Throws WeightOutOfRange unless 0 <= weight <= 28.
    static Letter from_weight(long long weight);

    LetterWeight weight() const noexcept { return weight_; }
    char32_t codepoint() const noexcept;
    std::string utf8() const;
    bool is_hamza() const noexcept { return weight_ == kHamzaWeight; }

    friend bool operator==(Letter, Letter) = default;
    friend auto operator<=>(Letter, Letter) = default;

private:
    explicit constexpr Letter(LetterWeight w) noexcept : weight_(w) {}
    LetterWeight weight_;
};

struct AlphabetEntry {
    char32_t codepoint;
    LetterWeight weight;
};

/// The fixed letter/weight bijection, in weight order (hamza first).
const std::array<AlphabetEntry, kTableSize>& alphabet_table() noexcept;

LetterWeight weight_of(Letter letter) noexcept;
/// Throws UnknownLetter for code points outside the table.
LetterWeight weight_of(char32_t codepoint);
/// Throws WeightOutOfRange outside [0, 28].
Letter letter_of(long long weight);

/// Turns one raw word into base letters: strips harakat (U+064B..U+065F,
/// U+0670) and tatweel, folds hamza carriers and ta marbuta/alif maqsura
/// onto their base letters. Anything else that is not a table letter
/// (spaces, Latin, digits, ...) raises UnmappableCharacter; a standalone
/// ء raises BareHamza. Malformed UTF-8 raises InvalidUtf8.
std::vector<Letter> normalize_text(std::string_view raw);

/// Concatenated UTF-8 rendering of letters.
std::string to_utf8(const std::vector<Letter>& letters);

// UTF-8 helpers shared with the store and CLI.
std::vector<char32_t> decode_utf8(std::string_view bytes);
void append_utf8(std::string& out, char32_t cp);

} // namespace farahidi
