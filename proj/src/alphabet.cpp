#include "farahidi/alphabet.hpp"

#include "farahidi/error.hpp"

namespace farahidi {

namespace {

// Indexed by weight.
constexpr std::array<AlphabetEntry, kTableSize> kTable{{
    {U'ء', 0},
    {U'ع', 1},
    {U'ح', 2},
    {U'ه', 3},
    {U'خ', 4},
    {U'غ', 5},
    {U'ق', 6},
    {U'ك', 7},
    {U'ج', 8},
    {U'ش', 9},
    {U'ض', 10},
    {U'ص', 11},
    {U'س', 12},
    {U'ز', 13},
    {U'ط', 14},
    {U'ت', 15},
    {U'د', 16},
    {U'ظ', 17},
    {U'ذ', 18},
    {U'ث', 19},
    {U'ر', 20},
    {U'ل', 21},
    {U'ن', 22},
    {U'ف', 23},
    {U'ب', 24},
    {U'م', 25},
    {U'و', 26},
    {U'ي', 27},
    {U'ا', 28},
}};

// All table letters live in U+0621..U+064A.
constexpr char32_t kBlockFirst = 0x0621;
constexpr char32_t kBlockLast = 0x064A;

constexpr auto make_reverse()
{
    std::array<int, kBlockLast - kBlockFirst + 1> rev{};
    for (auto& r : rev)
        r = -1;
    for (const auto& e : kTable)
        rev[e.codepoint - kBlockFirst] = e.weight;
    return rev;
}

constexpr auto kReverse = make_reverse();

int lookup_weight(char32_t cp) noexcept
{
    if (cp < kBlockFirst || cp > kBlockLast)
        return -1;
    return kReverse[cp - kBlockFirst];
}

bool is_stripped(char32_t cp) noexcept
{
    return (cp >= 0x064B && cp <= 0x065F) || cp == 0x0670 || cp == 0x0640;
}

char32_t fold(char32_t cp) noexcept
{
    switch (cp) {
    case 0x0622: // آ
    case 0x0623: // أ
    case 0x0625: // إ
    case 0x0671: // ٱ
        return 0x0627;
    case 0x0624: // ؤ
        return 0x0648;
    case 0x0626: // ئ
    case 0x0649: // ى
        return 0x064A;
    case 0x0629: // ة
        return 0x0647;
    default:
        return cp;
    }
}

} // namespace

Letter Letter::from_codepoint(char32_t cp)
{
    int w = lookup_weight(cp);
    if (w < 0)
        throw UnknownLetter(cp);
    return Letter(w);
}

Letter Letter::from_weight(long long weight)
{
    if (weight < 0 || weight > kLetterCount)
        throw WeightOutOfRange(weight);
    return Letter(static_cast<LetterWeight>(weight));
}

char32_t Letter::codepoint() const noexcept
{
    return kTable[static_cast<std::size_t>(weight_)].codepoint;
}

std::string Letter::utf8() const
{
    std::string s;
    append_utf8(s, codepoint());
    return s;
}

const std::array<AlphabetEntry, kTableSize>& alphabet_table() noexcept
{
    return kTable;
}

LetterWeight weight_of(Letter letter) noexcept
{
    return letter.weight();
}

LetterWeight weight_of(char32_t codepoint)
{
    return Letter::from_codepoint(codepoint).weight();
}

Letter letter_of(long long weight)
{
    return Letter::from_weight(weight);
}

std::vector<Letter> normalize_text(std::string_view raw)
{
    const std::vector<char32_t> cps = decode_utf8(raw);
    std::vector<Letter> out;
    out.reserve(cps.size());
    for (std::size_t pos = 0; pos < cps.size(); ++pos) {
        char32_t cp = cps[pos];
        if (is_stripped(cp))
            continue;
        cp = fold(cp);
        int w = lookup_weight(cp);
        if (w < 0)
            throw UnmappableCharacter(pos, cps[pos]);
        if (w == kHamzaWeight)
            throw BareHamza(pos);
        out.push_back(Letter::from_weight(w));
    }
    return out;
}

std::string to_utf8(const std::vector<Letter>& letters)
{
    std::string s;
    s.reserve(letters.size() * 2);
    for (Letter l : letters)
        append_utf8(s, l.codepoint());
    return s;
}

std::vector<char32_t> decode_utf8(std::string_view bytes)
{
    std::vector<char32_t> out;
    out.reserve(bytes.size());
    std::size_t i = 0;
    while (i < bytes.size()) {
        const auto b0 = static_cast<unsigned char>(bytes[i]);
        const std::size_t pos = out.size();
        std::size_t len;
        char32_t cp;
        if (b0 < 0x80) {
            len = 1;
            cp = b0;
        } else if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            cp = b0 & 0x1F;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            cp = b0 & 0x0F;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            cp = b0 & 0x07;
        } else {
            throw InvalidUtf8(pos);
        }
        if (i + len > bytes.size())
            throw InvalidUtf8(pos);
        for (std::size_t k = 1; k < len; ++k) {
            const auto b = static_cast<unsigned char>(bytes[i + k]);
            if ((b & 0xC0) != 0x80)
                throw InvalidUtf8(pos);
            cp = (cp << 6) | (b & 0x3F);
        }
        static constexpr char32_t kMinForLength[] = {0, 0, 0x80, 0x800, 0x10000};
        if (cp < kMinForLength[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
            throw InvalidUtf8(pos);
        out.push_back(cp);
        i += len;
    }
    return out;
}

void append_utf8(std::string& out, char32_t cp)
{
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

} // namespace farahidi
