#pragma once

#include "farahidi/indexer.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace farahidi {

struct LexiconEntry {
    LexIndex index;
    std::string headword;   // as supplied, before normalization
    std::string definition; // verbatim, may be empty

    friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

/// One headword/definition pair from an input source; `line` is 1-based
/// and only used in diagnostics (0 when there is no source line).
struct SourceRecord {
    std::string headword;
    std::string definition;
    std::size_t line = 0;
};

struct LexiconStats {
    std::array<std::uint64_t, kMaxRootLength + 1> by_length{}; // slots 2..5 used
    std::uint64_t total = 0;

    std::uint64_t count(int length) const { return by_length.at(static_cast<std::size_t>(length)); }
};

/// Immutable set of entries keyed by LexIndex.
///
/// Entries are kept sorted by index (the on-disk order) and mirrored in a
/// hash map from index to position, so a lookup is one encode plus one map
/// probe. Safe for concurrent readers.
class Lexicon {
public:
    Lexicon() = default;

    /// Takes entries in any order. Throws DuplicateIndex on a repeated index
    /// and InvalidRoot if a headword does not encode to its entry's index.
    static Lexicon from_entries(std::vector<LexiconEntry> entries);

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    const std::vector<LexiconEntry>& entries() const noexcept { return entries_; }

    /// Direct access; nullptr when no entry has this index.
    const LexiconEntry* find(LexIndex index) const noexcept;

    friend bool operator==(const Lexicon& a, const Lexicon& b) { return a.entries_ == b.entries_; }

private:
    struct Trusted {};
    // Entries must already be sorted, unique and consistent.
    Lexicon(Trusted, std::vector<LexiconEntry> entries);
    friend Lexicon deserialize(std::span<const std::byte> bytes);
    friend Lexicon build(std::span<const SourceRecord> records);

    std::vector<LexiconEntry> entries_;
    std::unordered_map<std::uint64_t, std::size_t> by_index_;
};

/// Keys each record by encode(normalize(headword)).
/// Throws RecordError (wrapping the normalization/root error, with the
/// record's line) or DuplicateIndex.
Lexicon build(std::span<const SourceRecord> records);

/// Parses `headword<TAB>definition` lines. Blank lines and lines starting
/// with '#' are skipped; a trailing CR is dropped. A line without a TAB
/// raises RecordError.
std::vector<SourceRecord> parse_tsv(std::istream& in);

/// Throws NotFound (a valid root with no entry) or the alphabet/indexer
/// error for a malformed word.
const LexiconEntry& lookup(const Lexicon& lex, const RootWord& word);
const LexiconEntry& lookup(const Lexicon& lex, std::string_view raw_headword);

LexiconStats stats(const Lexicon& lex);

// Binary container:
//   0   4  magic "FRHD"
//   4   1  version (1)
//   5   8  record count n
//   13  n * 24 records, ascending by index:
//          u64 index, u64 blob offset, u32 headword bytes, u32 definition bytes
//   ..     blob section: headword bytes then definition bytes per record
// Integers are little-endian. Offsets are relative to the blob section.
inline constexpr std::array<char, 4> kMagic{'F', 'R', 'H', 'D'};
inline constexpr std::uint8_t kFormatVersion = 1;
inline constexpr std::size_t kHeaderSize = 13;
inline constexpr std::size_t kRecordSize = 24;

std::vector<std::byte> serialize(const Lexicon& lex);
void serialize(const Lexicon& lex, std::ostream& out);

/// Throws BadMagic, BadVersion, TruncatedFile or CorruptRecord.
Lexicon deserialize(std::span<const std::byte> bytes);
Lexicon deserialize(std::istream& in);

void save(const Lexicon& lex, const std::filesystem::path& path);
Lexicon load(const std::filesystem::path& path);

} // namespace farahidi
