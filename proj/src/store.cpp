#include "farahidi/store.hpp"

#include "farahidi/error.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <istream>
#include <iterator>
#include <limits>
#include <ostream>

namespace farahidi {

namespace {

void put_u32(std::vector<std::byte>& out, std::uint32_t v)
{
    for (int i = 0; i < 4; ++i)
        out.push_back(static_cast<std::byte>((v >> (8 * i)) & 0xFF));
}

void put_u64(std::vector<std::byte>& out, std::uint64_t v)
{
    for (int i = 0; i < 8; ++i)
        out.push_back(static_cast<std::byte>((v >> (8 * i)) & 0xFF));
}

std::uint64_t get_le(std::span<const std::byte> bytes, std::size_t at, int width)
{
    std::uint64_t v = 0;
    for (int i = width - 1; i >= 0; --i)
        v = (v << 8) | std::to_integer<std::uint64_t>(bytes[at + static_cast<std::size_t>(i)]);
    return v;
}

std::string_view as_chars(std::span<const std::byte> bytes, std::uint64_t at, std::uint64_t len)
{
    return {reinterpret_cast<const char*>(bytes.data()) + at, static_cast<std::size_t>(len)};
}

// Returns a reason string when the headword does not root-encode to `index`.
std::string check_headword(const std::string& headword, LexIndex index)
{
    try {
        const LexIndex actual = encode(RootWord::parse(headword));
        if (actual != index)
            return "headword encodes to " + std::to_string(actual.value) + ", not " +
                   std::to_string(index.value);
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

} // namespace

Lexicon::Lexicon(Trusted, std::vector<LexiconEntry> entries) : entries_(std::move(entries))
{
    by_index_.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i)
        by_index_.emplace(entries_[i].index.value, i);
}

Lexicon Lexicon::from_entries(std::vector<LexiconEntry> entries)
{
    for (const auto& e : entries) {
        const std::string reason = check_headword(e.headword, e.index);
        if (!reason.empty())
            throw InvalidRoot("entry \"" + e.headword + "\": " + reason);
    }
    std::sort(entries.begin(), entries.end(),
              [](const LexiconEntry& a, const LexiconEntry& b) { return a.index < b.index; });
    auto dup = std::adjacent_find(entries.begin(), entries.end(),
                                  [](const LexiconEntry& a, const LexiconEntry& b) {
                                      return a.index == b.index;
                                  });
    if (dup != entries.end())
        throw DuplicateIndex(dup->index.value, dup->headword, std::next(dup)->headword, 0, 0);
    return Lexicon(Trusted{}, std::move(entries));
}

const LexiconEntry* Lexicon::find(LexIndex index) const noexcept
{
    auto it = by_index_.find(index.value);
    return it == by_index_.end() ? nullptr : &entries_[it->second];
}

Lexicon build(std::span<const SourceRecord> records)
{
    std::vector<LexiconEntry> entries;
    entries.reserve(records.size());
    std::unordered_map<std::uint64_t, std::size_t> seen;
    seen.reserve(records.size());
    for (std::size_t r = 0; r < records.size(); ++r) {
        const SourceRecord& rec = records[r];
        LexIndex index;
        try {
            index = encode(RootWord::parse(rec.headword));
        } catch (const Error& e) {
            throw RecordError(rec.line, e.what());
        }
        auto [it, inserted] = seen.emplace(index.value, r);
        if (!inserted) {
            const SourceRecord& first = records[it->second];
            throw DuplicateIndex(index.value, first.headword, rec.headword, first.line, rec.line);
        }
        entries.push_back({index, rec.headword, rec.definition});
    }
    std::sort(entries.begin(), entries.end(),
              [](const LexiconEntry& a, const LexiconEntry& b) { return a.index < b.index; });
    return Lexicon(Lexicon::Trusted{}, std::move(entries));
}

std::vector<SourceRecord> parse_tsv(std::istream& in)
{
    std::vector<SourceRecord> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (number == 1 && line.starts_with("\xEF\xBB\xBF"))
            line.erase(0, 3);
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw RecordError(number, "expected headword<TAB>definition");
        out.push_back({line.substr(0, tab), line.substr(tab + 1), number});
    }
    if (in.bad())
        throw IoError("read error in TSV input");
    return out;
}

const LexiconEntry& lookup(const Lexicon& lex, const RootWord& word)
{
    const LexIndex index = encode(word);
    const LexiconEntry* e = lex.find(index);
    if (!e)
        throw NotFound(index.value);
    return *e;
}

const LexiconEntry& lookup(const Lexicon& lex, std::string_view raw_headword)
{
    return lookup(lex, RootWord::parse(raw_headword));
}

LexiconStats stats(const Lexicon& lex)
{
    LexiconStats s;
    for (const auto& e : lex.entries())
        ++s.by_length[static_cast<std::size_t>(word_length_of(e.index))];
    s.total = lex.size();
    return s;
}

std::vector<std::byte> serialize(const Lexicon& lex)
{
    std::size_t blob_size = 0;
    for (const auto& e : lex.entries())
        blob_size += e.headword.size() + e.definition.size();

    std::vector<std::byte> out;
    out.reserve(kHeaderSize + kRecordSize * lex.size() + blob_size);
    for (char c : kMagic)
        out.push_back(static_cast<std::byte>(c));
    out.push_back(static_cast<std::byte>(kFormatVersion));
    put_u64(out, lex.size());

    std::uint64_t offset = 0;
    for (const auto& e : lex.entries()) {
        if (e.headword.size() > std::numeric_limits<std::uint32_t>::max() ||
            e.definition.size() > std::numeric_limits<std::uint32_t>::max())
            throw FormatError("entry text exceeds 4 GiB");
        put_u64(out, e.index.value);
        put_u64(out, offset);
        put_u32(out, static_cast<std::uint32_t>(e.headword.size()));
        put_u32(out, static_cast<std::uint32_t>(e.definition.size()));
        offset += e.headword.size() + e.definition.size();
    }
    for (const auto& e : lex.entries()) {
        const auto* h = reinterpret_cast<const std::byte*>(e.headword.data());
        const auto* d = reinterpret_cast<const std::byte*>(e.definition.data());
        out.insert(out.end(), h, h + e.headword.size());
        out.insert(out.end(), d, d + e.definition.size());
    }
    return out;
}

void serialize(const Lexicon& lex, std::ostream& out)
{
    const auto bytes = serialize(lex);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw IoError("write error while serializing lexicon");
}

Lexicon deserialize(std::span<const std::byte> bytes)
{
    const std::uint64_t size = bytes.size();
    if (size < kMagic.size())
        throw TruncatedFile(kHeaderSize, size);
    if (std::memcmp(bytes.data(), kMagic.data(), kMagic.size()) != 0)
        throw BadMagic();
    if (size < kMagic.size() + 1)
        throw TruncatedFile(kHeaderSize, size);
    const auto version = std::to_integer<unsigned>(bytes[4]);
    if (version != kFormatVersion)
        throw BadVersion(version);
    if (size < kHeaderSize)
        throw TruncatedFile(kHeaderSize, size);

    const std::uint64_t n = get_le(bytes, 5, 8);
    if (n > (size - kHeaderSize) / kRecordSize) {
        const std::uint64_t needed = n > (std::numeric_limits<std::uint64_t>::max() - kHeaderSize) / kRecordSize
                                         ? std::numeric_limits<std::uint64_t>::max()
                                         : kHeaderSize + n * kRecordSize;
        throw TruncatedFile(needed, size);
    }
    const std::uint64_t blob_start = kHeaderSize + n * kRecordSize;
    const std::uint64_t blob_size = size - blob_start;

    std::vector<LexiconEntry> entries;
    entries.reserve(static_cast<std::size_t>(n));
    std::uint64_t previous = 0;
    for (std::uint64_t r = 0; r < n; ++r) {
        const std::uint64_t at = kHeaderSize + r * kRecordSize;
        const std::uint64_t index = get_le(bytes, at, 8);
        const std::uint64_t offset = get_le(bytes, at + 8, 8);
        const std::uint64_t head_len = get_le(bytes, at + 16, 4);
        const std::uint64_t def_len = get_le(bytes, at + 20, 4);

        if (index < kMinIndex || index > kMaxIndex)
            throw CorruptRecord(at, "index " + std::to_string(index) + " out of range");
        if (r > 0 && index <= previous)
            throw CorruptRecord(at, "indices not strictly ascending");
        if (offset > blob_size || head_len + def_len > blob_size - offset)
            throw CorruptRecord(at, "text extends past end of file");
        previous = index;

        LexiconEntry e{LexIndex{index},
                       std::string(as_chars(bytes, blob_start + offset, head_len)),
                       std::string(as_chars(bytes, blob_start + offset + head_len, def_len))};
        const std::string reason = check_headword(e.headword, e.index);
        if (!reason.empty())
            throw CorruptRecord(at, reason);
        entries.push_back(std::move(e));
    }
    return Lexicon(Lexicon::Trusted{}, std::move(entries));
}

Lexicon deserialize(std::istream& in)
{
    std::vector<char> buf{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad())
        throw IoError("read error while loading lexicon");
    return deserialize(std::as_bytes(std::span(buf)));
}

void save(const Lexicon& lex, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + path.string() + " for writing");
    serialize(lex, out);
    out.close();
    if (!out)
        throw IoError("write error on " + path.string());
}

Lexicon load(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string());
    return deserialize(in);
}

} // namespace farahidi
