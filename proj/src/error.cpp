#include "farahidi/error.hpp"

#include <cstdio>

namespace farahidi {

namespace {

std::string codepoint_name(char32_t cp)
{
    char buf[16];
    std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(cp));
    return buf;
}

} // namespace

UnknownLetter::UnknownLetter(char32_t codepoint)
    : Error("unknown letter " + codepoint_name(codepoint)), codepoint_(codepoint)
{
}

WeightOutOfRange::WeightOutOfRange(long long weight)
    : Error("letter weight " + std::to_string(weight) + " outside [0, 28]"), weight_(weight)
{
}

UnmappableCharacter::UnmappableCharacter(std::size_t position, char32_t codepoint)
    : NormalizationError("unmappable character " + codepoint_name(codepoint) + " at position " +
                             std::to_string(position),
                         position),
      codepoint_(codepoint)
{
}

InvalidUtf8::InvalidUtf8(std::size_t position)
    : NormalizationError("invalid UTF-8 at position " + std::to_string(position), position)
{
}

BareHamza::BareHamza(std::size_t position)
    : NormalizationError("bare hamza at position " + std::to_string(position), position)
{
}

InvalidSyllable::InvalidSyllable(long long length)
    : Error("invalid root length " + std::to_string(length) + " (expected 2..5)")
{
}

IndexOutOfRange::IndexOutOfRange(long long index)
    : Error("index " + std::to_string(index) + " outside [1, 17847760]"), index_(index)
{
}

RecordError::RecordError(std::size_t line, const std::string& cause)
    : Error("line " + std::to_string(line) + ": " + cause), line_(line)
{
}

DuplicateIndex::DuplicateIndex(std::uint64_t index, std::string first, std::string second,
                               std::size_t first_line, std::size_t second_line)
    : Error("duplicate index " + std::to_string(index) + ": \"" + first + "\"" +
            (first_line ? " (line " + std::to_string(first_line) + ")" : std::string()) +
            " and \"" + second + "\"" +
            (second_line ? " (line " + std::to_string(second_line) + ")" : std::string())),
      index_(index), first_(std::move(first)), second_(std::move(second)),
      first_line_(first_line), second_line_(second_line)
{
}

NotFound::NotFound(std::uint64_t index)
    : Error("no entry at index " + std::to_string(index)), index_(index)
{
}

BadMagic::BadMagic() : FormatError("bad magic (expected FRHD)") {}

BadVersion::BadVersion(unsigned version)
    : FormatError("unsupported format version " + std::to_string(version)), version_(version)
{
}

TruncatedFile::TruncatedFile(std::uint64_t needed, std::uint64_t available)
    : FormatError("truncated file: need " + std::to_string(needed) + " bytes, have " +
                  std::to_string(available))
{
}

CorruptRecord::CorruptRecord(std::uint64_t offset, const std::string& reason)
    : FormatError("corrupt record at offset " + std::to_string(offset) + ": " + reason),
      offset_(offset)
{
}

} // namespace farahidi
