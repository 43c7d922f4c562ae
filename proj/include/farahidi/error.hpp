#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace farahidi {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---- alphabet ----

class UnknownLetter : public Error {
public:
    explicit UnknownLetter(char32_t codepoint);
    char32_t codepoint() const noexcept { return codepoint_; }

private:
    char32_t codepoint_;
};

class WeightOutOfRange : public Error {
public:
    explicit WeightOutOfRange(long long weight);
    long long weight() const noexcept { return weight_; }

private:
    long long weight_;
};

// Raised by normalize_text. Position counts code points (not bytes) from 0.
class NormalizationError : public Error {
public:
    NormalizationError(const std::string& what, std::size_t position)
        : Error(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnmappableCharacter : public NormalizationError {
public:
    UnmappableCharacter(std::size_t position, char32_t codepoint);
    char32_t codepoint() const noexcept { return codepoint_; }

private:
    char32_t codepoint_;
};

class InvalidUtf8 : public NormalizationError {
public:
    explicit InvalidUtf8(std::size_t position);
};

class BareHamza : public NormalizationError {
public:
    explicit BareHamza(std::size_t position);
};

// ---- combinatorics / indexer ----

class InvalidSyllable : public Error {
public:
    explicit InvalidSyllable(long long length);
};

class InvalidLetterSet : public Error {
public:
    using Error::Error;
};

class InvalidRoot : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(long long index);
    long long index() const noexcept { return index_; }

private:
    long long index_;
};

// ---- store ----

// A TSV line or record that could not be turned into an entry. Wraps the
// underlying cause with its 1-based source line.
class RecordError : public Error {
public:
    RecordError(std::size_t line, const std::string& cause);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class DuplicateIndex : public Error {
public:
    DuplicateIndex(std::uint64_t index, std::string first, std::string second,
                   std::size_t first_line, std::size_t second_line);
    std::uint64_t index() const noexcept { return index_; }
    const std::string& first_headword() const noexcept { return first_; }
    const std::string& second_headword() const noexcept { return second_; }
    std::size_t first_line() const noexcept { return first_line_; }
    std::size_t second_line() const noexcept { return second_line_; }

private:
    std::uint64_t index_;
    std::string first_;
    std::string second_;
    std::size_t first_line_;
    std::size_t second_line_;
};

class NotFound : public Error {
public:
    explicit NotFound(std::uint64_t index);
    std::uint64_t index() const noexcept { return index_; }

private:
    std::uint64_t index_;
};

class FormatError : public Error {
public:
    using Error::Error;
};

class BadMagic : public FormatError {
public:
    BadMagic();
};

class BadVersion : public FormatError {
public:
    explicit BadVersion(unsigned version);
    unsigned version() const noexcept { return version_; }

private:
    unsigned version_;
};

class TruncatedFile : public FormatError {
public:
    TruncatedFile(std::uint64_t needed, std::uint64_t available);
};

class CorruptRecord : public FormatError {
public:
    CorruptRecord(std::uint64_t offset, const std::string& reason);
    std::uint64_t offset() const noexcept { return offset_; }

private:
    std::uint64_t offset_;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace farahidi
