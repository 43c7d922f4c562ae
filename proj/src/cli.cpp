#include "farahidi/cli.hpp"

#include "farahidi/combinatorics.hpp"
#include "farahidi/error.hpp"
#include "farahidi/indexer.hpp"
#include "farahidi/store.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <ostream>
#include <string>

// Test builds override this to check that `verify` fails loudly.
#ifndef FARAHIDI_EXPECTED_TOTAL
#define FARAHIDI_EXPECTED_TOTAL ::farahidi::kFarahidyTotal
#endif

namespace farahidi::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void print_digits(std::ostream& out, const DigitVector& d)
{
    out << "d=";
    for (std::size_t k = 0; k < d.size(); ++k)
        out << (k ? "," : "") << d[k];
}

void print_stats(std::ostream& out, const LexiconStats& s)
{
    for (int r = kMinRootLength; r <= kMaxRootLength; ++r)
        out << "length " << r << '\t' << s.count(r) << '\n';
    out << "total\t" << s.total << '\n';
}

int cmd_build(const std::string& input, const std::string& output, std::ostream& out)
{
    std::ifstream in(input, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + input);
    const auto records = parse_tsv(in);
    const Lexicon lex = build(records);
    save(lex, output);
    out << "records\t" << lex.size() << '\n';
    print_stats(out, stats(lex));
    return kExitOk;
}

int cmd_index(const std::string& word, std::ostream& out)
{
    const RootWord root = RootWord::parse(word);
    out << encode(root).value << '\t';
    print_digits(out, root.digits());
    out << '\n';
    return kExitOk;
}

int cmd_word(const std::string& text, std::ostream& out)
{
    long long value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range)
        throw IndexOutOfRange(value);
    if (ec != std::errc() || ptr != last)
        throw InvalidRoot("\"" + text + "\" is not a decimal index");
    if (value < 1)
        throw IndexOutOfRange(value);
    const LexIndex index{static_cast<std::uint64_t>(value)};
    const RootWord root = decode(index);
    out << root.utf8() << '\t' << root.length() << '\n';
    return kExitOk;
}

int cmd_lookup(const std::string& word, const std::string& lexicon, std::ostream& out)
{
    const RootWord root = RootWord::parse(word);
    const Lexicon lex = load(lexicon);
    try {
        const LexiconEntry& e = lookup(lex, root);
        out << e.index.value << '\t' << e.headword << '\t' << e.definition << '\n';
        return kExitOk;
    } catch (const NotFound& nf) {
        out << nf.index() << "\tnot found\n";
        return kExitNotFound;
    }
}

int cmd_permute(const std::string& letters, std::ostream& out)
{
    const LetterSet set(normalize_text(letters));
    for (const RootWord& w : enumerate_permutations(set))
        out << w.utf8() << '\t' << encode(w).value << '\n';
    return kExitOk;
}

int cmd_stats(const std::string& lexicon, std::ostream& out)
{
    print_stats(out, stats(load(lexicon)));
    return kExitOk;
}

int cmd_verify(bool full, std::ostream& out)
{
    const VerifyReport report = verify_root_counts(full, FARAHIDI_EXPECTED_TOTAL);
    for (const LengthCheck& c : report.lengths) {
        out << "length " << c.length << "\tformula " << c.closed_form << "\tenumerated ";
        if (c.enumerated)
            out << *c.enumerated;
        else
            out << "skipped";
        out << '\n';
    }
    out << "total\t" << report.total << '\n';
    out << "expected\t" << report.expected_total << '\n';
    out << "formula seconds\t" << report.closed_form_seconds << '\n';
    out << "enumeration seconds\t" << report.enumeration_seconds << '\n';
    out << "result\t" << (report.passed() ? "OK" : "FAIL") << '\n';
    return report.passed() ? kExitOk : kExitError;
}

} // namespace

bool VerifyReport::passed() const
{
    if (total != expected_total)
        return false;
    for (const LengthCheck& c : lengths)
        if (c.enumerated && *c.enumerated != c.closed_form)
            return false;
    return true;
}

VerifyReport verify_root_counts(bool full, std::uint64_t expected_total)
{
    VerifyReport report;
    report.expected_total = expected_total;

    auto start = Clock::now();
    for (int r = kMinRootLength; r <= kMaxRootLength; ++r) {
        LengthCheck& c = report.lengths[static_cast<std::size_t>(r - kMinRootLength)];
        c.length = r;
        c.closed_form = count_roots(r);
        report.total += c.closed_form;
    }
    report.closed_form_seconds = seconds_since(start);

    start = Clock::now();
    const int last = full ? kMaxRootLength : 3;
    for (int r = kMinRootLength; r <= last; ++r)
        report.lengths[static_cast<std::size_t>(r - kMinRootLength)].enumerated =
            enumerate_distinct_roots(r);
    report.enumeration_seconds = seconds_since(start);
    return report;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Al-Farahidy root lexicon indexer", "farahidi"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string input, output, word, lexicon, index_text, letters;
    bool full = false;

    auto* build_cmd = app.add_subcommand("build", "Build a binary lexicon from a TSV file");
    build_cmd->add_option("--input", input, "headword<TAB>definition file")->required();
    build_cmd->add_option("--output", output, "lexicon file to write")->required();

    auto* lookup_cmd = app.add_subcommand("lookup", "Look up a word's entry");
    lookup_cmd->add_option("word", word)->required();
    lookup_cmd->add_option("--lexicon", lexicon)->required();

    auto* index_cmd = app.add_subcommand("index", "Print a word's index and digit vector");
    index_cmd->add_option("word", word)->required();

    auto* word_cmd = app.add_subcommand("word", "Print the root stored at an index");
    word_cmd->add_option("index", index_text)->required();

    auto* permute_cmd = app.add_subcommand("permute", "List every ordering of distinct letters");
    permute_cmd->add_option("letters", letters)->required();

    auto* stats_cmd = app.add_subcommand("stats", "Per-length entry counts of a lexicon");
    stats_cmd->add_option("--lexicon", lexicon)->required();

    auto* verify_cmd = app.add_subcommand("verify", "Check the 12305412 root-count theorem");
    verify_cmd->add_flag("--full", full, "also enumerate lengths 4 and 5");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e, out, err);
        return status == 0 ? kExitOk : kExitError;
    }

    try {
        if (build_cmd->parsed())
            return cmd_build(input, output, out);
        if (lookup_cmd->parsed())
            return cmd_lookup(word, lexicon, out);
        if (index_cmd->parsed())
            return cmd_index(word, out);
        if (word_cmd->parsed())
            return cmd_word(index_text, out);
        if (permute_cmd->parsed())
            return cmd_permute(letters, out);
        if (stats_cmd->parsed())
            return cmd_stats(lexicon, out);
        if (verify_cmd->parsed())
            return cmd_verify(full, out);
    } catch (const NotFound& e) {
        err << "farahidi: " << e.what() << '\n';
        return kExitNotFound;
    } catch (const std::exception& e) {
        err << "farahidi: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

} // namespace farahidi::cli
