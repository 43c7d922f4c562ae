// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "farahidi/cli.hpp"
#include "farahidi/combinatorics.hpp"
#include "farahidi/error.hpp"
#include "farahidi/indexer.hpp"
#include "farahidi/store.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace farahidi;

namespace {

const std::filesystem::path kData = FARAHIDI_TEST_DATA;
const std::string kCli = FARAHIDI_CLI_PATH;

// Collects failed sub-checks for one criterion.
class Checks {
public:
    void expect(bool ok, const std::string& what)
    {
        ++count_;
        if (!ok)
            failures_.push_back(what);
    }
    template <class A, class B>
    void equal(const A& actual, const B& expected, const std::string& what)
    {
        std::ostringstream s;
        s << what << ": got " << actual << ", want " << expected;
        expect(actual == expected, s.str());
    }
    bool ok() const { return failures_.empty(); }
    int count() const { return count_; }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    int count_ = 0;
    std::vector<std::string> failures_;
};

struct Process {
    int status;
    std::string out;
};

std::string quote(const std::string& s)
{
    std::string q = "'";
    for (char c : s) {
        if (c == '\'')
            q += "'\\''";
        else
            q += c;
    }
    return q + "'";
}

Process run_cli(const std::vector<std::string>& args)
{
    std::string cmd = quote(kCli);
    for (const auto& a : args)
        cmd += " " + quote(a);
    cmd += " 2>/dev/null";
    Process p{-1, {}};
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe)
        return p;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0)
        p.out.append(buf, n);
    const int raw = ::pclose(pipe);
    p.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return p;
}

double seconds(const std::function<void()>& f)
{
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::uint64_t index_of(const std::string& word)
{
    return encode(RootWord::parse(word)).value;
}

void theorem(Checks& c)
{
    const std::uint64_t expected[] = {756, 19656, 491400, 11793600};
    std::uint64_t formula[4] = {};
    std::uint64_t total = 0;
    const double formula_time = seconds([&] {
        for (int r = 2; r <= 5; ++r)
            formula[r - 2] = count_roots(r);
        total = total_root_count();
    });
    for (int r = 2; r <= 5; ++r)
        c.equal(formula[r - 2], expected[r - 2], "count_roots(" + std::to_string(r) + ")");
    c.equal(total, 12305412ULL, "total_root_count");
    c.expect(formula_time < 1e-3, "formula path took " + std::to_string(formula_time) + " s (limit 1 ms)");

    std::uint64_t enumerated[4] = {};
    const double small_time = seconds([&] {
        enumerated[0] = enumerate_distinct_roots(2);
        enumerated[1] = enumerate_distinct_roots(3);
    });
    c.equal(enumerated[0], expected[0], "enumerated r=2");
    c.equal(enumerated[1], expected[1], "enumerated r=3");
    c.expect(small_time < 1.0, "r=2,3 enumeration took " + std::to_string(small_time) + " s (limit 1 s)");

    const double full_time = seconds([&] {
        enumerated[2] = enumerate_distinct_roots(4);
        enumerated[3] = enumerate_distinct_roots(5);
    });
    c.equal(enumerated[2], expected[2], "enumerated r=4");
    c.equal(enumerated[3], expected[3], "enumerated r=5");
    c.expect(full_time < 60.0, "r=4,5 enumeration took " + std::to_string(full_time) + " s (limit 60 s)");

    const Process quick = run_cli({"verify"});
    c.equal(quick.status, 0, "`verify` exit status");
    for (const char* line : {"length 2\tformula 756\tenumerated 756\n",
                             "length 3\tformula 19656\tenumerated 19656\n",
                             "length 4\tformula 491400\t", "length 5\tformula 11793600\t",
                             "total\t12305412\n", "result\tOK\n"})
        c.expect(quick.out.find(line) != std::string::npos,
                 std::string("`verify` output line: ") + line);

    Process full;
    const double cli_full_time = seconds([&] { full = run_cli({"verify", "--full"}); });
    c.equal(full.status, 0, "`verify --full` exit status");
    c.expect(full.out.find("length 4\tformula 491400\tenumerated 491400\n") != std::string::npos,
             "`verify --full` confirms r=4");
    c.expect(full.out.find("length 5\tformula 11793600\tenumerated 11793600\n") != std::string::npos,
             "`verify --full` confirms r=5");
    c.expect(cli_full_time < 60.0, "`verify --full` took " + std::to_string(cli_full_time) + " s");
}

void table3(Checks& c)
{
    const std::vector<std::pair<std::string, std::uint64_t>> rows{
        {"عم", 673},       {"قد", 426},           {"عمر", 16353},
        {"جواد", 373892},  {"سفرجل", 13099700},   {"أقشعر", 12322296}};
    for (const auto& [word, index] : rows) {
        c.equal(index_of(word), index, "encode(" + word + ")");
        const Process p = run_cli({"index", word});
        c.expect(p.status == 0 && p.out.starts_with(std::to_string(index) + "\t"),
                 "`index " + word + "` prints " + std::to_string(index));
    }
    // Circulated with ب=22 and ن=16; canonical weights give these.
    c.equal(index_of("كتب"), 19215ULL, "encode(كتب) canonical");
    c.equal(index_of("نحرج"), 191346ULL, "encode(نحرج) canonical");
}

void table2(Checks& c)
{
    c.equal(index_of("عع"), 1ULL, "encode(عع)");
    c.equal(index_of("ععععع"), 637393ULL, "encode(ععععع)");
    const std::pair<std::uint64_t, std::uint64_t> ranges[] = {
        {1, 784}, {785, 22736}, {22737, 637392}, {637393, 17847760}};
    for (int r = 2; r <= 5; ++r) {
        std::string first, last;
        for (int k = 0; k < r; ++k) {
            first += "ع";
            last += "ا";
        }
        const auto& want = ranges[r - 2];
        c.equal(index_of(first), want.first, "encode(" + first + ")");
        c.equal(index_of(last), want.second, "encode(" + last + ")");
        const IndexRange range = index_range(r);
        c.equal(range.first.value, want.first, "index_range(" + std::to_string(r) + ").first");
        c.equal(range.last.value, want.second, "index_range(" + std::to_string(r) + ").last");
    }
}

void perfect_hash(Checks& c)
{
    std::uint64_t failures = 0;
    std::uint64_t words = 0;
    std::set<std::uint64_t> seen;
    std::uint64_t distinct[6] = {};
    for (int r = 2; r <= 3; ++r) {
        std::vector<int> d(static_cast<std::size_t>(r), 1);
        for (;;) {
            const RootWord w = RootWord::from_weights(d);
            const LexIndex i = encode(w);
            failures += !(decode(i) == w);
            seen.insert(i.value);
            distinct[r] += w.has_distinct_letters();
            ++words;
            std::size_t k = 0;
            while (k < d.size() && d[k] == 28)
                d[k++] = 1;
            if (k == d.size())
                break;
            ++d[k];
        }
    }
    c.equal(words, 22736ULL, "words of length <= 3");
    c.equal(failures, 0ULL, "decode(encode(w)) != w");
    c.equal(seen.size(), static_cast<std::size_t>(22736), "distinct indices over length <= 3");

    std::mt19937_64 rng(637393);
    std::uniform_int_distribution<std::uint64_t> dist(22737, 17847760);
    std::uint64_t sampled_failures = 0;
    const int samples = 100000;
    for (int s = 0; s < samples; ++s) {
        const LexIndex i{dist(rng)};
        sampled_failures += !(encode(decode(i)) == i);
    }
    c.equal(sampled_failures, 0ULL, "encode(decode(i)) != i over 100000 samples");

    for (int r = 2; r <= 3; ++r) {
        std::uint64_t n = 0;
        const IndexRange range = index_range(r);
        for (std::uint64_t i = range.first.value; i <= range.last.value; ++i)
            n += decode(LexIndex{i}).has_distinct_letters();
        c.equal(n, count_roots(r), "distinct-letter indices in range " + std::to_string(r));
        c.equal(distinct[r], count_roots(r), "distinct-letter words of length " + std::to_string(r));
    }
}

void storage(Checks& c)
{
    std::mt19937_64 rng(2009);
    for (std::size_t n : {0u, 1u, 10u, 100u, 1000u, 10000u}) {
        std::uniform_int_distribution<std::uint64_t> dist(kMinIndex, kMaxIndex);
        std::set<std::uint64_t> used;
        std::vector<SourceRecord> records;
        while (records.size() < n) {
            const std::uint64_t i = dist(rng);
            if (used.insert(i).second)
                records.push_back({decode(LexIndex{i}).utf8(), "def " + std::to_string(i) + " تعريف",
                                   records.size() + 1});
        }
        const Lexicon lex = build(records);
        c.expect(deserialize(serialize(lex)) == lex,
                 "round-trip of " + std::to_string(n) + "-entry lexicon");
    }

    std::ifstream tsv(kData / "golden3.tsv", std::ios::binary);
    const Lexicon three = build(parse_tsv(tsv));
    std::ifstream gold(kData / "golden3.frhd", std::ios::binary);
    const std::string golden{std::istreambuf_iterator<char>(gold), std::istreambuf_iterator<char>()};
    const auto bytes = serialize(three);
    c.expect(golden.size() == bytes.size() &&
                 std::equal(golden.begin(), golden.end(), bytes.begin(),
                            [](char a, std::byte b) { return static_cast<std::byte>(a) == b; }),
             "3-entry lexicon matches golden3.frhd byte for byte");

    const auto lex_path = std::filesystem::temp_directory_path() / "farahidi_acceptance.frhd";
    const Process built = run_cli({"build", "--input", (kData / "table3.tsv").string(), "--output",
                                   lex_path.string()});
    c.equal(built.status, 0, "`build` exit status");
    c.expect(built.out.starts_with("records\t6\n"), "`build` reports 6 records");

    std::ifstream fixture(kData / "table3.tsv", std::ios::binary);
    for (const SourceRecord& rec : parse_tsv(fixture)) {
        const Process p = run_cli({"lookup", rec.headword, "--lexicon", lex_path.string()});
        c.equal(p.status, 0, "`lookup " + rec.headword + "` exit status");
        c.expect(p.out.ends_with("\t" + rec.definition + "\n"), "`lookup " + rec.headword + "` definition");
    }
    c.equal(run_cli({"lookup", "كتب", "--lexicon", lex_path.string()}).status, 2,
            "`lookup` of a missing root exits 2");
    std::filesystem::remove(lex_path);
}

void permutations(Checks& c)
{
    const std::vector<std::string> sets{"عم", "عمد", "جوار", "سفرجل"};
    const std::size_t expected[] = {2, 6, 24, 120};
    for (std::size_t k = 0; k < sets.size(); ++k) {
        const auto words = enumerate_permutations(LetterSet(normalize_text(sets[k])));
        std::set<std::uint64_t> indices;
        std::set<std::string> text;
        for (const auto& w : words) {
            indices.insert(encode(w).value);
            text.insert(w.utf8());
        }
        c.equal(words.size(), expected[k], "orderings of " + sets[k]);
        c.equal(text.size(), expected[k], "distinct words of " + sets[k]);
        c.equal(indices.size(), expected[k], "distinct indices of " + sets[k]);
        const Process p = run_cli({"permute", sets[k]});
        c.expect(p.status == 0 &&
                     static_cast<std::size_t>(std::count(p.out.begin(), p.out.end(), '\n')) == expected[k],
                 "`permute " + sets[k] + "` line count");
    }
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Checks&)>>> criteria{
        {"AC1 root-count theorem (756, 19656, 491400, 11793600; total 12305412)", theorem},
        {"AC2 reference example indices and canonical erratum values", table3},
        {"AC3 range boundaries (1,784)(785,22736)(22737,637392)(637393,17847760)", table2},
        {"AC4 perfect hash: exhaustive <=3 letters, 1e5 samples of 4-5 letters", perfect_hash},
        {"AC5 storage round-trip, golden bytes, CLI build+lookup", storage},
        {"AC6 permutation counts 2/6/24/120 with distinct indices", permutations},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Checks c;
        try {
            run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        std::cout << (c.ok() ? "[PASS] " : "[FAIL] ") << name << " (" << c.count() << " checks)\n";
        for (const auto& f : c.failures())
            std::cout << "       - " << f << '\n';
        failed += !c.ok();
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
