#ifndef LISOM_SELFTEST_HPP
#define LISOM_SELFTEST_HPP

#include <iosfwd>
#include <string>

namespace lisom {

struct SelftestResult {
    int passed = 0;
    int failed = 0;
    int internal_inconsistencies = 0;

    bool ok() const { return failed == 0 && internal_inconsistencies == 0; }
    void merge(const SelftestResult& other) {
        passed += other.passed;
        failed += other.failed;
        internal_inconsistencies += other.internal_inconsistencies;
    }
};

/// Replays every fixture in the corpus file, one PASS/FAIL line each.
SelftestResult run_corpus(const std::string& corpus_path, std::ostream& out);

/// Deterministic property sweeps: the mod-p factor criterion against the
/// subgroup test, cyclotomic product identity, factorization
/// reconstruction, and the V-set inclusion spot checks.
SelftestResult run_builtin_properties(std::ostream& out);

/// Locates fixtures/corpus.json near the executable or the working
/// directory; empty string when not found.
std::string default_corpus_path(const char* argv0);

} // namespace lisom

#endif
