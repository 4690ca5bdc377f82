#pragma once

#include "mpp/poset.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace mpp {

struct CorpusOptions {
    std::size_t max_unmarked = 5;
    /// Marks are drawn from {0, …, max_mark}.
    int max_mark = 4;
    /// Extra marked elements beyond the minima and maxima.
    std::size_t max_extra_marked = 3;
};

/// Rejection sampling: random DAG, transitive reduction, marked extrema plus
/// a few extra marked elements, strictly increasing random marks, regularity
/// filter. Marked ids are "a<i>", unmarked ids "x<i>".
MarkedPoset random_marked_poset(std::mt19937_64& rng, const CorpusOptions& options);

/// `count` posets from one seeded stream; identical seeds give identical corpora.
std::vector<MarkedPoset> generate_corpus(std::uint64_t seed, std::size_t count, const CorpusOptions& options);

struct SuiteTally {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<std::string> failures;
};

struct CorpusReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<SuiteTally> suites;

    bool all_passed() const;
};

/// Runs the agreement suites on every trial: order and chain criteria versus
/// the direct 2-level test, the extension formula versus lattice counting, and
/// equal Ehrhart polynomials of the order and chain polytopes. Trials run in
/// parallel; tallies are merged in trial order.
CorpusReport run_corpus(std::uint64_t seed, std::size_t trials, const CorpusOptions& options);

std::string format_report(const CorpusReport& report);

}  // namespace mpp
