#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "forcelab/graph.hpp"

// Computational checks of the closed-form results, run by `forcelab verify`
// and by the acceptance tests. Each check returns one ClaimResult; failures
// carry a counterexample description in `detail`.
namespace forcelab::verify {

struct ClaimResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<ClaimResult> claims;
    bool passed() const;
};

struct Options {
    std::vector<std::string> corpus_paths;  // graph6 files for the census suite
    std::uint64_t seed = 20240611;
    unsigned parallelism = 1;
};

/// th₊(P_n) by search for n <= search_max, by bound + witness up to witness_max.
ClaimResult path_formula(std::size_t search_max = 20, std::size_t witness_max = 60);
ClaimResult cycle_formula(std::size_t search_max = 18, std::size_t witness_max = 60);
ClaimResult std_cycle_formula(std::size_t search_max = 16);
ClaimResult piecewise_lemma(std::uint64_t limit = 1'000'000);
ClaimResult binary_trees(std::size_t max_height = 3);
ClaimResult growth_constraint(std::size_t samples = 10'000, std::size_t max_n = 12, std::uint64_t seed = 1);
ClaimResult subtree_monotonicity(std::size_t samples = 200, std::size_t max_n = 12, std::uint64_t seed = 2);
ClaimResult ladder_example();
ClaimResult weighted_bounds(std::size_t max_n = 14);
ClaimResult obstruction_fixtures();

/// Graphs read from graph6 files, skipping blank lines. Throws ParseError.
std::vector<Graph> load_corpus(const std::vector<std::string>& paths);

ClaimResult census_equivalence(const std::vector<Graph>& corpus, unsigned parallelism = 1);
ClaimResult upper_bounds(const std::vector<Graph>& corpus, unsigned parallelism = 1);
ClaimResult non_monotonicity(const std::vector<Graph>& corpus);

/// Suite names: paths, cycles, stdcycles, trees, census, weighted, lemma.
/// Throws DomainError for an unknown name or a census run without corpus.
SuiteReport run_suite(std::string_view name, const Options& options);

std::vector<std::string_view> suite_names();

}  // namespace forcelab::verify
