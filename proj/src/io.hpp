#pragma once

// Input parsing (category specs as JSON), the built-in fixture corpus of
// reference fusion tables, label parsing/matching, and table rendering.

#include <iosfwd>

#include "engine.hpp"

namespace fc {

struct CategorySpec {
    std::vector<long long> invariants;
    int characteristic = 0;
    // Exactly one of: a full quadratic form table, or explicit (omega, beta).
    std::optional<std::vector<RootExp>> q;
    bool explicit_cocycle = false;
    std::optional<Cochain3> omega;
    std::optional<Cochain2> beta;
};

// Group order bound for CLI-driven computations; FUSION_MAX_ORDER overrides.
long long max_order();

CategorySpec parse_spec_json(const std::string& text);
CategorySpec load_spec_file(const std::string& path);
CatPtr build_category(const CategorySpec& spec);
std::string spec_to_json(const CategorySpec& spec);

// A class label in the input grammar: optional multiplicity, then one of
//   <g1,g2,...>     generators, each "0", an integer (rank-1 groups), or a
//                   sum of letter terms like "a+b", "2a+b" (letters a..h are
//                   the canonical coordinates)
//   nu              shorthand for the full group with decoration #1
// followed by an optional decoration "#k". U+27E8/27E9 brackets are accepted.
struct ParsedLabel {
    long long mult = 1;
    std::vector<int> elems;  // subgroup element list, sorted
    int decor = 0;
};

ParsedLabel parse_label(GroupPtr g, const std::string& text);

// Resolves a label (multiplicity must be 1) against classify output.
const ModCatClass& resolve_class(const PointedBraidedCategory& cat, const std::string& text);

struct Fixture {
    std::string name;
    std::string note;  // what category the table describes
    CategorySpec spec;
    std::vector<std::string> labels;                  // basis, row = column order
    std::vector<std::vector<std::string>> cells;      // expected table entries
};

const std::vector<Fixture>& fixture_corpus();
const Fixture& fixture_by_name(const std::string& name);

struct FixtureReport {
    std::string name;
    bool pass = false;
    std::vector<std::string> diffs;  // empty on pass
};

// Compares the computed fusion table against the fixture, cell for cell,
// allowing a global relabeling by a q-preserving automorphism of A together
// with one decoration bijection per subgroup. Diffs are reported for the
// identity relabeling when nothing matches.
FixtureReport check_fixture(const Fixture& fx);

// Automorphisms of (A, q) as element maps; q = nullptr drops the q condition.
std::vector<std::vector<int>> group_automorphisms(GroupPtr g, const std::vector<RootExp>* q);

std::string render_cell(const SemisimpleModCat& cell);
std::string render_classification(const PointedBraidedCategory& cat, bool separable_only);
std::string render_table(const PointedBraidedCategory& cat, const FusionTable& tab,
                         const std::string& format);  // "md", "csv", "json"
std::string render_picard(const PicardGroup& pic);

}  // namespace fc
