#pragma once

// Pointed braided categories and their indecomposable semisimple module
// categories M(H, phi): validation, classification, canonical class
// invariants, equivalence, separability.

#include <map>
#include <string>

#include "cohomology.hpp"

namespace fc {

struct ModCatClass {
    Subgroup h;
    std::vector<RootExp> skew;  // |H|^2 canonical skew form table (local index order)
    int h2_index = 0;           // position in the deterministic h2_classes order
    std::string label;          // "<gens>#k", "#0" omitted

    bool operator==(const ModCatClass& o) const { return h.elems == o.h.elems && skew == o.skew; }
    std::vector<long long> key() const;  // total-order key for maps
};

struct SemisimpleModCat {
    std::vector<std::pair<ModCatClass, int>> summands;  // distinct classes, multiplicities >= 1
};

struct PointedBraidedCategory {
    GroupPtr group;
    Cochain3 omega;
    Cochain2 beta;
    std::vector<RootExp> q;  // q(a) = beta(a,a)
    int characteristic = 0;

    // Single-threaded lazy caches.
    mutable std::map<std::vector<int>, const std::optional<Cochain2>*> ref_cache;
    mutable std::optional<std::vector<ModCatClass>> classes_cache;
    mutable std::optional<DirectSum> square_cache;    // A (+) A
    mutable std::optional<GroupHom> sum_hom_cache;    // addition map A(+)A -> A
    mutable std::optional<bool> omega_zero_cache;
};

using CatPtr = std::shared_ptr<const PointedBraidedCategory>;

// Validates (omega, beta) via check_abelian_cocycle and the characteristic
// constraint on all denominators.
CatPtr make_category(GroupPtr g, AbelianCocycle ab, int characteristic);
CatPtr make_category_from_q(GroupPtr g, std::vector<RootExp> q, int characteristic);

bool omega_is_zero(const PointedBraidedCategory& cat);
const DirectSum& cat_square(const PointedBraidedCategory& cat);
const GroupHom& cat_sum_hom(const PointedBraidedCategory& cat);

struct ModCat {
    CatPtr cat;
    Subgroup h;
    Cochain2 phi;  // on h, d2(phi) = -omega|_h
};

// Validates d2(phi) = -(omega restricted to H) eagerly.
ModCat make_modcat(CatPtr cat, Subgroup h, Cochain2 phi);

// Deterministic trivialization of -omega|_H, cached per subgroup; throws
// math_error when omega|_H is not trivializable.
const Cochain2& ref_trivialization(const PointedBraidedCategory& cat, const Subgroup& h);

// One class per (trivializable subgroup, H^2 class), in deterministic order:
// subgroups by (size, elements), then h2 index.
const std::vector<ModCatClass>& classify(const PointedBraidedCategory& cat);

// Minimal-skew invariant over the X_a twists; throws NotACocycle when the
// twisted difference fails to be a cocycle.
ModCatClass canonical_class(const ModCat& m);

bool equivalent(const ModCat& m1, const ModCat& m2);

bool is_separable(const Subgroup& h, int characteristic);

long long rank_of(const PointedBraidedCategory& cat, const ModCatClass& cls);

// A representative ModCat for a classified class.
ModCat class_representative(CatPtr cat, const ModCatClass& cls);

std::string render_element(const FinAbGroup& g, int x);
std::string class_label(const Subgroup& h, int h2_index);

}  // namespace fc
