#pragma once

// The computational core: the chi cochain on E (+) F, the decomposition of
// twisted-group-algebra module categories along f: B -> A, the relative
// tensor product of module categories, invertibility, Picard groups, and the
// coprime product/split of categories.

#include "modcat.hpp"

namespace fc {

struct DecompositionResult {
    Subgroup h;        // subgroup of A
    Cochain2 rho;      // normalized cochain on h with d2(rho) = -omega|_h
    Cochain2 raw_rho;  // before the margin normalization, for debugging
    int m = 1;         // multiplicity
    Subgroup k, kperp; // kernel and its orthogonal complement inside B
};

// Decomposes the category of k^phi[B]-modules in Vect_A^omega along f.
// section, when given, maps each local index of H to a chosen preimage in
// K^perp (validated); default is the least preimage. When
// precondition_verified is set the caller vouches for d2(phi) = -f^* omega
// and the quadratic-cost check is skipped.
DecompositionResult decompose(const Subgroup& b, const GroupHom& f, const Cochain2& phi,
                              const PointedBraidedCategory& cat,
                              const std::vector<int>* section = nullptr,
                              bool precondition_verified = false);

struct ChiResult {
    Subgroup b;   // E x F inside A (+) A (see cat_square / cat_sum_hom)
    Cochain2 chi;
    bool verified = false;  // postcondition d2(chi) = -pi^* omega established
};

ChiResult chi(const PointedBraidedCategory& cat, const Subgroup& e, const Cochain2& phi_e,
              const Subgroup& f, const Cochain2& phi_f);

SemisimpleModCat fuse(const ModCat& m1, const ModCat& m2);
SemisimpleModCat fuse_classes(CatPtr cat, const ModCatClass& c1, const ModCatClass& c2);
// Bilinear extension of fuse over summands.
SemisimpleModCat fuse_sums(CatPtr cat, const SemisimpleModCat& x, const SemisimpleModCat& y);

bool same_semisimple(const SemisimpleModCat& x, const SemisimpleModCat& y);

struct FusionTable {
    std::vector<ModCatClass> basis;
    std::vector<SemisimpleModCat> cells;  // basis.size()^2, row-major

    const SemisimpleModCat& cell(int i, int j) const {
        return cells[static_cast<size_t>(i) * basis.size() + j];
    }
};

FusionTable fusion_table(CatPtr cat, bool separable_only = false);

// Nondegeneracy of (e,f) -> beta(e,f) + phi(f,e) - phi(e,f) on E.
bool is_invertible(const ModCat& m);

ModCat dual(const ModCat& m);     // M(E, phi^op + beta|_E)
ModCat inverse(const ModCat& m);  // dual with invertibility required and product-with-unit verified

struct GroupFingerprint {
    long long order = 1;
    bool abelian = true;
    std::vector<long long> element_orders;  // sorted
    long long derived_order = 1;

    bool operator==(const GroupFingerprint&) const = default;
};

struct PicardGroup {
    std::vector<ModCatClass> elements;
    std::vector<std::vector<int>> cayley;
    GroupFingerprint fp;
    std::string name;  // recognized isomorphism type, or "Unrecognized"
};

PicardGroup picard(CatPtr cat, bool separable_only = false);

GroupFingerprint fingerprint(const std::vector<std::vector<int>>& cayley);
std::string recognize_name(const GroupFingerprint& fp);

// Category on A (+) B with q(a,b) = q1(a) + q2(b).
CatPtr box_product(const CatPtr& c1, const CatPtr& c2);

// Splits the invariant list at a coprime cut point and restricts q; verifies
// q(a,b) = q(a,0) + q(0,b).
std::pair<CatPtr, CatPtr> coprime_split(const CatPtr& cat);

}  // namespace fc
