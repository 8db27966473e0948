#pragma once

// Cochains on (subgroups of) finite abelian groups with values in roots of
// unity, the abelian 3-cocycle checker, Quinn's construction from a quadratic
// form, and the trivialization / H^2 machinery.

#include <optional>

#include "group.hpp"

namespace fc {

// A 2-cochain on a closed domain (a subgroup's element list, or the full
// group). Values indexed by local position in dom.
struct Cochain2 {
    GroupPtr g;
    std::vector<int> dom;  // sorted ambient indices, closed under addition
    std::vector<RootExp> v;  // dom.size()^2, row-major

    int size() const { return static_cast<int>(dom.size()); }
    const RootExp& at_local(int i, int j) const { return v[static_cast<size_t>(i) * dom.size() + j]; }
    RootExp& at_local(int i, int j) { return v[static_cast<size_t>(i) * dom.size() + j]; }
    RootExp at(int x, int y) const;  // ambient indices
    int local(int amb) const;
    bool operator==(const Cochain2& o) const { return dom == o.dom && v == o.v; }
};

struct Cochain3 {
    GroupPtr g;
    std::vector<int> dom;
    std::vector<RootExp> v;  // dom.size()^3

    int size() const { return static_cast<int>(dom.size()); }
    const RootExp& at_local(int i, int j, int k) const {
        size_t n = dom.size();
        return v[(static_cast<size_t>(i) * n + j) * n + k];
    }
    RootExp& at_local(int i, int j, int k) {
        size_t n = dom.size();
        return v[(static_cast<size_t>(i) * n + j) * n + k];
    }
    RootExp at(int x, int y, int z) const;
    int local(int amb) const;
    bool operator==(const Cochain3& o) const { return dom == o.dom && v == o.v; }
};

Cochain2 make_cochain2(GroupPtr g, std::vector<int> dom);  // zero-filled
Cochain3 make_cochain3(GroupPtr g, std::vector<int> dom);

// Local addition/negation tables for a closed domain; position-indexed.
struct LocalTable {
    std::vector<int> dom;
    std::vector<int> add;  // n*n local indices
    std::vector<int> neg;  // n
    int n = 0;

    int ladd(int i, int j) const { return add[static_cast<size_t>(i) * n + j]; }
    int lneg(int i) const { return neg[i]; }
};

LocalTable local_table(const FinAbGroup& g, const std::vector<int>& dom);

// Dense integer views: value at index t is v[t]/M as an exponent mod 1.
struct Dense2 {
    int n = 0;
    long long M = 1;
    std::vector<long long> v;
};
struct Dense3 {
    int n = 0;
    long long M = 1;
    std::vector<long long> v;
};

Dense2 densify(const Cochain2& c);
Dense3 densify(const Cochain3& c);

// Coboundary of a 2-cochain: d2(phi)(a,b,c) = phi(b,c) - phi(a+b,c)
// + phi(a,b+c) - phi(a,b).
Cochain3 d2(const Cochain2& phi);

// First violating quadruple of the 3-cocycle identity, if any.
std::optional<std::array<int, 4>> d3_violation(const Cochain3& w);

struct CocycleViolation {
    std::string identity;  // "d3", "hex1", "hex2", "normalization"
    std::vector<int> elems;  // ambient indices of the violating tuple
};

// Validates (omega, beta) as a normalized abelian 3-cocycle: 3-cocycle
// identity plus the two hexagons. Domains must be the full group.
std::optional<CocycleViolation> check_abelian_cocycle(const Cochain3& omega, const Cochain2& beta);

// q(a) = beta(a, a).
std::vector<RootExp> quad_form_of(const Cochain2& beta);

struct AbelianCocycle {
    Cochain3 omega;
    Cochain2 beta;
};

// Quinn's abelian 3-cocycle for a quadratic form on a product of cyclic
// groups: omega from the carry condition b_k + c_k >= n_k, beta from the
// diagonal values and the polar form on generator pairs.
AbelianCocycle quinn(GroupPtr g, const std::vector<RootExp>& q);

// Order criterion: omega of q trivializes on E iff re_order(q(e)) divides the
// order of e for every e in E.
bool is_trivializable(const FinAbGroup& g, const std::vector<RootExp>& q, const Subgroup& e);

// Solves d2(phi) = -(omega restricted to H) over (1/M)Z/Z with
// M = |H| * lcm(denominators), the characteristic part of |H| stripped.
// Output is normalized (phi(0,.) = phi(.,0) = 0) and verified. Returns
// nullopt when omega|_H is cohomologically nontrivial.
std::optional<Cochain2> trivialize(const Cochain3& omega, const Subgroup& h, int characteristic);

// Memoized front end keyed by (group invariants, domain, omega|_H table).
const std::optional<Cochain2>& trivialize_cached(const Cochain3& omega, const Subgroup& h,
                                                 int characteristic);

// Antisymmetrization alt(c)(x,y) = c(x,y) - c(y,x); nullopt when the result
// is not bilinear (c was not a 2-cocycle on its domain).
std::optional<Cochain2> alt(const Cochain2& c);
Cochain2 alt_table(const Cochain2& c);  // antisymmetrization without the bilinearity gate

bool is_bilinear(const Cochain2& c);

// Pairing rows x cols, (b, k) -> phi(b, k) - phi(k, b), verified bilinear.
struct PairingForm {
    GroupPtr g;
    std::vector<int> rows, cols;  // ambient indices
    std::vector<RootExp> v;       // rows.size() * cols.size()

    const RootExp& at_local(int i, int j) const { return v[static_cast<size_t>(i) * cols.size() + j]; }
};

// Bil(phi): B x K -> k^x for K the kernel subgroup; throws
// InternalInvariantViolation when the lemma's bilinearity fails.
PairingForm bil(const Cochain2& phi, const Subgroup& k);

// K^perp = {b in B : Bil(b, k) = 0 for all k in K} as a subgroup of the
// cochain's domain.
Subgroup orthogonal_complement(const PairingForm& form);

// True iff alt(c) == 0; throws NotACocycle when d2(c) != 0.
bool is_coboundary(const Cochain2& c);

// All H^2 classes of the subgroup as standard representative cochains,
// c(x,y) = sum_{i<j} v_ij * x_j * y_i in canonical-generator coordinates,
// v_ij ranging over (1/g_ij)Z/Z with g_ij the prime-to-char part of
// gcd(m_i, m_j). First entry is the zero class; order is deterministic.
std::vector<Cochain2> h2_classes(const Subgroup& h, int characteristic);

// X_a(l,k) = omega(l,a,k) - omega(l,k,a) - omega(a,l,k) on H.
Cochain2 xg_twist(const Cochain3& omega, int a, const Subgroup& h);

// A 1-cochain lam on the closed domain of phi with
// lam(k1) + lam(k2) - lam(k1+k2) = phi(k1,k2); always solvable when phi is a
// symmetric-enough 2-cocycle on an abelian group over divisible coefficients.
std::vector<RootExp> projective_character(const Cochain2& phi, int characteristic);

}  // namespace fc
