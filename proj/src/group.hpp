#pragma once

// Finite abelian groups presented as products of cyclic groups, with flat
// lookup tables. Elements are indices into the mixed-radix enumeration of
// coordinate tuples; the first coordinate is most significant, so index order
// equals lexicographic order on coordinates.

#include <memory>
#include <vector>

#include "rational.hpp"

namespace fc {

struct FinAbGroup;
using GroupPtr = std::shared_ptr<const FinAbGroup>;

struct FinAbGroup {
    std::vector<long long> invariants;  // cyclic moduli n_1..n_r, each >= 1
    int n = 1;                          // total order
    std::vector<int> add_table;         // n * n
    std::vector<int> neg_table;         // n
    std::vector<long long> ord_table;   // n, order of each element
    std::vector<int> coord_table;       // n * r, coordinates of each element

    int rank() const { return static_cast<int>(invariants.size()); }
    int add(int x, int y) const { return add_table[static_cast<size_t>(x) * n + y]; }
    int neg(int x) const { return neg_table[x]; }
    int sub(int x, int y) const { return add(x, neg(y)); }
    long long elem_order(int x) const { return ord_table[x]; }
    int coord(int x, int k) const { return coord_table[static_cast<size_t>(x) * rank() + k]; }
    int smul(long long m, int x) const;
    std::vector<int> coords(int x) const;
    int index_of(const std::vector<int>& coords) const;
};

GroupPtr make_group(std::vector<long long> invariants);

// Sorted element list of a subgroup, closed under the operations, plus a
// deterministic generating set computed on demand: greedily take the
// lexicographically smallest element of maximal order, then recurse on a
// complement.
struct Subgroup {
    GroupPtr amb;
    std::vector<int> elems;  // sorted ambient indices, contains 0

    int size() const { return static_cast<int>(elems.size()); }
    bool contains(int x) const;
    int local(int amb_idx) const;  // position in elems, -1 if absent
    const std::vector<int>& generators() const;
    std::vector<long long> generator_orders() const;
    bool operator==(const Subgroup& o) const { return elems == o.elems; }

private:
    mutable std::vector<int> gens_;  // lazily computed, empty until first use
    mutable bool gens_ready_ = false;
};

Subgroup make_subgroup(GroupPtr g, std::vector<int> elems);  // validates closure
Subgroup closure(GroupPtr g, const std::vector<int>& gens);
Subgroup trivial_subgroup(GroupPtr g);
Subgroup full_subgroup(GroupPtr g);

// All subgroups, sorted by (size, element list).
std::vector<Subgroup> all_subgroups(GroupPtr g);

Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b);

struct GroupHom {
    GroupPtr dom, cod;
    std::vector<int> map;  // dom element index -> cod element index

    int operator()(int x) const { return map[x]; }
};

GroupHom make_hom(GroupPtr dom, GroupPtr cod, std::vector<int> map);  // validates additivity
Subgroup hom_kernel(const GroupHom& h);
Subgroup hom_image(const GroupHom& h);

// External direct sum with index pairing: index = x1 * |G2| + x2.
struct DirectSum {
    GroupPtr sum;
    GroupPtr g1, g2;
    int pair(int x1, int x2) const { return x1 * g2->n + x2; }
    int first(int x) const { return x / g2->n; }
    int second(int x) const { return x % g2->n; }
};

DirectSum direct_sum(GroupPtr g1, GroupPtr g2);

}  // namespace fc
