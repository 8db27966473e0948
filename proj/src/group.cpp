#include "group.hpp"

#include <algorithm>
#include <set>

namespace fc {

int FinAbGroup::smul(long long m, int x) const {
    m %= elem_order(x);
    if (m < 0) m += elem_order(x);
    int acc = 0;
    for (long long i = 0; i < m; i++) acc = add(acc, x);
    return acc;
}

std::vector<int> FinAbGroup::coords(int x) const {
    std::vector<int> c(rank());
    for (int k = 0; k < rank(); k++) c[k] = coord(x, k);
    return c;
}

int FinAbGroup::index_of(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) != rank()) throw internal_error("coordinate rank mismatch");
    long long idx = 0;
    for (int k = 0; k < rank(); k++) {
        long long v = c[k] % invariants[k];
        if (v < 0) v += invariants[k];
        idx = idx * invariants[k] + v;
    }
    return static_cast<int>(idx);
}

GroupPtr make_group(std::vector<long long> invariants) {
    for (long long m : invariants)
        if (m < 1) throw math_error("cyclic invariant must be positive");
    auto g = std::make_shared<FinAbGroup>();
    g->invariants = std::move(invariants);
    long long total = 1;
    for (long long m : g->invariants) {
        total *= m;
        if (total > (1 << 20)) throw math_error("group order exceeds supported bound");
    }
    g->n = static_cast<int>(total);
    int n = g->n, r = g->rank();

    g->coord_table.resize(static_cast<size_t>(n) * r);
    for (int x = 0; x < n; x++) {
        long long rem = x;
        for (int k = r - 1; k >= 0; k--) {
            g->coord_table[static_cast<size_t>(x) * r + k] = static_cast<int>(rem % g->invariants[k]);
            rem /= g->invariants[k];
        }
    }
    g->add_table.resize(static_cast<size_t>(n) * n);
    g->neg_table.resize(n);
    std::vector<int> c(r);
    for (int x = 0; x < n; x++) {
        for (int k = 0; k < r; k++)
            c[k] = (g->invariants[k] - g->coord_table[static_cast<size_t>(x) * r + k]) % g->invariants[k];
        g->neg_table[x] = g->index_of(c);
        for (int y = 0; y < n; y++) {
            for (int k = 0; k < r; k++)
                c[k] = (g->coord_table[static_cast<size_t>(x) * r + k] +
                        g->coord_table[static_cast<size_t>(y) * r + k]) % static_cast<int>(g->invariants[k]);
            g->add_table[static_cast<size_t>(x) * n + y] = g->index_of(c);
        }
    }
    g->ord_table.resize(n);
    for (int x = 0; x < n; x++) {
        long long o = 1;
        for (int k = 0; k < r; k++) {
            int v = g->coord_table[static_cast<size_t>(x) * r + k];
            long long m = g->invariants[k];
            o = lcm_ll(o, v == 0 ? 1 : m / gcd_ll(v, m));
        }
        g->ord_table[x] = o;
    }
    return g;
}

bool Subgroup::contains(int x) const {
    return std::binary_search(elems.begin(), elems.end(), x);
}

int Subgroup::local(int amb_idx) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), amb_idx);
    if (it == elems.end() || *it != amb_idx) return -1;
    return static_cast<int>(it - elems.begin());
}

static std::vector<int> closure_elems(const FinAbGroup& g, const std::vector<int>& gens) {
    std::vector<char> in(g.n, 0);
    in[0] = 1;
    std::vector<int> frontier{0}, out{0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int s : gens) {
                int y = g.add(x, s);
                if (!in[y]) { in[y] = 1; out.push_back(y); next.push_back(y); }
            }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Greedy deterministic generating set: smallest element of maximal order
// first, then a complement of its cyclic span inside the subgroup.
static std::vector<int> canonical_gens(const FinAbGroup& g, const std::vector<int>& elems) {
    if (elems.size() == 1) return {};
    int h = -1;
    long long best = 0;
    for (int x : elems)
        if (x != 0 && g.elem_order(x) > best) { best = g.elem_order(x); h = x; }
    std::vector<int> cyc = closure_elems(g, {h});
    if (cyc.size() == elems.size()) return {h};
    size_t target = elems.size() / cyc.size();

    // Enumerate subgroups contained in this one, smallest-first, and take the
    // first complement of the cyclic span.
    std::set<std::vector<int>> subs;
    std::vector<std::vector<int>> frontier{{0}};
    subs.insert({0});
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& t : frontier)
            for (int x : elems) {
                if (std::binary_search(t.begin(), t.end(), x)) continue;
                std::vector<int> gens2 = t;
                gens2.push_back(x);
                std::vector<int> u = closure_elems(g, gens2);
                if (u.size() <= elems.size() &&
                    std::includes(elems.begin(), elems.end(), u.begin(), u.end()) &&
                    subs.insert(u).second)
                    next.push_back(u);
            }
        frontier = std::move(next);
    }
    std::vector<std::vector<int>> ordered(subs.begin(), subs.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (const auto& k : ordered) {
        if (k.size() != target) continue;
        std::vector<int> meet;
        std::set_intersection(k.begin(), k.end(), cyc.begin(), cyc.end(), std::back_inserter(meet));
        if (meet.size() == 1) {
            std::vector<int> rest = canonical_gens(g, k);
            rest.insert(rest.begin(), h);
            return rest;
        }
    }
    throw internal_error("no complement found for subgroup basis");
}

const std::vector<int>& Subgroup::generators() const {
    if (!gens_ready_) {
        gens_ = canonical_gens(*amb, elems);
        gens_ready_ = true;
    }
    return gens_;
}

std::vector<long long> Subgroup::generator_orders() const {
    std::vector<long long> out;
    for (int h : generators()) out.push_back(amb->elem_order(h));
    return out;
}

Subgroup make_subgroup(GroupPtr g, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.empty() || elems.front() != 0)
        throw math_error("subgroup must contain the identity");
    for (int x : elems)
        for (int y : elems)
            if (!std::binary_search(elems.begin(), elems.end(), g->add(x, y)))
                throw math_error("element set is not closed under addition");
    Subgroup s;
    s.amb = g;
    s.elems = std::move(elems);
    return s;
}

Subgroup closure(GroupPtr g, const std::vector<int>& gens) {
    return make_subgroup(g, closure_elems(*g, gens));
}

Subgroup trivial_subgroup(GroupPtr g) { return make_subgroup(g, {0}); }

Subgroup full_subgroup(GroupPtr g) {
    std::vector<int> all(g->n);
    for (int i = 0; i < g->n; i++) all[i] = i;
    return make_subgroup(g, std::move(all));
}

std::vector<Subgroup> all_subgroups(GroupPtr g) {
    std::set<std::vector<int>> found{{0}};
    std::vector<std::vector<int>> frontier{{0}};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& s : frontier)
            for (int x = 0; x < g->n; x++) {
                if (std::binary_search(s.begin(), s.end(), x)) continue;
                std::vector<int> gens(s.begin(), s.end());
                gens.push_back(x);
                std::vector<int> t = closure_elems(*g, gens);
                if (found.insert(t).second) next.push_back(t);
            }
        frontier = std::move(next);
    }
    std::vector<std::vector<int>> ordered(found.begin(), found.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<Subgroup> out;
    out.reserve(ordered.size());
    for (auto& e : ordered) out.push_back(make_subgroup(g, std::move(e)));
    return out;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    if (a.amb != b.amb) throw internal_error("subgroup ambient mismatch");
    std::vector<int> meet;
    std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(),
                          std::back_inserter(meet));
    return make_subgroup(a.amb, std::move(meet));
}

Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b) {
    if (a.amb != b.amb) throw internal_error("subgroup ambient mismatch");
    std::vector<int> sum;
    for (int x : a.elems)
        for (int y : b.elems) sum.push_back(a.amb->add(x, y));
    return make_subgroup(a.amb, std::move(sum));
}

GroupHom make_hom(GroupPtr dom, GroupPtr cod, std::vector<int> map) {
    if (static_cast<int>(map.size()) != dom->n) throw math_error("hom table size mismatch");
    for (int x : map)
        if (x < 0 || x >= cod->n) throw math_error("hom value out of range");
    for (int x = 0; x < dom->n; x++)
        for (int y = 0; y < dom->n; y++)
            if (map[dom->add(x, y)] != cod->add(map[x], map[y]))
                throw math_error("map is not additive");
    return GroupHom{std::move(dom), std::move(cod), std::move(map)};
}

Subgroup hom_kernel(const GroupHom& h) {
    std::vector<int> ker;
    for (int x = 0; x < h.dom->n; x++)
        if (h.map[x] == 0) ker.push_back(x);
    return make_subgroup(h.dom, std::move(ker));
}

Subgroup hom_image(const GroupHom& h) {
    std::vector<int> img(h.map.begin(), h.map.end());
    return make_subgroup(h.cod, std::move(img));
}

DirectSum direct_sum(GroupPtr g1, GroupPtr g2) {
    std::vector<long long> invs = g1->invariants;
    invs.insert(invs.end(), g2->invariants.begin(), g2->invariants.end());
    return DirectSum{make_group(std::move(invs)), std::move(g1), std::move(g2)};
}

}  // namespace fc
