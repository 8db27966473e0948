#include "oracle.hpp"

#include <algorithm>

namespace fc {

bool brute_is_coboundary(const Cochain2& c, long long M) {
    int n = c.size();
    if (n > 4 || M > 4)
        throw math_error("brute_is_coboundary bounds exceeded", ErrKind::BoundExceeded);
    LocalTable t = local_table(*c.g, c.dom);
    long long total = 1;
    for (int i = 0; i < n; i++) total *= M;
    std::vector<long long> kappa(n);
    for (long long code = 0; code < total; code++) {
        long long rem = code;
        for (int i = 0; i < n; i++) { kappa[i] = rem % M; rem /= M; }
        bool ok = true;
        for (int x = 0; x < n && ok; x++)
            for (int y = 0; y < n && ok; y++) {
                RootExp d = re_make(kappa[y] - kappa[t.ladd(x, y)] + kappa[x], M);
                ok = d == c.at_local(x, y);
            }
        if (ok) return true;
    }
    return false;
}

long long center_dimension(const TwistedGroupAlgebra& alg) {
    int n = alg.twist.size();
    if (n > 64) throw math_error("center_dimension bound exceeded", ErrKind::BoundExceeded);
    long long count = 0;
    for (int x = 0; x < n; x++) {
        bool central = true;
        for (int y = 0; y < n && central; y++)
            central = alg.twist.at_local(x, y) == alg.twist.at_local(y, x);
        count += central;
    }
    return count;
}

long long brute_simple_count(const Subgroup& b, const GroupHom& f, const Cochain2& phi,
                             const PointedBraidedCategory& cat) {
    std::vector<int> kelems;
    for (int x : b.elems)
        if (f(x) == 0) kelems.push_back(x);
    TwistedGroupAlgebra alg;
    alg.twist = make_cochain2(b.amb, kelems);
    int nk = static_cast<int>(kelems.size());
    for (int i = 0; i < nk; i++)
        for (int j = 0; j < nk; j++) alg.twist.at_local(i, j) = phi.at(kelems[i], kelems[j]);

    std::vector<int> img;
    for (int x : b.elems) img.push_back(f(x));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    long long cosets = cat.group->n / static_cast<long long>(img.size());
    return center_dimension(alg) * cosets;
}

}  // namespace fc
