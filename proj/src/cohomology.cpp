#include "cohomology.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace fc {

namespace {

int loc_of(const std::vector<int>& dom, int amb) {
    auto it = std::lower_bound(dom.begin(), dom.end(), amb);
    if (it == dom.end() || *it != amb) throw internal_error("element outside cochain domain");
    return static_cast<int>(it - dom.begin());
}

long long mod_pos(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

// Numerator of x rescaled to denominator M (requires den | M).
long long scaled_num(const RootExp& x, long long M) {
    if (M % x.den != 0) throw internal_error("dense rescale with incompatible modulus");
    return x.num * (M / x.den);
}

}  // namespace

RootExp Cochain2::at(int x, int y) const { return at_local(local(x), local(y)); }
int Cochain2::local(int amb) const { return loc_of(dom, amb); }

RootExp Cochain3::at(int x, int y, int z) const { return at_local(local(x), local(y), local(z)); }
int Cochain3::local(int amb) const { return loc_of(dom, amb); }

Cochain2 make_cochain2(GroupPtr g, std::vector<int> dom) {
    Cochain2 c;
    c.g = std::move(g);
    c.dom = std::move(dom);
    c.v.assign(c.dom.size() * c.dom.size(), RootExp{});
    return c;
}

Cochain3 make_cochain3(GroupPtr g, std::vector<int> dom) {
    Cochain3 c;
    c.g = std::move(g);
    c.dom = std::move(dom);
    c.v.assign(c.dom.size() * c.dom.size() * c.dom.size(), RootExp{});
    return c;
}

LocalTable local_table(const FinAbGroup& g, const std::vector<int>& dom) {
    LocalTable t;
    t.dom = dom;
    t.n = static_cast<int>(dom.size());
    t.add.resize(static_cast<size_t>(t.n) * t.n);
    t.neg.resize(t.n);
    for (int i = 0; i < t.n; i++) {
        t.neg[i] = loc_of(dom, g.neg(dom[i]));
        for (int j = 0; j < t.n; j++)
            t.add[static_cast<size_t>(i) * t.n + j] = loc_of(dom, g.add(dom[i], dom[j]));
    }
    return t;
}

Dense2 densify(const Cochain2& c) {
    Dense2 d;
    d.n = c.size();
    for (const RootExp& x : c.v) d.M = lcm_ll(d.M, x.den);
    d.v.resize(c.v.size());
    for (size_t i = 0; i < c.v.size(); i++) d.v[i] = scaled_num(c.v[i], d.M);
    return d;
}

Dense3 densify(const Cochain3& c) {
    Dense3 d;
    d.n = c.size();
    for (const RootExp& x : c.v) d.M = lcm_ll(d.M, x.den);
    d.v.resize(c.v.size());
    for (size_t i = 0; i < c.v.size(); i++) d.v[i] = scaled_num(c.v[i], d.M);
    return d;
}

Cochain3 d2(const Cochain2& phi) {
    LocalTable t = local_table(*phi.g, phi.dom);
    Cochain3 out = make_cochain3(phi.g, phi.dom);
    int n = t.n;
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
            for (int c = 0; c < n; c++) {
                RootExp v = re_sub(phi.at_local(b, c), phi.at_local(t.ladd(a, b), c));
                v = re_add(v, phi.at_local(a, t.ladd(b, c)));
                out.at_local(a, b, c) = re_sub(v, phi.at_local(a, b));
            }
    return out;
}

std::optional<std::array<int, 4>> d3_violation(const Cochain3& w) {
    LocalTable t = local_table(*w.g, w.dom);
    Dense3 d = densify(w);
    int n = t.n;
    long long M = d.M;
    auto at = [&](int a, int b, int c) -> long long {
        return d.v[(static_cast<size_t>(a) * n + b) * n + c];
    };
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++) {
            int ab = t.ladd(a, b);
            for (int c = 0; c < n; c++) {
                int bc = t.ladd(b, c);
                for (int e = 0; e < n; e++) {
                    long long v = at(b, c, e) - at(ab, c, e) + at(a, bc, e) -
                                  at(a, b, t.ladd(c, e)) + at(a, b, c);
                    if (mod_pos(v, M) != 0)
                        return std::array<int, 4>{w.dom[a], w.dom[b], w.dom[c], w.dom[e]};
                }
            }
        }
    return std::nullopt;
}

std::optional<CocycleViolation> check_abelian_cocycle(const Cochain3& omega, const Cochain2& beta) {
    if (omega.g != beta.g || omega.dom != beta.dom)
        throw internal_error("omega/beta domain mismatch");
    if (omega.size() != omega.g->n) throw internal_error("abelian cocycle must live on the full group");
    const FinAbGroup& g = *omega.g;
    int n = g.n;
    for (int a = 0; a < n; a++) {
        if (!beta.at_local(a, 0).is_zero() || !beta.at_local(0, a).is_zero())
            return CocycleViolation{"normalization", {a}};
        for (int b = 0; b < n; b++)
            if (!omega.at_local(a, b, 0).is_zero() || !omega.at_local(a, 0, b).is_zero() ||
                !omega.at_local(0, a, b).is_zero())
                return CocycleViolation{"normalization", {a, b}};
    }
    if (auto bad = d3_violation(omega))
        return CocycleViolation{"d3", {(*bad)[0], (*bad)[1], (*bad)[2], (*bad)[3]}};

    Dense3 dw = densify(omega);
    Dense2 db = densify(beta);
    long long M = lcm_ll(dw.M, db.M);
    long long sw = M / dw.M, sb = M / db.M;
    auto w = [&](int a, int b, int c) -> long long {
        return dw.v[(static_cast<size_t>(a) * n + b) * n + c] * sw;
    };
    auto bt = [&](int a, int b) -> long long { return db.v[static_cast<size_t>(a) * n + b] * sb; };
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++) {
            int ab = g.add(a, b);
            for (int c = 0; c < n; c++) {
                int bc = g.add(b, c);
                long long h1 = w(b, c, a) + bt(a, bc) + w(a, b, c) -
                               (bt(a, c) + w(b, a, c) + bt(a, b));
                if (mod_pos(h1, M) != 0) return CocycleViolation{"hex1", {a, b, c}};
                long long h2 = -w(c, a, b) + bt(ab, c) - w(a, b, c) -
                               (bt(a, c) - w(a, c, b) + bt(b, c));
                if (mod_pos(h2, M) != 0) return CocycleViolation{"hex2", {a, b, c}};
            }
        }
    return std::nullopt;
}

std::vector<RootExp> quad_form_of(const Cochain2& beta) {
    std::vector<RootExp> q(beta.size());
    for (int a = 0; a < beta.size(); a++) q[a] = beta.at_local(a, a);
    return q;
}

AbelianCocycle quinn(GroupPtr g, const std::vector<RootExp>& q) {
    if (static_cast<int>(q.size()) != g->n) throw math_error("quadratic form table size mismatch");
    int n = g->n, r = g->rank();
    std::vector<int> full(n);
    for (int i = 0; i < n; i++) full[i] = i;

    std::vector<int> basis(r);  // generator e_k indices
    for (int k = 0; k < r; k++) {
        std::vector<int> c(r, 0);
        c[k] = static_cast<int>(1 % g->invariants[k]);
        basis[k] = g->index_of(c);
    }
    std::vector<RootExp> qe(r), vk(r);
    for (int k = 0; k < r; k++) {
        qe[k] = q[basis[k]];
        vk[k] = re_scale(g->invariants[k], qe[k]);
    }
    // Polar form on generator pairs.
    std::vector<RootExp> bq(static_cast<size_t>(r) * r);
    for (int i = 0; i < r; i++)
        for (int j = 0; j < r; j++) {
            int s = g->add(basis[i], basis[j]);
            bq[static_cast<size_t>(i) * r + j] = re_sub(re_sub(q[s], q[basis[i]]), q[basis[j]]);
        }

    AbelianCocycle ab;
    ab.omega = make_cochain3(g, full);
    ab.beta = make_cochain2(g, full);
    for (int b = 0; b < n; b++)
        for (int c = 0; c < n; c++) {
            // Carry pattern of b + c decides which generators contribute.
            std::vector<char> carry(r);
            for (int k = 0; k < r; k++)
                carry[k] = g->coord(b, k) + g->coord(c, k) >= g->invariants[k];
            for (int a = 0; a < n; a++) {
                RootExp val{};
                for (int k = 0; k < r; k++)
                    if (carry[k]) val = re_add(val, re_scale(g->coord(a, k), vk[k]));
                ab.omega.at_local(a, b, c) = val;
            }
        }
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++) {
            RootExp val{};
            for (int k = 0; k < r; k++)
                val = re_add(val, re_scale(static_cast<long long>(g->coord(a, k)) * g->coord(b, k), qe[k]));
            for (int i = 0; i < r; i++)
                for (int j = i + 1; j < r; j++)
                    val = re_add(val, re_scale(static_cast<long long>(g->coord(a, j)) * g->coord(b, i),
                                               bq[static_cast<size_t>(i) * r + j]));
            ab.beta.at_local(a, b) = val;
        }
    return ab;
}

bool is_trivializable(const FinAbGroup& g, const std::vector<RootExp>& q, const Subgroup& e) {
    for (int x : e.elems) {
        long long o = re_order(q[x]);
        if (o != 1 && g.elem_order(x) % o != 0) return false;
    }
    return true;
}

std::optional<Cochain2> trivialize(const Cochain3& omega, const Subgroup& h, int characteristic) {
    LocalTable t = local_table(*omega.g, h.elems);
    int n = t.n;
    // Restriction of omega, densified.
    long long Md = 1;
    std::vector<int> glob(n);
    for (int i = 0; i < n; i++) glob[i] = omega.local(h.elems[i]);
    std::vector<RootExp> w(static_cast<size_t>(n) * n * n);
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
            for (int c = 0; c < n; c++) {
                const RootExp& x = omega.at_local(glob[a], glob[b], glob[c]);
                w[(static_cast<size_t>(a) * n + b) * n + c] = x;
                Md = lcm_ll(Md, x.den);
            }
    long long M = prime_to_part(n, characteristic) * Md;

    IntMatrix sys(n * n * n, n * n);
    std::vector<long long> rhs(static_cast<size_t>(n) * n * n);
    size_t row = 0;
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
            for (int c = 0; c < n; c++, row++) {
                sys.at(static_cast<int>(row), b * n + c) += 1;
                sys.at(static_cast<int>(row), t.ladd(a, b) * n + c) -= 1;
                sys.at(static_cast<int>(row), a * n + t.ladd(b, c)) += 1;
                sys.at(static_cast<int>(row), a * n + b) -= 1;
                const RootExp& x = w[(static_cast<size_t>(a) * n + b) * n + c];
                rhs[row] = mod_pos(-scaled_num(x, M), M);
            }
    auto sol = solve_linear_mod(sys, rhs, M);
    if (!sol) return std::nullopt;

    Cochain2 phi = make_cochain2(omega.g, h.elems);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) phi.at_local(i, j) = re_make((*sol)[i * n + j], M);
    // Coboundary shift making the margins vanish.
    Cochain2 out = make_cochain2(omega.g, h.elems);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            out.at_local(i, j) =
                re_add(re_sub(re_sub(phi.at_local(i, j), phi.at_local(i, 0)), phi.at_local(0, j)),
                       phi.at_local(0, 0));
    for (int i = 0; i < n; i++)
        if (!out.at_local(i, 0).is_zero() || !out.at_local(0, i).is_zero())
            throw internal_error("trivialize normalization failed");
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
            for (int c = 0; c < n; c++) {
                RootExp v = re_sub(out.at_local(b, c), out.at_local(t.ladd(a, b), c));
                v = re_add(v, re_sub(out.at_local(a, t.ladd(b, c)), out.at_local(a, b)));
                if (!(v == re_neg(w[(static_cast<size_t>(a) * n + b) * n + c])))
                    throw internal_error("trivialize verification failed",
                                         ErrKind::InternalInvariantViolation);
            }
    return out;
}

const std::optional<Cochain2>& trivialize_cached(const Cochain3& omega, const Subgroup& h,
                                                 int characteristic) {
    static std::map<std::vector<long long>, std::optional<Cochain2>> cache;
    static std::mutex mu;

    std::vector<long long> key;
    key.push_back(characteristic);
    for (long long m : omega.g->invariants) key.push_back(m);
    key.push_back(-1);
    for (int x : h.elems) key.push_back(x);
    key.push_back(-2);
    long long M = 1;
    std::vector<int> glob(h.elems.size());
    for (size_t i = 0; i < h.elems.size(); i++) glob[i] = omega.local(h.elems[i]);
    for (int a : glob)
        for (int b : glob)
            for (int c : glob) M = lcm_ll(M, omega.at_local(a, b, c).den);
    key.push_back(M);
    for (int a : glob)
        for (int b : glob)
            for (int c : glob) key.push_back(scaled_num(omega.at_local(a, b, c), M));

    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(std::move(key), trivialize(omega, h, characteristic)).first;
    return it->second;
}

Cochain2 alt_table(const Cochain2& c) {
    Cochain2 out = make_cochain2(c.g, c.dom);
    for (int i = 0; i < c.size(); i++)
        for (int j = 0; j < c.size(); j++)
            out.at_local(i, j) = re_sub(c.at_local(i, j), c.at_local(j, i));
    return out;
}

bool is_bilinear(const Cochain2& c) {
    LocalTable t = local_table(*c.g, c.dom);
    int n = t.n;
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
            for (int x = 0; x < n; x++) {
                if (!re_sub(c.at_local(t.ladd(a, b), x),
                            re_add(c.at_local(a, x), c.at_local(b, x))).is_zero())
                    return false;
                if (!re_sub(c.at_local(x, t.ladd(a, b)),
                            re_add(c.at_local(x, a), c.at_local(x, b))).is_zero())
                    return false;
            }
    return true;
}

std::optional<Cochain2> alt(const Cochain2& c) {
    Cochain2 out = alt_table(c);
    if (!is_bilinear(out)) return std::nullopt;
    return out;
}

PairingForm bil(const Cochain2& phi, const Subgroup& k) {
    if (phi.g != k.amb) throw internal_error("ambient mismatch in bil");
    int nb = phi.size(), nk = k.size();
    PairingForm form;
    form.g = phi.g;
    form.rows = phi.dom;
    form.cols = k.elems;
    form.v.resize(static_cast<size_t>(nb) * nk);

    Dense2 d = densify(phi);
    long long M = d.M;
    std::vector<int> kl(nk);
    for (int j = 0; j < nk; j++) kl[j] = loc_of(phi.dom, k.elems[j]);
    std::vector<long long> dv(static_cast<size_t>(nb) * nk);
    for (int i = 0; i < nb; i++)
        for (int j = 0; j < nk; j++) {
            long long x = d.v[static_cast<size_t>(i) * nb + kl[j]] -
                          d.v[static_cast<size_t>(kl[j]) * nb + i];
            dv[static_cast<size_t>(i) * nk + j] = mod_pos(x, M);
            form.v[static_cast<size_t>(i) * nk + j] = re_make(x, M);
        }
    // Bilinearity per the kernel lemma; failure means a malformed cochain.
    LocalTable tb = local_table(*phi.g, phi.dom);
    LocalTable tk = local_table(*phi.g, k.elems);
    for (int i = 0; i < nb; i++)
        for (int i2 = 0; i2 < nb; i2++) {
            int s = tb.ladd(i, i2);
            for (int j = 0; j < nk; j++)
                if (mod_pos(dv[static_cast<size_t>(s) * nk + j] - dv[static_cast<size_t>(i) * nk + j] -
                                dv[static_cast<size_t>(i2) * nk + j],
                            M) != 0)
                    throw internal_error("Bil not additive in the first slot",
                                         ErrKind::InternalInvariantViolation);
        }
    for (int j = 0; j < nk; j++)
        for (int j2 = 0; j2 < nk; j2++) {
            int s = tk.ladd(j, j2);
            for (int i = 0; i < nb; i++)
                if (mod_pos(dv[static_cast<size_t>(i) * nk + s] - dv[static_cast<size_t>(i) * nk + j] -
                                dv[static_cast<size_t>(i) * nk + j2],
                            M) != 0)
                    throw internal_error("Bil not additive in the second slot",
                                         ErrKind::InternalInvariantViolation);
        }
    return form;
}

Subgroup orthogonal_complement(const PairingForm& form) {
    int nk = static_cast<int>(form.cols.size());
    std::vector<int> perp;
    for (size_t i = 0; i < form.rows.size(); i++) {
        bool ok = true;
        for (int j = 0; j < nk && ok; j++) ok = form.v[i * nk + j].is_zero();
        if (ok) perp.push_back(form.rows[i]);
    }
    return make_subgroup(form.g, std::move(perp));
}

bool is_coboundary(const Cochain2& c) {
    LocalTable t = local_table(*c.g, c.dom);
    Dense2 d = densify(c);
    int n = t.n;
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++) {
            int ab = t.ladd(a, b);
            for (int x = 0; x < n; x++) {
                long long v = d.v[static_cast<size_t>(b) * n + x] -
                              d.v[static_cast<size_t>(ab) * n + x] +
                              d.v[static_cast<size_t>(a) * n + t.ladd(b, x)] -
                              d.v[static_cast<size_t>(a) * n + b];
                if (mod_pos(v, d.M) != 0)
                    throw math_error("is_coboundary input is not a 2-cocycle", ErrKind::NotACocycle);
            }
        }
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
            if (!re_sub(c.at_local(a, b), c.at_local(b, a)).is_zero()) return false;
    return true;
}

std::vector<Cochain2> h2_classes(const Subgroup& h, int characteristic) {
    const FinAbGroup& g = *h.amb;
    const std::vector<int>& basis = h.generators();
    std::vector<long long> orders = h.generator_orders();
    int r = static_cast<int>(basis.size());

    struct Choice { int i, j; long long g; };
    std::vector<Choice> choices;
    for (int i = 0; i < r; i++)
        for (int j = i + 1; j < r; j++)
            choices.push_back({i, j, prime_to_part(gcd_ll(orders[i], orders[j]), characteristic)});

    // Coordinates of each subgroup element in the generator basis.
    int n = h.size();
    std::vector<std::vector<int>> coords(n);
    std::vector<int> mult(r, 0);
    long long total = 1;
    for (long long o : orders) total *= o;
    if (total != n) throw internal_error("generator orders do not multiply to subgroup order");
    for (long long t = 0; t < total; t++) {
        long long rem = t;
        int e = 0;
        for (int k = r - 1; k >= 0; k--) {
            mult[k] = static_cast<int>(rem % orders[k]);
            rem /= orders[k];
        }
        for (int k = 0; k < r; k++) e = g.add(e, g.smul(mult[k], basis[k]));
        int le = loc_of(h.elems, e);
        if (!coords[le].empty()) throw internal_error("generator coordinates not unique");
        coords[le] = mult;
    }

    std::vector<Cochain2> out;
    std::vector<long long> vals(choices.size(), 0);
    for (;;) {
        Cochain2 c = make_cochain2(h.amb, h.elems);
        for (int x = 0; x < n; x++)
            for (int y = 0; y < n; y++) {
                RootExp v{};
                for (size_t t = 0; t < choices.size(); t++)
                    v = re_add(v, re_make(vals[t] * coords[x][choices[t].j] * coords[y][choices[t].i],
                                          choices[t].g));
                c.at_local(x, y) = v;
            }
        out.push_back(std::move(c));
        int t = static_cast<int>(choices.size()) - 1;
        while (t >= 0 && vals[t] + 1 == choices[t].g) vals[t--] = 0;
        if (t < 0) break;
        vals[t]++;
    }
    return out;
}

Cochain2 xg_twist(const Cochain3& omega, int a, const Subgroup& h) {
    Cochain2 out = make_cochain2(omega.g, h.elems);
    int n = h.size();
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            int l = h.elems[i], k = h.elems[j];
            out.at_local(i, j) =
                re_sub(re_sub(omega.at(l, a, k), omega.at(l, k, a)), omega.at(a, l, k));
        }
    return out;
}

std::vector<RootExp> projective_character(const Cochain2& phi, int characteristic) {
    LocalTable t = local_table(*phi.g, phi.dom);
    int n = t.n;
    long long Md = 1;
    for (const RootExp& x : phi.v) Md = lcm_ll(Md, x.den);
    long long M = prime_to_part(n, characteristic) * Md;
    if (M == 1) {
        for (const RootExp& x : phi.v)
            if (!x.is_zero()) throw internal_error("projective character on nonzero cochain mod 1");
        return std::vector<RootExp>(n);
    }
    IntMatrix sys(n * n, n);
    std::vector<long long> rhs(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            int row = i * n + j;
            sys.at(row, i) += 1;
            sys.at(row, j) += 1;
            sys.at(row, t.ladd(i, j)) -= 1;
            rhs[row] = scaled_num(phi.at_local(i, j), M);
        }
    auto sol = solve_linear_mod(sys, rhs, M);
    if (!sol)
        throw internal_error("projective character solve failed", ErrKind::InternalInvariantViolation);
    std::vector<RootExp> lam(n);
    for (int i = 0; i < n; i++) lam[i] = re_make((*sol)[i], M);
    return lam;
}

}  // namespace fc
