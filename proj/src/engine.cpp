#include "engine.hpp"

#include <algorithm>
#include <numeric>

namespace fc {

namespace {

long long mod_pos(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

long long scaled_num(const RootExp& x, long long M) { return x.num * (M / x.den); }

void check_pullback_coboundary(const Subgroup& b, const GroupHom& f, const Cochain2& phi,
                               const Cochain3& omega) {
    LocalTable t = local_table(*b.amb, b.elems);
    Dense2 dp = densify(phi);
    Dense3 dw = densify(omega);
    long long M = lcm_ll(dp.M, dw.M);
    long long sp = M / dp.M, sw = M / dw.M;
    int n = t.n, na = omega.size();
    std::vector<int> fl(n);  // image of each local element
    for (int i = 0; i < n; i++) fl[i] = f(b.elems[i]);
    auto p = [&](int i, int j) -> long long { return dp.v[static_cast<size_t>(i) * n + j] * sp; };
    for (int a = 0; a < n; a++)
        for (int x = 0; x < n; x++) {
            int ax = t.ladd(a, x);
            for (int c = 0; c < n; c++) {
                long long lhs = p(x, c) - p(ax, c) + p(a, t.ladd(x, c)) - p(a, x);
                long long rhs = -dw.v[(static_cast<size_t>(fl[a]) * na + fl[x]) * na + fl[c]] * sw;
                if (mod_pos(lhs - rhs, M) != 0)
                    throw math_error("d2(phi) != -f^* omega", ErrKind::PreconditionViolated);
            }
        }
}

}  // namespace

DecompositionResult decompose(const Subgroup& b, const GroupHom& f, const Cochain2& phi,
                              const PointedBraidedCategory& cat,
                              const std::vector<int>* section, bool precondition_verified) {
    if (f.dom != b.amb || f.cod != cat.group)
        throw math_error("decompose map must run from B's ambient group to A");
    if (phi.dom != b.elems) throw math_error("cochain domain must equal B");
    if (!precondition_verified) check_pullback_coboundary(b, f, phi, cat.omega);

    const FinAbGroup& amb = *b.amb;
    const FinAbGroup& ga = *cat.group;

    std::vector<int> kelems;
    for (int x : b.elems)
        if (f(x) == 0) kelems.push_back(x);
    Subgroup k = make_subgroup(b.amb, std::move(kelems));

    PairingForm form = bil(phi, k);
    Subgroup kperp = orthogonal_complement(form);

    std::vector<int> helems;
    for (int x : kperp.elems) helems.push_back(f(x));
    std::sort(helems.begin(), helems.end());
    helems.erase(std::unique(helems.begin(), helems.end()), helems.end());
    Subgroup h = make_subgroup(cat.group, std::move(helems));
    int nh = h.size();

    // Section of f over H inside K^perp: least preimage unless overridden.
    std::vector<int> s(nh, -1);
    if (section) {
        if (static_cast<int>(section->size()) != nh)
            throw math_error("section table size mismatch");
        for (int i = 0; i < nh; i++) {
            int x = (*section)[i];
            if (!kperp.contains(x) || f(x) != h.elems[i])
                throw math_error("invalid section value");
            s[i] = x;
        }
    } else {
        for (int x : kperp.elems) {
            int i = h.local(f(x));
            if (s[i] < 0) s[i] = x;
        }
    }

    Subgroup kint = intersect(k, kperp);
    Cochain2 phi_kint = make_cochain2(b.amb, kint.elems);
    for (int i = 0; i < kint.size(); i++)
        for (int j = 0; j < kint.size(); j++)
            phi_kint.at_local(i, j) = phi.at(kint.elems[i], kint.elems[j]);
    std::vector<RootExp> lam = projective_character(phi_kint, cat.characteristic);

    // rho(g,h) = -omega(-g-h,g,h) + omega(-h,-g,g)
    //           - phi(s(g)-s(g+h), -s(g)) - phi(kk, -s(h)) + lam(kk)
    // with kk = s(g)+s(h)-s(g+h) in K cap K^perp. For a homomorphic section
    // (kk = 0, lam(0) = 0 after normalization) this is the classical
    // three-term expression.
    Cochain2 raw = make_cochain2(cat.group, h.elems);
    for (int i = 0; i < nh; i++)
        for (int j = 0; j < nh; j++) {
            int g = h.elems[i], hh = h.elems[j];
            int gh = ga.add(g, hh);
            int sgh = s[h.local(gh)];
            int kk = amb.sub(amb.add(s[i], s[j]), sgh);
            RootExp v = re_neg(cat.omega.at(ga.neg(gh), g, hh));
            v = re_add(v, cat.omega.at(ga.neg(hh), ga.neg(g), g));
            v = re_sub(v, phi.at(amb.sub(s[i], sgh), amb.neg(s[i])));
            v = re_sub(v, phi.at(kk, amb.neg(s[j])));
            v = re_add(v, lam[kint.local(kk)]);
            raw.at_local(i, j) = v;
        }

    DecompositionResult out;
    out.m = static_cast<int>(static_cast<long long>(k.size()) * kperp.size() / b.size());
    out.raw_rho = raw;
    out.rho = make_cochain2(cat.group, h.elems);
    for (int i = 0; i < nh; i++)
        for (int j = 0; j < nh; j++)
            out.rho.at_local(i, j) =
                re_add(re_sub(re_sub(raw.at_local(i, j), raw.at_local(i, 0)), raw.at_local(0, j)),
                       raw.at_local(0, 0));

    LocalTable th = local_table(ga, h.elems);
    for (int a = 0; a < nh; a++)
        for (int x = 0; x < nh; x++)
            for (int c = 0; c < nh; c++) {
                RootExp v = re_sub(out.rho.at_local(x, c), out.rho.at_local(th.ladd(a, x), c));
                v = re_add(v, re_sub(out.rho.at_local(a, th.ladd(x, c)), out.rho.at_local(a, x)));
                if (!(v == re_neg(cat.omega.at(h.elems[a], h.elems[x], h.elems[c]))))
                    throw internal_error("d2(rho) != -omega|_H",
                                         ErrKind::InternalInvariantViolation);
            }

    // Simple-object count: m * |A|/|H| = |K cap K^perp| * |A / f(B)|.
    std::vector<int> img;
    for (int x : b.elems) img.push_back(f(x));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    long long lhs = static_cast<long long>(out.m) * (ga.n / nh);
    long long rhs = static_cast<long long>(kint.size()) * (ga.n / static_cast<long long>(img.size()));
    if (lhs != rhs)
        throw internal_error("simple-object count identity failed",
                             ErrKind::InternalInvariantViolation);

    out.h = std::move(h);
    out.k = std::move(k);
    out.kperp = std::move(kperp);
    return out;
}

ChiResult chi(const PointedBraidedCategory& cat, const Subgroup& e, const Cochain2& phi_e,
              const Subgroup& f, const Cochain2& phi_f) {
    const FinAbGroup& ga = *cat.group;
    const DirectSum& ds = cat_square(cat);

    std::vector<int> belems;
    belems.reserve(static_cast<size_t>(e.size()) * f.size());
    for (int x : e.elems)
        for (int y : f.elems) belems.push_back(ds.pair(x, y));
    ChiResult out;
    out.b = make_subgroup(ds.sum, std::move(belems));

    Dense3 dw = densify(cat.omega);
    Dense2 db = densify(cat.beta);
    Dense2 de = densify(phi_e);
    Dense2 df = densify(phi_f);
    long long M = lcm_ll(lcm_ll(dw.M, db.M), lcm_ll(de.M, df.M));
    long long sw = M / dw.M, sb = M / db.M, se = M / de.M, sf = M / df.M;
    int na = ga.n, ne = e.size(), nf = f.size();
    auto w = [&](int a, int x, int c) -> long long {
        return dw.v[(static_cast<size_t>(a) * na + x) * na + c] * sw;
    };

    int nb = out.b.size();
    out.chi = make_cochain2(ds.sum, out.b.elems);
    for (int i = 0; i < nb; i++) {
        int e1 = e.elems[i / nf], f1 = f.elems[i % nf];
        int le1 = i / nf, lf1 = i % nf;
        for (int j = 0; j < nb; j++) {
            int e2 = e.elems[j / nf], f2 = f.elems[j % nf];
            long long v = w(e1, f1, ga.add(e2, f2)) - w(f1, e2, f2) +
                          db.v[static_cast<size_t>(f1) * na + e2] * sb + w(e2, f1, f2) -
                          w(e1, e2, ga.add(f1, f2)) +
                          de.v[static_cast<size_t>(le1) * ne + j / nf] * se +
                          df.v[static_cast<size_t>(lf1) * nf + j % nf] * sf;
            out.chi.at_local(i, j) = re_make(v, M);
        }
    }

    // Postcondition d2(chi) = -pi^* omega. When omega vanishes on E+F every
    // omega term above is zero and the identity is the bilinearity of beta
    // plus d2(phi) = 0 on each factor, all established upstream; otherwise
    // check explicitly (cheap for the sizes where omega can be nonzero).
    Subgroup ef = subgroup_sum(e, f);
    bool omega_zero_on_ef = true;
    for (int a : ef.elems)
        for (int x : ef.elems)
            for (int c : ef.elems) omega_zero_on_ef &= cat.omega.at(a, x, c).is_zero();
    if (!omega_zero_on_ef)
        check_pullback_coboundary(out.b, cat_sum_hom(cat), out.chi, cat.omega);
    out.verified = true;
    return out;
}

SemisimpleModCat fuse(const ModCat& m1, const ModCat& m2) {
    if (m1.cat.get() != m2.cat.get())
        throw math_error("fuse requires modules over the same category");
    const PointedBraidedCategory& cat = *m1.cat;
    ChiResult cr = chi(cat, m1.h, m1.phi, m2.h, m2.phi);
    DecompositionResult dr =
        decompose(cr.b, cat_sum_hom(cat), cr.chi, cat, nullptr, cr.verified);
    ModCat out = make_modcat(m1.cat, dr.h, dr.rho);
    SemisimpleModCat res;
    res.summands.emplace_back(canonical_class(out), dr.m);
    return res;
}

SemisimpleModCat fuse_classes(CatPtr cat, const ModCatClass& c1, const ModCatClass& c2) {
    return fuse(class_representative(cat, c1), class_representative(cat, c2));
}

SemisimpleModCat fuse_sums(CatPtr cat, const SemisimpleModCat& x, const SemisimpleModCat& y) {
    std::map<std::vector<long long>, std::pair<ModCatClass, int>> acc;
    for (const auto& [cx, mx] : x.summands)
        for (const auto& [cy, my] : y.summands) {
            SemisimpleModCat p = fuse_classes(cat, cx, cy);
            for (const auto& [cz, mz] : p.summands) {
                auto [it, fresh] = acc.try_emplace(cz.key(), cz, 0);
                it->second.second += mx * my * mz;
            }
        }
    SemisimpleModCat out;
    for (auto& [key, val] : acc) out.summands.push_back(std::move(val));
    return out;
}

bool same_semisimple(const SemisimpleModCat& x, const SemisimpleModCat& y) {
    auto norm = [](const SemisimpleModCat& s) {
        std::map<std::vector<long long>, int> m;
        for (const auto& [c, k] : s.summands) m[c.key()] += k;
        return m;
    };
    return norm(x) == norm(y);
}

FusionTable fusion_table(CatPtr cat, bool separable_only) {
    FusionTable t;
    for (const ModCatClass& c : classify(*cat))
        if (!separable_only || is_separable(c.h, cat->characteristic)) t.basis.push_back(c);
    int n = static_cast<int>(t.basis.size());
    t.cells.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            t.cells.push_back(fuse_classes(cat, t.basis[i], t.basis[j]));
    return t;
}

bool is_invertible(const ModCat& m) {
    int n = m.h.size();
    for (int i = 0; i < n; i++) {
        if (m.h.elems[i] == 0) continue;
        bool radical = true;
        for (int j = 0; j < n && radical; j++) {
            RootExp v = re_add(m.cat->beta.at(m.h.elems[i], m.h.elems[j]),
                               re_sub(m.phi.at_local(j, i), m.phi.at_local(i, j)));
            radical = v.is_zero();
        }
        if (radical) return false;
    }
    return true;
}

ModCat dual(const ModCat& m) {
    Cochain2 out = make_cochain2(m.cat->group, m.h.elems);
    int n = m.h.size();
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            out.at_local(i, j) =
                re_add(m.phi.at_local(j, i), m.cat->beta.at(m.h.elems[i], m.h.elems[j]));
    return make_modcat(m.cat, m.h, std::move(out));
}

ModCat inverse(const ModCat& m) {
    if (!is_invertible(m))
        throw math_error("module category is not invertible", ErrKind::NotInvertible);
    ModCat inv = dual(m);
    SemisimpleModCat p = fuse(m, inv);
    bool unit = p.summands.size() == 1 && p.summands[0].second == 1 &&
                p.summands[0].first.h.size() == 1;
    for (const RootExp& x : p.summands[0].first.skew)
        unit = unit && x.is_zero();
    if (!unit)
        throw internal_error("inverse verification failed: product with dual is not the unit",
                             ErrKind::InternalInvariantViolation);
    return inv;
}

PicardGroup picard(CatPtr cat, bool separable_only) {
    PicardGroup pg;
    for (const ModCatClass& c : classify(*cat)) {
        if (separable_only && !is_separable(c.h, cat->characteristic)) continue;
        if (is_invertible(class_representative(cat, c))) pg.elements.push_back(c);
    }
    int n = static_cast<int>(pg.elements.size());
    std::map<std::vector<long long>, int> index;
    for (int i = 0; i < n; i++) index[pg.elements[i].key()] = i;

    pg.cayley.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            SemisimpleModCat p = fuse_classes(cat, pg.elements[i], pg.elements[j]);
            if (p.summands.size() != 1 || p.summands[0].second != 1)
                throw math_error("product of invertibles is not multiplicity-free",
                                 ErrKind::NotAGroup);
            auto it = index.find(p.summands[0].first.key());
            if (it == index.end())
                throw math_error("product of invertibles is not invertible", ErrKind::NotAGroup);
            pg.cayley[i][j] = it->second;
        }

    // Group axioms on the assembled table.
    for (int i = 0; i < n; i++) {
        std::vector<char> seen_r(n, 0), seen_c(n, 0);
        for (int j = 0; j < n; j++) {
            seen_r[pg.cayley[i][j]] = 1;
            seen_c[pg.cayley[j][i]] = 1;
        }
        if (std::count(seen_r.begin(), seen_r.end(), 1) != n ||
            std::count(seen_c.begin(), seen_c.end(), 1) != n)
            throw math_error("Picard table is not a Latin square", ErrKind::NotAGroup);
    }
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            for (int l = 0; l < n; l++)
                if (pg.cayley[pg.cayley[i][j]][l] != pg.cayley[i][pg.cayley[j][l]])
                    throw math_error("Picard table is not associative", ErrKind::NotAGroup);

    pg.fp = fingerprint(pg.cayley);
    pg.name = recognize_name(pg.fp);
    return pg;
}

GroupFingerprint fingerprint(const std::vector<std::vector<int>>& t) {
    int n = static_cast<int>(t.size());
    GroupFingerprint fp;
    fp.order = n;
    int e = -1;
    for (int i = 0; i < n && e < 0; i++) {
        bool id = true;
        for (int j = 0; j < n && id; j++) id = t[i][j] == j && t[j][i] == j;
        if (id) e = i;
    }
    if (e < 0) throw math_error("table has no identity", ErrKind::NotAGroup);
    std::vector<int> inv(n, -1);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            if (t[i][j] == e) inv[i] = j;
    for (int i = 0; i < n; i++) {
        long long o = 1;
        int x = i;
        while (x != e) { x = t[x][i]; o++; }
        fp.element_orders.push_back(o);
        for (int j = 0; j < n; j++) fp.abelian = fp.abelian && t[i][j] == t[j][i];
    }
    std::sort(fp.element_orders.begin(), fp.element_orders.end());
    // Derived subgroup: closure of all commutators.
    std::vector<char> in(n, 0);
    std::vector<int> frontier;
    in[e] = 1;
    frontier.push_back(e);
    std::vector<int> gens;
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) gens.push_back(t[t[i][j]][inv[t[j][i]]]);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int g : gens) {
                int y = t[x][g];
                if (!in[y]) { in[y] = 1; next.push_back(y); }
            }
        frontier = std::move(next);
    }
    fp.derived_order = std::count(in.begin(), in.end(), 1);
    return fp;
}

namespace {

GroupFingerprint dihedral_fp(int half) {  // D_{2*half}
    GroupFingerprint fp;
    fp.order = 2 * half;
    fp.abelian = half <= 2;
    for (int r = 0; r < half; r++) fp.element_orders.push_back(half / std::gcd(r, half));
    for (int i = 0; i < half; i++) fp.element_orders.push_back(2);
    std::sort(fp.element_orders.begin(), fp.element_orders.end());
    fp.derived_order = half % 2 ? half : half / 2;
    return fp;
}

GroupFingerprint dicyclic_fp(int m) {  // order 4m, <a,b | a^{2m}, b^2=a^m, bab^-1=a^-1>
    GroupFingerprint fp;
    fp.order = 4 * m;
    fp.abelian = m == 1;
    for (int r = 0; r < 2 * m; r++) fp.element_orders.push_back(2 * m / std::gcd(r, 2 * m));
    for (int i = 0; i < 2 * m; i++) fp.element_orders.push_back(4);
    std::sort(fp.element_orders.begin(), fp.element_orders.end());
    fp.derived_order = m;
    return fp;
}

void abelian_types(long long order, std::vector<std::vector<long long>>& out) {
    // Invariant-factor chains d1 | d2 | ... with product = order.
    std::vector<long long> chain;
    // Enumerate recursively: last factor d (multiple of all previous), order % d == 0.
    struct Rec {
        std::vector<std::vector<long long>>& out;
        std::vector<long long> cur;
        void go(long long rem, long long maxdiv) {
            if (rem == 1) {
                std::vector<long long> c(cur.rbegin(), cur.rend());
                out.push_back(std::move(c));
                return;
            }
            for (long long d = 2; d <= maxdiv; d++)
                if (rem % d == 0 && maxdiv % d == 0) {
                    cur.push_back(d);
                    go(rem / d, d);
                    cur.pop_back();
                }
        }
    } rec{out, {}};
    rec.go(order, order);
}

std::vector<long long> abelian_orders(const std::vector<long long>& invs) {
    std::vector<long long> out;
    std::vector<long long> idx(invs.size(), 0);
    for (;;) {
        long long o = 1;
        for (size_t k = 0; k < invs.size(); k++)
            o = std::lcm(o, idx[k] == 0 ? 1 : invs[k] / std::gcd(idx[k], invs[k]));
        out.push_back(o);
        int t = static_cast<int>(invs.size()) - 1;
        while (t >= 0 && idx[t] + 1 == invs[t]) idx[t--] = 0;
        if (t < 0) break;
        idx[t]++;
    }
    std::sort(out.begin(), out.end());
    return out;
}

GroupFingerprint perm_group_fp(const std::vector<std::array<int, 4>>& elems) {
    int n = static_cast<int>(elems.size());
    auto compose = [](const std::array<int, 4>& f, const std::array<int, 4>& g) {
        std::array<int, 4> h{};
        for (int i = 0; i < 4; i++) h[i] = f[g[i]];
        return h;
    };
    std::map<std::array<int, 4>, int> index;
    for (int i = 0; i < n; i++) index[elems[i]] = i;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) t[i][j] = index.at(compose(elems[i], elems[j]));
    return fingerprint(t);
}

std::vector<std::array<int, 4>> sym4(bool even_only) {
    std::array<int, 4> p{0, 1, 2, 3};
    std::vector<std::array<int, 4>> out;
    do {
        int invc = 0;
        for (int i = 0; i < 4; i++)
            for (int j = i + 1; j < 4; j++) invc += p[i] > p[j];
        if (!even_only || invc % 2 == 0) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

std::string recognize_name(const GroupFingerprint& fp) {
    if (fp.abelian) {
        std::vector<std::vector<long long>> types;
        abelian_types(fp.order, types);
        if (fp.order == 1) return "Z/1";
        for (const auto& invs : types)
            if (abelian_orders(invs) == fp.element_orders) {
                std::string name;
                for (size_t i = 0; i < invs.size(); i++)
                    name += (i ? " + " : "") + ("Z/" + std::to_string(invs[i]));
                return name;
            }
        return "Unrecognized";
    }
    if (fp.order > 48) return "Unrecognized";
    if (fp.order % 2 == 0 && fp.order >= 6) {
        int half = static_cast<int>(fp.order / 2);
        if (fp == dihedral_fp(half)) return half == 3 ? "S3" : "D" + std::to_string(fp.order);
    }
    if (fp.order % 4 == 0) {
        int m = static_cast<int>(fp.order / 4);
        if (fp == dicyclic_fp(m)) {
            if (m == 2) return "Q8";
            return "Dic" + std::to_string(m);
        }
    }
    if (fp.order == 24 && fp == perm_group_fp(sym4(false))) return "S4";
    if (fp.order == 12 && fp == perm_group_fp(sym4(true))) return "A4";
    return "Unrecognized";
}

CatPtr box_product(const CatPtr& c1, const CatPtr& c2) {
    if (c1->characteristic != c2->characteristic)
        throw math_error("box product requires a common base field");
    DirectSum ds = direct_sum(c1->group, c2->group);
    std::vector<RootExp> q(ds.sum->n);
    for (int x = 0; x < ds.sum->n; x++)
        q[x] = re_add(c1->q[ds.first(x)], c2->q[ds.second(x)]);
    return make_category_from_q(ds.sum, std::move(q), c1->characteristic);
}

std::pair<CatPtr, CatPtr> coprime_split(const CatPtr& cat) {
    const FinAbGroup& g = *cat->group;
    int r = g.rank();
    int cut = -1;
    for (int k = 1; k < r; k++) {
        long long left = 1, right = 1;
        for (int i = 0; i < k; i++) left *= g.invariants[i];
        for (int i = k; i < r; i++) right *= g.invariants[i];
        if (std::gcd(left, right) == 1) { cut = k; break; }
    }
    if (cut < 0)
        throw math_error("no coprime cut point in the invariant list", ErrKind::NotCoprime);

    std::vector<long long> inv1(g.invariants.begin(), g.invariants.begin() + cut);
    std::vector<long long> inv2(g.invariants.begin() + cut, g.invariants.end());
    GroupPtr g1 = make_group(inv1), g2 = make_group(inv2);
    // index = x1 * |G2| + x2 under the shared mixed-radix convention
    std::vector<RootExp> q1(g1->n), q2(g2->n);
    for (int x1 = 0; x1 < g1->n; x1++) q1[x1] = cat->q[x1 * g2->n];
    for (int x2 = 0; x2 < g2->n; x2++) q2[x2] = cat->q[x2];
    for (int x1 = 0; x1 < g1->n; x1++)
        for (int x2 = 0; x2 < g2->n; x2++)
            if (!(cat->q[x1 * g2->n + x2] == re_add(q1[x1], q2[x2])))
                throw math_error("quadratic form does not split along the cut",
                                 ErrKind::SplitObstruction);
    return {make_category_from_q(std::move(g1), std::move(q1), cat->characteristic),
            make_category_from_q(std::move(g2), std::move(q2), cat->characteristic)};
}

}  // namespace fc
