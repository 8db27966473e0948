#include "modcat.hpp"

#include <algorithm>

namespace fc {

std::vector<long long> ModCatClass::key() const {
    std::vector<long long> k;
    k.push_back(h.elems.size());
    for (int e : h.elems) k.push_back(e);
    k.push_back(-1);
    for (const RootExp& x : skew) {
        k.push_back(x.num);
        k.push_back(x.den);
    }
    return k;
}

CatPtr make_category(GroupPtr g, AbelianCocycle ab, int characteristic) {
    if (ab.omega.g != g || ab.beta.g != g)
        throw math_error("cocycle tables must live on the category group");
    if (characteristic != 0) {
        for (const RootExp& x : ab.omega.v)
            if (x.den % characteristic == 0)
                throw math_error("omega value order divisible by the characteristic");
        for (const RootExp& x : ab.beta.v)
            if (x.den % characteristic == 0)
                throw math_error("beta value order divisible by the characteristic");
    }
    if (auto bad = check_abelian_cocycle(ab.omega, ab.beta)) {
        std::string what = "not an abelian 3-cocycle: " + bad->identity + " fails at (";
        for (size_t i = 0; i < bad->elems.size(); i++)
            what += (i ? "," : "") + render_element(*g, bad->elems[i]);
        throw math_error(what + ")", ErrKind::NotACocycle);
    }
    auto cat = std::make_shared<PointedBraidedCategory>();
    cat->group = std::move(g);
    cat->q = quad_form_of(ab.beta);
    cat->omega = std::move(ab.omega);
    cat->beta = std::move(ab.beta);
    cat->characteristic = characteristic;
    return cat;
}

CatPtr make_category_from_q(GroupPtr g, std::vector<RootExp> q, int characteristic) {
    if (characteristic != 0)
        for (const RootExp& x : q)
            if (x.den % characteristic == 0)
                throw math_error("q value order divisible by the characteristic");
    AbelianCocycle ab = quinn(g, q);
    CatPtr cat = make_category(std::move(g), std::move(ab), characteristic);
    if (cat->q != q)
        throw internal_error("quinn round-trip failed", ErrKind::InternalInvariantViolation);
    return cat;
}

bool omega_is_zero(const PointedBraidedCategory& cat) {
    if (!cat.omega_zero_cache) {
        bool z = true;
        for (const RootExp& x : cat.omega.v)
            if (!x.is_zero()) { z = false; break; }
        cat.omega_zero_cache = z;
    }
    return *cat.omega_zero_cache;
}

const DirectSum& cat_square(const PointedBraidedCategory& cat) {
    if (!cat.square_cache) cat.square_cache = direct_sum(cat.group, cat.group);
    return *cat.square_cache;
}

const GroupHom& cat_sum_hom(const PointedBraidedCategory& cat) {
    if (!cat.sum_hom_cache) {
        const DirectSum& ds = cat_square(cat);
        std::vector<int> map(ds.sum->n);
        for (int x = 0; x < ds.sum->n; x++)
            map[x] = cat.group->add(ds.first(x), ds.second(x));
        cat.sum_hom_cache = make_hom(ds.sum, cat.group, std::move(map));
    }
    return *cat.sum_hom_cache;
}

ModCat make_modcat(CatPtr cat, Subgroup h, Cochain2 phi) {
    if (h.amb != cat->group || phi.dom != h.elems)
        throw math_error("module cochain must live on the subgroup");
    LocalTable t = local_table(*cat->group, h.elems);
    int n = t.n;
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
            for (int c = 0; c < n; c++) {
                RootExp v = re_sub(phi.at_local(b, c), phi.at_local(t.ladd(a, b), c));
                v = re_add(v, re_sub(phi.at_local(a, t.ladd(b, c)), phi.at_local(a, b)));
                if (!(v == re_neg(cat->omega.at(h.elems[a], h.elems[b], h.elems[c]))))
                    throw math_error("d2(phi) != -omega|_H", ErrKind::PreconditionViolated);
            }
    return ModCat{std::move(cat), std::move(h), std::move(phi)};
}

const Cochain2& ref_trivialization(const PointedBraidedCategory& cat, const Subgroup& h) {
    auto it = cat.ref_cache.find(h.elems);
    if (it == cat.ref_cache.end()) {
        const std::optional<Cochain2>& r = trivialize_cached(cat.omega, h, cat.characteristic);
        it = cat.ref_cache.emplace(h.elems, &r).first;
    }
    if (!*it->second)
        throw math_error("omega is not trivializable on the requested subgroup");
    return **it->second;
}

static Cochain2 add_cochains(const Cochain2& a, const Cochain2& b) {
    Cochain2 out = a;
    for (size_t i = 0; i < out.v.size(); i++) out.v[i] = re_add(out.v[i], b.v[i]);
    return out;
}

ModCatClass canonical_class(const ModCat& m) {
    const PointedBraidedCategory& cat = *m.cat;
    const Cochain2& ref = ref_trivialization(cat, m.h);
    int n = m.h.size();
    std::optional<std::vector<RootExp>> best;
    for (int a = 0; a < cat.group->n; a++) {
        Cochain2 tw = xg_twist(cat.omega, a, m.h);
        Cochain2 diff = make_cochain2(cat.group, m.h.elems);
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++)
                diff.at_local(i, j) = re_add(
                    re_sub(m.phi.at_local(i, j), ref.at_local(i, j)), tw.at_local(i, j));
        auto form = alt(diff);
        if (!form)
            throw math_error("twisted difference is not a 2-cocycle", ErrKind::NotACocycle);
        bool better = !best;
        if (best) {
            for (size_t i = 0; i < form->v.size(); i++) {
                if (form->v[i] == (*best)[i]) continue;
                better = re_less(form->v[i], (*best)[i]);
                break;
            }
        }
        if (better) best = form->v;
    }

    ModCatClass cls;
    cls.h = m.h;
    cls.skew = std::move(*best);
    std::vector<Cochain2> reps = h2_classes(m.h, cat.characteristic);
    cls.h2_index = -1;
    for (size_t k = 0; k < reps.size(); k++)
        if (alt_table(reps[k]).v == cls.skew) { cls.h2_index = static_cast<int>(k); break; }
    if (cls.h2_index < 0)
        throw internal_error("canonical skew form not in the H^2 enumeration",
                             ErrKind::InternalInvariantViolation);
    cls.label = class_label(cls.h, cls.h2_index);
    return cls;
}

const std::vector<ModCatClass>& classify(const PointedBraidedCategory& cat) {
    if (!cat.classes_cache) {
        std::vector<ModCatClass> out;
        for (const Subgroup& s : all_subgroups(cat.group)) {
            if (!is_trivializable(*cat.group, cat.q, s)) continue;
            const Cochain2& ref = ref_trivialization(cat, s);
            std::vector<Cochain2> reps = h2_classes(s, cat.characteristic);
            for (const Cochain2& rep : reps) {
                ModCat m{nullptr, s, add_cochains(ref, rep)};
                // Build directly; d2 is unchanged by adding the cocycle rep.
                m.cat = CatPtr(&cat, [](const PointedBraidedCategory*) {});
                out.push_back(canonical_class(m));
            }
        }
        cat.classes_cache = std::move(out);
    }
    return *cat.classes_cache;
}

bool equivalent(const ModCat& m1, const ModCat& m2) {
    if (m1.cat.get() != m2.cat.get()) throw math_error("modules over different categories");
    if (!(m1.h.elems == m2.h.elems)) return false;
    const PointedBraidedCategory& cat = *m1.cat;
    int n = m1.h.size();
    for (int a = 0; a < cat.group->n; a++) {
        Cochain2 tw = xg_twist(cat.omega, a, m1.h);
        Cochain2 diff = make_cochain2(cat.group, m1.h.elems);
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++)
                diff.at_local(i, j) = re_add(
                    re_sub(m1.phi.at_local(i, j), m2.phi.at_local(i, j)), tw.at_local(i, j));
        if (is_coboundary(diff)) return true;
    }
    return false;
}

bool is_separable(const Subgroup& h, int characteristic) {
    return characteristic == 0 ||
           static_cast<long long>(h.size()) % characteristic != 0;
}

long long rank_of(const PointedBraidedCategory& cat, const ModCatClass& cls) {
    return cat.group->n / cls.h.size();
}

ModCat class_representative(CatPtr cat, const ModCatClass& cls) {
    const Cochain2& ref = ref_trivialization(*cat, cls.h);
    std::vector<Cochain2> reps = h2_classes(cls.h, cat->characteristic);
    return make_modcat(cat, cls.h, add_cochains(ref, reps.at(cls.h2_index)));
}

std::string render_element(const FinAbGroup& g, int x) {
    if (x == 0) return "0";
    if (g.rank() == 1) return std::to_string(g.coord(x, 0));
    static const char* names = "abcdefgh";
    std::string out;
    for (int k = 0; k < g.rank(); k++) {
        int c = g.coord(x, k);
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (c != 1) out += std::to_string(c);
        out += (k < 8) ? std::string(1, names[k]) : "x" + std::to_string(k);
    }
    return out;
}

std::string class_label(const Subgroup& h, int h2_index) {
    std::string out = "⟨";
    if (h.size() == 1) {
        out += "0";
    } else {
        const std::vector<int>& gens = h.generators();
        for (size_t i = 0; i < gens.size(); i++)
            out += (i ? "," : "") + render_element(*h.amb, gens[i]);
    }
    out += "⟩";
    if (h2_index > 0) out += "#" + std::to_string(h2_index);
    return out;
}

}  // namespace fc
