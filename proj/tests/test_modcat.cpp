#include <doctest.h>

#include <random>
#include <set>

#include "io.hpp"

using namespace fc;

namespace {

CatPtr corpus_cat(const std::string& name) { return build_category(fixture_by_name(name).spec); }

// The Z/2^3 braiding with beta(e_i, e_j) = -1 exactly for j = i, i+1.
CatPtr chain_category() {
    GroupPtr g = make_group({2, 2, 2});
    std::vector<RootExp> q(8);
    for (int x = 0; x < 8; x++) {
        int a = g->coord(x, 0), b = g->coord(x, 1), c = g->coord(x, 2);
        q[x] = re_make(a + b + c + a * b + b * c, 2);
    }
    return make_category_from_q(g, q, 0);
}

}  // namespace

TEST_CASE("class counts for the reference braidings") {
    CHECK(classify(*corpus_cat("z4-q0")).size() == 3);
    CHECK(classify(*corpus_cat("z9-q0")).size() == 3);
    CHECK(classify(*corpus_cat("z2z2-q0")).size() == 6);
    CHECK(classify(*corpus_cat("z2z2-q4")).size() == 2);
    CHECK(classify(*corpus_cat("z4z2")).size() == 4);
    CHECK(classify(*chain_category()).size() == 30);
}

TEST_CASE("classification order and labels are deterministic") {
    CatPtr cat = corpus_cat("z2z2-q0");
    const auto& classes = classify(*cat);
    CHECK(classes[0].label == "⟨0⟩");
    CHECK(classes[0].h.size() == 1);
    // Sorted by subgroup size, then elements, then decoration index.
    for (size_t i = 1; i < classes.size(); i++) {
        const auto &p = classes[i - 1], &c = classes[i];
        bool ordered = p.h.size() < c.h.size() ||
                       (p.h.size() == c.h.size() && p.h.elems < c.h.elems) ||
                       (p.h.elems == c.h.elems && p.h2_index < c.h2_index);
        CHECK(ordered);
    }
    // The full subgroup carries both decorations here.
    int full_count = 0;
    for (const auto& c : classes)
        if (c.h.size() == 4) full_count++;
    CHECK(full_count == 2);
    const auto& again = classify(*cat);
    CHECK(&again == &classes);  // cached
}

TEST_CASE("labels distinguish decorations") {
    CatPtr cat = corpus_cat("z2z2-q0");
    std::set<std::string> labels;
    for (const auto& c : classify(*cat)) labels.insert(c.label);
    CHECK(labels.size() == 6);
    CHECK(labels.count("⟨b,a⟩#1") == 1);
    CHECK(labels.count("⟨b,a⟩") == 1);
    CHECK(labels.count("⟨a+b⟩") == 1);
}

TEST_CASE("only subgroups with trivializable omega appear") {
    CatPtr cat = corpus_cat("z4-q3");  // q(1) of order 8: omega nontrivial on Z/4
    const auto& classes = classify(*cat);
    CHECK(classes.size() == 2);
    for (const auto& c : classes) CHECK(c.h.size() <= 2);
}

TEST_CASE("category construction validates the cocycle") {
    GroupPtr g = make_group({2});
    std::vector<RootExp> q = {RootExp{}, re_make(1, 4)};
    AbelianCocycle ab = quinn(g, q);
    ab.beta.at_local(1, 1) = re_make(1, 8);
    CHECK_THROWS_AS(make_category(g, ab, 0), Error);
    CHECK(make_category(g, quinn(g, q), 0)->q == q);
}

TEST_CASE("characteristic constraint on the form") {
    GroupPtr g = make_group({2});
    std::vector<RootExp> q = {RootExp{}, re_make(1, 4)};
    CHECK_THROWS_AS(make_category_from_q(g, q, 2), Error);
    std::vector<RootExp> q3 = {RootExp{}, re_make(1, 3), re_make(1, 3)};
    CHECK(make_category_from_q(make_group({3}), q3, 2)->characteristic == 2);
}

TEST_CASE("module category construction validates the trivialization") {
    CatPtr cat = corpus_cat("z2z2-q0");  // omega = 0, so phi must be a cocycle
    Subgroup full = full_subgroup(cat->group);
    Cochain2 bad = make_cochain2(cat->group, full.elems);
    bad.at_local(1, 2) = re_make(1, 3);
    bad.at_local(2, 3) = re_make(1, 7);
    CHECK_THROWS_AS(make_modcat(cat, full, bad), Error);
    CHECK_NOTHROW(make_modcat(cat, full, make_cochain2(cat->group, full.elems)));
}

TEST_CASE("equivalence matches equal canonical classes") {
    std::mt19937 rng(41);
    for (const char* name : {"z2z2-q1", "z4-q3", "z4z2"}) {
        CatPtr cat = corpus_cat(name);
        std::vector<ModCat> mods;
        for (const Subgroup& h : all_subgroups(cat->group)) {
            if (!is_trivializable(*cat->group, cat->q, h)) continue;
            const Cochain2& ref = ref_trivialization(*cat, h);
            for (const Cochain2& rep : h2_classes(h, 0)) {
                // Twist by a random coboundary: same class, different cochain.
                std::vector<RootExp> kappa(h.size());
                for (int i = 1; i < h.size(); i++) kappa[i] = re_make(rng() % 8, 8);
                LocalTable t = local_table(*cat->group, h.elems);
                Cochain2 phi = ref;
                for (int i = 0; i < h.size(); i++)
                    for (int j = 0; j < h.size(); j++)
                        phi.at_local(i, j) = re_add(
                            phi.at_local(i, j),
                            re_add(rep.at_local(i, j),
                                   re_sub(re_add(kappa[i], kappa[j]), kappa[t.ladd(i, j)])));
                mods.push_back(make_modcat(cat, h, phi));
            }
        }
        for (const ModCat& m1 : mods)
            for (const ModCat& m2 : mods)
                CHECK(equivalent(m1, m2) == (canonical_class(m1) == canonical_class(m2)));
    }
}

TEST_CASE("coboundary twists do not move the canonical class") {
    CatPtr cat = corpus_cat("z2z2-q2");
    const auto& classes = classify(*cat);
    std::mt19937 rng(5);
    for (const auto& cls : classes) {
        ModCat m = class_representative(cat, cls);
        CHECK(canonical_class(m) == cls);
        std::vector<RootExp> kappa(m.h.size());
        for (int i = 1; i < m.h.size(); i++) kappa[i] = re_make(rng() % 4, 4);
        LocalTable t = local_table(*cat->group, m.h.elems);
        Cochain2 phi = m.phi;
        for (int i = 0; i < m.h.size(); i++)
            for (int j = 0; j < m.h.size(); j++)
                phi.at_local(i, j) = re_add(
                    phi.at_local(i, j), re_sub(re_add(kappa[i], kappa[j]), kappa[t.ladd(i, j)]));
        CHECK(canonical_class(make_modcat(cat, m.h, phi)) == cls);
    }
}

TEST_CASE("ranks multiply out to the group order") {
    CatPtr cat = corpus_cat("z2z2-q0");
    for (const auto& cls : classify(*cat))
        CHECK(rank_of(*cat, cls) * static_cast<long long>(cls.h.size()) == cat->group->n);
}

TEST_CASE("separability in positive characteristic") {
    CatPtr cat = corpus_cat("z2z2-char2");
    const auto& classes = classify(*cat);
    int separable = 0;
    for (const auto& c : classes)
        if (is_separable(c.h, cat->characteristic)) {
            separable++;
            CHECK(c.h.size() == 1);
        }
    CHECK(separable == 1);
    // Characteristic zero: everything is separable.
    for (const auto& c : classify(*corpus_cat("z2z2-q0")))
        CHECK(is_separable(c.h, 0));
}

TEST_CASE("representatives reproduce their class") {
    for (const char* name : {"z4-q1", "z9-q2", "z2z2-q3", "z4z2"}) {
        CatPtr cat = corpus_cat(name);
        for (const auto& cls : classify(*cat)) {
            ModCat m = class_representative(cat, cls);
            CHECK(m.h == cls.h);
            CHECK(canonical_class(m) == cls);
        }
    }
}

TEST_CASE("chain braiding class census by subgroup size") {
    CatPtr cat = chain_category();
    std::map<int, int> by_size;
    for (const auto& c : classify(*cat)) by_size[c.h.size()]++;
    CHECK(by_size[1] == 1);
    CHECK(by_size[2] == 7);
    CHECK(by_size[4] == 14);
    CHECK(by_size[8] == 8);
}
