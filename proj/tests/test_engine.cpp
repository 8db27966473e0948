#include <doctest.h>

#include "properties.hpp"

using namespace fc;

namespace {

CatPtr corpus_cat(const std::string& name) { return build_category(fixture_by_name(name).spec); }

// The braiding C_k on Z/p (+) Z/p with q(x) = (k x0^2 + x1^2) / p.
CatPtr ck_category(long long p, long long k) {
    GroupPtr g = make_group({p, p});
    std::vector<RootExp> q(g->n);
    for (int x = 0; x < g->n; x++) {
        long long a = g->coord(x, 0), b = g->coord(x, 1);
        q[x] = re_make(k * a * a + b * b, p);
    }
    return make_category_from_q(g, q, 0);
}

DecompositionResult fuse_decomposition(const CatPtr& cat, const ModCatClass& c1,
                                       const ModCatClass& c2) {
    ModCat m1 = class_representative(cat, c1);
    ModCat m2 = class_representative(cat, c2);
    ChiResult cr = chi(*cat, m1.h, m1.phi, m2.h, m2.phi);
    return decompose(cr.b, cat_sum_hom(*cat), cr.chi, *cat, nullptr, cr.verified);
}

}  // namespace

TEST_CASE("fusion laws over every small braiding") {
    props::FuseLawStats st = props::fuse_laws_all(4, 8);
    CHECK(st.categories > 600);
    CHECK(st.fuse_calls > 10000);
    // The trivial braiding on Z/2 alone already contributes commuting cells.
    CHECK(st.commutative_cells > 0);
}

TEST_CASE("decomposition output is independent of the section") {
    CHECK(props::section_independence(100) >= 100);
}

TEST_CASE("simple counts agree with the brute-force oracle") {
    CHECK(props::oracle_agreement(200) >= 200);
}

TEST_CASE("decomposition bookkeeping on a sample") {
    CatPtr cat = corpus_cat("z4z2");
    const auto& classes = classify(*cat);
    for (const auto& c1 : classes)
        for (const auto& c2 : classes) {
            ModCat m1 = class_representative(cat, c1);
            ModCat m2 = class_representative(cat, c2);
            ChiResult cr = chi(*cat, m1.h, m1.phi, m2.h, m2.phi);
            const GroupHom& f = cat_sum_hom(*cat);
            DecompositionResult dr = decompose(cr.b, f, cr.chi, *cat, nullptr, cr.verified);

            // H = f(K^perp) and the rank identity
            // m * |A| / |H| = |K cap K^perp| * |A / f(B)|.
            std::vector<int> img;
            for (int x : dr.kperp.elems) img.push_back(f(x));
            std::sort(img.begin(), img.end());
            img.erase(std::unique(img.begin(), img.end()), img.end());
            CHECK(img == dr.h.elems);
            long long lhs = static_cast<long long>(dr.m) * cat->group->n / dr.h.size();
            long long fb_size = 0;
            {
                std::vector<int> fbs;
                for (int x : cr.b.elems) fbs.push_back(f(x));
                std::sort(fbs.begin(), fbs.end());
                fbs.erase(std::unique(fbs.begin(), fbs.end()), fbs.end());
                fb_size = static_cast<long long>(fbs.size());
            }
            long long rhs = static_cast<long long>(intersect(dr.k, dr.kperp).size()) *
                            (cat->group->n / fb_size);
            CHECK(lhs == rhs);

            // d2(rho) = -omega restricted to H.
            Cochain3 d = d2(dr.rho);
            for (int x : dr.h.elems)
                for (int y : dr.h.elems)
                    for (int z : dr.h.elems)
                        CHECK(re_add(d.at(x, y, z), cat->omega.at(x, y, z)).is_zero());
        }
}

TEST_CASE("chi satisfies its coboundary postcondition") {
    CatPtr cat = corpus_cat("z4-q3");  // nontrivial omega exercises the slow path
    const auto& classes = classify(*cat);
    const DirectSum& sq = cat_square(*cat);
    for (const auto& c1 : classes)
        for (const auto& c2 : classes) {
            ModCat m1 = class_representative(cat, c1);
            ModCat m2 = class_representative(cat, c2);
            ChiResult cr = chi(*cat, m1.h, m1.phi, m2.h, m2.phi);
            CHECK(cr.verified);
            Cochain3 d = d2(cr.chi);
            for (int x : cr.b.elems)
                for (int y : cr.b.elems)
                    for (int z : cr.b.elems) {
                        int px = cat->group->add(sq.first(x), sq.second(x));
                        int py = cat->group->add(sq.first(y), sq.second(y));
                        int pz = cat->group->add(sq.first(z), sq.second(z));
                        CHECK(re_add(d.at(x, y, z), cat->omega.at(px, py, pz)).is_zero());
                    }
        }
}

TEST_CASE("invertibility and inverses") {
    CatPtr triv = corpus_cat("z2-trivial");
    const auto& tc = classify(*triv);
    REQUIRE(tc.size() == 2);
    CHECK(is_invertible(class_representative(triv, tc[0])));       // unit
    CHECK(!is_invertible(class_representative(triv, tc[1])));      // full, degenerate form
    CHECK_THROWS_AS(inverse(class_representative(triv, tc[1])), Error);

    CatPtr br = corpus_cat("z2-braided");
    const auto& bc = classify(*br);
    ModCat full = class_representative(br, bc[1]);
    CHECK(is_invertible(full));
    ModCat inv = inverse(full);
    SemisimpleModCat prod = fuse(full, inv);
    CHECK(prod.summands.size() == 1);
    CHECK(prod.summands[0].second == 1);
    CHECK(prod.summands[0].first.h.size() == 1);
    // Self-inverse here: the dual lives on the same subgroup.
    CHECK(canonical_class(inv) == canonical_class(full));
}

TEST_CASE("invertible classes on cyclic subgroups square to the unit") {
    CHECK(props::invertible_cyclic_order_two() > 10);
}

TEST_CASE("picard groups of the reference braidings") {
    CHECK(picard(corpus_cat("z2z2-q0")).name == "Z/2");
    CHECK(picard(corpus_cat("z2z2-q1")).name == "Z/2");
    CHECK(picard(corpus_cat("z2z2-q2")).name == "Z/2 + Z/2");
    CHECK(picard(corpus_cat("z2z2-q3")).name == "S3");
    CHECK(picard(ck_category(3, 1)).name == "D8");
    CHECK(picard(ck_category(3, 2)).name == "Z/2 + Z/2");
}

TEST_CASE("picard groups for p = 5 follow the residue split") {
    // -k is a residue mod 5 for k = 1 and a non-residue for k = 2.
    CHECK(picard(ck_category(5, 1)).name == "D8");   // D_{2(p-1)}
    CHECK(picard(ck_category(5, 2)).name == "D12");  // D_{2(p+1)}
}

TEST_CASE("picard group of the chain braiding") {
    GroupPtr g = make_group({2, 2, 2});
    std::vector<RootExp> q(8);
    for (int x = 0; x < 8; x++) {
        int a = g->coord(x, 0), b = g->coord(x, 1), c = g->coord(x, 2);
        q[x] = re_make(a + b + c + a * b + b * c, 2);
    }
    CatPtr cat = make_category_from_q(g, q, 0);
    PicardGroup pic = picard(cat);
    CHECK(pic.elements.size() == 24);
    CHECK(pic.name == "S4");
    CHECK(!pic.fp.abelian);
}

TEST_CASE("picard cayley table is a group") {
    PicardGroup pic = picard(corpus_cat("z2z2-q3"));
    size_t n = pic.elements.size();
    REQUIRE(n == 6);
    for (size_t i = 0; i < n; i++) {
        std::vector<bool> row(n, false), col(n, false);
        for (size_t j = 0; j < n; j++) {
            row[pic.cayley[i][j]] = true;
            col[pic.cayley[j][i]] = true;
        }
        CHECK(std::count(row.begin(), row.end(), true) == static_cast<long>(n));
        CHECK(std::count(col.begin(), col.end(), true) == static_cast<long>(n));
    }
    CHECK(pic.fp.order == 6);
    CHECK(pic.fp.derived_order == 3);
}

TEST_CASE("coprime product and split") {
    props::coprime_product_table();
    CHECK_THROWS_AS(coprime_split(corpus_cat("z4-q1")), Error);
    CatPtr c2 = corpus_cat("z2-braided");
    CatPtr cc = build_category(fixture_by_name("z2z2-char2").spec);
    CHECK_THROWS_AS(box_product(c2, cc), Error);  // characteristics differ
}

TEST_CASE("separable-only table in characteristic two") {
    CatPtr cat = corpus_cat("z2z2-char2");
    FusionTable t = fusion_table(cat, true);
    REQUIRE(t.basis.size() == 1);
    CHECK(t.basis[0].h.size() == 1);
    CHECK(t.cell(0, 0).summands.size() == 1);
    CHECK(t.cell(0, 0).summands[0].first == t.basis[0]);
}

TEST_CASE("fusion of the nontrivial classes on Z/2") {
    CatPtr triv = corpus_cat("z2-trivial");
    const auto& tc = classify(*triv);
    SemisimpleModCat sq = fuse_classes(triv, tc[1], tc[1]);
    REQUIRE(sq.summands.size() == 1);
    CHECK(sq.summands[0].second == 2);  // 2<1>: multiplicity two over the full subgroup
    CHECK(sq.summands[0].first == tc[1]);

    CatPtr br = corpus_cat("z2-braided");
    const auto& bc = classify(*br);
    SemisimpleModCat sq2 = fuse_classes(br, bc[1], bc[1]);
    REQUIRE(sq2.summands.size() == 1);
    CHECK(sq2.summands[0].second == 1);
    CHECK(sq2.summands[0].first == bc[0]);  // invertible: lands on the unit
}

TEST_CASE("multiplicity bookkeeping in a decomposition") {
    CatPtr triv = corpus_cat("z2-trivial");
    const auto& tc = classify(*triv);
    DecompositionResult dr = fuse_decomposition(triv, tc[1], tc[1]);
    CHECK(dr.m == 2);
    CHECK(dr.h.size() == 2);
    CHECK(dr.k.size() == 2);
    CHECK(dr.kperp.size() == 4);
}

TEST_CASE("same_semisimple compares multisets of classes") {
    CatPtr cat = corpus_cat("z2-trivial");
    const auto& c = classify(*cat);
    SemisimpleModCat x{{{c[0], 1}, {c[1], 2}}};
    SemisimpleModCat y{{{c[1], 2}, {c[0], 1}}};
    SemisimpleModCat z{{{c[0], 1}, {c[1], 3}}};
    CHECK(same_semisimple(x, y));
    CHECK(!same_semisimple(x, z));
}
