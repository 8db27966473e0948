#include "fusioncalc.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "io.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
int guarded(F&& f) {
    try {
        f();
        g_last_error.clear();
        return 0;
    } catch (const fc::Error& e) {
        g_last_error = e.what();
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return 4;
    }
}

}  // namespace

struct fc_category {
    fc::CatPtr cat;
};

extern "C" {

int fc_category_from_json(const char* json, fc_category** out) {
    return guarded([&] {
        fc::CategorySpec spec = fc::parse_spec_json(json ? json : "");
        *out = new fc_category{fc::build_category(spec)};
    });
}

void fc_category_free(fc_category* cat) { delete cat; }

const char* fc_last_error(void) { return g_last_error.c_str(); }

int fc_classify(fc_category* cat, int separable_only, char** out) {
    return guarded([&] { *out = dup_string(fc::render_classification(*cat->cat, separable_only)); });
}

int fc_table(fc_category* cat, int separable_only, const char* format, char** out) {
    return guarded([&] {
        fc::FusionTable tab = fc::fusion_table(cat->cat, separable_only);
        *out = dup_string(fc::render_table(*cat->cat, tab, format ? format : "md"));
    });
}

int fc_fuse(fc_category* cat, const char* left, const char* right, char** out) {
    return guarded([&] {
        const fc::ModCatClass& c1 = fc::resolve_class(*cat->cat, left);
        const fc::ModCatClass& c2 = fc::resolve_class(*cat->cat, right);
        *out = dup_string(fc::render_cell(fc::fuse_classes(cat->cat, c1, c2)));
    });
}

int fc_picard(fc_category* cat, int separable_only, char** out) {
    return guarded([&] { *out = dup_string(fc::render_picard(fc::picard(cat->cat, separable_only))); });
}

int fc_split(fc_category* cat, char** out_first, char** out_second) {
    return guarded([&] {
        auto [c1, c2] = fc::coprime_split(cat->cat);
        auto spec_of = [](const fc::CatPtr& c) {
            fc::CategorySpec spec;
            spec.invariants = c->group->invariants;
            spec.characteristic = c->characteristic;
            spec.q = c->q;
            return fc::spec_to_json(spec);
        };
        *out_first = dup_string(spec_of(c1));
        *out_second = dup_string(spec_of(c2));
    });
}

int fc_check_unit(fc_category* cat, char** report) {
    return guarded([&] {
        fc::FusionTable tab = fc::fusion_table(cat->cat);
        bool ok = true;
        for (size_t i = 0; i < tab.basis.size(); i++) {
            const fc::SemisimpleModCat& row = tab.cell(0, static_cast<int>(i));
            const fc::SemisimpleModCat& col = tab.cell(static_cast<int>(i), 0);
            ok &= row.summands.size() == 1 && row.summands[0].second == 1 &&
                  row.summands[0].first == tab.basis[i];
            ok &= col.summands.size() == 1 && col.summands[0].second == 1 &&
                  col.summands[0].first == tab.basis[i];
        }
        if (report)
            *report = dup_string(std::string(ok ? "PASS" : "FAIL") + " spec table unit row/column\n");
        if (!ok) throw fc::Error(fc::ErrorCode::FixtureMismatch, "unit row/column check failed");
    });
}

int fc_fixture_count(void) { return static_cast<int>(fc::fixture_corpus().size()); }

const char* fc_fixture_name(int idx) {
    const auto& corpus = fc::fixture_corpus();
    if (idx < 0 || idx >= static_cast<int>(corpus.size())) return nullptr;
    return corpus[static_cast<size_t>(idx)].name.c_str();
}

int fc_check_fixture(const char* name, char** report) {
    std::string text;
    int rc = guarded([&] {
        const fc::Fixture& fx = fc::fixture_by_name(name ? name : "");
        fc::FixtureReport rep = fc::check_fixture(fx);
        text = (rep.pass ? "PASS " : "FAIL ") + rep.name + "  (" + fx.note + ")\n";
        for (const std::string& d : rep.diffs) text += "  " + d + "\n";
        if (report) *report = dup_string(text);
        if (!rep.pass) throw fc::Error(fc::ErrorCode::FixtureMismatch, "fixture mismatch: " + rep.name);
    });
    return rc;
}

void fc_string_free(char* s) { std::free(s); }

}  // extern "C"
