#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fusioncalc.h"

namespace {

// The driver talks to the library through the C interface only.

struct CategoryHandle {
    fc_category* cat = nullptr;
    ~CategoryHandle() { fc_category_free(cat); }
};

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { fc_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

int fail(int rc) {
    std::cerr << "error: " << fc_last_error() << "\n";
    return rc;
}

int open_category(const std::string& spec_path, CategoryHandle& handle) {
    std::ifstream in(spec_path);
    if (!in) {
        std::cerr << "error: cannot open spec file: " << spec_path << "\n";
        return 1;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return fc_category_from_json(ss.str().c_str(), &handle.cat);
}

int run(int argc, char** argv) {
    CLI::App app{"Exact fusion calculator for module categories over pointed braided categories"};
    app.require_subcommand(1);

    std::string spec_path, format = "md", left, right, fixture_name;
    bool separable_only = false, all_fixtures = false;

    CLI::App* classify = app.add_subcommand("classify", "List module category classes");
    classify->add_option("--spec", spec_path, "Category spec JSON file")->required();
    classify->add_flag("--separable-only", separable_only, "Keep only separable classes");

    CLI::App* fuse = app.add_subcommand("fuse", "Fuse two module category classes");
    fuse->add_option("--spec", spec_path, "Category spec JSON file")->required();
    fuse->add_option("left", left, "First class label, e.g. \"<a>\" or \"nu\"")->required();
    fuse->add_option("right", right, "Second class label")->required();

    CLI::App* table = app.add_subcommand("table", "Full fusion table");
    table->add_option("--spec", spec_path, "Category spec JSON file")->required();
    table->add_flag("--separable-only", separable_only, "Restrict to separable classes");
    table->add_option("--format", format, "md, csv or json")
        ->check(CLI::IsMember({"md", "csv", "json"}));

    CLI::App* picard = app.add_subcommand("picard", "Picard group of invertible classes");
    picard->add_option("--spec", spec_path, "Category spec JSON file")->required();
    picard->add_flag("--separable-only", separable_only, "Restrict to separable classes");

    CLI::App* check = app.add_subcommand("check", "Compare against the built-in reference tables");
    check->add_option("--spec", spec_path, "Validate a spec and its table's unit row/column");
    check->add_flag("--all-fixtures", all_fixtures, "Run every built-in fixture");
    check->add_option("--fixture", fixture_name, "Run one fixture by name");

    CLI::App* split = app.add_subcommand("split", "Split into coprime factors");
    split->add_option("--spec", spec_path, "Category spec JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    if (check->parsed()) {
        if (all_fixtures || !fixture_name.empty()) {
            int failed = 0;
            auto run_one = [&](const char* name) {
                OwnedString report;
                int rc = fc_check_fixture(name, &report.s);
                if (rc != 0 && rc != 3) {
                    fail(rc);
                    failed = rc;
                    return;
                }
                std::cout << report.str();
                if (rc == 3) failed = 3;
            };
            if (all_fixtures) {
                for (int i = 0; i < fc_fixture_count(); i++) run_one(fc_fixture_name(i));
            } else {
                run_one(fixture_name.c_str());
            }
            return failed;
        }
        if (spec_path.empty()) {
            std::cerr << "error: check needs --spec, --fixture or --all-fixtures\n";
            return 1;
        }
        CategoryHandle cat;
        if (int rc = open_category(spec_path, cat)) return fail(rc);
        OwnedString report;
        int rc = fc_check_unit(cat.cat, &report.s);
        std::cout << report.str();
        return rc;
    }

    CategoryHandle cat;
    if (int rc = open_category(spec_path, cat)) return fail(rc);
    OwnedString out;
    int rc = 0;
    if (classify->parsed()) {
        rc = fc_classify(cat.cat, separable_only, &out.s);
    } else if (fuse->parsed()) {
        rc = fc_fuse(cat.cat, left.c_str(), right.c_str(), &out.s);
        if (rc == 0) {
            std::cout << out.str() << "\n";
            return 0;
        }
    } else if (table->parsed()) {
        rc = fc_table(cat.cat, separable_only, format.c_str(), &out.s);
    } else if (picard->parsed()) {
        rc = fc_picard(cat.cat, separable_only, &out.s);
    } else if (split->parsed()) {
        OwnedString second;
        rc = fc_split(cat.cat, &out.s, &second.s);
        if (rc != 0) return fail(rc);
        std::cout << out.str() << second.str();
        return 0;
    }
    if (rc != 0) return fail(rc);
    std::cout << out.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
