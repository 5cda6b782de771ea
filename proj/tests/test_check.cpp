#include <string>
#include <vector>

#include "acumen/check.hpp"
#include "acumen/corpus.hpp"
#include "acumen/parser.hpp"
#include "doctest.h"

using namespace acumen;

namespace {

std::vector<Diagnostic> diagnose(const std::string& source) {
    return check_model(parse_model(source));
}

bool mentions(const std::vector<Diagnostic>& diags, const std::string& fragment) {
    for (const Diagnostic& d : diags)
        if (d.message.find(fragment) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("the corpus is diagnostic-clean") {
    for (const CorpusEntry& entry : load_corpus(ACUMEN_CORPUS_DIR)) {
        CAPTURE(entry.name);
        std::vector<Diagnostic> diags = check_model(entry.model);
        for (const Diagnostic& d : diags)
            MESSAGE(to_string(d.pos) << ": " << d.message);
        CHECK(diags.empty());
    }
}

TEST_CASE("undeclared names are reported with their prime level") {
    auto diags = diagnose("class c () x' [=] 1 end");
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].message == "undeclared name 'x'' in class c");
    CHECK(diags[0].pos.line == 1);

    CHECK(diagnose("class c () private x = 0; x' = 0 end x' [=] 1 end").empty());
    // declaring x does not declare x'
    CHECK(mentions(diagnose("class c () private x = 0 end x' [=] 1 end"),
                   "undeclared name 'x''"));
}

TEST_CASE("derivative chains must be declared at every level") {
    auto diags = diagnose("class c () private p = 0; p'' = 0 end end");
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].message == "class c: 'p''' is declared but 'p'' is not");
    CHECK(diagnose("class c () private p = 0; p' = 0; p'' = 0 end end").empty());
}

TEST_CASE("duplicates: classes, parameters, declarations") {
    CHECK(mentions(diagnose("class c () end class c () end"), "duplicate class 'c'"));
    CHECK(mentions(diagnose("class c (a, a) end"), "duplicate parameter 'a'"));
    CHECK(mentions(diagnose("class c (a) private a = 0 end end"),
                   "duplicate declaration of 'a'"));
    CHECK(mentions(diagnose("class c () private x = 0; x = 1 end end"),
                   "duplicate declaration of 'x'"));
    // same base name at different prime levels is not a duplicate
    CHECK(diagnose("class c () private x = 0; x' = 1 end end").empty());
}

TEST_CASE("create sites check class existence and arity") {
    CHECK(mentions(diagnose("class c () private b = create nope () end end"),
                   "unknown class 'nope'"));
    std::string two_param =
        "class leaf (a, b) end\n";
    CHECK(mentions(diagnose(two_param + "class c () private x = create leaf (1) end end"),
                   "class 'leaf' expects 2 argument(s), got 1"));
    CHECK(diagnose(two_param + "class c () private x = create leaf (1, 2) end end")
              .empty());
    // ... and inside class bodies too
    CHECK(mentions(diagnose(two_param +
                            "class c () private x = 0; go = false end "
                            "if go x = create leaf (1, 2, 3) end end"),
                   "expects 2 argument(s), got 3"));
}

TEST_CASE("field access through a statically known binder") {
    std::string leaf = "class leaf () private y = 0; y' = 0 end end\n";
    CHECK(mentions(diagnose(leaf + "class c () private b = create leaf () end "
                                   "b.z [=] 1 end"),
                   "class leaf has no field 'z'"));
    CHECK(mentions(diagnose(leaf + "class c () private b = create leaf () end "
                                   "b.y'' [=] 1 end"),
                   "class leaf has no field 'y'''"));
    CHECK(diagnose(leaf + "class c () private b = create leaf () end "
                          "b.y [=] 1; b.y' [=] 2 end")
              .empty());
    // chained access: c.b.y through two binder hops
    std::string mid = "class mid () private b = create leaf () end end\n";
    CHECK(mentions(diagnose(leaf + mid +
                            "class top () private m = create mid () end "
                            "m.b.z [=] 1 end"),
                   "class leaf has no field 'z'"));
}

TEST_CASE("builtin calls are checked for name and arity") {
    CHECK(mentions(diagnose("class c () private x = foo(1) end end"),
                   "unknown function 'foo'"));
    CHECK(mentions(diagnose("class c () private x = sin(1, 2) end end"),
                   "function 'sin' expects 1 argument(s), got 2"));
    CHECK(mentions(diagnose("class c () private x = dot([1,2]) end end"),
                   "function 'dot' expects 2 argument(s), got 1"));
    CHECK(diagnose("class c () private x = dot([1,2],[3,4]) end end").empty());
}

TEST_CASE("initializers may only read names declared above them") {
    auto diags = diagnose("class c () private a = b; b = 0 end end");
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].message == "undeclared name 'b' in class c");
    CHECK(diagnose("class c () private b = 0; a = b end end").empty());
    // parameters are visible to every initializer
    CHECK(diagnose("class c (k) private a = k * 2 end end").empty());
}

TEST_CASE("create binders cannot be derivatives") {
    CHECK(mentions(diagnose("class leaf () end\n"
                            "class c () private x = 0; x' = 0; go = false end "
                            "if go x' = create leaf () end end"),
                   "create binder cannot be a derivative"));
}

TEST_CASE("diagnostics come back sorted by source position") {
    auto diags = diagnose(
        "class c ()\n"
        "  a [=] 1;\n"
        "  b [=] 2\n"
        "end");
    REQUIRE(diags.size() == 2);
    CHECK(diags[0].pos.line == 2);
    CHECK(diags[1].pos.line == 3);
}
