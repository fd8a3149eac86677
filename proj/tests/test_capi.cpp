// Exercises the shared library through its C interface only.
#include <doctest.h>

#include <string>

#include "gpd/gpd.h"

namespace
{

std::string const data_dir = GPD_DATA_DIR;

std::string take(char* s)
{
    std::string out = s ? s : "";
    gpd_string_free(s);
    return out;
}

} // namespace

TEST_CASE("detect")
{
    gpd_kind k;
    REQUIRE(gpd_detect((data_dir + "/posets/diamond.json").c_str(), &k) == GPD_OK);
    CHECK(k == GPD_KIND_POSET);
    REQUIRE(gpd_detect((data_dir + "/figures/open_edge_cofiltration.json").c_str(), &k) == GPD_OK);
    CHECK(k == GPD_KIND_COFILTRATION);
    REQUIRE(gpd_detect((data_dir + "/figures/fig4_presentation.json").c_str(), &k) == GPD_OK);
    CHECK(k == GPD_KIND_PRESENTATION);
    REQUIRE(gpd_detect((data_dir + "/complexes/torus.json").c_str(), &k) == GPD_OK);
    CHECK(k == GPD_KIND_COMPLEX);
    CHECK(gpd_detect((data_dir + "/missing.json").c_str(), &k) == GPD_ERR_IO);
    CHECK(std::string(gpd_last_error_kind()) == "Io");
}

TEST_CASE("posets")
{
    gpd_poset* p = nullptr;
    REQUIRE(gpd_poset_load((data_dir + "/posets/diamond.json").c_str(), &p) == GPD_OK);
    CHECK(gpd_poset_size(p) == 4);
    char* text = nullptr;
    REQUIRE(gpd_poset_hasse(p, 1, 0, &text) == GPD_OK);
    std::string const json = take(text);
    CHECK(json.find("\"[a,d]\"") != std::string::npos);
    gpd_poset_free(p);

    CHECK(gpd_poset_parse("{\"elements\": [\"a\", \"b\"], \"covers\": [[\"a\", \"b\"], [\"b\", \"a\"]]}", &p) ==
          GPD_ERR_VALIDATION);
    CHECK(std::string(gpd_last_error_kind()) == "CycleDetected");
    CHECK(gpd_poset_parse("not json", &p) == GPD_ERR_VALIDATION);
    CHECK(gpd_poset_load(nullptr, &p) == GPD_ERR_ARGUMENT);
}

TEST_CASE("complexes")
{
    gpd_complex* k = nullptr;
    REQUIRE(gpd_complex_builtin("sphere", &k) == GPD_OK);
    gpd_complex* sd = nullptr;
    REQUIRE(gpd_complex_subdivide(k, &sd) == GPD_OK);
    CHECK(gpd_complex_count(sd, 0) == 14);
    CHECK(gpd_complex_count(sd, 1) == 36);
    CHECK(gpd_complex_count(sd, 2) == 24);
    CHECK(gpd_complex_euler(sd) == 2);
    gpd_complex_free(sd);
    gpd_complex_free(k);
    CHECK(gpd_complex_builtin("klein-bottle", &k) == GPD_ERR_VALIDATION);
}

TEST_CASE("filtrations")
{
    gpd_filtration* f = nullptr;
    REQUIRE(gpd_filtration_load((data_dir + "/figures/open_edge_cofiltration.json").c_str(), &f) == GPD_OK);
    CHECK(gpd_filtration_is_cofiltration(f) == 1);
    CHECK(gpd_filtration_dimension(f) == 1);

    char* text = nullptr;
    REQUIRE(gpd_filtration_diagram(f, 1, 2, &text) == GPD_OK);
    std::string const dgm = take(text);
    CHECK(dgm.find("\"birth\": \"a\"") != std::string::npos);
    CHECK(dgm.find("\"death\": \"b\"") != std::string::npos);
    CHECK(gpd_filtration_diagram(f, 4, 2, &text) == GPD_ERR_VALIDATION);
    CHECK(gpd_filtration_diagram(f, 1, 4, &text) == GPD_ERR_VALIDATION);
    CHECK(std::string(gpd_last_error_kind()) == "InvalidField");

    gpd_filtration* g = nullptr;
    REQUIRE(gpd_filtration_dualize(f, &g) == GPD_OK);
    CHECK(gpd_filtration_is_cofiltration(g) == 0);
    REQUIRE(gpd_filtration_to_json(g, &text) == GPD_OK);
    std::string const json = take(text);
    gpd_filtration* again = nullptr;
    REQUIRE(gpd_filtration_parse(json.c_str(), nullptr, &again) == GPD_OK);
    gpd_filtration_free(again);
    gpd_filtration_free(g);

    REQUIRE(gpd_filtration_check_equivalence(f, 2, &text) == GPD_OK);
    take(text);
    gpd_filtration_free(f);
}

TEST_CASE("checks report failures with a distinct status")
{
    gpd_filtration* f = nullptr;
    REQUIRE(gpd_filtration_load((data_dir + "/filtrations/diamond_triangle.json").c_str(), &f) == GPD_OK);
    char* report = nullptr;
    // The triangle is not a closed manifold: strict mode refuses, advisory mode reports.
    CHECK(gpd_filtration_check_duality(f, 2, 0, &report) == GPD_ERR_VALIDATION);
    CHECK(std::string(gpd_last_error_kind()) == "HypothesisNotMet");
    gpd_status const s = gpd_filtration_check_duality(f, 2, 1, &report);
    CHECK((s == GPD_OK || s == GPD_CHECK_FAILED));
    take(report);

    REQUIRE(gpd_filtration_check_functoriality(f, (data_dir + "/connections/diamond_to_chain.json").c_str(), 2,
                                               &report) == GPD_OK);
    CHECK(take(report).find("\"pass\": true") != std::string::npos);
    gpd_filtration_free(f);
}

TEST_CASE("modules")
{
    gpd_module* m = nullptr;
    REQUIRE(gpd_module_load((data_dir + "/figures/fig4_presentation.json").c_str(), &m) == GPD_OK);
    CHECK(gpd_module_has_presentation(m) == 1);
    char* text = nullptr;
    REQUIRE(gpd_module_diagram(m, &text) == GPD_OK);
    std::string const dgm = take(text);
    CHECK(dgm.find("\"multiplicity\": 2") != std::string::npos);
    REQUIRE(gpd_module_check_equivalence(m, (data_dir + "/connections/diamond_to_point.json").c_str(), &text) ==
            GPD_OK);
    take(text);
    gpd_module_free(m);
}

TEST_CASE("suites")
{
    char* report = nullptr;
    REQUIRE(gpd_check_suite("rota", 20, 1, 2, &report) == GPD_OK);
    CHECK(take(report).find("\"failures\": 0") != std::string::npos);
    CHECK(gpd_check_suite("nonsense", 1, 1, 2, &report) == GPD_ERR_ARGUMENT);

    gpd_complex* k = nullptr;
    REQUIRE(gpd_complex_builtin("triangle", &k) == GPD_OK);
    CHECK(gpd_check_duality_suite(k, 2, 1, 2, &report) == GPD_ERR_VALIDATION);
    gpd_complex_free(k);
    REQUIRE(gpd_complex_builtin("torus", &k) == GPD_OK);
    CHECK(gpd_check_duality_suite(k, 5, 1, 3, &report) == GPD_OK);
    take(report);
    gpd_complex_free(k);
}
