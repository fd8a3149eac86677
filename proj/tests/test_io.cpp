#include <doctest.h>

#include "gpd/error.hpp"
#include "gpd/io.hpp"

using namespace gpd;
using io::Json;

namespace
{

std::filesystem::path const data_dir = GPD_DATA_DIR;

ErrorKind kind_of(auto&& f)
{
    try
    {
        f();
    }
    catch (Error const& e)
    {
        return e.kind();
    }
    return ErrorKind::Internal;
}

} // namespace

TEST_CASE("posets from json")
{
    auto p = io::poset_from_json(io::load_json(data_dir / "posets/diamond.json"));
    CHECK(p.size() == 4);
    CHECK(io::poset_from_json(io::poset_to_json(p)) == p);
    CHECK(kind_of([] { io::poset_from_json(io::load_json(data_dir / "posets/cyclic.json")); }) ==
          ErrorKind::CycleDetected);
    CHECK(kind_of([] { io::load_json(data_dir / "no-such-file.json"); }) == ErrorKind::Io);
    CHECK(kind_of([] { io::poset_from_json(Json::parse(R"({"covers": []})")); }) == ErrorKind::Parse);
}

TEST_CASE("complexes from json")
{
    SUBCASE("numeric and string ids match")
    {
        auto k = io::complex_from_json(Json::parse(R"({"vertices": ["0", "1"], "simplices": [[0], [1], ["0", 1]]})"));
        CHECK(k.size() == 3);
    }
    SUBCASE("vertices derived and sorted numerically")
    {
        auto k = io::complex_from_json(Json::parse(R"({"maximal": [[10, 2], [2, 3]]})"));
        CHECK(k.vertices() == std::vector<std::string>{"2", "3", "10"});
    }
    SUBCASE("round trip")
    {
        auto k = io::complex_from_json(io::load_json(data_dir / "complexes/torus.json"));
        auto again = io::complex_from_json(io::complex_to_json(k));
        CHECK(again.simplices() == k.simplices());
        CHECK(again.vertices() == k.vertices());
    }
    SUBCASE("errors")
    {
        CHECK(kind_of([] { io::complex_from_json(Json::parse(R"({"simplices": [[0, 1]]})")); }) ==
              ErrorKind::NotFaceClosed);
        CHECK(kind_of([] { io::complex_from_json(Json::parse(R"({"vertices": [0], "simplices": [[1]]})")); }) ==
              ErrorKind::UnknownVertex);
    }
}

TEST_CASE("filtrations from json")
{
    SUBCASE("figure cofiltration")
    {
        auto path = data_dir / "figures/open_edge_cofiltration.json";
        auto f = io::filtration_from_json(io::load_json(path), path.parent_path());
        CHECK(f.is_cofiltration());
        CHECK(f.at(0).size() == 1);
        CHECK(f.at(1).size() == 3);
    }
    SUBCASE("closure on request")
    {
        auto path = data_dir / "filtrations/diamond_triangle.json";
        auto f = io::filtration_from_json(io::load_json(path), path.parent_path());
        CHECK(f.at(3).size() == 7);
    }
    SUBCASE("without closure the sets must already be closed")
    {
        auto j = io::load_json(data_dir / "filtrations/diamond_triangle.json");
        j.erase("close");
        CHECK(kind_of([&] { io::filtration_from_json(j, data_dir / "filtrations"); }) == ErrorKind::NotSubcomplex);
    }
    SUBCASE("missing element")
    {
        auto j = io::load_json(data_dir / "figures/open_edge_cofiltration.json");
        j["assignment"].erase("b");
        CHECK(kind_of([&] { io::filtration_from_json(j, data_dir / "figures"); }) == ErrorKind::IndexMismatch);
    }
    SUBCASE("round trip is byte-stable")
    {
        auto path = data_dir / "filtrations/torus_cofiltration.json";
        auto f = io::filtration_from_json(io::load_json(path), path.parent_path());
        auto text = io::dump(io::filtration_to_json(f));
        auto again = io::filtration_from_json(Json::parse(text));
        CHECK(io::dump(io::filtration_to_json(again)) == text);
    }
}

TEST_CASE("modules and presentations from json")
{
    auto path = data_dir / "figures/fig4_presentation.json";
    auto pres = io::presentation_from_json(io::load_json(path), path.parent_path());
    CHECK(pres.free().slot_count() == 3);
    CHECK(pres.target().dims() == std::vector<std::size_t>{0, 2, 1, 0});

    SUBCASE("missing map between nonzero spaces")
    {
        auto j = Json::parse(R"({"poset": {"elements": ["a", "b"], "covers": [["a", "b"]]},
                                 "dims": {"a": 1, "b": 1}})");
        CHECK(kind_of([&] { io::module_from_json(j); }) == ErrorKind::ShapeMismatch);
    }
    SUBCASE("non-cover key")
    {
        auto j = Json::parse(R"({"poset": {"elements": ["a", "b", "c"], "covers": [["a", "b"], ["b", "c"]]},
                                 "dims": {"a": 1, "b": 1, "c": 1},
                                 "maps": {"a<b": [[1]], "b<c": [[1]], "a<c": [[1]]}})");
        CHECK(kind_of([&] { io::module_from_json(j); }) == ErrorKind::ShapeMismatch);
    }
    SUBCASE("inconsistent composites")
    {
        auto j = Json::parse(R"({"poset": {"elements": ["a", "b", "c", "d"],
                                           "covers": [["a", "b"], ["a", "c"], ["b", "d"], ["c", "d"]]},
                                 "field": 3, "dims": {"a": 1, "b": 1, "c": 1, "d": 1},
                                 "maps": {"a<b": [[1]], "a<c": [[1]], "b<d": [[1]], "c<d": [[2]]}})");
        CHECK(kind_of([&] { io::module_from_json(j); }) == ErrorKind::NotFunctorial);
    }
}

TEST_CASE("connections from json")
{
    auto diamond = share(io::poset_from_json(io::load_json(data_dir / "posets/diamond.json")));
    auto point = share(io::poset_from_json(io::load_json(data_dir / "posets/singleton.json")));
    auto j = io::load_json(data_dir / "connections/diamond_to_point.json");
    auto c = io::connection_from_json(j, diamond, point);
    CHECK(c.g[0] == 3);
    j["g"]["x"] = "a";
    CHECK(kind_of([&] { io::connection_from_json(j, diamond, point); }) == ErrorKind::AdjunctionFailed);
    j["f"].erase("a");
    CHECK(kind_of([&] { io::connection_from_json(j, diamond, point); }) == ErrorKind::IndexMismatch);
}
