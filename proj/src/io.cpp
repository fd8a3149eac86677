#include "gpd/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "gpd/error.hpp"

namespace gpd::io
{

namespace
{

std::string id_string(Json const& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<std::int64_t>());
    throw Error(ErrorKind::Parse, "ids must be strings or integers, got " + v.dump());
}

Json const& member(Json const& j, char const* key)
{
    if (!j.is_object() || !j.contains(key))
        throw Error(ErrorKind::Parse, std::string("missing key \"") + key + "\"");
    return j.at(key);
}

Json const& array_member(Json const& j, char const* key)
{
    Json const& v = member(j, key);
    if (!v.is_array())
        throw Error(ErrorKind::Parse, std::string("\"") + key + "\" must be an array");
    return v;
}

Matrix matrix_from_json(Json const& j, std::size_t rows, std::size_t cols, Field field, std::string const& what)
{
    if (!j.is_array())
        throw Error(ErrorKind::Parse, what + " must be an array of rows");
    if ((rows == 0 || cols == 0) && j.empty())
        return Matrix(rows, cols, field);
    if (j.size() != rows)
        throw Error(ErrorKind::ShapeMismatch, what + " has " + std::to_string(j.size()) + " rows, expected " +
                                                  std::to_string(rows));
    std::vector<std::int64_t> values;
    for (Json const& row : j)
    {
        if (!row.is_array() || row.size() != cols)
            throw Error(ErrorKind::ShapeMismatch, what + " rows must have " + std::to_string(cols) + " entries");
        for (Json const& x : row)
        {
            if (!x.is_number_integer())
                throw Error(ErrorKind::Parse, what + " entries must be integers");
            values.push_back(x.get<std::int64_t>());
        }
    }
    return Matrix::from_ints(rows, cols, values, field);
}

std::vector<SimplicialComplex::Simplex> simplices_from_json(Json const& arr,
                                                            std::map<std::string, std::uint32_t> const& index)
{
    std::vector<SimplicialComplex::Simplex> out;
    for (Json const& s : arr)
    {
        if (!s.is_array())
            throw Error(ErrorKind::Parse, "a simplex must be an array of vertex ids");
        SimplicialComplex::Simplex t;
        for (Json const& v : s)
        {
            std::string const id = id_string(v);
            auto it = index.find(id);
            if (it == index.end())
                throw Error(ErrorKind::UnknownVertex, "vertex '" + id + "'");
            t.push_back(it->second);
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<std::size_t> simplex_positions(Json const& arr, SimplicialComplex const& k)
{
    std::map<std::string, std::uint32_t> index;
    for (std::uint32_t i = 0; i < k.vertex_count(); ++i)
        index.emplace(k.vertices()[i], i);
    std::vector<std::size_t> out;
    for (auto s : simplices_from_json(arr, index))
    {
        std::sort(s.begin(), s.end());
        auto pos = k.find(s);
        if (!pos)
            throw Error(ErrorKind::UnknownVertex, "simplex is not in the ambient complex");
        out.push_back(*pos);
    }
    return out;
}

} // namespace

Json load_json(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Io, "cannot open " + path.string());
    try
    {
        return Json::parse(in);
    }
    catch (nlohmann::json::exception const& e)
    {
        throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
    }
}

void save_text(std::filesystem::path const& path, std::string const& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::Io, "cannot write " + path.string());
    out << text;
    if (!out)
        throw Error(ErrorKind::Io, "write to " + path.string() + " failed");
}

Json resolve(Json const& j, std::filesystem::path const& base)
{
    if (j.is_string())
        return load_json(base / j.get<std::string>());
    return j;
}

FinitePoset poset_from_json(Json const& j)
{
    std::vector<std::string> elements;
    for (Json const& e : array_member(j, "elements"))
        elements.push_back(id_string(e));
    std::vector<std::pair<std::string, std::string>> covers;
    if (j.contains("covers"))
        for (Json const& c : array_member(j, "covers"))
        {
            if (!c.is_array() || c.size() != 2)
                throw Error(ErrorKind::Parse, "a cover is a pair [lower, upper]");
            covers.emplace_back(id_string(c[0]), id_string(c[1]));
        }
    return FinitePoset::from_covers(std::move(elements), covers);
}

Json poset_to_json(FinitePoset const& p)
{
    Json covers = Json::array();
    for (auto [a, b] : p.hasse())
        covers.push_back(Json::array({p.name(a), p.name(b)}));
    return Json{{"elements", p.names()}, {"covers", covers}};
}

SimplicialComplex complex_from_json(Json const& j)
{
    bool const maximal = j.is_object() && j.contains("maximal");
    Json const& arr = maximal ? array_member(j, "maximal") : array_member(j, "simplices");

    std::vector<std::string> vertices;
    if (j.contains("vertices"))
    {
        for (Json const& v : array_member(j, "vertices"))
            vertices.push_back(id_string(v));
    }
    else
    {
        std::set<std::string> seen;
        bool numeric = true;
        std::vector<Json> ids;
        for (Json const& s : arr)
            if (s.is_array())
                for (Json const& v : s)
                    if (seen.insert(id_string(v)).second)
                    {
                        numeric = numeric && v.is_number_integer();
                        ids.push_back(v);
                    }
        if (numeric)
            std::sort(ids.begin(), ids.end(),
                      [](Json const& a, Json const& b) { return a.get<std::int64_t>() < b.get<std::int64_t>(); });
        else
            std::sort(ids.begin(), ids.end(),
                      [](Json const& a, Json const& b) { return id_string(a) < id_string(b); });
        for (Json const& v : ids)
            vertices.push_back(id_string(v));
    }

    std::map<std::string, std::uint32_t> index;
    for (std::uint32_t i = 0; i < vertices.size(); ++i)
        if (!index.emplace(vertices[i], i).second)
            throw Error(ErrorKind::DuplicateElement, "vertex '" + vertices[i] + "' listed twice");
    auto simplices = simplices_from_json(arr, index);
    if (maximal)
        return SimplicialComplex::from_maximal(std::move(vertices), simplices);
    return SimplicialComplex::from_simplices(std::move(vertices), std::move(simplices));
}

Json complex_to_json(SimplicialComplex const& k)
{
    Json simplices = Json::array();
    for (auto const& s : k.simplices())
    {
        Json t = Json::array();
        for (auto v : s)
            t.push_back(k.vertices()[v]);
        simplices.push_back(std::move(t));
    }
    return Json{{"vertices", k.vertices()}, {"simplices", simplices}};
}

Filtration filtration_from_json(Json const& j, std::filesystem::path const& base)
{
    std::string const kind = member(j, "kind").get<std::string>();
    SetKind set_kind;
    if (kind == "filtration")
        set_kind = SetKind::Sub;
    else if (kind == "cofiltration")
        set_kind = SetKind::Sup;
    else
        throw Error(ErrorKind::Parse, "kind must be \"filtration\" or \"cofiltration\"");

    PosetPtr const p = share(poset_from_json(resolve(member(j, "poset"), base)));
    ComplexPtr const k = share(complex_from_json(resolve(member(j, "complex"), base)));
    Json const& assignment = member(j, "assignment");
    if (!assignment.is_object())
        throw Error(ErrorKind::Parse, "\"assignment\" must map elements to simplex lists");
    bool const close = j.value("close", false);

    for (auto const& [key, value] : assignment.items())
        if (!p->find(key))
            throw Error(ErrorKind::UnknownElement, "assignment names '" + key + "'");

    std::vector<SimplexSet> sets;
    for (std::size_t a = 0; a < p->size(); ++a)
    {
        if (!assignment.contains(p->name(a)))
            throw Error(ErrorKind::IndexMismatch, "no assignment for '" + p->name(a) + "'");
        auto const members = simplex_positions(assignment.at(p->name(a)), *k);
        sets.push_back(close ? SimplexSet::closure(k, members, set_kind)
                             : SimplexSet::validate(k, members, set_kind));
    }
    return Filtration::validate(p, k, std::move(sets), set_kind);
}

Json filtration_to_json(Filtration const& f)
{
    SimplicialComplex const& k = *f.ambient();
    Json assignment = Json::object();
    for (std::size_t a = 0; a < f.index()->size(); ++a)
    {
        Json list = Json::array();
        for (std::size_t s : f.at(a).members())
        {
            Json t = Json::array();
            for (auto v : k.simplex(s))
                t.push_back(k.vertices()[v]);
            list.push_back(std::move(t));
        }
        assignment[f.index()->name(a)] = std::move(list);
    }
    return Json{{"kind", f.is_cofiltration() ? "cofiltration" : "filtration"},
                {"poset", poset_to_json(*f.index())},
                {"complex", complex_to_json(k)},
                {"assignment", std::move(assignment)}};
}

GaloisConnection connection_from_json(Json const& j, PosetPtr source, PosetPtr target)
{
    auto read_map = [](Json const& m, FinitePoset const& from, FinitePoset const& to, char const* label) {
        if (!m.is_object())
            throw Error(ErrorKind::Parse, std::string("\"") + label + "\" must be an object");
        std::vector<std::size_t> out(from.size());
        for (auto const& [key, value] : m.items())
            from.index_of(key);
        for (std::size_t a = 0; a < from.size(); ++a)
        {
            if (!m.contains(from.name(a)))
                throw Error(ErrorKind::IndexMismatch,
                            std::string(label) + " is partial: no image for '" + from.name(a) + "'");
            out[a] = to.index_of(id_string(m.at(from.name(a))));
        }
        return out;
    };
    auto f = read_map(member(j, "f"), *source, *target, "f");
    auto g = read_map(member(j, "g"), *target, *source, "g");
    return validate_galois(std::move(source), std::move(target), std::move(f), std::move(g));
}

PersistenceModule module_from_json(Json const& j, std::filesystem::path const& base)
{
    PosetPtr const p = share(poset_from_json(resolve(member(j, "poset"), base)));
    Field const field(j.value("field", std::uint32_t{2}));
    Json const& dims_json = member(j, "dims");
    std::vector<std::size_t> dims(p->size(), 0);
    for (auto const& [key, value] : dims_json.items())
    {
        if (!value.is_number_integer() || value.get<std::int64_t>() < 0)
            throw Error(ErrorKind::Parse, "dimension of '" + key + "' must be a nonnegative integer");
        dims[p->index_of(key)] = value.get<std::size_t>();
    }
    Json const maps = j.value("maps", Json::object());
    std::set<std::string> used;
    std::vector<Matrix> covers;
    for (auto [a, b] : p->hasse())
    {
        std::string const key = p->name(a) + "<" + p->name(b);
        if (maps.contains(key))
        {
            covers.push_back(matrix_from_json(maps.at(key), dims[b], dims[a], field, "map " + key));
            used.insert(key);
        }
        else if (dims[a] == 0 || dims[b] == 0)
            covers.emplace_back(dims[b], dims[a], field);
        else
            throw Error(ErrorKind::ShapeMismatch, "missing map for cover " + key);
    }
    for (auto const& [key, value] : maps.items())
        if (!used.count(key))
            throw Error(ErrorKind::ShapeMismatch, "\"" + key + "\" is not a cover of the poset");
    return PersistenceModule::validate(p, std::move(dims), std::move(covers), field);
}

Presentation presentation_from_json(Json const& j, std::filesystem::path const& base)
{
    PersistenceModule m = module_from_json(resolve(member(j, "module"), base), base);
    FinitePoset const& p = *m.index();
    std::vector<Generator> gens;
    for (Json const& g : array_member(j, "generators"))
        gens.push_back({p.index_of(id_string(member(g, "at"))), member(g, "count").get<std::size_t>()});
    FreeModule free(m.index(), std::move(gens), m.field());
    Json const components_json = j.value("components", Json::object());
    std::vector<Matrix> components;
    for (std::size_t a = 0; a < p.size(); ++a)
    {
        std::size_t const rows = m.dim(a), cols = free.module().dim(a);
        if (components_json.contains(p.name(a)))
            components.push_back(
                matrix_from_json(components_json.at(p.name(a)), rows, cols, m.field(), "component " + p.name(a)));
        else if (rows == 0 || cols == 0)
            components.emplace_back(rows, cols, m.field());
        else
            throw Error(ErrorKind::ShapeMismatch, "missing component at " + p.name(a));
    }
    return Presentation::validate(std::move(free), std::move(m), std::move(components));
}

Json interval_entries(IntervalPoset const& ip, IntFunction const& f, bool diagonal, char const* value_key)
{
    FinitePoset const& p = *ip.parent();
    Json out = Json::array();
    // Intervals are already enumerated in (lo, hi) position order.
    for (std::size_t i = 0; i < ip.size(); ++i)
    {
        if (ip.is_diagonal(i) != diagonal || f[i] == 0)
            continue;
        auto [lo, hi] = ip.interval(i);
        out.push_back(Json{{"birth", p.name(lo)}, {"death", p.name(hi)}, {value_key, f[i]}});
    }
    return out;
}

Json diagram_to_json(IntervalPoset const& ip, IntFunction const& dgm, std::string const& kind, int degree,
                     Field field)
{
    return Json{{"kind", kind},
                {"degree", degree},
                {"field", field.p()},
                {"entries", interval_entries(ip, dgm, false)},
                {"diagonal", interval_entries(ip, dgm, true)}};
}

Json diagram_to_json(Diagram const& d)
{
    return diagram_to_json(d.intervals, d.dgm, d.kind == DiagramKind::Homology ? "homology" : "cohomology",
                           d.degree, d.field);
}

Json manifold_to_json(ManifoldCheckReport const& r)
{
    return Json{{"dim", r.dim},
                {"pure", r.pure},
                {"closed_pseudomanifold", r.closed_pseudomanifold},
                {"connected", r.connected},
                {"orientable_over_field", r.orientable_over_field}};
}

Json duality_to_json(DualityReport const& r)
{
    Json degrees = Json::array();
    for (auto const& d : r.degrees)
    {
        Json w = nullptr;
        if (d.witness)
            w = *d.witness;
        degrees.push_back(Json{{"i", d.degree}, {"pass", d.pass}, {"witness", w}});
    }
    return Json{{"hypotheses", manifold_to_json(r.hypotheses)},
                {"advisory", r.advisory},
                {"pass", r.pass()},
                {"degrees", degrees}};
}

Json equivalence_to_json(EquivalenceReport const& r)
{
    Json degrees = Json::array();
    for (auto const& d : r.degrees)
        degrees.push_back(Json{{"degree", d.degree},
                               {"pass", d.pass()},
                               {"bd_vs_kernel", d.bd_vs_kernel},
                               {"boundary_vanishes", d.boundary_vanishes},
                               {"kernel_identity", d.kernel_identity},
                               {"presentation", d.presentation}});
    return Json{{"pass", r.pass()}, {"degrees", degrees}};
}

Json suite_to_json(SuiteReport const& r)
{
    return Json{{"check", r.name},
                {"seed", r.seed},
                {"trials", r.trials},
                {"failures", r.failures},
                {"pass", r.pass()},
                {"messages", r.messages}};
}

std::string dump(Json const& j)
{
    return j.dump(2) + "\n";
}

} // namespace gpd::io
