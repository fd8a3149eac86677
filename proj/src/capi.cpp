#include "gpd/gpd.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "gpd/checks.hpp"
#include "gpd/complexes.hpp"
#include "gpd/duality.hpp"
#include "gpd/error.hpp"
#include "gpd/io.hpp"
#include "gpd/modules.hpp"
#include "gpd/persistence.hpp"

struct gpd_poset
{
    gpd::PosetPtr poset;
};

struct gpd_complex
{
    gpd::ComplexPtr complex;
};

struct gpd_filtration
{
    gpd::Filtration filtration;
};

struct gpd_module
{
    gpd::PersistenceModule module;
    std::optional<gpd::Presentation> presentation;
};

namespace
{

using gpd::io::Json;
namespace fs = std::filesystem;

thread_local std::string last_error;
thread_local std::string last_kind;

void clear_error()
{
    last_error.clear();
    last_kind.clear();
}

gpd_status fail(gpd_status s, std::string kind, std::string message)
{
    last_kind = std::move(kind);
    last_error = std::move(message);
    return s;
}

template <typename Body>
gpd_status guarded(Body&& body)
{
    clear_error();
    try
    {
        return body();
    }
    catch (gpd::Error const& e)
    {
        gpd_status s = GPD_ERR_VALIDATION;
        if (e.kind() == gpd::ErrorKind::Io)
            s = GPD_ERR_IO;
        else if (e.kind() == gpd::ErrorKind::Internal)
            s = GPD_ERR_INTERNAL;
        return fail(s, std::string(gpd::to_string(e.kind())), e.what());
    }
    catch (nlohmann::json::exception const& e)
    {
        return fail(GPD_ERR_VALIDATION, "Parse", std::string("Parse: ") + e.what());
    }
    catch (std::bad_alloc const&)
    {
        return fail(GPD_ERR_INTERNAL, "Internal", "Internal: out of memory");
    }
    catch (std::exception const& e)
    {
        return fail(GPD_ERR_INTERNAL, "Internal", std::string("Internal: ") + e.what());
    }
}

gpd_status bad_argument(char const* what)
{
    return fail(GPD_ERR_ARGUMENT, "InvalidArgument", std::string("InvalidArgument: ") + what);
}

char* copy_string(std::string const& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

gpd_status emit(Json const& j, char** out)
{
    *out = copy_string(gpd::io::dump(j));
    return GPD_OK;
}

gpd_status emit_report(Json const& j, bool pass, char** out)
{
    emit(j, out);
    return pass ? GPD_OK : GPD_CHECK_FAILED;
}

fs::path parent_of(char const* path)
{
    return fs::path(path).parent_path();
}

Json parse_text(char const* json)
{
    try
    {
        return Json::parse(json);
    }
    catch (nlohmann::json::exception const& e)
    {
        throw gpd::Error(gpd::ErrorKind::Parse, e.what());
    }
}

gpd::GaloisConnection load_connection(char const* path, gpd::PosetPtr const& source)
{
    Json const j = gpd::io::load_json(path);
    if (!j.is_object() || !j.contains("target"))
        throw gpd::Error(gpd::ErrorKind::Parse, "connection file needs a \"target\" poset");
    gpd::PosetPtr target = gpd::share(gpd::io::poset_from_json(gpd::io::resolve(j.at("target"), parent_of(path))));
    return gpd::io::connection_from_json(j, source, std::move(target));
}

Json witness_json(gpd::IntervalPoset const& ip, std::optional<std::size_t> w)
{
    if (!w)
        return nullptr;
    return gpd::interval_label(ip, *w);
}

gpd_kind detect_json(Json const& j)
{
    if (!j.is_object())
        return GPD_KIND_UNKNOWN;
    if (j.contains("kind") && j.at("kind").is_string())
    {
        std::string const k = j.at("kind").get<std::string>();
        if (k == "filtration")
            return GPD_KIND_FILTRATION;
        if (k == "cofiltration")
            return GPD_KIND_COFILTRATION;
    }
    if (j.contains("generators") && j.contains("module"))
        return GPD_KIND_PRESENTATION;
    if (j.contains("dims"))
        return GPD_KIND_MODULE;
    if (j.contains("simplices") || j.contains("maximal"))
        return GPD_KIND_COMPLEX;
    if (j.contains("elements"))
        return GPD_KIND_POSET;
    return GPD_KIND_UNKNOWN;
}

gpd::ComplexPtr hexagon()
{
    static gpd::ComplexPtr const k = gpd::share(gpd::complexes::cycle(6));
    return k;
}

} // namespace

extern "C" {

const char* gpd_version(void)
{
    return "1.0.0";
}

const char* gpd_last_error(void)
{
    return last_error.c_str();
}

const char* gpd_last_error_kind(void)
{
    return last_kind.c_str();
}

void gpd_string_free(char* s)
{
    std::free(s);
}

gpd_status gpd_detect(const char* path, gpd_kind* out)
{
    if (!path || !out)
        return bad_argument("null path or output");
    return guarded([&] {
        *out = detect_json(gpd::io::load_json(path));
        return GPD_OK;
    });
}

gpd_status gpd_poset_load(const char* path, gpd_poset** out)
{
    if (!path || !out)
        return bad_argument("null path or output");
    return guarded([&] {
        *out = new gpd_poset{gpd::share(gpd::io::poset_from_json(gpd::io::load_json(path)))};
        return GPD_OK;
    });
}

gpd_status gpd_poset_parse(const char* json, gpd_poset** out)
{
    if (!json || !out)
        return bad_argument("null text or output");
    return guarded([&] {
        *out = new gpd_poset{gpd::share(gpd::io::poset_from_json(parse_text(json)))};
        return GPD_OK;
    });
}

void gpd_poset_free(gpd_poset* p)
{
    delete p;
}

size_t gpd_poset_size(const gpd_poset* p)
{
    return p ? p->poset->size() : 0;
}

gpd_status gpd_poset_hasse(const gpd_poset* p, int interval, int dot, char** out)
{
    if (!p || !out)
        return bad_argument("null poset or output");
    return guarded([&] {
        gpd::PosetPtr target = p->poset;
        if (interval)
            target = gpd::IntervalPoset(p->poset).poset();
        if (dot)
        {
            *out = copy_string(gpd::hasse_dot(*target, interval ? "intervals" : "hasse"));
            return GPD_OK;
        }
        return emit(gpd::io::poset_to_json(*target), out);
    });
}

gpd_status gpd_complex_load(const char* path, gpd_complex** out)
{
    if (!path || !out)
        return bad_argument("null path or output");
    return guarded([&] {
        *out = new gpd_complex{gpd::share(gpd::io::complex_from_json(gpd::io::load_json(path)))};
        return GPD_OK;
    });
}

gpd_status gpd_complex_parse(const char* json, gpd_complex** out)
{
    if (!json || !out)
        return bad_argument("null text or output");
    return guarded([&] {
        *out = new gpd_complex{gpd::share(gpd::io::complex_from_json(parse_text(json)))};
        return GPD_OK;
    });
}

gpd_status gpd_complex_builtin(const char* name, gpd_complex** out)
{
    if (!name || !out)
        return bad_argument("null name or output");
    return guarded([&] {
        std::string const n = name;
        gpd::SimplicialComplex k = [&] {
            if (n == "hexagon")
                return gpd::complexes::cycle(6);
            if (n == "sphere")
                return gpd::complexes::sphere(2);
            if (n == "torus")
                return gpd::complexes::csaszar_torus();
            if (n == "projective-plane")
                return gpd::complexes::projective_plane();
            if (n == "triangle")
                return gpd::complexes::simplex(2);
            throw gpd::Error(gpd::ErrorKind::Parse, "no built-in complex named '" + n + "'");
        }();
        *out = new gpd_complex{gpd::share(std::move(k))};
        return GPD_OK;
    });
}

void gpd_complex_free(gpd_complex* k)
{
    delete k;
}

int gpd_complex_dimension(const gpd_complex* k)
{
    return k ? k->complex->dimension() : -1;
}

size_t gpd_complex_count(const gpd_complex* k, int d)
{
    if (!k || d < 0 || d > k->complex->dimension())
        return 0;
    return k->complex->of_dimension(d).size();
}

int64_t gpd_complex_euler(const gpd_complex* k)
{
    return k ? k->complex->euler_characteristic() : 0;
}

gpd_status gpd_complex_subdivide(const gpd_complex* k, gpd_complex** out)
{
    if (!k || !out)
        return bad_argument("null complex or output");
    return guarded([&] {
        *out = new gpd_complex{gpd::share(gpd::barycentric_subdivision(*k->complex))};
        return GPD_OK;
    });
}

gpd_status gpd_complex_to_json(const gpd_complex* k, char** out)
{
    if (!k || !out)
        return bad_argument("null complex or output");
    return guarded([&] { return emit(gpd::io::complex_to_json(*k->complex), out); });
}

gpd_status gpd_filtration_load(const char* path, gpd_filtration** out)
{
    if (!path || !out)
        return bad_argument("null path or output");
    return guarded([&] {
        *out = new gpd_filtration{gpd::io::filtration_from_json(gpd::io::load_json(path), parent_of(path))};
        return GPD_OK;
    });
}

gpd_status gpd_filtration_parse(const char* json, const char* base_dir, gpd_filtration** out)
{
    if (!json || !out)
        return bad_argument("null text or output");
    return guarded([&] {
        fs::path const base = base_dir ? fs::path(base_dir) : fs::path();
        *out = new gpd_filtration{gpd::io::filtration_from_json(parse_text(json), base)};
        return GPD_OK;
    });
}

void gpd_filtration_free(gpd_filtration* f)
{
    delete f;
}

int gpd_filtration_is_cofiltration(const gpd_filtration* f)
{
    return f && f->filtration.is_cofiltration() ? 1 : 0;
}

int gpd_filtration_dimension(const gpd_filtration* f)
{
    return f ? f->filtration.ambient()->dimension() : -1;
}

gpd_status gpd_filtration_to_json(const gpd_filtration* f, char** out)
{
    if (!f || !out)
        return bad_argument("null filtration or output");
    return guarded([&] { return emit(gpd::io::filtration_to_json(f->filtration), out); });
}

gpd_status gpd_filtration_diagram(const gpd_filtration* f, int degree, uint32_t field, char** out)
{
    if (!f || !out)
        return bad_argument("null filtration or output");
    return guarded([&] {
        gpd::Field const fld(field);
        int const top = f->filtration.ambient()->dimension();
        if (degree >= 0)
        {
            if (degree > top)
                throw gpd::Error(gpd::ErrorKind::ShapeMismatch, "degree " + std::to_string(degree) +
                                                                    " exceeds the complex dimension " +
                                                                    std::to_string(top));
            return emit(gpd::io::diagram_to_json(gpd::diagram(f->filtration, degree, fld)), out);
        }
        Json all = Json::array();
        for (int d = 0; d <= top; ++d)
            all.push_back(gpd::io::diagram_to_json(gpd::diagram(f->filtration, d, fld)));
        return emit(Json{{"diagrams", all}}, out);
    });
}

gpd_status gpd_filtration_dualize(const gpd_filtration* f, gpd_filtration** out)
{
    if (!f || !out)
        return bad_argument("null filtration or output");
    return guarded([&] {
        *out = new gpd_filtration{gpd::dualize(f->filtration)};
        return GPD_OK;
    });
}

gpd_status gpd_filtration_check_equivalence(const gpd_filtration* f, uint32_t field, char** report)
{
    if (!f || !report)
        return bad_argument("null filtration or output");
    return guarded([&] {
        gpd::EquivalenceReport const r = gpd::check_equivalence(f->filtration, gpd::Field(field));
        return emit_report(gpd::io::equivalence_to_json(r), r.pass(), report);
    });
}

gpd_status gpd_filtration_check_duality(const gpd_filtration* f, uint32_t field, int advisory, char** report)
{
    if (!f || !report)
        return bad_argument("null filtration or output");
    return guarded([&] {
        int const m = f->filtration.ambient()->dimension();
        gpd::DualityReport const r = gpd::check_duality(f->filtration, m, gpd::Field(field), advisory != 0);
        return emit_report(gpd::io::duality_to_json(r), r.pass(), report);
    });
}

gpd_status gpd_filtration_check_functoriality(const gpd_filtration* f, const char* connection_path,
                                              uint32_t field, char** report)
{
    if (!f || !connection_path || !report)
        return bad_argument("null filtration, connection or output");
    return guarded([&] {
        gpd::GaloisConnection const c = load_connection(connection_path, f->filtration.index());
        gpd::FunctorialityReport const r = gpd::check_functoriality(f->filtration, c, gpd::Field(field));
        gpd::IntervalPoset const iq(c.target);
        Json j{{"pass", r.pass}};
        if (!r.pass)
        {
            j["degree"] = r.degree;
            j["identity"] = r.identity;
            j["witness"] = witness_json(iq, r.witness);
        }
        return emit_report(j, r.pass, report);
    });
}

gpd_status gpd_module_load(const char* path, gpd_module** out)
{
    if (!path || !out)
        return bad_argument("null path or output");
    return guarded([&] {
        Json const j = gpd::io::load_json(path);
        if (detect_json(j) == GPD_KIND_PRESENTATION)
        {
            gpd::Presentation p = gpd::io::presentation_from_json(j, parent_of(path));
            gpd::PersistenceModule m = p.target();
            *out = new gpd_module{std::move(m), std::move(p)};
        }
        else
            *out = new gpd_module{gpd::io::module_from_json(j, parent_of(path)), std::nullopt};
        return GPD_OK;
    });
}

void gpd_module_free(gpd_module* m)
{
    delete m;
}

int gpd_module_has_presentation(const gpd_module* m)
{
    return m && m->presentation ? 1 : 0;
}

gpd_status gpd_module_diagram(const gpd_module* m, char** out)
{
    if (!m || !out)
        return bad_argument("null module or output");
    return guarded([&] {
        gpd::IntervalPoset const ip(m->module.index());
        Json j;
        if (m->presentation)
        {
            gpd::IntFunction const bd = gpd::bd_presentation(*m->presentation, ip);
            j = gpd::io::diagram_to_json(ip, gpd::mobius_inversion(bd), "presentation", 0, m->module.field());
            j["bd"] = gpd::io::interval_entries(ip, bd, false, "value");
            j["bd_diagonal"] = gpd::io::interval_entries(ip, bd, true, "value");
        }
        else
        {
            gpd::IntFunction const ker = gpd::kernel_function(m->module, ip);
            j = gpd::io::diagram_to_json(ip, gpd::mobius_inversion(ker), "kernel", 0, m->module.field());
            j["kernel"] = gpd::io::interval_entries(ip, ker, false, "value");
        }
        j.erase("degree");
        return emit(j, out);
    });
}

gpd_status gpd_module_check_equivalence(const gpd_module* m, const char* connection_path, char** report)
{
    if (!m || !connection_path || !report)
        return bad_argument("null module, connection or output");
    return guarded([&] {
        gpd::GaloisConnection const c = load_connection(connection_path, m->module.index());
        gpd::ModuleEquivalenceReport const r = gpd::check_module_equivalence(m->module, c);
        gpd::IntervalPoset const iq(c.target);
        Json j{{"pass", r.pass}};
        if (!r.pass)
        {
            j["identity"] = r.identity;
            j["witness"] = witness_json(iq, r.witness);
        }
        return emit_report(j, r.pass, report);
    });
}

gpd_status gpd_check_suite(const char* name, size_t trials, uint64_t seed, uint32_t field, char** report)
{
    if (!name || !report)
        return bad_argument("null suite name or output");
    return guarded([&] {
        std::string const n = name;
        gpd::Field const fld(field);
        std::vector<gpd::SuiteReport> suites;
        if (n == "rota")
            suites.push_back(gpd::rota_suite(trials, seed));
        else if (n == "mobius")
            suites.push_back(gpd::mobius_roundtrip_suite(trials, seed));
        else if (n == "functoriality")
            suites.push_back(gpd::functoriality_suite(trials, seed, fld));
        else if (n == "equivalence")
        {
            suites.push_back(gpd::equivalence_suite(trials, seed, fld, gpd::SetKind::Sub));
            suites.push_back(gpd::equivalence_suite(trials, seed, fld, gpd::SetKind::Sup));
        }
        else if (n == "module-equivalence")
            suites.push_back(gpd::module_equivalence_suite(trials, seed, fld));
        else if (n == "presentation")
            suites.push_back(gpd::presentation_independence_suite(trials, seed, fld));
        else if (n == "duality")
        {
            suites.push_back(gpd::duality_suite(trials, seed, hexagon(), 1, fld, gpd::SetKind::Sup));
            suites.push_back(gpd::duality_suite(trials, seed, hexagon(), 1, fld, gpd::SetKind::Sub));
        }
        else
            return bad_argument(("unknown suite '" + n + "'").c_str());

        bool pass = true;
        Json list = Json::array();
        for (auto const& s : suites)
        {
            pass = pass && s.pass();
            list.push_back(gpd::io::suite_to_json(s));
        }
        Json const j{{"check", n}, {"seed", seed}, {"trials", trials}, {"field", fld.p()}, {"pass", pass},
                     {"suites", list}};
        return emit_report(j, pass, report);
    });
}

gpd_status gpd_check_duality_suite(const gpd_complex* k, size_t trials, uint64_t seed, uint32_t field,
                                   char** report)
{
    if (!k || !report)
        return bad_argument("null complex or output");
    return guarded([&] {
        gpd::Field const fld(field);
        int const m = k->complex->dimension();
        gpd::ManifoldCheckReport const h = gpd::manifold_report(*k->complex, m, fld);
        if (!h.all())
            throw gpd::Error(gpd::ErrorKind::HypothesisNotMet,
                             "complex is not a closed connected " + std::to_string(m) +
                                 "-pseudomanifold with top homology of rank 1 over F_" + std::to_string(fld.p()));
        gpd::SuiteReport const co = gpd::duality_suite(trials, seed, k->complex, m, fld, gpd::SetKind::Sup);
        gpd::SuiteReport const fi = gpd::duality_suite(trials, seed, k->complex, m, fld, gpd::SetKind::Sub);
        bool const pass = co.pass() && fi.pass();
        Json const j{{"check", "duality"},
                     {"seed", seed},
                     {"trials", trials},
                     {"field", fld.p()},
                     {"pass", pass},
                     {"hypotheses", gpd::io::manifold_to_json(h)},
                     {"suites", Json::array({gpd::io::suite_to_json(co), gpd::io::suite_to_json(fi)})}};
        return emit_report(j, pass, report);
    });
}

} // extern "C"
