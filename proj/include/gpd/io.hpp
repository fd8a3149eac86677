#ifndef GPD_IO_HPP
#define GPD_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "gpd/checks.hpp"
#include "gpd/duality.hpp"
#include "gpd/modules.hpp"
#include "gpd/persistence.hpp"
#include "gpd/poset.hpp"
#include "gpd/simplicial.hpp"

namespace gpd::io
{

using Json = nlohmann::ordered_json;

/// Throws Io when unreadable, Parse when not JSON.
Json load_json(std::filesystem::path const& path);
void save_text(std::filesystem::path const& path, std::string const& text);

/// {"elements": [...], "covers": [["a","b"], ...]}
FinitePoset poset_from_json(Json const& j);
Json poset_to_json(FinitePoset const& p);

/// {"vertices": [...], "simplices": [[...], ...]} or {"maximal": [[...], ...]}.
/// Simplex entries name vertices by id; numbers and strings both match.
SimplicialComplex complex_from_json(Json const& j);
Json complex_to_json(SimplicialComplex const& k);

/// Nested objects may be given inline or as a path relative to `base`.
Json resolve(Json const& j, std::filesystem::path const& base);

/// {"kind": "filtration"|"cofiltration", "poset", "complex", "assignment"}.
/// An assignment entry lists simplices; each is closed to the declared kind
/// only if "close": true is set, otherwise it is validated as given.
Filtration filtration_from_json(Json const& j, std::filesystem::path const& base = {});
Json filtration_to_json(Filtration const& f);

/// {"f": {"a": "x", ...}, "g": {"x": "a", ...}}; partial maps are rejected.
GaloisConnection connection_from_json(Json const& j, PosetPtr source, PosetPtr target);

/// {"poset", "field", "dims": {...}, "maps": {"a<b": [[...]], ...}}.
/// Maps with a zero-dimensional end may be omitted.
PersistenceModule module_from_json(Json const& j, std::filesystem::path const& base = {});

/// {"module": <module>, "generators": [{"at": "b", "count": 2}, ...],
///  "components": {"b": [[...]], ...}} with φ_a of shape dims_M(a) x dims_F(a).
Presentation presentation_from_json(Json const& j, std::filesystem::path const& base = {});

/// Sparse listing of a function on Int P, sorted by (birth, death) position.
Json interval_entries(IntervalPoset const& ip, IntFunction const& f, bool diagonal,
                     char const* value_key = "multiplicity");

Json diagram_to_json(Diagram const& d);
Json diagram_to_json(IntervalPoset const& ip, IntFunction const& dgm, std::string const& kind, int degree, Field field);

Json manifold_to_json(ManifoldCheckReport const& r);
Json duality_to_json(DualityReport const& r);
Json equivalence_to_json(EquivalenceReport const& r);
Json suite_to_json(SuiteReport const& r);

std::string dump(Json const& j);

} // namespace gpd::io

#endif // GPD_IO_HPP
