#ifndef GPD_DUALITY_HPP
#define GPD_DUALITY_HPP

#include <optional>
#include <vector>

#include "gpd/linalg.hpp"
#include "gpd/persistence.hpp"
#include "gpd/simplicial.hpp"

namespace gpd
{

/// Computable stand-ins for "triangulates a compact F-orientable m-manifold".
/// These under-approximate manifold recognition: links are not checked.
struct ManifoldCheckReport
{
    int dim = 0;
    bool pure = false;
    bool closed_pseudomanifold = false;
    bool connected = false;
    bool orientable_over_field = false; // dim H_m = 1

    bool all() const noexcept
    {
        return pure && closed_pseudomanifold && connected && orientable_over_field;
    }
};

ManifoldCheckReport manifold_report(SimplicialComplex const& k, int m, Field field);

/// The dual of a (co)filtration over K: a (co)filtration over sd K where
/// G(a) is the set of chains whose smallest simplex lies in F(a). A
/// cofiltration dualizes to a filtration and vice versa.
Filtration dualize(Filtration const& f);

/// Same as dualize, reusing an already computed subdivision of f.ambient().
Filtration dualize(Filtration const& f, ComplexPtr subdivision);

inline Filtration dualize_cofiltration(Filtration const& f) { return dualize(f); }
inline Filtration dualize_filtration(Filtration const& f) { return dualize(f); }

struct DegreeCheck
{
    int degree = 0;                       // i
    bool pass = true;
    std::optional<std::size_t> witness;   // interval position
};

struct DualityReport
{
    ManifoldCheckReport hypotheses;
    bool advisory = false;
    std::vector<DegreeCheck> degrees;

    bool pass() const noexcept;
};

/// Cofiltration F: compares ∂BD^i F with ∂BD_{m-i} G.
/// Filtration F:   compares ∂BD_{m-i} F with ∂BD^i G.
/// Off-diagonal only, i = 0..m. Unless `advisory`, throws HypothesisNotMet
/// when the manifold flags fail.
DualityReport check_duality(Filtration const& f, int m, Field field, bool advisory = false);

} // namespace gpd

#endif // GPD_DUALITY_HPP
