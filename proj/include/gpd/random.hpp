#ifndef GPD_RANDOM_HPP
#define GPD_RANDOM_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gpd/linalg.hpp"
#include "gpd/modules.hpp"
#include "gpd/persistence.hpp"
#include "gpd/poset.hpp"
#include "gpd/simplicial.hpp"

namespace gpd::random
{

using Rng = std::mt19937_64;

/// Elements "p0".."p{n-1}"; each pair i < j of a random permutation is
/// related with probability `density`. With `bounded`, a bottom and a top
/// are adjoined (counted in n when n >= 2).
FinitePoset poset(Rng& rng, std::size_t n, double density, bool bounded);

FinitePoset chain(std::size_t n);

/// Every Galois connection P <-> Q, by enumerating monotone maps f that
/// admit a right adjoint.
std::vector<GaloisConnection> all_connections(PosetPtr const& source, PosetPtr const& target);

/// Uniform among all_connections, or nullopt when there are none.
std::optional<GaloisConnection> connection(Rng& rng, PosetPtr const& source, PosetPtr const& target);

/// Draws posets of size 1..max_source and 1..max_target until a connection
/// exists between them.
GaloisConnection connection_between_random_posets(Rng& rng, std::size_t max_source, std::size_t max_target);

/// Same, with a fixed source poset.
GaloisConnection connection_from(Rng& rng, PosetPtr const& source, std::size_t max_target);

IntFunction function(Rng& rng, PosetPtr domain, std::int64_t lo, std::int64_t hi);

Matrix matrix(Rng& rng, std::size_t rows, std::size_t cols, Field field);

/// Monotone assignment: F(a) is the closure of the union of F(b), b < a,
/// and a few random simplices.
Filtration filtration(Rng& rng, PosetPtr index, ComplexPtr ambient, SetKind kind, double density);

/// A cokernel of a random map between free modules, so deaths occur.
/// Every dimension is at most max_dim.
PersistenceModule module(Rng& rng, PosetPtr index, std::size_t max_dim, Field field);

/// The d-skeleton of the full simplex on n vertices ("0".."n-1").
SimplicialComplex skeleton(std::size_t n, int d);

} // namespace gpd::random

#endif // GPD_RANDOM_HPP
