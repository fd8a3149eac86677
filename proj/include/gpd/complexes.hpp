#ifndef GPD_COMPLEXES_HPP
#define GPD_COMPLEXES_HPP

#include <cstddef>

#include "gpd/simplicial.hpp"

namespace gpd::complexes
{

/// The full n-simplex on vertices "0".."n".
SimplicialComplex simplex(int n);

/// Boundary of the (n+1)-simplex, a triangulated n-sphere.
SimplicialComplex sphere(int n);

/// Cycle graph on n >= 3 vertices.
SimplicialComplex cycle(std::size_t n);

/// Seven-vertex torus.
SimplicialComplex csaszar_torus();

/// Six-vertex real projective plane.
SimplicialComplex projective_plane();

} // namespace gpd::complexes

#endif // GPD_COMPLEXES_HPP
