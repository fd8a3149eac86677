#include "gpd/complexes.hpp"

#include <string>

#include "gpd/error.hpp"
#include "gpd/random.hpp"

namespace gpd::complexes
{

namespace
{

std::vector<std::string> numbered(std::size_t n)
{
    std::vector<std::string> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = std::to_string(i);
    return out;
}

} // namespace

SimplicialComplex simplex(int n)
{
    if (n < 0)
        throw Error(ErrorKind::ShapeMismatch, "simplex dimension must be nonnegative");
    return random::skeleton(static_cast<std::size_t>(n + 1), n);
}

SimplicialComplex sphere(int n)
{
    if (n < 0)
        throw Error(ErrorKind::ShapeMismatch, "sphere dimension must be nonnegative");
    return random::skeleton(static_cast<std::size_t>(n + 2), n);
}

SimplicialComplex cycle(std::size_t n)
{
    if (n < 3)
        throw Error(ErrorKind::ShapeMismatch, "a cycle needs at least 3 vertices");
    std::vector<SimplicialComplex::Simplex> edges;
    for (std::uint32_t i = 0; i < n; ++i)
        edges.push_back({i, static_cast<std::uint32_t>((i + 1) % n)});
    return SimplicialComplex::from_maximal(numbered(n), edges);
}

SimplicialComplex csaszar_torus()
{
    std::vector<SimplicialComplex::Simplex> triangles;
    for (std::uint32_t i = 0; i < 7; ++i)
    {
        triangles.push_back({i, (i + 1) % 7, (i + 3) % 7});
        triangles.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialComplex::from_maximal(numbered(7), triangles);
}

SimplicialComplex projective_plane()
{
    std::vector<SimplicialComplex::Simplex> const triangles = {
        {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
        {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5},
    };
    return SimplicialComplex::from_maximal(numbered(6), triangles);
}

} // namespace gpd::complexes
