#ifndef GPD_SIMPLICIAL_HPP
#define GPD_SIMPLICIAL_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gpd/linalg.hpp"

namespace gpd
{

/// A finite abstract simplicial complex.
///
/// Simplices are strictly increasing tuples of vertex positions. They are
/// kept in canonical order (by dimension, then lexicographically), and a
/// simplex is referred to by its position in that order everywhere else.
class SimplicialComplex
{
public:
    using Simplex = std::vector<std::uint32_t>;

    /// Validates face-closure. Throws NotFaceClosed or UnknownVertex.
    static SimplicialComplex from_simplices(std::vector<std::string> vertices,
                                            std::vector<Simplex> simplices);

    /// Adds every face of the given simplices.
    static SimplicialComplex from_maximal(std::vector<std::string> vertices,
                                          std::vector<Simplex> const& maximal);

    std::size_t size() const noexcept { return simplices_.size(); }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::vector<std::string> const& vertices() const noexcept { return vertices_; }

    /// -1 for the empty complex.
    int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }

    Simplex const& simplex(std::size_t i) const { return simplices_.at(i); }
    std::vector<Simplex> const& simplices() const noexcept { return simplices_; }
    int dim_of(std::size_t i) const { return static_cast<int>(simplices_.at(i).size()) - 1; }

    /// Positions of the d-simplices (a contiguous ascending range).
    std::vector<std::size_t> const& of_dimension(int d) const;

    std::optional<std::size_t> find(Simplex const& s) const;

    /// Codimension-one faces with their orientation sign: removing vertex i
    /// contributes (-1)^i.
    std::vector<std::pair<std::size_t, int>> const& facets(std::size_t i) const
    {
        return facets_.at(i);
    }

    std::vector<std::size_t> const& cofacets(std::size_t i) const { return cofacets_.at(i); }

    bool is_face(std::size_t sigma, std::size_t tau) const;

    /// Vertex ids joined with '.', e.g. "0.1.2".
    std::string label(std::size_t i) const;

    std::vector<std::size_t> f_vector() const;
    std::int64_t euler_characteristic() const;

private:
    SimplicialComplex() = default;
    void index();

    std::vector<std::string> vertices_;
    std::vector<Simplex> simplices_;
    std::map<Simplex, std::size_t> lookup_;
    std::vector<std::vector<std::size_t>> by_dim_;
    std::vector<std::vector<std::pair<std::size_t, int>>> facets_;
    std::vector<std::vector<std::size_t>> cofacets_;
};

using ComplexPtr = std::shared_ptr<SimplicialComplex const>;

inline ComplexPtr share(SimplicialComplex complex)
{
    return std::make_shared<SimplicialComplex const>(std::move(complex));
}

enum class SetKind
{
    Sub, ///< closed under faces
    Sup, ///< closed under cofaces
};

/// A subcomplex or supcomplex of an ambient complex.
class SimplexSet
{
public:
    /// Throws NotSubcomplex / NotSupcomplex with a witness pair.
    static SimplexSet validate(ComplexPtr ambient, std::vector<std::size_t> members, SetKind kind);

    static SimplexSet full(ComplexPtr ambient, SetKind kind);
    static SimplexSet empty(ComplexPtr ambient, SetKind kind);

    /// Smallest set of the given kind containing the generators.
    static SimplexSet closure(ComplexPtr ambient, std::span<std::size_t const> generators, SetKind kind);

    ComplexPtr const& ambient() const noexcept { return ambient_; }
    SetKind kind() const noexcept { return kind_; }
    std::vector<std::size_t> const& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(std::size_t simplex) const { return mask_.at(simplex) != 0; }

    /// Members of dimension d in canonical order.
    std::vector<std::size_t> of_dimension(int d) const;

    bool subset_of(SimplexSet const& other) const;

    /// K \ A, with the opposite closure kind.
    SimplexSet complement() const;

    friend bool operator==(SimplexSet const& a, SimplexSet const& b)
    {
        return a.kind_ == b.kind_ && a.members_ == b.members_;
    }

private:
    SimplexSet() = default;

    ComplexPtr ambient_;
    std::vector<std::size_t> members_;
    std::vector<std::uint8_t> mask_;
    SetKind kind_ = SetKind::Sub;
};

inline SimplexSet validate_simplex_set(ComplexPtr ambient, std::vector<std::size_t> members, SetKind kind)
{
    return SimplexSet::validate(std::move(ambient), std::move(members), kind);
}

enum class Grading
{
    Chain,   ///< differential(d) : C_d -> C_{d-1}
    Cochain, ///< differential(d) : C^d -> C^{d+1}
};

/// A (co)chain complex whose degree-d basis is a list of d-simplices.
class GradedChainComplex
{
public:
    GradedChainComplex(Field field, Grading grading,
                       std::vector<std::vector<std::size_t>> basis,
                       std::vector<Matrix> differential);

    Field const& field() const noexcept { return field_; }
    Grading grading() const noexcept { return grading_; }

    /// Highest degree carried (the ambient dimension); -1 if none.
    int top_degree() const noexcept { return static_cast<int>(basis_.size()) - 1; }

    /// Simplex positions spanning degree d; empty outside [0, top_degree].
    std::vector<std::size_t> const& basis(int d) const;
    std::size_t rank_in(int d) const { return basis(d).size(); }

    /// Outgoing differential of degree d.
    Matrix differential(int d) const;

    Subspace cycles(int d) const;
    Subspace boundaries(int d) const;
    std::size_t homology_dim(int d) const;

    /// Composition of consecutive differentials is zero in every degree.
    bool is_complex() const;

private:
    Field field_;
    Grading grading_;
    std::vector<std::vector<std::size_t>> basis_;
    std::vector<Matrix> differential_;
};

/// Simplicial chain complex of a subcomplex. Throws NotSubcomplex.
GradedChainComplex chain_complex(SimplexSet const& sub, Field field);

/// Chain complex on the simplices of any set, where the boundary drops
/// faces that are not members. For a supcomplex A of K this is the
/// quotient C(K) / C(K \ A).
GradedChainComplex relative_chain_complex(SimplexSet const& set, Field field);

/// Compactly supported cellular cochains of a supcomplex: the transpose of
/// relative_chain_complex. Throws NotSupcomplex.
GradedChainComplex compact_cochain_complex(SimplexSet const& sup, Field field);

/// For A ⊆ B of equal kind and degree d, returns
///   Sub: (C_d A -> C_d B inclusion, its transpose C^d B -> C^d A)
///   Sup: (i_d : C_d B -> C_d A, j^d : C^d A -> C^d B).
/// Throws NotNested.
std::pair<Matrix, Matrix> inclusion_matrices(SimplexSet const& a, SimplexSet const& b, int d, Field field);

/// Positions of A's d-simplices inside B's d-simplex list (A ⊆ B).
std::vector<std::size_t> coordinate_positions(SimplexSet const& a, SimplexSet const& b, int d);

/// Order complex of the face poset. Vertex i of the result is simplex i of
/// `k` and carries its label as id.
SimplicialComplex barycentric_subdivision(SimplicialComplex const& k);

std::vector<std::size_t> betti_numbers(SimplicialComplex const& k, Field field);

} // namespace gpd

#endif // GPD_SIMPLICIAL_HPP
