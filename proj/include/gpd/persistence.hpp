#ifndef GPD_PERSISTENCE_HPP
#define GPD_PERSISTENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "gpd/linalg.hpp"
#include "gpd/poset.hpp"
#include "gpd/simplicial.hpp"

namespace gpd
{

/// A monotone map from a finite poset into the subcomplexes (kind Sub,
/// a filtration) or supcomplexes (kind Sup, a cofiltration) of one complex.
class Filtration
{
public:
    /// Throws IndexMismatch, NotMonotone (with a witness a <= b and a
    /// simplex of F(a) missing from F(b)), or a closure error.
    static Filtration validate(PosetPtr index, ComplexPtr ambient,
                               std::vector<SimplexSet> assignment, SetKind kind);

    PosetPtr const& index() const noexcept { return index_; }
    ComplexPtr const& ambient() const noexcept { return ambient_; }
    SetKind kind() const noexcept { return kind_; }
    bool is_cofiltration() const noexcept { return kind_ == SetKind::Sup; }

    SimplexSet const& at(std::size_t a) const { return assignment_.at(a); }
    std::vector<SimplexSet> const& assignment() const noexcept { return assignment_; }

private:
    Filtration() = default;

    PosetPtr index_;
    ComplexPtr ambient_;
    std::vector<SimplexSet> assignment_;
    SetKind kind_ = SetKind::Sub;
};

Filtration validate_filtration(PosetPtr index, ComplexPtr ambient, std::vector<SimplexSet> assignment);
Filtration validate_cofiltration(PosetPtr index, ComplexPtr ambient, std::vector<SimplexSet> assignment);

/// (Co)cycle and (co)boundary spaces of F(a) in degree d, in the
/// coordinates of F(a)'s d-simplices.
struct CycleSpaces
{
    Subspace cycles;
    Subspace boundaries;
};

/// One entry per poset element. Filtrations use the simplicial chain
/// complex; cofiltrations the compactly supported cochain complex.
std::vector<CycleSpaces> cycle_spaces(Filtration const& f, int degree, Field field);

/// BD_d F[a,b] = dim(Z_d F(a) ∩ B_d F(b)), computed in C_d F(b).
IntFunction bd_homology(Filtration const& f, int degree, Field field, IntervalPoset const& ip);

/// BD^d F[a,b] = dim(Z^d F(a) ∩ B^d F(b)), Z^d F(a) pushed in by extension by zero.
IntFunction bd_cohomology(Filtration const& f, int degree, Field field, IntervalPoset const& ip);

/// Dispatches on the filtration kind.
IntFunction birth_death(Filtration const& f, int degree, Field field, IntervalPoset const& ip);

/// [a,b] -> dim of the (co)boundary space at a.
IntFunction boundary_function(Filtration const& f, int degree, Field field, IntervalPoset const& ip);

enum class DiagramKind
{
    Homology,
    Cohomology,
};

struct Diagram
{
    IntervalPoset intervals;
    IntFunction bd;
    IntFunction dgm;
    int degree;
    Field field;
    DiagramKind kind;
};

Diagram diagram(Filtration const& f, int degree, Field field);

/// G = F ∘ g for f : P <-> Q : g where F is indexed by P.
Filtration pullback_filtration(Filtration const& f, GaloisConnection const& c);

struct FunctorialityReport
{
    bool pass = true;
    int degree = -1;                     // first failing degree
    std::string identity;                // which identity failed
    std::optional<std::size_t> witness;  // interval of Int Q
};

/// Checks BD G = (Int g)# BD F and dBD G = (Int f)# dBD F in every degree.
FunctorialityReport check_functoriality(Filtration const& f, GaloisConnection const& c, Field field);

} // namespace gpd

#endif // GPD_PERSISTENCE_HPP
