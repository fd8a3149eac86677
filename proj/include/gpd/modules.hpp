#ifndef GPD_MODULES_HPP
#define GPD_MODULES_HPP

#include <optional>
#include <string>
#include <vector>

#include "gpd/linalg.hpp"
#include "gpd/persistence.hpp"
#include "gpd/poset.hpp"

namespace gpd
{

/// A functor P -> Vect given by dimensions and one matrix per cover a ⋖ b
/// (dims(b) x dims(a)). Composites along every chain of covers agree.
class PersistenceModule
{
public:
    /// `cover_maps` is aligned with index->hasse(). Throws ShapeMismatch or
    /// NotFunctorial.
    static PersistenceModule validate(PosetPtr index, std::vector<std::size_t> dims,
                                      std::vector<Matrix> cover_maps, Field field);

    PosetPtr const& index() const noexcept { return index_; }
    Field const& field() const noexcept { return field_; }
    std::size_t dim(std::size_t a) const { return dims_.at(a); }
    std::vector<std::size_t> const& dims() const noexcept { return dims_; }
    std::vector<Matrix> const& cover_maps() const noexcept { return covers_; }

    /// M(a <= b). Throws NotMonotone when a is not below b.
    Matrix const& map(std::size_t a, std::size_t b) const;

private:
    PersistenceModule() = default;

    PosetPtr index_;
    Field field_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> covers_;
    std::vector<std::optional<Matrix>> composite_; // n*n, set where a <= b
};

struct Generator
{
    std::size_t birth;
    std::size_t count;
};

/// A direct sum of F^{↑a}. Generators are expanded into slots (one per
/// unit of multiplicity, in listed order); F(b) has the slots born at or
/// below b as its basis and every structure map is a coordinate inclusion.
class FreeModule
{
public:
    FreeModule(PosetPtr index, std::vector<Generator> generators, Field field);

    std::vector<Generator> const& generators() const noexcept { return generators_; }
    PersistenceModule const& module() const noexcept { return module_; }

    std::size_t slot_count() const noexcept { return slot_birth_.size(); }
    std::size_t slot_birth(std::size_t s) const { return slot_birth_.at(s); }

    /// Slots spanning F(b), ascending.
    std::vector<std::size_t> const& slots_at(std::size_t b) const { return slots_at_.at(b); }

private:
    std::vector<Generator> generators_;
    std::vector<std::size_t> slot_birth_;
    std::vector<std::vector<std::size_t>> slots_at_;
    PersistenceModule module_;
};

/// A surjective natural transformation phi : F => M from a free module.
class Presentation
{
public:
    /// Throws ShapeMismatch, NotNatural, or NotSurjective.
    static Presentation validate(FreeModule free, PersistenceModule target, std::vector<Matrix> components);

    FreeModule const& free() const noexcept { return free_; }
    PersistenceModule const& target() const noexcept { return target_; }
    Matrix const& component(std::size_t a) const { return components_.at(a); }
    std::vector<Matrix> const& components() const noexcept { return components_; }

private:
    Presentation(FreeModule free, PersistenceModule target, std::vector<Matrix> components);

    FreeModule free_;
    PersistenceModule target_;
    std::vector<Matrix> components_;
};

/// Persistent homology module of a filtration, or the compactly supported
/// persistent cohomology module of a cofiltration. Classes are represented
/// by cycles completing a pivot basis of the boundary space.
PersistenceModule homology_module(Filtration const& f, int degree, Field field);
PersistenceModule cohomology_module(Filtration const& f, int degree, Field field);

/// ker M[a,b] = dim ker M(a <= b).
IntFunction kernel_function(PersistenceModule const& m, IntervalPoset const& ip);

/// The Möbius inversion of the kernel function.
IntFunction module_diagram(PersistenceModule const& m, IntervalPoset const& ip);

/// F(a) = ⊕_{b <= a} F^{dims(b)}, with the block of b mapped by M(b <= a).
Presentation canonical_presentation(PersistenceModule const& m);

/// `base` plus extra generators born at `at`, sent to the columns of
/// `images` (dims(at) x k). Any images keep the map natural and surjective.
Presentation add_generators(Presentation const& base, std::size_t at, Matrix const& images);

/// BDφ[a,b] = dim(F(a) ∩ ker φ_b).
IntFunction bd_presentation(Presentation const& p, IntervalPoset const& ip);

/// N = M ∘ g over Q, for f : P <-> Q : g with M indexed by P.
PersistenceModule pushforward_module(PersistenceModule const& m, GaloisConnection const& c);

/// ψ = φ ∘ g : F ∘ g => M ∘ g, with F ∘ g re-expressed as a free module
/// whose generators are born at f(birth).
Presentation restrict_presentation(Presentation const& p, GaloisConnection const& c);

struct ModuleEquivalenceReport
{
    bool pass = true;
    std::string identity;               // which identity failed
    std::optional<std::size_t> witness; // interval of Int Q
};

/// For N = M ∘ g, checks
///   BD(φ ∘ g) = (Int g)# BDφ exactly,
///   ∂BDψ ~ (Int f)# ∂BDφ for canonical presentations φ of M and ψ of N,
///   ∂ker N ~ (Int f)# ∂ker M.
ModuleEquivalenceReport check_module_equivalence(PersistenceModule const& m, GaloisConnection const& c);

} // namespace gpd

#endif // GPD_MODULES_HPP
