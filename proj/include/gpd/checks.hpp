#ifndef GPD_CHECKS_HPP
#define GPD_CHECKS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpd/duality.hpp"
#include "gpd/linalg.hpp"
#include "gpd/modules.hpp"
#include "gpd/persistence.hpp"

namespace gpd
{

/// Two routes to the diagram of a (co)filtration in one degree.
struct EquivalenceDegree
{
    int degree = 0;
    bool bd_vs_kernel = true;       // ∂BD F ~ ∂ker H|F|
    bool boundary_vanishes = true;  // ∂B F ~ 0
    bool kernel_identity = true;    // ker H|F| = BD F - B F exactly
    bool presentation = true;       // ∂BDφ ~ ∂BD F, φ canonical for H|F|
    std::optional<std::size_t> witness;

    bool pass() const noexcept { return bd_vs_kernel && boundary_vanishes && kernel_identity && presentation; }
};

struct EquivalenceReport
{
    std::vector<EquivalenceDegree> degrees;

    bool pass() const noexcept
    {
        for (auto const& d : degrees)
            if (!d.pass())
                return false;
        return true;
    }
};

EquivalenceReport check_equivalence(Filtration const& f, Field field);

/// Outcome of a seeded batch of randomized checks.
struct SuiteReport
{
    std::string name;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::vector<std::string> messages; // first few failures

    bool pass() const noexcept { return failures == 0; }
    void fail(std::string message);
};

/// d(g# m) = f#(dm) on random connections between posets of size <= max_size.
SuiteReport rota_suite(std::size_t trials, std::uint64_t seed, std::size_t max_size = 6);

/// sum_{a <= b} dm(a) = m(b) on random posets of size <= max_size.
SuiteReport mobius_roundtrip_suite(std::size_t trials, std::uint64_t seed, std::size_t max_size = 8);

/// Random (co)filtrations of the 2-skeleton of the 4-simplex, pulled back
/// along random connections; alternates filtrations and cofiltrations.
SuiteReport functoriality_suite(std::size_t trials, std::uint64_t seed, Field field, std::size_t max_size = 4);

/// check_equivalence on random (co)filtrations of the 2-skeleton of the
/// 4-simplex indexed by posets of size <= max_size.
SuiteReport equivalence_suite(std::size_t trials, std::uint64_t seed, Field field, SetKind kind,
                              std::size_t max_size = 5);

/// check_module_equivalence on random modules and connections.
SuiteReport module_equivalence_suite(std::size_t trials, std::uint64_t seed, Field field,
                                     std::size_t max_size = 4, std::size_t max_dim = 3);

/// Canonical vs. canonical-plus-redundant presentations of random modules.
SuiteReport presentation_independence_suite(std::size_t trials, std::uint64_t seed, Field field,
                                            std::size_t max_size = 4, std::size_t max_dim = 3);

/// check_duality on random (co)filtrations of a fixed manifold complex.
SuiteReport duality_suite(std::size_t trials, std::uint64_t seed, ComplexPtr complex, int m, Field field,
                          SetKind kind, std::size_t max_size = 4);

} // namespace gpd

#endif // GPD_CHECKS_HPP
