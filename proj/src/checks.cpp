#include "gpd/checks.hpp"

#include <sstream>

#include "gpd/error.hpp"
#include "gpd/random.hpp"

namespace gpd
{

namespace
{

constexpr std::size_t kMaxMessages = 5;

std::size_t pick_size(random::Rng& rng, std::size_t max_size)
{
    return std::uniform_int_distribution<std::size_t>(1, max_size)(rng);
}

PosetPtr random_index(random::Rng& rng, std::size_t max_size)
{
    bool const bounded = std::bernoulli_distribution(0.5)(rng);
    return share(random::poset(rng, pick_size(rng, max_size), 0.4, bounded));
}

ComplexPtr two_skeleton_of_four_simplex()
{
    static ComplexPtr const k = share(random::skeleton(5, 2));
    return k;
}

std::string trial_tag(std::size_t t)
{
    return "trial " + std::to_string(t);
}

template <typename Body>
SuiteReport run_suite(std::string name, std::size_t trials, std::uint64_t seed, Body&& body)
{
    SuiteReport report;
    report.name = std::move(name);
    report.seed = seed;
    report.trials = trials;
    random::Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t)
    {
        try
        {
            if (auto failure = body(rng, t))
                report.fail(trial_tag(t) + ": " + *failure);
        }
        catch (Error const& e)
        {
            report.fail(trial_tag(t) + ": " + e.what());
        }
    }
    return report;
}

} // namespace

void SuiteReport::fail(std::string message)
{
    ++failures;
    if (messages.size() < kMaxMessages)
        messages.push_back(std::move(message));
}

EquivalenceReport check_equivalence(Filtration const& f, Field field)
{
    EquivalenceReport report;
    IntervalPoset const ip(f.index());
    for (int d = 0; d <= f.ambient()->dimension(); ++d)
    {
        EquivalenceDegree row;
        row.degree = d;
        IntFunction const bd = birth_death(f, d, field, ip);
        IntFunction const dgm = mobius_inversion(bd);
        PersistenceModule const h = homology_module(f, d, field);
        IntFunction const ker = kernel_function(h, ip);
        IntFunction const dker = mobius_inversion(ker);
        IntFunction const boundary = boundary_function(f, d, field, ip);

        if (auto w = first_off_diagonal_difference(dgm, dker, ip))
        {
            row.bd_vs_kernel = false;
            row.witness = w;
        }
        IntFunction const dboundary = mobius_inversion(boundary);
        if (auto w = first_off_diagonal_difference(dboundary, IntFunction::zero(ip.poset()), ip))
        {
            row.boundary_vanishes = false;
            row.witness = row.witness ? row.witness : w;
        }
        if (!(ker == bd - boundary))
            row.kernel_identity = false;

        IntFunction const dphi = mobius_inversion(bd_presentation(canonical_presentation(h), ip));
        if (auto w = first_off_diagonal_difference(dphi, dgm, ip))
        {
            row.presentation = false;
            row.witness = row.witness ? row.witness : w;
        }
        report.degrees.push_back(row);
    }
    return report;
}

SuiteReport rota_suite(std::size_t trials, std::uint64_t seed, std::size_t max_size)
{
    return run_suite("rota", trials, seed, [&](random::Rng& rng, std::size_t) -> std::optional<std::string> {
        GaloisConnection const c = random::connection_between_random_posets(rng, max_size, max_size);
        IntFunction const m = random::function(rng, c.source, -9, 9);
        RotaReport const r = check_rota(c, m);
        if (r.pass)
            return std::nullopt;
        return "d(g# m) != f#(dm) at " + c.target->name(*r.witness);
    });
}

SuiteReport mobius_roundtrip_suite(std::size_t trials, std::uint64_t seed, std::size_t max_size)
{
    return run_suite("mobius-roundtrip", trials, seed,
                     [&](random::Rng& rng, std::size_t) -> std::optional<std::string> {
                         PosetPtr const p = random_index(rng, max_size);
                         IntFunction const m = random::function(rng, p, -9, 9);
                         IntFunction const dm = mobius_inversion(m);
                         for (std::size_t b = 0; b < p->size(); ++b)
                         {
                             std::int64_t s = 0;
                             for (std::size_t a = 0; a < p->size(); ++a)
                                 if (p->leq(a, b))
                                     s += dm[a];
                             if (s != m[b])
                                 return "down-set sum differs at " + p->name(b);
                         }
                         return std::nullopt;
                     });
}

SuiteReport functoriality_suite(std::size_t trials, std::uint64_t seed, Field field, std::size_t max_size)
{
    ComplexPtr const k = two_skeleton_of_four_simplex();
    return run_suite("functoriality", trials, seed,
                     [&](random::Rng& rng, std::size_t t) -> std::optional<std::string> {
                         SetKind const kind = t % 2 == 0 ? SetKind::Sub : SetKind::Sup;
                         GaloisConnection const c = random::connection_between_random_posets(rng, max_size, max_size);
                         Filtration const f = random::filtration(rng, c.source, k, kind, 0.12);
                         FunctorialityReport const r = check_functoriality(f, c, field);
                         if (r.pass)
                             return std::nullopt;
                         return r.identity + " fails in degree " + std::to_string(r.degree);
                     });
}

SuiteReport equivalence_suite(std::size_t trials, std::uint64_t seed, Field field, SetKind kind,
                              std::size_t max_size)
{
    ComplexPtr const k = two_skeleton_of_four_simplex();
    std::string const name = kind == SetKind::Sub ? "equivalence-filtration" : "equivalence-cofiltration";
    return run_suite(name, trials, seed, [&](random::Rng& rng, std::size_t) -> std::optional<std::string> {
        Filtration const f = random::filtration(rng, random_index(rng, max_size), k, kind, 0.12);
        EquivalenceReport const r = check_equivalence(f, field);
        for (auto const& d : r.degrees)
            if (!d.pass())
            {
                std::ostringstream os;
                os << "degree " << d.degree << ": bd~ker=" << d.bd_vs_kernel
                   << " dB~0=" << d.boundary_vanishes << " ker=BD-B=" << d.kernel_identity
                   << " presentation=" << d.presentation;
                return os.str();
            }
        return std::nullopt;
    });
}

SuiteReport module_equivalence_suite(std::size_t trials, std::uint64_t seed, Field field, std::size_t max_size,
                                     std::size_t max_dim)
{
    return run_suite("module-equivalence", trials, seed,
                     [&](random::Rng& rng, std::size_t) -> std::optional<std::string> {
                         GaloisConnection const c = random::connection_between_random_posets(rng, max_size, max_size);
                         PersistenceModule const m = random::module(rng, c.source, max_dim, field);
                         ModuleEquivalenceReport const r = check_module_equivalence(m, c);
                         if (r.pass)
                             return std::nullopt;
                         return r.identity + " fails";
                     });
}

SuiteReport presentation_independence_suite(std::size_t trials, std::uint64_t seed, Field field,
                                            std::size_t max_size, std::size_t max_dim)
{
    return run_suite("presentation-independence", trials, seed,
                     [&](random::Rng& rng, std::size_t) -> std::optional<std::string> {
                         PosetPtr const p = random_index(rng, max_size);
                         PersistenceModule const m = random::module(rng, p, max_dim, field);
                         IntervalPoset const ip(p);
                         Presentation const canonical = canonical_presentation(m);
                         Presentation redundant = canonical;
                         for (std::size_t k = std::uniform_int_distribution<std::size_t>(1, 3)(rng); k > 0; --k)
                         {
                             std::size_t const at = std::uniform_int_distribution<std::size_t>(0, p->size() - 1)(rng);
                             std::size_t const extra = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
                             redundant = add_generators(redundant, at, random::matrix(rng, m.dim(at), extra, field));
                         }
                         IntFunction const lhs = mobius_inversion(bd_presentation(canonical, ip));
                         IntFunction const rhs = mobius_inversion(bd_presentation(redundant, ip));
                         if (auto w = first_off_diagonal_difference(lhs, rhs, ip))
                             return "diagrams differ at " + interval_label(ip, *w);
                         return std::nullopt;
                     });
}

SuiteReport duality_suite(std::size_t trials, std::uint64_t seed, ComplexPtr complex, int m, Field field,
                          SetKind kind, std::size_t max_size)
{
    std::string const name = kind == SetKind::Sub ? "duality-filtration" : "duality-cofiltration";
    double const density = 2.0 / static_cast<double>(std::max<std::size_t>(complex->size(), 4));
    return run_suite(name, trials, seed, [&](random::Rng& rng, std::size_t) -> std::optional<std::string> {
        Filtration const f = random::filtration(rng, random_index(rng, max_size), complex, kind, density);
        DualityReport const r = check_duality(f, m, field, true);
        for (auto const& d : r.degrees)
            if (!d.pass)
                return "degree " + std::to_string(d.degree) + " differs";
        return std::nullopt;
    });
}

} // namespace gpd
