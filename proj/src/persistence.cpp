#include "gpd/persistence.hpp"

#include "gpd/error.hpp"

namespace gpd
{

Filtration Filtration::validate(PosetPtr index, ComplexPtr ambient,
                                std::vector<SimplexSet> assignment, SetKind kind)
{
    if (assignment.size() != index->size())
        throw Error(ErrorKind::IndexMismatch, "assignment is not total on the index poset");
    for (std::size_t a = 0; a < assignment.size(); ++a)
    {
        SimplexSet const& s = assignment[a];
        if (s.ambient()->size() != ambient->size() || s.ambient()->simplices() != ambient->simplices())
            throw Error(ErrorKind::AmbientMismatch, "F(" + index->name(a) + ") lives in another complex");
        if (s.kind() != kind)
            throw Error(kind == SetKind::Sub ? ErrorKind::NotSubcomplex : ErrorKind::NotSupcomplex,
                        "F(" + index->name(a) + ") has the wrong closure kind");
    }
    for (std::size_t a = 0; a < index->size(); ++a)
        for (std::size_t b = 0; b < index->size(); ++b)
        {
            if (!index->less(a, b))
                continue;
            for (std::size_t s : assignment[a].members())
                if (!assignment[b].contains(s))
                    throw Error(ErrorKind::NotMonotone,
                                index->name(a) + " <= " + index->name(b) + " but simplex " +
                                    ambient->label(s) + " of F(" + index->name(a) + ") is missing from F(" +
                                    index->name(b) + ")");
        }
    Filtration f;
    f.index_ = std::move(index);
    f.ambient_ = std::move(ambient);
    f.assignment_ = std::move(assignment);
    f.kind_ = kind;
    return f;
}

Filtration validate_filtration(PosetPtr index, ComplexPtr ambient, std::vector<SimplexSet> assignment)
{
    return Filtration::validate(std::move(index), std::move(ambient), std::move(assignment), SetKind::Sub);
}

Filtration validate_cofiltration(PosetPtr index, ComplexPtr ambient, std::vector<SimplexSet> assignment)
{
    return Filtration::validate(std::move(index), std::move(ambient), std::move(assignment), SetKind::Sup);
}

std::vector<CycleSpaces> cycle_spaces(Filtration const& f, int degree, Field field)
{
    std::vector<CycleSpaces> out;
    out.reserve(f.index()->size());
    for (SimplexSet const& s : f.assignment())
    {
        GradedChainComplex const c =
            f.is_cofiltration() ? compact_cochain_complex(s, field) : chain_complex(s, field);
        if (degree < 0 || degree > c.top_degree())
            out.push_back({zero_subspace(0, field), zero_subspace(0, field)});
        else
            out.push_back({c.cycles(degree), c.boundaries(degree)});
    }
    return out;
}

namespace
{

IntFunction bd_generic(Filtration const& f, int degree, Field field, IntervalPoset const& ip)
{
    if (ip.parent()->size() != f.index()->size())
        throw Error(ErrorKind::IndexMismatch, "interval poset is not built on the filtration's index");
    auto const spaces = cycle_spaces(f, degree, field);
    std::vector<std::int64_t> values(ip.size(), 0);
    for (std::size_t i = 0; i < ip.size(); ++i)
    {
        auto [a, b] = ip.interval(i);
        Subspace const& born = spaces[a].cycles;
        Subspace const& dead = spaces[b].boundaries;
        if (born.dim() == 0 || dead.dim() == 0)
            continue;
        // Both inclusions (chains of a subcomplex, extension by zero of
        // compactly supported cochains) are coordinate injections.
        auto const pos = coordinate_positions(f.at(a), f.at(b), degree);
        values[i] = static_cast<std::int64_t>(intersection_dim(embed(born, pos, dead.ambient_dim), dead));
    }
    return IntFunction(ip.poset(), std::move(values));
}

} // namespace

IntFunction bd_homology(Filtration const& f, int degree, Field field, IntervalPoset const& ip)
{
    if (f.is_cofiltration())
        throw Error(ErrorKind::NotSubcomplex, "bd_homology expects a filtration");
    return bd_generic(f, degree, field, ip);
}

IntFunction bd_cohomology(Filtration const& f, int degree, Field field, IntervalPoset const& ip)
{
    if (!f.is_cofiltration())
        throw Error(ErrorKind::NotSupcomplex, "bd_cohomology expects a cofiltration");
    return bd_generic(f, degree, field, ip);
}

IntFunction birth_death(Filtration const& f, int degree, Field field, IntervalPoset const& ip)
{
    return bd_generic(f, degree, field, ip);
}

IntFunction boundary_function(Filtration const& f, int degree, Field field, IntervalPoset const& ip)
{
    auto const spaces = cycle_spaces(f, degree, field);
    std::vector<std::int64_t> values(ip.size());
    for (std::size_t i = 0; i < ip.size(); ++i)
        values[i] = static_cast<std::int64_t>(spaces[ip.interval(i).lo].boundaries.dim());
    return IntFunction(ip.poset(), std::move(values));
}

Diagram diagram(Filtration const& f, int degree, Field field)
{
    IntervalPoset ip(f.index());
    IntFunction bd = birth_death(f, degree, field, ip);
    IntFunction dgm = mobius_inversion(bd);
    return Diagram{std::move(ip), std::move(bd), std::move(dgm), degree, field,
                   f.is_cofiltration() ? DiagramKind::Cohomology : DiagramKind::Homology};
}

Filtration pullback_filtration(Filtration const& f, GaloisConnection const& c)
{
    if (c.source->size() != f.index()->size() || !(*c.source == *f.index()))
        throw Error(ErrorKind::IndexMismatch, "connection source is not the filtration's index poset");
    std::vector<SimplexSet> assignment;
    assignment.reserve(c.target->size());
    for (std::size_t x = 0; x < c.target->size(); ++x)
        assignment.push_back(f.at(c.g[x]));
    return Filtration::validate(c.target, f.ambient(), std::move(assignment), f.kind());
}

FunctorialityReport check_functoriality(Filtration const& f, GaloisConnection const& c, Field field)
{
    Filtration const g = pullback_filtration(f, c);
    IntervalPoset const ip(c.source);
    IntervalPoset const iq(c.target);
    GaloisConnection const ic = int_of_galois(c, ip, iq);

    FunctorialityReport report;
    for (int d = 0; d <= f.ambient()->dimension(); ++d)
    {
        IntFunction const bd_f = birth_death(f, d, field, ip);
        IntFunction const bd_g = birth_death(g, d, field, iq);
        IntFunction const pulled = pullback(bd_f, iq.poset(), ic.g);
        for (std::size_t i = 0; i < iq.size(); ++i)
            if (bd_g[i] != pulled[i])
                return FunctorialityReport{false, d, "birth-death pullback", i};

        IntFunction const dgm_g = mobius_inversion(bd_g);
        IntFunction const pushed = pushforward(mobius_inversion(bd_f), iq.poset(), ic.f);
        for (std::size_t i = 0; i < iq.size(); ++i)
            if (dgm_g[i] != pushed[i])
                return FunctorialityReport{false, d, "diagram pushforward", i};
    }
    return report;
}

} // namespace gpd
