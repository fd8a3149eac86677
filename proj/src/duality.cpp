#include "gpd/duality.hpp"

#include <numeric>

#include "gpd/error.hpp"

namespace gpd
{

ManifoldCheckReport manifold_report(SimplicialComplex const& k, int m, Field field)
{
    ManifoldCheckReport r;
    r.dim = m;
    if (m < 0 || k.size() == 0)
        return r;

    r.pure = k.dimension() == m;
    for (std::size_t s = 0; s < k.size() && r.pure; ++s)
        if (k.dim_of(s) < m && k.cofacets(s).empty())
            r.pure = false;

    r.closed_pseudomanifold = r.pure;
    if (m == 0)
        r.closed_pseudomanifold = r.pure;
    else
        for (std::size_t s : k.of_dimension(m - 1))
            if (k.cofacets(s).size() != 2)
            {
                r.closed_pseudomanifold = false;
                break;
            }

    // union-find over the 1-skeleton
    std::vector<std::size_t> parent(k.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    for (std::size_t e : k.of_dimension(1))
        parent[root(k.simplex(e)[0])] = root(k.simplex(e)[1]);
    std::size_t components = 0;
    for (std::size_t v = 0; v < parent.size(); ++v)
        if (root(v) == v)
            ++components;
    r.connected = components == 1;

    auto const betti = betti_numbers(k, field);
    r.orientable_over_field = static_cast<int>(betti.size()) > m && betti[static_cast<std::size_t>(m)] == 1;
    return r;
}

Filtration dualize(Filtration const& f, ComplexPtr subdivision)
{
    SimplicialComplex const& l = *subdivision;
    if (l.vertex_count() != f.ambient()->size())
        throw Error(ErrorKind::AmbientMismatch, "subdivision does not match the filtration's complex");
    SetKind const kind = f.kind() == SetKind::Sup ? SetKind::Sub : SetKind::Sup;
    std::vector<SimplexSet> assignment;
    for (SimplexSet const& s : f.assignment())
    {
        // A chain is a sorted tuple of K-simplex positions; its first entry
        // is its smallest simplex.
        std::vector<std::size_t> members;
        for (std::size_t c = 0; c < l.size(); ++c)
            if (s.contains(l.simplex(c).front()))
                members.push_back(c);
        assignment.push_back(SimplexSet::validate(subdivision, std::move(members), kind));
    }
    return Filtration::validate(f.index(), std::move(subdivision), std::move(assignment), kind);
}

Filtration dualize(Filtration const& f)
{
    return dualize(f, share(barycentric_subdivision(*f.ambient())));
}

bool DualityReport::pass() const noexcept
{
    for (auto const& d : degrees)
        if (!d.pass)
            return false;
    return true;
}

DualityReport check_duality(Filtration const& f, int m, Field field, bool advisory)
{
    DualityReport report;
    report.advisory = advisory;
    report.hypotheses = manifold_report(*f.ambient(), m, field);
    if (!advisory && !report.hypotheses.all())
        throw Error(ErrorKind::HypothesisNotMet,
                    "complex fails the manifold checks for m=" + std::to_string(m) + " over F_" +
                        std::to_string(field.p()));

    Filtration const g = dualize(f);
    IntervalPoset const ip(f.index());
    for (int i = 0; i <= m; ++i)
    {
        int const fd = f.is_cofiltration() ? i : m - i;
        int const gd = f.is_cofiltration() ? m - i : i;
        IntFunction const lhs = mobius_inversion(birth_death(f, fd, field, ip));
        IntFunction const rhs = mobius_inversion(birth_death(g, gd, field, ip));
        auto const w = first_off_diagonal_difference(lhs, rhs, ip);
        report.degrees.push_back({i, !w.has_value(), w});
    }
    return report;
}

} // namespace gpd
