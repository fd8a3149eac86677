#include <doctest.h>

#include "gpd/checks.hpp"
#include "gpd/complexes.hpp"
#include "gpd/error.hpp"
#include "gpd/modules.hpp"
#include "gpd/random.hpp"

using namespace gpd;

namespace
{

Field const f2(2);

PosetPtr diamond()
{
    return share(FinitePoset::from_covers({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}}));
}

std::vector<Matrix> zero_covers(PosetPtr const& p, std::vector<std::size_t> const& dims)
{
    std::vector<Matrix> out;
    for (auto [a, b] : p->hasse())
        out.emplace_back(dims[b], dims[a], f2);
    return out;
}

// dims a:0, b:2, c:1, d:0 on the diamond.
PersistenceModule figure_module()
{
    auto p = diamond();
    std::vector<std::size_t> dims = {0, 2, 1, 0};
    return PersistenceModule::validate(p, dims, zero_covers(p, dims), f2);
}

// Two generators at b and one at c, each sent to a basis vector.
Presentation figure_presentation()
{
    auto m = figure_module();
    FreeModule free(m.index(), {{1, 2}, {2, 1}}, f2);
    std::vector<Matrix> comps = {Matrix(0, 0, f2), Matrix::identity(2, f2), Matrix::identity(1, f2), Matrix(0, 3, f2)};
    return Presentation::validate(std::move(free), std::move(m), std::move(comps));
}

PersistenceModule constant_module(PosetPtr const& p, std::size_t dim)
{
    std::vector<Matrix> covers(p->hasse().size(), Matrix::identity(dim, f2));
    return PersistenceModule::validate(p, std::vector<std::size_t>(p->size(), dim), covers, f2);
}

std::int64_t at(IntFunction const& f, IntervalPoset const& ip, char const* lo, char const* hi)
{
    auto const& p = *ip.parent();
    return f[ip.index(p.index_of(lo), p.index_of(hi))];
}

ErrorKind kind_of(auto&& f)
{
    try
    {
        f();
    }
    catch (Error const& e)
    {
        return e.kind();
    }
    return ErrorKind::Internal;
}

} // namespace

TEST_CASE("module validation")
{
    SUBCASE("constant rank one")
    {
        auto m = constant_module(diamond(), 1);
        CHECK(m.map(0, 3) == Matrix::identity(1, f2));
    }
    SUBCASE("figure module")
    {
        auto m = figure_module();
        CHECK(m.dims() == std::vector<std::size_t>{0, 2, 1, 0});
        CHECK(m.map(1, 3).rows() == 0);
        CHECK(m.map(1, 3).cols() == 2);
    }
    SUBCASE("parallel composites disagree")
    {
        auto p = diamond();
        std::vector<Matrix> covers(4, Matrix::identity(1, f2));
        covers[3] = Matrix(1, 1, f2); // c < d sent to zero
        CHECK(kind_of([&] { PersistenceModule::validate(p, {1, 1, 1, 1}, covers, f2); }) == ErrorKind::NotFunctorial);
    }
    SUBCASE("wrong shape")
    {
        auto p = diamond();
        std::vector<Matrix> covers(4, Matrix::identity(2, f2));
        CHECK(kind_of([&] { PersistenceModule::validate(p, {1, 1, 1, 1}, covers, f2); }) == ErrorKind::ShapeMismatch);
    }
    SUBCASE("map along a non-relation")
    {
        auto m = figure_module();
        CHECK(kind_of([&] { m.map(1, 2); }) == ErrorKind::NotMonotone);
    }
}

TEST_CASE("homology modules")
{
    auto two = share(FinitePoset::from_covers({"a", "b"}, {{"a", "b"}}));
    SUBCASE("open edge cofiltration in degree one")
    {
        auto k = share(complexes::simplex(1));
        std::vector<std::size_t> edge = {*k->find({0, 1})};
        auto f = Filtration::validate(two, k, {SimplexSet::closure(k, edge, SetKind::Sup), SimplexSet::full(k, SetKind::Sup)},
                                      SetKind::Sup);
        auto h = cohomology_module(f, 1, f2);
        CHECK(h.dims() == std::vector<std::size_t>{1, 0});
        CHECK(h.map(0, 1).is_zero());
    }
    SUBCASE("hollow to full triangle in degree one")
    {
        auto k = share(complexes::simplex(2));
        std::vector<std::size_t> edges = k->of_dimension(1);
        auto f = Filtration::validate(two, k, {SimplexSet::closure(k, edges, SetKind::Sub), SimplexSet::full(k, SetKind::Sub)},
                                      SetKind::Sub);
        CHECK(homology_module(f, 1, f2).dims() == std::vector<std::size_t>{1, 0});
        CHECK(homology_module(f, 0, f2).dims() == std::vector<std::size_t>{1, 1});
    }
    SUBCASE("constant filtration has identity maps")
    {
        auto k = share(complexes::csaszar_torus());
        auto f = Filtration::validate(two, k, {SimplexSet::full(k, SetKind::Sub), SimplexSet::full(k, SetKind::Sub)},
                                      SetKind::Sub);
        auto h = homology_module(f, 1, f2);
        CHECK(h.dims() == std::vector<std::size_t>{2, 2});
        CHECK(h.map(0, 1) == Matrix::identity(2, f2));
    }
}

TEST_CASE("kernel functions")
{
    SUBCASE("figure module")
    {
        auto m = figure_module();
        IntervalPoset ip(m.index());
        auto ker = kernel_function(m, ip);
        CHECK(at(ker, ip, "b", "d") == 2);
        CHECK(at(ker, ip, "c", "d") == 1);
        std::int64_t total = 0;
        for (auto v : ker.values())
            total += v;
        CHECK(total == 3);

        auto dgm = module_diagram(m, ip);
        CHECK(at(dgm, ip, "b", "d") == 2);
        CHECK(at(dgm, ip, "c", "d") == 1);
        for (std::size_t i = 0; i < ip.size(); ++i)
            if (!ip.is_diagonal(i))
                CHECK(dgm[i] == ker[i]);
    }
    SUBCASE("diagonal is zero")
    {
        random::Rng rng(53);
        for (int t = 0; t < 20; ++t)
        {
            auto p = share(random::poset(rng, 1 + t % 5, 0.4, false));
            auto m = random::module(rng, p, 3, f2);
            IntervalPoset ip(p);
            auto ker = kernel_function(m, ip);
            for (std::size_t i = 0; i < ip.size(); ++i)
                if (ip.is_diagonal(i))
                    CHECK(ker[i] == 0);
        }
    }
    SUBCASE("injective maps")
    {
        auto m = constant_module(diamond(), 2);
        IntervalPoset ip(m.index());
        CHECK(kernel_function(m, ip) == IntFunction::zero(ip.poset()));
    }
    SUBCASE("zero module")
    {
        auto p = diamond();
        std::vector<std::size_t> dims(4, 0);
        auto m = PersistenceModule::validate(p, dims, zero_covers(p, dims), f2);
        IntervalPoset ip(p);
        CHECK(module_diagram(m, ip) == IntFunction::zero(ip.poset()));
    }
    SUBCASE("free module never dies")
    {
        FreeModule free(diamond(), {{0, 1}}, f2);
        IntervalPoset ip(diamond());
        CHECK(kernel_function(free.module(), ip) == IntFunction::zero(ip.poset()));
        CHECK(module_diagram(free.module(), ip) == IntFunction::zero(ip.poset()));
    }
}

TEST_CASE("presentations")
{
    SUBCASE("singleton")
    {
        auto p = share(FinitePoset::from_covers({"a"}, {}));
        auto m = constant_module(p, 2);
        auto pres = canonical_presentation(m);
        CHECK(pres.free().module().dim(0) == 2);
        CHECK(pres.component(0) == Matrix::identity(2, f2));
    }
    SUBCASE("canonical presentation of the figure module")
    {
        auto pres = canonical_presentation(figure_module());
        CHECK(pres.free().module().dims() == std::vector<std::size_t>{0, 2, 1, 3});
        for (std::size_t a = 0; a < 4; ++a)
            CHECK(rank(pres.component(a)) == pres.target().dim(a));
    }
    SUBCASE("figure presentation birth-death function")
    {
        auto pres = figure_presentation();
        IntervalPoset ip(pres.target().index());
        auto bd = bd_presentation(pres, ip);
        CHECK(at(bd, ip, "b", "d") == 2);
        CHECK(at(bd, ip, "c", "d") == 1);
        CHECK(at(bd, ip, "d", "d") == 3);
        std::int64_t total = 0;
        for (auto v : bd.values())
            total += v;
        CHECK(total == 6);

        auto dgm = mobius_inversion(bd);
        CHECK(at(dgm, ip, "b", "d") == 2);
        CHECK(at(dgm, ip, "c", "d") == 1);
        CHECK(at(dgm, ip, "d", "d") == 0);
        std::int64_t abs_total = 0;
        for (auto v : dgm.values())
            abs_total += v < 0 ? -v : v;
        CHECK(abs_total == 3);
    }
    SUBCASE("canonical and figure presentations agree off the diagonal")
    {
        auto m = figure_module();
        IntervalPoset ip(m.index());
        auto lhs = mobius_inversion(bd_presentation(canonical_presentation(m), ip));
        auto rhs = mobius_inversion(bd_presentation(figure_presentation(), ip));
        CHECK(equivalent(lhs, rhs, ip));
        CHECK(equivalent(lhs, module_diagram(m, ip), ip));
    }
    SUBCASE("zero module kills everything")
    {
        auto p = diamond();
        std::vector<std::size_t> dims(4, 0);
        auto m = PersistenceModule::validate(p, dims, zero_covers(p, dims), f2);
        FreeModule free(p, {{0, 1}, {2, 2}}, f2);
        std::vector<Matrix> comps;
        for (std::size_t a = 0; a < 4; ++a)
            comps.emplace_back(0, free.module().dim(a), f2);
        auto pres = Presentation::validate(free, m, comps);
        IntervalPoset ip(p);
        auto bd = bd_presentation(pres, ip);
        for (std::size_t i = 0; i < ip.size(); ++i)
            CHECK(bd[i] == static_cast<std::int64_t>(free.module().dim(ip.interval(i).lo)));
    }
    SUBCASE("not surjective")
    {
        auto m = figure_module();
        FreeModule free(m.index(), {{1, 1}, {2, 1}}, f2);
        std::vector<Matrix> comps = {Matrix(0, 0, f2), Matrix::from_ints(2, 1, {1, 0}, f2), Matrix::identity(1, f2),
                                     Matrix(0, 2, f2)};
        CHECK(kind_of([&] { Presentation::validate(free, m, comps); }) == ErrorKind::NotSurjective);
    }
    SUBCASE("not natural")
    {
        auto p = share(FinitePoset::from_covers({"a", "b"}, {{"a", "b"}}));
        // M(a < b) = 0 while the free module carries its generator upward.
        auto m = PersistenceModule::validate(p, {1, 1}, {Matrix(1, 1, f2)}, f2);
        FreeModule free(p, {{0, 1}}, f2);
        std::vector<Matrix> comps = {Matrix::identity(1, f2), Matrix::identity(1, f2)};
        CHECK(kind_of([&] { Presentation::validate(free, m, comps); }) == ErrorKind::NotNatural);
    }
    SUBCASE("redundant generators")
    {
        random::Rng rng(59);
        for (int t = 0; t < 30; ++t)
        {
            auto p = share(random::poset(rng, 1 + t % 4, 0.4, t % 2 == 0));
            auto m = random::module(rng, p, 3, f2);
            IntervalPoset ip(p);
            auto base = canonical_presentation(m);
            std::size_t const where = t % p->size();
            auto more = add_generators(base, where, random::matrix(rng, m.dim(where), 2, f2));
            CHECK(more.free().slot_count() == base.free().slot_count() + 2);
            auto lhs = mobius_inversion(bd_presentation(base, ip));
            auto rhs = mobius_inversion(bd_presentation(more, ip));
            CHECK(equivalent(lhs, rhs, ip));
        }
    }
}

TEST_CASE("modules along galois connections")
{
    SUBCASE("identity")
    {
        auto m = figure_module();
        auto n = pushforward_module(m, identity_connection(m.index()));
        CHECK(n.dims() == m.dims());
        CHECK(check_module_equivalence(m, identity_connection(m.index())).pass);
    }
    SUBCASE("constant f")
    {
        auto m = constant_module(diamond(), 2);
        auto z = share(FinitePoset::from_covers({"z"}, {}));
        auto c = validate_galois(m.index(), z, {0, 0, 0, 0}, {3});
        auto n = pushforward_module(m, c);
        CHECK(n.dims() == std::vector<std::size_t>{2});
    }
    SUBCASE("figure module onto a point and a chain")
    {
        auto m = figure_module();
        auto z = share(FinitePoset::from_covers({"z"}, {}));
        CHECK(check_module_equivalence(m, validate_galois(m.index(), z, {0, 0, 0, 0}, {3})).pass);
        auto two = share(FinitePoset::from_covers({"s", "t"}, {{"s", "t"}}));
        auto c = validate_galois(m.index(), two, {0, 1, 1, 1}, {0, 3});
        auto r = check_module_equivalence(m, c);
        CHECK_MESSAGE(r.pass, r.identity);
    }
    SUBCASE("restricted presentation is a presentation of N")
    {
        auto pres = figure_presentation();
        auto two = share(FinitePoset::from_covers({"s", "t"}, {{"s", "t"}}));
        auto c = validate_galois(pres.target().index(), two, {0, 1, 1, 1}, {0, 3});
        auto psi = restrict_presentation(pres, c);
        CHECK(psi.target().dims() == pushforward_module(pres.target(), c).dims());
    }
    SUBCASE("random modules and connections")
    {
        random::Rng rng(61);
        for (int t = 0; t < 40; ++t)
        {
            auto c = random::connection_between_random_posets(rng, 4, 4);
            auto m = random::module(rng, c.source, 3, Field(t % 2 ? 3 : 2));
            auto r = check_module_equivalence(m, c);
            CHECK_MESSAGE(r.pass, r.identity);
        }
    }
}

TEST_CASE("random modules have deaths")
{
    random::Rng rng(67);
    std::size_t deaths = 0;
    for (int t = 0; t < 40; ++t)
    {
        auto p = share(random::poset(rng, 4, 0.5, true));
        auto m = random::module(rng, p, 3, f2);
        for (auto d : m.dims())
            CHECK(d <= 3);
        IntervalPoset ip(p);
        auto ker = kernel_function(m, ip);
        for (auto v : ker.values())
            deaths += v > 0;
    }
    CHECK(deaths > 0);
}

TEST_CASE("equivalence of the two routes")
{
    auto k = share(random::skeleton(5, 2));
    random::Rng rng(71);
    std::size_t nonzero = 0;
    for (int t = 0; t < 30; ++t)
    {
        auto p = share(random::poset(rng, 1 + t % 5, 0.4, t % 2 == 0));
        auto f = random::filtration(rng, p, k, t % 2 ? SetKind::Sup : SetKind::Sub, 0.12);
        auto r = check_equivalence(f, Field(t % 3 == 0 ? 3 : 2));
        for (auto const& d : r.degrees)
        {
            CHECK(d.bd_vs_kernel);
            CHECK(d.boundary_vanishes);
            CHECK(d.kernel_identity);
            CHECK(d.presentation);
        }
        IntervalPoset ip(p);
        for (int d = 0; d <= 2; ++d)
        {
            auto dgm = diagram(f, d, Field(2)).dgm;
            for (std::size_t i = 0; i < ip.size(); ++i)
                nonzero += !ip.is_diagonal(i) && dgm[i] != 0;
        }
    }
    CHECK(nonzero > 10);
}
