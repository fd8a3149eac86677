#include "gpd/random.hpp"

#include <algorithm>
#include <numeric>

#include "gpd/error.hpp"

namespace gpd::random
{

namespace
{

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p)
{
    return std::bernoulli_distribution(p)(rng);
}

} // namespace

FinitePoset poset(Rng& rng, std::size_t n, double density, bool bounded)
{
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i)
        names[i] = "p" + std::to_string(i);

    std::vector<std::pair<std::size_t, std::size_t>> covers;
    std::size_t first = 0, last = n;
    if (bounded && n >= 2)
    {
        first = 1;
        last = n - 1;
        for (std::size_t i = 1; i < n; ++i)
            covers.emplace_back(0, i);
        for (std::size_t i = 0; i + 1 < n; ++i)
            covers.emplace_back(i, n - 1);
    }
    std::vector<std::size_t> order(last - first);
    std::iota(order.begin(), order.end(), first);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (coin(rng, density))
                covers.emplace_back(order[i], order[j]);
    return FinitePoset::from_index_covers(std::move(names), covers);
}

FinitePoset chain(std::size_t n)
{
    std::vector<std::string> names(n);
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t i = 0; i < n; ++i)
    {
        names[i] = "t" + std::to_string(i);
        if (i > 0)
            covers.emplace_back(i - 1, i);
    }
    return FinitePoset::from_index_covers(std::move(names), covers);
}

std::vector<GaloisConnection> all_connections(PosetPtr const& source, PosetPtr const& target)
{
    FinitePoset const& p = *source;
    FinitePoset const& q = *target;
    std::vector<GaloisConnection> out;
    if (p.size() == 0 || q.size() == 0)
        return out;

    auto const order = p.linear_extension();
    std::vector<std::size_t> f(p.size(), 0);
    std::vector<bool> assigned(p.size(), false);

    auto finish = [&]() {
        std::vector<std::size_t> g(q.size());
        for (std::size_t x = 0; x < q.size(); ++x)
        {
            std::optional<std::size_t> best;
            for (std::size_t a = 0; a < p.size(); ++a)
            {
                if (!q.leq(f[a], x))
                    continue;
                if (!best || p.leq(*best, a))
                    best = a;
            }
            if (!best)
                return;
            for (std::size_t a = 0; a < p.size(); ++a)
                if (q.leq(f[a], x) && !p.leq(a, *best))
                    return;
            g[x] = *best;
        }
        out.push_back(validate_galois(source, target, f, std::move(g)));
    };

    auto place = [&](auto&& self, std::size_t k) -> void {
        if (k == order.size())
        {
            finish();
            return;
        }
        std::size_t const a = order[k];
        for (std::size_t x = 0; x < q.size(); ++x)
        {
            bool ok = true;
            for (std::size_t b = 0; b < p.size() && ok; ++b)
            {
                if (!assigned[b])
                    continue;
                if (p.leq(b, a) && !q.leq(f[b], x))
                    ok = false;
                if (p.leq(a, b) && !q.leq(x, f[b]))
                    ok = false;
            }
            if (!ok)
                continue;
            f[a] = x;
            assigned[a] = true;
            self(self, k + 1);
            assigned[a] = false;
        }
    };
    place(place, 0);
    return out;
}

std::optional<GaloisConnection> connection(Rng& rng, PosetPtr const& source, PosetPtr const& target)
{
    auto all = all_connections(source, target);
    if (all.empty())
        return std::nullopt;
    return all[uniform(rng, 0, all.size() - 1)];
}

GaloisConnection connection_from(Rng& rng, PosetPtr const& source, std::size_t max_target)
{
    for (int attempt = 0; attempt < 1000; ++attempt)
    {
        std::size_t const n = uniform(rng, 1, max_target);
        PosetPtr q = share(poset(rng, n, 0.4, coin(rng, 0.6)));
        if (auto c = connection(rng, source, q))
            return *c;
    }
    // A singleton target always works when the source has a top element;
    // otherwise the identity does.
    if (source->top())
    {
        PosetPtr q = share(FinitePoset::from_index_covers({"z"}, {}));
        return validate_galois(source, q, std::vector<std::size_t>(source->size(), 0),
                               std::vector<std::size_t>{*source->top()});
    }
    return identity_connection(source);
}

GaloisConnection connection_between_random_posets(Rng& rng, std::size_t max_source, std::size_t max_target)
{
    std::size_t const n = uniform(rng, 1, max_source);
    PosetPtr p = share(poset(rng, n, 0.4, coin(rng, 0.6)));
    return connection_from(rng, p, max_target);
}

IntFunction function(Rng& rng, PosetPtr domain, std::int64_t lo, std::int64_t hi)
{
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    std::vector<std::int64_t> v(domain->size());
    for (auto& x : v)
        x = dist(rng);
    return IntFunction(std::move(domain), std::move(v));
}

Matrix matrix(Rng& rng, std::size_t rows, std::size_t cols, Field field)
{
    std::uniform_int_distribution<std::uint32_t> dist(0, field.p() - 1);
    Matrix m(rows, cols, field);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, dist(rng));
    return m;
}

Filtration filtration(Rng& rng, PosetPtr index, ComplexPtr ambient, SetKind kind, double density)
{
    FinitePoset const& p = *index;
    std::vector<std::optional<SimplexSet>> sets(p.size());
    for (std::size_t a : p.linear_extension())
    {
        std::vector<std::size_t> gens;
        for (std::size_t b = 0; b < p.size(); ++b)
            if (p.less(b, a))
                gens.insert(gens.end(), sets[b]->members().begin(), sets[b]->members().end());
        for (std::size_t s = 0; s < ambient->size(); ++s)
            if (coin(rng, density))
                gens.push_back(s);
        sets[a] = SimplexSet::closure(ambient, gens, kind);
    }
    std::vector<SimplexSet> assignment;
    for (auto& s : sets)
        assignment.push_back(std::move(*s));
    return Filtration::validate(std::move(index), std::move(ambient), std::move(assignment), kind);
}

PersistenceModule module(Rng& rng, PosetPtr index, std::size_t max_dim, Field field)
{
    FinitePoset const& p = *index;
    std::size_t const n = p.size();

    std::vector<Generator> cover_gens;
    for (std::size_t k = uniform(rng, 1, std::max<std::size_t>(max_dim, 1)); k > 0; --k)
        cover_gens.push_back({uniform(rng, 0, n - 1), 1});
    FreeModule const cover(index, cover_gens, field);

    // Relations: generators at random births, sent to random vectors.
    struct Relation
    {
        std::size_t birth;
        Matrix image; // in cover(birth)
    };
    std::vector<Relation> relations;
    for (std::size_t k = uniform(rng, 0, 3); k > 0; --k)
    {
        std::size_t const b = uniform(rng, 0, n - 1);
        relations.push_back({b, matrix(rng, cover.module().dim(b), 1, field)});
    }

    std::vector<Matrix> reps(n), frames(n);
    std::vector<std::size_t> dims(n), killed(n);
    for (std::size_t a = 0; a < n; ++a)
    {
        std::size_t const da = cover.module().dim(a);
        Matrix rel(da, 0, field);
        for (auto const& r : relations)
            if (p.leq(r.birth, a))
                rel = hconcat(rel, cover.module().map(r.birth, a) * r.image);
        Subspace const im = column_space(rel);
        Matrix const id = Matrix::identity(da, field);
        reps[a] = id.select_columns(complement_columns(im.basis, id));
        frames[a] = hconcat(im.basis, reps[a]);
        dims[a] = reps[a].cols();
        killed[a] = im.dim();
    }

    std::vector<Matrix> covers;
    for (auto [a, b] : p.hasse())
    {
        Matrix m(dims[b], dims[a], field);
        if (dims[a] > 0 && dims[b] > 0)
        {
            Matrix const coords = solve(frames[b], cover.module().map(a, b) * reps[a]);
            for (std::size_t r = 0; r < dims[b]; ++r)
                for (std::size_t c = 0; c < dims[a]; ++c)
                    m.set(r, c, coords(killed[b] + r, c));
        }
        covers.push_back(std::move(m));
    }
    return PersistenceModule::validate(std::move(index), std::move(dims), std::move(covers), field);
}

SimplicialComplex skeleton(std::size_t n, int d)
{
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i)
        names[i] = std::to_string(i);
    std::vector<SimplicialComplex::Simplex> maximal;
    std::size_t const k = static_cast<std::size_t>(d + 1);
    if (k <= n)
    {
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
        do
        {
            SimplicialComplex::Simplex s;
            for (std::uint32_t i = 0; i < n; ++i)
                if (pick[i])
                    s.push_back(i);
            maximal.push_back(std::move(s));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return SimplicialComplex::from_maximal(std::move(names), maximal);
}

} // namespace gpd::random
