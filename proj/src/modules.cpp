#include "gpd/modules.hpp"

#include <map>

#include "gpd/error.hpp"

namespace gpd
{

namespace
{

std::string shape(Matrix const& m)
{
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

} // namespace

PersistenceModule PersistenceModule::validate(PosetPtr index, std::vector<std::size_t> dims,
                                              std::vector<Matrix> cover_maps, Field field)
{
    FinitePoset const& p = *index;
    std::size_t const n = p.size();
    if (dims.size() != n)
        throw Error(ErrorKind::ShapeMismatch, "one dimension per element expected");
    auto const& hasse = p.hasse();
    if (cover_maps.size() != hasse.size())
        throw Error(ErrorKind::ShapeMismatch, "one matrix per cover expected");
    for (std::size_t e = 0; e < hasse.size(); ++e)
    {
        auto [a, b] = hasse[e];
        Matrix const& m = cover_maps[e];
        if (m.rows() != dims[b] || m.cols() != dims[a])
            throw Error(ErrorKind::ShapeMismatch, "map " + p.name(a) + "<" + p.name(b) + " is " + shape(m) +
                                                      ", expected " + std::to_string(dims[b]) + "x" +
                                                      std::to_string(dims[a]));
        if (!(m.field() == field))
            throw Error(ErrorKind::InvalidField, "map " + p.name(a) + "<" + p.name(b) + " over another field");
    }

    PersistenceModule mod;
    mod.index_ = index;
    mod.field_ = field;
    mod.dims_ = std::move(dims);
    mod.covers_ = std::move(cover_maps);
    mod.composite_.assign(n * n, std::nullopt);

    std::vector<std::vector<std::size_t>> covers_into(n); // hasse edge ids ending at b
    for (std::size_t e = 0; e < hasse.size(); ++e)
        covers_into[hasse[e].second].push_back(e);

    // Along a linear extension, M(a <= b) is fixed by any cover c ⋖ b with
    // a <= c; every such route must agree.
    for (std::size_t b : p.linear_extension())
    {
        mod.composite_[b * n + b] = Matrix::identity(mod.dims_[b], field);
        for (std::size_t a = 0; a < n; ++a)
        {
            if (!p.less(a, b))
                continue;
            std::optional<std::size_t> via;
            for (std::size_t e : covers_into[b])
            {
                std::size_t const c = hasse[e].first;
                if (!p.leq(a, c))
                    continue;
                Matrix route = mod.covers_[e] * *mod.composite_[a * n + c];
                if (!mod.composite_[a * n + b])
                {
                    mod.composite_[a * n + b] = std::move(route);
                    via = c;
                }
                else if (!(route == *mod.composite_[a * n + b]))
                {
                    throw Error(ErrorKind::NotFunctorial,
                                "paths " + p.name(a) + "..." + p.name(*via) + "<" + p.name(b) + " and " +
                                    p.name(a) + "..." + p.name(c) + "<" + p.name(b) + " disagree");
                }
            }
        }
    }
    return mod;
}

Matrix const& PersistenceModule::map(std::size_t a, std::size_t b) const
{
    std::size_t const n = index_->size();
    if (a >= n || b >= n || !composite_[a * n + b])
        throw Error(ErrorKind::NotMonotone, "no structure map between these elements");
    return *composite_[a * n + b];
}

// ---------------------------------------------------------------------------

namespace
{

PersistenceModule build_free(PosetPtr const& index, std::vector<std::size_t> const& slot_birth,
                             std::vector<std::vector<std::size_t>>& slots_at, Field field)
{
    FinitePoset const& p = *index;
    slots_at.assign(p.size(), {});
    for (std::size_t b = 0; b < p.size(); ++b)
        for (std::size_t s = 0; s < slot_birth.size(); ++s)
            if (p.leq(slot_birth[s], b))
                slots_at[b].push_back(s);

    std::vector<std::size_t> dims(p.size());
    for (std::size_t b = 0; b < p.size(); ++b)
        dims[b] = slots_at[b].size();

    std::vector<Matrix> covers;
    for (auto [a, b] : p.hasse())
    {
        Matrix m(dims[b], dims[a], field);
        std::size_t j = 0;
        for (std::size_t i = 0; i < dims[a]; ++i)
        {
            while (slots_at[b][j] != slots_at[a][i])
                ++j;
            m.set(j, i, 1);
        }
        covers.push_back(std::move(m));
    }
    return PersistenceModule::validate(index, std::move(dims), std::move(covers), field);
}

} // namespace

FreeModule::FreeModule(PosetPtr index, std::vector<Generator> generators, Field field)
    : generators_(std::move(generators)),
      module_([&] {
          for (auto const& g : generators_)
          {
              if (g.birth >= index->size())
                  throw Error(ErrorKind::UnknownElement, "generator born outside the index poset");
              for (std::size_t k = 0; k < g.count; ++k)
                  slot_birth_.push_back(g.birth);
          }
          return build_free(index, slot_birth_, slots_at_, field);
      }())
{
}

Presentation::Presentation(FreeModule free, PersistenceModule target, std::vector<Matrix> components)
    : free_(std::move(free)), target_(std::move(target)), components_(std::move(components))
{
}

Presentation Presentation::validate(FreeModule free, PersistenceModule target, std::vector<Matrix> components)
{
    FinitePoset const& p = *target.index();
    PersistenceModule const& fm = free.module();
    if (fm.index()->size() != p.size() || components.size() != p.size())
        throw Error(ErrorKind::ShapeMismatch, "one component per element expected");
    for (std::size_t a = 0; a < p.size(); ++a)
    {
        Matrix const& phi = components[a];
        if (phi.rows() != target.dim(a) || phi.cols() != fm.dim(a))
            throw Error(ErrorKind::ShapeMismatch, "component at " + p.name(a) + " is " + shape(phi));
        if (rank(phi) != target.dim(a))
            throw Error(ErrorKind::NotSurjective, "component at " + p.name(a) + " is not onto");
    }
    auto const& hasse = p.hasse();
    for (std::size_t e = 0; e < hasse.size(); ++e)
    {
        auto [a, b] = hasse[e];
        if (!(components[b] * fm.cover_maps()[e] == target.cover_maps()[e] * components[a]))
            throw Error(ErrorKind::NotNatural, "square at " + p.name(a) + "<" + p.name(b) + " does not commute");
    }
    return Presentation(std::move(free), std::move(target), std::move(components));
}

// ---------------------------------------------------------------------------

PersistenceModule homology_module(Filtration const& f, int degree, Field field)
{
    FinitePoset const& p = *f.index();
    auto const spaces = cycle_spaces(f, degree, field);

    std::vector<Matrix> reps(p.size());   // chosen class representatives
    std::vector<Matrix> frames(p.size()); // [boundary basis | reps], spans the cycles
    std::vector<std::size_t> dims(p.size());
    for (std::size_t a = 0; a < p.size(); ++a)
    {
        Subspace const& z = spaces[a].cycles;
        Subspace const& b = spaces[a].boundaries;
        auto const extra = complement_columns(b.basis, z.basis);
        reps[a] = z.basis.select_columns(extra);
        frames[a] = hconcat(b.basis, reps[a]);
        dims[a] = reps[a].cols();
    }

    std::vector<Matrix> covers;
    for (auto [a, b] : p.hasse())
    {
        Matrix m(dims[b], dims[a], field);
        if (dims[a] > 0 && dims[b] > 0)
        {
            auto const pos = coordinate_positions(f.at(a), f.at(b), degree);
            Subspace const pushed = embed(Subspace{reps[a].rows(), reps[a]}, pos, frames[b].rows());
            Matrix const coords = solve(frames[b], pushed.basis);
            std::size_t const skip = spaces[b].boundaries.dim();
            for (std::size_t r = 0; r < dims[b]; ++r)
                for (std::size_t c = 0; c < dims[a]; ++c)
                    m.set(r, c, coords(skip + r, c));
        }
        covers.push_back(std::move(m));
    }
    return PersistenceModule::validate(f.index(), std::move(dims), std::move(covers), field);
}

PersistenceModule cohomology_module(Filtration const& f, int degree, Field field)
{
    if (!f.is_cofiltration())
        throw Error(ErrorKind::NotSupcomplex, "cohomology_module expects a cofiltration");
    return homology_module(f, degree, field);
}

IntFunction kernel_function(PersistenceModule const& m, IntervalPoset const& ip)
{
    std::vector<std::int64_t> values(ip.size());
    for (std::size_t i = 0; i < ip.size(); ++i)
    {
        auto [a, b] = ip.interval(i);
        values[i] = static_cast<std::int64_t>(m.dim(a) - rank(m.map(a, b)));
    }
    return IntFunction(ip.poset(), std::move(values));
}

IntFunction module_diagram(PersistenceModule const& m, IntervalPoset const& ip)
{
    return mobius_inversion(kernel_function(m, ip));
}

Presentation canonical_presentation(PersistenceModule const& m)
{
    FinitePoset const& p = *m.index();
    std::vector<Generator> gens;
    for (std::size_t b = 0; b < p.size(); ++b)
        if (m.dim(b) > 0)
            gens.push_back({b, m.dim(b)});
    FreeModule free(m.index(), gens, m.field());

    std::vector<Matrix> components;
    for (std::size_t a = 0; a < p.size(); ++a)
    {
        Matrix phi(m.dim(a), free.module().dim(a), m.field());
        std::size_t col = 0;
        for (auto const& g : gens)
        {
            if (!p.leq(g.birth, a))
                continue;
            Matrix const& block = m.map(g.birth, a);
            for (std::size_t r = 0; r < block.rows(); ++r)
                for (std::size_t c = 0; c < block.cols(); ++c)
                    phi.set(r, col + c, block(r, c));
            col += g.count;
        }
        components.push_back(std::move(phi));
    }
    return Presentation::validate(std::move(free), m, std::move(components));
}

Presentation add_generators(Presentation const& base, std::size_t at, Matrix const& images)
{
    PersistenceModule const& m = base.target();
    FinitePoset const& p = *m.index();
    if (at >= p.size() || images.rows() != m.dim(at))
        throw Error(ErrorKind::ShapeMismatch, "extra generator images do not live in M(at)");

    std::vector<Generator> gens = base.free().generators();
    std::size_t const old_slots = base.free().slot_count();
    if (images.cols() > 0)
        gens.push_back({at, images.cols()});
    FreeModule free(m.index(), gens, m.field());

    std::vector<Matrix> components;
    for (std::size_t a = 0; a < p.size(); ++a)
    {
        Matrix const& old = base.component(a);
        Matrix phi(m.dim(a), free.module().dim(a), m.field());
        auto const& slots = free.slots_at(a);
        Matrix const lifted = p.leq(at, a) ? m.map(at, a) * images : Matrix(m.dim(a), 0, m.field());
        for (std::size_t j = 0; j < slots.size(); ++j)
        {
            std::size_t const s = slots[j];
            for (std::size_t r = 0; r < m.dim(a); ++r)
                phi.set(r, j, s < old_slots ? old(r, j) : lifted(r, s - old_slots));
        }
        components.push_back(std::move(phi));
    }
    return Presentation::validate(std::move(free), m, std::move(components));
}

IntFunction bd_presentation(Presentation const& pres, IntervalPoset const& ip)
{
    FreeModule const& free = pres.free();
    Field const field = pres.target().field();
    std::vector<Subspace> kernels;
    for (std::size_t b = 0; b < ip.parent()->size(); ++b)
        kernels.push_back(kernel_basis(pres.component(b)));

    std::vector<std::int64_t> values(ip.size());
    for (std::size_t i = 0; i < ip.size(); ++i)
    {
        auto [a, b] = ip.interval(i);
        auto const& outer = free.slots_at(b);
        auto const& inner = free.slots_at(a);
        // F(a) is the coordinate subspace of F(b) on the slots born by a.
        Matrix born(outer.size(), inner.size(), field);
        std::size_t j = 0;
        for (std::size_t c = 0; c < inner.size(); ++c)
        {
            while (outer[j] != inner[c])
                ++j;
            born.set(j, c, 1);
        }
        values[i] = static_cast<std::int64_t>(
            intersection_dim(Subspace{outer.size(), std::move(born)}, kernels[b]));
    }
    return IntFunction(ip.poset(), std::move(values));
}

PersistenceModule pushforward_module(PersistenceModule const& m, GaloisConnection const& c)
{
    if (!(*c.source == *m.index()))
        throw Error(ErrorKind::IndexMismatch, "connection source is not the module's index poset");
    FinitePoset const& q = *c.target;
    std::vector<std::size_t> dims(q.size());
    for (std::size_t x = 0; x < q.size(); ++x)
        dims[x] = m.dim(c.g[x]);
    std::vector<Matrix> covers;
    for (auto [x, y] : q.hasse())
        covers.push_back(m.map(c.g[x], c.g[y]));
    return PersistenceModule::validate(c.target, std::move(dims), std::move(covers), m.field());
}

Presentation restrict_presentation(Presentation const& pres, GaloisConnection const& c)
{
    PersistenceModule n = pushforward_module(pres.target(), c);
    std::vector<Generator> gens;
    for (auto const& g : pres.free().generators())
        gens.push_back({c.f[g.birth], g.count});
    FreeModule free(c.target, std::move(gens), n.field());
    std::vector<Matrix> components;
    for (std::size_t x = 0; x < c.target->size(); ++x)
        components.push_back(pres.component(c.g[x]));
    return Presentation::validate(std::move(free), std::move(n), std::move(components));
}

ModuleEquivalenceReport check_module_equivalence(PersistenceModule const& m, GaloisConnection const& c)
{
    IntervalPoset const ip(c.source);
    IntervalPoset const iq(c.target);
    GaloisConnection const ic = int_of_galois(c, ip, iq);

    Presentation const phi = canonical_presentation(m);
    IntFunction const bd_phi = bd_presentation(phi, ip);

    Presentation const restricted = restrict_presentation(phi, c);
    IntFunction const bd_restricted = bd_presentation(restricted, iq);
    IntFunction const pulled = pullback(bd_phi, iq.poset(), ic.g);
    for (std::size_t i = 0; i < iq.size(); ++i)
        if (bd_restricted[i] != pulled[i])
            return {false, "restricted presentation pullback", i};

    PersistenceModule const& n = restricted.target();
    Presentation const psi = canonical_presentation(n);
    IntFunction const lhs = mobius_inversion(bd_presentation(psi, iq));
    IntFunction const rhs = pushforward(mobius_inversion(bd_phi), iq.poset(), ic.f);
    if (auto w = first_off_diagonal_difference(lhs, rhs, iq))
        return {false, "presentation diagram pushforward", w};

    IntFunction const ker_lhs = module_diagram(n, iq);
    IntFunction const ker_rhs = pushforward(module_diagram(m, ip), iq.poset(), ic.f);
    if (auto w = first_off_diagonal_difference(ker_lhs, ker_rhs, iq))
        return {false, "kernel diagram pushforward", w};
    return {};
}

} // namespace gpd
