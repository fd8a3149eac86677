#include "gpd/simplicial.hpp"

#include <algorithm>
#include <set>

#include "gpd/error.hpp"

namespace gpd
{

namespace
{

std::string tuple_string(SimplicialComplex::Simplex const& s, std::vector<std::string> const& names)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
    {
        if (i)
            out += ",";
        out += s[i] < names.size() ? names[s[i]] : std::to_string(s[i]);
    }
    return out + "}";
}

bool canonical_less(SimplicialComplex::Simplex const& a, SimplicialComplex::Simplex const& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

std::vector<SimplicialComplex::Simplex> normalize(std::vector<SimplicialComplex::Simplex> simplices,
                                                  std::size_t vertex_count,
                                                  std::vector<std::string> const& names)
{
    for (auto& s : simplices)
    {
        if (s.empty())
            throw Error(ErrorKind::Parse, "empty simplex");
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw Error(ErrorKind::Parse, "repeated vertex in simplex " + tuple_string(s, names));
        for (auto v : s)
            if (v >= vertex_count)
                throw Error(ErrorKind::UnknownVertex, "vertex position " + std::to_string(v));
    }
    std::sort(simplices.begin(), simplices.end(), canonical_less);
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    return simplices;
}

} // namespace

SimplicialComplex SimplicialComplex::from_simplices(std::vector<std::string> vertices,
                                                    std::vector<Simplex> simplices)
{
    SimplicialComplex k;
    k.simplices_ = normalize(std::move(simplices), vertices.size(), vertices);
    k.vertices_ = std::move(vertices);
    {
        std::set<std::string> seen;
        for (auto const& v : k.vertices_)
            if (!seen.insert(v).second)
                throw Error(ErrorKind::DuplicateElement, "vertex '" + v + "' listed twice");
    }
    for (std::size_t i = 0; i < k.simplices_.size(); ++i)
        k.lookup_.emplace(k.simplices_[i], i);

    for (std::uint32_t v = 0; v < k.vertices_.size(); ++v)
        if (!k.lookup_.count(Simplex{v}))
            throw Error(ErrorKind::NotFaceClosed, "vertex {" + k.vertices_[v] + "} is missing");
    for (auto const& s : k.simplices_)
    {
        if (s.size() < 2)
            continue;
        for (std::size_t i = 0; i < s.size(); ++i)
        {
            Simplex face = s;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            if (!k.lookup_.count(face))
                throw Error(ErrorKind::NotFaceClosed,
                            tuple_string(s, k.vertices_) + " present but face " +
                                tuple_string(face, k.vertices_) + " missing");
        }
    }
    k.index();
    return k;
}

SimplicialComplex SimplicialComplex::from_maximal(std::vector<std::string> vertices,
                                                  std::vector<Simplex> const& maximal)
{
    std::set<Simplex> all;
    for (std::uint32_t v = 0; v < vertices.size(); ++v)
        all.insert(Simplex{v});
    for (Simplex s : normalize(maximal, vertices.size(), vertices))
    {
        std::size_t const n = s.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
        {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::uint64_t{1} << i))
                    face.push_back(s[i]);
            all.insert(std::move(face));
        }
    }
    return from_simplices(std::move(vertices), std::vector<Simplex>(all.begin(), all.end()));
}

void SimplicialComplex::index()
{
    std::size_t const n = simplices_.size();
    by_dim_.clear();
    for (std::size_t i = 0; i < n; ++i)
    {
        std::size_t const d = simplices_[i].size() - 1;
        if (by_dim_.size() <= d)
            by_dim_.resize(d + 1);
        by_dim_[d].push_back(i);
    }
    facets_.assign(n, {});
    cofacets_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
    {
        Simplex const& s = simplices_[i];
        if (s.size() < 2)
            continue;
        for (std::size_t r = 0; r < s.size(); ++r)
        {
            Simplex face = s;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(r));
            std::size_t const f = lookup_.at(face);
            facets_[i].emplace_back(f, r % 2 == 0 ? 1 : -1);
            cofacets_[f].push_back(i);
        }
    }
    for (auto& c : cofacets_)
        std::sort(c.begin(), c.end());
}

std::vector<std::size_t> const& SimplicialComplex::of_dimension(int d) const
{
    static std::vector<std::size_t> const none;
    if (d < 0 || d >= static_cast<int>(by_dim_.size()))
        return none;
    return by_dim_[static_cast<std::size_t>(d)];
}

std::optional<std::size_t> SimplicialComplex::find(Simplex const& s) const
{
    auto it = lookup_.find(s);
    if (it == lookup_.end())
        return std::nullopt;
    return it->second;
}

bool SimplicialComplex::is_face(std::size_t sigma, std::size_t tau) const
{
    Simplex const& a = simplices_.at(sigma);
    Simplex const& b = simplices_.at(tau);
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string SimplicialComplex::label(std::size_t i) const
{
    std::string out;
    for (auto v : simplices_.at(i))
    {
        if (!out.empty())
            out += '.';
        out += vertices_[v];
    }
    return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const
{
    std::vector<std::size_t> f;
    for (auto const& d : by_dim_)
        f.push_back(d.size());
    return f;
}

std::int64_t SimplicialComplex::euler_characteristic() const
{
    std::int64_t chi = 0;
    for (std::size_t d = 0; d < by_dim_.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(by_dim_[d].size());
    return chi;
}

// ---------------------------------------------------------------------------

SimplexSet SimplexSet::validate(ComplexPtr ambient, std::vector<std::size_t> members, SetKind kind)
{
    SimplexSet s;
    s.kind_ = kind;
    s.mask_.assign(ambient->size(), 0);
    for (std::size_t m : members)
    {
        if (m >= ambient->size())
            throw Error(ErrorKind::UnknownVertex, "simplex position " + std::to_string(m) + " not in ambient");
        s.mask_[m] = 1;
    }
    for (std::size_t i = 0; i < ambient->size(); ++i)
        if (s.mask_[i])
            s.members_.push_back(i);

    for (std::size_t tau : s.members_)
    {
        if (kind == SetKind::Sub)
        {
            // Report the lowest-indexed missing face so witnesses are stable.
            std::size_t missing = ambient->size();
            for (auto [sigma, sign] : ambient->facets(tau))
                if (!s.mask_[sigma])
                    missing = std::min(missing, sigma);
            if (missing < ambient->size())
                throw Error(ErrorKind::NotSubcomplex,
                            "witness (" + ambient->label(missing) + "," + ambient->label(tau) + ")");
        }
        else
        {
            for (std::size_t up : ambient->cofacets(tau))
                if (!s.mask_[up])
                    throw Error(ErrorKind::NotSupcomplex,
                                "witness (" + ambient->label(tau) + "," + ambient->label(up) + ")");
        }
    }
    s.ambient_ = std::move(ambient);
    return s;
}

SimplexSet SimplexSet::full(ComplexPtr ambient, SetKind kind)
{
    std::vector<std::size_t> all(ambient->size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    return validate(std::move(ambient), std::move(all), kind);
}

SimplexSet SimplexSet::empty(ComplexPtr ambient, SetKind kind)
{
    return validate(std::move(ambient), {}, kind);
}

SimplexSet SimplexSet::closure(ComplexPtr ambient, std::span<std::size_t const> generators, SetKind kind)
{
    std::vector<std::uint8_t> mask(ambient->size(), 0);
    std::vector<std::size_t> stack(generators.begin(), generators.end());
    while (!stack.empty())
    {
        std::size_t const s = stack.back();
        stack.pop_back();
        if (s >= mask.size())
            throw Error(ErrorKind::UnknownVertex, "simplex position out of range");
        if (mask[s])
            continue;
        mask[s] = 1;
        if (kind == SetKind::Sub)
            for (auto [f, sign] : ambient->facets(s))
                stack.push_back(f);
        else
            for (std::size_t c : ambient->cofacets(s))
                stack.push_back(c);
    }
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i])
            members.push_back(i);
    return validate(std::move(ambient), std::move(members), kind);
}

std::vector<std::size_t> SimplexSet::of_dimension(int d) const
{
    std::vector<std::size_t> out;
    for (std::size_t i : ambient_->of_dimension(d))
        if (mask_[i])
            out.push_back(i);
    return out;
}

bool SimplexSet::subset_of(SimplexSet const& other) const
{
    if (other.mask_.size() != mask_.size())
        return false;
    for (std::size_t m : members_)
        if (!other.mask_[m])
            return false;
    return true;
}

SimplexSet SimplexSet::complement() const
{
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < mask_.size(); ++i)
        if (!mask_[i])
            rest.push_back(i);
    return validate(ambient_, std::move(rest), kind_ == SetKind::Sub ? SetKind::Sup : SetKind::Sub);
}

// ---------------------------------------------------------------------------

GradedChainComplex::GradedChainComplex(Field field, Grading grading,
                                       std::vector<std::vector<std::size_t>> basis,
                                       std::vector<Matrix> differential)
    : field_(field), grading_(grading), basis_(std::move(basis)), differential_(std::move(differential))
{
    if (basis_.size() != differential_.size())
        throw Error(ErrorKind::ShapeMismatch, "one differential per degree expected");
}

std::vector<std::size_t> const& GradedChainComplex::basis(int d) const
{
    static std::vector<std::size_t> const none;
    if (d < 0 || d > top_degree())
        return none;
    return basis_[static_cast<std::size_t>(d)];
}

Matrix GradedChainComplex::differential(int d) const
{
    if (d < 0 || d > top_degree())
    {
        std::size_t const target = grading_ == Grading::Chain ? rank_in(d - 1) : rank_in(d + 1);
        return Matrix(target, 0, field_);
    }
    return differential_[static_cast<std::size_t>(d)];
}

Subspace GradedChainComplex::cycles(int d) const
{
    if (d < 0 || d > top_degree())
        return zero_subspace(0, field_);
    return kernel_basis(differential(d));
}

Subspace GradedChainComplex::boundaries(int d) const
{
    if (d < 0 || d > top_degree())
        return zero_subspace(0, field_);
    int const from = grading_ == Grading::Chain ? d + 1 : d - 1;
    if (from < 0 || from > top_degree())
        return zero_subspace(rank_in(d), field_);
    return column_space(differential(from));
}

std::size_t GradedChainComplex::homology_dim(int d) const
{
    return cycles(d).dim() - boundaries(d).dim();
}

bool GradedChainComplex::is_complex() const
{
    for (int d = 0; d <= top_degree(); ++d)
    {
        int const next = grading_ == Grading::Chain ? d - 1 : d + 1;
        if (next < 0 || next > top_degree())
            continue;
        Matrix const composite = differential(next) * differential(d);
        if (!composite.is_zero())
            return false;
    }
    return true;
}

GradedChainComplex relative_chain_complex(SimplexSet const& set, Field field)
{
    SimplicialComplex const& k = *set.ambient();
    int const top = k.dimension();
    std::vector<std::vector<std::size_t>> basis;
    std::vector<Matrix> diff;
    for (int d = 0; d <= top; ++d)
        basis.push_back(set.of_dimension(d));

    for (int d = 0; d <= top; ++d)
    {
        auto const& cols = basis[static_cast<std::size_t>(d)];
        if (d == 0)
        {
            diff.emplace_back(0, cols.size(), field);
            continue;
        }
        auto const& rows = basis[static_cast<std::size_t>(d - 1)];
        Matrix m(rows.size(), cols.size(), field);
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (auto [face, sign] : k.facets(cols[j]))
            {
                if (!set.contains(face))
                    continue;
                auto it = std::lower_bound(rows.begin(), rows.end(), face);
                m.set(static_cast<std::size_t>(it - rows.begin()), j, sign);
            }
        diff.push_back(std::move(m));
    }
    return GradedChainComplex(field, Grading::Chain, std::move(basis), std::move(diff));
}

GradedChainComplex chain_complex(SimplexSet const& sub, Field field)
{
    if (sub.kind() != SetKind::Sub)
        throw Error(ErrorKind::NotSubcomplex, "chain_complex expects a subcomplex");
    return relative_chain_complex(sub, field);
}

GradedChainComplex compact_cochain_complex(SimplexSet const& sup, Field field)
{
    if (sup.kind() != SetKind::Sup)
        throw Error(ErrorKind::NotSupcomplex, "compact_cochain_complex expects a supcomplex");
    GradedChainComplex const chains = relative_chain_complex(sup, field);
    int const top = chains.top_degree();
    std::vector<std::vector<std::size_t>> basis;
    std::vector<Matrix> diff;
    for (int d = 0; d <= top; ++d)
    {
        basis.push_back(chains.basis(d));
        if (d == top)
            diff.emplace_back(0, chains.rank_in(d), field);
        else
            diff.push_back(chains.differential(d + 1).transpose());
    }
    GradedChainComplex out(field, Grading::Cochain, std::move(basis), std::move(diff));
    if (!out.is_complex())
        throw Error(ErrorKind::Internal, "compactly supported coboundary does not square to zero");
    return out;
}

std::vector<std::size_t> coordinate_positions(SimplexSet const& a, SimplexSet const& b, int d)
{
    if (!a.subset_of(b))
        throw Error(ErrorKind::NotNested, "simplex sets are not nested");
    auto const inner = a.of_dimension(d);
    auto const outer = b.of_dimension(d);
    std::vector<std::size_t> pos;
    pos.reserve(inner.size());
    for (std::size_t s : inner)
        pos.push_back(static_cast<std::size_t>(std::lower_bound(outer.begin(), outer.end(), s) - outer.begin()));
    return pos;
}

std::pair<Matrix, Matrix> inclusion_matrices(SimplexSet const& a, SimplexSet const& b, int d, Field field)
{
    if (a.kind() != b.kind())
        throw Error(ErrorKind::NotNested, "simplex sets of different kinds");
    auto const pos = coordinate_positions(a, b, d);
    std::size_t const inner = pos.size(), outer = b.of_dimension(d).size();
    Matrix up(outer, inner, field); // C_d A -> C_d B, or j^d : C^d A -> C^d B
    for (std::size_t i = 0; i < inner; ++i)
        up.set(pos[i], i, 1);
    if (a.kind() == SetKind::Sub)
        return {up, up.transpose()};
    return {up.transpose(), up};
}

SimplicialComplex barycentric_subdivision(SimplicialComplex const& k)
{
    std::size_t const n = k.size();
    std::vector<std::vector<std::uint32_t>> cofaces(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (k.dim_of(j) > k.dim_of(i) && k.is_face(i, j))
                cofaces[i].push_back(static_cast<std::uint32_t>(j));

    std::vector<SimplicialComplex::Simplex> chains;
    SimplicialComplex::Simplex chain;
    auto extend = [&](auto&& self, std::uint32_t last) -> void {
        chains.push_back(chain);
        for (std::uint32_t next : cofaces[last])
        {
            chain.push_back(next);
            self(self, next);
            chain.pop_back();
        }
    };
    for (std::uint32_t s = 0; s < n; ++s)
    {
        chain.assign(1, s);
        extend(extend, s);
    }

    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i)
        names[i] = k.label(i);
    return SimplicialComplex::from_simplices(std::move(names), std::move(chains));
}

std::vector<std::size_t> betti_numbers(SimplicialComplex const& k, Field field)
{
    auto ptr = std::make_shared<SimplicialComplex const>(k);
    GradedChainComplex const c = chain_complex(SimplexSet::full(ptr, SetKind::Sub), field);
    std::vector<std::size_t> b;
    for (int d = 0; d <= c.top_degree(); ++d)
        b.push_back(c.homology_dim(d));
    return b;
}

} // namespace gpd
