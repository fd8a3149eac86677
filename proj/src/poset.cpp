#include "gpd/poset.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "checked.hpp"
#include "gpd/error.hpp"

namespace gpd
{

namespace
{

constexpr std::size_t npos = static_cast<std::size_t>(-1);

void require_same_domain(IntFunction const& x, IntFunction const& y)
{
    if (x.size() != y.size())
        throw Error(ErrorKind::IndexMismatch, "functions live on posets of different sizes");
}

} // namespace

FinitePoset FinitePoset::from_covers(
    std::vector<std::string> elements,
    std::vector<std::pair<std::string, std::string>> const& covers)
{
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < elements.size(); ++i)
    {
        if (!index.emplace(elements[i], i).second)
            throw Error(ErrorKind::DuplicateElement, "element '" + elements[i] + "' listed twice");
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(covers.size());
    for (auto const& [lo, hi] : covers)
    {
        auto l = index.find(lo);
        auto h = index.find(hi);
        if (l == index.end())
            throw Error(ErrorKind::UnknownElement, "cover references '" + lo + "'");
        if (h == index.end())
            throw Error(ErrorKind::UnknownElement, "cover references '" + hi + "'");
        pairs.emplace_back(l->second, h->second);
    }
    return from_index_covers(std::move(elements), pairs);
}

FinitePoset FinitePoset::from_index_covers(
    std::vector<std::string> elements,
    std::vector<std::pair<std::size_t, std::size_t>> const& covers)
{
    FinitePoset p;
    std::size_t const n = elements.size();
    p.names_ = std::move(elements);
    for (std::size_t i = 0; i < n; ++i)
    {
        if (!p.index_.emplace(p.names_[i], i).second)
            throw Error(ErrorKind::DuplicateElement, "element '" + p.names_[i] + "' listed twice");
    }

    std::vector<std::vector<std::size_t>> up(n);
    std::vector<std::size_t> indegree(n, 0);
    for (auto [lo, hi] : covers)
    {
        if (lo >= n || hi >= n)
            throw Error(ErrorKind::UnknownElement, "cover index out of range");
        if (lo == hi)
            continue;
        up[lo].push_back(hi);
        ++indegree[hi];
    }

    // Kahn's algorithm with a min-heap gives a reproducible linear extension.
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (indegree[i] == 0)
            ready.push(i);
    while (!ready.empty())
    {
        std::size_t const a = ready.top();
        ready.pop();
        p.linear_extension_.push_back(a);
        for (std::size_t b : up[a])
            if (--indegree[b] == 0)
                ready.push(b);
    }
    if (p.linear_extension_.size() != n)
    {
        std::string where;
        for (std::size_t i = 0; i < n; ++i)
            if (indegree[i] != 0)
            {
                where = p.names_[i];
                break;
            }
        throw Error(ErrorKind::CycleDetected, "covers contain a cycle through '" + where + "'");
    }

    p.leq_.assign(n * n, 0);
    for (auto it = p.linear_extension_.rbegin(); it != p.linear_extension_.rend(); ++it)
    {
        std::size_t const a = *it;
        p.leq_[a * n + a] = 1;
        for (std::size_t b : up[a])
            for (std::size_t c = 0; c < n; ++c)
                if (p.leq_[b * n + c])
                    p.leq_[a * n + c] = 1;
    }

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
        {
            if (!p.less(a, b))
                continue;
            bool cover = true;
            for (std::size_t c = 0; c < n && cover; ++c)
                if (p.less(a, c) && p.less(c, b))
                    cover = false;
            if (cover)
                p.hasse_.emplace_back(a, b);
        }
    return p;
}

std::optional<std::size_t> FinitePoset::find(std::string_view id) const
{
    auto it = index_.find(std::string(id));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t FinitePoset::index_of(std::string_view id) const
{
    if (auto i = find(id))
        return *i;
    throw Error(ErrorKind::UnknownElement, "no element '" + std::string(id) + "'");
}

std::size_t FinitePoset::relation_size() const noexcept
{
    return static_cast<std::size_t>(std::count(leq_.begin(), leq_.end(), std::uint8_t{1}));
}

std::optional<std::size_t> FinitePoset::bottom() const
{
    for (std::size_t a = 0; a < size(); ++a)
    {
        bool ok = true;
        for (std::size_t b = 0; b < size() && ok; ++b)
            ok = leq(a, b);
        if (ok)
            return a;
    }
    return std::nullopt;
}

std::optional<std::size_t> FinitePoset::top() const
{
    for (std::size_t a = 0; a < size(); ++a)
    {
        bool ok = true;
        for (std::size_t b = 0; b < size() && ok; ++b)
            ok = leq(b, a);
        if (ok)
            return a;
    }
    return std::nullopt;
}

std::string hasse_dot(FinitePoset const& poset, std::string_view graph_name)
{
    auto quote = [](std::string const& s) {
        std::string out = "\"";
        for (char ch : s)
        {
            if (ch == '"' || ch == '\\')
                out += '\\';
            out += ch;
        }
        return out + "\"";
    };
    std::ostringstream os;
    os << "digraph " << graph_name << " {\n";
    os << "  rankdir=BT;\n";
    for (auto const& name : poset.names())
        os << "  " << quote(name) << ";\n";
    for (auto [lo, hi] : poset.hasse())
        os << "  " << quote(poset.name(lo)) << " -> " << quote(poset.name(hi)) << ";\n";
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Interval poset

IntervalPoset::IntervalPoset(PosetPtr parent)
    : parent_(std::move(parent))
{
    std::size_t const n = parent_->size();
    lookup_.assign(n * n, npos);
    std::vector<std::string> names;
    for (std::size_t lo = 0; lo < n; ++lo)
        for (std::size_t hi = 0; hi < n; ++hi)
            if (parent_->leq(lo, hi))
            {
                lookup_[lo * n + hi] = intervals_.size();
                intervals_.push_back({lo, hi});
                names.push_back("[" + parent_->name(lo) + "," + parent_->name(hi) + "]");
            }

    // Covers of the product order: step one coordinate along a parent cover.
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t i = 0; i < intervals_.size(); ++i)
    {
        auto [lo, hi] = intervals_[i];
        for (auto [a, b] : parent_->hasse())
        {
            if (a == lo && parent_->leq(b, hi))
                covers.emplace_back(i, lookup_[b * n + hi]);
            if (a == hi)
                covers.emplace_back(i, lookup_[lo * n + b]);
        }
    }
    poset_ = share(FinitePoset::from_index_covers(std::move(names), covers));
}

std::size_t IntervalPoset::index(std::size_t lo, std::size_t hi) const
{
    std::size_t const n = parent_->size();
    if (lo >= n || hi >= n)
        throw Error(ErrorKind::UnknownElement, "interval endpoint out of range");
    std::size_t const i = lookup_[lo * n + hi];
    if (i == npos)
        throw Error(ErrorKind::NotMonotone,
                    "[" + parent_->name(lo) + "," + parent_->name(hi) + "] is not an interval");
    return i;
}

IntervalPoset interval_poset(PosetPtr parent)
{
    return IntervalPoset(std::move(parent));
}

std::string interval_label(IntervalPoset const& ip, std::size_t i)
{
    return ip.poset()->name(i);
}

// ---------------------------------------------------------------------------
// Galois connections

namespace
{

void check_monotone(FinitePoset const& from, FinitePoset const& to,
                    std::vector<std::size_t> const& map, char const* label)
{
    if (map.size() != from.size())
        throw Error(ErrorKind::IndexMismatch, std::string(label) + " is not total");
    for (std::size_t x : map)
        if (x >= to.size())
            throw Error(ErrorKind::UnknownElement, std::string(label) + " maps outside its target");
    for (std::size_t a = 0; a < from.size(); ++a)
        for (std::size_t b = 0; b < from.size(); ++b)
            if (from.leq(a, b) && !to.leq(map[a], map[b]))
                throw Error(ErrorKind::NotMonotone,
                            std::string(label) + ": " + from.name(a) + " <= " + from.name(b) +
                                " but " + to.name(map[a]) + " !<= " + to.name(map[b]));
}

} // namespace

GaloisConnection validate_galois(PosetPtr source, PosetPtr target,
                                 std::vector<std::size_t> f,
                                 std::vector<std::size_t> g)
{
    check_monotone(*source, *target, f, "f");
    check_monotone(*target, *source, g, "g");
    for (std::size_t a = 0; a < source->size(); ++a)
        for (std::size_t x = 0; x < target->size(); ++x)
            if (target->leq(f[a], x) != source->leq(a, g[x]))
                throw Error(ErrorKind::AdjunctionFailed,
                            "witness (" + source->name(a) + "," + target->name(x) + ")");
    return GaloisConnection{std::move(source), std::move(target), std::move(f), std::move(g)};
}

GaloisConnection identity_connection(PosetPtr poset)
{
    std::vector<std::size_t> id(poset->size());
    for (std::size_t i = 0; i < id.size(); ++i)
        id[i] = i;
    return GaloisConnection{poset, poset, id, id};
}

GaloisConnection compose(GaloisConnection const& first, GaloisConnection const& second)
{
    if (first.target->size() != second.source->size())
        throw Error(ErrorKind::IndexMismatch, "connections do not compose");
    std::vector<std::size_t> f(first.source->size());
    for (std::size_t a = 0; a < f.size(); ++a)
        f[a] = second.f[first.f[a]];
    std::vector<std::size_t> g(second.target->size());
    for (std::size_t x = 0; x < g.size(); ++x)
        g[x] = first.g[second.g[x]];
    return validate_galois(first.source, second.target, std::move(f), std::move(g));
}

GaloisConnection int_of_galois(GaloisConnection const& c,
                               IntervalPoset const& source,
                               IntervalPoset const& target)
{
    if (source.parent()->size() != c.source->size() || target.parent()->size() != c.target->size())
        throw Error(ErrorKind::IndexMismatch, "interval posets do not match the connection");
    std::vector<std::size_t> f(source.size());
    for (std::size_t i = 0; i < source.size(); ++i)
    {
        auto [lo, hi] = source.interval(i);
        f[i] = target.index(c.f[lo], c.f[hi]);
    }
    std::vector<std::size_t> g(target.size());
    for (std::size_t i = 0; i < target.size(); ++i)
    {
        auto [lo, hi] = target.interval(i);
        g[i] = source.index(c.g[lo], c.g[hi]);
    }
    try
    {
        return validate_galois(source.poset(), target.poset(), std::move(f), std::move(g));
    }
    catch (Error const& e)
    {
        throw Error(ErrorKind::Internal, std::string("Int of a Galois connection failed: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Integer functions

IntFunction::IntFunction(PosetPtr domain, std::vector<std::int64_t> values)
    : domain_(std::move(domain)), values_(std::move(values))
{
    if (!domain_ || values_.size() != domain_->size())
        throw Error(ErrorKind::IndexMismatch, "function is not total on its domain");
}

IntFunction IntFunction::zero(PosetPtr domain)
{
    std::size_t const n = domain->size();
    return IntFunction(std::move(domain), std::vector<std::int64_t>(n, 0));
}

IntFunction IntFunction::operator+(IntFunction const& other) const
{
    require_same_domain(*this, other);
    IntFunction out = *this;
    for (std::size_t i = 0; i < values_.size(); ++i)
        out.values_[i] = detail::checked_add(values_[i], other.values_[i]);
    return out;
}

IntFunction IntFunction::operator-(IntFunction const& other) const
{
    require_same_domain(*this, other);
    IntFunction out = *this;
    for (std::size_t i = 0; i < values_.size(); ++i)
        out.values_[i] = detail::checked_sub(values_[i], other.values_[i]);
    return out;
}

IntFunction IntFunction::scaled(std::int64_t k) const
{
    IntFunction out = *this;
    for (auto& v : out.values_)
        v = detail::checked_mul(v, k);
    return out;
}

std::int64_t IntFunction::total() const
{
    std::int64_t s = 0;
    for (auto v : values_)
        s = detail::checked_add(s, v);
    return s;
}

IntFunction mobius_inversion(IntFunction const& m)
{
    FinitePoset const& p = *m.domain();
    std::vector<std::int64_t> dm(p.size(), 0);
    for (std::size_t b : p.linear_extension())
    {
        std::int64_t v = m[b];
        for (std::size_t a = 0; a < p.size(); ++a)
            if (p.less(a, b))
                v = detail::checked_sub(v, dm[a]);
        dm[b] = v;
    }
    return IntFunction(m.domain(), std::move(dm));
}

IntFunction mobius_sum(IntFunction const& m)
{
    FinitePoset const& p = *m.domain();
    std::vector<std::int64_t> s(p.size(), 0);
    for (std::size_t b = 0; b < p.size(); ++b)
        for (std::size_t a = 0; a < p.size(); ++a)
            if (p.leq(a, b))
                s[b] = detail::checked_add(s[b], m[a]);
    return IntFunction(m.domain(), std::move(s));
}

IntFunction pullback(IntFunction const& m, PosetPtr target, std::span<std::size_t const> g)
{
    if (g.size() != target->size())
        throw Error(ErrorKind::IndexMismatch, "pullback map is not total");
    std::vector<std::int64_t> out(g.size());
    for (std::size_t x = 0; x < g.size(); ++x)
    {
        if (g[x] >= m.size())
            throw Error(ErrorKind::IndexMismatch, "pullback map leaves the function's domain");
        out[x] = m[g[x]];
    }
    return IntFunction(std::move(target), std::move(out));
}

IntFunction pushforward(IntFunction const& m, PosetPtr target, std::span<std::size_t const> f)
{
    if (f.size() != m.size())
        throw Error(ErrorKind::IndexMismatch, "pushforward map is not total");
    std::vector<std::int64_t> out(target->size(), 0);
    for (std::size_t a = 0; a < f.size(); ++a)
    {
        if (f[a] >= out.size())
            throw Error(ErrorKind::IndexMismatch, "pushforward map leaves its target");
        out[f[a]] = detail::checked_add(out[f[a]], m[a]);
    }
    return IntFunction(std::move(target), std::move(out));
}

RotaReport check_rota(GaloisConnection const& c, IntFunction const& m)
{
    IntFunction lhs = mobius_inversion(pullback(m, c.target, c.g));
    IntFunction rhs = pushforward(mobius_inversion(m), c.target, c.f);
    RotaReport report{true, std::nullopt, lhs, rhs};
    for (std::size_t x = 0; x < lhs.size(); ++x)
        if (lhs[x] != rhs[x])
        {
            report.pass = false;
            report.witness = x;
            break;
        }
    return report;
}

std::optional<std::size_t> first_off_diagonal_difference(IntFunction const& m,
                                                         IntFunction const& n,
                                                         IntervalPoset const& ip)
{
    if (m.size() != ip.size() || n.size() != ip.size())
        throw Error(ErrorKind::IndexMismatch, "functions are not defined on this interval poset");
    for (std::size_t i = 0; i < ip.size(); ++i)
        if (!ip.is_diagonal(i) && m[i] != n[i])
            return i;
    return std::nullopt;
}

} // namespace gpd
