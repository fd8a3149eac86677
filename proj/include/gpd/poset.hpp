#ifndef GPD_POSET_HPP
#define GPD_POSET_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gpd
{

/// A finite partially ordered set. Elements are opaque string ids; every
/// other part of the library refers to them by their position in the
/// canonical element list.
class FinitePoset
{
public:
    /// Builds the order generated by `covers` (pairs lower < upper). The
    /// pairs need not be actual covers; transitive pairs are accepted.
    static FinitePoset from_covers(
        std::vector<std::string> elements,
        std::vector<std::pair<std::string, std::string>> const& covers);

    /// Same as from_covers but with positional pairs.
    static FinitePoset from_index_covers(
        std::vector<std::string> elements,
        std::vector<std::pair<std::size_t, std::size_t>> const& covers);

    std::size_t size() const noexcept { return names_.size(); }

    std::string const& name(std::size_t i) const { return names_.at(i); }
    std::vector<std::string> const& names() const noexcept { return names_; }

    std::optional<std::size_t> find(std::string_view id) const;

    /// Throws UnknownElement.
    std::size_t index_of(std::string_view id) const;

    bool leq(std::size_t a, std::size_t b) const noexcept
    {
        return leq_[a * names_.size() + b] != 0;
    }

    bool less(std::size_t a, std::size_t b) const noexcept
    {
        return a != b && leq(a, b);
    }

    bool comparable(std::size_t a, std::size_t b) const noexcept
    {
        return leq(a, b) || leq(b, a);
    }

    /// Deterministic linear extension (smallest available index first).
    std::span<std::size_t const> linear_extension() const noexcept
    {
        return linear_extension_;
    }

    /// The cover relation (transitive reduction), sorted lexicographically
    /// by (lower, upper) position.
    std::vector<std::pair<std::size_t, std::size_t>> const& hasse() const noexcept
    {
        return hasse_;
    }

    /// Number of pairs (a, b) with a <= b.
    std::size_t relation_size() const noexcept;

    std::optional<std::size_t> bottom() const;
    std::optional<std::size_t> top() const;

    friend bool operator==(FinitePoset const& x, FinitePoset const& y)
    {
        return x.names_ == y.names_ && x.leq_ == y.leq_;
    }

private:
    FinitePoset() = default;

    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::uint8_t> leq_;
    std::vector<std::size_t> linear_extension_;
    std::vector<std::pair<std::size_t, std::size_t>> hasse_;
};

using PosetPtr = std::shared_ptr<FinitePoset const>;

inline PosetPtr share(FinitePoset poset)
{
    return std::make_shared<FinitePoset const>(std::move(poset));
}

/// Graphviz rendering of the Hasse diagram, nodes in canonical order.
std::string hasse_dot(FinitePoset const& poset, std::string_view graph_name = "hasse");

struct Interval
{
    std::size_t lo;
    std::size_t hi;

    friend bool operator==(Interval const&, Interval const&) = default;
};

/// Int P under the product order. Intervals are enumerated with `lo` in
/// element order, then `hi` in element order.
class IntervalPoset
{
public:
    explicit IntervalPoset(PosetPtr parent);

    PosetPtr const& parent() const noexcept { return parent_; }
    PosetPtr const& poset() const noexcept { return poset_; }

    std::size_t size() const noexcept { return intervals_.size(); }
    Interval const& interval(std::size_t i) const { return intervals_.at(i); }
    std::vector<Interval> const& intervals() const noexcept { return intervals_; }

    /// Position of [lo, hi]; throws NotMonotone when lo is not below hi.
    std::size_t index(std::size_t lo, std::size_t hi) const;

    bool is_diagonal(std::size_t i) const { return intervals_.at(i).lo == intervals_.at(i).hi; }

private:
    PosetPtr parent_;
    PosetPtr poset_;
    std::vector<Interval> intervals_;
    std::vector<std::size_t> lookup_;
};

IntervalPoset interval_poset(PosetPtr parent);

/// A monotone Galois connection f : P <-> Q : g, stored as positional maps.
struct GaloisConnection
{
    PosetPtr source;
    PosetPtr target;
    std::vector<std::size_t> f;
    std::vector<std::size_t> g;
};

/// Throws NotMonotone or AdjunctionFailed (with the witness pair).
GaloisConnection validate_galois(PosetPtr source, PosetPtr target,
                                 std::vector<std::size_t> f,
                                 std::vector<std::size_t> g);

GaloisConnection identity_connection(PosetPtr poset);

/// Given f : P <-> Q : g and h : Q <-> R : i, returns h.f : P <-> R : g.i.
GaloisConnection compose(GaloisConnection const& first, GaloisConnection const& second);

/// Int f : Int P <-> Int Q : Int g. The interval posets must be built on
/// the connection's source and target.
GaloisConnection int_of_galois(GaloisConnection const& c,
                               IntervalPoset const& source,
                               IntervalPoset const& target);

/// An integer-valued function on a finite poset.
class IntFunction
{
public:
    IntFunction(PosetPtr domain, std::vector<std::int64_t> values);

    static IntFunction zero(PosetPtr domain);

    PosetPtr const& domain() const noexcept { return domain_; }
    std::span<std::int64_t const> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

    std::int64_t operator[](std::size_t i) const { return values_.at(i); }
    std::int64_t& operator[](std::size_t i) { return values_.at(i); }

    IntFunction operator+(IntFunction const& other) const;
    IntFunction operator-(IntFunction const& other) const;
    IntFunction scaled(std::int64_t k) const;

    std::int64_t total() const;

    /// Value equality; domains must have equal sizes.
    friend bool operator==(IntFunction const& x, IntFunction const& y)
    {
        return x.values_ == y.values_;
    }

private:
    PosetPtr domain_;
    std::vector<std::int64_t> values_;
};

/// The unique dm with m(b) = sum_{a <= b} dm(a).
IntFunction mobius_inversion(IntFunction const& m);

/// Forward accumulation b -> sum_{a <= b} m(a); the inverse of mobius_inversion.
IntFunction mobius_sum(IntFunction const& m);

/// (g# m)(x) = m(g(x)) for g : Q -> P.
IntFunction pullback(IntFunction const& m, PosetPtr target, std::span<std::size_t const> g);

/// (f# m)(x) = sum over the fiber f^{-1}(x); empty fibers give 0.
IntFunction pushforward(IntFunction const& m, PosetPtr target, std::span<std::size_t const> f);

struct RotaReport
{
    bool pass = false;
    std::optional<std::size_t> witness; // element of Q where the sides differ
    IntFunction lhs;                    // d(g# m)
    IntFunction rhs;                    // f#(dm)
};

RotaReport check_rota(GaloisConnection const& c, IntFunction const& m);

/// m ~ n: equal on every strict interval a < b. Returns the first
/// offending interval position, or nullopt when equivalent.
std::optional<std::size_t> first_off_diagonal_difference(IntFunction const& m,
                                                         IntFunction const& n,
                                                         IntervalPoset const& ip);

inline bool equivalent(IntFunction const& m, IntFunction const& n, IntervalPoset const& ip)
{
    return !first_off_diagonal_difference(m, n, ip).has_value();
}

std::string interval_label(IntervalPoset const& ip, std::size_t i);

} // namespace gpd

#endif // GPD_POSET_HPP
