// Slow, independent reference computations used as test oracles. Nothing
// here calls into the library's linear algebra or chain complexes; only
// the order relation and simplex lists are read from library objects.
#ifndef GPD_TESTS_ORACLE_HPP
#define GPD_TESTS_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "gpd/poset.hpp"
#include "gpd/simplicial.hpp"

namespace oracle
{

using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>; // list of column vectors

inline std::int64_t mod(std::int64_t v, std::int64_t p)
{
    v %= p;
    return v < 0 ? v + p : v;
}

inline std::int64_t inverse(std::int64_t a, std::int64_t p)
{
    for (std::int64_t x = 1; x < p; ++x)
        if (mod(a * x, p) == 1)
            return x;
    return 0;
}

/// Rank of the span of `columns` over GF(p), by plain elimination.
inline std::size_t rank(Mat columns, std::int64_t p)
{
    std::size_t r = 0;
    if (columns.empty())
        return 0;
    std::size_t const n = columns[0].size();
    for (std::size_t row = 0; row < n && r < columns.size(); ++row)
    {
        std::size_t pivot = r;
        while (pivot < columns.size() && mod(columns[pivot][row], p) == 0)
            ++pivot;
        if (pivot == columns.size())
            continue;
        std::swap(columns[r], columns[pivot]);
        std::int64_t const inv = inverse(mod(columns[r][row], p), p);
        for (std::size_t c = 0; c < columns.size(); ++c)
        {
            if (c == r)
                continue;
            std::int64_t const k = mod(columns[c][row] * inv, p);
            if (k == 0)
                continue;
            for (std::size_t i = 0; i < n; ++i)
                columns[c][i] = mod(columns[c][i] - k * columns[r][i], p);
        }
        ++r;
    }
    return r;
}

/// Basis of {x : A x = 0} for A given as columns of length `rows`.
inline Mat nullspace(Mat const& a, std::size_t rows, std::int64_t p)
{
    std::size_t const cols = a.size();
    // Row-major copy for row reduction.
    std::vector<Vec> m(rows, Vec(cols));
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < rows; ++r)
            m[r][c] = mod(a[c][r], p);
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c)
    {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[r], m[pivot]);
        std::int64_t const inv = inverse(m[r][c], p);
        for (auto& x : m[r])
            x = mod(x * inv, p);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && m[i][c] != 0)
            {
                std::int64_t const k = m[i][c];
                for (std::size_t j = 0; j < cols; ++j)
                    m[i][j] = mod(m[i][j] - k * m[r][j], p);
            }
        pivot_cols.push_back(c);
        ++r;
    }
    Mat out;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols)
        is_pivot[c] = true;
    for (std::size_t free = 0; free < cols; ++free)
    {
        if (is_pivot[free])
            continue;
        Vec v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i)
            v[pivot_cols[i]] = mod(-m[i][free], p);
        out.push_back(std::move(v));
    }
    return out;
}

/// Möbius inversion through the Möbius function of the incidence algebra.
inline std::vector<std::int64_t> mobius(gpd::FinitePoset const& p, std::vector<std::int64_t> const& m)
{
    std::size_t const n = p.size();
    std::vector<std::vector<std::int64_t>> mu(n, std::vector<std::int64_t>(n, 0));
    // Process pairs by increasing size of the interval [a,b].
    auto interval_size = [&](std::size_t a, std::size_t b) {
        std::size_t k = 0;
        for (std::size_t c = 0; c < n; ++c)
            k += p.leq(a, c) && p.leq(c, b);
        return k;
    };
    std::vector<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> pairs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (p.leq(a, b))
                pairs.push_back({interval_size(a, b), {a, b}});
    std::sort(pairs.begin(), pairs.end());
    for (auto const& [size, ab] : pairs)
    {
        auto [a, b] = ab;
        if (a == b)
        {
            mu[a][b] = 1;
            continue;
        }
        std::int64_t s = 0;
        for (std::size_t c = 0; c < n; ++c)
            if (p.leq(a, c) && p.leq(c, b) && c != b)
                s += mu[a][c];
        mu[a][b] = -s;
    }
    std::vector<std::int64_t> out(n, 0);
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t a = 0; a < n; ++a)
            if (p.leq(a, b))
                out[b] += mu[a][b] * m[a];
    return out;
}

/// Number of chains s_0 < ... < s_k of nonempty faces, for each k.
inline std::vector<std::size_t> chain_counts(gpd::SimplicialComplex const& k)
{
    std::size_t const n = k.size();
    auto proper_face = [&](std::size_t a, std::size_t b) {
        auto const& x = k.simplex(a);
        auto const& y = k.simplex(b);
        return x.size() < y.size() && std::includes(y.begin(), y.end(), x.begin(), x.end());
    };
    // ending[i][len] = chains of length len+1 whose top is simplex i.
    std::size_t const depth = static_cast<std::size_t>(k.dimension() + 1);
    std::vector<std::vector<std::size_t>> ending(n, std::vector<std::size_t>(depth, 0));
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return k.simplex(a).size() < k.simplex(b).size(); });
    std::vector<std::size_t> totals(depth, 0);
    for (std::size_t i : order)
    {
        ending[i][0] = 1;
        for (std::size_t j = 0; j < n; ++j)
            if (proper_face(j, i))
                for (std::size_t len = 1; len < depth; ++len)
                    ending[i][len] += ending[j][len - 1];
        for (std::size_t len = 0; len < depth; ++len)
            totals[len] += ending[i][len];
    }
    return totals;
}

/// Signed boundary of the d-simplices into the (d-1)-simplices, in the
/// complex's simplex numbering, computed from vertex lists.
struct Boundary
{
    std::vector<std::size_t> rows; // (d-1)-simplex ids
    std::vector<std::size_t> cols; // d-simplex ids
    Mat columns;
};

inline Boundary boundary(gpd::SimplicialComplex const& k, int d)
{
    Boundary b;
    std::map<gpd::SimplicialComplex::Simplex, std::size_t> row_of;
    for (std::size_t i = 0; i < k.size(); ++i)
    {
        int const dim = static_cast<int>(k.simplex(i).size()) - 1;
        if (dim == d - 1)
        {
            row_of[k.simplex(i)] = b.rows.size();
            b.rows.push_back(i);
        }
    }
    for (std::size_t i = 0; i < k.size(); ++i)
    {
        auto const& s = k.simplex(i);
        if (static_cast<int>(s.size()) - 1 != d)
            continue;
        b.cols.push_back(i);
        Vec col(b.rows.size(), 0);
        if (d > 0)
            for (std::size_t r = 0; r < s.size(); ++r)
            {
                auto face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(r));
                col[row_of.at(face)] = (r % 2 == 0) ? 1 : -1;
            }
        b.columns.push_back(std::move(col));
    }
    return b;
}

/// Classical persistence of a nested sequence of subcomplexes F_0 ⊆ ... ⊆ F_{n-1}
/// (membership masks over K). Returns mult[i][j], i < j, the number of degree-d
/// classes born at i that first become boundaries at j, by the four-term
/// inclusion-exclusion of ranks r(i,j) = rank H_d(F_i) -> H_d(F_j).
inline std::vector<std::vector<std::int64_t>> classical_diagram(gpd::SimplicialComplex const& k,
                                                                std::vector<std::vector<bool>> const& steps,
                                                                int d, std::int64_t p)
{
    std::size_t const n = steps.size();
    Boundary const low = boundary(k, d);
    Boundary const high = boundary(k, d + 1);
    std::size_t const nd = low.cols.size();

    // Z_i: cycles supported on F_i's d-simplices, embedded in C_d(K).
    std::vector<Mat> z(n), bnd(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        std::vector<std::size_t> support;
        Mat restricted;
        for (std::size_t c = 0; c < nd; ++c)
            if (steps[i][low.cols[c]])
            {
                support.push_back(c);
                restricted.push_back(low.columns[c]);
            }
        for (auto const& v : nullspace(restricted, low.rows.size(), p))
        {
            Vec full(nd, 0);
            for (std::size_t t = 0; t < support.size(); ++t)
                full[support[t]] = v[t];
            z[i].push_back(std::move(full));
        }
        for (std::size_t c = 0; c < high.cols.size(); ++c)
            if (steps[i][high.cols[c]])
                bnd[i].push_back(high.columns[c]);
    }

    auto r = [&](std::ptrdiff_t i, std::ptrdiff_t j) -> std::int64_t {
        if (i < 0)
            return 0;
        Mat both = z[static_cast<std::size_t>(i)];
        both.insert(both.end(), bnd[static_cast<std::size_t>(j)].begin(), bnd[static_cast<std::size_t>(j)].end());
        return static_cast<std::int64_t>(rank(both, p)) -
               static_cast<std::int64_t>(rank(bnd[static_cast<std::size_t>(j)], p));
    };

    std::vector<std::vector<std::int64_t>> mult(n, std::vector<std::int64_t>(n, 0));
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        for (std::ptrdiff_t j = i + 1; j < static_cast<std::ptrdiff_t>(n); ++j)
            mult[i][j] = r(i, j - 1) - r(i - 1, j - 1) - r(i, j) + r(i - 1, j);
    return mult;
}

/// Int f is a lower adjoint of Int g, checked over every pair of intervals.
inline bool interval_adjunction_holds(gpd::GaloisConnection const& c)
{
    gpd::FinitePoset const& p = *c.source;
    gpd::FinitePoset const& q = *c.target;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
        {
            if (!p.leq(a, b))
                continue;
            for (std::size_t x = 0; x < q.size(); ++x)
                for (std::size_t y = 0; y < q.size(); ++y)
                {
                    if (!q.leq(x, y))
                        continue;
                    bool const lhs = q.leq(c.f[a], x) && q.leq(c.f[b], y);
                    bool const rhs = p.leq(a, c.g[x]) && p.leq(b, c.g[y]);
                    if (lhs != rhs)
                        return false;
                }
        }
    return true;
}

} // namespace oracle

#endif // GPD_TESTS_ORACLE_HPP
