#include "gpd/linalg.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "gpd/error.hpp"

namespace gpd
{

namespace
{

bool is_prime(std::uint32_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

void require_same_field(Matrix const& a, Matrix const& b)
{
    if (!(a.field() == b.field()))
        throw Error(ErrorKind::InvalidField, "matrices over different fields");
}

// Packed GF(2) elimination: each row is a run of 64-bit words.
Echelon row_reduce_gf2(Matrix const& m)
{
    std::size_t const rows = m.rows(), cols = m.cols();
    std::size_t const words = (cols + 63) / 64;
    std::vector<std::uint64_t> bits(rows * words, 0);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (m(r, c))
                bits[r * words + c / 64] |= std::uint64_t{1} << (c % 64);

    auto word = [&](std::size_t r, std::size_t w) -> std::uint64_t& { return bits[r * words + w]; };

    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c)
    {
        std::size_t const w = c / 64;
        std::uint64_t const mask = std::uint64_t{1} << (c % 64);
        std::size_t found = rows;
        for (std::size_t r = pivot_row; r < rows; ++r)
            if (word(r, w) & mask)
            {
                found = r;
                break;
            }
        if (found == rows)
            continue;
        if (found != pivot_row)
            for (std::size_t k = 0; k < words; ++k)
                std::swap(word(found, k), word(pivot_row, k));
        for (std::size_t r = 0; r < rows; ++r)
            if (r != pivot_row && (word(r, w) & mask))
                for (std::size_t k = w; k < words; ++k)
                    word(r, k) ^= word(pivot_row, k);
        pivots.push_back(c);
        ++pivot_row;
    }

    Matrix reduced(rows, cols, m.field());
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t w = 0; w < words; ++w)
        {
            std::uint64_t x = word(r, w);
            while (x)
            {
                int const b = std::countr_zero(x);
                reduced.set(r, w * 64 + static_cast<std::size_t>(b), 1);
                x &= x - 1;
            }
        }
    return {std::move(reduced), std::move(pivots)};
}

Echelon row_reduce_modp(Matrix const& m)
{
    Field const& f = m.field();
    std::size_t const rows = m.rows(), cols = m.cols();
    std::vector<std::uint32_t> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            a[r * cols + c] = m(r, c);
    auto at = [&](std::size_t r, std::size_t c) -> std::uint32_t& { return a[r * cols + c]; };

    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c)
    {
        std::size_t found = rows;
        for (std::size_t r = pivot_row; r < rows; ++r)
            if (at(r, c) != 0)
            {
                found = r;
                break;
            }
        if (found == rows)
            continue;
        if (found != pivot_row)
            for (std::size_t k = 0; k < cols; ++k)
                std::swap(at(found, k), at(pivot_row, k));
        std::uint32_t const inv = f.inv(at(pivot_row, c));
        for (std::size_t k = c; k < cols; ++k)
            at(pivot_row, k) = f.mul(at(pivot_row, k), inv);
        for (std::size_t r = 0; r < rows; ++r)
        {
            if (r == pivot_row || at(r, c) == 0)
                continue;
            std::uint32_t const factor = at(r, c);
            for (std::size_t k = c; k < cols; ++k)
                at(r, k) = f.sub(at(r, k), f.mul(factor, at(pivot_row, k)));
        }
        pivots.push_back(c);
        ++pivot_row;
    }

    Matrix reduced(rows, cols, f);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            reduced.set(r, c, a[r * cols + c]);
    return {std::move(reduced), std::move(pivots)};
}

} // namespace

Field::Field(std::uint32_t p)
    : p_(p)
{
    if (!is_prime(p))
        throw Error(ErrorKind::InvalidField, std::to_string(p) + " is not prime");
}

std::uint32_t Field::inv(std::uint32_t a) const
{
    if (a == 0)
        throw Error(ErrorKind::Internal, "division by zero in F_" + std::to_string(p_));
    // a^(p-2) by square-and-multiply
    std::uint32_t result = 1, base = a;
    std::uint32_t e = p_ - 2;
    while (e)
    {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0)
{
}

Matrix Matrix::identity(std::size_t n, Field field)
{
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_ints(std::size_t rows, std::size_t cols,
                         std::span<std::int64_t const> values, Field field)
{
    if (values.size() != rows * cols)
        throw Error(ErrorKind::ShapeMismatch,
                    "expected " + std::to_string(rows * cols) + " entries, got " +
                        std::to_string(values.size()));
    Matrix m(rows, cols, field);
    for (std::size_t i = 0; i < values.size(); ++i)
        m.data_[i] = field.residue(values[i]);
    return m;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.data_[c * rows_ + r] = data_[r * cols_ + c];
    return t;
}

bool Matrix::is_zero() const noexcept
{
    return std::all_of(data_.begin(), data_.end(), [](std::uint32_t v) { return v == 0; });
}

Matrix Matrix::select_columns(std::span<std::size_t const> columns) const
{
    Matrix out(rows_, columns.size(), field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < columns.size(); ++j)
            out.data_[r * columns.size() + j] = data_[r * cols_ + columns[j]];
    return out;
}

Matrix operator*(Matrix const& a, Matrix const& b)
{
    require_same_field(a, b);
    if (a.cols_ != b.rows_)
        throw Error(ErrorKind::ShapeMismatch,
                    std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " times " +
                        std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    Field const& f = a.field_;
    Matrix c(a.rows_, b.cols_, f);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
        {
            std::uint32_t const x = a.data_[i * a.cols_ + k];
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c.data_[i * b.cols_ + j] = f.add(c.data_[i * b.cols_ + j], f.mul(x, b.data_[k * b.cols_ + j]));
        }
    return c;
}

Matrix hconcat(Matrix const& a, Matrix const& b)
{
    require_same_field(a, b);
    if (a.rows() != b.rows())
        throw Error(ErrorKind::ShapeMismatch, "hconcat of matrices with different row counts");
    Matrix out(a.rows(), a.cols() + b.cols(), a.field());
    for (std::size_t r = 0; r < a.rows(); ++r)
    {
        for (std::size_t c = 0; c < a.cols(); ++c)
            out.set(r, c, a(r, c));
        for (std::size_t c = 0; c < b.cols(); ++c)
            out.set(r, a.cols() + c, b(r, c));
    }
    return out;
}

Subspace zero_subspace(std::size_t ambient_dim, Field field)
{
    return Subspace{ambient_dim, Matrix(ambient_dim, 0, field)};
}

Echelon row_reduce(Matrix const& m)
{
    if (m.field().p() == 2)
        return row_reduce_gf2(m);
    return row_reduce_modp(m);
}

std::size_t rank(Matrix const& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    return row_reduce(m).pivots.size();
}

Subspace kernel_basis(Matrix const& m)
{
    Field const& f = m.field();
    Echelon const e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivots)
        is_pivot[c] = true;

    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c])
            free.push_back(c);

    Matrix basis(m.cols(), free.size(), f);
    for (std::size_t j = 0; j < free.size(); ++j)
    {
        std::size_t const fc = free[j];
        basis.set(fc, j, 1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            basis.set(e.pivots[r], j, f.neg(e.reduced(r, fc)));
    }
    return Subspace{m.cols(), std::move(basis)};
}

Subspace column_space(Matrix const& m)
{
    if (m.cols() == 0 || m.rows() == 0)
        return zero_subspace(m.rows(), m.field());
    Echelon const e = row_reduce(m);
    return Subspace{m.rows(), m.select_columns(e.pivots)};
}

std::size_t intersection_dim(Subspace const& u, Subspace const& w)
{
    if (u.ambient_dim != w.ambient_dim)
        throw Error(ErrorKind::AmbientMismatch,
                    "ambient dimensions " + std::to_string(u.ambient_dim) + " and " +
                        std::to_string(w.ambient_dim));
    if (u.dim() == 0 || w.dim() == 0)
        return 0;
    return u.dim() + w.dim() - rank(hconcat(u.basis, w.basis));
}

Matrix solve(Matrix const& basis, Matrix const& rhs)
{
    if (basis.rows() != rhs.rows())
        throw Error(ErrorKind::ShapeMismatch, "solve: row counts differ");
    std::size_t const k = basis.cols();
    Matrix x(k, rhs.cols(), basis.field());
    if (rhs.cols() == 0)
        return x;
    Echelon const e = row_reduce(hconcat(basis, rhs));
    // Every pivot must sit inside the basis block, one per basis column.
    if (e.pivots.size() != k || (k > 0 && e.pivots.back() >= k))
        throw Error(ErrorKind::Internal, "solve: system is inconsistent or basis is dependent");
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = 0; j < rhs.cols(); ++j)
            x.set(r, j, e.reduced(r, k + j));
    return x;
}

Subspace embed(Subspace const& s, std::span<std::size_t const> positions, std::size_t ambient_dim)
{
    if (positions.size() != s.ambient_dim)
        throw Error(ErrorKind::AmbientMismatch, "embedding does not match subspace ambient");
    Matrix out(ambient_dim, s.dim(), s.basis.field());
    for (std::size_t i = 0; i < positions.size(); ++i)
    {
        if (positions[i] >= ambient_dim)
            throw Error(ErrorKind::AmbientMismatch, "embedding position out of range");
        for (std::size_t j = 0; j < s.dim(); ++j)
            out.set(positions[i], j, s.basis(i, j));
    }
    return Subspace{ambient_dim, std::move(out)};
}

std::vector<std::size_t> complement_columns(Matrix const& base, Matrix const& extension)
{
    std::vector<std::size_t> out;
    if (extension.cols() == 0)
        return out;
    Echelon const e = row_reduce(hconcat(base, extension));
    for (std::size_t c : e.pivots)
        if (c >= base.cols())
            out.push_back(c - base.cols());
    return out;
}

} // namespace gpd
