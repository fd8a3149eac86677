#ifndef GPD_LINALG_HPP
#define GPD_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace gpd
{

/// A prime field F_p.
class Field
{
public:
    /// Throws InvalidField unless p is prime.
    explicit Field(std::uint32_t p = 2);

    std::uint32_t p() const noexcept { return p_; }

    std::uint32_t residue(std::int64_t v) const noexcept
    {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept
    {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept
    {
        return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t(a) + p_ - b);
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept
    {
        return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
    }

    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }

    std::uint32_t inv(std::uint32_t a) const;

    friend bool operator==(Field const&, Field const&) = default;

private:
    std::uint32_t p_;
};

/// Dense row-major matrix of residues mod p.
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Field field);

    static Matrix identity(std::size_t n, Field field);

    /// Row-major integers, reduced mod p.
    static Matrix from_ints(std::size_t rows, std::size_t cols,
                            std::span<std::int64_t const> values, Field field);
    static Matrix from_ints(std::size_t rows, std::size_t cols,
                            std::initializer_list<std::int64_t> values, Field field)
    {
        return from_ints(rows, cols, std::span<std::int64_t const>(values.begin(), values.size()), field);
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Field const& field() const noexcept { return field_; }

    std::uint32_t operator()(std::size_t r, std::size_t c) const noexcept
    {
        return data_[r * cols_ + c];
    }

    void set(std::size_t r, std::size_t c, std::int64_t v) noexcept
    {
        data_[r * cols_ + c] = field_.residue(v);
    }

    std::span<std::uint32_t const> row(std::size_t r) const noexcept
    {
        return {data_.data() + r * cols_, cols_};
    }

    Matrix transpose() const;
    bool is_zero() const noexcept;

    Matrix select_columns(std::span<std::size_t const> columns) const;

    friend Matrix operator*(Matrix const& a, Matrix const& b);
    friend bool operator==(Matrix const& a, Matrix const& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Field field_{};
    std::vector<std::uint32_t> data_;
};

/// [a | b]; row counts must agree.
Matrix hconcat(Matrix const& a, Matrix const& b);

/// A subspace of F^n given by a basis of independent columns.
struct Subspace
{
    std::size_t ambient_dim = 0;
    Matrix basis; // ambient_dim x dim

    std::size_t dim() const noexcept { return basis.cols(); }
};

Subspace zero_subspace(std::size_t ambient_dim, Field field);

/// Reduced row echelon form. Pivots are the first nonzero column of each
/// nonzero row, searched in column order.
struct Echelon
{
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

Echelon row_reduce(Matrix const& m);

std::size_t rank(Matrix const& m);

/// Null space basis; one vector per free column, ordered by column.
Subspace kernel_basis(Matrix const& m);

/// The span of the columns of m, based on its pivot columns.
Subspace column_space(Matrix const& m);

/// dim U + dim W - rank [U | W]. Throws AmbientMismatch.
std::size_t intersection_dim(Subspace const& u, Subspace const& w);

/// Solves basis * x = rhs column by column. `basis` must have independent
/// columns and every column of rhs must lie in its span (Internal otherwise).
Matrix solve(Matrix const& basis, Matrix const& rhs);

/// Image of a subspace under the coordinate injection that sends
/// coordinate i to coordinate positions[i] of an ambient_dim-space.
Subspace embed(Subspace const& s, std::span<std::size_t const> positions, std::size_t ambient_dim);

/// Columns of `extension` that are independent modulo span(base), chosen
/// greedily by column order. Returned as positions into `extension`.
std::vector<std::size_t> complement_columns(Matrix const& base, Matrix const& extension);

} // namespace gpd

#endif // GPD_LINALG_HPP
