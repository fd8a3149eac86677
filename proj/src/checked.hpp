#ifndef GPD_SRC_CHECKED_HPP
#define GPD_SRC_CHECKED_HPP

#include <cstdint>

#include "gpd/error.hpp"

namespace gpd::detail
{

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(ErrorKind::Overflow, "64-bit integer addition overflowed");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Error(ErrorKind::Overflow, "64-bit integer subtraction overflowed");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorKind::Overflow, "64-bit integer multiplication overflowed");
    return r;
}

} // namespace gpd::detail

#endif
