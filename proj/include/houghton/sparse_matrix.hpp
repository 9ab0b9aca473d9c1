#ifndef HOUGHTON_SPARSE_MATRIX_HPP
#define HOUGHTON_SPARSE_MATRIX_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "houghton/errors.hpp"

namespace houghton {

using BigInt = boost::multiprecision::cpp_int;

// Checked signed arithmetic: the int64 overloads throw OverflowError so the
// homology engine can fall back to arbitrary precision; other types pass
// through untouched.
inline std::int64_t chk_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 add overflow");
    return r;
}
inline std::int64_t chk_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 sub overflow");
    return r;
}
inline std::int64_t chk_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 mul overflow");
    return r;
}
template <class T> T chk_add(const T& a, const T& b) { return a + b; }
template <class T> T chk_sub(const T& a, const T& b) { return a - b; }
template <class T> T chk_mul(const T& a, const T& b) { return a * b; }

template <class T> T abs_of(const T& a) { return a < 0 ? T(-a) : a; }

inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline BigInt gcd_of(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

/// Sparse integer matrix; stored zero entries are never kept. Row and column
/// indices are 0-based.
template <class T>
class SparseMat {
public:
    SparseMat() = default;
    SparseMat(int rows, int cols) : rows_(rows), cols_(cols), col_data_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, T v)
    {
        auto& col = col_data_[c];
        if (v == 0) {
            col.erase(r);
        } else {
            col[r] = std::move(v);
        }
    }

    T get(int r, int c) const
    {
        const auto& col = col_data_[c];
        auto it = col.find(r);
        return it == col.end() ? T(0) : it->second;
    }

    void add_to(int r, int c, const T& delta)
    {
        auto& col = col_data_[c];
        auto it = col.find(r);
        if (it == col.end()) {
            if (delta != 0) col.emplace(r, delta);
        } else {
            it->second = chk_add(it->second, delta);
            if (it->second == 0) col.erase(it);
        }
    }

    const std::map<int, T>& column(int c) const { return col_data_[c]; }

    std::size_t nnz() const
    {
        std::size_t total = 0;
        for (const auto& col : col_data_) total += col.size();
        return total;
    }

    template <class Fn>
    void for_each(Fn&& fn) const
    {
        for (int c = 0; c < cols_; ++c)
            for (const auto& [r, v] : col_data_[c]) fn(r, c, v);
    }

    template <class U>
    SparseMat<U> cast() const
    {
        SparseMat<U> out(rows_, cols_);
        for_each([&](int r, int c, const T& v) { out.set(r, c, U(v)); });
        return out;
    }

    /// this * other, with checked arithmetic.
    SparseMat<T> multiply(const SparseMat<T>& other) const
    {
        SparseMat<T> out(rows_, other.cols_);
        for (int c = 0; c < other.cols_; ++c)
            for (const auto& [k, v] : other.col_data_[c])
                for (const auto& [r, w] : col_data_[k]) out.add_to(r, c, chk_mul(w, v));
        return out;
    }

    bool is_zero() const { return nnz() == 0; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::map<int, T>> col_data_;
};

/// Exact integer matrix with arbitrary-precision entries (the public face of
/// the reduction backend; the engine runs an int64 fast path internally).
using IntegerMatrix = SparseMat<BigInt>;

} // namespace houghton

#endif
