#ifndef SKEWRANK_INT_MATRIX_HPP
#define SKEWRANK_INT_MATRIX_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace skewrank {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer matrix, row-major, arbitrary-precision entries.
class IntMatrix {
  public:
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("matrix dimensions must be non-negative");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& operator()(int i, int j) {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }
    const BigInt& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

  private:
    int rows_, cols_;
    std::vector<BigInt> a_;
};

namespace detail {

// Fraction-free (Bareiss) elimination over int64 with overflow guards.
// Returns the rank, or nullopt if any product leaves the int64 range.
inline std::optional<int> bareiss_rank_i64(std::vector<std::int64_t> m, int rows, int cols) {
    auto at = [&](int i, int j) -> std::int64_t& {
        return m[static_cast<std::size_t>(i) * cols + j];
    };
    std::int64_t prev = 1;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int i = row; i < rows; ++i)
            if (at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < cols; ++j) std::swap(at(pivot, j), at(row, j));
        for (int i = row + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                std::int64_t a, b, d;
                if (__builtin_mul_overflow(at(row, col), at(i, j), &a)) return std::nullopt;
                if (__builtin_mul_overflow(at(i, col), at(row, j), &b)) return std::nullopt;
                if (__builtin_sub_overflow(a, b, &d)) return std::nullopt;
                at(i, j) = d / prev;  // exact by Sylvester's identity
            }
            at(i, col) = 0;
        }
        prev = at(row, col);
        ++row;
    }
    return row;
}

inline int bareiss_rank_big(IntMatrix m) {
    int rows = m.rows(), cols = m.cols();
    BigInt prev = 1;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int i = row; i < rows; ++i)
            if (m(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < cols; ++j) std::swap(m(pivot, j), m(row, j));
        for (int i = row + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                m(i, j) = (m(row, col) * m(i, j) - m(i, col) * m(row, j)) / prev;
            m(i, col) = 0;
        }
        prev = m(row, col);
        ++row;
    }
    return row;
}

}  // namespace detail

// Exact rank over the rationals. Tries an int64 fast path first (adjacency
// and skew-adjacency inputs are 0/+-1, so it almost always suffices) and
// falls back to arbitrary precision on overflow.
inline int rank(const IntMatrix& m) {
    constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> small(static_cast<std::size_t>(m.rows()) * m.cols());
    bool fits = true;
    for (int i = 0; i < m.rows() && fits; ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const BigInt& v = m(i, j);
            if (v > kMax || v < std::numeric_limits<std::int64_t>::min()) {
                fits = false;
                break;
            }
            small[static_cast<std::size_t>(i) * m.cols() + j] = v.convert_to<std::int64_t>();
        }
    if (fits)
        if (auto r = detail::bareiss_rank_i64(std::move(small), m.rows(), m.cols()))
            return *r;
    return detail::bareiss_rank_big(m);
}

inline bool is_skew_symmetric(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("skew-symmetry is defined for square matrices only");
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i; j < m.cols(); ++j)
            if (m(i, j) != -m(j, i)) return false;
    return true;
}

}  // namespace skewrank

#endif  // SKEWRANK_INT_MATRIX_HPP
