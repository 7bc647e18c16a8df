#include "gemkit/smith.hpp"

#include <optional>
#include <utility>

namespace gemkit {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    for (long long x : row) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

namespace {

// Row and column operations on the working matrix, mirrored on the optional
// transforms so that left * input * right stays equal to the working matrix.
class Reducer {
 public:
  Reducer(IntMatrix m, bool track) : a_(std::move(m)) {
    if (track) {
      left_ = IntMatrix::identity(a_.rows());
      right_ = IntMatrix::identity(a_.cols());
    }
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    swap_rows_in(a_, i, k);
    if (left_) swap_rows_in(*left_, i, k);
  }

  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    swap_cols_in(a_, j, k);
    if (right_) swap_cols_in(*right_, j, k);
  }

  // row[i] -= q * row[k]
  void sub_row(std::size_t i, std::size_t k, const BigInt& q) {
    sub_row_in(a_, i, k, q);
    if (left_) sub_row_in(*left_, i, k, q);
  }

  // col[j] -= q * col[k]
  void sub_col(std::size_t j, std::size_t k, const BigInt& q) {
    sub_col_in(a_, j, k, q);
    if (right_) sub_col_in(*right_, j, k, q);
  }

  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(i, j) = -a_(i, j);
    if (left_)
      for (std::size_t j = 0; j < left_->cols(); ++j) (*left_)(i, j) = -(*left_)(i, j);
  }

  SmithDecomposition run() {
    const std::size_t rows = a_.rows();
    const std::size_t cols = a_.cols();
    std::size_t t = 0;
    while (t < rows && t < cols) {
      if (!move_min_pivot(t, t, rows, t, cols)) break;
      for (;;) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a_(i, t) == 0) continue;
          sub_row(i, t, BigInt(a_(i, t) / a_(t, t)));
          if (a_(i, t) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a_(t, j) == 0) continue;
          sub_col(j, t, BigInt(a_(t, j) / a_(t, t)));
          if (a_(t, j) != 0) dirty = true;
        }
        if (dirty) {
          // A remainder smaller than the pivot survived in row or column t.
          move_min_pivot(t, t, rows, t, t + 1);
          move_min_pivot(t, t, t + 1, t, cols);
          continue;
        }
        // Row and column t are clear; enforce divisibility of the rest.
        std::optional<std::size_t> offender;
        for (std::size_t i = t + 1; i < rows && !offender; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a_(i, j) % a_(t, t) != 0) {
              offender = i;
              break;
            }
        if (!offender) break;
        sub_row(t, *offender, BigInt(-1));
      }
      if (a_(t, t) < 0) negate_row(t);
      ++t;
    }

    SmithDecomposition out;
    out.form.rank = t;
    for (std::size_t k = 0; k < t; ++k) out.form.factors.push_back(a_(k, k));
    out.diagonal = std::move(a_);
    if (left_) out.left = std::move(*left_);
    if (right_) out.right = std::move(*right_);
    return out;
  }

 private:
  // Moves the entry of least nonzero magnitude in [r0,r1) x [c0,c1) to (t,t).
  bool move_min_pivot(std::size_t t, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    std::optional<std::pair<std::size_t, std::size_t>> at;
    BigInt best;
    for (std::size_t i = r0; i < r1; ++i)
      for (std::size_t j = c0; j < c1; ++j) {
        if (a_(i, j) == 0) continue;
        BigInt mag = abs(a_(i, j));
        if (!at || mag < best) {
          best = std::move(mag);
          at = {i, j};
        }
      }
    if (!at) return false;
    if (best < abs(a_(t, t)) || a_(t, t) == 0) {
      swap_rows(t, at->first);
      swap_cols(t, at->second);
    }
    return true;
  }

  static void swap_rows_in(IntMatrix& m, std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(i, j), m(k, j));
  }
  static void swap_cols_in(IntMatrix& m, std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, j), m(i, k));
  }
  static void sub_row_in(IntMatrix& m, std::size_t i, std::size_t k, const BigInt& q) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(k, j) != 0) m(i, j) -= q * m(k, j);
  }
  static void sub_col_in(IntMatrix& m, std::size_t j, std::size_t k, const BigInt& q) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m(i, k) != 0) m(i, j) -= q * m(i, k);
  }

  IntMatrix a_;
  std::optional<IntMatrix> left_;
  std::optional<IntMatrix> right_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) { return Reducer(m, false).run().form; }

SmithDecomposition smith_decomposition(const IntMatrix& m) { return Reducer(m, true).run(); }

}  // namespace gemkit
