#ifndef POSETCM_EXACT_RANK_HPP
#define POSETCM_EXACT_RANK_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace posetcm {

// Dense integer matrix, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

// Rank over the rationals by fraction-free (Bareiss) elimination. Runs in
// 64-bit arithmetic and restarts with arbitrary precision on overflow.
std::size_t rank_fraction_free(const IntMatrix& m);

using SparseEntry = std::pair<std::uint32_t, std::int64_t>;

// Integer matrix stored as sorted sparse columns.
struct SparseMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<SparseEntry>> columns;

  IntMatrix dense() const;
};

// Rank over the rationals. Pivots on unit entries while any remain (exact
// integer row operations), then hands the leftover block to Bareiss.
std::size_t rank_sparse(const SparseMatrix& m);

}  // namespace posetcm

#endif
