#include "posetcm/exact_rank.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <type_traits>
#include <utility>

namespace posetcm {

namespace {

struct Overflow {};

struct CheckedInt {
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
};

template <typename T>
std::size_t bareiss_rank(std::vector<std::vector<T>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  T prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const T pivot = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const T lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        if constexpr (std::is_same_v<T, std::int64_t>) {
          a[i][j] = CheckedInt::sub(CheckedInt::mul(pivot, a[i][j]), CheckedInt::mul(lead, a[r][j])) / prev;
        } else {
          a[i][j] = (pivot * a[i][j] - lead * a[r][j]) / prev;
        }
      }
      a[i][c] = 0;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

template <typename T>
std::vector<std::vector<T>> rows_of(const IntMatrix& m) {
  std::vector<std::vector<T>> a(m.rows(), std::vector<T>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return a;
}

}  // namespace

std::size_t rank_fraction_free(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  try {
    return bareiss_rank(rows_of<std::int64_t>(m), m.cols());
  } catch (const Overflow&) {
    return bareiss_rank(rows_of<boost::multiprecision::cpp_int>(m), m.cols());
  }
}

}  // namespace posetcm

namespace posetcm {

IntMatrix SparseMatrix::dense() const {
  IntMatrix d(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [r, v] : columns[c]) d(r, c) = v;
  return d;
}

namespace {

using Line = std::vector<SparseEntry>;

std::int64_t value_at(const Line& line, std::uint32_t idx) {
  auto it = std::lower_bound(line.begin(), line.end(), idx,
                             [](const SparseEntry& e, std::uint32_t i) { return e.first < i; });
  return it != line.end() && it->first == idx ? it->second : 0;
}

// line - factor * pivot
Line subtract_multiple(const Line& line, std::int64_t factor, const Line& pivot) {
  Line out;
  out.reserve(line.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < line.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < line.size() && line[i].first < pivot[j].first)) {
      out.push_back(line[i++]);
    } else if (i == line.size() || pivot[j].first < line[i].first) {
      out.emplace_back(pivot[j].first, CheckedInt::mul(-factor, pivot[j].second));
      ++j;
    } else {
      const std::int64_t v = CheckedInt::sub(line[i].second, CheckedInt::mul(factor, pivot[j].second));
      if (v != 0) out.emplace_back(line[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

std::size_t sparse_rank_checked(const SparseMatrix& m) {
  std::vector<Line> lines = m.columns;
  std::vector<std::vector<std::uint32_t>> occurs(m.rows);
  for (std::uint32_t c = 0; c < lines.size(); ++c)
    for (const auto& e : lines[c]) occurs[e.first].push_back(c);
  std::vector<char> alive(lines.size(), 1);

  std::size_t rank = 0;
  for (;;) {
    // shortest live line with a unit entry; inside it the sparsest row
    std::size_t best = lines.size();
    std::uint32_t best_idx = 0;
    for (std::size_t c = 0; c < lines.size(); ++c) {
      if (!alive[c] || lines[c].empty()) continue;
      if (best < lines.size() && lines[c].size() >= lines[best].size()) continue;
      bool found = false;
      std::uint32_t idx = 0;
      for (const auto& [r, v] : lines[c]) {
        if ((v == 1 || v == -1) && (!found || occurs[r].size() < occurs[idx].size())) {
          idx = r;
          found = true;
        }
      }
      if (found) {
        best = c;
        best_idx = idx;
      }
    }
    if (best == lines.size()) break;

    const Line pivot = std::move(lines[best]);
    alive[best] = 0;
    lines[best].clear();
    ++rank;
    const std::int64_t pv = value_at(pivot, best_idx);
    std::vector<std::uint32_t> touched = std::move(occurs[best_idx]);
    occurs[best_idx].clear();
    for (std::uint32_t c : touched) {
      if (!alive[c]) continue;
      const std::int64_t v = value_at(lines[c], best_idx);
      if (v == 0) continue;
      Line updated = subtract_multiple(lines[c], CheckedInt::mul(v, pv), pivot);
      // record fill-in
      for (const auto& e : updated)
        if (value_at(lines[c], e.first) == 0) occurs[e.first].push_back(c);
      lines[c] = std::move(updated);
    }
  }

  // leftover block has no unit entries
  std::vector<std::uint32_t> used_rows;
  std::vector<std::size_t> left;
  for (std::size_t c = 0; c < lines.size(); ++c) {
    if (!alive[c] || lines[c].empty()) continue;
    left.push_back(c);
    for (const auto& e : lines[c]) used_rows.push_back(e.first);
  }
  if (left.empty()) return rank;
  std::sort(used_rows.begin(), used_rows.end());
  used_rows.erase(std::unique(used_rows.begin(), used_rows.end()), used_rows.end());
  IntMatrix rest(used_rows.size(), left.size());
  for (std::size_t k = 0; k < left.size(); ++k)
    for (const auto& [r, v] : lines[left[k]]) {
      const auto pos = std::lower_bound(used_rows.begin(), used_rows.end(), r) - used_rows.begin();
      rest(static_cast<std::size_t>(pos), k) = v;
    }
  return rank + rank_fraction_free(rest);
}

}  // namespace

std::size_t rank_sparse(const SparseMatrix& m) {
  try {
    return sparse_rank_checked(m);
  } catch (const Overflow&) {
    return rank_fraction_free(m.dense());
  }
}

}  // namespace posetcm
