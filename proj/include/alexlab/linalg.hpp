#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace alexlab {

/// Incremental row echelon form over a field for sparse rows. Rows are kept
/// with leading coefficient 1; the leading column is the smallest index.
template <class Field>
class SparseEchelon {
 public:
  using Elem = typename Field::Elem;
  using Row = std::vector<std::pair<int, Elem>>;

  explicit SparseEchelon(Field f) : f_(std::move(f)) {}

  /// Reduces `r` by the stored pivots until its leading column is free.
  Row reduce(Row r) const {
    while (!r.empty()) {
      auto it = pivots_.find(r.front().first);
      if (it == pivots_.end()) break;
      r = axpy(r, f_.neg(r.front().second), rows_[it->second]);
    }
    return r;
  }

  /// Adds a row; returns true if it increased the rank.
  bool insert(Row r) {
    r = reduce(std::move(r));
    if (r.empty()) return false;
    Elem inv = f_.inv(r.front().second);
    for (auto& [c, v] : r) v = f_.mul(v, inv);
    pivots_.emplace(r.front().first, static_cast<int>(rows_.size()));
    rows_.push_back(std::move(r));
    return true;
  }

  bool contains(Row r) const { return reduce(std::move(r)).empty(); }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::map<int, int>& pivots() const { return pivots_; }
  const std::vector<Row>& rows() const { return rows_; }

  /// Number of pivots whose leading column is < bound.
  int pivots_below(int bound) const {
    return static_cast<int>(std::distance(pivots_.begin(), pivots_.lower_bound(bound)));
  }

  /// r + a * s for sparse rows.
  Row axpy(const Row& r, const Elem& a, const Row& s) const {
    Row out;
    out.reserve(r.size() + s.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < s.size()) {
      if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
        out.push_back(r[i++]);
      } else if (i == r.size() || s[j].first < r[i].first) {
        Elem v = f_.mul(a, s[j].second);
        if (!f_.is_zero(v)) out.emplace_back(s[j].first, std::move(v));
        ++j;
      } else {
        Elem v = f_.add(r[i].second, f_.mul(a, s[j].second));
        if (!f_.is_zero(v)) out.emplace_back(r[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

 private:
  Field f_;
  std::vector<Row> rows_;
  std::map<int, int> pivots_;
};

/// Dense reduced row echelon form in place; returns the pivot columns.
template <class Field>
std::vector<int> rref(const Field& f, std::vector<std::vector<typename Field::Elem>>& m, std::size_t cols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && f.is_zero(m[p][c])) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    auto inv = f.inv(m[r][c]);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = f.mul(m[r][j], inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || f.is_zero(m[i][c])) continue;
      auto a = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!f.is_zero(m[r][j])) m[i][j] = f.sub(m[i][j], f.mul(a, m[r][j]));
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  m.resize(r);
  return pivots;
}

template <class Field>
int dense_rank(const Field& f, std::vector<std::vector<typename Field::Elem>> m, std::size_t cols) {
  return static_cast<int>(rref(f, m, cols).size());
}

/// Basis of {v : M v = 0} for an (rows x cols) matrix M.
template <class Field>
std::vector<std::vector<typename Field::Elem>> kernel_basis(const Field& f,
                                                            std::vector<std::vector<typename Field::Elem>> m,
                                                            std::size_t cols) {
  std::vector<int> piv = rref(f, m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<std::vector<typename Field::Elem>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename Field::Elem> v(cols, f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(m[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace alexlab
