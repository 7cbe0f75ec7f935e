#include "alexlab/abelian.hpp"

#include <utility>

#include "alexlab/errors.hpp"

namespace alexlab {

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

struct SmithWork {
  IntMatrix a;
  IntMatrix v, vinv;
  std::size_t rows, cols;

  // col b += k * col a
  void col_add(std::size_t a_, std::size_t b, const Integer& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows; ++i) a[i][b] += k * a[i][a_];
    for (std::size_t i = 0; i < cols; ++i) v[i][b] += k * v[i][a_];
    for (std::size_t j = 0; j < cols; ++j) vinv[a_][j] -= k * vinv[b][j];
  }
  void col_swap(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
    for (std::size_t i = 0; i < cols; ++i) std::swap(v[i][x], v[i][y]);
    std::swap(vinv[x], vinv[y]);
  }
  void row_add(std::size_t a_, std::size_t b, const Integer& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols; ++j) a[b][j] += k * a[a_][j];
  }
  void row_swap(std::size_t x, std::size_t y) { std::swap(a[x], a[y]); }
  void row_negate(std::size_t x) {
    for (std::size_t j = 0; j < cols; ++j) a[x][j] = -a[x][j];
  }

  bool find_min(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        Integer m = abs(a[i][j]);
        if (!found || m < best) {
          best = m;
          pi = i;
          pj = j;
          found = true;
        }
      }
    return found;
  }

  void run() {
    const std::size_t s = std::min(rows, cols);
    for (std::size_t t = 0; t < s; ++t) {
      std::size_t pi = t, pj = t;
      if (!find_min(t, pi, pj)) return;
      row_swap(t, pi);
      col_swap(t, pj);
      while (true) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a[i][t] == 0) continue;
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
          row_add(t, i, -q);
          if (a[i][t] != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[t][j] == 0) continue;
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
          col_add(t, j, -q);
          if (a[t][j] != 0) dirty = true;
        }
        if (dirty) {
          // restart from the smallest remaining entry of row/column t
          std::size_t bi = t, bj = t;
          Integer best = abs(a[t][t]);
          for (std::size_t i = t + 1; i < rows; ++i)
            if (a[i][t] != 0 && abs(a[i][t]) < best) best = abs(a[i][t]), bi = i, bj = t;
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a[t][j] != 0 && abs(a[t][j]) < best) best = abs(a[t][j]), bi = t, bj = j;
          row_swap(t, bi);
          col_swap(t, bj);
          continue;
        }
        // divisibility: fold an offending row into row t
        bool fixed = true;
        for (std::size_t i = t + 1; i < rows && fixed; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a[i][j] % a[t][t] != 0) {
              row_add(i, t, 1);
              fixed = false;
              break;
            }
        if (fixed) break;
      }
      if (a[t][t] < 0) row_negate(t);
    }
  }
};

}  // namespace

int SmithForm::rank() const {
  int r = 0;
  for (const Integer& d : diagonal)
    if (d != 0) ++r;
  return r;
}

SmithForm smith_form(const IntMatrix& a, std::size_t cols) {
  SmithWork w{a, identity(cols), identity(cols), a.size(), cols};
  for (const auto& row : a) require(row.size() == cols, "ragged integer matrix");
  w.run();
  SmithForm out;
  const std::size_t s = std::min(w.rows, cols);
  for (std::size_t i = 0; i < s; ++i) out.diagonal.push_back(w.a[i][i]);
  out.V = std::move(w.v);
  out.V_inverse = std::move(w.vinv);
  return out;
}

IntMatrix exponent_matrix(const GroupPresentation& pres) {
  const int m = pres.num_generators();
  IntMatrix e;
  for (const FreeWord& r : pres.relators()) {
    std::vector<Integer> row(m, 0);
    for (const Letter& l : r.letters()) row[l.generator - 1] += static_cast<long>(l.exponent);
    e.push_back(std::move(row));
  }
  return e;
}

Integer AbelianizationData::divisor(int c) const {
  return c < free_rank ? Integer(0) : torsion_divisors[c - free_rank];
}

std::vector<Integer> AbelianizationData::project(const std::vector<Integer>& exponents) const {
  require(static_cast<int>(exponents.size()) == num_generators, "exponent vector length mismatch");
  std::vector<Integer> out(num_coordinates(), 0);
  for (int i = 0; i < num_generators; ++i) {
    if (exponents[i] == 0) continue;
    for (int c = 0; c < num_coordinates(); ++c) out[c] += exponents[i] * basis_change[i][c];
  }
  for (int c = free_rank; c < num_coordinates(); ++c) {
    Integer d = divisor(c);
    mpz_fdiv_r(out[c].get_mpz_t(), out[c].get_mpz_t(), d.get_mpz_t());
  }
  return out;
}

AbelianizationData abelianization(const GroupPresentation& pres) {
  const int m = pres.num_generators();
  SmithForm snf = smith_form(exponent_matrix(pres), m);
  std::vector<int> free_cols, torsion_cols;
  for (int j = 0; j < m; ++j) {
    Integer d = j < static_cast<int>(snf.diagonal.size()) ? snf.diagonal[j] : Integer(0);
    if (d == 0)
      free_cols.push_back(j);
    else if (d != 1)
      torsion_cols.push_back(j);
  }
  AbelianizationData ab;
  ab.num_generators = m;
  ab.free_rank = static_cast<int>(free_cols.size());
  for (int j : torsion_cols) ab.torsion_divisors.push_back(snf.diagonal[j]);
  std::vector<int> order = free_cols;
  order.insert(order.end(), torsion_cols.begin(), torsion_cols.end());
  ab.basis_change.assign(m, std::vector<Integer>(order.size(), 0));
  for (int i = 0; i < m; ++i)
    for (std::size_t c = 0; c < order.size(); ++c) {
      Integer v = snf.V[i][order[c]];
      if (static_cast<int>(c) >= ab.free_rank) {
        Integer d = ab.torsion_divisors[c - ab.free_rank];
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
      }
      ab.basis_change[i][c] = v;
    }
  for (int col : order) ab.coordinate_preimages.push_back(snf.V_inverse[col]);
  return ab;
}

ModPHomology mod_p_homology(const GroupPresentation& pres, std::uint64_t p) {
  require(is_prime(p), "p must be prime");
  AbelianizationData ab = abelianization(pres);
  std::vector<int> coords;
  for (int c = 0; c < ab.num_coordinates(); ++c) {
    Integer d = ab.divisor(c);
    if (d == 0 || d % static_cast<unsigned long>(p) == 0) coords.push_back(c);
  }
  ModPHomology h;
  h.p = p;
  h.dimension = static_cast<int>(coords.size());
  for (int i = 0; i < ab.num_generators; ++i) {
    std::vector<std::uint64_t> row;
    for (int c : coords) row.push_back(rational_mod(Rational(ab.basis_change[i][c]), p));
    h.generator_images.push_back(std::move(row));
  }
  return h;
}

int mod_p_h1(const GroupPresentation& pres, std::uint64_t p) { return mod_p_homology(pres, p).dimension; }

}  // namespace alexlab
