#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "alexlab/errors.hpp"

namespace alexlab {

/// Buchberger's algorithm with the sugar selection strategy for submodules of
/// a free module k[x_1..x_n]^r (r = 1 gives ideals). Monomials are ordered by
/// degrevlex with x_1 > x_2 > ...; module terms use term-over-position with
/// lower positions first.
template <class Field>
class Groebner {
 public:
  using Elem = typename Field::Elem;
  struct Term {
    std::vector<int> e;
    int pos = 0;
    Elem c;
  };
  using Poly = std::vector<Term>;  // strictly descending, no zero coefficients

  Groebner(Field f, int nvars, std::size_t max_basis = 4000) : f_(std::move(f)), n_(nvars), max_basis_(max_basis) {}

  int nvars() const { return n_; }
  const Field& field() const { return f_; }

  static int degree(const std::vector<int>& e) { return std::accumulate(e.begin(), e.end(), 0); }

  /// Sign of the comparison of (a.e, a.pos) against (b.e, b.pos).
  int compare(const Term& a, const Term& b) const {
    int da = degree(a.e), db = degree(b.e);
    if (da != db) return da > db ? 1 : -1;
    for (int i = n_; i-- > 0;)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
    return 0;
  }

  /// Sorts and combines like terms.
  Poly normalize(Poly p) const {
    std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return compare(a, b) > 0; });
    Poly out;
    for (auto& t : p) {
      if (!out.empty() && compare(out.back(), t) == 0) {
        out.back().c = f_.add(out.back().c, t.c);
        if (f_.is_zero(out.back().c)) out.pop_back();
      } else if (!f_.is_zero(t.c)) {
        out.push_back(std::move(t));
      }
    }
    return out;
  }

  void compute(std::vector<Poly> gens) {
    basis_.clear();
    sugar_.clear();
    single_position_ = true;
    for (const Poly& g : gens)
      for (const Term& t : g)
        if (t.pos != 0) single_position_ = false;
    std::vector<Pair> queue;
    auto add = [&](Poly p, int sugar) {
      make_monic(p);
      int k = static_cast<int>(basis_.size());
      if (basis_.size() >= max_basis_) throw PreconditionError("Groebner basis exceeded the size guard");
      basis_.push_back(std::move(p));
      sugar_.push_back(sugar);
      for (int i = 0; i < k; ++i) {
        if (basis_[i].empty() || basis_[i][0].pos != basis_[k][0].pos) continue;
        Term l = lcm(basis_[i][0], basis_[k][0]);
        int s = std::max(sugar_[i] + degree(l.e) - degree(basis_[i][0].e),
                         sugar_[k] + degree(l.e) - degree(basis_[k][0].e));
        queue.push_back({s, std::move(l), i, k});
      }
    };
    for (auto& g : gens) {
      Poly p = normal_form(normalize(std::move(g)));
      if (!p.empty()) {
        int s = 0;
        for (auto& t : p) s = std::max(s, degree(t.e));
        add(std::move(p), s);
      }
    }
    while (!queue.empty()) {
      auto best = std::min_element(queue.begin(), queue.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        return compare(a.lcm, b.lcm) < 0;
      });
      Pair pr = *best;
      queue.erase(best);
      const Poly& gi = basis_[pr.i];
      const Poly& gj = basis_[pr.j];
      if (single_position_ && coprime(gi[0].e, gj[0].e)) continue;
      if (chain_criterion(pr.i, pr.j, pr.lcm, queue)) continue;
      Poly s = spoly(gi, gj, pr.lcm);
      Poly r = normal_form(std::move(s));
      if (!r.empty()) add(std::move(r), pr.sugar);
    }
    inter_reduce();
  }

  const std::vector<Poly>& basis() const { return basis_; }

  Poly normal_form(Poly p) const {
    Poly r;
    while (!p.empty()) {
      const Term& lt = p.front();
      const Poly* red = nullptr;
      for (const Poly& g : basis_)
        if (g[0].pos == lt.pos && divides(g[0].e, lt.e)) {
          red = &g;
          break;
        }
      if (!red) {
        r.push_back(lt);
        p.erase(p.begin());
        continue;
      }
      std::vector<int> shift(n_);
      for (int v = 0; v < n_; ++v) shift[v] = lt.e[v] - (*red)[0].e[v];
      p = sub_mul(p, f_.mul(lt.c, f_.inv((*red)[0].c)), shift, *red);
    }
    return r;
  }

  bool reduces_to_zero(Poly p) const { return normal_form(normalize(std::move(p))).empty(); }

  /// The quotient free^positions / submodule is finite dimensional iff each
  /// position carries a pure power of every variable among the leading terms.
  bool zero_dimensional(int positions) const {
    for (int pos = 0; pos < positions; ++pos)
      for (int v = 0; v < n_; ++v) {
        bool found = false;
        for (const Poly& g : basis_) {
          if (g[0].pos != pos) continue;
          bool pure = true;
          for (int w = 0; w < n_; ++w)
            if (w != v && g[0].e[w] != 0) pure = false;
          if (pure && (g[0].e[v] > 0 || n_ == 0)) found = true;
          if (degree(g[0].e) == 0) found = true;
        }
        if (!found) return false;
      }
    return true;
  }

  /// Number of standard monomials x^a e_pos with |a| + pos_degrees[pos] = d.
  long hilbert(int d, const std::vector<int>& pos_degrees) const {
    long count = 0;
    std::vector<int> e(n_, 0);
    for (std::size_t pos = 0; pos < pos_degrees.size(); ++pos) {
      int k = d - pos_degrees[pos];
      if (k < 0) continue;
      std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n_ - 1 || n_ == 0) {
          if (n_ == 0 && left > 0) return;
          if (n_ > 0) e[i] = left;
          bool standard = true;
          for (const Poly& g : basis_)
            if (g[0].pos == static_cast<int>(pos) && divides(g[0].e, e)) {
              standard = false;
              break;
            }
          if (standard) ++count;
          if (n_ > 0) e[i] = 0;
          return;
        }
        for (int a = left; a >= 0; --a) {
          e[i] = a;
          rec(i + 1, left - a);
        }
        e[i] = 0;
      };
      rec(0, k);
    }
    return count;
  }

 private:
  struct Pair {
    int sugar;
    Term lcm;
    int i, j;
  };

  static bool divides(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  }
  static bool coprime(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] && b[i]) return false;
    return true;
  }
  Term lcm(const Term& a, const Term& b) const {
    Term t;
    t.e.resize(n_);
    for (int v = 0; v < n_; ++v) t.e[v] = std::max(a.e[v], b.e[v]);
    t.pos = a.pos;
    t.c = f_.one();
    return t;
  }
  void make_monic(Poly& p) const {
    if (p.empty()) return;
    Elem inv = f_.inv(p[0].c);
    for (auto& t : p) t.c = f_.mul(t.c, inv);
  }
  // p - a * x^shift * g
  Poly sub_mul(const Poly& p, const Elem& a, const std::vector<int>& shift, const Poly& g) const {
    Poly out;
    out.reserve(p.size() + g.size());
    std::size_t i = 0, j = 0;
    Term gt;
    auto shifted = [&](std::size_t k) {
      Term t;
      t.e.resize(n_);
      for (int v = 0; v < n_; ++v) t.e[v] = g[k].e[v] + shift[v];
      t.pos = g[k].pos;
      t.c = f_.neg(f_.mul(a, g[k].c));
      return t;
    };
    bool have = false;
    while (i < p.size() || j < g.size()) {
      if (j < g.size() && !have) {
        gt = shifted(j);
        have = true;
      }
      if (!have) {
        out.push_back(p[i++]);
        continue;
      }
      if (i == p.size()) {
        out.push_back(std::move(gt));
        have = false;
        ++j;
        continue;
      }
      int c = compare(p[i], gt);
      if (c > 0) {
        out.push_back(p[i++]);
      } else if (c < 0) {
        out.push_back(std::move(gt));
        have = false;
        ++j;
      } else {
        Elem v = f_.add(p[i].c, gt.c);
        if (!f_.is_zero(v)) {
          Term t = p[i];
          t.c = std::move(v);
          out.push_back(std::move(t));
        }
        ++i;
        ++j;
        have = false;
      }
    }
    return out;
  }
  Poly spoly(const Poly& a, const Poly& b, const Term& l) const {
    std::vector<int> sa(n_), sb(n_), zero(n_, 0);
    for (int v = 0; v < n_; ++v) {
      sa[v] = l.e[v] - a[0].e[v];
      sb[v] = l.e[v] - b[0].e[v];
    }
    Poly pa = sub_mul(Poly{}, f_.neg(f_.one()), sa, a);  // x^sa * a (monic)
    return sub_mul(pa, f_.one(), sb, b);
  }
  bool chain_criterion(int i, int j, const Term& l, const std::vector<Pair>& queue) const {
    auto pending = [&](int a, int b) {
      if (a > b) std::swap(a, b);
      for (const auto& q : queue)
        if (q.i == a && q.j == b) return true;
      return false;
    };
    for (int k = 0; k < static_cast<int>(basis_.size()); ++k) {
      if (k == i || k == j || basis_[k].empty() || basis_[k][0].pos != l.pos) continue;
      if (!divides(basis_[k][0].e, l.e)) continue;
      if (!pending(i, k) && !pending(j, k)) return true;
    }
    return false;
  }
  void inter_reduce() {
    // drop elements whose leading term is divisible by another, then tail-reduce
    std::vector<Poly> keep;
    for (std::size_t a = 0; a < basis_.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < basis_.size() && !redundant; ++b) {
        if (a == b || basis_[b][0].pos != basis_[a][0].pos || !divides(basis_[b][0].e, basis_[a][0].e)) continue;
        if (basis_[b][0].e != basis_[a][0].e || b < a) redundant = true;
      }
      if (!redundant) keep.push_back(basis_[a]);
    }
    basis_ = std::move(keep);
    std::vector<Poly> reduced;
    for (std::size_t a = 0; a < basis_.size(); ++a) {
      Poly head{basis_[a][0]};
      Poly tail(basis_[a].begin() + 1, basis_[a].end());
      std::vector<Poly> others;
      for (std::size_t b = 0; b < basis_.size(); ++b)
        if (b != a) others.push_back(basis_[b]);
      std::swap(basis_, others);
      Poly t = normal_form(std::move(tail));
      std::swap(basis_, others);
      head.insert(head.end(), t.begin(), t.end());
      reduced.push_back(std::move(head));
    }
    basis_ = std::move(reduced);
    std::sort(basis_.begin(), basis_.end(), [&](const Poly& a, const Poly& b) { return compare(a[0], b[0]) < 0; });
    sugar_.assign(basis_.size(), 0);
  }

  Field f_;
  int n_;
  std::size_t max_basis_;
  bool single_position_ = true;
  std::vector<Poly> basis_;
  std::vector<int> sugar_;
};

}  // namespace alexlab
