#include "alexlab/chen.hpp"

#include "alexlab/abelian.hpp"
#include "alexlab/errors.hpp"
#include "alexlab/fox.hpp"
#include "alexlab/linalg.hpp"

namespace alexlab {

namespace {

using Row = SparseEchelon<RationalField>::Row;

// Column index of (generator j, monomial a) in (Q[x]/m^L)^m: monomial-major,
// so columns ascend with degree.
inline int column(int a, int j, int m) { return a * m + j; }

Row times_monomial(const Row& v, int var, const MonomialTable& table, int m) {
  Row out;
  for (const auto& [c, x] : v) {
    int b = table.times_var(var, c / m);
    if (b >= 0) out.emplace_back(column(b, c % m, m), x);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace

std::vector<long> crowell_quotient_dims(const GroupPresentation& pres, int max_n) {
  require(max_n >= 1 && max_n <= kMaxChenN, "max-n must be in 1.." + std::to_string(kMaxChenN));
  AbelianImages images = abelian_images(pres, FoxFlavor::ab());
  const Ring& ring = images.ring;
  const int m = pres.num_generators();
  const int r = ring->free_rank;
  const int L = max_n + 1, K = max_n + 2;
  auto tk = std::make_shared<const MonomialTable>(r, K);
  auto tl = std::make_shared<const MonomialTable>(r, L);
  const int nk = tk->size(), nl = tl->size();
  require(static_cast<std::int64_t>(nk) * m <= 6000, "truncated Crowell sequence is too large");

  // Psi: e_j -> g_j - 1 at order K, as a dense (nk x m*nk) matrix
  RationalField Q;
  std::vector<std::vector<Rational>> psi(nk, std::vector<Rational>(static_cast<std::size_t>(nk) * m, 0));
  for (int j = 0; j < m; ++j) {
    RingElem g = RingElem::monomial(ring, images.generator_images[j]) - RingElem(ring, 1);
    TruncatedLocalElem t = laurent_to_truncated(g, tk);
    for (int a = 0; a < nk; ++a) {
      for (int b = 0; b < nk; ++b) {
        if (t[b] == 0) continue;
        if (tk->degree(a) + tk->degree(b) >= K) break;
        std::vector<int> e = tk->monomial(a);
        for (int v = 0; v < r; ++v) e[v] += tk->monomial(b)[v];
        psi[tk->index_of(e)][column(a, j, m)] += t[b];
      }
    }
  }
  SparseEchelon<RationalField> z(Q);
  for (const auto& v : kernel_basis(Q, psi, static_cast<std::size_t>(nk) * m)) {
    Row row;
    for (int c = 0; c < nl * m; ++c)
      if (v[c] != 0) row.emplace_back(c, v[c]);
    if (!row.empty()) z.insert(std::move(row));
  }

  // W: the Fox columns and all their monomial multiples at order L
  std::vector<Row> w;
  GroupAlgebraMatrix fox = fox_matrix(pres, images);
  for (int i = 0; i < fox.cols; ++i) {
    std::vector<TruncatedLocalElem> col;
    for (int j = 0; j < m; ++j) col.push_back(laurent_to_truncated(fox(j, i), tl));
    for (int a = 0; a < nl; ++a) {
      Row row;
      for (int j = 0; j < m; ++j)
        for (int b = 0; b < nl; ++b) {
          if (col[j][b] == 0) continue;
          if (tl->degree(a) + tl->degree(b) >= L) break;
          std::vector<int> e = tl->monomial(a);
          for (int v = 0; v < r; ++v) e[v] += tl->monomial(b)[v];
          row.emplace_back(column(tl->index_of(e), j, m), col[j][b]);
        }
      std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      if (!row.empty()) {
        ensure(z.contains(row), "Fox image is not inside the kernel of the augmentation map");
        w.push_back(std::move(row));
      }
    }
  }

  // T_0 = Z, T_{n+1} = m T_n + W; dim B/I^n B = dim Z - dim T_n
  const long dim_z = z.rank();
  std::vector<long> dims{0};
  std::vector<Row> current = z.rows();
  for (int n = 1; n < max_n; ++n) {
    SparseEchelon<RationalField> next(Q);
    for (const Row& row : w) next.insert(row);
    for (const Row& row : current)
      for (int v = 0; v < r; ++v) {
        Row s = times_monomial(row, v, *tl, m);
        if (!s.empty()) next.insert(std::move(s));
      }
    dims.push_back(dim_z - next.rank());
    current = next.rows();
  }
  return dims;
}

GradedDims chen_ranks(const GroupPresentation& pres, int max_n, ChenMethod method) {
  require(max_n >= 1 && max_n <= kMaxChenN, "max-n must be in 1.." + std::to_string(kMaxChenN));
  AbelianizationData ab = abelianization(pres);
  GradedDims out{1, {ab.free_rank}};
  if (max_n == 1) return out;
  if (method == ChenMethod::Auto) method = pres.is_commutator_relators() ? ChenMethod::Koszul : ChenMethod::Crowell;
  if (method == ChenMethod::Koszul) {
    ModulePresentation b = b_presentation_koszul(pres);
    GradedDims gr = graded_dims_truncated(change_coefficients(b, with_flavor(b.ring, Coeff::Rat)), max_n);
    out.values.insert(out.values.end(), gr.values.begin(), gr.values.end());
  } else {
    auto dims = crowell_quotient_dims(pres, max_n);
    for (int n = 0; n + 2 <= max_n; ++n) out.values.push_back(dims[n + 1] - dims[n]);
  }
  return out;
}

GradedDims modp_chen_ranks(const GroupPresentation& pres, std::uint64_t p, int max_n) {
  require(max_n >= 1, "max-n must be positive");
  FiniteModule bp = b_mod_p(pres, p);
  std::vector<int> dims = augmentation_filtration(bp);
  GradedDims out{1, {bp.b}};
  for (int n = 2; n <= max_n; ++n) {
    std::size_t i = static_cast<std::size_t>(n - 2);
    long hi = i < dims.size() ? dims[i] : 0;
    long lo = i + 1 < dims.size() ? dims[i + 1] : 0;
    out.values.push_back(hi - lo);
  }
  return out;
}

}  // namespace alexlab
