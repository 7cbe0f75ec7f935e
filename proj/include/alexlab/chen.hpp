#pragma once

#include <cstdint>

#include "alexlab/modtools.hpp"
#include "alexlab/presentation.hpp"

namespace alexlab {

/// Largest max-n accepted by the rational Chen pipeline.
inline constexpr int kMaxChenN = 20;

enum class ChenMethod { Auto, Koszul, Crowell };

/// theta_1..theta_N (GradedDims start at 1). theta_1 = b_1; for n >= 2,
/// theta_n = dim gr_{n-2}(B(G) (x) Q) for the augmentation filtration.
/// Auto takes the Koszul presentation of B for commutator-relators inputs
/// and the truncated Crowell sequence otherwise.
GradedDims chen_ranks(const GroupPresentation& pres, int max_n, ChenMethod method = ChenMethod::Auto);

/// dim B/I^n B for n = 0..max_n-1 from the truncated Crowell sequence
/// 0 -> B -> A -> I -> 0. Works in (Q[x]/m^L)^m with L = max_n + 1, where
/// B = Z/W with Z = ker(A's cover -> I) and W the Fox image; the kernel is
/// taken one order higher (max_n + 2) and projected, which recovers the true
/// image of Z at order L.
std::vector<long> crowell_quotient_dims(const GroupPresentation& pres, int max_n);

/// theta^p_1..theta^p_N from the augmentation filtration of B_p(G).
GradedDims modp_chen_ranks(const GroupPresentation& pres, std::uint64_t p, int max_n);

}  // namespace alexlab
