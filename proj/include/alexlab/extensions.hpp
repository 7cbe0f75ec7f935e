#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "alexlab/abelian.hpp"
#include "alexlab/modtools.hpp"
#include "alexlab/presentation.hpp"

namespace alexlab {

enum class ActionCoeff { Int, Rat, ModP };

/// Matrix of one Q-generator acting on H_1(K). Columns are images of basis
/// vectors. Int: SNF coordinates of K_ab (free block first; torsion rows
/// reduced into [0, d); the torsion-to-free block is always zero). Rat: the
/// free block over Q. ModP: a basis of H_1(K; Z_p).
struct ActionMatrix {
  ActionCoeff coeff = ActionCoeff::Int;
  std::uint64_t p = 0;
  std::vector<std::vector<Rational>> entries;
  bool is_identity() const;
  std::string to_string() const;
};

std::vector<ActionMatrix> action_on_h1(const SplitExtensionData& ext, ActionCoeff coeff, std::uint64_t p = 0);

enum class ExactnessFlavor { Ab, Abf, P };

/// Q acts trivially on H_1(K) with the flavor's coefficients.
bool exactness_check(const SplitExtensionData& ext, ExactnessFlavor flavor, std::uint64_t p = 0);

/// N_Gamma -> G_Gamma -> Z for a tree Gamma: K is free on the edge
/// generators g_uv = u v^-1, Q = <t> with t acting as conjugation by the
/// first vertex, rewritten in edge generators.
SplitExtensionData bestvina_brady_tree(const Graph& tree);

/// K = F_m, Q = Z^s, q_j acting by conjugation by w^{k_j} for one random
/// word w that is a product of at most three generators powers.
SplitExtensionData random_inner_extension(int m, int s, std::uint64_t seed);

/// Named extensions: klein, inner_f2, triangular_f2,
/// bestvina_brady(graph), random_inner(m,s,seed).
SplitExtensionData builtin_extension(const std::string& spec);

/// True when Q has at most one generator or its relators contain every
/// commutator [q_i, q_j] (up to inversion).
bool visibly_abelian(const GroupPresentation& q);

enum class TransferVerdict { EqualFrom2, Leq, Unchecked };
std::string to_string(TransferVerdict v);

struct TransferTable {
  std::uint64_t p = 0;  // 0 for rational Chen ranks
  GradedDims kernel;
  GradedDims total;
  TransferVerdict verdict = TransferVerdict::Unchecked;
  std::vector<int> mismatches;  // n >= 2 where the ranks differ
  bool leq_holds = true;        // theta_n(K) <= theta_n(G) for all listed n
};

struct ExtensionReport {
  std::vector<ActionMatrix> int_actions, rat_actions;
  std::map<std::uint64_t, std::vector<ActionMatrix>> modp_actions;
  bool ab_exact_split = false;
  bool abf_exact_split = false;
  std::map<std::uint64_t, bool> p_exact_split;
  std::vector<TransferTable> tables;
  /// False when an equality verdict is contradicted by the computed ranks.
  bool consistent = true;
};

/// Chen ranks of K and of G = K x| Q up to max_n, rationally and for each
/// prime in `primes`. The rational verdict is EqualFrom2 when the extension
/// is ab-exact and Q visibly abelian, Leq otherwise. The mod-p verdict is
/// EqualFrom2 when the extension is p-exact and Q is visibly an elementary
/// abelian p-group, Unchecked otherwise.
ExtensionReport verify_transfer(const SplitExtensionData& ext, int max_n, const std::vector<std::uint64_t>& primes = {});

}  // namespace alexlab
