#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace alexlab {

/// One syllable x_g^e of a free-group word; generators are 1-based.
struct Letter {
  int generator;
  std::int64_t exponent;
  bool operator==(const Letter&) const = default;
};

/// Element of a free group, kept freely reduced: adjacent letters always
/// carry distinct generators and no exponent is zero.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters);

  static FreeWord generator(int g, std::int64_t exponent = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  int max_generator() const;

  /// Exponent sum of generator g (1-based).
  std::int64_t exponent_sum(int g) const;

  FreeWord inverse() const;
  FreeWord pow(std::int64_t n) const;

  /// Applies a substitution x_g -> images[g-1].
  FreeWord substitute(const std::vector<FreeWord>& images) const;

  /// Shifts every generator index by `offset`.
  FreeWord shifted(int offset) const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  bool operator==(const FreeWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// u v u^-1 v^-1
FreeWord commutator(const FreeWord& u, const FreeWord& v);

/// u v u^-1
FreeWord conjugate(const FreeWord& u, const FreeWord& v);

/// A finite presentation <x_1..x_m | r_1..r_l>. Generator names are used only
/// for printing and parsing; indices are what every computation sees.
class GroupPresentation {
 public:
  GroupPresentation(int num_generators, std::vector<FreeWord> relators, std::string label = {},
                    std::vector<std::string> generator_names = {});

  int num_generators() const { return num_generators_; }
  const std::vector<FreeWord>& relators() const { return relators_; }
  const std::string& label() const { return label_; }
  const std::vector<std::string>& generator_names() const { return names_; }

  /// True when every relator has zero exponent sum in every generator.
  bool is_commutator_relators() const;

  /// Canonical DSL form, e.g. "<x1,x2 | x1 x2 x1 x2^-1 x1^-1 x2^-1>".
  std::string to_string() const;
  std::string word_to_string(const FreeWord& w) const;

  GroupPresentation with_label(std::string label) const;

 private:
  int num_generators_;
  std::vector<FreeWord> relators_;
  std::string label_;
  std::vector<std::string> names_;
};

/// Parses the presentation DSL:
///   presentation := '<' genlist '|' relatorlist '>'
/// with juxtaposition, '^' integer powers, [u,v] commutators, parentheses,
/// 'u = v' as the relator u v^-1, '1' for the identity and '#' comments.
GroupPresentation parse_presentation(const std::string& text);

/// Undirected simple graph on vertices 1..n.
struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;

  static Graph path(int n);
  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph star(int leaves);

  /// Accepts "path:3", "complete:4", "cycle:4", "star:3" or an explicit
  /// "n;1-2,2-3" adjacency list.
  static Graph parse(const std::string& text);

  bool is_tree() const;
  std::string to_string() const;
};

GroupPresentation raag(const Graph& graph);

/// Example catalog. Recognized names: free(n), trefoil, torus_knot(p,q),
/// dihedral_inf, heisenberg, heisenberg_quotient, baumslag_solitar(n),
/// raag(graph), klein_bottle, commutator_power(n), pure_braid(n<=4).
/// `spec` is the textual form "name" or "name(args)".
GroupPresentation builtin_group(const std::string& spec);

/// User-asserted formality flags for builtins (free groups and RAAGs are
/// 1-formal; the Heisenberg group is not). Empty for unknown inputs.
struct FormalityFlags {
  bool one_formal = false;
  bool graded_formal = false;
};
FormalityFlags builtin_formality(const std::string& spec);

/// G = K x| Q. `action[j][i]` is phi(q_j)(a_i) written in K's generators.
/// Only invertibility of the abelianized action is ever checked; whether phi
/// is a genuine automorphism respecting K's relators is the caller's claim.
struct SplitExtensionData {
  GroupPresentation kernel;
  GroupPresentation quotient;
  std::vector<std::vector<FreeWord>> action;
};

/// Generators: K's then Q's. Relators: K's, Q's, and q_j a_i q_j^-1 phi_j(a_i)^-1.
GroupPresentation semidirect_presentation(const SplitExtensionData& ext);

}  // namespace alexlab
