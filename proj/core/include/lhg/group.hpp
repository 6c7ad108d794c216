#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace lhg {

/// Small finite group as a multiplication table over element indices.
///
/// Construction validates the full group axioms: Latin-square rows/columns,
/// a two-sided identity, and associativity over all triples. Orders above
/// 200 are refused so the O(n^3) check stays cheap.
class FiniteGroup {
 public:
  static constexpr int kMaxOrder = 200;

  static FiniteGroup from_table(std::vector<std::vector<int>> rows,
                                std::vector<std::string> names = {});
  static FiniteGroup cyclic(int n);
  /// Dihedral group of order 2n (rotations r^i at 0..n-1, reflections at n..2n-1).
  static FiniteGroup dihedral(int n);
  /// Permutations of {0..n-1} in lexicographic order; (p*q)(i) = p(q(i)). n <= 6.
  static FiniteGroup symmetric(int n);
  /// Invertible 2x2 matrices over the 3-element field; identity first, then
  /// row-major lexicographic.
  static FiniteGroup gl2_3();

  int order() const { return int(table_.size()); }
  int identity() const { return identity_; }
  int mul(int x, int y) const;
  int inv(int x) const;
  int element_order(int x) const;
  bool abelian() const;
  const std::string& name(int x) const { return names_[x]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  FiniteGroup() = default;
  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
  std::vector<std::string> names_;
};

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Builds a group from a descriptor: cyclic:n | dihedral:n | symmetric:n |
/// gl2_3 | table:<path>, or a '*'-joined direct product of those.
FiniteGroup builtin_group(std::string_view descriptor);

/// Cayley-table file: "order n", then n rows of n indices, then an optional
/// "names ..." line.
FiniteGroup load_cayley_table(const std::string& path);

/// Generator bindings for word evaluation, lines "f_k = <element index>"
/// (also accepted: "fk = i").
struct GeneratorBindings {
  std::map<int, int> f;
};
GeneratorBindings load_bindings(const std::string& path);

/// Evaluates a word over a group left to right. Accepted forms: a bare
/// element index, or '*'-separated factors f<k> with optional ^<exp>
/// (e.g. "f1*f2^2"). Generator references require bindings.
int evaluate_word(const FiniteGroup& g, std::string_view word,
                  const GeneratorBindings* bindings = nullptr);

/// A group together with the descriptor it was parsed from and any generator
/// bindings ("<descriptor>[@<bindings file>]").
struct GroupRef {
  std::shared_ptr<const FiniteGroup> group;
  GeneratorBindings bindings;
  std::string descriptor;
};
GroupRef parse_group_descriptor(std::string_view text);

}  // namespace lhg
