#pragma once

#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lhg/graph.hpp"
#include "lhg/group.hpp"

namespace lhg {

// Vertex indexing of gen_petersen: a_i -> 2i, b_i -> 2i+1 for i in 0..n-1.
// Rung indices are 0-based here; the literature's 1-based rung i corresponds
// to internal rung i-1.
Graph gen_petersen(int n, int k);

/// Vertex (i,j) -> i*n + j; edges (i,j)-(i,j+k_i) and (i,j)-(i+1,j).
Graph supergen_petersen(int m, int n, std::span<const int> ks);

/// Vertex (i,j) -> i*|G| + j; edges (i,j)-(i, j*k_i) and (i,j)-(i+1, j*c_i).
/// For m = 2 the two cross-edge families must not coincide (c_0 != c_1^-1).
Graph cayley_gen_petersen(int m, const FiniteGroup& group, std::span<const int> ks,
                          std::span<const int> cs);

/// Two copies of base (second copy shifted by base.order()), plus the
/// matching v -> perm[v].
Graph permutation_graph(const Graph& base, std::span<const int> perm);

/// Vertices are group elements, j adjacent to j*s for s in the connection
/// set, which must exclude the identity and be closed under inversion.
Graph cayley_graph(const FiniteGroup& group, std::span<const int> connection);

/// Rung bookkeeping over a gp-shaped graph (spokes 2i-(2i+1) and the outer
/// cycle must be present under the gen_petersen indexing).
class RungView {
 public:
  explicit RungView(const Graph& g);

  int n() const { return n_; }
  int a(int i) const { return 2 * norm(i); }
  int b(int i) const { return 2 * norm(i) + 1; }
  int rung_of(int v) const { return v / 2; }
  VertexSet rung(int i) const;
  /// Union of len consecutive rungs starting at i (wrapping).
  VertexSet segment(int i, int len) const;

 private:
  int norm(int i) const { return ((i % n_) + n_) % n_; }
  const Graph* g_;
  int n_;
};

inline RungView rung_view(const Graph& g) { return RungView(g); }

// ---- declarative family specs ----------------------------------------

struct GpSpec {
  int n, k;
};
struct SgpSpec {
  int m, n;
  std::vector<int> ks;
};
struct CgpSpec {
  int m;
  std::shared_ptr<const FiniteGroup> group;
  std::string group_desc;
  std::vector<int> ks, cs;  // element indices
};
struct PermSpec {
  std::string base_graph6;
  std::vector<int> perm;
};
struct CayleySpec {
  std::shared_ptr<const FiniteGroup> group;
  std::string group_desc;
  std::vector<int> connection;
};

using FamilySpec = std::variant<GpSpec, SgpSpec, CgpSpec, PermSpec, CayleySpec>;

Graph build_graph(const FamilySpec& spec);
std::string to_string(const FamilySpec& spec);

/// Grammar:
///   gp:n,k
///   sgp:m,n,k0,...,k_{m-1}
///   cgp:m,<group-descriptor>,[k0,...],[c0,...]
///   perm:<graph6>,<space-separated permutation>
///   cayley:<group-descriptor>,{s1,s2,...}
/// Group descriptors as in parse_group_descriptor; list entries are words
/// evaluated against the descriptor's bindings.
FamilySpec parse_family_spec(std::string_view text);

}  // namespace lhg
