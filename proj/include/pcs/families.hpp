#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcs/graph.hpp"
#include "pcs/io.hpp"
#include "pcs/verify.hpp"

namespace pcs {

/// Invalid generator parameters, or an instance that failed its own checks.
class FamilyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Disjoint (S,T) that should evaluate to expected_delta.
struct FamilyWitness {
  VertexSet s;
  VertexSet t;
  long long expected_delta = 0;
};

/// Properties an instance is built to have; each is re-checked by verify_instance.
struct FamilyClaims {
  std::size_t r = 0;
  bool star_free = true;  // false: the graph must contain an induced K_{1,r}
  std::optional<std::size_t> lambda_exact;
  std::optional<std::size_t> lambda_at_least;
  std::optional<TerminalMode> terminal_mode;
  /// Exact value of max_v |N(v) n W|.
  std::optional<std::size_t> terminal_load;
  /// Every pair of terminals lies at exactly this distance.
  std::optional<std::size_t> terminal_distance;
  bool bipartite = false;
};

struct FamilyInstance {
  std::string family;
  Graph graph;
  VertexSet w;
  std::optional<FamilyWitness> witness;
  NameMap names;
  FamilyClaims claims;
  /// Auxiliary checks made during construction, one report line each.
  std::vector<std::string> notes;
};

/// One report per claimed property, plus the witness evaluation when present.
std::vector<PropertyReport> verify_instance(const FamilyInstance& inst);

/// r odd >= 5, k even >= r+1. Copies of H and H*, 2r hubs; lambda = r-1.
FamilyInstance gen_prop1_odd(int r, int k);
/// r even, r = 2 (mod 4) with r >= 6 and k >= r, or r = 0 (mod 4) with r >= 8
/// and k >= r even. r copies of H, r-2 hubs; lambda >= r-2.
FamilyInstance gen_prop1_even(int r, int k);
/// Bipartite circulant on 2n vertices: left i sees right i..i+r-1 (mod n).
/// r >= 4, n >= 2r. W is a same-side pair at distance 4.
FamilyInstance gen_prop1_bipartite(int r, int n);
/// 6n-cycle plus 4n apex vertices; n >= 6.
FamilyInstance gen_prop2_r4(int n);
/// r >= 6, m a multiple of r-1 with m >= 2(r-1)^2.
FamilyInstance gen_prop2_general(int r, int m);
/// m a multiple of 4, m >= 96.
FamilyInstance gen_prop2_r5(int m);

/// K_{1,r}-free, r-edge-connected, r-regular graph of roughly `size`
/// vertices with a terminal set satisfying |N(v) n W| <= 1. Deterministic
/// in the seed.
FamilyInstance random_valid_instance(int r, std::size_t size, std::uint64_t seed);

}  // namespace pcs
