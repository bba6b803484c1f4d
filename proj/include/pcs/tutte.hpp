#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcs/factor.hpp"
#include "pcs/graph.hpp"

namespace pcs {

/// Components D of G - (S u T) with f(D) + e(D,T) odd, ordered by smallest vertex.
std::vector<VertexSet> odd_components(const Graph& g, const DegreeSpec& f, const VertexSet& s, const VertexSet& t);

/// The four terms of delta(S,T) = f(S) + deg_{G-S}(T) - f(T) - q(S,T).
struct DeltaTerms {
  long long f_s = 0;
  long long deg_t = 0;
  long long f_t = 0;
  long long q = 0;

  long long value() const { return f_s + deg_t - f_t - q; }
};

/// Throws GraphError when s and t overlap, std::logic_error if the parity
/// relation delta = sum f (mod 2) is broken.
DeltaTerms delta_terms(const Graph& g, const DegreeSpec& f, const VertexSet& s, const VertexSet& t);
long long delta(const Graph& g, const DegreeSpec& f, const VertexSet& s, const VertexSet& t);

struct TutteCertificate {
  VertexSet s;
  VertexSet t;
  long long delta = 0;
  std::vector<VertexSet> odd_components;

  std::size_t q() const { return odd_components.size(); }
  friend bool operator==(const TutteCertificate&, const TutteCertificate&) = default;
};

/// Evaluates (S,T) and records its odd components.
TutteCertificate evaluate_pair(const Graph& g, const DegreeSpec& f, const VertexSet& s, const VertexSet& t);

/// Enumeration order of disjoint pairs: |S|+|T| ascending, then S, then T,
/// each compared as a sorted index list.
bool enumeration_less(const VertexSet& s1, const VertexSet& t1, const VertexSet& s2, const VertexSet& t2);

struct CertificateOptions {
  std::size_t max_vertices = 14;
  /// Worker threads; results do not depend on this value.
  unsigned jobs = 1;
};

struct CertificateSearch {
  enum class Status { found, none, undecided };
  Status status = Status::none;
  /// The enumeration-least pair with delta < 0, when status is found.
  std::optional<TutteCertificate> certificate;
  std::string reason;
};

/// Exhaustive scan over all 3^n disjoint pairs.
CertificateSearch search_certificate(const Graph& g, const DegreeSpec& f, CertificateOptions options = {});

/// "S: ...", "T: ...", "delta: <int>", "odd: <count>", then one line per odd component.
std::string serialize_certificate(const TutteCertificate& cert);

struct WitnessFile {
  VertexSet s;
  VertexSet t;
  std::optional<long long> delta;
  std::vector<VertexSet> odd_components;
};
/// Accepts full certificate files and files holding only the S and T lines.
WitnessFile parse_witness(std::string_view text);

}  // namespace pcs
