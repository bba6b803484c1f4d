#include "pcs/tutte.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pcs/io.hpp"

namespace pcs {

std::vector<VertexSet> odd_components(const Graph& g, const DegreeSpec& f, const VertexSet& s, const VertexSet& t) {
  if (!disjoint(s, t)) throw GraphError("S and T must be disjoint");
  const std::vector<char> in_t = t.indicator(g.vertex_count());
  std::vector<VertexSet> out;
  for (const VertexSet& block : components_after_removal(g, set_union(s, t)).blocks) {
    long long parity = f.total(block);
    for (Vertex v : block) {
      for (Vertex u : g.neighbors(v)) parity += in_t[static_cast<std::size_t>(u)];
    }
    if (parity % 2 != 0) out.push_back(block);
  }
  return out;
}

DeltaTerms delta_terms(const Graph& g, const DegreeSpec& f, const VertexSet& s, const VertexSet& t) {
  if (f.size() != g.vertex_count()) throw GraphError("degree spec does not match the graph");
  DeltaTerms terms;
  terms.q = static_cast<long long>(odd_components(g, f, s, t).size());
  terms.f_s = f.total(s);
  terms.f_t = f.total(t);
  const std::vector<char> in_s = s.indicator(g.vertex_count());
  for (Vertex y : t) {
    for (Vertex u : g.neighbors(y)) terms.deg_t += !in_s[static_cast<std::size_t>(u)];
  }
  if ((terms.value() - f.total()) % 2 != 0) {
    throw std::logic_error("delta " + std::to_string(terms.value()) + " breaks parity with f(V) " +
                           std::to_string(f.total()));
  }
  return terms;
}

long long delta(const Graph& g, const DegreeSpec& f, const VertexSet& s, const VertexSet& t) {
  return delta_terms(g, f, s, t).value();
}

TutteCertificate evaluate_pair(const Graph& g, const DegreeSpec& f, const VertexSet& s, const VertexSet& t) {
  TutteCertificate cert{s, t, delta(g, f, s, t), odd_components(g, f, s, t)};
  return cert;
}

bool enumeration_less(const VertexSet& s1, const VertexSet& t1, const VertexSet& s2, const VertexSet& t2) {
  const std::size_t l1 = s1.size() + t1.size();
  const std::size_t l2 = s2.size() + t2.size();
  if (l1 != l2) return l1 < l2;
  if (s1 != s2) return s1 < s2;
  return t1 < t2;
}

namespace {

using Mask = std::uint32_t;

// Lexicographic comparison of the sorted index lists encoded by two masks.
int compare_lists(Mask a, Mask b) {
  while (a && b) {
    const int x = std::countr_zero(a);
    const int y = std::countr_zero(b);
    if (x != y) return x < y ? -1 : 1;
    a &= a - 1;
    b &= b - 1;
  }
  if (a == b) return 0;
  return a ? 1 : -1;
}

struct PairKey {
  Mask s = 0;
  Mask t = 0;
  long long delta = 0;
};

bool key_less(const PairKey& a, const PairKey& b) {
  const int la = std::popcount(a.s) + std::popcount(a.t);
  const int lb = std::popcount(b.s) + std::popcount(b.t);
  if (la != lb) return la < lb;
  if (const int c = compare_lists(a.s, b.s); c != 0) return c < 0;
  return compare_lists(a.t, b.t) < 0;
}

VertexSet to_set(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return VertexSet(std::move(out));
}

class PairScanner {
 public:
  PairScanner(const Graph& g, const DegreeSpec& f) : n_(g.vertex_count()), adj_(n_, 0) {
    full_ = n_ == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n_) - 1);
    for (std::size_t v = 0; v < n_; ++v) {
      for (Vertex u : g.neighbors(static_cast<Vertex>(v))) adj_[v] |= Mask{1} << u;
    }
    const std::size_t subsets = std::size_t{1} << n_;
    fsum_.assign(subsets, 0);
    for (Mask m = 1; m < subsets; ++m) {
      const int low = std::countr_zero(m);
      fsum_[m] = fsum_[m & (m - 1)] + f[low];
    }
    comp_offset_.assign(subsets + 1, 0);
    for (Mask r = 0; r < subsets; ++r) {
      comp_offset_[r] = comps_.size();
      for (Mask rest = r; rest;) {
        Mask comp = rest & (~rest + 1);
        for (Mask frontier = comp; frontier;) {
          Mask grow = 0;
          for (Mask x = frontier; x; x &= x - 1) grow |= adj_[static_cast<std::size_t>(std::countr_zero(x))];
          frontier = grow & rest & ~comp;
          comp |= frontier;
        }
        comps_.push_back(comp);
        rest &= ~comp;
      }
    }
    comp_offset_[subsets] = comps_.size();
  }

  // Scans every S with s % stride == offset and all T disjoint from S.
  std::optional<PairKey> scan(Mask offset, Mask stride) const {
    std::optional<PairKey> best;
    const std::size_t subsets = std::size_t{1} << n_;
    for (Mask s = offset; s < subsets; s += stride) {
      const Mask avail = full_ & ~s;
      const int ls = std::popcount(s);
      for (Mask t = avail;; t = (t - 1) & avail) {
        const int level = ls + std::popcount(t);
        if (!best || level <= std::popcount(best->s) + std::popcount(best->t)) {
          const long long d = delta(s, t);
          if (d < 0) {
            PairKey key{s, t, d};
            if (!best || key_less(key, *best)) best = key;
          }
        }
        if (t == 0) break;
      }
    }
    return best;
  }

 private:
  long long delta(Mask s, Mask t) const {
    long long value = fsum_[s] - fsum_[t];
    const Mask not_s = full_ & ~s;
    for (Mask y = t; y; y &= y - 1) value += std::popcount(adj_[static_cast<std::size_t>(std::countr_zero(y))] & not_s);
    const Mask rest = full_ & ~(s | t);
    for (std::size_t i = comp_offset_[rest]; i < comp_offset_[rest + 1]; ++i) {
      const Mask d = comps_[i];
      long long parity = fsum_[d];
      for (Mask y = t; y; y &= y - 1) parity += std::popcount(adj_[static_cast<std::size_t>(std::countr_zero(y))] & d);
      value -= parity & 1;
    }
    return value;
  }

  std::size_t n_;
  Mask full_ = 0;
  std::vector<Mask> adj_;
  std::vector<long long> fsum_;
  std::vector<std::size_t> comp_offset_;
  std::vector<Mask> comps_;
};

}  // namespace

CertificateSearch search_certificate(const Graph& g, const DegreeSpec& f, CertificateOptions options) {
  if (f.size() != g.vertex_count()) throw GraphError("degree spec does not match the graph");
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kMaskLimit = 20;
  const std::size_t limit = std::min(options.max_vertices, kMaskLimit);
  if (n > limit) {
    return {CertificateSearch::Status::undecided, std::nullopt,
            "certificate search limited to " + std::to_string(limit) + " vertices, graph has " + std::to_string(n)};
  }
  const PairScanner scanner(g, f);
  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::optional<PairKey>> local(jobs);
  if (jobs == 1) {
    local[0] = scanner.scan(0, 1);
  } else {
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
      workers.emplace_back([&, j] { local[j] = scanner.scan(j, jobs); });
    }
    for (auto& w : workers) w.join();
  }
  std::optional<PairKey> best;
  for (const auto& candidate : local) {
    if (candidate && (!best || key_less(*candidate, *best))) best = candidate;
  }
  if (!best) return {CertificateSearch::Status::none, std::nullopt, {}};
  TutteCertificate cert = evaluate_pair(g, f, to_set(best->s), to_set(best->t));
  if (cert.delta != best->delta) throw std::logic_error("certificate search disagrees with delta evaluation");
  return {CertificateSearch::Status::found, std::move(cert), {}};
}

std::string serialize_certificate(const TutteCertificate& cert) {
  auto list = [](const VertexSet& vs) {
    std::string out;
    for (Vertex v : vs) out += ' ' + std::to_string(v);
    return out;
  };
  std::string out = "S:" + list(cert.s) + "\nT:" + list(cert.t) + "\ndelta: " + std::to_string(cert.delta) +
                    "\nodd: " + std::to_string(cert.q()) + "\n";
  for (const VertexSet& d : cert.odd_components) {
    const std::string body = list(d);
    out += body.empty() ? std::string() : body.substr(1);
    out += '\n';
  }
  return out;
}

WitnessFile parse_witness(std::string_view text) {
  WitnessFile out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_s = false;
  bool have_t = false;
  std::optional<std::size_t> odd_count;

  auto read_list = [&](std::istringstream& words) {
    std::vector<Vertex> vs;
    std::string token;
    while (words >> token) {
      try {
        std::size_t used = 0;
        const long long v = std::stoll(token, &used);
        if (used != token.size() || v < 0 || v > std::numeric_limits<Vertex>::max()) throw std::invalid_argument("");
        vs.push_back(static_cast<Vertex>(v));
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad vertex index '" + token + "'");
      }
    }
    try {
      return VertexSet(std::move(vs));
    } catch (const GraphError& e) {
      throw ParseError(line_no, e.what());
    }
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream words(line);
    if (odd_count) {
      out.odd_components.push_back(read_list(words));
      continue;
    }
    std::string tag;
    words >> tag;
    if (tag == "S:" && !have_s) {
      out.s = read_list(words);
      have_s = true;
    } else if (tag == "T:" && !have_t) {
      out.t = read_list(words);
      have_t = true;
    } else if (tag == "delta:" && !out.delta) {
      long long d = 0;
      if (!(words >> d)) throw ParseError(line_no, "bad delta value");
      out.delta = d;
    } else if (tag == "odd:") {
      long long q = 0;
      if (!(words >> q) || q < 0) throw ParseError(line_no, "bad odd component count");
      odd_count = static_cast<std::size_t>(q);
    } else {
      throw ParseError(line_no, "unexpected line '" + line + "'");
    }
  }
  if (!have_s || !have_t) throw ParseError(0, "witness needs both an S line and a T line");
  if (odd_count && *odd_count != out.odd_components.size()) {
    throw ParseError(line_no, "odd count " + std::to_string(*odd_count) + " but " +
                                  std::to_string(out.odd_components.size()) + " component lines");
  }
  return out;
}

}  // namespace pcs
