#include "pcs/matching.hpp"

#include <algorithm>
#include <numeric>

namespace pcs {

std::size_t Matching::size() const {
  return static_cast<std::size_t>(std::count_if(mate.begin(), mate.end(), [](const auto& m) { return m.has_value(); })) /
         2;
}

bool Matching::is_perfect() const {
  return std::all_of(mate.begin(), mate.end(), [](const auto& m) { return m.has_value(); });
}

std::vector<Edge> Matching::pairs() const {
  std::vector<Edge> out;
  for (std::size_t v = 0; v < mate.size(); ++v) {
    if (mate[v] && static_cast<std::size_t>(*mate[v]) > v) out.push_back(Edge{static_cast<Vertex>(v), *mate[v]});
  }
  return out;
}

bool is_valid_matching(const Graph& g, const Matching& m) {
  if (m.mate.size() != g.vertex_count()) return false;
  for (std::size_t v = 0; v < m.mate.size(); ++v) {
    if (!m.mate[v]) continue;
    const Vertex u = *m.mate[v];
    if (!g.valid(u) || !m.mate[static_cast<std::size_t>(u)] ||
        *m.mate[static_cast<std::size_t>(u)] != static_cast<Vertex>(v) || !g.adjacent(static_cast<Vertex>(v), u)) {
      return false;
    }
  }
  return true;
}

namespace {

constexpr int kNone = -1;

class BlossomSearch {
 public:
  explicit BlossomSearch(const Graph& g)
      : g_(g), n_(static_cast<int>(g.vertex_count())), match_(g.vertex_count(), kNone), pred_(g.vertex_count()),
        base_(g.vertex_count()), label_(g.vertex_count()), stamp_(g.vertex_count(), 0) {}

  void greedy_start() {
    for (int v = 0; v < n_; ++v) {
      if (match_[idx(v)] != kNone) continue;
      for (Vertex u : g_.neighbors(v)) {
        if (match_[idx(u)] == kNone) {
          match_[idx(v)] = u;
          match_[idx(u)] = v;
          break;
        }
      }
    }
  }

  void run() {
    for (int v = 0; v < n_; ++v) {
      if (match_[idx(v)] == kNone) augment_from(v);
    }
  }

  Matching result() const {
    Matching m;
    m.mate.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      if (match_[idx(v)] != kNone) m.mate[idx(v)] = match_[idx(v)];
    }
    return m;
  }

 private:
  enum Label : char { unlabeled, outer, inner };

  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

  int find(int x) {
    while (base_[idx(x)] != x) {
      base_[idx(x)] = base_[idx(base_[idx(x)])];
      x = base_[idx(x)];
    }
    return x;
  }

  int lowest_common_base(int x, int y) {
    ++clock_;
    x = find(x);
    y = find(y);
    while (true) {
      if (x != kNone) {
        if (stamp_[idx(x)] == clock_) return x;
        stamp_[idx(x)] = clock_;
        x = match_[idx(x)] == kNone ? kNone : find(pred_[idx(match_[idx(x)])]);
      }
      std::swap(x, y);
    }
  }

  void shrink(int x, int y, int b) {
    while (find(x) != b) {
      pred_[idx(x)] = y;
      y = match_[idx(x)];
      if (label_[idx(y)] == inner) {
        label_[idx(y)] = outer;
        queue_.push_back(y);
      }
      base_[idx(find(x))] = b;
      base_[idx(find(y))] = b;
      x = pred_[idx(y)];
    }
  }

  bool augment_from(int root) {
    std::iota(base_.begin(), base_.end(), 0);
    std::fill(label_.begin(), label_.end(), unlabeled);
    std::fill(pred_.begin(), pred_.end(), kNone);
    queue_.clear();
    label_[idx(root)] = outer;
    queue_.push_back(root);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const int x = queue_[head];
      for (Vertex y : g_.neighbors(x)) {
        if (find(x) == find(y) || label_[idx(y)] == inner) continue;
        if (label_[idx(y)] == unlabeled) {
          label_[idx(y)] = inner;
          pred_[idx(y)] = x;
          if (match_[idx(y)] == kNone) {
            flip_path(y);
            return true;
          }
          label_[idx(match_[idx(y)])] = outer;
          queue_.push_back(match_[idx(y)]);
        } else {
          const int b = lowest_common_base(x, y);
          shrink(x, y, b);
          shrink(y, x, b);
        }
      }
    }
    return false;
  }

  void flip_path(int end) {
    for (int u = end; u != kNone;) {
      const int v = pred_[idx(u)];
      const int next = match_[idx(v)];
      match_[idx(u)] = v;
      match_[idx(v)] = u;
      u = next;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> pred_;
  std::vector<int> base_;
  std::vector<Label> label_;
  std::vector<int> stamp_;
  int clock_ = 0;
  std::vector<int> queue_;
};

}  // namespace

Matching maximum_matching(const Graph& g) {
  BlossomSearch search(g);
  search.greedy_start();
  search.run();
  return search.result();
}

}  // namespace pcs
