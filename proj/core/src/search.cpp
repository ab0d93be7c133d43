#include "grassmann/search.hpp"

#include <algorithm>

#include "grassmann/error.hpp"

namespace grassmann {
namespace {

// Greedy sequential colouring of `candidates` (in id order) into independent
// classes. order[i] gets colour bound[i]; bounds are non-decreasing.
void colour_sort(const Adjacency& adj, const VertexSet& candidates, std::vector<VertexId>& order,
                 std::vector<std::size_t>& bound) {
  order.clear();
  bound.clear();
  VertexSet uncoloured = candidates;
  std::size_t colour = 0;
  while (uncoloured.any()) {
    ++colour;
    VertexSet open = uncoloured;
    for (VertexId v = open.first(); v < open.universe(); v = open.next(v + 1)) {
      uncoloured.reset(v);
      open.subtract(adj[v]);
      order.push_back(v);
      bound.push_back(colour);
    }
  }
}

class CliqueSearch {
 public:
  CliqueSearch(const Adjacency& adj, std::uint64_t budget, std::size_t stop_at)
      : adj_(adj), budget_(budget), stop_at_(stop_at) {}

  CliqueSearchResult run() {
    CliqueSearchResult result;
    const std::size_t n = adj_.size();
    if (n == 0) {
      result.exact = true;
      return result;
    }
    VertexSet all(n);
    all.set_all();
    std::vector<VertexId> order;
    std::vector<std::size_t> bound;
    colour_sort(adj_, all, order, bound);
    root_bound_ = bound.back();
    expand(all);
    std::sort(best_.begin(), best_.end());
    result.best = best_;
    result.nodes = nodes_;
    if (aborted_) {
      result.upper_bound = std::max(best_.size(), std::min(root_bound_, stop_at_));
      result.exact = result.upper_bound == best_.size();
    } else {
      result.upper_bound = best_.size();
      result.exact = true;
    }
    return result;
  }

 private:
  void expand(VertexSet candidates) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    std::vector<VertexId> order;
    std::vector<std::size_t> bound;
    colour_sort(adj_, candidates, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bound[i] <= best_.size()) return;
      const VertexId v = order[i];
      current_.push_back(v);
      VertexSet next = candidates & adj_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) {
          best_ = current_;
          if (best_.size() >= stop_at_) done_ = true;
        }
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      candidates.reset(v);
      if (done_ || aborted_) return;
    }
  }

  const Adjacency& adj_;
  std::uint64_t budget_;
  std::size_t stop_at_;
  std::uint64_t nodes_ = 0;
  std::size_t root_bound_ = 0;
  bool aborted_ = false;
  bool done_ = false;
  std::vector<VertexId> current_;
  std::vector<VertexId> best_;
};

void bron_kerbosch(const Adjacency& adj, VertexSet& r, VertexSet p, VertexSet x,
                   const std::function<void(const VertexSet&)>& report) {
  if (p.none()) {
    if (x.none()) report(r);
    return;
  }
  // pivot maximizing |P n N(u)| over P u X, smallest id on ties
  VertexSet pool = p | x;
  VertexId pivot = pool.first();
  std::size_t pivot_score = 0;
  bool have = false;
  for (VertexId u = pool.first(); u < pool.universe(); u = pool.next(u + 1)) {
    const std::size_t score = p.intersection_count(adj[u]);
    if (!have || score > pivot_score) {
      pivot = u;
      pivot_score = score;
      have = true;
    }
  }
  VertexSet branch = p;
  branch.subtract(adj[pivot]);
  for (VertexId v = branch.first(); v < branch.universe(); v = branch.next(v + 1)) {
    r.set(v);
    bron_kerbosch(adj, r, p & adj[v], x & adj[v], report);
    r.reset(v);
    p.reset(v);
    x.set(v);
  }
}

std::vector<VertexId> degeneracy_order(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = adj[v].count();
  std::vector<bool> removed(n, false);
  std::vector<VertexId> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    VertexId pick = n;
    for (VertexId v = 0; v < n; ++v) {
      if (!removed[v] && (pick == n || degree[v] < degree[pick])) pick = v;
    }
    removed[pick] = true;
    order.push_back(pick);
    for (VertexId u : adj[pick].members()) {
      if (!removed[u]) --degree[u];
    }
  }
  return order;
}

class DsaturSearch {
 public:
  DsaturSearch(const Adjacency& adj, std::span<const VertexId> seed, int lower_bound,
               std::uint64_t budget)
      : adj_(adj), n_(adj.size()), seed_(seed.begin(), seed.end()), lower_bound_(lower_bound),
        budget_(budget) {
    degree_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) degree_[v] = static_cast<int>(adj_[v].count());
  }

  ColouringSearchResult run(const Colouring* initial) {
    ColouringSearchResult result;
    if (n_ == 0) {
      result.optimal = true;
      return result;
    }
    greedy();
    if (initial && initial->size() == n_ && is_proper_colouring(adj_, *initial) &&
        colour_count(*initial) < best_colours_) {
      best_ = *initial;
      best_colours_ = colour_count(*initial);
    }
    if (best_colours_ > lower_bound_) {
      reset_state(best_colours_);
      std::size_t coloured = pin_seed();
      search(coloured);
    }
    result.best = best_;
    result.colours = best_colours_;
    result.nodes = nodes_;
    result.optimal = best_colours_ <= lower_bound_ || !aborted_;
    return result;
  }

 private:
  void reset_state(int max_colours) {
    max_colours_ = max_colours;
    colour_.assign(n_, -1);
    saturation_.assign(n_, 0);
    neighbour_count_.assign(n_ * static_cast<std::size_t>(max_colours_), 0);
    used_ = 0;
  }

  std::size_t pin_seed() {
    for (std::size_t i = 0; i < seed_.size(); ++i) assign(seed_[i], static_cast<int>(i));
    used_ = static_cast<int>(seed_.size());
    return seed_.size();
  }

  int& count(VertexId v, int c) {
    return neighbour_count_[v * static_cast<std::size_t>(max_colours_) + static_cast<std::size_t>(c)];
  }

  void assign(VertexId v, int c) {
    colour_[v] = c;
    const VertexSet& nb = adj_[v];
    for (VertexId u = nb.first(); u < n_; u = nb.next(u + 1)) {
      if (count(u, c)++ == 0) ++saturation_[u];
    }
  }

  void unassign(VertexId v) {
    const int c = colour_[v];
    colour_[v] = -1;
    const VertexSet& nb = adj_[v];
    for (VertexId u = nb.first(); u < n_; u = nb.next(u + 1)) {
      if (--count(u, c) == 0) --saturation_[u];
    }
  }

  VertexId select() const {
    VertexId pick = n_;
    for (VertexId v = 0; v < n_; ++v) {
      if (colour_[v] >= 0) continue;
      if (pick == n_ || saturation_[v] > saturation_[pick] ||
          (saturation_[v] == saturation_[pick] && degree_[v] > degree_[pick])) {
        pick = v;
      }
    }
    return pick;
  }

  void greedy() {
    // Upper bound on colours: every vertex fits in degree + 1 colours.
    int max_degree = 0;
    for (int d : degree_) max_degree = std::max(max_degree, d);
    reset_state(std::max(max_degree + 1, static_cast<int>(seed_.size())));
    std::size_t coloured = pin_seed();
    for (; coloured < n_; ++coloured) {
      VertexId v = select();
      int c = 0;
      while (count(v, c) != 0) ++c;
      assign(v, c);
      used_ = std::max(used_, c + 1);
    }
    best_ = colour_;
    best_colours_ = used_;
  }

  void search(std::size_t coloured) {
    if (done_ || aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (coloured == n_) {
      best_ = colour_;
      best_colours_ = used_;
      if (best_colours_ <= lower_bound_) done_ = true;
      return;
    }
    const VertexId v = select();
    for (int c = 0; c < used_ && used_ < best_colours_; ++c) {
      if (count(v, c) != 0) continue;
      assign(v, c);
      search(coloured + 1);
      unassign(v);
      if (done_ || aborted_) return;
    }
    if (used_ + 1 < best_colours_) {
      assign(v, used_);
      ++used_;
      search(coloured + 1);
      --used_;
      unassign(v);
    }
  }

  const Adjacency& adj_;
  std::size_t n_;
  std::vector<VertexId> seed_;
  int lower_bound_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool done_ = false;

  std::vector<int> degree_;
  std::vector<int> colour_;
  std::vector<int> saturation_;
  std::vector<int> neighbour_count_;
  int max_colours_ = 0;
  int used_ = 0;

  Colouring best_;
  int best_colours_ = 0;
};

}  // namespace

Adjacency complement_graph(const Adjacency& adjacency) {
  Adjacency out;
  out.reserve(adjacency.size());
  for (std::size_t v = 0; v < adjacency.size(); ++v) {
    VertexSet row = adjacency[v].complement();
    row.reset(v);
    out.push_back(std::move(row));
  }
  return out;
}

bool is_clique(const Adjacency& adjacency, std::span<const VertexId> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!adjacency[vertices[i]].test(vertices[j])) return false;
    }
  }
  return true;
}

bool is_independent(const Adjacency& adjacency, std::span<const VertexId> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] || adjacency[vertices[i]].test(vertices[j])) return false;
    }
  }
  return true;
}

CliqueSearchResult maximum_clique(const Adjacency& adjacency, std::uint64_t node_budget,
                                  std::size_t stop_at) {
  return CliqueSearch(adjacency, node_budget, stop_at).run();
}

void for_each_maximal_clique(const Adjacency& adjacency,
                             const std::function<void(const VertexSet&)>& report) {
  const std::size_t n = adjacency.size();
  std::vector<VertexId> order = degeneracy_order(adjacency);
  VertexSet later(n);
  later.set_all();
  VertexSet earlier(n);
  for (VertexId v : order) {
    later.reset(v);
    VertexSet r(n);
    r.set(v);
    bron_kerbosch(adjacency, r, later & adjacency[v], earlier & adjacency[v], report);
    earlier.set(v);
  }
}

bool is_proper_colouring(const Adjacency& adjacency, const Colouring& colours) {
  if (colours.size() != adjacency.size()) return false;
  for (std::size_t v = 0; v < colours.size(); ++v) {
    if (colours[v] < 0) return false;
    for (VertexId u : adjacency[v].members()) {
      if (colours[u] == colours[v]) return false;
    }
  }
  return true;
}

int colour_count(const Colouring& colours) {
  int top = -1;
  for (int c : colours) top = std::max(top, c);
  return top + 1;
}

ColouringSearchResult dsatur_colouring(const Adjacency& adjacency,
                                       std::span<const VertexId> seed_clique, int lower_bound,
                                       std::uint64_t node_budget, const Colouring* initial) {
  if (!is_clique(adjacency, seed_clique)) throw_invalid("seed vertices do not form a clique");
  return DsaturSearch(adjacency, seed_clique, lower_bound, node_budget).run(initial);
}

}  // namespace grassmann
