#include "grassmann/cliques.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "grassmann/enumerate.hpp"
#include "grassmann/error.hpp"
#include "grassmann/search.hpp"
#include "parallel.hpp"

namespace grassmann {
namespace {

constexpr std::size_t kMaxCounterexamples = 20;

std::uint64_t projective_count(std::uint64_t q, int k) {
  // (q^k - 1)/(q - 1) = 1 + q + ... + q^(k-1)
  std::uint64_t sum = 0;
  std::uint64_t power = 1;
  for (int i = 0; i < k; ++i) {
    sum += power;
    power *= q;
  }
  return sum;
}

VertexSet members_of(const GrassmannGraph& g, const std::vector<Subspace>& subspaces) {
  VertexSet members(g.size());
  for (const Subspace& s : subspaces) members.set(g.id_of(s));
  return members;
}

std::string render(const Subspace& s) {
  std::string out;
  for (const auto& row : s.digit_rows()) {
    if (!out.empty()) out.push_back('/');
    out += row;
  }
  return out.empty() ? "0" : out;
}

struct Finding {
  int check;
  std::size_t i;
  std::size_t j;
  Counterexample detail;
};

class FindingLog {
 public:
  void add(Finding f) {
    std::lock_guard lock(mutex_);
    findings_.push_back(std::move(f));
  }

  std::vector<Counterexample> sorted_capped() {
    std::sort(findings_.begin(), findings_.end(), [](const Finding& a, const Finding& b) {
      return std::tie(a.check, a.i, a.j) < std::tie(b.check, b.i, b.j);
    });
    std::vector<Counterexample> out;
    for (std::size_t k = 0; k < findings_.size() && k < kMaxCounterexamples; ++k) {
      out.push_back(findings_[k].detail);
    }
    return out;
  }

  bool any(int check) const {
    return std::any_of(findings_.begin(), findings_.end(),
                       [check](const Finding& f) { return f.check == check; });
  }

 private:
  std::mutex mutex_;
  std::vector<Finding> findings_;
};

enum Check { kIncidence = 0, kOverlap = 1, kStarMeet = 2, kTopMeet = 3 };

void require_brute_force(const GrassmannGraph& g, const Limits& limits) {
  if (g.size() > limits.brute_force_vertices) {
    throw_bound("graph has " + std::to_string(g.size()) + " vertices, brute-force bound is " +
                std::to_string(limits.brute_force_vertices));
  }
}

}  // namespace

const char* to_string(CliqueKind kind) { return kind == CliqueKind::kStar ? "star" : "top"; }

std::uint64_t star_size(std::uint64_t q, int n, int m) { return projective_count(q, n - m + 1); }

std::uint64_t top_size(std::uint64_t q, int m) { return projective_count(q, m + 1); }

MaximalClique star(const GrassmannGraph& g, const Subspace& center) {
  if (center.dim() + 1 != static_cast<std::size_t>(g.m()) ||
      center.ambient() != static_cast<std::size_t>(g.n())) {
    throw_invalid("star center must have dimension m - 1");
  }
  auto subspaces = subspaces_between(center, Subspace::full(g.field(), center.ambient()), g.m());
  return MaximalClique{CliqueKind::kStar, center, members_of(g, subspaces)};
}

MaximalClique top(const GrassmannGraph& g, const Subspace& center) {
  if (center.dim() != static_cast<std::size_t>(g.m()) + 1 ||
      center.ambient() != static_cast<std::size_t>(g.n())) {
    throw_invalid("top center must have dimension m + 1");
  }
  auto subspaces = subspaces_between(Subspace::zero(g.field(), center.ambient()), center, g.m());
  return MaximalClique{CliqueKind::kTop, center, members_of(g, subspaces)};
}

std::vector<MaximalClique> star_catalog(const GrassmannGraph& g, const Limits& limits) {
  std::vector<MaximalClique> out;
  for (const Subspace& p : enumerate_subspaces(g.field(), g.n(), g.m() - 1, limits.max_enumeration)) {
    out.push_back(star(g, p));
  }
  return out;
}

std::vector<MaximalClique> top_catalog(const GrassmannGraph& g, const Limits& limits) {
  std::vector<MaximalClique> out;
  for (const Subspace& q : enumerate_subspaces(g.field(), g.n(), g.m() + 1, limits.max_enumeration)) {
    out.push_back(top(g, q));
  }
  return out;
}

CliqueCensus all_maximal_cliques_bruteforce(const GrassmannGraph& g, const Limits& limits) {
  require_brute_force(g, limits);
  const auto stars = star_catalog(g, limits);
  const auto tops = top_catalog(g, limits);
  std::map<VertexSet, std::pair<CliqueKind, std::size_t>> catalog;
  for (std::size_t i = 0; i < stars.size(); ++i) catalog.emplace(stars[i].members, std::pair{CliqueKind::kStar, i});
  // Stars and tops never coincide for 2 <= m <= n - 2. On the complete
  // graphs (m = 1 or m = n - 1) the whole vertex set is both; it is filed as
  // the star or top that comes first.
  for (std::size_t i = 0; i < tops.size(); ++i) catalog.emplace(tops[i].members, std::pair{CliqueKind::kTop, i});

  CliqueCensus census;
  census.star_catalog_size = stars.size();
  census.top_catalog_size = tops.size();
  for_each_maximal_clique(g.adjacency(), [&](const VertexSet& members) {
    CliqueCensus::Entry entry{members, std::nullopt, std::nullopt};
    if (auto it = catalog.find(members); it != catalog.end()) {
      entry.kind = it->second.first;
      entry.catalog_index = it->second.second;
    }
    census.cliques.push_back(std::move(entry));
  });
  std::sort(census.cliques.begin(), census.cliques.end(),
            [](const auto& a, const auto& b) { return a.members < b.members; });
  for (const auto& c : census.cliques) {
    if (!c.kind) {
      ++census.unmatched;
    } else if (*c.kind == CliqueKind::kStar) {
      ++census.stars;
    } else {
      ++census.tops;
    }
  }
  return census;
}

LemmaReport verify_clique_lemmas(const GrassmannGraph& g, const Limits& limits) {
  require_brute_force(g, limits);
  const auto stars = star_catalog(g, limits);
  const auto tops = top_catalog(g, limits);
  const std::uint64_t q_plus_one = g.q() + 1;
  const auto m = static_cast<std::size_t>(g.m());
  FindingLog log;
  std::mutex count_mutex;

  LemmaReport report;
  report.q_plus_one = q_plus_one;

  // star x top
  detail::parallel_for(stars.size(), [&](std::size_t begin, std::size_t end) {
    std::uint64_t incident = 0;
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < tops.size(); ++j) {
        const std::size_t shared = stars[i].members.intersection_count(tops[j].members);
        const bool contained = tops[j].center.contains(stars[i].center);
        if (contained) ++incident;
        const bool ok = contained ? shared == q_plus_one : shared == 0;
        if (!ok) {
          log.add({kIncidence, i, j,
                   {"star_top_incidence", {render(stars[i].center), render(tops[j].center)},
                    "shared " + std::to_string(shared) + (contained ? ", incident" : ", not incident")}});
        }
      }
    }
    std::lock_guard lock(count_mutex);
    report.incident_pairs += incident;
  });
  report.star_top_pairs = stars.size() * tops.size();

  // star x star
  detail::parallel_for(stars.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = i + 1; j < stars.size(); ++j) {
        const std::size_t shared = stars[i].members.intersection_count(stars[j].members);
        if (shared > 1) {
          log.add({kOverlap, i, j,
                   {"distinct_overlap", {render(stars[i].center), render(stars[j].center)},
                    "stars share " + std::to_string(shared)}});
        }
        const Subspace& a = stars[i].center;
        const Subspace& b = stars[j].center;
        const bool expect_meet = intersect(a, b).dim() + 2 == m;
        bool ok = (shared > 0) == expect_meet;
        if (ok && shared == 1) {
          const VertexId meet = (stars[i].members & stars[j].members).first();
          ok = g.vertex(meet) == join(a, b);
        }
        if (!ok) {
          log.add({kStarMeet, i, j,
                   {"star_meet", {render(a), render(b)}, "shared " + std::to_string(shared)}});
        }
      }
    }
  });
  report.star_pairs = stars.size() * (stars.size() - 1) / 2;

  // top x top
  detail::parallel_for(tops.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = i + 1; j < tops.size(); ++j) {
        const std::size_t shared = tops[i].members.intersection_count(tops[j].members);
        if (shared > 1) {
          log.add({kOverlap, stars.size() + i, j,
                   {"distinct_overlap", {render(tops[i].center), render(tops[j].center)},
                    "tops share " + std::to_string(shared)}});
        }
        const Subspace& p = tops[i].center;
        const Subspace& r = tops[j].center;
        const Subspace common = intersect(p, r);
        const bool expect_meet = common.dim() == m;
        bool ok = (shared > 0) == expect_meet;
        if (ok && shared == 1) {
          const VertexId meet = (tops[i].members & tops[j].members).first();
          ok = g.vertex(meet) == common;
        }
        if (!ok) {
          log.add({kTopMeet, i, j,
                   {"top_meet", {render(p), render(r)}, "shared " + std::to_string(shared)}});
        }
      }
    }
  });
  report.top_pairs = tops.size() * (tops.size() - 1) / 2;

  report.star_top_incidence = !log.any(kIncidence);
  report.distinct_overlap = !log.any(kOverlap);
  report.star_meet = !log.any(kStarMeet);
  report.top_meet = !log.any(kTopMeet);
  report.counterexamples = log.sorted_capped();
  return report;
}

DualReport dual_map_check(const GrassmannGraph& g, const Limits& limits) {
  if (g.n() != 2 * g.m()) throw_invalid("duality requires n = 2m");
  const std::size_t count = g.size();
  DualReport report;
  report.map.resize(count);
  detail::parallel_for(count, [&](std::size_t begin, std::size_t end) {
    for (std::size_t v = begin; v < end; ++v) report.map[v] = g.id_of(dual_complement(g.vertex(v)));
  });

  VertexSet image(count);
  for (VertexId v : report.map) image.set(v);
  report.bijective = image.count() == count;
  report.involution = std::all_of(report.map.begin(), report.map.end(), [&](VertexId v) {
    return report.map[report.map[v]] == v;
  });
  report.preserves_adjacency = true;
  report.reflects_adjacency = true;
  for (VertexId a = 0; a < count; ++a) {
    for (VertexId b = a + 1; b < count; ++b) {
      const bool before = g.adjacent(a, b);
      const bool after = g.adjacent(report.map[a], report.map[b]);
      if (before && !after) report.preserves_adjacency = false;
      if (!before && after) report.reflects_adjacency = false;
    }
  }

  auto image_of = [&](const VertexSet& members) {
    VertexSet out(count);
    for (VertexId v : members.members()) out.set(report.map[v]);
    return out;
  };
  report.stars_to_tops = true;
  for (const auto& s : star_catalog(g, limits)) {
    if (image_of(s.members) != top(g, dual_complement(s.center)).members) report.stars_to_tops = false;
  }
  report.tops_to_stars = true;
  for (const auto& t : top_catalog(g, limits)) {
    if (image_of(t.members) != star(g, dual_complement(t.center)).members) report.tops_to_stars = false;
  }
  return report;
}

}  // namespace grassmann
