// Acceptance run: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "grassmann/cliques.hpp"
#include "grassmann/coreness.hpp"
#include "grassmann/error.hpp"
#include "grassmann/fixture.hpp"
#include "grassmann/qbinomial.hpp"
#include "../unit/test_support.hpp"

#ifndef GRASSMANN_LAB_FIXTURE
#error "GRASSMANN_LAB_FIXTURE must point at the J_2(4,2) colouring fixture"
#endif

namespace {

using namespace grassmann;
using grassmann::testing::bfs_distances;
using grassmann::testing::field_of_order;
using grassmann::testing::pascal_gaussian;

// Collects failed expectations for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures_) s += "\n    - " + f;
    if (failed_ > failures_.size()) s += "\n    - ... " + std::to_string(failed_ - failures_.size()) + " more";
    return s;
  }

 private:
  std::vector<std::string> failures_;
  std::size_t failed_ = 0;
};

std::string tag(int q, int n, int m) {
  return "J_" + std::to_string(q) + "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

GrassmannGraph graph(int q, int n, int m) { return build_graph(field_of_order(static_cast<std::uint64_t>(q)), n, m); }

void vertex_counts(Check& c) {
  for (auto [q, n, m, expected] : {std::tuple{2, 4, 2, 35}, std::tuple{2, 5, 2, 155}, std::tuple{3, 4, 2, 130}}) {
    const auto start = std::chrono::steady_clock::now();
    const GrassmannGraph g = graph(q, n, m);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(g.size() == static_cast<std::size_t>(expected), tag(q, n, m) + " has " + std::to_string(g.size()));
    c.expect(BigInt(g.size()) == gaussian_binomial_value(n, m, q), tag(q, n, m) + " differs from [n,m]_q");
    c.expect(BigInt(g.size()) == pascal_gaussian(n, m, q), tag(q, n, m) + " differs from q-Pascal");
    c.expect(secs < 1.0, tag(q, n, m) + " took " + std::to_string(secs) + " s");
  }
}

void chow_classification(Check& c) {
  {
    const GrassmannGraph g = graph(2, 4, 2);
    const CliqueCensus census = all_maximal_cliques_bruteforce(g);
    c.expect(census.cliques.size() == 30, "J_2(4,2): " + std::to_string(census.cliques.size()) + " maximal cliques");
    c.expect(census.stars == 15 && census.tops == 15 && census.unmatched == 0, "J_2(4,2): not 15 stars + 15 tops");
    for (const auto& e : census.cliques) c.expect(e.members.count() == 7, "J_2(4,2): clique of wrong size");
  }
  {
    const GrassmannGraph g = graph(2, 5, 2);
    const CliqueCensus census = all_maximal_cliques_bruteforce(g);
    c.expect(census.stars == 31 && census.tops == 155 && census.unmatched == 0 && census.cliques.size() == 186,
             "J_2(5,2): not 31 stars + 155 tops");
    for (const auto& e : census.cliques) {
      c.expect(e.kind.has_value() && e.members.count() == (*e.kind == CliqueKind::kStar ? 15u : 7u),
               "J_2(5,2): clique of wrong size or kind");
    }
  }
}

void clique_lemmas(Check& c) {
  for (auto [q, n, m] : {std::tuple{2, 4, 2}, std::tuple{2, 5, 2}, std::tuple{3, 4, 2}}) {
    const GrassmannGraph g = graph(q, n, m);
    const LemmaReport r = verify_clique_lemmas(g);
    c.expect(r.all_pass() && r.counterexamples.empty(), tag(q, n, m) + ": lemma counterexamples");
    c.expect(r.q_plus_one == static_cast<std::uint64_t>(q) + 1, tag(q, n, m) + ": q+1 mismatch");
    // Every incident star/top pair shares exactly q + 1 members.
    const auto stars = star_catalog(g);
    const auto tops = top_catalog(g);
    std::uint64_t incident = 0;
    for (const auto& s : stars) {
      for (const auto& t : tops) {
        if (!t.center.contains(s.center)) continue;
        ++incident;
        c.expect(s.members.intersection_count(t.members) == static_cast<std::size_t>(q) + 1,
                 tag(q, n, m) + ": incident star/top overlap is not q+1");
      }
    }
    c.expect(incident == r.incident_pairs && incident > 0, tag(q, n, m) + ": incident pair count");
  }
}

void example_colouring(Check& c) {
  std::ifstream in(GRASSMANN_LAB_FIXTURE);
  std::stringstream buf;
  buf << in.rdbuf();
  const Fixture fx = parse_fixture(buf.str());
  const GrassmannGraph g = graph(2, 4, 2);

  const FixtureReport fr = verify_fixture_partition(g, fx);
  c.expect(fr.all_pass(), "fixture partition fails verification");
  c.expect(fr.class_count == 7 && fr.class_sizes == std::vector<std::size_t>(7, 5), "fixture is not 7 classes of 5");

  const CorenessReport r = core_test(4, 2, 2, {}, &fx);
  c.expect(r.omega_verified && r.omega == 7, "omega is not 7 by branch and bound");
  c.expect(r.chi && r.chi->exact() && r.chi->lower == 7, "chi is not exactly 7");
  c.expect(r.alpha && r.alpha->exact() && r.alpha->lower == 5, "alpha is not exactly 5");
  c.expect(r.verdict == Verdict::kNotCore, "verdict is not not-core");
  c.expect(r.witness.has_value(), "no witness endomorphism");
  if (!r.witness) return;
  bool valid = true;
  try {
    validate_endomorphism(g, *r.witness);
  } catch (const Error&) {
    valid = false;
  }
  c.expect(valid, "witness is not edge-preserving");
  VertexSet image(g.size());
  for (VertexId v : r.witness->map) image.set(v);
  c.expect(image.count() < g.size(), "witness is injective");
  bool onto_star = false;
  for (const auto& s : star_catalog(g)) onto_star = onto_star || s.members == image;
  c.expect(onto_star, "witness image is not a star");
  c.expect(classify_endomorphism(g, *r.witness) == EndomorphismKind::kColouring, "witness does not classify as colouring");
}

void odd_dimension_cores(Check& c) {
  const CorenessReport a = core_test(5, 2, 2);
  c.expect(a.verdict == Verdict::kCore && a.integrality && a.integrality->str() == "31/3", "core_test(q=2,5,2)");
  const CorenessReport b = core_test(5, 2, 3);
  c.expect(b.verdict == Verdict::kCore && b.integrality && b.integrality->str() == "121/4", "core_test(q=3,5,2)");
  for (int k = 2; k <= 4; ++k) {
    const ScanReport scan = scan_core_threshold(2 * k + 1, 2, 64);
    c.expect(scan.all_non_integer(), "scan finds an integer at k=" + std::to_string(k));
    c.expect(scan.entries.size() == prime_powers_up_to(64).size(), "scan skipped prime powers");
    for (const auto& e : scan.entries) {
      // Direct evaluation of (q^(2k+1) - 1) / (q^2 - 1).
      const BigInt q(e.q);
      const BigInt num = boost::multiprecision::pow(q, static_cast<unsigned>(2 * k + 1)) - 1;
      const BigInt den = q * q - 1;
      c.expect(num % den != 0, "(q^" + std::to_string(2 * k + 1) + "-1)/(q^2-1) integral at q=" + std::to_string(e.q));
      c.expect(e.value.num * den == e.value.den * num, "scan value differs from direct formula at q=" + std::to_string(e.q));
    }
  }
}

void cyclotomic_identities(Check& c) {
  for (int n = 1; n <= 30; ++n) {
    IntPolynomial prod{1};
    for (int j = 1; j <= n; ++j) {
      if (n % j == 0) prod *= cyclotomic(j);
    }
    c.expect(prod == IntPolynomial::power_minus_one(static_cast<std::size_t>(n)), "x^n - 1 product fails at n=" + std::to_string(n));
  }
  for (int n = 0; n <= 12; ++n) {
    for (int m = 0; m <= n; ++m) {
      const IntPolynomial expected = gaussian_binomial_poly(n, m);
      IntPolynomial prod{1};
      for (auto [t, e] : knuth_wilf_exponents(n, m).exponents) {
        for (int i = 0; i < e; ++i) prod *= cyclotomic(t);
      }
      const std::string at = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
      c.expect(prod == expected, "Knuth-Wilf product differs at " + at);
      c.expect(expected == gaussian_binomial_poly(n, n - m), "symmetry fails at " + at);
      for (int q : {2, 3, 4, 7}) c.expect(expected.evaluate(q) == pascal_gaussian(n, m, q), "value differs at " + at);
    }
  }
}

void gcd_criterion(Check& c) {
  int cases = 0;
  for (int n = 4; n <= 12; ++n) {
    for (int m = 2; 2 * m <= n; ++m) {
      const HReport r = h_report(n, m);
      if (!r.applicable) continue;
      ++cases;
      const std::string at = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
      c.expect(r.exponents.exponent(r.gcd_value) == -1, "Phi_i exponent is not -1 at " + at);
      const DivRem qr = divrem(r.f, r.g);
      c.expect(!qr.remainder.is_zero(), "divrem remainder is zero at " + at);
      c.expect(r.g * qr.quotient + qr.remainder == r.f, "divrem identity fails at " + at);
      c.expect(r.consistent, "h * omega != [n,m] at " + at);
      c.expect(scan_core_threshold(n, m, 32).all_non_integer(), "h(q) integral for some q <= 32 at " + at);
    }
  }
  c.expect(cases == 8, "expected 8 applicable (n,m), found " + std::to_string(cases));
}

void duality(Check& c) {
  for (auto [q, n, m] : {std::tuple{2, 4, 2}, std::tuple{2, 6, 3}}) {
    const GrassmannGraph g = graph(q, n, m);
    const DualReport r = dual_map_check(g);
    c.expect(r.all_pass(), tag(q, n, m) + ": dual map check fails");
    c.expect(classify_endomorphism(g, Endomorphism{r.map}) == EndomorphismKind::kAutomorphism,
             tag(q, n, m) + ": dual map is not an automorphism");
    // Stars go to tops: the image of [P> is <P^perp].
    const auto tops = top_catalog(g);
    for (const auto& s : star_catalog(g)) {
      VertexSet image(g.size());
      for (VertexId v : s.members.members()) image.set(r.map[v]);
      const Subspace target = dual_complement(s.center);
      bool matched = false;
      for (const auto& t : tops) matched = matched || (t.center == target && t.members == image);
      c.expect(matched, tag(q, n, m) + ": star image is not the dual top");
    }
  }
}

void cross_consistency(Check& c) {
  for (auto [q, n, m] : {std::tuple{2, 4, 2}, std::tuple{2, 5, 2}, std::tuple{3, 4, 2}, std::tuple{2, 6, 3},
                         std::tuple{2, 4, 1}, std::tuple{4, 3, 1}}) {
    const GrassmannGraph g = graph(q, n, m);
    for (VertexId a = 0; a < g.size(); ++a) {
      const std::vector<int> dist = bfs_distances(g, a);
      for (VertexId b = 0; b < g.size(); ++b) {
        if (a == b) continue;
        const bool by_meet = intersect(g.vertex(a), g.vertex(b)).dim() + 1 == static_cast<std::size_t>(m);
        const bool by_rank = stack_rank(g.vertex(a).basis(), g.vertex(b).basis()) == static_cast<std::size_t>(m) + 1;
        c.expect(by_meet == by_rank && by_meet == g.adjacent(a, b), tag(q, n, m) + ": adjacency tests disagree");
        c.expect(distance(g, a, b) == dist[b], tag(q, n, m) + ": distance formula differs from BFS");
      }
    }
  }
  for (std::uint64_t q : prime_powers_up_to(64)) {
    const FieldPtr fp = field_of_order(q);
    const Field& f = *fp;
    bool ok = true;
    for (Elem a = 0; a < q && ok; ++a) {
      ok = f.add(a, 0) == a && f.mul(a, 1) == a && f.add(a, f.neg(a)) == 0;
      if (a != 0) ok = ok && f.mul(a, f.inv(a)) == 1 && f.pow(a, q - 1) == 1;
      for (Elem b = 0; b < q && ok; ++b) {
        const Elem ab = f.add(a, b);
        const Elem mab = f.mul(a, b);
        ok = ab == f.add(b, a) && mab == f.mul(b, a);
        for (Elem x = 0; x < q && ok; ++x) {
          ok = f.add(ab, x) == f.add(a, f.add(b, x)) && f.mul(mab, x) == f.mul(a, f.mul(b, x)) &&
               f.mul(a, f.add(b, x)) == f.add(mab, f.mul(a, x));
        }
      }
    }
    c.expect(ok, "field axioms fail for q=" + std::to_string(q));
  }
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0: no limit
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "vertex counts of J_2(4,2), J_2(5,2), J_3(4,2)", 3.0, vertex_counts},
      {2, "every maximal clique is a star or a top", 5.0, chow_classification},
      {3, "star/top intersection lemmas, zero counterexamples", 10.0, clique_lemmas},
      {4, "J_2(4,2) colouring fixture, chi = omega = 7, alpha = 5, not a core", 5.0, example_colouring},
      {5, "J_q(2k+1,2) cores by non-integrality", 1.0, odd_dimension_cores},
      {6, "cyclotomic and Gaussian binomial identities", 5.0, cyclotomic_identities},
      {7, "gcd criterion on h(q) for n <= 12", 30.0, gcd_criterion},
      {8, "W -> W^perp automorphism of J_2(4,2) and J_2(6,3)", 10.0, duality},
      {9, "adjacency, distance and field axiom cross-checks", 0.0, cross_consistency},
  };

  int failures = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_seconds > 0 && secs >= cr.limit_seconds) {
      check.expect(false, "runtime " + std::to_string(secs) + " s exceeds " + std::to_string(cr.limit_seconds) + " s");
    }
    const bool pass = check.ok();
    failures += pass ? 0 : 1;
    std::printf("%s criterion %d: %s (%.2f s)%s\n", pass ? "PASS" : "FAIL", cr.id, cr.name, secs,
                pass ? "" : check.summary().c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
