#include "grassmann/fixture.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "grassmann/error.hpp"

namespace grassmann {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_digit_row(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || (c >= 'a' && c <= 'z');
  });
}

Elem digit_value(char c) {
  if (c >= '0' && c <= '9') return static_cast<Elem>(c - '0');
  return static_cast<Elem>(c - 'a' + 10);
}

}  // namespace

Fixture parse_fixture(std::string_view text) {
  Fixture fx;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool in_block = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) {
      in_block = false;
      continue;
    }
    if (line.front() == '#') continue;
    if (auto colon = line.find(':'); colon != std::string_view::npos) {
      Fixture::Class cls;
      cls.label = std::string(trim(line.substr(0, colon)));
      std::istringstream members{std::string(line.substr(colon + 1))};
      std::string label;
      while (members >> label) cls.members.push_back(label);
      fx.classes.push_back(std::move(cls));
      in_block = false;
      continue;
    }
    if (in_block && is_digit_row(line)) {
      fx.matrices.back().rows.emplace_back(line);
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(line.front()))) {
      throw_invalid("fixture line " + std::to_string(line_no) + ": expected a label");
    }
    if (!fx.classes.empty()) {
      throw_invalid("fixture line " + std::to_string(line_no) + ": matrix after the class lines");
    }
    fx.matrices.push_back(Fixture::Matrix{std::string(line), {}});
    in_block = true;
  }
  for (const auto& m : fx.matrices) {
    if (m.rows.empty()) throw_invalid("fixture matrix " + m.label + " has no rows");
    for (const auto& r : m.rows) {
      if (r.size() != m.rows.front().size()) throw_invalid("fixture matrix " + m.label + " is ragged");
    }
  }
  return fx;
}

Fixture load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_invalid("cannot open fixture " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_fixture(text.str());
}

FqMatrix fixture_matrix(const FieldPtr& field, const Fixture::Matrix& m) {
  const std::size_t cols = m.rows.front().size();
  std::vector<Elem> entries;
  for (const auto& row : m.rows) {
    for (char c : row) entries.push_back(digit_value(c));
  }
  return FqMatrix(field, m.rows.size(), cols, std::move(entries));
}

FixtureReport verify_fixture_partition(const GrassmannGraph& g, const Fixture& fx) {
  FixtureReport report;
  std::map<std::string, FqMatrix> raw;
  std::map<VertexId, std::string> owner;

  report.distinct = true;
  for (const auto& m : fx.matrices) {
    FqMatrix matrix = fixture_matrix(g.field(), m);
    const Subspace s = canonicalize(matrix);
    raw.emplace(m.label, matrix);
    const auto id = g.find(s);
    if (!id) {
      report.distinct = false;
      report.violations.push_back({"not-a-vertex", {m.label}, "rank " + std::to_string(s.dim())});
      continue;
    }
    if (auto [it, fresh] = owner.emplace(*id, m.label); !fresh) {
      report.distinct = false;
      report.violations.push_back({"duplicate", {it->second, m.label}, "vertex " + std::to_string(*id)});
      continue;
    }
    report.vertex_of.emplace(m.label, *id);
  }
  report.exhaustive = report.distinct && owner.size() == g.size();
  if (!report.exhaustive) {
    report.violations.push_back({"coverage", {},
                                 std::to_string(owner.size()) + " of " + std::to_string(g.size()) +
                                     " vertices covered"});
  }

  report.class_count = fx.classes.size();
  std::map<std::string, std::size_t> seen;
  for (const auto& cls : fx.classes) {
    report.class_sizes.push_back(cls.members.size());
    for (const auto& label : cls.members) ++seen[label];
  }
  report.partition = true;
  for (const auto& m : fx.matrices) {
    const auto it = seen.find(m.label);
    const std::size_t hits = it == seen.end() ? 0 : it->second;
    if (hits != 1) {
      report.partition = false;
      report.violations.push_back({"partition", {m.label}, "appears in " + std::to_string(hits) + " classes"});
    }
  }
  for (const auto& [label, hits] : seen) {
    if (!raw.count(label)) {
      report.partition = false;
      report.violations.push_back({"partition", {label}, "class member without a matrix"});
    }
  }

  report.independent = true;
  for (const auto& cls : fx.classes) {
    for (std::size_t i = 0; i < cls.members.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.members.size(); ++j) {
        auto a = report.vertex_of.find(cls.members[i]);
        auto b = report.vertex_of.find(cls.members[j]);
        if (a == report.vertex_of.end() || b == report.vertex_of.end()) continue;
        if (g.adjacent(a->second, b->second)) {
          report.independent = false;
          const std::size_t rank = stack_rank(raw.at(cls.members[i]), raw.at(cls.members[j]));
          report.violations.push_back({"independence", {cls.members[i], cls.members[j]},
                                       cls.label + ": stacked rank " + std::to_string(rank)});
        }
      }
    }
  }

  if (report.all_pass()) {
    report.colouring.assign(g.size(), -1);
    for (std::size_t c = 0; c < fx.classes.size(); ++c) {
      for (const auto& label : fx.classes[c].members) {
        report.colouring[report.vertex_of.at(label)] = static_cast<int>(c);
      }
    }
  }
  return report;
}

}  // namespace grassmann
