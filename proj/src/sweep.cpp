#include "eg/sweep.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "eg/lifting.hpp"

namespace eg {

namespace {

// Grammar per item: term ("x" term)*, term = C<n> | C<n>^<k> | K<n>.
// K<n> is the complete graph, built as the full cycle power C_n^{n/2}.
MultiGraph parse_term(const std::string& term) {
  size_t i = 0;
  auto read_int = [&](const char* what) {
    size_t start = i;
    while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
    if (i == start) throw ConfigError("family spec: expected " + std::string(what) +
                                      " in term '" + term + "'");
    return std::stoi(term.substr(start, i - start));
  };
  if (i >= term.size()) throw ConfigError("family spec: empty term");
  const char head = term[i++];
  if (head == 'C') {
    const int n = read_int("cycle size");
    if (i == term.size()) return cycle(n);
    if (term[i] == '^') {
      ++i;
      const int k = read_int("power");
      if (i != term.size())
        throw ConfigError("family spec: trailing characters in term '" + term + "'");
      return cycle_power(n, k);
    }
    throw ConfigError("family spec: trailing characters in term '" + term + "'");
  }
  if (head == 'K') {
    const int n = read_int("complete graph size");
    if (i != term.size())
      throw ConfigError("family spec: trailing characters in term '" + term + "'");
    if (n < 3) throw ConfigError("family spec: K" + std::to_string(n) + " needs n >= 3");
    return cycle_power(n, n / 2);
  }
  throw ConfigError("family spec: term '" + term + "' must start with C or K");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::vector<FamilyMember> parse_family(const std::string& spec) {
  std::vector<FamilyMember> family;
  for (const std::string& item : split(spec, ',')) {
    if (item.empty()) throw ConfigError("family spec: empty item");
    MultiGraph g;
    bool first = true;
    for (const std::string& term : split(item, 'x')) {
      MultiGraph t = parse_term(term);
      g = first ? std::move(t) : cartesian_product(g, t);
      first = false;
    }
    family.push_back({item, std::move(g)});
  }
  return family;
}

const char* to_string(MethodVerdict v) {
  switch (v) {
    case MethodVerdict::ok: return "ok";
    case MethodVerdict::fail: return "fail";
    case MethodVerdict::skip: return "skip";
    case MethodVerdict::budget: return "budget";
  }
  return "?";
}

namespace {

MethodVerdict from_outcome(const SearchOutcome& outcome) {
  switch (outcome.status) {
    case SearchOutcome::Status::found: return MethodVerdict::ok;
    case SearchOutcome::Status::none_exists: return MethodVerdict::fail;
    case SearchOutcome::Status::budget_exhausted: return MethodVerdict::budget;
  }
  return MethodVerdict::fail;
}

// Largest kG attempted by the direct exhaustive search; beyond this the
// column reports skip.
constexpr int kDirectSearchMaxEdges = 12;

SweepRow sweep_one(const FamilyMember& member, int k, const SearchBudget& budget) {
  SweepRow row;
  row.graph_id = member.id;
  row.p = member.graph.p;
  row.k = k;

  const RegularityInfo reg = regularity(member.graph);
  if (!reg.is_regular || reg.r < 0) {
    row.feasible = MethodVerdict::fail;  // the parity screens need 2r-regular
    return row;
  }
  row.r = reg.r;

  const ConditionReport report = union_feasibility(member.graph, k);
  row.feasible = report.all_pass() ? MethodVerdict::ok : MethodVerdict::fail;

  const bool k_odd = k % 2 == 1;

  if (k_odd && std::gcd(static_cast<long long>(reg.r),
                        static_cast<long long>(k) * member.graph.p) == 1) {
    const SearchOutcome base = search_edge_graceful(member.graph, budget);
    if (base.found()) {
      try {
        lift_shift(member.graph, *base.labeling, k);
        row.theorem2 = MethodVerdict::ok;
      } catch (const Error&) {
        row.theorem2 = MethodVerdict::fail;
      }
    } else {
      row.theorem2 = from_outcome(base);
    }
  }

  if (k_odd) {
    const SearchOutcome st = search_striation(member.graph, budget);
    if (st.found()) {
      try {
        lift_striation(member.graph, *st.striation, k);
        row.striaeform = MethodVerdict::ok;
      } catch (const Error&) {
        row.striaeform = MethodVerdict::fail;
      }
      // Informational: is each stria, taken alone, edge graceful?
      row.factors_graceful = MethodVerdict::ok;
      for (const auto& factor : st.striation->factorization.factors) {
        MultiGraph stria_graph;
        stria_graph.p = member.graph.p;
        for (int ei : factor) stria_graph.edges.push_back(member.graph.edges[ei]);
        const SearchOutcome alone = search_edge_graceful(stria_graph, budget);
        if (!alone.found()) {
          row.factors_graceful = from_outcome(alone);
          break;
        }
      }
    } else {
      row.striaeform = from_outcome(st);
    }
  }

  if (static_cast<long long>(k) * member.graph.q() <= kDirectSearchMaxEdges) {
    const MultiGraph kg = disjoint_union(member.graph, k);
    row.direct_search = from_outcome(search_edge_graceful(kg, budget));
  }

  return row;
}

}  // namespace

std::vector<SweepRow> conjecture_sweep(const std::vector<FamilyMember>& family,
                                       const std::vector<int>& k_values,
                                       const SearchBudget& budget) {
  std::vector<SweepRow> rows;
  rows.reserve(family.size() * k_values.size());
  for (const FamilyMember& member : family) {
    validate(member.graph);
    for (int k : k_values) {
      if (k < 1) throw ConfigError("sweep k values must be positive");
      rows.push_back(sweep_one(member, k, budget));
    }
  }
  return rows;
}

std::string render_sweep_table(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "graph_id\tp\tr\tk\tfeasible\ttheorem2\tstriaeform\tdirect_search\tfactors_graceful\n";
  for (const SweepRow& row : rows) {
    out << row.graph_id << '\t' << row.p << '\t';
    if (row.r >= 0) out << row.r;
    else out << '-';
    out << '\t' << row.k << '\t' << to_string(row.feasible) << '\t' << to_string(row.theorem2)
        << '\t' << to_string(row.striaeform) << '\t' << to_string(row.direct_search) << '\t'
        << to_string(row.factors_graceful) << '\n';
  }
  return out.str();
}

}  // namespace eg
