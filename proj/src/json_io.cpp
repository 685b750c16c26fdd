#include "braidlab/json_io.hpp"

namespace braidlab {

using nlohmann::json;

namespace {

const json& field(const json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key))
    throw Error("MalformedInput", "missing field '" + key + "'");
  return j.at(key);
}

int intField(const json& j, const std::string& key) {
  const json& v = field(j, key);
  if (!v.is_number_integer())
    throw Error("MalformedInput", "field '" + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace

json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error("MalformedInput", "input is not valid JSON");
  return j;
}

SolutionDoc parse_solution(const json& j) {
  const int n = intField(j, "n");
  const json& s = field(j, "s");
  if (!s.is_array() || static_cast<int>(s.size()) != n)
    throw Error("MalformedInput", "'s' must be an array of n rows");
  if (n <= 0) throw Error("MalformedInput", "'n' must be positive");
  std::vector<int> flat;
  flat.reserve(2 * n * n);
  for (const auto& row : s) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw Error("MalformedInput", "'s' rows must have n entries");
    for (const auto& cell : row) {
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number_integer() ||
          !cell[1].is_number_integer())
        throw Error("MalformedInput", "'s' entries must be [u, v] integer pairs");
      flat.push_back(cell[0].get<int>());
      flat.push_back(cell[1].get<int>());
    }
  }
  SolutionDoc doc{BraidedMap(n, std::move(flat)), {}};
  if (j.contains("labels")) {
    const json& labels = j.at("labels");
    if (!labels.is_array() || static_cast<int>(labels.size()) != n)
      throw Error("MalformedInput", "'labels' must list n strings");
    for (const auto& l : labels) {
      if (!l.is_string()) throw Error("MalformedInput", "'labels' must list n strings");
      doc.labels.push_back(l.get<std::string>());
    }
  }
  return doc;
}

json solution_json(const BraidedMap& m, const std::vector<std::string>& labels) {
  const int n = m.size();
  json rows = json::array();
  for (int x = 0; x < n; ++x) {
    json row = json::array();
    for (int y = 0; y < n; ++y) row.push_back({m.g(x, y), m.f(y, x)});
    rows.push_back(std::move(row));
  }
  json j{{"n", n}, {"s", std::move(rows)}};
  if (!labels.empty()) j["labels"] = labels;
  return j;
}

FiniteGroup parse_group(const json& j) {
  const json& mul = field(j, "mul");
  if (!mul.is_array()) throw Error("MalformedInput", "'mul' must be an array of rows");
  std::vector<std::vector<int>> table;
  for (const auto& row : mul) {
    if (!row.is_array()) throw Error("MalformedInput", "'mul' rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw Error("MalformedInput", "'mul' entries must be integers");
      r.push_back(v.get<int>());
    }
    table.push_back(std::move(r));
  }
  if (j.contains("order") && intField(j, "order") != static_cast<int>(table.size()))
    throw Error("MalformedInput", "'order' disagrees with the table size");
  return FiniteGroup(std::move(table));
}

json group_json(const FiniteGroup& g) {
  return json{{"order", g.order()}, {"mul", g.table()}};
}

SevenTuple parse_seven_tuple(const json& j) {
  FiniteGroup G = parse_group(field(j, "G"));
  FiniteGroup A = parse_group(field(j, "A"));
  const json& rho = field(j, "rhoGA");
  if (!rho.is_array()) throw Error("MalformedInput", "'rhoGA' must be an array of tables");
  std::vector<std::vector<int>> rhoGA;
  for (const auto& row : rho) {
    if (!row.is_array()) throw Error("MalformedInput", "'rhoGA' rows must be arrays");
    rhoGA.push_back(row.get<std::vector<int>>());
  }
  const json& pij = field(j, "pi");
  if (!pij.is_array()) throw Error("MalformedInput", "'pi' must be an array");
  std::vector<int> pi = pij.get<std::vector<int>>();
  const json& xj = field(j, "X");
  if (!xj.is_array()) throw Error("MalformedInput", "'X' must be an array");
  std::vector<int> X = xj.get<std::vector<int>>();
  return SevenTuple{std::move(G), std::move(A), std::move(rhoGA), std::move(pi), std::move(X)};
}

ModMatrix parse_matrix(const json& j, int64_t mod, int dim, const std::string& name) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw Error("MalformedInput", "matrix '" + name + "' must have k rows");
  std::vector<std::vector<int64_t>> rows;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw Error("MalformedInput", "matrix '" + name + "' rows must have k entries");
    rows.push_back(row.get<std::vector<int64_t>>());
  }
  return ModMatrix::fromRows(mod, rows);
}

ModVec parse_vector(const json& j, int64_t mod, int dim, const std::string& name) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw Error("MalformedInput", "vector '" + name + "' must have k entries");
  ModVec v = j.get<ModVec>();
  for (auto& x : v) {
    x %= mod;
    if (x < 0) x += mod;
  }
  return v;
}

AffineSolution LinearDoc::affine() const {
  const int k = lin.dim();
  AffineSolution aff{lin, zvec.value_or(ModVec(k, 0)), tvec.value_or(ModVec(k, 0))};
  return aff;
}

LinearDoc parse_linear_doc(const json& j) {
  const int64_t m = intField(j, "m");
  const int k = intField(j, "k");
  if (m < 2) throw Error("MalformedInput", "'m' must be at least 2");
  if (k < 1) throw Error("MalformedInput", "'k' must be at least 1");
  LinearDoc doc{{parse_matrix(field(j, "a"), m, k, "a"), parse_matrix(field(j, "b"), m, k, "b"),
                 parse_matrix(field(j, "c"), m, k, "c"), parse_matrix(field(j, "d"), m, k, "d")},
                std::nullopt,
                std::nullopt};
  if (j.contains("zvec")) doc.zvec = parse_vector(j.at("zvec"), m, k, "zvec");
  if (j.contains("tvec")) doc.tvec = parse_vector(j.at("tvec"), m, k, "tvec");
  return doc;
}

QuadrupleABDS parse_quadruple(const json& j) {
  const int64_t m = intField(j, "m");
  const int k = intField(j, "k");
  return QuadrupleABDS{parse_matrix(field(j, "a"), m, k, "a"),
                       parse_matrix(field(j, "b"), m, k, "b"),
                       parse_matrix(field(j, "d"), m, k, "d"),
                       parse_matrix(field(j, "s"), m, k, "s")};
}

TriplePQZ parse_triple(const json& j) {
  const int64_t m = intField(j, "m");
  const int k = intField(j, "k");
  return TriplePQZ{parse_matrix(field(j, "p"), m, k, "p"),
                   parse_matrix(field(j, "q"), m, k, "q"),
                   parse_matrix(field(j, "z"), m, k, "z")};
}

json matrix_json(const ModMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json linear_json(const LinearSolution& l) {
  return json{{"m", l.mod()},          {"k", l.dim()},          {"a", matrix_json(l.a)},
              {"b", matrix_json(l.b)}, {"c", matrix_json(l.c)}, {"d", matrix_json(l.d)}};
}

json affine_json(const AffineSolution& s) {
  json j = linear_json(s.lin);
  j["zvec"] = s.zvec;
  j["tvec"] = s.tvec;
  return j;
}

json quadruple_json(const QuadrupleABDS& q) {
  return json{{"m", q.a.mod()},        {"k", q.a.dim()},        {"a", matrix_json(q.a)},
              {"b", matrix_json(q.b)}, {"d", matrix_json(q.d)}, {"s", matrix_json(q.s)}};
}

json triple_json(const TriplePQZ& t) {
  return json{{"m", t.p.mod()},
              {"k", t.p.dim()},
              {"p", matrix_json(t.p)},
              {"q", matrix_json(t.q)},
              {"z", matrix_json(t.zauto)}};
}

json census_json(const CensusRecord& r) {
  json j = solution_json(r.canon);
  j["orbit"] = r.orbitSize;
  j["braided"] = true;
  j["symmetric"] = r.symmetric;
  j["injective"] = r.injective;
  j["rank"] = r.rank;
  j["a0_order"] = r.a0Order;
  j["g_quotient_order"] = r.gOrder;
  return j;
}

}  // namespace braidlab
