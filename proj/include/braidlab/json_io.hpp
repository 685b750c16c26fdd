#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidlab/braided_map.hpp"
#include "braidlab/enumerate.hpp"
#include "braidlab/finite_group.hpp"
#include "braidlab/linear_affine.hpp"

namespace braidlab {

/// Solution format (bit-exact): {"n": <int>, "s": [[[u,v],...],...]} with
/// s[x][y] = [g_x(y), f_y(x)], plus an optional "labels" array kept for
/// display only.
struct SolutionDoc {
  BraidedMap map;
  std::vector<std::string> labels;
};

SolutionDoc parse_solution(const nlohmann::json& j);
nlohmann::json solution_json(const BraidedMap& m, const std::vector<std::string>& labels = {});

FiniteGroup parse_group(const nlohmann::json& j);
nlohmann::json group_json(const FiniteGroup& g);

SevenTuple parse_seven_tuple(const nlohmann::json& j);

/// Linear/affine format: {"m","k","a","b","c","d"[,"zvec","tvec"]}.
struct LinearDoc {
  LinearSolution lin;
  std::optional<ModVec> zvec, tvec;

  bool isAffine() const { return zvec.has_value() || tvec.has_value(); }
  AffineSolution affine() const;
};

LinearDoc parse_linear_doc(const nlohmann::json& j);
ModMatrix parse_matrix(const nlohmann::json& j, int64_t mod, int dim, const std::string& name);
ModVec parse_vector(const nlohmann::json& j, int64_t mod, int dim, const std::string& name);
QuadrupleABDS parse_quadruple(const nlohmann::json& j);
TriplePQZ parse_triple(const nlohmann::json& j);

nlohmann::json matrix_json(const ModMatrix& m);
nlohmann::json linear_json(const LinearSolution& l);
nlohmann::json affine_json(const AffineSolution& s);
nlohmann::json quadruple_json(const QuadrupleABDS& q);
nlohmann::json triple_json(const TriplePQZ& t);

nlohmann::json census_json(const CensusRecord& r);

/// Parses text from a stream/string, mapping parse failures to MalformedInput.
nlohmann::json parse_json_text(const std::string& text);

}  // namespace braidlab
