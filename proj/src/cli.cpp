#include "braidlab/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidlab/caps.hpp"
#include "braidlab/enumerate.hpp"
#include "braidlab/json_io.hpp"
#include "braidlab/m_module.hpp"
#include "braidlab/perm_group.hpp"

namespace braidlab {

using nlohmann::json;

namespace {

struct IoOptions {
  std::string inPath = "-";
  std::string outPath = "-";
};

std::string readAll(const IoOptions& io, std::istream& stdIn) {
  if (io.inPath == "-") {
    std::stringstream ss;
    ss << stdIn.rdbuf();
    return ss.str();
  }
  std::ifstream file(io.inPath);
  if (!file) throw Error("MalformedInput", "cannot open input file '" + io.inPath + "'");
  std::stringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

class Output {
public:
  Output(const IoOptions& io, std::ostream& stdOut) {
    if (io.outPath == "-") {
      stream_ = &stdOut;
    } else {
      file_ = std::make_unique<std::ofstream>(io.outPath);
      if (!*file_) throw Error("MalformedInput", "cannot open output file '" + io.outPath + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

private:
  std::ostream* stream_ = nullptr;
  std::unique_ptr<std::ofstream> file_;
};

void addIo(CLI::App* cmd, IoOptions& io) {
  cmd->add_option("--in", io.inPath, "input path, '-' for stdin");
  cmd->add_option("--out", io.outPath, "output path, '-' for stdout");
}

json inputJson(const IoOptions& io, std::istream& stdIn) {
  return parse_json_text(readAll(io, stdIn));
}

void requireBraidedNondegenerate(const BraidedMap& m) {
  if (!m.isBijective()) throw Error("MalformedTable", "table is not a bijection of X x X");
  if (!m.isNondegenerate()) throw Error("Degenerate", "map is degenerate");
  if (!m.isBraided()) throw Error("NotBraided", "map does not satisfy the braid relation");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"braidlab: finite braided sets, their quotients and classifications"};
  app.require_subcommand(1);

  Caps caps = Caps::fromEnv();
  app.add_option("--cap-group", caps.groupElements, "permutation-group closure cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap-materialize", caps.materialize, "materialization cap on m^k")
      ->check(CLI::PositiveNumber);

  IoOptions io;
  int exitCode = 0;

  auto* verify = app.add_subcommand("verify", "report bijectivity/nondegeneracy/braiding");
  addIo(verify, io);
  verify->callback([&]() {
    const auto doc = parse_solution(inputJson(io, in));
    const bool bij = doc.map.isBijective();
    const bool nondeg = doc.map.isNondegenerate();
    const bool braided = doc.map.isBraided();
    const bool symmetric = braided && doc.map.isInvolutive();
    Output o(io, out);
    o.get() << json{{"bijective", bij},
                    {"nondegenerate", nondeg},
                    {"braided", braided},
                    {"symmetric", symmetric}}
                   .dump()
            << "\n";
    if (!(bij && nondeg && braided)) exitCode = 1;
  });

  auto* derive = app.add_subcommand("derive", "write the derived solution table");
  addIo(derive, io);
  derive->callback([&]() {
    const auto doc = parse_solution(inputJson(io, in));
    requireBraidedNondegenerate(doc.map);
    Output o(io, out);
    o.get() << solution_json(derived_solution(doc.map), doc.labels).dump() << "\n";
  });

  auto rankLike = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    addIo(cmd, io);
    cmd->callback([&]() {
      const auto doc = parse_solution(inputJson(io, in));
      requireBraidedNondegenerate(doc.map);
      const auto gq = g_quotient(doc.map, caps);
      const auto aq = a0_quotient(doc.map, caps);
      Output o(io, out);
      o.get() << json{{"rank", rank(doc.map)},
                      {"g_quotient_order", gq.group.order()},
                      {"a0_order", aq.group.order()},
                      {"classes", rank_classes(doc.map)}}
                     .dump()
              << "\n";
    });
  };
  rankLike("rank", "rank and quotient orders of the structure group");
  rankLike("quotient", "finite quotient data of the structure group");

  auto* inject = app.add_subcommand("inject", "decide injectivity via the module criterion");
  addIo(inject, io);
  inject->callback([&]() {
    const auto doc = parse_solution(inputJson(io, in));
    requireBraidedNondegenerate(doc.map);
    const auto rep = inject_report(doc.map, caps);
    Output o(io, out);
    o.get() << json{{"injective", rep.injective},
                    {"necessary_only", rep.necessaryOnly},
                    {"m_dim", rep.mDim}}
                   .dump()
            << "\n";
    if (!rep.injective) exitCode = 1;
  });

  auto* enumerate = app.add_subcommand("enumerate", "census of braided sets up to relabeling");
  int enumN = 2;
  std::string filterName = "all";
  int workers = 1;
  enumerate->add_option("--n", enumN, "size of X")->required();
  enumerate->add_option("--filter", filterName, "all | symmetric | injective");
  enumerate->add_option("--workers", workers, "parallel workers")->check(CLI::PositiveNumber);
  addIo(enumerate, io);
  enumerate->callback([&]() {
    CensusFilter filter;
    if (filterName == "all")
      filter = CensusFilter::All;
    else if (filterName == "symmetric")
      filter = CensusFilter::Symmetric;
    else if (filterName == "injective")
      filter = CensusFilter::Injective;
    else
      throw Error("MalformedInput", "unknown filter '" + filterName + "'");
    const auto records = enumerate_solutions(enumN, filter, workers, caps);
    Output o(io, out);
    for (const auto& rec : records) o.get() << census_json(rec).dump() << "\n";
  });

  auto* linear = app.add_subcommand("linear", "linear/affine solutions over (Z_m)^k");
  linear->require_subcommand(1);

  auto* lcheck = linear->add_subcommand("check", "validate the linear braid relations");
  addIo(lcheck, io);
  lcheck->callback([&]() {
    const auto doc = parse_linear_doc(inputJson(io, in));
    const bool valid = check_linear_relations(doc.lin);
    json res{{"valid", valid}};
    if (valid) {
      res["injective"] = is_injective_linear(doc.lin);
      res["s"] = matrix_json(s_of(doc.lin));
    }
    Output o(io, out);
    o.get() << res.dump() << "\n";
    if (!valid) exitCode = 1;
  });

  auto* lquad = linear->add_subcommand(
      "quad", "solution -> quadruple when 'c' is present, quadruple -> solution otherwise");
  addIo(lquad, io);
  lquad->callback([&]() {
    const json j = inputJson(io, in);
    Output o(io, out);
    if (j.contains("c")) {
      const auto doc = parse_linear_doc(j);
      o.get() << quadruple_json(quadruple_of(doc.lin)).dump() << "\n";
    } else {
      const auto quad = parse_quadruple(j);
      o.get() << linear_json(quadruple_to_solution(quad)).dump() << "\n";
    }
  });

  auto* lpqz = linear->add_subcommand(
      "pqz", "(a,b,d) -> (p,q,z) when 'a' is present, (p,q,z) -> (a,b,d) otherwise");
  addIo(lpqz, io);
  lpqz->callback([&]() {
    const json j = inputJson(io, in);
    Output o(io, out);
    if (j.contains("p")) {
      const auto triple = parse_triple(j);
      const auto abd = abd_from_pqz(triple);
      json res{{"m", abd[0].mod()},
               {"k", abd[0].dim()},
               {"a", matrix_json(abd[0])},
               {"b", matrix_json(abd[1])},
               {"d", matrix_json(abd[2])}};
      o.get() << res.dump() << "\n";
    } else {
      const int64_t m = j.contains("m") ? j.at("m").get<int64_t>() : 0;
      const int k = j.contains("k") ? j.at("k").get<int>() : 0;
      if (m < 2 || k < 1) throw Error("MalformedInput", "need 'm' >= 2 and 'k' >= 1");
      const ModMatrix a = parse_matrix(j.contains("a") ? j.at("a") : json{}, m, k, "a");
      const ModMatrix b = parse_matrix(j.contains("b") ? j.at("b") : json{}, m, k, "b");
      const ModMatrix d = parse_matrix(j.contains("d") ? j.at("d") : json{}, m, k, "d");
      o.get() << triple_json(pqz_from_abd(a, b, d)).dump() << "\n";
    }
  });

  auto* lhat = linear->add_subcommand("hat", "the injective companion solution");
  addIo(lhat, io);
  lhat->callback([&]() {
    const auto doc = parse_linear_doc(inputJson(io, in));
    Output o(io, out);
    o.get() << linear_json(hat_solution(doc.lin)).dump() << "\n";
  });

  auto* lmat = linear->add_subcommand("materialize", "expand to a set-level solution table");
  addIo(lmat, io);
  lmat->callback([&]() {
    const auto doc = parse_linear_doc(inputJson(io, in));
    Output o(io, out);
    const BraidedMap table = doc.isAffine() ? materialize(doc.affine(), caps)
                                            : materialize(doc.lin, caps);
    o.get() << solution_json(table).dump() << "\n";
  });

  auto* laff = linear->add_subcommand(
      "affine", "extend by 'zvec'/'kvec' to an affine solution, or validate 'zvec'/'tvec'");
  addIo(laff, io);
  laff->callback([&]() {
    const json j = inputJson(io, in);
    const auto doc = parse_linear_doc(j);
    Output o(io, out);
    if (j.contains("kvec")) {
      const ModVec zv = doc.zvec.value_or(ModVec(doc.lin.dim(), 0));
      const ModVec kv = parse_vector(j.at("kvec"), doc.lin.mod(), doc.lin.dim(), "kvec");
      o.get() << affine_json(affine_extend(doc.lin, zv, kv)).dump() << "\n";
    } else {
      const AffineSolution aff = doc.affine();
      const bool valid = check_affine_relations(aff);
      json res{{"valid", valid}};
      if (valid) {
        res["injective"] = is_injective_affine(aff);
        res["kvec"] = affine_kvec(aff);
      }
      o.get() << res.dump() << "\n";
      if (!valid) exitCode = 1;
    }
  });

  auto* seven = app.add_subcommand("seven-tuple", "construct the solution of a cocycle 7-tuple");
  addIo(seven, io);
  seven->callback([&]() {
    const auto tuple = parse_seven_tuple(inputJson(io, in));
    Output o(io, out);
    o.get() << solution_json(seven_tuple_to_solution(tuple)).dump() << "\n";
  });

  auto* cocycle = app.add_subcommand("cocycle-check", "verify the 1-cocycle identity");
  addIo(cocycle, io);
  cocycle->callback([&]() {
    const json j = inputJson(io, in);
    const FiniteGroup G = parse_group(j.contains("G") ? j.at("G") : json{});
    const FiniteGroup A = parse_group(j.contains("A") ? j.at("A") : json{});
    if (!j.contains("rhoGA") || !j.at("rhoGA").is_array())
      throw Error("MalformedInput", "'rhoGA' must be an array of tables");
    std::vector<std::vector<int>> rho;
    for (const auto& row : j.at("rhoGA")) rho.push_back(row.get<std::vector<int>>());
    if (!j.contains("pi") || !j.at("pi").is_array())
      throw Error("MalformedInput", "'pi' must be an array");
    const std::vector<int> pi = j.at("pi").get<std::vector<int>>();
    const bool ok = verify_cocycle(G, A, rho, pi);
    Output o(io, out);
    o.get() << json{{"cocycle", ok}}.dump() << "\n";
    if (!ok) exitCode = 1;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      err << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    out << json{{"error", e.code()}, {"detail", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    out << json{{"error", "Internal"}, {"detail", e.what()}}.dump() << "\n";
    return 2;
  }
  return exitCode;
}

}  // namespace braidlab
