// Command-line front end: decide copositivity, inspect subdivisions, check
// witnesses, and generate matrix files.
#include <copos/copos.hpp>
#include <copos/io.hpp>
#include <copos/oracle.hpp>

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;
constexpr int kExitWorkLimit = 3;

copos::SymmetricMatrix loadMatrix(const std::string& path, bool acceptDecimal) {
  std::ifstream in(path);
  if (!in) throw copos::Error(copos::ErrorCode::ParseError, "cannot read file '" + path + "'");
  return copos::io::parseMatrix(in, acceptDecimal);
}

std::optional<std::uint64_t> envWorkCap() {
  const char* raw = std::getenv("COPOS_MAX_WORK");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    return std::stoull(raw);
  } catch (const std::exception&) {
    std::cerr << "warning: ignoring malformed COPOS_MAX_WORK='" << raw << "'\n";
    return std::nullopt;
  }
}

struct CheckArgs {
  std::string path;
  bool strict = false;
  bool json = false;
  bool stats = false;
  bool parallel = false;
  bool dedup = false;
  bool acceptDecimal = false;
  std::optional<std::uint64_t> maxWork;
};

int runCheck(const CheckArgs& args) {
  const auto a = loadMatrix(args.path, args.acceptDecimal);
  copos::EngineOptions opts;
  opts.maxWork = args.maxWork ? args.maxWork : envWorkCap();
  opts.parallel = args.parallel;
  opts.dedup = args.dedup;

  copos::Verdict v;
  try {
    v = args.strict ? copos::checkStrictlyCopositive(a, opts) : copos::checkCopositive(a, opts);
  } catch (const copos::Error& e) {
    if (e.code() != copos::ErrorCode::WorkLimitExceeded) throw;
    std::cerr << "error: " << e.what() << "\n";
    return kExitWorkLimit;
  }

  if (args.json) {
    std::cout << copos::io::reportJson(a, v, args.strict).dump(2) << "\n";
  } else {
    std::cout << copos::to_string(v.kind) << "\n";
    if (v.witness) {
      std::cout << "witness: " << copos::io::formatVector(*v.witness) << "\n";
      std::cout << "value: " << copos::to_string(copos::evaluateQuadratic(a, *v.witness)) << "\n";
    }
    if (args.stats) {
      std::cout << "matrices processed: " << v.stats.matricesProcessed << "\n"
                << "worst-case bound: " << v.stats.worstCaseBound.str() << "\n"
                << "max frontier size: " << v.stats.maxFrontierSize << "\n"
                << "max depth: " << v.stats.maxDepth << "\n";
      if (args.dedup) std::cout << "duplicates skipped: " << v.stats.duplicatesSkipped << "\n";
    }
  }
  return v.isNegative() ? kExitNegative : kExitPositive;
}

int runSubdivide(const std::string& labelText, bool json) {
  const auto label = copos::parseLabel(labelText);
  const auto simplices = copos::vmatrix(label);
  if (json) {
    nlohmann::json out;
    out["label"] = label.toString();
    out["count"] = simplices.size();
    out["simplices"] = nlohmann::json::array();
    for (const auto& w : simplices) {
      nlohmann::json cols = nlohmann::json::array();
      for (const auto& v : w.columns()) cols.push_back(v.toString());
      out["simplices"].push_back(cols);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << label.toString() << "\n";
    for (std::size_t i = 0; i < simplices.size(); ++i) {
      std::cout << "simplex " << (i + 1) << ": " << simplices[i].toString() << "\n";
    }
    std::cout << "count: " << simplices.size() << "\n";
  }
  return 0;
}

int runVerify(const std::string& matrixPath, const std::string& witnessPath, bool strict, bool acceptDecimal) {
  const auto a = loadMatrix(matrixPath, acceptDecimal);
  std::ifstream in(witnessPath);
  if (!in) throw copos::Error(copos::ErrorCode::ParseError, "cannot read file '" + witnessPath + "'");
  const auto x = copos::io::parseWitness(in, acceptDecimal);
  if (x.size() != a.order()) {
    throw copos::Error(copos::ErrorCode::DimensionMismatch, "witness has " + std::to_string(x.size()) +
                                                                " entries, matrix has order " +
                                                                std::to_string(a.order()));
  }
  const auto value = copos::evaluateQuadratic(a, x);
  std::cout << "value: " << copos::to_string(value) << "\n";
  if (copos::verifyWitness(a, x, strict ? copos::Mode::Strict : copos::Mode::Copositive)) {
    std::cout << "witness accepted\n";
    return 0;
  }
  bool inSimplex = copos::sum(x) == 1;
  for (const auto& xi : x) inSimplex = inSimplex && xi.sign() >= 0;
  std::cout << "witness rejected: " << (inSimplex ? (strict ? "value is positive" : "value is not negative")
                                                  : "not in simplex")
            << "\n";
  return 1;
}

int runGen(const std::string& kind, std::size_t n, std::uint64_t seed, const std::string& outPath) {
  copos::SymmetricMatrix m = [&] {
    if (kind == "psd") return copos::oracle::genPsd(n, seed);
    if (kind == "nonneg") return copos::oracle::genNonnegative(n, seed);
    if (kind == "random") return copos::oracle::genRandom(n, seed);
    return copos::oracle::hornMatrix();
  }();
  const std::string text = copos::io::formatMatrix(m);
  if (outPath.empty() || outPath == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(outPath, std::ios::binary);
  out << text;
  out.close();
  if (!out) throw copos::Error(copos::ErrorCode::ParseError, "cannot write file '" + outPath + "'");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact copositivity decisions for rational symmetric matrices"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* cmdCheck = app.add_subcommand("check", "Decide whether a matrix file is (strictly) copositive");
  cmdCheck->add_option("matrix", check.path, "Matrix file")->required();
  cmdCheck->add_flag("--strict", check.strict, "Decide strict copositivity");
  cmdCheck->add_flag("--json", check.json, "Emit a JSON report");
  cmdCheck->add_flag("--stats", check.stats, "Print work statistics");
  cmdCheck->add_flag("--parallel", check.parallel, "Project frontier matrices concurrently");
  cmdCheck->add_flag("--dedup", check.dedup, "Skip exact duplicate frontier matrices");
  cmdCheck->add_flag("--accept-decimal", check.acceptDecimal, "Convert finite decimals exactly");
  cmdCheck->add_option("--max-work", check.maxWork, "Abort after this many matrices (default: $COPOS_MAX_WORK)");

  std::string labelText;
  bool subdivideJson = false;
  auto* cmdSubdivide = app.add_subcommand("subdivide", "Print the simplicial subdivision of a polytope label");
  cmdSubdivide->add_option("label", labelText, "Label such as [[1,2],[3,4,5]]_5")->required();
  cmdSubdivide->add_flag("--json", subdivideJson, "Emit JSON");

  std::string verifyMatrix, verifyWitnessPath;
  bool verifyStrict = false, verifyDecimal = false;
  auto* cmdVerify = app.add_subcommand("verify-witness", "Check a witness point against a matrix");
  cmdVerify->add_option("matrix", verifyMatrix, "Matrix file")->required();
  cmdVerify->add_option("witness", verifyWitnessPath, "Witness file (one line of rationals)")->required();
  cmdVerify->add_flag("--strict", verifyStrict, "Accept value <= 0 instead of < 0");
  cmdVerify->add_flag("--accept-decimal", verifyDecimal, "Convert finite decimals exactly");

  std::string genKind, genOut;
  std::size_t genN = 1;
  std::uint64_t genSeed = 0;
  auto* cmdGen = app.add_subcommand("gen", "Write a generated matrix file");
  cmdGen->add_option("kind", genKind, "psd | nonneg | horn | random")
      ->required()
      ->check(CLI::IsMember({"psd", "nonneg", "horn", "random"}));
  cmdGen->add_option("-n,--order", genN, "Matrix order (ignored for horn)")->check(CLI::PositiveNumber);
  cmdGen->add_option("--seed", genSeed, "Generator seed");
  cmdGen->add_option("-o,--output", genOut, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInputError;
  }

  try {
    if (*cmdCheck) return runCheck(check);
    if (*cmdSubdivide) return runSubdivide(labelText, subdivideJson);
    if (*cmdVerify) return runVerify(verifyMatrix, verifyWitnessPath, verifyStrict, verifyDecimal);
    if (*cmdGen) return runGen(genKind, genN, genSeed, genOut);
  } catch (const copos::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
