// anlab: classify positive operators given by eigenvalue spectra, extract
// αI + K + F decompositions, build witness subspaces and check them on
// finite truncations.
//
// Exit codes: 0 satisfied / success, 3 not satisfied, 4 no witness applies,
// 2 input error, 1 internal failure.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "anlab/classifier.hpp"
#include "anlab/decomposer.hpp"
#include "anlab/error.hpp"
#include "anlab/io.hpp"
#include "anlab/models.hpp"
#include "anlab/numeric/linalg.hpp"
#include "anlab/numeric/truncation.hpp"
#include "anlab/witness.hpp"

using namespace anlab;
using numeric::DenseMatrix;

namespace {

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kInput = 2;
constexpr int kNotSatisfied = 3;
constexpr int kNoWitness = 4;

constexpr const char* kDefaultSeed = "0xAN0P";

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

double reporting_tolerance() {
  const char* env = std::getenv("AN_LAB_PRECISION");
  if (env == nullptr || *env == '\0') return 1e-10;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
    throw Error(ErrorCode::ParseError, std::string("AN_LAB_PRECISION must be a positive number, got '") + env + "'");
  }
  return v;
}

// Integers (decimal or 0x-hex) are used as is; anything else is hashed
// (FNV-1a 64), so the documented default "0xAN0P" is still a fixed seed.
std::uint64_t seed_from_string(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used, 0);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

io::json load_json(const std::string& path) {
  const std::string text = io::read_file(path);
  try {
    return io::json::parse(text);
  } catch (const io::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

io::OperatorInput load_operator(const std::string& path) { return io::operator_from_json(load_json(path)); }

ANVerdict classify(const io::OperatorInput& input) {
  if (const auto* d = std::get_if<DiagonalOperatorSpec>(&input)) return classify_diagonal(*d);
  return classify_positive(std::get<SpectrumSpec>(input));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    io::write_file(out_path, text);
  }
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      sizes.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "--truncate expects comma-separated integers, got '" + text + "'");
    }
  }
  return sizes;
}

// ---------------------------------------------------------------------------

struct ClassifyArgs {
  std::string file;
  bool norming = false;
  bool json = false;
};

int cmd_classify(const ClassifyArgs& a) {
  const auto input = load_operator(a.file);
  if (a.norming) {
    const auto v = classify_norming(io::positive_spectrum(input));
    if (a.json) {
      std::cout << io::to_json(v).dump(2) << "\n";
    } else {
      std::cout << "norming: " << (v.satisfied ? "yes" : "no") << "\n";
      if (v.attaining_value) std::cout << "attaining eigenvalue: " << format_rational(*v.attaining_value) << "\n";
    }
    return v.satisfied ? kOk : kNotSatisfied;
  }

  const auto v = classify(input);
  if (a.json) {
    std::cout << io::to_json(v).dump(2) << "\n";
  } else {
    std::cout << "absolutely norming: " << (v.satisfied ? "yes" : "no") << "\n";
    std::cout << "reason: " << to_string(v.reason) << "\n";
    if (v.decomposition) {
      std::cout << "alpha: " << format_rational(v.decomposition->alpha) << "\n";
      std::cout << "F: " << io::to_json(*v.decomposition)["F"].dump() << "\n";
      std::cout << "K atoms: " << io::to_json(*v.decomposition)["K_atoms"].dump() << "\n";
      for (const auto& t : v.decomposition->k_tails) std::cout << "K tail: " << describe(t) << "\n";
    }
    if (v.witness) std::cout << "witness: " << to_string(v.witness->kind) << "\n";
  }
  return v.satisfied ? kOk : kNotSatisfied;
}

struct DecomposeArgs {
  std::string file;
  std::string out;
  bool verify = false;
};

int cmd_decompose(const DecomposeArgs& a) {
  const auto spec = io::positive_spectrum(load_operator(a.file));
  Decomposition d;
  try {
    d = decompose(spec);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ConditionViolation) throw;
    std::cerr << e.what() << "\n";
    return kNotSatisfied;
  }
  const std::string text = io::to_json(d).dump(2) + "\n";
  emit(text, a.out);

  if (a.verify) {
    const std::string reread = a.out.empty() ? text : io::read_file(a.out);
    const auto back = io::decomposition_from_json(io::json::parse(reread));
    const auto rebuilt = reconstruct(back);
    const bool same = back == d && structurally_equal(rebuilt, spec) &&
                      top_k_plain(rebuilt, 1000) == top_k_plain(spec, 1000);
    std::cerr << "round-trip: " << (same ? "ok" : "MISMATCH") << "\n";
    if (!same) return kInternal;
  }
  return kOk;
}

struct WitnessArgs {
  std::string file;
  std::size_t emit_basis = 0;
  std::string out;
};

int cmd_witness(const WitnessArgs& a) {
  const auto v = classify(load_operator(a.file));
  if (!v.witness) {
    std::cerr << "NoWitness: operator is absolutely norming (" << to_string(v.reason) << ")\n";
    return kNoWitness;
  }
  if (a.emit_basis == 0) {
    emit(io::to_json(*v.witness).dump(2) + "\n", a.out);
    return kOk;
  }
  const std::string csv = io::format_basis_csv(emit_basis_vectors(*v.witness, a.emit_basis));
  if (a.out.empty()) {
    std::cout << csv;
  } else {
    io::write_file(a.out, csv);
    std::cout << io::to_json(*v.witness).dump(2) << "\n";
  }
  return kOk;
}

struct VerifyArgs {
  std::string file;
  std::string truncate = "10,50,200";
  std::string report;
  bool witness = false;
};

int cmd_verify(const VerifyArgs& a) {
  const auto input = load_operator(a.file);
  const auto sizes = parse_sizes(a.truncate);
  std::vector<numeric::TruncationReport> reports;
  if (a.witness) {
    const auto v = classify(input);
    if (!v.witness) {
      std::cerr << "NoWitness: operator is absolutely norming (" << to_string(v.reason) << ")\n";
      return kNoWitness;
    }
    reports = numeric::truncation_study(*v.witness, sizes);
  } else {
    reports = numeric::truncation_study(io::positive_spectrum(input), sizes);
  }
  emit(numeric::format_reports_csv(reports), a.report);
  return kOk;
}

struct MatrixArgs {
  std::string matrix;
  std::string subspace;
  std::string psd;
  std::string suite = "polar";
  std::string seed = kDefaultSeed;
  std::size_t size = 8;
};

struct Check {
  std::string name;
  double value;
  bool pass;
};

int report_checks(const std::vector<Check>& checks, const std::string& header) {
  std::cout << header;
  bool all = true;
  for (const auto& c : checks) {
    std::cout << c.name << "," << fmt(c.value) << "," << (c.pass ? "pass" : "FAIL") << "\n";
    all = all && c.pass;
  }
  return all ? kOk : kNotSatisfied;
}

int cmd_matrix_check(const MatrixArgs& a) {
  const double tol = reporting_tolerance();
  const std::uint64_t seed = seed_from_string(a.seed);
  std::mt19937_64 rng(seed);

  DenseMatrix t;
  if (!a.matrix.empty()) {
    t = io::parse_matrix_csv(io::read_file(a.matrix));
  } else {
    if (a.size == 0) throw Error(ErrorCode::DimensionMismatch, "--size must be positive");
    t = numeric::random_complex(a.size, a.size, rng);
    if (a.suite == "negcount") t = numeric::hermitian_part(t);
  }
  const std::string header = "# suite=" + a.suite + " seed=" + std::to_string(seed) + " rows=" +
                             std::to_string(t.rows()) + " cols=" + std::to_string(t.cols()) +
                             "\ncheck,value,status\n";
  const double t_norm = numeric::operator_norm(t);
  std::vector<Check> checks;

  if (a.suite == "polar") {
    const auto p = numeric::polar(t);
    const double residual = numeric::operator_norm(t - p.u * p.abs);
    checks.push_back({"residual_over_norm", t_norm > 0 ? residual / t_norm : residual,
                      residual <= 10 * tol * std::max(t_norm, 1.0)});
    const DenseMatrix defect = numeric::gram(p.u) * numeric::gram(p.u) - numeric::gram(p.u);
    checks.push_back({"partial_isometry_defect", defect.max_abs(), defect.max_abs() <= 10 * tol * std::max(1.0, t_norm)});
    checks.push_back({"rank", static_cast<double>(p.rank), true});
  } else if (a.suite == "absval") {
    const DenseMatrix abs = numeric::absolute_value(t);
    const auto eig = numeric::sym_eigen(abs);
    checks.push_back({"min_eigenvalue_abs", eig.values.front(), eig.values.front() >= -tol * std::max(1.0, t_norm)});
    const DenseMatrix sq = abs * abs - numeric::gram(t);
    checks.push_back({"square_defect", sq.max_abs(), sq.max_abs() <= tol * std::max(1.0, t_norm * t_norm)});
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const auto x = numeric::random_unit_vector(t.cols(), rng);
      worst = std::max(worst, std::abs(numeric::norm(t * x) - numeric::norm(abs * x)));
    }
    checks.push_back({"max_norm_difference", worst, worst <= tol * std::max(1.0, t_norm)});
  } else if (a.suite == "norming") {
    const auto eig = numeric::sym_eigen(numeric::absolute_value(t));
    double dist = INFINITY;
    for (double v : eig.values) dist = std::min(dist, std::abs(v - t_norm));
    checks.push_back({"operator_norm", t_norm, true});
    checks.push_back({"distance_to_abs_eigenvalue", dist, dist <= 10 * tol * std::max(1.0, t_norm)});
    if (!a.subspace.empty()) {
      const auto basis = numeric::gram_schmidt(io::parse_matrix_csv(io::read_file(a.subspace)));
      const auto rn = numeric::restricted_norm(t, basis);
      const auto tvx = t * (basis.matrix() * rn.attaining);
      const double attained = numeric::norm(tvx);
      checks.push_back({"restricted_norm", rn.norm, rn.norm <= t_norm + tol * std::max(1.0, t_norm)});
      checks.push_back({"attained_defect", std::abs(attained - rn.norm),
                        std::abs(attained - rn.norm) <= tol * std::max(1.0, t_norm)});
    }
  } else if (a.suite == "negcount") {
    DenseMatrix k;
    if (!a.psd.empty()) {
      k = io::parse_matrix_csv(io::read_file(a.psd));
    } else {
      k = numeric::gram(numeric::random_complex(t.rows(), t.cols(), rng));
    }
    const auto nc = numeric::negative_eigenvalue_count(k, t, tol, tol * std::max(1.0, k.max_abs()));
    checks.push_back({"negative_count", static_cast<double>(nc.count), nc.count <= nc.bound});
    checks.push_back({"negative_rank_of_F", static_cast<double>(nc.bound), true});
  } else {
    throw Error(ErrorCode::InvalidSpec, "unknown suite '" + a.suite + "' (polar, absval, norming, negcount)");
  }
  return report_checks(checks, header);
}

struct ModelsArgs {
  std::string action;
  std::string name;
  std::string file;
};

int cmd_models(const ModelsArgs& a) {
  if (a.action == "list") {
    for (const auto& m : models()) std::cout << m.name << "\n";
    return kOk;
  }
  if (a.action != "show" && a.action != "export") {
    throw Error(ErrorCode::InvalidSpec, "models action must be list, show or export");
  }
  const auto* m = find_model(a.name);
  if (m == nullptr) throw Error(ErrorCode::InvalidSpec, "unknown model '" + a.name + "'");
  if (a.action == "show") {
    std::cout << "name: " << m->name << "\n" << "provenance: " << m->provenance << "\n";
    std::cout << io::to_json(m->spec).dump(2) << "\n";
    return kOk;
  }
  if (a.file.empty()) throw Error(ErrorCode::InvalidSpec, "models export needs a target file");
  io::write_file(a.file, io::to_json(m->spec).dump(2) + "\n");
  return kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoConvergence:
      return kInternal;
    default:
      return kInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Absolutely norming operator lab"};
  app.require_subcommand(1);

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "AN (or norming) verdict for a spectrum file");
  classify_cmd->add_option("spec", classify_args.file, "spectrum or diagonal operator JSON")->required();
  classify_cmd->add_flag("--norming", classify_args.norming, "decide norm attainment instead of AN");
  classify_cmd->add_flag("--json", classify_args.json, "print the verdict as JSON");

  DecomposeArgs decompose_args;
  auto* decompose_cmd = app.add_subcommand("decompose", "alpha I + K + F decomposition as JSON");
  decompose_cmd->add_option("spec", decompose_args.file)->required();
  decompose_cmd->add_option("--out", decompose_args.out, "write JSON here instead of stdout");
  decompose_cmd->add_flag("--verify", decompose_args.verify, "re-read the JSON and compare the reconstruction");

  WitnessArgs witness_args;
  auto* witness_cmd = app.add_subcommand("witness", "subspace on which the norm is not attained");
  witness_cmd->add_option("spec", witness_args.file)->required();
  witness_cmd->add_option("--emit-basis", witness_args.emit_basis, "emit the first N basis rows as CSV");
  witness_cmd->add_option("--out", witness_args.out, "output file");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "numeric truncation study");
  verify_cmd->add_option("spec", verify_args.file)->required();
  verify_cmd->add_option("--truncate", verify_args.truncate, "comma-separated truncation sizes")
      ->capture_default_str();
  verify_cmd->add_option("--report", verify_args.report, "write the CSV report here instead of stdout");
  verify_cmd->add_flag("--witness", verify_args.witness, "restrict to the witness subspace");

  MatrixArgs matrix_args;
  auto* matrix_cmd = app.add_subcommand("matrix-check", "numeric property suites on a dense matrix");
  matrix_cmd->add_option("--matrix", matrix_args.matrix, "complex matrix CSV (random if omitted)");
  matrix_cmd->add_option("--subspace", matrix_args.subspace, "columns spanning a subspace (norming suite)");
  matrix_cmd->add_option("--psd", matrix_args.psd, "positive K for the negcount suite (random if omitted)");
  matrix_cmd->add_option("--suite", matrix_args.suite)
      ->check(CLI::IsMember({"polar", "absval", "norming", "negcount"}))
      ->capture_default_str();
  matrix_cmd->add_option("--seed", matrix_args.seed, "seed for random inputs")->capture_default_str();
  matrix_cmd->add_option("--size", matrix_args.size, "size of a random matrix")->capture_default_str();

  ModelsArgs models_args;
  auto* models_cmd = app.add_subcommand("models", "built-in example operators");
  models_cmd->add_option("action", models_args.action, "list | show NAME | export NAME FILE")->required();
  models_cmd->add_option("name", models_args.name);
  models_cmd->add_option("file", models_args.file);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*classify_cmd) return cmd_classify(classify_args);
    if (*decompose_cmd) return cmd_decompose(decompose_args);
    if (*witness_cmd) return cmd_witness(witness_args);
    if (*verify_cmd) return cmd_verify(verify_args);
    if (*matrix_cmd) return cmd_matrix_check(matrix_args);
    if (*models_cmd) return cmd_models(models_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
