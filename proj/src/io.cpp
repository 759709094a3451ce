#include "anlab/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "anlab/error.hpp"

namespace anlab::io {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::uint64_t positive_integer(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 1) schema_error(std::string(what) + " must be a positive integer");
  return j.get<std::uint64_t>();
}

Multiplicity multiplicity_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Multiplicity::infinite();
  return Multiplicity::finite(positive_integer(j, "multiplicity"));
}

json multiplicity_to_json(const Multiplicity& m) {
  if (m.is_infinite()) return "inf";
  return m.count();
}

json weighted_list(const std::vector<WeightedValue>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(json::array({format_rational(v.value), v.multiplicity}));
  return out;
}

std::vector<WeightedValue> weighted_from_json(const json& j, const char* what) {
  if (!j.is_array()) schema_error(std::string(what) + " must be an array");
  std::vector<WeightedValue> out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2) schema_error(std::string(what) + " entries must be [value, multiplicity]");
    out.push_back({rational_from_json(item[0]), positive_integer(item[1], "multiplicity")});
  }
  return out;
}

json sequence_to_json(const SequenceRule& rule) {
  if (const auto* c = std::get_if<ConstantSequence>(&rule)) {
    return {{"type", "constant"}, {"value", format_rational(c->value)}};
  }
  const auto& t = std::get<TailTermsSequence>(rule);
  return {{"type", "tail"}, {"tail", to_json(t.tail)}, {"start", t.start}};
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  schema_error("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

json rational_to_json(const Rational& r) { return format_rational(r); }

TailSequence tail_from_json(const json& j) {
  TailSequence tail;
  tail.limit = rational_from_json(require(j, "limit"));
  const auto& dir = require(j, "direction");
  if (dir == "decreasing") {
    tail.direction = Direction::Decreasing;
  } else if (dir == "increasing") {
    tail.direction = Direction::Increasing;
  } else {
    schema_error("direction must be \"decreasing\" or \"increasing\"");
  }
  const auto& rule = require(j, "rule");
  const auto& type = require(rule, "type");
  const Rational c = rational_from_json(require(rule, "c"));
  if (type == "harmonic") {
    const auto& p = require(rule, "p");
    tail.rule = HarmonicRule{c, static_cast<unsigned>(positive_integer(p, "p"))};
  } else if (type == "geometric") {
    tail.rule = GeometricRule{c, rational_from_json(require(rule, "r"))};
  } else {
    schema_error("rule type must be \"harmonic\" or \"geometric\"");
  }
  if (j.contains("term_multiplicity")) tail.term_multiplicity = positive_integer(j["term_multiplicity"], "term_multiplicity");
  return tail;
}

json to_json(const TailSequence& tail) {
  json rule;
  if (const auto* h = std::get_if<HarmonicRule>(&tail.rule)) {
    rule = {{"type", "harmonic"}, {"c", format_rational(h->c)}, {"p", h->p}, {"r", nullptr}};
  } else {
    const auto& g = std::get<GeometricRule>(tail.rule);
    rule = {{"type", "geometric"}, {"c", format_rational(g.c)}, {"p", nullptr}, {"r", format_rational(g.r)}};
  }
  return {{"limit", format_rational(tail.limit)},
          {"direction", tail.direction == Direction::Decreasing ? "decreasing" : "increasing"},
          {"rule", rule},
          {"term_multiplicity", tail.term_multiplicity}};
}

SpectrumSpec spectrum_from_json(const json& j) {
  if (!j.is_object()) schema_error("spectrum must be a JSON object");
  SpectrumSpec spec;
  if (j.contains("atoms")) {
    if (!j["atoms"].is_array()) schema_error("atoms must be an array");
    for (const auto& a : j["atoms"]) {
      spec.atoms.push_back({rational_from_json(require(a, "value")), multiplicity_from_json(require(a, "multiplicity"))});
    }
  }
  if (j.contains("tails")) {
    if (!j["tails"].is_array()) schema_error("tails must be an array");
    for (const auto& t : j["tails"]) spec.tails.push_back(tail_from_json(t));
  }
  validate(spec);
  return spec;
}

json to_json(const SpectrumSpec& spec) {
  json atoms = json::array();
  for (const auto& a : spec.atoms) {
    atoms.push_back({{"value", format_rational(a.value)}, {"multiplicity", multiplicity_to_json(a.multiplicity)}});
  }
  json tails = json::array();
  for (const auto& t : spec.tails) tails.push_back(to_json(t));
  return {{"atoms", atoms}, {"tails", tails}};
}

DiagonalOperatorSpec diagonal_from_json(const json& j) {
  const auto& entries = require(j, "diagonal");
  if (!entries.is_array()) schema_error("diagonal must be an array");
  DiagonalOperatorSpec dspec;
  for (const auto& e : entries) {
    const auto& kind = require(e, "kind");
    if (kind == "fixed") {
      FixedComplex f{rational_from_json(require(e, "modulus")),
                     e.contains("phase") ? rational_from_json(e["phase"]) : Rational(0), Multiplicity::finite(1)};
      if (e.contains("multiplicity")) f.multiplicity = multiplicity_from_json(e["multiplicity"]);
      dspec.entries.emplace_back(std::move(f));
    } else if (kind == "phased_tail") {
      dspec.entries.emplace_back(PhasedTail{tail_from_json(require(e, "modulus_tail")),
                                            e.value("phase_rule", std::string{})});
    } else if (kind == "constant_modulus_family") {
      dspec.entries.emplace_back(ConstantModulusFamily{rational_from_json(require(e, "modulus"))});
    } else {
      schema_error("diagonal entry kind must be fixed, phased_tail or constant_modulus_family");
    }
  }
  validate(dspec);
  return dspec;
}

json to_json(const DiagonalOperatorSpec& dspec) {
  json entries = json::array();
  for (const auto& part : dspec.entries) {
    std::visit(
        [&](const auto& p) {
          using P = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<P, FixedComplex>) {
            entries.push_back({{"kind", "fixed"},
                               {"modulus", format_rational(p.modulus)},
                               {"phase", format_rational(p.phase)},
                               {"multiplicity", multiplicity_to_json(p.multiplicity)}});
          } else if constexpr (std::is_same_v<P, PhasedTail>) {
            entries.push_back({{"kind", "phased_tail"}, {"modulus_tail", to_json(p.modulus_tail)}, {"phase_rule", p.phase_rule}});
          } else {
            entries.push_back({{"kind", "constant_modulus_family"}, {"modulus", format_rational(p.modulus)}});
          }
        },
        part);
  }
  return {{"diagonal", entries}};
}

OperatorInput operator_from_json(const json& j) {
  if (j.is_object() && j.contains("diagonal")) return diagonal_from_json(j);
  return spectrum_from_json(j);
}

json to_json(const OperatorInput& input) {
  return std::visit([](const auto& v) { return to_json(v); }, input);
}

SpectrumSpec positive_spectrum(const OperatorInput& input) {
  if (const auto* d = std::get_if<DiagonalOperatorSpec>(&input)) return modulus_spectrum(*d);
  return std::get<SpectrumSpec>(input);
}

json to_json(const Decomposition& d) {
  json k_tail = nullptr;
  if (d.k_tails.size() == 1) {
    k_tail = to_json(d.k_tails.front());
  } else if (d.k_tails.size() > 1) {
    k_tail = json::array();
    for (const auto& t : d.k_tails) k_tail.push_back(to_json(t));
  }
  return {{"alpha", format_rational(d.alpha)},
          {"alpha_infinite", d.alpha_infinite},
          {"alpha_multiplicity", d.alpha_multiplicity},
          {"F", weighted_list(d.f_atoms)},
          {"K_atoms", weighted_list(d.k_atoms)},
          {"K_tail", k_tail}};
}

Decomposition decomposition_from_json(const json& j) {
  Decomposition d;
  d.alpha = rational_from_json(require(j, "alpha"));
  const auto& inf = require(j, "alpha_infinite");
  if (!inf.is_boolean()) schema_error("alpha_infinite must be a boolean");
  d.alpha_infinite = inf.get<bool>();
  if (j.contains("alpha_multiplicity")) {
    const auto& m = j["alpha_multiplicity"];
    if (!m.is_number_integer() || m.get<long long>() < 0) schema_error("alpha_multiplicity must be >= 0");
    d.alpha_multiplicity = m.get<std::uint64_t>();
  }
  d.f_atoms = weighted_from_json(require(j, "F"), "F");
  d.k_atoms = weighted_from_json(require(j, "K_atoms"), "K_atoms");
  const auto& tail = require(j, "K_tail");
  if (tail.is_object()) {
    d.k_tails.push_back(tail_from_json(tail));
  } else if (tail.is_array()) {
    for (const auto& t : tail) d.k_tails.push_back(tail_from_json(t));
  } else if (!tail.is_null()) {
    schema_error("K_tail must be a tail object, an array of tails or null");
  }
  validate(d);
  return d;
}

json to_json(const WitnessPlan& plan) {
  const bool c_on_f = plan.c_family == Family::F;
  json gamma;
  if (const auto* g = std::get_if<ShiftedHarmonicGamma>(&plan.gamma)) {
    gamma = {{"type", "shifted_harmonic"}, {"base", format_rational(g->base)}, {"delta", format_rational(g->delta)},
             {"formula", "gamma_n = base + delta/(2n)"}};
  } else {
    gamma = {{"type", "sequence"}, {"formula", "gamma_n = a_n"}};
  }
  json c_rule = plan.c_squared_rule == CSquaredRule::One
                    ? json{{"type", "one"}, {"formula", "c_n^2 = 1"}}
                    : json{{"type", "convex"},
                           {"formula", c_on_f ? "c_n^2 = (b_n^2 - gamma_n^2)/(b_n^2 - a_n^2)"
                                              : "c_n^2 = (a_n^2 - gamma_n^2)/(a_n^2 - b_n^2)"}};
  return {{"kind", to_string(plan.kind)},
          {"a_rule", sequence_to_json(c_on_f ? plan.first : plan.second)},
          {"b_rule", sequence_to_json(c_on_f ? plan.second : plan.first)},
          {"gamma_rule", gamma},
          {"c_squared_rule", c_rule},
          {"pairing",
           {{"c_family", c_on_f ? "f" : "g"},
            {"vector", c_on_f ? "e_n = c_n f_n + sqrt(1 - c_n^2) g_n" : "e_n = c_n g_n + sqrt(1 - c_n^2) f_n"},
            {"layout", "c-weighted vector at index 2(n-1), partner at 2(n-1)+1"}}},
          {"sup_value", format_rational(plan.sup_value)}};
}

json to_json(const ANVerdict& verdict) {
  return {{"satisfied", verdict.satisfied},
          {"reason", to_string(verdict.reason)},
          {"decomposition", verdict.decomposition ? to_json(*verdict.decomposition) : json(nullptr)},
          {"witness", verdict.witness ? to_json(*verdict.witness) : json(nullptr)}};
}

json to_json(const NormingVerdict& verdict) {
  return {{"satisfied", verdict.satisfied},
          {"attaining_value", verdict.attaining_value ? json(format_rational(*verdict.attaining_value)) : json(nullptr)}};
}

json to_json(const ConditionReport& report) {
  auto one = [](const ConditionResult& r) {
    return json{{"holds", r.holds}, {"offending_atoms", r.offending_atoms}, {"offending_tails", r.offending_tails}};
  };
  return {{"sup_is_max", one(report.sup_is_max)},
          {"single_limit_above", one(report.single_limit_above)},
          {"single_infinite", one(report.single_infinite)},
          {"limit_matches_infinite", one(report.limit_matches_infinite)}};
}

std::string format_basis_csv(const std::vector<BasisRow>& rows) {
  std::string out = "n,c_n_squared,f_index,g_index\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + format_rational(r.c_squared) + "," + std::to_string(r.f_index) + "," +
           std::to_string(r.g_index) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::ParseError, "bad complex entry '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

numeric::cplx parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty matrix entry");
  if (s.back() != 'i') return {parse_real(s, s), 0.0};

  const std::string_view body = s.substr(0, s.size() - 1);
  // split at the last sign that is not leading and not part of an exponent
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_of = [&](std::string_view part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    return parse_real(part, s);
  };
  if (split == std::string_view::npos) return {0.0, imag_of(body)};
  return {parse_real(body.substr(0, split), s), imag_of(body.substr(split))};
}

numeric::DenseMatrix parse_matrix_csv(std::string_view text) {
  std::vector<numeric::cplx> entries;
  std::size_t rows = 0, cols = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::size_t count = 0;
    std::size_t start = 0;
    while (true) {
      const auto comma = t.find(',', start);
      entries.push_back(parse_complex(t.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
      ++count;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (rows == 0) {
      cols = count;
    } else if (count != cols) {
      throw Error(ErrorCode::ParseError, "row " + std::to_string(rows + 1) + " has " + std::to_string(count) +
                                             " entries, expected " + std::to_string(cols));
    }
    ++rows;
  }
  if (rows == 0) throw Error(ErrorCode::ParseError, "matrix file is empty");
  return numeric::DenseMatrix(rows, cols, std::move(entries));
}

std::string format_matrix_csv(const numeric::DenseMatrix& m) {
  std::string out;
  char buf[96];
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto z = m(i, j);
      std::snprintf(buf, sizeof buf, "%.12e%+.12ei", z.real(), z.imag());
      if (j > 0) out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace anlab::io
