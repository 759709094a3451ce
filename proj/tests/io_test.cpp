#include <doctest.h>

#include <random>

#include "anlab/classifier.hpp"
#include "anlab/error.hpp"
#include "anlab/io.hpp"
#include "anlab/models.hpp"
#include "support.hpp"

using namespace anlab;
using anlab::io::json;
using anlab::testing::q;

TEST_SUITE_BEGIN("io");

TEST_CASE("spectrum JSON round-trips") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = anlab::testing::random_spec(rng);
    const auto text = io::to_json(s).dump();
    CHECK(io::spectrum_from_json(json::parse(text)) == s);
  }
  for (const auto& m : models()) CHECK(io::to_json(io::operator_from_json(io::to_json(m.spec))) == io::to_json(m.spec));
}

TEST_CASE("spectrum JSON field names") {
  const auto j = json::parse(R"({
    "atoms": [{"value": "1/2", "multiplicity": 1}, {"value": "1", "multiplicity": "inf"}],
    "tails": [{"limit": "1", "direction": "decreasing",
               "rule": {"type": "harmonic", "c": "1/2", "p": 1, "r": null}, "term_multiplicity": 2}]
  })");
  const auto s = io::spectrum_from_json(j);
  REQUIRE(s.atoms.size() == 2);
  CHECK(s.atoms[1].multiplicity.is_infinite());
  CHECK(s.tails[0].term_multiplicity == 2);
  CHECK(s.tails[0].term(1) == q("3/2"));
  CHECK(io::to_json(s)["tails"][0]["rule"]["r"].is_null());
}

TEST_CASE("schema errors and invariant errors are distinguished") {
  auto code_of = [](const char* text) {
    try {
      io::spectrum_from_json(json::parse(text));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::NoConvergence;  // no error
  };
  CHECK(code_of(R"({"atoms": [{"value": "1"}]})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"atoms": [{"value": 0.5, "multiplicity": 1}]})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"atoms": [{"value": "1", "multiplicity": 0}]})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"tails": [{"limit": "1", "direction": "sideways", "rule": {"type": "harmonic", "c": "1", "p": 1}}]})") ==
        ErrorCode::ParseError);
  CHECK(code_of(R"({"atoms": [{"value": "-1", "multiplicity": 1}]})") == ErrorCode::InvalidSpec);
  CHECK(code_of(R"({"atoms": []})") == ErrorCode::InvalidSpec);
}

TEST_CASE("decomposition JSON round-trips") {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = decompose(anlab::testing::random_an_spec(rng));
    CHECK(io::decomposition_from_json(json::parse(io::to_json(d).dump())) == d);
  }
  Decomposition two;
  two.alpha = 1;
  two.k_tails = {{q("0"), Direction::Decreasing, HarmonicRule{q("1"), 1}, 1},
                 {q("0"), Direction::Decreasing, GeometricRule{q("1"), q("1/3")}, 1}};
  const auto j = io::to_json(two);
  CHECK(j["K_tail"].is_array());
  CHECK(io::decomposition_from_json(j) == two);
  CHECK(io::to_json(Decomposition{})["K_tail"].is_null());
}

TEST_CASE("verdict JSON") {
  const auto* m = find_model("ramesh-counterexample");
  const auto v = classify_positive(std::get<SpectrumSpec>(m->spec));
  const auto j = io::to_json(v);
  CHECK(j["satisfied"] == true);
  CHECK(j["reason"] == "FiniteRankPlusScalar");
  CHECK(j["witness"].is_null());
  CHECK(j["decomposition"]["alpha"] == "1");
  CHECK(j["decomposition"]["F"] == json::parse(R"([["-1/2", 1]])"));

  const auto* blocks = find_model("two-limit-blocks");
  const auto w = io::to_json(classify_positive(std::get<SpectrumSpec>(blocks->spec)));
  CHECK(w["decomposition"].is_null());
  CHECK(w["witness"]["kind"] == "TwoLimitPoints");
  CHECK(w["witness"]["sup_value"] == "2");
}

TEST_CASE("complex entries") {
  using C = numeric::cplx;
  CHECK(io::parse_complex("1.5") == C(1.5, 0));
  CHECK(io::parse_complex(" -2 ") == C(-2, 0));
  CHECK(io::parse_complex("1+2i") == C(1, 2));
  CHECK(io::parse_complex("1-2i") == C(1, -2));
  CHECK(io::parse_complex("-3.5i") == C(0, -3.5));
  CHECK(io::parse_complex("i") == C(0, 1));
  CHECK(io::parse_complex("-i") == C(0, -1));
  CHECK(io::parse_complex("1e-3+2.5e2i") == C(1e-3, 250));
  CHECK(io::parse_complex("-1E+2-1e-1i") == C(-100, -0.1));
  CHECK_THROWS_AS(io::parse_complex("abc"), Error);
  CHECK_THROWS_AS(io::parse_complex(""), Error);
  CHECK_THROWS_AS(io::parse_complex("1+2j"), Error);
}

TEST_CASE("matrix CSV") {
  const auto m = io::parse_matrix_csv("# header\n1, 2i\n\n-2i, 3\n");
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 2);
  CHECK(m(0, 1) == numeric::cplx(0, 2));
  CHECK(m.hermitian_defect() == 0.0);
  CHECK(io::parse_matrix_csv(io::format_matrix_csv(m)).entries() == m.entries());
  CHECK_THROWS_AS(io::parse_matrix_csv("1,2\n3\n"), Error);
  CHECK_THROWS_AS(io::parse_matrix_csv("# nothing\n"), Error);
}

TEST_CASE("basis CSV") {
  const TailSequence a{q("1"), Direction::Decreasing, HarmonicRule{q("1/2"), 1}, 1};
  const TailSequence b{q("2"), Direction::Decreasing, HarmonicRule{q("1"), 1}, 1};
  const auto csv = io::format_basis_csv(emit_basis_vectors(witness_two_limit_points(a, b), 2));
  CHECK(csv == "n,c_n_squared,f_index,g_index\n1,95/108,0,1\n2,7/12,2,3\n");
}

TEST_SUITE_END();
