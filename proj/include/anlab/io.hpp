#pragma once

// JSON and CSV surfaces. Field names are fixed; see README for the schemas.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "anlab/classifier.hpp"
#include "anlab/decomposer.hpp"
#include "anlab/numeric/matrix.hpp"
#include "anlab/spectrum.hpp"
#include "anlab/witness.hpp"

namespace anlab::io {

using json = nlohmann::json;

/// Accepts "p/q" strings or JSON integers.
Rational rational_from_json(const json& j);
json rational_to_json(const Rational& r);

TailSequence tail_from_json(const json& j);
json to_json(const TailSequence& tail);

/// Validates the result; throws Error{ParseError} for schema problems and
/// Error{InvalidSpec} for invariant violations.
SpectrumSpec spectrum_from_json(const json& j);
json to_json(const SpectrumSpec& spec);

DiagonalOperatorSpec diagonal_from_json(const json& j);
json to_json(const DiagonalOperatorSpec& dspec);

/// A spectrum file, or a diagonal operator file when the top-level object has
/// a "diagonal" key.
using OperatorInput = std::variant<SpectrumSpec, DiagonalOperatorSpec>;
OperatorInput operator_from_json(const json& j);
json to_json(const OperatorInput& input);

/// The spectrum that classification consumes (|T| for diagonal operators).
SpectrumSpec positive_spectrum(const OperatorInput& input);

json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const json& j);

json to_json(const WitnessPlan& plan);
json to_json(const ANVerdict& verdict);
json to_json(const NormingVerdict& verdict);
json to_json(const ConditionReport& report);

/// Rows `n,c_n_squared,f_index,g_index` with c_n² as "p/q".
std::string format_basis_csv(const std::vector<BasisRow>& rows);

/// One complex entry: `a`, `a+bi`, `a-bi` or `bi`, decimal with optional
/// exponents.
numeric::cplx parse_complex(std::string_view text);

/// One matrix row per line, entries separated by commas. Blank lines and
/// lines starting with '#' are ignored.
numeric::DenseMatrix parse_matrix_csv(std::string_view text);
std::string format_matrix_csv(const numeric::DenseMatrix& m);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace anlab::io
