#pragma once

// JSON wire format. Complex numbers are [re, im]; expression trees are
// prefix arrays, e.g. ["add", ["z"], ["const", [1, 0]]].

#include <string>

#include <Eigen/Dense>

#include "json.hpp"

#include "diskcp/crossed_product.hpp"
#include "diskcp/spectra.hpp"

namespace diskcp::io {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json to_json(Complex z);
Json to_json(const DiskAutomorphism& phi);
Json to_json(const MoebiusWord& w);
Json to_json(const ExprFun& f);
Json to_json(const CrossedElement& a);
Json to_json(const SpectrumPoint& p);
Json to_json(const SpectrumSet& s);
/// Nested rows of [re, im] pairs.
Json to_json(const Eigen::MatrixXcd& m);
Json to_json(const std::vector<Complex>& points);

/// All parsers throw ParseError on malformed input; value errors from the
/// constructed objects (DomainError, ...) pass through unchanged.
Complex complex_from_json(const Json& j);
DiskAutomorphism automorphism_from_json(const Json& j);
MoebiusWord word_from_json(const Json& j);
ExprFun expr_from_json(const Json& j);
CrossedElement element_from_json(const Json& j);
SpectrumPoint spectrum_point_from_json(const Json& j);
SpectrumSet spectrum_set_from_json(const Json& j);
Eigen::MatrixXcd matrix_from_json(const Json& j);

/// One line per entry: row,col,re,im (header included).
std::string matrix_to_csv(const Eigen::MatrixXcd& m);

/// Parses "0.3", "0.2i", "-i", "0.3-0.1i", "1e-3+2e-3i" or "[re, im]".
/// ParseError otherwise.
Complex parse_complex_literal(const std::string& text);

/// ParseError on invalid JSON text.
Json parse(const std::string& text);

}  // namespace diskcp::io
