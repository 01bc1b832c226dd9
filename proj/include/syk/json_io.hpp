#pragma once

#include <nlohmann/json.hpp>

#include "syk/gauss.hpp"
#include "syk/pbw.hpp"
#include "syk/report.hpp"
#include "syk/series.hpp"

namespace syk {

using Json = nlohmann::ordered_json;

/// {"terms": [{"coeff": "p/q", "word": [[i, j, r], ...]}, ...]}, terms in
/// canonical element order.
Json element_to_json(const Element& x);
/// Words are taken as given (not normal-ordered); equal words merge. Indices
/// must lie in 1..M+N and orders be >= 1. Throws ParseError naming the
/// offending JSON location.
Element element_from_json(const Json& j, Signature sig);

/// {"vars": [...], "known": [...], "coeffs": [{"exp": [r_u, r_v, r_w], "elt": ...}]};
/// vars and known list the active variables.
Json series_to_json(const MultiSeries& s);
/// Rows of series.
Json matrix_to_json(const MatrixSeries& m);
/// Blocks keyed "D/a", "Dp/a", "E/a/b", "F/b/a", in block order.
Json gauss_to_json(const GaussData& g);

/// Totals, per-relation counts and failures with residuals.
Json report_to_json(const VerifyReport& r);

Json pbw_symbol_to_json(const PbwSymbol& s);

/// Parses text as JSON. Throws ParseError with the position of the error.
Json parse_json(const std::string& text);

}  // namespace syk
