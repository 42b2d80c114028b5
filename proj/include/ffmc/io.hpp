#pragma once

#include <string>

#include <json.hpp>

#include "ffmc/census.hpp"
#include "ffmc/control.hpp"
#include "ffmc/gf.hpp"
#include "ffmc/matf.hpp"
#include "ffmc/matpoly.hpp"
#include "ffmc/poly.hpp"
#include "ffmc/verify.hpp"

namespace ffmc {

// JSON wire formats.
//   FieldSpec      {"p": 2, "e": 2, "modulus": [1, 1, 1]}   (modulus iff e > 1)
//   element        "3"            (prime field, decimal residue)
//                  "1,0,1"        (extension field, residues low degree first)
//   polynomial     ["1", "1", "1"]              (little-endian)
//   matrix         [["0","1"], ["1","0"]]       (rows of element strings)
//   matrix poly    {"field": ..., "n": 2, "k": 1, "coeffs": [matrix, ...]}
//   pair file      {"field": ..., "A": matrix, "B": matrix}
// Parse failures raise ParseError.

using json = nlohmann::json;

json field_to_json(const Gf& F);
GfPtr field_from_json(const json& j);

json poly_to_json(const Poly& f);
Poly poly_from_json(const json& j, const GfPtr& F);

json matf_to_json(const MatF& M);
MatF matf_from_json(const json& j, const GfPtr& F);

json matpoly_to_json(const MatPoly& M);
MatPoly matpoly_from_json(const json& j);

json pair_to_json(const MatrixPair& P);
MatrixPair pair_from_json(const json& j);

json count_to_json(const CountResult& r);
json report_to_json(const VerificationReport& r);
std::string report_to_csv_row(const VerificationReport& r);
extern const char* kReportCsvHeader;
json estimate_to_json(const SampleEstimate& e);

/// Human-readable polynomial like "x^2+x+1" (prime fields; extension-field
/// coefficients are parenthesized coefficient strings).
std::string poly_pretty(const Poly& f);

json parse_json_file(const std::string& path);
json parse_json_text(const std::string& text);

}  // namespace ffmc
