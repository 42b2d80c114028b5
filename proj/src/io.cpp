#include "ffmc/io.hpp"

#include <fstream>
#include <sstream>

#include "ffmc/errors.hpp"

namespace ffmc {

json field_to_json(const Gf& F) {
  json j;
  j["p"] = F.characteristic();
  j["e"] = F.ext_degree();
  if (F.ext_degree() > 1) j["modulus"] = F.modulus();
  return j;
}

GfPtr field_from_json(const json& j) {
  try {
    const std::uint64_t p = j.at("p").get<std::uint64_t>();
    const unsigned e = j.at("e").get<unsigned>();
    if (j.contains("modulus"))
      return Gf::make(p, e, j.at("modulus").get<std::vector<Gf::El>>());
    return Gf::make(p, e);
  } catch (const json::exception& ex) {
    throw ParseError(std::string("bad field spec: ") + ex.what());
  }
}

json poly_to_json(const Poly& f) {
  json j = json::array();
  for (Gf::El c : f.coeffs()) j.push_back(f.field()->to_string(c));
  return j;
}

Poly poly_from_json(const json& j, const GfPtr& F) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of element strings");
  std::vector<Gf::El> c;
  c.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_string()) throw ParseError("polynomial coefficients must be strings");
    c.push_back(F->parse(v.get<std::string>()));
  }
  return Poly(F, std::move(c));
}

json matf_to_json(const MatF& M) {
  json j = json::array();
  for (int i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < M.cols(); ++c) row.push_back(M.field()->to_string(M.at(i, c)));
    j.push_back(std::move(row));
  }
  return j;
}

MatF matf_from_json(const json& j, const GfPtr& F) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j.at(0).size());
  MatF M(F, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto& row = j.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ParseError("ragged matrix rows");
    for (int c = 0; c < cols; ++c) {
      if (!row.at(c).is_string()) throw ParseError("matrix entries must be strings");
      M.set(i, c, F->parse(row.at(c).get<std::string>()));
    }
  }
  return M;
}

json matpoly_to_json(const MatPoly& M) {
  json j;
  j["field"] = field_to_json(*M.field());
  j["n"] = M.rows();
  j["k"] = M.cols();
  json coeffs = json::array();
  for (const MatF& C : M.coeff_matrices()) coeffs.push_back(matf_to_json(C));
  j["coeffs"] = std::move(coeffs);
  return j;
}

MatPoly matpoly_from_json(const json& j) {
  try {
    GfPtr F = field_from_json(j.at("field"));
    const int n = j.at("n").get<int>();
    const int k = j.at("k").get<int>();
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.empty())
      throw ParseError("matrix polynomial needs at least one coefficient matrix");
    std::vector<MatF> cs;
    cs.reserve(coeffs.size());
    for (const auto& c : coeffs) {
      MatF M = matf_from_json(c, F);
      if (M.rows() != n || M.cols() != k)
        throw ParseError("coefficient matrix shape disagrees with n, k");
      cs.push_back(std::move(M));
    }
    return MatPoly::from_coeffs(cs);
  } catch (const json::exception& ex) {
    throw ParseError(std::string("bad matrix polynomial: ") + ex.what());
  }
}

json pair_to_json(const MatrixPair& P) {
  json j;
  j["field"] = field_to_json(*P.A.field());
  j["A"] = matf_to_json(P.A);
  j["B"] = matf_to_json(P.B);
  return j;
}

MatrixPair pair_from_json(const json& j) {
  try {
    GfPtr F = field_from_json(j.at("field"));
    return make_pair(matf_from_json(j.at("A"), F), matf_from_json(j.at("B"), F));
  } catch (const json::exception& ex) {
    throw ParseError(std::string("bad matrix pair: ") + ex.what());
  }
}

json count_to_json(const CountResult& r) {
  json j;
  j["formula"] = r.formula;
  json params;
  for (const auto& [name, v] : r.params) params[name] = v.str();
  j["params"] = std::move(params);
  j["value"] = r.value.str();
  if (r.probability) j["probability"] = rat_to_string(*r.probability);
  return j;
}

json report_to_json(const VerificationReport& r) {
  json j;
  j["experiment"] = r.experiment;
  json params;
  for (const auto& [name, v] : r.params) params[name] = v;
  j["params"] = std::move(params);
  j["expected"] = rat_to_string(r.expected);
  j["observed"] = rat_to_string(r.observed);
  j["pass"] = r.pass;
  j["instances"] = r.instances;
  j["elapsed_ms"] = r.elapsed_ms;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

const char* kReportCsvHeader = "experiment,q,n,k,m,d,l,expected,observed,pass,instances,elapsed_ms";

std::string report_to_csv_row(const VerificationReport& r) {
  auto lookup = [&](const char* name) -> std::string {
    for (const auto& [pname, v] : r.params)
      if (pname == name) return std::to_string(v);
    return "";
  };
  std::ostringstream os;
  os << r.experiment << ',' << lookup("q") << ',' << lookup("n") << ',' << lookup("k") << ','
     << lookup("m") << ',' << lookup("d") << ',' << lookup("l") << ','
     << rat_to_string(r.expected) << ',' << rat_to_string(r.observed) << ','
     << (r.pass ? "true" : "false") << ',' << r.instances << ',' << r.elapsed_ms;
  return os.str();
}

json estimate_to_json(const SampleEstimate& e) {
  json j;
  j["trials"] = e.trials;
  j["successes"] = e.successes;
  j["estimate"] = rat_to_string(e.estimate);
  j["target"] = rat_to_string(e.target);
  j["stderr"] = e.standard_error;
  j["seed"] = e.seed;
  return j;
}

std::string poly_pretty(const Poly& f) {
  if (f.is_zero()) return "0";
  const Gf& F = *f.field();
  std::string s;
  for (int i = f.degree().value(); i >= 0; --i) {
    const Gf::El c = f.coeff(i);
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    std::string cs = F.to_string(c);
    if (F.ext_degree() > 1) cs = "(" + cs + ")";
    if (i == 0) {
      s += cs;
    } else {
      if (c != 1) s += cs + "*";
      s += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
  }
  return s;
}

json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

}  // namespace ffmc
