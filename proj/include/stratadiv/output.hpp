#pragma once

/**
 * @file output.hpp
 * @brief Serialization of computed classes to text, JSON and CSV.
 *
 * Values are emitted as exact rational strings ("p/q" in lowest terms, "p"
 * for integers).  Decimal renderings appear only when a precision is given
 * explicitly, in a separate approx block, so rounded output can never be
 * mistaken for an exact value.
 */

#include <stratadiv/slope.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace stratadiv {

/// One row of computed output: a class, optionally with its slopes.
struct OutputRecord {
  int genus = 0;
  std::vector<int> kappa;
  std::string component = "full";
  Rational c_lambda;
  std::vector<Rational> c_delta;
  std::optional<Rational> s0;
  std::optional<Rational> s;
  std::optional<bool> decomposition_known;
};

inline OutputRecord make_record(const Signature& sig, const DivisorClass& dc) {
  OutputRecord rec;
  rec.genus = dc.genus;
  rec.kappa = sig.parts();
  rec.component = std::string(to_string(dc.component));
  rec.c_lambda = dc.c_lambda;
  rec.c_delta = dc.c_delta;
  return rec;
}

inline void attach_slope(OutputRecord& rec, const SlopeReport& rep) {
  rec.s0 = rep.s0;
  rec.s = rep.s;
}

/// Comma-joined kappa, e.g. "4,2,2".
inline std::string kappa_string(const std::vector<int>& kappa) {
  std::string s;
  for (size_t i = 0; i < kappa.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(kappa[i]);
  }
  return s;
}

/// Decimal rendering with the given number of fraction digits, rounded to
/// nearest with ties away from zero.
inline std::string decimal_string(const Rational& r, int digits) {
  if (digits < 0) throw std::domain_error("negative decimal precision");
  Integer n = boost::multiprecision::abs(r.numerator());
  const Integer& d = r.denominator();
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Integer scaled = (2 * n * scale + d) / (2 * d);
  std::string out = Integer(scaled / scale).str();
  if (digits > 0) {
    std::string frac = Integer(scaled % scale).str();
    out += "." + std::string(static_cast<size_t>(digits) - frac.size(), '0') + frac;
  }
  if (r.sign() < 0 && scaled != 0) out.insert(out.begin(), '-');
  return out;
}

inline std::string to_text(const OutputRecord& rec, std::optional<int> approx = {}) {
  std::string out;
  out += "genus: " + std::to_string(rec.genus) + "\n";
  out += "kappa: " + kappa_string(rec.kappa) + "\n";
  out += "component: " + rec.component + "\n";
  if (rec.decomposition_known)
    out += std::string("decomposition_known: ") + (*rec.decomposition_known ? "true" : "false") + "\n";
  out += "lambda: " + rec.c_lambda.str() + "\n";
  out += "delta:";
  for (const Rational& c : rec.c_delta) out += " " + c.str();
  out += "\n";
  if (rec.s0) out += "s0: " + rec.s0->str() + "\n";
  if (rec.s) out += "s: " + rec.s->str() + "\n";
  if (approx) {
    out += "approx_digits: " + std::to_string(*approx) + "\n";
    out += "lambda_approx: " + decimal_string(rec.c_lambda, *approx) + "\n";
    out += "delta_approx:";
    for (const Rational& c : rec.c_delta) out += " " + decimal_string(c, *approx);
    out += "\n";
    if (rec.s0) out += "s0_approx: " + decimal_string(*rec.s0, *approx) + "\n";
    if (rec.s) out += "s_approx: " + decimal_string(*rec.s, *approx) + "\n";
  }
  return out;
}

inline nlohmann::json to_json(const OutputRecord& rec, std::optional<int> approx = {}) {
  nlohmann::json j;
  j["genus"] = rec.genus;
  j["kappa"] = rec.kappa;
  j["component"] = rec.component;
  nlohmann::json coeff;
  coeff["lambda"] = rec.c_lambda.str();
  std::vector<std::string> deltas;
  deltas.reserve(rec.c_delta.size());
  for (const Rational& c : rec.c_delta) deltas.push_back(c.str());
  coeff["delta"] = deltas;
  j["coefficients"] = coeff;
  if (rec.s0 && rec.s) j["slope"] = {{"s0", rec.s0->str()}, {"s", rec.s->str()}};
  if (rec.decomposition_known) j["decomposition_known"] = *rec.decomposition_known;
  if (approx) {
    nlohmann::json a;
    a["digits"] = *approx;
    a["lambda"] = decimal_string(rec.c_lambda, *approx);
    std::vector<std::string> ad;
    ad.reserve(rec.c_delta.size());
    for (const Rational& c : rec.c_delta) ad.push_back(decimal_string(c, *approx));
    a["delta"] = ad;
    if (rec.s0) a["s0"] = decimal_string(*rec.s0, *approx);
    if (rec.s) a["s"] = decimal_string(*rec.s, *approx);
    j["approx"] = a;
  }
  return j;
}

/// Header `genus,kappa,component,c_lambda,c_delta_0,...,s0` with the given
/// number of delta columns.
inline std::string csv_header(int delta_columns) {
  std::string out = "genus,kappa,component,c_lambda";
  for (int i = 0; i < delta_columns; ++i) out += ",c_delta_" + std::to_string(i);
  out += ",s0";
  return out;
}

/// One CSV row; rows narrower than delta_columns are padded with empty cells.
inline std::string csv_row(const OutputRecord& rec, int delta_columns) {
  std::string out = std::to_string(rec.genus);
  out += ",\"" + kappa_string(rec.kappa) + "\"";
  out += "," + rec.component;
  out += "," + rec.c_lambda.str();
  for (int i = 0; i < delta_columns; ++i) {
    out += ",";
    if (i < static_cast<int>(rec.c_delta.size()))
      out += rec.c_delta[static_cast<size_t>(i)].str();
  }
  out += ",";
  if (rec.s0) out += rec.s0->str();
  return out;
}

}  // namespace stratadiv
