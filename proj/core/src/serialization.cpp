// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "entcert/serialization.hpp"

#include <cstdio>
#include <cstdlib>

#include <json.hpp>

namespace entcert {

namespace {

// Insertion-ordered so that report documents end with the schema field.
using Json = nlohmann::ordered_json;

Json matrix_payload(const ComplexMatrix& m) {
  Json doc;
  doc["rows"] = m.rows();
  doc["cols"] = m.cols();
  Json data = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    }
    data.push_back(std::move(row));
  }
  doc["data"] = std::move(data);
  return doc;
}

std::size_t parse_dim(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_unsigned()) {
    throw ParseError(std::string("expected non-negative integer field \"") + key + "\"");
  }
  const std::size_t value = doc[key].get<std::size_t>();
  if (value == 0) throw ParseError(std::string("field \"") + key + "\" must be positive");
  return value;
}

ComplexMatrix matrix_from_payload(const Json& doc) {
  const std::size_t rows = parse_dim(doc, "rows");
  const std::size_t cols = parse_dim(doc, "cols");
  if (!doc.contains("data") || !doc["data"].is_array() || doc["data"].size() != rows) {
    throw ParseError("matrix \"data\" must be an array of `rows` rows");
  }
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = doc["data"][i];
    if (!row.is_array() || row.size() != cols) {
      throw ParseError("matrix row " + std::to_string(i) + " does not have `cols` entries");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const Json& pair = row[j];
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
        throw ParseError("matrix entry (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") is not a [re, im] number pair");
      }
      m(i, j) = Complex(pair[0].get<double>(), pair[1].get<double>());
    }
  }
  return m;
}

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what());
  }
}

Json chain_payload(const std::vector<ChainEntry>& chain) {
  Json out = Json::array();
  for (const auto& entry : chain) {
    Json item;
    item["name"] = entry.name;
    item["lhs"] = round_significant(entry.lhs);
    item["rhs"] = round_significant(entry.rhs);
    item["holds"] = entry.holds;
    out.push_back(std::move(item));
  }
  return out;
}

} // namespace

std::string matrix_to_json(const ComplexMatrix& m) { return matrix_payload(m).dump(); }

ComplexMatrix matrix_from_json(const std::string& text) {
  return matrix_from_payload(parse_document(text));
}

std::string bipartite_to_json(const BipartiteOperator& a) {
  Json doc = matrix_payload(a.mat);
  doc["local_dim"] = a.n;
  return doc.dump();
}

BipartiteOperator bipartite_from_json(const std::string& text) {
  const Json doc = parse_document(text);
  ComplexMatrix mat = matrix_from_payload(doc);
  const std::size_t n = parse_dim(doc, "local_dim");
  if (mat.rows() != n * n || mat.cols() != n * n) {
    throw ParseError("matrix shape is not local_dim^2 square");
  }
  return BipartiteOperator(n, std::move(mat));
}

std::string map_to_json(const MatrixMap& phi) {
  Json doc;
  doc["n"] = phi.n;
  doc["m"] = phi.m;
  Json images = Json::array();
  for (const auto& img : phi.images) images.push_back(matrix_payload(img));
  doc["images"] = std::move(images);
  return doc.dump();
}

MatrixMap map_from_json(const std::string& text) {
  const Json doc = parse_document(text);
  const std::size_t n = parse_dim(doc, "n");
  const std::size_t m = parse_dim(doc, "m");
  if (!doc.contains("images") || !doc["images"].is_array() || doc["images"].size() != n * n) {
    throw ParseError("map \"images\" must hold n^2 matrix documents");
  }
  std::vector<ComplexMatrix> images;
  images.reserve(n * n);
  for (const Json& img : doc["images"]) {
    ComplexMatrix mat = matrix_from_payload(img);
    if (mat.rows() != m || mat.cols() != m) {
      throw ParseError("map image " + std::to_string(images.size()) + " is not m x m");
    }
    images.push_back(std::move(mat));
  }
  return MatrixMap(n, m, std::move(images));
}

std::string certificate_to_json(const CertificateReport& report) {
  Json doc;
  doc["S"] = round_significant(report.s_value);
  doc["T"] = round_significant(report.t_value);
  doc["neg_norm"] = round_significant(report.neg_norm);
  doc["bound"] = round_significant(report.bound);
  doc["margin"] = round_significant(report.margin);
  doc["verdict"] = to_string(report.verdict);
  doc["schema"] = "v1";
  return doc.dump();
}

std::string counterexample_to_json(const CounterexampleReport& report) {
  Json doc;
  doc["epsilon"] = round_significant(report.epsilon);
  doc["delta"] = round_significant(report.delta);
  Json params;
  params["a"] = round_significant(report.params.a);
  params["b"] = round_significant(report.params.b);
  params["c"] = round_significant(report.params.c);
  params["theta"] = round_significant(report.params.theta);
  doc["params"] = std::move(params);
  doc["p_theta"] = round_significant(report.p_theta);
  doc["p_theta_pi3_variant"] = round_significant(report.p_theta_pi3_variant);
  doc["k"] = round_significant(report.k);
  doc["S_psi"] = round_significant(report.s_psi);
  doc["T_psi"] = round_significant(report.t_psi);
  doc["neg_norm_phi"] = round_significant(report.neg_norm_phi);
  doc["neg_norm_psi"] = round_significant(report.neg_norm_psi);
  doc["bound"] = round_significant(report.bound);
  doc["chain"] = chain_payload(report.chain);
  doc["verdict"] = to_string(report.verdict);
  doc["schema"] = "v1";
  return doc.dump();
}

double round_significant(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value);
  return std::strtod(buffer, nullptr);
}

} // namespace entcert
