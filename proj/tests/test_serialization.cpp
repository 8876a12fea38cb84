// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "entcert/serialization.hpp"

using namespace entcert;

TEST_CASE("matrix documents round-trip at full precision") {
  Rng rng(3);
  const auto m = ginibre_matrix(3, 4, rng);
  const auto back = matrix_from_json(matrix_to_json(m));
  REQUIRE(back.rows() == 3);
  REQUIRE(back.cols() == 4);
  CHECK(max_abs_diff(back, m) == 0.0);

  const auto doc = nlohmann::json::parse(matrix_to_json(m));
  CHECK(doc["rows"] == 3);
  CHECK(doc["cols"] == 4);
  CHECK(doc["data"].size() == 3);
  CHECK(doc["data"][0].size() == 4);
  CHECK(doc["data"][0][0].size() == 2);
}

TEST_CASE("bipartite documents carry the factor dimension") {
  const auto a = max_entangled(3);
  const std::string text = bipartite_to_json(a);
  const auto back = bipartite_from_json(text);
  CHECK(back.n == 3);
  CHECK(max_abs_diff(back.mat, a.mat) == 0.0);
  CHECK(nlohmann::json::parse(text)["local_dim"] == 3);
}

TEST_CASE("map documents round-trip including rectangular shapes") {
  Rng rng(5);
  std::vector<ComplexMatrix> images;
  for (int i = 0; i < 4; ++i) images.push_back(ginibre_matrix(3, 3, rng));
  const MatrixMap phi(2, 3, images);
  const auto back = map_from_json(map_to_json(phi));
  REQUIRE(back.n == 2);
  REQUIRE(back.m == 3);
  for (std::size_t i = 0; i < images.size(); ++i) {
    CHECK(max_abs_diff(back.images[i], phi.images[i]) == 0.0);
  }
}

TEST_CASE("malformed documents raise parse errors") {
  CHECK_THROWS_AS(matrix_from_json("{"), ParseError);
  CHECK_THROWS_AS(matrix_from_json("[1, 2]"), ParseError);
  CHECK_THROWS_AS(matrix_from_json(R"({"cols": 1, "data": [[[0, 0]]]})"), ParseError);
  CHECK_THROWS_AS(matrix_from_json(R"({"rows": 0, "cols": 1, "data": []})"), ParseError);
  CHECK_THROWS_AS(matrix_from_json(R"({"rows": -1, "cols": 1, "data": []})"), ParseError);
  CHECK_THROWS_AS(matrix_from_json(R"({"rows": 1.5, "cols": 1, "data": []})"), ParseError);
  CHECK_THROWS_AS(matrix_from_json(R"({"rows": 2, "cols": 1, "data": [[[0, 0]]]})"), ParseError);

  // Ragged row.
  CHECK_THROWS_AS(matrix_from_json(R"({"rows": 2, "cols": 2,
      "data": [[[0,0],[0,0]], [[0,0]]]})"),
                  ParseError);
  // Entries must be [re, im] number pairs.
  CHECK_THROWS_AS(matrix_from_json(R"({"rows": 1, "cols": 1, "data": [[[0]]]})"), ParseError);
  CHECK_THROWS_AS(matrix_from_json(R"({"rows": 1, "cols": 1, "data": [[[0, "x"]]]})"), ParseError);
  CHECK_THROWS_AS(matrix_from_json(R"({"rows": 1, "cols": 1, "data": [[0.5]]})"), ParseError);
}

TEST_CASE("bipartite and map documents validate their shapes") {
  Rng rng(7);
  const auto m3 = ginibre_matrix(3, 3, rng);
  nlohmann::json doc = nlohmann::json::parse(matrix_to_json(m3));
  doc["local_dim"] = 2;
  CHECK_THROWS_AS(bipartite_from_json(doc.dump()), ParseError);
  doc.erase("local_dim");
  CHECK_THROWS_AS(bipartite_from_json(doc.dump()), ParseError);

  const auto good = map_to_json(identity_map(2));
  nlohmann::json map_doc = nlohmann::json::parse(good);
  map_doc["images"].erase(3);
  CHECK_THROWS_AS(map_from_json(map_doc.dump()), ParseError);

  map_doc = nlohmann::json::parse(good);
  map_doc["m"] = 3;
  CHECK_THROWS_AS(map_from_json(map_doc.dump()), ParseError);
}

TEST_CASE("certificate reports serialize rounded values with a schema suffix") {
  CertificateReport report;
  report.s_value = 1.0 / 3.0;
  report.t_value = 9.000000000001234;
  report.neg_norm = 1.0;
  report.bound = 9.0;
  report.margin = -2.5e-13;
  report.verdict = Verdict::Inconclusive;

  const std::string text = certificate_to_json(report);
  CHECK(text.ends_with("\"schema\":\"v1\"}"));
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["S"].get<double>() == 0.333333333333);
  CHECK(doc["T"].get<double>() == 9.0);
  CHECK(doc["neg_norm"].get<double>() == 1.0);
  CHECK(doc["bound"].get<double>() == 9.0);
  CHECK(doc["margin"].get<double>() == -2.5e-13);
  CHECK(doc["verdict"] == "Inconclusive");
  CHECK(doc["schema"] == "v1");
}

TEST_CASE("counterexample reports serialize the full chain") {
  const auto report = counterexample(0.1);
  const std::string text = counterexample_to_json(report);
  CHECK(text.ends_with("\"schema\":\"v1\"}"));

  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["epsilon"].get<double>() == 0.1);
  CHECK(doc["delta"].get<double>() == round_significant(report.delta));
  CHECK(doc["params"]["a"].get<double>() == round_significant(report.params.a));
  CHECK(doc["params"]["b"].get<double>() == 0.1);
  CHECK(doc["params"]["c"].get<double>() == round_significant(report.params.c));
  CHECK(doc["params"]["theta"].get<double>() == round_significant(report.params.theta));
  CHECK(doc["p_theta"].get<double>() == round_significant(report.p_theta));
  CHECK(doc["p_theta_pi3_variant"].get<double>() ==
        round_significant(report.p_theta_pi3_variant));
  CHECK(doc["k"].get<double>() == round_significant(report.k));
  CHECK(doc["S_psi"].get<double>() == round_significant(report.s_psi));
  CHECK(doc["T_psi"].get<double>() == round_significant(report.t_psi));
  CHECK(doc["neg_norm_phi"].get<double>() == round_significant(report.neg_norm_phi));
  CHECK(doc["neg_norm_psi"].get<double>() == round_significant(report.neg_norm_psi));
  CHECK(doc["bound"].get<double>() == round_significant(report.bound));
  CHECK(doc["verdict"] == "Entangled");

  REQUIRE(doc["chain"].is_array());
  REQUIRE(doc["chain"].size() == report.chain.size());
  for (std::size_t i = 0; i < report.chain.size(); ++i) {
    CHECK(doc["chain"][i]["name"] == report.chain[i].name);
    CHECK(doc["chain"][i]["lhs"].get<double>() == round_significant(report.chain[i].lhs));
    CHECK(doc["chain"][i]["rhs"].get<double>() == round_significant(report.chain[i].rhs));
    CHECK(doc["chain"][i]["holds"].get<bool>() == report.chain[i].holds);
  }
}

TEST_CASE("significant-digit rounding") {
  CHECK(round_significant(1.0 / 3.0) == 0.333333333333);
  CHECK(round_significant(123456789.123456789) == 123456789.123);
  CHECK(round_significant(0.0) == 0.0);
  CHECK(round_significant(-1.0 / 3.0) == -0.333333333333);
  CHECK(round_significant(2.0) == 2.0);
  CHECK(round_significant(1.0 / 3.0, 3) == 0.333);
  CHECK(round_significant(9.999999999999e99, 2) == 1.0e100);
  CHECK(round_significant(1e-300) == 1e-300);
}
