// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef ENTCERT_SERIALIZATION_HPP
#define ENTCERT_SERIALIZATION_HPP

#include <string>

#include "entcert/hakye.hpp"

namespace entcert {

/// Matrix documents: {"rows": n, "cols": m, "data": [[[re, im], ...], ...]}.
/// Ragged rows, malformed pairs, and non-numeric entries are rejected with
/// ParseError. Matrix payloads round-trip at full precision.
std::string matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const std::string& text);

/// Matrix document plus "local_dim".
std::string bipartite_to_json(const BipartiteOperator& a);
BipartiteOperator bipartite_from_json(const std::string& text);

/// {"n", "m", "images": [n^2 matrix documents in (i,j) row-major unit order]}.
std::string map_to_json(const MatrixMap& phi);
MatrixMap map_from_json(const std::string& text);

/// Report documents carry values rounded to 12 significant digits and end
/// with a schema version field "v1".
std::string certificate_to_json(const CertificateReport& report);
std::string counterexample_to_json(const CounterexampleReport& report);

/// Nearest double to the decimal rendering of value with the given number of
/// significant digits.
double round_significant(double value, int digits = 12);

} // namespace entcert

#endif // ENTCERT_SERIALIZATION_HPP
