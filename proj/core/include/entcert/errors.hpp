// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef ENTCERT_ERRORS_HPP
#define ENTCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace entcert {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NotHermitian : public Error {
public:
  explicit NotHermitian(const std::string& msg) : Error(msg) {}
};

class NoConvergence : public Error {
public:
  explicit NoConvergence(const std::string& msg) : Error(msg) {}
};

class DimensionMismatch : public Error {
public:
  explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

class DimensionTooSmall : public Error {
public:
  explicit DimensionTooSmall(const std::string& msg) : Error(msg) {}
};

class NotAState : public Error {
public:
  explicit NotAState(const std::string& msg) : Error(msg) {}
};

class NotUnital : public Error {
public:
  explicit NotUnital(const std::string& msg) : Error(msg) {}
};

class TOutOfRange : public Error {
public:
  explicit TOutOfRange(const std::string& msg) : Error(msg) {}
};

class EpsilonOutOfRange : public Error {
public:
  explicit EpsilonOutOfRange(const std::string& msg) : Error(msg) {}
};

class DeltaSearchFailed : public Error {
public:
  explicit DeltaSearchFailed(const std::string& msg) : Error(msg) {}
};

/// Malformed input documents (JSON matrices, maps, parameter files).
class ParseError : public Error {
public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace entcert

#endif // ENTCERT_ERRORS_HPP
