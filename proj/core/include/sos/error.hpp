#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace sos {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroElement : public Error {
 public:
  ZeroElement() : Error("operation requires a nonzero element") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ReduciblePolynomial : public Error {
 public:
  explicit ReduciblePolynomial(const std::string& poly)
      : Error("defining polynomial is reducible over Q: " + poly) {}
};

/// Z[theta] is not p-maximal at `prime`; the field is outside the supported scope there.
class NotPMaximal : public Error {
 public:
  explicit NotPMaximal(const mpz_class& p)
      : Error("Z[theta] is not " + p.get_str() + "-maximal; prime " + p.get_str() +
              " is outside the supported scope"),
        prime_(p) {}
  const mpz_class& prime() const { return prime_; }

 private:
  mpz_class prime_;
};

class SearchBoundExceeded : public Error {
 public:
  using Error::Error;
};

class UnsupportedField : public Error {
 public:
  using Error::Error;
};

class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

class MultipleDyadicPrimes : public Error {
 public:
  MultipleDyadicPrimes() : Error("oracle needs a field with a single prime above 2") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace sos
