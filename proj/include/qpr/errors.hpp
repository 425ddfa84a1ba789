#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroQuaternion : public Error {
 public:
  ZeroQuaternion() : Error("cannot invert a zero quaternion") {}
};

class NotUnit : public Error {
 public:
  explicit NotUnit(double norm)
      : Error("expected a unit quaternion, got norm " + std::to_string(norm)),
        norm_(norm) {}
  double norm() const { return norm_; }

 private:
  double norm_;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(std::size_t index, std::size_t bound)
      : Error("index " + std::to_string(index) + " out of range [0, " +
              std::to_string(bound) + ")") {}
};

/// A matrix of the representation is not unitary within tolerance.
class NotUnitary : public Error {
 public:
  NotUnitary(std::size_t element, double deviation)
      : Error("matrix for element " + std::to_string(element) +
              " is not unitary (deviation " + std::to_string(deviation) + ")"),
        element_(element),
        deviation_(deviation) {}
  std::size_t element() const { return element_; }
  double deviation() const { return deviation_; }

 private:
  std::size_t element_;
  double deviation_;
};

/// U at the group identity is not the identity matrix.
class IdentityNotNormalized : public Error {
 public:
  explicit IdentityNotNormalized(double deviation)
      : Error("matrix at the group identity deviates from I by " +
              std::to_string(deviation)),
        deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

/// adjoint(U_ba) U_b U_a has an off-diagonal entry above tolerance.
class NotWeakProjective : public Error {
 public:
  NotWeakProjective(std::size_t b, std::size_t a, double offdiag)
      : Error("pair (b=" + std::to_string(b) + ", a=" + std::to_string(a) +
              ") is not weak projective: off-diagonal norm " +
              std::to_string(offdiag)),
        b_(b),
        a_(a),
        offdiag_(offdiag) {}
  std::size_t b() const { return b_; }
  std::size_t a() const { return a_; }
  double offdiag_norm() const { return offdiag_; }

 private:
  std::size_t b_, a_;
  double offdiag_;
};

class NonUnitPhase : public Error {
 public:
  NonUnitPhase(std::size_t f, std::size_t b, std::size_t a, double modulus)
      : Error("phase omega(f=" + std::to_string(f) + "; b=" + std::to_string(b) +
              ", a=" + std::to_string(a) + ") has modulus " +
              std::to_string(modulus)),
        f_(f),
        b_(b),
        a_(a) {}
  std::size_t f() const { return f_; }
  std::size_t b() const { return b_; }
  std::size_t a() const { return a_; }

 private:
  std::size_t f_, b_, a_;
};

class InvalidOrder : public Error {
 public:
  using Error::Error;
};

/// sigma at the group identity must be exactly the unit 1.
class IdentityPhase : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// Malformed representation file. `where` is "line:col" or a JSON pointer.
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

}  // namespace qpr
