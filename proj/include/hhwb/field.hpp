#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace hhwb {

/// Exact field element. Over Q it is a canonical (reduced, positive
/// denominator) fraction; over F_p it is an integer residue in [0, p).
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// The ground field: the rationals or a prime field F_p with p < 2^31.
class FieldSpec {
 public:
  enum class Kind { rationals, prime_field };

  /// Q.
  FieldSpec() = default;
  static FieldSpec rationals() { return FieldSpec(); }
  /// F_p; throws PreconditionError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return kind_ == Kind::rationals; }

  bool operator==(const FieldSpec&) const = default;

  // Arithmetic. Inputs must be canonical; outputs are canonical.
  Scalar add(const Scalar& a, const Scalar& b) const { return canon(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return canon(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return canon(a * b); }
  Scalar neg(const Scalar& a) const { return canon(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  /// acc += a * b
  void add_mul(Scalar& acc, const Scalar& a, const Scalar& b) const {
    acc += a * b;
    reduce(acc);
  }

  /// Maps an arbitrary rational into canonical form (mod p when needed).
  Scalar canon(Scalar v) const {
    reduce(v);
    return v;
  }
  void reduce(Scalar& v) const;

  /// Parses "a", "-a" or "a/b". Over Q the fraction must be in lowest terms.
  Scalar parse(const std::string& text) const;
  /// Inverse of parse: "a" or "a/b".
  std::string format(const Scalar& v) const;
  /// "Q" or "F_p".
  std::string name() const;

  Vector zeros(std::size_t n) const { return Vector(n, Scalar(0)); }
  Vector unit_vector(std::size_t n, std::size_t i) const {
    Vector v(n, Scalar(0));
    v[i] = 1;
    return v;
  }

 private:
  Kind kind_ = Kind::rationals;
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

// Small vector helpers over a field.
bool is_zero(const Vector& v);
Vector add(const FieldSpec& f, const Vector& a, const Vector& b);
Vector sub(const FieldSpec& f, const Vector& a, const Vector& b);
Vector scale(const FieldSpec& f, const Scalar& s, const Vector& v);
/// acc += s * v
void axpy(const FieldSpec& f, Vector& acc, const Scalar& s, const Vector& v);

}  // namespace hhwb
