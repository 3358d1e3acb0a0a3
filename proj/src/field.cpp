#include "hhwb/field.hpp"

#include <cctype>

#include "hhwb/error.hpp"

namespace hhwb {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw PreconditionError("p must be prime and below 2^31 (got " +
                            std::to_string(p) + ")");
  }
  FieldSpec f;
  f.kind_ = Kind::prime_field;
  f.p_ = static_cast<std::uint32_t>(p);
  return f;
}

void FieldSpec::reduce(Scalar& v) const {
  if (kind_ == Kind::rationals) {
    v.canonicalize();
    return;
  }
  mpz_class p(p_);
  mpz_class num = v.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = v.get_den() % p;
  if (den < 0) den += p;
  if (den == 0) throw Error("denominator divisible by the characteristic");
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * inv) % p;
  }
  v = Scalar(num);
}

Scalar FieldSpec::inv(const Scalar& a) const {
  if (a == 0) throw Error("division by zero");
  if (kind_ == Kind::rationals) {
    Scalar r = 1 / a;
    r.canonicalize();
    return r;
  }
  mpz_class p(p_), r;
  mpz_class num = a.get_num();
  mpz_invert(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  return Scalar(r);
}

Scalar FieldSpec::parse(const std::string& text) const {
  auto slash = text.find('/');
  auto check_int = [&](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) throw Error("malformed scalar \"" + text + "\"");
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
        throw Error("malformed scalar \"" + text + "\"");
      }
    }
  };
  if (slash == std::string::npos) {
    check_int(text);
    return canon(Scalar(mpz_class(text[0] == '+' ? text.substr(1) : text)));
  }
  std::string num = text.substr(0, slash), den = text.substr(slash + 1);
  check_int(num);
  check_int(den);
  if (den[0] == '-' || den[0] == '+') {
    throw Error("denominator must be unsigned in \"" + text + "\"");
  }
  mpz_class n(num[0] == '+' ? num.substr(1) : num), d(den);
  if (d == 0) throw Error("zero denominator in \"" + text + "\"");
  Scalar q(n, d);
  if (kind_ == Kind::rationals) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1) throw Error("scalar \"" + text + "\" is not in lowest terms");
  }
  return canon(q);
}

std::string FieldSpec::format(const Scalar& v) const { return v.get_str(); }

std::string FieldSpec::name() const {
  return kind_ == Kind::rationals ? "Q" : "F_" + std::to_string(p_);
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Vector add(const FieldSpec& f, const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vector sub(const FieldSpec& f, const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

Vector scale(const FieldSpec& f, const Scalar& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = f.mul(s, v[i]);
  return r;
}

void axpy(const FieldSpec& f, Vector& acc, const Scalar& s, const Vector& v) {
  if (acc.size() != v.size()) throw DimensionMismatch("vector length mismatch");
  if (s == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) f.add_mul(acc[i], s, v[i]);
  }
}

}  // namespace hhwb
