#include "quivalg/field.hpp"

#include <ostream>
#include <stdexcept>

#include "quivalg/errors.hpp"

namespace quivalg {
namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace

Scalar::Scalar(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }

Scalar Scalar::residue(std::uint64_t value, std::uint64_t modulus) {
  Scalar s;
  s.value_ = Residue{value % modulus, modulus};
  return s;
}

std::uint64_t Scalar::modulus() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->modulus;
  return 0;
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1 % r->modulus;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (modulus() != o.modulus()) {
    throw FieldMismatch("scalar arithmetic across different fields");
  }
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return residue(r->value == 0 ? 0 : r->modulus - r->value, r->modulus);
  }
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = (r->value + std::get<Residue>(o.value_).value) % r->modulus;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = (r->value + r->modulus - std::get<Residue>(o.value_).value) % r->modulus;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = r->value * std::get<Residue>(o.value_).value % r->modulus;
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return residue(mod_pow(r->value, r->modulus - 2, r->modulus), r->modulus);
  }
  mpq_class inv;
  mpq_inv(inv.get_mpq_t(), std::get<mpq_class>(value_).get_mpq_t());
  return Scalar(std::move(inv));
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (const auto* r = std::get_if<Scalar::Residue>(&a.value_)) {
    return r->value == std::get<Scalar::Residue>(b.value_).value;
  }
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string Scalar::str() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

std::string Scalar::report_str() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  const mpq_class& q = std::get<mpq_class>(value_);
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldMismatch("rational value requested from a prime-field scalar");
}

std::uint64_t Scalar::residue_value() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw FieldMismatch("residue requested from a rational scalar");
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31U) || !is_prime(p)) {
    throw InvalidField("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "rat" || text == "Q") return rationals();
  if (text.substr(0, 3) == "fp:") {
    std::string digits(text.substr(3));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 12) {
      throw InvalidField("malformed field descriptor '" + std::string(text) + "'");
    }
    return prime(std::stoull(digits));
  }
  throw InvalidField("unknown field '" + std::string(text) + "' (expected rat or fp:<p>)");
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  if (characteristic_ == 0) return Scalar(mpq_class(static_cast<long>(v)));
  auto p = static_cast<std::int64_t>(characteristic_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return Scalar::residue(static_cast<std::uint64_t>(r), characteristic_);
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (characteristic_ == 0) return Scalar(q);
  std::uint64_t den = reduce_mpz(q.get_den(), characteristic_);
  if (den == 0) {
    throw InvalidField("denominator of " + q.get_str() + " vanishes in " + name());
  }
  return Scalar::residue(reduce_mpz(q.get_num(), characteristic_), characteristic_) /
         Scalar::residue(den, characteristic_);
}

Scalar Field::parse_scalar(std::string_view text) const { return from_rational(parse_rational(text)); }

std::string Field::name() const {
  return characteristic_ == 0 ? std::string("rat") : "fp:" + std::to_string(characteristic_);
}

mpq_class parse_rational(std::string_view text) {
  auto digits_ok = [](std::string_view s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!digits_ok(num) || !digits_ok(den)) {
    throw InputError("malformed coefficient '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in coefficient '" + std::string(text) + "'");
  mpq_class q(negative ? mpz_class(-n) : n, d);
  q.canonicalize();
  return q;
}

InputError::InputError(const std::string& what, std::size_t line, std::size_t column)
    : Error(line == 0 ? what
                      : "line " + std::to_string(line) + (column == 0 ? "" : ", column " + std::to_string(column)) +
                            ": " + what),
      line_(line),
      column_(column) {}

namespace {
std::string describe_cycle(const std::vector<std::string>& cycle) {
  std::string out = "quiver has an oriented cycle: ";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i != 0) out += " -> ";
    out += cycle[i];
  }
  return out;
}
}  // namespace

CyclicQuiver::CyclicQuiver(std::vector<std::string> cycle)
    : InputError(describe_cycle(cycle)), cycle_(std::move(cycle)) {}

}  // namespace quivalg
