#include "zonotile/rational.hpp"

#include <cctype>
#include <ostream>

#include "zonotile/error.hpp"

namespace zonotile {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::ZeroSegment: return "ZeroSegment";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::NotCentrallySymmetric: return "NotCentrallySymmetric";
    case ErrorCode::NonPositiveHeight: return "NonPositiveHeight";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::ClosureViolated: return "ClosureViolated";
    case ErrorCode::NonConvexResult: return "NonConvexResult";
    case ErrorCode::SingularBasis: return "SingularBasis";
    case ErrorCode::NonGenericSample: return "NonGenericSample";
    case ErrorCode::EmptyIntersection: return "EmptyIntersection";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  return out.set_str(std::string(s), 10) == 0;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  bool ok = false;
  if (slash == std::string_view::npos) {
    ok = parse_integer(text, num);
  } else {
    const auto den_text = text.substr(slash + 1);
    ok = parse_integer(text.substr(0, slash), num) && !den_text.empty() && den_text[0] != '-' &&
         parse_integer(den_text, den);
  }
  if (!ok) throw Error(ErrorCode::SchemaError, "malformed rational \"" + std::string(text) + "\"");
  if (den == 0) throw Error(ErrorCode::SchemaError, "zero denominator in \"" + std::string(text) + "\"");
  return Rational(num, den);
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Integer Rational::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational abs(const Rational& r) { return r.abs(); }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace zonotile
