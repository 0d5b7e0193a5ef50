#include "hgraphon/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>

namespace hgraphon {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rational(std::string_view token) {
  std::string_view s = token;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw std::invalid_argument("empty numeric token");

  Rat value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational '" + std::string(token) + "'");
    boost::multiprecision::mpz_int n{std::string(num)};
    boost::multiprecision::mpz_int d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(token) + "'");
    value = Rat(n, d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty())
      throw std::invalid_argument("malformed decimal '" + std::string(token) + "'");
    if (!whole.empty() && !all_digits(whole))
      throw std::invalid_argument("malformed decimal '" + std::string(token) + "'");
    if (!frac.empty() && !all_digits(frac))
      throw std::invalid_argument("malformed decimal '" + std::string(token) + "'");
    boost::multiprecision::mpz_int n{whole.empty() ? std::string("0") : std::string(whole)};
    for (char c : frac) {
      n *= 10;
      n += c - '0';
    }
    boost::multiprecision::mpz_int d = 1;
    for (size_t i = 0; i < frac.size(); ++i) d *= 10;
    value = Rat(n, d);
  } else {
    if (!all_digits(s))
      throw std::invalid_argument("malformed number '" + std::string(token) + "'");
    value = Rat(boost::multiprecision::mpz_int{std::string(s)});
  }
  return negative ? Rat(-value) : value;
}

std::string format_rational(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rat rational_from_double(double x) {
  Rat r;
  mpq_set_d(r.backend().data(), x);
  return r;
}

bool is_probability_vector(const RatVector& v) {
  Rat sum = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) < 0) return false;
    sum += v(i);
  }
  return sum == 1;
}

bool exactly_equal(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool exactly_equal(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

std::string format_vector(const RatVector& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += format_rational(v(i));
  }
  return out;
}

}  // namespace hgraphon
