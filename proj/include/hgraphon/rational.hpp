#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace hgraphon {

// Exact scalar used throughout the geometric core. GMP-backed, always kept
// in lowest terms with positive denominator.
using Rat = boost::multiprecision::mpq_rational;

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = Mat<Rat>;
using RatVector = Vec<Rat>;

// Parses "3", "-2/7" or a plain decimal such as "0.25" (which becomes 1/4
// exactly). No exponents. Throws std::invalid_argument on malformed input.
Rat parse_rational(std::string_view token);

// Lowest-terms rendering: "a/b", or "a" when the denominator is 1.
std::string format_rational(const Rat& r);

// Exact conversion; every finite double is a dyadic rational.
Rat rational_from_double(double x);

bool is_probability_vector(const RatVector& v);

bool exactly_equal(const RatMatrix& a, const RatMatrix& b);
bool exactly_equal(const RatVector& a, const RatVector& b);

std::string format_vector(const RatVector& v);

}  // namespace hgraphon
