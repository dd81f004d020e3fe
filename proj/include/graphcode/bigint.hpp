#pragma once

// Exact integer and rational scalars, usable as Eigen matrix scalars.

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <type_traits>

namespace graphcode {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigInt binomial(long long n, long long k);

}  // namespace graphcode

namespace Eigen {

template <>
struct NumTraits<graphcode::BigInt> : GenericNumTraits<graphcode::BigInt> {
  using Real = graphcode::BigInt;
  using NonInteger = graphcode::BigInt;
  using Nested = graphcode::BigInt;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16
  };
};

}  // namespace Eigen

// Boost 1.74's byte-container detection probes std::iterator_traits on any
// argument type, which hard-errors on Eigen expressions during overload
// resolution of mixed scalar/matrix operators.
namespace boost::multiprecision::detail {

template <class S, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Matrix<S, R, C, O, MR, MC>> : std::false_type {};

template <class Lhs, class Rhs, int Option>
struct is_byte_container<Eigen::Product<Lhs, Rhs, Option>> : std::false_type {};

}  // namespace boost::multiprecision::detail
