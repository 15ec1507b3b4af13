/*
   Copyright 2026 The burau-mod-p Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <sstream>
#include <string>

#include <Eigen/Core>

#include "burau/arith/laurent.hpp"
#include "burau/arith/ratfunc.hpp"

namespace Eigen {

template <class Ring>
struct NumTraits<burau::Laurent<Ring>> : GenericNumTraits<burau::Laurent<Ring>> {
  using Real = burau::Laurent<Ring>;
  using NonInteger = burau::Laurent<Ring>;
  using Literal = burau::Laurent<Ring>;
  using Nested = burau::Laurent<Ring>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 12
  };
  static int digits10() { return 0; }
};

template <>
struct NumTraits<burau::RatFunc> : GenericNumTraits<burau::RatFunc> {
  using Real = burau::RatFunc;
  using NonInteger = burau::RatFunc;
  using Literal = burau::RatFunc;
  using Nested = burau::RatFunc;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 16,
    MulCost = 32
  };
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace burau {

template <class Scalar>
using Mat3 = Eigen::Matrix<Scalar, 3, 3>;
template <class Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

/// 3x3 matrix over F_p[t, 1/t] (or F_p[s, 1/s]).
using MatrixFp = Mat3<LaurentFp>;
/// 3x3 matrix over Z[t, 1/t].
using MatrixZ = Mat3<LaurentZ>;
/// 3x3 matrix over F_p(t).
using MatrixRF = Mat3<RatFunc>;

template <class Scalar>
Scalar det3(const Mat3<Scalar>& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

template <class Scalar>
Mat3<Scalar> adjugate(const Mat3<Scalar>& m) {
  Mat3<Scalar> r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // Cofactor of (j, i).
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  }
  return r;
}

/// Entrywise involution composed with transpose: (a_ij)* = (bar a_ji).
template <class Scalar>
Mat3<Scalar> star(const Mat3<Scalar>& m) {
  return m.transpose().unaryExpr([](const Scalar& x) { return x.bar(); });
}

/// Entrywise involution without transposing.
template <class Scalar>
Mat3<Scalar> bar(const Mat3<Scalar>& m) {
  return m.unaryExpr([](const Scalar& x) { return x.bar(); });
}

/// Inverse over a field of fractions.
inline MatrixRF inverse(const MatrixRF& m) {
  const RatFunc d = det3(m);
  if (d.is_zero()) throw DomainError("singular matrix");
  const RatFunc inv = RatFunc(1) / d;
  return adjugate(m) * inv;
}

/// Inverse of a matrix whose determinant is a unit of the Laurent ring (c * t^k).
template <class Ring>
Mat3<Laurent<Ring>> inverse_laurent(const Mat3<Laurent<Ring>>& m) {
  const Laurent<Ring> d = det3(m);
  if (!d.is_monomial()) throw DomainError("determinant " + d.to_string() + " is not a unit of the Laurent ring");
  const Laurent<Ring> dinv = Laurent<Ring>::monomial(d.ring(), d.var(), d.ring().inv(d.leading_coeff()), -d.min_exp());
  return adjugate(m) * dinv;
}

template <class Ring>
Mat3<Laurent<Ring>> identity(const Ring& ring, Var var = Var::t) {
  Mat3<Laurent<Ring>> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m(i, j) = i == j ? Laurent<Ring>::constant(ring, 1, var) : Laurent<Ring>(ring, var, 0, {});
  return m;
}

inline MatrixRF to_ratfunc(const MatrixFp& m) {
  return m.unaryExpr([](const LaurentFp& x) { return RatFunc(x); });
}

/// Converts a matrix over F_p(t) whose entries are Laurent polynomials.
inline MatrixFp to_laurent(const MatrixRF& m) {
  return m.unaryExpr([](const RatFunc& x) { return x.to_laurent(); });
}

template <class Ring>
Mat3<Laurent<Ring>> to_s_ring(const Mat3<Laurent<Ring>>& m) {
  return m.unaryExpr([](const Laurent<Ring>& x) { return to_s_ring(x); });
}

inline MatrixFp reduce_mod(const MatrixZ& m, const ModP& ring) {
  return m.unaryExpr([&](const LaurentZ& x) { return reduce_mod(x, ring); });
}

template <class Ring>
Mat3<Laurent<Ring>> bind(const Mat3<Laurent<Ring>>& m, const Ring& ring) {
  return m.unaryExpr([&](const Laurent<Ring>& x) { return x.bind(ring); });
}

/// Row-major bracketed form `[[a, b, c], [d, e, f], [g, h, i]]`.
template <class Scalar>
std::string to_string(const Mat3<Scalar>& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < 3; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < 3; ++j) os << (j ? ", " : "") << m(i, j).to_string();
    os << ']';
  }
  os << ']';
  return os.str();
}

/// Multi-line layout, one row per line.
template <class Scalar>
std::string to_pretty_string(const Mat3<Scalar>& m) {
  std::ostringstream os;
  for (int i = 0; i < 3; ++i) {
    os << "  [";
    for (int j = 0; j < 3; ++j) os << (j ? ", " : "") << m(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

template <class Scalar>
bool equal(const Mat3<Scalar>& a, const Mat3<Scalar>& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

}  // namespace burau
