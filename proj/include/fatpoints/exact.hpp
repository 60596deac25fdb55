#pragma once

#include <cstdint>
#include <variant>

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include "fatpoints/field.hpp"

namespace fatpoints {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Index = Eigen::Index;

// Integer matrices, fraction-free.  rank() eliminates with row contents
// divided out after every update, so each row stays proportional to a vector
// of minors; bareiss_rank() is the classical variant with exact division by
// the previous pivot, kept as a cross-check.
Index rank(MatrixX<BigInt> m);
Index bareiss_rank(MatrixX<BigInt> m);

/// Basis of the right kernel as primitive integer columns.
MatrixX<BigInt> kernel(MatrixX<BigInt> m);

/// Scales each row by the lcm of its denominators (and divides out the gcd of
/// the numerators); the row space over Q is unchanged.
MatrixX<BigInt> clear_denominators(const MatrixX<Rational>& m);

Index rank(const MatrixX<Rational>& m);

// Matrices over F_p with entries in [0, p).
Index rank(MatrixX<std::int64_t> m, const PrimeField& field);
MatrixX<std::int64_t> kernel(MatrixX<std::int64_t> m, const PrimeField& field);

/// A dense matrix over Q or F_p, tagged with its field.
class ExactMatrix {
public:
  explicit ExactMatrix(MatrixX<Rational> m) : data_(std::move(m)) {}
  ExactMatrix(MatrixX<std::int64_t> m, const PrimeField& field);

  FieldSpec field() const;
  Index rows() const;
  Index cols() const;
  Index rank() const;

private:
  struct Modular {
    MatrixX<std::int64_t> entries;
    PrimeField field;
  };
  std::variant<MatrixX<Rational>, Modular> data_;
};

} // namespace fatpoints
