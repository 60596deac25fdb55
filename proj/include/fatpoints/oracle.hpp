#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "fatpoints/bounds.hpp"
#include "fatpoints/exact.hpp"
#include "fatpoints/scheme.hpp"

namespace fatpoints {

/// Exponent vector of a degree-t monomial in x0, x1, x2.
using Monomial = std::array<int, 3>;

/// All degree-t monomials in graded lexicographic order
/// (x0^t, x0^(t-1) x1, ..., x2^t).
std::vector<Monomial> monomial_basis(std::int64_t t);

struct OracleOptions {
  /// Per-point dehomogenization chart (coordinate index set to 1).  Unset
  /// entries use the first nonzero coordinate.
  std::vector<std::optional<int>> charts;
};

/// Rows are the Hasse derivatives D^(i,j), i + j <= m_p - 1, of the
/// dehomogenized degree-t monomials, evaluated at each point p.  Scheme over
/// P^2 with coordinates on every point of positive multiplicity.
template <typename Field>
MatrixX<typename Field::Scalar> condition_matrix(const FatPointScheme& scheme, std::int64_t t,
                                                 const Field& field,
                                                 const OracleOptions& options = {});

/// h_Z(t), the rank of the degree-t condition matrix.
std::int64_t hilbert_oracle(const FatPointScheme& scheme, std::int64_t t,
                            const OracleOptions& options = {});
/// h_{I_Z}(t) = binom(t+2, 2) - h_Z(t).
std::int64_t ideal_oracle(const FatPointScheme& scheme, std::int64_t t,
                          const OracleOptions& options = {});

/// Oracle values from degree 0 until they reach deg(scheme), or through
/// max_degree, whichever is first.  The result's stable value is deg(scheme)
/// when reached within the cap.
std::vector<std::int64_t> hilbert_oracle_values(const FatPointScheme& scheme,
                                                std::int64_t max_degree,
                                                const OracleOptions& options = {});

/// nu_{t+1}: the number of minimal generators of degree t + 1, computed as
/// dim (I)_{t+1} - dim R_1 (I)_t with (I)_t the kernel of the condition matrix.
std::int64_t nu_oracle(const FatPointScheme& scheme, std::int64_t t,
                       const OracleOptions& options = {});

} // namespace fatpoints
