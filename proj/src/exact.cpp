#include "fatpoints/exact.hpp"

#include <numeric>

namespace fatpoints {

namespace {

template <typename Scalar>
void swap_rows(MatrixX<Scalar>& m, Index a, Index b) {
  if (a != b) m.row(a).swap(m.row(b));
}

template <typename Scalar>
Index find_pivot(const MatrixX<Scalar>& m, Index from, Index col) {
  for (Index i = from; i < m.rows(); ++i)
    if (m(i, col) != 0) return i;
  return -1;
}

void make_primitive(MatrixX<BigInt>& m, Index row) {
  BigInt g = 0;
  for (Index k = 0; k < m.cols() && g != 1; ++k)
    if (m(row, k) != 0) g = gcd(g, m(row, k));
  if (g > 1)
    for (Index k = 0; k < m.cols(); ++k)
      if (m(row, k) != 0) m(row, k) /= g;
}

struct IntegerEchelon {
  MatrixX<BigInt> reduced;
  std::vector<Index> pivot_cols;
};

// Gauss-Jordan over Z with primitive rows after every update, so pivot
// columns are cleared above and below without introducing fractions.
IntegerEchelon integer_rref(MatrixX<BigInt> m) {
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    const Index p = find_pivot(m, r, c);
    if (p < 0) continue;
    swap_rows(m, r, p);
    make_primitive(m, r);
    if (m(r, c) < 0)
      for (Index k = 0; k < m.cols(); ++k) m(r, k) = -m(r, k);
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const BigInt a = m(r, c);
      const BigInt b = m(i, c);
      for (Index k = 0; k < m.cols(); ++k) m(i, k) = a * m(i, k) - b * m(r, k);
      make_primitive(m, i);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::int64_t reduce_mod(std::int64_t x, std::int64_t p) { return ((x % p) + p) % p; }

struct ModularEchelon {
  MatrixX<std::int64_t> reduced;
  std::vector<Index> pivot_cols;
};

ModularEchelon modular_rref(MatrixX<std::int64_t> m, const PrimeField& f) {
  const auto p = f.modulus();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index k = 0; k < m.cols(); ++k) m(i, k) = reduce_mod(m(i, k), p);
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    const Index piv = find_pivot(m, r, c);
    if (piv < 0) continue;
    swap_rows(m, r, piv);
    const auto inv = f.inv(m(r, c));
    for (Index k = c; k < m.cols(); ++k) m(r, k) = f.mul(m(r, k), inv);
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const auto factor = m(i, c);
      for (Index k = c; k < m.cols(); ++k) m(i, k) = f.sub(m(i, k), f.mul(factor, m(r, k)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

} // namespace

Index bareiss_rank(MatrixX<BigInt> m) {
  BigInt previous = 1;
  Index r = 0;
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    const Index p = find_pivot(m, r, c);
    if (p < 0) continue;
    swap_rows(m, r, p);
    const BigInt pivot = m(r, c);
    for (Index i = r + 1; i < m.rows(); ++i) {
      const BigInt lead = m(i, c);
      for (Index k = c + 1; k < m.cols(); ++k)
        m(i, k) = (pivot * m(i, k) - lead * m(r, k)) / previous;
      m(i, c) = 0;
    }
    previous = pivot;
    ++r;
  }
  return r;
}

Index rank(MatrixX<BigInt> m) {
  Index r = 0;
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    // smallest nonzero entry in the column as pivot
    Index p = -1;
    for (Index i = r; i < m.rows(); ++i)
      if (m(i, c) != 0 && (p < 0 || abs(m(i, c)) < abs(m(p, c)))) p = i;
    if (p < 0) continue;
    swap_rows(m, r, p);
    for (Index i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const BigInt g = gcd(m(r, c), m(i, c));
      const BigInt a = m(r, c) / g;
      const BigInt b = m(i, c) / g;
      for (Index k = c; k < m.cols(); ++k) m(i, k) = a * m(i, k) - b * m(r, k);
      make_primitive(m, i);
    }
    ++r;
  }
  return r;
}

MatrixX<BigInt> kernel(MatrixX<BigInt> m) {
  const Index n = m.cols();
  auto [reduced, pivots] = integer_rref(std::move(m));
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  MatrixX<BigInt> basis(n, n - static_cast<Index>(pivots.size()));
  Index out = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    BigInt scale = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const auto row = static_cast<Index>(r);
      if (reduced(row, free) != 0) scale = lcm(scale, reduced(row, pivots[r]));
    }
    MatrixX<BigInt> v = MatrixX<BigInt>::Zero(n, 1);
    v(free, 0) = scale;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const auto row = static_cast<Index>(r);
      if (reduced(row, free) != 0)
        v(pivots[r], 0) = -reduced(row, free) * (scale / reduced(row, pivots[r]));
    }
    basis.col(out++) = v.col(0);
  }
  return basis;
}

MatrixX<BigInt> clear_denominators(const MatrixX<Rational>& m) {
  MatrixX<BigInt> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    BigInt den = 1;
    for (Index k = 0; k < m.cols(); ++k) den = lcm(den, denominator(m(i, k)));
    for (Index k = 0; k < m.cols(); ++k)
      out(i, k) = numerator(m(i, k)) * (den / denominator(m(i, k)));
    make_primitive(out, i);
  }
  return out;
}

Index rank(const MatrixX<Rational>& m) { return rank(clear_denominators(m)); }

Index rank(MatrixX<std::int64_t> m, const PrimeField& field) {
  return static_cast<Index>(modular_rref(std::move(m), field).pivot_cols.size());
}

MatrixX<std::int64_t> kernel(MatrixX<std::int64_t> m, const PrimeField& field) {
  const Index n = m.cols();
  auto [reduced, pivots] = modular_rref(std::move(m), field);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  MatrixX<std::int64_t> basis = MatrixX<std::int64_t>::Zero(n, n - static_cast<Index>(pivots.size()));
  Index out = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, out) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], out) = field.sub(0, reduced(static_cast<Index>(r), free));
    ++out;
  }
  return basis;
}

ExactMatrix::ExactMatrix(MatrixX<std::int64_t> m, const PrimeField& field)
    : data_(Modular{std::move(m), field}) {}

FieldSpec ExactMatrix::field() const {
  if (const auto* mod = std::get_if<Modular>(&data_)) return mod->field.spec();
  return FieldSpec::rationals();
}

Index ExactMatrix::rows() const {
  return std::visit([](const auto& d) {
    if constexpr (std::is_same_v<std::decay_t<decltype(d)>, Modular>) return d.entries.rows();
    else return d.rows();
  }, data_);
}

Index ExactMatrix::cols() const {
  return std::visit([](const auto& d) {
    if constexpr (std::is_same_v<std::decay_t<decltype(d)>, Modular>) return d.entries.cols();
    else return d.cols();
  }, data_);
}

Index ExactMatrix::rank() const {
  if (const auto* mod = std::get_if<Modular>(&data_)) return fatpoints::rank(mod->entries, mod->field);
  return fatpoints::rank(std::get<MatrixX<Rational>>(data_));
}

} // namespace fatpoints
