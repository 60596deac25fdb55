#include "fatpoints/oracle.hpp"

#include <map>

namespace fatpoints {

std::vector<Monomial> monomial_basis(std::int64_t t) {
  std::vector<Monomial> out;
  if (t < 0) return out;
  for (int a = static_cast<int>(t); a >= 0; --a)
    for (int b = static_cast<int>(t) - a; b >= 0; --b) out.push_back({a, b, static_cast<int>(t) - a - b});
  return out;
}

namespace {

void require_plane_with_coords(const FatPointScheme& scheme) {
  if (scheme.ambient_dim != 2)
    throw PreconditionError("the exact oracle is implemented for P^2 only");
  for (const auto& p : scheme.points) {
    if (p.multiplicity <= 0) continue;
    if (!p.coords) throw StructuralError("point " + p.name + " has no coordinates");
    if (p.coords->size() != 3) throw StructuralError("point " + p.name + " needs 3 coordinates");
  }
}

// Pascal's triangle evaluated in the field, so binomials are reduced mod p
// exactly as Hasse derivatives require.
template <typename Field>
std::vector<std::vector<typename Field::Scalar>> pascal(std::int64_t n, const Field& field) {
  std::vector<std::vector<typename Field::Scalar>> c(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i].assign(i + 1, Field::one());
    for (std::size_t k = 1; k < i; ++k) c[i][k] = field.add(c[i - 1][k - 1], c[i - 1][k]);
  }
  return c;
}

template <typename Field>
std::vector<typename Field::Scalar> powers(const typename Field::Scalar& x, std::int64_t n,
                                           const Field& field) {
  std::vector<typename Field::Scalar> out{Field::one()};
  for (std::int64_t k = 1; k <= n; ++k) out.push_back(field.mul(out.back(), x));
  return out;
}

} // namespace

template <typename Field>
MatrixX<typename Field::Scalar> condition_matrix(const FatPointScheme& scheme, std::int64_t t,
                                                 const Field& field, const OracleOptions& options) {
  using Scalar = typename Field::Scalar;
  require_plane_with_coords(scheme);
  const auto basis = monomial_basis(t);
  const auto choose = pascal(std::max<std::int64_t>(t, 0), field);

  std::vector<std::vector<Scalar>> rows;
  for (std::size_t pi = 0; pi < scheme.points.size(); ++pi) {
    const auto& point = scheme.points[pi];
    if (point.multiplicity <= 0) continue;
    std::array<Scalar, 3> x;
    for (int k = 0; k < 3; ++k) x[static_cast<std::size_t>(k)] = field.from((*point.coords)[static_cast<std::size_t>(k)]);

    int chart = -1;
    if (pi < options.charts.size() && options.charts[pi]) {
      chart = *options.charts[pi];
      if (chart < 0 || chart > 2 || Field::is_zero(x[static_cast<std::size_t>(chart)]))
        throw PreconditionError("chart for point " + point.name + " must be a nonzero coordinate");
    } else {
      for (int k = 0; k < 3 && chart < 0; ++k)
        if (!Field::is_zero(x[static_cast<std::size_t>(k)])) chart = k;
      if (chart < 0) throw StructuralError("point " + point.name + " has all-zero coordinates");
    }
    const int iu = chart == 0 ? 1 : 0;
    const int iv = chart == 2 ? 1 : 2;
    const auto scale = field.inv(x[static_cast<std::size_t>(chart)]);
    const auto pu = powers(field.mul(x[static_cast<std::size_t>(iu)], scale), t, field);
    const auto pv = powers(field.mul(x[static_cast<std::size_t>(iv)], scale), t, field);

    const auto order = std::min<std::int64_t>(point.multiplicity - 1, t);
    for (std::int64_t i = 0; i <= order; ++i)
      for (std::int64_t j = 0; i + j <= order; ++j) {
        std::vector<Scalar> row(basis.size(), Field::zero());
        for (std::size_t col = 0; col < basis.size(); ++col) {
          const auto a = basis[col][static_cast<std::size_t>(iu)];
          const auto b = basis[col][static_cast<std::size_t>(iv)];
          if (a < i || b < j) continue;
          row[col] = field.mul(field.mul(choose[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)],
                                         choose[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)]),
                               field.mul(pu[static_cast<std::size_t>(a - i)], pv[static_cast<std::size_t>(b - j)]));
        }
        rows.push_back(std::move(row));
      }
  }

  MatrixX<Scalar> m(static_cast<Index>(rows.size()), static_cast<Index>(basis.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < basis.size(); ++c) m(static_cast<Index>(r), static_cast<Index>(c)) = rows[r][c];
  return m;
}

template MatrixX<Rational> condition_matrix(const FatPointScheme&, std::int64_t,
                                            const RationalField&, const OracleOptions&);
template MatrixX<std::int64_t> condition_matrix(const FatPointScheme&, std::int64_t,
                                                const PrimeField&, const OracleOptions&);

namespace {

// Linear algebra on condition matrices: over Q we eliminate on primitive
// integer rows, over F_p directly on residues.
struct RationalOps {
  using Work = BigInt;
  RationalField field;
  MatrixX<Work> lift(const MatrixX<Rational>& m) const { return clear_denominators(m); }
  Index rank_of(MatrixX<Work> m) const { return rank(std::move(m)); }
  MatrixX<Work> kernel_of(MatrixX<Work> m) const { return kernel(std::move(m)); }
};

struct ModularOps {
  using Work = std::int64_t;
  PrimeField field;
  MatrixX<Work> lift(MatrixX<Work> m) const { return m; }
  Index rank_of(MatrixX<Work> m) const { return rank(std::move(m), field); }
  MatrixX<Work> kernel_of(MatrixX<Work> m) const { return kernel(std::move(m), field); }
};

template <typename Fn>
decltype(auto) with_ops(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldKind::Rationals) return fn(RationalOps{});
  return fn(ModularOps{PrimeField(spec.characteristic)});
}

template <typename Ops>
std::int64_t condition_rank(const FatPointScheme& scheme, std::int64_t t, const Ops& ops,
                            const OracleOptions& options) {
  if (t < 0) return 0;
  return ops.rank_of(ops.lift(condition_matrix(scheme, t, ops.field, options)));
}

} // namespace

std::int64_t hilbert_oracle(const FatPointScheme& scheme, std::int64_t t,
                            const OracleOptions& options) {
  return with_ops(scheme.field, [&](const auto& ops) {
    return condition_rank(scheme, t, ops, options);
  });
}

std::int64_t ideal_oracle(const FatPointScheme& scheme, std::int64_t t,
                          const OracleOptions& options) {
  return binom(t + 2, 2) - hilbert_oracle(scheme, t, options);
}

std::vector<std::int64_t> hilbert_oracle_values(const FatPointScheme& scheme,
                                                std::int64_t max_degree,
                                                const OracleOptions& options) {
  const auto deg = degree(scheme);
  std::vector<std::int64_t> out;
  with_ops(scheme.field, [&](const auto& ops) {
    for (std::int64_t t = 0; t <= max_degree; ++t) {
      out.push_back(condition_rank(scheme, t, ops, options));
      if (out.back() == deg) break;
    }
  });
  return out;
}

std::int64_t nu_oracle(const FatPointScheme& scheme, std::int64_t t,
                       const OracleOptions& options) {
  if (t < 0) throw PreconditionError("nu_oracle needs t >= 0");
  return with_ops(scheme.field, [&](const auto& ops) -> std::int64_t {
    using Work = typename std::decay_t<decltype(ops)>::Work;
    const auto source = ops.kernel_of(ops.lift(condition_matrix(scheme, t, ops.field, options)));
    const auto target_basis = monomial_basis(t + 1);
    const auto target_dim = static_cast<std::int64_t>(target_basis.size()) -
                            condition_rank(scheme, t + 1, ops, options);
    if (source.cols() == 0) return target_dim;

    std::map<Monomial, Index> position;
    for (std::size_t c = 0; c < target_basis.size(); ++c)
      position[target_basis[c]] = static_cast<Index>(c);
    const auto source_basis = monomial_basis(t);

    MatrixX<Work> image = MatrixX<Work>::Zero(3 * source.cols(), static_cast<Index>(target_basis.size()));
    for (Index g = 0; g < source.cols(); ++g)
      for (int var = 0; var < 3; ++var) {
        const Index row = 3 * g + var;
        for (std::size_t c = 0; c < source_basis.size(); ++c) {
          auto shifted = source_basis[c];
          ++shifted[static_cast<std::size_t>(var)];
          image(row, position.at(shifted)) = source(static_cast<Index>(c), g);
        }
      }
    return target_dim - ops.rank_of(std::move(image));
  });
}

} // namespace fatpoints
