#include "raag/quadratic.hpp"

#include <algorithm>
#include <map>

#include "raag/errors.hpp"
#include "raag/graph_core.hpp"

namespace raag {

namespace {

template <class Field>
SparseVec<Field> convert(const Field& f, const SparseVec<RationalField>& row) {
  SparseVec<Field> out;
  out.reserve(row.size());
  for (const auto& [c, q] : row) out.emplace_back(c, f.from_rational(q));
  return out;
}

template <class Field>
HilbertSeries hilbert_over(const Field& f, const QuadraticAlgebra& a,
                           int max_degree, std::size_t memory_limit) {
  using Vec = SparseVec<Field>;
  const std::uint32_t m = a.m;
  HilbertSeries h{1};
  if (max_degree == 0) return h;
  h.push_back(m);
  std::vector<Vec> rel;
  for (const auto& r : a.relations) rel.push_back(convert(f, r));

  // nf_prev[k]: normal form in A_{n-1} of the k-th candidate of A_{n-2}⊗V,
  // i.e. of (basis element k / m) * e_(k % m). For n-1 = 1 this is e_k.
  std::vector<Vec> nf_prev(m);
  for (std::uint32_t i = 0; i < m; ++i) nf_prev[i] = {{i, f.from_int(1)}};
  std::uint64_t dim_prev2 = 1;  // dim A_{n-2}
  std::uint64_t dim_prev = m;   // dim A_{n-1}

  for (int n = 2; n <= max_degree; ++n) {
    const std::uint64_t cand64 = dim_prev * m;
    if (cand64 > UINT32_MAX)
      throw ResourceError("degree " + std::to_string(n) +
                          " has too many candidate monomials");
    const auto cand = static_cast<std::uint32_t>(cand64);
    Echelon<Field> ech(f, cand, memory_limit,
                       "computing degree " + std::to_string(n));
    std::map<std::uint32_t, typename Field::value> acc;
    for (std::uint64_t u = 0; u < dim_prev2; ++u)
      for (const auto& r : rel) {
        acc.clear();
        for (const auto& [coord, rij] : r) {
          const std::uint32_t i = coord / m;
          const std::uint32_t j = coord % m;
          for (const auto& [b, cb] : nf_prev[u * m + i]) {
            auto [it, fresh] = acc.try_emplace(b * m + j, f.zero());
            f.sub_mul(it->second, f.neg(rij), cb);
          }
        }
        Vec row;
        for (auto& [c, x] : acc)
          if (!f.is_zero(x)) row.emplace_back(c, std::move(x));
        if (!row.empty()) ech.add(row);
      }
    const auto rref = ech.rref();
    std::vector<std::int64_t> new_index(cand, -1);
    std::uint32_t dim = 0;
    for (std::uint32_t c = 0; c < cand; ++c)
      if (!ech.is_pivot(c)) new_index[c] = dim++;
    h.push_back(dim);
    if (n == max_degree) break;
    std::vector<Vec> nf(cand);
    for (std::uint32_t c = 0; c < cand; ++c)
      if (new_index[c] >= 0)
        nf[c] = {{static_cast<std::uint32_t>(new_index[c]), f.from_int(1)}};
    for (const auto& row : rref) {
      Vec v;
      for (std::size_t k = 1; k < row.size(); ++k)
        v.emplace_back(static_cast<std::uint32_t>(new_index[row[k].first]),
                       f.neg(row[k].second));
      nf[row.front().first] = std::move(v);
    }
    nf_prev = std::move(nf);
    dim_prev2 = dim_prev;
    dim_prev = dim;
  }
  return h;
}

}  // namespace

std::vector<SparseVec<RationalField>> canonical_span(
    std::uint32_t ncols, const std::vector<SparseVec<RationalField>>& rows) {
  Echelon<RationalField> ech(RationalField{}, ncols, default_memory_limit(),
                             "canonicalizing relations");
  for (const auto& r : rows) ech.add(r);
  return ech.rref();
}

QuadraticAlgebra make_quadratic_algebra(
    std::uint32_t m, const std::vector<SparseVec<RationalField>>& rows) {
  for (const auto& r : rows)
    for (const auto& [c, q] : r)
      if (c >= m * m) throw InputError("relation coordinate out of range");
  return {m, canonical_span(m * m, rows)};
}

QuadraticAlgebra enveloping_quadratic(const QuadLiePresentation& l) {
  if (!l.linear_relations.empty())
    throw PreconditionError(
        "presentation has linear relations; call eliminate_linear first");
  const auto m = static_cast<std::uint32_t>(l.size());
  std::vector<SparseVec<RationalField>> rows;
  for (const auto& rel : l.quadratic_relators) {
    std::map<std::uint32_t, mpq_class> acc;
    for (const auto& t : rel) {
      acc[t.i * m + t.j] += t.q;
      acc[t.j * m + t.i] -= t.q;
    }
    SparseVec<RationalField> row;
    for (auto& [c, q] : acc)
      if (sgn(q) != 0) row.emplace_back(c, q);
    rows.push_back(std::move(row));
  }
  return make_quadratic_algebra(m, rows);
}

HilbertSeries algebra_hilbert(const QuadraticAlgebra& a, int max_degree,
                              const ComputeOptions& opts) {
  if (max_degree < 0) throw InputError("degree bound must be nonnegative");
  if (opts.fast) {
    const auto [p, q] = random_prime_pair();
    try {
      auto x = hilbert_over(ModPrimeField(p), a, max_degree, opts.memory_limit);
      auto y = hilbert_over(ModPrimeField(q), a, max_degree, opts.memory_limit);
      if (x == y) return x;
    } catch (const InternalError&) {
    }
  }
  return hilbert_over(RationalField{}, a, max_degree, opts.memory_limit);
}

QuadraticAlgebra quadratic_dual(const QuadraticAlgebra& a) {
  const std::uint32_t n = a.m * a.m;
  auto perp = null_space_from_rref(RationalField{}, a.relations, n);
  return {a.m, canonical_span(n, perp)};
}

NumericKoszulResult koszul_numeric_test(const HilbertSeries& ha,
                                        const HilbertSeries& hdual,
                                        int max_degree) {
  if (max_degree < 1) throw InputError("degree must be at least 1");
  const auto need = static_cast<std::size_t>(max_degree) + 1;
  if (ha.size() < need || hdual.size() < need)
    throw InputError("Hilbert series shorter than degree " +
                     std::to_string(max_degree));
  for (int n = 1; n <= max_degree; ++n) {
    __int128 sum = 0;
    for (int i = 0; i <= n; ++i) {
      const __int128 term = static_cast<__int128>(hdual[i]) * ha[n - i];
      sum += (i % 2 == 0) ? term : -term;
    }
    if (sum != 0) return {false, n};
  }
  return {true, std::nullopt};
}

HilbertSeries inverse_clique_series(const std::vector<long long>& clique,
                                    int max_degree) {
  if (clique.empty() || clique[0] != 1)
    throw InputError("clique polynomial must have constant term 1");
  HilbertSeries r(static_cast<std::size_t>(max_degree) + 1, 0);
  r[0] = 1;
  for (int n = 1; n <= max_degree; ++n) {
    __int128 sum = 0;
    for (int k = 1; k <= n && k < static_cast<int>(clique.size()); ++k) {
      const __int128 term = static_cast<__int128>(clique[k]) * r[n - k];
      sum += (k % 2 == 0) ? -term : term;
    }
    if (sum > INT64_MAX || sum < INT64_MIN)
      throw ResourceError("series coefficient overflow at degree " +
                          std::to_string(n));
    r[n] = static_cast<long long>(sum);
  }
  return r;
}

FrobergResult froberg_check(const Graph& g, int max_degree,
                            const ComputeOptions& opts) {
  if (max_degree < 1) throw InputError("degree must be at least 1");
  FrobergResult out;
  out.lhs = algebra_hilbert(
      enveloping_quadratic(lie_presentation(g, LieVariant::raag())), max_degree,
      opts);
  out.rhs = inverse_clique_series(clique_polynomial(g), max_degree);
  out.pass = out.lhs == out.rhs;
  return out;
}

}  // namespace raag
