#include "raag/lie.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <unordered_map>

#include "raag/errors.hpp"

namespace raag {

LieRelator normalize_relator(std::vector<BracketTerm> terms) {
  for (auto& t : terms)
    if (t.i > t.j) {
      std::swap(t.i, t.j);
      t.q = -t.q;
    }
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });
  LieRelator out;
  for (auto& t : terms) {
    if (t.i == t.j) continue;
    if (!out.empty() && out.back().i == t.i && out.back().j == t.j)
      out.back().q += t.q;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const BracketTerm& t) { return sgn(t.q) == 0; });
  return out;
}

QuadLiePresentation lie_from_group(const Graph& g, const GroupPresentation& p) {
  QuadLiePresentation l;
  for (const auto& c : p.generators) l.generators.push_back(format_generator(g, c));
  for (const auto& r : p.relators) {
    if (r.shape == Relator::Shape::Product) {
      LinearRelation lin;
      for (auto i : r.left) lin.emplace_back(i, 1);
      l.linear_relations.push_back(std::move(lin));
      continue;
    }
    std::vector<BracketTerm> terms;
    for (auto i : r.left)
      for (auto j : r.right) terms.push_back({i, j, 1});
    auto rel = normalize_relator(std::move(terms));
    if (!rel.empty()) l.quadratic_relators.push_back(std::move(rel));
  }
  return l;
}

QuadLiePresentation lie_presentation(const Graph& g, const LieVariant& variant) {
  switch (variant.kind) {
    case LieVariant::Kind::PAut:
      return lie_from_group(g, paut_presentation(g));
    case LieVariant::Kind::POut:
      return lie_from_group(g, pout_presentation(g));
    case LieVariant::Kind::PAutLike:
      if (!variant.omega) throw InputError("PAut-like variant needs a partition");
      return lie_from_group(g, paut_like_presentation(g, *variant.omega));
    case LieVariant::Kind::Raag: {
      QuadLiePresentation l;
      l.generators = g.names();
      for (auto [a, b] : g.edges()) l.quadratic_relators.push_back({{a, b, 1}});
      return l;
    }
  }
  throw InternalError("unknown Lie variant");
}

QuadLiePresentation eliminate_linear(const QuadLiePresentation& l) {
  if (l.linear_relations.empty()) return l;
  const auto m = static_cast<std::uint32_t>(l.size());
  // Reversed columns make the leading pivot the canonically last generator.
  auto rev = [m](std::uint32_t c) { return m - 1 - c; };
  Echelon<RationalField> ech(RationalField{}, m, default_memory_limit(),
                             "eliminating linear relations");
  for (const auto& rel : l.linear_relations) {
    SparseVec<RationalField> row;
    for (const auto& [i, q] : rel) {
      if (i >= m) throw InputError("linear relation names a missing generator");
      row.emplace_back(rev(i), q);
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    ech.add(row);
  }
  // expr[i]: generator i written in the surviving generators (old indices)
  std::vector<LinearRelation> expr(m);
  std::vector<bool> pivot(m, false);
  for (const auto& row : ech.rref()) {
    const std::uint32_t p = rev(row.front().first);
    pivot[p] = true;
    for (std::size_t k = 1; k < row.size(); ++k)
      expr[p].emplace_back(rev(row[k].first), -row[k].second);
  }
  std::vector<std::uint32_t> new_index(m, 0);
  QuadLiePresentation out;
  for (std::uint32_t i = 0; i < m; ++i) {
    if (pivot[i]) continue;
    expr[i] = {{i, 1}};
    new_index[i] = static_cast<std::uint32_t>(out.generators.size());
    out.generators.push_back(l.generators[i]);
  }
  for (const auto& rel : l.quadratic_relators) {
    std::vector<BracketTerm> terms;
    for (const auto& t : rel)
      for (const auto& [a, ca] : expr[t.i])
        for (const auto& [b, cb] : expr[t.j])
          terms.push_back({new_index[a], new_index[b], t.q * ca * cb});
    auto r = normalize_relator(std::move(terms));
    if (!r.empty()) out.quadratic_relators.push_back(std::move(r));
  }
  return out;
}

long long witt_number(long long m, int n) {
  if (n < 1) throw InputError("degree must be at least 1");
  auto mobius = [](int d) {
    int mu = 1;
    for (int p = 2; p * p <= d; ++p)
      if (d % p == 0) {
        d /= p;
        if (d % p == 0) return 0;
        mu = -mu;
      }
    return d > 1 ? -mu : mu;
  };
  __int128 sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    __int128 pw = 1;
    for (int k = 0; k < n / d; ++k) {
      pw *= m;
      if (pw > (__int128{1} << 100))
        throw ResourceError("Witt number overflows at degree " +
                            std::to_string(n));
    }
    sum += mobius(d) * pw;
  }
  return static_cast<long long>(sum / n);
}

std::vector<std::uint64_t> lyndon_words(std::uint32_t m, int n) {
  std::vector<std::uint64_t> out;
  if (m == 0 || n < 1) return out;
  std::uint64_t limit = 1;
  for (int k = 0; k < n; ++k)
    if (__builtin_mul_overflow(limit, std::uint64_t{m}, &limit))
      throw ResourceError("words of length " + std::to_string(n) + " over " +
                          std::to_string(m) + " letters do not fit 64 bits");
  // Duval's generation of all Lyndon words of length <= n in lex order.
  std::vector<std::uint32_t> w{0};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == n) {
      std::uint64_t code = 0;
      for (auto a : w) code = code * m + a;
      out.push_back(code);
    }
    const std::size_t k = w.size();
    while (static_cast<int>(w.size()) < n) w.push_back(w[w.size() - k]);
    while (!w.empty() && w.back() == m - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

namespace {

using Poly = std::vector<std::pair<std::uint64_t, long long>>;  // sorted words

long long checked(__int128 x) {
  if (x > INT64_MAX || x < INT64_MIN)
    throw ResourceError("free Lie coefficient overflow");
  return static_cast<long long>(x);
}

// Lyndon bases of the free Lie algebra up to some degree, with the standard
// bracketings expanded in the free associative algebra and the table of
// brackets [P_w, x] written back in the Lyndon basis.
class FreeLieTables {
 public:
  FreeLieTables(std::uint32_t m, int max_degree) : m_(m) {
    pow_.push_back(1);
    for (int n = 1; n <= max_degree; ++n) pow_.push_back(pow_.back() * m);
    words_.resize(max_degree + 1);
    index_.resize(max_degree + 1);
    expansion_.resize(max_degree + 1);
    for (int n = 1; n <= max_degree; ++n) {
      words_[n] = lyndon_words(m, n);
      for (std::uint32_t i = 0; i < words_[n].size(); ++i)
        index_[n].emplace(words_[n][i], i);
      for (auto w : words_[n]) expansion_[n].push_back(expand(w, n));
    }
    bracket_.resize(max_degree);
    for (int n = 1; n < max_degree; ++n) {
      bracket_[n].reserve(words_[n].size() * m);
      for (std::uint32_t i = 0; i < words_[n].size(); ++i)
        for (std::uint32_t x = 0; x < m; ++x)
          bracket_[n].push_back(decompose(bracket_with_letter(i, n, x), n + 1));
    }
  }

  std::size_t count(int n) const { return words_[n].size(); }
  std::uint32_t index(int n, std::uint64_t w) const { return index_[n].at(w); }
  // [P_w, x] for the i-th Lyndon word of degree n.
  const std::vector<std::pair<std::uint32_t, long long>>& bracket(
      int n, std::uint32_t i, std::uint32_t x) const {
    return bracket_[n][static_cast<std::size_t>(i) * m_ + x];
  }

 private:
  Poly product(const Poly& a, const Poly& b, int len_b) const {
    std::map<std::uint64_t, __int128> acc;
    for (const auto& [u, cu] : a)
      for (const auto& [v, cv] : b)
        acc[u * pow_[len_b] + v] += static_cast<__int128>(cu) * cv;
    Poly out;
    for (const auto& [w, c] : acc)
      if (c != 0) out.emplace_back(w, checked(c));
    return out;
  }

  static Poly difference(const Poly& a, const Poly& b) {
    std::map<std::uint64_t, long long> acc;
    for (const auto& [w, c] : a) acc[w] += c;
    for (const auto& [w, c] : b) acc[w] -= c;
    Poly out;
    for (const auto& [w, c] : acc)
      if (c != 0) out.emplace_back(w, c);
    return out;
  }

  Poly expand(std::uint64_t w, int n) const {
    if (n == 1) return {{w, 1}};
    // Standard factorization: v is the longest proper Lyndon suffix.
    for (int k = n - 1; k >= 1; --k) {
      const std::uint64_t v = w % pow_[k];
      auto it = index_[k].find(v);
      if (it == index_[k].end()) continue;
      const std::uint64_t u = w / pow_[k];
      const Poly& pu = expansion_[n - k][index_[n - k].at(u)];
      const Poly& pv = expansion_[k][it->second];
      return difference(product(pu, pv, k), product(pv, pu, n - k));
    }
    throw InternalError("Lyndon word without standard factorization");
  }

  Poly bracket_with_letter(std::uint32_t i, int n, std::uint32_t x) const {
    const Poly px{{x, 1}};
    const Poly& pw = expansion_[n][i];
    return difference(product(pw, px, 1), product(px, pw, n));
  }

  // Writes a Lie polynomial of degree n in the Lyndon basis: its least word
  // is always Lyndon and P_w = w + larger words.
  std::vector<std::pair<std::uint32_t, long long>> decompose(const Poly& f,
                                                             int n) const {
    std::map<std::uint64_t, long long> acc(f.begin(), f.end());
    std::vector<std::pair<std::uint32_t, long long>> out;
    while (!acc.empty()) {
      auto it = acc.begin();
      if (it->second == 0) {
        acc.erase(it);
        continue;
      }
      const std::uint64_t w = it->first;
      const long long c = it->second;
      auto idx = index_[n].find(w);
      if (idx == index_[n].end())
        throw InternalError("leading word of a Lie element is not Lyndon");
      for (const auto& [u, cu] : expansion_[n][idx->second]) {
        long long& slot = acc[u];
        slot = checked(static_cast<__int128>(slot) -
                       static_cast<__int128>(c) * cu);
        if (slot == 0) acc.erase(u);
      }
      out.emplace_back(idx->second, c);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::uint32_t m_;
  std::vector<std::uint64_t> pow_;
  std::vector<std::vector<std::uint64_t>> words_;
  std::vector<std::unordered_map<std::uint64_t, std::uint32_t>> index_;
  std::vector<std::vector<Poly>> expansion_;
  std::vector<std::vector<std::vector<std::pair<std::uint32_t, long long>>>>
      bracket_;
};

template <class Field>
GradedDims dims_over(const Field& f, const FreeLieTables& t,
                     const QuadLiePresentation& l, int max_degree,
                     std::size_t memory_limit) {
  const auto m = static_cast<std::uint32_t>(l.size());
  GradedDims dims{static_cast<long long>(m)};
  if (max_degree == 1) return dims;

  auto ideal = std::make_unique<Echelon<Field>>(
      f, static_cast<std::uint32_t>(t.count(2)), memory_limit,
      "computing degree 2");
  for (const auto& rel : l.quadratic_relators) {
    SparseVec<Field> row;
    for (const auto& term : rel) {
      if (term.i >= m || term.j >= m || term.i >= term.j)
        throw InputError("malformed Lie relator");
      row.emplace_back(t.index(2, std::uint64_t{term.i} * m + term.j),
                       f.from_rational(term.q));
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    ideal->add(row);
  }
  dims.push_back(static_cast<long long>(t.count(2) - ideal->rank()));

  for (int n = 2; n < max_degree; ++n) {
    auto next = std::make_unique<Echelon<Field>>(
        f, static_cast<std::uint32_t>(t.count(n + 1)), memory_limit,
        "computing degree " + std::to_string(n + 1));
    std::map<std::uint32_t, typename Field::value> acc;
    for (const auto& b : ideal->rows())
      for (std::uint32_t x = 0; x < m; ++x) {
        acc.clear();
        for (const auto& [w, c] : b)
          for (const auto& [u, cu] : t.bracket(n, w, x)) {
            auto [it, fresh] = acc.try_emplace(u, f.zero());
            f.sub_mul(it->second, c, f.from_int(-cu));
          }
        SparseVec<Field> row;
        for (auto& [u, v] : acc)
          if (!f.is_zero(v)) row.emplace_back(u, std::move(v));
        if (!row.empty()) next->add(row);
      }
    dims.push_back(static_cast<long long>(t.count(n + 1) - next->rank()));
    ideal = std::move(next);
  }
  return dims;
}

}  // namespace

GradedDims graded_dims(const QuadLiePresentation& l, int max_degree,
                       const ComputeOptions& opts) {
  if (max_degree < 1)
    throw InputError("degree bound must be at least 1, got " +
                     std::to_string(max_degree));
  if (!l.linear_relations.empty())
    throw PreconditionError(
        "presentation has linear relations; call eliminate_linear first");
  const auto m = static_cast<std::uint32_t>(l.size());
  if (m == 0) return GradedDims(static_cast<std::size_t>(max_degree), 0);
  const FreeLieTables tables(m, max_degree);
  if (opts.fast) {
    const auto [p, q] = random_prime_pair();
    try {
      auto a = dims_over(ModPrimeField(p), tables, l, max_degree,
                         opts.memory_limit);
      auto b = dims_over(ModPrimeField(q), tables, l, max_degree,
                         opts.memory_limit);
      if (a == b) return a;
    } catch (const InternalError&) {
      // a relator denominator vanished modulo a prime; use exact arithmetic
    }
  }
  return dims_over(RationalField{}, tables, l, max_degree, opts.memory_limit);
}

HilbertSeries pbw_hilbert(const GradedDims& dims, int max_degree) {
  if (max_degree < 0) throw InputError("degree bound must be nonnegative");
  if (static_cast<int>(dims.size()) < max_degree)
    throw InputError("need " + std::to_string(max_degree) +
                     " graded dimensions, got " + std::to_string(dims.size()));
  HilbertSeries h(static_cast<std::size_t>(max_degree) + 1, 0);
  h[0] = 1;
  for (int n = 1; n <= max_degree; ++n) {
    if (dims[n - 1] < 0) throw InputError("negative graded dimension");
    for (long long rep = 0; rep < dims[n - 1]; ++rep)
      for (int i = n; i <= max_degree; ++i)
        if (__builtin_add_overflow(h[i], h[i - n], &h[i]))
          throw ResourceError("Hilbert coefficient overflow at degree " +
                              std::to_string(i));
  }
  return h;
}

}  // namespace raag
