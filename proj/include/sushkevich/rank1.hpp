#ifndef SUSHKEVICH_RANK1_HPP_
#define SUSHKEVICH_RANK1_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cayley.hpp"
#include "error.hpp"
#include "field.hpp"

namespace sushkevich {

  template <Field F>
  using Vector = std::vector<typename F::value_type>;

  template <Field F>
  using Dense = std::vector<Vector<F>>;

  template <Field F>
  [[nodiscard]] bool is_zero_vector(F const& field, Vector<F> const& v) {
    return std::all_of(v.begin(), v.end(),
                       [&field](auto const& x) { return field.is_zero(x); });
  }

  template <Field F>
  [[nodiscard]] typename F::value_type dot(F const&         field,
                                           Vector<F> const& u,
                                           Vector<F> const& v) {
    if (u.size() != v.size()) {
      throw Error("dot: dimension mismatch");
    }
    auto sum = field.zero();
    for (std::size_t i = 0; i < u.size(); ++i) {
      sum = field.add(sum, field.mul(u[i], v[i]));
    }
    return sum;
  }

  template <Field F>
  [[nodiscard]] Vector<F> scale(F const&                     field,
                                typename F::value_type const& lambda,
                                Vector<F>                    v) {
    for (auto& x : v) {
      x = field.mul(lambda, x);
    }
    return v;
  }

  // An n×n matrix of rank ≤ 1, stored as col·rowᵀ with the first nonzero
  // coordinate of col equal to 1. The representation is unique, so equality
  // of values is equality of the dense matrices.
  template <Field F>
  class Rank1Matrix {
   public:
    using value_type = typename F::value_type;

    static Rank1Matrix zero(F field, std::size_t n) {
      Rank1Matrix m(std::move(field), n);
      return m;
    }

    [[nodiscard]] F const& field() const noexcept {
      return _field;
    }
    [[nodiscard]] std::size_t dimension() const noexcept {
      return _n;
    }
    [[nodiscard]] bool is_zero() const noexcept {
      return _zero;
    }
    // Empty for the zero matrix.
    [[nodiscard]] Vector<F> const& col() const noexcept {
      return _col;
    }
    [[nodiscard]] Vector<F> const& row() const noexcept {
      return _row;
    }

    bool operator==(Rank1Matrix const& other) const {
      return std::tie(_field, _n, _zero, _col, _row)
             == std::tie(other._field, other._n, other._zero, other._col,
                         other._row);
    }
    bool operator<(Rank1Matrix const& other) const {
      return std::tie(_n, _zero, _col, _row)
             < std::tie(other._n, other._zero, other._col, other._row);
    }
    bool operator!=(Rank1Matrix const& other) const {
      return !(*this == other);
    }
    bool operator>(Rank1Matrix const& other) const {
      return other < *this;
    }
    bool operator<=(Rank1Matrix const& other) const {
      return !(other < *this);
    }
    bool operator>=(Rank1Matrix const& other) const {
      return !(*this < other);
    }

    template <Field G>
    friend Rank1Matrix<G> make_rank1(G field, Vector<G> x, Vector<G> y);

   private:
    Rank1Matrix(F field, std::size_t n)
        : _field(std::move(field)), _n(n), _zero(true) {}

    F           _field;
    std::size_t _n;
    bool        _zero;
    Vector<F>   _col;
    Vector<F>   _row;
  };

  // x·yᵀ in canonical form: x is scaled so its first nonzero coordinate is 1
  // and y absorbs the scalar. Zero if x or y is zero.
  template <Field F>
  [[nodiscard]] Rank1Matrix<F> make_rank1(F field, Vector<F> x, Vector<F> y) {
    if (x.size() != y.size()) {
      throw Error("make_rank1: dimension mismatch ("
                  + std::to_string(x.size()) + " vs "
                  + std::to_string(y.size()) + ")");
    }
    std::size_t const n = x.size();
    Rank1Matrix<F>    m(field, n);
    if (is_zero_vector(field, x) || is_zero_vector(field, y)) {
      return m;
    }
    auto pivot = *std::find_if(x.begin(), x.end(), [&field](auto const& c) {
      return !field.is_zero(c);
    });
    m._zero = false;
    m._col  = scale(field, field.inv(pivot), std::move(x));
    m._row  = scale(field, pivot, std::move(y));
    return m;
  }

  // (x₁y₁ᵀ)(x₂y₂ᵀ) = (y₁·x₂)·x₁y₂ᵀ
  template <Field F>
  [[nodiscard]] Rank1Matrix<F> multiply(Rank1Matrix<F> const& m1,
                                        Rank1Matrix<F> const& m2) {
    if (m1.dimension() != m2.dimension()) {
      throw Error("multiply: dimension mismatch");
    }
    if (!(m1.field() == m2.field())) {
      throw Error("multiply: field mismatch");
    }
    auto const& field = m1.field();
    if (m1.is_zero() || m2.is_zero()) {
      return Rank1Matrix<F>::zero(field, m1.dimension());
    }
    auto lambda = dot(field, m1.row(), m2.col());
    return make_rank1(field, m1.col(), scale(field, lambda, m2.row()));
  }

  template <Field F>
  [[nodiscard]] Dense<F> to_dense(Rank1Matrix<F> const& m) {
    auto const&       field = m.field();
    std::size_t const n     = m.dimension();
    Dense<F>          d(n, Vector<F>(n, field.zero()));
    if (!m.is_zero()) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          d[i][j] = field.mul(m.col()[i], m.row()[j]);
        }
      }
    }
    return d;
  }

  // Rejects non-square input and matrices of rank ≥ 2.
  template <Field F>
  [[nodiscard]] Rank1Matrix<F> from_dense(F field, Dense<F> const& d) {
    std::size_t const n = d.size();
    for (auto const& row : d) {
      if (row.size() != n) {
        throw Error("from_dense: matrix is not square");
      }
    }
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = 0; i < n && !pivot; ++i) {
      for (std::size_t j = 0; j < n && !pivot; ++j) {
        if (!field.is_zero(d[i][j])) {
          pivot = {i, j};
        }
      }
    }
    if (!pivot) {
      return Rank1Matrix<F>::zero(field, n);
    }
    auto [pi, pj] = *pivot;
    Vector<F> x(n);
    Vector<F> y(n);
    auto      inv = field.inv(d[pi][pj]);
    for (std::size_t k = 0; k < n; ++k) {
      x[k] = d[k][pj];
      y[k] = field.mul(d[pi][k], inv);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!field.is_zero(field.sub(d[i][j], field.mul(x[i], y[j])))) {
          throw Error("from_dense: matrix has rank ≥ 2");
        }
      }
    }
    return make_rank1(std::move(field), std::move(x), std::move(y));
  }

  // e = (b·a)⁻¹·a·bᵀ, the identity of the group on the pair (a, b).
  template <Field F>
  [[nodiscard]] Rank1Matrix<F> idempotent(F field, Vector<F> const& a, Vector<F> const& b) {
    auto pairing = dot(field, b, a);
    if (field.is_zero(pairing)) {
      throw Error("idempotent: b·a = 0, no idempotent on this pair");
    }
    return make_rank1(field, scale(field, field.inv(pairing), a), b);
  }

  ////////////////////////////////////////////////////////////////////////
  // The groups {λ·a·bᵀ : λ ≠ 0}
  ////////////////////////////////////////////////////////////////////////

  template <Field F>
  class GabGroup {
   public:
    using value_type = typename F::value_type;

    GabGroup(F field, Vector<F> a, Vector<F> b)
        : _field(std::move(field)), _a(std::move(a)), _b(std::move(b)) {
      if (_a.size() != _b.size()) {
        throw Error("gab_group: dimension mismatch");
      }
      _pairing = dot(_field, _b, _a);
      if (_field.is_zero(_pairing)) {
        throw Error("gab_group: pairing b·a is zero");
      }
    }

    [[nodiscard]] F const& field() const noexcept {
      return _field;
    }
    [[nodiscard]] Vector<F> const& a() const noexcept {
      return _a;
    }
    [[nodiscard]] Vector<F> const& b() const noexcept {
      return _b;
    }
    [[nodiscard]] value_type const& pairing() const noexcept {
      return _pairing;
    }

    // λ·a·bᵀ
    [[nodiscard]] Rank1Matrix<F> element(value_type const& lambda) const {
      if (_field.is_zero(lambda)) {
        throw Error("gab_group: λ must be nonzero");
      }
      return make_rank1(_field, scale(_field, lambda, _a), _b);
    }

    [[nodiscard]] Rank1Matrix<F> identity() const {
      return idempotent(_field, _a, _b);
    }

    // The scalar λ with m = λ·a·bᵀ, if m lies in the group.
    [[nodiscard]] std::optional<value_type> coordinate(Rank1Matrix<F> const& m) const {
      if (m.is_zero() || m.dimension() != _a.size()) {
        return std::nullopt;
      }
      auto unit = element(_field.one());
      if (m.col() != unit.col()) {
        return std::nullopt;
      }
      // row(m) = λ·row(unit)
      std::size_t k = 0;
      while (_field.is_zero(unit.row()[k])) {
        ++k;
      }
      auto lambda = _field.mul(m.row()[k], _field.inv(unit.row()[k]));
      if (scale(_field, lambda, unit.row()) != m.row()) {
        return std::nullopt;
      }
      return lambda;
    }

    [[nodiscard]] bool contains(Rank1Matrix<F> const& m) const {
      return coordinate(m).has_value();
    }

    // λ·a·bᵀ ↦ λ·(b·a), which is the trace of the matrix.
    [[nodiscard]] value_type phi(Rank1Matrix<F> const& m) const {
      if (!contains(m)) {
        throw Error("gab_group: matrix is not an element of the group");
      }
      return dot(_field, m.col(), m.row());
    }

   private:
    F          _field;
    Vector<F>  _a;
    Vector<F>  _b;
    value_type _pairing;
  };

  template <Field F>
  [[nodiscard]] GabGroup<F> gab_group(F field, Vector<F> a, Vector<F> b) {
    return GabGroup<F>(std::move(field), std::move(a), std::move(b));
  }

  struct GabCertificate {
    std::size_t order        = 0;
    bool        closed       = false;  // products stay in the group
    bool        identity     = false;  // idempotent(a, b) is a two-sided identity
    bool        inverses     = false;
    bool        homomorphism = false;  // phi(MN) = phi(M)·phi(N)
    bool        bijective    = false;  // phi is a bijection onto the scalars
    bool        cyclic       = false;  // some element has order |G|

    [[nodiscard]] bool isomorphism() const noexcept {
      return closed && identity && inverses && homomorphism && bijective;
    }
  };

  // Checks the group axioms for {λ·a·bᵀ : λ ∈ scalars} and that phi maps it
  // bijectively and multiplicatively onto `scalars`. With `scalars` = F*
  // (finite F) the check is exhaustive.
  template <Field F>
  [[nodiscard]] GabCertificate
  certify(GabGroup<F> const& g, std::vector<typename F::value_type> const& scalars) {
    auto const&                 field = g.field();
    std::vector<Rank1Matrix<F>> elements;
    for (auto const& lambda : scalars) {
      elements.push_back(g.element(lambda));
    }
    GabCertificate c;
    c.order = elements.size();

    auto e     = g.identity();
    c.identity = g.contains(e) && multiply(e, e) == e;
    for (auto const& m : elements) {
      c.identity = c.identity && multiply(e, m) == m && multiply(m, e) == m;
    }

    auto index_of = [&elements](Rank1Matrix<F> const& m) -> std::optional<std::size_t> {
      auto it = std::find(elements.begin(), elements.end(), m);
      if (it == elements.end()) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - elements.begin());
    };

    c.closed       = true;
    c.homomorphism = true;
    std::vector<std::vector<std::size_t>> table(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t j = 0; j < elements.size(); ++j) {
        auto prod = multiply(elements[i], elements[j]);
        auto k    = index_of(prod);
        if (!k) {
          c.closed = false;
        }
        table[i].push_back(k.value_or(elements.size()));
        if (!g.contains(prod)
            || g.phi(prod) != field.mul(g.phi(elements[i]), g.phi(elements[j]))) {
          c.homomorphism = false;
        }
      }
    }

    c.inverses = c.identity;
    for (auto const& m : elements) {
      bool found = false;
      for (auto const& n : elements) {
        if (multiply(m, n) == e && multiply(n, m) == e) {
          found = true;
          break;
        }
      }
      c.inverses = c.inverses && found;
    }

    // phi onto `scalars`: injective on elements and image ⊆ scalars with
    // equal sizes.
    std::vector<typename F::value_type> images;
    for (auto const& m : elements) {
      images.push_back(g.phi(m));
    }
    auto sorted_images  = images;
    auto sorted_scalars = scalars;
    std::sort(sorted_images.begin(), sorted_images.end());
    std::sort(sorted_scalars.begin(), sorted_scalars.end());
    c.bijective = std::adjacent_find(sorted_images.begin(), sorted_images.end())
                      == sorted_images.end()
                  && sorted_images == sorted_scalars;

    if (c.closed) {
      auto ei = index_of(e);
      for (std::size_t i = 0; i < elements.size() && !c.cyclic && ei; ++i) {
        std::size_t order = 1;
        std::size_t power = i;
        while (power != *ei && order <= elements.size()) {
          power = table[power][i];
          ++order;
        }
        c.cyclic = order == elements.size();
      }
    }
    return c;
  }

  // Exhaustive certificate over F* for a prime field.
  [[nodiscard]] inline GabCertificate certify(GabGroup<PrimeField> const& g) {
    std::vector<std::uint64_t> units;
    for (std::uint64_t k = 1; k < g.field().characteristic(); ++k) {
      units.push_back(k);
    }
    return certify(g, units);
  }

  ////////////////////////////////////////////////////////////////////////
  // The semigroup of all rank ≤ 1 matrices over F_p
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t max_universe_size = 512;

  struct Rank1Subgroup {
    Vector<PrimeField> a;  // column direction
    Vector<PrimeField> b;  // row direction
    std::size_t        order = 0;
    bool               isomorphic = false;  // certified ≅ F_p*
  };

  struct Rank1Universe {
    std::vector<Rank1Matrix<PrimeField>> elements;  // element 0 is zero
    CayleyTable                          table;
    std::size_t                          nonzero     = 0;
    std::size_t                          idempotents = 0;  // including zero
    std::vector<Rank1Subgroup>           subgroups;
  };

  namespace detail {
    // Nonzero vectors of F_p^n whose first nonzero coordinate is 1, in
    // lexicographic order.
    inline std::vector<Vector<PrimeField>> directions(std::size_t n, std::uint64_t p) {
      std::vector<Vector<PrimeField>> out;
      Vector<PrimeField>              v(n, 0);
      while (true) {
        auto first = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
        if (first != v.end() && *first == 1) {
          out.push_back(v);
        }
        std::size_t k = n;
        while (k > 0 && v[k - 1] == p - 1) {
          v[--k] = 0;
        }
        if (k == 0) {
          break;
        }
        ++v[k - 1];
      }
      return out;
    }

    inline std::vector<Vector<PrimeField>> nonzero_vectors(std::size_t n, std::uint64_t p) {
      std::vector<Vector<PrimeField>> out;
      Vector<PrimeField>              v(n, 0);
      while (true) {
        std::size_t k = n;
        while (k > 0 && v[k - 1] == p - 1) {
          v[--k] = 0;
        }
        if (k == 0) {
          break;
        }
        ++v[k - 1];
        out.push_back(v);
      }
      return out;
    }
  }  // namespace detail

  // Number of nonzero n×n matrices of rank 1 over F_p:
  // (pⁿ − 1)/(p − 1) column directions times (pⁿ − 1) nonzero rows.
  [[nodiscard]] inline std::size_t rank1_count(std::size_t n, std::uint64_t p) {
    std::size_t pn = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (pn > (std::size_t{1} << 40)) {
        return static_cast<std::size_t>(-1);
      }
      pn *= p;
    }
    return (pn - 1) / (p - 1) * (pn - 1);
  }

  [[nodiscard]] inline Rank1Universe rank1_universe(std::size_t n, std::uint64_t p) {
    PrimeField field(p);
    if (n == 0) {
      throw Error("rank1_universe: dimension must be positive");
    }
    std::size_t const count = rank1_count(n, p);
    if (count == static_cast<std::size_t>(-1) || count + 1 > max_universe_size) {
      throw CapExceeded("rank1_universe: more than "
                        + std::to_string(max_universe_size)
                        + " matrices of rank ≤ 1");
    }
    Rank1Universe u;
    u.elements.push_back(Rank1Matrix<PrimeField>::zero(field, n));
    auto const cols = detail::directions(n, p);
    auto const rows = detail::nonzero_vectors(n, p);
    for (auto const& c : cols) {
      for (auto const& r : rows) {
        u.elements.push_back(make_rank1(field, c, r));
      }
    }
    u.nonzero = u.elements.size() - 1;

    std::map<Rank1Matrix<PrimeField>, std::size_t> index;
    for (std::size_t i = 0; i < u.elements.size(); ++i) {
      index.emplace(u.elements[i], i);
    }
    u.table = CayleyTable::from_function(
        u.elements.size(), [&](std::size_t i, std::size_t j) {
          return index.at(multiply(u.elements[i], u.elements[j]));
        });
    for (std::size_t i = 0; i < u.elements.size(); ++i) {
      if (u.table.at(i, i) == i) {
        ++u.idempotents;
      }
    }
    for (auto const& a : cols) {
      for (auto const& b : cols) {
        if (field.is_zero(dot(field, b, a))) {
          continue;
        }
        auto cert = certify(gab_group(field, a, b));
        u.subgroups.push_back({a, b, cert.order, cert.isomorphism()});
      }
    }
    return u;
  }

}  // namespace sushkevich

#endif  // SUSHKEVICH_RANK1_HPP_
