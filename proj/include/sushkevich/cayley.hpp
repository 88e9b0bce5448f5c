#ifndef SUSHKEVICH_CAYLEY_HPP_
#define SUSHKEVICH_CAYLEY_HPP_

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace sushkevich {

  // A finite magma on {0, ..., n-1}; at(i, j) is the index of x_i·x_j.
  class CayleyTable {
   public:
    using index_type = std::uint32_t;

    CayleyTable() = default;

    explicit CayleyTable(std::size_t n) : _n(n), _data(n * n, 0) {}

    CayleyTable(std::size_t n, std::vector<index_type> data)
        : _n(n), _data(std::move(data)) {
      if (_data.size() != n * n) {
        throw Error("table of order " + std::to_string(n) + " needs "
                    + std::to_string(n * n) + " entries, got "
                    + std::to_string(_data.size()));
      }
      for (std::size_t k = 0; k < _data.size(); ++k) {
        if (_data[k] >= n) {
          throw Error("table entry [" + std::to_string(k / n) + "]["
                      + std::to_string(k % n) + "] = "
                      + std::to_string(_data[k]) + " is out of range");
        }
      }
    }

    static CayleyTable from_rows(std::vector<std::vector<index_type>> const& rows) {
      std::vector<index_type> data;
      for (auto const& row : rows) {
        if (row.size() != rows.size()) {
          throw Error("table rows must all have length "
                      + std::to_string(rows.size()));
        }
        data.insert(data.end(), row.begin(), row.end());
      }
      return CayleyTable(rows.size(), std::move(data));
    }

    // Table of an external product on {0, ..., n-1}.
    template <typename F>
    static CayleyTable from_function(std::size_t n, F&& f) {
      std::vector<index_type> data(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          data[i * n + j] = static_cast<index_type>(f(i, j));
        }
      }
      return CayleyTable(n, std::move(data));
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _n;
    }

    [[nodiscard]] std::size_t at(std::size_t i, std::size_t j) const noexcept {
      return _data[i * _n + j];
    }

    void set(std::size_t i, std::size_t j, std::size_t value) {
      _data[i * _n + j] = static_cast<index_type>(value);
    }

    [[nodiscard]] std::vector<index_type> const& data() const noexcept {
      return _data;
    }

    [[nodiscard]] CayleyTable transpose() const {
      return from_function(_n, [this](std::size_t i, std::size_t j) {
        return at(j, i);
      });
    }

    bool operator==(CayleyTable const&) const = default;

   private:
    std::size_t             _n = 0;
    std::vector<index_type> _data;
  };

  ////////////////////////////////////////////////////////////////////////
  // closure
  ////////////////////////////////////////////////////////////////////////

  template <std::totally_ordered T>
  struct Closure {
    std::vector<T> elements;  // discovery order; element i is table index i
    CayleyTable    table;
  };

  // The subsemigroup generated by `generators` under `mult`, numbered in
  // discovery order (generators first, then breadth-first right multiples).
  // Throws CapExceeded if more than `cap` elements appear.
  template <std::totally_ordered T, typename Mult>
  [[nodiscard]] Closure<T> closure(std::vector<T> const& generators,
                                   Mult&&                mult,
                                   std::size_t           cap = 4096) {
    Closure<T>               out;
    std::map<T, std::size_t> index;
    auto                     add = [&](T const& x) {
      auto [it, fresh] = index.emplace(x, out.elements.size());
      if (fresh) {
        if (out.elements.size() == cap) {
          throw CapExceeded("closure exceeds " + std::to_string(cap)
                            + " elements");
        }
        out.elements.push_back(x);
      }
      return it->second;
    };
    std::vector<std::size_t> gens;
    for (auto const& g : generators) {
      gens.push_back(add(g));
    }
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
      for (std::size_t g : gens) {
        add(mult(out.elements[i], out.elements[g]));
      }
    }
    std::size_t const n = out.elements.size();
    out.table           = CayleyTable::from_function(n, [&](std::size_t i,
                                                  std::size_t j) {
      return index.at(mult(out.elements[i], out.elements[j]));
    });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Laws
  ////////////////////////////////////////////////////////////////////////

  [[nodiscard]] inline bool is_associative(CayleyTable const& t) {
    std::size_t const n = t.size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t const xy = t.at(x, y);
        for (std::size_t z = 0; z < n; ++z) {
          if (t.at(xy, z) != t.at(x, t.at(y, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // The four reversibility laws. Note that the naming follows the classical
  // (reversed) handedness: the *left-sided* law of unique reversibility is
  // right cancellation. Each field states its equation explicitly.
  //
  // In a finite semigroup an equation cannot have infinitely many solutions,
  // so the "unlimited" laws are reported as solution counts together with a
  // `*_solvable` flag (every count ≥ 1) that stands in for them.
  struct LawReport {
    std::size_t n = 0;
    // xa = ya ⇒ x = y
    bool left_unique = false;
    // ax = ay ⇒ x = y
    bool right_unique = false;
    // left_counts[a][b] = #{X : X·a = b}
    std::vector<std::vector<std::size_t>> left_counts;
    // right_counts[a][b] = #{X : a·X = b}
    std::vector<std::vector<std::size_t>> right_counts;
    // every Xa = b has a solution
    bool left_solvable = false;
    // every aX = b has a solution
    bool right_solvable = false;

    bool operator==(LawReport const&) const = default;
  };

  [[nodiscard]] inline LawReport check_laws(CayleyTable const& t) {
    if (!is_associative(t)) {
      throw Error("check_laws: the table is not associative");
    }
    std::size_t const n = t.size();
    LawReport         r;
    r.n            = n;
    r.left_counts  = std::vector(n, std::vector<std::size_t>(n, 0));
    r.right_counts = std::vector(n, std::vector<std::size_t>(n, 0));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t x = 0; x < n; ++x) {
        ++r.left_counts[a][t.at(x, a)];
        ++r.right_counts[a][t.at(a, x)];
      }
    }
    // With n candidate X and n targets b, injectivity of X ↦ Xa is the same
    // as every count being ≤ 1, and solvability is every count ≥ 1.
    auto all_counts = [n](auto const& counts, auto pred) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (!pred(counts[a][b])) {
            return false;
          }
        }
      }
      return true;
    };
    auto at_most_one  = [](std::size_t c) { return c <= 1; };
    auto at_least_one = [](std::size_t c) { return c >= 1; };
    r.left_unique     = all_counts(r.left_counts, at_most_one);
    r.right_unique    = all_counts(r.right_counts, at_most_one);
    r.left_solvable   = all_counts(r.left_counts, at_least_one);
    r.right_solvable  = all_counts(r.right_counts, at_least_one);
    return r;
  }

  [[nodiscard]] inline std::optional<std::size_t> identity(CayleyTable const& t) {
    for (std::size_t e = 0; e < t.size(); ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < t.size() && ok; ++x) {
        ok = t.at(e, x) == x && t.at(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  [[nodiscard]] inline bool is_group(CayleyTable const& t) {
    auto e = identity(t);
    if (!e) {
      return false;
    }
    for (std::size_t x = 0; x < t.size(); ++x) {
      bool found = false;
      for (std::size_t y = 0; y < t.size() && !found; ++y) {
        found = t.at(x, y) == *e && t.at(y, x) == *e;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Right groups
  ////////////////////////////////////////////////////////////////////////

  // S ≅ G × R with G a group and R a right-zero semigroup:
  // (g, r)(h, s) = (gh, s).
  struct RightGroupDecomposition {
    CayleyTable group_part;
    // class_of[s] = index of the right-zero class of s (0 ≤ . < classes)
    std::vector<std::size_t> class_of;
    // group_of[s] = index of the group component of s in group_part
    std::vector<std::size_t> group_of;
    // element[g * classes + r] = the element with coordinates (g, r)
    std::vector<std::size_t> element;
    std::size_t              classes = 0;
  };

  // Multiplies coordinates in G × R and maps back into S.
  [[nodiscard]] inline CayleyTable reconstruct(RightGroupDecomposition const& d) {
    std::size_t const n = d.class_of.size();
    return CayleyTable::from_function(n, [&d](std::size_t s, std::size_t t) {
      std::size_t g = d.group_part.at(d.group_of[s], d.group_of[t]);
      return d.element[g * d.classes + d.class_of[t]];
    });
  }

  // Decomposes a semigroup in which every aX = b is solvable and ax = ay
  // implies x = y. The idempotents form the right-zero factor; S·e for a fixed
  // idempotent e is the group factor, and s ↦ (s·e, f_s) with f_s the unique
  // idempotent satisfying s·f_s = s is the isomorphism.
  [[nodiscard]] inline RightGroupDecomposition
  decompose_right_group(CayleyTable const& t) {
    if (!is_associative(t)) {
      throw Error("decompose_right_group: the table is not associative");
    }
    std::size_t const n    = t.size();
    auto const        laws = check_laws(t);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (laws.right_counts[a][b] == 0) {
          throw HypothesisError("aX = b has no solution for (a, b) = ("
                                    + std::to_string(a) + ", "
                                    + std::to_string(b) + ")",
                                {a, b});
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
          if (t.at(a, x) == t.at(a, y)) {
            throw HypothesisError("left cancellation fails: a·x = a·y with "
                                  "(x, y) = ("
                                      + std::to_string(x) + ", "
                                      + std::to_string(y) + ")",
                                  {x, y});
          }
        }
      }
    }

    std::vector<std::size_t> idempotents;
    for (std::size_t s = 0; s < n; ++s) {
      if (t.at(s, s) == s) {
        idempotents.push_back(s);
      }
    }
    if (idempotents.empty()) {
      throw Error("decompose_right_group: no idempotent");
    }
    std::size_t const e = idempotents.front();

    RightGroupDecomposition d;
    d.classes = idempotents.size();
    d.class_of.assign(n, 0);
    d.group_of.assign(n, 0);

    // group part: S·e, numbered in element order
    std::vector<std::size_t> group_elements;
    std::vector<std::size_t> group_index(n, n);
    for (std::size_t s = 0; s < n; ++s) {
      std::size_t se = t.at(s, e);
      if (group_index[se] == n) {
        group_index[se] = group_elements.size();
        group_elements.push_back(se);
      }
    }
    std::size_t const order = group_elements.size();
    if (order * d.classes != n) {
      throw Error("decompose_right_group: |S·e| · |E(S)| != |S|");
    }
    d.group_part = CayleyTable::from_function(
        order, [&](std::size_t i, std::size_t j) {
          return group_index[t.at(group_elements[i], group_elements[j])];
        });
    if (!is_group(d.group_part)) {
      throw Error("decompose_right_group: S·e is not a group");
    }

    d.element.assign(n, n);
    for (std::size_t s = 0; s < n; ++s) {
      std::optional<std::size_t> cls;
      for (std::size_t r = 0; r < d.classes; ++r) {
        if (t.at(s, idempotents[r]) == s) {
          if (cls) {
            throw Error("decompose_right_group: element fixed by two idempotents");
          }
          cls = r;
        }
      }
      if (!cls) {
        throw Error("decompose_right_group: element fixed by no idempotent");
      }
      d.class_of[s]        = *cls;
      d.group_of[s]        = group_index[t.at(s, e)];
      auto& slot           = d.element[d.group_of[s] * d.classes + *cls];
      if (slot != n) {
        throw Error("decompose_right_group: coordinates are not injective");
      }
      slot = s;
    }
    return d;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t max_enumeration_order = 4;

  // Calls `visit` once for every associative table on {0, ..., n-1} (labelled,
  // not up to isomorphism). Cells are filled in row-major order and a partial
  // table is abandoned as soon as some fully defined triple violates
  // associativity.
  template <typename Visit>
  void for_each_semigroup(std::size_t n, Visit&& visit) {
    if (n > max_enumeration_order) {
      throw CapExceeded("enumerate_semigroups supports order ≤ "
                        + std::to_string(max_enumeration_order));
    }
    if (n == 0) {
      return;
    }
    constexpr std::uint32_t  unset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> cell(n * n, unset);
    auto get = [&](std::size_t i, std::size_t j) { return cell[i * n + j]; };

    // Every triple whose four lookups are all defined must associate.
    auto consistent = [&]() {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          auto xy = get(x, y);
          if (xy == unset) {
            continue;
          }
          for (std::size_t z = 0; z < n; ++z) {
            auto yz = get(y, z);
            if (yz == unset) {
              continue;
            }
            auto lhs = get(xy, z);
            auto rhs = get(x, yz);
            if (lhs != unset && rhs != unset && lhs != rhs) {
              return false;
            }
          }
        }
      }
      return true;
    };

    std::function<void(std::size_t)> fill = [&](std::size_t k) {
      if (k == n * n) {
        visit(CayleyTable(n, cell));
        return;
      }
      for (std::uint32_t v = 0; v < n; ++v) {
        cell[k] = v;
        if (consistent()) {
          fill(k + 1);
        }
      }
      cell[k] = unset;
    };
    fill(0);
  }

  [[nodiscard]] inline std::vector<CayleyTable> enumerate_semigroups(std::size_t n) {
    std::vector<CayleyTable> out;
    for_each_semigroup(n, [&out](CayleyTable t) { out.push_back(std::move(t)); });
    return out;
  }

}  // namespace sushkevich

#endif  // SUSHKEVICH_CAYLEY_HPP_
