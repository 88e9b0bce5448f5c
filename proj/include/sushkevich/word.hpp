#ifndef SUSHKEVICH_WORD_HPP_
#define SUSHKEVICH_WORD_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace sushkevich {

  // A generator of a presentation. The base id indexes the presentation's
  // list of names; the barred flag marks membership of the anti-isomorphic
  // copy. Letters compare by (id, barred), so a barred letter sits
  // immediately after its unbarred partner. This is the letter order used by
  // every shortlex comparison in the library.
  class Letter {
   public:
    constexpr Letter() noexcept = default;
    constexpr explicit Letter(std::uint32_t id, bool barred = false) noexcept
        : _code((id << 1) | static_cast<std::uint32_t>(barred)) {}

    [[nodiscard]] constexpr std::uint32_t id() const noexcept {
      return _code >> 1;
    }
    [[nodiscard]] constexpr bool barred() const noexcept {
      return (_code & 1U) != 0;
    }
    // Position of the letter in the total order on letters.
    [[nodiscard]] constexpr std::uint32_t rank() const noexcept {
      return _code;
    }
    // The partner with the same base id and the opposite flag.
    [[nodiscard]] constexpr Letter partner() const noexcept {
      return Letter(id(), !barred());
    }

    constexpr auto operator<=>(Letter const&) const noexcept = default;

   private:
    std::uint32_t _code = 0;
  };

  // The empty word is the identity.
  using Word = std::vector<Letter>;

  [[nodiscard]] inline Word reverse(std::span<Letter const> w) {
    return Word(w.rbegin(), w.rend());
  }

  [[nodiscard]] inline Word concat(std::span<Letter const> u,
                                   std::span<Letter const> v) {
    Word out;
    out.reserve(u.size() + v.size());
    out.insert(out.end(), u.begin(), u.end());
    out.insert(out.end(), v.begin(), v.end());
    return out;
  }

  // Flip the barred flag of every letter, keeping the order.
  [[nodiscard]] inline Word toggle_bars(std::span<Letter const> w) {
    Word out;
    out.reserve(w.size());
    for (Letter x : w) {
      out.push_back(x.partner());
    }
    return out;
  }

  // Shortlex order with respect to Letter::rank: shorter words first, equal
  // lengths compared lexicographically.
  [[nodiscard]] inline bool shortlex_less(std::span<Letter const> u,
                                          std::span<Letter const> v) noexcept {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
  }

  // Shortlex under an explicit letter order; `rank_of[x.rank()]` gives the
  // position of letter x. Used when the caller wants an order other than the
  // declaration order.
  [[nodiscard]] inline bool
  shortlex_less(std::span<Letter const>        u,
                std::span<Letter const>        v,
                std::span<std::size_t const> rank_of) noexcept {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      auto ru = rank_of[u[i].rank()];
      auto rv = rank_of[v[i].rank()];
      if (ru != rv) {
        return ru < rv;
      }
    }
    return false;
  }

  struct ShortlexLess {
    bool operator()(Word const& u, Word const& v) const noexcept {
      return shortlex_less(u, v);
    }
  };

  // Index of the first occurrence of `factor` in `w` at or after `from`, or
  // w.size() + 1 when there is none.
  [[nodiscard]] inline std::size_t find_factor(std::span<Letter const> w,
                                               std::span<Letter const> factor,
                                               std::size_t from = 0) {
    if (factor.size() > w.size()) {
      return w.size() + 1;
    }
    for (std::size_t i = from; i + factor.size() <= w.size(); ++i) {
      if (std::equal(factor.begin(), factor.end(), w.begin() + i)) {
        return i;
      }
    }
    return w.size() + 1;
  }

  [[nodiscard]] inline bool has_factor_at(std::span<Letter const> w,
                                          std::size_t             pos,
                                          std::span<Letter const> factor) {
    return pos + factor.size() <= w.size()
           && std::equal(factor.begin(), factor.end(), w.begin() + pos);
  }

  // Replace w[pos, pos + len) by `with`.
  [[nodiscard]] inline Word splice(std::span<Letter const> w,
                                   std::size_t             pos,
                                   std::size_t             len,
                                   std::span<Letter const> with) {
    Word out;
    out.reserve(w.size() - len + with.size());
    out.insert(out.end(), w.begin(), w.begin() + pos);
    out.insert(out.end(), with.begin(), with.end());
    out.insert(out.end(), w.begin() + pos + len, w.end());
    return out;
  }

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept {
      std::size_t h = 1469598103934665603ULL;
      for (Letter x : w) {
        h ^= x.rank() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }
  };

}  // namespace sushkevich

#endif  // SUSHKEVICH_WORD_HPP_
