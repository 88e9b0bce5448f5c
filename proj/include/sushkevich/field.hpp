#ifndef SUSHKEVICH_FIELD_HPP_
#define SUSHKEVICH_FIELD_HPP_

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace sushkevich {

  // Exact arithmetic in a field. Division by zero throws.
  template <typename F>
  concept Field = requires(F const& f, typename F::value_type const& x) {
    { f.zero() } -> std::same_as<typename F::value_type>;
    { f.one() } -> std::same_as<typename F::value_type>;
    { f.add(x, x) } -> std::same_as<typename F::value_type>;
    { f.sub(x, x) } -> std::same_as<typename F::value_type>;
    { f.mul(x, x) } -> std::same_as<typename F::value_type>;
    { f.inv(x) } -> std::same_as<typename F::value_type>;
    { f.is_zero(x) } -> std::same_as<bool>;
    { f.from_integer(std::int64_t{}) } -> std::same_as<typename F::value_type>;
    { f.to_string(x) } -> std::same_as<std::string>;
    { f == f } -> std::same_as<bool>;
  };

  // Z/pZ for a prime p < 2^32; elements are kept reduced in [0, p).
  class PrimeField {
   public:
    using value_type = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : _p(p) {
      if (p < 2 || p > 0xFFFFFFFFULL) {
        throw Error("prime field modulus out of range: " + std::to_string(p));
      }
      for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
          throw Error(std::to_string(p) + " is not prime");
        }
      }
    }

    [[nodiscard]] std::uint64_t characteristic() const noexcept {
      return _p;
    }

    [[nodiscard]] value_type zero() const noexcept {
      return 0;
    }
    [[nodiscard]] value_type one() const noexcept {
      return 1;
    }
    [[nodiscard]] value_type add(value_type x, value_type y) const noexcept {
      return (x + y) % _p;
    }
    [[nodiscard]] value_type sub(value_type x, value_type y) const noexcept {
      return (x + _p - y) % _p;
    }
    [[nodiscard]] value_type mul(value_type x, value_type y) const noexcept {
      return (x * y) % _p;
    }
    [[nodiscard]] value_type inv(value_type x) const {
      if (x % _p == 0) {
        throw Error("division by zero in F_" + std::to_string(_p));
      }
      // x^(p-2)
      value_type result = 1;
      value_type base   = x % _p;
      for (std::uint64_t e = _p - 2; e != 0; e >>= 1) {
        if (e & 1U) {
          result = mul(result, base);
        }
        base = mul(base, base);
      }
      return result;
    }
    [[nodiscard]] bool is_zero(value_type x) const noexcept {
      return x % _p == 0;
    }
    [[nodiscard]] value_type from_integer(std::int64_t k) const noexcept {
      auto const p = static_cast<std::int64_t>(_p);
      return static_cast<value_type>(((k % p) + p) % p);
    }
    [[nodiscard]] std::string to_string(value_type x) const {
      return std::to_string(x);
    }

    auto operator<=>(PrimeField const&) const = default;

   private:
    std::uint64_t _p;
  };

  // The rationals, with arbitrary-precision numerator and denominator.
  class RationalField {
   public:
    using value_type = boost::multiprecision::cpp_rational;

    [[nodiscard]] value_type zero() const {
      return 0;
    }
    [[nodiscard]] value_type one() const {
      return 1;
    }
    [[nodiscard]] value_type add(value_type const& x, value_type const& y) const {
      return x + y;
    }
    [[nodiscard]] value_type sub(value_type const& x, value_type const& y) const {
      return x - y;
    }
    [[nodiscard]] value_type mul(value_type const& x, value_type const& y) const {
      return x * y;
    }
    [[nodiscard]] value_type inv(value_type const& x) const {
      if (x == 0) {
        throw Error("division by zero in Q");
      }
      return value_type(1) / x;
    }
    [[nodiscard]] bool is_zero(value_type const& x) const {
      return x == 0;
    }
    [[nodiscard]] value_type from_integer(std::int64_t k) const {
      return k;
    }
    [[nodiscard]] std::string to_string(value_type const& x) const {
      return x.str();
    }

    auto operator<=>(RationalField const&) const = default;
  };

  static_assert(Field<PrimeField>);
  static_assert(Field<RationalField>);

}  // namespace sushkevich

#endif  // SUSHKEVICH_FIELD_HPP_
