#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "error.hpp"

namespace subsemi {

  inline constexpr std::size_t max_set_order = 64;

  // A subset of the elements of a table of order at most 64, as one word.
  class ElementSet {
   public:
    using bits_type = std::uint64_t;

    explicit ElementSet(std::size_t order, bits_type bits = 0)
        : _bits(bits), _order(order) {
      if (order > max_set_order) {
        throw TooLarge("element sets support order <= 64, got "
                       + std::to_string(order));
      }
      if ((_bits & ~universe_bits(order)) != 0) {
        throw OutOfRange("bits set beyond order " + std::to_string(order));
      }
    }

    ElementSet(std::size_t order, std::initializer_list<std::size_t> elts)
        : ElementSet(order) {
      for (auto x : elts) {
        insert(x);
      }
    }

    static ElementSet full(std::size_t order) {
      return ElementSet(order, universe_bits(order));
    }

    static constexpr bits_type universe_bits(std::size_t order) noexcept {
      return order >= 64 ? ~bits_type(0) : (bits_type(1) << order) - 1;
    }

    bits_type bits() const noexcept {
      return _bits;
    }

    std::size_t order() const noexcept {
      return _order;
    }

    std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(_bits));
    }

    bool empty() const noexcept {
      return _bits == 0;
    }

    bool contains(std::size_t x) const noexcept {
      return x < _order && ((_bits >> x) & 1U) != 0;
    }

    void insert(std::size_t x) {
      if (x >= _order) {
        throw OutOfRange("element " + std::to_string(x)
                         + " out of range for order " + std::to_string(_order));
      }
      _bits |= bits_type(1) << x;
    }

    bool is_subset_of(ElementSet const& other) const noexcept {
      return (_bits & ~other._bits) == 0;
    }

    std::vector<std::size_t> elements() const {
      std::vector<std::size_t> out;
      for (bits_type b = _bits; b != 0; b &= b - 1) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
      }
      return out;
    }

    friend bool operator==(ElementSet const&, ElementSet const&) = default;

    // (cardinality, bit-pattern) order.
    friend bool operator<(ElementSet const& x, ElementSet const& y) noexcept {
      auto const sx = x.size(), sy = y.size();
      return sx != sy ? sx < sy : x._bits < y._bits;
    }

    std::string to_string() const {
      std::string out = "{";
      bool        first = true;
      for (auto x : elements()) {
        out += (first ? "" : ",") + std::to_string(x);
        first = false;
      }
      return out + "}";
    }

   private:
    bits_type   _bits;
    std::size_t _order;
  };

}  // namespace subsemi
