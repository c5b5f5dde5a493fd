#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace subsemi {

  using element_type = std::uint16_t;

  // Tables themselves may be large (the free band on three generators has
  // order 159); subset searches are limited separately by ElementSet.
  inline constexpr std::size_t max_table_order = 256;

  // Cayley table of a finite magma over 0..n-1, row-major: at(i, j) = i * j.
  // Immutable once constructed. Associativity is not assumed; see
  // validate_table.
  class MulTable {
   public:
    MulTable() = delete;

    MulTable(std::size_t order, std::vector<element_type> entries,
             std::string label = {})
        : _order(order), _entries(std::move(entries)), _label(std::move(label)) {
      if (_order == 0) {
        throw MalformedTable("order must be at least 1");
      }
      if (_order > max_table_order) {
        throw TooLarge("order " + std::to_string(_order) + " exceeds "
                       + std::to_string(max_table_order));
      }
      if (_entries.size() != _order * _order) {
        throw MalformedTable("expected " + std::to_string(_order * _order)
                             + " entries, got "
                             + std::to_string(_entries.size()));
      }
      for (std::size_t c = 0; c < _entries.size(); ++c) {
        if (_entries[c] >= _order) {
          throw MalformedTable("entry " + std::to_string(_entries[c])
                               + " at (" + std::to_string(c / _order) + ","
                               + std::to_string(c % _order)
                               + ") is out of range for order "
                               + std::to_string(_order));
        }
      }
    }

    MulTable(std::initializer_list<std::initializer_list<element_type>> rows,
             std::string label = {})
        : MulTable(rows.size(), flatten(rows), std::move(label)) {}

    std::size_t order() const noexcept {
      return _order;
    }

    element_type at(std::size_t i, std::size_t j) const noexcept {
      return _entries[i * _order + j];
    }

    element_type operator()(std::size_t i, std::size_t j) const noexcept {
      return at(i, j);
    }

    std::span<element_type const> row(std::size_t i) const noexcept {
      return {_entries.data() + i * _order, _order};
    }

    std::span<element_type const> entries() const noexcept {
      return _entries;
    }

    std::string const& label() const noexcept {
      return _label;
    }

    MulTable with_label(std::string label) const {
      MulTable copy = *this;
      copy._label   = std::move(label);
      return copy;
    }

    // Tables compare by content; labels are descriptive only.
    friend bool operator==(MulTable const& x, MulTable const& y) {
      return x._order == y._order && x._entries == y._entries;
    }

    friend bool operator<(MulTable const& x, MulTable const& y) {
      if (x._order != y._order) {
        return x._order < y._order;
      }
      return x._entries < y._entries;
    }

   private:
    static std::vector<element_type> flatten(
        std::initializer_list<std::initializer_list<element_type>> rows) {
      std::vector<element_type> out;
      for (auto const& r : rows) {
        if (r.size() != rows.size()) {
          throw MalformedTable("table rows must have length "
                               + std::to_string(rows.size()));
        }
        out.insert(out.end(), r.begin(), r.end());
      }
      return out;
    }

    std::size_t               _order;
    std::vector<element_type> _entries;
    std::string               _label;
  };

  // Relabel: result(p[i], p[j]) = p[t(i, j)].
  inline MulTable permuted(MulTable const& t, std::span<std::size_t const> p) {
    std::size_t const         n = t.order();
    std::vector<element_type> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out[p[i] * n + p[j]] = static_cast<element_type>(p[t(i, j)]);
      }
    }
    return MulTable(n, std::move(out), t.label());
  }

}  // namespace subsemi
