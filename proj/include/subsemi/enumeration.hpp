#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"
#include "mul_table.hpp"
#include "semigroup.hpp"

namespace subsemi {

  struct Constraint {
    enum class Kind { idempotent, exponent };

    Kind          kind = Kind::idempotent;
    std::uint64_t r    = 2;

    static Constraint idempotent() {
      return {Kind::idempotent, 2};
    }
    static Constraint exponent(std::uint64_t r) {
      if (r < 2) {
        throw OutOfRange("exponent constraint needs r >= 2");
      }
      return {Kind::exponent, r};
    }

    // "band" or "exp:R"; the census manifest and CLI use this spelling.
    std::string tag() const {
      return kind == Kind::idempotent ? "band" : "exp:" + std::to_string(r);
    }

    bool holds(MulTable const& t) const {
      return kind == Kind::idempotent ? is_idempotent(t)
                                      : satisfies_exponent(t, r);
    }
  };

  enum class EnumerationMode { canonical_only, all_labeled };

  struct EnumerationQuery {
    std::size_t     order      = 1;
    Constraint      constraint = Constraint::idempotent();
    EnumerationMode mode       = EnumerationMode::canonical_only;
  };

  struct EnumerationCaps {
    std::size_t band_order     = 7;
    std::size_t exponent_order = 5;
  };

  // Cells ordered by shell: all (i, j) with max(i, j) = m come before any
  // cell of shell m + 1, row-major inside a shell. Canonical tables are the
  // ones minimal under this flattening.
  inline std::vector<std::array<std::size_t, 2>> shell_order(std::size_t n) {
    std::vector<std::array<std::size_t, 2>> cells;
    for (std::size_t m = 0; m < n; ++m) {
      for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t j = 0; j <= m; ++j) {
          if (std::max(i, j) == m) {
            cells.push_back({i, j});
          }
        }
      }
    }
    return cells;
  }

  inline std::vector<element_type> shell_flatten(MulTable const& t) {
    std::vector<element_type> out;
    for (auto [i, j] : shell_order(t.order())) {
      out.push_back(t(i, j));
    }
    return out;
  }

  namespace detail {

    // Backtracking over Cayley tables with forward-checked associativity and
    // exponent identities. With `canonical` set, a partial table survives
    // only if no relabelling is provably smaller on its determined cells.
    class TableSearch {
      static constexpr std::int8_t unset = -1;

     public:
      TableSearch(std::size_t n, Constraint c, bool canonical)
          : _n(n),
            _constraint(c),
            _canonical(canonical),
            _cells(shell_order(n)),
            _table(n * n, unset),
            _sigma(n),
            _pi(n, unset) {
        for (std::size_t m = 0; m < n; ++m) {
          _shell_begin.push_back(m * m);
        }
        _shell_begin.push_back(n * n);
        if (c.kind == Constraint::Kind::idempotent) {
          for (std::size_t x = 0; x < n; ++x) {
            set(x, x, static_cast<std::int8_t>(x));
          }
        }
      }

      template <typename Visit>
      void run(Visit&& visit) {
        fill(0, visit);
      }

      std::uint64_t nodes() const noexcept {
        return _nodes;
      }

      // Relabelling test on the current (possibly partial) table.
      bool has_smaller_image() {
        for (std::size_t v = 0; v < _n; ++v) {
          Pending pending;
          if (descend(0, v, pending)) {
            return true;
          }
        }
        return false;
      }

      void load(MulTable const& t) {
        for (std::size_t i = 0; i < _n; ++i) {
          for (std::size_t j = 0; j < _n; ++j) {
            set(i, j, static_cast<std::int8_t>(t(i, j)));
          }
        }
      }

     private:
      struct Pending {
        std::array<std::int8_t, 16> items{};
        std::size_t                 size = 0;

        int find(std::int8_t x) const {
          for (std::size_t i = 0; i < size; ++i) {
            if (items[i] == x) {
              return static_cast<int>(i);
            }
          }
          return -1;
        }
      };

      enum class Cmp { smaller, greater, undetermined, equal };

      std::int8_t get(std::size_t i, std::size_t j) const noexcept {
        return _table[i * _n + j];
      }

      void set(std::size_t i, std::size_t j, std::int8_t v) noexcept {
        _table[i * _n + j] = v;
      }

      // Compares the relabelled table against the current one on shell m,
      // once sigma(0..m) is fixed. Unassigned values either force the next
      // free positions (recorded in `pending`) or decide the comparison.
      Cmp compare_shell(std::size_t m, Pending& pending) const {
        for (std::size_t c = _shell_begin[m]; c < _shell_begin[m + 1]; ++c) {
          auto const [i, j] = _cells[c];
          auto const target = get(i, j);
          if (target == unset) {
            return Cmp::undetermined;
          }
          auto const src = get(_sigma[i], _sigma[j]);
          if (src == unset) {
            return Cmp::undetermined;
          }
          std::int64_t image;
          if (_pi[src] != unset) {
            image = _pi[src];
          } else if (int k = pending.find(src); k >= 0) {
            image = static_cast<std::int64_t>(m + 1) + k;
          } else {
            auto const lowest = static_cast<std::int64_t>(m + 1 + pending.size);
            if (target > lowest) {
              return Cmp::smaller;
            }
            if (target < lowest) {
              return Cmp::greater;
            }
            pending.items[pending.size++] = src;
            image = lowest;
          }
          if (image < target) {
            return Cmp::smaller;
          }
          if (image > target) {
            return Cmp::greater;
          }
        }
        return Cmp::equal;
      }

      bool descend(std::size_t m, std::size_t v, Pending pending) {
        _sigma[m] = v;
        _pi[v]    = static_cast<std::int8_t>(m);
        bool found = false;
        switch (compare_shell(m, pending)) {
          case Cmp::smaller:
            found = true;
            break;
          case Cmp::equal:
            if (m + 1 == _n) {
              break;
            }
            if (pending.size > 0) {
              auto const next = static_cast<std::size_t>(pending.items[0]);
              std::copy(pending.items.begin() + 1,
                        pending.items.begin() + static_cast<std::ptrdiff_t>(pending.size),
                        pending.items.begin());
              --pending.size;
              found = descend(m + 1, next, pending);
            } else {
              for (std::size_t w = 0; w < _n && !found; ++w) {
                if (_pi[w] == unset) {
                  found = descend(m + 1, w, pending);
                }
              }
            }
            break;
          default:
            break;
        }
        _pi[v] = unset;
        return found;
      }

      // Checks every triple whose four products include cell (x, y) and are
      // all defined.
      bool associative_around(std::size_t x, std::size_t y) const {
        std::size_t const n = _n;
        auto const        v = get(x, y);
        for (std::size_t z = 0; z < n; ++z) {
          // (x y) z = x (y z)
          auto const vz = get(v, z), yz = get(y, z);
          if (vz != unset && yz != unset) {
            auto const rhs = get(x, yz);
            if (rhs != unset && rhs != vz) {
              return false;
            }
          }
          // (z x) y = z (x y)
          auto const zx = get(z, x);
          if (zx != unset) {
            auto const lhs = get(zx, y), rhs = get(z, v);
            if (lhs != unset && rhs != unset && lhs != rhs) {
              return false;
            }
          }
        }
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            // (i j) y = i (j y) with i j = x
            if (get(i, j) == static_cast<std::int8_t>(x)) {
              auto const jy = get(j, y);
              if (jy != unset) {
                auto const rhs = get(i, jy);
                if (rhs != unset && rhs != v) {
                  return false;
                }
              }
            }
            // (x i) j = x (i j) with i j = y
            if (get(i, j) == static_cast<std::int8_t>(y)) {
              auto const xi = get(x, i);
              if (xi != unset) {
                auto const lhs = get(xi, j);
                if (lhs != unset && lhs != v) {
                  return false;
                }
              }
            }
          }
        }
        return true;
      }

      // x^r = x for every x whose power chain is already defined.
      bool exponent_ok() const {
        if (_constraint.kind != Constraint::Kind::exponent) {
          return true;
        }
        for (std::size_t x = 0; x < _n; ++x) {
          std::int8_t p        = static_cast<std::int8_t>(x);
          bool        complete = true;
          for (std::uint64_t e = 2; e <= _constraint.r; ++e) {
            p = get(static_cast<std::size_t>(p), x);
            if (p == unset) {
              complete = false;
              break;
            }
          }
          if (complete && p != static_cast<std::int8_t>(x)) {
            return false;
          }
        }
        return true;
      }

      template <typename Visit>
      void fill(std::size_t c, Visit& visit) {
        while (c < _cells.size() && get(_cells[c][0], _cells[c][1]) != unset) {
          ++c;
        }
        if (c == _cells.size()) {
          emit(visit);
          return;
        }
        auto const [x, y] = _cells[c];
        for (std::size_t v = 0; v < _n; ++v) {
          ++_nodes;
          set(x, y, static_cast<std::int8_t>(v));
          if (associative_around(x, y) && exponent_ok()
              && !(_canonical && has_smaller_image())) {
            fill(c + 1, visit);
          }
        }
        set(x, y, unset);
      }

      template <typename Visit>
      void emit(Visit& visit) {
        std::vector<element_type> entries(_table.begin(), _table.end());
        MulTable                  t(_n, std::move(entries));
        // Forward checking covers every triple; this is a cheap guard.
        if (is_associative_naive(t) && _constraint.holds(t)) {
          visit(t);
        }
      }

      std::size_t                             _n;
      Constraint                              _constraint;
      bool                                    _canonical;
      std::vector<std::array<std::size_t, 2>> _cells;
      std::vector<std::size_t>                _shell_begin;
      std::vector<std::int8_t>                _table;
      std::vector<std::size_t>                _sigma;
      std::vector<std::int8_t>                _pi;
      std::uint64_t                           _nodes = 0;
    };

    inline void check_caps(EnumerationQuery const& q, EnumerationCaps const& caps) {
      auto const cap = q.constraint.kind == Constraint::Kind::idempotent
                           ? caps.band_order
                           : caps.exponent_order;
      if (q.order == 0 || q.order > cap || q.order > 16) {
        throw OrderTooLarge("enumeration of " + q.constraint.tag()
                            + " tables supports orders 1.."
                            + std::to_string(std::min<std::size_t>(cap, 16))
                            + ", got " + std::to_string(q.order));
      }
    }
  }  // namespace detail

  // Streams tables to `visit` in increasing shell-flattened order. In
  // canonical_only mode exactly one table per isomorphism class is produced
  // (the shell-minimal one); anti-isomorphic tables are kept apart.
  template <typename Visit>
  void enumerate(EnumerationQuery const& q, Visit&& visit,
                 EnumerationCaps const& caps = {}) {
    detail::check_caps(q, caps);
    detail::TableSearch search(
        q.order, q.constraint, q.mode == EnumerationMode::canonical_only);
    search.run(visit);
  }

  inline std::vector<MulTable> enumerate_all(EnumerationQuery const& q,
                                             EnumerationCaps const& caps = {}) {
    std::vector<MulTable> out;
    enumerate(q, [&](MulTable const& t) { out.push_back(t); }, caps);
    return out;
  }

  inline std::uint64_t count(EnumerationQuery const& q,
                             EnumerationCaps const& caps = {}) {
    std::uint64_t total = 0;
    enumerate(q, [&](MulTable const&) { ++total; }, caps);
    return total;
  }

  // True iff t is the shell-minimal member of its isomorphism class.
  inline bool is_canonical(MulTable const& t) {
    if (t.order() > 16) {
      throw OrderTooLarge("canonical test supports order <= 16");
    }
    detail::TableSearch search(t.order(), Constraint::exponent(2), true);
    search.load(t);
    return !search.has_smaller_image();
  }

  // Shell-minimal relabelling of t, by trying every permutation.
  inline MulTable canonical_image(MulTable const& t) {
    if (t.order() > 9) {
      throw OrderTooLarge("canonical_image tries all permutations; order <= 9");
    }
    std::vector<std::size_t> p(t.order());
    std::iota(p.begin(), p.end(), 0);
    MulTable best      = t;
    auto     best_flat = shell_flatten(t);
    while (std::next_permutation(p.begin(), p.end())) {
      auto candidate = permuted(t, p);
      auto flat      = shell_flatten(candidate);
      if (flat < best_flat) {
        best      = std::move(candidate);
        best_flat = std::move(flat);
      }
    }
    return best;
  }

}  // namespace subsemi
