#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "element_set.hpp"
#include "error.hpp"
#include "mul_table.hpp"

namespace subsemi {

  enum class SearchStrategy {
    // Every nonempty subset is tested; limited by exhaustive_cap.
    subset_scan,
    // Depth-first walk over closed sets only (prefix-preserving closure
    // extension). Exact at any order <= 64.
    lattice_walk,
    // subset_scan up to exhaustive_cap, lattice_walk above it.
    automatic
  };

  // Subset scans beyond this many elements are never attempted.
  inline constexpr std::size_t max_scan_order = 30;

  struct SearchOptions {
    std::size_t    exhaustive_cap = 16;
    SearchStrategy strategy       = SearchStrategy::subset_scan;
  };

  struct Spectrum {
    std::set<std::size_t> achievable;
    std::size_t           ambient_order = 0;

    bool contains(std::size_t k) const {
      return achievable.count(k) != 0;
    }
  };

  namespace detail {
    inline void require_set_order(MulTable const& t) {
      if (t.order() > max_set_order) {
        throw TooLarge("subset operations need order <= 64, got "
                       + std::to_string(t.order()));
      }
    }

    inline ElementSet::bits_type bit(std::size_t x) noexcept {
      return ElementSet::bits_type(1) << x;
    }

    // Fixpoint of one-step products; only newly added elements are
    // multiplied against the current set.
    inline ElementSet::bits_type closure_bits(MulTable const&        t,
                                              ElementSet::bits_type seed) {
      ElementSet::bits_type result = seed;
      ElementSet::bits_type todo   = seed;
      while (todo != 0) {
        auto const x = static_cast<std::size_t>(std::countr_zero(todo));
        todo &= todo - 1;
        for (ElementSet::bits_type b = result; b != 0; b &= b - 1) {
          auto const y  = static_cast<std::size_t>(std::countr_zero(b));
          auto const xy = bit(t(x, y)), yx = bit(t(y, x));
          if ((result & xy) == 0) {
            result |= xy;
            todo |= xy;
          }
          if ((result & yx) == 0) {
            result |= yx;
            todo |= yx;
          }
        }
      }
      return result;
    }

    inline bool is_closed_bits(MulTable const& t, ElementSet::bits_type s) {
      for (ElementSet::bits_type a = s; a != 0; a &= a - 1) {
        auto const x   = static_cast<std::size_t>(std::countr_zero(a));
        auto const row = t.row(x);
        for (ElementSet::bits_type b = s; b != 0; b &= b - 1) {
          if ((s & bit(row[std::countr_zero(b)])) == 0) {
            return false;
          }
        }
      }
      return true;
    }

    // Visits every nonempty closed subset exactly once. `visit` returns
    // false to stop the whole walk; `prune_above` cuts branches whose closed
    // set is larger (children are supersets).
    template <typename Visit>
    bool lattice_walk(MulTable const& t, Visit&& visit,
                      std::size_t     prune_above) {
      std::size_t const n = t.order();
      struct Frame {
        ElementSet::bits_type set;
        std::size_t           next;
      };
      std::vector<Frame> stack{{0, 0}};
      while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next >= n) {
          stack.pop_back();
          continue;
        }
        std::size_t const x = f.next++;
        if ((f.set & bit(x)) != 0) {
          continue;
        }
        auto const closed = closure_bits(t, f.set | bit(x));
        auto const below  = bit(x) - 1;
        if ((closed & below) != (f.set & below)) {
          continue;
        }
        if (static_cast<std::size_t>(std::popcount(closed)) > prune_above) {
          continue;
        }
        if (!visit(closed)) {
          return false;
        }
        stack.push_back({closed, x + 1});
      }
      return true;
    }

    inline std::vector<ElementSet::bits_type> closed_sets_by_scan(
        MulTable const& t) {
      std::vector<ElementSet::bits_type> out;
      auto const last = ElementSet::universe_bits(t.order());
      for (ElementSet::bits_type s = 1; s != 0 && s <= last; ++s) {
        if (is_closed_bits(t, s)) {
          out.push_back(s);
        }
      }
      return out;
    }

    inline SearchStrategy resolve(MulTable const& t, SearchOptions const& o) {
      auto const cap = std::min(o.exhaustive_cap, max_scan_order);
      if (o.strategy == SearchStrategy::automatic) {
        return t.order() <= cap ? SearchStrategy::subset_scan
                                : SearchStrategy::lattice_walk;
      }
      if (o.strategy == SearchStrategy::subset_scan && t.order() > cap) {
        throw OrderTooLargeForExhaustive(
            "order " + std::to_string(t.order()) + " exceeds the subset-scan cap "
            + std::to_string(cap)
            + "; request the lattice walk instead");
      }
      return o.strategy;
    }
  }  // namespace detail

  inline bool is_closed(MulTable const& t, ElementSet const& s) {
    detail::require_set_order(t);
    return detail::is_closed_bits(t, s.bits());
  }

  // Least subsemigroup containing seed.
  inline ElementSet closure(MulTable const& t, ElementSet const& seed) {
    detail::require_set_order(t);
    if (seed.empty()) {
      throw EmptySeed("closure of the empty set is not a subsemigroup");
    }
    if (seed.order() != t.order()) {
      throw OutOfRange("seed is over order " + std::to_string(seed.order())
                       + " but the table has order "
                       + std::to_string(t.order()));
    }
    return ElementSet(t.order(), detail::closure_bits(t, seed.bits()));
  }

  // Exact search for a subsemigroup with exactly k elements. The witness is
  // the one with the numerically smallest bit pattern among all size-k
  // subsemigroups, whichever route finds it.
  inline std::optional<ElementSet> has_subsemigroup_of_order(
      MulTable const& t, std::size_t k, SearchOptions const& opts = {}) {
    detail::require_set_order(t);
    std::size_t const n = t.order();
    if (k == 0 || k > n) {
      throw OutOfRange("subsemigroup order " + std::to_string(k)
                       + " is outside 1.." + std::to_string(n));
    }
    if (n <= std::min(opts.exhaustive_cap, max_scan_order)
        && opts.strategy != SearchStrategy::lattice_walk) {
      // Gosper's hack walks the size-k subsets in increasing numeric order.
      using bits_type = ElementSet::bits_type;
      bits_type s     = (bits_type(1) << k) - 1;
      bits_type const limit = bits_type(1) << n;
      while (s < limit) {
        if (detail::is_closed_bits(t, s)) {
          return ElementSet(n, s);
        }
        bits_type const c = s & (~s + 1);
        bits_type const r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
      }
      return std::nullopt;
    }
    std::optional<ElementSet::bits_type> best;
    detail::lattice_walk(
        t,
        [&](ElementSet::bits_type s) {
          if (static_cast<std::size_t>(std::popcount(s)) == k
              && (!best || s < *best)) {
            best = s;
          }
          return true;
        },
        k);
    if (!best) {
      return std::nullopt;
    }
    return ElementSet(n, *best);
  }

  // Every subsemigroup, sorted by (cardinality, bit pattern).
  inline std::vector<ElementSet> all_subsemigroups(
      MulTable const& t, SearchOptions const& opts = {}) {
    detail::require_set_order(t);
    std::vector<ElementSet::bits_type> raw;
    if (detail::resolve(t, opts) == SearchStrategy::subset_scan) {
      raw = detail::closed_sets_by_scan(t);
    } else {
      detail::lattice_walk(
          t,
          [&](ElementSet::bits_type s) {
            raw.push_back(s);
            return true;
          },
          t.order());
    }
    std::vector<ElementSet> out;
    out.reserve(raw.size());
    for (auto s : raw) {
      out.emplace_back(t.order(), s);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  inline Spectrum spectrum(MulTable const& t, SearchOptions const& opts = {}) {
    detail::require_set_order(t);
    Spectrum out;
    out.ambient_order = t.order();
    if (detail::resolve(t, opts) == SearchStrategy::subset_scan) {
      for (auto s : detail::closed_sets_by_scan(t)) {
        out.achievable.insert(static_cast<std::size_t>(std::popcount(s)));
      }
    } else {
      detail::lattice_walk(
          t,
          [&](ElementSet::bits_type s) {
            out.achievable.insert(static_cast<std::size_t>(std::popcount(s)));
            return true;
          },
          t.order());
    }
    return out;
  }

  inline std::string to_string(Spectrum const& s) {
    std::string out = "{";
    bool        first = true;
    for (auto k : s.achievable) {
      out += (first ? "" : ",") + std::to_string(k);
      first = false;
    }
    return out + "}";
  }

}  // namespace subsemi
