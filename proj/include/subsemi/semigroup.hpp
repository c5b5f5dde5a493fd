#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "closure.hpp"
#include "element_set.hpp"
#include "error.hpp"
#include "mul_table.hpp"

namespace subsemi {

  using Triple = std::array<std::size_t, 3>;

  struct ValidationReport {
    bool                  is_closed      = true;
    bool                  is_associative = false;
    std::optional<Triple> first_violation;
    bool                  is_idempotent = false;
    std::map<std::uint64_t, bool> exponent_witness;
  };

  // Reference check: every triple, lexicographic order. Returns the first
  // violating (i, j, k), or nullopt if the table is associative.
  inline std::optional<Triple> first_associativity_violation(MulTable const& t) {
    std::size_t const n = t.order();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto const ij = t(i, j);
        for (std::size_t k = 0; k < n; ++k) {
          if (t(ij, k) != t(i, t(j, k))) {
            return Triple{i, j, k};
          }
        }
      }
    }
    return std::nullopt;
  }

  inline bool is_associative_naive(MulTable const& t) {
    return !first_associativity_violation(t).has_value();
  }

  // Greedy generating set of the magma: each element not yet generated by
  // the previous choices is added.
  inline std::vector<std::size_t> greedy_generators(MulTable const& t) {
    std::size_t const        n = t.order();
    std::vector<std::size_t> gens;
    std::vector<std::size_t> members;
    std::vector<char>        covered(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      if (covered[x] != 0) {
        continue;
      }
      gens.push_back(x);
      std::vector<std::size_t> work{x};
      covered[x] = 1;
      while (!work.empty()) {
        auto const z = work.back();
        work.pop_back();
        members.push_back(z);
        for (auto m : members) {
          for (auto p : {t(z, m), t(m, z)}) {
            if (covered[p] == 0) {
              covered[p] = 1;
              work.push_back(p);
            }
          }
        }
      }
    }
    return gens;
  }

  // Light's test: the elements g with (x g) y = x (g y) for all x, y form a
  // submagma, so checking a generating set suffices.
  inline bool is_associative_light(MulTable const&              t,
                                   std::span<std::size_t const> generators) {
    std::size_t const n = t.order();
    for (auto g : generators) {
      for (std::size_t x = 0; x < n; ++x) {
        auto const xg = t(x, g);
        for (std::size_t y = 0; y < n; ++y) {
          if (t(xg, y) != t(x, t(g, y))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  inline bool is_associative_light(MulTable const& t) {
    auto const gens = greedy_generators(t);
    return is_associative_light(t, gens);
  }

  inline bool is_idempotent(MulTable const& t) {
    for (std::size_t i = 0; i < t.order(); ++i) {
      if (t(i, i) != i) {
        return false;
      }
    }
    return true;
  }

  // a^k by repeated squaring.
  inline element_type element_power(MulTable const& t, std::size_t a,
                                    std::uint64_t k) {
    if (a >= t.order()) {
      throw OutOfRange("element " + std::to_string(a) + " not in table of order "
                       + std::to_string(t.order()));
    }
    if (k == 0) {
      throw OutOfRange("exponent must be positive");
    }
    std::optional<element_type> acc;
    auto                        base = static_cast<element_type>(a);
    while (true) {
      if ((k & 1U) != 0) {
        acc = acc ? t(*acc, base) : base;
      }
      k >>= 1U;
      if (k == 0) {
        break;
      }
      base = t(base, base);
    }
    return *acc;
  }

  inline bool satisfies_exponent(MulTable const& t, std::uint64_t r) {
    if (r < 2) {
      throw OutOfRange("exponent identity x^r = x needs r >= 2");
    }
    for (std::size_t x = 0; x < t.order(); ++x) {
      if (element_power(t, x, r) != x) {
        return false;
      }
    }
    return true;
  }

  inline ValidationReport validate_table(
      MulTable const& t, std::span<std::uint64_t const> exponents = {}) {
    ValidationReport report;
    bool const fast = t.order() <= max_set_order && is_associative_light(t);
    if (!fast) {
      report.first_violation = first_associativity_violation(t);
    }
    report.is_associative = !report.first_violation.has_value();
    report.is_idempotent  = is_idempotent(t);
    for (auto r : exponents) {
      report.exponent_witness[r] = satisfies_exponent(t, r);
    }
    return report;
  }

  // Smallest t > 1 with a^t = a.
  inline std::uint64_t local_exponent(MulTable const& t, std::size_t a) {
    auto p = element_power(t, a, 1);
    for (std::uint64_t e = 2; e <= t.order() + 1; ++e) {
      p = t(p, a);
      if (p == a) {
        return e;
      }
    }
    throw NoRecurrence("element " + std::to_string(a)
                       + " has no power a^t = a with t <= order + 1");
  }

  // The power subsemigroup of order 2 or 4 used when x^(2^m + 1) = x: with
  // local exponent 2^m' + 1, the powers of a form a cyclic group of order
  // 2^m', and the returned set is its subgroup of order `target`.
  inline ElementSet exhibit_small_subsemigroup(MulTable const& t,
                                               std::size_t a, int target) {
    detail::require_set_order(t);
    if (target != 2 && target != 4) {
      throw OutOfRange("target must be 2 or 4, got " + std::to_string(target));
    }
    if (target == 2 && element_power(t, a, 2) == a) {
      throw PreconditionFailed("a^2 = a for a = " + std::to_string(a));
    }
    if (target == 4 && element_power(t, a, 3) == a) {
      throw PreconditionFailed("a^3 = a for a = " + std::to_string(a));
    }
    auto const period = local_exponent(t, a) - 1;
    if (!std::has_single_bit(period)) {
      throw ExponentNotPowerOfTwoPlusOne(
          "local exponent of " + std::to_string(a) + " is "
          + std::to_string(period + 1) + ", not 2^m + 1");
    }
    ElementSet out(t.order());
    if (target == 2) {
      out.insert(element_power(t, a, period / 2));
      out.insert(element_power(t, a, period));
    } else {
      auto const quarter = period / 4;
      out.insert(element_power(t, a, quarter));
      out.insert(element_power(t, a, 2 * quarter));
      out.insert(element_power(t, a, 3 * quarter));
      out.insert(element_power(t, a, period));
    }
    return out;
  }

}  // namespace subsemi
