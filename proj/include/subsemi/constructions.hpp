#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "mul_table.hpp"
#include "semigroup.hpp"

namespace subsemi {

  inline constexpr std::size_t max_construction_order = 64;

  namespace detail {
    inline void require_construction_size(std::size_t n, char const* what) {
      if (n > max_construction_order) {
        throw TooLarge(std::string(what) + " would have order "
                       + std::to_string(n) + " > "
                       + std::to_string(max_construction_order));
      }
    }

    inline std::string pq_label(char const* prefix, std::size_t p,
                                std::size_t q) {
      return std::string(prefix) + std::to_string(p) + "x" + std::to_string(q);
    }
  }  // namespace detail

  // Z_p x Z_q with (a1, b1)(a2, b2) = (a1, b2); element (a, b) has index
  // a * q + b.
  inline MulTable rectangular_band(std::size_t p, std::size_t q) {
    if (p == 0 || q == 0) {
      throw OutOfRange("rectangular band dimensions must be positive");
    }
    if (p > max_construction_order || q > max_construction_order) {
      throw TooLarge("rectangular band dimension too large");
    }
    detail::require_construction_size(p * q, "rectangular band");
    std::size_t const         n = p * q;
    std::vector<element_type> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        e[i * n + j] = static_cast<element_type>((i / q) * q + (j % q));
      }
    }
    return MulTable(n, std::move(e), detail::pq_label("rect:", p, q));
  }

  // Disjoint union in which `lower` is an ideal: upper elements come first,
  // and a mixed product returns whichever operand lies in `lower`.
  inline MulTable union_ideal(MulTable const& upper, MulTable const& lower) {
    std::size_t const nu = upper.order(), nl = lower.order();
    detail::require_construction_size(nu + nl, "union");
    std::size_t const         n = nu + nl;
    std::vector<element_type> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        element_type v;
        if (i < nu && j < nu) {
          v = upper(i, j);
        } else if (i >= nu && j >= nu) {
          v = static_cast<element_type>(nu + lower(i - nu, j - nu));
        } else {
          v = static_cast<element_type>(i >= nu ? i : j);
        }
        e[i * n + j] = v;
      }
    }
    MulTable out(n, std::move(e),
                 "union:(" + upper.label() + "," + lower.label() + ")");
    if (auto v = first_associativity_violation(out)) {
      throw NotAssociative("union is not associative at ("
                           + std::to_string((*v)[0]) + ","
                           + std::to_string((*v)[1]) + ","
                           + std::to_string((*v)[2]) + ")");
    }
    return out;
  }

  inline MulTable cyclic_group(std::size_t q) {
    if (q == 0) {
      throw OutOfRange("cyclic group order must be positive");
    }
    detail::require_construction_size(q, "cyclic group");
    std::vector<element_type> e(q * q);
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t j = 0; j < q; ++j) {
        e[i * q + j] = static_cast<element_type>((i + j) % q);
      }
    }
    return MulTable(q, std::move(e), "zq:" + std::to_string(q));
  }

  // Componentwise product; pair (x, y) has index x * |b| + y.
  inline MulTable direct_product(MulTable const& a, MulTable const& b) {
    std::size_t const na = a.order(), nb = b.order();
    detail::require_construction_size(na * nb, "direct product");
    std::size_t const         n = na * nb;
    std::vector<element_type> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        e[i * n + j] = static_cast<element_type>(a(i / nb, j / nb) * nb
                                                 + b(i % nb, j % nb));
      }
    }
    return MulTable(n, std::move(e),
                    "prod:(" + a.label() + "," + b.label() + ")");
  }

  // Z_q^k as a left-nested direct product.
  inline MulTable cyclic_group_power(std::size_t q, std::size_t k) {
    if (k == 0) {
      throw OutOfRange("group power exponent must be positive");
    }
    MulTable out = cyclic_group(q);
    for (std::size_t i = 1; i < k; ++i) {
      out = direct_product(out, cyclic_group(q));
    }
    return out.with_label("zq:" + std::to_string(q) + "^" + std::to_string(k));
  }

  inline bool rectangle_inequality_holds(std::uint64_t n, std::uint64_t p,
                                         std::uint64_t q) {
    return std::max((p - 1) * q, p * (q - 1)) < n && n < p * q;
  }

  // (p, q) with max{(p-1)q, p(q-1)} < n < pq, so that S_{p,q} has order
  // above n yet every proper sub-rectangle has fewer than n elements.
  inline std::pair<std::uint64_t, std::uint64_t> rectangle_dimensions(
      std::uint64_t n) {
    if (n == 0 || n == 1 || n == 2 || n == 4 || n == 6 || n == 12) {
      throw NoSolution("no rectangle dimensions exist for n = "
                       + std::to_string(n));
    }
    if (n % 2 == 1) {
      return {2, (n + 1) / 2};
    }
    if (n == 8) {
      return {3, 3};
    }
    if (n == 10) {
      return {3, 4};
    }
    if (n == 14) {
      return {3, 5};
    }
    // Even n >= 16: some k <= sqrt(n + 1) does not divide n.
    for (std::uint64_t k = 1; k * k <= n + 1; ++k) {
      if (n % k != 0) {
        return {k, n / k + 1};
      }
    }
    throw NoSolution("no non-divisor k <= sqrt(n + 1) for n = "
                     + std::to_string(n));
  }

  // The order-13 band with no subsemigroup of order 12.
  inline MulTable order_13_band() {
    return union_ideal(rectangular_band(3, 3), rectangular_band(2, 2));
  }

  // An idempotent semigroup of order > n with no subsemigroup of order n.
  inline MulTable counterexample_without_subsemigroup(std::uint64_t n) {
    if (n == 1 || n == 2 || n == 4 || n == 6) {
      throw TheoremForbids(
          "every band of order >= " + std::to_string(n)
          + " has a subsemigroup of order " + std::to_string(n));
    }
    if (n == 0) {
      throw OutOfRange("n must be positive");
    }
    if (n == 12) {
      return order_13_band();
    }
    auto const [p, q] = rectangle_dimensions(n);
    return rectangular_band(p, q);
  }

  inline std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= m; ++f) {
      if (m % f == 0) {
        out.push_back(f);
        while (m % f == 0) {
          m /= f;
        }
      }
    }
    if (m > 1) {
      out.push_back(m);
    }
    return out;
  }

  // A group satisfying x^r = x whose orders of subgroups (hence of
  // subsemigroups) all divide q^2 or q^3, so `blocked` is never achieved.
  inline MulTable group_counterexample(std::uint64_t r, int blocked) {
    if (r < 3) {
      throw OutOfRange("group counterexamples need r >= 3");
    }
    if (blocked != 2 && blocked != 4 && blocked != 6) {
      throw OutOfRange("blocked order must be 2, 4 or 6");
    }
    auto const primes = prime_factors(r - 1);
    if (blocked == 6) {
      return cyclic_group_power(primes.front(), 3);
    }
    for (auto q : primes) {
      if (q > 2) {
        return cyclic_group_power(q, 2);
      }
    }
    throw NoOddPrimeFactor("r - 1 = " + std::to_string(r - 1)
                           + " is a power of two");
  }

}  // namespace subsemi
