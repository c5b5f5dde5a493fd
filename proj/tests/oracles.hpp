#pragma once

// Brute-force reference implementations used only by the tests. None of
// these call into the search code they are checked against.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "subsemi/mul_table.hpp"

namespace oracle {

  using subsemi::element_type;
  using subsemi::MulTable;

  inline bool closed(MulTable const& t, std::uint64_t s) {
    for (std::size_t i = 0; i < t.order(); ++i) {
      for (std::size_t j = 0; j < t.order(); ++j) {
        if ((s >> i & 1U) && (s >> j & 1U) && !(s >> t(i, j) & 1U)) {
          return false;
        }
      }
    }
    return true;
  }

  // Every nonempty closed subset, by scanning all 2^n - 1 subsets.
  inline std::vector<std::uint64_t> closed_subsets(MulTable const& t) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 1; s < (std::uint64_t(1) << t.order()); ++s) {
      if (closed(t, s)) {
        out.push_back(s);
      }
    }
    return out;
  }

  inline std::set<std::size_t> spectrum(MulTable const& t) {
    std::set<std::size_t> out;
    for (auto s : closed_subsets(t)) {
      out.insert(static_cast<std::size_t>(__builtin_popcountll(s)));
    }
    return out;
  }

  // Smallest bit pattern among closed subsets of size k, or 0.
  inline std::uint64_t witness(MulTable const& t, std::size_t k) {
    for (auto s : closed_subsets(t)) {
      if (static_cast<std::size_t>(__builtin_popcountll(s)) == k) {
        return s;
      }
    }
    return 0;
  }

  inline bool associative(MulTable const& t) {
    auto const n = t.order();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (t(t(i, j), k) != t(i, t(j, k)))
            return false;
    return true;
  }

  // Left-to-right power, no squaring.
  inline std::size_t power(MulTable const& t, std::size_t a, std::uint64_t k) {
    std::size_t p = a;
    for (std::uint64_t e = 1; e < k; ++e) {
      p = t(p, a);
    }
    return p;
  }

  inline bool exponent_holds(MulTable const& t, std::uint64_t r) {
    for (std::size_t x = 0; x < t.order(); ++x) {
      if (power(t, x, r) != x) {
        return false;
      }
    }
    return true;
  }

  using Key = std::vector<element_type>;

  inline Key relabel_row_major(MulTable const& t, std::vector<std::size_t> const& p) {
    auto const n = t.order();
    Key        out(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out[p[i] * n + p[j]] = static_cast<element_type>(p[t(i, j)]);
    return out;
  }

  // Isomorphism-class key: row-major minimum over all relabellings.
  inline Key class_key(MulTable const& t) {
    std::vector<std::size_t> p(t.order());
    std::iota(p.begin(), p.end(), 0);
    Key best = relabel_row_major(t, p);
    while (std::next_permutation(p.begin(), p.end())) {
      best = std::min(best, relabel_row_major(t, p));
    }
    return best;
  }

  inline std::size_t automorphisms(MulTable const& t) {
    std::vector<std::size_t> p(t.order());
    std::iota(p.begin(), p.end(), 0);
    std::size_t count = 0;
    Key const   self(t.entries().begin(), t.entries().end());
    do {
      count += relabel_row_major(t, p) == self;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
  }

  // Every labelled table of order n (n <= 3) passing `keep`.
  inline std::vector<MulTable> all_tables(std::size_t n,
                                          std::function<bool(MulTable const&)> keep) {
    std::vector<MulTable>     out;
    std::size_t const         cells = n * n;
    std::vector<element_type> e(cells, 0);
    while (true) {
      MulTable t(n, e);
      if (keep(t)) {
        out.push_back(t);
      }
      std::size_t c = 0;
      while (c < cells && ++e[c] == n) {
        e[c++] = 0;
      }
      if (c == cells) {
        break;
      }
    }
    return out;
  }

  // Labelled semigroups of order n built row-major with a plain
  // associativity check on completed triples; no symmetry reduction.
  inline void backtrack_semigroups(std::size_t n,
                                   std::function<bool(std::size_t, std::size_t)> diag_ok,
                                   std::function<void(MulTable const&)> visit) {
    std::vector<int> e(n * n, -1);
    auto get = [&](std::size_t i, std::size_t j) { return e[i * n + j]; };
    auto ok  = [&]() {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          int ij = get(i, j);
          if (ij < 0) continue;
          for (std::size_t k = 0; k < n; ++k) {
            int jk = get(j, k);
            if (jk < 0) continue;
            int l = get(static_cast<std::size_t>(ij), k);
            int r = get(i, static_cast<std::size_t>(jk));
            if (l >= 0 && r >= 0 && l != r) return false;
          }
        }
      return true;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
      if (c == n * n) {
        std::vector<element_type> v(e.begin(), e.end());
        visit(MulTable(n, v));
        return;
      }
      for (std::size_t v = 0; v < n; ++v) {
        if (c / n == c % n && !diag_ok(c / n, v)) continue;
        e[c] = static_cast<int>(v);
        if (ok()) rec(c + 1);
      }
      e[c] = -1;
    };
    rec(0);
  }

  inline MulTable random_table(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<std::size_t> d(0, n - 1);
    std::vector<element_type>                  e(n * n);
    for (auto& x : e) x = static_cast<element_type>(d(rng));
    return MulTable(n, e);
  }

  // A semigroup of transformations of {0..m-1} generated by random maps;
  // returned as a table when it has at most max_order elements.
  inline std::optional<MulTable> random_transformation_semigroup(
      std::mt19937_64& rng, std::size_t m, std::size_t gens, std::size_t max_order) {
    using Map = std::vector<std::uint8_t>;
    std::uniform_int_distribution<std::size_t> d(0, m - 1);
    std::vector<Map>  elems;
    std::map<Map, std::size_t> index;
    auto add = [&](Map const& f) {
      if (index.emplace(f, elems.size()).second) elems.push_back(f);
    };
    std::vector<Map> g;
    for (std::size_t i = 0; i < gens; ++i) {
      Map f(m);
      for (auto& x : f) x = static_cast<std::uint8_t>(d(rng));
      g.push_back(f);
      add(f);
    }
    auto compose = [&](Map const& f, Map const& h) {  // apply f then h
      Map out(m);
      for (std::size_t x = 0; x < m; ++x) out[x] = h[f[x]];
      return out;
    };
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (auto const& h : g) {
        add(compose(elems[i], h));
        if (elems.size() > max_order) return std::nullopt;
      }
    }
    std::size_t const         n = elems.size();
    std::vector<element_type> e(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        e[i * n + j] = static_cast<element_type>(index.at(compose(elems[i], elems[j])));
    return MulTable(n, e);
  }

}  // namespace oracle
