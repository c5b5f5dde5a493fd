#include <random>

#include "catch_amalgamated.hpp"

#include "oracles.hpp"
#include "subsemi/closure.hpp"
#include "subsemi/enumeration.hpp"
#include "subsemi/free_band.hpp"
#include "subsemi/semigroup.hpp"

using namespace subsemi;

namespace {
  BandWord w(char const* s, std::size_t alphabet = 3) {
    return BandWord::from_string(s, alphabet);
  }

  BandWord random_word(std::mt19937_64& rng, std::size_t alphabet, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::uniform_int_distribution<int>         letter(0, static_cast<int>(alphabet) - 1);
    std::vector<letter_type>                   out(len(rng));
    for (auto& x : out) x = static_cast<letter_type>(letter(rng));
    return BandWord(out, alphabet);
  }

  // Rewrites u into an equal word by inserting squares and (xy)^2 = xy
  // expansions at random positions.
  BandWord scramble(std::mt19937_64& rng, BandWord const& u, std::size_t max_len) {
    std::vector<letter_type> v(u.letters().begin(), u.letters().end());
    std::uniform_int_distribution<int> coin(0, 1);
    while (v.size() < max_len) {
      std::uniform_int_distribution<std::size_t> pos(0, v.size() - 1);
      std::size_t i = pos(rng);
      std::size_t j = std::min(v.size(), i + 1 + pos(rng) % 3);
      if (v.size() + (j - i) > max_len) break;
      // Duplicate the factor v[i..j): x -> xx.
      v.insert(v.begin() + static_cast<std::ptrdiff_t>(j), v.begin() + static_cast<std::ptrdiff_t>(i),
               v.begin() + static_cast<std::ptrdiff_t>(j));
      if (coin(rng)) break;
    }
    return BandWord(v, u.alphabet());
  }

  std::vector<MulTable> bands_up_to(std::size_t max_order) {
    std::vector<MulTable> out;
    for (std::size_t n = 1; n <= max_order; ++n)
      for (auto const& t : enumerate_all({n, Constraint::idempotent()})) out.push_back(t);
    return out;
  }

  // Every assignment of the alphabet into t agrees on u and v.
  bool same_in(MulTable const& t, BandWord const& u, BandWord const& v) {
    std::size_t const         k = u.alphabet();
    std::vector<element_type> a(k, 0);
    while (true) {
      if (evaluate_word(t, u, a) != evaluate_word(t, v, a)) return false;
      std::size_t i = 0;
      while (i < k && ++a[i] == t.order()) a[i++] = 0;
      if (i == k) return true;
    }
  }
}  // namespace

TEST_CASE("green_rees_order", "[free_band]") {
  CHECK(green_rees_order(1) == 1);
  CHECK(green_rees_order(2) == 6);
  CHECK(green_rees_order(3) == 159);
  CHECK(green_rees_order(4) == 332380);
  CHECK(green_rees_order(6) > BigInt(std::numeric_limits<std::uint64_t>::max()));
  // Direct evaluation with pow as a second route.
  for (unsigned n = 1; n <= 8; ++n) {
    BigInt total = 0;
    for (unsigned r = 1; r <= n; ++r) {
      BigInt c = 1;
      for (unsigned i = 0; i < r; ++i) c = c * (n - i) / (i + 1);
      BigInt term = c;
      for (unsigned i = 1; i <= r; ++i) {
        term *= boost::multiprecision::pow(BigInt(r - i + 1), 1U << i);
      }
      total += term;
    }
    CHECK(green_rees_order(n) == total);
  }
  CHECK_THROWS_AS(green_rees_order(0), OutOfRange);
}

TEST_CASE("word_equal examples", "[free_band]") {
  CHECK(word_equal(w("aa"), w("a")));
  CHECK(word_equal(w("abab"), w("ab")));
  CHECK_FALSE(word_equal(w("aba"), w("ab")));
  CHECK_FALSE(word_equal(w("ab"), w("ba")));
  CHECK(word_equal(w("abcacbcabc"), canonical_form(w("abcacbcabc"))));
  CHECK_THROWS_AS(word_equal(w("a", 2), w("a", 3)), AlphabetMismatch);

  // aba and ab are told apart by some band of order <= 4.
  bool separated = false;
  for (auto const& t : bands_up_to(4)) separated = separated || !same_in(t, w("aba", 2), w("ab", 2));
  CHECK(separated);
}

TEST_CASE("canonical_form examples", "[free_band]") {
  CHECK(canonical_form(w("a")).to_string() == "a");
  CHECK(canonical_form(w("aabb")).to_string() == "ab");
  CHECK(canonical_form(w("ababab")).to_string() == "ab");
  CHECK(canonical_form(w("bab")).to_string() == "bab");
  CHECK_THROWS_AS(w(""), OutOfRange);
  CHECK_THROWS_AS(w("ad"), OutOfRange);
  CHECK_THROWS_AS(w("aB"), ParseError);
}

TEST_CASE("free_band_table", "[free_band]") {
  CHECK(free_band_table(1).table.order() == 1);

  auto fb2 = free_band_table(2);
  REQUIRE(fb2.table.order() == 6);
  auto index = [&](char const* s) {
    auto c = canonical_form(w(s, 2));
    return static_cast<std::size_t>(
        std::find(fb2.legend.begin(), fb2.legend.end(), c) - fb2.legend.begin());
  };
  CHECK(fb2.table(index("aba"), index("bab")) == index("ab"));
  for (std::size_t x = 0; x < 6; ++x) {
    for (std::size_t y = 0; y < 6; ++y) {
      if (x == y) continue;
      auto s = closure(fb2.table, ElementSet(6, {x, y})).size();
      CHECK(s >= 2);
      CHECK(s <= 6);
    }
  }

  auto fb3 = free_band_table(3);
  CHECK(fb3.table.order() == 159);
  CHECK(BigInt(fb3.table.order()) == green_rees_order(3));
  CHECK(is_associative_naive(fb3.table));
  CHECK(is_idempotent(fb3.table));
  for (auto const& c : fb3.legend) {
    CHECK(canonical_form(c) == c);
  }
  CHECK_THROWS_AS(free_band_table(4), TooLarge);
  CHECK_THROWS_AS(free_band_table(0), OutOfRange);
}

TEST_CASE("free band word properties", "[free_band][property]") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 2000; ++i) {
    auto u  = random_word(rng, 3, 12);
    auto v  = random_word(rng, 3, 12);
    auto x  = random_word(rng, 3, 6);
    auto cu = canonical_form(u);
    CHECK(word_equal(u * u, u));
    CHECK(word_equal(u, cu));
    CHECK(canonical_form(cu) == cu);
    CHECK(canonical_form(cu * cu) == cu);
    CHECK(content(cu) == content(u));
    CHECK(word_equal(u, v) == (cu == canonical_form(v)));
    auto s = scramble(rng, u, 24);
    REQUIRE(word_equal(u, s));
    CHECK(canonical_form(s) == cu);
    CHECK(word_equal(u * x, s * x));
    CHECK(word_equal(x * u, x * s));
  }
}

TEST_CASE("word_equal is sound in every small band", "[free_band][property]") {
  std::mt19937_64 rng(77);
  auto const      bands = bands_up_to(4);
  for (int i = 0; i < 150; ++i) {
    auto u = random_word(rng, 3, 12);
    auto v = i % 3 == 0 ? random_word(rng, 3, 12) : scramble(rng, u, 12);
    if (!word_equal(u, v)) continue;
    for (auto const& t : bands) {
      REQUIRE(same_in(t, u, v));
    }
  }
}

TEST_CASE("distinct classes over two letters are separated", "[free_band][property]") {
  auto const fb2   = free_band_table(2);
  auto const bands = bands_up_to(5);
  for (std::size_t i = 0; i < fb2.legend.size(); ++i) {
    for (std::size_t j = i + 1; j < fb2.legend.size(); ++j) {
      bool separated = false;
      for (auto const& t : bands) {
        if (!same_in(t, fb2.legend[i], fb2.legend[j])) {
          separated = true;
          break;
        }
      }
      CHECK(separated);
    }
  }
}
