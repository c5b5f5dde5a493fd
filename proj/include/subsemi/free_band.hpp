#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"
#include "mul_table.hpp"

namespace subsemi {

  using BigInt = boost::multiprecision::cpp_int;

  // Order of the free band on n generators:
  //   sum_{r=1}^{n} C(n, r) prod_{i=1}^{r} (r - i + 1)^(2^i).
  inline BigInt green_rees_order(unsigned n) {
    if (n == 0) {
      throw OutOfRange("free band needs at least one generator");
    }
    BigInt total    = 0;
    BigInt binomial = 1;
    for (unsigned r = 1; r <= n; ++r) {
      binomial = binomial * (n - r + 1) / r;
      BigInt product = 1;
      for (unsigned i = 1; i <= r; ++i) {
        // (r - i + 1)^(2^i) by squaring i times.
        BigInt factor = r - i + 1;
        for (unsigned s = 0; s < i && factor != 1; ++s) {
          factor *= factor;
        }
        product *= factor;
      }
      total += binomial * product;
    }
    return total;
  }

  inline constexpr std::size_t max_alphabet = 26;

  using letter_type = std::uint8_t;

  class BandWord {
   public:
    BandWord(std::vector<letter_type> letters, std::size_t alphabet)
        : _letters(std::move(letters)), _alphabet(alphabet) {
      if (_alphabet == 0 || _alphabet > max_alphabet) {
        throw OutOfRange("alphabet size must be in 1.."
                         + std::to_string(max_alphabet));
      }
      if (_letters.empty()) {
        throw OutOfRange("band words are nonempty");
      }
      for (auto x : _letters) {
        if (x >= _alphabet) {
          throw OutOfRange("letter " + std::string(1, char('a' + x))
                           + " outside an alphabet of size "
                           + std::to_string(_alphabet));
        }
      }
    }

    // Letters 'a', 'b', ... ; the alphabet defaults to {a, b, c}.
    static BandWord from_string(std::string_view text, std::size_t alphabet = 3) {
      std::vector<letter_type> letters;
      for (char c : text) {
        if (c < 'a' || c > 'z') {
          throw ParseError("invalid letter '" + std::string(1, c) + "' in \""
                           + std::string(text) + "\"");
        }
        letters.push_back(static_cast<letter_type>(c - 'a'));
      }
      return BandWord(std::move(letters), alphabet);
    }

    std::span<letter_type const> letters() const noexcept {
      return _letters;
    }

    std::size_t alphabet() const noexcept {
      return _alphabet;
    }

    std::size_t size() const noexcept {
      return _letters.size();
    }

    std::string to_string() const {
      std::string out;
      for (auto x : _letters) {
        out += static_cast<char>('a' + x);
      }
      return out;
    }

    friend BandWord operator*(BandWord const& u, BandWord const& v) {
      if (u._alphabet != v._alphabet) {
        throw AlphabetMismatch("cannot concatenate words over alphabets of size "
                               + std::to_string(u._alphabet) + " and "
                               + std::to_string(v._alphabet));
      }
      std::vector<letter_type> w(u._letters);
      w.insert(w.end(), v._letters.begin(), v._letters.end());
      return BandWord(std::move(w), u._alphabet);
    }

    friend bool operator==(BandWord const&, BandWord const&) = default;
    friend auto operator<=>(BandWord const&, BandWord const&) = default;

   private:
    std::vector<letter_type> _letters;
    std::size_t              _alphabet;
  };

  // A word that is its own canonical form.
  using CanonicalWord = BandWord;

  namespace detail {
    using letters_view = std::span<letter_type const>;

    inline std::uint32_t content_mask(letters_view w) noexcept {
      std::uint32_t m = 0;
      for (auto x : w) {
        m |= std::uint32_t(1) << x;
      }
      return m;
    }

    // Position of the letter whose first occurrence completes the content.
    inline std::size_t prefix_mark(letters_view w, std::uint32_t content) {
      std::uint32_t seen = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        seen |= std::uint32_t(1) << w[i];
        if (seen == content) {
          return i;
        }
      }
      return w.size();
    }

    // Position of the letter whose last occurrence completes the content,
    // reading right to left.
    inline std::size_t suffix_mark(letters_view w, std::uint32_t content) {
      std::uint32_t seen = 0;
      for (std::size_t i = w.size(); i-- > 0;) {
        seen |= std::uint32_t(1) << w[i];
        if (seen == content) {
          return i;
        }
      }
      return 0;
    }

    // u and v are equal in the free band iff they have the same content,
    // the same prefix mark letter with equal words before it, and dually.
    inline bool band_equal(letters_view u, letters_view v) {
      auto const cu = content_mask(u);
      if (cu != content_mask(v)) {
        return false;
      }
      if (std::popcount(cu) == 1) {
        return true;
      }
      auto const pu = prefix_mark(u, cu), pv = prefix_mark(v, cu);
      auto const su = suffix_mark(u, cu), sv = suffix_mark(v, cu);
      return u[pu] == v[pv] && u[su] == v[sv]
             && band_equal(u.first(pu), v.first(pv))
             && band_equal(u.subspan(su + 1), v.subspan(sv + 1));
    }

    // Normal form: canonical(prefix) + mark, then mark + canonical(suffix),
    // glued along their longest overlap. Both halves keep the word's
    // prefix and suffix invariants, so the result is equivalent to w and
    // depends only on its class.
    inline std::vector<letter_type> normal_form(letters_view w) {
      auto const c = content_mask(w);
      if (std::popcount(c) == 1) {
        return {w.front()};
      }
      auto const p = prefix_mark(w, c);
      auto const s = suffix_mark(w, c);
      auto       left  = normal_form(w.first(p));
      auto       right = normal_form(w.subspan(s + 1));
      left.push_back(w[p]);
      right.insert(right.begin(), w[s]);
      std::size_t overlap = std::min(left.size(), right.size());
      for (; overlap > 0; --overlap) {
        if (std::equal(left.end() - static_cast<std::ptrdiff_t>(overlap),
                       left.end(), right.begin())) {
          break;
        }
      }
      left.insert(left.end(), right.begin() + static_cast<std::ptrdiff_t>(overlap),
                  right.end());
      return left;
    }
  }  // namespace detail

  inline bool word_equal(BandWord const& u, BandWord const& v) {
    if (u.alphabet() != v.alphabet()) {
      throw AlphabetMismatch("words over alphabets of size "
                             + std::to_string(u.alphabet()) + " and "
                             + std::to_string(v.alphabet()));
    }
    return detail::band_equal(u.letters(), v.letters());
  }

  inline CanonicalWord canonical_form(BandWord const& u) {
    return CanonicalWord(detail::normal_form(u.letters()), u.alphabet());
  }

  inline std::uint32_t content(BandWord const& u) {
    return detail::content_mask(u.letters());
  }

  // Value of a word in t when letter x is sent to assignment[x].
  inline element_type evaluate_word(MulTable const& t, BandWord const& w,
                                    std::span<element_type const> assignment) {
    auto const letters = w.letters();
    element_type acc = assignment[letters[0]];
    for (std::size_t i = 1; i < letters.size(); ++i) {
      acc = t(acc, assignment[letters[i]]);
    }
    return acc;
  }

  struct FreeBandTable {
    MulTable                   table;
    std::vector<CanonicalWord> legend;  // legend[i] is element i
  };

  inline constexpr unsigned max_free_band_generators = 3;

  // The free band on k generators as an explicit table, built by closing the
  // generators under concatenate-then-normalize. Elements are sorted by
  // (length, letters); generators come first.
  inline FreeBandTable free_band_table(unsigned k) {
    if (k == 0) {
      throw OutOfRange("free band needs at least one generator");
    }
    if (k > max_free_band_generators) {
      throw TooLarge("free band on " + std::to_string(k)
                     + " generators is too large for an explicit table");
    }
    std::vector<CanonicalWord>           words;
    std::map<CanonicalWord, std::size_t> index;
    for (unsigned g = 0; g < k; ++g) {
      CanonicalWord w({static_cast<letter_type>(g)}, k);
      index.emplace(w, words.size());
      words.push_back(std::move(w));
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
          auto w = canonical_form(words[x] * words[y]);
          if (index.emplace(w, words.size()).second) {
            words.push_back(std::move(w));
          }
        }
      }
    }
    std::sort(words.begin(), words.end(), [](auto const& a, auto const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    index.clear();
    for (std::size_t i = 0; i < words.size(); ++i) {
      index.emplace(words[i], i);
    }
    std::size_t const         n = words.size();
    std::vector<element_type> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        e[i * n + j] = static_cast<element_type>(
            index.at(canonical_form(words[i] * words[j])));
      }
    }
    return {MulTable(n, std::move(e), "FB(" + std::to_string(k) + ")"),
            std::move(words)};
  }

}  // namespace subsemi
