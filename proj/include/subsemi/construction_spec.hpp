#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "constructions.hpp"
#include "error.hpp"
#include "mul_table.hpp"

namespace subsemi {

  // Declarative recipe for a table. Textual grammar:
  //
  //   spec  := "rect:" INT "x" INT
  //          | "zq:" INT [ "^" INT ]        (Z_q, or Z_q^k as a product)
  //          | "union:(" spec "," spec ")"  (second operand is the ideal)
  //          | "prod:(" spec "," spec ")"
  //
  // Whitespace is not allowed. format() writes the shortest form, so
  // parse(format(s)) == s for every spec.
  struct ConstructionSpec {
    enum class Kind { rectangular_band, union_ideal, cyclic_group, direct_product };

    Kind                          kind = Kind::cyclic_group;
    std::size_t                   p    = 1;  // rows, or the group order
    std::size_t                   q    = 1;  // columns
    std::vector<ConstructionSpec> operands;  // two, for union/product

    static ConstructionSpec rect(std::size_t p, std::size_t q) {
      return {Kind::rectangular_band, p, q, {}};
    }
    static ConstructionSpec cyclic(std::size_t q) {
      return {Kind::cyclic_group, q, 1, {}};
    }
    static ConstructionSpec union_of(ConstructionSpec upper,
                                     ConstructionSpec lower) {
      return {Kind::union_ideal, 1, 1, {std::move(upper), std::move(lower)}};
    }
    static ConstructionSpec product(ConstructionSpec a, ConstructionSpec b) {
      return {Kind::direct_product, 1, 1, {std::move(a), std::move(b)}};
    }

    friend bool operator==(ConstructionSpec const&, ConstructionSpec const&)
        = default;
  };

  namespace detail {
    class SpecParser {
     public:
      explicit SpecParser(std::string_view text) : _text(text) {}

      ConstructionSpec parse_all() {
        auto s = parse_spec();
        if (_pos != _text.size()) {
          fail("unexpected trailing input");
        }
        return s;
      }

     private:
      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError("construction spec column " + std::to_string(_pos + 1)
                         + ": " + msg + " in \"" + std::string(_text) + "\"");
      }

      bool consume(std::string_view token) {
        if (_text.substr(_pos, token.size()) == token) {
          _pos += token.size();
          return true;
        }
        return false;
      }

      void expect(std::string_view token) {
        if (!consume(token)) {
          fail("expected \"" + std::string(token) + "\"");
        }
      }

      std::size_t integer() {
        std::size_t start = _pos;
        std::size_t value = 0;
        while (_pos < _text.size()
               && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          value = value * 10 + static_cast<std::size_t>(_text[_pos] - '0');
          if (value > 1'000'000) {
            fail("integer too large");
          }
          ++_pos;
        }
        if (_pos == start) {
          fail("expected a positive integer");
        }
        if (value == 0) {
          _pos = start;
          fail("expected a positive integer");
        }
        return value;
      }

      std::pair<ConstructionSpec, ConstructionSpec> pair() {
        expect("(");
        auto a = parse_spec();
        expect(",");
        auto b = parse_spec();
        expect(")");
        return {std::move(a), std::move(b)};
      }

      ConstructionSpec parse_spec() {
        if (consume("rect:")) {
          auto p = integer();
          expect("x");
          auto q = integer();
          return ConstructionSpec::rect(p, q);
        }
        if (consume("zq:")) {
          auto q = integer();
          std::size_t k = 1;
          if (consume("^")) {
            k = integer();
          }
          auto out = ConstructionSpec::cyclic(q);
          for (std::size_t i = 1; i < k; ++i) {
            out = ConstructionSpec::product(std::move(out),
                                            ConstructionSpec::cyclic(q));
          }
          return out;
        }
        if (consume("union:")) {
          auto [a, b] = pair();
          return ConstructionSpec::union_of(std::move(a), std::move(b));
        }
        if (consume("prod:")) {
          auto [a, b] = pair();
          return ConstructionSpec::product(std::move(a), std::move(b));
        }
        fail("expected one of rect:, zq:, union:, prod:");
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };

    // k >= 2 if s is a left-nested product of k copies of the same Z_q.
    inline std::optional<std::pair<std::size_t, std::size_t>> group_power(
        ConstructionSpec const& s) {
      using K = ConstructionSpec::Kind;
      if (s.kind != K::direct_product) {
        return std::nullopt;
      }
      auto const& right = s.operands[1];
      if (right.kind != K::cyclic_group) {
        return std::nullopt;
      }
      auto const& left = s.operands[0];
      if (left.kind == K::cyclic_group && left.p == right.p) {
        return std::pair{right.p, std::size_t(2)};
      }
      if (auto inner = group_power(left); inner && inner->first == right.p) {
        return std::pair{right.p, inner->second + 1};
      }
      return std::nullopt;
    }
  }  // namespace detail

  inline ConstructionSpec parse_construction(std::string_view text) {
    return detail::SpecParser(text).parse_all();
  }

  inline std::string format_construction(ConstructionSpec const& s) {
    using K = ConstructionSpec::Kind;
    switch (s.kind) {
      case K::rectangular_band:
        return "rect:" + std::to_string(s.p) + "x" + std::to_string(s.q);
      case K::cyclic_group:
        return "zq:" + std::to_string(s.p);
      case K::union_ideal:
        return "union:(" + format_construction(s.operands[0]) + ","
               + format_construction(s.operands[1]) + ")";
      case K::direct_product:
        if (auto gp = detail::group_power(s)) {
          return "zq:" + std::to_string(gp->first) + "^"
                 + std::to_string(gp->second);
        }
        return "prod:(" + format_construction(s.operands[0]) + ","
               + format_construction(s.operands[1]) + ")";
    }
    return {};
  }

  inline MulTable evaluate(ConstructionSpec const& s) {
    using K = ConstructionSpec::Kind;
    MulTable out = [&] {
      switch (s.kind) {
        case K::rectangular_band:
          return rectangular_band(s.p, s.q);
        case K::cyclic_group:
          return cyclic_group(s.p);
        case K::union_ideal:
          return union_ideal(evaluate(s.operands[0]), evaluate(s.operands[1]));
        case K::direct_product:
          break;
      }
      return direct_product(evaluate(s.operands[0]), evaluate(s.operands[1]));
    }();
    return out.with_label(format_construction(s));
  }

}  // namespace subsemi
