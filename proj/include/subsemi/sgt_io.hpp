#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "enumeration.hpp"
#include "error.hpp"
#include "free_band.hpp"
#include "mul_table.hpp"

// Table text format (.sgt):
//
//   # optional comment lines, anywhere
//   n
//   row 0: n space-separated products 0*j
//   ...
//   row n-1
//
// A census file is a sequence of such blocks separated by blank lines.

namespace subsemi {

  namespace detail {
    struct LineReader {
      std::istream& in;
      std::string   source;
      std::size_t   line_no = 0;

      // Next non-comment line; blank lines are returned (they delimit
      // census blocks). False at end of input.
      bool next(std::string& line) {
        while (std::getline(in, line)) {
          ++line_no;
          if (!line.empty() && line.back() == '\r') {
            line.pop_back();
          }
          auto const first = line.find_first_not_of(" \t");
          if (first != std::string::npos && line[first] == '#') {
            continue;
          }
          return true;
        }
        return false;
      }

      [[noreturn]] void fail(std::size_t column, std::string const& msg) const {
        throw ParseError(source + ":" + std::to_string(line_no) + ":"
                         + std::to_string(column) + ": " + msg);
      }
    };

    inline bool is_blank(std::string const& s) {
      return s.find_first_not_of(" \t") == std::string::npos;
    }

    // Parses the integers on a line, remembering 1-based columns.
    inline std::vector<std::pair<long long, std::size_t>> integers(
        LineReader const& r, std::string const& line) {
      std::vector<std::pair<long long, std::size_t>> out;
      std::size_t                                    i = 0;
      while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') {
          ++i;
          continue;
        }
        std::size_t const start = i;
        long long         v     = 0;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
          if (line[i] < '0' || line[i] > '9') {
            r.fail(i + 1, "expected a non-negative integer");
          }
          v = v * 10 + (line[i] - '0');
          if (v > 1'000'000) {
            r.fail(start + 1, "integer too large");
          }
          ++i;
        }
        out.emplace_back(v, start + 1);
      }
      return out;
    }

    // Reads one table; returns false on clean end of input.
    inline bool read_block(LineReader& r, std::vector<MulTable>& out) {
      std::string line;
      do {
        if (!r.next(line)) {
          return false;
        }
      } while (is_blank(line));
      auto header = integers(r, line);
      if (header.size() != 1) {
        r.fail(1, "expected the table order on its own line");
      }
      auto const n = static_cast<std::size_t>(header[0].first);
      if (n == 0) {
        r.fail(header[0].second, "order must be at least 1");
      }
      if (n > max_table_order) {
        throw OrderTooLarge(r.source + ":" + std::to_string(r.line_no)
                            + ": order " + std::to_string(n) + " exceeds "
                            + std::to_string(max_table_order));
      }
      std::vector<element_type> entries;
      entries.reserve(n * n);
      for (std::size_t row = 0; row < n; ++row) {
        if (!r.next(line) || is_blank(line)) {
          r.fail(1, "expected row " + std::to_string(row) + " of "
                        + std::to_string(n));
        }
        auto values = integers(r, line);
        if (values.size() != n) {
          r.fail(1, "expected " + std::to_string(n) + " entries, found "
                        + std::to_string(values.size()));
        }
        for (auto [v, col] : values) {
          if (static_cast<std::size_t>(v) >= n) {
            r.fail(col, "entry " + std::to_string(v)
                            + " out of range for order " + std::to_string(n));
          }
          entries.push_back(static_cast<element_type>(v));
        }
      }
      out.emplace_back(n, std::move(entries));
      return true;
    }
  }  // namespace detail

  inline MulTable read_sgt(std::istream& in, std::string const& source = "<input>") {
    detail::LineReader    r{in, source};
    std::vector<MulTable> tables;
    if (!detail::read_block(r, tables)) {
      r.fail(1, "empty input");
    }
    std::string line;
    while (r.next(line)) {
      if (!detail::is_blank(line)) {
        r.fail(1, "trailing content after the table");
      }
    }
    return tables.front();
  }

  inline MulTable parse_sgt(std::string const& text,
                            std::string const& source = "<input>") {
    std::istringstream in(text);
    return read_sgt(in, source);
  }

  inline std::vector<MulTable> read_sgt_blocks(std::istream&      in,
                                               std::string const& source = "<input>") {
    detail::LineReader    r{in, source};
    std::vector<MulTable> tables;
    while (detail::read_block(r, tables)) {
    }
    return tables;
  }

  inline void write_sgt(std::ostream& out, MulTable const& t) {
    if (!t.label().empty()) {
      out << "# " << t.label() << '\n';
    }
    out << t.order() << '\n';
    for (std::size_t i = 0; i < t.order(); ++i) {
      for (std::size_t j = 0; j < t.order(); ++j) {
        out << (j == 0 ? "" : " ") << t(i, j);
      }
      out << '\n';
    }
  }

  inline std::string to_sgt(MulTable const& t) {
    std::ostringstream out;
    write_sgt(out, t);
    return out.str();
  }

  inline nlohmann::json to_json(MulTable const& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < t.order(); ++i) {
      auto r = t.row(i);
      rows.push_back(std::vector<element_type>(r.begin(), r.end()));
    }
    return {{"order", t.order()}, {"entries", rows}, {"label", t.label()}};
  }

  inline MulTable table_from_json(nlohmann::json const& j) {
    try {
      auto const n = j.at("order").get<std::size_t>();
      auto const& rows = j.at("entries");
      if (!rows.is_array() || rows.size() != n) {
        throw ParseError("\"entries\" must hold " + std::to_string(n) + " rows");
      }
      std::vector<element_type> entries;
      for (auto const& row : rows) {
        if (!row.is_array() || row.size() != n) {
          throw ParseError("each row must hold " + std::to_string(n) + " entries");
        }
        for (auto const& v : row) {
          auto const x = v.get<long long>();
          if (x < 0 || static_cast<std::size_t>(x) >= n) {
            throw ParseError("entry " + std::to_string(x) + " out of range");
          }
          entries.push_back(static_cast<element_type>(x));
        }
      }
      return MulTable(n, std::move(entries), j.value("label", std::string{}));
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(e.what());
    }
  }

  // Census manifest line: order, the n*n entries row-major, constraint tag.
  inline std::string manifest_line(MulTable const& t, Constraint const& c) {
    std::string out = std::to_string(t.order());
    for (auto v : t.entries()) {
      out += ' ' + std::to_string(v);
    }
    return out + ' ' + c.tag();
  }

  inline std::pair<MulTable, std::string> parse_manifest_line(std::string const& line) {
    std::istringstream in(line);
    std::size_t        n = 0;
    if (!(in >> n) || n == 0 || n > max_table_order) {
      throw ParseError("manifest line must start with a valid order");
    }
    std::vector<element_type> entries(n * n);
    for (auto& e : entries) {
      long long v = -1;
      if (!(in >> v) || v < 0 || static_cast<std::size_t>(v) >= n) {
        throw ParseError("manifest entry missing or out of range");
      }
      e = static_cast<element_type>(v);
    }
    std::string tag;
    if (!(in >> tag)) {
      throw ParseError("manifest line lacks a constraint tag");
    }
    return {MulTable(n, std::move(entries)), tag};
  }

  // Companion legend for free band tables: "index word" per line.
  inline void write_legend(std::ostream& out, FreeBandTable const& fb) {
    for (std::size_t i = 0; i < fb.legend.size(); ++i) {
      out << i << ' ' << fb.legend[i].to_string() << '\n';
    }
  }

}  // namespace subsemi
