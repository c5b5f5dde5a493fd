#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "closure.hpp"
#include "constructions.hpp"
#include "enumeration.hpp"
#include "error.hpp"
#include "mul_table.hpp"
#include "semigroup.hpp"
#include "sgt_io.hpp"

namespace subsemi {

  inline bool is_power_of_two_plus_one(std::uint64_t r) {
    return r >= 3 && std::has_single_bit(r - 1);
  }

  // Orders n for which every semigroup with x^r = x of order >= n is known
  // to contain a subsemigroup of order n.
  inline bool subsemigroup_forced(std::uint64_t r, std::size_t n) {
    if (n == 1) {
      return true;
    }
    if (r == 2) {
      return n == 2 || n == 4 || n == 6;
    }
    return is_power_of_two_plus_one(r) && (n == 2 || n == 4);
  }

  struct VerificationReport {
    enum class Status { verified, counterexample_found, skipped };

    std::string             claim;
    std::size_t             order_lo       = 0;
    std::size_t             order_hi       = 0;
    std::uint64_t           tables_checked = 0;
    std::uint64_t           power_witnesses_checked = 0;
    Status                  status         = Status::verified;
    std::optional<MulTable> counterexample;
    std::size_t             missing_order = 0;
    std::string             note;
    bool                    expected_verified = true;
    std::chrono::duration<double> elapsed{0};

    // A counterexample is only a failure when theory says there is none.
    bool consistent() const {
      return status != Status::counterexample_found || !expected_verified;
    }
  };

  inline char const* to_string(VerificationReport::Status s) {
    switch (s) {
      case VerificationReport::Status::verified:
        return "verified";
      case VerificationReport::Status::counterexample_found:
        return "counterexample";
      case VerificationReport::Status::skipped:
        return "skipped";
    }
    return "?";
  }

  struct HarnessOptions {
    EnumerationCaps caps;
    std::ostream*   progress = nullptr;  // tables/second per order
  };

  namespace detail {
    inline std::string census_claim(Constraint const& c, std::size_t n) {
      return c.tag() + "/order-" + std::to_string(n);
    }

    // Scans every canonical table of orders [lo, hi] once and checks each
    // target order against it. Tables smaller than a target are skipped for
    // that target.
    inline std::vector<VerificationReport> census_scan(
        Constraint const& c, std::vector<std::size_t> const& targets,
        std::size_t hi, HarnessOptions const& opts, bool power_witnesses) {
      std::vector<VerificationReport> reports;
      EnumerationQuery const top{hi, c, EnumerationMode::canonical_only};
      detail::check_caps(top, opts.caps);
      std::size_t lo = hi;
      for (auto n : targets) {
        if (n == 0) {
          throw OutOfRange("subsemigroup order must be positive");
        }
        if (n > hi) {
          throw OutOfRange("target order " + std::to_string(n)
                           + " exceeds max order " + std::to_string(hi));
        }
        VerificationReport r;
        r.claim    = census_claim(c, n);
        r.order_lo = n;
        r.order_hi = hi;
        r.expected_verified = subsemigroup_forced(c.r, n);
        reports.push_back(std::move(r));
        lo = std::min(lo, n);
      }
      std::vector<std::chrono::steady_clock::time_point> started(
          reports.size(), std::chrono::steady_clock::now());
      std::vector<std::chrono::duration<double>> spent(reports.size());
      for (std::size_t order = lo; order <= hi; ++order) {
        EnumerationQuery q{order, c, EnumerationMode::canonical_only};
        auto const       t0    = std::chrono::steady_clock::now();
        std::uint64_t    count = 0;
        enumerate(
            q,
            [&](MulTable const& t) {
              ++count;
              for (auto& r : reports) {
                if (order < r.order_lo
                    || r.status == VerificationReport::Status::counterexample_found) {
                  continue;
                }
                auto const s0 = std::chrono::steady_clock::now();
                ++r.tables_checked;
                if (!has_subsemigroup_of_order(t, r.order_lo)) {
                  r.status         = VerificationReport::Status::counterexample_found;
                  r.counterexample = t;
                  r.missing_order  = r.order_lo;
                }
                if (power_witnesses && (r.order_lo == 2 || r.order_lo == 4)
                    && is_power_of_two_plus_one(c.r)) {
                  for (std::size_t a = 0; a < t.order(); ++a) {
                    if (element_power(t, a, r.order_lo == 2 ? 2 : 3) == a) {
                      continue;
                    }
                    auto const w = exhibit_small_subsemigroup(
                        t, a, static_cast<int>(r.order_lo));
                    ++r.power_witnesses_checked;
                    if (w.size() != r.order_lo || !is_closed(t, w)) {
                      r.status = VerificationReport::Status::counterexample_found;
                      r.counterexample = t;
                      r.missing_order  = r.order_lo;
                      r.note = "power set of element " + std::to_string(a)
                               + " is not a subsemigroup of order "
                               + std::to_string(r.order_lo);
                    }
                  }
                }
                spent[static_cast<std::size_t>(&r - reports.data())]
                    += std::chrono::steady_clock::now() - s0;
              }
            },
            opts.caps);
        if (opts.progress != nullptr) {
          std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
          *opts.progress << "[" << c.tag() << "] order " << order << ": "
                         << count << " tables in " << std::fixed
                         << std::setprecision(3) << dt.count() << " s ("
                         << std::setprecision(0)
                         << (dt.count() > 0 ? count / dt.count() : 0.0)
                         << " tables/s)\n"
                         << std::defaultfloat;
        }
      }
      auto const done = std::chrono::steady_clock::now();
      for (std::size_t i = 0; i < reports.size(); ++i) {
        reports[i].elapsed = done - started[i];
      }
      return reports;
    }
  }  // namespace detail

  // Every canonical band of each order in [n, max_order] is searched for a
  // subsemigroup of order n.
  inline VerificationReport verify_band_theorem(std::size_t n, std::size_t max_order,
                                                HarnessOptions const& opts = {}) {
    return detail::census_scan(Constraint::idempotent(), {n}, max_order, opts,
                               false)
        .front();
  }

  // As verify_band_theorem over semigroups with x^r = x. When r = 2^m + 1 the
  // power subsemigroup of every non-idempotent element (order 2) or every a
  // with a^3 != a (order 4) is also checked.
  inline VerificationReport verify_exponent_theorem(std::uint64_t r, std::size_t n,
                                                    std::size_t max_order,
                                                    HarnessOptions const& opts = {}) {
    return detail::census_scan(Constraint::exponent(r), {n}, max_order, opts,
                               true)
        .front();
  }

  struct CounterexampleRecord {
    std::size_t   n = 0;
    std::uint64_t r = 2;
    std::string   construction;
    MulTable      table;
    Spectrum      spectrum;
    bool          satisfies_r = false;
    bool          is_band     = false;

    // The table is a genuine witness that order n is not forced for r.
    bool excludes() const {
      return satisfies_r && table.order() >= n && !spectrum.contains(n);
    }
  };

  // Builds a table with x^r = x (r = 2 meaning a band) of order >= n with no
  // subsemigroup of order n, then computes its spectrum exhaustively.
  inline CounterexampleRecord construct_counterexample(std::size_t n,
                                                       std::uint64_t r = 2) {
    if (n == 0) {
      throw OutOfRange("n must be positive");
    }
    if (r < 2) {
      throw OutOfRange("r must be at least 2");
    }
    if (n == 1) {
      throw TheoremForbids("every semigroup with x^r = x has an idempotent");
    }
    std::optional<MulTable> table;
    std::string             how;
    if (r > 2 && (n == 2 || n == 4 || n == 6)) {
      table = group_counterexample(r, static_cast<int>(n));
      how   = "group " + table->label();
    } else {
      table = counterexample_without_subsemigroup(n);
      how   = n == 12 ? "union:(rect:3x3,rect:2x2)" : table->label();
    }
    SearchOptions so;
    so.strategy = SearchStrategy::automatic;
    CounterexampleRecord rec{n, r, how, *table, spectrum(*table, so),
                             satisfies_exponent(*table, r), is_idempotent(*table)};
    return rec;
  }

  struct ResultsRow {
    std::string                       r_label;
    std::vector<std::uint64_t>        exponents;
    std::vector<std::size_t>          members;
    std::vector<std::size_t>          excluded;
    std::vector<std::size_t>          unresolved;
    std::vector<VerificationReport>   census;
    std::vector<CounterexampleRecord> counterexamples;

    bool consistent() const {
      return unresolved.empty()
             && std::all_of(census.begin(), census.end(),
                            [](auto const& c) { return c.consistent(); });
    }
  };

  struct ResultsTable {
    std::size_t             max_band_order = 7;
    std::size_t             max_exp_order  = 5;
    std::size_t             n_limit        = 20;
    std::vector<ResultsRow> rows;

    bool consistent() const {
      return std::all_of(rows.begin(), rows.end(),
                         [](auto const& r) { return r.consistent(); });
    }
  };

  namespace detail {
    inline std::string join(std::vector<std::size_t> const& xs) {
      std::string out;
      for (auto x : xs) {
        out += (out.empty() ? "" : ",") + std::to_string(x);
      }
      return out;
    }

    // For each n <= n_limit: excluded when a constructed table for every
    // exponent of the row is checked to lack order n; a member when the
    // census finds order n in every table for every exponent.
    inline ResultsRow results_row(std::string label,
                                  std::vector<std::uint64_t> exponents,
                                  std::size_t max_order, std::size_t n_limit,
                                  HarnessOptions const& opts) {
      ResultsRow row;
      row.r_label   = std::move(label);
      row.exponents = exponents;
      std::vector<std::size_t> candidates;
      for (std::size_t n = 1; n <= n_limit; ++n) {
        bool excluded = true;
        for (auto r : exponents) {
          try {
            auto rec = construct_counterexample(n, r);
            excluded = excluded && rec.excludes();
            row.counterexamples.push_back(std::move(rec));
          } catch (TheoremForbids const&) {
            excluded = false;
          } catch (NoOddPrimeFactor const&) {
            excluded = false;
          }
        }
        if (excluded) {
          row.excluded.push_back(n);
        } else {
          candidates.push_back(n);
        }
      }
      std::vector<std::size_t> scannable;
      for (auto n : candidates) {
        (n <= max_order ? scannable : row.unresolved).push_back(n);
      }
      std::vector<bool> member(n_limit + 1, !scannable.empty());
      for (auto r : exponents) {
        auto const c = r == 2 ? Constraint::idempotent() : Constraint::exponent(r);
        auto reports = census_scan(c, scannable, max_order, opts, r > 2);
        for (auto& rep : reports) {
          if (rep.status != VerificationReport::Status::verified) {
            member[rep.order_lo] = false;
          }
          row.census.push_back(std::move(rep));
        }
      }
      for (auto n : scannable) {
        (member[n] ? row.members : row.unresolved).push_back(n);
      }
      std::sort(row.unresolved.begin(), row.unresolved.end());
      return row;
    }
  }  // namespace detail

  inline ResultsTable results_table(std::size_t max_band_order = 7,
                                    std::size_t max_exp_order  = 5,
                                    HarnessOptions const& opts = {},
                                    std::size_t n_limit = 20) {
    ResultsTable out{max_band_order, max_exp_order, n_limit, {}};
    out.rows.push_back(
        detail::results_row("2", {2}, max_band_order, n_limit, opts));
    out.rows.push_back(detail::results_row("2^m+1 (m>0)", {3, 5}, max_exp_order,
                                           n_limit, opts));
    out.rows.push_back(
        detail::results_row("otherwise", {4, 7}, max_exp_order, n_limit, opts));
    return out;
  }

  inline std::string format_row(ResultsRow const& row) {
    std::string out = row.r_label + " | " + detail::join(row.members);
    if (!row.unresolved.empty()) {
      out += " ?" + detail::join(row.unresolved);
    }
    return out;
  }

  inline void render(std::ostream& out, ResultsTable const& t) {
    out << "r | n\n";
    for (auto const& row : t.rows) {
      out << format_row(row) << '\n';
      std::string rs;
      for (auto r : row.exponents) {
        rs += (rs.empty() ? "" : ",") + std::to_string(r);
      }
      std::uint64_t tables = 0;
      for (auto const& c : row.census) {
        tables += c.tables_checked;
      }
      out << "    census r=" << rs << " up to order "
          << (row.census.empty() ? 0 : row.census.front().order_hi) << ": "
          << (row.members.empty() ? "-" : detail::join(row.members))
          << " found in every table (" << tables << " checks)\n";
      out << "    excluded n <= " << t.n_limit << " by constructed tables: "
          << detail::join(row.excluded) << " (" << row.counterexamples.size()
          << " spectra computed)\n";
      if (!row.unresolved.empty()) {
        out << "    unresolved: " << detail::join(row.unresolved) << '\n';
      }
    }
    out << "n > " << t.n_limit
        << ": not scanned; excluded by the rectangular band construction\n";
  }

  inline void render(std::ostream& out, VerificationReport const& r,
                     bool verbose = false) {
    out << "claim: " << r.claim << '\n'
        << "orders: " << r.order_lo << ".." << r.order_hi << '\n'
        << "tables checked: " << r.tables_checked << '\n';
    if (r.power_witnesses_checked > 0) {
      out << "power witnesses checked: " << r.power_witnesses_checked << '\n';
    }
    out << "status: " << to_string(r.status) << '\n';
    if (r.counterexample) {
      out << "missing order: " << r.missing_order << '\n';
      if (!r.note.empty()) {
        out << "note: " << r.note << '\n';
      }
      write_sgt(out, *r.counterexample);
    }
    if (verbose) {
      out << "elapsed: " << r.elapsed.count() << " s\n";
    }
  }

  inline nlohmann::json to_json(VerificationReport const& r, bool verbose = false) {
    nlohmann::json j{{"claim", r.claim},
                     {"orders_scanned", {r.order_lo, r.order_hi}},
                     {"tables_checked", r.tables_checked},
                     {"power_witnesses_checked", r.power_witnesses_checked},
                     {"status", to_string(r.status)},
                     {"expected_verified", r.expected_verified}};
    if (r.counterexample) {
      j["counterexample"] = to_json(*r.counterexample);
      j["missing_order"]  = r.missing_order;
    }
    if (!r.note.empty()) {
      j["note"] = r.note;
    }
    if (verbose) {
      j["elapsed_seconds"] = r.elapsed.count();
    }
    return j;
  }

  inline nlohmann::json to_json(CounterexampleRecord const& c) {
    return {{"n", c.n},
            {"r", c.r},
            {"construction", c.construction},
            {"order", c.table.order()},
            {"spectrum", c.spectrum.achievable},
            {"satisfies_r", c.satisfies_r},
            {"idempotent", c.is_band},
            {"excludes_n", c.excludes()}};
  }

  inline nlohmann::json to_json(ResultsTable const& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (auto const& row : t.rows) {
      nlohmann::json census = nlohmann::json::array();
      for (auto const& c : row.census) {
        census.push_back(to_json(c));
      }
      nlohmann::json cx = nlohmann::json::array();
      for (auto const& c : row.counterexamples) {
        cx.push_back(to_json(c));
      }
      rows.push_back({{"r", row.r_label},
                      {"exponents", row.exponents},
                      {"n", row.members},
                      {"excluded", row.excluded},
                      {"unresolved", row.unresolved},
                      {"row", format_row(row)},
                      {"census", census},
                      {"counterexamples", cx}});
    }
    return {{"max_band_order", t.max_band_order},
            {"max_exp_order", t.max_exp_order},
            {"n_limit", t.n_limit},
            {"rows", rows}};
  }

}  // namespace subsemi
