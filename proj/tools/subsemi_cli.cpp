// subsemi: command-line front end for subsemigroup-order experiments.
//
// Exit codes: 0 when every claim checked is verified or consistent with the
// known classification, 1 when a counterexample appears where none should
// exist, 2 on usage, parse or validation errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "subsemi/subsemi.hpp"

namespace {

  using namespace subsemi;
  using json = nlohmann::json;

  constexpr int exit_ok       = 0;
  constexpr int exit_mismatch = 1;
  constexpr int exit_usage    = 2;

  struct Globals {
    std::string format  = "text";
    bool        verbose = false;

    bool json() const {
      return format == "json";
    }

    HarnessOptions harness() const {
      HarnessOptions o;
      if (verbose) {
        o.progress = &std::cerr;
      }
      return o;
    }
  };

  void print_json(json const& j) {
    std::cout << j.dump(2) << '\n';
  }

  void write_file(std::string const& path, std::string const& content) {
    std::ofstream out(path);
    if (!out) {
      throw Error("IOError", "cannot write " + path);
    }
    out << content;
  }

  MulTable load_table(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError(path + ": cannot open file");
    }
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
      try {
        return table_from_json(json::parse(in));
      } catch (json::exception const& e) {
        throw ParseError(path + ": " + e.what());
      }
    }
    return read_sgt(in, path);
  }

  Constraint parse_constraint(std::string const& s) {
    if (s == "band") {
      return Constraint::idempotent();
    }
    if (s.rfind("exp:", 0) == 0) {
      try {
        return Constraint::exponent(std::stoull(s.substr(4)));
      } catch (std::logic_error const&) {
      }
    }
    throw ParseError("constraint must be \"band\" or \"exp:R\", got \"" + s + "\"");
  }

  int report_exit(VerificationReport const& r) {
    return r.consistent() ? exit_ok : exit_mismatch;
  }

  int emit_report(Globals const& g, VerificationReport const& r) {
    if (g.json()) {
      print_json(to_json(r, g.verbose));
    } else {
      render(std::cout, r, g.verbose);
    }
    return report_exit(r);
  }

  int cmd_counterexample(Globals const& g, std::size_t n, std::uint64_t r,
                         std::string const& out_path) {
    auto rec = construct_counterexample(n, r);
    if (!out_path.empty()) {
      write_file(out_path, to_sgt(rec.table));
    }
    if (g.json()) {
      auto j = to_json(rec);
      if (out_path.empty()) {
        j["table"] = to_json(rec.table);
      }
      print_json(j);
    } else {
      if (out_path.empty()) {
        write_sgt(std::cout, rec.table);
      }
      std::cout << "construction: " << rec.construction << '\n'
                << "order: " << rec.table.order() << '\n'
                << "satisfies x^" << r << " = x: "
                << (rec.satisfies_r ? "yes" : "no") << '\n'
                << "spectrum: " << to_string(rec.spectrum) << '\n'
                << n << (rec.excludes() ? " ∉ spectrum" : " ∈ spectrum") << '\n';
    }
    return rec.excludes() ? exit_ok : exit_mismatch;
  }

  int cmd_check(Globals const& g, std::string const& path,
                std::string const& spec_text, std::vector<std::size_t> const& ks,
                bool want_spectrum) {
    MulTable t = spec_text.empty() ? load_table(path)
                                   : evaluate(parse_construction(spec_text));
    auto report = validate_table(t, std::vector<std::uint64_t>{2, 3, 4, 5});
    if (!report.is_associative) {
      auto const& v = *report.first_violation;
      throw NotAssociative("(" + std::to_string(v[0]) + "*" + std::to_string(v[1])
                           + ")*" + std::to_string(v[2]) + " != "
                           + std::to_string(v[0]) + "*(" + std::to_string(v[1])
                           + "*" + std::to_string(v[2]) + ")");
    }
    if (t.order() > max_set_order) {
      throw OrderTooLarge("subsemigroup search supports order <= 64");
    }
    json j{{"order", t.order()}, {"idempotent", report.is_idempotent}};
    json exps = json::object();
    for (auto [r, ok] : report.exponent_witness) {
      exps[std::to_string(r)] = ok;
    }
    j["exponents"] = exps;
    json queries   = json::array();
    if (!g.json()) {
      std::cout << "order: " << t.order() << '\n'
                << "idempotent: " << (report.is_idempotent ? "yes" : "no") << '\n';
    }
    for (auto k : ks) {
      auto w = has_subsemigroup_of_order(t, k);
      if (g.json()) {
        queries.push_back({{"k", k},
                           {"witness", w ? json(w->elements()) : json(nullptr)}});
      } else {
        std::cout << "k=" << k << ": " << (w ? "witness " + w->to_string() : "absent")
                  << '\n';
      }
    }
    j["queries"] = queries;
    if (want_spectrum) {
      SearchOptions so;
      so.strategy = SearchStrategy::automatic;
      auto s = spectrum(t, so);
      j["spectrum"] = s.achievable;
      if (!g.json()) {
        std::cout << "spectrum: " << to_string(s) << '\n';
      }
    }
    if (g.json()) {
      print_json(j);
    }
    return exit_ok;
  }

  int cmd_free_band(Globals const& g, unsigned gens, std::string const& table_out,
                    std::vector<std::string> const& canon,
                    std::vector<std::string> const& equal) {
    json j{{"generators", gens},
           {"green_rees_order", green_rees_order(gens).str()}};
    if (!g.json()) {
      std::cout << "I_" << gens << " = " << green_rees_order(gens) << '\n';
    }
    if (!table_out.empty()) {
      auto fb = free_band_table(gens);
      write_file(table_out, to_sgt(fb.table));
      std::ostringstream legend;
      write_legend(legend, fb);
      write_file(table_out + ".legend", legend.str());
      j["table_order"] = fb.table.order();
      if (!g.json()) {
        std::cout << "table order " << fb.table.order() << " written to "
                  << table_out << " (legend " << table_out << ".legend)\n";
      }
    }
    auto const alphabet = std::max<std::size_t>(gens, 1);
    for (auto const& w : canon) {
      auto c = canonical_form(BandWord::from_string(w, alphabet));
      j["canonical"][w] = c.to_string();
      if (!g.json()) {
        std::cout << w << " -> " << c.to_string() << '\n';
      }
    }
    if (equal.size() == 2) {
      bool eq = word_equal(BandWord::from_string(equal[0], alphabet),
                           BandWord::from_string(equal[1], alphabet));
      j["equal"] = eq;
      if (!g.json()) {
        std::cout << equal[0] << (eq ? " = " : " != ") << equal[1] << '\n';
      }
    }
    if (g.json()) {
      print_json(j);
    }
    return exit_ok;
  }

  int cmd_census(Globals const& g, std::size_t order, std::string const& constraint,
                 bool count_only, bool manifest, bool labeled) {
    EnumerationQuery q{order, parse_constraint(constraint),
                       labeled ? EnumerationMode::all_labeled
                               : EnumerationMode::canonical_only};
    if (count_only) {
      auto c = count(q);
      if (g.json()) {
        print_json({{"order", order}, {"constraint", q.constraint.tag()},
                    {"labeled", labeled}, {"count", c}});
      } else {
        std::cout << c << '\n';
      }
      return exit_ok;
    }
    json          all   = json::array();
    std::uint64_t index = 0;
    enumerate(q, [&](MulTable const& t) {
      if (g.json()) {
        all.push_back(to_json(t));
      } else if (manifest) {
        std::cout << manifest_line(t, q.constraint) << '\n';
      } else {
        std::cout << (index == 0 ? "" : "\n") << "# " << q.constraint.tag()
                  << " order " << order << " #" << index << '\n';
        write_sgt(std::cout, t);
      }
      ++index;
    });
    if (g.json()) {
      print_json(all);
    }
    return exit_ok;
  }

  int cmd_pq(Globals const& g, std::uint64_t n) {
    auto [p, q] = rectangle_dimensions(n);
    if (g.json()) {
      print_json({{"n", n}, {"p", p}, {"q", q}});
    } else {
      std::cout << "n=" << n << " p=" << p << " q=" << q << "  max{"
                << (p - 1) * q << "," << p * (q - 1) << "} < " << n << " < "
                << p * q << '\n';
    }
    return exit_ok;
  }

  int cmd_results(Globals const& g, std::size_t max_band, std::size_t max_exp) {
    auto table = results_table(max_band, max_exp, g.harness());
    if (g.json()) {
      print_json(to_json(table));
    } else {
      render(std::cout, table);
    }
    return table.consistent() ? exit_ok : exit_mismatch;
  }

  int cmd_construct(Globals const& g, std::string const& spec,
                    std::string const& out_path) {
    auto t = evaluate(parse_construction(spec));
    if (!out_path.empty()) {
      write_file(out_path, g.json() ? to_json(t).dump(2) + "\n" : to_sgt(t));
    } else if (g.json()) {
      print_json(to_json(t));
    } else {
      write_sgt(std::cout, t);
    }
    return exit_ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subsemigroup orders in semigroups satisfying x^r = x"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("-v,--verbose", g.verbose, "Progress on stderr, elapsed times");

  std::size_t   n = 0, max_order = 0, order = 0, max_band = 7, max_exp = 5;
  std::uint64_t r = 2;
  unsigned      gens = 1;
  std::string   out_path, file, spec, constraint = "band", table_out;
  std::vector<std::size_t> ks;
  std::vector<std::string> canon, equal;
  bool want_spectrum = false, count_only = false, manifest = false, labeled = false;

  auto* vb = app.add_subcommand("verify-band", "Check every band of order n..max has an order-n subsemigroup");
  vb->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  vb->add_option("--max-order", max_order)->required()->check(CLI::PositiveNumber);

  auto* ve = app.add_subcommand("verify-exponent", "As verify-band over semigroups with x^r = x");
  ve->add_option("--r", r)->required()->check(CLI::Range(2, 1 << 20));
  ve->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  ve->add_option("--max-order", max_order)->required()->check(CLI::PositiveNumber);

  auto* cx = app.add_subcommand("counterexample", "Construct a table lacking an order-n subsemigroup");
  cx->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  cx->add_option("--r", r, "Exponent the table must satisfy (default 2: a band)")
      ->check(CLI::Range(2, 1 << 20));
  cx->add_option("--out", out_path, "Write the table here (.sgt)");

  auto* ck = app.add_subcommand("check", "Analyse a table from a file or construction");
  auto* ck_file = ck->add_option("--file", file, ".sgt or .json table");
  auto* ck_spec = ck->add_option("--construct", spec, "Construction, e.g. rect:3x3");
  ck_file->excludes(ck_spec);
  ck->add_option("--k", ks, "Subsemigroup orders to search for")->delimiter(',');
  ck->add_flag("--spectrum", want_spectrum, "Print every achievable order");

  auto* fb = app.add_subcommand("free-band", "Free band order, tables and word problem");
  fb->add_option("--gens", gens)->required()->check(CLI::Range(1, 12));
  fb->add_option("--table-out", table_out, "Write the table (gens <= 3) plus a .legend file");
  fb->add_option("--canon", canon, "Print the normal form of these words");
  fb->add_option("--equal", equal, "Decide whether two words are equal")->expected(2);

  auto* cs = app.add_subcommand("census", "Enumerate tables up to isomorphism");
  cs->add_option("--order", order)->required()->check(CLI::PositiveNumber);
  cs->add_option("--constraint", constraint, "band or exp:R");
  cs->add_flag("--count-only", count_only);
  cs->add_flag("--manifest", manifest, "One line per table instead of .sgt blocks");
  cs->add_flag("--labeled", labeled, "Every labelled table, not one per class");

  auto* pq = app.add_subcommand("pq", "Rectangle dimensions with max{(p-1)q,p(q-1)} < n < pq");
  pq->add_option("--n", n)->required()->check(CLI::PositiveNumber);

  auto* rs = app.add_subcommand("results", "Which orders n are forced, for each r");
  rs->add_option("--max-band-order", max_band)->check(CLI::Range(1, 7));
  rs->add_option("--max-exp-order", max_exp)->check(CLI::Range(1, 5));

  auto* co = app.add_subcommand("construct", "Evaluate a construction spec");
  co->add_option("spec", spec)->required();
  co->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*vb) {
      return emit_report(g, verify_band_theorem(n, max_order, g.harness()));
    }
    if (*ve) {
      return emit_report(g, verify_exponent_theorem(r, n, max_order, g.harness()));
    }
    if (*cx) {
      return cmd_counterexample(g, n, r, out_path);
    }
    if (*ck) {
      if (file.empty() && spec.empty()) {
        throw ParseError("check needs --file or --construct");
      }
      return cmd_check(g, file, spec, ks, want_spectrum);
    }
    if (*fb) {
      return cmd_free_band(g, gens, table_out, canon, equal);
    }
    if (*cs) {
      return cmd_census(g, order, constraint, count_only, manifest, labeled);
    }
    if (*pq) {
      return cmd_pq(g, n);
    }
    if (*rs) {
      return cmd_results(g, max_band, max_exp);
    }
    if (*co) {
      return cmd_construct(g, spec, out_path);
    }
  } catch (Error const& e) {
    if (g.json()) {
      print_json({{"error", e.kind()}, {"message", e.what()}});
    } else {
      std::cerr << "error: " << e.what() << '\n';
    }
    return exit_usage;
  }
  return exit_usage;
}
