#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "deltatab/acceptance.hpp"
#include "deltatab/hive.hpp"
#include "deltatab/io.hpp"
#include "deltatab/promotion.hpp"
#include "deltatab/repthy.hpp"
#include "deltatab/sieving.hpp"
#include "deltatab/tableau.hpp"

using namespace deltatab;

namespace {

/// Raised for bad input combinations after CLI11 parsing succeeded.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InstanceArgs {
  int m = 0;
  std::string delta;
  std::string gamma;

  void add_to(CLI::App* app, bool required) {
    auto* a = app->add_option("--m", m, "number of rows of the rectangle");
    auto* b = app->add_option("--delta", delta, "orientation string over {h,v}");
    auto* c = app->add_option("--gamma", gamma, "comma-separated content");
    if (required) {
      a->required();
      b->required();
      c->required();
    }
  }
  OrientationString orientation() const { return OrientationString::parse(delta); }
  ContentVector content() const { return parse_content(gamma); }
  void check() const {
    if (m < 1) throw std::invalid_argument("--m must be positive");
    if (orientation().size() != content().size()) throw std::invalid_argument("--delta and --gamma lengths differ");
    if (total(content()) % m != 0) throw std::invalid_argument("m does not divide |gamma|");
  }
};

/// A tableau given as --tableau rows with --delta, as --input file, or as
/// the --index-th tableau (1-based) of an instance.
struct TableauArgs {
  InstanceArgs inst;
  std::string rows;
  std::string input;
  int index = 0;

  void add_to(CLI::App* app) {
    inst.add_to(app, false);
    app->add_option("--tableau", rows, "rows separated by '/', entries by ',' (needs --delta)");
    app->add_option("--input", input, "file holding a tableau record ('-' for stdin)");
    app->add_option("--index", index, "1-based position in the enumeration of (--m, --delta, --gamma)");
  }

  Tableau get() const {
    const int given = !rows.empty() + !input.empty() + (index != 0);
    if (given != 1) throw UsageError("give exactly one of --tableau, --input, --index");
    Tableau t;
    if (!rows.empty()) {
      if (inst.delta.empty()) throw UsageError("--tableau needs --delta");
      t = Tableau(parse_grid(rows), inst.orientation());
    } else if (!input.empty()) {
      t = tableau_from_json(read_json(input));
    } else {
      if (inst.delta.empty() || inst.gamma.empty() || inst.m == 0) throw UsageError("--index needs --m, --delta, --gamma");
      inst.check();
      auto all = enumerate_tableaux(inst.m, inst.orientation(), inst.content());
      if (index < 1 || index > static_cast<int>(all.size()))
        throw std::out_of_range("--index " + std::to_string(index) + " outside 1.." + std::to_string(all.size()));
      t = all[static_cast<std::size_t>(index - 1)];
    }
    if (auto rep = validate(t); !rep.ok()) throw std::invalid_argument("input tableau: " + rep.summary());
    return t;
  }

  int rows_hint() const { return inst.m; }

  static Json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
      std::stringstream ss;
      ss << std::cin.rdbuf();
      text = ss.str();
    } else {
      std::ifstream f(path);
      if (!f) throw std::invalid_argument("cannot open " + path);
      std::stringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    }
    try {
      return Json::parse(text);
    } catch (const Json::exception& e) {
      throw std::invalid_argument(path + ": " + e.what());
    }
  }
};

Json grid_json(const Grid& g) { return Json(g); }

void print_hive_text(const Hive& h) {
  const Simplex& s = h.lattice();
  std::cout << "n=" << h.corners() << " m=" << h.m() << "\n";
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    std::cout << format_point(s.point(i)) << ' ';
    if (h.known(i))
      std::cout << h.value(i);
    else
      std::cout << '?';
    std::cout << '\n';
  }
}

int m_for(const Tableau& t, int hint) {
  if (hint > 0) return hint;
  return static_cast<int>(t.num_rows());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"delta-semistandard tableaux, promotion, hives, fusion Kostka polynomials and cyclic sieving"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit line-delimited JSON records");
  app.fallthrough();

  // enumerate
  InstanceArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "list RT_m(delta, gamma)");
  en.add_to(enumerate, true);

  // promote
  TableauArgs pr;
  bool trace = false, via_bk = false;
  int times = 1;
  auto* promote = app.add_subcommand("promote", "delta-promotion of one tableau");
  pr.add_to(promote);
  promote->add_flag("--trace", trace, "print every slide (or every BK step with --via-bk)");
  promote->add_flag("--via-bk", via_bk, "compose BK involutions t_{n-1} ... t_1 instead of sliding");
  promote->add_option("--times", times, "number of promotions")->check(CLI::NonNegativeNumber);

  // bk
  TableauArgs bka;
  int bk_i = 0;
  bool sliding = false;
  auto* bkc = app.add_subcommand("bk", "one BK involution t_i");
  bka.add_to(bkc);
  bkc->add_option("--i", bk_i, "index, 1 <= i <= n-1")->required();
  bkc->add_flag("--sliding", sliding, "mixed case by sliding dots instead of the ribbon move");

  // orbits
  InstanceArgs ob;
  auto* orbits = app.add_subcommand("orbits", "orbits of the cyclic action on RT_m(delta, gamma)");
  ob.add_to(orbits, true);

  // hive
  auto* hive = app.add_subcommand("hive", "hive operations");
  hive->require_subcommand(1);
  TableauArgs hft;
  auto* hive_from = hive->add_subcommand("from-tableau", "hive of a rectangular tableau");
  hft.add_to(hive_from);
  std::string hive_file;
  auto* hive_check = hive->add_subcommand("check", "rhombus and octahedron checks on a hive record");
  hive_check->add_option("file", hive_file, "hive record ('-' for stdin)")->required();
  auto* hive_excavate = hive->add_subcommand("excavate", "fill a partial hive by the octahedron recurrence");
  hive_excavate->add_option("file", hive_file, "hive record ('-' for stdin)")->required();
  auto* hive_path = hive->add_subcommand("break-path", "break path of a 3-hive with an omega edge");
  hive_path->add_option("file", hive_file, "hive record ('-' for stdin)")->required();
  TableauArgs hst;
  auto* hive_stair = hive->add_subcommand("staircase", "staircase verification for one tableau");
  hst.add_to(hive_stair);

  // kostka
  InstanceArgs ko;
  bool exact = false;
  std::string points;
  std::size_t cap = 0;
  auto* kostka = app.add_subcommand("kostka", "graded multiplicity K(q) from the fusion product");
  ko.add_to(kostka, true);
  kostka->add_flag("--exact", exact, "rational elimination instead of arithmetic modulo a prime");
  kostka->add_option("--points", points, "comma-separated distinct rationals (default 0,1,...,n-1)");
  kostka->add_option("--max-dim", cap, "refuse weight spaces above this dimension");

  // csp
  InstanceArgs cs;
  std::string poly_file;
  auto* csp = app.add_subcommand("csp", "check the cyclic sieving phenomenon");
  cs.add_to(csp, true);
  csp->add_option("--poly", poly_file, "file of degree:coeff lines giving f(q)");

  // staircase
  InstanceArgs st;
  auto* stair = app.add_subcommand("staircase", "staircase verification on every tableau of an instance");
  st.add_to(stair, true);

  // selftest
  bool quick = false;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  selftest->add_flag("--quick", quick, "smaller sweeps (not the acceptance configuration)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*enumerate) {
      en.check();
      const auto tabs = enumerate_tableaux(en.m, en.orientation(), en.content());
      if (json) {
        for (const auto& t : tabs) std::cout << to_json(t).dump() << '\n';
      } else {
        std::cout << "count: " << tabs.size() << '\n';
        for (const auto& t : tabs) std::cout << '\n' << render(t);
      }
    } else if (*promote) {
      Tableau t = pr.get();
      for (int k = 0; k < times; ++k) {
        std::vector<Grid> frames;
        std::vector<Tableau> steps;
        Tableau next = via_bk ? promote_via_bk(t, &steps) : jdt_promote(t, &frames);
        if (trace && !json) {
          if (via_bk)
            for (const auto& s : steps) std::cout << render(s) << '\n';
          else
            for (const auto& f : frames) std::cout << render(f) << '\n';
        }
        if (json) {
          Json rec = to_json(next);
          if (trace) {
            Json tr = Json::array();
            if (via_bk)
              for (const auto& s : steps) tr.push_back(to_json(s));
            else
              for (const auto& f : frames) tr.push_back(grid_json(f));
            rec["trace"] = std::move(tr);
          }
          std::cout << rec.dump() << '\n';
        }
        t = std::move(next);
      }
      if (!json) std::cout << "delta: " << t.delta().str() << '\n' << render(t);
    } else if (*bkc) {
      const Tableau t = bka.get();
      const Tableau out = sliding ? bk_by_sliding(t, bk_i) : bk(t, bk_i);
      if (json)
        std::cout << to_json(out).dump() << '\n';
      else
        std::cout << "delta: " << out.delta().str() << '\n' << render(out);
    } else if (*orbits) {
      ob.check();
      const auto o = promotion_orbits(ob.m, ob.orientation(), ob.content());
      if (json) {
        Json rec{{"r", o.r}, {"l", o.l}, {"count", o.tableaux.size()}, {"orbit_sizes", o.orbit_sizes()}, {"fixed_points", o.fixed_points}};
        Json all = Json::array();
        for (const auto& orbit : o.orbits) {
          Json one = Json::array();
          for (int i : orbit) one.push_back(to_json(o.tableaux[static_cast<std::size_t>(i)]));
          all.push_back(std::move(one));
        }
        rec["orbits"] = std::move(all);
        std::cout << rec.dump() << '\n';
      } else {
        std::cout << "r=" << o.r << " l=" << o.l << " tableaux=" << o.tableaux.size() << "\norbit sizes:";
        for (int s : o.orbit_sizes()) std::cout << ' ' << s;
        std::cout << "\nfixed points of c^d, d=0.." << o.l - 1 << ":";
        for (long long f : o.fixed_points) std::cout << ' ' << f;
        std::cout << '\n';
        for (std::size_t k = 0; k < o.orbits.size(); ++k) {
          std::cout << "\norbit " << k + 1 << " (size " << o.orbits[k].size() << ")\n";
          for (int i : o.orbits[k]) std::cout << render(o.tableaux[static_cast<std::size_t>(i)]) << '\n';
        }
      }
    } else if (*hive) {
      if (*hive_from) {
        const Tableau t = hft.get();
        const Hive h = tableau_to_hive(t, m_for(t, hft.rows_hint()));
        if (json)
          std::cout << to_json(h).dump() << '\n';
        else
          print_hive_text(h);
      } else if (*hive_check) {
        const Hive h = hive_from_json(TableauArgs::read_json(hive_file));
        const HiveReport rep = check_hive(h);
        if (json) {
          std::cout << Json{{"ok", rep.ok()}, {"message", rep.message}, {"points", rep.points}}.dump() << '\n';
        } else {
          std::cout << (rep.ok() ? "ok" : rep.message) << '\n';
          if (rep.ok()) {
            const HiveType ty = hive_type(h);
            for (std::size_t i = 0; i < ty.lambdas.size(); ++i)
              std::cout << "edge " << i + 1 << "->" << i + 2 << ": " << to_partition(ty.lambdas[i]) << '\n';
            std::cout << "edge 1->" << h.corners() << ": " << to_partition(ty.mu) << '\n';
          }
        }
        return rep.ok() ? 0 : 1;
      } else if (*hive_excavate) {
        const Hive h = octahedron_excavate(hive_from_json(TableauArgs::read_json(hive_file)));
        if (json)
          std::cout << to_json(h).dump() << '\n';
        else
          print_hive_text(h);
      } else if (*hive_path) {
        const auto path = break_path(hive_from_json(TableauArgs::read_json(hive_file)));
        if (json) {
          std::cout << Json{{"path", path}}.dump() << '\n';
        } else {
          for (const auto& p : path) std::cout << format_point(p) << '\n';
        }
      } else if (*hive_stair) {
        const Tableau t = hst.get();
        const StaircaseReport rep = staircase_check(t, m_for(t, hst.rows_hint()));
        if (json) {
          std::cout << Json{{"ok", rep.ok}, {"failures", rep.failures}}.dump() << '\n';
        } else {
          for (const auto& row : rep.rows) {
            for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
            std::cout << '\n';
          }
          std::cout << (rep.ok ? "ok" : "FAIL") << '\n';
          for (const auto& f : rep.failures) std::cout << f << '\n';
        }
        return rep.ok ? 0 : 1;
      }
    } else if (*kostka) {
      ko.check();
      FusionOptions opts;
      opts.exact = exact;
      opts.max_weight_space_dim = cap;
      if (!points.empty()) {
        std::vector<Rational> z;
        std::stringstream ss(points);
        std::string item;
        while (std::getline(ss, item, ',')) {
          Rational q;
          if (q.set_str(item, 10) != 0) throw std::invalid_argument("evaluation point '" + item + "' is not a rational");
          q.canonicalize();
          z.push_back(q);
        }
        opts.points = std::move(z);
      }
      const FusionResult f = fusion_kostka_detailed(ko.orientation(), ko.content(), ko.m, opts);
      if (json) {
        Json rec = to_json(f.kostka);
        rec["invariants_by_degree"] = f.invariant_dims;
        std::cout << rec.dump() << '\n';
      } else {
        std::cout << f.kostka.to_terms() << "K(q) = " << to_string(f.kostka) << '\n';
      }
    } else if (*csp) {
      cs.check();
      std::optional<IntPoly> f;
      if (!poly_file.empty()) {
        std::ifstream in(poly_file);
        if (!in) throw std::invalid_argument("cannot open " + poly_file);
        f = IntPoly::parse_terms(in);
      }
      const CspReport rep = csp_verify(cs.m, cs.orientation(), cs.content(), f);
      if (json) {
        Json rows = Json::array();
        for (const auto& row : rep.rows) {
          Json r{{"d", row.d}, {"fixed_points", row.fixed_points}, {"pass", row.pass}};
          if (row.poly_value.is_integer())
            r["value"] = *row.poly_value.value;
          else
            r["remainder"] = to_string(row.poly_value.remainder);
          rows.push_back(std::move(r));
        }
        std::cout << Json{{"r", rep.r}, {"l", rep.l}, {"f", to_json(rep.f)}, {"rows", rows}, {"pass", rep.pass()}}.dump() << '\n';
      } else {
        std::cout << rep.table() << (rep.pass() ? "pass" : "FAIL") << '\n';
      }
      return rep.pass() ? 0 : 1;
    } else if (*stair) {
      st.check();
      long long bad = 0, count = 0;
      for (const auto& t : enumerate_tableaux(st.m, st.orientation(), st.content())) {
        ++count;
        const StaircaseReport rep = staircase_check(t, st.m);
        if (!rep.ok) {
          ++bad;
          if (!json) std::cout << render(t) << rep.failures.front() << "\n\n";
        }
      }
      if (json)
        std::cout << Json{{"tableaux", count}, {"failures", bad}}.dump() << '\n';
      else
        std::cout << count << " tableaux, " << bad << " staircase failures\n";
      return bad == 0 ? 0 : 1;
    } else if (*selftest) {
      acceptance::AcceptanceOptions opts;
      if (quick) {
        opts.sweep.max_m = 3;
        opts.sweep.max_n = 4;
        opts.sweep.max_size = 9;
      }
      bool all = true;
      acceptance::run_all(opts, [&](const acceptance::CriterionResult& r) {
        all = all && r.pass;
        if (json)
          std::cout << Json{{"criterion", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}}.dump()
                    << std::endl;
        else
          std::cout << acceptance::format_result(r) << std::endl;
      });
      return all ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
