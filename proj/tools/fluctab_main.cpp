// fluctab: command-line front end for the fluctuating-tableau library.
//
// Tableaux are read from stdin (or --in) as JSON
//   {"r": 4, "initial_shape": [0,0,0,0], "word": [[1,2],[-4],...]}
// or given inline with --r/--text. Exit codes: 0 success, 1 malformed
// input, 2 invariant violation.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fluctab/bk.hpp"
#include "fluctab/crystal.hpp"
#include "fluctab/dihedral.hpp"
#include "fluctab/enumerate.hpp"
#include "fluctab/grid.hpp"
#include "fluctab/growth.hpp"
#include "fluctab/jdt.hpp"
#include "fluctab/selftest.hpp"
#include "fluctab/serialize.hpp"

using namespace fluctab;

namespace {

struct TableauInput {
  std::string in_file;
  std::string text;
  int rows = 0;
  std::string initial;

  void attach(CLI::App* cmd) {
    cmd->add_option("--in", in_file, "read the tableau from a file");
    cmd->add_option("--text", text, "word in text form, needs --r");
    cmd->add_option("--r", rows, "row count for --text input");
    cmd->add_option("--initial", initial,
                    "comma-separated initial shape for --text input");
  }

  Tableau load() const {
    if (!text.empty()) {
      check(rows >= 1, Errc::bad_input, "--text input needs --r");
      Part init;
      if (!initial.empty()) {
        std::istringstream is(initial);
        std::string piece;
        while (std::getline(is, piece, ',')) init.push_back(std::stoi(piece));
      }
      return Tableau::build(rows, init, word_from_text(text));
    }
    std::string json;
    if (!in_file.empty()) {
      std::ifstream f(in_file);
      check(f.good(), Errc::bad_input, "cannot open " + in_file);
      std::stringstream ss;
      ss << f.rdbuf();
      json = ss.str();
    } else {
      std::stringstream ss;
      ss << std::cin.rdbuf();
      json = ss.str();
    }
    return tableau_from_json(json);
  }
};

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::istringstream is(s);
  std::string piece;
  while (std::getline(is, piece, ','))
    if (!piece.empty()) out.push_back(std::stoi(piece));
  return out;
}

void print_tableau(const Tableau& t, bool as_text) {
  if (as_text)
    std::cout << word_to_text(t.word()) << '\n';
  else
    std::cout << tableau_to_json(t) << '\n';
}

std::string marked_to_text(const MarkedTableau& m) {
  std::ostringstream os;
  std::string before = word_to_text(m.before);
  if (!before.empty()) os << before << ' ';
  if (m.bullet.size() == 1) {
    os << (m.bullet.negative() ? "-*" : "*");
  } else {
    os << '{';
    for (int k = 0; k < m.bullet.size(); ++k) {
      if (k) os << ',';
      os << (m.bullet.negative() ? "-*" : "*");
    }
    os << '}';
  }
  std::string after = word_to_text(m.after);
  if (!after.empty()) os << ' ' << after;
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fluctuating tableau toolkit"};
  app.require_subcommand(1);
  bool as_text = false;
  app.add_flag("--text-output", as_text, "print words instead of JSON");

  TableauInput input;
  int level = 1;
  int index = 1;
  std::string format = "svg";
  std::string kind = "pe";
  std::string op = "P";
  bool trace = false;

  auto add_tableau_cmd = [&](const std::string& name, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    input.attach(cmd);
    return cmd;
  };

  auto* cmd_validate = add_tableau_cmd("validate", "check a tableau");
  auto* cmd_promote = add_tableau_cmd("promote", "promotion");
  auto* cmd_evacuate = add_tableau_cmd("evacuate", "evacuation");
  auto* cmd_devacuate = add_tableau_cmd("devacuate", "dual evacuation");
  auto* cmd_invprom = add_tableau_cmd("inverse-promote", "inverse promotion");
  auto* cmd_bk = add_tableau_cmd("bk", "Bender-Knuth involution");
  cmd_bk->add_option("--i", index, "involution index")->required();
  auto* cmd_jdt = add_tableau_cmd("jdt-trace", "jeu de taquin promotion trace");
  auto* cmd_grid = add_tableau_cmd("grid", "growth diagram");
  cmd_grid->add_option("--kind", kind, "p|e|ed|pe");
  cmd_grid->add_flag("--json", trace, "dump as JSON instead of pretty text");
  auto* cmd_pm = add_tableau_cmd("pm", "promotion matrix");
  auto* cmd_pmr = add_tableau_cmd("pmr", "reduced promotion matrix");
  cmd_pmr->add_option("--level", level, "level 0..r-1")->required();
  auto* cmd_promperm = add_tableau_cmd("promperm", "promotion permutation");
  cmd_promperm->add_option("--level", level, "level 0..r")->required();
  auto* cmd_aexc = add_tableau_cmd("antiexcedance", "antiexcedance set");
  cmd_aexc->add_option("--level", level, "level 1..r-1")->required();
  auto* cmd_orbit = add_tableau_cmd("orbit", "P or E orbit");
  cmd_orbit->add_option("--op", op, "P|E");
  auto* cmd_render = add_tableau_cmd("render", "dihedral chord diagram");
  cmd_render->add_option("--format", format, "svg|dot");

  auto* cmd_crystal = app.add_subcommand("crystal", "crystal operations");
  cmd_crystal->require_subcommand(1);
  auto* cry_raise = cmd_crystal->add_subcommand("raise", "raise to highest weight");
  input.attach(cry_raise);
  cry_raise->add_flag("--trace", trace, "print each raising step");
  auto* cry_promote = cmd_crystal->add_subcommand("promote", "promotion via raising");
  input.attach(cry_promote);
  cry_promote->add_flag("--trace", trace, "print each raising step");
  auto* cry_pmr = cmd_crystal->add_subcommand("pmr", "reduced matrices via raising");
  input.attach(cry_pmr);
  cry_pmr->add_option("--level", level, "level 0..r-1")->required();
  cry_pmr->add_flag("--trace", trace, "print each raising step");

  auto* cmd_reconstruct =
      app.add_subcommand("reconstruct", "rebuild a tableau from evidence");
  std::string evidence_file;
  cmd_reconstruct->add_option("--in", evidence_file,
                              "JSON evidence file (default stdin)");

  auto* cmd_enum = app.add_subcommand("enum", "enumerate tableaux");
  int enum_r = 1, enum_n = -1;
  std::string enum_type, enum_shape;
  bool count_only = false, rectangular = false;
  cmd_enum->add_option("--r", enum_r, "rows")->required();
  cmd_enum->add_option("--n", enum_n, "length (for typeless runs)");
  cmd_enum->add_option("--type", enum_type, "comma list, negatives barred");
  cmd_enum->add_option("--shape", enum_shape, "final shape");
  cmd_enum->add_flag("--count-only", count_only, "print only the count");
  cmd_enum->add_flag("--rectangular", rectangular, "rectangular only");

  auto* cmd_selftest =
      app.add_subcommand("selftest", "cross-characterization sweep");
  SelftestOptions opts;
  cmd_selftest->add_option("--r", opts.max_rows, "max rows (default 4)");
  cmd_selftest->add_option("--tmax", opts.tmax, "total-size budget (default 10)");
  cmd_selftest->add_option("--crystal-tmax", opts.crystal_tmax,
                           "budget for the heavy crystal equalities");
  cmd_selftest->add_option("--threads", opts.threads, "worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_validate->parsed()) {
      Tableau t = input.load();
      std::cout << "valid r=" << t.rows() << " n=" << t.length()
                << " t=" << t.total_size()
                << (t.is_rectangular() ? " rectangular" : "") << '\n';
    } else if (cmd_promote->parsed()) {
      print_tableau(promote(input.load()), as_text);
    } else if (cmd_evacuate->parsed()) {
      print_tableau(evacuate(input.load()), as_text);
    } else if (cmd_devacuate->parsed()) {
      print_tableau(devacuate(input.load()), as_text);
    } else if (cmd_invprom->parsed()) {
      print_tableau(inverse_promote(input.load()), as_text);
    } else if (cmd_bk->parsed()) {
      print_tableau(bender_knuth(input.load(), index), as_text);
    } else if (cmd_jdt->parsed()) {
      for (const MarkedTableau& m : jdt_promotion_trace(input.load()))
        std::cout << marked_to_text(m) << '\n';
    } else if (cmd_grid->parsed()) {
      Tableau t = input.load();
      DiagramKind k = kind == "p"    ? DiagramKind::promotion
                      : kind == "e"  ? DiagramKind::evacuation
                      : kind == "ed" ? DiagramKind::dual_evacuation
                      : kind == "pe"
                          ? DiagramKind::promotion_evacuation
                          : throw Error(Errc::bad_input, "unknown grid kind");
      GrowthDiagram d = build_diagram(k, t);
      std::cout << (trace ? diagram_to_json(d) : diagram_pretty(d));
    } else if (cmd_pm->parsed()) {
      std::cout << promotion_matrix_to_json(promotion_matrix(input.load()))
                << '\n';
    } else if (cmd_pmr->parsed()) {
      Tableau t = input.load();
      check(0 <= level && level < t.rows(), Errc::bad_input,
            "level out of range");
      std::cout << count_matrix_to_json(reduced_matrices(t)[level]) << '\n';
    } else if (cmd_promperm->parsed()) {
      Tableau t = input.load();
      check(0 <= level && level <= t.rows(), Errc::bad_input,
            "level out of range");
      auto perms = promotion_functions(t);
      for (size_t k = 0; k < perms[level].map.size(); ++k)
        std::cout << (k ? " " : "") << perms[level].map[k];
      std::cout << '\n';
    } else if (cmd_aexc->parsed()) {
      Tableau t = input.load();
      auto perms = promotion_functions(t);
      check(0 <= level && level <= t.rows(), Errc::bad_input,
            "level out of range");
      auto aexc = antiexcedance_set(perms[level]);
      for (size_t k = 0; k < aexc.size(); ++k)
        std::cout << (k ? " " : "") << aexc[k];
      std::cout << '\n';
    } else if (cmd_orbit->parsed()) {
      OrbitOp oo = op == "P"   ? OrbitOp::promotion
                   : op == "E" ? OrbitOp::evacuation
                               : throw Error(Errc::bad_input, "unknown orbit op");
      for (const Tableau& s : orbit(input.load(), oo)) print_tableau(s, as_text);
    } else if (cmd_render->parsed()) {
      RenderFormat rf = format == "svg"   ? RenderFormat::svg
                        : format == "dot" ? RenderFormat::dot
                                          : throw Error(Errc::bad_input,
                                                        "unknown format");
      std::cout << render_dihedral(input.load(), rf);
    } else if (cry_raise->parsed()) {
      Tableau t = input.load();
      auto [word, log] = raise_to_highest(t.word(), t.rows());
      if (trace) {
        Word cur = t.word();
        for (const RaisingStep& s : log) {
          cur = *apply_e(cur, s.level, t.rows());
          std::cout << "e_" << s.level << " @ " << s.pos << " : "
                    << word_to_text(cur) << '\n';
        }
      }
      std::cout << word_to_text(word) << '\n';
    } else if (cry_promote->parsed()) {
      Tableau t = input.load();
      CrystalPromotionTrace tr;
      Tableau p = promote_via_crystal(t, &tr);
      if (trace)
        for (size_t pass = 0; pass < tr.pass_logs.size(); ++pass) {
          Word cur(tr.pass_inputs[pass].begin() + 1,
                   tr.pass_inputs[pass].end());
          for (const RaisingStep& s : tr.pass_logs[pass]) {
            cur = *apply_e(cur, s.level, t.rows());
            std::cout << "e_" << s.level << " @ " << s.pos << " : "
                      << word_to_text(cur) << '\n';
          }
        }
      print_tableau(p, as_text);
    } else if (cry_pmr->parsed()) {
      Tableau t = input.load();
      check(0 <= level && level < t.rows(), Errc::bad_input,
            "level out of range");
      std::cout << count_matrix_to_json(reduced_matrices_via_crystal(t)[level])
                << '\n';
    } else if (cmd_reconstruct->parsed()) {
      std::string json;
      if (!evidence_file.empty()) {
        std::ifstream fstr(evidence_file);
        check(fstr.good(), Errc::bad_input, "cannot open " + evidence_file);
        std::stringstream ss;
        ss << fstr.rdbuf();
        json = ss.str();
      } else {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        json = ss.str();
      }
      auto j = nlohmann::json::parse(json);
      int rows = j.at("r").get<int>();
      std::vector<int> type = j.at("type").get<std::vector<int>>();
      Tableau t = [&] {
        if (j.contains("egrid"))
          return reconstruct_from_egrid(
              rows, type, promotion_matrix_from_json(j["egrid"].dump(), rows));
        if (j.contains("pmr"))
          return reconstruct_from_reduced(
              rows, type, j["pmr"].get<std::vector<CountMatrix>>());
        if (j.contains("perms")) {
          std::vector<PromotionFunction> perms;
          int lvl = 1;
          for (const auto& p : j["perms"]) {
            PromotionFunction f;
            f.level = lvl++;
            f.map = p.get<std::vector<int>>();
            perms.push_back(std::move(f));
          }
          return reconstruct_from_permutations(rows, type, perms);
        }
        throw Error(Errc::bad_input, "no evidence found (egrid/pmr/perms)");
      }();
      print_tableau(t, as_text);
    } else if (cmd_enum->parsed()) {
      std::vector<std::vector<int>> types;
      if (!enum_type.empty()) {
        types.push_back(parse_int_list(enum_type));
      } else {
        // All signed types of the given length with letter sizes 1..r.
        check(enum_n >= 0, Errc::bad_input, "--type or --n is required");
        std::vector<int> cur;
        std::function<void()> rec = [&] {
          if (static_cast<int>(cur.size()) == enum_n) {
            types.push_back(cur);
            return;
          }
          for (int m = 1; m <= enum_r; ++m)
            for (int sign : {1, -1}) {
              cur.push_back(sign * m);
              rec();
              cur.pop_back();
            }
        };
        rec();
      }
      std::uint64_t total = 0;
      for (const auto& type : types) {
        EnumSpec spec;
        spec.rows = enum_r;
        spec.type = type;
        if (!enum_shape.empty()) spec.final_shape = parse_int_list(enum_shape);
        spec.rectangular_only = rectangular;
        if (count_only) {
          total += count_ft(spec);
        } else {
          enumerate_ft(spec, [&](const Tableau& t) {
            std::cout << tableau_to_json(t) << '\n';
            return true;
          });
        }
      }
      if (count_only) std::cout << total << '\n';
    } else if (cmd_selftest->parsed()) {
      bool all_pass = true;
      for (const CheckResult& r : run_selftest(opts)) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  ("
                  << r.cases << " cases, " << r.seconds << " s)";
        if (!r.detail.empty()) std::cout << "  " << r.detail;
        std::cout << '\n';
        all_pass = all_pass && r.pass;
      }
      return all_pass ? 0 : 2;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::bad_input ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
