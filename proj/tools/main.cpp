#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cylabacus/abacus.hpp"
#include "cylabacus/crystal.hpp"
#include "cylabacus/cylindric.hpp"
#include "cylabacus/enumerate_verify.hpp"
#include "cylabacus/level_rank.hpp"
#include "cylabacus/notation.hpp"
#include "cylabacus/periodicity.hpp"

namespace {

using nlohmann::json;
using namespace cylabacus;

// CYLABACUS_COLOR={auto,never,always}: filled/empty circles when coloring is
// on, '#'/'.' otherwise; auto means "unicode only on a terminal".
bool ascii_glyphs() {
  const char* raw = std::getenv("CYLABACUS_COLOR");
  std::string mode = raw ? raw : "auto";
  if (mode == "always") return false;
  if (mode == "never") return true;
  if (mode == "auto") return isatty(STDOUT_FILENO) == 0;
  throw std::invalid_argument("CYLABACUS_COLOR must be auto, never or always");
}

ChargedMultipartition parse_instance(const std::string& mp_text, const std::string& charge_text) {
  return {parse_multipartition(mp_text), parse_charge(charge_text)};
}

std::string charge_text(const Charge& s) { return format_charge(s); }

void print_instance_text(const ChargedMultipartition& mp) {
  std::cout << "mp: " << format_multipartition(mp.components) << "\n";
  std::cout << "charge: " << charge_text(mp.charge) << "\n";
}

json instance_json(const ChargedMultipartition& mp) {
  json j;
  j["mp"] = format_multipartition(mp.components);
  j["charge"] = charge_text(mp.charge);
  return j;
}

json pairs_json(const YokeChain& chain, const std::string& color) {
  json j;
  j["color"] = color;
  j["k"] = chain.k;
  j["pairs"] = json::array();
  for (const YokePair& p : chain.pairs) {
    j["pairs"].push_back({p.upper, p.upper_row, p.lower, p.upper_row - 1});
  }
  return j;
}

void print_chain_text(const YokeChain& chain, const std::string& color) {
  std::cout << color << " k=" << chain.k << ":";
  for (const YokePair& p : chain.pairs) {
    std::cout << " (" << p.upper << "," << p.upper_row << ")->(" << p.lower << ","
              << p.upper_row - 1 << ")";
  }
  std::cout << "\n";
}

int run_convert(const std::string& mp_text, const std::string& charge_text_in,
                const std::string& abacus_text, const std::string& format) {
  if (!abacus_text.empty()) {
    Abacus a = json::parse(abacus_text).get<Abacus>();
    ChargedMultipartition mp = multipartition_of(a);
    if (format == "json") {
      std::cout << instance_json(mp).dump() << "\n";
    } else {
      print_instance_text(mp);
    }
    return 0;
  }
  Abacus a = abacus_from(parse_instance(mp_text, charge_text_in));
  if (format == "json") {
    std::cout << json(a).dump() << "\n";
    return 0;
  }
  std::cout << "rows: " << a.level() << "\n";
  for (int j = 1; j <= a.level(); ++j) {
    std::cout << "row " << j << ": tail=" << a.row(j).tail;
    if (!a.row(j).exceptions.empty()) {
      std::cout << " exceptions=";
      for (size_t i = 0; i < a.row(j).exceptions.size(); ++i) {
        std::cout << (i ? "," : "") << a.row(j).exceptions[i];
      }
    }
    std::cout << "\n";
  }
  return 0;
}

int run_dual(const std::string& mp_text, const std::string& charge_text_in, int rank, int level,
             bool inverse, const std::string& format) {
  ChargedMultipartition in = parse_instance(mp_text, charge_text_in);
  ChargedMultipartition out = inverse ? dualize_inverse(in, level) : dualize(in, rank);
  if (format == "json") {
    std::cout << instance_json(out).dump() << "\n";
  } else {
    print_instance_text(out);
  }
  return 0;
}

int run_check(const std::string& what, const std::string& mp_text,
              const std::string& charge_text_in, int rank, bool strict) {
  ChargedMultipartition mp = parse_instance(mp_text, charge_text_in);
  bool value = false;
  if (what == "cylindric") {
    value = is_cylindric_def(mp, rank);
  } else if (what == "flotw") {
    value = is_flotw(mp, rank);
  } else if (what == "periodic") {
    value = is_totally_periodic(abacus_from(mp), rank);
  } else {
    value = is_source(mp, rank);
  }
  std::cout << (value ? "true" : "false") << "\n";
  return (strict && !value) ? 2 : 0;
}

int run_periods(const std::string& mp_text, const std::string& charge_text_in, int rank,
                int count, const std::string& format) {
  Abacus a = abacus_from(parse_instance(mp_text, charge_text_in));
  std::vector<Period> ps = periods(a, rank, count);
  if (format == "json") {
    json j = json::array();
    for (const Period& p : ps) {
      json beads = json::array();
      for (auto [beta, row] : p.beads) beads.push_back({beta, row});
      j.push_back(beads);
    }
    std::cout << j.dump() << "\n";
    return 0;
  }
  for (const Period& p : ps) {
    for (size_t i = 0; i < p.beads.size(); ++i) {
      std::cout << (i ? " " : "") << "(" << p.beads[i].first << "," << p.beads[i].second << ")";
    }
    std::cout << "\n";
  }
  return 0;
}

int run_yokes(const std::string& mp_text, const std::string& charge_text_in, int rank, int count,
              const std::string& format) {
  Abacus a = abacus_from(parse_instance(mp_text, charge_text_in));
  ExtendedAbacus ap = extend(a, rank);
  if (count == 0) count = white_yoke_horizon(ap) + 3;
  std::vector<YokeChain> white = white_yokes(ap, count);
  BlackYokes black = black_yokes(ap);
  // Vertical yokes fill every column up to beta0; show the three rightmost.
  std::vector<YokeChain> verticals;
  for (int beta = black.beta0 - 2; beta <= black.beta0; ++beta) {
    YokeChain chain{beta - black.beta0, {}};
    for (int j = 1; j < ap.rows.level(); ++j) chain.pairs.push_back({beta, beta, j + 1});
    verticals.push_back(std::move(chain));
  }
  if (format == "json") {
    json j = json::array();
    for (const YokeChain& c : white) j.push_back(pairs_json(c, "white"));
    for (const YokeChain& c : verticals) j.push_back(pairs_json(c, "black"));
    for (const YokeChain& c : black.chains) j.push_back(pairs_json(c, "black"));
    std::cout << j.dump() << "\n";
    return 0;
  }
  for (const YokeChain& c : white) print_chain_text(c, "white");
  for (const YokeChain& c : verticals) print_chain_text(c, "black");
  for (const YokeChain& c : black.chains) print_chain_text(c, "black");
  return 0;
}

int run_render(const std::string& mp_text, const std::string& charge_text_in, int lo, int hi,
               bool use_window, const std::string& orientation) {
  Abacus a = abacus_from(parse_instance(mp_text, charge_text_in));
  RenderOptions opt;
  opt.lo = use_window ? lo : a.min_tail() - 2;
  opt.hi = use_window ? hi : a.max_bead() + 2;
  opt.orientation = orientation == "vertical" ? Orientation::vertical : Orientation::horizontal;
  opt.ascii = ascii_glyphs();
  std::cout << render(a, opt);
  return 0;
}

int run_enumerate(int level, int max_size, bool with_charges, const EnumerationDomain& domain,
                  const std::string& format) {
  std::vector<Multipartition> tuples = enumerate_multipartitions(level, max_size);
  if (!with_charges) {
    if (format == "json") {
      json j;
      j["multipartitions"] = json::array();
      for (const Multipartition& mp : tuples) j["multipartitions"].push_back(format_multipartition(mp));
      std::cout << j.dump() << "\n";
    } else {
      for (const Multipartition& mp : tuples) std::cout << format_multipartition(mp) << "\n";
    }
    return 0;
  }
  std::vector<Charge> charges = enumerate_charges(domain);
  if (format == "json") {
    json j;
    j["instances"] = json::array();
    for (const Charge& s : charges) {
      for (const Multipartition& mp : tuples) {
        j["instances"].push_back(instance_json({mp, s}));
      }
    }
    std::cout << j.dump() << "\n";
    return 0;
  }
  for (const Charge& s : charges) {
    for (const Multipartition& mp : tuples) {
      std::cout << charge_text(s) << " " << format_multipartition(mp) << "\n";
    }
  }
  return 0;
}

int run_verify(const std::string& what, const EnumerationDomain& domain, int jobs,
               const std::string& format) {
  struct Named {
    std::string name;
    VerificationReport report;
  };
  std::vector<Named> runs;
  if (what == "cylindric" || what == "all") {
    runs.push_back({"cylindric-equivalence", verify_cylindric_equivalence(domain, jobs)});
  }
  if (what == "crystal" || what == "all") {
    runs.push_back({"periodicity-source", verify_periodicity_source(domain, jobs)});
  }
  if (what == "duality" || what == "all") {
    runs.push_back({"duality-transport", verify_duality_transport(domain, jobs)});
  }
  bool fail = false;
  json out;
  out["checks"] = json::array();
  for (const Named& run : runs) {
    fail = fail || !run.report.pass();
    std::fprintf(stderr, "# %s: %.1f ms\n", run.name.c_str(), run.report.millis);
    if (format == "json") {
      json check;
      check["name"] = run.name;
      check["pass"] = run.report.pass();
      check["instances"] = run.report.instances;
      check["counterexamples"] = json::array();
      for (const std::string& ce : run.report.counterexamples) {
        check["counterexamples"].push_back(json::parse(ce));
      }
      out["checks"].push_back(check);
    } else {
      for (const std::string& ce : run.report.counterexamples) {
        std::cout << "counterexample: " << ce << "\n";
      }
      if (run.report.pass()) {
        std::cout << run.name << ": pass (" << run.report.instances << " instances)\n";
      } else {
        std::cout << run.name << ": FAIL (" << run.report.counterexamples.size()
                  << " counterexamples, " << run.report.instances << " instances)\n";
      }
    }
  }
  if (format == "json") std::cout << out.dump() << "\n";
  return fail ? 3 : 0;
}

int run_count(const EnumerationDomain& domain, int jobs, const std::string& format) {
  std::vector<PredicateCounts> rows = count_predicates(domain, jobs);
  if (format == "json") {
    json j = json::array();
    for (const PredicateCounts& row : rows) {
      json r;
      r["n"] = row.n;
      r["cylindric"] = row.cylindric;
      r["flotw"] = row.flotw;
      r["source"] = row.source;
      j.push_back(r);
    }
    std::cout << j.dump() << "\n";
    return 0;
  }
  const char* sep = format == "csv" ? "," : " ";
  std::cout << "n" << sep << "cylindric" << sep << "flotw" << sep << "source\n";
  for (const PredicateCounts& row : rows) {
    std::cout << row.n << sep << row.cylindric << sep << row.flotw << sep << row.source << "\n";
  }
  return 0;
}

int run_component(const std::string& mp_text, const std::string& charge_text_in, int rank,
                  int depth, const std::string& format) {
  CrystalGraph g = crystal_component(parse_instance(mp_text, charge_text_in), rank, depth);
  if (format == "json") {
    std::cout << json(g).dump() << "\n";
  } else {
    std::cout << to_dot(g);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"charged multipartitions, abaci, yokes, periods and sl_e crystals"};
  app.name("cylabacus");
  app.require_subcommand(1);

  std::string mp_text, charge_text_in, abacus_text, format = "text", what, orientation = "horizontal";
  int rank = 2, level = 2, period_count = 4, yoke_count = 0, depth = 2, jobs = 1, lo = 0, hi = 0;
  bool strict = false, inverse = false;
  EnumerationDomain domain;

  auto add_instance_flags = [&](CLI::App* cmd, bool need_rank) {
    cmd->add_option("--mp", mp_text, "multipartition, e.g. 3.2/4.2/4")->required();
    cmd->add_option("--charge", charge_text_in, "comma separated charge, e.g. -3,-2,-1 (use --charge=)")
        ->required();
    if (need_rank) cmd->add_option("--rank", rank, "rank e")->required();
  };
  auto add_domain_flags = [&](CLI::App* cmd) {
    cmd->add_option("--level", domain.level, "number of components")->required();
    cmd->add_option("--rank", domain.rank, "rank e")->required();
    cmd->add_option("--max-size", domain.max_size, "largest total size enumerated")->required();
    cmd->add_option("--charge-min", domain.charge_min, "smallest charge entry");
    cmd->add_option("--charge-max", domain.charge_max, "largest charge entry");
    cmd->add_flag("--in-window", domain.in_window,
                  "restrict charges to the weakly increasing window");
    cmd->add_option("--jobs", jobs, "worker threads");
  };
  auto add_format = [&](CLI::App* cmd, std::vector<std::string> allowed) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember(std::move(allowed)));
  };

  std::function<int()> action;

  CLI::App* convert = app.add_subcommand("convert", "multipartition <-> abacus");
  convert->add_option("--mp", mp_text, "multipartition text");
  convert->add_option("--charge", charge_text_in, "charge (with --mp)");
  convert->add_option("--abacus", abacus_text, "abacus JSON (back to multipartition)");
  add_format(convert, {"text", "json"});
  convert->callback([&] {
    action = [&] {
      bool fwd = !mp_text.empty();
      if (fwd == !abacus_text.empty()) {
        throw std::invalid_argument("pass either --mp with --charge, or --abacus");
      }
      if (fwd && charge_text_in.empty()) throw std::invalid_argument("--mp needs --charge");
      return run_convert(mp_text, charge_text_in, abacus_text, format);
    };
  });

  CLI::App* dual = app.add_subcommand("dual", "level-rank transpose");
  dual->add_option("--mp", mp_text, "multipartition text")->required();
  dual->add_option("--charge", charge_text_in, "charge")->required();
  dual->add_option("--rank", rank, "rank e (forward)");
  dual->add_option("--level", level, "level of the preimage (with --inverse)");
  dual->add_flag("--inverse", inverse, "apply the inverse transpose");
  add_format(dual, {"text", "json"});
  dual->callback([&] {
    action = [&] {
      if (!inverse && dual->count("--rank") == 0) throw std::invalid_argument("dual needs --rank");
      if (inverse && dual->count("--level") == 0) {
        throw std::invalid_argument("dual --inverse needs --level");
      }
      return run_dual(mp_text, charge_text_in, rank, level, inverse, format);
    };
  });

  CLI::App* check = app.add_subcommand("check", "evaluate a predicate");
  check->add_option("predicate", what, "cylindric | flotw | periodic | source")
      ->required()
      ->check(CLI::IsMember({"cylindric", "flotw", "periodic", "source"}));
  add_instance_flags(check, true);
  check->add_flag("--strict", strict, "exit 2 when the answer is false");
  check->callback([&] {
    action = [&] { return run_check(what, mp_text, charge_text_in, rank, strict); };
  });

  CLI::App* periods_cmd = app.add_subcommand("periods", "greedy periods, longest prefix");
  add_instance_flags(periods_cmd, true);
  periods_cmd->add_option("--count", period_count, "periods to extract")->capture_default_str();
  add_format(periods_cmd, {"text", "json"});
  periods_cmd->callback([&] {
    action = [&] { return run_periods(mp_text, charge_text_in, rank, period_count, format); };
  });

  CLI::App* yokes_cmd = app.add_subcommand("yokes", "white and black yoke chains");
  add_instance_flags(yokes_cmd, true);
  yokes_cmd->add_option("--count", yoke_count, "white chains to list (0 = up to the horizon)");
  add_format(yokes_cmd, {"text", "json"});
  yokes_cmd->callback([&] {
    action = [&] { return run_yokes(mp_text, charge_text_in, rank, yoke_count, format); };
  });

  CLI::App* render_cmd = app.add_subcommand("render", "draw the abacus");
  add_instance_flags(render_cmd, false);
  CLI::Option* lo_opt = render_cmd->add_option("--lo", lo, "leftmost position");
  render_cmd->add_option("--hi", hi, "rightmost position")->needs(lo_opt);
  render_cmd->add_option("--orientation", orientation, "horizontal | vertical")
      ->check(CLI::IsMember({"horizontal", "vertical"}));
  render_cmd->callback([&] {
    action = [&] {
      bool use_window = render_cmd->count("--lo") > 0;
      if (use_window && render_cmd->count("--hi") == 0) {
        throw std::invalid_argument("--lo needs --hi");
      }
      return run_render(mp_text, charge_text_in, lo, hi, use_window, orientation);
    };
  });

  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "list the domain");
  enumerate_cmd->add_option("--level", domain.level, "number of components")->required();
  enumerate_cmd->add_option("--max-size", domain.max_size, "largest total size")->required();
  CLI::Option* cmin = enumerate_cmd->add_option("--charge-min", domain.charge_min, "smallest charge entry");
  enumerate_cmd->add_option("--charge-max", domain.charge_max, "largest charge entry")->needs(cmin);
  enumerate_cmd->add_flag("--in-window", domain.in_window, "restrict charges to the window");
  enumerate_cmd->add_option("--rank", domain.rank, "rank e (bounds the window)");
  add_format(enumerate_cmd, {"text", "json"});
  enumerate_cmd->callback([&] {
    action = [&] {
      bool with_charges = enumerate_cmd->count("--charge-min") > 0;
      if (with_charges && enumerate_cmd->count("--charge-max") == 0) {
        throw std::invalid_argument("--charge-min needs --charge-max");
      }
      if (domain.in_window && !with_charges) {
        throw std::invalid_argument("--in-window needs a charge range");
      }
      return run_enumerate(domain.level, domain.max_size, with_charges, domain, format);
    };
  });

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the equivalence suites");
  verify_cmd->add_option("--what", what, "cylindric | crystal | duality | all")
      ->default_val("all")
      ->check(CLI::IsMember({"cylindric", "crystal", "duality", "all"}));
  add_domain_flags(verify_cmd);
  add_format(verify_cmd, {"text", "json"});
  verify_cmd->callback([&] {
    action = [&] { return run_verify(what, domain, jobs, format); };
  });

  CLI::App* count_cmd = app.add_subcommand("count", "predicate counts by total size");
  add_domain_flags(count_cmd);
  add_format(count_cmd, {"text", "csv", "json"});
  count_cmd->callback([&] {
    action = [&] { return run_count(domain, jobs, format); };
  });

  CLI::App* component_cmd = app.add_subcommand("component", "crystal component graph");
  add_instance_flags(component_cmd, true);
  component_cmd->add_option("--depth", depth, "BFS truncation depth")->capture_default_str();
  add_format(component_cmd, {"dot", "json"});
  component_cmd->callback([&] {
    if (component_cmd->count("--format") == 0) format = "dot";
    action = [&] { return run_component(mp_text, charge_text_in, rank, depth, format); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 64;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 65;
  } catch (const GuardError& e) {
    std::cerr << "guard tripped: " << e.what() << "\n";
    return 70;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
