#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "chowsym/chow.hpp"
#include "chowsym/cycle_notation.hpp"
#include "chowsym/double_cover.hpp"
#include "chowsym/export.hpp"
#include "chowsym/orbit.hpp"
#include "chowsym/verify.hpp"

namespace chowsym::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  bool fpf_only = false;
  std::string format;
  std::string out_path;
  bool max_n_override = false;
  unsigned threads = 1;
  std::string perm;
  int stratum = 0;
  int up_to = 4;
  int exhaustive_limit = 4;
};

void require_n(const Options& o) {
  if (o.n < 1) throw UsageError("--n must be a positive integer");
}

Involution parse_perm(const Options& o) {
  try {
    return parse_involution(o.perm, o.n > 0 ? 2 * o.n : 0);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--perm: ") + e.what());
  }
}

Json orbit_json(const Orbit& v) {
  Json line = Json::array();
  for (int x : v.w.one_line()) line.push_back(x);
  return Json{{"one_line", line},
              {"cycles", v.w.cycle_notation()},
              {"codim", v.codim},
              {"stratum", v.stratum},
              {"fpf", v.fpf},
              {"splits", orbit_splits(v.w)},
              {"stabilizer_component_order", stabilizer_component_order(v.w)}};
}

std::string orbit_table(const std::vector<Orbit>& orbits) {
  std::ostringstream os;
  os << std::left << std::setw(28) << "one_line" << std::setw(28) << "cycles" << std::setw(7)
     << "codim" << std::setw(9) << "stratum" << std::setw(5) << "fpf" << "components\n";
  for (const auto& v : orbits) {
    os << std::setw(28) << v.w.one_line_string() << std::setw(28) << v.w.cycle_notation()
       << std::setw(7) << v.codim << std::setw(9) << v.stratum << std::setw(5)
       << (v.fpf ? "yes" : "no") << stabilizer_component_order(v.w) << '\n';
  }
  return os.str();
}

std::vector<Orbit> orbits_for(const Options& o) {
  std::vector<Orbit> orbits;
  for (const auto& w : enumerate_involutions(2 * o.n, o.fpf_only)) orbits.push_back(Orbit::of(w));
  return orbits;
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError("unsupported --format '" + format + "' for this command");
}

std::string cmd_involutions(const Options& o) {
  const std::string format = o.format.empty() ? "table" : o.format;
  check_format(format, {"table", "json"});
  std::vector<Orbit> orbits;
  if (!o.perm.empty()) {
    orbits.push_back(Orbit::of(parse_perm(o)));
  } else {
    require_n(o);
    if (!o.max_n_override && o.n > max_default_half_size(o.fpf_only) + 1) {
      throw UsageError("--n " + std::to_string(o.n) +
                       " lists too many orbits; pass --max-n-override to proceed");
    }
    orbits = orbits_for(o);
  }
  if (format == "table") return orbit_table(orbits);
  Json arr = Json::array();
  for (const auto& v : orbits) arr.push_back(orbit_json(v));
  return Json{{"schema_version", kSchemaVersion}, {"count", orbits.size()}, {"orbits", arr}}.dump(2) +
         "\n";
}

std::string cmd_graph(const Options& o) {
  require_n(o);
  const std::string format = o.format.empty() ? "dot" : o.format;
  check_format(format, {"dot", "json"});
  OrbitGraph g;
  try {
    g = build_orbit_graph(o.n, o.fpf_only, {o.max_n_override, o.threads});
  } catch (const SizeCapExceeded& e) {
    throw UsageError(std::string(e.what()) + " (--max-n-override)");
  }
  return format == "dot" ? export_dot(g).payload : export_json(g).payload;
}

std::string cmd_strata(const Options& o) {
  const std::string format = o.format.empty() ? "table" : o.format;
  check_format(format, {"table", "json"});
  if (!o.perm.empty()) {
    const Orbit v = Orbit::of(parse_perm(o));
    const RepresentativeForm q(v.w);
    if (format == "json") {
      return Json{{"cycles", v.w.cycle_notation()},
                  {"stratum", v.stratum},
                  {"g_value", q.pairing(v.stratum, v.w.size())}}
                 .dump(2) +
             "\n";
    }
    return "O_" + v.w.cycle_notation() + " lies in X_" + std::to_string(v.stratum) + "\n";
  }
  require_n(o);
  if (!o.max_n_override && o.n > max_default_half_size(o.fpf_only)) {
    throw UsageError("--n too large; pass --max-n-override to proceed");
  }
  std::map<int, std::vector<Orbit>> by_stratum;
  for (auto& v : orbits_for(o)) by_stratum[v.stratum].push_back(std::move(v));

  Json arr = Json::array();
  std::ostringstream table;
  table << std::left << std::setw(9) << "stratum" << std::setw(8) << "orbits" << std::setw(10)
        << "min_codim" << "minimal orbits\n";
  for (const auto& [i, members] : by_stratum) {
    int min_codim = members.front().codim;
    for (const auto& v : members) min_codim = std::min(min_codim, v.codim);
    Json minimal = Json::array();
    std::string names;
    for (const auto& v : members) {
      if (v.codim != min_codim) continue;
      minimal.push_back(v.w.cycle_notation());
      names += (names.empty() ? "" : " ") + ("O_" + v.w.cycle_notation());
    }
    arr.push_back(Json{{"stratum", i},
                       {"orbits", members.size()},
                       {"min_codim", min_codim},
                       {"minimal_orbits", minimal}});
    table << std::setw(9) << i << std::setw(8) << members.size() << std::setw(10) << min_codim
          << names << '\n';
  }
  if (format == "json") {
    return Json{{"schema_version", kSchemaVersion},
                {"n", o.n},
                {"fpf_only", o.fpf_only},
                {"strata", arr}}
               .dump(2) +
           "\n";
  }
  return table.str();
}

std::string cmd_fiber(const Options& o) {
  const std::string format = o.format.empty() ? "table" : o.format;
  check_format(format, {"table", "json"});
  if (!o.perm.empty()) {
    const Involution w = parse_perm(o);
    Involution image;
    try {
      image = fibration_image(w);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const int n = w.size() / 2;
    const int i = stratum_index(w);
    if (format == "json") {
      return Json{{"orbit", w.cycle_notation()},
                  {"stratum", i},
                  {"image", image.cycle_notation()},
                  {"fiber_dim", fiber_dimension(n, i)}}
                 .dump(2) +
             "\n";
    }
    return "f_" + std::to_string(i) + "(O_" + w.cycle_notation() + ") = O_" +
           image.cycle_notation() + ", fiber dimension " + std::to_string(fiber_dimension(n, i)) +
           "\n";
  }
  require_n(o);
  const int n = o.n;
  std::vector<int> strata;
  if (o.stratum != 0) {
    strata.push_back(o.stratum);
  } else {
    for (int i = 1; i <= 2 * n - 1; ++i) strata.push_back(i);
  }
  Json arr = Json::array();
  std::ostringstream table;
  table << std::left << std::setw(4) << "i" << std::setw(11) << "fiber_dim" << std::setw(8)
        << "dim X_i" << "dim base\n";
  for (int i : strata) {
    FibrationSpec spec;
    try {
      spec = fibration_spec(n, i);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const int dim_stratum = n * (2 * n + 1) - (2 * n - i);
    const int dim_base = (n - 1) * (2 * n - 1);
    arr.push_back(Json{{"i", i},
                       {"fiber_dim", spec.fiber_dim},
                       {"stratum_dim", dim_stratum},
                       {"base_dim", dim_base}});
    table << std::setw(4) << i << std::setw(11) << spec.fiber_dim << std::setw(8) << dim_stratum
          << dim_base << '\n';
  }
  if (format == "json") {
    return Json{{"schema_version", kSchemaVersion}, {"n", n}, {"fibrations", arr}}.dump(2) + "\n";
  }
  return table.str();
}

std::string cmd_chow(const Options& o) {
  require_n(o);
  const std::string format = o.format.empty() ? "table" : o.format;
  check_format(format, {"table", "json"});
  GradedAbelianGroup g;
  try {
    g = chow_group(o.n);
  } catch (const ChowConsistencyError& e) {
    throw VerificationFailed(std::string(e.what()) + "\n" + e.presentation());
  }
  if (format == "json") return graded_group_json(o.n, g);
  return "CH*(GL(" + std::to_string(2 * o.n) + ")/SO(" + std::to_string(2 * o.n) + ")) = " +
         g.to_string() + "\n" + graded_group_table(g);
}

std::string cmd_certify(const Options& o) {
  require_n(o);
  const std::string format = o.format.empty() ? "json" : o.format;
  check_format(format, {"json"});
  try {
    return certificate_json(certificate(o.n));
  } catch (const CertificateError& e) {
    throw VerificationFailed(e.what());
  }
}

std::string cmd_verify(const Options& o, std::ostream& log) {
  if (o.up_to < 1) throw UsageError("--up-to must be >= 1");
  VerifyOptions v;
  v.up_to = o.up_to;
  v.exhaustive_limit = o.exhaustive_limit;
  std::ostringstream lines;
  const auto report = run_verification(v, &lines);
  log << lines.str();
  int failed = 0;
  for (const auto& c : report.checks) failed += c.passed ? 0 : 1;
  if (failed) {
    throw VerificationFailed(std::to_string(failed) + " of " +
                             std::to_string(report.checks.size()) + " checks failed");
  }
  return "all " + std::to_string(report.checks.size()) + " checks passed\n";
}

void emit(const std::string& payload, const Options& o, std::ostream& out) {
  if (o.out_path.empty() || o.out_path == "-") {
    out << payload;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open --out path " + o.out_path);
  file << payload;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"B-orbit combinatorics and Chow groups of GL(2n)/SO(2n)", "chowsym"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool with_fpf) {
    sub->add_option("--n", o.n, "half-size n (ambient dimension 2n)");
    if (with_fpf) sub->add_flag("--fpf-only", o.fpf_only, "restrict to fixed-point-free orbits");
    sub->add_option("--format", o.format, "output format: dot, json or table");
    sub->add_option("--out", o.out_path, "output file (default: standard output)");
    sub->add_flag("--max-n-override", o.max_n_override, "allow sizes beyond the default caps");
  };

  auto* involutions = app.add_subcommand("involutions", "list B-orbits (involutions) with attributes");
  add_common(involutions, true);
  involutions->add_option("--perm", o.perm, "single involution, e.g. \"(1 6)(2 5)(3 4)\"");

  auto* graph = app.add_subcommand("graph", "orbit graph of codimension-one closure inclusions");
  add_common(graph, true);
  graph->add_option("--threads", o.threads, "worker threads for pair comparisons (0 = all cores)");

  auto* strata = app.add_subcommand("strata", "stratum report, or the stratum of --perm");
  add_common(strata, true);
  strata->add_option("--perm", o.perm, "single involution");

  auto* fiber = app.add_subcommand("fiber", "fibration dimensions, or the image of --perm under f_i");
  add_common(fiber, false);
  fiber->add_option("--i", o.stratum, "single stratum index");
  fiber->add_option("--perm", o.perm, "single involution");

  auto* chow = app.add_subcommand("chow", "graded Chow group of GL(2n)/SO(2n)");
  add_common(chow, false);

  auto* certify = app.add_subcommand("certify", "certificate of the computation as JSON");
  add_common(certify, false);

  auto* verify = app.add_subcommand("verify", "run the invariant suite; nonzero exit on failure");
  verify->add_option("--up-to", o.up_to, "largest n for the Chow group check");
  verify->add_option("--exhaustive-limit", o.exhaustive_limit,
                     "largest n for exhaustive orbit and pair suites");
  verify->add_option("--out", o.out_path, "output file (default: standard output)");

  std::vector<std::string> argv_storage{"chowsym"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    std::string payload;
    if (involutions->parsed()) payload = cmd_involutions(o);
    if (graph->parsed()) payload = cmd_graph(o);
    if (strata->parsed()) payload = cmd_strata(o);
    if (fiber->parsed()) payload = cmd_fiber(o);
    if (chow->parsed()) payload = cmd_chow(o);
    if (certify->parsed()) payload = cmd_certify(o);
    if (verify->parsed()) {
      std::ostringstream log;
      try {
        payload = cmd_verify(o, log);
      } catch (const VerificationFailed&) {
        emit(log.str(), o, out);
        throw;
      }
      payload = log.str() + payload;
    }
    emit(payload, o, out);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const VerificationFailed& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
}

}  // namespace chowsym::cli
