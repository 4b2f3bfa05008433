// Command-line front end.  Every command builds a JSON document first and the
// text output is a projection of that document, so the two modes can never
// disagree.
#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <string>

#include "milnor/report.hpp"
#include "milnor/threads.hpp"

namespace {

using milnor::Json;

struct CliArgs {
  std::string input_file;
  std::string builtin;
  bool json = false;
  bool timings = false;
  bool serial = false;
  std::uint64_t seed = 0;
  std::string convention = "reconciled";
  int degree = -1;
  bool all_strata = false;
  bool refined = false;
  bool use_section = false;
  int section_k = 2;
};

void write_arrangement_text(const Json& a, std::ostream& os) {
  os << "dim " << a["dim"].get<int>() << "\n";
  for (const auto& row : a["hyperplanes"]) {
    bool first = true;
    for (const auto& c : row) {
      if (!first) os << ' ';
      os << c.get<std::string>();
      first = false;
    }
    os << "\n";
  }
}

void write_lattice_text(const Json& l, std::ostream& os) {
  os << "ambient dimension " << l["ambient_dim"].get<int>() << ", " << l["d"].get<int>()
     << " hyperplanes, essential: " << (l["essential"].get<bool>() ? "yes" : "no") << "\n";
  os << "flats (id  codim  mult  mobius  dense  hyperplanes):\n";
  for (const auto& f : l["flats"]) {
    os << "  " << f["id"].get<int>() << "  " << f["codim"].get<int>() << "  "
       << f["multiplicity"].get<int>() << "  " << f["mobius"].get<long long>() << "  "
       << (f["dense"].get<bool>() ? "yes" : "no ") << "  {";
    bool first = true;
    for (const auto& h : f["hyperplanes"]) {
      if (!first) os << ", ";
      os << h.get<int>();
      first = false;
    }
    os << "}" << (f["cone_point"].get<bool>() ? "  (cone point)" : "") << "\n";
  }
  os << "Poincare polynomial of the complement: " << l["poincare"]["display"].get<std::string>()
     << "\n";
  os << "Betti numbers:";
  for (const auto& b : l["betti"]) os << " " << b.get<long long>();
  os << "\n";
  os << "Euler characteristic: " << l["euler_char"].get<long long>() << "\n";
}

std::string orders_text(const Json& orders) {
  std::string s = "{";
  bool first = true;
  for (const auto& e : orders) {
    if (!first) s += ", ";
    s += std::to_string(e.get<long>());
    first = false;
  }
  return s + "}";
}

void write_bounds_text(const Json& b, std::ostream& os) {
  os << "eigenvalue-order bounds (" << (b["dense_only"].get<bool>() ? "dense edges" : "all strata")
     << "):\n";
  for (const auto& row : b["degrees"]) {
    os << "  degree " << row["degree"].get<int>() << ": admissible orders "
       << orders_text(row["admissible_orders"]);
    if (row.contains("relprime_shortcut") && row["relprime_shortcut"].get<bool>())
      os << "  [multiplicities coprime to d: only order 1 below top degree]";
    os << "\n";
    if (row.contains("refined_orders"))
      os << "    refined orders (lcm at points) " << orders_text(row["refined_orders"]) << "\n";
  }
}

void write_zeta_text(const Json& z, std::ostream& os) {
  os << "monodromy zeta function: " << z["display"].get<std::string>() << "\n";
  os << "Euler characteristic: " << z["euler_char"].get<long long>() << "\n";
  os << "eigenvalue-1 multiplicity on H_i(F), i = 0..n:";
  for (const auto& m : z["eigenvalue_one_multiplicity"]) os << " " << m.get<long long>();
  os << "\n";
}

void write_spectrum_text(const Json& c, std::ostream& os) {
  os << "characteristic polynomial of the monodromy on H_1: " << c["charpoly"].get<std::string>()
     << "\n";
  os << "det(1 - t T_1) = " << c["det_form"].get<std::string>() << "\n";
  os << "nonzero superabundances (k: sigma):";
  bool any = false;
  for (const auto& cert : c["certificates"]) {
    if (cert["sigma"].get<long>() == 0) continue;
    os << " " << cert["k"].get<long>() << ": " << cert["sigma"].get<long>() << ";";
    any = true;
  }
  if (!any) os << " none";
  os << "\n";
  if (c.contains("triple_point_module"))
    os << "module decomposition: " << c["triple_point_module"]["decomposition"].get<std::string>()
       << "\n";
}

void write_section_text(const Json& s, std::ostream& os) {
  os << "generic section (seed " << s["seed"].get<std::uint64_t>() << ", attempts "
     << s["attempts"].get<int>() << ", coefficient bound " << s["coefficient_bound"].get<long>()
     << "):\n";
  write_arrangement_text(s["arrangement"], os);
}

void write_checks_text(const Json& checks, std::ostream& os) {
  os << "cross-checks:\n";
  for (const auto& [name, verdict] : checks.items())
    os << "  " << name << ": " << verdict.get<std::string>() << "\n";
}

void write_text(const std::string& cmd, const Json& j, std::ostream& os) {
  if (cmd == "validate") {
    write_arrangement_text(j["arrangement"], os);
    return;
  }
  if (cmd == "lattice") {
    write_lattice_text(j["lattice"], os);
    return;
  }
  if (cmd == "bounds") {
    write_bounds_text(j["bounds"], os);
    return;
  }
  if (cmd == "zeta") {
    write_zeta_text(j["zeta"], os);
    return;
  }
  if (cmd == "charpoly") {
    if (j.contains("section")) {
      write_section_text(j["section"], os);
      write_spectrum_text(j["charpoly_of_section"], os);
    } else {
      write_spectrum_text(j["charpoly"], os);
    }
    write_checks_text(j["cross_checks"], os);
    return;
  }
  if (cmd == "section") {
    write_section_text(j["section"], os);
    return;
  }
  // report
  os << "== arrangement ==\n";
  write_arrangement_text(j["arrangement"], os);
  os << "== lattice ==\n";
  write_lattice_text(j["lattice"], os);
  os << "== bounds ==\n";
  write_bounds_text(j["bounds"], os);
  os << "== zeta ==\n";
  write_zeta_text(j["zeta"], os);
  if (j.contains("section")) {
    os << "== section ==\n";
    write_section_text(j["section"], os);
  }
  if (j.contains("charpoly")) {
    os << "== charpoly ==\n";
    write_spectrum_text(j["charpoly"], os);
  }
  if (j.contains("charpoly_of_section")) {
    os << "== charpoly of section ==\n";
    write_spectrum_text(j["charpoly_of_section"], os);
  }
  write_checks_text(j["cross_checks"], os);
}

template <class K>
Json run_command(const milnor::BasicArrangement<K>& a, const std::string& cmd,
                 const CliArgs& args) {
  using namespace milnor;
  RunOptions opts;
  opts.dense_only = !args.all_strata;
  opts.refined = args.refined;
  opts.degree = args.degree;
  opts.convention = exponent_convention_from_string(args.convention);
  opts.use_section = args.use_section;
  opts.seed = args.seed;
  opts.exec = args.serial ? Exec::serial : Exec::parallel;

  Json j;
  j["version"] = version_string();
  j["command"] = cmd;
  j["arrangement"] = arrangement_json(a);
  if (cmd == "validate") return j;

  if (cmd == "report") {
    Json full = full_report(a, opts);
    for (auto& [key, value] : full.items())
      if (key != "version" && key != "arrangement") j[key] = std::move(value);
    return j;
  }

  IntersectionLattice lat = analyze(a, opts.exec);
  if (cmd == "lattice") {
    j["lattice"] = lattice_json(lat);
  } else if (cmd == "bounds") {
    if (args.degree != -1 && (args.degree < 0 || args.degree > a.dim))
      fail(Errc::invalid_dimension,
           "--degree must lie between 0 and the ambient dimension " + std::to_string(a.dim));
    j["bounds"] = bounds_json(lat, opts);
  } else if (cmd == "zeta") {
    j["zeta"] = zeta_json(lat);
  } else if (cmd == "charpoly") {
    Json checks = Json::object();
    if (a.dim == 2) {
      SpectrumResult r = monodromy_spectrum(a, lat, opts.convention, opts.exec);
      j["charpoly"] = spectrum_result_json(r, lat);
      spectrum_checks(r, lat, checks);
    } else if (!opts.use_section) {
      fail(Errc::invalid_dimension,
           "charpoly requires ambient dimension 2; pass --section to reduce to a generic "
           "plane section first");
    } else if constexpr (std::is_same_v<K, Rat>) {
      SectionResult sec = generic_section(a, 2, opts.seed);
      IntersectionLattice slat = analyze(sec.arrangement, opts.exec);
      j["section"] = section_json(sec);
      SpectrumResult r = monodromy_spectrum(sec.arrangement, slat, opts.convention, opts.exec);
      j["charpoly_of_section"] = spectrum_result_json(r, slat);
      spectrum_checks(r, slat, checks);
    }
    j["cross_checks"] = std::move(checks);
  } else if (cmd == "section") {
    if constexpr (std::is_same_v<K, Rat>) {
      SectionResult sec = generic_section(a, args.section_k, args.seed);
      j["section"] = section_json(sec);
    } else {
      fail(Errc::invalid_dimension,
           "generic sections require ambient dimension greater than the section dimension");
    }
  }
  return j;
}

int run(const std::string& cmd, const CliArgs& args) {
  using namespace milnor;
  if (!args.builtin.empty() && !args.input_file.empty())
    fail(Errc::io_error, "provide either an arrangement file or --builtin, not both");
  if (args.builtin.empty() && args.input_file.empty())
    fail(Errc::io_error, "no input: provide an arrangement file or --builtin name[:params]");

  auto started = std::chrono::steady_clock::now();
  Json j;
  if (!args.builtin.empty() && builtin_is_cyc3(args.builtin)) {
    j = run_command(ceva3(), cmd, args);
  } else if (!args.builtin.empty()) {
    j = run_command(builtin_arrangement(args.builtin), cmd, args);
  } else {
    j = run_command(load_arrangement_file(args.input_file), cmd, args);
  }
  if (args.timings) {
    auto elapsed = std::chrono::steady_clock::now() - started;
    j["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }

  if (args.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_text(cmd, j, std::cout);
    if (args.timings)
      std::cout << "elapsed: " << j["timing_ms"].get<long long>() << " ms\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CliArgs args;
  CLI::App app{
      "milnor-spectra: exact invariants of projective hyperplane arrangements and "
      "Milnor-fiber monodromy"};
  app.require_subcommand(1);
  app.add_option("-i,--input", args.input_file, "arrangement file (dim header + one form per line)");
  app.add_option("-b,--builtin", args.builtin,
                 "built-in arrangement: braid:n, generic:n,d, ceva:q (ceva:3 runs over Q(w))");
  app.add_flag("--json", args.json, "emit the full JSON document instead of text");
  app.add_flag("--timings", args.timings,
               "append wall-clock timing (breaks byte-for-byte determinism)");
  app.add_flag("--serial", args.serial, "disable parallel kernels (results are identical)");
  app.add_option("--seed", args.seed, "seed for generic section coefficients (default 0)");
  app.add_option("--exponent-convention", args.convention,
                 "local vanishing-order rule for superabundance")
      ->check(CLI::IsMember({"reconciled", "strict", "paper-theorem"}));

  auto add_cmd = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    sub->add_option("file", args.input_file, "arrangement file");
    return sub;
  };
  add_cmd("validate", "parse, canonicalize and echo an arrangement");
  add_cmd("lattice", "intersection lattice, Mobius values, Poincare polynomial, Euler characteristic");
  CLI::App* bounds = add_cmd("bounds", "admissible eigenvalue orders per homology degree");
  bounds->add_option("--degree", args.degree, "restrict to a single homology degree");
  bounds->add_flag("--all-strata", args.all_strata, "use all strata instead of dense edges only");
  bounds->add_flag("--refined", args.refined, "also report lcm-refined orders at multiple points");
  add_cmd("zeta", "monodromy zeta function and eigenvalue-1 multiplicities");
  CLI::App* charpoly =
      add_cmd("charpoly", "exact characteristic polynomial of the monodromy on H_1 (lines)");
  charpoly->add_flag("--section", args.use_section,
                     "reduce higher-dimensional input via a generic plane section");
  CLI::App* section = add_cmd("section", "generic k-dimensional section with the same lattice");
  section->add_option("--k", args.section_k, "dimension of the section (default 2)");
  add_cmd("report", "run everything applicable, with embedded cross-checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  milnor::apply_thread_env();
  std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run(cmd, args);
  } catch (const milnor::Error& e) {
    if (args.json) {
      Json err{{"error", Json{{"code", milnor::errc_name(e.code())}, {"message", e.message()}}}};
      std::cout << err.dump(2) << "\n";
    } else {
      std::cerr << "error [" << milnor::errc_name(e.code()) << "]: " << e.message() << "\n";
    }
    return milnor::errc_is_internal(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    if (args.json) {
      Json err{{"error", Json{{"code", "InternalInconsistency"}, {"message", e.what()}}}};
      std::cout << err.dump(2) << "\n";
    } else {
      std::cerr << "error [InternalInconsistency]: " << e.what() << "\n";
    }
    return 2;
  }
}
