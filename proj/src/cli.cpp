// Copyright (c) 2026 the cpgraphene developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cpg/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpg/asymptotics.hpp"
#include "cpg/numerics.hpp"
#include "cpg/validation.hpp"

namespace cpg::cli {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

std::string join_flags(const std::vector<std::string>& flags) {
  if (flags.empty()) return "ok";
  std::string s;
  for (size_t i = 0; i < flags.size(); ++i) {
    if (i) s += ";";
    s += flags[i];
  }
  return s;
}

constexpr const char* kCsvHeader =
    "a_m,T_K,tau,E0_J,d1_J,d2l1_J,d2l0_J,F_numeric_J,F_decomp_J,S_J_per_K,"
    "d1_asym_J,d2l1_asym_J,d2l0_asym_J,S_asym_J_per_K,flags";

constexpr const char* kSchemaVersion = "cpgraphene-records-1";

void write_csv(const std::vector<Record>& records, std::ostream& out) {
  out << kCsvHeader << "\n";
  auto cell = [](const std::optional<double>& v) { return v ? fmt(*v) : std::string(); };
  for (const auto& r : records) {
    out << fmt(r.a_m) << ',' << fmt(r.T_K) << ',' << fmt(r.tau) << ',' << cell(r.E0_J)
        << ',' << cell(r.d1_J) << ',' << cell(r.d2l1_J) << ',' << cell(r.d2l0_J) << ','
        << cell(r.F_numeric_J) << ',' << cell(r.F_decomp_J) << ',' << cell(r.S_J_per_K)
        << ',' << cell(r.d1_asym_J) << ',' << cell(r.d2l1_asym_J) << ','
        << cell(r.d2l0_asym_J) << ',' << cell(r.S_asym_J_per_K) << ','
        << join_flags(r.flags) << "\n";
  }
}

void write_json(const std::vector<Record>& records, std::ostream& out) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  auto put = [](nlohmann::ordered_json& o, const char* key,
                const std::optional<double>& v) {
    if (v)
      o[key] = *v;
    else
      o[key] = nullptr;
  };
  for (const auto& r : records) {
    nlohmann::ordered_json o;
    o["schema_version"] = kSchemaVersion;
    o["a_m"] = r.a_m;
    o["T_K"] = r.T_K;
    o["tau"] = r.tau;
    put(o, "E0_J", r.E0_J);
    put(o, "d1_J", r.d1_J);
    put(o, "d2l1_J", r.d2l1_J);
    put(o, "d2l0_J", r.d2l0_J);
    put(o, "F_numeric_J", r.F_numeric_J);
    put(o, "F_decomp_J", r.F_decomp_J);
    put(o, "S_J_per_K", r.S_J_per_K);
    put(o, "d1_asym_J", r.d1_asym_J);
    put(o, "d2l1_asym_J", r.d2l1_asym_J);
    put(o, "d2l0_asym_J", r.d2l0_asym_J);
    put(o, "S_asym_J_per_K", r.S_asym_J_per_K);
    o["flags"] = join_flags(r.flags);
    arr.push_back(std::move(o));
  }
  out << arr.dump(2) << "\n";
}

}  // namespace

void write_records(const std::vector<Record>& records, OutputFormat format,
                   std::ostream& out) {
  if (format == OutputFormat::csv)
    write_csv(records, out);
  else
    write_json(records, out);
}

std::vector<double> expand_range(const std::string& text) {
  const auto first = text.find(':');
  if (first == std::string::npos) {
    try {
      size_t pos = 0;
      const double v = std::stod(text, &pos);
      if (pos != text.size()) throw usage_error("malformed number: " + text);
      return {v};
    } catch (const std::logic_error&) {
      throw usage_error("malformed number: " + text);
    }
  }
  const auto second = text.find(':', first + 1);
  if (second == std::string::npos)
    throw usage_error("malformed range (expected lo:hi:n): " + text);
  double lo, hi;
  long n;
  try {
    lo = std::stod(text.substr(0, first));
    hi = std::stod(text.substr(first + 1, second - first - 1));
    n = std::stol(text.substr(second + 1));
  } catch (const std::logic_error&) {
    throw usage_error("malformed range (expected lo:hi:n): " + text);
  }
  if (n < 1 || !(lo > 0.0) || !(hi > 0.0) || hi < lo)
    throw usage_error("range needs 0 < lo <= hi and n >= 1: " + text);
  std::vector<double> out;
  out.reserve(static_cast<size_t>(n));
  if (n == 1) {
    out.push_back(lo);
    return out;
  }
  // geometric spacing: every power-law fit downstream prefers it
  const double ratio = std::pow(hi / lo, 1.0 / static_cast<double>(n - 1));
  double v = lo;
  for (long i = 0; i < n; ++i) {
    out.push_back(i == n - 1 ? hi : v);
    v *= ratio;
  }
  return out;
}

RunRequest parse_cli(const std::vector<std::string>& args) {
  CLI::App app{"Casimir-Polder free energy and entropy of an atom above a "
               "graphene sheet (Dirac-model polarization tensor)"};
  app.require_subcommand(1);

  RunRequest req;
  std::vector<std::string> sep_args, temp_args;
  std::string atom_file, atom_name, format_name = "csv";
  std::optional<double> alpha0_au, beta0_au;
  bool exact_gtilde = false;

  auto add_common = [&](CLI::App* cmd, bool needs_temperature) {
    cmd->add_option("--separation-m", sep_args,
                    "atom-sheet separation in meters (repeatable, or lo:hi:n "
                    "geometric range)");
    if (needs_temperature)
      cmd->add_option("--temperature-k", temp_args,
                      "temperature in kelvin (repeatable, or lo:hi:n geometric range)");
    cmd->add_option("--atom-file", atom_file, "JSON atom table");
    cmd->add_option("--atom-name", atom_name, "name to select from the atom table");
    cmd->add_option("--alpha0-au", alpha0_au,
                    "static electric polarizability in atomic units");
    cmd->add_option("--beta0-au", beta0_au,
                    "static magnetic susceptibility in atomic units");
    cmd->add_option("--rel-tol", req.opts.rel_tol, "relative tolerance");
    cmd->add_option("--l-max", req.opts.l_max, "Matsubara truncation cap");
    cmd->add_flag("--exact-gtilde", exact_gtilde,
                  "use the exact g form instead of the small-v one");
    cmd->add_option("--threads", req.opts.threads, "worker threads (0 = hardware)");
    cmd->add_option("--format", format_name, "output format: csv or json");
    cmd->add_option("--out", req.out_path, "output file (default stdout)");
  };

  auto* c_e0 = app.add_subcommand("energy-t0", "zero-temperature energy E(a)");
  auto* c_f = app.add_subcommand("free-energy", "full free energy F(a,T)");
  auto* c_s = app.add_subcommand("entropy", "entropy S(a,T) = -dF/dT");
  auto* c_d = app.add_subcommand("decompose",
                                 "free-energy breakdown with asymptotic counterparts");
  auto* c_a = app.add_subcommand("asymptote", "closed-form low-temperature pieces");
  auto* c_w = app.add_subcommand("sweep", "breakdown plus entropy over a grid");
  auto* c_v = app.add_subcommand("validate", "run the built-in verification suite");
  add_common(c_e0, false);
  add_common(c_f, true);
  add_common(c_s, true);
  add_common(c_d, true);
  add_common(c_a, true);
  add_common(c_w, true);
  c_v->add_option("--threads", req.opts.threads, "worker threads (0 = hardware)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    throw usage_error("help");
  } catch (const CLI::ParseError& e) {
    std::ostringstream ss;
    ss << e.what();
    throw usage_error(ss.str());
  }

  if (c_v->parsed()) {
    req.command = Command::validate;
    return req;
  }
  req.command = c_e0->parsed()  ? Command::energy_t0
              : c_f->parsed()   ? Command::free_energy
              : c_s->parsed()   ? Command::entropy
              : c_d->parsed()   ? Command::decompose
              : c_a->parsed()   ? Command::asymptote
                                : Command::sweep;

  if (format_name == "csv")
    req.format = OutputFormat::csv;
  else if (format_name == "json")
    req.format = OutputFormat::json;
  else
    throw usage_error("unknown format: " + format_name);

  req.graphene.use_exact_gtilde = exact_gtilde;
  req.opts.use_exact_gtilde = exact_gtilde;
  try {
    lifshitz::validate_options(req.opts);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }

  // atom: file lookup first, inline values override
  const bool has_inline = alpha0_au.has_value() || beta0_au.has_value();
  if (!atom_file.empty()) {
    if (atom_name.empty())
      throw usage_error("--atom-file requires --atom-name");
    const auto table = load_atom_file(atom_file);
    bool found = false;
    for (const auto& a : table)
      if (a.name == atom_name) {  // exact, case-sensitive
        req.atom = a;
        found = true;
        break;
      }
    if (!found) throw usage_error("atom not found in table: " + atom_name);
  } else if (!atom_name.empty()) {
    throw usage_error("--atom-name requires --atom-file");
  } else if (!has_inline) {
    throw usage_error("no atom given: use --atom-file/--atom-name or --alpha0-au");
  }
  try {
    if (alpha0_au) req.atom.alpha0 = alpha0_from_atomic_units(*alpha0_au);
    if (beta0_au) req.atom.beta0 = alpha0_from_atomic_units(*beta0_au);
  } catch (const invalid_atom_error& e) {
    throw usage_error(e.what());
  }

  if (sep_args.empty()) throw usage_error("missing required --separation-m");
  std::vector<double> seps, temps;
  for (const auto& s : sep_args)
    for (double v : expand_range(s)) seps.push_back(v);
  for (const auto& t : temp_args)
    for (double v : expand_range(t)) temps.push_back(v);

  if (req.command == Command::energy_t0) {
    temps = {0.0};
  } else if (temps.empty()) {
    throw usage_error("missing required --temperature-k");
  }
  for (double a : seps) {
    if (!(a > 0.0)) throw usage_error("separations must be positive");
    for (double T : temps) {
      if (req.command != Command::energy_t0 && !(T > 0.0))
        throw usage_error("temperature must be positive here; use energy-t0 at T = 0");
      req.grid.emplace_back(a, T);
    }
  }
  return req;
}

Record evaluate_point(const RunRequest& req, double a, double T) {
  Record rec;
  rec.a_m = a;
  rec.T_K = T;
  const auto tg = make_thermal_geometry(a, T, req.graphene);
  rec.tau = tg.tau;
  const auto& atom = req.atom;
  const auto& g = req.graphene;
  const auto& opts = req.opts;

  auto guarded = [&](const char* what, auto&& fn) -> std::optional<double> {
    try {
      return fn();
    } catch (const numerics::numeric_error& e) {
      rec.flags.push_back(std::string(what) + ": " + e.what());
      return std::nullopt;
    }
  };

  const bool want_breakdown =
      req.command == Command::decompose || req.command == Command::sweep;
  const bool want_f = req.command == Command::free_energy;
  const bool want_s = req.command == Command::entropy || req.command == Command::sweep;
  const bool want_asym = req.command == Command::decompose ||
                         req.command == Command::asymptote ||
                         req.command == Command::sweep;

  if (req.command == Command::energy_t0) {
    rec.E0_J = guarded("E0", [&] { return lifshitz::energy_zero_t(atom, a, g, opts); });
    return rec;
  }
  if (want_f)
    rec.F_numeric_J =
        guarded("F_numeric", [&] { return lifshitz::free_energy_full(atom, tg, g, opts); });
  if (want_breakdown) {
    const auto b = lifshitz::free_energy_breakdown(atom, tg, g, opts);
    auto pick = [](double v) -> std::optional<double> {
      if (std::isnan(v)) return std::nullopt;
      return v;
    };
    rec.E0_J = pick(b.E0);
    rec.d1_J = pick(b.d1);
    rec.d2l1_J = pick(b.d2_lgeq1);
    rec.d2l0_J = pick(b.d2_l0);
    rec.F_numeric_J = pick(b.F_total_numeric);
    rec.F_decomp_J = pick(b.F_total_decomposed);
    for (const auto& f : b.flags) rec.flags.push_back(f);
  }
  if (want_s)
    rec.S_J_per_K =
        guarded("S", [&] { return lifshitz::entropy(atom, a, T, g, opts); });
  if (req.command == Command::asymptote)
    rec.E0_J = guarded("E0", [&] { return lifshitz::energy_zero_t(atom, a, g, opts); });
  if (want_asym) {
    rec.d1_asym_J = asymptotics::delta1_asymptotic(atom, a, T, g);
    rec.d2l1_asym_J = asymptotics::delta2_lgeq1_asymptotic(atom, a, T, g);
    rec.d2l0_asym_J = asymptotics::delta2_l0_asymptotic(atom, a, T, g);
  }
  if (want_s || req.command == Command::asymptote)
    rec.S_asym_J_per_K = asymptotics::entropy_low_t(atom, a, T, g);
  return rec;
}

int run(const RunRequest& req, std::ostream& sink, std::ostream& err) {
  if (req.command == Command::validate) {
    const auto results = validation::run_acceptance_checks(&err, req.opts.threads);
    int failures = 0;
    for (const auto& r : results) {
      sink << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << " - "
           << r.name << " (" << r.detail << ")\n";
      if (!r.pass) ++failures;
    }
    sink << (failures == 0 ? "all checks passed" : "checks failed") << " ("
         << results.size() - static_cast<size_t>(failures) << "/" << results.size()
         << ")\n";
    return failures == 0 ? 0 : 2;
  }

  std::vector<Record> records;
  records.reserve(req.grid.size());
  bool any_failed = false;
  for (const auto& [a, T] : req.grid) {
    records.push_back(evaluate_point(req, a, T));
    if (!records.back().flags.empty()) any_failed = true;
  }

  if (req.out_path.empty()) {
    write_records(records, req.format, sink);
  } else {
    // atomic write: temp file in the destination directory, then rename
    namespace fs = std::filesystem;
    const fs::path target(req.out_path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
      std::ofstream f(tmp);
      if (!f) {
        err << "cannot open output file: " << tmp.string() << "\n";
        return 1;
      }
      write_records(records, req.format, f);
    }
    fs::rename(tmp, target);
  }
  return any_failed ? 2 : 0;
}

int main_entry(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  RunRequest req;
  try {
    req = parse_cli(args);
  } catch (const usage_error& e) {
    if (std::string(e.what()) == "help") return 0;
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const invalid_atom_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  try {
    return run(req, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cpg::cli
