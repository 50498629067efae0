// hktkit: invariant cohomology and HKT-existence toolkit for nilpotent Lie
// algebras with hypercomplex structure.
//
// Exit codes: 0 success, 2 input error, 3 internal consistency violation.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hkt/catalog.hpp"
#include "hkt/report.hpp"

namespace {

using hkt::Command;
using hkt::Instance;
using hkt::Json;
using hkt::Rational;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

hkt::Mat matrix_from_json(const Json& rows, int dim, const std::string& name) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
    throw InputError(name + ": expected " + std::to_string(dim) + " rows");
  hkt::Mat m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const Json& row = rows[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw InputError(name + ": row " + std::to_string(i) + " has wrong size");
    for (int j = 0; j < dim; ++j)
      m(i, j) = hkt::Scalar(
          hkt::parse_rational(row[static_cast<size_t>(j)].get<std::string>()));
  }
  return m;
}

Instance instance_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError("invalid JSON in " + path + ": " + e.what());
  }
  try {
    hkt::LieAlgebraSpec spec;
    if (j.contains("salamon"))
      spec = hkt::parse_salamon(j["salamon"].get<std::string>());
    else if (j.contains("structured"))
      spec = hkt::parse_structured(j["structured"].get<std::string>());
    else
      throw InputError("file needs a \"salamon\" or \"structured\" field");
    hkt::HypercomplexStructure h;
    h.n = spec.quaternionic_dim();
    h.I = matrix_from_json(j.at("I"), spec.dim, "I");
    h.J = matrix_from_json(j.at("J"), spec.dim, "J");
    std::string name = j.value("name", path);
    hkt::ValidationResult v = hkt::validate_structure(h);
    if (!v.ok) {
      std::string msg = "structure validation failed:";
      for (const auto& s : v.violations) msg += "\n  " + s;
      throw InputError(msg);
    }
    return Instance(std::move(spec), std::move(h), name);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("invalid instance file: ") + e.what());
  }
}

std::optional<Rational> t_of(const std::string& id) {
  auto open = id.find("(t=");
  if (open == std::string::npos) return std::nullopt;
  return hkt::parse_rational(
      id.substr(open + 3, id.size() - open - 4));
}

void print_summary(const Json& report, std::ostream& os) {
  const Json& inst = report["instance"];
  os << "instance: " << inst["id"].get<std::string>() << "  (dim "
     << inst["dim"].get<int>() << ", n = " << inst["n"].get<int>() << ")\n";
  const Json& val = report["validation"];
  os << "  validation: structure " << (val["structure_ok"].get<bool>() ? "ok" : "FAILED")
     << ", jacobi " << (val["jacobi"].get<bool>() ? "ok" : "FAILED")
     << ", nilpotent " << (val["nilpotent"].get<bool>() ? "yes" : "NO")
     << ", integrable "
     << (val["integrable"]["I"].get<bool>() && val["integrable"]["J"].get<bool>() &&
                 val["integrable"]["K"].get<bool>()
             ? "yes"
             : "NO")
     << "\n";
  if (report.contains("cohomology")) {
    const Json& c = report["cohomology"];
    os << "  h^{0,1} = " << c["hodge"]["0,1"].get<int>()
       << ", ddj_lemma = " << (c["ddj_lemma"].get<bool>() ? "holds" : "fails")
       << "\n  qbc dims:";
    for (const auto& [p, d] : c["qbc"].items()) os << " " << p << ":" << d.get<int>();
    os << "\n  qae dims:";
    for (const auto& [p, d] : c["qae"].items()) os << " " << p << ":" << d.get<int>();
    os << "\n";
  }
  if (report.contains("qd")) {
    const Json& q = report["qd"];
    os << "  bicomplex isomorphism: "
       << (q["bicomplex_isomorphism"].get<bool>() ? "ok" : "FAILED") << "\n";
    if (!q["v_map_lambda"].is_null())
      os << "  v-map lambda: " << q["v_map_lambda"].get<std::string>() << "\n";
  }
  if (report.contains("hkt")) {
    const Json& h = report["hkt"]["verdict"];
    os << "  verdict: " << h["hkt"].get<std::string>() << " (by "
       << h["basis"].get<std::string>() << ", h^{0,1} = " << h["h01"].get<int>()
       << ")\n";
  }
}

int run_single(const Instance& inst, Command cmd,
               const std::optional<Rational>& t, const std::string& json_path) {
  auto start = std::chrono::steady_clock::now();
  Json report = hkt::build_report(inst, cmd, t);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  print_summary(report, std::cout);
  std::cerr << "elapsed: " << ms << " ms\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw InputError("cannot write JSON to " + json_path);
    out << report.dump(2) << "\n";
  }
  return 0;
}

int run_sweep(const std::string& sweep, Command cmd,
              const std::string& json_path) {
  std::vector<std::string> items;
  std::stringstream ss(sweep);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) items.push_back(tok);
  }
  Json reports = Json::array();
  struct Row {
    std::string t, h01, verdict;
  };
  std::vector<Row> rows;
  int failures = 0;
  for (const std::string& item : items) {
    Row row{item, "-", "-"};
    try {
      Rational t = hkt::parse_rational(item);
      Instance inst = hkt::make_rxh7(t);
      Json report = hkt::build_report(inst, cmd, t);
      if (report.contains("cohomology"))
        row.h01 = std::to_string(report["cohomology"]["hodge"]["0,1"].get<int>());
      if (report.contains("hkt")) {
        row.verdict = report["hkt"]["verdict"]["hkt"].get<std::string>();
        if (row.h01 == "-")
          row.h01 = std::to_string(report["hkt"]["verdict"]["h01"].get<int>());
      }
      reports.push_back(report);
    } catch (const hkt::ConsistencyError&) {
      throw;
    } catch (const std::exception& e) {
      row.verdict = std::string("error: ") + e.what();
      ++failures;
    }
    rows.push_back(row);
  }
  std::cout << "t\th^{0,1}\tverdict\n";
  for (const Row& r : rows)
    std::cout << r.t << "\t" << r.h01 << "\t" << r.verdict << "\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw InputError("cannot write JSON to " + json_path);
    out << reports.dump(2) << "\n";
  }
  return (failures > 0 && failures == static_cast<int>(items.size())) ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hktkit: invariant Dolbeault / quaternionic Bott-Chern cohomology and "
      "HKT existence for nilpotent Lie algebras with hypercomplex structure"};
  std::string command;
  app.add_option("command", command,
                 "one of: validate, cohomology, qd, hkt, full")
      ->required();
  std::string instance_id, file_path, t_str, json_path, sweep;
  auto* opt_inst =
      app.add_option("--instance", instance_id,
                     "catalog id: torus8, rxh7(t=P/Q), or rxh7 with --t");
  auto* opt_file = app.add_option("--file", file_path,
                                  "instance description file (JSON)");
  opt_inst->excludes(opt_file);
  app.add_option("--t", t_str, "parameter for --instance rxh7, as P/Q");
  app.add_option("--json", json_path, "write the JSON report to this path");
  app.add_option("--sweep", sweep,
                 "comma-separated rxh7 parameters, e.g. \"1/4,1/3,1/2\"");
  CLI11_PARSE(app, argc, argv);

  auto cmd = hkt::parse_command(command);
  if (!cmd) {
    std::cerr << "error: unknown command \"" << command << "\"\n";
    return 2;
  }
  try {
    if (!sweep.empty()) return run_sweep(sweep, *cmd, json_path);
    std::optional<Rational> t;
    if (!t_str.empty()) t = hkt::parse_rational(t_str);
    if (!file_path.empty())
      return run_single(instance_from_file(file_path), *cmd, std::nullopt,
                        json_path);
    if (instance_id.empty()) {
      std::cerr << "error: need --instance, --file, or --sweep\n";
      return 2;
    }
    if (instance_id == "rxh7" && t)
      return run_single(hkt::make_rxh7(*t), *cmd, t, json_path);
    Instance inst = hkt::instance_by_id(instance_id);
    return run_single(inst, *cmd, t_of(inst.id()), json_path);
  } catch (const hkt::ConsistencyError& e) {
    std::cerr << "internal consistency violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
