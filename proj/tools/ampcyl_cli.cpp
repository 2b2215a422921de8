#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ampcyl/ampcyl.hpp"

namespace fs = std::filesystem;
using namespace ampcyl;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string case_label;
  bool all = false;
  std::string cylinders;
  std::string format = "text";
  std::string out;
  std::string cases_dir;
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Bundle, with files from --cases-dir replacing cases of the same label.
std::vector<CaseFile> load_sources(const RunConfig& cfg) {
  std::vector<CaseFile> cases = bundled_cases();
  if (cfg.cases_dir.empty()) return cases;
  if (!fs::is_directory(cfg.cases_dir)) throw InputError("not a directory: " + cfg.cases_dir);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(cfg.cases_dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    CaseFile c;
    try {
      c = load_case(read_file(f));
    } catch (const Error& e) {
      throw InputError(f.string() + ": " + e.what());
    }
    for (auto& b : cases)
      if (b.type_label == c.type_label) b = c;
  }
  return cases;
}

std::vector<CaseFile> select(const RunConfig& cfg) {
  auto cases = load_sources(cfg);
  if (cfg.case_label.empty()) return cases;
  for (const auto& c : cases)
    if (c.type_label == cfg.case_label) return {c};
  throw InputError("unknown case '" + cfg.case_label + "'");
}

std::optional<CylinderSet> parse_cylinders(const std::string& s) {
  if (s.empty()) return std::nullopt;
  CylinderSet out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  if (out.empty()) throw InputError("empty --cylinders list");
  return out;
}

void check_cylinders(const CaseFile& c, const std::optional<CylinderSet>& set) {
  if (!set) return;
  for (const auto& n : *set) {
    try {
      c.cylinder(n);
    } catch (const UnknownCylinder& e) {
      throw InputError(e.what());
    }
  }
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream o(cfg.out, std::ios::binary);
  if (!o) throw InputError("cannot write " + cfg.out);
  o << text;
}

std::vector<CaseReport> verify_all(const std::vector<CaseFile>& cases,
                                   const std::optional<CylinderSet>& override) {
  std::vector<std::future<CaseReport>> jobs;
  VerifyOptions opt{override};
  for (const auto& c : cases) jobs.push_back(std::async(std::launch::async, [&c, opt] { return verify_case(c, opt); }));
  std::vector<CaseReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

int run_verify(const RunConfig& cfg, bool full) {
  auto cases = select(cfg);
  auto override = parse_cylinders(cfg.cylinders);
  for (const auto& c : cases) check_cylinders(c, override);
  auto reports = verify_all(cases, override);
  bool ok = true;
  std::size_t warnings = 0;
  for (const auto& r : reports) {
    ok = ok && r.passed();
    warnings += r.warnings.size();
  }
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["passed"] = ok;
    j["cases"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      if (full) {
        j["cases"].push_back(report_json(r));
      } else {
        nlohmann::ordered_json e;
        e["type"] = r.type;
        e["passed"] = r.passed();
        e["warnings"] = r.warnings;
        j["cases"].push_back(e);
      }
    }
    emit(cfg, j.dump(2) + "\n");
  } else {
    std::string text;
    for (const auto& r : reports) text += full ? report_text(r) : verify_text(r);
    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.passed();
    text += std::to_string(passed) + "/" + std::to_string(reports.size()) + " cases passed, " +
            std::to_string(warnings) + " warning(s)\n";
    emit(cfg, text);
  }
  return ok ? 0 : 1;
}

int run_figure(const RunConfig& cfg) {
  auto cases = select(cfg);
  auto override = parse_cylinders(cfg.cylinders);
  for (const auto& c : cases) check_cylinders(c, override);
  if (cases.size() == 1 && !cfg.all && !(!cfg.out.empty() && fs::is_directory(cfg.out))) {
    emit(cfg, render_figure(cases[0], override));
    return 0;
  }
  fs::path dir = cfg.out.empty() ? fs::path(".") : fs::path(cfg.out);
  fs::create_directories(dir);
  for (const auto& c : cases) {
    fs::path p = dir / (file_stem(c.type_label) + ".svg");
    std::ofstream o(p, std::ios::binary);
    if (!o) throw InputError("cannot write " + p.string());
    o << render_figure(c, override);
  }
  return 0;
}

int run_list(const RunConfig& cfg) {
  auto cases = select(cfg);
  if (cfg.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& c : cases) {
      nlohmann::ordered_json e;
      e["type"] = c.type_label;
      e["covering_sets"] = c.expected.covering_sets;
      e["insufficient_sets"] = c.expected.insufficient_sets;
      j.push_back(e);
    }
    emit(cfg, j.dump(2) + "\n");
    return 0;
  }
  std::string text;
  for (const auto& c : cases) {
    text += c.type_label;
    text.append(c.type_label.size() < 10 ? 10 - c.type_label.size() : 1, ' ');
    text += "covering:";
    for (const auto& s : c.expected.covering_sets) text += " " + format_set(s);
    if (!c.expected.insufficient_sets.empty()) {
      text += "  insufficient:";
      for (const auto& s : c.expected.insufficient_sets) text += " " + format_set(s);
    }
    text += "\n";
  }
  emit(cfg, text);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact ample-cone coverage checks for rank-2 Du Val del Pezzo surfaces of degree 1"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool with_cylinders) {
    auto* c = sub->add_option("--case", cfg.case_label, "Singularity type, e.g. D5+A2 or A7'");
    auto* a = sub->add_flag("--all", cfg.all, "All cases (default)");
    c->excludes(a);
    if (with_cylinders)
      sub->add_option("--cylinders", cfg.cylinders, "Comma-separated cylinder set replacing the expected ones");
    sub->add_option("--out", cfg.out, "Output file (figure --all: directory)");
    sub->add_option("--cases-dir", cfg.cases_dir, "Directory of case files overriding the bundle by label");
  };
  auto format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* verify = app.add_subcommand("verify", "Run every check and print one line per case");
  common(verify, true);
  format(verify);
  auto* report = app.add_subcommand("report", "Print the full report per case");
  common(report, true);
  format(report);
  auto* figure = app.add_subcommand("figure", "Write an SVG of the ample cone and polarity cones");
  common(figure, true);
  auto* list = app.add_subcommand("list", "List bundled cases and their expected covering sets");
  list->add_option("--cases-dir", cfg.cases_dir, "Directory of case files overriding the bundle by label");
  format(list);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify(cfg, false);
    if (report->parsed()) return run_verify(cfg, true);
    if (figure->parsed()) return run_figure(cfg);
    return run_list(cfg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
