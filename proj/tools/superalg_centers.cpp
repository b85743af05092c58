// Command-line driver: configure an algebra, run verification suites, and
// emit deterministic reports.  Exit codes: 0 all checks pass, 1 a check
// failed or a computation error surfaced mid-suite, 2 configuration or
// usage error.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "superalg/report.hpp"

namespace {

// Reports are written next to their final path and renamed into place, so a
// crashed run never leaves a truncated report behind.
void write_output(const std::string& bytes, const std::string& path) {
  if (path.empty()) {
    std::cout << bytes;
    return;
  }
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    os << bytes;
    if (!os)
      throw superalg::Error(superalg::ErrorCode::ConfigError,
                            "cannot write report to " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

uint64_t parse_number(const std::string& key, const std::string& value) {
  if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
    throw superalg::Error(superalg::ErrorCode::ConfigError,
                          "config key " + key +
                              " expects a nonnegative integer, got '" + value +
                              "'");
  return std::stoull(value);
}

// One settable config key: the CLI option that shadows it (command-line
// values win) plus the parse-and-store action for file values.
struct KeyBinding {
  CLI::Option* opt = nullptr;
  std::function<void(const std::string&)> set;
};

using Bindings = std::map<std::string, KeyBinding>;

std::string trimmed(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Flat key=value file; blank lines and # comments allowed; flags override.
void apply_config_file(const std::string& path, const Bindings& bindings) {
  std::ifstream is(path);
  if (!is)
    throw superalg::Error(superalg::ErrorCode::ConfigError,
                          "cannot read config file " + path);
  std::string line;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string t = trimmed(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw superalg::Error(
          superalg::ErrorCode::ConfigError,
          "config line " + std::to_string(lineno) + " is not key=value: " + t);
    std::string key = trimmed(t.substr(0, eq));
    std::string value = trimmed(t.substr(eq + 1));
    auto it = bindings.find(key);
    if (it == bindings.end())
      throw superalg::Error(superalg::ErrorCode::ConfigError,
                            "unknown config key: " + key);
    if (it->second.opt && it->second.opt->count() > 0) continue;
    it->second.set(value);
  }
}

void add_algebra_options(CLI::App* cmd, superalg::RunConfig& cfg,
                         Bindings& bind) {
  bind["family"].opt = cmd->add_option("--family", cfg.family,
                                       "algebra family: gl, sl, or osp1");
  bind["family"].set = [&cfg](const std::string& v) { cfg.family = v; };
  bind["m"].opt = cmd->add_option("--m", cfg.m, "gl/sl even block size");
  bind["m"].set = [&cfg](const std::string& v) {
    cfg.m = static_cast<size_t>(parse_number("m", v));
  };
  bind["n"].opt = cmd->add_option("--n", cfg.n, "gl/sl odd block size");
  bind["n"].set = [&cfg](const std::string& v) {
    cfg.n = static_cast<size_t>(parse_number("n", v));
  };
  bind["n2"].opt =
      cmd->add_option("--n2", cfg.n2, "osp1 symplectic dimension (even)");
  bind["n2"].set = [&cfg](const std::string& v) {
    cfg.n2 = static_cast<size_t>(parse_number("n2", v));
  };
  bind["p"].opt =
      cmd->add_option("-p,--p", cfg.p, "odd prime characteristic");
  bind["p"].set = [&cfg](const std::string& v) {
    cfg.p = parse_number("p", v);
  };
  bind["e"].opt =
      cmd->add_option("-e,--e", cfg.e, "field extension degree (default 1)");
  bind["e"].set = [&cfg](const std::string& v) {
    cfg.e = parse_number("e", v);
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "construct small modular Lie superalgebras and verify the structure "
      "of their reduced enveloping algebras"};
  app.require_subcommand(1);

  superalg::RunConfig cfg;
  std::string suites_flag = "all";
  bool list_json = false;
  std::string run_config_path;
  std::string dump_config_path;
  Bindings run_bind;
  Bindings dump_bind;

  CLI::App* run_cmd = app.add_subcommand(
      "run", "run verification suites and emit a report");
  add_algebra_options(run_cmd, cfg, run_bind);
  run_bind["chi"].opt = run_cmd->add_option(
      "--chi", cfg.chi_spec,
      "p-character: zero, random-regular, or comma-separated toral values");
  run_bind["chi"].set = [&cfg](const std::string& v) { cfg.chi_spec = v; };
  run_bind["seed"].opt =
      run_cmd->add_option("--seed", cfg.seed,
                          "seed for sampling and randomized checks");
  run_bind["seed"].set = [&cfg](const std::string& v) {
    cfg.seed = parse_number("seed", v);
  };
  run_bind["suites"].opt =
      run_cmd->add_option("--suites", suites_flag,
                          "comma-separated subset of the suites, or all");
  run_bind["suites"].set = [&suites_flag](const std::string& v) {
    suites_flag = v;
  };
  run_bind["degree-bound"].opt =
      run_cmd->add_option("--degree-bound", cfg.degree_bound,
                          "monomial degree cap for the annihilator suite");
  run_bind["degree-bound"].set = [&cfg](const std::string& v) {
    cfg.degree_bound = static_cast<size_t>(parse_number("degree-bound", v));
  };
  run_bind["out"].opt =
      run_cmd->add_option("-o,--out,--output", cfg.output,
                          "report path (stdout when omitted)");
  run_bind["out"].set = [&cfg](const std::string& v) { cfg.output = v; };
  run_bind["format"].opt =
      run_cmd->add_option("--format", cfg.format, "report format")
          ->check(CLI::IsMember({"json", "text"}));
  run_bind["format"].set = [&cfg](const std::string& v) {
    if (v != "json" && v != "text")
      throw superalg::Error(superalg::ErrorCode::ConfigError,
                            "config key format must be json or text, got '" +
                                v + "'");
    cfg.format = v;
  };
  run_cmd->add_option("--config", run_config_path,
                      "flat key=value config file; flags override its values");

  CLI::App* dump_cmd = app.add_subcommand(
      "dump", "serialize structure constants, roots, rho, and the form");
  add_algebra_options(dump_cmd, cfg, dump_bind);
  dump_bind["out"].opt =
      dump_cmd->add_option("-o,--out,--output", cfg.output,
                           "output path (stdout when omitted)");
  dump_bind["out"].set = [&cfg](const std::string& v) { cfg.output = v; };
  dump_cmd->add_option("--config", dump_config_path,
                       "flat key=value config file; flags override its values");

  CLI::App* list_cmd =
      app.add_subcommand("list-suites", "list the verification suites");
  list_cmd->add_flag("--json", list_json, "machine-readable listing");

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
    if (list_cmd->parsed()) {
      std::cout << superalg::list_suites(list_json);
      return 0;
    }
    if (dump_cmd->parsed()) {
      if (!dump_config_path.empty())
        apply_config_file(dump_config_path, dump_bind);
      superalg::Json d = superalg::dump_algebra(cfg);
      write_output(d.dump(2) + "\n", cfg.output);
      return 0;
    }
    if (!run_config_path.empty()) apply_config_file(run_config_path, run_bind);
    cfg.suites = superalg::repdetail::split_list(suites_flag);
    superalg::Json rep = superalg::run(cfg);
    std::string bytes = cfg.format == "text" ? superalg::render_text(rep)
                                             : rep.dump(2) + "\n";
    write_output(bytes, cfg.output);
    return rep["pass"].get<bool>() ? 0 : 1;
  } catch (const superalg::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return err.code() == superalg::ErrorCode::ConfigError ? 2 : 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}
