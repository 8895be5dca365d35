// Command-line front end: run, sweep and audit verbs over a key = value config.

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "radweno/config.hpp"
#include "radweno/driver.hpp"
#include "radweno/error.hpp"

namespace {

enum ExitCode { kOk = 0, kConfigError = 2, kDivergence = 3, kIoError = 4 };

radweno::ParsedConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw radweno::IoError("cannot read config " + path);
  std::stringstream text;
  text << in.rdbuf();
  return radweno::parse_config(text.str());
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<std::size_t> parse_resolutions(const std::string& s) {
  std::vector<std::size_t> out;
  for (const auto& item : split_list(s)) {
    std::size_t n = 0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), n);
    if (res.ec != std::errc{} || res.ptr != item.data() + item.size() || n == 0) {
      throw radweno::ConfigError("bad resolution '" + item + "'");
    }
    out.push_back(n);
  }
  if (out.empty()) throw radweno::ConfigError("empty resolution list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radial Euler / advection WENO5 solver"};
  app.require_subcommand(1);

  std::string config_path;
  std::string resolutions = "20,40,80,160,320,640";
  std::string audit_resolutions;
  std::string methods = "one,two,three";

  auto* run_cmd = app.add_subcommand("run", "single run: profiles, ledger, meta");
  run_cmd->add_option("--config", config_path, "config file")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "grid convergence study -> convergence.csv");
  sweep_cmd->add_option("--config", config_path, "config file")->required();
  sweep_cmd->add_option("--resolutions", resolutions, "comma-separated cell counts");

  auto* audit_cmd = app.add_subcommand("audit", "conservation residuals per method -> residuals.csv");
  audit_cmd->add_option("--config", config_path, "config file")->required();
  audit_cmd->add_option("--methods", methods, "comma-separated methods");
  audit_cmd->add_option("--resolutions", audit_resolutions, "comma-separated cell counts (default: n_cells)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    auto parsed = load_config(config_path);
    for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << '\n';
    radweno::RunConfig& cfg = parsed.config;

    if (*run_cmd) {
      cfg.mode = radweno::RunMode::Run;
      const auto art = radweno::run(cfg);
      for (const auto& p : art.profiles) std::cout << p.string() << '\n';
      if (art.ledger) std::cout << art.ledger->string() << '\n';
      std::cout << art.meta.string() << '\n';
    } else if (*sweep_cmd) {
      cfg.mode = radweno::RunMode::Sweep;
      std::cout << radweno::sweep(cfg, parse_resolutions(resolutions)).string() << '\n';
    } else if (*audit_cmd) {
      cfg.mode = radweno::RunMode::Audit;
      std::vector<radweno::MethodId> ids;
      for (const auto& m : split_list(methods)) ids.push_back(radweno::parse_method(m));
      const auto ns = audit_resolutions.empty() ? std::vector<std::size_t>{cfg.n_cells}
                                                : parse_resolutions(audit_resolutions);
      std::cout << radweno::audit(cfg, ids, ns).string() << '\n';
    }
  } catch (const radweno::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const radweno::DivergenceError& e) {
    std::cerr << "solver divergence: " << e.what() << '\n';
    return kDivergence;
  } catch (const radweno::InvalidStateError& e) {
    std::cerr << "solver divergence: " << e.what() << '\n';
    return kDivergence;
  } catch (const radweno::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIoError;
  }
  return kOk;
}
