// Command-line front end: classify | analytic | residual | evolve | gauge,
// each driven by a JSON scenario config. Exit codes: 0 success, 2 config
// error, 3 numerical failure.
#include <filesystem>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ssdg/errors.hpp"
#include "ssdg/scenario.hpp"

namespace {

using CommandFn = void (*)(const ssdg::ScenarioConfig&, const std::string&,
                           std::ostream&);

constexpr int kExitConfigError = 2;
constexpr int kExitNumericalError = 3;

int run_one(CommandFn fn, const std::string& config_path, const std::string& out_dir,
            std::ostream& log) {
  try {
    const ssdg::ScenarioConfig config = ssdg::load_config(config_path);
    std::string dir = out_dir.empty() ? config.out_dir : out_dir;
    fn(config, dir, log);
    return 0;
  } catch (const ssdg::ConfigError& e) {
    log << "config error [" << config_path << "]: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const ssdg::UnstableStep& e) {
    log << "numerical failure [" << config_path << "]: " << e.what();
    if (e.time >= 0.0) log << " at t=" << e.time;
    log << '\n';
    return kExitNumericalError;
  } catch (const std::exception& e) {
    log << "numerical failure [" << config_path << "]: " << e.what() << '\n';
    return kExitNumericalError;
  }
}

// With several configs each scenario writes under <out>/<config stem>.
int run_command(CommandFn fn, const std::vector<std::string>& config_paths,
                const std::string& out_dir, bool sweep) {
  if (config_paths.size() == 1) {
    return run_one(fn, config_paths.front(), out_dir, std::cout);
  }
  std::vector<std::string> dirs;
  dirs.reserve(config_paths.size());
  for (const std::string& path : config_paths) {
    const std::string stem = std::filesystem::path(path).stem().string();
    dirs.push_back((std::filesystem::path(out_dir.empty() ? "out" : out_dir) / stem)
                       .string());
  }
  int worst = 0;
  if (sweep) {
    std::vector<std::future<std::pair<int, std::string>>> futures;
    for (std::size_t i = 0; i < config_paths.size(); ++i) {
      futures.push_back(std::async(std::launch::async, [&, i] {
        std::ostringstream log;
        const int code = run_one(fn, config_paths[i], dirs[i], log);
        return std::make_pair(code, log.str());
      }));
    }
    for (auto& f : futures) {
      auto [code, text] = f.get();
      std::cout << text;
      worst = std::max(worst, code);
    }
  } else {
    for (std::size_t i = 0; i < config_paths.size(); ++i) {
      worst = std::max(worst, run_one(fn, config_paths[i], dirs[i], std::cout));
    }
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Soliton constructor, verifier and propagator for the homogeneous "
               "nonlinear Schrodinger family"};
  app.require_subcommand(1);

  struct SubArgs {
    std::vector<std::string> configs;
    std::string out;
    bool sweep = false;
  };

  const std::vector<std::pair<std::string, CommandFn>> commands = {
      {"classify", ssdg::cmd_classify}, {"analytic", ssdg::cmd_analytic},
      {"residual", ssdg::cmd_residual}, {"evolve", ssdg::cmd_evolve},
      {"gauge", ssdg::cmd_gauge}};

  std::vector<std::shared_ptr<SubArgs>> args_store;
  int exit_code = 0;
  for (const auto& [name, fn] : commands) {
    auto sub_args = std::make_shared<SubArgs>();
    args_store.push_back(sub_args);
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", sub_args->configs, "scenario config JSON (repeatable)")
        ->required();
    sub->add_option("--out", sub_args->out, "output directory");
    sub->add_flag("--sweep", sub_args->sweep, "run multiple configs concurrently");
    CommandFn fn_copy = fn;
    sub->callback([sub_args, fn_copy, &exit_code] {
      exit_code = run_command(fn_copy, sub_args->configs, sub_args->out, sub_args->sweep);
    });
  }

  CLI11_PARSE(app, argc, argv);
  return exit_code;
}
