#include <iostream>
#include <utility>
#include <vector>

#include "bubble/errors.hpp"
#include "commands.hpp"
#include "common.hpp"

int main(int argc, char** argv) {
  using namespace bubble::cli;
  CLI::App app{"Horn-torus and spherical bubble equilibria: solve, verify, train."};
  app.require_subcommand(1);
  std::vector<std::pair<CLI::App*, Action>> commands;
  auto add = [&](Action (*reg)(CLI::App&)) {
    const auto before = app.get_subcommands({}).size();
    Action act = reg(app);
    commands.emplace_back(app.get_subcommands({})[before], std::move(act));
  };
  add(register_analytic);
  add(register_verify);
  add(register_train);
  add(register_curvature);
  add(register_roots);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    for (auto& [sub, act] : commands)
      if (sub->parsed()) return act();
  } catch (const bubble::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const bubble::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const bubble::TrainingError& e) {
    std::cerr << "error: training failed at epoch " << e.epoch() << ": " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}
