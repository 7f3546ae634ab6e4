#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "aqmet/cli.hpp"
#include "aqmet/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "aqmet - adiabatic ground-state metrology on a perturbed two-spin "
      "Ising model"};
  app.require_subcommand(0, 1);

  bool print_defaults = false;
  app.add_flag("--print-defaults", print_defaults,
               "dump the default configuration and exit");

  const std::vector<std::string> experiments{
      "schedule", "evolve",        "qfi-sweep",  "scaling",
      "decompose", "noise-compare", "sensitivity"};
  struct SubArgs {
    std::string config_path;
    std::string out_dir;
  };
  std::map<std::string, SubArgs> args;
  for (const auto& name : experiments) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", args[name].config_path,
                    "JSON configuration file");
    sub->add_option("--out", args[name].out_dir, "output directory");
  }

  CLI11_PARSE(app, argc, argv);

  if (print_defaults) {
    std::cout << aqmet::config_to_json(aqmet::default_config());
    return 0;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return 2;
  }

  auto* sub = app.get_subcommands().front();
  const SubArgs& sa = args[sub->get_name()];
  aqmet::RunConfig cfg;
  if (!sa.config_path.empty()) {
    try {
      cfg = aqmet::config_from_json(aqmet::read_text_file(sa.config_path));
    } catch (const std::exception& e) {
      std::cerr << "config error: " << e.what() << "\n";
      return 2;
    }
  }
  cfg.experiment = sub->get_name();
  if (!sa.out_dir.empty()) cfg.output_dir = sa.out_dir;
  return aqmet::run_command(cfg);
}
