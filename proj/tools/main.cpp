// Command line front end: trci, project and trim over the textual input
// formats. Exit codes: 0 success, 1 usage or input problem, 2 computation
// failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tropimp/commands.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw tropimp::input_error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Tropical geometry of generic complete intersections: tropical\n"
      "varieties, fan push-forwards and Newton polytopes of implicit\n"
      "equations (mixed fiber polytopes, fiber polytopes, secondary\n"
      "polytopes)."};
  app.require_subcommand(1);

  tropimp::CliOptions opts;
  long long delta_arg = 1;
  for (auto* cmd_opts : {&app}) (void)cmd_opts;

  std::string trci_input, project_fan, project_matrix, trim_input;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--delta", delta_arg,
                    "degree of the monomial map on the variety (default 1)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", opts.threads, "worker threads (default 1)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", opts.format,
                    "output format: fan, polytope or auto (default auto)");
  };

  CLI::App* trci = app.add_subcommand(
      "trci", "tropical variety of a generic complete intersection");
  trci->add_option("input", trci_input, "polynomial system file ('-' for stdin)")
      ->required();
  add_common(trci);

  CLI::App* project = app.add_subcommand(
      "project", "push a weighted fan forward along a monomial map");
  project->add_option("fan", project_fan, "fan file ('-' for stdin)")->required();
  project->add_option("matrix", project_matrix, "LINEAR_MAP matrix file")->required();
  add_common(project);

  CLI::App* trim = app.add_subcommand(
      "trim", "Newton polytope of an implicitly defined hypersurface");
  trim->add_option("input", trim_input, "polynomial system file ('-' for stdin)")
      ->required();
  add_common(trim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    opts.delta = tropimp::Int(delta_arg);
    if (trci->parsed()) {
      std::cout << tropimp::run_trci(read_input(trci_input), opts);
    } else if (project->parsed()) {
      std::cout << tropimp::run_project(read_input(project_fan),
                                        read_input(project_matrix), opts);
    } else if (trim->parsed()) {
      std::cout << tropimp::run_trim(read_input(trim_input), opts);
    }
  } catch (const tropimp::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const tropimp::computation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
