#include <iostream>

#include "CLI11.hpp"
#include "cli.hpp"

int main(int argc, char** argv) {
  using artinacyl::cli::RunConfig;
  CLI::App app{"Acylindrical hyperbolicity toolkit for Artin groups"};
  app.set_version_flag("--version", artinacyl::cli::kVersion);
  app.require_subcommand(1);

  RunConfig config;
  std::string positional;
  std::size_t cap = 0;
  std::size_t radius = 0;
  std::string output;
  std::string plan;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", positional, "defining graph JSON");
    sub->add_option("--input", config.input_path, "defining graph JSON");
    sub->add_option("--output", output, "write the document here as well");
    sub->add_option("--cap", cap, "closure / element cap");
    sub->add_option("--format", config.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  };
  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {{"analyze", "full report"},
                        {"classify", "classification flags"},
                        {"gamma", "construct the candidate WPD element"},
                        {"certify", "schedule and checks for gamma"},
                        {"shadow", "Coxeter shadow of the clique-cube complex"},
                        {"export", "DOT export of a graph view"}};
  for (const Spec& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub);
    sub->add_option("--radius", radius, "shadow ball radius");
    sub->add_flag("--reduced", config.reduced, "shadow: export the reduced complex");
    sub->add_option("--plan", plan, "certify: plan JSON to check instead of building one");
    sub->add_option("--which", config.which, "export view: defining, complement or coxeter")
        ->check(CLI::IsMember({"defining", "complement", "coxeter"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "ERR:1: " << e.what() << "\n";
    return 1;
  }

  for (CLI::App* sub : app.get_subcommands()) {
    config.command = sub->get_name();
    if (sub->count("--cap")) config.cap = cap;
    if (sub->count("--output")) config.output_path = output;
    if (sub->count("--plan")) config.plan_path = plan;
    if (sub->count("--radius")) config.radius = radius;
  }
  if (!positional.empty()) {
    if (!config.input_path.empty() && config.input_path != positional) {
      std::cerr << "ERR:1: input given both positionally and with --input\n";
      return 1;
    }
    config.input_path = positional;
  }

  const artinacyl::cli::RunResult result = artinacyl::cli::run(config);
  if (result.exit_code == 0 || !result.output.empty()) std::cout << result.output;
  if (result.exit_code != 0) std::cerr << result.error << "\n";
  return result.exit_code;
}
