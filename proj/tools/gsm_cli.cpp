#include <gsm/runner.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
  CLI::App app{"Check groupoid-graded algebra specifications and emit JSON reports"};
  std::string input;
  std::string json_path;
  gsm::RunOptions options;
  app.add_option("file", input, ".gsm specification")->required();
  app.add_option("--task", options.task_filter, "run only tasks with this name")
      ->check(CLI::IsMember(gsm::dsl::task_names()));
  app.add_option("--seed", options.seed, "seed for randomized checks");
  app.add_option("--json", json_path, "write the report here instead of stdout");
  app.add_option("--max-dim", options.max_dim, "largest algebra a task may build")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : gsm::kExitUsage;
  }

  std::ifstream in(input, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << input << "\n";
    return gsm::kExitUsage;
  }
  std::stringstream text;
  text << in.rdbuf();

  const gsm::RunResult result = gsm::run_text(text.str(), options);
  const std::string out = gsm::emit_json(result.report);
  if (json_path.empty()) {
    std::cout << out;
  } else {
    std::ofstream file(json_path, std::ios::binary);
    if (!file) {
      std::cerr << "cannot write " << json_path << "\n";
      return gsm::kExitUsage;
    }
    file << out;
  }
  if (result.report.contains("error")) std::cerr << result.report["error"]["witness"].get<std::string>() << "\n";
  return result.exit_code;
}
