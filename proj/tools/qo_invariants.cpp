// qo-invariants: invariants of a reduced quasi-ordinary surface prototype
// from its characteristic tuple.

#include "qoinv/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

int main(int argc, char** argv) {
  using namespace qoinv;

  CLI::App app{"Milnor fiber boundary invariants of a quasi-ordinary surface prototype", "qo-invariants"};

  const std::map<std::string, Mode> modes{{"report", Mode::Report}, {"verify", Mode::Verify}, {"zeta", Mode::Zeta}};
  const std::map<std::string, AxisChoice> axes{
      {"1", AxisChoice::One}, {"2", AxisChoice::Two}, {"both", AxisChoice::Both}};
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"structured", Format::Structured}};

  std::string mode = "report", axis = "both", format = "text", file;
  bool strict = false;
  app.add_option("--mode", mode, "report | verify | zeta")
      ->transform(CLI::IsMember(modes, CLI::ignore_case).description(""))
      ->type_name("NAME")
      ->capture_default_str();
  app.add_option("--axis", axis, "1 | 2 | both; comparison checks need both")
      ->transform(CLI::IsMember(axes).description(""))
      ->type_name("NAME")
      ->capture_default_str();
  app.add_flag("--strict", strict, "also require every term to be essential");
  app.add_option("--format", format, "text | structured")
      ->transform(CLI::IsMember(formats, CLI::ignore_case).description(""))
      ->type_name("NAME")
      ->capture_default_str();
  app.add_option("file", file, "input document; standard input when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_code::invalid_input;
  }

  const RunOptions options{modes.at(mode), axes.at(axis), formats.at(format), strict};

  std::string text;
  if (file.empty() || file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      std::cerr << "invalid input: cannot open " << file << "\n";
      return exit_code::invalid_input;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  InputDocument doc;
  try {
    doc = parse_input(text);
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return exit_code::invalid_input;
  }

  const RunResult result = run(doc, options);
  std::cout << result.output;
  std::cerr << result.diagnostics;
  return result.status;
}
