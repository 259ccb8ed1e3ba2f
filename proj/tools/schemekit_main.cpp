// Batch runner for .m2l scripts.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "schemekit/script/golden.hpp"
#include "schemekit/settings.hpp"

namespace {

enum Exit { kOk = 0, kMismatch = 1, kParseError = 2, kRuntimeError = 3, kIoError = 4 };

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Run a schemekit script and print one line per output record."};
  std::string script_path;
  std::string expected_path;
  bool verbose_gb = false;
  bool emit_source = false;
  double max_seconds = 0;
  app.add_option("script", script_path, "Script file (.m2l)")->required();
  app.add_option("--check", expected_path, "Compare the output records against an expected-output file");
  app.add_flag("--verbose-gb", verbose_gb, "Trace basis computations on stderr");
  app.add_option("--max-seconds", max_seconds, "Soft time budget per statement")->check(CLI::PositiveNumber);
  app.add_flag("--emit-source", emit_source, "Print the parsed script in canonical form instead of running it");
  CLI11_PARSE(app, argc, argv);

  std::string source;
  if (!read_file(script_path, source)) {
    std::cerr << "error: cannot read script " << script_path << "\n";
    return kIoError;
  }
  std::vector<std::string> expected;
  if (!expected_path.empty()) {
    std::string text;
    if (!read_file(expected_path, text)) {
      std::cerr << "error: cannot read expected output " << expected_path << "\n";
      return kIoError;
    }
    expected = schemekit::script::read_expected(text);
  }

  schemekit::script::Script script;
  try {
    script = schemekit::script::parse_script(source);
  } catch (const schemekit::script::ParseError& e) {
    std::cerr << script_path << ":" << e.what() << "\n";
    return kParseError;
  }
  if (emit_source) {
    std::cout << schemekit::script::to_source(script);
    return kOk;
  }

  if (verbose_gb) schemekit::engine_settings().gb_trace = &std::cerr;
  schemekit::script::InterpreterOptions options;
  if (max_seconds > 0) options.max_seconds_per_statement = max_seconds;
  schemekit::script::Interpreter interp(options);
  std::vector<schemekit::script::OutputRecord> records;
  try {
    interp.run(script, [&](const schemekit::script::OutputRecord& r) {
      std::cout << r.text << "\n" << std::flush;
      records.push_back(r);
    });
  } catch (const schemekit::script::RuntimeError& e) {
    std::cerr << script_path << ":" << e.what() << "\n";
    return kRuntimeError;
  }

  if (!expected_path.empty()) {
    if (auto mismatch = schemekit::script::compare_golden(records, expected)) {
      std::cerr << expected_path << ": record " << mismatch->record + 1 << " differs\n"
                << "  expected: " << mismatch->expected << "\n"
                << "  actual:   " << mismatch->actual << "\n";
      return kMismatch;
    }
  }
  return kOk;
}
