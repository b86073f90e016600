#include "softdm/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "softdm/decision.hpp"
#include "softdm/error.hpp"
#include "softdm/report.hpp"
#include "softdm/table_io.hpp"

namespace softdm {
namespace {

// Carries an exit code and a fully formatted diagnostic out of the command.
struct Failure {
  int code;
  std::string message;
};

std::string read_file(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Failure{kExitInput, path + ": cannot open " + what + " file"};
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string location(const std::string& path, std::size_t line, std::size_t column) {
  return path + ":" + std::to_string(line) + ":" + std::to_string(column);
}

struct DecideArgs {
  std::string input;
  std::string method;
  std::string scale;
  std::string criterion;
  double epsilon = kDefaultEpsilon;
  std::string format = "text";
  std::string output;
};

std::string run_decide(const DecideArgs& args, const CLI::App& cmd) {
  const auto method = parse_method(args.method).value();
  const bool has_scale = cmd.count("--scale") > 0;
  const bool has_criterion = cmd.count("--criterion") > 0;
  if (has_scale && method != Method::Grey) {
    throw Failure{kExitUsage, "--scale applies only to --method grey"};
  }
  if (has_criterion && method != Method::Neutrosophic) {
    throw Failure{kExitUsage, "--criterion applies only to --method neutrosophic"};
  }
  if (!std::isfinite(args.epsilon) || args.epsilon <= 0.0) {
    throw Failure{kExitUsage, "--epsilon must be a finite positive number"};
  }

  DecideOptions options;
  options.epsilon = args.epsilon;
  if (has_criterion) {
    options.criterion = parse_criterion(args.criterion).value();
  }
  if (has_scale) {
    const auto text = read_file(args.scale, "scale");
    try {
      options.scale = parse_scale(text);
    } catch (const ParseError& e) {
      throw Failure{kExitInput, location(args.scale, e.line(), e.column()) + ": " +
                                    e.what()};
    } catch (const ValidationError& e) {
      throw Failure{kExitInput, args.scale + ": " + e.what()};
    }
  }

  const auto text = read_file(args.input, "input");
  ParsedTable parsed = [&] {
    try {
      return parse_table_document(text);
    } catch (const ParseError& e) {
      throw Failure{kExitInput, location(args.input, e.line(), e.column()) + ": " +
                                    e.what()};
    } catch (const DomainError& e) {
      throw Failure{kExitInput, args.input + ": " + e.what()};
    }
  }();

  DecisionReport report;
  try {
    report = decide(parsed.table, method, options);
  } catch (const CellMismatchError& e) {
    throw Failure{kExitMismatch,
                  args.input + ":" + std::to_string(parsed.row_lines[e.row()]) + ": " +
                      e.what()};
  } catch (const UnknownGradeError& e) {
    std::string where = args.input;
    if (e.located()) {
      where += ":" + std::to_string(parsed.row_lines[e.row()]);
    }
    throw Failure{kExitInput, where + ": " + e.what() + " (not in the grade scale)"};
  }

  return args.format == "json" ? render_json(report) : render_text(report);
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Soft-set decision making with binary, grey and neutrosophic tables",
               "softdm"};
  app.require_subcommand(1);

  DecideArgs decide_args;
  auto* decide_cmd = app.add_subcommand("decide", "Score a decision table and pick winners");
  decide_cmd->add_option("--input", decide_args.input, "Decision table file")->required();
  decide_cmd->add_option("--method", decide_args.method, "Scoring method")
      ->required()
      ->check(CLI::IsMember({"binary", "grey", "neutrosophic"}));
  decide_cmd->add_option("--scale", decide_args.scale,
                         "Grade scale file (grey only; default A-F scale)");
  decide_cmd
      ->add_option("--criterion", decide_args.criterion,
                   "Ranking criterion (neutrosophic only; default combined)")
      ->check(CLI::IsMember({"optimistic", "conservative", "combined"}));
  decide_cmd->add_option("--epsilon", decide_args.epsilon, "Tie tolerance")
      ->capture_default_str();
  decide_cmd->add_option("--format", decide_args.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  decide_cmd->add_option("--output", decide_args.output,
                         "Write the report here instead of standard output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'softdm decide --help' for usage\n";
    return kExitUsage;
  }

  try {
    const std::string rendered = run_decide(decide_args, *decide_cmd);
    if (decide_args.output.empty()) {
      out << rendered;
    } else {
      std::ofstream file(decide_args.output, std::ios::binary);
      if (!file || !(file << rendered)) {
        throw Failure{kExitInput, decide_args.output + ": cannot write report"};
      }
    }
    return kExitOk;
  } catch (const Failure& failure) {
    err << "error: " << failure.message << "\n";
    return failure.code;
  } catch (const InvalidOptionsError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace softdm
