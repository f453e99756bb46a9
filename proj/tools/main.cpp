// Command line front end: builds a problem from flags, a preset, or an
// input document, runs the pipeline and prints the report.
//
// Exit codes: 0 report produced (any verdict), 2 input error, 3 resource
// cap exceeded, 4 verification failure under --verify.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ellweyl/report.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitVerify = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ellweyl::ConstructionError("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<ellweyl::Rat> parse_rational_csv(const std::string& text, const std::string& name) {
  std::vector<ellweyl::Rat> out;
  std::stringstream stream(text);
  std::string item;
  int position = 0;
  while (std::getline(stream, item, ',')) {
    ++position;
    out.push_back(ellweyl::parse_rational(item, name + "[" + std::to_string(position) + "]"));
  }
  return out;
}

std::vector<long long> parse_integer_csv(const std::string& text, const std::string& name) {
  const auto rationals = parse_rational_csv(text, name);
  std::vector<long long> out;
  for (std::size_t i = 0; i < rationals.size(); ++i) {
    if (!ellweyl::is_integer(rationals[i])) {
      throw ellweyl::ConstructionError(name + "[" + std::to_string(i + 1) + "]: expected an integer");
    }
    out.push_back(rationals[i].numerator());
  }
  return out;
}

struct Flags {
  std::string type;
  std::string t_csv;
  std::string z_csv;
  std::string preset;
  int p = -1, q = -1, h = -1;
  std::string input_path;
  std::string input_dir;
  std::string out_path;
  std::string format;  // empty = not given
  std::string sections_csv;
  std::uint64_t cap = 0;
  bool cap_given = false;
  bool verify = false;
};

ellweyl::ProblemInput build_input(const Flags& flags) {
  ellweyl::ProblemInput input;
  if (!flags.input_path.empty()) {
    input = ellweyl::parse_input_document(read_file(flags.input_path));
  } else if (!flags.preset.empty()) {
    if (!flags.type.empty() || !flags.t_csv.empty() || !flags.z_csv.empty()) {
      throw ellweyl::ConstructionError("--preset cannot be combined with --type/--t/--z");
    }
    input = ellweyl::make_preset(flags.preset, flags.p, flags.q, flags.h);
  } else {
    if (flags.type.empty()) {
      throw ellweyl::ConstructionError("one of --type, --preset or --input is required");
    }
    input.spec = ellweyl::RootSystemSpec::parse(flags.type);
    if (flags.t_csv.empty()) throw ellweyl::ConstructionError("--t is required with --type");
    input.t.t = parse_rational_csv(flags.t_csv, "t");
    if (flags.z_csv.empty()) {
      input.z.z.assign(static_cast<std::size_t>(input.spec.total_rank()), 0);
    } else {
      input.z.z = parse_integer_csv(flags.z_csv, "z");
    }
  }

  if (const char* env = std::getenv("ELLIPTIC_WEYL_CAP")) {
    input.options.weyl_cap = std::strtoull(env, nullptr, 10);
    if (input.options.weyl_cap == 0) {
      throw ellweyl::ConstructionError("ELLIPTIC_WEYL_CAP: expected a positive integer");
    }
  }
  if (flags.cap_given) input.options.weyl_cap = flags.cap;

  if (flags.format == "text") {
    input.options.format = ellweyl::OutputFormat::Text;
  } else if (flags.format == "machine") {
    input.options.format = ellweyl::OutputFormat::Machine;
  } else if (!flags.format.empty()) {
    throw ellweyl::ConstructionError("--format: expected 'text' or 'machine'");
  }
  if (!flags.sections_csv.empty()) {
    std::stringstream stream(flags.sections_csv);
    std::string item;
    while (std::getline(stream, item, ',')) input.options.sections.push_back(item);
  }
  return input;
}

int run_one(const ellweyl::ProblemInput& input, const Flags& flags, std::ostream& out) {
  const ellweyl::Report report = ellweyl::run_report(input);
  out << (input.options.format == ellweyl::OutputFormat::Machine
              ? ellweyl::emit_machine(report)
              : ellweyl::emit_text(report, input.options.sections));
  if (!flags.verify) return 0;

  const auto checks = ellweyl::verify_input(input);
  std::size_t passed = 0;
  for (const auto& check : checks) {
    if (check.passed) {
      ++passed;
    } else {
      out << "verify FAIL: " << check.name
          << (check.detail.empty() ? "" : " (" + check.detail + ")") << "\n";
    }
  }
  out << "verification: " << passed << "/" << checks.size() << " checks passed\n";
  return passed == checks.size() ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact root-system engine for gradings, coset cells and the"
               " chamber criterion on elliptic orbit data"};
  app.set_help_flag("--help", "print this help message and exit");
  Flags flags;
  app.add_option("--type", flags.type, "root system, e.g. G2 or A2xA1");
  app.add_option("--t", flags.t_csv, "comma separated rational coweight, e.g. 1,-2 or 1/2,3");
  app.add_option("--z", flags.z_csv, "comma separated integer coloring coweight");
  app.add_option("--preset", flags.preset, "g2_case_a | g2_case_b | su_pq | hermitian_su");
  app.add_option("--p", flags.p, "preset parameter p");
  app.add_option("--q", flags.q, "preset parameter q");
  app.add_option("--h", flags.h, "preset parameter h (su_pq grading node)");
  app.add_option("--input", flags.input_path, "problem document (JSON)");
  app.add_option("--input-dir", flags.input_dir, "run every *.json problem in a directory");
  app.add_option("--out", flags.out_path, "write output to a file instead of stdout");
  app.add_option("--format", flags.format, "text | machine (default text)");
  app.add_option("--sections", flags.sections_csv,
                 "comma separated text sections: summary,chambers,cells,profile");
  app.add_option("--cap", flags.cap, "Weyl group enumeration cap")
      ->check(CLI::PositiveNumber)
      ->each([&flags](const std::string&) { flags.cap_given = true; });
  app.add_flag("--verify", flags.verify, "run the invariant suite on this instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    std::ofstream file_out;
    std::ostream* out = &std::cout;
    if (!flags.out_path.empty()) {
      file_out.open(flags.out_path, std::ios::binary);
      if (!file_out) {
        std::cerr << "error: cannot open output file '" << flags.out_path << "'\n";
        return kExitInput;
      }
      out = &file_out;
    }

    if (!flags.input_dir.empty()) {
      std::vector<std::filesystem::path> paths;
      for (const auto& entry : std::filesystem::directory_iterator(flags.input_dir)) {
        if (entry.path().extension() == ".json") paths.push_back(entry.path());
      }
      std::sort(paths.begin(), paths.end());
      if (paths.empty()) {
        throw ellweyl::ConstructionError("--input-dir: no .json problems in '" + flags.input_dir + "'");
      }
      int status = 0;
      for (const auto& path : paths) {
        *out << "== " << path.filename().string() << " ==\n";
        const auto input = ellweyl::parse_input_document(read_file(path.string()));
        status = std::max(status, run_one(input, flags, *out));
      }
      return status;
    }

    return run_one(build_input(flags), flags, *out);
  } catch (const ellweyl::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const ellweyl::ConstructionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ellweyl::PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
