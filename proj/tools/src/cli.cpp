#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>

#include "commands.hpp"
#include "shiftgeom/errors.hpp"

namespace shiftgeom::cli {

namespace {

int report_error(std::ostream& err, const char* kind, const std::exception& e, int code) {
  err << "error (" << kind << "): " << e.what() << "\n";
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometry of shift spaces under global pseudometrics", "shiftgeom"};
  app.require_subcommand(1);
  bool json = false;
  std::string out_path;
  CommandState state;
  app.add_flag("--json", json, "Print the full run report as JSON");
  app.add_option("--out", out_path, "Write output to a file");
  app.add_option("--seed", state.seed, "Seed for every random choice");
  app.set_version_flag("--version", SHIFTGEOM_VERSION);

  add_dist(app, state);
  add_classify(app, state);
  add_complex(app, state);
  add_path(app, state);
  add_uap(app, state);
  add_shift(app, state);
  add_measure(app, state);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Json results;
  const auto start = std::chrono::steady_clock::now();
  try {
    results = state.action();
  } catch (const InputError& e) {
    return report_error(err, "input", e, 2);
  } catch (const PreconditionError& e) {
    return report_error(err, "precondition", e, 3);
  } catch (const ResourceCapError& e) {
    return report_error(err, "resource cap", e, 4);
  } catch (const std::exception& e) {
    return report_error(err, "internal", e, 1);
  }
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::string text;
  if (json) {
    Json report{{"command", state.command},
                {"arguments", args},
                {"inputs", state.inputs.json()},
                {"results", results},
                {"seed", state.seed},
                {"timing_ms", elapsed},
                {"version", SHIFTGEOM_VERSION}};
    text = report.dump(2) + "\n";
  } else {
    text = render_text(results);
  }

  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path);
    if (!file) {
      err << "error (input): cannot write " << out_path << "\n";
      return 2;
    }
    file << text;
  }
  return 0;
}

}  // namespace shiftgeom::cli
