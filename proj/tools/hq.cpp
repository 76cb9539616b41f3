#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hq/examples.hpp"
#include "hq/parse.hpp"
#include "hq/potential.hpp"
#include "hq/report.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hq::JobError("cannot read " + path, {});
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Options {
  std::string job_file, example, stage = "lambda", format = "text", intertwiners, out;
  size_t dmax = 0;
  bool list = false;
};

int emit(const Options& o, const std::string& body) {
  if (o.out.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream f(o.out);
  if (!f) {
    std::cerr << "error: cannot write " << o.out << "\n";
    return 1;
  }
  f << body;
  return 0;
}

int report_error(const Options& o, const std::string& kind, const std::string& msg, hq::SourcePos pos, int code) {
  if (o.format == "records")
    emit(o, hq::error_record(kind, msg, pos.line, pos.column));
  std::cerr << (kind == "hypothesis" ? "hypothesis violated: " : "error: ") << msg << "\n";
  return code;
}

int run(const Options& o, const std::string& command) {
  try {
    std::string text;
    if (command == "example") {
      if (o.list) {
        std::string body;
        for (const auto& n : hq::example_names()) body += n + "\n";
        for (const auto& n : hq::control_names()) body += n + "\n";
        return emit(o, body);
      }
      text = hq::example_job(o.example);
      if (o.stage == "job") return emit(o, text);
    } else {
      text = read_file(o.job_file);
    }
    hq::JobSpec job = hq::parse_job(text);
    if (!o.intertwiners.empty()) hq::merge_intertwiners(job, read_file(o.intertwiners));
    std::string stage = command == "example" ? o.stage : command;
    size_t dmax = o.dmax ? o.dmax : job.dmax;
    hq::StageOutput r = hq::run_stage(job, stage, dmax);
    if (o.format == "dot") {
      if (r.dot.empty()) throw hq::JobError("format dot is available for the mckay and lambda stages", {});
      emit(o, r.dot);
    } else {
      emit(o, o.format == "records" ? r.records : r.text);
    }
    return r.exit_code;
  } catch (const hq::JobError& e) {
    return report_error(o, "input", e.what(), e.pos(), 1);
  } catch (const hq::HypothesisViolation& e) {
    return report_error(o, "hypothesis", e.what(), {}, 2);
  } catch (const std::exception& e) {
    return report_error(o, "input", e.what(), {}, 1);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopf actions on AS regular algebras: McKay quivers, quiver superpotentials and Auslander checks"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--dmax", o.dmax, "highest degree for Hilbert profiles (default: the job's dmax, 40)");
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "dot", "records"}));
    c->add_option("--intertwiners", o.intertwiners, "file with arrow and xi statements");
    c->add_option("--out", o.out, "write the output to this file");
  };
  const std::vector<std::pair<std::string, std::string>> stages = {
      {"validate", "check the Hopf axioms and the hypotheses on (H, V, w)"},
      {"hdet", "homological determinant"},
      {"mckay", "McKay quiver and inner-faithfulness"},
      {"lambda", "quiver superpotential and relations"},
      {"hilbert", "Hilbert profiles of Lambda and Lambda/<e0>"},
      {"auslander", "Auslander map verdict"},
      {"mcm", "dimension vectors of e0 Lambda e_i"}};
  for (const auto& [name, help] : stages) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("job", o.job_file, "job file")->required();
    common(c);
  }
  auto* ex = app.add_subcommand("example", "run a bundled example");
  ex->add_option("name", o.example, "example name");
  ex->add_option("--stage", o.stage, "stage to run, or 'job' to print the job text")
      ->check(CLI::IsMember({"validate", "hdet", "mckay", "lambda", "hilbert", "auslander", "mcm", "job"}));
  ex->add_flag("--list", o.list, "list the bundled examples");
  common(ex);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (ex->parsed() && o.example.empty() && !o.list) {
    std::cerr << "error: example needs a name (or --list)\n";
    return 1;
  }
  for (auto* c : app.get_subcommands()) return run(o, c->get_name());
  return 1;
}
