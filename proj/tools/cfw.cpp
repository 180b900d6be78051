#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cfw/bigint_guard.hpp"
#include "cfw/errors.hpp"
#include "cfw/pipeline.hpp"
#include "cfw/report.hpp"

namespace {

struct CommonOptions {
  std::string spec_path;
  std::string out_path;
  std::size_t n = 64;
  std::size_t max_len = 256;
  std::string kind = "either";
  std::string ratio_cap = "16";
  std::size_t guard_depth = 16;
  std::string format = "lines";
  std::optional<std::size_t> witness_index;
};

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw cfw::SpecError(out_path, "cannot open output file");
  out << text;
}

mpq_class parse_ratio_cap(const std::string& text) {
  mpq_class cap;
  try {
    cap = mpq_class(text);
  } catch (const std::invalid_argument&) {
    throw cfw::SpecError("ratio-cap",
                         "expected a rational like 16 or 33/2, got \"" + text +
                             "\"");
  }
  cap.canonicalize();
  if (cap <= 0) throw cfw::SpecError("ratio-cap", "must be > 0");
  return cap;
}

cfw::DetectParams detect_params(const CommonOptions& opt) {
  cfw::DetectParams params;
  params.kind = cfw::parse_detect_kind(opt.kind);
  params.max_len = opt.max_len;
  params.ratio_cap = parse_ratio_cap(opt.ratio_cap);
  return params;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial-quotient word generator, combinatorial-condition "
               "detector and continued-fraction inequality certifier"};
  app.require_subcommand(1);

  CommonOptions opt;
  int witness_flag = -1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--spec", opt.spec_path, "Sequence spec file (JSON)")
        ->required();
    cmd->add_option("--out", opt.out_path, "Write output to this path");
  };

  CLI::App* gen = app.add_subcommand("gen", "Emit the first n letters");
  add_common(gen);
  gen->add_option("--n", opt.n, "Number of letters");
  gen->add_option("--format", opt.format, "lines or report")
      ->check(CLI::IsMember({"lines", "report"}));

  CLI::App* complexity =
      app.add_subcommand("complexity", "Distinct-factor profile of a prefix");
  add_common(complexity);
  complexity->add_option("--n", opt.n, "Prefix length");
  CLI::Option* complexity_max = complexity->add_option(
      "--max-len", opt.max_len, "Largest factor length in the profile");

  CLI::App* detect = app.add_subcommand(
      "detect", "Scan prefixes for repeat/mirror factorizations");
  add_common(detect);
  detect->add_option("--max-len", opt.max_len, "Largest prefix length");
  detect->add_option("--kind", opt.kind, "repeat, mirror or either")
      ->check(CLI::IsMember({"repeat", "mirror", "either"}));
  detect->add_option("--ratio-cap", opt.ratio_cap,
                     "Cap on |V|/|U| and |W|/|U| (rational)");

  CLI::App* verify = app.add_subcommand(
      "verify", "Detect witnesses and certify the inequality chains");
  add_common(verify);
  verify->add_option("--max-len", opt.max_len, "Largest prefix length");
  verify->add_option("--kind", opt.kind, "repeat, mirror or either")
      ->check(CLI::IsMember({"repeat", "mirror", "either"}));
  verify->add_option("--ratio-cap", opt.ratio_cap, "Ratio cap (rational)");
  verify->add_option("--guard-depth", opt.guard_depth,
                     "Extra letters beyond each witness for enclosures");
  verify->add_option("--witness", witness_flag,
                     "Verify only this witness index (default: all)");

  CLI::App* all =
      app.add_subcommand("all", "Generate, profile, detect and verify");
  add_common(all);
  all->add_option("--n", opt.n, "Letters to emit and profile");
  all->add_option("--max-len", opt.max_len, "Largest prefix length");
  all->add_option("--kind", opt.kind, "repeat, mirror or either")
      ->check(CLI::IsMember({"repeat", "mirror", "either"}));
  all->add_option("--ratio-cap", opt.ratio_cap, "Ratio cap (rational)");
  all->add_option("--guard-depth", opt.guard_depth, "Enclosure guard depth");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors are exit 1, --help is success
  }

  try {
    cfw::bigint_guard::init_from_env();
    if (witness_flag >= 0) {
      opt.witness_index = static_cast<std::size_t>(witness_flag);
    }
    const cfw::SequenceSpec spec = cfw::load_spec_file(opt.spec_path);

    cfw::PipelineResult result;
    if (gen->parsed()) {
      if (opt.format == "lines") {
        emit(opt.out_path, cfw::gen_lines(spec, opt.n));
        return 0;
      }
      result = cfw::run_gen(spec, opt.n);
    } else if (complexity->parsed()) {
      if (complexity_max->count() == 0) {
        opt.max_len = std::min<std::size_t>(opt.n, 64);
      }
      result = cfw::run_complexity(spec, opt.n, opt.max_len);
    } else if (detect->parsed()) {
      result = cfw::run_detect(spec, detect_params(opt));
    } else if (verify->parsed()) {
      result = cfw::run_verify(spec, detect_params(opt), opt.guard_depth,
                               opt.witness_index);
    } else {
      result = cfw::run_all(spec, opt.n, detect_params(opt), opt.guard_depth);
    }
    emit(opt.out_path, cfw::render_report(result.report));
    return cfw::exit_code_for(result);
  } catch (const cfw::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const cfw::ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
