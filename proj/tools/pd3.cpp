// pd3: run the verification suite and the underlying computations from the
// command line.  Exit codes: 0 success, 1 a check failed, 2 usage or input
// error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pd3/bar.hpp"
#include "pd3/checks.hpp"
#include "pd3/formats.hpp"
#include "pd3/homology.hpp"
#include "pd3/report.hpp"

namespace {

constexpr int kUsageError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pd3::FormatError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw pd3::FormatError("cannot write " + path);
  out << text;
  if (!out) throw pd3::FormatError("write failed: " + path);
}

void print_homology(const std::vector<pd3::AbelianGroupDescriptor>& h) {
  for (std::size_t d = 0; d < h.size(); ++d) std::cout << "H" << d << " = " << h[d].to_string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suite for the S3 and Pi PD3-complexes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pd3::tool_version());

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification checks");
  std::vector<std::string> check_ids;
  bool all = false;
  int max_length = 5;
  std::string format = "text";
  std::string out_path;
  unsigned jobs = 1;
  bool deterministic = false;
  std::string corpus_dir;
  verify->add_option("--check", check_ids, "Check id or prefix ending in '*' (repeatable)");
  verify->add_flag("--all", all, "Run every check (default when no --check is given)");
  verify->add_option("--max-length,-L", max_length, "Ball radius for truncated searches")
      ->check(CLI::Range(0, 12));
  verify->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out_path, "Write the report to this file");
  verify->add_option("--jobs,-j", jobs, "Checks to run concurrently")->check(CLI::Range(1, 64));
  verify->add_flag("--deterministic", deterministic, "Leave wall times out of the json report");
  verify->add_option("--corpus", corpus_dir, "Read the corpus from this directory")
      ->check(CLI::ExistingDirectory);

  // normalize
  auto* normalize = app.add_subcommand("normalize", "Normal form of a word");
  std::string group = "Pi";
  std::string word;
  normalize->add_option("--group", group, "S3, Pi, Z2, Z3, PiPrime or Free");
  normalize->add_option("word", word, "Word such as a*b^2*c")->required();

  // fox
  auto* fox = app.add_subcommand("fox", "Fox-Lyndon complex of a presentation file");
  std::string presentation_path;
  fox->add_option("--presentation", presentation_path, "Presentation JSON file")
      ->required()
      ->check(CLI::ExistingFile);

  // homology
  auto* hom = app.add_subcommand("homology", "Integral homology of a shipped complex");
  std::string which;
  hom->add_option("--complex", which, "Which complex")
      ->required()
      ->check(CLI::IsMember({"x", "y", "z", "x-universal", "y-double", "z-double"}));

  // snf
  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix file");
  std::string matrix_path;
  snf->add_option("file", matrix_path, "Integer matrix JSON file")
      ->required()
      ->check(CLI::ExistingFile);

  // bar
  auto* bar = app.add_subcommand("bar", "Group homology from the normalized bar complex");
  std::string bar_group;
  int degree = 3;
  bar->add_option("--group", bar_group, "Finite group")
      ->required()
      ->check(CLI::IsMember({"z2", "z3", "s3"}, CLI::ignore_case));
  bar->add_option("--degree", degree, "Homological degree")->check(CLI::Range(0, 3));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*verify) {
      const pd3::Catalog corpus =
          corpus_dir.empty() ? pd3::Catalog::embedded() : pd3::Catalog::from_directory(corpus_dir);
      pd3::SuiteOptions opts;
      if (!all) opts.filters = check_ids;
      opts.max_length = max_length;
      opts.jobs = jobs;
      const pd3::Report report = pd3::run_suite(corpus, opts);
      write_output(format == "json" ? pd3::render_json(report, deterministic)
                                    : pd3::render_text(report),
                   out_path);
      return report.exit_code();
    }
    if (*normalize) {
      const auto& ctx = pd3::GroupContext::by_name(group);
      std::cout << pd3::normalize(ctx, word).to_string() << "\n";
      return 0;
    }
    if (*fox) {
      const auto p = pd3::read_presentation(read_file(presentation_path));
      std::cout << pd3::write_complex(pd3::build_fox_lyndon(p));
      return 0;
    }
    if (*hom) {
      const auto& corpus = pd3::Catalog::embedded();
      if (which == "x-universal") {
        print_homology(pd3::homology(pd3::flatten_complex(pd3::assemble_complex(corpus, "x"))));
      } else if (which == "y-double" || which == "z-double") {
        const auto cx = pd3::assemble_complex(corpus, which.substr(0, 1));
        print_homology(pd3::homology(pd3::augment_complex(pd3::restrict_to_index_two(cx))));
      } else {
        print_homology(pd3::homology(pd3::augment_complex(pd3::assemble_complex(corpus, which))));
      }
      return 0;
    }
    if (*snf) {
      const auto m = pd3::read_int_matrix(read_file(matrix_path));
      std::cout << pd3::write_smith(pd3::smith_normal_form(m));
      return 0;
    }
    if (*bar) {
      const auto& ctx = pd3::GroupContext::by_name(bar_group);
      std::cout << "H" << degree << "(" << ctx.name() << ") = "
                << pd3::bar_homology(ctx, degree).to_string() << "\n";
      return 0;
    }
  } catch (const pd3::Error& e) {
    std::cerr << "pd3: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
