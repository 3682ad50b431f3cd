#include <doctest.h>

#include "pd3/checks.hpp"
#include "pd3/corpus.hpp"
#include "pd3/formats.hpp"
#include "pd3/report.hpp"

using namespace pd3;

namespace {

const GroupContext& Pi() { return GroupContext::get(GroupId::Pi); }

const Catalog& corpus() { return Catalog::embedded(); }

}  // namespace

TEST_CASE("file formats round-trip") {
  const auto p = corpus().presentation("pi");
  const auto p2 = read_presentation(write_presentation(p));
  CHECK(p2.group == p.group);
  CHECK(p2.relators == p.relators);
  CHECK(p2.relator_names == p.relator_names);

  const auto y = assemble_complex(corpus(), "y");
  CHECK(read_complex(write_complex(y)) == y);
  CHECK(read_ring_matrix(write_ring_matrix(y.differential(2))) == y.differential(2));
  const auto theta = corpus().chain("theta");
  CHECK(read_chain(write_chain(theta)) == theta);

  const IntMatrix m{{2, 4}, {6, 8}};
  CHECK(read_int_matrix(write_int_matrix(m)) == m);
  CHECK(read_int_matrix(R"({"rows": [["123456789012345678901234567890"]]})")(0, 0) ==
        Integer("123456789012345678901234567890"));

  const auto inferred = read_presentation(R"({"generators": ["a", "b"], "relators": ["a^2"]})");
  CHECK(inferred.group == &GroupContext::get(GroupId::S3));
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(read_int_matrix("{"), FormatError);
  CHECK_THROWS_AS(read_int_matrix(R"({"rows": [[1, 2], [3]]})"), Error);
  CHECK_THROWS_AS(read_chain(R"({"group": "Pi", "degree": 1, "coords": ["a +"]})"), Error);
  CHECK_THROWS_AS(read_presentation(R"({"group": "Q8", "generators": []})"), Error);
}

TEST_CASE("corpus entries") {
  CHECK(corpus().chain("psi").coords.size() == 2);
  const auto theta = corpus().chain("theta").coords;
  REQUIRE(theta.size() == 3);
  CHECK(theta[0] == parse_element(Pi(), "a-1"));
  CHECK(theta[1] == parse_element(Pi(), "-b*a+a+b^2-b"));
  CHECK(theta[2] == parse_element(Pi(), "-c*a+a+c^2-c"));
  const auto xi = corpus().chain("xi").coords;
  CHECK(xi[0] == theta[0]);
  CHECK(xi[1] == theta[1]);
  CHECK(xi[2] == -theta[2]);
  CHECK_THROWS_AS(corpus().get("no_such_entry"), UnknownArtifact);
  CHECK_THROWS_AS(corpus().chain("s3"), FormatError);
  CHECK(corpus().content_hash().size() == 64);
  for (const auto& name : corpus().names()) CHECK_FALSE(corpus().entry_text(name).empty());
}

TEST_CASE("directory corpus matches the embedded one") {
  const Catalog disk = Catalog::from_directory(PD3_CORPUS_DIR);
  CHECK(disk.content_hash() == corpus().content_hash());
  CHECK(disk.names() == corpus().names());
  CHECK_THROWS_AS(Catalog::from_directory(PD3_CORPUS_DIR "/missing"), FormatError);
}

TEST_CASE("mutations") {
  const auto sites = corpus().mutation_sites();
  CHECK(sites.size() > 100);
  const Catalog m = corpus().with_mutation(sites.front());
  CHECK(m.content_hash() != corpus().content_hash());
  // Negating twice restores the original content.
  CHECK(m.with_mutation(sites.front()).content_hash() == corpus().content_hash());
}

TEST_CASE("check selection") {
  CHECK(check_registry().size() == 22);
  CHECK(select_checks({"X*"}).size() == 8);
  CHECK(select_checks({"Y1", "H1"}) == std::vector<std::string>{"Y1", "H1"});
  CHECK(select_checks({"Q*"}).empty());
  CHECK(select_checks({}).size() == 22);
  CHECK_THROWS_AS(select_checks({"X99"}), UnknownCheck);
  for (const auto& info : check_registry()) {
    for (const auto& d : info.dependencies) CHECK_NOTHROW(check_info(d));
  }
}

TEST_CASE("single checks") {
  CHECK(run_check("X2", corpus()).status == Status::Pass);
  CheckOptions opts;
  opts.max_length = 4;
  const auto y6 = run_check("Y6", corpus(), opts);
  CHECK(y6.status == Status::Partial);
  CHECK(y6.radius == 4);
  CHECK(y6.status_string() == "PARTIAL(4)");

  // psi with its third coefficient negated.
  const Catalog tampered = corpus().with_mutation({"cycles.json", "/psi/coords/1", 0});
  const auto x2 = run_check("X2", tampered);
  CHECK(x2.status == Status::Fail);
  CHECK_FALSE(x2.details.empty());
  // Dependents are skipped rather than run on bad data.
  CHECK(run_check("X5", tampered).status == Status::Skip);
}

TEST_CASE("suites and reports") {
  SuiteOptions opts;
  opts.max_length = 3;
  opts.jobs = 4;
  const Report all = run_suite(corpus(), opts);
  CHECK(all.results.size() == 22);
  CHECK(all.count(Status::Pass) == 20);
  CHECK(all.count(Status::Partial) == 2);
  CHECK(all.exit_code() == 0);

  opts.filters = {"X*"};
  const Report x = run_suite(corpus(), opts);
  CHECK(x.results.size() == 8);

  opts.filters = {"Q*"};
  const Report none = run_suite(corpus(), opts);
  CHECK(none.results.empty());
  CHECK(none.exit_code() == 0);

  // Deterministic json drops only the timings.
  opts.filters = {"X1", "X2"};
  const Report a = run_suite(corpus(), opts);
  const Report b = run_suite(corpus(), opts);
  CHECK(render_json(a, true) == render_json(b, true));
  CHECK(render_json(a, true).find("wall_time_ms") == std::string::npos);
  CHECK(render_json(a, false).find("wall_time_ms") != std::string::npos);
  CHECK(render_text(a).find("summary: 2 checks, 2 PASS") != std::string::npos);
}
