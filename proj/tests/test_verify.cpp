#include <doctest.h>

#include "hecke/errors.hpp"
#include "hecke/verify.hpp"

using namespace hecke;

TEST_SUITE("verify") {
  TEST_CASE("every suite passes at the smoke tier") {
    VerifyOptions opts;
    opts.n_max = 2;
    opts.random_cases = 500;
    for (const auto& suite : suite_names()) {
      const VerifyReport r = run_verify(suite, opts);
      CHECK_MESSAGE(r.ok(), suite << ": " << (r.ok() ? "" : r.failures.front().invariant));
      CHECK(r.checks > 0);
    }
  }

  TEST_CASE("arguments") {
    CHECK_THROWS_AS(run_verify("everything", VerifyOptions{}), ParseError);
    VerifyOptions opts;
    opts.n_max = 0;
    CHECK_THROWS_AS(run_verify("supports", opts), DomainError);
  }

  TEST_CASE("reports are deterministic in the seed") {
    VerifyOptions opts;
    opts.n_max = 3;
    opts.random_cases = 300;
    CHECK(run_verify("supports", opts).checks == run_verify("supports", opts).checks);
  }
}
