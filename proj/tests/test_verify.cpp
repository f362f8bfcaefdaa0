#include <catch2/catch_amalgamated.hpp>

#include "qsd/verify.hpp"

using namespace qsd;

TEST_CASE("quick verification run passes every suite") {
    const verify::Options opts{true, 42};
    const auto results = verify::run_all(opts);
    CHECK(results.size() >= 12);
    for (const auto& r : results) {
        INFO(r.name << " worst=" << r.worst << " tol=" << r.tolerance
                    << " repro=" << r.fail_case);
        CHECK(r.passed);
    }
    CHECK(verify::all_passed(results));
}

TEST_CASE("report rendering is deterministic and carries one line per suite") {
    const verify::Options opts{true, 7};
    const auto a = verify::run_all(opts);
    const auto b = verify::run_all(opts);
    const std::string ra = verify::render_report(a, opts);
    const std::string rb = verify::render_report(b, opts);
    CHECK(ra == rb);
    for (const auto& r : a) CHECK(ra.find(r.name) != std::string::npos);
    CHECK(ra.find("result: PASS") != std::string::npos);
}

TEST_CASE("different seeds still pass") {
    const verify::Options opts{true, 987654321};
    CHECK(verify::all_passed(verify::run_all(opts)));
}
