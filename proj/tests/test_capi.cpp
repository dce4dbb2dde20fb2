#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgj/qgj.h"

#include <string>

namespace {

struct String {
    char* ptr = nullptr;
    ~String() { qgj_string_free(ptr); }
    std::string view() const { return ptr ? ptr : ""; }
};

struct System {
    qgj_system* ptr = nullptr;
    ~System() { qgj_system_free(ptr); }
};

}  // namespace

TEST_CASE("system parse and introspection") {
    System sys;
    REQUIRE(qgj_system_parse("2 3\n1 1 2\n1 -1 0\n", &sys.ptr) == QGJ_OK);
    CHECK(qgj_system_rows(sys.ptr) == 2);
    CHECK(qgj_system_cols(sys.ptr) == 2);
}

TEST_CASE("parse failure sets status and message") {
    System sys;
    CHECK(qgj_system_parse("2 3\n1 1\n", &sys.ptr) == QGJ_ERR_PARSE);
    CHECK(std::string(qgj_last_error()).find("line") != std::string::npos);
    CHECK(qgj_system_parse(nullptr, &sys.ptr) == QGJ_ERR_INVALID_ARG);
}

TEST_CASE("load failure is an io error") {
    System sys;
    CHECK(qgj_system_load("/nonexistent/file.txt", &sys.ptr) == QGJ_ERR_IO);
}

TEST_CASE("rref report through the C surface") {
    System sys;
    REQUIRE(qgj_system_parse("2 3\n1 1 2\n1 -1 0\n", &sys.ptr) == QGJ_OK);
    String out;
    REQUIRE(qgj_run_rref(sys.ptr, "grover", 7, 1, "text", &out.ptr) == QGJ_OK);
    const std::string report = out.view();
    CHECK(report.find("rank: 2") != std::string::npos);
    CHECK(report.find("1 0 1") != std::string::npos);
    CHECK(report.find("0 1 1") != std::string::npos);
    CHECK(report.find("multiplications:") != std::string::npos);

    String bad;
    CHECK(qgj_run_rref(sys.ptr, "quantumish", 0, 0, "text", &bad.ptr) == QGJ_ERR_INVALID_ARG);
    CHECK(qgj_run_rref(sys.ptr, "classical", 0, 0, "xml", &bad.ptr) == QGJ_ERR_INVALID_ARG);
}

TEST_CASE("solve reports inconsistency") {
    System sys;
    REQUIRE(qgj_system_parse("1 3\n0 0 1\n", &sys.ptr) == QGJ_OK);
    String out;
    int solvable = 1;
    REQUIRE(qgj_run_solve(sys.ptr, "text", &out.ptr, &solvable) == QGJ_OK);
    CHECK(solvable == 0);
    CHECK(out.view().find("inconsistent") != std::string::npos);
}

TEST_CASE("numeric entry points") {
    CHECK(qgj_sum_of_squares(3) == 14);
    CHECK(qgj_paper_cost_total(1) == doctest::Approx(3.41421356).epsilon(1e-8));
    CHECK(qgj_closed_form_cost(1) == doctest::Approx(qgj_paper_cost_total(1)));

    unsigned long long sum = 0;
    REQUIRE(qgj_quantum_add(4, 3, 5, &sum) == QGJ_OK);
    CHECK(sum == 8);
    CHECK(qgj_quantum_add(4, 99, 0, &sum) == QGJ_ERR_INVALID_ARG);

    int balanced = -1;
    REQUIRE(qgj_deutsch_classify(0, 1, &balanced) == QGJ_OK);
    CHECK(balanced == 1);
    REQUIRE(qgj_deutsch_classify(1, 1, &balanced) == QGJ_OK);
    CHECK(balanced == 0);
    CHECK(qgj_deutsch_classify(2, 0, &balanced) == QGJ_ERR_INVALID_ARG);
}

TEST_CASE("grover search through the C surface") {
    const unsigned long long marked[] = {5};
    long long found = -2;
    unsigned long long queries = 0, iterations = 0;
    REQUIRE(qgj_grover_search(3, marked, 1, 11, &found, &queries, &iterations) == QGJ_OK);
    CHECK(found == 5);
    CHECK(queries >= iterations);

    // nothing marked
    REQUIRE(qgj_grover_search(2, nullptr, 0, 0, &found, &queries, &iterations) == QGJ_OK);
    CHECK(found == -1);
}

TEST_CASE("cost csv via the C surface") {
    String out;
    REQUIRE(qgj_run_cost(5, 0, 0, "csv", &out.ptr) == QGJ_OK);
    const std::string csv = out.view();
    CHECK(csv.rfind("N,paper_total,closed_form,floored_closed_form,simulated_mean,ratio\n", 0) == 0);
    CHECK(csv.find("\n1,3.4142,") != std::string::npos);
}

TEST_CASE("deterministic report bytes for a fixed seed") {
    String a, b;
    const unsigned long long marked[] = {3};
    REQUIRE(qgj_run_grover(3, marked, 1, 21, -1, "json", &a.ptr) == QGJ_OK);
    REQUIRE(qgj_run_grover(3, marked, 1, 21, -1, "json", &b.ptr) == QGJ_OK);
    CHECK(a.view() == b.view());
}
