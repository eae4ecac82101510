#include <gtest/gtest.h>

#include "gabriel/workbench.hpp"

using namespace gabriel;
namespace wb = gabriel::workbench;

namespace {

wb::Outcome run(const std::string& text, wb::Task task, wb::Options opts = {}) { return wb::execute(wb::parse_document(text), task, opts); }

errc code_of(const std::string& text, wb::Task task) {
    try {
        run(text, task);
    } catch (const error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error for " << text;
    return errc::theorem_violation;
}

std::string message_of(const std::string& text, wb::Task task) {
    try {
        run(text, task);
    } catch (const error& e) {
        return e.what();
    }
    return {};
}

using strings = std::vector<std::string>;

}  // namespace

TEST(Workbench, PartitionExample) {
    const auto out = run(R"({"ring": {"zmod": 12}, "filter": {"mult_set": [1, 3, 9]}})", wb::Task::partition);
    EXPECT_EQ(out.exit_code, 0);
    const auto& r = out.report["results"];
    EXPECT_EQ(r["K"].get<strings>(), strings{"(2)"});
    EXPECT_EQ(r["Z"].get<strings>(), strings{"(3)"});
    EXPECT_EQ(r["C"].get<strings>(), strings{"(2)"});
    EXPECT_TRUE(r["meet_decomposition"].get<bool>());
    EXPECT_EQ(out.report["status"], "pass");
}

TEST(Workbench, CensusZ12) {
    const auto out = run(R"({"ring": {"zmod": 12}})", wb::Task::census);
    EXPECT_EQ(out.report["results"]["gabriel_filters"], 4);
    EXPECT_EQ(out.report["results"]["filters"].size(), 4u);
}

TEST(Workbench, ReportShape) {
    const auto out = run(R"({"ring": {"zmod": 6}})", wb::Task::census);
    std::vector<std::string> keys;
    for (const auto& [k, v] : out.report.items()) keys.push_back(k);
    EXPECT_EQ(keys, (strings{"tool", "version", "schema", "task", "spec", "status", "results", "counterexamples"}));
    wb::Options timed;
    timed.timing = true;
    EXPECT_TRUE(run(R"({"ring": {"zmod": 6}})", wb::Task::census, timed).report.contains("timing"));
}

TEST(Workbench, Deterministic) {
    const std::string spec = R"({"params": {"sweep": {"max_size": 8}, "theorems": ["torsion_class", "closure_laws", "cohen"]}})";
    EXPECT_EQ(run(spec, wb::Task::suite).report.dump(), run(spec, wb::Task::suite).report.dump());
}

TEST(Workbench, JsonRoundTrips) {
    for (const auto& [text, task] : std::vector<std::pair<std::string, wb::Task>>{
             {R"({"ring": {"square_zero": {"p": 2, "vars": 2}}, "filter": "lambda"})", wb::Task::enumerate},
             {R"({"ring": {"zmod": 12}, "filter": {"mult_set": [1, 5, 7, 11]}, "params": {"check": "sigma_maximal", "family": [[0], [4], [6]]}})",
              wb::Task::certify},
             {R"({"params": {"op": "cohen", "mult_set": {"s": {"vars": {"1": 1}}}, "primes": [{"tail": {"start": 2}}]}})", wb::Task::monomial_decide}}) {
        const auto report = run(text, task).report;
        EXPECT_EQ(wb::json::parse(report.dump(2)), report);
        EXPECT_EQ(wb::json::parse(report.dump()).dump(2), report.dump(2));
    }
}

TEST(Workbench, ParseErrorsCarryPosition) {
    try {
        wb::parse_document("{\"ring\": {\"zmod\": 12},\n \"filter\": [1,]}");
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::parse_error);
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
}

TEST(Workbench, ValidationErrors) {
    EXPECT_EQ(code_of(R"({"ring": {"zmod": 12}, "colour": 1})", wb::Task::census), errc::validation_error);
    EXPECT_EQ(code_of(R"({"ring": {"zmod": 12, "extra": 1}})", wb::Task::census), errc::validation_error);
    EXPECT_EQ(code_of(R"({"task": "census", "ring": {"zmod": 12}})", wb::Task::partition), errc::validation_error);
    EXPECT_EQ(code_of(R"({"schema": "other/2", "ring": {"zmod": 12}})", wb::Task::census), errc::validation_error);
    EXPECT_EQ(code_of(R"({"ring": {"zmod": 6}, "params": {"sweep": {"max_size": 6}}})", wb::Task::suite), errc::validation_error);
    EXPECT_EQ(code_of(R"({"params": {"sweep": {"max_size": 17}}})", wb::Task::suite), errc::size_cap_exceeded);
    EXPECT_EQ(code_of(R"({"ring": {"zmod": 257}})", wb::Task::census), errc::size_cap_exceeded);
    EXPECT_EQ(code_of(R"({"ring": {"polyquot": {"p": 2, "f": [1, 1, 0]}}})", wb::Task::census), errc::non_monic_polynomial);
    EXPECT_EQ(code_of(R"({"ring": {"zmod": 12}, "filter": {"mult_set": [1, 2, 3]}})", wb::Task::partition), errc::not_multiplicatively_closed);
    EXPECT_EQ(code_of(R"({"ring": {"zmod": 12}, "filter": {"prime_complement": {"ideal_gens": [4]}}})", wb::Task::partition), errc::not_prime);
    EXPECT_EQ(code_of(R"({"params": {"op": 3}})", wb::Task::monomial_decide), errc::validation_error);
    EXPECT_EQ(code_of(R"({"params": {"ideal": {"gens": [{"vars": {"3": 1}}], "families": [{"start": 2}]}, "mult_set": {"s": {"vars": {}}}}})",
                      wb::Task::monomial_decide),
              errc::tail_discipline_violation);
    // paths point at the offending value
    EXPECT_NE(message_of(R"({"ring": {"zmod": 12}, "filter": {"mult_set": [1, "x"]}})", wb::Task::partition).find("/filter/mult_set/1"),
              std::string::npos);
}

TEST(Workbench, CapOption) {
    wb::Options big;
    big.cap = 300;
    EXPECT_EQ(run(R"({"ring": {"zmod": 257}})", wb::Task::census, big).exit_code, 0);
}

TEST(Workbench, ExitCodes) {
    const std::string refuted = R"({"params": {"ideal": {"families": [{"start": 2}]}, "mult_set": {"s": {"vars": {"1": 1}}}}})";
    EXPECT_EQ(run(refuted, wb::Task::monomial_decide).exit_code, 0);
    wb::Options strict;
    strict.expect_pass = true;
    const auto out = run(refuted, wb::Task::monomial_decide, strict);
    EXPECT_EQ(out.exit_code, 1);
    EXPECT_EQ(out.report["status"], "fail");
    EXPECT_EQ(out.report["results"]["decision"]["verdict"], "refuted");

    wb::Options small_budget;
    small_budget.budget = 2;
    small_budget.expect_pass = true;
    const std::string slow = R"({"params": {"ideal": {"gens": [{"vars": {"1": 3, "2": 1}}], "families": [{"base": {"vars": {"2": 1}}, "start": 3}]},
                                "mult_set": {"s": {"vars": {"1": 1}}}}})";
    EXPECT_EQ(run(slow, wb::Task::monomial_decide, small_budget).report["results"]["decision"]["verdict"], "exhausted");
    EXPECT_EQ(run(slow, wb::Task::monomial_decide, small_budget).exit_code, 1);

    EXPECT_EQ(wb::exit_code_for(error(errc::theorem_violation, "x")), 1);
    EXPECT_EQ(wb::exit_code_for(error(errc::parse_error, "x")), 2);
    const auto rep = wb::error_report(error(errc::not_prime, "bad"), "partition");
    EXPECT_EQ(rep["status"], "error");
    EXPECT_EQ(rep["error"]["kind"], "NotPrime");
}

TEST(Workbench, SuiteOnRingRunsEveryFilter) {
    const auto out = run(R"({"ring": {"zmod": 12}, "params": {"theorems": ["torsion_class", "kaplansky"]}})", wb::Task::suite);
    const auto& filters = out.report["results"]["rings"][0]["filters"];
    EXPECT_EQ(filters.size(), 4u);
    for (const auto& f : filters) {
        ASSERT_EQ(f["theorems"].size(), 2u);
        EXPECT_EQ(f["theorems"][0]["name"], "torsion_class");
        EXPECT_EQ(f["theorems"][0]["passed"], f["theorems"][0]["instances_checked"]);
    }
    EXPECT_EQ(out.report["counterexamples"].size(), 0u);
    EXPECT_EQ(code_of(R"({"ring": {"zmod": 6}, "params": {"theorems": ["nope"]}})", wb::Task::suite), errc::validation_error);
}

TEST(Workbench, MonomialOps) {
    auto res = [](const std::string& params) { return run(R"({"params": )" + params + "}", wb::Task::monomial_decide).report["results"]; };
    EXPECT_EQ(res(R"({"op": "saturation", "ideal": {"gens": [{"vars": {"1": 2, "2": 1}}]}, "mult_set": {"s": {"vars": {"2": 1}}}})")["saturation"],
              "<x1^2>");
    EXPECT_EQ(res(R"({"op": "member", "ideal": {"families": [{"start": 2}]}, "monomial": {"vars": {"9": 1}}})")["member"], true);
    EXPECT_EQ(res(R"({"op": "in_filter", "ideal": {"families": [{"start": 2, "e": 3}]}, "mult_set": {"s": {"vars": {"4": 1}}}})")["n"], 3);
    EXPECT_EQ(res(R"({"op": "classify", "pattern": {"vars": [1]}, "mult_set": {"s": {"vars": {"1": 1}}}})")["class"], "Z");
    const auto cohen = res(R"({"op": "cohen", "mult_set": {"s": {"vars": {"1": 1}}}, "primes": [{"vars": [1]}, {"vars": [2]}, {"tail": {"start": 2}}]})");
    EXPECT_EQ(cohen["uncertified"].get<strings>(), strings{"{tail(2)}"});
    EXPECT_EQ(cohen["cross_check"]["decision"]["verdict"], "refuted");
    EXPECT_EQ(res(R"({"op": "almost_jansian", "mult_set": {"s": {"vars": {}}}})")["almost_jansian"], true);
}

TEST(Workbench, CertifyChecks) {
    const auto tfg = run(R"({"ring": {"zmod": 12}, "filter": {"mult_set": [1, 3, 9]}, "params": {"submodule": [2]}})", wb::Task::certify);
    EXPECT_TRUE(tfg.report["results"]["certificate"]["verified"].get<bool>());
    const auto chain = run(R"({"ring": {"zmod": 8}, "filter": "trivial", "params": {"check": "chain_stability", "chain": [[0], [4], [2], [1]]}})",
                           wb::Task::certify);
    EXPECT_EQ(chain.report["results"]["stable_index"], 4);
    EXPECT_EQ(code_of(R"({"ring": {"zmod": 8}, "filter": "trivial", "params": {"check": "chain_stability", "chain": [[2], [4]]}})", wb::Task::certify),
              errc::not_ascending);
    EXPECT_EQ(code_of(R"({"ring": {"zmod": 8}, "filter": "trivial", "params": {"check": "magic"}})", wb::Task::certify), errc::validation_error);
}

TEST(Workbench, TextRendering) {
    const auto text = wb::render_text(run(R"({"ring": {"zmod": 12}, "filter": {"mult_set": [1, 3, 9]}})", wb::Task::partition).report);
    EXPECT_NE(text.find("status: pass\n"), std::string::npos) << text;
    EXPECT_NE(text.find("  K: (2)\n"), std::string::npos) << text;
    EXPECT_NE(text.find("counterexamples: none\n"), std::string::npos) << text;
    EXPECT_EQ(text.find("spec"), std::string::npos) << text;  // the echo is json-only
}
