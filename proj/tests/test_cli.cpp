#include <doctest.h>

#include "cli.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
    int rc;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "powval");
    std::ostringstream out, err;
    const int rc = powval::cli::run(args, out, err);
    return {rc, out.str(), err.str()};
}

nlohmann::json first_json(const Run& r) {
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    return nlohmann::json::parse(line);
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);)
        if (!l.empty()) v.push_back(l);
    return v;
}

}  // namespace

TEST_CASE("bounds report") {
    const auto r = run({"bounds", "--field", "Q", "-r", "2", "-s", "2", "--sequence", "arith:1:21"});
    REQUIRE(r.rc == 0);
    const auto j = first_json(r);
    CHECK(j["M"] == 21);
    CHECK(j["exact"]["eps"] == "1/3");
    CHECK(j["exact"]["c3"] == "1/6");
    CHECK(j["exact"]["c4"] == "1/1296");
    CHECK(j["B"].get<double>() == doctest::Approx(std::log(21.0)));
    const auto bad = run({"bounds", "-r", "2", "-s", "2", "--sequence", "arith:1:20"});
    CHECK(bad.rc == 2);
    CHECK(bad.err.find("SizeMismatch") != std::string::npos);
}

TEST_CASE("key inequality and powerful") {
    const auto k = run({"key-inequality", "-r", "12", "-s", "7"});
    REQUIRE(k.rc == 0);
    CHECK(first_json(k)["pass"] == true);
    CHECK(first_json(k)["min_slack"] == "1366/7");
    const auto k22 = first_json(run({"key-inequality", "-r", "2", "-s", "2"}));
    CHECK(k22["min_slack"] == "1/2");
    const auto p = run({"powerful", "--field", "Q", "-s", "2", "72"});
    REQUIRE(p.rc == 0);
    CHECK(first_json(p)["powerful"] == true);
    CHECK(first_json(run({"powerful", "-s", "2", "12"}))["powerful"] == false);
}

TEST_CASE("heights and decomposition") {
    const auto h = first_json(run({"height", "8/9"}));
    CHECK(h["h"].get<double>() == doctest::Approx(std::log(9.0)));
    const auto d = run({"decompose", "--point", "8/9", "--targets", "0"});
    REQUIRE(d.rc == 0);
    const auto dj = first_json(d);
    CHECK(dj["n_s"].get<double>() == doctest::Approx(std::log(9.0)));
    CHECK(dj["targets"][0]["n_s1"].get<double>() == doctest::Approx(std::log(2.0)));
    const auto fi = run({"--field", "Q(sqrt,-5)", "field-info"});
    REQUIRE(fi.rc == 0);
    CHECK(first_json(fi)["class_number"] == 2);
}

TEST_CASE("vojta and checks") {
    const auto v = run({"vojta", "--point", "8/9", "--targets", "0,1,2", "--form", "counting"});
    REQUIRE(v.rc == 0);
    const auto j = first_json(v);
    CHECK(j["lhs"].get<double>() == doctest::Approx(0.5 * std::log(9.0)));
    CHECK(j["holds"] == true);
    const auto same = run({"vojta", "--point", "1", "--targets", "0,1"});
    CHECK(same.rc == 2);
    CHECK(same.err.find("TargetEqualsPoint") != std::string::npos);
    const auto fm = run({"nevanlinna", "--check", "first-main", "--point", "8/9"});
    REQUIRE(fm.rc == 0);
    CHECK(first_json(fm)["pass"] == true);
}

TEST_CASE("count in json and csv") {
    const auto c = run({"count", "--cap", "1", "--degree", "1"});
    REQUIRE(c.rc == 0);
    CHECK(first_json(c)["count"] == 4);
    const auto csv = run({"--format", "csv", "count", "--cap", "2", "--degree", "2"});
    REQUIRE(csv.rc == 0);
    const auto ls = lines(csv.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0].rfind("cap,degree,count", 0) == 0);
    CHECK(ls[1].rfind("2,2,358,", 0) == 0);
    const auto listed = run({"count", "--cap", "1", "--degree", "2", "--list"});
    CHECK(lines(listed.out).size() == 10);
}

TEST_CASE("search output") {
    const auto s = run({"search", "-r", "2", "-s", "2", "--sequence", "arith:1:2", "--bound", "5"});
    REQUIRE(s.rc == 0);
    CHECK(s.out.find("5*x^2+3*x+1") != std::string::npos);
    for (const auto& l : lines(s.out)) CHECK_NOTHROW((void)nlohmann::json::parse(l));
}

TEST_CASE("exit codes") {
    CHECK(run({"bogus"}).rc == 2);
    CHECK(run({"--field", "Q(sqrt,4)", "field-info"}).rc == 2);
    CHECK(run({"count", "--cap", "1e9"}).rc == 2);
    const auto big = run({"--budget", "100", "count", "--cap", "1000", "--degree", "2"});
    CHECK(big.rc == 3);
    CHECK(run({"--help"}).rc == 0);
    const auto zero = run({"powerful", "-s", "2", "0"});
    CHECK(zero.rc == 2);
    CHECK(zero.err.rfind("error: ", 0) == 0);
}

TEST_CASE("sequence and transforms") {
    const auto s = run({"sequence", "--sequence", "geom:1:2:10"});
    REQUIRE(s.rc == 0);
    const auto ls = lines(s.out);
    REQUIRE(ls.size() == 3);
    const auto d = nlohmann::json::parse(ls[1]);
    CHECK(d["kind"] == "D");
    CHECK(d["period"] == 1);
    CHECK(d["extension_lemma"] == true);
    CHECK(nlohmann::json::parse(ls[0])["period"].is_null());
    const auto t = run({"transforms", "--poly", "3,0,1", "-j", "2", "--sequence", "arith:1:10", "--kind", "C"});
    REQUIRE(t.rc == 0);
    CHECK(first_json(t)["transformed"] == "x^2+4*x+7");
    CHECK(first_json(t)["identity_pass"] == true);
}
