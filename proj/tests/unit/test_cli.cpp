#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <sstream>

#include "asx/casev/casev.hpp"
#include "asx/cli/app.hpp"
#include "asx/cli/paramfile.hpp"

using namespace asx;
using namespace asx::cli;

namespace {

const std::string kData = ASX_TEST_DATA;

std::string m5_text() { return write_param_file(casev::casev_spec(5)); }

std::pair<ErrorKind, std::string> error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return {e.kind(), e.what()};
  }
  return {ErrorKind::InvalidArgument, "no error"};
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

void collect_strings(const Json& j, std::vector<std::string>& out) {
  if (j.is_string()) out.push_back(j.get<std::string>());
  if (j.is_structured())
    for (const auto& x : j) collect_strings(x, out);
}

}  // namespace

TEST_CASE("param file round trip") {
  const auto f = parse_param_file(m5_text());
  CHECK(f.radicand == 0);
  CHECK(f.rational_spec()->c == casev::casev_spec(5).c);
  CHECK(*f.rational_spec() == casev::casev_spec(5));
  CHECK(write_param_file(f) == m5_text());

  const std::string messy =
      "# leading comment\n\nformat:   asx-params   v1\n  d : 2   # two classes\nfield: Q( sqrt 5 )\n"
      "c: 1, 1\na: 1/2 + 1/2*sqrt(5)  1\r\nb: 2 1/2-1/2 * sqrt( 5 )\n";
  const auto g = parse_param_file(messy);
  CHECK(g.radicand == 5);
  CHECK(g.spec.a[0] == QuadraticNumber::parse("1/2+1/2*sqrt(5)"));
  CHECK(g.spec.b[1] == QuadraticNumber::parse("1/2-1/2*sqrt(5)"));
  CHECK_FALSE(g.rational_spec());
  const std::string once = write_param_file(g);
  CHECK(write_param_file(parse_param_file(once)) == once);

  // p/q+r/s is not a value form
  auto [kind, message] = error_of([] { parse_param_file("format: asx-params v1\nd: 2\nfield: Q\nc: 1 -1/2+3/2\n"); });
  CHECK(kind == ErrorKind::ParseError);
  CHECK(message.find("line 4, column 10: unexpected '+'") != std::string::npos);
}

TEST_CASE("param file diagnostics") {
  const std::string head = "format: asx-params v1\nd: 2\nfield: Q\n";
  auto [k1, m1] = error_of([&] { parse_param_file(head + "c: 1 1/0\na: 0 0\nb: 1 1\n"); });
  CHECK(k1 == ErrorKind::ZeroDenominator);
  CHECK(m1.find("line 4, column 8") != std::string::npos);

  auto [k2, m2] = error_of([&] { parse_param_file(head + "c: 1 0\na: 0 1\nb: 1 1\n"); });
  CHECK(k2 == ErrorKind::InvariantViolation);
  CHECK(m2.find("(Q2)") != std::string::npos);

  auto [k3, m3] = error_of([&] { parse_param_file(head + "c: 1 2x\na: 0 0\nb: 2 1\n"); });
  CHECK(k3 == ErrorKind::ParseError);
  CHECK(m3.find("line 4, column 7") != std::string::npos);

  CHECK(error_of([&] { parse_param_file("d: 2\n"); }).first == ErrorKind::ParseError);
  CHECK(error_of([&] { parse_param_file("format: asx-params v2\n"); }).first == ErrorKind::ParseError);
  CHECK(error_of([&] { parse_param_file(head + "c: 1\na: 0 0\nb: 2 1\n"); }).first == ErrorKind::ParseError);
  CHECK(error_of([&] { parse_param_file(head + "c: 1 1\na: 0 1\nb: 2 sqrt(3)\n"); }).first == ErrorKind::ParseError);
  CHECK(error_of([&] { parse_param_file(head + "c: 1 1\nc: 1 1\n"); }).first == ErrorKind::ParseError);
  CHECK(error_of([&] { parse_param_file(head + "c: 1 1\na: 0 1\nb: 2 1\nx: 3\n"); }).first == ErrorKind::ParseError);
  CHECK(error_of([&] { parse_param_file("format: asx-params v1\nd: 2\nfield: Q(sqrt 8)\n"); }).first ==
        ErrorKind::ParseError);
  CHECK(error_of([] { load_param_file("/nonexistent/file.params"); }).first == ErrorKind::ParseError);
}

TEST_CASE("random garbage never escapes as anything but a library error") {
  const std::string alphabet = "0123456789/+-*sqrt() :,#\nabcdQ";
  std::uint64_t state = 12345;
  for (int trial = 0; trial < 500; ++trial) {
    std::string text = "format: asx-params v1\nd: 2\nfield: Q\n";
    const int len = 1 + static_cast<int>(state % 40);
    for (int i = 0; i < len; ++i) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      text += alphabet[(state >> 33) % alphabet.size()];
    }
    try {
      parse_param_file(text);
    } catch (const Error&) {
    }
  }
}

TEST_CASE("check command") {
  const auto r = run_cli({"check", kData + "/casev-m5.params"});
  CHECK(r.code == 1);
  CHECK(r.out.find("[FAIL] intersection integrality") != std::string::npos);
  CHECK(r.out.find("72/7") != std::string::npos);

  CHECK(run_cli({"check", kData + "/cube3.params"}).code == 0);
  CHECK(run_cli({"check", kData + "/pentagon.params"}).code == 0);
  CHECK(run_cli({"check", kData + "/zero-denominator.params"}).code == 2);
  CHECK(run_cli({"check", kData + "/zero-c2.params"}).code == 2);
  CHECK(run_cli({"check", kData + "/malformed.params"}).code == 2);
  CHECK(run_cli({"check", kData + "/missing.params"}).code == 2);
  CHECK(run_cli({"check"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("json and text carry the same exact strings") {
  for (const auto& file : {"casev-m5.params", "pentagon.params", "cube3.params"}) {
    const auto text = run_cli({"check", kData + "/" + file});
    const auto json = run_cli({"--report", "json", "check", kData + "/" + file});
    CHECK(text.code == json.code);
    const Json j = Json::parse(json.out);
    CHECK(exit_code_of(j) == json.code);
    std::vector<std::string> strings;
    collect_strings(j["data"], strings);
    collect_strings(j["checks"], strings);
    for (const auto& s : strings) CHECK_MESSAGE(text.out.find(s) != std::string::npos, s);
    CHECK(text.out.find('.') == std::string::npos);
  }
  const auto approx = run_cli({"check", "--approx", kData + "/pentagon.params"});
  CHECK(approx.out.find("~") != std::string::npos);
}

TEST_CASE("orderings and fuse commands") {
  const auto o = run_cli({"--report", "json", "orderings", kData + "/casev-m5.params"});
  CHECK(o.code == 0);
  const Json j = Json::parse(o.out);
  REQUIRE(j["data"]["orderings"].size() == 2);
  CHECK(j["data"]["orderings"][0]["type"] == "reference");
  CHECK(j["data"]["orderings"][1]["cycles"] == "(1 5)(2 3)");
  CHECK(j["data"]["orderings"][1]["type"] == "V");
  CHECK(run_cli({"orderings", "--max-d", "4", kData + "/casev-m5.params"}).code == 2);

  const auto f = run_cli({"--report", "json", "fuse", kData + "/casev-m5.params", "--partition", "0|1,5|2,3|4"});
  CHECK(f.code == 0);
  const Json fj = Json::parse(f.out);
  CHECK(fj["data"]["multiplicities"] == Json({"1", "10", "20", "25"}));
  CHECK(run_cli({"fuse", kData + "/casev-m5.params", "--partition", "1|0,5|2,3|4"}).code == 2);
  CHECK(run_cli({"fuse", kData + "/casev-m5.params", "--partition", "0|1|2,3|4,5"}).code == 2);
}

TEST_CASE("casev commands") {
  const auto s = run_cli({"casev", "--search-max", "1000"});
  CHECK(s.code == 0);
  CHECK(s.out.find("survivors: 1 5\n") != std::string::npos);
  CHECK(run_cli({"casev", "--search-max", "0"}).code == 2);
  CHECK(run_cli({"casev"}).code == 2);
  CHECK(run_cli({"casev", "--symbolic", "--consistency"}).code == 2);

  const auto fz = run_cli({"casev", "--fusion", "5"});
  CHECK(fz.code == 0);
  CHECK(fz.out.find("delta: 72\n") != std::string::npos);
  CHECK(run_cli({"casev", "--fusion", "2"}).code == 1);
  CHECK(run_cli({"casev", "--fusion", "1"}).code == 2);

  const auto c = run_cli({"casev", "--consistency"});
  CHECK(c.code == 0);
  CHECK(c.out.find("identities_checked: 216") != std::string::npos);

  const auto sym = run_cli({"casev", "--symbolic"});
  CHECK(sym.code == 3);
  CHECK(sym.out.find("chain broken at step 5") != std::string::npos);

  const auto rej = run_cli({"--report", "json", "casev", "--reject", "--search-max", "1000"});
  CHECK(rej.code == 3);
  const Json rj = Json::parse(rej.out);
  CHECK(rj["data"]["branch_a"]["reference"]["b1_matches"] == true);
  CHECK(rj["data"]["branch_a"]["reference"]["witness_72_7"] == true);
}
