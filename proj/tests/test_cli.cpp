#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "tac/cli.hpp"
#include "test_util.hpp"

using namespace tac;
using namespace tac::cli;
using nlohmann::json;
using testutil::hi;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cfg(const RunConfig& cfg) {
  std::ostringstream out, err;
  const int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(Command c, std::optional<long> twice_j = std::nullopt) {
  RunConfig cfg;
  cfg.command = c;
  if (twice_j) cfg.j = hi(*twice_j);
  return cfg;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("command and format parsing") {
    CHECK(parse_command("table1") == Command::table1);
    CHECK_THROWS(parse_command("plot"));
    CHECK(parse_format("csv") == Format::csv);
    CHECK_THROWS(parse_format("xml"));
    CHECK(output_digits(34) == 24);
    CHECK(output_digits(20) == 17);
  }

  TEST_CASE("charpoly") {
    const Outcome o = run_cfg(config(Command::charpoly, 4));
    REQUIRE(o.code == kExitOk);
    const json doc = json::parse(o.out);
    CHECK(doc["coefficients"] == json({"0", "-108", "0", "21", "0", "-1"}));
    CHECK(doc["parity"] == "odd");
    CHECK(doc["degenerate"] == false);
    CHECK(doc["meta"]["precision"] == 34);
    CHECK(doc["meta"]["version"] == kToolVersion);

    const json half = json::parse(run_cfg(config(Command::charpoly, 1)).out);
    CHECK(half["coefficients"] == json({"0", "0", "1"}));
    CHECK(half["degenerate"] == true);

    RunConfig bad = config(Command::charpoly, -2);
    const Outcome e = run_cfg(bad);
    CHECK(e.code == kExitInvalidInput);
    CHECK(e.err.find("spin") != std::string::npos);

    RunConfig missing = config(Command::charpoly);
    CHECK(run_cfg(missing).code == kExitInvalidInput);

    RunConfig lowp = config(Command::charpoly, 4);
    lowp.digits = 10;
    CHECK(run_cfg(lowp).code == kExitInvalidInput);

    RunConfig text = config(Command::charpoly, 4);
    text.format = Format::text;
    CHECK(run_cfg(text).out.find("-l^5 + 21*l^3 - 108*l") != std::string::npos);
  }

  TEST_CASE("spectrum JSON round trip") {
    for (long tj : {1L, 3L, 4L, 7L, 9L, 15L, 16L, 20L, 22L}) {
      for (int digits : {20, 34, 50}) {
        const SpectrumReport r = spectrum(hi(tj), digits);
        const json doc = spectrum_to_json(r);
        const SpectrumReport back = spectrum_from_json(json::parse(doc.dump()));
        INFO("2j = " << tj << ", digits = " << digits);
        CHECK(same_report(r, back));
        CHECK(spectrum_to_json(back) == doc);
      }
    }
    const Outcome o = run_cfg(config(Command::spectrum, 7));
    REQUIRE(o.code == kExitOk);
    const json doc = json::parse(o.out);
    CHECK(doc["solvability"]["kind"] == "RADICALS");
    CHECK(doc["eigenvalues"].back()["radical_form"] == "sqrt(63 + 12*sqrt(21))");
  }

  TEST_CASE("classify") {
    RunConfig cfg = config(Command::classify, 22);
    const json doc = json::parse(run_cfg(cfg).out);
    CHECK(doc["solvability"] == "NUMERIC_ONLY");
    CHECK(doc["mu_degree"] == 6);
  }

  TEST_CASE("evolve CSV") {
    RunConfig cfg = config(Command::evolve, 4);
    cfg.t_max = "3";
    cfg.steps = 601;
    const Outcome a = run_cfg(cfg);
    REQUIRE(a.code == kExitOk);
    const Outcome b = run_cfg(cfg);
    CHECK(a.out == b.out);
    CHECK(a.out.find('\r') == std::string::npos);

    const auto ls = lines(a.out);
    size_t header = 0;
    while (header < ls.size() && ls[header].rfind("#", 0) == 0) ++header;
    REQUIRE(header > 0);
    CHECK(ls[0] == "# tool: tacsq");
    CHECK(ls[header] == "chi_t,jx_mean,var_jy,var_jz,xi_y,xi_z,corr_xz,xi_opt,opt_angle");
    CHECK(ls.size() - header - 1 == 601);
    const auto first = split(ls[header + 1]);
    CHECK(first[0] == "0");
    CHECK(first[4] == "1");
    CHECK(first[5] == "1");
    CHECK(first[6] == "0");
    for (size_t k = header + 1; k < ls.size(); ++k) {
      const auto f = split(ls[k]);
      REQUIRE(f.size() == 9);
      CHECK(std::stod(f[4]) >= 1 - 1e-12);
    }
    const auto mid = split(ls[header + 2]);
    const std::string mant = mid[1].substr(0, mid[1].find_first_of("eE"));
    size_t digits = 0;
    for (char ch : mant)
      if (std::isdigit(static_cast<unsigned char>(ch))) ++digits;
    CHECK(digits >= 24 - 1);
    CHECK(digits <= 24 + 1);

    RunConfig half = config(Command::evolve, 1);
    half.steps = 20;
    const auto hl = lines(run_cfg(half).out);
    std::string row0;
    for (const auto& l : hl) {
      if (l.empty() || l[0] == '#' || l[0] == 'c') continue;
      const auto f = split(l);
      const std::string dyn = l.substr(l.find(','));
      if (row0.empty()) row0 = dyn;
      CHECK(dyn == row0);
    }
  }

  TEST_CASE("evolve argument errors") {
    RunConfig steps = config(Command::evolve, 4);
    steps.steps = 1;
    CHECK(run_cfg(steps).code == kExitInvalidInput);
    RunConfig omega = config(Command::evolve, 4);
    omega.omega = "0.5";
    CHECK(run_cfg(omega).code == kExitInvalidInput);
    RunConfig chi = config(Command::evolve, 4);
    chi.chi = "zero";
    CHECK(run_cfg(chi).code == kExitInvalidInput);
  }

  TEST_CASE("output file") {
    const auto path = std::filesystem::temp_directory_path() / "tacsq_test_output.json";
    RunConfig cfg = config(Command::charpoly, 6);
    cfg.output_path = path.string();
    const Outcome o = run_cfg(cfg);
    CHECK(o.code == kExitOk);
    CHECK(o.out.empty());
    std::ifstream in(path);
    const json doc = json::parse(in);
    CHECK(doc["j"] == "3");
    std::filesystem::remove(path);
  }

  TEST_CASE("verify") {
    RunConfig cfg = config(Command::verify, 4);
    const Outcome o = run_cfg(cfg);
    CHECK(o.code == kExitOk);
    CHECK(o.out.find("PASS closed_form_propagator") != std::string::npos);
    CHECK(o.out.find("FAIL") == std::string::npos);

    RunConfig big = config(Command::verify, 21);
    const Outcome b = run_cfg(big);
    CHECK(b.code == kExitOk);
    CHECK(b.out.find("FAIL") == std::string::npos);

    RunConfig field = config(Command::verify, 6);
    field.omega = "1.7";
    CHECK(run_cfg(field).code == kExitOk);

    RunConfig fault = config(Command::verify, 4);
    fault.inject_fault = true;
    const Outcome f = run_cfg(fault);
    CHECK(f.code == kExitPropertyFailure);
    CHECK(f.out.find("FAIL spectrum_pairing") != std::string::npos);

    RunConfig fault_half = config(Command::verify, 1);
    fault_half.inject_fault = true;
    CHECK(run_cfg(fault_half).code == kExitInvalidInput);
  }

  TEST_CASE("table1") {
    const Outcome all = run_cfg(config(Command::table1));
    const auto ls = lines(all.out);
    CHECK(ls.size() == 22);
    long match = 0;
    for (const auto& l : ls) match += l.find("  MATCH") != std::string::npos ? 1 : 0;
    CHECK(match == 19);
    CHECK(all.out.find("J=8  MISMATCH (QUESTIONABLE)") != std::string::npos);
    CHECK(all.out.find("J=11  UNPARSEABLE (QUESTIONABLE)") != std::string::npos);
    CHECK(all.out.find("J=2  MISMATCH (QUESTIONABLE)") != std::string::npos);
    CHECK(all.code == kExitOk);

    const Outcome one = run_cfg(config(Command::table1, 9));
    CHECK(one.code == kExitOk);
    CHECK(one.out == "J=9/2  MATCH\n");

    CHECK(run_cfg(config(Command::table1, 24)).code == kExitInvalidInput);

    const Table1Row r2 = check_table1_row(hi(4));
    CHECK(r2.status == "MISMATCH");
    CHECK(r2.corrected_match == true);
    CHECK(r2.acceptable());
  }

  TEST_CASE("closed-form j = 2 propagator is unitary") {
    const DenseOperator u = closed_form_propagator_j2(Real(1.3, 34), 34);
    CHECK(max_abs_diff(u.adjoint() * u, DenseOperator::identity(u.basis(), 34)).to_double() < 1e-30);
  }
}
