#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "wharf/io.hpp"
#include "wharf/version.hpp"
#include "wharf/wha.hpp"

using namespace wharf;

namespace {

const char* kCli = WHARF_CLI_PATH;
const char* kData = WHARF_DATA_DIR;

std::string out_path() {
  return (std::filesystem::temp_directory_path() / "wharf_cli_out.txt")
      .string();
}

/// Runs the tool with the given argument string; stdout goes to out_path().
int run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      env + (env.empty() ? "" : " ") + std::string(kCli) + " " + args + " > " +
      out_path() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string data_file(const char* name) {
  return std::string(kData) + "/" + name;
}

nlohmann::json parse_output() {
  return nlohmann::json::parse(read_text_file(out_path()));
}

}  // namespace

// ==== verify-wha ============================================================

TEST_CASE("cli verifies the builtin algebra and golden file") {
  CHECK(run_cli("verify-wha --builtin fib") == 0);
  CHECK(read_text_file(out_path()).find("overall: PASS") != std::string::npos);

  CHECK(run_cli("verify-wha --algebra " + data_file("fib_wha.json") +
                " --json") == 0);
  const auto rep = parse_output();
  CHECK(rep.at("overall") == true);
  CHECK(rep.at("tool_version") == kToolVersion);
  CHECK(rep.at("checks").size() > 20);  // both tables, all identities
  // The input digest is recorded.
  CHECK(rep.at("inputs").at(data_file("fib_wha.json")) ==
        sha256_file(data_file("fib_wha.json")));
}

TEST_CASE("cli exit codes distinguish check failures from input errors") {
  // Corrupt one structure constant: well-formed file, broken algebra.
  WeakHopfAlgebraTable t = wha_from_json(read_text_file(data_file("fib_wha.json")));
  t.lam_ref(0, 0, 0) += cxd{0.25, 0.0};
  const std::string corrupted =
      (std::filesystem::temp_directory_path() / "wharf_cli_corrupted.json")
          .string();
  write_text_file(corrupted, wha_to_json(t));
  CHECK(run_cli("verify-wha --algebra " + corrupted) == 1);
  CHECK(read_text_file(out_path()).find("[FAIL]") != std::string::npos);
  std::remove(corrupted.c_str());

  CHECK(run_cli("verify-wha --algebra /nonexistent/missing.json") == 2);
  const std::string bad =
      (std::filesystem::temp_directory_path() / "wharf_cli_bad.json").string();
  write_text_file(bad, "this is not json");
  CHECK(run_cli("verify-wha --algebra " + bad) == 2);
  std::remove(bad.c_str());
  CHECK(run_cli("verify-wha --no-such-flag") == 2);
  CHECK(run_cli("--help") == 0);
}

TEST_CASE("cli flags fall back to environment variables") {
  CHECK(run_cli("verify-wha", "WHARF_BUILTIN=fib") == 0);
  CHECK(run_cli("verify-wha", "WHARF_BUILTIN=no-such-algebra") == 2);
}

// ==== compile ===============================================================

TEST_CASE("cli compiles the golden category data") {
  const std::string out =
      (std::filesystem::temp_directory_path() / "wharf_cli_compiled.json")
          .string();
  CHECK(run_cli("compile --fusion " + data_file("fib_fusion.json") +
                " --fsymbols " + data_file("fib_fsymbols.json") + " --out " +
                out) == 0);
  const std::string text = read_text_file(out);
  const WeakHopfAlgebraTable table = wha_from_json(text);
  CHECK(table.dim == 13);
  CHECK(verify_axioms(table).pass(1e-8));
  // The emitted file embeds the deterministic report body.
  const auto emitted = nlohmann::json::parse(text);
  CHECK(emitted.at("report").at("overall") == true);

  CHECK(run_cli("compile --fusion " + data_file("z2_fusion.json") +
                " --fsymbols " + data_file("z2_fsymbols_twisted.json") +
                " --out " + out) == 0);
  CHECK(wha_from_json(read_text_file(out)).dim == 8);
  std::remove(out.c_str());
}

TEST_CASE("cli compile rejects unsupported and inconsistent input") {
  const auto tmp = std::filesystem::temp_directory_path();
  const std::string fusion = (tmp / "wharf_cli_mult2.json").string();
  const std::string fsym = (tmp / "wharf_cli_mult2_fs.json").string();
  // Multiplicity-two ring: valid ring, outside the compiler's scope.
  write_text_file(fusion, R"({"labels": ["1", "x"], "unit": "1",
    "dual": {"1": "1", "x": "x"},
    "N": [["1","1","1",1],["1","x","x",1],["x","1","x",1],
          ["x","x","1",1],["x","x","x",2]]})");
  write_text_file(fsym, R"({"entries": []})");
  CHECK(run_cli("compile --fusion " + fusion + " --fsymbols " + fsym) == 1);

  // Wrong F-symbols: pentagon fails, exit 1 with residuals reported.
  const std::string badf = (tmp / "wharf_cli_badf.json").string();
  write_text_file(badf, R"({"entries": [
    ["tau","tau","tau","tau","1","1",0.9,0.0],
    ["tau","tau","tau","tau","1","tau",0.3,0.0],
    ["tau","tau","tau","tau","tau","1",0.3,0.0],
    ["tau","tau","tau","tau","tau","tau",-0.9,0.0]]})");
  CHECK(run_cli("compile --fusion " + data_file("fib_fusion.json") +
                " --fsymbols " + badf) == 1);
  CHECK(read_text_file(out_path()).find("[FAIL]") != std::string::npos);

  CHECK(run_cli("compile --fusion " + fusion) == 2);  // missing --fsymbols
  std::remove(fusion.c_str());
  std::remove(fsym.c_str());
  std::remove(badf.c_str());
}

// ==== rfp ===================================================================

TEST_CASE("cli runs the fixed-point battery end to end") {
  const std::string dump =
      (std::filesystem::temp_directory_path() / "wharf_cli_rho.ctf").string();
  CHECK(run_cli("rfp --builtin fib --L 1,2 --dump " + dump + " --json") == 0);
  const auto rep = parse_output();
  CHECK(rep.at("overall") == true);

  // The strong-symmetry eigenvalue is reported with the golden-ratio value.
  bool found_golden = false;
  for (const auto& c : rep.at("checks")) {
    const std::string anchor = c.at("anchor");
    if (anchor.find("1.6180339887") != std::string::npos) found_golden = true;
  }
  CHECK(found_golden);

  // The dumped state is the dense length-2 sector state.
  const Mat rho = read_ctf_matrix(dump);
  CHECK(rho.rows() == 25);
  CHECK(std::abs(rho.trace() - cxd{1.0}) < 1e-9);
  std::remove(dump.c_str());
}

TEST_CASE("cli rfp covers the group-ring builtins with unimodular spectra") {
  CHECK(run_cli("rfp --builtin z2 --L 1,2 --json") == 0);
  auto rep = parse_output();
  CHECK(rep.at("overall") == true);
  int pm_one = 0;
  for (const auto& c : rep.at("checks")) {
    const std::string name = c.at("name");
    const std::string anchor = c.at("anchor");
    if (name.find("lambda") == std::string::npos) continue;
    if (anchor.find("lambda = 1.0000000000") != std::string::npos ||
        anchor.find("lambda = -1.0000000000") != std::string::npos) {
      ++pm_one;
    }
  }
  CHECK(pm_one == 8);  // two sectors x two labels x two lengths

  CHECK(run_cli("rfp --builtin z2-twisted --L 1,2 --json") == 0);
  CHECK(parse_output().at("overall") == true);

  CHECK(run_cli("rfp --builtin fib --L 0") == 2);
  CHECK(run_cli("rfp --builtin fib --m 7") == 2);
}

TEST_CASE("cli rfp reports are deterministic apart from the timestamp") {
  CHECK(run_cli("rfp --builtin fib --L 1 --json") == 0);
  const auto first = parse_output();
  CHECK(run_cli("rfp --builtin fib --L 1 --json") == 0);
  const auto second = parse_output();
  CHECK(first.at("digest") == second.at("digest"));
  CHECK(first.at("checks") == second.at("checks"));
}

// ==== anomaly ===============================================================

TEST_CASE("cli anomaly verdicts separate the builtin rings") {
  CHECK(run_cli("anomaly --fusion " + data_file("fib_fusion.json")) == 0);
  auto fib = parse_output();
  CHECK(fib.at("anomalous") == true);
  CHECK(std::abs(fib.at("dims").at("tau").get<double>() - 1.618033988749895) <
        1e-9);

  CHECK(run_cli("anomaly --fusion " + data_file("z2_fusion.json")) == 0);
  CHECK(parse_output().at("anomalous") == false);
}

TEST_CASE("cli anomaly analyzes sequence files") {
  const auto tmp = std::filesystem::temp_directory_path();
  const std::string seq = (tmp / "wharf_cli_seq.txt").string();
  // F(L) = i^L + (-i)^L sampled from L = 1.
  std::string text = "# quarter-turn pair\n";
  for (int l = 1; l <= 16; ++l) {
    const int v = (l % 4 == 0) ? 2 : (l % 4 == 2) ? -2 : 0;
    text += std::to_string(v) + "\n";
  }
  write_text_file(seq, text);
  CHECK(run_cli("anomaly --sequence " + seq) == 0);
  auto rep = parse_output();
  CHECK(rep.at("finite_image") == true);
  CHECK(rep.at("period") == 4);

  // Doubling sequence: analysis succeeds, image is not finite.
  text.clear();
  double v = 1.0;
  for (int l = 1; l <= 16; ++l) {
    v *= 2.0;
    text += std::to_string(v) + "\n";
  }
  write_text_file(seq, text);
  CHECK(run_cli("anomaly --sequence " + seq) == 0);
  rep = parse_output();
  CHECK(rep.at("finite_image") == false);
  CHECK(rep.at("period").is_null());
  CHECK(rep.at("reason").get<std::string>().find("unit circle") !=
        std::string::npos);

  // Too few samples is an input error; an order cap breach is a failure.
  write_text_file(seq, "1\n2\n");
  CHECK(run_cli("anomaly --sequence " + seq) == 2);
  text.clear();
  double x = 0.37;
  for (int l = 0; l < 24; ++l) {
    x = 4.0 * x * (1.0 - x);
    text += std::to_string(x) + "\n";
  }
  write_text_file(seq, text);
  CHECK(run_cli("anomaly --sequence " + seq + " --max-order 3") == 1);

  CHECK(run_cli("anomaly") == 2);  // neither input kind
  std::remove(seq.c_str());
}
