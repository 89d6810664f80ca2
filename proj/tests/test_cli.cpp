// Runs the CLI and compares stdout+stderr and the exit code against files in
// tests/golden. Set POSETCM_UPDATE_GOLDEN=1 to rewrite them.
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string cli = POSETCM_CLI_PATH;
const std::string data = POSETCM_TEST_DATA;
const std::string golden = POSETCM_GOLDEN_DIR;

struct Run {
  std::string output;
  int exit_code = -1;
};

Run run(const std::string& args) {
  const std::string cmd = "cd '" + data + "' && '" + cli + "' " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void golden_case(const std::string& name, const std::string& args) {
  const Run r = run(args);
  const std::string actual = r.output + "[exit " + std::to_string(r.exit_code) + "]\n";
  const std::string path = golden + "/" + name + ".txt";
  if (const char* up = std::getenv("POSETCM_UPDATE_GOLDEN"); up && std::string(up) == "1") {
    std::ofstream(path, std::ios::binary) << actual;
  }
  INFO("posetcm-cli " << args);
  CHECK(actual == slurp(path));
}

}  // namespace

TEST_CASE("info") {
  golden_case("info_four_atoms", "info four_atoms.poset");
  golden_case("info_m3", "info m3.poset");
  golden_case("info_empty", "info empty.poset");
  golden_case("info_cycle", "info cycle.poset");
  golden_case("info_missing", "info does-not-exist.poset");
}

TEST_CASE("zdg") {
  golden_case("zdg_four_atoms", "zdg --dot four_atoms.poset");
  golden_case("zdg_chain3", "zdg chain3.poset");
  golden_case("zdg_m3", "zdg m3.poset");
}

TEST_CASE("check") {
  golden_case("check_four_atoms", "check four_atoms.poset");
  golden_case("check_p333", "check p333.poset");
  golden_case("check_k22_verbose", "check --verbose k22.poset");
  golden_case("check_m3", "check m3.poset");
  golden_case("check_chain3", "check chain3.poset");
  golden_case("check_b3_small_caps", "check --max-vertices 4 b3.poset");
}

TEST_CASE("export") {
  golden_case("export_b3_m2", "export --dialect m2 b3.poset");
  golden_case("export_b2_singular", "export --dialect singular b2.poset");
  golden_case("export_chain3", "export chain3.poset");
  golden_case("export_bad_dialect", "export --dialect maple b3.poset");
}

TEST_CASE("sweep") {
  golden_case("sweep", "sweep sweep.txt");
  golden_case("sweep_bad", "sweep sweep_bad.txt");
  // identical bytes regardless of worker count
  CHECK(run("sweep -j 4 sweep.txt").output == run("sweep -j 1 sweep.txt").output);
}

TEST_CASE("gen and cert") {
  golden_case("gen_atom_coatom_4", "gen atom_coatom 4");
  golden_case("gen_chain_product", "gen chain_product 2 3");
  golden_case("gen_bad", "gen boolean_lattice 0");
  golden_case("cert_four_atoms", "cert four_atoms.poset");
  golden_case("cert_k22", "cert k22.poset");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate x").exit_code == 2);
  CHECK(run("check --max-vertices 0 four_atoms.poset").exit_code == 2);
  CHECK(run("check --no-such-flag four_atoms.poset").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("file output matches stdout") {
  const std::string out = std::string(POSETCM_BINARY_DIR) + "/zdg_out.dot";
  CHECK(run("zdg four_atoms.poset -o '" + out + "'").exit_code == 0);
  CHECK(slurp(out) == run("zdg four_atoms.poset").output);
}
