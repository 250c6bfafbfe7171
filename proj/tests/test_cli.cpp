// End-to-end exercises for the command-line tool. Takes the binary path as
// argv[1]; each scenario shells out and checks exit codes and output bytes.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void check(bool ok, const std::string& what) {
  if (!ok) {
    ++g_failures;
    std::cerr << "FAILED: " << what << "\n";
  }
}

struct Run {
  int exit_code;
  std::string out;
};

Run run(const std::string& cmd, bool merge_stderr = false) {
  std::string full = cmd + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  fs::path dir = fs::temp_directory_path() /
                 ("dispersal_cli_" + std::to_string(getpid()));
  fs::create_directories(dir);
  auto in_dir = [&](const std::string& name) { return (dir / name).string(); };

  // gen writes canonical graph JSON
  {
    auto r = run(cli + " gen grid 2 7 --out " + in_dir("g27.json"));
    check(r.exit_code == 0, "gen grid exits 0");
    std::string text = slurp(dir / "g27.json");
    check(text.find("\"n\":14") != std::string::npos, "gen grid n=14");
    check(text.back() == '\n', "gen output ends with newline");
  }

  // label emits the reference labelling, byte-stable across runs
  {
    auto first = run(cli + " label grid 2 7");
    check(first.exit_code == 0, "label grid exits 0");
    check(first.out ==
              "{\"n\":14,\"order\":[10,0,11,1,12,2,13,3,7,4,8,5,9,6]}\n",
          "label grid 2 7 bytes");
    auto second = run(cli + " label grid 2 7");
    check(first.out == second.out, "label output is deterministic");
  }

  // label reports the measured dispersion on stderr
  {
    auto r = run(cli + " label cbt 3 --out /dev/null", /*merge_stderr=*/true);
    check(r.exit_code == 0, "label cbt exits 0");
    check(r.out.find("\"linear_k\":3") != std::string::npos,
          "label cbt reports k=3, got: " + r.out);
  }

  // gen | solve round trip
  {
    run(cli + " gen grid 4 6 --out " + in_dir("g46.json"));
    auto r = run(cli + " solve " + in_dir("g46.json"));
    check(r.exit_code == 0, "solve exits 0");
    check(r.out.find("\"value\":4") != std::string::npos,
          "solve grid 4x6 value 4, got: " + r.out);
  }

  // verify the labelling we just generated
  {
    run(cli + " label grid 2 7 --out " + in_dir("lab27.json"));
    auto r = run(cli + " verify " + in_dir("g27.json") + " " +
                 in_dir("lab27.json"));
    check(r.exit_code == 0, "verify exits 0");
    check(r.out.find("\"linear_k\":4") != std::string::npos, "verify linear 4");
    check(r.out.find("\"circular_k\":4") != std::string::npos,
          "verify circular 4");
  }

  // circular solve
  {
    run(cli + " gen path 4 --out " + in_dir("p4.json"));
    auto r = run(cli + " solve --circular " + in_dir("p4.json"));
    check(r.exit_code == 0, "circular solve exits 0");
    check(r.out.find("\"value\":2") != std::string::npos,
          "circular solve path 4 value 2");
  }

  // bound prints JSON on stdout
  {
    run(cli + " gen hypercube 3 --out " + in_dir("q3.json"));
    auto r = run(cli + " bound " + in_dir("q3.json"));
    check(r.exit_code == 0, "bound exits 0");
    check(r.out.find("\"best_lower\":2") != std::string::npos, "bound lower 2");
    check(r.out.find("\"best_upper\":2") != std::string::npos, "bound upper 2");
  }

  // product generation
  {
    auto r = run(cli + " gen product cycle:3 path:4");
    check(r.exit_code == 0, "gen product exits 0");
    check(r.out.find("\"n\":15") != std::string::npos, "product has 15 vertices");
  }

  // cycle labelling measured through the CLI
  {
    auto r = run(cli + " label cycle 10 --out /dev/null", /*merge_stderr=*/true);
    check(r.exit_code == 0, "label cycle exits 0");
    check(r.out.find("\"linear_k\":4") != std::string::npos,
          "label cycle 10 reports k=4");
  }

  // circular product labelling end to end
  {
    auto r = run(cli + " label product path:4 path:6 --out /dev/null",
                 /*merge_stderr=*/true);
    check(r.exit_code == 0, "label product exits 0");
    check(r.out.find("\"circular_k\":5") != std::string::npos,
          "product of circular paths reaches circular k=5, got: " + r.out);
  }

  // DOT exports
  {
    run(cli + " label cbt 2 --out " + in_dir("labt2.json") + " --dot " +
        in_dir("t2.dot"));
    std::string dot = slurp(dir / "t2.dot");
    check(dot.find("graph") != std::string::npos, "--dot writes a graph");
    check(dot.find("fillcolor") != std::string::npos, "--dot colors labels");
    run(cli + " gen cbt 2 --out " + in_dir("t2.json"));
    auto r = run(cli + " export-dot " + in_dir("t2.json") + " " +
                 in_dir("labt2.json"));
    check(r.exit_code == 0, "export-dot exits 0");
    check(r.out.find("label=") != std::string::npos,
          "export-dot annotates labels");
  }

  // input errors exit 2
  {
    check(run(cli + " gen dodecahedron 5").exit_code == 2,
          "unknown family exits 2");
    check(run(cli + " gen grid 2").exit_code == 2, "missing parameter exits 2");
    check(run(cli + " solve " + in_dir("missing.json")).exit_code == 2,
          "missing file exits 2");
    std::ofstream bad(dir / "bad.json");
    bad << "{\"n\":3,\"order\":[0,1,1]}\n";
    bad.close();
    check(run(cli + " verify " + in_dir("g27.json") + " " +
              in_dir("bad.json")).exit_code == 2,
          "non-permutation labelling exits 2");
    std::ofstream split(dir / "split.json");
    split << "{\"edges\":[[0,1],[2,3]],\"n\":4}\n";
    split.close();
    check(run(cli + " solve " + in_dir("split.json")).exit_code == 2,
          "disconnected graph exits 2");
  }

  // exhausted budgets exit 3
  {
    check(run(cli + " solve --budget-ms 0 " + in_dir("g46.json")).exit_code ==
              3,
          "zero budget exits 3");
  }

  fs::remove_all(dir);
  if (g_failures == 0) {
    std::cout << "cli: all scenarios passed\n";
    return 0;
  }
  std::cerr << "cli: " << g_failures << " scenario(s) failed\n";
  return 1;
}
