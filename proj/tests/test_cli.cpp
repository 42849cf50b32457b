#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// input, when given, is fed to stdin through a scratch file.
Run apexctl(const std::string& args, const std::string& input = "") {
  std::string cmd = std::string(APEXCTL_PATH) + " " + args + " 2>/dev/null";
  if (!input.empty()) {
    const std::string path = (std::filesystem::temp_directory_path() / "apexctl_stdin.txt").string();
    std::ofstream(path) << input;
    cmd += " < " + path;
  }
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("planar verdicts and exit codes") {
  const Run k5 = apexctl("planar 'D~{'");
  CHECK(k5.status == 1);
  const auto j = nlohmann::json::parse(k5.out);
  CHECK(j["planar"] == false);
  CHECK(j["witness"]["kind"] == "K5");
  const Run c5 = apexctl("planar Dhc");
  CHECK(c5.status == 0);
  CHECK(nlohmann::json::parse(c5.out)["embedding"].size() == 5);
}

TEST_CASE("apex") {
  CHECK(apexctl("apex 'MhEGHC@AI?_PC@_G_' --n 2").status == 1);
  const Run r = apexctl("apex 'MhEGHC@AI?_PC@_G_' --n 3 --witness");
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["witness"].size() == 3);
}

TEST_CASE("simplify") {
  const Run r = apexctl("simplify Dhc");
  CHECK(r.status == 0);
  CHECK(r.out == "?\n");
}

TEST_CASE("minor and near") {
  CHECK(apexctl("minor 'IheA@GUAo' 'D~{' --model").status == 0);
  CHECK(apexctl("minor 'IheA@GUAo' 'F~~~w'").status == 1);
  // Petersen minus a vertex simplifies to K3,3 and the vertex is near all of it.
  CHECK(apexctl("near 'IheA@GUAo' 0").status == 0);
  CHECK(apexctl("near 'D~{' 0").status == 64);
}

TEST_CASE("batch mode") {
  const Run r = apexctl("planar --batch", "Dhc\nD~{\nEFz_\n");
  CHECK(r.status == 1);
  int lines = 0;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) {
    CHECK(nlohmann::json::parse(line).contains("planar"));
    ++lines;
  }
  CHECK(lines == 3);
  CHECK(apexctl("simplify --batch", "Dhc\nEFz_\n").out == "?\nEFz_\n");
}

TEST_CASE("family catalogs") {
  CHECK(apexctl("family petersen --names").out == read_file(std::string(APX_DATA_DIR) + "/petersen.g6"));
  CHECK(apexctl("family heawood --names").out == read_file(std::string(APX_DATA_DIR) + "/heawood.g6"));
  const auto j = nlohmann::json::parse(apexctl("family heawood").out);
  CHECK(j["members"].size() == 20);
  CHECK(apexctl("family nope").status == 64);
}

TEST_CASE("enumerate") {
  const Run r = apexctl("enumerate --vertices 8 --regular 4");
  CHECK(r.status == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
  const Run np = apexctl("enumerate --vertices 7 --edges 11 --min-degree 2 --nonplanar");
  CHECK(std::count(np.out.begin(), np.out.end(), '\n') == 5);
  CHECK(apexctl("enumerate --vertices 5 --regular 3").status == 64);
}

TEST_CASE("search reports are byte-stable") {
  const Run a = apexctl("search --property na --max-edges 15 --vertices 6..7 --no-timing");
  const Run b = apexctl("search --property na --max-edges 15 --vertices 6..7 --no-timing");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["schema"] == 1);
  CHECK(j["members"].size() == 3);
  CHECK(!j.contains("elapsed_ms"));
  CHECK(nlohmann::json::parse(apexctl("search --property na --max-edges 15 --vertices 6").out).contains("elapsed_ms"));
  const Run seq = apexctl("search --property n2a --max-edges 21 --degree-sequence '3^14' --no-timing");
  CHECK(nlohmann::json::parse(seq.out)["members"][0]["name"] == "Heawood");
  CHECK(apexctl("search --property n2a --max-edges 21").status == 64);
}

TEST_CASE("verify") {
  const Run r = apexctl("verify lemma-da3");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["environment"]["jobs"] == 1);
  CHECK(apexctl("verify petersen-mmna").out == apexctl("verify petersen-mmna").out);
  CHECK(apexctl("verify no-such-tag").status == 64);
}

TEST_CASE("usage and parse errors") {
  CHECK(apexctl("").status == 64);
  CHECK(apexctl("frobnicate").status == 64);
  CHECK(apexctl("planar 'D~'").status == 65);
  CHECK(apexctl("apex 'D~{' --n -1").status == 64);
  CHECK(apexctl("planar '~?@@'").status == 65);
  CHECK(apexctl("--help").status == 0);
  CHECK(apexctl("--version").out.find("apexctl") == 0);
  CHECK(std::system((std::string("APEXCTL_JOBS=zero ") + APEXCTL_PATH + " verify lemma-da3 >/dev/null 2>&1").c_str()) != 0);
}
