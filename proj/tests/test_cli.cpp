// End-to-end tests of the command-line binary: exit codes, CSV/JSON/SVG
// output shapes, frozen table values, error paths, and byte-determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

std::string tmp_dir() {
  static std::string dir = [] {
    std::filesystem::path p = std::filesystem::temp_directory_path() /
                              ("equifocal_cli_" + std::to_string(getpid()));
    std::filesystem::create_directories(p);
    return p.string();
  }();
  return dir;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  f << content;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::string& args) {
  static int counter = 0;
  std::string base = tmp_dir() + "/run" + std::to_string(counter++);
  std::string cmd = std::string(EQUIFOCAL_BIN) + " " + args + " > " + base +
                    ".out 2> " + base + ".err";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_file(base + ".out");
  r.err = read_file(base + ".err");
  return r;
}

// Minimal RFC 4180 reader: CRLF records, quoted fields with doubled quotes.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> cur;
  std::string field;
  bool in_quotes = false;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      cur.push_back(field);
      field.clear();
    } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      cur.push_back(field);
      field.clear();
      rows.push_back(cur);
      cur.clear();
      ++i;
    } else {
      field += c;
    }
  }
  if (!field.empty() || !cur.empty()) {
    cur.push_back(field);
    rows.push_back(cur);
  }
  return rows;
}

size_t count_occurrences(const std::string& text, const std::string& needle) {
  size_t count = 0;
  for (size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++count;
  return count;
}

const char* kTable1Header =
    "label,name,rank,n_pos,n_mult1,m,expected_n_pos,expected_n_mult1,"
    "expected_m,match";

}  // namespace

TEST_CASE("table1 reproduces the shipped catalog") {
  std::string out = tmp_dir() + "/table1.csv";
  RunResult r = run("table1 --out " + out);
  REQUIRE(r.exit_code == 0);
  auto rows = parse_csv(read_file(out));
  REQUIRE(rows.size() >= 31);
  REQUIRE(rows[0].size() == 10);
  std::string header;
  for (size_t i = 0; i < rows[0].size(); ++i)
    header += (i ? "," : "") + rows[0][i];
  CHECK(header == kTable1Header);
  for (size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(rows[i].size() == 10);
    CHECK(rows[i][9] == "1");
    CHECK(rows[i][3] == rows[i][6]);
    CHECK(rows[i][4] == rows[i][7]);
    CHECK(rows[i][5] == rows[i][8]);
  }
}

TEST_CASE("table1 flags a corrupted multiplicity and exits 1") {
  nlohmann::json doc =
      nlohmann::json::parse(read_file(std::string(TEST_DATA_DIR) +
                                      "/symmetric_spaces.json"));
  doc["families"][0]["cases"][0]["multiplicities"]["all"] = "2";
  std::string catalog = tmp_dir() + "/corrupt.json";
  write_file(catalog, doc.dump());
  std::string out = tmp_dir() + "/corrupt.csv";
  RunResult r = run("table1 --catalog " + catalog + " --out " + out);
  CHECK(r.exit_code == 1);
  auto rows = parse_csv(read_file(out));
  size_t flagged = 0, clean = 0;
  for (size_t i = 1; i < rows.size(); ++i)
    (rows[i][9] == "0" ? flagged : clean)++;
  CHECK(flagged >= 1);
  CHECK(clean >= 1);
}

TEST_CASE("table1 accepts an empty catalog as a header-only success") {
  std::string catalog = tmp_dir() + "/empty.json";
  write_file(catalog, "{\"schema\": {}, \"families\": []}");
  std::string out = tmp_dir() + "/empty.csv";
  RunResult r = run("table1 --catalog " + catalog + " --out " + out);
  CHECK(r.exit_code == 0);
  CHECK(read_file(out) == std::string(kTable1Header) + "\r\n");
}

TEST_CASE("table1 reports a missing catalog on standard error") {
  RunResult r = run("table1 --catalog /nonexistent/nope.json");
  CHECK(r.exit_code == 2);
  CHECK(!r.err.empty());
}

TEST_CASE("hermann reproduces the action catalog") {
  std::string out = tmp_dir() + "/hermann.csv";
  RunResult r = run("hermann --out " + out);
  REQUIRE(r.exit_code == 0);
  auto rows = parse_csv(read_file(out));
  REQUIRE(rows.size() == 121);  // header + 120 actions
  bool saw_so16 = false, saw_sp4c = false;
  for (size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(rows[i].size() == 7);
    CHECK(rows[i][6] == "1");
    if (rows[i][1] == "SO'(16)") {
      saw_so16 = true;
      CHECK(rows[i][4] == "120");
    }
    if (rows[i][1] == "Sp(4,C)") {
      saw_sp4c = true;
      CHECK(rows[i][4] == "72");
    }
  }
  CHECK(saw_so16);
  CHECK(saw_sp4c);
}

TEST_CASE("arrange emits the arrangement of the rank-2 isotropy action") {
  std::string out = tmp_dir() + "/arrange.csv";
  std::string svg = tmp_dir() + "/arrange.svg";
  RunResult r = run("arrange --space AI --params n=3 --action 'SO(3)' "
                    "--xi 1,2 --j-range -1..1 --out " +
                    out + " --svg " + svg);
  REQUIRE(r.exit_code == 0);
  auto rows = parse_csv(read_file(out));
  REQUIRE(rows.size() == 10);  // header + 3 families x 3 levels
  // Pairing coordinates (1,2) give simple-root levels -1 and -2, and -3 on
  // their sum; every family here is vertical, hence an integer one.
  std::vector<std::string> offsets;
  for (size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i][2] == "integer_pi");
    if (rows[i][4] == "0") {
      offsets.push_back(rows[i][3]);
      CHECK(rows[i][5] == rows[i][3]);  // real part equals the offset
      CHECK(rows[i][6] == "0");         // the j = 0 slice is real
    }
  }
  CHECK(offsets == std::vector<std::string>{"-1", "-2", "-3"});

  std::string svg_text = read_file(svg);
  CHECK(count_occurrences(svg_text, "<line ") == 3);
  CHECK(count_occurrences(svg_text, "<circle ") == 1);
  std::set<std::string> strokes;
  for (size_t pos = svg_text.find("stroke=\""); pos != std::string::npos;
       pos = svg_text.find("stroke=\"", pos + 1))
    strokes.insert(svg_text.substr(pos + 8, svg_text.find('"', pos + 8) -
                                                (pos + 8)));
  CHECK(strokes.size() == 3);
}

TEST_CASE("arrange restricted to j = 0 emits the real slice only") {
  std::string out = tmp_dir() + "/arrange0.csv";
  RunResult r = run("arrange --space AI --params n=3 --action 'SO(3)' "
                    "--xi 1,2 --j-range 0..0 --out " +
                    out);
  REQUIRE(r.exit_code == 0);
  auto rows = parse_csv(read_file(out));
  REQUIRE(rows.size() == 4);
  for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][6] == "0");
}

TEST_CASE("arrange rejects aggregate-only data and unknown spaces") {
  RunResult r = run("arrange --space EI --action 'Sp(4,R)' --xi 1,1,1,1,1,1");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("insufficient split data") != std::string::npos);
  r = run("arrange --space NOPE --action 'SO(3)' --xi 1,2");
  CHECK(r.exit_code == 2);
  r = run("arrange --space AI --params n=4 --action 'SO(4)' --xi 1,1,1 "
          "--svg " +
          tmp_dir() + "/no.svg");
  CHECK(r.exit_code == 2);  // SVG needs rank 2
}

TEST_CASE("spectra emits values and distinct counts") {
  std::string out = tmp_dir() + "/spectra.csv";
  RunResult r = run("spectra --space AI --params n=3 --action 'SO(3)' "
                    "--xi 1,2 --eta 1,2 --out " +
                    out);
  REQUIRE(r.exit_code == 0);
  auto rows = parse_csv(read_file(out));
  REQUIRE(rows.size() == 4);
  for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][0] == "vertical");
  // Vertical values -b(eta)/tanh(b(xi)) at pairings 1, 2, 3.
  for (size_t i = 1; i < rows.size(); ++i) {
    double b = static_cast<double>(i);
    CHECK(std::stod(rows[i][3]) ==
          doctest::Approx(-b / std::tanh(b)).epsilon(1e-12));
  }
  r = run("spectra --space AI --params n=3 --action 'SO(3)' --xi 1,2 "
          "--eta 1,2 --distinct");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["distinct"] == 3);
  CHECK(j["max"] == 3);
}

TEST_CASE("focal-radii emits the closed-form branch") {
  RunResult r = run("focal-radii --lambda 2 --beta 1 --j-range 0..1");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("0.5493061443340548") != std::string::npos);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1][0] == "integer_pi");
  CHECK(rows[1][3] == "0");
  CHECK(rows[2][3] == "3.141592653589793");
  r = run("focal-radii --lambda 2 --beta -1");
  CHECK(r.exit_code == 2);
}

TEST_CASE("roots-check reports the axioms") {
  RunResult r = run("roots-check --type G2 --rank 2");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["roots"] == 12);
  CHECK(j["positive"] == 6);
  CHECK(j["reflection_closed"] == true);
  CHECK(j["pairings_integral"] == true);
  CHECK(j["no_scaled_pairs"] == true);
  CHECK(j["weakly_closed"] == true);
  r = run("roots-check --type Z9 --rank 2");
  CHECK(r.exit_code == 2);
}

TEST_CASE("weyl-order verifies the closure order") {
  RunResult r = run("weyl-order --type B --rank 3 --brute-force");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["order"] == 48);
  CHECK(j["closure_order"] == 48);
  CHECK(j["match"] == true);
}

TEST_CASE("oracle passes on supported models and rejects oversized ones") {
  RunResult r = run("oracle --model sl_n_R --n 4 --trials 30");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["model"] == "sl(4,R)");
  CHECK(j["pass"] == true);
  CHECK(j["spectrum_ok"] == true);
  CHECK(j["transport_ok"] == true);
  CHECK(j["focal_ok"] == true);
  CHECK(j["commuting_ok"] == true);

  r = run("oracle --model so_p_q --p 2 --q 3 --trials 30");
  REQUIRE(r.exit_code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["model"] == "so(2,3)");
  CHECK(j["pass"] == true);

  r = run("oracle --model sl_n_R --n 50");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("model too large") != std::string::npos);

  r = run("oracle --model sl_n_R");
  CHECK(r.exit_code == 2);
}

TEST_CASE("fixed seeds give byte-identical output") {
  std::string out1 = tmp_dir() + "/det1.csv";
  std::string out2 = tmp_dir() + "/det2.csv";
  REQUIRE(run("table1 --out " + out1).exit_code == 0);
  REQUIRE(run("table1 --out " + out2).exit_code == 0);
  CHECK(read_file(out1) == read_file(out2));

  RunResult a = run("oracle --model so_p_q --p 2 --q 2 --seed 7 --trials 20");
  RunResult b = run("oracle --model so_p_q --p 2 --q 2 --seed 7 --trials 20");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("a missing subcommand is a usage error") {
  RunResult r = run("");
  CHECK(r.exit_code == 2);
}
