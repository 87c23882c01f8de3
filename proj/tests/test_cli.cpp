#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "../vendor/doctest.h"
#include "../vendor/json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
    int exit_code;
    std::string out;
};

// Run the binary with stderr dropped; stdout and the exit code come back.
RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + std::string(CONTESTLAB_BIN) + " " + args +
                            " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "contestlab_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string write_config(const std::string& name, const std::string& body) {
    const fs::path p = scratch_dir() / name;
    std::ofstream(p) << body;
    return p.string();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

const char* kQuartic =
    R"({"n":3,"m":2,"lambda":1.0,"F":{"kind":"power","alpha":4},"c":{"kind":"affine","a":0.5,"b":0.1111111111111111}})";
const char* kUniform =
    R"({"n":2,"m":1,"lambda":1.0,"F":{"kind":"uniform"},"c":{"kind":"affine","a":0.5,"b":0.0}})";

}  // namespace

TEST_CASE("cli: gain evaluation and version") {
    const std::string cfg = write_config("uniform.json", kUniform);

    const RunResult ver = run_cli("--version");
    CHECK(ver.exit_code == 0);
    CHECK(ver.out.find("0.1.0") != std::string::npos);

    const RunResult r = run_cli("phi --config " + cfg + " --v 0.75 --s 0.5");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.at("s").get<double>() == 0.5);
    CHECK(std::abs(doc.at("phi").get<double>()) <= 1e-15);

    const RunResult std_v = run_cli("phi --config " + cfg + " --s 0.5");
    const json doc2 = json::parse(std_v.out);
    CHECK(doc2.at("phi").get<double>() == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("cli: equilibria of the quartic instance") {
    const std::string cfg = write_config("quartic.json", kQuartic);
    const RunResult r = run_cli("equilibria --config " + cfg);
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    const auto& eqs = doc.at("equilibria");
    REQUIRE(eqs.size() == 3);
    CHECK(eqs[0].at("kind") == "interior");
    CHECK(eqs[0].at("s").get<double>() ==
          doctest::Approx(0.479764476987099).epsilon(1e-9));
    CHECK(eqs[1].at("s").get<double>() ==
          doctest::Approx(0.918093791353583).epsilon(1e-9));
    CHECK(eqs[2].at("kind") == "boundary_one");
}

TEST_CASE("cli: feasible intervals") {
    const std::string cfg = write_config("quartic.json", kQuartic);
    const RunResult r = run_cli("feasible --config " + cfg);
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    const auto& iv = doc.at("intervals");
    REQUIRE(iv.size() == 2);
    CHECK(iv[0][0].get<double>() == 0.0);
    CHECK(iv[0][1].get<double>() == doctest::Approx(0.479764476987099).epsilon(1e-9));
    CHECK(iv[1][0].get<double>() == doctest::Approx(0.918093791353583).epsilon(1e-9));
    CHECK(iv[1][1].get<double>() == 1.0);

    // explicit bounds spanning the whole design space: everything feasible
    const std::string ucfg = write_config("uniform.json", kUniform);
    const RunResult full =
        run_cli("feasible --config " + ucfg + " --vmin reversed --vmax standard");
    const json fdoc = json::parse(full.out);
    REQUIRE(fdoc.at("intervals").size() == 1);
    CHECK(fdoc.at("intervals")[0][0].get<double>() == 0.0);
    CHECK(fdoc.at("intervals")[0][1].get<double>() == 1.0);
}

TEST_CASE("cli: optimizer output and mechanism hints") {
    const std::string cfg = write_config("uniform.json", kUniform);

    const RunResult bare = run_cli("optimize --config " + cfg);
    REQUIRE(bare.exit_code == 0);
    const json doc = json::parse(bare.out);
    CHECK(doc.at("t").is_null());
    CHECK(doc.at("payoff").get<double>() >= 0.0);

    const RunResult hinted = run_cli("optimize --config " + cfg + " --family quota");
    REQUIRE(hinted.exit_code == 0);
    const json hdoc = json::parse(hinted.out);
    CHECK(hdoc.at("t").is_number());
    const double t = hdoc.at("t").get<double>();
    CHECK(t >= 0.0);
    CHECK(t <= 1.0);
    // same optimum either way
    CHECK(doc.at("s_star").get<double>() ==
          doctest::Approx(hdoc.at("s_star").get<double>()).epsilon(1e-12));
}

TEST_CASE("cli: mechanism synthesis") {
    const std::string cfg = write_config("uniform.json", kUniform);
    const RunResult r =
        run_cli("mechanism --config " + cfg + " --family quota --target-s 0.5");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.at("t").get<double>() == doctest::Approx(0.75).epsilon(1e-9));
}

TEST_CASE("cli: simulation report and seed sources") {
    const std::string cfg = write_config("uniform.json", kUniform);
    const std::string args =
        "simulate --config " + cfg + " --mechanism quota:0.75 --s 0.5 --trials 20000";

    const RunResult a = run_cli(args + " --seed 9");
    REQUIRE(a.exit_code == 0);
    const json doc = json::parse(a.out);
    CHECK(doc.at("trials").get<long>() == 20000);
    CHECK(doc.at("seed").get<long>() == 9);
    CHECK(doc.at("exact_m_violations").get<long>() == 0);
    CHECK(doc.at("bound_violations").get<long>() == 0);
    const double c_hat = doc.at("C_hat").get<double>();
    const double c_se = doc.at("C_se").get<double>();
    CHECK(std::abs(c_hat - 0.0625) <= 4.0 * c_se);

    // the environment seed is a fallback for the flag
    const RunResult b = run_cli(args, "CONTESTLAB_SEED=9");
    CHECK(b.out == a.out);
    const RunResult c = run_cli(args + " --seed 10", "CONTESTLAB_SEED=9");
    CHECK(c.out != a.out);  // explicit flag wins

    // byte-identical reruns across thread counts
    const RunResult t1 = run_cli(args + " --seed 4 --threads 1");
    const RunResult t4 = run_cli(args + " --seed 4 --threads 4");
    CHECK(t1.out == t4.out);
}

TEST_CASE("cli: deviation audit artifact") {
    const std::string cfg = write_config("uniform.json", kUniform);
    const fs::path csv = scratch_dir() / "audit.csv";
    const RunResult r = run_cli("simulate --config " + cfg +
                                " --mechanism quota:0.75 --s 0.5 --trials 20000" +
                                " --seed 3 --audit " + csv.string());
    REQUIRE(r.exit_code == 0);
    const std::string body = slurp(csv);
    CHECK(body.rfind("theta,prescribed_high,gain,se", 0) == 0);
    // 21 probes + the marginal type, which equals a grid point here
    int lines = 0;
    for (char ch : body) lines += (ch == '\n');
    CHECK(lines == 22);
}

TEST_CASE("cli: frontier curve artifact") {
    const std::string cfg = write_config("uniform.json", kUniform);
    const fs::path csv = scratch_dir() / "curve.csv";
    const RunResult r =
        run_cli("curve --config " + cfg + " --grid 64 --out " + csv.string());
    REQUIRE(r.exit_code == 0);
    const json manifest = json::parse(r.out);
    CHECK(manifest.at("outputs")[0].get<std::string>() == csv.string());
    CHECK(manifest.at("config_hash").is_string());

    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "s,C,eta,dEta_dC");
    // spot-check one early interior row against closed forms:
    // C = s^2/4, eta = 2 s^2 (1-s) ... with c = s/2: eta = (n/m) c s(1-s) / mu... = 2 s^2 (1-s)
    std::string row;
    std::getline(in, row);  // s = 0 row: derivative column is nan
    CHECK(row.substr(0, 2) == "0,");
    CHECK(row.find("nan") != std::string::npos);
}

TEST_CASE("cli: reproduction bundles carry the frozen landmarks") {
    const fs::path dir = scratch_dir() / "repro";
    fs::create_directories(dir);

    SUBCASE("gain curves and intervals") {
        const RunResult r = run_cli("reproduce-fig1 --out-dir " + dir.string());
        REQUIRE(r.exit_code == 0);
        const json feas = json::parse(slurp(dir / "fig1_feasible.json"));
        const auto& iv = feas.at("intervals");
        REQUIRE(iv.size() == 2);
        CHECK(iv[0][1].get<double>() == doctest::Approx(0.479764476987099).epsilon(1e-6));
        CHECK(iv[1][0].get<double>() == doctest::Approx(0.918093791353583).epsilon(1e-6));

        std::ifstream in(dir / "fig1_phi.csv");
        std::string header;
        std::getline(in, header);
        CHECK(header == "s,phi_standard,phi_reversed");
        int rows = 0;
        std::string line;
        while (std::getline(in, line)) ++rows;
        CHECK(rows == 1001);
    }

    SUBCASE("envelope bridges") {
        const RunResult r = run_cli("reproduce-fig2 --out-dir " + dir.string());
        REQUIRE(r.exit_code == 0);
        const json hull = json::parse(slurp(dir / "fig2_hull.json"));
        const auto& gap = hull.at("gap_bridge");
        CHECK(gap.at("lo").get<double>() == doctest::Approx(0.05).epsilon(1e-6));
        CHECK(gap.at("hi").get<double>() == doctest::Approx(0.15).epsilon(1e-6));
        CHECK(gap.at("slope").get<double>() == doctest::Approx(1.7846).epsilon(1e-3));
        const auto& dip = hull.at("dip_bridge");
        CHECK(dip.at("lo").get<double>() ==
              doctest::Approx(0.164229646863546).epsilon(1e-3));
        CHECK(dip.at("hi").get<double>() ==
              doctest::Approx(0.703325683607446).epsilon(1e-3));
        CHECK(dip.at("slope").get<double>() ==
              doctest::Approx(0.327517902624334).epsilon(1e-3));
    }
}

TEST_CASE("cli: sweep artifact with trend verdict") {
    const fs::path csv = scratch_dir() / "sweep.csv";
    const RunResult r = run_cli(
        "sweep --family alpha=1,gamma=1,eps=1 --over lambda:0.1:3:9 --n 2 --m 1 --out " +
        csv.string());
    REQUIRE(r.exit_code == 0);
    const json manifest = json::parse(r.out);
    CHECK(manifest.at("expected_trend") == "decreasing");
    CHECK(manifest.at("trend_holds").get<bool>());

    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "value,s_star_raw,s_star,s_max,s_solution,C,eta,payoff");
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 9);
}

TEST_CASE("cli: identical commands give identical bytes") {
    const std::string cfg = write_config("quartic.json", kQuartic);
    const RunResult a = run_cli("equilibria --config " + cfg);
    const RunResult b = run_cli("equilibria --config " + cfg);
    CHECK(a.out == b.out);
    const RunResult oa = run_cli("optimize --config " + cfg);
    const RunResult ob = run_cli("optimize --config " + cfg);
    CHECK(oa.out == ob.out);
}

TEST_CASE("cli: invalid inputs exit with code 1") {
    CHECK(run_cli("phi --config /nonexistent.json --s 0.5").exit_code == 1);
    CHECK(run_cli("equilibria").exit_code == 1);  // --config is required
    CHECK(run_cli("frobnicate").exit_code == 1);
    const std::string cfg = write_config("uniform.json", kUniform);
    CHECK(run_cli("phi --config " + cfg + " --s 0.5 --bogus-flag 1").exit_code == 1);
    CHECK(run_cli("phi --config " + cfg + " --s 1.5").exit_code == 1);

    const std::string bad_json = write_config("bad.json", "{\"n\": 2,");
    CHECK(run_cli("phi --config " + bad_json + " --s 0.5").exit_code == 1);

    const std::string bad_m = write_config(
        "badm.json",
        R"({"n":2,"m":2,"lambda":1.0,"F":{"kind":"uniform"},"c":{"kind":"affine","a":0.5,"b":0.0}})");
    CHECK(run_cli("equilibria --config " + bad_m).exit_code == 1);

    const std::string unknown_key = write_config(
        "extra.json",
        R"({"n":2,"m":1,"lambda":1.0,"F":{"kind":"uniform"},"c":{"kind":"affine","a":0.5,"b":0.0},"zeta":3})");
    CHECK(run_cli("equilibria --config " + unknown_key).exit_code == 1);

    // vmin/vmax must come together
    CHECK(run_cli("feasible --config " + cfg + " --vmin reversed").exit_code == 1);

    // malformed mechanism spec
    CHECK(run_cli("phi --config " + cfg + " --mechanism quota:1.5 --s 0.5").exit_code == 1);

    // --v and --mechanism are mutually exclusive
    CHECK(run_cli("phi --config " + cfg + " --v 0.75 --mechanism standard --s 0.5")
              .exit_code == 1);

    // help exits cleanly
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("phi --help").exit_code == 0);
}
