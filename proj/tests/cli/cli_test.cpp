// End-to-end checks of the qfid binary: argv[1] is the path to the
// executable.  Exit code is the number of failed checks.
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

int failures = 0;
std::string qfid;
fs::path scratch;

void report(const char* name, bool pass, const std::string& detail = "") {
    std::printf("[%s] cli: %s%s%s\n", pass ? "PASS" : "FAIL", name,
                detail.empty() ? "" : " - ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
    const fs::path capture = scratch / "capture.txt";
    const std::string cmd = qfid + " " + args + " > " + capture.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(capture, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.output = buf.str();
    return r;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool contains(const std::string& s, const std::string& needle) {
    return s.find(needle) != std::string::npos;
}

void check_worked_pair_json() {
    const RunResult r = run("fidelity " + (scratch / "x06.json").string() + " " +
                            (scratch / "y06.json").string() + " --format json");
    bool pass = r.exit_code == 0;
    std::string detail;
    if (pass) {
        const auto j = nlohmann::json::parse(r.output, nullptr, false);
        pass = !j.is_discarded() && j.contains("triangle") &&
               std::abs(j["bures_fidelity"].get<double>() - 0.82) < 1e-12 &&
               std::abs(j["a_fidelity"].get<double>() - 0.81) < 1e-9 &&
               std::abs(j["alt_a_fidelity"].get<double>() - 0.81) < 1e-9 &&
               std::abs(j["trace_distance"].get<double>() - 0.3 * std::sqrt(2.0)) < 1e-12 &&
               std::abs(j["metrics"]["bures-angle"].get<double>() -
                        std::acos(std::sqrt(0.82))) < 1e-12 &&
               std::abs(j["triangle"]["cos2_half_defect"].get<double>() -
                        10.4976 / 10.6272) < 1e-12;
        detail = "F_B/F_A/triangle values from JSON output";
    } else {
        detail = "exit " + std::to_string(r.exit_code);
    }
    report("worked pair via --format json", pass, detail);
}

void check_same_file() {
    const std::string path = (scratch / "x06.json").string();
    const RunResult r = run("fidelity " + path + " " + path + " --format json");
    bool pass = r.exit_code == 0;
    if (pass) {
        const auto j = nlohmann::json::parse(r.output, nullptr, false);
        pass = !j.is_discarded() && std::abs(j["bures_fidelity"].get<double>() - 1.0) < 1e-12 &&
               std::abs(j["a_fidelity"].get<double>() - 1.0) < 1e-12 &&
               std::abs(j["alt_a_fidelity"].get<double>() - 1.0) < 1e-12 &&
               j["trace_distance"].get<double>() < 1e-12;
        if (pass)
            for (const auto& [key, value] : j["metrics"].items()) pass = pass && value.get<double>() < 1e-6;
    }
    report("identical files give unit fidelities and zero distances", pass);
}

void check_table_and_csv() {
    const std::string pair =
        (scratch / "x06.json").string() + " " + (scratch / "y06.json").string();
    const RunResult table = run("fidelity " + pair);
    const RunResult csv = run("fidelity " + pair + " --format csv");
    const bool pass = table.exit_code == 0 && contains(table.output, "bures_fidelity") &&
                      contains(table.output, "0.82") && contains(table.output, "phi_u") &&
                      csv.exit_code == 0 &&
                      contains(csv.output, "dim,bures_fidelity,a_fidelity,alt_a_fidelity") &&
                      contains(csv.output, "\n2,");
    report("table and csv formats", pass);
}

void check_fidelity_out_file() {
    const std::string pair =
        (scratch / "x06.json").string() + " " + (scratch / "y06.json").string();
    const fs::path out = scratch / "fid.json";
    const RunResult direct = run("fidelity " + pair + " --format json");
    const RunResult filed = run("fidelity " + pair + " --format json --out " + out.string());
    const bool pass = direct.exit_code == 0 && filed.exit_code == 0 &&
                      filed.output.empty() && read_file(out) == direct.output;
    report("--out file matches stdout bytes", pass);
}

void check_dim_mismatch() {
    const RunResult r = run("fidelity " + (scratch / "x06.json").string() + " " +
                            (scratch / "qutrit.json").string());
    const bool pass = r.exit_code == 2 && contains(r.output, "dimension mismatch") &&
                      contains(r.output, "2") && contains(r.output, "3");
    report("dimension mismatch exits 2 naming both dims", pass,
           "exit " + std::to_string(r.exit_code));
}

void check_malformed_file() {
    const RunResult r =
        run("fidelity " + (scratch / "garbage.json").string() + " " +
            (scratch / "x06.json").string());
    const bool pass =
        r.exit_code == 2 && contains(r.output, "error:") && contains(r.output, "garbage.json");
    report("malformed state file exits 2", pass, "exit " + std::to_string(r.exit_code));
}

void check_non_psd_file() {
    const RunResult r = run("fidelity " + (scratch / "nonpsd.json").string() + " " +
                            (scratch / "qutrit.json").string());
    const bool pass = r.exit_code == 2 && contains(r.output, "not positive semidefinite");
    report("non-psd state file exits 2", pass, "exit " + std::to_string(r.exit_code));
}

void check_verify_deterministic() {
    const fs::path out1 = scratch / "r1.json";
    const fs::path out2 = scratch / "r2.json";
    const std::string flags = "verify theorem1 --trials 2000 --seed 7 --out ";
    const RunResult a = run(flags + out1.string());
    const RunResult b = run(flags + out2.string());
    const std::string j1 = read_file(out1);
    bool pass = a.exit_code == 0 && b.exit_code == 0 && !j1.empty() && j1 == read_file(out2) &&
                contains(a.output, "theorem1") && contains(a.output, "0 violations");
    if (pass) {
        const auto j = nlohmann::json::parse(j1, nullptr, false);
        pass = !j.is_discarded() && j["name"] == "theorem1" && !contains(j1, "elapsed");
    }
    report("verify reruns write byte-identical JSON reports", pass);
}

void check_verify_experiments_pass() {
    const RunResult bound = run("verify bound --dim 3 --trials 500");
    const RunResult tri = run("verify triangle --metric ac-metric --dim 2 --trials 500");
    const RunResult sand = run("verify sandwich --dim 2 --trials 500 --measure bloch-uniform");
    const RunResult lim = run("verify limits --trials 500 --eps 0.1 0.05 0.025");
    const bool pass = bound.exit_code == 0 && contains(bound.output, "bound") &&
                      tri.exit_code == 0 && contains(tri.output, "ac-metric") &&
                      sand.exit_code == 0 && lim.exit_code == 0;
    report("verify runs exit 0 on clean experiments", pass);
}

void check_verify_csv_out() {
    const fs::path out = scratch / "r.csv";
    const RunResult r = run("verify theorem1 --trials 1000 --out " + out.string());
    const std::string csv = read_file(out);
    const bool pass =
        r.exit_code == 0 &&
        csv.rfind("name,dim,measure,trials,seed,tol,violations,marginal,min_margin,elapsed_s",
                  0) == 0;
    report("verify --out .csv writes the CSV report", pass);
}

void check_unknown_experiment() {
    const RunResult r = run("verify bogus");
    const bool pass = r.exit_code == 2 && contains(r.output, "bound") &&
                      contains(r.output, "triangle") && contains(r.output, "theorem1") &&
                      contains(r.output, "sandwich") && contains(r.output, "limits");
    report("unknown experiment exits 2 listing valid names", pass,
           "exit " + std::to_string(r.exit_code));
}

void check_violation_exit_code() {
    // a tolerance below round-off forces violations on an exact identity
    const RunResult r = run("verify theorem1 --trials 2000 --tolerance 1e-18");
    report("violations exit 1", r.exit_code == 1, "exit " + std::to_string(r.exit_code));
}

void check_usage_errors() {
    const RunResult missing = run("fidelity " + (scratch / "x06.json").string());
    const RunResult badflag = run("verify theorem1 --format yaml");
    const bool pass = missing.exit_code == 2 && badflag.exit_code == 2;
    report("usage errors exit 2", pass);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: cli_tests <path-to-qfid>\n");
        return 64;
    }
    qfid = argv[1];
    scratch = fs::temp_directory_path() / "qfid_cli_test";
    fs::remove_all(scratch);
    fs::create_directories(scratch);

    write_file(scratch / "x06.json", R"({"dim": 2, "bloch": [0.6, 0.0, 0.0]})");
    write_file(scratch / "y06.json", R"({"dim": 2, "bloch": [0.0, 0.6, 0.0]})");
    write_file(scratch / "qutrit.json",
               R"({"dim": 3, "bloch": [0.1, 0, 0, 0, 0, 0, 0, 0]})");
    // unit weight on the first diagonal generator: valid norm, negative eigenvalue
    write_file(scratch / "nonpsd.json",
               R"({"dim": 3, "bloch": [0, 0, 0, 0, 0, 0, 1.0, 0]})");
    write_file(scratch / "garbage.json", "not json {{{");

    check_worked_pair_json();
    check_same_file();
    check_table_and_csv();
    check_fidelity_out_file();
    check_dim_mismatch();
    check_malformed_file();
    check_non_psd_file();
    check_verify_deterministic();
    check_verify_experiments_pass();
    check_verify_csv_out();
    check_unknown_experiment();
    check_violation_exit_code();
    check_usage_errors();

    fs::remove_all(scratch);
    std::printf("%d cli check(s) failed\n", failures);
    return failures;
}
