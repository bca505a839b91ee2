#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int status;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int status = scsp::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SCSP_DATA_DIR) + "/" + name; }

fs::path temp_dir() {
    fs::path dir = fs::temp_directory_path() / "scsp_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("validate prints ok for the shipped structures") {
    for (const char* name : {"or.struct", "1in3.struct", "neq3.struct"}) {
        RunResult r = run({"validate", data(name)});
        CHECK(r.status == 0);
        CHECK(r.out == "ok\n");
    }
}

TEST_CASE("cautious prints the verdict and witness") {
    RunResult yes = run({"cautious", data("1in3.struct")});
    CHECK(yes.status == 0);
    CHECK(yes.out == "yes\n");

    RunResult no = run({"cautious", data("or.struct")});
    CHECK(no.status == 0);
    CHECK(no.out == "no\nwitness (1,1)\n");
}

TEST_CASE("reduce prints the example counts and emits a consumable instance") {
    fs::path out_path = temp_dir() / "triple.scsp";
    fs::path report_path = temp_dir() / "triple.report";
    RunResult r = run({"reduce", data("1in3.struct"), data("triple.csp"), "-o", out_path.string(),
                       "--report", report_path.string()});
    CHECK(r.status == 0);
    CHECK(r.out == "vars 8\natoms 28\n");
    std::string report = slurp(report_path);
    CHECK(report.find("premise cautious") != std::string::npos);
    CHECK(report.find("prelim-vars 8") != std::string::npos);

    RunResult solve = run({"solve-scsp", data("1in3.struct"), out_path.string()});
    CHECK(solve.status == 0);
    CHECK(solve.out.substr(0, 4) == "yes\n");
}

TEST_CASE("solve subcommands print yes and no verdicts") {
    RunResult yes = run({"solve-csp", data("1in3.struct"), data("triple.csp")});
    CHECK(yes.status == 0);
    CHECK(yes.out.substr(0, 4) == "yes\n");

    fs::path plus = temp_dir() / "1in3_plus.struct";
    {
        std::ofstream f(plus);
        f << "domain 2\nrelation R 3\n0 0 1\n0 1 0\n1 0 0\nend\n"
          << "relation C_0 1\n0\nend\nrelation C_1 1\n1\nend\n";
    }
    RunResult no = run({"solve-csp", plus.string(), data("pinned.csp")});
    CHECK(no.status == 0);
    CHECK(no.out == "no\n");
}

TEST_CASE("solver budget exhaustion is a verdict, not an error") {
    fs::path inst = temp_dir() / "chain.scsp";
    {
        std::ofstream f(inst);
        f << "vars a b c d e f g h\n";
        for (char v = 'a'; v < 'h'; ++v)
            f << "atom E " << v << " " << static_cast<char>(v + 1) << "\n";
    }
    RunResult r = run({"solve-scsp", data("neq3.struct"), inst.string(), "--budget", "3"});
    CHECK(r.status == 0);
    CHECK(r.out == "budget-exceeded\n");
}

TEST_CASE("unary output feeds poly-check") {
    fs::path ops = temp_dir() / "neq3.ops";
    RunResult u = run({"unary", data("neq3.struct"), "-o", ops.string()});
    CHECK(u.status == 0);
    CHECK(u.err == "6 unary polymorphisms\n");

    RunResult check = run({"poly-check", data("neq3.struct"), ops.string()});
    CHECK(check.status == 0);
    CHECK(check.out == "yes\nyes\nyes\nyes\nyes\nyes\n");
}

TEST_CASE("poly-check reports violations on stderr") {
    fs::path ops = temp_dir() / "const0.ops";
    {
        std::ofstream f(ops);
        f << "op 2\n0 0 0 0\nend\n";
    }
    RunResult r = run({"poly-check", data("or.struct"), ops.string()});
    CHECK(r.status == 0);
    CHECK(r.out == "no\n");
    CHECK(r.err.find("violation R") != std::string::npos);
}

TEST_CASE("gadget emits a formula solvable over the base structure") {
    fs::path formula = temp_dir() / "1in3.gadget";
    RunResult g = run({"gadget", data("1in3.struct"), "-o", formula.string(), "--verify"});
    CHECK(g.status == 0);
    CHECK(g.out.find("m 1\n") != std::string::npos);
    CHECK(g.out.find("condition1 pass") != std::string::npos);
    CHECK(g.out.find("solutions 2 exact") != std::string::npos);

    RunResult solve = run({"solve-csp", data("1in3.struct"), formula.string()});
    CHECK(solve.status == 0);
    CHECK(solve.out.substr(0, 4) == "yes\n");
}

TEST_CASE("usage and file errors exit 2, cap refusals exit 3") {
    CHECK(run({"no-such-command"}).status == 2);
    CHECK(run({"cautious"}).status == 2);
    CHECK(run({"cautious", "/no/such/file"}).status == 2);
    CHECK(run({"cautious", data("or.struct"), "--bogus-flag"}).status == 2);
    CHECK(run({"gmap", data("neq3.struct"), "--cap", "10"}).status == 3);

    fs::path broken = temp_dir() / "broken.struct";
    {
        std::ofstream f(broken);
        f << "domain 2\nfrobnicate R 2\n";
    }
    RunResult r = run({"validate", broken.string()});
    CHECK(r.status == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("reruns are byte-identical") {
    fs::path out1 = temp_dir() / "det1.scsp";
    fs::path out2 = temp_dir() / "det2.scsp";
    RunResult r1 = run({"reduce", data("1in3.struct"), data("triple.csp"), "-o", out1.string()});
    RunResult r2 = run({"reduce", data("1in3.struct"), data("triple.csp"), "-o", out2.string()});
    CHECK(r1.out == r2.out);
    CHECK(slurp(out1) == slurp(out2));

    RunResult v1 = run({"verify", data("1in3.struct"), "--trials", "5", "--seed", "11"});
    RunResult v2 = run({"verify", data("1in3.struct"), "--trials", "5", "--seed", "11"});
    CHECK(v1.out == v2.out);
}
