// Drives the installed CLI binary end to end: exit codes, CSV shapes,
// reproducibility of sweep output.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAILED: " << what << "\n";
    }
}

int run(const std::string& args) {
    const std::string cmd = std::string(NETSAMP_CLI_PATH) + " " + args;
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string tmp_path(const std::string& name) {
    return std::string("/tmp/netsamp_cli_") + name;
}

} // namespace

int main() {
    // config errors exit with 2
    expect(run("sweep --gen barbell:5,5 --algo bogus --steps 10 >/dev/null 2>&1") == 2,
           "unknown algorithm exits 2");
    expect(run("sweep --gen barbell:5,5 --algo srw >/dev/null 2>&1") == 2,
           "missing steps/budgets exits 2");
    expect(run("sweep --graph /nonexistent.edges --algo srw --steps 5 >/dev/null 2>&1") == 2,
           "missing graph file exits 2");
    expect(run("sweep --gen barbell:1,5 --algo srw --steps 5 >/dev/null 2>&1") == 2,
           "bad generator size exits 2");

    // sweep: rows = algorithms x budgets x reps, reproducible bytes
    const std::string out1 = tmp_path("sweep1.csv"), out2 = tmp_path("sweep2.csv");
    const std::string sweep_args =
        "sweep --gen clustered:4,6 --algo srw --algo cnrw --algo gnrw --groupby hash:2 "
        "--budgets 5:15:5 --reps 2 --seed 7 --metrics kl,l2,relerr --out ";
    expect(run(sweep_args + out1) == 0, "sweep exits 0");
    expect(run(sweep_args + out2) == 0, "sweep re-run exits 0");
    const std::string csv1 = slurp(out1);
    expect(csv1 == slurp(out2), "sweep output is byte-identical across runs");
    {
        std::istringstream lines(csv1);
        std::string line;
        std::getline(lines, line);
        expect(line ==
                   "algorithm,grouping,rep,budget,steps_taken,unique_queries,estimate,"
                   "relative_error,kl,l2,seed",
               "sweep header matches the row fields");
        int rows = 0;
        while (std::getline(lines, line))
            if (!line.empty()) ++rows;
        expect(rows == 3 * 3 * 2, "sweep row count = algos x budgets x reps");
    }

    // stationarity report
    const std::string stat_out = tmp_path("stat.csv");
    expect(run("stationarity --gen barbell:4,4 --algo srw --algo mhrw --walks 5 "
               "--steps 2000 --seed 3 --out " +
               stat_out) == 0,
           "stationarity exits 0");
    {
        const std::string csv = slurp(stat_out);
        expect(csv.rfind("algorithm,grouping,target,kl,l2,tv,samples\n", 0) == 0,
               "stationarity header");
        expect(csv.find("mhrw,,uniform") != std::string::npos,
               "mhrw compared against uniform");
    }

    // trace export
    const std::string trace_out = tmp_path("trace.csv");
    expect(run("trace --gen barbell:4,4 --algo cnrw --steps 25 --seed 5 --start 0 --out " +
               trace_out) == 0,
           "trace exits 0");
    {
        const std::string csv = slurp(trace_out);
        expect(csv.rfind("step,node_id,unique_queries\n", 0) == 0, "trace header");
        int rows = 0;
        std::istringstream lines(csv);
        std::string line;
        while (std::getline(lines, line))
            if (!line.empty()) ++rows;
        expect(rows == 27, "trace rows = steps + 1 + header");
    }

    // blocks export
    const std::string blocks_out = tmp_path("blocks.csv");
    expect(run("blocks --gen barbell:4,4 --algo cnrw --root-u 0 --root-v 1 --steps 4000 "
               "--seed 5 --out " +
               blocks_out) == 0,
           "blocks exits 0");
    expect(slurp(blocks_out).rfind("block,entry_neighbor,length\n", 0) == 0,
           "blocks header");

    // escape summary on stdout
    const std::string escape_out = tmp_path("escape.txt");
    expect(run("escape --kind srw --n 6 --reps 2 --steps 20000 --seed 9 > " + escape_out) ==
               0,
           "escape exits 0");
    expect(slurp(escape_out).find("escape=") != std::string::npos, "escape prints a rate");

    // attribute-driven grouping through the CLI
    const std::string edges = tmp_path("toy.edges");
    const std::string attrs = tmp_path("toy.csv");
    {
        std::ofstream e(edges);
        e << "# toy graph\nu1 u2\nu2 u3\nu3 u1\nu3 u4\n";
        std::ofstream a(attrs);
        a << "id,age\nu1,20\nu2,35\nu3,50\nu4,27\n";
    }
    expect(run("sweep --graph " + edges + " --attrs " + attrs +
               " --algo gnrw --groupby attr:age:2 --steps 200 --reps 1 --seed 1 "
               "--measure attr:age --out " +
               tmp_path("attr_sweep.csv")) == 0,
           "attribute grouping + attribute measure works end to end");

    if (failures == 0) {
        std::puts("cli smoke: all checks passed");
        return 0;
    }
    std::printf("cli smoke: %d checks failed\n", failures);
    return 1;
}
