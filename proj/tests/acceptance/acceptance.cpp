// Runs the acceptance battery and prints one PASS/FAIL line per criterion.
// A criterion passes when its property check holds on every instance and it
// finishes inside its time limit. Exit status is nonzero on any failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "stonewb/suite.hpp"

using namespace stonewb;

namespace {

using Clock = std::chrono::steady_clock;

// Seconds allowed per criterion 1..11.
constexpr std::array<double, kSuiteCriteria> kLimits = {60, 60, 120, 120, 60, 60, 120, 60, 30, 30, 30};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Run {
    int status = -1;
    std::string out;
    double seconds = 0;
};

Run run_command(const std::string& cmd) {
    Run r;
    const auto t0 = Clock::now();
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) r.out.append(buf.data(), got);
    r.status = pclose(pipe.release());
    r.seconds = seconds_since(t0);
    return r;
}

void line(int id, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << id << "  " << name << "  " << detail << '\n'
              << std::flush;
}

}  // namespace

int main() {
    SuiteOptions options;  // seed 42, standard sobriety
    bool all = true;
    double suite_seconds = 0;

    for (int id = 1; id <= kSuiteCriteria; ++id) {
        const auto t0 = Clock::now();
        const auto r = run_criterion(id, options);
        const double t = seconds_since(t0);
        suite_seconds += t;
        const double limit = kLimits[id - 1];
        const bool pass = r.pass && t < limit;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs < %.0fs", t, limit);
        std::string detail = "instances=" + std::to_string(r.instances) + " cases=" + std::to_string(r.cases) + " " +
                             timing;
        if (!r.pass) detail += "  counterexample: " + r.counterexample;
        if (t >= limit) detail += "  over time limit";
        line(id, r.name, pass, detail);
        all = all && pass;
    }

    // The CLI reruns the whole battery in a fresh process; allow it the
    // in-process time with headroom for startup and serialization.
    const std::string cmd = std::string("\"") + WORKBENCH_PATH + "\" suite --seed=42 --format=json 2>&1";
    const double cli_limit = 1.5 * suite_seconds + 5.0;
    const Run a = run_command(cmd);
    const Run b = run_command(cmd);
    const bool identical = a.status == 0 && b.status == 0 && !a.out.empty() && a.out == b.out;
    const bool in_time = a.seconds < cli_limit && b.seconds < cli_limit;
    char timing[96];
    std::snprintf(timing, sizeof timing, "runs %.2fs, %.2fs < %.1fs", a.seconds, b.seconds, cli_limit);
    std::string detail = "bytes=" + std::to_string(a.out.size()) + " " + timing;
    if (a.status != 0 || b.status != 0)
        detail += "  exit status " + std::to_string(a.status) + ", " + std::to_string(b.status);
    else if (a.out != b.out)
        detail += "  reports differ";
    if (!in_time) detail += "  over time limit";
    line(12, "cli-determinism", identical && in_time, detail);
    all = all && identical && in_time;

    std::cout << (all ? "all criteria passed" : "some criteria failed") << '\n';
    return all ? 0 : 1;
}
