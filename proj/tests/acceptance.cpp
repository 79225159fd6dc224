// Acceptance run: one PASS/FAIL line per criterion, details above each line.
// Exit status is 0 iff every criterion passes.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "suites.h"

namespace fs = std::filesystem;
using volterra::app::Check;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;
  void add(const Check& c) {
    pass = pass && c.pass;
    lines.push_back(std::string(c.pass ? "[PASS] " : "[FAIL] ") + c.name);
    for (const auto& d : c.details) lines.push_back("    " + d);
  }
  void note(bool ok, const std::string& s) {
    pass = pass && ok;
    lines.push_back(std::string(ok ? "ok    " : "FAIL  ") + s);
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

int run(const std::string& args, const fs::path& log) {
  const std::string cmd = std::string("\"") + VOLTERRA_CLI + "\" " + args + " > \"" + log.string() + "\" 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

// Runs `args` with 1, 2 and 3 workers and once more from the manifest; every
// copy of `file` must match byte for byte.
void determinism_case(Outcome& o, const fs::path& root, const std::string& name, const std::string& args,
                      const std::string& file) {
  const fs::path dir = root / name;
  fs::create_directories(dir);
  std::string ref;
  bool ok = true;
  std::ostringstream msg;
  msg << name << ":";
  for (int w : {1, 2, 3}) {
    const fs::path out = dir / ("w" + std::to_string(w));
    const int rc = run("--workers " + std::to_string(w) + " --out \"" + out.string() + "\" " + args, dir / ("w" + std::to_string(w) + ".log"));
    const std::string bytes = rc == 0 ? slurp(out / file) : std::string();
    if (rc != 0 || bytes.empty()) {
      ok = false;
      msg << " workers=" << w << " exit " << rc;
      continue;
    }
    if (ref.empty()) ref = bytes;
    else if (bytes != ref) {
      ok = false;
      msg << " workers=" << w << " differs";
    }
  }
  const fs::path again = dir / "rerun";
  const int rc = run("--workers 2 --out \"" + again.string() + "\" rerun --manifest \"" +
                         (dir / "w1" / "manifest.ini").string() + "\"",
                     dir / "rerun.log");
  if (rc != 0 || slurp(again / file) != ref) {
    ok = false;
    msg << " rerun differs (exit " << rc << ")";
  }
  if (ok) msg << " " << file << " identical across workers 1/2/3 and manifest rerun (" << ref.size() << " bytes)";
  o.note(ok, msg.str());
}

Outcome ac10() {
  Outcome o;
  const fs::path root = fs::temp_directory_path() / "volterra_acceptance";
  fs::remove_all(root);
  fs::create_directories(root);
  {
    std::ofstream eq(root / "equation.ini");
    eq << "[schema]\nversion=1\n[equation]\nlambda=0.5 1 2\nphi=1 0 | 0.5 0.5 | 0 1\n"
          "[noise]\nH=0.8\nfamilies=fbm rosenblatt\n";
  }
  determinism_case(o, root, "fbm-circulant", "simulate --process fbm --method circulant --grid -1:1:257 --paths 64 --seed 5",
                   "paths.csv");
  determinism_case(o, root, "fbm-cholesky", "simulate --process fbm --grid 0:1:65 --paths 64 --seed 5", "paths.csv");
  determinism_case(o, root, "rosenblatt",
                   "simulate --process rosenblatt --H 0.8 --grid -1:1:33 --paths 32 --seed 6 --cells-per-unit 128",
                   "paths.csv");
  determinism_case(o, root, "solve",
                   "solve --config \"" + (root / "equation.ini").string() + "\" --grid 0:2:41 --paths 32 --seed 7",
                   "solution.csv");
  determinism_case(o, root, "verify-isometry", "verify --suite isometry --paths 4000 --seed 8", "report.csv");
  // a stochastic command without a seed is refused
  const int rc = run("--out \"" + (root / "noseed").string() + "\" simulate --grid 0:1:5 --paths 2",
                     root / "noseed.txt");
  o.note(rc == 2, "simulate without --seed exits 2 (got " + std::to_string(rc) + ")");
  return o;
}

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> body;
  double time_limit = 0.0;  // seconds; 0 = none
};

}  // namespace

int main() {
  using namespace volterra::app;
  const std::vector<Criterion> criteria{
      {1, "kernel closed form, 50 pairs per H, rel tol 1e-4",
       [] {
         Outcome o;
         o.add(kernel_closed_form({0.55, 0.7, 0.9}, 50, 1e-4, kSeed));
         return o;
       },
       10.0},
      {2, "fBm normalization E(W_1)^2 = 1 within 3 stderr, 1e5 paths",
       [] {
         Outcome o;
         o.add(fbm_normalization({0.6, 0.75, 0.9}, 100000, kSeed));
         return o;
       }},
      {3, "Rosenblatt variance, covariance at 10 pairs and kappa_3",
       [] {
         Outcome o;
         o.add(rosenblatt_moments(0.75, 100000, kSeed));
         return o;
       },
       300.0},
      {4, "isometry Var i(f) = D-norm, 20 step functions, 3 stderr",
       [] {
         Outcome o;
         o.add(isometry(0.75, 20, 20000, kSeed));
         return o;
       }},
      {5, "law symmetries, fBm and Rosenblatt, level 0.01",
       [] {
         Outcome o;
         o.add(law_symmetries("fbm", 0.75, 4500, kSeed));
         o.add(law_symmetries("rosenblatt", 0.75, 4500, kSeed + 1));
         return o;
       }},
      {6, "covariance operators q_t and g(r,s), 4-mode equation, 3 stderr",
       [] {
         Outcome o;
         o.add(covariance_operators(20000, kSeed));
         return o;
       }},
      {7, "limiting measure and stationarity of the x_infinity solution",
       [] {
         Outcome o;
         o.add(limiting_measure(2000, kSeed));
         o.add(stationary_solution(4000, kSeed));
         return o;
       }},
      {8, "shift example threshold beta > H + 1/2 and J routes",
       [] {
         Outcome o;
         o.add(shift_threshold({0.6, 0.75, 0.9}));
         return o;
       }},
      {9, "heat example admissibility d < 4H and HS decay -d/2",
       [] {
         Outcome o;
         o.add(heat_example());
         return o;
       }},
      {10, "determinism across worker counts and manifest reruns", ac10},
  };

  std::vector<std::string> verdicts;
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.lines.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit > 0.0 && secs > c.time_limit) {
      o.pass = false;
      o.lines.push_back("runtime " + std::to_string(secs) + " s exceeds " + std::to_string(c.time_limit) + " s");
    }
    std::cout << "---- AC" << c.id << ": " << c.title << "\n";
    for (const auto& l : o.lines) std::cout << "  " << l << "\n";
    std::ostringstream v;
    v << "AC" << c.id << " " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  (" << secs << " s)";
    std::cout << v.str() << "\n" << std::flush;
    verdicts.push_back(v.str());
    all = all && o.pass;
  }
  std::cout << "\n==== acceptance summary\n";
  for (const auto& v : verdicts) std::cout << v << "\n";
  return all ? 0 : 1;
}
