// Acceptance run: one PASS/FAIL line per criterion.

#include <array>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "CLI11.hpp"
#include "regkt/group_io.hpp"
#include "regkt/harness.hpp"
#include "regkt/multiplier.hpp"
#include "regkt/presentation.hpp"
#include "regkt/splittings.hpp"

using namespace regkt;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    ok = false;
    if (!note.empty()) note += "; ";
    note += why;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds,
               const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs > limit_seconds) {
    std::ostringstream os;
    os << "took " << secs << "s, limit " << limit_seconds << 's';
    out.fail(os.str());
  }
  if (!out.ok) ++failures;
  std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << id << " " << title << " ("
            << std::fixed << std::setprecision(2) << secs << "s)";
  if (!out.note.empty()) std::cout << " : " << out.note;
  std::cout << std::endl;
}

// --- independent group oracle: SL(2,5) as 2x2 matrices over F_5 ------------

using Mat = std::array<int, 4>;

Mat mat_mul(const Mat& a, const Mat& b) {
  return {(a[0] * b[0] + a[1] * b[2]) % 5, (a[0] * b[1] + a[1] * b[3]) % 5,
          (a[2] * b[0] + a[3] * b[2]) % 5, (a[2] * b[1] + a[3] * b[3]) % 5};
}

// Multiplication table of the closure of `gens`, identity first.
template <class T, class Mul>
std::vector<std::vector<std::size_t>> closure_table(const T& identity, const std::vector<T>& gens, Mul mul) {
  std::vector<T> elems{identity};
  std::map<T, std::size_t> index{{identity, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      T p = mul(elems[i], g);
      if (index.emplace(p, elems.size()).second) elems.push_back(p);
    }
  std::vector<std::vector<std::size_t>> table(elems.size(), std::vector<std::size_t>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) table[i][j] = index.at(mul(elems[i], elems[j]));
  return table;
}

struct Invariants {
  std::size_t order = 0, center = 0, derived = 0, exponent = 0;
  friend bool operator==(const Invariants&, const Invariants&) = default;
};

std::string show(const Invariants& v) {
  std::ostringstream os;
  os << "order " << v.order << " center " << v.center << " derived " << v.derived << " exponent "
     << v.exponent;
  return os.str();
}

// Brute force on a table whose identity is element 0.
Invariants invariants(const std::vector<std::vector<std::size_t>>& t) {
  const std::size_t n = t.size();
  Invariants v;
  v.order = n;
  std::vector<std::size_t> inv(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (t[a][b] == 0) inv[a] = b;
  for (std::size_t a = 0; a < n; ++a) {
    bool central = true;
    for (std::size_t b = 0; b < n && central; ++b) central = t[a][b] == t[b][a];
    v.center += central;
  }
  std::set<std::size_t> derived{0};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) derived.insert(t[t[a][b]][t[inv[a]][inv[b]]]);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::size_t> cur(derived.begin(), derived.end());
    for (auto x : cur)
      for (auto y : cur) grew |= derived.insert(t[x][y]).second;
  }
  v.derived = derived.size();
  std::size_t e = 1;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t k = 1;
    for (std::size_t p = a; p != 0; p = t[p][a]) ++k;
    if (a == 0) k = 1;
    e = std::lcm(e, k);
  }
  v.exponent = e;
  return v;
}

std::vector<std::vector<std::size_t>> table_of(const FiniteGroup& g) {
  std::vector<std::vector<std::size_t>> t(g.order(), std::vector<std::size_t>(g.order()));
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) t[a][b] = g.mul(a, b);
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string golden, negative, cli;
  std::uint64_t seed = 1;
  bool skip_long = false;
  app.add_option("--golden", golden, "golden corpus")->required()->check(CLI::ExistingDirectory);
  app.add_option("--negative", negative, "negative corpus")->required()->check(CLI::ExistingDirectory);
  app.add_option("--cli", cli, "regkt binary, for the exit-code check");
  app.add_option("--seed", seed);
  app.add_flag("--skip-long", skip_long, "do not run criterion 5");
  CLI11_PARSE(app, argc, argv);

  const Corpus corpus = load_corpus(golden);

  criterion(1, "Schur multiplier agreement", 300, [] {
    Outcome o;
    const std::vector<std::tuple<FiniteGroup, const char*, const char*>> cases{
        {catalog::cyclic(2), "C2", "0"},
        {catalog::cyclic(3), "C3", "0"},
        {catalog::cyclic(4), "C4", "0"},
        {catalog::cyclic(6), "C6", "0"},
        {catalog::elementary_abelian2(2), "C2xC2", "Z/2"},
        {catalog::elementary_abelian2(3), "C2xC2xC2", "Z/2 x Z/2 x Z/2"},
        {catalog::symmetric(3), "S3", "0"},
        {catalog::dihedral(4), "D8", "Z/2"},
        {catalog::quaternion8(), "Q8", "0"},
        {catalog::alternating(4), "A4", "Z/2"}};
    for (const auto& [g, name, expected] : cases) {
      auto got = kj2(g, Subgroup::whole(g)).structure;
      auto hopf = schur_hopf(standard_presentation(name));
      if (got.to_string() != expected || !(got == hopf))
        o.fail(std::string(name) + ": kj2 " + got.to_string() + ", hopf " + hopf.to_string() +
               ", expected " + expected);
    }
    o.note = o.ok ? "10 groups" : o.note;
    return o;
  });

  criterion(2, "J_F basis certification", 30, [&] {
    Outcome o;
    std::size_t n = 0;
    for (const auto& [name, g] : corpus.groups) {
      if (g.order() > 12) continue;
      ++n;
      auto r = verify_lemma2(g, name);
      if (r.verdict != Verdict::Pass) o.fail(name + ": " + r.detail);
    }
    if (n == 0) o.fail("no groups");
    if (o.ok) o.note = std::to_string(n) + " groups";
    return o;
  });

  criterion(3, "rewriting round trip, 1000 samples per pair", 120, [&] {
    Outcome o;
    for (const auto& [name, p] : corpus.pairs) {
      auto r = verify_lemma1_lemma3(p.f, p.n, 1000, 2, suite_seed(seed, "lemma134", name), name);
      if (r.verdict != Verdict::Pass) o.fail(name + ": " + r.detail);
    }
    if (corpus.pairs.empty()) o.fail("no pairs");
    if (o.ok) o.note = std::to_string(corpus.pairs.size()) + " pairs";
    return o;
  });

  criterion(4, "order independence, 3 relabelings per pair", 300, [&] {
    Outcome o;
    for (const auto& [name, p] : corpus.pairs) {
      auto r = order_independence(p.f, p.n, 3, suite_seed(seed, "order", name), {}, name);
      if (r.verdict != Verdict::Pass) o.fail(name + ": " + r.detail);
    }
    if (o.ok) o.note = std::to_string(corpus.pairs.size()) + " pairs";
    return o;
  });

  if (skip_long) {
    std::cout << "FAIL criterion 5 universal extension of A5 : not run (--skip-long)" << std::endl;
    ++failures;
  } else {
    criterion(5, "universal extension of A5", 3600, [] {
      Outcome o;
      auto a5 = catalog::alternating(5);
      MultiplierOptions opt;
      opt.long_running = true;
      auto u = universal_extension(a5, Subgroup::whole(a5), opt);
      if (u.group.order() != 120) o.fail("order " + std::to_string(u.group.order()));
      if (!is_perfect(u.group)) o.fail("not perfect");
      if (u.kernel.size() != 2) o.fail("kernel order " + std::to_string(u.kernel.size()));
      for (Elem k : u.kernel.members())
        for (Elem g = 0; g < u.group.order(); ++g)
          if (u.group.mul(k, g) != u.group.mul(g, k)) {
            o.fail("kernel not central");
            g = Elem(u.group.order());
          }
      auto sl25 = closure_table(Mat{1, 0, 0, 1}, {Mat{1, 1, 0, 1}, Mat{0, 4, 1, 0}}, mat_mul);
      auto want = invariants(sl25);
      auto got = invariants(table_of(u.group));
      if (!(want == got)) o.fail("SL(2,5): " + show(want) + " vs " + show(got));
      if (o.ok) o.note = show(got) + ", matches SL(2,5)";
      return o;
    });
  }

  criterion(6, "product excision", 120, [] {
    Outcome o;
    using namespace catalog;
    const std::vector<std::tuple<FiniteGroup, FiniteGroup, std::string>> cases{
        {elementary_abelian2(2), cyclic(2), "C2xC2 in C2xC2xC2"},
        {elementary_abelian2(2), cyclic(3), "C2xC2 in C2xC2xC3"},
        {dihedral(4), cyclic(2), "D8 in D8xC2"},
        {symmetric(3), cyclic(3), "S3 in S3xC3"}};
    for (const auto& [n, m0, label] : cases) {
      auto r = excision_product(n, m0, {}, label);
      if (r.verdict != Verdict::Pass) o.fail(label + ": " + r.detail);
    }
    if (o.ok) o.note = std::to_string(cases.size()) + " instances";
    return o;
  });

  criterion(7, "strict splitting of C2xC2", 5, [] {
    Outcome o;
    auto c2 = catalog::cyclic(2);
    auto res = check_strict_splitting(product_example(c2, c2), 5);
    if (res.verdict != SplittingVerdict::Converged) o.fail("verdict " + to_string(res.verdict));
    if (!res.level_decreasing) o.fail("level not decreasing");
    auto mut = check_strict_splitting(scrambled(product_example(c2, c2)), 5);
    if (mut.verdict == SplittingVerdict::Converged) o.fail("scrambled section converged");
    if (o.ok)
      o.note = "converged in " + std::to_string(res.steps) + " steps; scrambled: " + to_string(mut.verdict);
    return o;
  });

  criterion(8, "weak core sweep", 300, [&] {
    Outcome o;
    std::size_t tested = 0;
    for (const auto& [name, p] : corpus.pairs) {
      auto out = weak_core_consequence(p.f, p.n);
      if (out.status == WeakCoreOutcome::Status::Fail) o.fail(name + ": " + out.reason);
      if (out.weak_core) {
        ++tested;
        if (!kj2(p.f, p.n).structure.is_trivial()) o.fail(name + ": weak core with nontrivial kj2");
      }
    }
    if (o.ok) o.note = std::to_string(tested) + " pairs with a weak core, none with nontrivial kj2";
    return o;
  });

  criterion(9, "negative controls", 120, [&] {
    Outcome o;
    HarnessConfig cfg;
    cfg.seed = seed;
    cfg.samples = 200;
    auto reports = run_corpus(load_corpus(negative), cfg);
    std::size_t failed = 0;
    for (const auto& r : reports)
      if (r.verdict == Verdict::Fail) {
        ++failed;
        if (r.certificates.empty()) o.fail(r.suite + " " + r.subject + " failed without a certificate");
      }
    if (failed < 2) o.fail("only " + std::to_string(failed) + " failing suites");
    if (overall(reports) != Verdict::Fail) o.fail("overall verdict is not FAIL");
    if (!cli.empty()) {
      const std::string cmd = "\"" + cli + "\" corpus run \"" + negative + "\" --samples 200 > /dev/null";
      const int status = std::system(cmd.c_str());
      const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
      if (code != 1) o.fail("cli exit code " + std::to_string(code));
      else o.note = "cli exit 1; ";
    }
    if (o.ok) o.note += std::to_string(failed) + " failing suites, each with a certificate";
    return o;
  });

  std::cout << (failures == 0 ? "PASS" : "FAIL") << " acceptance " << (9 - failures) << "/9" << std::endl;
  return failures == 0 ? 0 : 1;
}
