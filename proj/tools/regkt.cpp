// regkt: command line front end for the relative multiplier library.
//
// Exit codes: 0 success, 1 a Fail verdict (or a computation error), 2 bad
// input (command line, group file, corpus file).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "regkt/group_io.hpp"
#include "regkt/harness.hpp"
#include "regkt/multiplier.hpp"
#include "regkt/report.hpp"
#include "regkt/splittings.hpp"

namespace {

using namespace regkt;

struct Globals {
  std::uint64_t seed = 1;
  std::size_t cap = 60;
  bool json = false;
  bool long_running = false;
  bool timing = false;
  std::size_t threads = 0;

  MultiplierOptions multiplier() const {
    MultiplierOptions o;
    o.cap = cap;
    o.long_running = long_running;
    return o;
  }
};

int emit(const Globals& g, std::vector<Report> reports) {
  sort_reports(reports);
  if (g.json)
    std::cout << format_json(reports, g.seed);
  else
    std::cout << format_text(reports);
  return overall(reports) == Verdict::Fail ? 1 : 0;
}

FiniteGroup load(const std::string& path) { return read_group_file(path, kDefaultGroupCap); }

Subgroup normal_of(const FiniteGroup& f, const std::string& spec) {
  if (spec.empty() || spec == "whole") return Subgroup::whole(f);
  return parse_normal_spec(f, spec);
}

std::string sparse_text(const SparseRow& v) {
  std::string s;
  for (const auto& [c, x] : v.entries) s += " " + std::to_string(c) + ":" + x.get_str();
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative Schur multipliers and canonical extensions of finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--cap", g.cap, "Largest group order accepted")->capture_default_str();
  app.add_flag("--json", g.json, "Structured output");
  app.add_flag("--long-running", g.long_running, "Allow the slow universal extension sizes");
  app.add_flag("--timing", g.timing, "Record wall time per suite (reports are then not reproducible)");
  app.add_option("--threads", g.threads, "Worker threads for corpus runs (0 = all cores)");

  std::function<int()> action;

  // group check
  auto* group = app.add_subcommand("group", "Group file utilities");
  group->require_subcommand(1);
  auto* gcheck = group->add_subcommand("check", "Parse a group file and check the axioms");
  std::string gfile;
  gcheck->add_option("file", gfile)->required();
  gcheck->callback([&] {
    action = [&] {
      FiniteGroup f = load(gfile);
      bool ok = f.verify_axioms();
      if (g.json) {
        nlohmann::json j{{"format", 1},           {"order", f.order()},
                         {"abelian", f.is_abelian()}, {"perfect", is_perfect(f)},
                         {"exponent", f.exponent()},  {"axioms", ok}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "regkt-format 1\norder " << f.order() << "\nabelian " << f.is_abelian()
                  << "\nperfect " << is_perfect(f) << "\nexponent " << f.exponent() << "\naxioms "
                  << (ok ? "ok" : "FAIL") << "\n";
      }
      return ok ? 0 : 1;
    };
  });

  // kj2
  auto* kj = app.add_subcommand("kj2", "Relative Schur multiplier K^J_2(N,F)");
  std::string kfile, knormal;
  bool extended = false;
  kj->add_option("file", kfile)->required();
  kj->add_option("--normal", knormal, "Generators of N, ';'-separated (normal closure taken)");
  kj->add_flag("--extended", extended, "Extended group (relations [J_{N,F},U_F] only)");
  kj->callback([&] {
    action = [&] {
      FiniteGroup f = load(kfile);
      Subgroup n = normal_of(f, knormal);
      auto r = extended ? kj2_extended(f, n, g.multiplier()) : kj2(f, n, g.multiplier());
      if (g.json) {
        nlohmann::json j{{"format", 1},
                         {"structure", r.structure.to_string()},
                         {"free_rank", r.structure.free_rank},
                         {"extended", extended}};
        auto t = nlohmann::json::array();
        for (const auto& x : r.structure.torsion) t.push_back(x.get_str());
        j["torsion"] = t;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << r.structure.to_string() << "\n";
      }
      return 0;
    };
  });

  // extension
  auto* ext = app.add_subcommand("extension", "Canonical or universal F-central extension");
  std::string efile, enormal, eout;
  bool universal = false;
  ext->add_option("file", efile)->required();
  ext->add_option("--normal", enormal, "Generators of N (default: all of F)");
  ext->add_flag("--universal", universal, "Build the universal extension (F perfect, N full)");
  ext->add_option("--out", eout, "Write the extension group to this file");
  ext->callback([&] {
    action = [&] {
      FiniteGroup f = load(efile);
      Subgroup n = normal_of(f, enormal);
      nlohmann::json j{{"format", 1}};
      if (universal) {
        auto u = universal_extension(f, n, g.multiplier());
        j["order"] = u.group.order();
        j["kernel"] = u.kernel_structure.to_string();
        j["central"] = u.central;
        j["kernel_in_commutator"] = u.kernel_in_commutator;
        j["perfect"] = is_perfect(u.group);
        if (!eout.empty()) {
          std::ofstream os(eout);
          os << format_group(u.group);
        }
      } else {
        auto d = canonical_extension(f, n, g.multiplier());
        j["central_kernel"] = d.kernel_structure.to_string();
        j["columns"] = d.columns;
      }
      if (g.json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "regkt-format 1\n";
        for (auto it = j.begin(); it != j.end(); ++it)
          if (it.key() != "format")
            std::cout << it.key() << " " << (it->is_string() ? it->get<std::string>() : it->dump())
                      << "\n";
      }
      return 0;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Run one verification suite");
  std::string which, vfile, vnormal;
  std::size_t samples = 1000, depth = 2;
  verify->add_option("lemma", which, "lemma2 | lemma134 | lemma4 | lemma7")
      ->required()
      ->check(CLI::IsMember({"lemma2", "lemma134", "lemma4", "lemma7"}));
  verify->add_option("file", vfile)->required();
  verify->add_option("--normal", vnormal, "Generators of N");
  verify->add_option("--samples", samples, "Random members to test")->capture_default_str();
  verify->add_option("--depth", depth, "relative letter family depth")->capture_default_str();
  verify->callback([&] {
    action = [&] {
      FiniteGroup f = load(vfile);
      Subgroup n = vnormal.empty() ? Subgroup::trivial(f) : normal_of(f, vnormal);
      const std::string subject = std::filesystem::path(vfile).stem().string();
      const std::uint64_t s = suite_seed(g.seed, which, subject);
      Report r;
      if (which == "lemma2")
        r = verify_lemma2(f, subject);
      else if (which == "lemma134")
        r = verify_lemma1_lemma3(f, n, samples, depth, s, subject);
      else if (which == "lemma4")
        r = verify_lemma4(f, n, subject);
      else
        r = verify_lemma7(f, n, samples, s, subject);
      r.seed = s;
      return emit(g, {r});
    };
  });

  // excise
  auto* excise = app.add_subcommand("excise", "Excision checks for K^J_2");
  excise->require_subcommand(1);
  auto* ep = excise->add_subcommand("product", "K^J_2(N) -> K^J_2(N x M0) injective");
  std::string pn, pm;
  ep->add_option("N", pn)->required();
  ep->add_option("M0", pm)->required();
  ep->callback([&] {
    action = [&] { return emit(g, {excision_product(load(pn), load(pm), g.multiplier())}); };
  });
  auto* ee = excise->add_subcommand("extended", "ker(K~(N,F) -> K~(N,G)) inside the image of K^J_2(N)");
  std::string xg, xsub, xnormal;
  ee->add_option("G", xg)->required();
  ee->add_option("--sub", xsub, "Generators of F inside G")->required();
  ee->add_option("--normal", xnormal, "Generators of N (normal closure in G)")->required();
  ee->callback([&] {
    action = [&] {
      FiniteGroup gg = load(xg);
      return emit(g, {excision_extended(gg, parse_subgroup_spec(gg, xsub),
                                        parse_normal_spec(gg, xnormal), g.multiplier())});
    };
  });

  // splitcheck
  auto* sc = app.add_subcommand("splitcheck", "Strict-splitting process for D x E");
  std::string dfile, efile2;
  std::size_t sdepth = 5, start_length = 1;
  bool scramble = false;
  sc->add_option("D", dfile)->required();
  sc->add_option("E", efile2)->required();
  sc->add_option("--depth", sdepth, "Iteration bound")->capture_default_str();
  sc->add_option("--start-length", start_length, "Longest starting section word")->capture_default_str();
  sc->add_flag("--scrambled", scramble, "Exchange two section representatives first");
  sc->callback([&] {
    action = [&] {
      auto cand = product_example(load(dfile), load(efile2), g.cap);
      cand.start_length = start_length;
      if (scramble) cand = scrambled(std::move(cand));
      auto res = check_strict_splitting(cand, sdepth);
      Report r;
      r.suite = "splitting";
      r.subject = std::filesystem::path(dfile).stem().string() + "x" +
                  std::filesystem::path(efile2).stem().string();
      const bool ok = res.verdict == SplittingVerdict::Converged && res.level_decreasing;
      r.verdict = ok ? Verdict::Pass : Verdict::Fail;
      r.detail = to_string(res.verdict) + " steps=" + std::to_string(res.steps) +
                 " level_decreasing=" + (res.level_decreasing ? "yes" : "no") +
                 " pairs=" + std::to_string(res.pairs_explored);
      if (!res.detail.empty()) r.detail += " (" + res.detail + ")";
      Certificate c{"core", {}, {}, {}};
      for (const auto& k : cand.core) c.words.push_back(k.label + " = " + to_string(k.word));
      r.certificates.push_back(std::move(c));
      return emit(g, {r});
    };
  });

  // corpus run
  auto* corpus = app.add_subcommand("corpus", "Golden corpus");
  corpus->require_subcommand(1);
  auto* crun = corpus->add_subcommand("run", "Run every suite over a corpus directory");
  std::string cdir;
  std::size_t csamples = 1000;
  crun->add_option("dir", cdir)->required();
  crun->add_option("--samples", csamples, "Random members per pair")->capture_default_str();
  crun->callback([&] {
    action = [&] {
      Corpus c = load_corpus(cdir);
      HarnessConfig cfg;
      cfg.seed = g.seed;
      cfg.multiplier = g.multiplier();
      cfg.samples = csamples;
      cfg.timing = g.timing;
      cfg.threads = g.threads;
      return emit(g, run_corpus(c, cfg));
    };
  });

  // cert
  auto* cert = app.add_subcommand("cert", "Write certificate fixtures");
  cert->require_subcommand(1);
  auto* cl2 = cert->add_subcommand("basis", "J_F basis of a group");
  std::string c2file, c2name;
  cl2->add_option("file", c2file)->required();
  cl2->add_option("--name", c2name, "Group name inside the corpus")->required();
  cl2->callback([&] {
    action = [&] {
      FiniteGroup f = load(c2file);
      std::cout << "regkt-format 1\ncert basis " << c2name << "\n";
      for (const auto& w : Envelope(f).jf_basis()) std::cout << to_string(w) << "\n";
      return 0;
    };
  });
  auto* ccy = cert->add_subcommand("cocycle", "Canonical cocycle table of a pair");
  std::string ccfile, ccnormal, ccname;
  ccy->add_option("file", ccfile)->required();
  ccy->add_option("--normal", ccnormal, "Generators of N");
  ccy->add_option("--name", ccname, "Pair name inside the corpus")->required();
  ccy->callback([&] {
    action = [&] {
      FiniteGroup f = load(ccfile);
      auto table = canonical_cocycle_table(f, normal_of(f, ccnormal), g.multiplier());
      std::cout << "regkt-format 1\ncert cocycle " << ccname << "\n";
      for (const auto& [k, v] : table) std::cout << k.first << " " << k.second << sparse_text(v) << "\n";
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return action ? action() : 2;
  } catch (const Error& e) {
    std::cerr << "regkt: " << e.what() << "\n";
    return (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::InvalidGroup) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "regkt: " << e.what() << "\n";
    return 1;
  }
}
