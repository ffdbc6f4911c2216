#include "regkt/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "regkt/envelope.hpp"
#include "regkt/group_io.hpp"
#include "regkt/splittings.hpp"
#include "regkt/stallings.hpp"

namespace regkt {

namespace {

std::string structure_str(const AbelianGroupStructure& s) { return s.to_string(); }

DenseRow dense_of(const SparseRow& v, std::size_t cols) { return v.dense(cols); }

bool all_zero(const DenseRow& r) {
  return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
}

Report make(std::string suite, std::string subject, std::uint64_t seed = 0) {
  Report r;
  r.suite = std::move(suite);
  r.subject = std::move(subject);
  r.seed = seed;
  return r;
}

Report fail(Report r, std::string why) {
  r.verdict = Verdict::Fail;
  r.detail = std::move(why);
  return r;
}

std::vector<GenId> envelope_alphabet(const FiniteGroup& f) {
  std::vector<GenId> a;
  for (Elem x = 1; x < f.order(); ++x) a.push_back(Envelope::gen(x));
  return a;
}

std::vector<std::string> word_strings(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(to_string(w));
  return out;
}

DenseMatrix hnf_of(const std::vector<DenseRow>& rows, std::size_t cols) {
  return hermite_normal_form(rows, cols);
}

}  // namespace

std::uint64_t suite_seed(std::uint64_t seed, const std::string& suite, const std::string& subject) {
  std::uint64_t h = 1469598103934665603ull ^ seed;
  for (char c : suite + '\x1f' + subject) {
    h ^= std::uint8_t(c);
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// J_F basis

Report verify_lemma2_words(const FiniteGroup& f, const std::vector<Word>& claimed,
                           const std::string& subject) {
  Report r = make("lemma2", subject.empty() ? f.name() : subject);
  Certificate cert{"jf-basis", word_strings(claimed), {}, {}};
  r.certificates.push_back(cert);
  const std::size_t n = f.order();
  const std::size_t want = (n - 1) * (n - 1);
  if (claimed.size() != want)
    return fail(r, "basis has " + std::to_string(claimed.size()) + " words, expected " +
                       std::to_string(want));
  Envelope env(f);
  for (std::size_t i = 0; i < claimed.size(); ++i) {
    try {
      if (env.evaluate(claimed[i]) != 0)
        return fail(r, "word " + std::to_string(i) + " does not evaluate to 1");
    } catch (const Error& e) {
      return fail(r, "word " + std::to_string(i) + ": " + e.what());
    }
  }
  if (!nielsen_independent(claimed)) return fail(r, "basis is not Nielsen independent");
  auto g = SubgroupGraph::build(claimed, envelope_alphabet(f));
  if (g.rank() != want)
    return fail(r, "folded rank " + std::to_string(g.rank()) + ", expected " + std::to_string(want));
  if (g.num_states() != n || !g.is_complete())
    return fail(r, "automaton has " + std::to_string(g.num_states()) + " states" +
                       (g.is_complete() ? "" : " and is not complete"));
  r.detail = std::to_string(want) + " words, " + std::to_string(n) + "-state complete automaton";
  return r;
}

Report verify_lemma2(const FiniteGroup& f, const std::string& subject) {
  return verify_lemma2_words(f, Envelope(f).jf_basis(), subject);
}

// ---------------------------------------------------------------------------
// Relative letters and cores

Report verify_lemma1_lemma3(const FiniteGroup& f, const Subgroup& n, std::size_t samples,
                            std::size_t depth, std::uint64_t seed, const std::string& subject) {
  Report r = make("lemma134", subject.empty() ? f.name() : subject, seed);
  RelativeEnvelope renv(Envelope(f), n);
  RelativeRewriter rw(renv);

  auto family = rw.family(depth);
  if (!nielsen_independent(family))
    return fail(r, "relative letter family up to depth " + std::to_string(depth) + " is dependent");

  std::vector<Word> cores;
  for (const auto& c : renv.b_cores()) {
    if (!renv.member_jnf(c.word)) return fail(r, "core element " + c.label() + " is not in J_{N,F}");
    cores.push_back(c.word);
  }
  r.certificates.push_back({"b-cores", word_strings(cores), {}, {}});

  const auto letters = rw.family(1);
  const auto& vectors = renv.conjugated_core_vectors();
  const std::size_t cols = renv.envelope().pair_count();
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Word j = random_jnf_member(letters, renv.envelope(), rng);
    if (!renv.member_jnf(j)) return fail(r, "sample " + to_string(j) + " left J_{N,F}");
    Word rewritten = rw.rewrite(j);
    if (apply_hom(rw.assignment(), rewritten) != j)
      return fail(r, "rewriting does not round-trip on " + to_string(j));
    DenseRow coeffs = renv.conjugated_core_coords(j);
    SparseRow back;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) back = axpy(back, coeffs[i], vectors[i]);
    if (back.dense(cols) != renv.lambda_coords(j).dense(cols)) {
      Certificate c{"round-trip", {to_string(j)}, {coeffs}, {}};
      r.certificates.push_back(std::move(c));
      return fail(r, "abelianized round trip fails on " + to_string(j));
    }
  }
  r.detail = std::to_string(family.size()) + " family words, " + std::to_string(cores.size()) +
             " cores, " + std::to_string(samples) + " samples";
  return r;
}

// ---------------------------------------------------------------------------
// Spanning family

Report verify_lemma4(const FiniteGroup& f, const Subgroup& n, const std::string& subject) {
  Report r = make("lemma4", subject.empty() ? f.name() : subject);
  RelativeEnvelope renv(Envelope(f), n);
  const Envelope& env = renv.envelope();
  const std::size_t cols = env.pair_count();
  const std::size_t ncore = renv.b_cores().size();

  std::vector<DenseRow> lam4, lam3, core4, core3;
  for (Elem z : renv.reps()) {
    for (const auto& e : renv.spanning_family()) {
      Word w = conj(e.word, env.u(z));
      if (!renv.member_jnf(w)) return fail(r, "family element " + e.label() + " is not in J_{N,F}");
      SparseRow v = renv.lambda_coords(w);
      lam4.push_back(dense_of(v, cols));
      core4.push_back(renv.core_coordinates_of(v));
    }
  }
  for (const auto& v : renv.conjugated_core_vectors()) {
    lam3.push_back(dense_of(v, cols));
    core3.push_back(renv.core_coordinates_of(v));
  }
  DenseMatrix h4 = hnf_of(lam4, cols), h3 = hnf_of(lam3, cols);
  DenseMatrix c4 = hnf_of(core4, ncore), c3 = hnf_of(core3, ncore);
  r.certificates.push_back({"lambda-hnf", {}, h3, {}});
  r.certificates.push_back({"core-hnf", {}, c3, {}});
  if (h4 != h3) {
    r.certificates.push_back({"lambda-hnf-family", {}, h4, {}});
    return fail(r, "Lambda spans differ");
  }
  if (c4 != c3) {
    r.certificates.push_back({"core-hnf-family", {}, c4, {}});
    return fail(r, "core-coordinate spans differ");
  }
  r.detail = "rank " + std::to_string(h3.size()) + " in Lambda, " + std::to_string(c3.size()) +
             " in core coordinates";
  return r;
}

// ---------------------------------------------------------------------------
// The alpha map

Word alpha_map(const RelativeEnvelope& renv, const Word& j) {
  const Envelope& env = renv.envelope();
  const FiniteGroup& f = env.group();
  Word basis_word = env.express_in_basis(j);
  WordAssignmentFn alpha = [&](GenId g) -> std::optional<Word> {
    if (g.tag != kTagBasis || g.index >= env.pair_count()) return std::nullopt;
    auto [x, y] = env.pair_of(g.index);
    Word lift = env.u(renv.rep(x)) * env.u(renv.rep(y)) * env.u(renv.rep(f.mul(x, y)), -1);
    return env.pair_word(x, y).inverse() * lift;
  };
  return apply_hom(alpha, basis_word);
}

Report verify_lemma7(const FiniteGroup& f, const Subgroup& n, std::size_t samples,
                     std::uint64_t seed, const std::string& subject) {
  Report r = make("lemma7", subject.empty() ? f.name() : subject, seed);
  RelativeEnvelope renv(Envelope(f), n);
  RelativeRewriter rw(renv);
  const auto letters = rw.family(1);

  // The modulus [J_{N,F},J_F] + [J_{N,F},U_{N,F}] is (rho_n - 1) Lambda in Z^E,
  // since U_{N,F} acts through its image N.
  const Envelope& env = renv.envelope();
  const std::size_t cols = env.pair_count();
  IntMatrix modulus(cols), lambda(cols);
  const auto& vectors = renv.conjugated_core_vectors();
  for (const auto& c : vectors) {
    lambda.add_row(c);
    for (Elem m : n.members()) {
      SparseRow row = env.act(m, c) - c;
      if (!row.empty()) modulus.add_row(std::move(row));
    }
  }
  Subquotient quotient(modulus, lambda);

  auto check = [&](const Word& j) -> std::optional<std::string> {
    Word a = alpha_map(renv, j);
    if (!renv.member_jnf(a)) return "alpha(" + to_string(j) + ") is not in J_{N,F}";
    if (!quotient.is_zero(renv.lambda_coords(a) + renv.lambda_coords(j)))
      return "alpha(j) j is not in the modulus for j = " + to_string(j);
    return std::nullopt;
  };

  std::size_t checked = 0;
  for (const auto& c : renv.b_cores()) {
    if (auto bad = check(c.word)) return fail(r, *bad);
    ++checked;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    if (auto bad = check(random_jnf_member(letters, renv.envelope(), rng))) return fail(r, *bad);
    ++checked;
  }
  r.detail = std::to_string(checked) + " elements, modulus rank " +
             std::to_string(hnf_of(modulus.dense(), cols).size());
  return r;
}

// ---------------------------------------------------------------------------
// Excision

DenseMatrix kernel_generators(const std::vector<Integer>& source_orders, const DenseMatrix& phi,
                              const std::vector<Integer>& target_orders) {
  const std::size_t k = source_orders.size(), kt = target_orders.size();
  DenseMatrix stacked = phi;
  for (std::size_t j = 0; j < kt; ++j)
    if (target_orders[j] != 0) {
      DenseRow row(kt);
      row[j] = target_orders[j];
      stacked.push_back(std::move(row));
    }
  if (stacked.empty()) return {};
  DenseMatrix out;
  for (const auto& x : left_kernel(stacked, kt)) {
    DenseRow v(x.begin(), x.begin() + std::ptrdiff_t(k));
    if (!all_zero(v)) out.push_back(std::move(v));
  }
  return out;
}

Report excision_product(const FiniteGroup& n, const FiniteGroup& m0, const MultiplierOptions& opt,
                        const std::string& subject) {
  Report r = make("excise-product", subject.empty() ? n.name() + " x " + m0.name() : subject);
  auto dp = direct_product(n, m0);
  if (dp.group.order() > opt.cap)
    throw Error(ErrorKind::CapExceeded, "product of order " + std::to_string(dp.group.order()));
  auto src = kj2(n, Subgroup::whole(n), opt);
  auto dst = kj2(dp.group, Subgroup::whole(dp.group), opt);
  DenseMatrix phi = kj2_map(src, dst, dp.left);
  const auto& so = src.subquotient->moduli();
  const auto& to = dst.subquotient->moduli();
  r.certificates.push_back({"induced-map", {}, phi,
                            {"source " + structure_str(src.structure),
                             "target " + structure_str(dst.structure)}});
  r.detail = structure_str(src.structure) + " -> " + structure_str(dst.structure);
  if (!is_injective_map(so, phi, to)) return fail(r, r.detail + " is not injective");
  return r;
}

Report excision_extended(const FiniteGroup& g, const Subgroup& f_sub, const Subgroup& n_sub,
                         const MultiplierOptions& opt, const std::string& subject) {
  Report r = make("excise-extended", subject.empty() ? g.name() : subject);
  if (g.order() > opt.cap)
    throw Error(ErrorKind::CapExceeded, "group of order " + std::to_string(g.order()));
  if (!is_subgroup(g, f_sub) || !is_subgroup(g, n_sub) || !is_normal(g, n_sub)) {
    r.verdict = Verdict::Skipped;
    r.detail = "N is not normal in G";
    return r;
  }
  for (Elem x : n_sub.members())
    if (!f_sub.contains(x)) {
      r.verdict = Verdict::Skipped;
      r.detail = "N is not contained in F";
      return r;
    }
  auto emb_f = as_group(g, f_sub);
  std::vector<Elem> back(g.order(), 0);
  for (Elem i = 0; i < emb_f.group.order(); ++i) back[emb_f.inclusion.images[i]] = i;
  std::vector<Elem> n_in_f;
  for (Elem x : n_sub.members()) n_in_f.push_back(back[x]);
  std::sort(n_in_f.begin(), n_in_f.end());
  Subgroup nf(emb_f.group.order(), n_in_f);

  auto ext_f = kj2_extended(emb_f.group, nf, opt);
  auto ext_g = kj2_extended(g, n_sub, opt);
  DenseMatrix phi = kj2_map(ext_f, ext_g, emb_f.inclusion);

  auto emb_n = as_group(emb_f.group, nf);
  auto plain_n = kj2(emb_n.group, Subgroup::whole(emb_n.group), opt);
  DenseMatrix psi = kj2_map(plain_n, ext_f, emb_n.inclusion);

  const auto& so = ext_f.subquotient->moduli();
  const auto& to = ext_g.subquotient->moduli();
  DenseMatrix ker = kernel_generators(so, phi, to);
  EchelonLattice image(so.size());
  for (const auto& row : psi) image.insert(row);
  for (std::size_t i = 0; i < so.size(); ++i)
    if (so[i] != 0) {
      DenseRow e(so.size());
      e[i] = so[i];
      image.insert(std::move(e));
    }
  r.certificates.push_back({"induced-map", {}, phi,
                            {"source " + structure_str(ext_f.structure),
                             "target " + structure_str(ext_g.structure)}});
  r.certificates.push_back({"kj2-image", {}, psi, {"kj2(N) = " + structure_str(plain_n.structure)}});
  r.detail = structure_str(ext_f.structure) + " -> " + structure_str(ext_g.structure) +
             ", kernel generators " + std::to_string(ker.size());
  for (const auto& v : ker)
    if (!image.contains(v)) {
      r.certificates.push_back({"kernel", {}, ker, {}});
      return fail(r, r.detail + "; kernel leaves the image of kj2(N)");
    }
  return r;
}

// ---------------------------------------------------------------------------
// Multiplier suites

Report schur_agreement(const FiniteGroup& f, const Presentation& p, const MultiplierOptions& opt,
                       const std::string& subject) {
  Report r = make("schur", subject.empty() ? f.name() : subject);
  FiniteGroup pg = presented_group(p);
  if (pg.order() != f.order())
    return fail(r, "presentation defines a group of order " + std::to_string(pg.order()) +
                       ", not " + std::to_string(f.order()));
  auto k = kj2(f, Subgroup::whole(f), opt).structure;
  auto h = schur_hopf(p);
  r.certificates.push_back({"presentation", {}, {}, {format_presentation(p)}});
  r.detail = "kj2 " + k.to_string() + ", hopf " + h.to_string();
  if (!(k == h)) return fail(r, r.detail);
  return r;
}

Report order_independence(const FiniteGroup& f, const Subgroup& n, std::size_t relabelings,
                          std::uint64_t seed, const MultiplierOptions& opt,
                          const std::string& subject) {
  Report r = make("order", subject.empty() ? f.name() : subject, seed);
  auto base = kj2(f, n, opt).structure;
  auto base_ext = kj2_extended(f, n, opt).structure;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < relabelings; ++t) {
    std::vector<Elem> order(f.order());
    std::iota(order.begin(), order.end(), Elem(0));
    std::shuffle(order.begin() + 1, order.end(), rng);
    FiniteGroup g = f.relabeled(order);
    std::vector<Elem> where(f.order());
    for (Elem i = 0; i < f.order(); ++i) where[order[i]] = i;
    std::vector<Elem> members;
    for (Elem x : n.members()) members.push_back(where[x]);
    std::sort(members.begin(), members.end());
    const Subgroup m(g.order(), members);
    auto s = kj2(g, m, opt).structure;
    auto s_ext = kj2_extended(g, m, opt).structure;
    if (!(s == base) || !(s_ext == base_ext)) {
      std::vector<std::string> perm;
      for (Elem x : order) perm.push_back(std::to_string(x));
      r.certificates.push_back({"relabeling", perm, {}, {}});
      return fail(r, base.to_string() + " / " + base_ext.to_string() + " became " + s.to_string() +
                         " / " + s_ext.to_string());
    }
  }
  r.detail = base.to_string() + " (extended " + base_ext.to_string() + ") under " +
             std::to_string(relabelings) + " relabelings";
  return r;
}

Report weak_core_sweep(const FiniteGroup& f, const Subgroup& n, const MultiplierOptions& opt,
                    const std::string& subject) {
  Report r = make("weakcore", subject.empty() ? f.name() : subject);
  auto out = weak_core_consequence(f, n, opt);
  r.detail = out.reason;
  switch (out.status) {
    case WeakCoreOutcome::Status::Pass: r.verdict = Verdict::Pass; break;
    case WeakCoreOutcome::Status::Fail: r.verdict = Verdict::Fail; break;
    case WeakCoreOutcome::Status::Skipped: r.verdict = Verdict::Skipped; break;
  }
  return r;
}

CocycleTable canonical_cocycle_table(const FiniteGroup& f, const Subgroup& n,
                                     const MultiplierOptions& opt) {
  auto data = canonical_extension(f, n, opt);
  CocycleTable t;
  for (Elem a : n.members())
    for (Elem b : n.members()) t[{a, b}] = data.cocycle(a, b);
  return t;
}

Report verify_cocycle_table(const FiniteGroup& f, const Subgroup& n, const CocycleTable& table,
                            const MultiplierOptions& opt, const std::string& subject) {
  Report r = make("cocycle", subject.empty() ? f.name() : subject);
  auto data = canonical_extension(f, n, opt);
  for (Elem a : n.members())
    for (Elem b : n.members()) {
      auto it = table.find({a, b});
      if (it == table.end())
        return fail(r, "missing entry (" + std::to_string(a) + "," + std::to_string(b) + ")");
      for (const auto& [c, v] : it->second.entries)
        if (c >= data.columns) return fail(r, "entry column out of range");
    }
  auto defect = cocycle_defect(data, [&](Elem a, Elem b) { return table.at({a, b}); });
  if (defect) {
    auto [m, k, p] = *defect;
    r.certificates.push_back({"defect", {}, {}, {std::to_string(m) + " " + std::to_string(k) + " " +
                                                 std::to_string(p)}});
    return fail(r, "cocycle identity fails at (" + std::to_string(m) + "," + std::to_string(k) +
                       "," + std::to_string(p) + ")");
  }
  r.detail = "A = " + data.kernel_structure.to_string() + ", " +
             std::to_string(n.size() * n.size()) + " entries";
  return r;
}

// ---------------------------------------------------------------------------
// Corpus

namespace {

std::vector<std::string> corpus_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    std::size_t i = line.find_first_not_of(" \t");
    if (i == std::string::npos || line[i] == '#') continue;
    out.push_back(line.substr(i));
  }
  return out;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

[[noreturn]] void bad(const std::filesystem::path& p, const std::string& why) {
  throw Error(ErrorKind::ParseError, p.filename().string() + ": " + why);
}

std::vector<std::string> body_of(const std::filesystem::path& p) {
  auto lines = corpus_lines(read_text_file(p));
  if (lines.empty() || lines[0] != kFormatLine) bad(p, "missing 'regkt-format 1' line");
  lines.erase(lines.begin());
  if (lines.empty()) bad(p, "empty file");
  return lines;
}

const FiniteGroup& group_ref(const Corpus& c, const std::filesystem::path& p, const std::string& name) {
  auto it = c.groups.find(name);
  if (it == c.groups.end()) bad(p, "unknown group '" + name + "'");
  return it->second;
}

// Everything after the first `skip` tokens, rejoined (element specs may contain spaces).
std::string rest_of(const std::string& line, std::size_t skip) {
  std::size_t pos = 0;
  for (std::size_t i = 0; i < skip; ++i) {
    pos = line.find_first_not_of(" \t", pos);
    pos = line.find_first_of(" \t", pos);
    if (pos == std::string::npos) return "";
  }
  std::size_t b = line.find_first_not_of(" \t", pos);
  return b == std::string::npos ? "" : line.substr(b);
}

}  // namespace

Subgroup parse_subgroup_spec(const FiniteGroup& g, std::string_view spec) {
  auto gens = parse_element_list(g, spec);
  return subgroup_generated(g, gens);
}

Corpus load_corpus(const std::filesystem::path& dir, std::size_t cap) {
  if (!std::filesystem::is_directory(dir))
    throw Error(ErrorKind::ParseError, "not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());

  Corpus c;
  for (const auto& p : files)
    if (p.extension() == ".grp") c.groups.emplace(p.stem().string(), read_group_file(p, cap));
  for (const auto& p : files)
    if (p.extension() == ".pres")
      c.presentations.emplace(p.stem().string(), parse_presentation(read_text_file(p)));

  for (const auto& p : files) {
    if (p.extension() != ".pair") continue;
    auto lines = body_of(p);
    Corpus::Pair pair;
    std::string spec;
    bool have_normal = false;
    for (const auto& l : lines) {
      auto t = tokens(l);
      if (t[0] == "pair" && t.size() == 2) {
        pair.group = t[1];
      } else if (t[0] == "normal") {
        spec = rest_of(l, 1);
        have_normal = true;
      } else {
        bad(p, "unexpected line '" + l + "'");
      }
    }
    if (pair.group.empty() || !have_normal) bad(p, "needs 'pair <group>' and 'normal <spec>'");
    pair.f = group_ref(c, p, pair.group);
    pair.n = spec == "whole" ? Subgroup::whole(pair.f) : parse_normal_spec(pair.f, spec);
    c.pairs.emplace(p.stem().string(), std::move(pair));
  }

  for (const auto& p : files) {
    if (p.extension() != ".excise") continue;
    auto lines = body_of(p);
    auto t = tokens(lines[0]);
    Corpus::Excision ex;
    if (t.size() == 4 && t[0] == "excise" && t[1] == "product") {
      ex.product = true;
      ex.a = group_ref(c, p, t[2]);
      ex.b = group_ref(c, p, t[3]);
    } else if (t.size() >= 3 && t[0] == "excise" && t[1] == "extended") {
      ex.product = false;
      ex.a = group_ref(c, p, t[2]);
      if (lines.size() != 3 || !lines[1].starts_with("sub ") || !lines[2].starts_with("normal "))
        bad(p, "extended excision needs 'sub <gens>' and 'normal <gens>' lines");
      ex.f_sub = parse_subgroup_spec(ex.a, rest_of(lines[1], 1));
      ex.n_sub = parse_normal_spec(ex.a, rest_of(lines[2], 1));
    } else {
      bad(p, "expected 'excise product <N> <M0>' or 'excise extended <G>'");
    }
    c.excisions.emplace(p.stem().string(), std::move(ex));
  }

  for (const auto& p : files) {
    if (p.extension() != ".cert") continue;
    auto lines = body_of(p);
    auto t = tokens(lines[0]);
    if (t.size() != 3 || t[0] != "cert") bad(p, "expected 'cert <kind> <target>'");
    Corpus::Cert cert;
    cert.kind = t[1];
    cert.target = t[2];
    if (cert.kind == "basis") {
      group_ref(c, p, cert.target);
      for (std::size_t i = 1; i < lines.size(); ++i) cert.words.push_back(parse_word(lines[i]));
    } else if (cert.kind == "cocycle") {
      if (!c.pairs.count(cert.target)) bad(p, "unknown pair '" + cert.target + "'");
      for (std::size_t i = 1; i < lines.size(); ++i) {
        auto e = tokens(lines[i]);
        if (e.size() < 2) bad(p, "bad cocycle entry '" + lines[i] + "'");
        SparseRow v;
        for (std::size_t k = 2; k < e.size(); ++k) {
          auto colon = e[k].find(':');
          if (colon == std::string::npos) bad(p, "bad coordinate '" + e[k] + "'");
          try {
            v.add(std::uint32_t(std::stoul(e[k].substr(0, colon))), Integer(e[k].substr(colon + 1)));
          } catch (const std::exception&) {
            bad(p, "bad coordinate '" + e[k] + "'");
          }
        }
        v.normalize();
        try {
          cert.table[{Elem(std::stoul(e[0])), Elem(std::stoul(e[1]))}] = std::move(v);
        } catch (const std::exception&) {
          bad(p, "bad cocycle entry '" + lines[i] + "'");
        }
      }
    } else {
      bad(p, "unknown certificate kind '" + cert.kind + "'");
    }
    c.certs.emplace(p.stem().string(), std::move(cert));
  }
  return c;
}

std::vector<Report> run_corpus(const Corpus& corpus, const HarnessConfig& cfg) {
  struct Task {
    std::string suite, subject;
    std::function<Report(std::uint64_t)> run;
  };
  std::vector<Task> tasks;
  const auto& mo = cfg.multiplier;

  for (const auto& [name, g] : corpus.groups) {
    if (g.order() <= 12)
      tasks.push_back({"lemma2", name, [&g, name](std::uint64_t) { return verify_lemma2(g, name); }});
    if (auto it = corpus.presentations.find(name); it != corpus.presentations.end()) {
      const Presentation& p = it->second;
      tasks.push_back({"schur", name, [&g, &p, &mo, name](std::uint64_t) {
                         return schur_agreement(g, p, mo, name);
                       }});
    }
  }
  for (const auto& [name, pr] : corpus.pairs) {
    const FiniteGroup& f = pr.f;
    const Subgroup& n = pr.n;
    tasks.push_back({"lemma134", name, [&, name](std::uint64_t s) {
                       return verify_lemma1_lemma3(f, n, cfg.samples, cfg.family_depth, s, name);
                     }});
    tasks.push_back({"lemma4", name, [&, name](std::uint64_t) { return verify_lemma4(f, n, name); }});
    tasks.push_back({"lemma7", name, [&, name](std::uint64_t s) {
                       return verify_lemma7(f, n, cfg.alpha_samples, s, name);
                     }});
    tasks.push_back({"order", name, [&, name](std::uint64_t s) {
                       return order_independence(f, n, cfg.relabelings, s, mo, name);
                     }});
    tasks.push_back({"weakcore", name, [&, name](std::uint64_t) { return weak_core_sweep(f, n, mo, name); }});
  }
  for (const auto& [name, ex] : corpus.excisions) {
    if (ex.product)
      tasks.push_back({"excise-product", name, [&ex, &mo, name](std::uint64_t) {
                         return excision_product(ex.a, ex.b, mo, name);
                       }});
    else
      tasks.push_back({"excise-extended", name, [&ex, &mo, name](std::uint64_t) {
                         return excision_extended(ex.a, ex.f_sub, ex.n_sub, mo, name);
                       }});
  }
  for (const auto& [name, cert] : corpus.certs) {
    if (cert.kind == "basis") {
      tasks.push_back({"lemma2", name, [&corpus, &cert, name](std::uint64_t) {
                         return verify_lemma2_words(corpus.groups.at(cert.target), cert.words, name);
                       }});
    } else {
      tasks.push_back({"cocycle", name, [&corpus, &cert, &mo, name](std::uint64_t) {
                         const auto& pr = corpus.pairs.at(cert.target);
                         return verify_cocycle_table(pr.f, pr.n, cert.table, mo, name);
                       }});
    }
  }

  std::vector<Report> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      const auto& t = tasks[i];
      const std::uint64_t seed = suite_seed(cfg.seed, t.suite, t.subject);
      auto start = std::chrono::steady_clock::now();
      Report r;
      try {
        r = t.run(seed);
      } catch (const Error& e) {
        r = make(t.suite, t.subject, seed);
        r.verdict = e.kind() == ErrorKind::CapExceeded ? Verdict::Skipped : Verdict::Fail;
        r.detail = e.what();
      }
      r.seed = seed;
      if (cfg.timing)
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      out[i] = std::move(r);
    }
  };
  std::size_t threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(tasks.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  sort_reports(out);
  return out;
}

}  // namespace regkt
