#include "regkt/group_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace regkt {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    if (!line.empty() && line.front() != '#') out.push_back(line);
    start = end + 1;
  }
  return out;
}

std::size_t parse_count(std::string_view tok, const char* what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw Error(ErrorKind::ParseError, std::string("bad ") + what + ": '" + std::string(tok) + "'");
  return v;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

FiniteGroup parse_group(std::string_view text, std::string name, std::size_t cap) {
  auto lines = content_lines(text);
  std::size_t at = 0;
  if (at < lines.size() && lines[at].starts_with("regkt-format")) {
    if (lines[at] != kFormatLine)
      throw Error(ErrorKind::ParseError, "unsupported format version: " + std::string(lines[at]));
    ++at;
  }
  if (at >= lines.size()) throw Error(ErrorKind::ParseError, "missing group header");
  auto head = split_ws(lines[at++]);
  if (head.size() != 2) throw Error(ErrorKind::ParseError, "header must be 'perm <degree>' or 'table <n>'");
  if (head[0] == "perm") {
    std::size_t degree = parse_count(head[1], "degree");
    if (degree == 0) throw Error(ErrorKind::ParseError, "degree must be positive");
    std::vector<Permutation> gens;
    for (; at < lines.size(); ++at) gens.push_back(parse_cycles(lines[at], degree));
    return FiniteGroup::from_permutations(degree, gens, cap, std::move(name));
  }
  if (head[0] == "table") {
    std::size_t n = parse_count(head[1], "table size");
    if (n == 0) throw Error(ErrorKind::ParseError, "table size must be positive");
    if (n > cap) throw Error(ErrorKind::CapExceeded, "table larger than cap");
    if (lines.size() - at != n)
      throw Error(ErrorKind::ParseError, "expected " + std::to_string(n) + " table rows");
    std::vector<std::vector<Elem>> table;
    for (; at < lines.size(); ++at) {
      auto toks = split_ws(lines[at]);
      if (toks.size() != n) throw Error(ErrorKind::ParseError, "table row has wrong length");
      std::vector<Elem> row;
      for (auto t : toks) {
        std::size_t v = parse_count(t, "table entry");
        if (v >= n) throw Error(ErrorKind::ParseError, "table entry out of range");
        row.push_back(Elem(v));
      }
      table.push_back(std::move(row));
    }
    return FiniteGroup::from_table(table, std::move(name));
  }
  throw Error(ErrorKind::ParseError, "unknown group kind '" + std::string(head[0]) + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

FiniteGroup read_group_file(const std::filesystem::path& path, std::size_t cap) {
  return parse_group(read_text_file(path), path.stem().string(), cap);
}

std::string format_group(const FiniteGroup& g) {
  std::ostringstream os;
  os << kFormatLine << '\n';
  if (g.has_permutations()) {
    os << "perm " << g.degree() << '\n';
    for (const auto& p : g.permutation_generators()) os << format_cycles(p) << '\n';
    return os.str();
  }
  os << "table " << g.order() << '\n';
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b) os << (b ? " " : "") << g.mul(a, b);
    os << '\n';
  }
  return os.str();
}

Elem parse_element(const FiniteGroup& g, std::string_view token) {
  token = trim(token);
  if (token.empty()) throw Error(ErrorKind::ParseError, "empty element");
  if (token.front() == '(') {
    if (!g.has_permutations())
      throw Error(ErrorKind::ParseError, "cycle notation used for a table group");
    auto e = g.find_permutation(parse_cycles(token, g.degree()));
    if (!e) throw Error(ErrorKind::NotMember, "permutation is not in the group");
    return *e;
  }
  std::size_t v = parse_count(token, "element index");
  if (v >= g.order()) throw Error(ErrorKind::NotMember, "element index out of range");
  return Elem(v);
}

std::vector<Elem> parse_element_list(const FiniteGroup& g, std::string_view spec) {
  std::vector<Elem> gens;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find(';', start);
    if (end == std::string_view::npos) end = spec.size();
    auto tok = trim(spec.substr(start, end - start));
    if (!tok.empty()) gens.push_back(parse_element(g, tok));
    start = end + 1;
  }
  return gens;
}

Subgroup parse_normal_spec(const FiniteGroup& g, std::string_view spec) {
  return normal_closure(g, parse_element_list(g, spec));
}

}  // namespace regkt
