#include "regkt/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace regkt {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skipped: return "SKIP";
  }
  return "?";
}

Verdict overall(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (r.verdict == Verdict::Fail) return Verdict::Fail;
  return Verdict::Pass;
}

void sort_reports(std::vector<Report>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const Report& a, const Report& b) {
    if (a.suite != b.suite) return a.suite < b.suite;
    return a.subject < b.subject;
  });
}

std::string format_text(const std::vector<Report>& reports) {
  std::ostringstream os;
  os << "regkt-format 1\n";
  std::size_t pass = 0, fail = 0, skip = 0;
  for (const auto& r : reports) {
    os << to_string(r.verdict) << ' ' << r.suite << ' ' << r.subject << " seed=" << r.seed;
    if (r.seconds) os << " time=" << *r.seconds << 's';
    if (!r.detail.empty()) os << " : " << r.detail;
    os << '\n';
    for (const auto& c : r.certificates)
      if (r.verdict == Verdict::Fail) os << "  certificate " << c.name << '\n';
    switch (r.verdict) {
      case Verdict::Pass: ++pass; break;
      case Verdict::Fail: ++fail; break;
      case Verdict::Skipped: ++skip; break;
    }
  }
  os << "summary " << to_string(overall(reports)) << " pass=" << pass << " fail=" << fail
     << " skip=" << skip << '\n';
  return os.str();
}

namespace {

nlohmann::json matrix_json(const DenseMatrix& m) {
  auto rows = nlohmann::json::array();
  for (const auto& row : m) {
    auto r = nlohmann::json::array();
    for (const auto& x : row) {
      if (x.fits_slong_p())
        r.push_back(x.get_si());
      else
        r.push_back(x.get_str());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

std::string format_json(const std::vector<Report>& reports, std::uint64_t seed) {
  nlohmann::json doc;
  doc["format"] = 1;
  doc["seed"] = seed;
  doc["verdict"] = to_string(overall(reports));
  auto suites = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json s;
    s["name"] = r.suite;
    s["subject"] = r.subject;
    s["verdict"] = to_string(r.verdict);
    s["seed"] = r.seed;
    s["detail"] = r.detail;
    if (r.seconds) s["timing"] = *r.seconds;
    auto certs = nlohmann::json::array();
    for (const auto& c : r.certificates) {
      nlohmann::json j;
      j["name"] = c.name;
      j["words"] = c.words;
      if (!c.matrix.empty()) j["matrix"] = matrix_json(c.matrix);
      if (!c.notes.empty()) j["notes"] = c.notes;
      certs.push_back(std::move(j));
    }
    s["certificates"] = std::move(certs);
    suites.push_back(std::move(s));
  }
  doc["suites"] = std::move(suites);
  return doc.dump(2) + "\n";
}

}  // namespace regkt
