#include "nilalg/report.hpp"

#include <sstream>

#include <json.hpp>

namespace nilalg {

namespace {
using json = nlohmann::ordered_json;

json to_json(const SectionReport& r) {
  json out;
  out["section"] = r.section;
  out["passed"] = r.passed();
  out["failed"] = r.failed();
  json list = json::array();
  for (const Assertion& a : r.assertions) {
    json e;
    e["id"] = a.id;
    e["expected"] = a.expected;
    e["computed"] = a.computed;
    e["pass"] = a.pass;
    if (!a.note.empty()) e["note"] = a.note;
    list.push_back(std::move(e));
  }
  out["assertions"] = std::move(list);
  return out;
}
}  // namespace

std::size_t SectionReport::passed() const {
  std::size_t n = 0;
  for (const Assertion& a : assertions)
    if (a.pass) ++n;
  return n;
}

std::size_t SectionReport::failed() const { return assertions.size() - passed(); }

void SectionReport::check(const std::string& id, const std::string& expected,
                          const std::string& computed, const std::string& note) {
  assertions.push_back({id, expected, computed, expected == computed, note});
}

void SectionReport::check_bool(const std::string& id, bool expected, bool computed,
                               const std::string& note) {
  check(id, expected ? "true" : "false", computed ? "true" : "false", note);
}

void SectionReport::check_count(const std::string& id, std::size_t expected, std::size_t computed,
                                const std::string& note) {
  check(id, std::to_string(expected), std::to_string(computed), note);
}

void SectionReport::info(const std::string& id, const std::string& text) {
  assertions.push_back({id, "", "", true, text});
}

bool PaperReport::ok() const {
  for (const SectionReport& s : sections)
    if (!s.ok()) return false;
  return true;
}

std::string render_text(const SectionReport& r) {
  std::ostringstream os;
  os << "== section " << r.section << " ==\n";
  for (const Assertion& a : r.assertions) {
    if (a.expected.empty() && a.computed.empty()) {
      os << "[note] " << a.id << ": " << a.note << "\n";
      continue;
    }
    os << (a.pass ? "[ok]   " : "[FAIL] ") << a.id << ": expected " << a.expected
       << ", computed " << a.computed;
    if (!a.note.empty()) os << "  (" << a.note << ")";
    os << "\n";
  }
  os << r.section << ": " << r.passed() << " passed, " << r.failed() << " failed\n";
  return os.str();
}

std::string render_text(const PaperReport& r) {
  std::ostringstream os;
  os << "seed: " << r.seed << "\n";
  for (const SectionReport& s : r.sections) os << render_text(s);
  os << (r.ok() ? "ALL SECTIONS PASSED" : "SOME ASSERTIONS FAILED") << "\n";
  return os.str();
}

std::string render_json(const SectionReport& r) { return to_json(r).dump(2) + "\n"; }

std::string render_json(const PaperReport& r) {
  json out;
  out["seed"] = r.seed;
  out["pass"] = r.ok();
  json sections = json::array();
  for (const SectionReport& s : r.sections) sections.push_back(to_json(s));
  out["sections"] = std::move(sections);
  return out.dump(2) + "\n";
}

}  // namespace nilalg
