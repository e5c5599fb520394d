#ifndef NILALG_REPORT_HPP
#define NILALG_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace nilalg {

struct Assertion {
  std::string id;
  std::string expected;
  std::string computed;
  bool pass = false;
  std::string note;
};

struct SectionReport {
  std::string section;
  std::vector<Assertion> assertions;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }

  void check(const std::string& id, const std::string& expected, const std::string& computed,
             const std::string& note = "");
  void check_bool(const std::string& id, bool expected, bool computed,
                  const std::string& note = "");
  void check_count(const std::string& id, std::size_t expected, std::size_t computed,
                   const std::string& note = "");
  void info(const std::string& id, const std::string& text);
};

struct PaperReport {
  std::uint64_t seed = 0;
  std::vector<SectionReport> sections;
  bool ok() const;
};

/// Text and JSON renderings agree on every reported value; JSON output is
/// byte-stable for a fixed seed.
std::string render_text(const SectionReport& r);
std::string render_text(const PaperReport& r);
std::string render_json(const SectionReport& r);
std::string render_json(const PaperReport& r);

}  // namespace nilalg

#endif
