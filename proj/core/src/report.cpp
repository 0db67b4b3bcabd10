#include "lnq/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lnq {

namespace {

using ordered_json = nlohmann::ordered_json;

// Integers that fit in an int64 become JSON numbers; everything else is the
// exact "a/b" string.
ordered_json rat_to_json(const Rat& value) {
  if (rat_is_integer(value) && value.get_num().fits_slong_p())
    return static_cast<std::int64_t>(value.get_num().get_si());
  return rat_str(value);
}

ordered_json leonard_to_json(const LeonardParams& lp) {
  ordered_json j;
  j["d"] = lp.d;
  j["h"] = rat_to_json(lp.h);
  j["h_star"] = rat_to_json(lp.h_star);
  j["s"] = rat_to_json(lp.s);
  j["theta0"] = rat_to_json(lp.theta0);
  j["theta_star0"] = rat_to_json(lp.theta_star0);
  return j;
}

}  // namespace

long VerificationReport::pass_count() const {
  long count = 0;
  for (const CheckResult& c : checks) count += c.passed ? 1 : 0;
  return count;
}

long VerificationReport::fail_count() const {
  return static_cast<long>(checks.size()) - pass_count();
}

std::string report_to_json(const VerificationReport& report) {
  ordered_json j;
  j["schema_version"] = report.schema_version;
  j["params"] = {{"n", report.n}, {"q", report.q}, {"phi", rat_to_json(report.phi)}};
  j["checks"] = ordered_json::array();
  for (const CheckResult& c : report.checks) {
    ordered_json jc;
    jc["id"] = c.id;
    jc["paper_anchor"] = c.paper_anchor;
    jc["status"] = c.passed ? "pass" : "fail";
    if (c.witness) jc["witness"] = *c.witness;
    jc["elapsed_ms"] = c.elapsed_us / 1000;
    j["checks"].push_back(std::move(jc));
  }
  ordered_json endpoints = ordered_json::array();
  for (const EndpointMultiplicity& em : report.decomposition) {
    ordered_json je;
    je["r"] = em.endpoint;
    je["mult"] = em.multiplicity;
    je["d"] = em.diameter;
    je["leonard"] = leonard_to_json(em.leonard);
    endpoints.push_back(std::move(je));
  }
  j["decomposition"] = {{"endpoints", std::move(endpoints)}};
  ordered_json variants = ordered_json::array();
  for (const auto& [tag, dims] : report.splits.level_dims) {
    ordered_json jv;
    jv["variant"] = tag;
    jv["level_dims"] = dims;
    variants.push_back(std::move(jv));
  }
  j["splits"] = {{"variants", std::move(variants)}};
  j["summary"] = {{"pass", report.pass_count()},
                  {"fail", report.fail_count()},
                  {"elapsed_ms", report.elapsed_ms}};
  return j.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  for (const CheckResult& c : report.checks) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << "  (" << c.paper_anchor << ", "
        << c.elapsed_us / 1000 << " ms)\n";
    if (!c.passed && c.witness) out << "       " << *c.witness << "\n";
  }
  out << "summary: " << report.pass_count() << " passed, " << report.fail_count()
      << " failed, " << report.elapsed_ms << " ms\n";
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace lnq
