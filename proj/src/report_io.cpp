#include "qdpi/report_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace qdpi {
namespace {

using nlohmann::ordered_json;

std::string slack_text(const InequalityReport& r) {
  if (r.slack) return format_number(*r.slack);
  switch (r.verdict) {
    case Verdict::Satisfied: return "inf";
    case Verdict::Violated: return "-inf";
    case Verdict::Indeterminate: return "";
  }
  return "";
}

const char* verdict_text(Verdict v) {
  switch (v) {
    case Verdict::Satisfied: return "satisfied";
    case Verdict::Violated: return "violated";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "";
}

ordered_json extended_json(const ExtendedReal& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string format_number(const ExtendedReal& v) {
  return v.is_infinite() ? "inf" : format_number(v.value());
}

std::string report_csv_header() { return "name,trial,lhs,rhs,slack,satisfied,c,cpVerdict,seed"; }

std::string report_to_csv(const InequalityReport& r) {
  std::ostringstream out;
  out << r.name << ',' << r.instance.trial << ',' << format_number(r.lhs) << ','
      << format_number(r.rhs) << ',' << slack_text(r) << ','
      << (r.satisfied() ? "true" : "false") << ','
      << (r.auxiliary.c ? format_number(*r.auxiliary.c) : "") << ','
      << (r.auxiliary.cpVerdict ? (*r.auxiliary.cpVerdict ? "true" : "false") : "") << ','
      << (r.instance.seed ? std::to_string(*r.instance.seed) : "");
  return out.str();
}

std::string report_to_json(const InequalityReport& r) {
  ordered_json j;
  j["name"] = r.name;
  j["trial"] = r.instance.trial;
  j["lhs"] = extended_json(r.lhs);
  j["rhs"] = extended_json(r.rhs);
  if (r.slack) {
    j["slack"] = *r.slack;
  } else {
    j["slack"] = slack_text(r);
  }
  j["satisfied"] = r.satisfied();
  j["verdict"] = verdict_text(r.verdict);
  j["tolerance"] = r.tolerance;
  j["c"] = r.auxiliary.c ? ordered_json(*r.auxiliary.c) : ordered_json(nullptr);
  j["cpVerdict"] =
      r.auxiliary.cpVerdict ? ordered_json(*r.auxiliary.cpVerdict) : ordered_json(nullptr);
  if (r.auxiliary.i1) j["i1"] = *r.auxiliary.i1;
  if (r.auxiliary.signI1) j["signI1"] = *r.auxiliary.signI1;
  j["seed"] = r.instance.seed ? ordered_json(*r.instance.seed) : ordered_json(nullptr);
  j["dim"] = r.instance.dim;
  if (r.instance.ensembleSize) j["ensembleSize"] = r.instance.ensembleSize;
  if (r.instance.mixWeight) j["mixWeight"] = *r.instance.mixWeight;
  return j.dump();
}

std::string summary_to_json(const FuzzSummary& s) {
  ordered_json j;
  j["inequality"] = s.inequality;
  j["trials"] = s.trials;
  j["violations"] = s.violations;
  j["indeterminate"] = s.indeterminate;
  j["worstSlack"] = s.worstSlack ? ordered_json(*s.worstSlack) : ordered_json(nullptr);
  j["slackQuantiles"] = s.slackQuantiles;
  j["violatingSeeds"] = s.violatingSeeds;
  ordered_json strata = ordered_json::array();
  for (const auto& st : s.strata) {
    strata.push_back({{"key", st.key}, {"trials", st.trials}, {"violations", st.violations}});
  }
  j["strata"] = std::move(strata);
  return j.dump();
}

std::string summary_to_text(const FuzzSummary& s) {
  std::ostringstream out;
  out << s.inequality << ": " << s.trials << " trials, " << s.violations
      << " violations, " << s.indeterminate << " indeterminate";
  if (s.worstSlack) out << ", worst slack " << format_number(*s.worstSlack);
  out << '\n';
  for (const auto& st : s.strata) {
    out << "  " << st.key << ": " << st.trials << " trials, " << st.violations
        << " violations\n";
  }
  if (!s.violatingSeeds.empty()) {
    out << "  violating seeds:";
    for (const auto seed : s.violatingSeeds) out << ' ' << seed;
    out << '\n';
  }
  return out.str();
}

}  // namespace qdpi
