#include "setcalc/json_io.hpp"

namespace setcalc {

Json rational_json(const Rational& r) {
  Json j;
  j["num"] = r.num().str();
  j["den"] = r.den().str();
  j["decimal"] = r.decimal(6);
  return j;
}

Json set_json(const GSet& s) {
  Json arr = Json::array();
  for (const auto& e : s.elements()) arr.push_back(s.group()->format_element(e));
  return arr;
}

Json certificate_json(const MagnificationCertificate& cert, bool verified) {
  Json j;
  j["schema"] = "setcalc.certificate/1";
  j["K"] = rational_json(cert.K);
  j["X"] = set_json(cert.X);
  j["method"] = cert.method == MagnificationCertificate::Method::brute ? "brute" : "flow";
  j["iterations"] = cert.iterations;
  j["candidates_examined"] = cert.candidates_examined;
  j["verified"] = verified;
  return j;
}

Json cover_json(const CoverCertificate& cert) {
  Json j;
  j["schema"] = "setcalc.cover/1";
  j["T"] = set_json(cert.T);
  j["size_bound"] = rational_json(cert.size_bound);
  j["covered"] = cert.covered;
  return j;
}

Json report_json(const TheoremReport& report) {
  Json j;
  j["schema"] = "setcalc.report/1";
  j["theorem"] = theorem_name(report.id);
  j["group"] = report.group.str();
  Json hyp = Json::object();
  for (const auto& [name, value] : report.hypothesis) hyp[name] = rational_json(value);
  j["hypothesis"] = hyp;
  Json params = Json::object();
  if (report.h) params["h"] = *report.h;
  if (report.k) params["k"] = *report.k;
  if (report.l) params["l"] = *report.l;
  if (!report.signs.empty()) {
    std::string s;
    for (int v : report.signs) s += v > 0 ? '+' : '-';
    params["signs"] = s;
  }
  j["params"] = params;
  j["bound_coeff"] = rational_json(report.bound_coeff);
  j["reference"] = report.reference;
  j["actual"] = report.actual;
  j["slack"] = rational_json(report.slack);
  Json steps = Json::array();
  for (const auto& s : report.steps) {
    Json step;
    step["label"] = s.label;
    step["lhs"] = s.lhs;
    step["rhs"] = rational_json(s.rhs);
    step["cmp"] = s.cmp == StepCmp::le ? "le" : s.cmp == StepCmp::eq ? "eq" : "ge";
    step["holds"] = s.holds;
    steps.push_back(step);
  }
  j["steps"] = steps;
  j["status"] = status_name(report.status);
  j["pass"] = report.pass;
  j["notes"] = report.notes;
  return j;
}

}  // namespace setcalc
