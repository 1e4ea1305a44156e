#include "wboson/report.hpp"

#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace wb {
namespace {

std::string timestamp() {
  const char* env = std::getenv("WBOSON_TIMESTAMP");
  return env ? env : "1970-01-01T00:00:00Z";
}

nlohmann::ordered_json polyCoeffs(const Poly1& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.coeffs())
    arr.push_back({e, c.str()});
  return arr;
}

}  // namespace

ReportDocument ReportDocument::build(int p) {
  ReportDocument doc;
  doc.data = curve(p);
  doc.samples = classify(p);
  return doc;
}

std::string ReportDocument::toJson() const {
  nlohmann::ordered_json j;
  j["format"] = "wboson-report";
  j["version"] = "1";
  j["p"] = data.p;
  j["central_charge"] = data.centralCharge.str();
  j["C_p"] = data.Cp.str();
  nlohmann::ordered_json pc = nlohmann::ordered_json::array();
  for (const auto& [k, c] : data.P.coeffs())
    pc.push_back({k.first, k.second, c.str()});
  j["P"] = pc;
  j["u"] = polyCoeffs(data.u);
  j["v"] = polyCoeffs(data.v);
  j["g"] = polyCoeffs(data.g);
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (const auto& s : samples) {
    nlohmann::ordered_json row;
    row["t"] = s.t.str();
    row["u"] = s.x.str();
    row["v"] = s.y.str();
    table.push_back(row);
  }
  j["samples"] = table;
  j["metadata"] = {{"generator", "wboson/1.0.0"}, {"timestamp", timestamp()}};
  return j.dump(2) + "\n";
}

std::string ReportDocument::toText() const {
  std::ostringstream out;
  out << "wboson classification report\n";
  out << "p: " << data.p << "\n";
  out << "central charge: " << data.centralCharge.str() << "\n";
  out << "C_p: " << data.Cp.str() << "\n";
  out << "g(x) = " << data.g.str("x") << "\n";
  out << "P(x,y) = y^2 - g(x)\n";
  out << "u(t) = " << data.u.str("t") << "\n";
  out << "v(t) = " << data.v.str("t") << "\n";
  out << "highest weights (u(t), v(t)); t and 2(p-1)-t give mirror points:\n";
  for (const auto& s : samples)
    out << "  t=" << s.t.str() << " -> (" << s.x.str() << ", " << s.y.str()
        << ")\n";
  out << "generated: " << timestamp() << "\n";
  return out.str();
}

}  // namespace wb
