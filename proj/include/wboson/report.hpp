#ifndef WBOSON_REPORT_HPP
#define WBOSON_REPORT_HPP

#include <string>

#include "wboson/zhu.hpp"

namespace wb {

// Classification report: the curve data plus a sample highest-weight table,
// with every scalar in exact lowest-terms text form. Field order is fixed;
// output is byte-identical across runs (the timestamp defaults to a fixed
// epoch and can be overridden via WBOSON_TIMESTAMP).
struct ReportDocument {
  CurveData data;
  std::vector<HighestWeightSample> samples;

  static ReportDocument build(int p);
  std::string toJson() const;
  std::string toText() const;
};

}  // namespace wb

#endif
