#include "wboson/cache.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "wboson/textform.hpp"

namespace wb {

std::string cacheFileName(int p, ScreeningOp op, int level) {
  return "kernel-p" + std::to_string(p) + "-" + screeningOpName(op) + "-L" +
         std::to_string(level) + ".wbc";
}

std::optional<KernelBasis> cacheLoad(const std::string& dir, int p,
                                     ScreeningOp op, int level) {
  namespace fs = std::filesystem;
  if (dir.empty()) return std::nullopt;
  fs::path path = fs::path(dir) / cacheFileName(p, op, level);
  if (!fs::exists(path)) return std::nullopt;

  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    std::map<std::string, std::string> header;
    std::string line;
    bool sawBlank = false;
    while (std::getline(in, line)) {
      if (line.empty()) {
        sawBlank = true;
        break;
      }
      size_t colon = line.find(": ");
      if (colon == std::string::npos)
        throw std::invalid_argument("bad header line");
      header[line.substr(0, colon)] = line.substr(colon + 2);
    }
    if (!sawBlank) throw std::invalid_argument("missing payload separator");
    // A header mismatch is a clean miss, not corruption.
    if (header["wboson-cache"] != kCacheFormatVersion ||
        header["revision"] != kCodeRevision ||
        header["p"] != std::to_string(p) ||
        header["operator"] != screeningOpName(op) ||
        header["level"] != std::to_string(level))
      return std::nullopt;
    size_t count = std::stoul(header.at("count"));

    KernelBasis basis{op, level, {}};
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      basis.vectors.push_back(parseFockVector(line, p));
    }
    if (basis.vectors.size() != count)
      throw std::invalid_argument("payload truncated");
    return basis;
  } catch (const std::exception& e) {
    std::cerr << "warning: ignoring corrupt cache file " << path.string()
              << " (" << e.what() << ")\n";
    return std::nullopt;
  }
}

bool cacheStore(const std::string& dir, const KernelBasis& basis, int p) {
  namespace fs = std::filesystem;
  if (dir.empty()) return false;
  std::error_code ec;
  fs::create_directories(dir, ec);
  fs::path path = fs::path(dir) / cacheFileName(p, basis.op, basis.level);
  std::ofstream out(path);
  if (!out) return false;
  out << "wboson-cache: " << kCacheFormatVersion << "\n";
  out << "revision: " << kCodeRevision << "\n";
  out << "p: " << p << "\n";
  out << "operator: " << screeningOpName(basis.op) << "\n";
  out << "level: " << basis.level << "\n";
  out << "count: " << basis.vectors.size() << "\n";
  out << "\n";
  for (const auto& v : basis.vectors) out << fockVectorStr(v) << "\n";
  return static_cast<bool>(out);
}

KernelBasis kernelCached(const std::string& dir, int p, ScreeningOp op,
                         int level, int jobs) {
  if (auto hit = cacheLoad(dir, p, op, level)) return *hit;
  KernelBasis basis = kernel(p, op, level, jobs);
  cacheStore(dir, basis, p);
  return basis;
}

}  // namespace wb
