#include "hslab/records.hpp"

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>

#include "hslab/error.hpp"

namespace hslab {

namespace {
std::mutex write_mutex;
}

nlohmann::json RunRecord::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["timestamp"] = timestamp;
  j["parameters"] = parameters;
  j["grid"] = grid;
  j["results"] = results;
  j["provenance"] = provenance;
  return j;
}

std::filesystem::path default_out_dir() {
  if (const char* env = std::getenv("HSLAB_OUT_DIR"); env != nullptr && *env != '\0') return env;
  return "hslab_out";
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::filesystem::path write_record(RunRecord record, const std::filesystem::path& out_dir) {
  for (const auto& item : record.results.items())
    if (!record.provenance.count(item.key()))
      throw std::logic_error("result '" + item.key() + "' has no provenance tag");
  if (record.timestamp.empty()) record.timestamp = utc_timestamp();

  std::lock_guard<std::mutex> lock(write_mutex);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  const auto path = out_dir / "records.ndjson";
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << record.to_json().dump() << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
  return path;
}

std::filesystem::path write_table(const std::filesystem::path& out_dir, const std::string& name,
                                  const std::vector<std::string>& header,
                                  const std::vector<std::vector<double>>& rows) {
  std::lock_guard<std::mutex> lock(write_mutex);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  const auto path = out_dir / (name + ".csv");
  const bool fresh = !std::filesystem::exists(path);
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  if (fresh) {
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
  }
  out << std::setprecision(17);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed for " + path.string());
  return path;
}

}  // namespace hslab
