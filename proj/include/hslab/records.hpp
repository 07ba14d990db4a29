#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace hslab {

/// One experiment record. Every entry of `results` needs a provenance tag.
struct RunRecord {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::map<std::string, std::string> provenance;
  nlohmann::json grid = nlohmann::json::object();
  std::string timestamp;  ///< filled by write_record when empty

  /// Sets results[key] and its provenance tag in one step.
  template <class T>
  void put(const std::string& key, const T& value, const std::string& tag) {
    results[key] = value;
    provenance[key] = tag;
  }

  nlohmann::json to_json() const;
};

/// Default output directory: $HSLAB_OUT_DIR, else "hslab_out".
std::filesystem::path default_out_dir();

/// Appends the record as one JSON line to out_dir/records.ndjson.
std::filesystem::path write_record(RunRecord record, const std::filesystem::path& out_dir);

/// Appends rows to out_dir/name.csv, writing the header when the file is new.
std::filesystem::path write_table(const std::filesystem::path& out_dir, const std::string& name,
                                  const std::vector<std::string>& header,
                                  const std::vector<std::vector<double>>& rows);

std::string utc_timestamp();

}  // namespace hslab
