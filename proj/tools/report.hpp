#pragma once

// Command reports: an echo of the invocation, digests of every input and a
// structured result. Identical inputs and flags give byte-identical output
// unless timing is requested.

#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace twyb::report {

inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

struct Input {
  std::string role;
  std::string source;
  std::string content;
};

struct CommandReport {
  std::string command;
  std::vector<Input> inputs;
  nlohmann::json result = nlohmann::json::object();
  std::optional<double> elapsed_ms;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["inputs"] = nlohmann::json::array();
    for (const auto& in : inputs)
      j["inputs"].push_back({{"role", in.role}, {"source", in.source}, {"fnv1a64", hex64(fnv1a64(in.content))}});
    j["result"] = result;
    if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
    return j;
  }
};

}  // namespace twyb::report
