#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qgoppa/linear_code.hpp"

namespace qgoppa::cli {

enum class Format { Text, Json, Csv };

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;

struct CurveConfig {
  std::string field;
  std::string curve;
  bool allow_singular = false;
};

struct ConstructConfig {
  CurveConfig curve;
  std::size_t pairs = 0;
  int r = 0;
  bool css_side = false;
  std::string order = "block";
  std::string divisor;    // empty: (n+g-1-r) P_inf
  std::string eta_scale;  // empty: 1
  std::string method = "direct";
  bool project_base = false;
  bool verify = false;
  std::optional<std::uint64_t> seed;
  std::uint64_t bound = kDefaultEnumerationBound;
  Format format = Format::Text;
  std::string out;  // file stem; empty writes to stdout only
};

struct ProjectConfig {
  std::string input;
  std::optional<std::uint64_t> seed;
  Format format = Format::Text;
  std::string out;
};

struct VerifyConfig {
  std::string input;
  bool exhaustive = false;
  std::uint64_t bound = kDefaultEnumerationBound;
  Format format = Format::Text;
  std::string out;
};

struct TowerConfig {
  int m = 2;
  int i = 2;
  std::optional<std::string> j;
  bool sweep = false;
  std::optional<int> stepanov_p;
  std::optional<int> stepanov_m;
  std::string rate = "1/4";
  Format format = Format::Text;
};

// Each command validates its config before computing anything and throws
// qgoppa::Error on bad input; callers map that to kUsage.
int cmd_places(const CurveConfig& cfg, Format format, std::ostream& os);
int cmd_construct_classical(const ConstructConfig& cfg, std::ostream& os);
int cmd_construct_quantum(const ConstructConfig& cfg, std::ostream& os);
int cmd_project(const ProjectConfig& cfg, std::ostream& os);
int cmd_verify(const VerifyConfig& cfg, std::ostream& os);
int cmd_tower_bounds(const TowerConfig& cfg, std::ostream& os);
int cmd_examples(const std::vector<std::string>& names, Format format, std::ostream& os);

}  // namespace qgoppa::cli
