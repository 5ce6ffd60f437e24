#pragma once

// Seeded verification checks C1..C12 over the built-in corpus.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cartankit/json_io.hpp"

namespace cartankit::verify {

enum class Outcome { Pass, Fail, Flagged };
std::string to_string(Outcome o);

struct CheckReport {
  std::string check;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  Outcome outcome = Outcome::Pass;
  io::json witnesses = io::json::array();
  std::int64_t runtime_ms = 0;
};

/// Keys in alphabetical order. Without timing the output depends only on
/// (check, seed, samples).
io::json to_json(const CheckReport& r, bool include_timing = true);

const std::vector<std::string>& check_ids();
bool is_check(const std::string& id);
/// Short name such as "reg_in_C". Throws InputError for unknown ids.
const std::string& check_name(const std::string& id);
std::size_t default_samples(const std::string& id);

/// Neighbours per regular point in the local constancy check.
inline constexpr std::size_t kNeighbors = 32;
/// Regular fraction below kRegularNum / kRegularDen is flagged.
inline constexpr std::size_t kRegularNum = 9;
inline constexpr std::size_t kRegularDen = 10;

/// Throws InputError for unknown ids.
CheckReport run_check(const std::string& id, std::uint64_t seed, std::size_t samples);
CheckReport run_check(const std::string& id, std::uint64_t seed);
std::vector<CheckReport> run_all(std::uint64_t seed);

bool any_failed(const std::vector<CheckReport>& reports);

}  // namespace cartankit::verify
