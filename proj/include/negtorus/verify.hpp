#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace negtorus {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string detail;
};

struct VerifyOptions {
  std::set<int> only;                // empty runs every criterion
  std::size_t property_instances = 1000;
  std::uint64_t seed = 0x5eed2024;
};

CheckResult check_cf_complementarity();
CheckResult check_tb_contract();
CheckResult check_smooth_topology();
CheckResult check_transverse_counts();
CheckResult check_t58_locations();
CheckResult check_hfk_structures();
CheckResult check_d3_range();
CheckResult check_lens_surjectivity();
CheckResult check_count_increment();
CheckResult check_u_order();
CheckResult check_properties(std::size_t instances, std::uint64_t seed);

// runs the selected criteria in order; each result is handed to sink as soon as it is ready
std::vector<CheckResult> run_acceptance(const VerifyOptions& opt,
                                        const std::function<void(const CheckResult&)>& sink = {});
std::string format_line(const CheckResult& r, bool timing = true);

void to_json(nlohmann::json& j, const CheckResult& r);

}  // namespace negtorus
