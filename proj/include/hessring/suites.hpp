#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hessring/hessenberg.hpp"
#include "hessring/presentation.hpp"
#include "hessring/report.hpp"

namespace hessring {

struct SuiteOptions {
  int n = 3;
  std::optional<HessFn> h;
  int jobs = 0;  // 0 = hardware concurrency
  std::optional<int> max_degree;
};

// Suite names accepted by run_suite, besides "all".
const std::vector<std::string>& suite_names();

// Runs the named verification suite over all h in H_n, or over the single
// given h. Guard violations surface as "skipped" records; identity
// failures as "fail" with a witness. Results are assembled in a fixed
// order regardless of the jobs setting.
Report run_suite(const std::string& name, const SuiteOptions& opt);

// The configured H_5 sample used for the three-route Hilbert comparison
// when sweeping all of H_5 would be too slow. Spans dimensions 0..10.
std::vector<HessFn> hilbert_h5_sample();

// Building blocks shared with the acceptance suite.
CheckOutcome check_three_route_hilbert(const Presentation& pres, const HessFn& h,
                                       std::optional<int> max_degree = std::nullopt);
CheckOutcome check_t0_specialization(int n);
CheckOutcome check_example_n4();
CheckOutcome check_split_product(const HessFn& h);

}  // namespace hessring
