#pragma once

#include <functional>
#include <string>
#include <vector>

namespace pf {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

std::vector<int> acceptance_ids();
std::string acceptance_title(int id);
CriterionResult run_criterion(int id);
// runs the selected criteria in order (all when empty), reporting each as it finishes
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids = {},
                                            const std::function<void(const CriterionResult&)>& on_done = {});
std::string format_line(const CriterionResult& r);

}  // namespace pf
