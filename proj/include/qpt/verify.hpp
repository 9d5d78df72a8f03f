#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qpt/structure.hpp"

namespace qpt {

// One named block of the identity battery. Blocks run on fixed internal seeds
// so the battery is reproducible; a failing block always formats the concrete
// input that broke it.
struct IdentityRecord {
    std::string name;
    std::string description;
    bool pass = false;
    std::string counterexample;
    double seconds = 0.0;
};

struct IdentitySuiteReport {
    std::vector<IdentityRecord> records;
    bool all_pass = true;
};

// the structure-action block is parameterized over the action being audited
// so test harnesses can inject faults and watch the battery catch them
using StructureActionFn = std::function<Form(Structure, const Form&)>;
IdentityRecord check_structure_action(const StructureActionFn& act);

std::vector<std::string> verify_block_names();

// runs every block whose name contains the filter (empty filter = all)
IdentitySuiteReport run_verify_suite(const std::string& filter = "");

}  // namespace qpt
