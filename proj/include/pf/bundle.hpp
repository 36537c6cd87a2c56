#pragma once

#include "pf/geometry.hpp"

#include <optional>
#include <string>

namespace pf {

// An operator shipped under data/ with its basis change and conventions.
struct Bundle {
    std::string name;
    ThetaOperator op;
    std::optional<ConstMatrix> basis_change;
    std::string basis_label;
    std::vector<Q> singularities;  // nonzero finite ones
    GeometryConventions conventions;
};

// PF_DATA_DIR from the environment, else the build-time data directory
std::string data_dir();
// a bundle name ("quintic") or a path to a JSON file
Bundle load_bundle(const std::string& name_or_path);
SolutionBasis bundle_frobenius(const Bundle& b, int N);
// basis_change applied to the Frobenius basis, or the Frobenius basis itself
SolutionBasis bundle_basis(const Bundle& b, int N);

}  // namespace pf
