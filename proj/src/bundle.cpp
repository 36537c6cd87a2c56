#include "pf/bundle.hpp"

#include "pf/error.hpp"
#include "pf/operator_json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace pf {

std::string data_dir() {
    if (const char* d = std::getenv("PF_DATA_DIR")) return d;
    return PF_DATA_DIR;
}

Bundle load_bundle(const std::string& name) {
    std::filesystem::path p(name);
    if (!std::filesystem::exists(p)) p = std::filesystem::path(data_dir()) / (name + ".json");
    std::ifstream in(p);
    if (!in) fail(Errc::BadInput, "cannot open bundle " + name);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::BadInput, std::string("malformed bundle: ") + e.what());
    }
    Bundle b;
    b.name = j.value("name", p.stem().string());
    b.op = operator_from_json(j.at("operator"));
    if (j.contains("basis_change")) {
        std::vector<std::vector<std::string>> rows;
        for (auto& r : j["basis_change"]) {
            rows.emplace_back();
            for (auto& x : r) rows.back().push_back(x.is_string() ? x.get<std::string>() : x.dump());
        }
        b.basis_change = parse_matrix(rows);
        b.basis_label = j.value("basis_label", std::string("u"));
    }
    for (auto& s : j.value("singularities", nlohmann::json::array())) b.singularities.push_back(parse_rational(s.get<std::string>()));
    if (j.contains("conventions")) {
        auto& c = j["conventions"];
        b.conventions.t_sign = c.value("t_sign", 1);
        b.conventions.tau_scale = parse_rational(c.value("tau_scale", std::string("1")));
        b.conventions.weight_shift = c.value("weight_shift", 0);
    }
    return b;
}

SolutionBasis bundle_frobenius(const Bundle& b, int N) { return frobenius_basis(b.op, N); }

SolutionBasis bundle_basis(const Bundle& b, int N) {
    SolutionBasis y = frobenius_basis(b.op, N);
    if (!b.basis_change) return y;
    return change_basis(y, *b.basis_change, b.basis_label);
}

}  // namespace pf
