#include "tsy/json_io.hpp"

#include <fstream>

namespace tsy {

using nlohmann::json;

JetVariety variety_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    const json& p = j.value("params", json::object());
    if (kind == "rnc") return rational_normal_curve(p.at("d").get<int>());
    if (kind == "segre") return segre_variety(p.at("dims").get<std::vector<int>>());
    if (kind == "segre_veronese")
        return segre_veronese_variety(p.at("dims").get<std::vector<int>>(),
                                      p.at("degs").get<std::vector<int>>());
    if (kind == "pencil_product") {
        auto degs = p.at("degs").get<std::vector<int>>();
        if (degs.size() != 2) throw std::invalid_argument("pencil_product needs two degrees");
        return pencil_product_surface(degs[0], degs[1]);
    }
    throw std::invalid_argument("unknown variety kind: " + kind);
}

LinearTensor tensor_from_json(const json& j) {
    LinearTensor t;
    t.source_dims = j.at("sources").get<std::vector<int>>();
    t.target = make_space("x", j.at("target").get<int>());
    t.coeffs.assign(t.source_size(), {});
    for (const auto& entry : j.at("coeffs")) {
        auto idx = entry.at("index").get<std::vector<int>>();
        if (idx.size() != t.source_dims.size())
            throw std::invalid_argument("coefficient index arity mismatch");
        int64_t flat = 0;
        for (size_t f = 0; f < idx.size(); ++f) {
            if (idx[f] < 0 || idx[f] >= t.source_dims[f])
                throw std::invalid_argument("coefficient index out of range");
            flat = flat * t.source_dims[f] + idx[f];
        }
        auto vec = entry.at("vector").get<std::vector<std::string>>();
        if (static_cast<int>(vec.size()) != t.target.dim)
            throw std::invalid_argument("coefficient vector length mismatch");
        SparseVec sv;
        for (size_t i = 0; i < vec.size(); ++i) {
            Rat v = rat_parse(vec[i]);
            if (v != 0) sv.emplace_back(static_cast<int64_t>(i), v);
        }
        t.coeffs[flat] = std::move(sv);
    }
    return t;
}

json tensor_to_json(const LinearTensor& t) {
    json j;
    j["sources"] = t.source_dims;
    j["target"] = t.target.dim;
    json coeffs = json::array();
    for (int64_t flat = 0; flat < t.source_size(); ++flat) {
        if (t.coeffs[flat].empty()) continue;
        json entry;
        entry["index"] = tensor_label_split(t.source_dims, flat);
        std::vector<std::string> vec(t.target.dim, "0");
        for (const auto& [i, v] : t.coeffs[flat]) vec[i] = rat_str(v);
        entry["vector"] = vec;
        coeffs.push_back(std::move(entry));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

namespace {
json load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}
}  // namespace

JetVariety variety_from_file(const std::string& path) { return variety_from_json(load(path)); }
LinearTensor tensor_from_file(const std::string& path) { return tensor_from_json(load(path)); }

}  // namespace tsy
