#pragma once

#include <json.hpp>

#include "tsy/tensor.hpp"

namespace tsy {

// {"kind":"rnc"|"segre"|"segre_veronese"|"pencil_product","params":{...}}
JetVariety variety_from_json(const nlohmann::json& j);

// {"sources":[dims],"target":dim,"coeffs":[{"index":[j1..jl],"vector":["p/q",...]}]}
LinearTensor tensor_from_json(const nlohmann::json& j);
nlohmann::json tensor_to_json(const LinearTensor& t);

JetVariety variety_from_file(const std::string& path);
LinearTensor tensor_from_file(const std::string& path);

}  // namespace tsy
