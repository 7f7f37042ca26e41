#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "lpsum/tensor.hpp"

namespace lpsum {

/// Tensor JSON format (bit-exact round trip):
///   {"m":int, "dims":[int...], "target_dim":int, "entries":[[re,im]...]}
/// with entries flattened row-major, vector axis fastest-varying.
void write_tensor_json(std::ostream& out, const CoefficientTensor& tensor);
CoefficientTensor read_tensor_json(std::istream& in);

void save_tensor(const std::filesystem::path& file, const CoefficientTensor& tensor);
CoefficientTensor load_tensor(const std::filesystem::path& file);

/// CSV report: a "name,value" header row followed by one row per entry.
void write_report_csv(std::ostream& out, const std::vector<std::pair<std::string, double>>& rows);

}  // namespace lpsum
