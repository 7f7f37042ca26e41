#include "lpsum/tensor_io.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "lpsum/errors.hpp"

namespace lpsum {

void write_tensor_json(std::ostream& out, const CoefficientTensor& tensor) {
    nlohmann::ordered_json j;
    j["m"] = tensor.arity();
    j["dims"] = tensor.dims();
    j["target_dim"] = tensor.target_dim();
    auto& entries = j["entries"] = nlohmann::ordered_json::array();
    for (const Complex& e : tensor.entries()) entries.push_back({e.real(), e.imag()});
    out << j.dump() << "\n";
}

CoefficientTensor read_tensor_json(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        raise(Errc::parse_error, std::string("invalid tensor JSON: ") + e.what());
    }
    try {
        const auto m = j.at("m").get<std::size_t>();
        auto dims = j.at("dims").get<std::vector<std::size_t>>();
        const auto target_dim = j.at("target_dim").get<std::size_t>();
        if (dims.size() != m) raise(Errc::parse_error, "dims length does not match m");
        const auto& raw = j.at("entries");
        if (!raw.is_array()) raise(Errc::parse_error, "entries must be an array");
        std::vector<Complex> entries;
        entries.reserve(raw.size());
        for (const auto& pair : raw) {
            if (!pair.is_array() || pair.size() != 2) raise(Errc::parse_error, "entries must be [re, im] pairs");
            const double re = pair[0].get<double>();
            const double im = pair[1].get<double>();
            if (!std::isfinite(re) || !std::isfinite(im)) raise(Errc::parse_error, "entries must be finite");
            entries.emplace_back(re, im);
        }
        try {
            return CoefficientTensor::from_entries(std::move(dims), target_dim, std::move(entries));
        } catch (const Error& e) {
            raise(Errc::parse_error, e.what());
        }
    } catch (const nlohmann::json::exception& e) {
        raise(Errc::parse_error, std::string("invalid tensor JSON: ") + e.what());
    }
}

void save_tensor(const std::filesystem::path& file, const CoefficientTensor& tensor) {
    std::ofstream out(file);
    if (!out) raise(Errc::parse_error, "cannot open " + file.string() + " for writing");
    write_tensor_json(out, tensor);
}

CoefficientTensor load_tensor(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) raise(Errc::parse_error, "cannot open " + file.string());
    return read_tensor_json(in);
}

void write_report_csv(std::ostream& out, const std::vector<std::pair<std::string, double>>& rows) {
    out << "name,value\n";
    for (const auto& [name, value] : rows) {
        nlohmann::json v = value;  // shortest round-trip formatting
        out << name << "," << v.dump() << "\n";
    }
}

}  // namespace lpsum
