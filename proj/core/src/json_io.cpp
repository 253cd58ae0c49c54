#include "cmvf/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cmvf {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string complex_to_json(const LefschetzComplex& cx) {
    ordered out;
    out["cells"] = ordered::array();
    for (CellId c = 0; c < static_cast<CellId>(cx.size()); ++c) {
        ordered cell;
        cell["id"] = cx.label(c);
        cell["dim"] = cx.dim(c);
        out["cells"].push_back(std::move(cell));
    }
    out["kappa"] = ordered::array();
    for (CellId x = 0; x < static_cast<CellId>(cx.size()); ++x)
        for (const auto& [y, v] : cx.facets(x))
            out["kappa"].push_back(ordered::array({cx.label(x), cx.label(y), v}));
    return out.dump() + "\n";
}

LefschetzComplex complex_from_json(const std::string& text, Coeff field) {
    json data = json::parse(text);
    if (!data.is_object() || !data.contains("cells") || !data.contains("kappa"))
        throw validation_error("complex json: expected object with cells and kappa", {});
    std::vector<LefschetzComplex::CellSpec> cells;
    for (const auto& c : data.at("cells"))
        cells.push_back({c.at("id").get<std::string>(), c.at("dim").get<int>()});
    std::vector<LefschetzComplex::KappaSpec> kappa;
    for (const auto& k : data.at("kappa")) {
        if (!k.is_array() || k.size() != 3)
            throw validation_error("complex json: kappa entries are [x, y, coeff]", {});
        kappa.push_back({k[0].get<std::string>(), k[1].get<std::string>(),
                         k[2].get<std::int64_t>()});
    }
    return LefschetzComplex(field, std::move(cells), kappa);
}

std::string field_to_json(const MultivectorField& field) {
    const auto& cx = field.complex();
    json theta; // json objects keep keys sorted, making the output canonical
    for (CellId c = 0; c < static_cast<CellId>(cx.size()); ++c)
        theta[cx.label(c)] = cx.label(field.theta(c));
    json out;
    out["theta"] = std::move(theta);
    return out.dump() + "\n";
}

MultivectorField field_from_json(const std::string& text, const LefschetzComplex& cx) {
    json data = json::parse(text);
    if (data.contains("theta")) {
        std::vector<CellId> theta(cx.size(), kNoCell);
        for (const auto& [key, value] : data.at("theta").items())
            theta[static_cast<std::size_t>(cx.require(key))] = cx.require(value.get<std::string>());
        for (CellId c = 0; c < static_cast<CellId>(cx.size()); ++c)
            if (theta[static_cast<std::size_t>(c)] == kNoCell)
                throw validation_error("field json: theta not total", {cx.label(c)});
        return MultivectorField::from_theta(cx, theta);
    }
    if (data.contains("partition")) {
        std::vector<CellSet> parts;
        for (const auto& p : data.at("partition")) {
            CellSet part(cx.size());
            for (const auto& l : p) part.insert(cx.require(l.get<std::string>()));
            parts.push_back(std::move(part));
        }
        return MultivectorField::from_partition(cx, parts);
    }
    throw validation_error("field json: expected theta or partition", {});
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot read file", {path});
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw validation_error("cannot write file", {path});
    out << content;
}

} // namespace cmvf
