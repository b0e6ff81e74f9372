#include "lipext/io.hpp"

#include <map>

#include <json.hpp>

#include "lipext/report.hpp"

namespace lipext {

namespace {

nlohmann::json parse_json(const std::string& text, const char* what) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw IoError(IoError::Kind::ParseError, std::string("invalid JSON in ") + what);
  return j;
}

}  // namespace

SpacePtr parse_space(const std::string& text, int cap) {
  const nlohmann::json j = parse_json(text, "space");
  if (!j.is_object()) throw IoError(IoError::Kind::ParseError, "space must be an object");
  try {
    if (j.contains("l1")) {
      const auto& l1 = j.at("l1");
      const int dim = l1.at("dim").get<int>();
      std::vector<std::vector<double>> coords;
      for (const auto& row : l1.at("coords")) coords.push_back(row.get<std::vector<double>>());
      const int base = l1.value("base_point", 0);
      return L1PointSet(dim, std::move(coords), base).to_metric_space(cap);
    }
    std::vector<std::vector<double>> dist;
    for (const auto& row : j.at("dist")) dist.push_back(row.get<std::vector<double>>());
    std::vector<std::string> ids;
    if (j.contains("points")) ids = j.at("points").get<std::vector<std::string>>();
    const int base = j.value("base_point", 0);
    return FiniteMetricSpace::validated(std::move(dist), std::move(ids), base, kDefaultTol, cap);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(IoError::Kind::ParseError, std::string("space: ") + e.what());
  }
}

SpacePtr load_space(const std::string& path, int cap) {
  return parse_space(read_text_file(path), cap);
}

std::vector<int> parse_indices(const std::string& text) {
  const nlohmann::json j = parse_json(text, "subset");
  try {
    if (j.is_array()) return j.get<std::vector<int>>();
    if (j.is_object()) return j.at("indices").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw IoError(IoError::Kind::ParseError, std::string("subset: ") + e.what());
  }
  throw IoError(IoError::Kind::ParseError, "subset must be an array or an object with indices");
}

SubsetRef load_subset(const SpacePtr& space, const std::string& path) {
  return SubsetRef(space, parse_indices(read_text_file(path)));
}

LipFunction parse_function(const SpacePtr& space, const std::string& text) {
  const nlohmann::json j = parse_json(text, "function");
  try {
    const auto indices = j.at("indices").get<std::vector<int>>();
    const auto values = j.at("values").get<std::vector<double>>();
    if (indices.size() != values.size())
      throw IoError(IoError::Kind::ParseError, "function indices and values differ in length");
    // SubsetRef sorts its indices, so pair values with their index first.
    std::map<int, double> by_index;
    for (size_t i = 0; i < indices.size(); ++i) by_index[indices[i]] = values[i];
    if (by_index.size() != indices.size())
      throw IoError(IoError::Kind::ParseError, "function lists an index twice");
    SubsetRef domain(space, indices);
    std::vector<double> sorted_values;
    sorted_values.reserve(by_index.size());
    for (int idx : domain.indices) sorted_values.push_back(by_index.at(idx));
    return LipFunction(std::move(domain), std::move(sorted_values));
  } catch (const nlohmann::json::exception& e) {
    throw IoError(IoError::Kind::ParseError, std::string("function: ") + e.what());
  }
}

LipFunction load_function(const SpacePtr& space, const std::string& path) {
  return parse_function(space, read_text_file(path));
}

Molecule parse_molecule(const SpacePtr& space, const std::string& text) {
  const nlohmann::json j = parse_json(text, "molecule");
  try {
    std::map<int, double> raw;
    for (const auto& [key, value] : j.at("weights").items()) {
      size_t pos = 0;
      const int idx = std::stoi(key, &pos);
      if (pos != key.size())
        throw IoError(IoError::Kind::ParseError, "molecule weight key is not an index: " + key);
      raw[idx] = value.get<double>();
    }
    return Molecule::balanced(space, std::move(raw));
  } catch (const nlohmann::json::exception& e) {
    throw IoError(IoError::Kind::ParseError, std::string("molecule: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw IoError(IoError::Kind::ParseError, "molecule weight keys must be integer indices");
  }
}

Molecule load_molecule(const SpacePtr& space, const std::string& path) {
  return parse_molecule(space, read_text_file(path));
}

}  // namespace lipext
