#include "intdec/algebra_json.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace intdec {

using nlohmann::json;

StructureAlgebra algebra_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("algebra JSON: ") + e.what());
  }
  try {
    int64_t rank = j.at("rank").get<int64_t>();
    auto unity = j.at("unity").get<std::vector<int64_t>>();
    auto table3 = j.at("table").get<std::vector<std::vector<std::vector<int64_t>>>>();
    std::string name = j.value("name", std::string("unnamed"));
    bool std_assume = j.value("standard_assumptions", true);

    if (int64_t(table3.size()) != rank) throw std::invalid_argument("algebra JSON: table has wrong outer size");
    std::vector<int64_t> flat;
    flat.reserve(size_t(rank * rank * rank));
    for (const auto& plane : table3) {
      if (int64_t(plane.size()) != rank) throw std::invalid_argument("algebra JSON: table has wrong middle size");
      for (const auto& row : plane) {
        if (int64_t(row.size()) != rank) throw std::invalid_argument("algebra JSON: table has wrong inner size");
        for (auto v : row) flat.push_back(v);
      }
    }
    StructureAlgebra alg(rank, std::move(flat), std::move(unity), std::move(name), std_assume);
    if (j.contains("basis_names")) alg.set_basis_names(j.at("basis_names").get<std::vector<std::string>>());
    return alg;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("algebra JSON: ") + e.what());
  }
}

JsonValidation validate_algebra_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("algebra JSON: ") + e.what());
  }
  try {
    JsonValidation v;
    v.rank = j.at("rank").get<int64_t>();
    v.name = j.value("name", std::string("unnamed"));
    v.standard_assumptions = j.value("standard_assumptions", true);
    auto unity = j.at("unity").get<std::vector<int64_t>>();
    auto table3 = j.at("table").get<std::vector<std::vector<std::vector<int64_t>>>>();
    std::vector<int64_t> flat;
    for (const auto& plane : table3)
      for (const auto& row : plane)
        for (auto x : row) flat.push_back(x);
    if (int64_t(flat.size()) != v.rank * v.rank * v.rank)
      throw std::invalid_argument("algebra JSON: table size does not match rank^3");
    v.report = StructureAlgebra::validate(v.rank, flat, unity);
    return v;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("algebra JSON: ") + e.what());
  }
}

StructureAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open algebra file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return algebra_from_json(buf.str());
}

std::string algebra_to_json(const StructureAlgebra& a) {
  json j;
  j["rank"] = a.rank();
  j["name"] = a.name();
  j["standard_assumptions"] = a.standard_assumptions();
  j["unity"] = a.unity();
  j["basis_names"] = a.basis_names();
  std::vector<std::vector<std::vector<int64_t>>> table3;
  for (int64_t i = 0; i < a.rank(); ++i) {
    std::vector<std::vector<int64_t>> plane;
    for (int64_t jj = 0; jj < a.rank(); ++jj) {
      std::vector<int64_t> row;
      for (int64_t l = 0; l < a.rank(); ++l) row.push_back(a.c(i, jj, l));
      plane.push_back(std::move(row));
    }
    table3.push_back(std::move(plane));
  }
  j["table"] = table3;
  return j.dump(2);
}

}  // namespace intdec
