#pragma once

#include <string>
#include <vector>

#include "intdec/algebra.hpp"
#include "intdec/decide.hpp"

namespace intdec {

struct Fixture {
  std::string key;
  std::string description;
  StructureAlgebra algebra;
  AlgebraCertificate certificate;
};

const std::vector<Fixture>& fixture_catalog();

/// nullptr when the key is unknown.
const Fixture* find_fixture(const std::string& key);

}  // namespace intdec
