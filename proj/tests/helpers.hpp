#pragma once
// Shared test shorthand: build catalog entries into in-memory designs.

#include <string>

#include "ssdd/catalog.hpp"
#include "ssdd/model.hpp"

namespace sst {

inline ssdd::DirectedDesign dev_dd(const std::string& id) {
    return *ssdd::catalog_build(id).plain;
}

inline ssdd::GroupedDesign dev_g(const std::string& id) {
    return *ssdd::catalog_build(id).grouped;
}

}  // namespace sst
