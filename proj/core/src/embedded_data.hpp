#pragma once

#include <string>

namespace diracbound::detail {

const std::string& embedded_catalog_json();
const std::string& embedded_berger_fixture_json();

}  // namespace diracbound::detail
