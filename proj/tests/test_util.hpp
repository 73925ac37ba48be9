#pragma once

#include <string>

#ifndef KNOTCALC_TEST_DATA_DIR
#define KNOTCALC_TEST_DATA_DIR "tests/data"
#endif

inline std::string data_path(const std::string& name) {
    return std::string(KNOTCALC_TEST_DATA_DIR) + "/" + name;
}
