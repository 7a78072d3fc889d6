#ifndef CRNID_TESTS_HELPERS_HPP
#define CRNID_TESTS_HELPERS_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "crnid/crn.hpp"

namespace crnid::testing {

inline std::string load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string crn_path(const std::string& stem) {
    return std::string(CRNID_CRN_DIR) + "/" + stem + ".crn";
}

inline ParsedCrn load_crn(const std::string& stem) {
    return parse_crn(load_file(crn_path(stem)), stem);
}

}  // namespace crnid::testing

#endif
