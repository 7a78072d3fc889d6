#ifndef CRNID_FIXTURES_HPP
#define CRNID_FIXTURES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "crnid/poly_matrix.hpp"

namespace crnid::fixtures {

// Reference stationary-moment matrices for the bundled example networks,
// stored as polynomial text. `crn` names the matching file under crns/
// (without extension); extrinsic fixtures record how the stack was built.
struct MatrixFixture {
    std::string name;
    std::string crn;
    bool extrinsic = false;
    bool rre_only = false;
    int rows = 0;
    int cols = 0;
    std::vector<std::string> entries;  // row-major polynomial text
};

const std::vector<MatrixFixture>& all_matrix_fixtures();
const MatrixFixture* find_matrix_fixture(std::string_view name);

// Parses the fixture entries on the given catalog. Throws ParseError when
// the catalog lacks a referenced variable.
PolyMatrix build(const MatrixFixture& fx, const CatalogPtr& cat, TermOrder ord = {});

}  // namespace crnid::fixtures

#endif
