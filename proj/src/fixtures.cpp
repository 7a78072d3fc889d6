#include "crnid/fixtures.hpp"

#include "crnid/error.hpp"
#include "crnid/poly_text.hpp"

namespace crnid::fixtures {

const std::vector<MatrixFixture>& all_matrix_fixtures() {
    static const std::vector<MatrixFixture> fixtures = {
        {"ex1_A", "r1", false, false, 2, 3,
         {
             "1", "-x1", "-x1^2",
             "1", "x1 - 2*p11", "x1^2 - 4*p11*x1",
         }},
        {"ex3_A", "r3", false, false, 5, 3,
         {
             "1", "-x1", "0",
             "0", "x1", "-x2",
             "1", "x1 - 2*p11", "0",
             "0", "p11 - p12 - x1", "-p12",
             "0", "2*p12 + x1", "x2 - 2*p22",
         }},
        {"ex4_A", "r4", false, false, 5, 5,
         {
             "1", "-x1", "0", "0", "-x1*x2",
             "0", "0", "1", "-x2", "-x1*x2",
             "1", "x1 - 2*p11", "0", "0", "x1*x2 - 2*p12*x1 - 2*p11*x2",
             "0", "-p12", "0", "-p12", "x1*x2 - p12*x1 - p12*x2 - p22*x1 - p11*x2",
             "0", "0", "1", "x2 - 2*p22", "x1*x2 - 2*p22*x1 - 2*p12*x2",
         }},
        {"ex5_A", "r5", false, false, 5, 5,
         {
             "1", "-x1", "0", "0", "0",
             "0", "0", "1", "-x2", "-x1^2*x2",
             "1", "x1 - 2*p11", "0", "0", "0",
             "0", "-p12", "0", "-p12", "-p12*x1^2 - 2*p11*x1*x2",
             "0", "0", "1", "x2 - 2*p22", "x1^2*x2 - 2*p22*x1^2 - 4*p12*x1*x2",
         }},
        {"ex6_A", "r6", false, false, 9, 8,
         {
             "1", "-x1", "0", "0", "0", "0", "0", "0",
             "0", "0", "1", "-x2", "0", "0", "x1", "0",
             "0", "0", "0", "0", "1", "-x3", "0", "x2",
             "1", "x1 - 2*p11", "0", "0", "0", "0", "0", "0",
             "0", "-p12", "0", "-p12", "0", "0", "p11", "0",
             "0", "-p13", "0", "0", "0", "-p13", "0", "p12",
             "0", "0", "1", "x2 - 2*p22", "0", "0", "2*p12 + x1", "0",
             "0", "0", "0", "-p23", "0", "-p23", "p13", "p22",
             "0", "0", "0", "0", "1", "x3 - 2*p33", "0", "2*p23 + x2",
         }},
        {"ex7_A", "r7", false, false, 9, 6,
         {
             "1", "-x1", "0", "0", "-x1*x2", "0",
             "0", "0", "1", "0", "-x1*x2", "-x2*x3",
             "0", "0", "0", "1", "0", "-x2*x3",
             "1", "x1 - 2*p11", "0", "0", "x1*x2 - 2*p12*x1 - 2*p11*x2", "0",
             "0", "-p12", "0", "0", "x1*x2 - p12*x1 - p12*x2 - p22*x1 - p11*x2",
             "-p12*x3 - p13*x2",
             "0", "-p13", "0", "0", "-p13*x2 - p23*x1", "-p12*x3 - p13*x2",
             "0", "0", "1", "0", "x1*x2 - 2*p22*x1 - 2*p12*x2",
             "x2*x3 - 2*p23*x2 - 2*p22*x3",
             "0", "0", "0", "0", "-p13*x2 - p23*x1",
             "x2*x3 - p23*x2 - p23*x3 - p33*x2 - p22*x3",
             "0", "0", "0", "1", "0", "x2*x3 - 2*p33*x2 - 2*p23*x3",
         }},
        {"ex8_A", "r8", false, false, 5, 6,
         {
             "1", "-x1", "0", "0", "0", "x2",
             "0", "0", "1", "-x2", "x1", "0",
             "1", "x1 - 2*p11", "0", "0", "0", "2*p12 + x2",
             "0", "-p12", "0", "-p12", "p11", "p22",
             "0", "0", "1", "x2 - 2*p22", "2*p12 + x1", "0",
         }},
        {"ex9_A", "r9", false, false, 5, 6,
         {
             "1", "-x1", "0", "0", "-x1*x2", "-x1*x2",
             "0", "0", "1", "-x2", "-x1*x2", "0",
             "1", "x1 - 2*p11", "0", "0", "x1*x2 - 2*p12*x1 - 2*p11*x2",
             "x1*x2 - 2*p12*x1 - 2*p11*x2",
             "0", "-p12", "0", "-p12", "x1*x2 - p12*x1 - p12*x2 - p22*x1 - p11*x2",
             "-p12*x2 - p22*x1",
             "0", "0", "1", "x2 - 2*p22", "x1*x2 - 2*p22*x1 - 2*p12*x2", "0",
         }},
        {"fb_example_A", "feedback", false, false, 5, 6,
         {
             "1", "-x1", "0", "0", "-x1*x2", "x2",
             "0", "0", "1", "-x2", "-x1*x2", "0",
             "1", "x1 - 2*p11", "0", "0", "x1*x2 - 2*p12*x1 - 2*p11*x2", "2*p12 + x2",
             "0", "-p12", "0", "-p12", "x1*x2 - p12*x1 - p12*x2 - p22*x1 - p11*x2", "p22",
             "0", "0", "1", "x2 - 2*p22", "x1*x2 - 2*p22*x1 - 2*p12*x2", "0",
         }},
        {"exFB_A_bar", "feedback_extrinsic", true, true, 12, 6,
         {
             "1", "-x1_1", "0", "0", "-x1_1*x2_1", "x2_1",
             "0", "0", "0", "-x2_1", "-x1_1*x2_1", "0",
             "0", "-x1_2", "0", "0", "-x1_2*x2_2", "x2_2",
             "0", "0", "1", "-x2_2", "-x1_2*x2_2", "0",
             "1", "-x1_3", "0", "0", "-x1_3*x2_3", "x2_3",
             "0", "0", "1", "-x2_3", "-x1_3*x2_3", "0",
             "1", "-x1_4", "0", "0", "-x1_4*x2_4", "x2_4",
             "0", "0", "2", "-x2_4", "-x1_4*x2_4", "0",
             "2", "-x1_5", "0", "0", "-x1_5*x2_5", "x2_5",
             "0", "0", "1", "-x2_5", "-x1_5*x2_5", "0",
             "2", "-x1_6", "0", "0", "-x1_6*x2_6", "x2_6",
             "0", "0", "2", "-x2_6", "-x1_6*x2_6", "0",
         }},
        {"ex10_rre", "r1_extrinsic", true, true, 3, 3,
         {
             "0", "-x1_1", "-x1_1^2",
             "1", "-x1_2", "-x1_2^2",
             "2", "-x1_3", "-x1_3^2",
         }},
        {"ex10_full", "r1_extrinsic", true, false, 6, 3,
         {
             "0", "-x1_1", "-x1_1^2",
             "0", "x1_1 - 2*p11_1", "x1_1^2 - 4*p11_1*x1_1",
             "1", "-x1_2", "-x1_2^2",
             "1", "x1_2 - 2*p11_2", "x1_2^2 - 4*p11_2*x1_2",
             "2", "-x1_3", "-x1_3^2",
             "2", "x1_3 - 2*p11_3", "x1_3^2 - 4*p11_3*x1_3",
         }},
    };
    return fixtures;
}

const MatrixFixture* find_matrix_fixture(std::string_view name) {
    for (const MatrixFixture& fx : all_matrix_fixtures())
        if (fx.name == name) return &fx;
    return nullptr;
}

PolyMatrix build(const MatrixFixture& fx, const CatalogPtr& cat, TermOrder ord) {
    if (static_cast<int>(fx.entries.size()) != fx.rows * fx.cols)
        throw Error("fixture '" + fx.name + "' entry count mismatch (internal)");
    PolyMatrix m(cat, fx.rows, fx.cols, ord);
    for (int r = 0; r < fx.rows; ++r)
        for (int c = 0; c < fx.cols; ++c)
            m.set(r, c,
                  parse_polynomial(fx.entries[size_t(r) * size_t(fx.cols) + size_t(c)], cat, ord));
    return m;
}

}  // namespace crnid::fixtures
