#include "charform/golden.hpp"

#include <stdexcept>

namespace charform::golden {

std::vector<unsigned> degrees() { return {2, 3, 4, 5, 6, 7, 8}; }

std::vector<std::vector<long>> hmatrix_rows(unsigned n) {
    switch (n) {
        case 2:
            return {{1}};
        case 3:
            return {{6, 3}, {3, 2}};
        case 4:
            return {{20, 14, 6}, {14, 11, 5}, {6, 5, 3}};
        case 5:
            return {{50, 40, 25, 10}, {40, 34, 22, 9}, {25, 22, 16, 7}, {10, 9, 7, 4}};
        case 6:
            return {{105, 90, 66, 39, 15},
                    {90, 80, 60, 36, 14},
                    {66, 60, 48, 30, 12},
                    {39, 36, 30, 21, 9},
                    {15, 14, 12, 9, 5}};
        case 7:
            return {{196, 175, 140, 98, 56, 21},
                    {175, 160, 130, 92, 53, 20},
                    {140, 130, 110, 80, 47, 18},
                    {98, 92, 80, 62, 38, 15},
                    {56, 53, 47, 38, 26, 11},
                    {21, 20, 18, 15, 11, 6}};
        case 8:
            return {{336, 308, 260, 200, 136, 76, 28},
                    {308, 287, 245, 190, 130, 73, 27},
                    {260, 245, 215, 170, 118, 67, 25},
                    {200, 190, 170, 140, 100, 58, 22},
                    {136, 130, 118, 100, 76, 46, 18},
                    {76, 73, 67, 58, 46, 31, 13},
                    {28, 27, 25, 22, 18, 13, 7}};
        default:
            throw std::out_of_range("golden::hmatrix_rows: tabulated for n = 2..8 only");
    }
}

EquationConstants equation_constants(unsigned n) {
    switch (n) {
        case 2: return {2, 1, 1, 4};
        case 3: return {6, 2, 4, 12};
        case 4: return {24, 6, 36, 96};
        case 5: return {120, 24, 576, 1440};
        case 6: return {720, 120, 14400, 34560};
        case 7: return {5040, 720, 518400, 1209600};
        case 8: return {40320, 5040, 25401600, 58060800};
        default: throw std::out_of_range("golden::equation_constants: tabulated for n = 2..8 only");
    }
}

long prefactor(unsigned n) {
    switch (n) {
        case 2: return 1;
        case 3: return 2;
        case 4: return 12;
        case 5: return 144;
        case 6: return 2880;
        case 7: return 86400;
        case 8: return 3628800;
        default: throw std::out_of_range("golden::prefactor: tabulated for n = 2..8 only");
    }
}

}  // namespace charform::golden
