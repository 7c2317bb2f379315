#pragma once

// Hand-encoded expected classification cells, one per regime and boundary.
// Space codes: "l<u>" for l_u, "c0", "linf", "b<a>,<b>" for the bracket [l_a, l_{b+eps}].

#include <string>
#include <vector>

#include "diaglab/classify.hpp"

namespace golden {

inline diaglab::SpaceTag tag(const std::string& code) {
    using diaglab::Exponent;
    using diaglab::SpaceTag;
    if (code == "c0") return SpaceTag::c0();
    if (code == "linf") return SpaceTag::linf();
    if (code[0] == 'b') {
        const auto comma = code.find(',');
        return SpaceTag::bracket(Exponent::parse(code.substr(1, comma - 1)), Exponent::parse(code.substr(comma + 1)));
    }
    return SpaceTag::l(Exponent::parse(code.substr(1)));
}

struct OperatorCell {
    const char* p;
    const char* q;
    int n;
    const char* spaces[4];  // N, I, E, L
    const char* table1;
    const char* table2;
};

struct FormCell {
    const char* p;
    int n;
    const char* spaces[4];
};

inline const std::vector<OperatorCell> operator_cells = {
    // p = 1, q < inf
    {"1", "1", 2, {"l1", "l1", "linf", "linf"}, "N = I", "I ≠ E = L"},
    {"1", "2", 3, {"l2", "l2", "linf", "linf"}, "N = I", "I ≠ E = L"},
    {"1", "3/2", 1, {"l3/2", "l3/2", "linf", "linf"}, "N = I", "I ≠ E = L"},
    // p = 1, q = inf
    {"1", "inf", 3, {"c0", "linf", "linf", "linf"}, "N ≠ I", "I = E = L"},
    {"1", "inf", 1, {"c0", "linf", "linf", "linf"}, "N ≠ I", "I = E = L"},
    // 1 < p < 2, q = 1
    {"3/2", "1", 2, {"l1", "l1", "l3/2", "linf"}, "N = I", "I ≠ E ≠ L"},
    {"3/2", "1", 4, {"l1", "l1", "l3/2", "linf"}, "N = I", "I ≠ E ≠ L"},
    {"4/3", "1", 3, {"l1", "l1", "l2", "linf"}, "N = I", "I ≠ E ≠ L"},
    // 1 < p < 2, p' < q < inf
    {"3/2", "4", 2, {"l12/11", "l12/11", "l4", "linf"}, "N = I", "I ≠ E ≠ L"},
    {"5/4", "6", 3, {"l30/23", "l30/23", "l6", "linf"}, "N = I", "I ≠ E ≠ L"},
    {"3/2", "4", 1, {"l12/7", "l12/7", "l4", "linf"}, "N = I", "I ≠ E ≠ L"},
    // 1 < p < 2, 1 < q <= p' (bracket)
    {"3/2", "3/2", 2, {"l1", "l1", "b3/2,3", "linf"}, "N = I", "I ≠ E ≠ L"},
    {"3/2", "3", 2, {"l1", "l1", "b3,3", "linf"}, "N = I", "I ≠ E ≠ L"},
    {"4/3", "2", 2, {"l1", "l1", "b2,4", "linf"}, "N = I", "I ≠ E ≠ L"},
    {"5/4", "2", 3, {"l1", "l1", "b2,5", "linf"}, "N = I", "I ≠ E ≠ L"},
    // 1 < p < 2, q = inf
    {"3/2", "inf", 2, {"l3/2", "l3/2", "linf", "linf"}, "N = I", "I ≠ E = L"},
    {"5/4", "inf", 3, {"l5/3", "l5/3", "linf", "linf"}, "N = I", "I ≠ E = L"},
    // 2 <= p < inf, q = 1
    {"2", "1", 2, {"l1", "l1", "l1", "linf"}, "N = I", "I = E ≠ L"},
    {"3", "1", 2, {"l1", "l1", "l1", "l3"}, "N = I", "I = E ≠ L"},
    {"3", "1", 3, {"l1", "l1", "l1", "linf"}, "N = I", "I = E ≠ L"},
    {"6", "1", 2, {"l1", "l1", "l1", "l3/2"}, "N = I", "I = E ≠ L"},
    // 2 <= p < inf, 1 < q < inf
    {"3", "2", 2, {"l1", "l1", "l2", "linf"}, "N = I", "I ≠ E ≠ L"},
    {"2", "2", 3, {"l1", "l1", "l2", "linf"}, "N = I", "I ≠ E ≠ L"},
    {"6", "3/2", 2, {"l1", "l1", "l3/2", "l3"}, "N = I", "I ≠ E ≠ L"},
    // 2 <= p < inf, q = inf
    {"2", "inf", 2, {"l1", "l1", "linf", "linf"}, "N = I", "I ≠ E = L"},
    {"4", "inf", 3, {"l1", "l1", "linf", "linf"}, "N = I", "I ≠ E = L"},
    // p = inf
    {"inf", "1", 2, {"l1", "l1", "l1", "l1"}, "N = I", "I = E = L"},
    {"inf", "2", 3, {"l1", "l1", "l2", "l2"}, "N = I", "I ≠ E = L"},
    {"inf", "inf", 2, {"l1", "l1", "linf", "linf"}, "N = I", "I ≠ E = L"},
    {"inf", "3/2", 1, {"l1", "l1", "l3/2", "l3/2"}, "N = I", "I ≠ E = L"},
};

inline const std::vector<FormCell> form_cells = {
    {"1", 5, {"c0", "linf", "linf", "linf"}},
    {"1", 2, {"c0", "linf", "linf", "linf"}},
    {"3/2", 2, {"l3/2", "l3/2", "l3/2", "linf"}},
    {"4/3", 2, {"l2", "l2", "l2", "linf"}},
    {"3/2", 3, {"l1", "l1", "l3/2", "linf"}},
    {"5/4", 3, {"l5/3", "l5/3", "l5/2", "linf"}},
    {"5/4", 4, {"l5/4", "l5/4", "l5/2", "linf"}},
    {"4", 3, {"l1", "l1", "l1", "l4"}},
    {"6", 2, {"l1", "l1", "l1", "l3/2"}},
    {"3", 3, {"l1", "l1", "l1", "linf"}},
    {"2", 2, {"l1", "l1", "l1", "linf"}},
    {"inf", 4, {"l1", "l1", "l1", "l1"}},
};

}  // namespace golden
