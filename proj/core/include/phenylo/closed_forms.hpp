#ifndef PHENYLO_CLOSED_FORMS_HPP
#define PHENYLO_CLOSED_FORMS_HPP

#include <string>

namespace phenylo {

// Exact integer value of a closed formula, plus which case of the formula
// fired. Every value is a multiple of 6.
struct FormulaResult {
    long long value = 0;
    std::string branch;
};

// Mo(L_h) = 72*floor(h/2)*ceil(h/2) - 24*floor(h/2), h >= 1.
FormulaResult mo_linear(int h);

// Mo(P_L(j,k,n)), 1 <= j <= k <= n, h = j+k+n+1. Case split on n vs
// floor(h/2) and on the parity of h.
FormulaResult mo_pl(int j, int k, int n);

// Second-minimal chain value: Mo(L_h) + 24(h-1), h >= 3.
FormulaResult mo_second(int h);

// Third-minimal chain value: Mo(L_h) + 48(h-2), h >= 5.
FormulaResult mo_third_chain(int h);

}  // namespace phenylo

#endif
