#include "phenylo/closed_forms.hpp"

#include <stdexcept>

namespace phenylo {

FormulaResult mo_linear(int h) {
    if (h < 1) throw std::invalid_argument("mo_linear: h must be >= 1");
    long long lo = h / 2, hi = (h + 1) / 2;
    return {72 * lo * hi - 24 * lo, "linear"};
}

FormulaResult mo_pl(int j_, int k_, int n_) {
    if (!(1 <= j_ && j_ <= k_ && k_ <= n_))
        throw std::invalid_argument("mo_pl: need 1 <= j <= k <= n");
    long long j = j_, k = k_, n = n_;
    long long h = j + k + n + 1;
    if (n <= h / 2) return {24 * (2 * k * j + 3 * n * j + 4 * k * n + k + 2 * n), "case-1"};
    long long base = 4 * j + 3 * j * j + 8 * k + 3 * k * k + 4 * n + 3 * n * n + 14 * k * j +
                     6 * j * n + 10 * k * n;
    if (h % 2 == 0) return {6 * (base + 1), "case-2-even"};
    return {6 * base, "case-2-odd"};
}

FormulaResult mo_second(int h) {
    if (h < 3) throw std::invalid_argument("mo_second: h must be >= 3");
    return {mo_linear(h).value + 24LL * (h - 1), "second"};
}

FormulaResult mo_third_chain(int h) {
    if (h < 5) throw std::invalid_argument("mo_third_chain: h must be >= 5");
    return {mo_linear(h).value + 48LL * (h - 2), "third-chain"};
}

}  // namespace phenylo
