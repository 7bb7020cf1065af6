#include "cayley/riemann_roch.hpp"

#include <string>

namespace cayley {

long long h0(const LineBundle& bundle) {
    if (bundle.genus < 0) throw usage_error("h0: negative genus");
    if (bundle.degree < 0) return 0;
    if (bundle.genus == 0) return bundle.degree + 1;
    if (bundle.degree > 2 * bundle.genus - 2) return bundle.degree + 1 - bundle.genus;
    throw math_error("h0 indeterminate: requires bundle-specific data (degree " +
                     std::to_string(bundle.degree) + ", genus " +
                     std::to_string(bundle.genus) + ")");
}

static void check_sum(const BundleSum& sum) {
    if (sum.summands.empty()) throw usage_error("BundleSum: empty sum");
    for (const auto& b : sum.summands)
        if (b.genus != sum.summands.front().genus)
            throw usage_error("BundleSum: summands must share one genus");
}

long long h0_sum(const BundleSum& sum) {
    check_sum(sum);
    long long total = 0;
    for (const auto& b : sum.summands) total += h0(b);
    return total;
}

long long euler_characteristic(const BundleSum& sum) {
    check_sum(sum);
    long long total = 0;
    for (const auto& b : sum.summands) total += b.degree + 1 - b.genus;
    return total;
}

long long genus_complete_intersection(long long d1, long long d2) {
    if (d1 <= 0 || d2 <= 0)
        throw usage_error("genus_complete_intersection: degrees must be positive");
    long long adj = d1 * d2 * (d1 + d2 - 4);
    if ((2 + adj) % 2 != 0 || 2 + adj < 0)
        throw math_error("not a valid smooth complete intersection input");
    return (2 + adj) / 2;
}

} // namespace cayley
