#include "gms/series.hpp"

#include <sstream>

namespace gms {

std::string SeriesQ::to_string(bool with_order_term) const {
    std::ostringstream os;
    bool first = true;
    for (long n = 0; n <= trunc_; ++n) {
        const Rat& v = c_[static_cast<size_t>(n)];
        if (v == 0) continue;
        Rat a = v < 0 ? Rat(-v) : v;
        if (first) {
            if (v < 0) os << '-';
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        if (n == 0) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << '*';
            os << 't';
            if (n != 1) os << '^' << n;
        }
        first = false;
    }
    if (first) os << '0';
    if (with_order_term) os << " + O(t^" << (trunc_ + 1) << ')';
    return os.str();
}

}  // namespace gms
