#include "jetspace/monomial_order.hpp"

#include <algorithm>

#include "jetspace/errors.hpp"

namespace jetspace {

Rational weighted_degree(const Monomial& m, const WeightVector& w) {
    Rational d(0);
    for (const auto& [v, e] : m.factors) d += w.weight_of(v) * Rational(e);
    return d;
}

namespace {

std::strong_ordering grevlex_compare(const Monomial& x, const Monomial& y) {
    std::uint64_t dx = x.total_degree(), dy = y.total_degree();
    if (dx != dy) return dx <=> dy;
    // Equal degree: scan from the smallest variable upward; the first variable where
    // the exponents differ decides, larger exponent meaning smaller monomial.
    auto ix = x.factors.rbegin(), iy = y.factors.rbegin();
    while (ix != x.factors.rend() || iy != y.factors.rend()) {
        if (ix == x.factors.rend()) return std::strong_ordering::greater;
        if (iy == y.factors.rend()) return std::strong_ordering::less;
        if (ix->first == iy->first) {
            if (ix->second != iy->second)
                return ix->second > iy->second ? std::strong_ordering::less : std::strong_ordering::greater;
            ++ix;
            ++iy;
        } else if (ix->first < iy->first) {
            // x has positive exponent on a variable smaller than any remaining in y.
            return std::strong_ordering::less;
        } else {
            return std::strong_ordering::greater;
        }
    }
    return std::strong_ordering::equal;
}

std::strong_ordering lex_compare(const Monomial& x, const Monomial& y) {
    auto ix = x.factors.begin(), iy = y.factors.begin();
    while (ix != x.factors.end() || iy != y.factors.end()) {
        if (ix == x.factors.end()) return std::strong_ordering::less;
        if (iy == y.factors.end()) return std::strong_ordering::greater;
        if (ix->first == iy->first) {
            if (ix->second != iy->second) return ix->second <=> iy->second;
            ++ix;
            ++iy;
        } else if (ix->first > iy->first) {
            return std::strong_ordering::greater;
        } else {
            return std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace

MonomialOrder MonomialOrder::block_elimination(std::vector<VariableId> front_vars) {
    std::sort(front_vars.begin(), front_vars.end());
    front_vars.erase(std::unique(front_vars.begin(), front_vars.end()), front_vars.end());
    return MonomialOrder{Kind::block_elimination, std::move(front_vars)};
}

bool MonomialOrder::in_front(VariableId v) const {
    return std::binary_search(front.begin(), front.end(), v);
}

std::strong_ordering MonomialOrder::compare(const Monomial& x, const Monomial& y) const {
    switch (kind) {
        case Kind::grevlex:
            return grevlex_compare(x, y);
        case Kind::lex:
            return lex_compare(x, y);
        case Kind::block_elimination: {
            Monomial fx, fy, rx, ry;
            for (const auto& f : x.factors) (in_front(f.first) ? fx : rx).factors.push_back(f);
            for (const auto& f : y.factors) (in_front(f.first) ? fy : ry).factors.push_back(f);
            auto cmp = grevlex_compare(fx, fy);
            if (cmp != 0) return cmp;
            return grevlex_compare(rx, ry);
        }
    }
    throw engine_error("bad monomial order kind");
}

std::strong_ordering canonical_compare(const Monomial& x, const Monomial& y) {
    return MonomialOrder::grevlex().compare(x, y);
}

}  // namespace jetspace
