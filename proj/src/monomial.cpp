#include "jetspace/monomial.hpp"

#include <algorithm>
#include <ostream>

#include "jetspace/errors.hpp"

namespace jetspace {

Monomial Monomial::variable(VariableId v, std::uint32_t exp) {
    Monomial m;
    if (exp > 0) m.factors.emplace_back(v, exp);
    return m;
}

Monomial Monomial::from_powers(std::vector<std::pair<VariableId, std::uint32_t>> powers) {
    std::sort(powers.begin(), powers.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    Monomial m;
    for (auto& [v, e] : powers) {
        if (e == 0) continue;
        if (!m.factors.empty() && m.factors.back().first == v) {
            m.factors.back().second += e;
        } else {
            m.factors.emplace_back(v, e);
        }
    }
    return m;
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [v, e] : factors) d += e;
    return d;
}

std::uint32_t Monomial::degree_of(VariableId v) const {
    for (const auto& [w, e] : factors)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::mul(const Monomial& o) const {
    Monomial out;
    out.factors.reserve(factors.size() + o.factors.size());
    std::size_t i = 0, j = 0;
    while (i < factors.size() && j < o.factors.size()) {
        if (factors[i].first == o.factors[j].first) {
            out.factors.emplace_back(factors[i].first, factors[i].second + o.factors[j].second);
            ++i;
            ++j;
        } else if (factors[i].first > o.factors[j].first) {
            out.factors.push_back(factors[i++]);
        } else {
            out.factors.push_back(o.factors[j++]);
        }
    }
    for (; i < factors.size(); ++i) out.factors.push_back(factors[i]);
    for (; j < o.factors.size(); ++j) out.factors.push_back(o.factors[j]);
    return out;
}

bool Monomial::divides(const Monomial& o) const {
    std::size_t j = 0;
    for (const auto& [v, e] : factors) {
        while (j < o.factors.size() && o.factors[j].first > v) ++j;
        if (j >= o.factors.size() || o.factors[j].first != v || o.factors[j].second < e) return false;
    }
    return true;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& o) const {
    if (!o.divides(*this)) return std::nullopt;
    Monomial out;
    std::size_t j = 0;
    for (const auto& [v, e] : factors) {
        std::uint32_t sub = 0;
        if (j < o.factors.size() && o.factors[j].first == v) sub = o.factors[j++].second;
        if (e > sub) out.factors.emplace_back(v, e - sub);
    }
    return out;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial out;
    std::size_t i = 0, j = 0;
    while (i < factors.size() && j < o.factors.size()) {
        if (factors[i].first == o.factors[j].first) {
            out.factors.emplace_back(factors[i].first, std::max(factors[i].second, o.factors[j].second));
            ++i;
            ++j;
        } else if (factors[i].first > o.factors[j].first) {
            out.factors.push_back(factors[i++]);
        } else {
            out.factors.push_back(o.factors[j++]);
        }
    }
    for (; i < factors.size(); ++i) out.factors.push_back(factors[i]);
    for (; j < o.factors.size(); ++j) out.factors.push_back(o.factors[j]);
    return out;
}

bool Monomial::coprime_with(const Monomial& o) const {
    std::size_t i = 0, j = 0;
    while (i < factors.size() && j < o.factors.size()) {
        if (factors[i].first == o.factors[j].first) return false;
        if (factors[i].first > o.factors[j].first) {
            ++i;
        } else {
            ++j;
        }
    }
    return true;
}

std::string Monomial::to_string() const {
    if (is_one()) return "1";
    std::string out;
    for (const auto& [v, e] : factors) {
        if (!out.empty()) out += '*';
        out += v.to_string();
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.to_string(); }

}  // namespace jetspace
