#include "jetspace/valuative.hpp"

#include <algorithm>
#include <set>

#include "jetspace/rational.hpp"

namespace jetspace {

namespace {

void validate_table(const OrderTable& t) {
    std::set<std::string> names;
    for (const auto& d : t.divisors) {
        if (!names.insert(d.name).second) {
            throw fixture_error("duplicate divisor name: " + d.name);
        }
        for (const auto& fn : t.test_functions) {
            if (!d.test_orders.count(fn)) {
                throw fixture_error("divisor " + d.name + " lacks an order for " + fn);
            }
        }
    }
    std::set<std::string> fns(t.test_functions.begin(), t.test_functions.end());
    if (fns.size() != t.test_functions.size()) {
        throw fixture_error("duplicate test function name");
    }
    std::set<std::string> swapped;
    for (const auto& [a, b] : t.symmetries) {
        if (a == b) throw fixture_error("symmetry must swap two distinct divisors");
        t.divisor_index(a);
        t.divisor_index(b);
        if (!swapped.insert(a).second || !swapped.insert(b).second) {
            throw fixture_error("divisor appears in more than one symmetry");
        }
    }
}

// The declared symmetry as one permutation of divisor indices.
std::vector<std::size_t> symmetry_permutation(const OrderTable& t) {
    std::vector<std::size_t> sigma(t.divisors.size());
    for (std::size_t q = 0; q < sigma.size(); ++q) sigma[q] = q;
    for (const auto& [a, b] : t.symmetries) {
        std::swap(sigma[t.divisor_index(a)], sigma[t.divisor_index(b)]);
    }
    return sigma;
}

}  // namespace

std::size_t OrderTable::divisor_index(const std::string& name) const {
    for (std::size_t q = 0; q < divisors.size(); ++q) {
        if (divisors[q].name == name) return q;
    }
    throw fixture_error("unknown divisor: " + name);
}

const DivisorRecord& OrderTable::divisor(const std::string& name) const {
    return divisors[divisor_index(name)];
}

std::uint64_t OrderTable::order_of(const std::string& divisor_name, const std::string& fn) const {
    const DivisorRecord& d = divisor(divisor_name);
    auto it = d.test_orders.find(fn);
    if (it == d.test_orders.end()) throw fixture_error("unknown test function: " + fn);
    return it->second;
}

OrderTable make_order_table(std::vector<std::string> test_functions,
                            std::vector<DivisorRecord> divisors,
                            std::vector<std::pair<std::string, std::string>> symmetries) {
    OrderTable t{std::move(test_functions), std::move(divisors), std::move(symmetries)};
    validate_table(t);
    return t;
}

std::optional<std::string> valuative_check(const OrderTable& table, const std::string& i,
                                           const std::string& j) {
    const DivisorRecord& di = table.divisor(i);
    const DivisorRecord& dj = table.divisor(j);
    for (const auto& fn : table.test_functions) {
        if (di.test_orders.at(fn) < dj.test_orders.at(fn)) return fn;
    }
    return std::nullopt;
}

ResidualPairs residual_pairs(const OrderTable& table) {
    const std::size_t n = table.divisors.size();
    ResidualPairs out;
    std::vector<std::pair<std::size_t, std::size_t>> full;  // (target, source) keys
    for (std::size_t target = 0; target < n; ++target) {
        for (std::size_t source = 0; source < n; ++source) {
            if (source == target) continue;
            if (!valuative_check(table, table.divisors[source].name, table.divisors[target].name)) {
                full.emplace_back(target, source);
            }
        }
    }
    std::sort(full.begin(), full.end());
    for (const auto& [target, source] : full) {
        out.full.emplace_back(table.divisors[source].name, table.divisors[target].name);
    }
    const auto sigma = symmetry_permutation(table);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& key : full) {
        if (seen.count(key)) continue;
        seen.insert(key);
        seen.insert({sigma[key.first], sigma[key.second]});
        out.reduced.emplace_back(table.divisors[key.second].name, table.divisors[key.first].name);
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> partial_order(const OrderTable& table) {
    const std::size_t n = table.divisors.size();
    std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            bool all_le = true;
            bool any_lt = false;
            for (const auto& fn : table.test_functions) {
                const std::uint64_t oi = table.divisors[i].test_orders.at(fn);
                const std::uint64_t oj = table.divisors[j].test_orders.at(fn);
                if (oi > oj) all_le = false;
                if (oi < oj) any_lt = true;
            }
            below[i][j] = all_le && any_lt;
        }
    }
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!below[i][j]) continue;
            if (below[j][i]) throw engine_error("partial order antisymmetry violated");
            out.emplace_back(table.divisors[i].name, table.divisors[j].name);
        }
    }
    return out;
}

std::vector<NonInclusionTask> classify_pairs(const OrderTable& table) {
    std::vector<NonInclusionTask> out;
    for (const auto& source : table.divisors) {
        for (const auto& target : table.divisors) {
            if (source.name == target.name) continue;
            NonInclusionTask task;
            task.source = source.name;
            task.target = target.name;
            if (auto w = valuative_check(table, source.name, target.name)) {
                task.status = NonInclusionStatus::proved_valuative;
                task.witness = *w;
            }
            out.push_back(std::move(task));
        }
    }
    return out;
}

namespace {

Rational leading_minor(const IntersectionMatrix& m, std::size_t k) {
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) a[r][c] = Rational(static_cast<long>(m.entries[r][c]));
    }
    Rational det(1);
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && a[pivot][col] == 0) ++pivot;
        if (pivot == k) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < k; ++r) {
            if (a[r][col] == 0) continue;
            const Rational factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < k; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    return det;
}

}  // namespace

bool is_negative_definite(const IntersectionMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m.entries) {
        if (row.size() != n) throw fixture_error("intersection matrix must be square");
    }
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r + 1; c < n; ++c) {
            if (m.entries[r][c] != m.entries[c][r]) {
                throw fixture_error("intersection matrix must be symmetric");
            }
        }
    }
    for (std::size_t k = 1; k <= n; ++k) {
        const Rational det = leading_minor(m, k);
        const bool ok = (k % 2 == 1) ? det < 0 : det > 0;
        if (!ok) return false;
    }
    return true;
}

std::vector<std::int64_t> lipman_vector(const IntersectionMatrix& m) {
    if (!is_negative_definite(m)) {
        throw error("lipman vector requires a negative definite intersection matrix");
    }
    const std::size_t n = m.size();
    std::vector<std::int64_t> v(n, 1);
    for (std::size_t guard = 0; guard < 1000000; ++guard) {
        std::size_t bump = n;
        for (std::size_t q = 0; q < n && bump == n; ++q) {
            std::int64_t row = 0;
            for (std::size_t c = 0; c < n; ++c) row += m.entries[q][c] * v[c];
            if (row > 0) bump = q;
        }
        if (bump == n) return v;
        ++v[bump];
    }
    throw engine_error("lipman increment loop did not converge");
}

}  // namespace jetspace
