#include "jetspace/variable.hpp"

#include <mutex>
#include <ostream>
#include <unordered_map>
#include <vector>

namespace jetspace {

char family_letter(Family f) {
    switch (f) {
        case Family::a: return 'a';
        case Family::b: return 'b';
        case Family::c: return 'c';
        case Family::aux: return '?';
    }
    throw engine_error("bad family");
}

namespace {

struct AuxInterner {
    std::mutex mutex;
    std::vector<std::string> names;
    std::unordered_map<std::string, std::uint32_t> ids;

    AuxInterner() {
        for (const char* seed : {"x", "y", "z", "t", "s", "u"}) intern_locked(seed);
    }

    std::uint32_t intern_locked(const std::string& name) {
        auto it = ids.find(name);
        if (it != ids.end()) return it->second;
        std::uint32_t id = static_cast<std::uint32_t>(names.size());
        names.push_back(name);
        ids.emplace(name, id);
        return id;
    }

    std::uint32_t intern(const std::string& name) {
        std::lock_guard<std::mutex> lock(mutex);
        return intern_locked(name);
    }

    const std::string& name_of(std::uint32_t id) {
        std::lock_guard<std::mutex> lock(mutex);
        if (id >= names.size()) throw engine_error("unknown aux variable id");
        return names[id];
    }
};

AuxInterner& interner() {
    static AuxInterner instance;
    return instance;
}

VariableId pack(Family f, std::uint32_t primary, std::uint32_t secondary_plus_one) {
    if (primary > 0x3fffffffU) throw engine_error("variable index too large");
    VariableId v;
    v.packed = (static_cast<std::uint64_t>(f) << 62) | (static_cast<std::uint64_t>(primary) << 32) |
               static_cast<std::uint64_t>(secondary_plus_one);
    return v;
}

}  // namespace

const std::string& VariableId::aux_name() const {
    if (!is_aux()) throw engine_error("aux_name on a jet variable");
    return interner().name_of(primary());
}

std::string VariableId::to_string() const {
    if (is_aux()) return aux_name();
    std::string out(1, family_letter(family()));
    out += std::to_string(primary());
    if (auto sec = secondary()) {
        out += '_';
        out += std::to_string(*sec);
    }
    return out;
}

VariableId jet_variable(Family f, std::uint32_t index) {
    if (f == Family::aux) throw engine_error("jet_variable with aux family");
    return pack(f, index, 0);
}

VariableId wedge_variable(Family f, std::uint32_t index, std::uint32_t level) {
    if (f == Family::aux) throw engine_error("wedge_variable with aux family");
    if (level == 0xffffffffU) throw engine_error("wedge level too large");
    return pack(f, index, level + 1);
}

std::ostream& operator<<(std::ostream& os, const VariableId& v) { return os << v.to_string(); }

VariableId aux_variable(const std::string& name) {
    if (name.empty()) throw engine_error("empty aux variable name");
    return pack(Family::aux, interner().intern(name), 0);
}

VariableId var_x() { return aux_variable("x"); }
VariableId var_y() { return aux_variable("y"); }
VariableId var_z() { return aux_variable("z"); }
VariableId var_t() { return aux_variable("t"); }
VariableId var_s() { return aux_variable("s"); }
VariableId var_u() { return aux_variable("u"); }

}  // namespace jetspace
