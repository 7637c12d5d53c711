#include "cgl/descriptor.hpp"
#include "cgl/backends.hpp"
#include "cgl/constructors.hpp"
#include "cgl/errors.hpp"

#include "json.hpp"

#include <memory>

namespace cgl {

namespace {

using nlohmann::json;

void validate_node(const json& j, int depth) {
    if (depth > 8) throw InputError("descriptor nesting too deep");
    if (!j.is_object() || j.size() != 1) {
        throw InputError("descriptor must be an object with exactly one key");
    }
    if (j.contains("preset")) {
        if (!j.at("preset").is_string()) throw InputError("preset must be a string");
        return;
    }
    if (j.contains("cyclic")) {
        if (!j.at("cyclic").is_number_unsigned() || j.at("cyclic").get<uint64_t>() == 0) {
            throw InputError("cyclic order must be a positive integer");
        }
        return;
    }
    if (j.contains("semidirect")) {
        const json& s = j.at("semidirect");
        if (!s.is_object() || s.size() != 3 || !s.contains("normal") || !s.contains("acting") ||
            !s.contains("action")) {
            throw InputError("semidirect needs exactly normal, acting, action");
        }
        validate_node(s.at("normal"), depth + 1);
        validate_node(s.at("acting"), depth + 1);
        const json& a = s.at("action");
        if (!a.is_array() || a.empty()) throw InputError("action must be a nonempty array");
        for (const json& row : a) {
            if (!row.is_array()) throw InputError("action rows must be arrays");
            for (const json& e : row) {
                if (!e.is_number_unsigned()) {
                    throw InputError("action entries must be nonnegative integers");
                }
            }
        }
        return;
    }
    throw InputError("descriptor key must be preset, cyclic, or semidirect");
}

FiniteGroup build_node(const json& j) {
    if (j.contains("preset")) {
        std::string name = j.at("preset").get<std::string>();
        if (name == "torus_t") return build_torus_T();
        if (name == "paper_g") return build_paper_G();
        return build_corpus_group(name);
    }
    if (j.contains("cyclic")) {
        uint64_t n = j.at("cyclic").get<uint64_t>();
        if (n > 4096) throw InputError("cyclic order out of range");
        return FiniteGroup::enumerate(std::make_shared<CyclicOps>(n),
                                      "C_" + std::to_string(n), {n == 1 ? ekey(0) : ekey(1)});
    }
    const json& s = j.at("semidirect");
    auto N = std::make_shared<FiniteGroup>(build_node(s.at("normal")));
    auto H = std::make_shared<FiniteGroup>(build_node(s.at("acting")));
    std::vector<std::vector<uint32_t>> action;
    for (const json& row : s.at("action")) {
        std::vector<uint32_t> r;
        r.reserve(row.size());
        for (const json& e : row) {
            uint64_t v = e.get<uint64_t>();
            if (v >= N->order()) throw InputError("action index out of range");
            r.push_back(uint32_t(v));
        }
        action.push_back(std::move(r));
    }
    return build_semidirect(N, H, action);
}

GroupDescriptor from_json(const json& j) {
    validate_node(j, 0);
    GroupDescriptor d;
    d.canonical = j.dump(); // nlohmann::json objects iterate in sorted key order
    d.hash = fnv1a64(d.canonical);
    return d;
}

} // namespace

uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

GroupDescriptor GroupDescriptor::parse(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& ex) {
        throw InputError(std::string("descriptor is not valid JSON: ") + ex.what());
    }
    return from_json(j);
}

GroupDescriptor GroupDescriptor::preset(const std::string& name) {
    json j;
    j["preset"] = name;
    return from_json(j);
}

FiniteGroup build_from_descriptor(const GroupDescriptor& d) {
    json j = json::parse(d.canonical);
    validate_node(j, 0);
    return build_node(j);
}

} // namespace cgl
