#include "cgl/table_io.hpp"
#include "cgl/errors.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace cgl {

namespace {

using ordered = nlohmann::ordered_json;

std::string hex16(uint64_t v) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

uint64_t parse_exponent_key(const std::string& key, uint64_t e) {
    size_t pos = 0;
    uint64_t k = 0;
    try {
        k = std::stoull(key, &pos);
    } catch (const std::exception&) {
        throw InputError("bad exponent key in value map: " + key);
    }
    if (pos != key.size() || k >= e) throw InputError("bad exponent key in value map: " + key);
    return k;
}

} // namespace

nlohmann::ordered_json group_summary_json(const GroupDescriptor& d, const FiniteGroup& G) {
    ClassData cd = conjugacy_classes(G);
    Subgroup Z = center(G);
    Subgroup F = fitting_subgroup(G, cd);
    SpectrumReport spec = element_order_spectrum(cd);
    ordered doc;
    doc["format"] = 1;
    doc["descriptor"] = ordered::parse(d.canonical);
    doc["name"] = G.name();
    doc["order"] = G.order();
    doc["num_classes"] = cd.num_classes();
    doc["exponent"] = cd.exponent;
    doc["center_order"] = Z.order();
    doc["center_cyclic"] = is_cyclic(Z).cyclic;
    doc["fitting_order"] = F.order();
    doc["spectrum"] = spec.orders;
    return doc;
}

nlohmann::ordered_json codegree_records_json(const std::vector<CodegreeRecord>& recs) {
    ordered arr = ordered::array();
    for (const CodegreeRecord& rec : recs) {
        ordered jr;
        jr["chi"] = rec.chi;
        jr["degree"] = rec.degree;
        jr["kernel_order"] = rec.kernel_order;
        jr["codegree"] = rec.codegree;
        jr["kernel_classes"] = rec.kernel_classes;
        jr["primes"] = rec.primes;
        arr.push_back(std::move(jr));
    }
    return arr;
}

nlohmann::ordered_json moreto_json(const MoretoReport& rep) {
    ordered out;
    out["negative_answer"] = rep.negative_answer;
    out["violations"] = rep.violations;
    ordered verdicts = ordered::array();
    for (const MoretoVerdict& v : rep.verdicts) {
        ordered jv;
        jv["chi"] = v.chi;
        jv["codegree"] = v.codegree;
        jv["has_witness"] = v.has_witness;
        if (v.has_witness) {
            jv["witness_class"] = v.witness_class;
            jv["witness_order"] = v.witness_order;
        }
        verdicts.push_back(std::move(jv));
    }
    out["verdicts"] = std::move(verdicts);
    return out;
}

nlohmann::ordered_json qian_json(const QianReport& rep) {
    ordered out;
    out["holds"] = rep.holds;
    ordered w = ordered::array();
    for (const auto& [o, c] : rep.witnesses) {
        ordered jw;
        jw["order"] = o;
        jw["codegree"] = c;
        w.push_back(std::move(jw));
    }
    out["witnesses"] = std::move(w);
    out["failures"] = rep.failures;
    return out;
}

nlohmann::ordered_json table_json(const GroupDescriptor& d, const CharacterTable& tbl) {
    ordered doc;
    doc["format"] = kTableFormat;
    doc["descriptor"] = ordered::parse(d.canonical);
    doc["descriptor_hash"] = hex16(d.hash);
    doc["order"] = tbl.group_order;
    doc["exponent"] = tbl.exponent;
    doc["prime"] = tbl.ell;
    doc["root"] = tbl.z;

    ordered classes = ordered::array();
    for (size_t j = 0; j < tbl.num_classes(); ++j) {
        ordered jc;
        jc["size"] = tbl.class_sizes[j];
        jc["order"] = tbl.class_orders[j];
        jc["power_map"] = tbl.power_map[j];
        classes.push_back(std::move(jc));
    }
    doc["classes"] = std::move(classes);

    ordered chars = ordered::array();
    for (size_t i = 0; i < tbl.num_chars(); ++i) {
        ordered jc;
        jc["degree"] = tbl.degree(i);
        ordered vals = ordered::array();
        for (size_t j = 0; j < tbl.num_classes(); ++j) {
            ordered jm = ordered::object();
            for (const auto& [k, m] : tbl.rows[i][j].sparse()) {
                jm[std::to_string(k)] = m;
            }
            vals.push_back(std::move(jm));
        }
        jc["values"] = std::move(vals);
        chars.push_back(std::move(jc));
    }
    doc["characters"] = std::move(chars);

    std::vector<CodegreeRecord> recs = codegrees(tbl);
    doc["codegrees"] = codegree_records_json(recs);
    doc["codegree_set"] = codegree_set(recs);
    doc["moreto"] = moreto_json(moreto_check(tbl, recs));
    doc["qian"] = qian_json(qian_property_test(tbl, recs));
    return doc;
}

std::string dump_document(const nlohmann::ordered_json& doc) {
    return doc.dump(2) + "\n";
}

std::string table_file_text(const GroupDescriptor& d, const CharacterTable& tbl) {
    return dump_document(table_json(d, tbl));
}

CharacterTable table_from_text(const std::string& text, const GroupDescriptor& d, int threads) {
    ordered doc;
    try {
        doc = ordered::parse(text);
    } catch (const ordered::exception& ex) {
        throw InputError(std::string("table file is not valid JSON: ") + ex.what());
    }
    try {
        if (!doc.contains("format") || !doc.at("format").is_number_integer() ||
            doc.at("format").get<int64_t>() != kTableFormat) {
            throw InputError("unsupported table file format");
        }
        if (doc.at("descriptor").dump() != d.canonical) {
            throw InputError("table file descriptor does not match the request");
        }

        CharacterTable tbl;
        tbl.group_order = doc.at("order").get<uint64_t>();
        tbl.exponent = doc.at("exponent").get<uint64_t>();
        tbl.ell = doc.at("prime").get<uint64_t>();
        tbl.z = doc.at("root").get<uint64_t>();
        if (tbl.group_order == 0 || tbl.exponent == 0) throw InputError("bad table header");

        const ordered& classes = doc.at("classes");
        if (!classes.is_array() || classes.empty()) throw InputError("bad class list");
        size_t r = classes.size();
        for (const ordered& jc : classes) {
            tbl.class_sizes.push_back(jc.at("size").get<uint64_t>());
            tbl.class_orders.push_back(jc.at("order").get<uint64_t>());
            std::vector<uint32_t> pm = jc.at("power_map").get<std::vector<uint32_t>>();
            if (pm.size() != tbl.exponent) throw InputError("power map row has wrong length");
            for (uint32_t c : pm) {
                if (c >= r) throw InputError("power map entry out of range");
            }
            tbl.power_map.push_back(std::move(pm));
        }
        for (size_t j = 0; j < r; ++j) {
            // rep^(e-1) = rep^(-1), so the inverse class is the last power
            tbl.inverse_class.push_back(tbl.power_map[j][tbl.exponent - 1]);
        }

        tbl.cyclo = std::make_shared<const CycloCtx>(tbl.exponent);
        const ordered& chars = doc.at("characters");
        if (!chars.is_array() || chars.size() != r) throw InputError("character count mismatch");
        for (const ordered& jc : chars) {
            uint64_t deg = jc.at("degree").get<uint64_t>();
            const ordered& vals = jc.at("values");
            if (!vals.is_array() || vals.size() != r) throw InputError("value row has wrong length");
            std::vector<CyclotomicValue> row;
            row.reserve(r);
            for (const ordered& jm : vals) {
                if (!jm.is_object()) throw InputError("value must be an exponent map");
                CyclotomicValue v(*tbl.cyclo);
                uint64_t total = 0;
                for (auto it = jm.begin(); it != jm.end(); ++it) {
                    uint64_t k = parse_exponent_key(it.key(), tbl.exponent);
                    if (!it.value().is_number_unsigned()) {
                        throw InputError("value multiplicities must be nonnegative integers");
                    }
                    uint64_t m = it.value().get<uint64_t>();
                    if (m == 0 || m > deg) throw InputError("value multiplicity out of range");
                    if (v.c[k] != 0) throw InputError("duplicate exponent key in value map");
                    v.c[k] = int64_t(m);
                    total += m;
                }
                // every lifted value is a sum of exactly deg roots of unity
                if (total != deg) throw InputError("value multiplicities do not sum to the degree");
                row.push_back(std::move(v));
            }
            tbl.rows.push_back(std::move(row));
        }

        verify_table_invariants(tbl, threads);

        // the ultimate self-check: the document must regenerate byte for byte
        if (table_file_text(d, tbl) != text) {
            throw InputError("table file failed round-trip validation");
        }
        return tbl;
    } catch (const ordered::exception& ex) {
        throw InputError(std::string("table file malformed: ") + ex.what());
    }
}

std::optional<std::string> resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    const char* env = std::getenv("CODEGREE_LAB_CACHE");
    if (env != nullptr && *env != '\0') return std::string(env);
    return std::nullopt;
}

std::string cache_path(const std::string& dir, const GroupDescriptor& d) {
    return dir + "/" + hex16(d.hash) + "-f" + std::to_string(kTableFormat) + ".json";
}

std::optional<CharacterTable> try_load_cached_table(const GroupDescriptor& d,
                                                    const std::string& cache_flag, int threads) {
    std::optional<std::string> dir = resolve_cache_dir(cache_flag);
    if (!dir) return std::nullopt;
    std::string path = cache_path(*dir, d);
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return table_from_text(ss.str(), d, threads);
    } catch (const std::exception& ex) {
        std::cerr << "warning: ignoring invalid cache file " << path << ": " << ex.what() << "\n";
        return std::nullopt;
    }
}

CharacterTable compute_and_store_table(const FiniteGroup& G, const GroupDescriptor& d,
                                       const std::string& cache_flag, int threads) {
    CharacterTable tbl = character_table(G, threads);
    if (std::optional<std::string> dir = resolve_cache_dir(cache_flag)) {
        std::string path = cache_path(*dir, d);
        std::error_code ec;
        std::filesystem::create_directories(*dir, ec);
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (out) out << table_file_text(d, tbl);
        if (!out) std::cerr << "warning: could not write cache file " << path << "\n";
    }
    return tbl;
}

TableSource load_or_compute_table(const GroupDescriptor& d, const std::string& cache_flag,
                                  int threads) {
    if (std::optional<CharacterTable> hit = try_load_cached_table(d, cache_flag, threads)) {
        return TableSource{std::move(*hit), true};
    }
    FiniteGroup G = build_from_descriptor(d);
    return TableSource{compute_and_store_table(G, d, cache_flag, threads), false};
}

} // namespace cgl
