#pragma once
// Persistent character-table documents: versioned JSON with sparse value
// maps, plus a descriptor-keyed disk cache whose loader re-validates every
// file before trusting it.

#include "cgl/chartab.hpp"
#include "cgl/codegree.hpp"
#include "cgl/descriptor.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace cgl {

inline constexpr int kTableFormat = 1;

// JSON building blocks, shared with the CLI so every emitter agrees on shape.
nlohmann::ordered_json group_summary_json(const GroupDescriptor& d, const FiniteGroup& G);
nlohmann::ordered_json codegree_records_json(const std::vector<CodegreeRecord>& recs);
nlohmann::ordered_json moreto_json(const MoretoReport& rep);
nlohmann::ordered_json qian_json(const QianReport& rep);

// Full document (descriptor, classes, characters, codegree records,
// order-coverage reports). Deterministic field and key order throughout.
nlohmann::ordered_json table_json(const GroupDescriptor& d, const CharacterTable& tbl);

// dump with two-space indent and a trailing newline; the only serializer
// used anywhere, so identical documents are identical bytes.
std::string dump_document(const nlohmann::ordered_json& doc);

std::string table_file_text(const GroupDescriptor& d, const CharacterTable& tbl);

// Parse and fully re-validate a document produced by table_file_text: the
// descriptor must match, the table must pass the invariant battery, and
// regenerating the document must reproduce the input byte for byte. Throws
// InputError or InternalError when anything is off.
CharacterTable table_from_text(const std::string& text, const GroupDescriptor& d, int threads = 1);

// Explicit flag first, then the CODEGREE_LAB_CACHE environment variable.
std::optional<std::string> resolve_cache_dir(const std::string& flag_value);

// <dir>/<hex descriptor hash>-f<format>.json
std::string cache_path(const std::string& dir, const GroupDescriptor& d);

struct TableSource {
    CharacterTable tbl;
    bool from_cache = false;
};

// Cache probe: nullopt when there is no cache dir, no file, or the file fails
// validation (reported on stderr, never trusted).
std::optional<CharacterTable> try_load_cached_table(const GroupDescriptor& d,
                                                    const std::string& cache_flag, int threads);

// Compute from an already-built group and store in the cache when one is set.
CharacterTable compute_and_store_table(const FiniteGroup& G, const GroupDescriptor& d,
                                       const std::string& cache_flag, int threads);

// Convenience composition of the two (builds the group only on a cache miss).
TableSource load_or_compute_table(const GroupDescriptor& d, const std::string& cache_flag,
                                  int threads);

} // namespace cgl
