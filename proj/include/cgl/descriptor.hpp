#pragma once
// JSON group descriptors: the CLI's group-selection vocabulary, with a
// canonical serialization and a stable 64-bit content hash for cache keying.
//
//   {"preset": "S3"}            named constructions (see build_corpus_group,
//                               plus "torus_t" and "paper_g")
//   {"cyclic": 12}              cyclic group of the given order
//   {"semidirect": {"normal": D, "acting": D, "action": [[...], ...]}}
//                               external semidirect product; action[h][n] is
//                               the element index of the image of n under h

#include "cgl/group.hpp"

#include <cstdint>
#include <string>

namespace cgl {

struct GroupDescriptor {
    std::string canonical; // canonical JSON text (sorted keys, compact)
    uint64_t hash = 0;     // FNV-1a over the canonical text

    // Both throw InputError on malformed input.
    static GroupDescriptor parse(const std::string& json_text);
    static GroupDescriptor preset(const std::string& name);
};

uint64_t fnv1a64(const std::string& data);

FiniteGroup build_from_descriptor(const GroupDescriptor& d);

} // namespace cgl
