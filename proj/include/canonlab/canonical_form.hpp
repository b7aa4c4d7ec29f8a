#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace canonlab {

enum class Status { success, fallback_used, not_canonizable };

const char* to_string(Status s);

// Canonically labeled graph. labeling[v] is v's rank in 1..n;
// canonical_edges is the relabeled edge list, sorted; certificate digests
// (n, canonical_edges), so it is equal exactly when the canonical forms
// coincide. Isomorphic inputs resolved with the same status in
// {success, fallback_used} receive equal certificates.
struct CanonicalForm {
    Status status = Status::success;
    std::vector<int> labeling;
    std::vector<std::pair<int, int>> canonical_edges;
    std::array<unsigned char, 32> certificate{};
    std::string certificate_hex() const;
};

std::array<unsigned char, 32> edge_digest(int n,
                                          const std::vector<std::pair<int, int>>& edges);

}  // namespace canonlab
