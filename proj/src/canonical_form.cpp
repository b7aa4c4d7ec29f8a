#include "canonlab/canonical_form.hpp"

#include "canonlab/sha256.hpp"

namespace canonlab {

const char* to_string(Status s) {
    switch (s) {
        case Status::success: return "success";
        case Status::fallback_used: return "fallback_used";
        case Status::not_canonizable: return "not_canonizable";
    }
    return "?";
}

std::string CanonicalForm::certificate_hex() const { return Sha256::hex(certificate); }

std::array<unsigned char, 32> edge_digest(int n,
                                          const std::vector<std::pair<int, int>>& edges) {
    Sha256 h;
    h.update_u64(static_cast<unsigned long long>(n));
    h.update_u64(edges.size());
    for (const auto& [u, v] : edges) {
        h.update_u64(static_cast<unsigned long long>(u));
        h.update_u64(static_cast<unsigned long long>(v));
    }
    return h.finish();
}

}  // namespace canonlab
