#include "lscd/vocab.hpp"

namespace lscd {

int Vocabulary::add(const std::string& token, std::int64_t count) {
    auto it = index_.find(token);
    int idx;
    if (it == index_.end()) {
        idx = static_cast<int>(tokens_.size());
        index_.emplace(token, idx);
        tokens_.push_back(token);
        counts_.push_back(0);
    } else {
        idx = it->second;
    }
    counts_[idx] += count;
    total_ += count;
    return idx;
}

}  // namespace lscd
