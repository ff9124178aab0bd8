#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace lscd {

// Bijection token <-> dense index in [0, size()), plus occurrence counts.
// Indices are assigned in insertion order and stay contiguous.
class Vocabulary {
  public:
    Vocabulary() = default;

    // Adds `count` occurrences of `token`, creating an entry if needed.
    // Returns the token's index.
    int add(const std::string& token, std::int64_t count = 1);

    bool contains(const std::string& token) const {
        return index_.find(token) != index_.end();
    }
    // -1 when absent.
    int index_of(const std::string& token) const {
        auto it = index_.find(token);
        return it == index_.end() ? -1 : it->second;
    }
    const std::string& token_at(int index) const { return tokens_.at(index); }
    std::int64_t frequency(const std::string& token) const {
        auto it = index_.find(token);
        return it == index_.end() ? 0 : counts_[it->second];
    }
    std::int64_t frequency_at(int index) const { return counts_.at(index); }

    std::size_t size() const { return tokens_.size(); }
    std::int64_t total_count() const { return total_; }
    const std::vector<std::string>& tokens() const { return tokens_; }
    const std::vector<std::int64_t>& counts() const { return counts_; }

  private:
    std::unordered_map<std::string, int> index_;
    std::vector<std::string> tokens_;
    std::vector<std::int64_t> counts_;
    std::int64_t total_ = 0;
};

}  // namespace lscd
