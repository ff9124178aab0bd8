#include "lscd/gold.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lscd {

GoldRanking load_gold_ranking(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open gold file: " + path);
    GoldRanking gold;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string word;
        double score;
        if (!(ss >> word >> score))
            throw std::runtime_error("malformed gold line " +
                                     std::to_string(line_no) + " in " + path);
        if (!gold.words.emplace(word, score).second)
            throw std::runtime_error("duplicate gold item '" + word + "' in " +
                                     path);
    }
    if (gold.empty()) throw std::runtime_error("empty gold file: " + path);
    return gold;
}

void save_gold_ranking(const GoldRanking& gold, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write gold file: " + path);
    for (const auto& [word, score] : gold.words)
        out << word << '\t' << score << '\n';
}

GoldRanking load_similarity_gold(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open gold file: " + path);
    GoldRanking gold;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string w1, w2;
        double score;
        if (!(ss >> w1 >> w2 >> score))
            throw std::runtime_error("malformed similarity gold line " +
                                     std::to_string(line_no) + " in " + path);
        gold.pairs.push_back({{w1, w2}, score});
    }
    if (gold.empty()) throw std::runtime_error("empty gold file: " + path);
    return gold;
}

}  // namespace lscd
