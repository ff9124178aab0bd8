#include "lscd/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "lscd/rng.hpp"

namespace lscd {

const char* const kInjectTagPeriod1 = "_CORPUS1";
const char* const kInjectTagPeriod2 = "_CORPUS2";

void Corpus::rebuild_vocab() {
    vocab = Vocabulary();
    token_count = 0;
    for (const auto& sentence : sentences) {
        for (const auto& token : sentence) {
            vocab.add(token);
            ++token_count;
        }
    }
}

namespace {

// Removes tokens below min_freq, drops emptied sentences, rebuilds the vocab.
Corpus filter_corpus(std::vector<Sentence> sentences, const std::string& name,
                     std::int64_t min_freq) {
    std::unordered_map<std::string, std::int64_t> counts;
    for (const auto& sentence : sentences)
        for (const auto& token : sentence) ++counts[token];

    Corpus corpus;
    corpus.name = name;
    for (auto& sentence : sentences) {
        Sentence kept;
        kept.reserve(sentence.size());
        for (auto& token : sentence)
            if (counts[token] >= min_freq) kept.push_back(std::move(token));
        if (!kept.empty()) corpus.sentences.push_back(std::move(kept));
    }
    corpus.rebuild_vocab();
    if (corpus.token_count == 0)
        throw std::runtime_error("empty corpus: no tokens survive min_freq=" +
                                 std::to_string(min_freq) +
                                 (name.empty() ? "" : " in " + name));
    return corpus;
}

}  // namespace

Corpus make_corpus(std::vector<Sentence> sentences, const std::string& name,
                   std::int64_t min_freq) {
    return filter_corpus(std::move(sentences), name, min_freq);
}

Corpus load_corpus(const std::string& path, std::int64_t min_freq,
                   const std::string& name) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);

    std::vector<Sentence> sentences;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        Sentence sentence;
        std::string token;
        while (ss >> token) sentence.push_back(std::move(token));
        if (!sentence.empty()) sentences.push_back(std::move(sentence));
    }
    if (in.bad()) throw std::runtime_error("I/O error while reading: " + path);
    return filter_corpus(std::move(sentences), name.empty() ? path : name,
                         min_freq);
}

void save_corpus(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write corpus file: " + path);
    for (const auto& sentence : corpus.sentences) {
        for (std::size_t i = 0; i < sentence.size(); ++i) {
            if (i) out << ' ';
            out << sentence[i];
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("I/O error while writing: " + path);
}

TargetWordList load_target_words(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open target list: " + path);
    TargetWordList targets;
    std::set<std::string> seen;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string word;
        if (!(ss >> word)) continue;
        if (seen.insert(word).second) targets.words.push_back(word);
    }
    if (targets.words.empty())
        throw std::runtime_error("empty target list: " + path);
    return targets;
}

void save_target_words(const TargetWordList& targets, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write target list: " + path);
    for (const auto& word : targets.words) out << word << '\n';
}

Corpus concat_corpora(const Corpus& c1, const Corpus& c2) {
    Corpus joint;
    joint.name = c1.name + "+" + c2.name;
    joint.sentences.reserve(c1.sentences.size() + c2.sentences.size());
    joint.sentences.insert(joint.sentences.end(), c1.sentences.begin(),
                           c1.sentences.end());
    joint.sentences.insert(joint.sentences.end(), c2.sentences.begin(),
                           c2.sentences.end());
    joint.rebuild_vocab();
    return joint;
}

WordInjectResult word_inject(const Corpus& c1, const Corpus& c2,
                             const TargetWordList& targets,
                             std::uint64_t seed) {
    std::set<std::string> unique(targets.words.begin(), targets.words.end());
    if (unique.size() != targets.words.size())
        throw std::invalid_argument("duplicate target words");

    WordInjectResult result;
    std::unordered_map<std::string, int> is_target;
    for (const auto& word : targets.words) {
        InjectedTarget entry;
        entry.tagged_t1 = word + kInjectTagPeriod1;
        entry.tagged_t2 = word + kInjectTagPeriod2;
        result.targets.emplace(word, entry);
        is_target.emplace(word, 1);
    }

    auto tag_sentences = [&](const Corpus& corpus, int period) {
        std::vector<Sentence> tagged = corpus.sentences;
        for (auto& sentence : tagged) {
            for (auto& token : sentence) {
                auto it = result.targets.find(token);
                if (it == result.targets.end()) continue;
                if (period == 1) {
                    ++it->second.freq_t1;
                    token = it->second.tagged_t1;
                } else {
                    ++it->second.freq_t2;
                    token = it->second.tagged_t2;
                }
            }
        }
        return tagged;
    };

    std::vector<Sentence> combined = tag_sentences(c1, 1);
    std::vector<Sentence> tagged2 = tag_sentences(c2, 2);
    combined.insert(combined.end(),
                    std::make_move_iterator(tagged2.begin()),
                    std::make_move_iterator(tagged2.end()));

    Rng rng(seed);
    shuffle(combined, rng);

    result.joint.sentences = std::move(combined);
    result.joint.name = c1.name + "|" + c2.name + "|wi";
    result.joint.rebuild_vocab();

    for (const auto& [word, entry] : result.targets) {
        if (entry.missing_everywhere())
            result.warnings.push_back("target '" + word +
                                      "' absent from both corpora");
    }
    return result;
}

}  // namespace lscd
