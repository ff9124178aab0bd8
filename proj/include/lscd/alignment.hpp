#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lscd/corpus.hpp"
#include "lscd/embeddings.hpp"
#include "lscd/types.hpp"

namespace lscd {

enum class AlignMethod { OP, VI, WI, NO };
enum class PretrainSource { none, diachron, modern };

const char* to_string(AlignMethod method);
const char* to_string(PretrainSource source);
AlignMethod parse_align_method(const std::string& name);
PretrainSource parse_pretrain_source(const std::string& name);

// Two word matrices comparable row-by-row for shared vocabulary. For WI both
// matrices hold the same joint space; the vocabularies map each target word to
// the row of its period-tagged form, so lookups stay uniform across methods.
struct AlignedSpaces {
    Matrix matrix_a;
    Matrix matrix_b;
    Vocabulary vocab_a;
    Vocabulary vocab_b;
    AlignMethod method = AlignMethod::OP;
    PretrainSource pretrain = PretrainSource::none;
    std::vector<std::string> notes;
};

// W* = argmin over orthogonal W of |B W - A|_F, via SVD of B^T A.
// Requires identical shapes; the result satisfies |W*^T W* - I|_inf <= 1e-6.
Matrix solve_orthogonal_procrustes(const Matrix& a, const Matrix& b);

// Length-normalizes rows of both word matrices, mean-centers using the
// shared-vocabulary column means (offsets applied to all rows), solves W* on
// the shared rows and applies it to every row of B.
AlignedSpaces align_op(const EmbeddingModel& m1, const EmbeddingModel& m2);

// A = train(c1, random init); B = train(c2, initialized from A).
AlignedSpaces align_vi(const Corpus& c1, const Corpus& c2,
                       const TrainConfig& cfg);

// Both models start from the same pre-trained weights C; the resulting spaces
// are treated as aligned with no further transform. Seeds differ between the
// two trainings unless identical_seeds is set.
AlignedSpaces align_no(const Corpus& c1, const Corpus& c2,
                       const TrainConfig& cfg, const EmbeddingModel& pretrained,
                       bool length_normalize, bool identical_seeds = false);

// Joint corpus via word_inject, one model; targets with zero frequency in
// either corpus are flagged in notes and score as missing downstream.
AlignedSpaces align_wi(const Corpus& c1, const Corpus& c2,
                       const TargetWordList& targets, const TrainConfig& cfg,
                       std::uint64_t seed);

// DIACHRON trains on the concatenation of the two target corpora; MODERN on a
// user-supplied large corpus. Returns the initialization model C.
EmbeddingModel pretrain_workflow(PretrainSource source, const Corpus& c1,
                                 const Corpus& c2, const TrainConfig& cfg);
EmbeddingModel pretrain_workflow_modern(const Corpus& modern,
                                        const TrainConfig& cfg);

// Two matrix files (basename.a.vec / basename.b.vec, word2vec text format)
// plus a provenance key-value file basename.prov.
void save_spaces(const AlignedSpaces& spaces, const std::string& basename);
AlignedSpaces load_spaces(const std::string& basename);

}  // namespace lscd
