#pragma once

#include "sfgloc/sfg.hpp"
#include "sfgloc/token.hpp"
#include "sfgloc/vocab.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sfgloc {

struct RelationPair {
    int i = -1; // absolute sequence position
    int j = -1;
    friend bool operator==(const RelationPair&, const RelationPair&) = default;
};

// The concatenated encoder input
//   [CLS] W [C] S [SEP] [N] N [T] T [R] R [SEP]
// together with the four relation sets over absolute positions:
//   e1: code token <-> node alignment (stored once, masked both ways)
//   e2: node -> node for every graph edge
//   e3: node -> its type's position in the T segment
//   e4: node -> its role's position in the R segment
struct ModelInput {
    std::vector<int> tokens;

    int cls_pos = 0;
    int w_start = 0;
    int w_len = 0;
    int c_pos = 0;
    int s_start = 0;
    int s_len = 0;
    int sep1_pos = 0;
    int n_mark = 0;
    int n_start = 0;
    int n_len = 0;
    int t_mark = 0;
    int t_start = 0;
    int t_len = 0;
    int r_mark = 0;
    int r_start = 0;
    int r_len = 0;
    int sep2_pos = 0;

    std::vector<RelationPair> e1, e2, e3, e4;

    int length() const { return static_cast<int>(tokens.size()); }
    bool is_special(int pos) const {
        return pos == cls_pos || pos == c_pos || pos == sep1_pos || pos == n_mark ||
               pos == t_mark || pos == r_mark || pos == sep2_pos;
    }
    bool in_w(int pos) const { return pos >= w_start && pos < w_start + w_len; }
    bool in_s(int pos) const { return pos >= s_start && pos < s_start + s_len; }
    bool in_n(int pos) const { return pos >= n_start && pos < n_start + n_len; }
};

// Additive attention mask: 0 where attention is allowed, -inf elsewhere.
struct AttentionMask {
    int n = 0;
    std::vector<double> m; // row-major n*n

    double at(int i, int j) const { return m[static_cast<std::size_t>(i) * n + j]; }
    void set(int i, int j, double v) { m[static_cast<std::size_t>(i) * n + j] = v; }
    bool allowed(int i, int j) const { return at(i, j) == 0.0; }
    std::int64_t zero_count() const;
    std::string to_csv() const; // "-inf" spelled out
};

// Builds the model input for one method. The code token stream and the SFG
// must come from the same source. W is truncated first, then trailing nodes;
// S is never truncated: LengthError if the skeleton plus full S overflows.
ModelInput build_input(const std::string& comment, const TokenStream& code,
                       const SemanticFlowGraph& sfg, const Vocabulary& vocab, int max_len = 512);

// Free-text variant used for bug reports and encoded changesets: W empty,
// S from tokenize_text, empty graph.
ModelInput build_text_input(const std::string& text, const Vocabulary& vocab, int max_len = 512);

AttentionMask build_attention_mask(const ModelInput& input);

// Random pre-training masks (15% MLM over S with 80/10/10 actions, 20% of
// every relation set hidden, one sampled negative per hidden pair).
struct MlmSlot {
    int pos = -1;
    enum Action { Mask, Random, Keep } action = Mask;
    int original = -1;
    int replacement = -1;
};

struct PretrainMasks {
    std::vector<MlmSlot> mlm;
    std::vector<RelationPair> hidden_e1, hidden_e2, hidden_e3, hidden_e4; // labels δ=1
    std::vector<RelationPair> neg_e1, neg_e2, neg_e3, neg_e4;             // labels δ=0
};

PretrainMasks sample_pretrain_masks(const ModelInput& input, std::uint64_t seed,
                                    const Vocabulary& vocab);

// Token sequence with the MLM replacements applied.
std::vector<int> apply_mlm(const ModelInput& input, const PretrainMasks& masks);

// Attention mask with the hidden relation entries flipped to -inf
// (both directions for e1 pairs).
AttentionMask build_masked_attention(const ModelInput& input, const PretrainMasks& masks);

} // namespace sfgloc
