#include "sfgloc/model_input.hpp"

#include "sfgloc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <sstream>

namespace sfgloc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// S-segment index of the token at a byte offset, or -1.
int token_index_at(const std::vector<Token>& toks, std::size_t offset) {
    for (std::size_t k = 0; k < toks.size(); ++k)
        if (toks[k].kind != TokenKind::EndOfFile && toks[k].offset == offset)
            return static_cast<int>(k);
    return -1;
}

} // namespace

std::int64_t AttentionMask::zero_count() const {
    std::int64_t c = 0;
    for (double v : m)
        if (v == 0.0)
            ++c;
    return c;
}

std::string AttentionMask::to_csv() const {
    std::ostringstream out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j > 0)
                out << ",";
            out << (at(i, j) == 0.0 ? "0" : "-inf");
        }
        out << "\n";
    }
    return out.str();
}

ModelInput build_input(const std::string& comment, const TokenStream& code,
                       const SemanticFlowGraph& sfg, const Vocabulary& vocab, int max_len) {
    std::vector<std::string> w_toks = tokenize_text(comment);
    std::vector<Token> s_toks;
    for (const Token& t : code.tokens)
        if (t.kind != TokenKind::EndOfFile)
            s_toks.push_back(t);

    const int t_len = kVarTypeCount + kCtrlTypeCount;
    const int r_len = kRoleCount;
    const int skeleton = 7 + t_len + r_len; // specials + full T and R segments
    if (skeleton + static_cast<int>(s_toks.size()) > max_len)
        throw LengthError("code alone exceeds the maximum input length");

    int n_len = static_cast<int>(sfg.nodes.size());
    int w_len = static_cast<int>(w_toks.size());
    // truncation: drop comment tokens first, then trailing nodes
    auto total = [&]() {
        return skeleton + w_len + static_cast<int>(s_toks.size()) + n_len;
    };
    while (total() > max_len && w_len > 0)
        --w_len;
    while (total() > max_len && n_len > 0)
        --n_len;

    ModelInput in;
    auto push = [&](int id) {
        in.tokens.push_back(id);
        return static_cast<int>(in.tokens.size()) - 1;
    };

    in.cls_pos = push(Vocabulary::kCls);
    in.w_start = in.cls_pos + 1;
    in.w_len = w_len;
    for (int k = 0; k < w_len; ++k)
        push(vocab.id_of(w_toks[static_cast<std::size_t>(k)]));
    in.c_pos = push(Vocabulary::kC);
    in.s_start = in.c_pos + 1;
    in.s_len = static_cast<int>(s_toks.size());
    for (const Token& t : s_toks)
        push(vocab.id_of(t.text));
    in.sep1_pos = push(Vocabulary::kSep);
    in.n_mark = push(Vocabulary::kN);
    in.n_start = in.n_mark + 1;
    in.n_len = n_len;
    for (int k = 0; k < n_len; ++k) {
        const SfgNode& node = sfg.nodes[static_cast<std::size_t>(k)];
        if (node.kind == SfgNodeKind::Variable)
            push(vocab.id_of(node.name));
        else
            push(vocab.id_of(ctrl_type_name(node.ctrl_type)));
    }
    in.t_mark = push(Vocabulary::kT);
    in.t_start = in.t_mark + 1;
    in.t_len = t_len;
    for (VarType t : all_var_types())
        push(vocab.id_of(var_type_name(t)));
    for (int k = 0; k < kCtrlTypeCount; ++k)
        push(vocab.id_of(ctrl_type_name(static_cast<CtrlType>(k))));
    in.r_mark = push(Vocabulary::kR);
    in.r_start = in.r_mark + 1;
    in.r_len = r_len;
    for (int k = 0; k < kRoleCount; ++k)
        push(vocab.id_of(role_name(static_cast<Role>(k))));
    in.sep2_pos = push(Vocabulary::kSep);

    // e1: node <-> source token alignment. Variable nodes align with their
    // occurrence token, control nodes with the construct's first token.
    for (int k = 0; k < n_len; ++k) {
        const SfgNode& node = sfg.nodes[static_cast<std::size_t>(k)];
        std::size_t offset = node.kind == SfgNodeKind::Variable
                                 ? node.span.offset
                                 : node.owner_stmt->span.offset;
        int s_idx = token_index_at(s_toks, offset);
        if (s_idx >= 0)
            in.e1.push_back({in.s_start + s_idx, in.n_start + k});
    }
    // e2: one pair per distinct graph edge within the kept nodes
    std::set<std::pair<int, int>> e2set;
    for (const SfgEdge& e : sfg.edges)
        if (e.from < n_len && e.to < n_len)
            e2set.insert({in.n_start + e.from, in.n_start + e.to});
    for (const auto& [a, b] : e2set)
        in.e2.push_back({a, b});
    // e3 / e4: type and role labels
    for (int k = 0; k < n_len; ++k) {
        const SfgNode& node = sfg.nodes[static_cast<std::size_t>(k)];
        int type_index = node.kind == SfgNodeKind::Variable
                             ? static_cast<int>(node.var_type)
                             : kVarTypeCount + static_cast<int>(node.ctrl_type);
        in.e3.push_back({in.n_start + k, in.t_start + type_index});
        if (node.kind == SfgNodeKind::Variable)
            in.e4.push_back({in.n_start + k, in.r_start + static_cast<int>(node.role)});
    }
    return in;
}

ModelInput build_text_input(const std::string& text, const Vocabulary& vocab, int max_len) {
    TokenStream ts;
    std::size_t offset = 0;
    for (const std::string& tok : tokenize_text(text)) {
        Token t;
        t.kind = TokenKind::Identifier;
        t.text = tok;
        t.offset = offset;
        offset += tok.size() + 1;
        ts.tokens.push_back(std::move(t));
    }
    Token eof;
    eof.kind = TokenKind::EndOfFile;
    ts.tokens.push_back(eof);

    const int t_len = kVarTypeCount + kCtrlTypeCount;
    const int skeleton = 7 + t_len + kRoleCount;
    if (skeleton + static_cast<int>(ts.tokens.size()) - 1 > max_len) {
        // free text is not "code": clip instead of failing
        ts.tokens.resize(static_cast<std::size_t>(max_len - skeleton));
        ts.tokens.push_back(eof);
    }
    SemanticFlowGraph empty;
    return build_input("", ts, empty, vocab, max_len);
}

AttentionMask build_attention_mask(const ModelInput& input) {
    AttentionMask mask;
    mask.n = input.length();
    mask.m.assign(static_cast<std::size_t>(mask.n) * mask.n, kNegInf);

    for (int i = 0; i < mask.n; ++i) {
        if (input.is_special(i)) {
            for (int j = 0; j < mask.n; ++j)
                mask.set(i, j, 0.0);
        }
    }
    // natural-language and code tokens attend to each other freely
    std::vector<int> ws;
    for (int i = 0; i < mask.n; ++i)
        if (input.in_w(i) || input.in_s(i))
            ws.push_back(i);
    for (int i : ws)
        for (int j : ws)
            mask.set(i, j, 0.0);
    for (const RelationPair& p : input.e1) {
        mask.set(p.i, p.j, 0.0);
        mask.set(p.j, p.i, 0.0);
    }
    for (const RelationPair& p : input.e2)
        mask.set(p.i, p.j, 0.0);
    for (const RelationPair& p : input.e3)
        mask.set(p.i, p.j, 0.0);
    for (const RelationPair& p : input.e4)
        mask.set(p.i, p.j, 0.0);
    return mask;
}

namespace {

std::vector<RelationPair> sample_hidden(const std::vector<RelationPair>& all, std::mt19937_64& rng) {
    if (all.empty())
        return {};
    std::size_t k = static_cast<std::size_t>(
        std::max<long long>(1, std::llround(0.2 * static_cast<double>(all.size()))));
    std::vector<std::size_t> idx(all.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<RelationPair> out;
    for (std::size_t i = 0; i < k; ++i)
        out.push_back(all[idx[i]]);
    std::sort(out.begin(), out.end(),
              [](const RelationPair& a, const RelationPair& b) {
                  return a.i != b.i ? a.i < b.i : a.j < b.j;
              });
    return out;
}

// One uniformly random false pair per hidden pair, from the same product
// space, disjoint from the true set and from previous picks.
std::vector<RelationPair> sample_negatives(std::size_t count, int i_begin, int i_len, int j_begin,
                                           int j_len, const std::vector<RelationPair>& truth,
                                           std::mt19937_64& rng) {
    std::set<std::pair<int, int>> avoid;
    for (const RelationPair& p : truth)
        avoid.insert({p.i, p.j});
    std::vector<RelationPair> out;
    if (i_len <= 0 || j_len <= 0)
        return out;
    std::uniform_int_distribution<int> di(0, i_len - 1);
    std::uniform_int_distribution<int> dj(0, j_len - 1);
    for (std::size_t k = 0; k < count; ++k) {
        for (int attempt = 0; attempt < 200; ++attempt) {
            RelationPair p{i_begin + di(rng), j_begin + dj(rng)};
            if (avoid.insert({p.i, p.j}).second) {
                out.push_back(p);
                break;
            }
        }
    }
    return out;
}

} // namespace

PretrainMasks sample_pretrain_masks(const ModelInput& input, std::uint64_t seed,
                                    const Vocabulary& vocab) {
    std::mt19937_64 rng(seed);
    PretrainMasks out;

    // MLM over the source-code segment only
    std::size_t k = static_cast<std::size_t>(std::llround(0.15 * input.s_len));
    std::vector<int> positions(static_cast<std::size_t>(input.s_len));
    for (int i = 0; i < input.s_len; ++i)
        positions[static_cast<std::size_t>(i)] = input.s_start + i;
    std::shuffle(positions.begin(), positions.end(), rng);
    positions.resize(k);
    std::sort(positions.begin(), positions.end());
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::uniform_int_distribution<int> randTok(Vocabulary::kSpecialCount, vocab.size() - 1);
    for (int pos : positions) {
        MlmSlot slot;
        slot.pos = pos;
        slot.original = input.tokens[static_cast<std::size_t>(pos)];
        double u = uni(rng);
        if (u < 0.8) {
            slot.action = MlmSlot::Mask;
            slot.replacement = Vocabulary::kMask;
        } else if (u < 0.9) {
            slot.action = MlmSlot::Random;
            slot.replacement = randTok(rng);
        } else {
            slot.action = MlmSlot::Keep;
            slot.replacement = slot.original;
        }
        out.mlm.push_back(slot);
    }

    out.hidden_e1 = sample_hidden(input.e1, rng);
    out.hidden_e2 = sample_hidden(input.e2, rng);
    out.hidden_e3 = sample_hidden(input.e3, rng);
    out.hidden_e4 = sample_hidden(input.e4, rng);

    out.neg_e1 = sample_negatives(out.hidden_e1.size(), input.s_start, input.s_len, input.n_start,
                                  input.n_len, input.e1, rng);
    out.neg_e2 = sample_negatives(out.hidden_e2.size(), input.n_start, input.n_len, input.n_start,
                                  input.n_len, input.e2, rng);
    out.neg_e3 = sample_negatives(out.hidden_e3.size(), input.n_start, input.n_len, input.t_start,
                                  input.t_len, input.e3, rng);
    out.neg_e4 = sample_negatives(out.hidden_e4.size(), input.n_start, input.n_len, input.r_start,
                                  input.r_len, input.e4, rng);
    return out;
}

std::vector<int> apply_mlm(const ModelInput& input, const PretrainMasks& masks) {
    std::vector<int> toks = input.tokens;
    for (const MlmSlot& slot : masks.mlm)
        toks[static_cast<std::size_t>(slot.pos)] = slot.replacement;
    return toks;
}

AttentionMask build_masked_attention(const ModelInput& input, const PretrainMasks& masks) {
    AttentionMask mask = build_attention_mask(input);
    for (const RelationPair& p : masks.hidden_e1) {
        mask.set(p.i, p.j, kNegInf);
        mask.set(p.j, p.i, kNegInf);
    }
    for (const RelationPair& p : masks.hidden_e2)
        mask.set(p.i, p.j, kNegInf);
    for (const RelationPair& p : masks.hidden_e3)
        mask.set(p.i, p.j, kNegInf);
    for (const RelationPair& p : masks.hidden_e4)
        mask.set(p.i, p.j, kNegInf);
    return mask;
}

} // namespace sfgloc
