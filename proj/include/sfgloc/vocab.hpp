#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace sfgloc {

// Token vocabulary. The first entries are fixed: special markers, the full
// type vocabulary (variable types then control types), and the full role
// vocabulary. Corpus tokens follow in sorted order so ids are reproducible.
class Vocabulary {
public:
    Vocabulary();

    static constexpr int kPad = 0;
    static constexpr int kUnk = 1;
    static constexpr int kCls = 2;
    static constexpr int kSep = 3;
    static constexpr int kC = 4;
    static constexpr int kN = 5;
    static constexpr int kT = 6;
    static constexpr int kR = 7;
    static constexpr int kMask = 8;
    static constexpr int kAdd = 9;
    static constexpr int kRem = 10;
    static constexpr int kCtx = 11;
    static constexpr int kSpecialCount = 12;

    int id_of(const std::string& text) const; // kUnk when absent
    int add(const std::string& text);         // idempotent
    const std::string& text_of(int id) const;
    int size() const { return static_cast<int>(texts_.size()); }

    // first id of the fixed type / role blocks
    int type_base() const { return kSpecialCount; }
    int role_base() const;

    std::vector<std::string> to_lines() const { return texts_; }
    static Vocabulary from_lines(const std::vector<std::string>& lines);

private:
    std::vector<std::string> texts_;
    std::unordered_map<std::string, int> ids_;
};

// Splits free text (comments, bug reports, encoded changesets) into tokens:
// identifier/number runs, single punctuation characters, and bracketed
// marker tokens like [ADD] kept whole.
std::vector<std::string> tokenize_text(const std::string& text);

// Builds a vocabulary over a corpus of already-tokenized texts; corpus
// tokens are added in sorted order for reproducibility.
Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& corpus);

} // namespace sfgloc
