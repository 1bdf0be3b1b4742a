#include "sfgloc/vocab.hpp"

#include "sfgloc/errors.hpp"
#include "sfgloc/sfg.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace sfgloc {

Vocabulary::Vocabulary() {
    const char* specials[kSpecialCount] = {"[PAD]", "[UNK]", "[CLS]", "[SEP]", "[C]", "[N]",
                                           "[T]",   "[R]",   "[MASK]", "[ADD]", "[REM]", "[CTX]"};
    for (const char* s : specials)
        add(s);
    for (VarType t : all_var_types())
        add(var_type_name(t));
    for (int i = 0; i < kCtrlTypeCount; ++i)
        add(ctrl_type_name(static_cast<CtrlType>(i)));
    for (int i = 0; i < kRoleCount; ++i)
        add(role_name(static_cast<Role>(i)));
}

int Vocabulary::role_base() const {
    return kSpecialCount + kVarTypeCount + kCtrlTypeCount;
}

int Vocabulary::id_of(const std::string& text) const {
    auto it = ids_.find(text);
    return it != ids_.end() ? it->second : kUnk;
}

int Vocabulary::add(const std::string& text) {
    auto it = ids_.find(text);
    if (it != ids_.end())
        return it->second;
    int id = static_cast<int>(texts_.size());
    texts_.push_back(text);
    ids_[text] = id;
    return id;
}

const std::string& Vocabulary::text_of(int id) const {
    if (id < 0 || id >= size())
        throw InternalError("vocabulary id out of range: " + std::to_string(id));
    return texts_[static_cast<std::size_t>(id)];
}

Vocabulary Vocabulary::from_lines(const std::vector<std::string>& lines) {
    Vocabulary v;
    for (const std::string& line : lines)
        v.add(line);
    return v;
}

std::vector<std::string> tokenize_text(const std::string& text) {
    std::vector<std::string> out;
    std::size_t i = 0;
    auto word_char = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '[') {
            // bracketed marker tokens ([ADD] etc.) stay whole
            std::size_t j = i + 1;
            while (j < text.size() && std::isupper(static_cast<unsigned char>(text[j])))
                ++j;
            if (j > i + 1 && j < text.size() && text[j] == ']') {
                out.push_back(text.substr(i, j - i + 1));
                i = j + 1;
                continue;
            }
        }
        if (word_char(c)) {
            std::size_t j = i;
            while (j < text.size() && word_char(text[j]))
                ++j;
            out.push_back(text.substr(i, j - i));
            i = j;
            continue;
        }
        out.push_back(std::string(1, c));
        ++i;
    }
    return out;
}

Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& corpus) {
    std::set<std::string> seen;
    for (const auto& doc : corpus)
        for (const std::string& tok : doc)
            seen.insert(tok);
    Vocabulary v;
    for (const std::string& tok : seen)
        v.add(tok);
    return v;
}

} // namespace sfgloc
