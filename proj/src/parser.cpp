#include "clsfe/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace clsfe {
namespace {

std::optional<GraphemeClass> class_from_name(const std::string& name) {
    static const std::map<std::string, GraphemeClass> kNames = {
        {"IndependentVowel", GraphemeClass::IndependentVowel},
        {"VowelSign", GraphemeClass::VowelSign},
        {"Consonant", GraphemeClass::Consonant},
        {"Virama", GraphemeClass::Virama},
        {"Anusvara", GraphemeClass::Anusvara},
        {"Visarga", GraphemeClass::Visarga},
        {"Candrabindu", GraphemeClass::Candrabindu},
        {"Nukta", GraphemeClass::Nukta},
        {"Avagraha", GraphemeClass::Avagraha},
        {"ZWJ", GraphemeClass::ZWJ},
        {"ZWNJ", GraphemeClass::ZWNJ},
        {"Digit", GraphemeClass::Digit},
        {"Punct", GraphemeClass::Punct}};
    auto it = kNames.find(name);
    if (it == kNames.end()) return std::nullopt;
    return it->second;
}

std::vector<char32_t> parse_hex_key(const std::string& text, std::size_t line) {
    std::vector<char32_t> key;
    for (const std::string& part : split(text, '+')) {
        if (part.empty())
            throw FrontendError("malformed key '" + text + "'", line);
        char32_t cp = 0;
        for (char c : part) {
            int v;
            if (c >= '0' && c <= '9') v = c - '0';
            else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
            else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
            else throw FrontendError("malformed key '" + text + "'", line);
            cp = cp * 16 + static_cast<char32_t>(v);
        }
        key.push_back(cp);
    }
    return key;
}

bool is_digit_cp(char32_t cp) {
    if (cp >= U'0' && cp <= U'9') return true;
    if (cp >= 0x0900 && cp <= 0x0D7F) {
        char32_t off = (cp - 0x0900) % 0x80;
        return off >= 0x66 && off <= 0x6F;
    }
    return false;
}

std::string cp_to_hex(char32_t cp) {
    std::ostringstream ss;
    ss << "U+" << std::hex << std::uppercase << static_cast<uint32_t>(cp);
    return ss.str();
}

}  // namespace

RuleSet RuleSet::load(ScriptTag script, const std::string& table_text,
                      const ClsInventory& inv) {
    RuleSet rs;
    rs.script_ = script;
    for (const auto& [lineno, line] : content_lines(table_text)) {
        std::vector<std::string> fields = split(line, '\t');
        if (fields.size() < 2 || fields.size() > 3)
            throw FrontendError("malformed rule row", lineno);
        GraphemeRule rule;
        rule.key = parse_hex_key(fields[0], lineno);
        std::optional<GraphemeClass> cls = class_from_name(fields[1]);
        if (!cls)
            throw FrontendError("unknown grapheme class '" + fields[1] + "'",
                                lineno);
        rule.cls = *cls;
        if (fields.size() == 3)
            rule.labels = split_ws(fields[2]);
        for (const std::string& label : rule.labels)
            if (!inv.has(label))
                throw FrontendError("rule references unknown label '" + label + "'",
                                    lineno);
        if (rs.rules_.count(rule.key))
            throw FrontendError("duplicate key '" + fields[0] + "'", lineno);
        rs.max_key_len_ = std::max(rs.max_key_len_, rule.key.size());
        rs.rules_.emplace(rule.key, std::move(rule));
    }
    if (rs.rules_.empty()) throw FrontendError("empty script table");
    return rs;
}

RuleSet RuleSet::load_file(ScriptTag script, const std::string& path,
                           const ClsInventory& inv) {
    return load(script, read_file(path), inv);
}

const GraphemeRule* RuleSet::match(const std::vector<char32_t>& text,
                                   std::size_t pos) const {
    std::size_t limit = std::min(max_key_len_, text.size() - pos);
    for (std::size_t len = limit; len >= 1; --len) {
        std::vector<char32_t> key(text.begin() + pos, text.begin() + pos + len);
        auto it = rules_.find(key);
        if (it != rules_.end()) return &it->second;
    }
    return nullptr;
}

SchwaConfig::SchwaConfig() {
    for (const char* lang : {"hi", "mr", "ne", "kok", "kok-north-canara"})
        overrides_[lang] = SchwaPolicy::DeleteFinalSchwa;
}

SchwaPolicy SchwaConfig::policy_for(const std::string& lang) const {
    auto it = overrides_.find(lang);
    return it == overrides_.end() ? SchwaPolicy::Retain : it->second;
}

std::vector<Akshara> tokenize_aksharas(const std::vector<char32_t>& text,
                                       const RuleSet& rules) {
    std::vector<Akshara> aksharas;
    std::optional<Akshara> cur;
    bool awaiting_consonant = false;  // just saw a virama

    auto finalize = [&]() {
        if (!cur) return;
        if (awaiting_consonant) {
            cur->vowel_kind = Akshara::VowelKind::None;
            cur->explicit_virama = true;
            awaiting_consonant = false;
        }
        aksharas.push_back(std::move(*cur));
        cur.reset();
    };

    std::size_t pos = 0;
    while (pos < text.size()) {
        const GraphemeRule* rule = rules.match(text, pos);
        if (!rule)
            throw FrontendError("uncovered codepoint " + cp_to_hex(text[pos]) +
                                " at offset " + std::to_string(pos));
        std::size_t key_len = rule->key.size();
        switch (rule->cls) {
            case GraphemeClass::Consonant:
                if (cur && awaiting_consonant) {
                    for (const std::string& l : rule->labels)
                        cur->onset.push_back(l);
                    awaiting_consonant = false;
                } else {
                    finalize();
                    cur = Akshara{};
                    cur->onset = rule->labels;
                }
                break;
            case GraphemeClass::IndependentVowel: {
                finalize();
                Akshara a;
                a.vowel_kind = Akshara::VowelKind::Explicit;
                a.vowel_labels = rule->labels;
                aksharas.push_back(std::move(a));
                break;
            }
            case GraphemeClass::VowelSign:
                if (!cur || cur->onset.empty() || awaiting_consonant ||
                    cur->vowel_kind != Akshara::VowelKind::Inherent)
                    throw FrontendError("vowel sign without preceding consonant at offset " +
                                        std::to_string(pos));
                cur->vowel_kind = Akshara::VowelKind::Explicit;
                cur->vowel_labels = rule->labels;
                break;
            case GraphemeClass::Virama:
                if (!cur || cur->onset.empty() || awaiting_consonant ||
                    cur->vowel_kind != Akshara::VowelKind::Inherent)
                    throw FrontendError("dangling virama at offset " +
                                        std::to_string(pos));
                awaiting_consonant = true;
                break;
            case GraphemeClass::Anusvara:
            case GraphemeClass::Visarga:
            case GraphemeClass::Candrabindu: {
                Akshara* target = cur ? &*cur
                                      : (aksharas.empty() ? nullptr : &aksharas.back());
                if (!target || awaiting_consonant)
                    throw FrontendError("modifier without base akshara at offset " +
                                        std::to_string(pos));
                for (const std::string& l : rule->labels)
                    target->modifier_labels.push_back(l);
                break;
            }
            case GraphemeClass::Nukta:
                // covered nukta combinations match as two-codepoint consonants
                throw FrontendError("nukta without supported base at offset " +
                                    std::to_string(pos));
            case GraphemeClass::Avagraha:
            case GraphemeClass::ZWJ:
            case GraphemeClass::ZWNJ:
            case GraphemeClass::Punct:
                break;  // no phonetic content
            case GraphemeClass::Digit:
                throw FrontendError("digit inside word at offset " +
                                    std::to_string(pos));
        }
        pos += key_len;
    }
    finalize();
    return aksharas;
}

std::vector<std::string> akshara_to_phones(const Akshara& a, SchwaPolicy policy,
                                           AksharaPosition position) {
    std::vector<std::string> out = a.onset;
    switch (a.vowel_kind) {
        case Akshara::VowelKind::Explicit:
            out.insert(out.end(), a.vowel_labels.begin(), a.vowel_labels.end());
            break;
        case Akshara::VowelKind::Inherent:
            if (!(position == AksharaPosition::WordFinal &&
                  policy == SchwaPolicy::DeleteFinalSchwa))
                out.push_back("a");
            break;
        case Akshara::VowelKind::None:
            break;
    }
    out.insert(out.end(), a.modifier_labels.begin(), a.modifier_labels.end());
    return out;
}

void ParserTables::load_lexicon(const std::string& text, const ClsInventory& inv) {
    lexicon.clear();
    for (const auto& [lineno, line] : content_lines(text)) {
        std::vector<std::string> fields = split(line, '\t');
        if (fields.size() != 2)
            throw FrontendError("malformed lexicon row", lineno);
        std::string word = ascii_lower(fields[0]);
        std::vector<std::string> labels = split_ws(fields[1]);
        if (labels.empty())
            throw FrontendError("lexicon entry '" + word + "' has no labels",
                                lineno);
        for (const std::string& l : labels)
            if (!inv.has(l))
                throw FrontendError("lexicon references unknown label '" + l + "'",
                                    lineno);
        lexicon[word] = std::move(labels);
    }
}

void ParserTables::load_letter_rules(const std::string& text,
                                     const ClsInventory& inv) {
    letter_rules.clear();
    max_letter_key = 1;
    for (const auto& [lineno, line] : content_lines(text)) {
        std::vector<std::string> fields = split(line, '\t');
        if (fields.size() != 2)
            throw FrontendError("malformed letter rule row", lineno);
        std::string key = ascii_lower(fields[0]);
        std::vector<std::string> labels = split_ws(fields[1]);
        for (const std::string& l : labels)
            if (!inv.has(l))
                throw FrontendError("letter rule references unknown label '" + l + "'",
                                    lineno);
        max_letter_key = std::max(max_letter_key, key.size());
        letter_rules[key] = std::move(labels);
    }
    if (letter_rules.empty()) throw FrontendError("empty letter rule table");
}

void normalize_boundaries(std::vector<std::string>& tokens) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (std::string& t : tokens) {
        if (t == kWordBoundary) {
            if (out.empty() || out.back() == kWordBoundary) continue;
        }
        out.push_back(std::move(t));
    }
    while (!out.empty() && out.back() == kWordBoundary) out.pop_back();
    tokens = std::move(out);
}

namespace {

// Emits one Brahmic word: akshara phones with word-final schwa handling.
void emit_word(const std::vector<char32_t>& word, const RuleSet& rules,
               SchwaPolicy policy, std::vector<std::string>& tokens) {
    std::vector<Akshara> aksharas = tokenize_aksharas(word, rules);
    for (std::size_t i = 0; i < aksharas.size(); ++i) {
        AksharaPosition pos = (i + 1 == aksharas.size())
                                  ? AksharaPosition::WordFinal
                                  : AksharaPosition::NonFinal;
        std::vector<std::string> phones =
            akshara_to_phones(aksharas[i], policy, pos);
        tokens.insert(tokens.end(), phones.begin(), phones.end());
    }
}

}  // namespace

LabelSequence parse_segment(const TextSegment& seg, const ParserTables& tables,
                            const SchwaConfig& schwa) {
    if (seg.script == ScriptTag::Latin)
        throw FrontendError("parse_segment received a Latin segment");
    auto rs_it = tables.scripts.find(seg.script);
    if (rs_it == tables.scripts.end())
        throw FrontendError("no script table loaded for " + to_string(seg.script));
    const RuleSet& rules = rs_it->second;
    SchwaPolicy policy = schwa.policy_for(seg.language);

    LabelSequence out;
    std::vector<char32_t> word;
    auto flush_word = [&]() {
        if (word.empty()) return;
        emit_word(word, rules, policy, out.tokens);
        word.clear();
    };

    for (std::size_t i = 0; i < seg.text.size(); ++i) {
        char32_t cp = seg.text[i];
        if (is_digit_cp(cp)) {
            flush_word();
            const GraphemeRule* rule = rules.match(seg.text, i);
            if (!rule || rule->cls != GraphemeClass::Digit)
                throw FrontendError("uncovered digit " + cp_to_hex(cp) +
                                    " at offset " + std::to_string(i));
            out.tokens.push_back(kWordBoundary);
            out.tokens.insert(out.tokens.end(), rule->labels.begin(),
                              rule->labels.end());
            out.tokens.push_back(kWordBoundary);
            continue;
        }
        if (cp == 0x200C || cp == 0x200D) continue;  // joiners: rendering only
        if (script_of(cp) == ScriptTag::Neutral) {
            flush_word();
            out.tokens.push_back(kWordBoundary);
            continue;
        }
        word.push_back(cp);
    }
    flush_word();
    normalize_boundaries(out.tokens);
    if (out.tokens.empty()) throw FrontendError("empty segment");
    return out;
}

LabelSequence parse_latin(const TextSegment& seg, const ParserTables& tables) {
    if (seg.script != ScriptTag::Latin)
        throw FrontendError("parse_latin requires a Latin segment");

    LabelSequence out;
    std::vector<std::string> words;
    std::string cur;
    for (char32_t cp : seg.text) {
        bool wordish = (cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z') ||
                       (cp >= U'0' && cp <= U'9') || cp == U'\'';
        if (wordish) {
            cur += static_cast<char>(cp);
        } else if (!cur.empty()) {
            words.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) words.push_back(std::move(cur));

    for (const std::string& raw : words) {
        std::string word = ascii_lower(raw);
        // strip apostrophes; they carry no segmental content here
        word.erase(std::remove(word.begin(), word.end(), '\''), word.end());
        if (word.empty()) continue;

        bool all_alpha = std::all_of(word.begin(), word.end(), [](char c) {
            return c >= 'a' && c <= 'z';
        });
        bool all_digit = std::all_of(word.begin(), word.end(), [](char c) {
            return c >= '0' && c <= '9';
        });

        out.tokens.push_back(kWordBoundary);
        if (all_digit) {
            for (char c : word) {
                auto it = tables.lexicon.find(std::string(1, c));
                if (it == tables.lexicon.end())
                    throw FrontendError(std::string("no lexicon entry for digit '") +
                                        c + "'");
                out.tokens.push_back(kWordBoundary);
                out.tokens.insert(out.tokens.end(), it->second.begin(),
                                  it->second.end());
            }
            continue;
        }
        if (!all_alpha)
            throw FrontendError("word '" + raw +
                                "' contains non-alphabetic characters");

        auto it = tables.lexicon.find(word);
        if (it != tables.lexicon.end()) {
            out.tokens.insert(out.tokens.end(), it->second.begin(),
                              it->second.end());
            continue;
        }
        // letter-to-sound fallback, longest key first
        std::size_t pos = 0;
        while (pos < word.size()) {
            std::size_t limit = std::min(tables.max_letter_key, word.size() - pos);
            const std::vector<std::string>* labels = nullptr;
            std::size_t used = 0;
            for (std::size_t len = limit; len >= 1; --len) {
                auto rit = tables.letter_rules.find(word.substr(pos, len));
                if (rit != tables.letter_rules.end()) {
                    labels = &rit->second;
                    used = len;
                    break;
                }
            }
            if (!labels)
                throw FrontendError("no letter rule for '" +
                                    word.substr(pos, 1) + "' in word '" + raw + "'");
            out.tokens.insert(out.tokens.end(), labels->begin(), labels->end());
            pos += used;
        }
    }
    normalize_boundaries(out.tokens);
    if (out.tokens.empty()) throw FrontendError("empty segment");
    return out;
}

LabelSequence parse_mixed(std::string_view utf8_text,
                          const std::string& primary_language,
                          const ParserTables& tables, const SchwaConfig& schwa,
                          const SegmenterConfig& seg_config) {
    std::vector<TextSegment> segments =
        segment(utf8_text, primary_language, seg_config);
    LabelSequence out;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        LabelSequence part;
        try {
            part = (segments[i].script == ScriptTag::Latin)
                       ? parse_latin(segments[i], tables)
                       : parse_segment(segments[i], tables, schwa);
        } catch (const FrontendError& e) {
            throw FrontendError("segment " + std::to_string(i) + ": " + e.what());
        }
        if (!out.tokens.empty()) out.tokens.push_back(kWordBoundary);
        out.tokens.insert(out.tokens.end(), part.tokens.begin(),
                          part.tokens.end());
    }
    normalize_boundaries(out.tokens);
    return out;
}

std::string LabelSequence::to_line() const {
    std::ostringstream ss;
    ss << utterance_id << '\t';
    for (std::size_t i = 0; i < tokens.size(); ++i)
        ss << (i ? " " : "") << tokens[i];
    return ss.str();
}

LabelSequence parse_label_line(const std::string& line) {
    std::vector<std::string> fields = split(line, '\t');
    if (fields.size() != 2)
        throw FrontendError("malformed label line");
    LabelSequence seq;
    seq.utterance_id = fields[0];
    seq.tokens = split_ws(fields[1]);
    if (seq.tokens.empty())
        throw FrontendError("empty label sequence for utterance '" +
                            seq.utterance_id + "'");
    if (seq.tokens.front() == kWordBoundary || seq.tokens.back() == kWordBoundary)
        throw FrontendError("label sequence may not start or end with '#'");
    for (std::size_t i = 1; i < seq.tokens.size(); ++i)
        if (seq.tokens[i] == kWordBoundary && seq.tokens[i - 1] == kWordBoundary)
            throw FrontendError("consecutive '#' in label sequence");
    return seq;
}

}  // namespace clsfe
