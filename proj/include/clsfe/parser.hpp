#ifndef CLSFE_PARSER_HPP
#define CLSFE_PARSER_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "clsfe/inventory.hpp"
#include "clsfe/segmenter.hpp"

namespace clsfe {

enum class GraphemeClass {
    IndependentVowel, VowelSign, Consonant, Virama, Anusvara, Visarga,
    Candrabindu, Nukta, Avagraha, ZWJ, ZWNJ, Digit, Punct
};

struct GraphemeRule {
    std::vector<char32_t> key;
    GraphemeClass cls = GraphemeClass::Punct;
    std::vector<std::string> labels;
};

// Longest-match indexed rule table for one script.
class RuleSet {
public:
    static RuleSet load(ScriptTag script, const std::string& table_text,
                        const ClsInventory& inv);
    static RuleSet load_file(ScriptTag script, const std::string& path,
                             const ClsInventory& inv);

    // Longest rule matching text at pos, or nullptr.
    const GraphemeRule* match(const std::vector<char32_t>& text,
                              std::size_t pos) const;

    ScriptTag script() const { return script_; }
    std::size_t rule_count() const { return rules_.size(); }

private:
    ScriptTag script_ = ScriptTag::Neutral;
    std::map<std::vector<char32_t>, GraphemeRule> rules_;
    std::size_t max_key_len_ = 1;
};

// One orthographic syllable.
struct Akshara {
    enum class VowelKind { Inherent, Explicit, None };
    std::vector<std::string> onset;
    VowelKind vowel_kind = VowelKind::Inherent;
    std::vector<std::string> vowel_labels;     // when Explicit
    std::vector<std::string> modifier_labels;  // anusvara/visarga/candrabindu
    bool explicit_virama = false;
};

enum class SchwaPolicy { DeleteFinalSchwa, Retain };

// Per-language schwa policy; languages not listed use Retain.
class SchwaConfig {
public:
    SchwaConfig();
    SchwaPolicy policy_for(const std::string& lang) const;
    void set(const std::string& lang, SchwaPolicy p) { overrides_[lang] = p; }

private:
    std::map<std::string, SchwaPolicy> overrides_;
};

struct LabelSequence {
    std::string utterance_id;
    std::vector<std::string> tokens;  // CLS labels and "#" word boundaries

    std::string to_line() const;  // "utt_id\tlab lab # lab"
};

inline constexpr const char* kWordBoundary = "#";

std::vector<Akshara> tokenize_aksharas(const std::vector<char32_t>& text,
                                       const RuleSet& rules);

enum class AksharaPosition { WordFinal, NonFinal };

std::vector<std::string> akshara_to_phones(const Akshara& a, SchwaPolicy policy,
                                           AksharaPosition position);

struct ParserTables {
    std::map<ScriptTag, RuleSet> scripts;
    std::map<std::string, std::vector<std::string>> lexicon;       // word -> labels
    std::map<std::string, std::vector<std::string>> letter_rules;  // letters -> labels
    std::size_t max_letter_key = 1;

    void load_lexicon(const std::string& text, const ClsInventory& inv);
    void load_letter_rules(const std::string& text, const ClsInventory& inv);
};

LabelSequence parse_segment(const TextSegment& seg, const ParserTables& tables,
                            const SchwaConfig& schwa);

LabelSequence parse_latin(const TextSegment& seg, const ParserTables& tables);

LabelSequence parse_mixed(std::string_view utf8_text,
                          const std::string& primary_language,
                          const ParserTables& tables, const SchwaConfig& schwa,
                          const SegmenterConfig& seg_config);

// Normalizes boundaries: collapses runs of '#', trims at both ends.
void normalize_boundaries(std::vector<std::string>& tokens);

// Label file line: `utt_id<TAB>label label # label`.
LabelSequence parse_label_line(const std::string& line);

}  // namespace clsfe

#endif  // CLSFE_PARSER_HPP
